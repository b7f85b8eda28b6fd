//! Reliability splitting and the counter-based buffer update that makes any
//! scheduler meet an end-to-end reliability demand.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{
    move_packet, BufferState, BufferUpdatePolicy, LinkQualityMatrix, Network, NodeId, RoutingTable,
    ScheduleFrame,
};
use crate::routing::with_buffer_loads;
use crate::scheduling::{run_scheduler, SchedulerKind};

/// Required end-to-end reliability `ρ̲`, with `0 ≤ ρ̲ < 1`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct ReliabilityBound(f64);

impl ReliabilityBound {
    pub fn new(rho: f64) -> Result<Self> {
        if rho.is_nan() || !(0.0..=1.0).contains(&rho) {
            return Err(Error::Domain(format!(
                "reliability bound {rho} outside [0, 1)"
            )));
        }
        if rho == 1.0 {
            return Err(Error::InfeasibleDemand(rho));
        }
        Ok(ReliabilityBound(rho))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn ln(self) -> f64 {
        self.0.ln()
    }
}

impl TryFrom<f64> for ReliabilityBound {
    type Error = Error;

    fn try_from(rho: f64) -> Result<Self> {
        ReliabilityBound::new(rho)
    }
}

impl From<ReliabilityBound> for f64 {
    fn from(b: ReliabilityBound) -> f64 {
        b.0
    }
}

/// Smallest `n ≥ 1` with `(1-q)^n ≤ miss`, given `ln(miss)`.
fn attempts_for_miss(q: f64, ln_miss: f64) -> Result<u32> {
    if q >= 1.0 || ln_miss >= 0.0 {
        return Ok(1);
    }
    let ln_fail = (-q).ln_1p();
    let ratio = (ln_miss / ln_fail).ceil();
    if !ratio.is_finite() || ratio > u32::MAX as f64 {
        return Err(Error::InfeasibleDemand(-ln_miss.exp_m1()));
    }
    let mut n = (ratio as u32).max(1);
    // only ever rounds up, which keeps the bound on the safe side
    if (n as f64) * ln_fail > ln_miss {
        n += 1;
    }
    Ok(n)
}

/// Fewest attempts on a link of quality `q` that deliver with probability at
/// least `rho_i`.
pub fn required_attempts(q: f64, rho_i: f64) -> Result<u32> {
    if q.is_nan() || !(0.0..=1.0).contains(&q) {
        return Err(Error::Domain(format!("link quality {q} outside [0, 1]")));
    }
    if q == 0.0 {
        return Err(Error::InfeasibleLink(None));
    }
    if rho_i.is_nan() || !(0.0..=1.0).contains(&rho_i) {
        return Err(Error::Domain(format!(
            "per-hop reliability {rho_i} outside [0, 1)"
        )));
    }
    if rho_i == 1.0 {
        return Err(Error::InfeasibleDemand(rho_i));
    }
    attempts_for_miss(q, (-rho_i).ln_1p())
}

/// Per-hop share `ρ̲^(1/(l·k))` of an end-to-end demand spread over `l` links
/// each carrying `k` packets.
pub fn split_reliability(rho: f64, links: u32, packets: u32) -> Result<f64> {
    if links == 0 || packets == 0 {
        return Err(Error::Domain("links and packets must be positive".into()));
    }
    let rho = ReliabilityBound::new(rho)?;
    Ok((rho.ln() / (links as f64 * packets as f64)).exp())
}

/// Attempts per transceiver (`tau`) and the attempts left for the packet at
/// the head of each buffer (`counters`). Both are indexed by node id; sink
/// entries are unused.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepetitionVector {
    tau: Vec<u32>,
    counters: Vec<u32>,
}

impl RepetitionVector {
    pub fn from_tau(tau: Vec<u32>) -> Result<Self> {
        if tau.contains(&0) {
            return Err(Error::Domain(
                "every transceiver needs at least one attempt".into(),
            ));
        }
        Ok(RepetitionVector {
            counters: tau.clone(),
            tau,
        })
    }

    pub fn tau(&self, t: NodeId) -> u32 {
        self.tau[t.0]
    }

    pub fn taus(&self) -> &[u32] {
        &self.tau
    }

    pub fn counter(&self, t: NodeId) -> u32 {
        self.counters[t.0]
    }

    pub fn max_tau(&self) -> u32 {
        self.tau.iter().copied().max().unwrap_or(1)
    }

    /// Restores every counter to its full budget.
    pub fn reset(&mut self) {
        self.counters.copy_from_slice(&self.tau);
    }
}

impl BufferUpdatePolicy for RepetitionVector {
    fn update_packet_buffers(
        &mut self,
        t: NodeId,
        routing: &RoutingTable,
        net: &Network,
        buffers: &mut BufferState,
    ) -> bool {
        if buffers.get(t) == 0 {
            return false;
        }
        let c = &mut self.counters[t.0];
        *c -= 1;
        if *c > 0 {
            return false;
        }
        *c = self.tau[t.0];
        move_packet(t, routing, net, buffers);
        true
    }

    fn max_attempts(&self) -> u32 {
        self.max_tau()
    }
}

/// One counted attempt by `t`: the packet moves on its last budgeted
/// attempt. Returns whether it moved.
pub fn update_packet_buffers(
    t: NodeId,
    net: &Network,
    routing: &RoutingTable,
    buffers: &mut BufferState,
    rv: &mut RepetitionVector,
) -> bool {
    rv.update_packet_buffers(t, routing, net, buffers)
}

/// Attempts per transceiver so that the product of all per-hop delivery
/// probabilities stays at or above `rho`. Uses the packet loads in `routing`.
pub fn repetition_vector(
    net: &Network,
    quality: &LinkQualityMatrix,
    routing: &RoutingTable,
    rho: ReliabilityBound,
) -> Result<RepetitionVector> {
    quality.check_dimensions(net)?;
    let n_t = net.transceivers().len() as f64;
    let ln_rho = rho.ln();
    let mut tau = vec![1u32; net.len()];
    for &t in net.transceivers() {
        let p = routing.parent(t).ok_or(Error::NoParent(t))?;
        let q = quality.get(t, p);
        if q <= 0.0 {
            return Err(Error::InfeasibleLink(Some(t)));
        }
        let k = routing.packet_load(t).max(1) as f64;
        let ln_rho_i = ln_rho / (n_t * k);
        let ln_miss = if ln_rho_i == f64::NEG_INFINITY {
            0.0
        } else {
            (-ln_rho_i.exp_m1()).ln()
        };
        tau[t.0] = attempts_for_miss(q, ln_miss)?;
    }
    RepetitionVector::from_tau(tau)
}

/// `Σ k_t·τ_t` over transceivers: the number of transmissions the frame
/// will contain.
pub fn total_attempts(rv: &RepetitionVector, loads: &[u32]) -> u64 {
    rv.tau
        .iter()
        .zip(loads)
        .map(|(&t, &k)| t as u64 * k as u64)
        .sum()
}

#[derive(Clone, Debug, PartialEq)]
pub struct SchedexPlan {
    pub frame: ScheduleFrame,
    pub repetitions: RepetitionVector,
    /// Routing with loads for one packet per transceiver.
    pub routing: RoutingTable,
}

/// Runs `kind` with the counter policy for one packet per transceiver and
/// returns the frame along with the repetition vector it was built from.
pub fn schedex_plan(
    kind: SchedulerKind,
    net: &Network,
    quality: &LinkQualityMatrix,
    routing: &RoutingTable,
    rho: ReliabilityBound,
) -> Result<SchedexPlan> {
    let b0 = BufferState::ones(net);
    let routing = with_buffer_loads(routing.clone(), net, &b0)?;
    let mut rv = repetition_vector(net, quality, &routing, rho)?;
    let frame = run_scheduler(kind, net, quality, &routing, &b0, &mut rv)?;
    rv.reset();
    Ok(SchedexPlan {
        frame,
        repetitions: rv,
        routing,
    })
}

pub fn schedex_schedule(
    kind: SchedulerKind,
    net: &Network,
    quality: &LinkQualityMatrix,
    routing: &RoutingTable,
    rho: ReliabilityBound,
) -> Result<ScheduleFrame> {
    schedex_plan(kind, net, quality, routing, rho).map(|p| p.frame)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channel::{generate_topology, ChannelParams, TopologyParams};
    use crate::model::{execute_frame_deterministic, validate_schedule, PlainPolicy, Point};
    use crate::routing::etx_route;

    fn rb(rho: f64) -> ReliabilityBound {
        ReliabilityBound::new(rho).unwrap()
    }

    /// smallest n with 1-(1-q)^n >= rho, by walking up from 1
    fn linear_search(q: f64, rho: f64) -> u32 {
        (1..)
            .find(|&n| 1.0 - (1.0 - q).powi(n as i32) >= rho)
            .unwrap()
    }

    /// sink 0 <- B 1 <- A 2, q = 0.9
    fn chain() -> (Network, LinkQualityMatrix, RoutingTable) {
        let net = Network::new(
            vec![
                Point::new(0.0, 0.0),
                Point::new(20.0, 0.0),
                Point::new(40.0, 0.0),
            ],
            &[NodeId(0)],
        )
        .unwrap();
        let q =
            LinkQualityMatrix::from_fn(&net, |t, p| if t.0.abs_diff(p.0) == 1 { 0.9 } else { 0.0 })
                .unwrap();
        let r = etx_route(&net, &q).unwrap();
        (net, q, r)
    }

    #[test]
    fn required_attempts_examples() {
        assert_eq!(required_attempts(0.9, 0.99).unwrap(), 2);
        assert_eq!(required_attempts(1.0, 0.999).unwrap(), 1);
        assert_eq!(required_attempts(0.67, 0.99999).unwrap(), 11);
        assert_eq!(required_attempts(0.3, 0.0).unwrap(), 1);
        assert!(matches!(
            required_attempts(0.0, 0.9),
            Err(Error::InfeasibleLink(None))
        ));
        assert!(matches!(
            required_attempts(0.5, 1.0),
            Err(Error::InfeasibleDemand(_))
        ));
        assert!(required_attempts(1.5, 0.5).is_err());
    }

    #[test]
    fn required_attempts_is_tight() {
        for qi in 1..=19 {
            let q = qi as f64 * 0.05;
            for rho in [0.9, 0.99, 0.999, 0.9999, 0.99999] {
                let n = required_attempts(q, rho).unwrap();
                let best = linear_search(q, rho);
                assert!(1.0 - (1.0 - q).powi(n as i32) >= rho);
                let ratio = (-rho).ln_1p() / (-q).ln_1p();
                if (ratio - ratio.round()).abs() < 1e-9 {
                    assert!(n == best || n == best + 1, "q={q} rho={rho}");
                } else {
                    assert_eq!(n, best, "q={q} rho={rho}");
                }
            }
        }
    }

    #[test]
    fn split_examples() {
        assert!((split_reliability(0.81, 1, 2).unwrap() - 0.9).abs() < 1e-15);
        assert_eq!(split_reliability(0.7, 1, 1).unwrap(), 0.7);
        let r = split_reliability(0.9, 2, 2).unwrap();
        assert!((r - 0.974004).abs() < 1e-6);
        assert!((r.powi(4) - 0.9).abs() < 1e-12);
        assert!(split_reliability(0.9, 0, 1).is_err());
    }

    #[test]
    fn bound_rejects_certainty() {
        assert!(matches!(
            ReliabilityBound::new(1.0),
            Err(Error::InfeasibleDemand(_))
        ));
        assert!(ReliabilityBound::new(-0.1).is_err());
        assert!(ReliabilityBound::new(f64::NAN).is_err());
        assert!(ReliabilityBound::new(0.0).is_ok());
    }

    #[test]
    fn chain_repetitions() {
        let (net, q, r) = chain();
        let rv = repetition_vector(&net, &q, &r, rb(0.9)).unwrap();
        assert_eq!(rv.tau(NodeId(2)), 2);
        assert_eq!(rv.tau(NodeId(1)), 2);
        assert_eq!(total_attempts(&rv, r.packet_loads()), 6);
    }

    #[test]
    fn chain_frame_counts_attempts() {
        let (net, q, r) = chain();
        for kind in SchedulerKind::ALL {
            let plan = schedex_plan(kind, &net, &q, &r, rb(0.9)).unwrap();
            assert_eq!(plan.frame.attempts_by(NodeId(2)), 2, "{kind}");
            assert_eq!(plan.frame.attempts_by(NodeId(1)), 4, "{kind}");
            assert!(validate_schedule(&plan.frame, &r, &q).unwrap().is_empty());
            let mut rv = plan.repetitions.clone();
            let left = execute_frame_deterministic(
                &plan.frame,
                &plan.routing,
                &net,
                &BufferState::ones(&net),
                &mut rv,
            )
            .unwrap();
            assert!(left.is_empty());
        }
    }

    #[test]
    fn counter_policy_steps() {
        let (net, _, r) = chain();
        let mut rv = RepetitionVector::from_tau(vec![1, 1, 3]).unwrap();
        let mut b = BufferState::from_sources(&net, &[NodeId(2)]).unwrap();
        assert!(!update_packet_buffers(NodeId(2), &net, &r, &mut b, &mut rv));
        assert_eq!(rv.counter(NodeId(2)), 2);
        assert_eq!(b.get(NodeId(2)), 1);
        assert!(!update_packet_buffers(NodeId(2), &net, &r, &mut b, &mut rv));
        assert!(update_packet_buffers(NodeId(2), &net, &r, &mut b, &mut rv));
        assert_eq!((b.get(NodeId(2)), b.get(NodeId(1))), (0, 1));
        assert_eq!(rv.counter(NodeId(2)), 3);
        // empty buffer: nothing changes
        assert!(!update_packet_buffers(NodeId(2), &net, &r, &mut b, &mut rv));
        assert_eq!(rv.counter(NodeId(2)), 3);
    }

    #[test]
    fn zero_demand_reduces_to_plain() {
        let cp = ChannelParams::default();
        let (net, q) = generate_topology(&TopologyParams::new(50, 4), &cp).unwrap();
        let r = etx_route(&net, &q).unwrap();
        let rv = repetition_vector(&net, &q, &r, rb(0.0)).unwrap();
        assert_eq!(rv.max_tau(), 1);
        for kind in SchedulerKind::ALL {
            let plain = run_scheduler(
                kind,
                &net,
                &q,
                &r,
                &BufferState::ones(&net),
                &mut PlainPolicy,
            )
            .unwrap();
            assert_eq!(
                schedex_schedule(kind, &net, &q, &r, rb(0.0)).unwrap(),
                plain
            );
        }
    }

    #[test]
    fn perfect_link_needs_one_attempt() {
        let net = Network::new(
            vec![Point::new(0.0, 0.0), Point::new(5.0, 0.0)],
            &[NodeId(0)],
        )
        .unwrap();
        let q = LinkQualityMatrix::from_fn(&net, |_, _| 1.0).unwrap();
        let r = etx_route(&net, &q).unwrap();
        let rv = repetition_vector(&net, &q, &r, rb(0.99999)).unwrap();
        assert_eq!(rv.tau(NodeId(1)), 1);
    }

    #[test]
    fn frames_account_for_every_attempt() {
        let cp = ChannelParams::default();
        let (net, q) = generate_topology(&TopologyParams::new(50, 8), &cp).unwrap();
        let r = etx_route(&net, &q).unwrap();
        let mut prev_tau: Option<Vec<u32>> = None;
        let mut prev_len = 0;
        for rho in [0.5, 0.9, 0.999, 0.99999] {
            let plan = schedex_plan(SchedulerKind::NodeBased, &net, &q, &r, rb(rho)).unwrap();
            let rv = &plan.repetitions;
            for &t in net.transceivers() {
                let k = plan.routing.packet_load(t);
                assert_eq!(plan.frame.attempts_by(t) as u64, (k * rv.tau(t)) as u64);
            }
            assert_eq!(
                plan.frame.transmission_count() as u64,
                total_attempts(rv, plan.routing.packet_loads())
            );
            if let Some(prev) = &prev_tau {
                assert!(prev.iter().zip(rv.taus()).all(|(a, b)| a <= b));
            }
            assert!(plan.frame.len() >= prev_len);
            prev_len = plan.frame.len();
            prev_tau = Some(rv.taus().to_vec());
        }
    }
}
