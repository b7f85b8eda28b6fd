//! Independent checks of delivery guarantees: the closed-form bound for a
//! repetition vector, and Monte-Carlo replay of a frame.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{BufferState, LinkQualityMatrix, Network, RoutingTable, ScheduleFrame};
use crate::routing::hop_depths;
use crate::schedex::RepetitionVector;

/// Two-sided 99% normal quantile.
pub const Z_99: f64 = 2.575_829_303_548_900_4;

/// Trials per independent PRNG stream.
const BATCH: u64 = 4096;

/// `ln Π_t (1-(1-q_t)^τ_t)^k_t`.
pub fn analytic_ln_bound(
    rv: &RepetitionVector,
    quality: &LinkQualityMatrix,
    routing: &RoutingTable,
    loads: &[u32],
) -> Result<f64> {
    if loads.len() != rv.taus().len() {
        return Err(Error::Dimension(format!(
            "{} packet loads for {} repetition entries",
            loads.len(),
            rv.taus().len()
        )));
    }
    let mut ln = 0.0;
    for (i, &k) in loads.iter().enumerate() {
        if k == 0 {
            continue;
        }
        let t = crate::model::NodeId(i);
        let p = routing.parent(t).ok_or(Error::NoParent(t))?;
        let q = quality.get(t, p);
        let miss = (rv.tau(t) as f64 * (-q).ln_1p()).exp();
        ln += k as f64 * (-miss).ln_1p();
    }
    Ok(ln)
}

/// Guaranteed end-to-end reliability of a frame built from `rv`.
pub fn analytic_bound(
    rv: &RepetitionVector,
    quality: &LinkQualityMatrix,
    routing: &RoutingTable,
    loads: &[u32],
) -> Result<f64> {
    analytic_ln_bound(rv, quality, routing, loads).map(f64::exp)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SimulationResult {
    pub trials: u64,
    pub successes: u64,
    pub rate: f64,
    /// Wilson score interval at 99%.
    pub ci_low: f64,
    pub ci_high: f64,
}

impl SimulationResult {
    fn new(trials: u64, successes: u64) -> Self {
        let (ci_low, ci_high) = wilson_interval(successes, trials, Z_99);
        SimulationResult {
            trials,
            successes,
            rate: successes as f64 / trials as f64,
            ci_low,
            ci_high,
        }
    }

    pub fn half_width(&self) -> f64 {
        (self.ci_high - self.ci_low) / 2.0
    }
}

pub fn wilson_interval(successes: u64, trials: u64, z: f64) -> (f64, f64) {
    let n = trials as f64;
    let p = successes as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = z * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    ((center - half).max(0.0), (center + half).min(1.0))
}

/// One attempt in replay order.
#[derive(Clone, Copy)]
struct Attempt {
    packet: u32,
    hop: u32,
    q: f64,
    /// No later attempt serves this (packet, hop).
    last: bool,
}

/// Replays `frame` `trials` times with independent Bernoulli(q) outcomes per
/// attempt. An attempt only counts while its packet still waits at that hop;
/// a trial succeeds when every packet of `b0` reaches a sink.
///
/// Transmissions without attribution are treated as idle.
pub fn simulate_frame(
    frame: &ScheduleFrame,
    routing: &RoutingTable,
    net: &Network,
    quality: &LinkQualityMatrix,
    b0: &BufferState,
    trials: u64,
    seed: u64,
) -> Result<SimulationResult> {
    if trials == 0 {
        return Err(Error::Domain("simulation needs at least one trial".into()));
    }
    quality.check_dimensions(net)?;
    let depth = hop_depths(routing, net)?;
    let mut index = HashMap::new();
    let mut route_len = Vec::new();
    for (s, count) in b0.nonempty() {
        for seq in 0..count {
            index.insert((s, seq), route_len.len() as u32);
            route_len.push(depth[s.0]);
        }
    }
    let mut attempts = Vec::with_capacity(frame.transmission_count());
    for (_, tx) in frame.transmissions() {
        let Some(a) = tx.attribution else { continue };
        let Some(&packet) = index.get(&a.packet()) else {
            return Err(Error::Domain(format!(
                "transmission for packet {}#{} outside the initial buffers",
                a.source, a.seq
            )));
        };
        attempts.push(Attempt {
            packet,
            hop: a.hop,
            q: quality.get(tx.transmitter, tx.receiver),
            last: false,
        });
    }
    let mut seen = std::collections::HashSet::new();
    for a in attempts.iter_mut().rev() {
        a.last = seen.insert((a.packet, a.hop));
    }

    let batches = trials.div_ceil(BATCH);
    let successes: u64 = (0..batches)
        .into_par_iter()
        .map(|b| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(b);
            let n = BATCH.min(trials - b * BATCH);
            let mut pos = vec![0u32; route_len.len()];
            let mut ok = 0u64;
            for _ in 0..n {
                pos.fill(0);
                if run_trial(&attempts, &mut pos, &mut rng)
                    && pos.iter().zip(&route_len).all(|(p, l)| p >= l)
                {
                    ok += 1;
                }
            }
            ok
        })
        .sum();
    Ok(SimulationResult::new(trials, successes))
}

/// Returns false as soon as some packet has used up its last attempt.
fn run_trial(attempts: &[Attempt], pos: &mut [u32], rng: &mut ChaCha8Rng) -> bool {
    for a in attempts {
        let p = &mut pos[a.packet as usize];
        if *p != a.hop {
            continue;
        }
        if a.q >= 1.0 || rng.gen::<f64>() < a.q {
            *p += 1;
        } else if a.last {
            return false;
        }
    }
    true
}
