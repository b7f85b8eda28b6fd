use std::collections::VecDeque;
use std::f64::consts::{PI, SQRT_2};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::channel::{ChannelModel, ChannelParams};
use crate::error::{Error, Result};
use crate::model::{LinkQualityMatrix, Network, NodeId, Point, INTERFERENCE_PRR};

/// Draws tried before giving up on a connected topology.
pub const MAX_TOPOLOGY_DRAWS: u32 = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TopologyParams {
    /// Number of transceivers (the sink is extra).
    pub n: usize,
    /// Inner/outer split ratio.
    pub lambda: f64,
    pub radius: f64,
    pub inner_radius: f64,
    pub seed: u64,
}

impl TopologyParams {
    pub fn new(n: usize, seed: u64) -> Self {
        TopologyParams {
            n,
            lambda: 0.5,
            radius: 100.0,
            inner_radius: 100.0 / SQRT_2,
            seed,
        }
    }

    /// Same shape in a disk of the given radius (inner radius scaled along).
    pub fn with_radius(self, radius: f64) -> Self {
        TopologyParams {
            radius,
            inner_radius: radius / SQRT_2,
            ..self
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::Domain(format!(
                "need at least 2 nodes, got {}",
                self.n
            )));
        }
        if !(0.0..=1.0).contains(&self.lambda) {
            return Err(Error::Domain(format!(
                "lambda {} outside [0, 1]",
                self.lambda
            )));
        }
        if !(self.radius > 0.0 && self.inner_radius > 0.0 && self.inner_radius <= self.radius) {
            return Err(Error::Domain(format!(
                "radii must satisfy 0 < inner ({}) <= outer ({})",
                self.inner_radius, self.radius
            )));
        }
        Ok(())
    }
}

/// `floor(n * lambda / (lambda + 1))`.
pub fn inner_node_count(n: usize, lambda: f64) -> usize {
    (n as f64 * lambda / (lambda + 1.0)).floor() as usize
}

/// One sink at the origin (id 0) and `n` transceivers (ids `1..=n`): the
/// first [`inner_node_count`] uniform in the inner disk, the rest uniform in
/// the outer annulus. Draw `k` uses ChaCha8 seeded with `seed` on stream
/// `k`, sampling angle then radius per node. Draws are repeated until every
/// transceiver reaches the sink over links within transmission range.
pub fn generate_topology(
    tp: &TopologyParams,
    cp: &ChannelParams,
) -> Result<(Network, LinkQualityMatrix)> {
    tp.validate()?;
    let model = ChannelModel::new(*cp)?;
    for draw in 0..MAX_TOPOLOGY_DRAWS {
        let mut rng = ChaCha8Rng::seed_from_u64(tp.seed);
        rng.set_stream(draw as u64);
        let net = sample_network(tp, &mut rng)?;
        let q = model.quality_matrix(&net)?;
        if all_reach_sink(&net, &q) {
            return Ok((net, q));
        }
    }
    Err(Error::Generation {
        seed: tp.seed,
        attempts: MAX_TOPOLOGY_DRAWS,
    })
}

fn sample_network(tp: &TopologyParams, rng: &mut ChaCha8Rng) -> Result<Network> {
    let inner = inner_node_count(tp.n, tp.lambda);
    let mut positions = Vec::with_capacity(tp.n + 1);
    positions.push(Point::new(0.0, 0.0));
    for i in 0..tp.n {
        let angle = rng.gen::<f64>() * 2.0 * PI;
        let u = rng.gen::<f64>();
        // inverse-CDF of the radius of a uniform point in an annulus
        let (r0, r1) = if i < inner {
            (0.0, tp.inner_radius)
        } else {
            (tp.inner_radius, tp.radius)
        };
        let r = (r0 * r0 + u * (r1 * r1 - r0 * r0)).sqrt();
        positions.push(Point::new(r * angle.cos(), r * angle.sin()));
    }
    Network::new(positions, &[NodeId(0)])
}

fn all_reach_sink(net: &Network, q: &LinkQualityMatrix) -> bool {
    let mut reached = vec![false; net.len()];
    let mut queue: VecDeque<NodeId> = net.sinks().iter().copied().collect();
    for &s in net.sinks() {
        reached[s.0] = true;
    }
    while let Some(p) = queue.pop_front() {
        for &t in net.transceivers() {
            if !reached[t.0] && q.get(t, p) > INTERFERENCE_PRR {
                reached[t.0] = true;
                queue.push_back(t);
            }
        }
    }
    reached.iter().all(|&r| r)
}
