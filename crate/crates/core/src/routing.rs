//! Single-path routing over the expected transmission count (ETX) metric.

use crate::error::{Error, Result};
use crate::model::{
    BufferState, LinkQualityMatrix, Network, NodeId, RoutingTable, INTERFERENCE_PRR,
};

/// ETX weights `1 / q_tp` over routable links (`q > 1e-5`).
#[derive(Clone, Debug)]
pub struct EtxGraph {
    /// Incoming routable edges per receiver: `(transmitter, weight)`.
    incoming: Vec<Vec<(NodeId, f64)>>,
    outgoing: Vec<Vec<(NodeId, f64)>>,
}

impl EtxGraph {
    pub fn new(net: &Network, quality: &LinkQualityMatrix) -> Result<Self> {
        quality.check_dimensions(net)?;
        let mut incoming = vec![Vec::new(); net.len()];
        let mut outgoing = vec![Vec::new(); net.len()];
        for &t in net.transceivers() {
            for p in net.node_ids() {
                let q = quality.get(t, p);
                if q > INTERFERENCE_PRR {
                    incoming[p.0].push((t, 1.0 / q));
                    outgoing[t.0].push((p, 1.0 / q));
                }
            }
        }
        Ok(EtxGraph { incoming, outgoing })
    }

    pub fn weight(&self, t: NodeId, p: NodeId) -> Option<f64> {
        self.outgoing[t.0]
            .iter()
            .find(|(n, _)| *n == p)
            .map(|&(_, w)| w)
    }

    pub fn out_edges(&self, t: NodeId) -> &[(NodeId, f64)] {
        &self.outgoing[t.0]
    }

    /// Minimum total ETX from every node to its nearest sink (`inf` when
    /// unreachable). Dense Dijkstra; networks here have a few hundred nodes.
    pub fn costs_to_sink(&self, net: &Network) -> Vec<f64> {
        let n = net.len();
        let mut dist = vec![f64::INFINITY; n];
        let mut done = vec![false; n];
        for &s in net.sinks() {
            dist[s.0] = 0.0;
        }
        loop {
            let next = (0..n)
                .filter(|&i| !done[i] && dist[i].is_finite())
                .min_by(|&a, &b| dist[a].total_cmp(&dist[b]).then(a.cmp(&b)));
            let Some(p) = next else { break };
            done[p] = true;
            for &(t, w) in &self.incoming[p] {
                let cand = dist[p] + w;
                if cand < dist[t.0] {
                    dist[t.0] = cand;
                }
            }
        }
        dist
    }
}

/// Routes every transceiver along a minimum-ETX path to a sink. Equal-cost
/// parents are broken by the smaller node id. Packet loads assume one packet
/// per transceiver.
pub fn etx_route(net: &Network, quality: &LinkQualityMatrix) -> Result<RoutingTable> {
    let graph = EtxGraph::new(net, quality)?;
    let dist = graph.costs_to_sink(net);
    let mut parent = vec![None; net.len()];
    for &t in net.transceivers() {
        if !dist[t.0].is_finite() {
            return Err(Error::Unreachable(t));
        }
        let mut best: Option<(f64, NodeId)> = None;
        for &(p, w) in graph.out_edges(t) {
            let cost = dist[p.0] + w;
            let better = match best {
                None => true,
                Some((c, id)) => cost < c || (cost == c && p < id),
            };
            if better {
                best = Some((cost, p));
            }
        }
        parent[t.0] = best.map(|(_, p)| p);
    }
    let table = RoutingTable::new(parent);
    let loads = subtree_packet_counts(&table, net, net.transceivers())?;
    table.with_packet_loads(loads)
}

/// `k_t`: number of source packets whose route crosses `t` (its own
/// included). Indexed by node id; sinks get 0.
pub fn subtree_packet_counts(
    routing: &RoutingTable,
    net: &Network,
    sources: &[NodeId],
) -> Result<Vec<u32>> {
    let b0 = BufferState::from_sources(net, sources)?;
    packet_loads(routing, net, &b0)
}

/// As [`subtree_packet_counts`], weighting each source by its buffer count.
pub fn packet_loads(routing: &RoutingTable, net: &Network, b0: &BufferState) -> Result<Vec<u32>> {
    let mut k = vec![0u32; net.len()];
    for (s, count) in b0.nonempty() {
        let mut cur = s;
        let mut steps = 0;
        while !net.is_sink(cur) {
            k[cur.0] += count;
            cur = routing.parent(cur).ok_or(Error::Unreachable(cur))?;
            steps += 1;
            if steps > net.len() {
                return Err(Error::Cycle(s));
            }
        }
    }
    Ok(k)
}

/// Routing table with loads recomputed for the given initial buffers.
pub fn with_buffer_loads(
    routing: RoutingTable,
    net: &Network,
    b0: &BufferState,
) -> Result<RoutingTable> {
    let loads = packet_loads(&routing, net, b0)?;
    routing.with_packet_loads(loads)
}

/// Hop count from every node to its sink along the routing table.
pub fn hop_depths(routing: &RoutingTable, net: &Network) -> Result<Vec<u32>> {
    let mut depth = vec![None; net.len()];
    for &s in net.sinks() {
        depth[s.0] = Some(0u32);
    }
    for &t in net.transceivers() {
        let mut path = Vec::new();
        let mut cur = t;
        while depth[cur.0].is_none() {
            path.push(cur);
            if path.len() > net.len() {
                return Err(Error::Cycle(t));
            }
            cur = routing.parent(cur).ok_or(Error::Unreachable(cur))?;
        }
        let mut d = depth[cur.0].unwrap();
        for &n in path.iter().rev() {
            d += 1;
            depth[n.0] = Some(d);
        }
    }
    Ok(depth.into_iter().map(|d| d.unwrap_or(0)).collect())
}
