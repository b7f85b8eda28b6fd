//! The slotted scheduling loop and the four baseline slot-selection rules.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{
    BufferState, BufferUpdatePolicy, LinkQualityMatrix, Network, NodeId, PacketTracker,
    RoutingTable, ScheduleFrame, Slot, Transmission,
};
use crate::routing::hop_depths;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SchedulerKind {
    #[serde(rename = "node")]
    NodeBased,
    #[serde(rename = "level")]
    LevelBased,
    Dedicated,
    Shared,
}

impl SchedulerKind {
    pub const ALL: [SchedulerKind; 4] = [
        SchedulerKind::NodeBased,
        SchedulerKind::LevelBased,
        SchedulerKind::Dedicated,
        SchedulerKind::Shared,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SchedulerKind::NodeBased => "node",
            SchedulerKind::LevelBased => "level",
            SchedulerKind::Dedicated => "dedicated",
            SchedulerKind::Shared => "shared",
        }
    }
}

impl fmt::Display for SchedulerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for SchedulerKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "node" | "node-based" | "nodebased" => Ok(SchedulerKind::NodeBased),
            "level" | "level-based" | "levelbased" => Ok(SchedulerKind::LevelBased),
            "dedicated" => Ok(SchedulerKind::Dedicated),
            "shared" => Ok(SchedulerKind::Shared),
            other => Err(Error::Parse(format!("unknown scheduler kind `{other}`"))),
        }
    }
}

fn bit_get(row: &[u64], i: usize) -> bool {
    row[i / 64] >> (i % 64) & 1 == 1
}

fn bit_set(row: &mut [u64], i: usize) {
    row[i / 64] |= 1 << (i % 64);
}

fn intersects(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).any(|(x, y)| x & y != 0)
}

fn union_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d |= s;
    }
}

fn ones(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(w, &word)| {
        let mut bits = word;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let b = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(w * 64 + b)
        })
    })
}

/// Square bit matrix over node ids, one row of `words` u64s per node.
#[derive(Clone, Debug, PartialEq, Eq)]
struct BitMatrix {
    words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    fn new(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64);
        BitMatrix {
            words,
            data: vec![0; rows * words],
        }
    }

    fn rows(&self) -> usize {
        self.data.len().checked_div(self.words).unwrap_or(0)
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.words..(i + 1) * self.words]
    }

    fn row_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.words..(i + 1) * self.words]
    }
}

/// Pairs of transceivers that may not share a slot.
///
/// `t` and `t'` conflict when either hears the other, or either is heard at
/// the other's parent. Any pairwise conflict-free set of transmitters gives a
/// valid slot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConflictGraph {
    adj: BitMatrix,
    n: usize,
}

impl ConflictGraph {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn conflicts(&self, a: NodeId, b: NodeId) -> bool {
        bit_get(self.adj.row(a.0), b.0)
    }

    pub fn neighbors(&self, a: NodeId) -> impl Iterator<Item = NodeId> + '_ {
        ones(self.adj.row(a.0)).map(NodeId)
    }

    pub fn degree(&self, a: NodeId) -> usize {
        self.adj
            .row(a.0)
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .data
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum::<usize>()
            / 2
    }
}

pub fn build_conflict_graph(
    net: &Network,
    quality: &LinkQualityMatrix,
    routing: &RoutingTable,
) -> Result<ConflictGraph> {
    quality.check_dimensions(net)?;
    if routing.len() != net.len() {
        return Err(Error::Dimension(format!(
            "routing table covers {} nodes, network has {}",
            routing.len(),
            net.len()
        )));
    }
    let n = net.len();
    // out: nodes that hear t; heard_by: transmitters p hears;
    // children: transmitters routed to p
    let mut out = BitMatrix::new(n, n);
    let mut heard_by = BitMatrix::new(n, n);
    let mut children = BitMatrix::new(n, n);
    let mut transceivers = vec![0u64; out.words];
    for &t in net.transceivers() {
        bit_set(&mut transceivers, t.0);
        let row = quality.row(t).expect("dimensions checked");
        for (p, &q) in row.iter().enumerate() {
            if q > 0.0 && p != t.0 {
                bit_set(out.row_mut(t.0), p);
                bit_set(heard_by.row_mut(p), t.0);
            }
        }
        if let Some(r) = routing.parent(t) {
            bit_set(children.row_mut(r.0), t.0);
        }
    }
    let mut adj = BitMatrix::new(n, n);
    for &t in net.transceivers() {
        let a = adj.row_mut(t.0);
        union_into(a, out.row(t.0));
        union_into(a, heard_by.row(t.0));
        if let Some(r) = routing.parent(t) {
            union_into(a, heard_by.row(r.0));
        }
        for p in ones(out.row(t.0)) {
            union_into(a, children.row(p));
        }
        for (w, m) in a.iter_mut().zip(&transceivers) {
            *w &= m;
        }
        a[t.0 / 64] &= !(1 << (t.0 % 64));
    }
    Ok(ConflictGraph { adj, n })
}

/// Scratch space for slot selection, reused across loop iterations.
struct SlotPicker {
    masks: BitMatrix,
    classes: Vec<Vec<NodeId>>,
    used: usize,
}

impl SlotPicker {
    fn new(n: usize) -> Self {
        SlotPicker {
            masks: BitMatrix::new(0, n),
            classes: Vec::new(),
            used: 0,
        }
    }

    fn open_class(&mut self) -> usize {
        if self.used == self.masks.rows() {
            self.masks
                .data
                .extend(std::iter::repeat_n(0, self.masks.words));
            self.classes.push(Vec::new());
        } else {
            self.masks.row_mut(self.used).fill(0);
            self.classes[self.used].clear();
        }
        self.used += 1;
        self.used - 1
    }

    /// Greedy sequential coloring of `order`; the color classes come out
    /// in color index order.
    fn color(&mut self, graph: &ConflictGraph, order: &[NodeId]) -> &[Vec<NodeId>] {
        self.used = 0;
        for &v in order {
            let nb = graph.adj.row(v.0);
            let c = match (0..self.used).find(|&c| !intersects(self.masks.row(c), nb)) {
                Some(c) => c,
                None => self.open_class(),
            };
            bit_set(self.masks.row_mut(c), v.0);
            self.classes[c].push(v);
        }
        &self.classes[..self.used]
    }

    /// Takes candidates in order until the first one that clashes with the
    /// slot.
    fn fill_until_conflict(
        &mut self,
        graph: &ConflictGraph,
        order: impl IntoIterator<Item = NodeId>,
    ) -> &[Vec<NodeId>] {
        self.used = 0;
        let c = self.open_class();
        for v in order {
            if intersects(self.masks.row(c), graph.adj.row(v.0)) {
                break;
            }
            bit_set(self.masks.row_mut(c), v.0);
            self.classes[c].push(v);
        }
        &self.classes[..self.used]
    }
}

/// For every transmitter, the packet rank of each routed source inside its
/// subtree, taken in depth-first preorder (children by ascending id).
/// Packets `2j` and `2j+1` of a transmitter form its `j`-th shared pair.
struct SharedPairs {
    pre: Vec<usize>,
    prefix: Vec<u64>,
}

impl SharedPairs {
    fn new(routing: &RoutingTable, net: &Network, b0: &BufferState) -> Self {
        let n = net.len();
        let mut children = vec![Vec::new(); n];
        for v in net.node_ids() {
            if let Some(p) = routing.parent(v) {
                children[p.0].push(v);
            }
        }
        let mut pre = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        for &s in net.sinks() {
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                if pre[v.0] != usize::MAX {
                    continue;
                }
                pre[v.0] = order.len();
                order.push(v);
                stack.extend(children[v.0].iter().rev());
            }
        }
        let mut prefix = vec![0u64; order.len() + 1];
        for (i, v) in order.iter().enumerate() {
            prefix[i + 1] = prefix[i] + b0.get(*v) as u64;
        }
        SharedPairs { pre, prefix }
    }

    fn pair(&self, t: NodeId, source: NodeId, seq: u32) -> u64 {
        let rank = self.prefix[self.pre[source.0]] - self.prefix[self.pre[t.0]] + seq as u64;
        rank / 2
    }
}

/// Hop depths, with 0 for nodes whose route is cut off; those are reported as
/// stuck by the loop rather than rejected up front.
fn routed_depths(routing: &RoutingTable, net: &Network) -> Result<Vec<u32>> {
    match hop_depths(routing, net) {
        Err(Error::Unreachable(_)) => {}
        other => return other,
    }
    let mut depth = vec![0u32; net.len()];
    for &t in net.transceivers() {
        let mut cur = t;
        let mut d = 0u32;
        while let Some(p) = routing.parent(cur) {
            d += 1;
            if d as usize > net.len() {
                return Err(Error::Cycle(t));
            }
            cur = p;
        }
        depth[t.0] = if net.is_sink(cur) { d } else { 0 };
    }
    Ok(depth)
}

fn livelock(iterations: usize, buffers: &BufferState) -> Error {
    Error::Livelock {
        iterations,
        stuck: buffers.nonempty(),
    }
}

/// Runs the generic loop: pick the next slot(s) for `kind`, append them, let
/// `policy` advance packets, repeat until every buffer is empty.
///
/// Every transmission in the result is attributed to the packet it serves.
pub fn run_scheduler(
    kind: SchedulerKind,
    net: &Network,
    quality: &LinkQualityMatrix,
    routing: &RoutingTable,
    b0: &BufferState,
    policy: &mut (impl BufferUpdatePolicy + ?Sized),
) -> Result<ScheduleFrame> {
    let graph = build_conflict_graph(net, quality, routing)?;
    if b0.len() != net.len() {
        return Err(Error::Dimension(format!(
            "{} buffer entries for {} nodes",
            b0.len(),
            net.len()
        )));
    }
    let depth = routed_depths(routing, net)?;
    let hop_work: u64 = b0
        .nonempty()
        .iter()
        .map(|&(s, c)| c as u64 * depth[s.0] as u64)
        .sum();
    let guard = 10
        * (net.transceivers().len() as u64).max(hop_work).max(1)
        * policy.max_attempts().max(1) as u64;

    let mut order: Vec<NodeId> = net.transceivers().to_vec();
    match kind {
        SchedulerKind::NodeBased => {}
        SchedulerKind::LevelBased => order.sort_by_key(|t| (depth[t.0], *t)),
        SchedulerKind::Dedicated | SchedulerKind::Shared => {
            order.sort_by(|a, b| {
                let qa = routing.parent(*a).map_or(0.0, |p| quality.get(*a, p));
                let qb = routing.parent(*b).map_or(0.0, |p| quality.get(*b, p));
                qb.total_cmp(&qa).then(a.cmp(b))
            });
        }
    }
    let pairs = (kind == SchedulerKind::Shared).then(|| SharedPairs::new(routing, net, b0));

    let mut tracker = PacketTracker::new(b0);
    let mut frame = ScheduleFrame::default();
    let mut iterations = 0usize;
    let mut active = Vec::with_capacity(order.len());
    let mut picker = SlotPicker::new(net.len());

    // transceivers with a nonempty buffer, as bits over positions in `order`
    let mut rank = vec![usize::MAX; net.len()];
    let mut live = vec![0u64; order.len().div_ceil(64)];
    let mut parentless = live.clone();
    for (i, &t) in order.iter().enumerate() {
        rank[t.0] = i;
        if b0.get(t) > 0 {
            bit_set(&mut live, i);
        }
        if routing.parent(t).is_none() {
            bit_set(&mut parentless, i);
        }
    }

    while !tracker.is_drained() {
        iterations += 1;
        if iterations as u64 > guard || intersects(&live, &parentless) {
            return Err(livelock(iterations - 1, tracker.buffers()));
        }

        let slots = match kind {
            SchedulerKind::NodeBased | SchedulerKind::LevelBased => {
                active.clear();
                active.extend(ones(&live).map(|i| order[i]));
                picker.color(&graph, &active)
            }
            SchedulerKind::Dedicated | SchedulerKind::Shared => {
                picker.fill_until_conflict(&graph, ones(&live).map(|i| order[i]))
            }
        };

        for members in slots {
            loop {
                let mut slot = Vec::with_capacity(members.len());
                for &t in members {
                    let attribution = tracker.transmit(t, routing, net, policy)?;
                    let receiver = routing.parent(t).ok_or(Error::NoParent(t))?;
                    for v in [t, receiver] {
                        let i = rank[v.0];
                        if i != usize::MAX {
                            let word = &mut live[i / 64];
                            let bit = 1u64 << (i % 64);
                            if tracker.buffers().get(v) > 0 {
                                *word |= bit;
                            } else {
                                *word &= !bit;
                            }
                        }
                    }
                    slot.push(Transmission {
                        transmitter: t,
                        receiver,
                        attribution,
                    });
                }
                let repeat = match &pairs {
                    Some(pairs) if slot.len() > 1 => slot.iter().all(|tx| {
                        let (Some(served), Some(next)) =
                            (tx.attribution, tracker.head(tx.transmitter))
                        else {
                            return false;
                        };
                        let t = tx.transmitter;
                        pairs.pair(t, served.source, served.seq)
                            == pairs.pair(t, next.source, next.seq)
                    }),
                    _ => false,
                };
                frame.push(Slot::new(slot));
                if !repeat {
                    break;
                }
            }
        }
    }
    Ok(frame)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channel::{generate_topology, ChannelParams, TopologyParams};
    use crate::model::{execute_frame_deterministic, validate_schedule, PlainPolicy, Point};
    use crate::routing::etx_route;

    /// sink 0 <- B 1 <- A 2
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

    fn star() -> (Network, LinkQualityMatrix, RoutingTable) {
        let net = Network::new(
            vec![
                Point::new(0.0, 0.0),
                Point::new(10.0, 0.0),
                Point::new(-10.0, 0.0),
                Point::new(0.0, 10.0),
            ],
            &[NodeId(0)],
        )
        .unwrap();
        let q = LinkQualityMatrix::from_fn(&net, |_, p| if p.0 == 0 { 0.9 } else { 0.0 }).unwrap();
        let r = etx_route(&net, &q).unwrap();
        (net, q, r)
    }

    #[test]
    fn kind_names_round_trip() {
        for k in SchedulerKind::ALL {
            assert_eq!(k.to_string().parse::<SchedulerKind>().unwrap(), k);
        }
        assert!("greedy".parse::<SchedulerKind>().is_err());
    }

    #[test]
    fn conflict_graph_edges() {
        let (net, q, r) = chain();
        let g = build_conflict_graph(&net, &q, &r).unwrap();
        assert!(g.conflicts(NodeId(1), NodeId(2)));
        assert!(g.conflicts(NodeId(2), NodeId(1)));
        assert!(!g.conflicts(NodeId(1), NodeId(1)));

        let (net, q, r) = star();
        let g = build_conflict_graph(&net, &q, &r).unwrap();
        // shared parent, the leaves cannot hear each other
        assert!(g.conflicts(NodeId(1), NodeId(2)));
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn conflict_graph_matches_pairwise_definition() {
        let cp = ChannelParams::default();
        for seed in 0..4 {
            let (net, q) = generate_topology(&TopologyParams::new(50, seed), &cp).unwrap();
            let r = etx_route(&net, &q).unwrap();
            let g = build_conflict_graph(&net, &q, &r).unwrap();
            for &a in net.transceivers() {
                let ra = r.parent(a).unwrap();
                for &b in net.transceivers() {
                    let rb = r.parent(b).unwrap();
                    let expect = a != b
                        && (q.audible(a, b)
                            || q.audible(b, a)
                            || q.audible(b, ra)
                            || q.audible(a, rb));
                    assert_eq!(g.conflicts(a, b), expect, "seed {seed}: {a} {b}");
                }
                assert_eq!(g.neighbors(a).count(), g.degree(a));
            }
        }
    }

    #[test]
    fn far_apart_pairs_do_not_conflict() {
        // sinks 0 and 3, each with one child; no cross audibility
        let net = Network::new(
            vec![
                Point::new(0.0, 0.0),
                Point::new(10.0, 0.0),
                Point::new(500.0, 0.0),
                Point::new(510.0, 0.0),
            ],
            &[NodeId(0), NodeId(3)],
        )
        .unwrap();
        let q = LinkQualityMatrix::from_fn(&net, |t, p| match (t.0, p.0) {
            (1, 0) | (2, 3) => 0.9,
            _ => 0.0,
        })
        .unwrap();
        let r = etx_route(&net, &q).unwrap();
        let g = build_conflict_graph(&net, &q, &r).unwrap();
        assert_eq!(g.edge_count(), 0);
        let f = run_scheduler(
            SchedulerKind::NodeBased,
            &net,
            &q,
            &r,
            &BufferState::ones(&net),
            &mut PlainPolicy,
        )
        .unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f.slots[0].len(), 2);
    }

    #[test]
    fn parent_hearing_other_transmitter_conflicts() {
        // 2 -> 1 -> 0 and 3 -> 0; node 2 is audible at node 0 only through interference
        let net = Network::new(
            vec![
                Point::new(0.0, 0.0),
                Point::new(20.0, 0.0),
                Point::new(40.0, 0.0),
                Point::new(-20.0, 0.0),
            ],
            &[NodeId(0)],
        )
        .unwrap();
        let q = LinkQualityMatrix::from_fn(&net, |t, p| match (t.0, p.0) {
            (1, 0) | (2, 1) | (1, 2) | (3, 0) => 0.9,
            (2, 0) => 1e-5,
            _ => 0.0,
        })
        .unwrap();
        let r = etx_route(&net, &q).unwrap();
        let g = build_conflict_graph(&net, &q, &r).unwrap();
        assert!(g.conflicts(NodeId(2), NodeId(3)));
    }

    #[test]
    fn chain_single_source_takes_two_slots() {
        let (net, q, r) = chain();
        let b0 = BufferState::from_sources(&net, &[NodeId(2)]).unwrap();
        for kind in SchedulerKind::ALL {
            let f = run_scheduler(kind, &net, &q, &r, &b0, &mut PlainPolicy).unwrap();
            let order: Vec<_> = f
                .slots
                .iter()
                .map(|s| s.transmissions[0].transmitter)
                .collect();
            assert_eq!(order, vec![NodeId(2), NodeId(1)], "{kind}");
            assert!(f.is_attributed());
        }
    }

    #[test]
    fn star_needs_one_slot_per_leaf() {
        let (net, q, r) = star();
        let b0 = BufferState::ones(&net);
        for kind in SchedulerKind::ALL {
            let f = run_scheduler(kind, &net, &q, &r, &b0, &mut PlainPolicy).unwrap();
            assert_eq!(f.len(), 3, "{kind}");
            assert!(validate_schedule(&f, &r, &q).unwrap().is_empty());
            let left = execute_frame_deterministic(&f, &r, &net, &b0, &mut PlainPolicy).unwrap();
            assert!(left.is_empty());
        }
    }

    #[test]
    fn empty_buffers_give_empty_frame() {
        let (net, q, r) = chain();
        let f = run_scheduler(
            SchedulerKind::Shared,
            &net,
            &q,
            &r,
            &BufferState::empty(&net),
            &mut PlainPolicy,
        )
        .unwrap();
        assert!(f.is_empty());
    }

    #[test]
    fn missing_parent_is_a_livelock() {
        let (net, q, _) = chain();
        let r = RoutingTable::new(vec![None, Some(NodeId(0)), None]);
        let b0 = BufferState::from_sources(&net, &[NodeId(2)]).unwrap();
        match run_scheduler(
            SchedulerKind::NodeBased,
            &net,
            &q,
            &r,
            &b0,
            &mut PlainPolicy,
        ) {
            Err(Error::Livelock { stuck, .. }) => assert_eq!(stuck, vec![(NodeId(2), 1)]),
            other => panic!("expected livelock, got {other:?}"),
        }
    }

    #[test]
    fn policy_that_never_moves_hits_the_guard() {
        struct Stubborn;
        impl BufferUpdatePolicy for Stubborn {
            fn update_packet_buffers(
                &mut self,
                _: NodeId,
                _: &RoutingTable,
                _: &Network,
                _: &mut BufferState,
            ) -> bool {
                false
            }
        }
        let (net, q, r) = chain();
        let b0 = BufferState::ones(&net);
        let err = run_scheduler(SchedulerKind::Dedicated, &net, &q, &r, &b0, &mut Stubborn);
        assert!(matches!(err, Err(Error::Livelock { .. })));
    }

    #[test]
    fn generated_frames_are_valid_and_deterministic() {
        let cp = ChannelParams::default();
        for seed in 0..3 {
            let (net, q) = generate_topology(&TopologyParams::new(50, seed), &cp).unwrap();
            let r = etx_route(&net, &q).unwrap();
            let b0 = BufferState::ones(&net);
            let depth = hop_depths(&r, &net).unwrap();
            let g = build_conflict_graph(&net, &q, &r).unwrap();
            for kind in SchedulerKind::ALL {
                let f = run_scheduler(kind, &net, &q, &r, &b0, &mut PlainPolicy).unwrap();
                let again = run_scheduler(kind, &net, &q, &r, &b0, &mut PlainPolicy).unwrap();
                assert_eq!(f, again);
                assert!(
                    validate_schedule(&f, &r, &q).unwrap().is_empty(),
                    "{kind} seed {seed}"
                );
                let left =
                    execute_frame_deterministic(&f, &r, &net, &b0, &mut PlainPolicy).unwrap();
                assert!(left.is_empty());
                for slot in &f.slots {
                    for (i, a) in slot.transmitters().enumerate() {
                        for b in slot.transmitters().skip(i + 1) {
                            assert!(!g.conflicts(a, b));
                        }
                    }
                }
                let max_depth = *depth.iter().max().unwrap() as usize;
                let into_sink: u32 = net
                    .transceivers()
                    .iter()
                    .filter(|&&t| r.parent(t) == Some(NodeId(0)))
                    .map(|&t| r.packet_load(t))
                    .sum();
                assert!(f.len() >= max_depth);
                assert!(f.len() >= into_sink as usize);
                let hops: u32 = net.transceivers().iter().map(|&t| depth[t.0]).sum();
                assert_eq!(f.transmission_count(), hops as usize);
            }
        }
    }

    #[test]
    fn shared_pairs_follow_preorder() {
        // sink 0 <- 1 <- {2, 3}, 3 <- 4
        let net = Network::new(
            (0..5).map(|i| Point::new(i as f64, 0.0)).collect(),
            &[NodeId(0)],
        )
        .unwrap();
        let r = RoutingTable::new(vec![
            None,
            Some(NodeId(0)),
            Some(NodeId(1)),
            Some(NodeId(1)),
            Some(NodeId(3)),
        ]);
        let pairs = SharedPairs::new(&r, &net, &BufferState::ones(&net));
        // preorder under 1: 1, 2, 3, 4
        assert_eq!(pairs.pair(NodeId(1), NodeId(1), 0), 0);
        assert_eq!(pairs.pair(NodeId(1), NodeId(2), 0), 0);
        assert_eq!(pairs.pair(NodeId(1), NodeId(3), 0), 1);
        assert_eq!(pairs.pair(NodeId(1), NodeId(4), 0), 1);
        assert_eq!(pairs.pair(NodeId(3), NodeId(4), 0), 0);
    }
}
