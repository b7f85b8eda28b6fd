use crate::error::{Error, Result};
use crate::model::{Network, NodeId, ValidationReport, Violation};

/// Single-parent routing table plus per-node packet loads `k_t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoutingTable {
    parent: Vec<Option<NodeId>>,
    packet_load: Vec<u32>,
}

impl RoutingTable {
    /// Table with the given parents and zero packet loads.
    pub fn new(parent: Vec<Option<NodeId>>) -> Self {
        let n = parent.len();
        RoutingTable {
            parent,
            packet_load: vec![0; n],
        }
    }

    /// Reads a binary `|T| x |V|` routing matrix. Rows with more than one
    /// marked parent are reported as c2 violations and keep the first.
    pub fn from_binary_matrix(
        net: &Network,
        rows: &[Vec<u8>],
    ) -> Result<(RoutingTable, ValidationReport)> {
        if rows.len() != net.transceivers().len() {
            return Err(Error::Dimension(format!(
                "routing matrix has {} rows, network has {} transceivers",
                rows.len(),
                net.transceivers().len()
            )));
        }
        let mut parent = vec![None; net.len()];
        let mut report = ValidationReport::default();
        for (row, &t) in rows.iter().zip(net.transceivers()) {
            if row.len() != net.len() {
                return Err(Error::Dimension(format!(
                    "routing row for {t} has {} columns, expected {}",
                    row.len(),
                    net.len()
                )));
            }
            let marked: Vec<NodeId> = row
                .iter()
                .enumerate()
                .filter(|(_, &r)| r != 0)
                .map(|(p, _)| NodeId(p))
                .collect();
            if marked.len() > 1 {
                report.push(Violation::MultipleParents {
                    node: t,
                    count: marked.len(),
                });
            }
            parent[t.0] = marked.first().copied();
        }
        Ok((RoutingTable::new(parent), report))
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    #[inline]
    pub fn parent(&self, t: NodeId) -> Option<NodeId> {
        self.parent.get(t.0).copied().flatten()
    }

    pub fn parents(&self) -> &[Option<NodeId>] {
        &self.parent
    }

    /// `k_t`: packets routed through `t` per frame.
    #[inline]
    pub fn packet_load(&self, t: NodeId) -> u32 {
        self.packet_load.get(t.0).copied().unwrap_or(0)
    }

    pub fn packet_loads(&self) -> &[u32] {
        &self.packet_load
    }

    pub fn with_packet_loads(mut self, loads: Vec<u32>) -> Result<Self> {
        if loads.len() != self.parent.len() {
            return Err(Error::Dimension(format!(
                "{} packet loads for {} nodes",
                loads.len(),
                self.parent.len()
            )));
        }
        self.packet_load = loads;
        Ok(self)
    }

    /// Nodes whose parent is `p`, in ascending id order.
    pub fn children(&self, p: NodeId) -> impl Iterator<Item = NodeId> + '_ {
        self.parent
            .iter()
            .enumerate()
            .filter(move |(_, &par)| par == Some(p))
            .map(|(i, _)| NodeId(i))
    }
}

/// Packets waiting per node, indexed by [`NodeId`]. Sink entries stay zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BufferState(Vec<u32>);

impl BufferState {
    pub fn empty(net: &Network) -> Self {
        BufferState(vec![0; net.len()])
    }

    /// `b = 1`: one packet at every transceiver.
    pub fn ones(net: &Network) -> Self {
        let mut b = Self::empty(net);
        for &t in net.transceivers() {
            b.0[t.0] = 1;
        }
        b
    }

    pub fn from_sources(net: &Network, sources: &[NodeId]) -> Result<Self> {
        let mut b = Self::empty(net);
        for &s in sources {
            if !net.is_transceiver(s) {
                return Err(Error::InvalidNetwork(format!(
                    "source {s} is not a transceiver"
                )));
            }
            b.0[s.0] += 1;
        }
        Ok(b)
    }

    pub fn from_counts(net: &Network, counts: Vec<u32>) -> Result<Self> {
        if counts.len() != net.len() {
            return Err(Error::Dimension(format!(
                "{} buffer entries for {} nodes",
                counts.len(),
                net.len()
            )));
        }
        if let Some(&s) = net.sinks().iter().find(|s| counts[s.0] != 0) {
            return Err(Error::InvalidNetwork(format!(
                "sink {s} cannot hold packets"
            )));
        }
        Ok(BufferState(counts))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn get(&self, t: NodeId) -> u32 {
        self.0[t.0]
    }

    pub(crate) fn slot_mut(&mut self, t: NodeId) -> &mut u32 {
        &mut self.0[t.0]
    }

    pub fn counts(&self) -> &[u32] {
        &self.0
    }

    /// True when every buffer is empty.
    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&b| b == 0)
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&b| b as u64).sum()
    }

    /// Nodes holding packets, with their counts.
    pub fn nonempty(&self) -> Vec<(NodeId, u32)> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &b)| b > 0)
            .map(|(i, &b)| (NodeId(i), b))
            .collect()
    }
}
