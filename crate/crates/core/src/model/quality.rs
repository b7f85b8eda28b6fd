use crate::error::{Error, Result};
use crate::model::{Network, NodeId};

/// Reception rate used to encode "within interference range, not routable".
pub const INTERFERENCE_PRR: f64 = 1e-5;

/// Dense `|T| x |V|` matrix of per-attempt packet reception rates.
///
/// Row `t` holds the rates from transceiver `t` to every node. A positive
/// entry means the directed link exists; entries equal to
/// [`INTERFERENCE_PRR`] are audible but never routed over.
#[derive(Clone, Debug, PartialEq)]
pub struct LinkQualityMatrix {
    n_nodes: usize,
    row_of: Vec<Option<usize>>,
    values: Vec<f64>,
}

impl LinkQualityMatrix {
    /// Builds the matrix from a function of (transmitter, receiver). The
    /// diagonal is forced to zero.
    pub fn from_fn(net: &Network, mut f: impl FnMut(NodeId, NodeId) -> f64) -> Result<Self> {
        let n = net.len();
        let mut values = Vec::with_capacity(net.transceivers().len() * n);
        for &t in net.transceivers() {
            for p in net.node_ids() {
                values.push(if p == t { 0.0 } else { f(t, p) });
            }
        }
        Self::checked(net, values)
    }

    /// Builds the matrix from explicit rows, one per transceiver in id order.
    pub fn from_rows(net: &Network, rows: Vec<Vec<f64>>) -> Result<Self> {
        let expected = net.transceivers().len();
        if rows.len() != expected {
            return Err(Error::Dimension(format!(
                "quality matrix has {} rows, network has {expected} transceivers",
                rows.len()
            )));
        }
        let mut values = Vec::with_capacity(expected * net.len());
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != net.len() {
                return Err(Error::Dimension(format!(
                    "quality row {i} has {} columns, network has {} nodes",
                    row.len(),
                    net.len()
                )));
            }
            values.extend(row);
        }
        Self::checked(net, values)
    }

    fn checked(net: &Network, values: Vec<f64>) -> Result<Self> {
        let n = net.len();
        for (r, &t) in net.transceivers().iter().enumerate() {
            for p in 0..n {
                let q = values[r * n + p];
                if !(0.0..=1.0).contains(&q) {
                    return Err(Error::InvalidQuality(format!(
                        "q[{t}][{}] = {q} outside [0, 1]",
                        NodeId(p)
                    )));
                }
                if p == t.0 && q != 0.0 {
                    return Err(Error::InvalidQuality(format!("q[{t}][{t}] must be 0")));
                }
            }
        }
        Ok(LinkQualityMatrix {
            n_nodes: n,
            row_of: net.node_ids().map(|id| net.transceiver_row(id)).collect(),
            values,
        })
    }

    pub fn n_nodes(&self) -> usize {
        self.n_nodes
    }

    pub fn n_transceivers(&self) -> usize {
        self.values.len() / self.n_nodes.max(1)
    }

    /// `q_tp`; zero when `t` is a sink or either id is out of range.
    #[inline]
    pub fn get(&self, t: NodeId, p: NodeId) -> f64 {
        match self.row_of.get(t.0).copied().flatten() {
            Some(r) if p.0 < self.n_nodes => self.values[r * self.n_nodes + p.0],
            _ => 0.0,
        }
    }

    /// Whether `p` can hear `t` at all (routable or interference-only).
    #[inline]
    pub fn audible(&self, t: NodeId, p: NodeId) -> bool {
        self.get(t, p) > 0.0
    }

    pub fn has_row(&self, t: NodeId) -> bool {
        self.row_of.get(t.0).is_some_and(Option::is_some)
    }

    pub fn row(&self, t: NodeId) -> Option<&[f64]> {
        let r = self.row_of.get(t.0).copied().flatten()?;
        Some(&self.values[r * self.n_nodes..(r + 1) * self.n_nodes])
    }

    /// All rows in transceiver order.
    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.values.chunks(self.n_nodes.max(1))
    }

    /// Checks that the matrix was built for a network of this shape.
    pub fn check_dimensions(&self, net: &Network) -> Result<()> {
        if self.n_nodes != net.len() || self.n_transceivers() != net.transceivers().len() {
            return Err(Error::Dimension(format!(
                "quality matrix is {}x{}, network needs {}x{}",
                self.n_transceivers(),
                self.n_nodes,
                net.transceivers().len(),
                net.len()
            )));
        }
        Ok(())
    }
}
