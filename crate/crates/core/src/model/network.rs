use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Index of a node in its [`Network`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NodeId(pub usize);

impl NodeId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn distance(&self, other: &Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

/// A sensor network: node positions split into sinks and transceivers.
///
/// Node ids are dense indices `0..len()`. Every node is exactly one of sink
/// or transceiver; at least one sink is required.
#[derive(Clone, Debug, PartialEq)]
pub struct Network {
    positions: Vec<Point>,
    is_sink: Vec<bool>,
    sinks: Vec<NodeId>,
    transceivers: Vec<NodeId>,
    row: Vec<Option<usize>>,
}

impl Network {
    pub fn new(positions: Vec<Point>, sinks: &[NodeId]) -> Result<Self> {
        if let Some(i) = positions
            .iter()
            .position(|p| !p.x.is_finite() || !p.y.is_finite())
        {
            return Err(Error::InvalidNetwork(format!(
                "node {} has non-finite coordinates",
                NodeId(i)
            )));
        }
        if sinks.is_empty() {
            return Err(Error::InvalidNetwork("no sink given".into()));
        }
        let mut is_sink = vec![false; positions.len()];
        for &s in sinks {
            match is_sink.get_mut(s.0) {
                None => {
                    return Err(Error::InvalidNetwork(format!(
                        "sink {s} out of range for {} nodes",
                        positions.len()
                    )))
                }
                Some(flag) if *flag => {
                    return Err(Error::InvalidNetwork(format!("sink {s} listed twice")))
                }
                Some(flag) => *flag = true,
            }
        }

        let mut sinks = Vec::new();
        let mut transceivers = Vec::new();
        let mut row = vec![None; positions.len()];
        for (i, &sink) in is_sink.iter().enumerate() {
            if sink {
                sinks.push(NodeId(i));
            } else {
                row[i] = Some(transceivers.len());
                transceivers.push(NodeId(i));
            }
        }
        Ok(Network {
            positions,
            is_sink,
            sinks,
            transceivers,
            row,
        })
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn node_ids(&self) -> impl Iterator<Item = NodeId> + '_ {
        (0..self.positions.len()).map(NodeId)
    }

    pub fn position(&self, id: NodeId) -> Point {
        self.positions[id.0]
    }

    pub fn positions(&self) -> &[Point] {
        &self.positions
    }

    pub fn distance(&self, a: NodeId, b: NodeId) -> f64 {
        self.positions[a.0].distance(&self.positions[b.0])
    }

    pub fn is_sink(&self, id: NodeId) -> bool {
        self.is_sink.get(id.0).copied().unwrap_or(false)
    }

    pub fn is_transceiver(&self, id: NodeId) -> bool {
        self.row.get(id.0).is_some_and(Option::is_some)
    }

    pub fn sinks(&self) -> &[NodeId] {
        &self.sinks
    }

    /// Transceivers in ascending id order.
    pub fn transceivers(&self) -> &[NodeId] {
        &self.transceivers
    }

    /// Row of `id` in a `|T| x |V|` matrix, `None` for sinks.
    pub fn transceiver_row(&self, id: NodeId) -> Option<usize> {
        self.row.get(id.0).copied().flatten()
    }
}
