use thiserror::Error;

use crate::model::NodeId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid network: {0}")]
    InvalidNetwork(String),

    #[error("invalid link quality matrix: {0}")]
    InvalidQuality(String),

    #[error("transmitter {0} has no routing parent")]
    NoParent(NodeId),

    #[error("node {0} cannot reach a sink")]
    Unreachable(NodeId),

    #[error("routing cycle through node {0}")]
    Cycle(NodeId),

    #[error("link with zero reception rate cannot satisfy a reliability demand{}",
        .0.map(|t| format!(" (transmitter {t})")).unwrap_or_default())]
    InfeasibleLink(Option<NodeId>),

    #[error("reliability demand {0} is not attainable with finitely many attempts")]
    InfeasibleDemand(f64),

    #[error("scheduler made no progress after {iterations} iterations; stuck buffers: {stuck:?}")]
    Livelock {
        iterations: usize,
        stuck: Vec<(NodeId, u32)>,
    },

    #[error("transmission in slot {slot} lacks a packet attribution")]
    MissingAttribution { slot: usize },

    #[error("reliability {target} not reached within {max_slots} slots (reached {reached})")]
    IncrementLimit {
        target: f64,
        reached: f64,
        max_slots: usize,
    },

    #[error("topology generation failed for seed {seed} after {attempts} draws")]
    Generation { seed: u64, attempts: u32 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("scenario parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
