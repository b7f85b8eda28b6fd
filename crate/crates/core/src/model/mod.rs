//! Network model: nodes, link qualities, routing, buffers and schedule
//! frames, plus the validity rules they must satisfy.

mod frame;
mod network;
mod quality;
mod replay;
mod state;
mod validate;

pub use frame::{frame_length, Attribution, ScheduleFrame, Slot, Transmission};
pub use network::{Network, NodeId, Point};
pub use quality::{LinkQualityMatrix, INTERFERENCE_PRR};
pub(crate) use replay::move_packet;
pub use replay::{
    attribute_by_replay, execute_frame_deterministic, BufferUpdatePolicy, PacketTracker,
    PlainPolicy,
};
pub use state::{BufferState, RoutingTable};
pub use validate::{validate_routing, validate_schedule, Constraint, ValidationReport, Violation};
