//! TDMA schedule construction for wireless sensor networks with a lower
//! bound on end-to-end delivery probability.

pub mod bench;
pub mod channel;
pub mod error;
pub mod incrementer;
pub mod model;
pub mod oracle;
pub mod routing;
pub mod schedex;
pub mod scheduling;

pub use error::{Error, Result};
