pub mod corpus;
pub mod dynamic;
pub mod error;
pub mod metrics;
pub mod model;
pub mod report;
pub mod static_eval;

pub use error::{Error, Result};
