pub mod cli;
pub mod ehrhart;
pub mod error;
pub mod exact_math;
mod hull;
pub mod intersection;
pub mod mixed_volume;
pub mod polytope;
pub mod random;
pub mod subdivision;
pub mod svg;
pub mod tropical;
pub mod verify;

pub use error::{Error, Result};
