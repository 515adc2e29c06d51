pub mod arith;
pub mod characters;
pub mod error;
mod memo;
pub mod partitions;
pub mod series;
pub mod suites;
pub mod symfunc;
pub mod wzw;

pub use arith::{GaussianRational, LaurentPoly, RatFunc, Var};
pub use error::{Error, Result};
pub use partitions::Partition;
