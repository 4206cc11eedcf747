//! Nilpotent orbits of simple highest weight modules over classical Lie
//! algebras, and annihilators of highest weight modules in infinite rank.

pub mod borel;
pub mod cli;
pub mod error;
pub mod orbit;
pub mod partition;
pub mod random;
pub mod rs;
pub mod selftest;
pub mod weight;

pub use error::{Error, ErrorClass, Result};
pub use partition::{ClassicalType, EoConvention, MergeReading, Partition, ZSeq};
pub use weight::{WeightValue, WeightVector};
