//! Shared numeric and randomness utilities.

pub mod normal;
pub mod rng;
