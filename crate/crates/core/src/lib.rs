//! Feature differential privacy toolkit.
//!
//! The crate is organized around four pillars:
//!
//! * [`tradeoff`] — trade-off curves as the universal privacy currency:
//!   construction from dominating pairs, numerical composition through
//!   privacy-loss distributions, (ε, δ) conversion and noise calibration.
//! * [`mechanisms`] — concrete randomized mechanisms (Gaussian aggregation,
//!   Poisson subsampling, first-bit randomized response) together with the
//!   simulators that define their insertion/deletion guarantees.
//! * [`sgd`] — the two-batch noisy SGD optimizer for losses split into a
//!   public part (reads only leaked features) and a private part, plus a
//!   standard DP-SGD baseline and concrete loss splits.
//! * [`audit`] — empirical verification: attribute-inference bounds,
//!   mechanism-vs-simulator distinguishing games, and the demonstration that
//!   subsampling does not amplify feature privacy.
//!
//! Dataset plumbing ([`data`]), experiment orchestration ([`sweep`]) and
//! report emission ([`report`]) tie the pillars together for the CLI.
//!
//! With the default `parallel` feature the data-parallel inner loops (Monte
//! Carlo games, grid scans, sweep cells) run on rayon; disabling it falls
//! back to sequential execution with identical results.

pub mod audit;
pub mod data;
mod error;
pub mod exec;
pub mod mechanisms;
pub mod report;
pub mod sgd;
pub mod sweep;
pub mod tradeoff;
pub mod util;

pub use error::{FdpError, Result};

/// Version stamp carried by every JSON document the crate emits.
pub const SCHEMA_VERSION: u32 = 1;
