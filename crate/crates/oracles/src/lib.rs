//! Naive reference implementations used as independent oracles by the
//! planwrite test suites.
//!
//! Everything here is written for clarity over speed: explicit loops,
//! plain `Vec` math, no shared code with the main crates. Tests compare
//! the production implementations against these.

pub mod metrics;
pub mod rake;
pub mod scalar_nn;
