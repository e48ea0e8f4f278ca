//! Exact verification of likelihoodist theses.
//!
//! The crate has two sides. The quantitative side ([`experiments`],
//! [`stopping`]) works with finite experiments whose likelihoods are exact
//! rationals. The qualitative side ([`qualitative`], [`theses`]) works with
//! comparative conditional orderings over `Θ×Ω`, realized by exact measures,
//! and checks axioms, lemmas and theorems over them by enumeration or
//! seeded sampling.

pub mod bits;
pub mod cli;
pub mod error;
pub mod experiments;
pub mod qualitative;
pub mod rational;
pub mod stopping;
pub mod theses;

pub use bits::{EventSet, HypothesisSet, Subset};
pub use error::{Error, Result};
pub use rational::Rational;
