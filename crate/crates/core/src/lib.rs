//! Finite-group engine for element-order spectra and prime graphs.
//!
//! Groups are enumerated exhaustively, so everything here is sized for
//! groups of at most about a million elements ([`groups::DEFAULT_CAP`]).

pub mod constructions;
pub mod error;
pub mod ffield;
pub mod groups;
pub mod spectra;
pub mod structure;
mod util;

pub use error::{Error, Result};
pub use ffield::{Field, FieldElement};
pub use groups::{ActionTable, Group, GroupElement, Permutation};
pub use spectra::{MuSet, PrimeGraph, Spectrum};
pub use structure::{FrobeniusWitness, TheoremCase, VerificationReport};
