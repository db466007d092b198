//! Stabilizer eigenstates of few-body spin-1/2 Hamiltonians at infinite
//! temperature.
//!
//! The crate is `no_std` with `alloc`. It covers:
//!
//! - exact Pauli algebra in the binary-symplectic representation ([`pauli`]),
//! - maximal stabilizer groups, membership, expectation values and
//!   support-restricted subgroups ([`stabilizer`]),
//! - graph states and the circulant graph families used for the thermal
//!   constructions ([`graph`]), with a small-N statevector oracle ([`oracle`]),
//! - k-body and l-local microscopic thermal equilibrium verdicts ([`mite`]),
//! - parent-Hamiltonian synthesis and decomposition through stabilizer
//!   factorizations `g = a·P·Q` ([`parent`]),
//! - symmetry checks on Pauli Hamiltonians ([`symmetry`]) and ready-made
//!   models ([`models`]).
//!
//! Site indices are 0-based in the Rust API. Text formats (see
//! [`pauli::PauliString`]'s `Display`) are 1-based.
//!
//! With the `parallel` feature, subset scans run on rayon and keep the
//! minimum-colex witness, so every result is independent of the thread count.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod bits;
pub mod coeff;
pub mod error;
pub mod graph;
pub mod hamiltonian;
pub mod mite;
pub mod models;
pub mod oracle;
pub mod parent;
pub mod pauli;
pub mod stabilizer;
pub mod subsets;
pub mod symmetry;

pub use bits::BitVec;
pub use coeff::{parse_rational, Coeff, GaussRational};
pub use error::{Error, Result};
pub use graph::Graph;
pub use hamiltonian::PauliHamiltonian;
pub use mite::{MiteProperty, MiteVerdict};
pub use parent::{DecompositionCertificate, Factorization, NoGoReport};
pub use pauli::{Pauli, PauliString, Phase, Support};
pub use stabilizer::{GroupElementWitness, StabilizerTableau};
pub use symmetry::SymmetrySpec;
