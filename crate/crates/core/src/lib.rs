//! Bond-boson description of tight-binding fermions.
//!
//! Pairs of fermions on a lattice, `c†_n c†_{n+l}`, are collected into
//! momentum-labelled bond operators. Near full filling these obey bosonic
//! commutation relations, and a quadratic fermion Hamiltonian becomes a
//! quadratic boson Hamiltonian whose spectrum is built from sums of pairs of
//! single-fermion energies. The crate implements this for the dimerized
//! (SSH) chain and for the two-component lattice Dirac model, and checks
//! every step against exact small-lattice computations.

pub mod bondboson;
pub mod cli;
pub mod error;
pub mod fermion_model;
pub mod fock;
pub mod interactions;
pub mod lattice;
pub mod numerics;
pub mod report;

pub use error::{Error, Result};
