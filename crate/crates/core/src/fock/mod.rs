//! Fermion Fock space, sparse many-body operators, and the bond operators
//! built from them.

pub mod bonds;
pub mod operator;
pub mod space;
pub mod verify;

pub use bonds::{
    bond_grid, bond_lowering_operator, bond_operator, chain_bond_raw, combo_operator, combo_raw, density_bilinear,
    dirac_combo, square_bond_operator, square_bond_raw, BondChannel, ComboFamily, DiracFamily, DiracPair, Parity,
    PhaseConvention,
};
pub use operator::{
    annihilation_op, anticommutator, commutator, creation_op, number_op, quadratic_operator, Ladder, SparseOperator,
};
pub use space::{FockSpace, Geometry, ModeLabel, Species, Sublattice, MAX_MODES};
pub use verify::{
    boson_commutator_report, dirac_hamiltonian, hole_table, holed_state, square_commutator_report, ssh_hamiltonian,
    verify_dirac_bond_commutators, verify_ssh_bond_commutators, CommutatorReport, HoleRow, IdentityCheck,
    IdentityReport,
};
