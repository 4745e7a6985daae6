use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("matrix is not Hermitian: entry ({row},{col}) = {value} but ({col},{row}) = {mirror}")]
    NotHermitian {
        row: usize,
        col: usize,
        value: String,
        mirror: String,
    },

    #[error("matrix entry ({row},{col}) is not finite")]
    NonFinite { row: usize, col: usize },

    #[error("matrix dimension must be positive")]
    EmptyMatrix,

    #[error("expected {expected} entries for a {dim}x{dim} matrix, got {got}")]
    ShapeMismatch { dim: usize, expected: usize, got: usize },

    #[error("invalid lattice: {0}")]
    InvalidLattice(String),

    #[error("momentum {value} is not on the grid 2*pi*j/{period}")]
    OffGrid { value: f64, period: usize },

    #[error("mode {mode} out of range for a {n_modes}-mode Fock space")]
    ModeOutOfRange { mode: usize, n_modes: usize },

    #[error("Fock space with {requested} modes exceeds the limit of {limit}")]
    TooManyModes { requested: usize, limit: usize },

    #[error("operators act on different Fock spaces")]
    SpaceMismatch,

    #[error("invalid bond: {0}")]
    InvalidBond(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal mass {off:e})")]
    NoConvergence { sweeps: usize, off: f64 },
}
