use alloc::string::String;
use alloc::vec::Vec;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("qubit count mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("site {site} out of range for {n} qubits")]
    SiteOutOfRange { site: usize, n: usize },

    #[error("cannot parse Pauli string {input:?}: {reason}")]
    ParsePauli { input: String, reason: &'static str },

    #[error("cannot parse coefficient {0:?}")]
    ParseCoefficient(String),

    #[error("expected {expected} generators, found {found}")]
    GeneratorCount { expected: usize, found: usize },

    #[error("generator {0} is not Hermitian")]
    NonHermitianGenerator(usize),

    #[error("generators {0} and {1} anticommute")]
    NonCommuting(usize, usize),

    #[error("generator {0} is dependent on the preceding generators")]
    Dependent(usize),

    #[error("generators produce -I")]
    MinusIdentity,

    #[error("N = {0} must be even")]
    OddN(usize),

    #[error("N = {0} must be odd")]
    EvenN(usize),

    #[error("N = {n} is below the minimum {min}")]
    TooSmall { n: usize, min: usize },

    #[error("N = {n} exceeds the limit {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("subset of size {size} exceeds the enumeration limit {limit}")]
    SubsetLimitExceeded { size: usize, limit: usize },

    #[error("assembled Hamiltonian has imaginary coefficients on {}", .0.join(", "))]
    NonHermitianResult(Vec<String>),

    #[error("class of {representative} does not balance; H does not annihilate the state")]
    NotAnnihilating { representative: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
