use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] stabtherm_core::Error),
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("incompatible symmetry sector: {0}")]
    IncompatibleSpec(String),
    #[error("symmetry sector {0} is empty")]
    DimensionZero(String),
    #[error("sector dimension {dim} exceeds the limit {limit}")]
    TooLarge { dim: usize, limit: usize },
    #[error("need at least 4 retained levels, found {0}")]
    TooFewLevels(usize),
    #[error("Hamiltonian breaks requested symmetries: {0}")]
    SymmetryBroken(String),
    #[error("{0}")]
    Config(String),
    #[error("claim check failed: {0}")]
    ClaimFailed(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }

    /// Process exit code: 2 validation, 3 claim failure, 4 resource limit.
    pub fn exit_code(&self) -> i32 {
        use stabtherm_core::Error as C;
        match self {
            Error::ClaimFailed(_) => 3,
            Error::TooLarge { .. } | Error::Core(C::TooLarge { .. }) | Error::Core(C::SubsetLimitExceeded { .. }) => 4,
            _ => 2,
        }
    }

    /// Short machine-readable category.
    pub fn kind(&self) -> &'static str {
        use stabtherm_core::Error as C;
        match self {
            Error::Core(e) => match e {
                C::DimensionMismatch { .. } => "dimension_mismatch",
                C::SiteOutOfRange { .. } => "site_out_of_range",
                C::ParsePauli { .. } => "parse_pauli",
                C::ParseCoefficient(_) => "parse_coefficient",
                C::GeneratorCount { .. } => "generator_count",
                C::NonHermitianGenerator(_) => "non_hermitian_generator",
                C::NonCommuting(..) => "non_commuting",
                C::Dependent(_) => "dependent",
                C::MinusIdentity => "minus_identity",
                C::OddN(_) | C::EvenN(_) | C::TooSmall { .. } => "bounds",
                C::TooLarge { .. } => "too_large",
                C::SelfLoop(_) => "self_loop",
                C::SubsetLimitExceeded { .. } => "subset_limit_exceeded",
                C::NonHermitianResult(_) => "non_hermitian_result",
                C::NotAnnihilating { .. } => "not_annihilating",
                C::InvalidArgument(_) => "invalid_argument",
            },
            Error::Format { .. } => "format",
            Error::Io { .. } => "io",
            Error::IncompatibleSpec(_) => "incompatible_spec",
            Error::DimensionZero(_) => "dimension_zero",
            Error::TooLarge { .. } => "too_large",
            Error::TooFewLevels(_) => "too_few_levels",
            Error::SymmetryBroken(_) => "symmetry_broken",
            Error::Config(_) => "config",
            Error::ClaimFailed(_) => "claim_failed",
        }
    }
}
