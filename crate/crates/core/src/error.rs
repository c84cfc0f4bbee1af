use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported series `{0}`: only A, B, C, D and G2 are available (E and F series are rejected, their Weyl groups are too large for exhaustive enumeration)")]
    UnsupportedSeries(String),
    #[error("invalid rank {rank} for series {series}")]
    InvalidRank { series: String, rank: usize },
    #[error("{0} is not a root of the parent system")]
    NotARoot(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("zero vector used as a root")]
    ZeroRoot,
    #[error("Weyl group has more than {limit} elements")]
    GroupTooLarge { limit: usize },
    #[error("subsystem does not live inside the parent system")]
    NotASubsystem,
    #[error("weight {weight} is not dominant for {system}")]
    NotDominant { weight: String, system: String },
    #[error("weight {weight} is not integral for {system}")]
    NotIntegral { weight: String, system: String },
    #[error("virtual character is not Weyl-invariant at weight {0}")]
    NotWInvariant(String),
    #[error("virtual character cannot be peeled into irreducible characters at weight {0}")]
    NonIntegralPeel(String),
    #[error("subsystem is not closed under addition inside the parent: {0}")]
    ClosureViolation(String),
    #[error("complement has no positive roots (eta equals g)")]
    EmptyComplement,
    #[error("no spectral line below the cutoff {0}")]
    CutoffBeforeFirstLine(String),
    #[error("scale must be positive, got {0}")]
    NonPositiveScale(String),
    #[error("Weyl element is not in the multiplet transversal")]
    NotInTransversal,
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),
}
