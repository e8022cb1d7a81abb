use thiserror::Error;

/// Whether a failure is a malformed request or a violated mathematical hypothesis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Shapes, lengths or encodings do not fit together.
    Validation,
    /// The input is well formed but a hypothesis of the computation fails.
    Precondition,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found} ({context})")]
    Dimension {
        expected: usize,
        found: usize,
        context: &'static str,
    },
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("gram matrix is not symmetric")]
    NotSymmetric,
    #[error("quadratic form is not positive definite")]
    NotPositiveDefinite,
    #[error("gram matrix is degenerate")]
    Degenerate,
    #[error("basis rows are linearly dependent")]
    DependentBasis,
    #[error("vector is zero")]
    ZeroVector,
    #[error("vector is not integral in the lattice")]
    NotIntegral,
    #[error("vector is not primitive (content {0})")]
    NotPrimitive(String),
    #[error("rank of the Mukai vector is zero")]
    ZeroRank,
    #[error("rank must be positive")]
    NonPositiveRank,
    #[error("rank {rank} is not divisible by the Brauer order {order}")]
    RankNotDivisible { rank: String, order: String },
    #[error("polarization {0} does not have positive square")]
    NotPositive(&'static str),
    #[error("polarizations H0 and H1 do not pair positively")]
    OppositeCones,
    #[error("polarization is not general: it lies on {0} wall(s)")]
    NotGeneral(usize),
    #[error("the class of the twisted sheaf is not algebraic")]
    NotAlgebraic,
    #[error("v is not a Mukai vector for this B-field and Neron-Severi lattice")]
    NotMukaiVector,
    #[error("self-pairing {0} is negative")]
    NegativeSquare(String),
    #[error("self-pairing {0} is odd in an even lattice")]
    OddSquare(String),
    #[error("vector is not isotropic (square {0})")]
    NotIsotropic(String),
    #[error("leading Hilbert coefficient must be positive")]
    NonPositiveLeading,
    #[error("first sheaf has larger dimension than the second")]
    DimensionOrder,
    #[error("inconsistent decomposition: (v1 - vF1)/l1 differs from (v2 - vF2)/l2")]
    InconsistentDecomposition,
    #[error("residue depends on the chosen lift; the lattice must be even")]
    LiftDependent,
    #[error("witness does not satisfy r'xi - r xi' = L + r r' N with L in NS")]
    InvalidWitness,
    #[error("matrix does not intertwine the gram matrices")]
    NotIsometry,
    #[error("lattices do not match for composition")]
    LatticeMismatch,
    #[error("internal identity check failed: {0}")]
    Identity(&'static str),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Dimension { .. } | Error::Malformed(_) | Error::NotSymmetric => {
                ErrorKind::Validation
            }
            _ => ErrorKind::Precondition,
        }
    }

    /// Stable snake-case identifier.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Dimension { .. } => "dimension_mismatch",
            Error::Malformed(_) => "malformed",
            Error::NotSymmetric => "not_symmetric",
            Error::NotPositiveDefinite => "not_positive_definite",
            Error::Degenerate => "degenerate",
            Error::DependentBasis => "dependent_basis",
            Error::ZeroVector => "zero_vector",
            Error::NotIntegral => "not_integral",
            Error::NotPrimitive(_) => "not_primitive",
            Error::ZeroRank => "zero_rank",
            Error::NonPositiveRank => "non_positive_rank",
            Error::RankNotDivisible { .. } => "rank_not_divisible",
            Error::NotPositive(_) => "not_positive",
            Error::OppositeCones => "opposite_cones",
            Error::NotGeneral(_) => "not_general",
            Error::NotAlgebraic => "not_algebraic",
            Error::NotMukaiVector => "not_mukai_vector",
            Error::NegativeSquare(_) => "negative_square",
            Error::OddSquare(_) => "odd_square",
            Error::NotIsotropic(_) => "not_isotropic",
            Error::NonPositiveLeading => "non_positive_leading",
            Error::DimensionOrder => "dimension_order",
            Error::InconsistentDecomposition => "inconsistent_decomposition",
            Error::LiftDependent => "lift_dependent",
            Error::InvalidWitness => "invalid_witness",
            Error::NotIsometry => "not_isometry",
            Error::LatticeMismatch => "lattice_mismatch",
            Error::Identity(_) => "identity_failed",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_len(expected: usize, found: usize, context: &'static str) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::Dimension {
            expected,
            found,
            context,
        })
    }
}
