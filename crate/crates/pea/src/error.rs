use crate::algebra::{Elem, ValidationReport};

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong across the crate.
///
/// Witness-carrying variants keep concrete element indices so a failure can be
/// replayed against the offending table.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("table is not a pseudo effect algebra: {}", .0.first_failure())]
    AxiomFailure(Box<ValidationReport>),

    #[error("induced order is not antisymmetric: {a} <= {b} <= {a} with {a} != {b}")]
    AntisymmetryViolation { a: Elem, b: Elem },

    #[error("cancellativity fails: two differences produce {sum} from {fixed}")]
    CancellativityViolation { fixed: Elem, sum: Elem },

    #[error("Riesz implication chain violated: {0}")]
    InconsistentHierarchy(String),

    #[error("operation requires the Riesz decomposition property, which this algebra fails")]
    RdpRequired,

    #[error("map does not vanish at zero")]
    NonzeroAtZero,

    #[error("map is not subadditive at ({x}, {y})")]
    NotSubadditive { x: Elem, y: Elem },

    #[error("values are not additive at ({a}, {b})")]
    NotAdditive { a: Elem, b: Elem },

    #[error("expected {expected} values, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("total variation differs from positive+negative part at element {at}: {variation} vs {jordan}")]
    VariationMismatch {
        at: Elem,
        variation: String,
        jordan: String,
    },

    #[error("orthogonality conditions disagree: {0}")]
    EquivalenceViolation(String),

    #[error("measure is not positive")]
    NotPositive,

    #[error("interval unit vanishes at the top element")]
    ZeroUnit,

    #[error("measure lies outside the interval [0, m]")]
    OutsideInterval,

    #[error("state space is empty")]
    EmptyPolytope,

    #[error("not a state: {0}")]
    NotAState(String),

    #[error("state space is not a simplex")]
    NotASimplex,

    #[error("linear program is infeasible")]
    Infeasible,

    #[error("linear program is unbounded")]
    Unbounded,

    #[error("group interval is infinite: {0}")]
    InfiniteInterval(String),

    #[error("invalid construction parameters: {0}")]
    InvalidSpec(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}
