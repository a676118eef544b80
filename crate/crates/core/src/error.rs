use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: u64, degree: usize },

    #[error("cycle notation error: {0}")]
    CycleSyntax(String),

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("empty generator list")]
    EmptyGenerators,

    #[error("generation cap exceeded: group has more than {cap} elements")]
    CapExceeded { cap: usize },

    #[error("element does not belong to the group")]
    NotInGroup,

    #[error("subgroup does not belong to this parent group")]
    NotInParent,

    #[error("element does not normalize the subgroup")]
    DoesNotNormalize,

    #[error("group is not soluble")]
    NotSoluble,

    #[error("group is not perfect")]
    NotPerfect,

    #[error("word syntax error at byte {position}: {message}")]
    WordSyntax { position: usize, message: String },

    #[error("variable `{name}` is not assigned")]
    UnassignedVariable { name: String },

    #[error("word is not a simple commutator word")]
    NotSimpleWord,

    #[error(
        "enumeration budget exceeded: {required} evaluations required, budget is {budget}"
    )]
    BudgetExceeded { required: u128, budget: u64 },

    #[error("precondition not met: {0}")]
    Precondition(String),

    #[error("no witness found: {0}")]
    NoWitness(String),

    #[error("check falsified: {0}")]
    Falsified(String),

    #[error("unsupported parameter: {0}")]
    UnsupportedParameter(String),

    #[error("group file error at line {line}: {message}")]
    FileFormat { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
