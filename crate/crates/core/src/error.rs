use thiserror::Error;

/// Errors produced by group construction and the derived-phase machinery.
#[derive(Debug, Error)]
pub enum Error {
    #[error("multiplication table is not associative: ({0} * {1}) * {2} != {0} * ({1} * {2})")]
    NotAssociative(usize, usize, usize),
    #[error("multiplication table is malformed: {0}")]
    MalformedTable(String),
    #[error("no identity element found in multiplication table")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("generator {0:?} is not a permutation")]
    NotAPermutation(Vec<usize>),
    #[error("group order {order} exceeds cap {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("unknown preset '{0}'")]
    UnknownPreset(String),
    #[error("element labels are not unique: '{0}' repeats")]
    DuplicateLabel(String),
    #[error("invalid group spec: {0}")]
    InvalidSpec(String),
    #[error("subgroup is not closed: {0} * {1} lies outside")]
    SubgroupNotClosed(usize, usize),
    #[error("{0} is not a subgroup element set of its parent")]
    NotASubgroup(String),
    #[error("subgroup N is not normal in M")]
    NotNormal,
    #[error("character table diagonalization failed after {retries} retries (residual {residual:.3e})")]
    CharTableFailed { retries: usize, residual: f64 },
    #[error("class function decomposition produced non-integer multiplicity {value} for '{name}' (residual {residual:.3e})")]
    NonIntegerMultiplicity {
        name: String,
        value: f64,
        residual: f64,
    },
    #[error("class function decomposition produced negative multiplicity {value} for '{name}'")]
    NegativeMultiplicity { name: String, value: f64 },
    #[error("function is not a class function of the double (deviation {0:.3e})")]
    NotAClassFunction(f64),
    #[error("modular data inconsistent: {0}")]
    ModularInconsistent(String),
    #[error("fusion coefficient N[{a}][{b}][{c}] = {value} is not a nonnegative integer")]
    BadFusionCoefficient {
        a: usize,
        b: usize,
        c: usize,
        value: f64,
    },
    #[error("quotient sizes differ: |M/N| = {0} but |M'/N'| = {1}")]
    QuotientSizeMismatch(usize, usize),
    #[error("matrix shapes incompatible: {0}x{1} vs {2}x{3}")]
    ShapeMismatch(usize, usize, usize, usize),
    #[error("tunneling map computed with and without the N-cap quotient disagree at ({0}, {1})")]
    QuotientPathDisagreement(usize, usize),
    #[error("transition is not legal (overlap matrix M^T M is not proportional to the identity)")]
    IllegalTransition,
    #[error("schedule length must be at least 2")]
    ScheduleTooShort,
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
