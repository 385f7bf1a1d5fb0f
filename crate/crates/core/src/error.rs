use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("a polynomial needs at least one variable")]
    NoVariables,
    #[error("exponent vector has {found} entries, expected {expected}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("operation is only defined for two variables, got {0}")]
    UnsupportedArity(usize),
    #[error("polynomial is not in H: {0}")]
    NotInH(String),
    #[error("malformed polynomial JSON: {0}")]
    Parse(String),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PellError {
    #[error("lambda = {0} must be a non-square integer >= 2")]
    InvalidLambda(String),
    #[error("solution index must be >= 1")]
    InvalidIndex,
    #[error("D = {0} must be a positive non-square integer")]
    InvalidDiscriminant(String),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("degree must be >= 1, got {0}")]
    InvalidDegree(i64),
    #[error("K(r, s) needs 1 <= s <= r, got r = {r}, s = {s}")]
    OutOfRange { r: u64, s: u64 },
    #[error("family k must be >= 1")]
    InvalidK,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("degree {0} must be odd")]
    EvenDegree(u64),
    #[error("degree {0} has no consecutive coefficient pair with ratio 2")]
    NoRatioTwoSite(u64),
    #[error("h_m needs m >= 2, got {0}")]
    InvalidM(u64),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("(r, s) = ({r}, {s}) is not a ratio-4 site")]
    InvalidSite { r: u64, s: u64 },
    #[error("construction invariant violated: {0}")]
    InvariantViolated(String),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error("invalid support: {0}")]
    InvalidSupport(String),
    #[error("term count must be >= 2, got {0}")]
    InvalidTermCount(usize),
    #[error("search budget exhausted before a sharp polynomial was found")]
    BudgetExceeded,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GapError {
    #[error("frobenius number needs coprime inputs, got ({0}, {1})")]
    NotCoprime(u64, u64),
    #[error("polynomial has no pure monomial in the last variable")]
    NoPureTerm,
    #[error("input is not in H")]
    NotInH,
    #[error("dimension must be >= 1")]
    InvalidDimension,
    #[error("N = {big_n} is below T({n}) and N - n is not a nonnegative combination of {n} - 1 and {n}")]
    NotRepresentable { n: u64, big_n: u64 },
    #[error("unknown signature recipe '{0}'")]
    UnknownRecipe(String),
    #[error("recipe parameter error: {0}")]
    BadParameter(String),
}
