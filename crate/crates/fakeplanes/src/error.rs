use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a solution of the equation with a = {a}: {triple}")]
    NotASolution { a: u64, triple: String },
    #[error("triple is not ascendingly sorted: {0}")]
    Unsorted(String),
    #[error("invalid equation parameter a = {0}")]
    InvalidParameter(u64),
    #[error("invalid generator matrix: {0}")]
    InvalidGenerator(String),
    #[error("invalid degree matrix: {0}")]
    InvalidDegreeMatrix(String),
    #[error("degree is not integral: {0}")]
    NonIntegralDegree(String),
    #[error("degree matrix is not adjusted")]
    NotAdjusted,
    #[error("fixed point {0} is not a T-singularity")]
    NotTSingular(usize),
    #[error("no adjacency partner: {0}")]
    NoPartner(String),
    #[error("invalid K*-surface data: {0}")]
    InvalidKStar(String),
    #[error("collinear cone generators")]
    Collinear,
    #[error("gcd condition violated: {0}")]
    Gcd(String),
    #[error("integer overflow")]
    Overflow,
    #[error("node limit of {0} exceeded")]
    NodeLimit(usize),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
