use thiserror::Error;

/// Errors raised by the series kernel, the verifiers and the file loaders.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series is not invertible: {0}")]
    NotInvertible(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("not a product of the form q^h prod (1 - q^n)^a_n: {0}")]
    NotAProduct(String),

    #[error("non-integer value {value} at {at}")]
    NonInteger { at: String, value: String },

    #[error("insufficient data for power {power}: {detail}")]
    InsufficientData { power: u32, detail: String },

    #[error("inconsistent system at bidegree (p^{p}, q^{q})")]
    Inconsistent { p: i64, q: i64 },

    #[error("not implemented: {0}")]
    NotImplemented(String),

    #[error("needs affine convention: {0}")]
    NeedsAffineConvention(String),

    #[error("matrix is not symmetric: a[{i}][{j}] = {aij} but a[{j}][{i}] = {aji}")]
    NonSymmetric {
        i: usize,
        j: usize,
        aij: String,
        aji: String,
    },

    #[error("division left a remainder: {0}")]
    Remainder(String),

    #[error("point not admissible: {0}")]
    NotAdmissible(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("out of range: {0}")]
    OutOfRange(String),
}

pub type Result<T> = std::result::Result<T, Error>;
