use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("divisor constant term is not a nonzero scalar")]
    NonUnitConstantTerm,
    #[error("constant term not allowed for log (must be 1) or exp (must be 0)")]
    BadConstantTerm,
    #[error("division leaves a nonzero remainder")]
    InexactDivision,
    #[error("invalid height {0}")]
    InvalidHeight(i64),
    #[error("height {k} exceeds the direct-determinant guard {max}")]
    HeightTooLarge { k: usize, max: usize },
    #[error("{what} exceeds guard ({value} > {max})")]
    GuardExceeded {
        what: &'static str,
        value: usize,
        max: usize,
    },
    #[error("heights m={m}, n={n} out of range for ceiling {k}")]
    SpecOutOfRange { k: usize, m: usize, n: usize },
    #[error("no path of length {l} from {m} to {n} under ceiling {k}")]
    Unreachable { k: usize, m: usize, n: usize, l: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
