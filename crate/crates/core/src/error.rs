use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element x{0} is not in the ground set")]
    UnknownElement(u32),

    #[error("invalid poset: {0}")]
    InvalidPoset(String),

    #[error("{what} has size {size}, above the limit of {limit}")]
    Capacity {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("invalid lattice diagram: {0}")]
    InvalidLattice(String),

    #[error("vertex {bottom} is not below vertex {top}; not an interval")]
    NotAnInterval { bottom: usize, top: usize },

    #[error("interval [{bottom}, {top}] is not a cutting: some maximal chain avoids it")]
    NotACutting { bottom: usize, top: usize },

    #[error("{family}: n = {n} is outside the formula domain n >= {min}")]
    Domain {
        family: &'static str,
        n: usize,
        min: usize,
    },

    #[error("{family} recurrence: n = {n} is below its validated range n >= {min}")]
    Range {
        family: &'static str,
        n: usize,
        min: usize,
    },

    #[error("generating function denominator must have constant term 1")]
    NonUnitDenominator,

    #[error("series expansion and binomial sum disagree at [x^{k}][y^{n}]")]
    RouteMismatch { n: usize, k: usize },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
