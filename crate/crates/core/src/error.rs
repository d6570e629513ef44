use thiserror::Error;

use crate::rational::Fraction;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("0/0 is not a fraction")]
    ZeroOverZero,
    #[error("negative input {p}/{q}")]
    NegativeInput { p: i64, q: i64 },
    #[error("{left} and {right} are not Farey neighbors")]
    NotNeighbors { left: Fraction, right: Fraction },
    #[error("{0} has no Farey parents")]
    NoParents(Fraction),
    #[error("1/0 has no continued fraction expansion")]
    InfiniteInput,
    #[error("{0} is not in the open interval (0,1)")]
    OutOfRange(Fraction),
    #[error("cannot combine polynomials in different variables")]
    VariableMismatch,
    #[error("exponent A^{0} is odd and has no image in t^(1/2)")]
    OddExponent(i64),
    #[error("{0} gives a knot, not a two-component link")]
    NotTwoComponent(Fraction),
    #[error("state sum over {0} crossings exceeds the limit of {max}", max = crate::oracle::MAX_STATE_SUM_CROSSINGS)]
    TooManyCrossings(usize),
    #[error("{0} is not positive")]
    NonPositive(Fraction),
    #[error("invalid denominator {0}, expected q >= 2")]
    InvalidQ(u64),
    #[error("continued fraction terms must be positive")]
    NonPositiveTerm,
    #[error("continued fraction has a negative value")]
    NegativeValue,
    #[error("integer overflow")]
    Overflow,
    #[error("invalid letter {0:?} in LR word")]
    InvalidLetter(char),
    #[error("cannot parse {0:?} as p/q")]
    Parse(String),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("{0}")]
    Internal(String),
    #[error("only monomials can be raised to negative powers")]
    NotInvertible,
    #[error("the two Jones computations disagree for {0}")]
    PathMismatch(Fraction),
    #[error("diamond rule fails at row {row}, column {col}: {detail}")]
    DiamondRule { row: usize, col: i64, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
