use thiserror::Error;

use crate::algebra::Card;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vectors from different spaces: F_{0}^{1} vs F_{2}^{3}")]
    MixedSpaces(u32, u32, u32, u32),
    #[error("coordinate {coord} out of range for modulus {p}")]
    InvalidCoordinate { coord: u32, p: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("unsupported plane order {0}: only prime orders are implemented")]
    UnsupportedOrder(u32),
    #[error("invalid card code {0}")]
    InvalidCode(u32),
    #[error("invalid card label {0:?}")]
    InvalidLabel(String),
    #[error("duplicate card {0}")]
    DuplicateCards(Card),
    #[error("the empty card (code 0) is not part of this deck")]
    ZeroCard,
    #[error("cards do not form a matched set")]
    NotAMatch,
    #[error("cards do not form a quad")]
    NotAQuad,
    #[error("{what} = {value} is out of range {range}")]
    OutOfRange {
        what: &'static str,
        value: i64,
        range: &'static str,
    },
    #[error("closed form is defined for odd sizes only, got {0}")]
    EvenIndex(u32),
    #[error("cards {0} and {1} share no symbol")]
    NoCommonSymbol(usize, usize),
    #[error("cards {0} and {1} share more than one symbol")]
    MultipleCommonSymbols(usize, usize),
    #[error("deck {0} is not a finite abelian group model")]
    UnsupportedDeck(String),
    #[error("search budget too small: no pile of size {0} found")]
    BudgetTooSmall(usize),
    #[error("the origin card {0} is part of the claimed set")]
    OriginInSet(Card),
    #[error("invalid game configuration: {0}")]
    InvalidConfig(String),
    #[error("game log does not replay: {0}")]
    InvalidLog(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn out_of_range(what: &'static str, value: impl TryInto<i64>, range: &'static str) -> Error {
    Error::OutOfRange {
        what,
        value: value.try_into().unwrap_or(i64::MAX),
        range,
    }
}
