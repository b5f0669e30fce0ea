use crate::Int;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("generators {gens:?} have gcd {gcd}, they do not generate a numerical semigroup")]
    NotNumerical { gens: Vec<Int>, gcd: Int },

    #[error("{0} is not an element of the semigroup")]
    NotElement(Int),

    #[error("invalid range: {0}")]
    InvalidRange(String),

    #[error("base {m} is below 2c-1 = {min}")]
    BaseTooSmall { m: Int, min: Int },

    #[error("search space of {size} candidate subsets exceeds the cap of {cap}")]
    SearchSpaceTooLarge { size: u128, cap: u64 },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("configuration {0:?} is not amenable")]
    NotAmenable(Vec<Int>),

    #[error("no ordered amenable set of cardinality {r} exists for <{a}..{}>", a + b)]
    NoOrderedAmenable { a: Int, b: Int, r: Int },

    #[error("arithmetic overflow")]
    Overflow,
}
