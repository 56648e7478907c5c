use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("element index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("malformed table: {0}")]
    BadTable(String),

    #[error("table is not a Latin square: {0}")]
    NotLatin(String),

    #[error("table has no identity element")]
    NoIdentity,

    #[error("associativity fails for triple ({a}, {b}, {c}): ({a}*{b})*{c} = {left} but {a}*({b}*{c}) = {right}")]
    NotAssociative {
        a: usize,
        b: usize,
        c: usize,
        left: usize,
        right: usize,
    },

    #[error("group order {order} exceeds the order cap {cap}")]
    OrderCap { order: usize, cap: usize },

    #[error("invalid action: {0}")]
    InvalidAction(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("subgroup is not contained in the ambient subgroup")]
    NotContained,

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("set is not a subgroup")]
    NotSubgroup,

    #[error("{p} is not a prime dividing {n}")]
    PrimeNotDividing { p: usize, n: usize },

    #[error("graph is not strongly connected")]
    NotStronglyConnected,

    #[error("unknown vertex {0}")]
    UnknownVertex(usize),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
