use thiserror::Error;

use crate::dataset::Condition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{x} is not invertible modulo {modulus}")]
    NotInvertible { x: i64, modulus: i64 },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("invalid data set: violates {}", fmt_conditions(.0))]
    InvalidDataSet(Vec<Condition>),

    #[error("data sets have different types")]
    TypeMismatch,

    #[error("unconstructible: {0}")]
    Unconstructible(String),

    #[error("dimension mismatch: {left} vs {right}")]
    DimMismatch { left: usize, right: usize },

    #[error("search cap exceeded: dimension {dim} > {cap}")]
    SearchCapExceeded { dim: usize, cap: usize },
}

fn fmt_conditions(conds: &[Condition]) -> String {
    conds
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

pub type Result<T> = std::result::Result<T, Error>;
