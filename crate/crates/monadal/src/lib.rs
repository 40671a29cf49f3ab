//! Exact construction and verification of Hopf monads over pointed fusion categories:
//! centralizers, canonical distributive laws, doubles with R-matrices, coends, and doubles
//! of Hopf algebras in braided categories.
//!
//! Every morphism is a sparse matrix of exact scalars, and every structural claim is
//! checked as an exact matrix equality.

pub mod braided_double;
pub mod centralizer;
pub mod hopfalg;
pub mod hopfmonad;
pub mod io;
pub mod linalg;
pub mod report;
pub mod scalars;
pub mod semicat;

pub use report::{Check, Report, Status};
pub use scalars::{FieldSpec, Scalar};
pub use semicat::{Category, Mor, Obj};

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("field mismatch between scalars")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("category is not braided")]
    NotBraided,
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("linear solve failed: {0}")]
    Solve(String),
    #[error("falsification: {0}")]
    Falsified(String),
    #[error("validation failed:\n{0}")]
    Validation(Box<Report>),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
