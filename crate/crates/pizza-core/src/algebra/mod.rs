//! Exact arithmetic over the real cyclotomic fields Q(2cos(pi/N)) and exact
//! dense linear algebra on top of it.

pub mod field;
pub mod interval;
pub mod linalg;
pub mod num;

pub use field::{field_degree, make_field, make_field_with_cap, Field, FieldSpec};
pub use interval::{Rat, RatInterval};
pub use linalg::{rank_of_rows, FMatrix, FVector};
pub use num::{embed_cos, embed_sin, parse_rat, rat_from_i64, sign_of, AlgebraicNumber};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("field index N={0} is not supported")]
    InvalidFieldIndex(u32),
    #[error("field Q(2cos(pi/{n})) has degree {degree}, above the cap {cap}")]
    DegreeCapExceeded { n: u32, degree: usize, cap: usize },
    #[error("{what} does not lie in Q(2cos(pi/{n}))")]
    NotInField { what: String, n: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is singular")]
    SingularMatrix,
}
