//! Exact computational geometry over real cyclotomic fields, built to verify
//! signed chamber sums ("pizza quantities") of Coxeter hyperplane arrangements
//! and to emit machine-checkable dissection certificates for the dihedral
//! cancellations behind them.
//!
//! The crate is organized by subsystem:
//!
//! - [`algebra`]: arithmetic in Q(2cos(pi/N)) with exact sign determination,
//!   plus dense exact linear algebra.
//! - [`roots`]: normalized pseudo-root systems, positive systems, and the
//!   associated hyperplane arrangements.
//! - [`coxeter`]: finite reflection group enumeration, chambers and signs.
//! - [`twostruct`]: 2-structures, their orbit enumeration and sign assignment.
//! - [`region`]: convex regions with per-facet strict/weak flags, exact
//!   volume, Euler characteristic with compact support, intrinsic volumes.
//! - [`engine`]: pizza sums under valuations (exact and Monte Carlo), the
//!   2-structure expansion checks, and the alternating product polynomial.
//! - [`dihedral`]: the explicit dissection certificates for I2(2m)
//!   arrangements (outer cancellation, the inner polygon dissection, product
//!   reduction, share splitting).
//! - [`scissors`]: translation-based rectangle/parallelogram dissections and
//!   the (V0,...,Vn) classification of box classes.
//!
//! All geometry is exact; floating point appears only in Monte Carlo paths
//! and in diagnostics.

pub mod algebra;
pub mod coxeter;
// pub mod dihedral;
// pub mod engine;
pub mod exec;
pub mod region;
pub mod roots;
// pub mod scissors;
pub mod twostruct;

pub use algebra::{AlgebraicNumber, FieldSpec, FMatrix, FVector};
