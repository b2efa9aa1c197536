//! Evaluation of the signed chamber sum P(H, K+a) under valuations, the
//! 2-structure expansion checks, and the alternating product polynomial.

mod body;
mod expansion;
mod fpoly;
mod mc;
mod pizza;

pub use body::Body;
pub use expansion::{expansion_check_pointwise, expansion_check_valuation, sub_arrangement_sum};
pub use fpoly::{f_polynomial, MultiPoly};
pub use mc::{pizza_sum_mc, McEstimate};
pub use pizza::{a1n_closed_form, check_hypotheses, pizza_sum_exact, ExactValue, Valuation};

use thiserror::Error;

use crate::algebra::AlgebraicNumber;
use crate::region::{euler_cs, exact_volume, HalfOpenRegion, RegionError};

#[derive(Debug, Error)]
pub enum EngineError {
    #[error("the group does not contain -id, so the vanishing theorem does not apply")]
    MinusIdMissing,
    #[error("hypothesis violated: the orbit point w(a) = {point} lies outside the body")]
    HypothesisViolation { point: String },
    #[error("unsupported body for this operation: {0}")]
    UnsupportedBody(String),
    #[error("unsupported method/body combination: {0}")]
    UnsupportedMethod(String),
    #[error("point lies on the hyperplane of root #{root}")]
    OnWall { root: usize },
    #[error("inapplicable: 2-structures contain a dihedral component ({0}); the product polynomial exists only in the A1^n case")]
    Inapplicable(String),
    #[error("arrangement type is not A1^n: {0}")]
    NotA1Power(String),
    #[error(transparent)]
    Region(#[from] RegionError),
    #[error(transparent)]
    Coxeter(#[from] crate::coxeter::CoxeterError),
    #[error(transparent)]
    TwoStruct(#[from] crate::twostruct::TwoStructError),
}

/// A formal signed list of flagged regions, the computational surrogate for
/// an element of the dissection group presented as a sum of classes.
#[derive(Clone, Debug)]
pub struct SignedRegionList {
    pub terms: Vec<SignedTerm>,
}

#[derive(Clone, Debug)]
pub struct SignedTerm {
    pub sign: i8,
    pub region: HalfOpenRegion,
    pub provenance: String,
}

impl SignedRegionList {
    pub fn new() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn push(&mut self, sign: i8, region: HalfOpenRegion, provenance: impl Into<String>) {
        self.terms.push(SignedTerm {
            sign,
            region,
            provenance: provenance.into(),
        });
    }

    /// Signed exact volume of the whole list.
    pub fn total_volume(&self) -> Result<AlgebraicNumber, RegionError> {
        let mut acc: Option<AlgebraicNumber> = None;
        for t in &self.terms {
            let v = exact_volume(&t.region)?;
            let signed = if t.sign < 0 { -&v } else { v };
            acc = Some(match acc {
                None => signed,
                Some(a) => &a + &signed,
            });
        }
        Ok(acc.expect("empty signed region list"))
    }

    /// Signed Euler characteristic with compact support.
    pub fn total_chi(&self) -> Result<i64, RegionError> {
        let mut acc = 0i64;
        for t in &self.terms {
            acc += t.sign as i64 * euler_cs(&t.region)?;
        }
        Ok(acc)
    }
}

impl Default for SignedRegionList {
    fn default() -> Self {
        Self::new()
    }
}
