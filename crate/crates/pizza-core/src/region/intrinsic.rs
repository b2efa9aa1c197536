//! Intrinsic volume vectors for the cases the identities need: rectangular
//! boxes in any dimension (closed and half-open) and arbitrary compact
//! convex polygons in the plane.

use crate::algebra::{rat_from_i64, AlgebraicNumber, Field};

use super::hull2d::{convex_hull_2d, shoelace_area};
use super::surd::SurdSum;
use super::{region_vertices, HalfOpenRegion, RegionError};

/// (V0, V1, ..., Vn) with V0 = chi_c as an integer and the rest as exact
/// surd sums.
#[derive(Clone, Debug)]
pub struct ValuationVector {
    pub chi: i64,
    pub intrinsic: Vec<SurdSum>,
}

impl ValuationVector {
    pub fn zero(n: usize) -> Self {
        Self { chi: 0, intrinsic: vec![SurdSum::zero(); n] }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.intrinsic.len(), other.intrinsic.len());
        Self {
            chi: self.chi + other.chi,
            intrinsic: self
                .intrinsic
                .iter()
                .zip(&other.intrinsic)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            chi: -self.chi,
            intrinsic: self.intrinsic.iter().map(SurdSum::neg).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn eq(&self, other: &Self) -> Result<bool, RegionError> {
        if self.chi != other.chi {
            return Ok(false);
        }
        for (a, b) in self.intrinsic.iter().zip(&other.intrinsic) {
            if !a.eq(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_zero(&self) -> Result<bool, RegionError> {
        if self.chi != 0 {
            return Ok(false);
        }
        for v in &self.intrinsic {
            if !v.is_zero()? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Intrinsic volumes of a rectangular box with the given edge lengths,
/// embedded in ambient dimension `ambient`: the closed box has
/// V_j = e_j(edges) (elementary symmetric); the half-open box has all
/// intrinsic volumes zero except the top one, the product of the edges.
pub fn box_intrinsic_vector(
    field: &Field,
    edges: &[AlgebraicNumber],
    halfopen: bool,
    ambient: usize,
) -> ValuationVector {
    let k = edges.len();
    assert!(k <= ambient, "box rank exceeds ambient dimension");
    for e in edges {
        assert!(e.sign() >= 0, "edge lengths must be nonnegative");
    }
    let mut intrinsic = vec![SurdSum::zero(); ambient];
    if halfopen {
        if edges.iter().any(AlgebraicNumber::is_zero) {
            return ValuationVector::zero(ambient);
        }
        let mut prod = AlgebraicNumber::one(field);
        for e in edges {
            prod = &prod * e;
        }
        if k >= 1 {
            intrinsic[k - 1] = SurdSum::from_elem(&prod);
        }
        let chi = if k == 0 { 1 } else { 0 };
        return ValuationVector { chi, intrinsic };
    }
    // elementary symmetric polynomials by the running-product recurrence
    let mut sym = vec![AlgebraicNumber::zero(field); k + 1];
    sym[0] = AlgebraicNumber::one(field);
    for e in edges {
        for j in (1..=k).rev() {
            let add = &sym[j - 1] * e;
            sym[j] += &add;
        }
    }
    for j in 1..=k {
        intrinsic[j - 1] = SurdSum::from_elem(&sym[j]);
    }
    ValuationVector { chi: 1, intrinsic }
}

/// Exact (V0, V1, V2) of a compact convex region in the plane, computed on
/// the closure: chi = 1, V1 = half the perimeter (a surd sum), V2 = area.
/// Degenerate regions (segments, points) are handled; empty input gives the
/// zero vector.
pub fn intrinsic_vector_2d(region: &HalfOpenRegion) -> Result<ValuationVector, RegionError> {
    if region.dim != 2 {
        return Err(RegionError::DimensionMismatch(region.dim, 2));
    }
    if region.is_empty() {
        return Ok(ValuationVector::zero(2));
    }
    if !region.is_bounded() {
        return Err(RegionError::Unbounded);
    }
    let verts = region_vertices(region, false)?;
    let hull = convex_hull_2d(&verts);
    let field = verts[0].field().clone();
    match hull.len() {
        0 => Ok(ValuationVector::zero(2)),
        1 => Ok(ValuationVector {
            chi: 1,
            intrinsic: vec![SurdSum::zero(), SurdSum::zero()],
        }),
        2 => {
            let d = hull[1].sub(&hull[0]);
            let len_sq = d.norm_sq();
            Ok(ValuationVector {
                chi: 1,
                intrinsic: vec![SurdSum::sqrt(&len_sq), SurdSum::zero()],
            })
        }
        _ => {
            let mut half_perimeter = SurdSum::zero();
            let half = AlgebraicNumber::from_rational(&field, rat_from_i64(1, 2));
            for i in 0..hull.len() {
                let d = hull[(i + 1) % hull.len()].sub(&hull[i]);
                half_perimeter = half_perimeter.add(&SurdSum::sqrt(&d.norm_sq()).scale(&half));
            }
            let area = shoelace_area(&hull);
            Ok(ValuationVector {
                chi: 1,
                intrinsic: vec![half_perimeter, SurdSum::from_elem(&area)],
            })
        }
    }
}
