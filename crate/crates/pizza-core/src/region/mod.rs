//! Convex polyhedra with per-facet strict/weak flags: the computational
//! carrier for chamber pieces, half-open boxes, and dissection pieces.
//!
//! Emptiness, containment and region equality are decided exactly by
//! Fourier-Motzkin elimination over the field; volumes come from a pulling
//! triangulation on exactly enumerated vertices; the Euler characteristic
//! with compact support walks the face lattice honoring the strict flags.

mod euler;
mod fm;
mod hull2d;
mod intrinsic;
mod surd;
mod vertices;
mod volume;

pub use euler::euler_cs;
pub use hull2d::convex_hull_2d;
pub use intrinsic::{box_intrinsic_vector, intrinsic_vector_2d, ValuationVector};
pub use surd::SurdSum;
pub use vertices::region_vertices;
pub use volume::exact_volume;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraicNumber, FMatrix, FVector, Field};

#[derive(Debug, Error)]
pub enum RegionError {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("region is unbounded")]
    Unbounded,
    #[error("exact geometry is limited to dimension <= {max}, got {got}")]
    DimTooHigh { max: usize, got: usize },
    #[error("operation requires a nonempty region")]
    Empty,
    #[error("surd comparison undecided at maximum precision")]
    Undecided,
}

pub const MAX_EXACT_DIM: usize = 4;

/// One flagged half-space: (v, normal) >= offset, or > when strict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constraint {
    pub normal: FVector,
    pub offset: AlgebraicNumber,
    pub strict: bool,
}

impl Constraint {
    pub fn new(normal: FVector, offset: AlgebraicNumber, strict: bool) -> Self {
        Self { normal, offset, strict }
    }

    /// Satisfaction at a point, honoring the flag.
    pub fn holds_at(&self, p: &FVector) -> bool {
        let s = (&p.dot(&self.normal) - &self.offset).sign();
        if self.strict {
            s > 0
        } else {
            s >= 0
        }
    }

    pub fn is_active_at(&self, p: &FVector) -> bool {
        (&p.dot(&self.normal) - &self.offset).is_zero()
    }

    /// The complementary open/closed half-space.
    pub fn complement(&self) -> Self {
        Self {
            normal: self.normal.neg(),
            offset: -&self.offset,
            strict: !self.strict,
        }
    }

    /// Scale so the first nonzero normal coordinate has absolute value one;
    /// purely cosmetic plus dedup help, the region is unchanged.
    pub fn normalized(&self) -> Self {
        let Some(lead) = self.normal.coords.iter().find(|c| !c.is_zero()) else {
            return self.clone();
        };
        let scale = lead.abs().inv().expect("nonzero leading coefficient");
        Self {
            normal: self.normal.scale(&scale),
            offset: &self.offset * &scale,
            strict: self.strict,
        }
    }
}

/// Intersection of flagged half-spaces.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HalfOpenRegion {
    pub dim: usize,
    pub constraints: Vec<Constraint>,
}

impl HalfOpenRegion {
    pub fn whole_space(dim: usize) -> Self {
        Self { dim, constraints: Vec::new() }
    }

    pub fn from_constraints(dim: usize, constraints: Vec<Constraint>) -> Self {
        for c in &constraints {
            assert_eq!(c.normal.dim(), dim, "constraint dimension mismatch");
        }
        Self { dim, constraints }
    }

    /// Axis-aligned box given per-axis (lo, hi, lo_strict, hi_strict).
    pub fn axis_box(
        field: &Field,
        bounds: &[(AlgebraicNumber, AlgebraicNumber, bool, bool)],
    ) -> Self {
        let dim = bounds.len();
        let mut constraints = Vec::with_capacity(2 * dim);
        for (i, (lo, hi, lo_strict, hi_strict)) in bounds.iter().enumerate() {
            let e = FVector::basis(field, dim, i);
            constraints.push(Constraint::new(e.clone(), lo.clone(), *lo_strict));
            constraints.push(Constraint::new(e.neg(), -hi, *hi_strict));
        }
        Self { dim, constraints }
    }

    /// Closed box [lo_i, hi_i].
    pub fn closed_box(field: &Field, lo: &[AlgebraicNumber], hi: &[AlgebraicNumber]) -> Self {
        let bounds: Vec<_> = lo
            .iter()
            .zip(hi)
            .map(|(l, h)| (l.clone(), h.clone(), false, false))
            .collect();
        Self::axis_box(field, &bounds)
    }

    /// Convex polygon from counterclockwise-ordered vertices (2-D), closed.
    pub fn polygon(vertices: &[FVector]) -> Self {
        assert!(vertices.len() >= 3, "polygon needs at least 3 vertices");
        let field = vertices[0].field();
        let mut constraints = Vec::new();
        let n = vertices.len();
        for i in 0..n {
            let a = &vertices[i];
            let b = &vertices[(i + 1) % n];
            // inward normal of edge a->b for ccw order: (-(by-ay), bx-ax)
            let dx = &b.coords[0] - &a.coords[0];
            let dy = &b.coords[1] - &a.coords[1];
            let normal = FVector::new(vec![-&dy, dx.clone()]);
            let offset = normal.dot(a);
            let _ = field;
            constraints.push(Constraint::new(normal, offset, false));
        }
        Self { dim: 2, constraints }
    }

    pub fn field(&self) -> &Field {
        self.constraints
            .first()
            .map(|c| c.normal.field())
            .expect("region with no constraints has no field")
    }

    pub fn intersect(&self, other: &Self) -> Result<Self, RegionError> {
        if self.dim != other.dim {
            return Err(RegionError::DimensionMismatch(self.dim, other.dim));
        }
        let mut constraints = self.constraints.clone();
        constraints.extend(other.constraints.iter().cloned());
        Ok(Self { dim: self.dim, constraints })
    }

    pub fn is_empty(&self) -> bool {
        !fm::feasible(self.dim, &self.constraints)
    }

    pub fn contains_point(&self, p: &FVector) -> bool {
        self.constraints.iter().all(|c| c.holds_at(p))
    }

    /// Exact subset test: no point of self violates any constraint of other.
    pub fn subset_of(&self, other: &Self) -> bool {
        other.constraints.iter().all(|c| {
            let mut cs = self.constraints.clone();
            cs.push(c.complement());
            !fm::feasible(self.dim, &cs)
        })
    }

    /// Exact region equality (mutual containment), flags included.
    pub fn region_eq(&self, other: &Self) -> bool {
        self.subset_of(other) && other.subset_of(self)
    }

    pub fn translate(&self, t: &FVector) -> Self {
        Self {
            dim: self.dim,
            constraints: self
                .constraints
                .iter()
                .map(|c| Constraint {
                    normal: c.normal.clone(),
                    offset: &c.offset + &t.dot(&c.normal),
                    strict: c.strict,
                })
                .collect(),
        }
    }

    /// Image under an affine isometry x -> Mx + t with M orthogonal.
    pub fn apply_isometry(&self, linear: &FMatrix, t: &FVector) -> Self {
        Self {
            dim: self.dim,
            constraints: self
                .constraints
                .iter()
                .map(|c| {
                    let normal = linear.mul_vec(&c.normal);
                    let offset = &c.offset + &t.dot(&normal);
                    Constraint { normal, offset, strict: c.strict }
                })
                .collect(),
        }
    }

    /// Closure: all flags weak.
    pub fn closure(&self) -> Self {
        Self {
            dim: self.dim,
            constraints: self
                .constraints
                .iter()
                .map(|c| Constraint { strict: false, ..c.clone() })
                .collect(),
        }
    }

    /// Orthogonal product with another region on fresh coordinates.
    pub fn product(&self, other: &Self) -> Self {
        let field = self
            .constraints
            .first()
            .or(other.constraints.first())
            .map(|c| c.normal.field().clone())
            .expect("product of two unconstrained regions");
        let dim = self.dim + other.dim;
        let mut constraints = Vec::new();
        for c in &self.constraints {
            let mut coords = c.normal.coords.clone();
            coords.extend(vec![AlgebraicNumber::zero(&field); other.dim]);
            constraints.push(Constraint::new(
                FVector::new(coords),
                c.offset.clone(),
                c.strict,
            ));
        }
        for c in &other.constraints {
            let mut coords = vec![AlgebraicNumber::zero(&field); self.dim];
            coords.extend(c.normal.coords.clone());
            constraints.push(Constraint::new(
                FVector::new(coords),
                c.offset.clone(),
                c.strict,
            ));
        }
        Self { dim, constraints }
    }

    /// True iff the recession cone of the closure is {0}.
    pub fn is_bounded(&self) -> bool {
        if self.constraints.is_empty() {
            return self.dim == 0;
        }
        let field = self.field().clone();
        // unbounded iff some nonzero direction d satisfies (d, n_i) >= 0 for
        // all constraints; normalize by forcing some coordinate to +-1
        for axis in 0..self.dim {
            for sign in [1i64, -1] {
                let mut cs: Vec<Constraint> = self
                    .constraints
                    .iter()
                    .map(|c| Constraint {
                        normal: c.normal.clone(),
                        offset: AlgebraicNumber::zero(&field),
                        strict: false,
                    })
                    .collect();
                let mut e = FVector::zero(&field, self.dim);
                e.coords[axis] = AlgebraicNumber::from_integer(&field, sign);
                cs.push(Constraint::new(e, AlgebraicNumber::one(&field), false));
                if fm::feasible(self.dim, &cs) {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{make_field, rat_from_i64};

    fn f() -> Field {
        make_field(4).unwrap()
    }

    fn an(field: &Field, p: i64, q: i64) -> AlgebraicNumber {
        AlgebraicNumber::from_rational(field, rat_from_i64(p, q))
    }

    fn halfspace_x(field: &Field, dim: usize, offset: i64, strict: bool, flip: bool) -> Constraint {
        let e = FVector::basis(field, dim, 0);
        Constraint::new(
            if flip { e.neg() } else { e },
            an(field, offset, 1),
            strict,
        )
    }

    #[test]
    fn strict_vs_weak_emptiness() {
        let field = f();
        // {x > 0} and {x <= 0}: empty
        let r = HalfOpenRegion::from_constraints(
            1,
            vec![
                halfspace_x(&field, 1, 0, true, false),
                halfspace_x(&field, 1, 0, false, true),
            ],
        );
        assert!(r.is_empty());
        // {x >= 0} and {x <= 0}: the hyperplane, nonempty
        let r2 = HalfOpenRegion::from_constraints(
            1,
            vec![
                halfspace_x(&field, 1, 0, false, false),
                halfspace_x(&field, 1, 0, false, true),
            ],
        );
        assert!(!r2.is_empty());
    }

    #[test]
    fn box_membership_and_flags() {
        let field = f();
        // (0, 1] x (0, 2]
        let r = HalfOpenRegion::axis_box(
            &field,
            &[
                (an(&field, 0, 1), an(&field, 1, 1), true, false),
                (an(&field, 0, 1), an(&field, 2, 1), true, false),
            ],
        );
        let p = |x: (i64, i64), y: (i64, i64)| {
            FVector::new(vec![an(&field, x.0, x.1), an(&field, y.0, y.1)])
        };
        assert!(r.contains_point(&p((1, 1), (2, 1))));
        assert!(r.contains_point(&p((1, 2), (1, 3))));
        assert!(!r.contains_point(&p((0, 1), (1, 1))));
        assert!(!r.is_empty());
        assert!(r.is_bounded());
    }

    #[test]
    fn subset_and_equality_respect_flags() {
        let field = f();
        let open = HalfOpenRegion::axis_box(
            &field,
            &[(an(&field, 0, 1), an(&field, 1, 1), true, true)],
        );
        let closed = HalfOpenRegion::axis_box(
            &field,
            &[(an(&field, 0, 1), an(&field, 1, 1), false, false)],
        );
        assert!(open.subset_of(&closed));
        assert!(!closed.subset_of(&open));
        assert!(!open.region_eq(&closed));
        assert!(open.region_eq(&open.clone()));
        // translation by exact vector preserves equality with translated copy
        let t = FVector::new(vec![an(&field, 7, 3)]);
        let moved = open.translate(&t);
        assert!(!moved.region_eq(&open));
        let back = moved.translate(&t.neg());
        assert!(back.region_eq(&open));
    }

    #[test]
    fn unbounded_detection() {
        let field = f();
        let half = HalfOpenRegion::from_constraints(
            2,
            vec![Constraint::new(
                FVector::basis(&field, 2, 0),
                an(&field, 0, 1),
                false,
            )],
        );
        assert!(!half.is_bounded());
        let tri = HalfOpenRegion::polygon(&[
            FVector::new(vec![an(&field, 0, 1), an(&field, 0, 1)]),
            FVector::new(vec![an(&field, 1, 1), an(&field, 0, 1)]),
            FVector::new(vec![an(&field, 0, 1), an(&field, 1, 1)]),
        ]);
        assert!(tri.is_bounded());
        assert!(!tri.is_empty());
    }

    #[test]
    fn isometry_images() {
        let field = f();
        let tri = HalfOpenRegion::polygon(&[
            FVector::new(vec![an(&field, 0, 1), an(&field, 0, 1)]),
            FVector::new(vec![an(&field, 2, 1), an(&field, 0, 1)]),
            FVector::new(vec![an(&field, 0, 1), an(&field, 1, 1)]),
        ]);
        // rotate by pi/2: (x,y) -> (-y,x)
        let rot = FMatrix::from_rows(vec![
            vec![an(&field, 0, 1), an(&field, -1, 1)],
            vec![an(&field, 1, 1), an(&field, 0, 1)],
        ]);
        let t = FVector::new(vec![an(&field, 5, 1), an(&field, 0, 1)]);
        let img = tri.apply_isometry(&rot, &t);
        // image contains rot*(1,0)+t = (5,1) boundary and rot*(1/2,1/4)+t
        assert!(img.contains_point(&FVector::new(vec![an(&field, 5, 1), an(&field, 1, 1)])));
        assert!(img.contains_point(&FVector::new(vec![
            an(&field, 5, 1) - an(&field, 1, 4),
            an(&field, 1, 2)
        ])));
        // round trip
        let rot_inv = rot.transpose();
        let back = img.translate(&t.neg()).apply_isometry(&rot_inv, &FVector::zero(&field, 2));
        assert!(back.region_eq(&tri));
    }

    #[test]
    fn product_regions() {
        let field = f();
        let seg = HalfOpenRegion::axis_box(
            &field,
            &[(an(&field, 0, 1), an(&field, 1, 1), true, false)],
        );
        let sq = seg.product(&seg);
        assert_eq!(sq.dim, 2);
        assert!(sq.contains_point(&FVector::new(vec![an(&field, 1, 1), an(&field, 1, 2)])));
        assert!(!sq.contains_point(&FVector::new(vec![an(&field, 0, 1), an(&field, 1, 2)])));
    }
}
