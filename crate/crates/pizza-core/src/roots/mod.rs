//! Normalized pseudo-root systems, positive systems, and Coxeter hyperplane
//! arrangements in standard coordinates.

mod builders;
mod parser;

pub use parser::{parse_type, TypeExpr};

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{
    make_field, rank_of_rows, rat_from_i64, AlgebraError, AlgebraicNumber, FMatrix, FVector, Field,
};

#[derive(Debug, Error)]
pub enum RootsError {
    #[error("type parse error: {0}")]
    Parse(String),
    #[error("unsupported type {0} (construction-only types cannot be used here)")]
    Unsupported(String),
    #[error("order vector is orthogonal to root #{root_index}: {root}")]
    DegenerateFunctional { root_index: usize, root: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A finite set of unit vectors closed under reflection in each member's
/// hyperplane (and therefore under negation).
#[derive(Clone)]
pub struct PseudoRootSystem {
    field: Field,
    ambient_dim: usize,
    roots: Vec<FVector>,
    index: HashMap<Vec<u8>, usize>,
    rank: usize,
    type_label: TypeExpr,
    construction_only: bool,
}

impl std::fmt::Debug for PseudoRootSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PseudoRootSystem")
            .field("type", &self.type_label.to_string())
            .field("ambient_dim", &self.ambient_dim)
            .field("num_roots", &self.roots.len())
            .field("rank", &self.rank)
            .finish()
    }
}

impl PseudoRootSystem {
    pub(crate) fn from_roots(
        field: Field,
        ambient_dim: usize,
        roots: Vec<FVector>,
        type_label: TypeExpr,
        construction_only: bool,
    ) -> Self {
        let mut roots = roots;
        // canonical deterministic order
        let mut keyed: Vec<(Vec<u8>, FVector)> = roots
            .drain(..)
            .map(|r| (r.canonical_bytes(), r))
            .collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        keyed.dedup_by(|a, b| a.0 == b.0);
        let roots: Vec<FVector> = keyed.into_iter().map(|(_, r)| r).collect();
        let index = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.canonical_bytes(), i))
            .collect();
        let rank = rank_of_rows(&roots);
        Self {
            field,
            ambient_dim,
            roots,
            index,
            rank,
            type_label,
            construction_only,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn roots(&self) -> &[FVector] {
        &self.roots
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn type_label(&self) -> &TypeExpr {
        &self.type_label
    }

    pub fn is_construction_only(&self) -> bool {
        self.construction_only
    }

    pub fn find_root(&self, v: &FVector) -> Option<usize> {
        self.index.get(&v.canonical_bytes()).copied()
    }

    /// Reflection of `v` in the hyperplane normal to root `i`.
    pub fn reflect_vec(&self, i: usize, v: &FVector) -> FVector {
        let alpha = &self.roots[i];
        let two = AlgebraicNumber::from_integer(&self.field, 2);
        let coeff = &two * &v.dot(alpha);
        v.sub(&alpha.scale(&coeff))
    }

    pub fn reflection_matrix(&self, i: usize) -> FMatrix {
        FMatrix::reflection(&self.roots[i])
    }

    /// True when the arrangement spans the ambient space.
    pub fn is_essential(&self) -> bool {
        self.rank == self.ambient_dim
    }
}

/// Validation report: empty vectors mean the system satisfies all axioms.
#[derive(Debug, Default, Serialize)]
pub struct ValidationReport {
    pub non_unit: Vec<usize>,
    /// Pairs (i, j) with s_{root_j}(root_i) outside the set.
    pub closure_failures: Vec<(usize, usize)>,
    pub negation_failures: Vec<usize>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.non_unit.is_empty()
            && self.closure_failures.is_empty()
            && self.negation_failures.is_empty()
    }
}

/// Check the pseudo-root system axioms exactly, reporting every violation.
pub fn validate_system(system: &PseudoRootSystem) -> ValidationReport {
    let mut report = ValidationReport::default();
    for (i, r) in system.roots.iter().enumerate() {
        if !r.norm_sq().is_one() {
            report.non_unit.push(i);
        }
        if system.find_root(&r.neg()).is_none() {
            report.negation_failures.push(i);
        }
    }
    for j in 0..system.roots.len() {
        for i in 0..system.roots.len() {
            let image = system.reflect_vec(j, &system.roots[i]);
            if system.find_root(&image).is_none() {
                report.closure_failures.push((i, j));
            }
        }
    }
    report
}

/// Validate an ad-hoc set of vectors (used for counterexamples).
pub fn validate_root_set(field: &Field, roots: Vec<FVector>) -> ValidationReport {
    let dim = roots.first().map_or(0, FVector::dim);
    let sys = PseudoRootSystem::from_roots(
        field.clone(),
        dim,
        roots,
        TypeExpr::Custom("adhoc".into()),
        true,
    );
    validate_system(&sys)
}

/// A choice of positive half of the roots, realized by a linear functional.
#[derive(Clone)]
pub struct PositiveSystem {
    pub system: PseudoRootSystem,
    /// Indices into `system.roots()` with (t, root) > 0, sorted.
    pub positive: Vec<usize>,
    pub order_vector: FVector,
}

impl std::fmt::Debug for PositiveSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PositiveSystem")
            .field("type", &self.system.type_label.to_string())
            .field("num_positive", &self.positive.len())
            .finish()
    }
}

impl PositiveSystem {
    pub fn positive_roots(&self) -> impl Iterator<Item = &FVector> {
        self.positive.iter().map(|&i| &self.system.roots()[i])
    }

    pub fn count(&self) -> usize {
        self.positive.len()
    }

    pub fn is_positive_index(&self, i: usize) -> bool {
        self.positive.binary_search(&i).is_ok()
    }
}

/// Cut the roots by an exact linear functional; errors naming any root on
/// the wall.
pub fn positive_system(
    system: &PseudoRootSystem,
    t: &FVector,
) -> Result<PositiveSystem, RootsError> {
    let mut positive = Vec::new();
    for (i, r) in system.roots().iter().enumerate() {
        match t.dot(r).sign() {
            1 => positive.push(i),
            -1 => {}
            _ => {
                return Err(RootsError::DegenerateFunctional {
                    root_index: i,
                    root: format!("{r:?}"),
                })
            }
        }
    }
    Ok(PositiveSystem {
        system: system.clone(),
        positive,
        order_vector: t.clone(),
    })
}

/// Deterministic generic functional t = (1, eps, eps^2, ...), retrying with
/// smaller exact eps until no root is orthogonal to it.
pub fn default_positive_system(system: &PseudoRootSystem) -> Result<PositiveSystem, RootsError> {
    let field = system.field();
    let n = system.ambient_dim();
    let mut denom: i64 = 16;
    for _ in 0..40 {
        let eps = rat_from_i64(1, denom);
        let mut coords = Vec::with_capacity(n);
        let mut pw = rat_from_i64(1, 1);
        for _ in 0..n {
            coords.push(AlgebraicNumber::from_rational(field, pw.clone()));
            pw *= &eps;
        }
        let t = FVector::new(coords);
        match positive_system(system, &t) {
            Ok(ps) => return Ok(ps),
            Err(RootsError::DegenerateFunctional { .. }) => {
                denom = denom.saturating_mul(2);
            }
            Err(e) => return Err(e),
        }
    }
    unreachable!("no generic functional found; the root set is degenerate")
}

/// The Coxeter hyperplane arrangement of a positive system: hyperplanes are
/// the orthogonal complements of the positive roots, the base chamber the
/// region where all of them are positive.
#[derive(Clone, Debug)]
pub struct Arrangement {
    pub positive: PositiveSystem,
}

impl Arrangement {
    pub fn new(positive: PositiveSystem) -> Self {
        Self { positive }
    }

    pub fn from_type(spec: &str) -> Result<Self, RootsError> {
        let system = build_system(spec)?;
        Ok(Self::new(default_positive_system(&system)?))
    }

    pub fn system(&self) -> &PseudoRootSystem {
        &self.positive.system
    }

    pub fn field(&self) -> &Field {
        self.positive.system.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.positive.system.ambient_dim()
    }

    pub fn num_hyperplanes(&self) -> usize {
        self.positive.count()
    }

    /// Normals of the hyperplanes (the positive roots).
    pub fn normals(&self) -> Vec<&FVector> {
        self.positive.positive_roots().collect()
    }
}

/// Build a root system from a type expression string such as "B3",
/// "I2(8)", "A1^3" or "B2xA1".
pub fn build_system(spec: &str) -> Result<PseudoRootSystem, RootsError> {
    let expr = parse_type(spec)?;
    build_system_expr(&expr)
}

pub fn build_system_expr(expr: &TypeExpr) -> Result<PseudoRootSystem, RootsError> {
    let n_field = expr.field_requirement();
    let field = make_field(n_field)?;
    builders::build_in_field(expr, &field)
}

/// Build in a caller-chosen field, which must contain the required cosines.
pub fn build_system_in_field(
    expr: &TypeExpr,
    field: &Field,
) -> Result<PseudoRootSystem, RootsError> {
    builders::build_in_field(expr, field)
}

/// Orthogonal product of two systems on fresh coordinate blocks.
pub fn product(a: &PseudoRootSystem, b: &PseudoRootSystem) -> PseudoRootSystem {
    assert_eq!(
        a.field().n(),
        b.field().n(),
        "product factors must share a field; rebuild in a common field first"
    );
    let field = a.field().clone();
    let dim = a.ambient_dim() + b.ambient_dim();
    let zero_a = FVector::zero(&field, a.ambient_dim());
    let zero_b = FVector::zero(&field, b.ambient_dim());
    let mut roots = Vec::with_capacity(a.num_roots() + b.num_roots());
    for r in a.roots() {
        roots.push(r.concat(&zero_b));
    }
    for r in b.roots() {
        roots.push(zero_a.concat(r));
    }
    let label = TypeExpr::product_of(a.type_label().clone(), b.type_label().clone());
    let co = a.construction_only || b.construction_only;
    PseudoRootSystem::from_roots(field, dim, roots, label, co)
}

/// Wire format for systems: field index plus serialized root vectors.
#[derive(Serialize, Deserialize)]
pub struct SystemWire {
    pub type_label: String,
    #[serde(rename = "N")]
    pub field_n: u32,
    pub ambient_dim: usize,
    pub rank: usize,
    pub roots: Vec<FVector>,
}

impl PseudoRootSystem {
    pub fn to_wire(&self) -> SystemWire {
        SystemWire {
            type_label: self.type_label.to_string(),
            field_n: self.field.n(),
            ambient_dim: self.ambient_dim,
            rank: self.rank,
            roots: self.roots.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::embed_cos;

    #[test]
    fn i2_5_has_ten_roots() {
        let s = build_system("I2(5)").unwrap();
        assert_eq!(s.num_roots(), 10);
        assert_eq!(s.rank(), 2);
        assert!(validate_system(&s).passed());
    }

    #[test]
    fn b2_has_eight_roots_with_sqrt2() {
        let s = build_system("B2").unwrap();
        assert_eq!(s.num_roots(), 8);
        assert_eq!(s.field().n() % 4, 0);
        assert!(validate_system(&s).passed());
    }

    #[test]
    fn h3_has_thirty_roots_by_orbit_closure() {
        let s = build_system("H3").unwrap();
        assert_eq!(s.num_roots(), 30);
        assert!(validate_system(&s).passed());
        // independent oracle: reflection-orbit closure of the set is itself
        let mut seen: std::collections::HashSet<Vec<u8>> =
            s.roots().iter().map(FVector::canonical_bytes).collect();
        let start_len = seen.len();
        let mut frontier: Vec<FVector> = s.roots().to_vec();
        while let Some(v) = frontier.pop() {
            for j in 0..s.num_roots() {
                let img = s.reflect_vec(j, &v);
                if seen.insert(img.canonical_bytes()) {
                    frontier.push(img);
                }
            }
        }
        assert_eq!(seen.len(), start_len, "orbit closure grew the set");
    }

    #[test]
    fn validate_rejects_non_closed_set() {
        // {+-e1, +-(e1+e2)/sqrt2} is not closed under reflection
        let f = make_field(4).unwrap();
        let half = embed_cos(&f, 1, 4).unwrap(); // sqrt2/2
        let e1 = FVector::basis(&f, 2, 0);
        let diag = FVector::new(vec![half.clone(), half.clone()]);
        let report = validate_root_set(
            &f,
            vec![e1.neg(), e1.clone(), diag.neg(), diag.clone()],
        );
        assert!(!report.passed());
        assert!(!report.closure_failures.is_empty());
        assert!(report.non_unit.is_empty());
    }

    #[test]
    fn validate_rejects_non_unit() {
        let f = make_field(4).unwrap();
        let two_e1 = FVector::basis(&f, 1, 0).scale(&AlgebraicNumber::from_integer(&f, 2));
        let report = validate_root_set(&f, vec![two_e1.neg(), two_e1]);
        assert!(!report.passed());
        assert_eq!(report.non_unit.len(), 2);
    }

    #[test]
    fn positive_system_splits_in_half() {
        for spec in ["A1^2", "I2(4)", "B3", "I2(6)"] {
            let s = build_system(spec).unwrap();
            let ps = default_positive_system(&s).unwrap();
            assert_eq!(ps.count() * 2, s.num_roots(), "{spec}");
            // positive and negative halves are disjoint and cover
            for &i in &ps.positive {
                let neg = s.roots()[i].neg();
                let j = s.find_root(&neg).unwrap();
                assert!(!ps.is_positive_index(j));
            }
        }
    }

    #[test]
    fn a1_squared_with_explicit_functional() {
        let s = build_system("A1^2").unwrap();
        let f = s.field();
        let t = FVector::new(vec![
            AlgebraicNumber::from_integer(f, 2),
            AlgebraicNumber::from_integer(f, 1),
        ]);
        let ps = positive_system(&s, &t).unwrap();
        let pos: Vec<_> = ps.positive_roots().collect();
        assert_eq!(pos.len(), 2);
        // positive roots are e1 and e2
        for p in pos {
            assert!(p.coords.iter().any(|c| c.is_one()));
        }
    }

    #[test]
    fn wall_functional_errors_with_witness() {
        let s = build_system("B2").unwrap();
        let f = s.field();
        // t = e1 is orthogonal to the root e2
        let t = FVector::basis(f, 2, 0);
        match positive_system(&s, &t) {
            Err(RootsError::DegenerateFunctional { root_index, .. }) => {
                let r = &s.roots()[root_index];
                assert!(t.dot(r).is_zero());
            }
            other => panic!("expected degenerate functional, got {other:?}"),
        }
    }

    #[test]
    fn products_compose() {
        let a1 =
            build_system_in_field(&parse_type("A1").unwrap(), &make_field(4).unwrap()).unwrap();
        let i24 = build_system("I2(4)").unwrap();
        let p = product(&a1, &i24);
        assert_eq!(p.num_roots(), 10);
        assert_eq!(p.ambient_dim(), 3);
        assert!(validate_system(&p).passed());

        let b2 = build_system("B2").unwrap();
        let q = product(&b2, &a1);
        assert_eq!(q.rank(), 3);
    }

    #[test]
    fn product_via_grammar() {
        let s = build_system("B2xA1").unwrap();
        assert_eq!(s.ambient_dim(), 3);
        assert_eq!(s.num_roots(), 10);
        assert_eq!(s.rank(), 3);
        let t = build_system("A1^3").unwrap();
        assert_eq!(t.num_roots(), 6);
        assert!(t.is_essential());
    }

    #[test]
    fn isomorphy_smoke_counts() {
        // I2(3) vs A2 and I2(4) vs B2 match in root count
        assert_eq!(build_system("I2(3)").unwrap().num_roots(), 6);
        assert_eq!(build_system("A2").unwrap().num_roots(), 6);
        assert_eq!(
            build_system("I2(4)").unwrap().num_roots(),
            build_system("B2").unwrap().num_roots()
        );
    }

    #[test]
    fn a_series_lives_in_sum_zero_hyperplane() {
        let s = build_system("A2").unwrap();
        assert_eq!(s.ambient_dim(), 3);
        assert_eq!(s.rank(), 2);
        assert!(!s.is_essential());
        let f = s.field();
        let ones = FVector::new(vec![AlgebraicNumber::one(f); 3]);
        for r in s.roots() {
            assert!(r.dot(&ones).is_zero());
        }
    }

    #[test]
    fn i2_hyperplane_geometry() {
        for m in [4u32, 5, 6, 8] {
            let s = build_system(&format!("I2({m})")).unwrap();
            let ps = default_positive_system(&s).unwrap();
            assert_eq!(ps.count(), m as usize);
            // distinct hyperplanes of a rank-2 arrangement meet only at the
            // origin: normals are pairwise non-parallel
            let normals: Vec<_> = ps.positive_roots().collect();
            for i in 0..normals.len() {
                for j in (i + 1)..normals.len() {
                    let d = normals[i].dot(normals[j]);
                    assert!(!(&d * &d).is_one(), "parallel normals in I2({m})");
                }
            }
        }
    }

    #[test]
    fn f4_and_h4_counts() {
        let f4 = build_system("F4").unwrap();
        assert_eq!(f4.num_roots(), 48);
        assert!(validate_system(&f4).passed());
        let h4 = build_system("H4").unwrap();
        assert_eq!(h4.num_roots(), 120);
        // full validation of H4 is 120x120 exact reflections; keep to rank
        assert_eq!(h4.rank(), 4);
    }

    #[test]
    fn e_types_construction_only() {
        let e8 = build_system("E8").unwrap();
        assert_eq!(e8.num_roots(), 240);
        assert!(e8.is_construction_only());
        let e7 = build_system("E7").unwrap();
        assert_eq!(e7.num_roots(), 126);
        let e6 = build_system("E6").unwrap();
        assert_eq!(e6.num_roots(), 72);
        assert_eq!(e6.rank(), 6);
    }

    #[test]
    fn system_wire_roundtrip() {
        let s = build_system("B2").unwrap();
        let wire = s.to_wire();
        let json = serde_json::to_string(&wire).unwrap();
        let back: SystemWire = serde_json::from_str(&json).unwrap();
        assert_eq!(back.roots.len(), 8);
        assert_eq!(back.field_n, 4);
        assert_eq!(back.roots, s.roots().to_vec());
    }
}
