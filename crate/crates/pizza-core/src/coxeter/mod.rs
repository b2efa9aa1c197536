//! Finite Coxeter groups as exact orthogonal matrices, with chamber and sign
//! bookkeeping.

use std::collections::HashMap;

use thiserror::Error;

use crate::algebra::{FMatrix, FVector};
use crate::roots::{Arrangement, PositiveSystem, PseudoRootSystem};

pub const DEFAULT_ORDER_CAP: usize = 100_000;

#[derive(Debug, Error)]
pub enum CoxeterError {
    #[error("group order exceeds the cap of {cap}")]
    OrderCapExceeded { cap: usize },
    #[error("type {0} is construction-only; group enumeration is not supported")]
    ConstructionOnly(String),
    #[error(
        "arrangement is not essential (rank {rank} < ambient dim {ambient}); restrict to the span first"
    )]
    NonEssential { rank: usize, ambient: usize },
}

/// A group element: exact orthogonal matrix with cached determinant.
#[derive(Clone, Debug)]
pub struct GroupElement {
    pub matrix: FMatrix,
    pub det: i8,
}

/// The full reflection group of a pseudo-root system.
pub struct CoxeterGroup {
    system: PseudoRootSystem,
    elements: Vec<GroupElement>,
    index: HashMap<Vec<u8>, usize>,
}

impl std::fmt::Debug for CoxeterGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CoxeterGroup")
            .field("type", &self.system.type_label().to_string())
            .field("order", &self.elements.len())
            .finish()
    }
}

/// Closure of the reflections under multiplication, by breadth-first search
/// with canonical exact hashing. Elements come out in BFS order with the
/// identity first.
pub fn enumerate_group(
    system: &PseudoRootSystem,
    order_cap: usize,
) -> Result<CoxeterGroup, CoxeterError> {
    if system.is_construction_only() {
        return Err(CoxeterError::ConstructionOnly(
            system.type_label().to_string(),
        ));
    }
    let field = system.field();
    let n = system.ambient_dim();
    // one reflection per +-root pair
    let mut generators: Vec<FMatrix> = Vec::new();
    let mut seen_gen: HashMap<Vec<u8>, ()> = HashMap::new();
    for i in 0..system.num_roots() {
        let m = system.reflection_matrix(i);
        if seen_gen.insert(m.canonical_bytes(), ()).is_none() {
            generators.push(m);
        }
    }
    let identity = FMatrix::identity(field, n);
    let mut elements = vec![GroupElement { matrix: identity.clone(), det: 1 }];
    let mut index = HashMap::new();
    index.insert(identity.canonical_bytes(), 0usize);
    let mut frontier = vec![0usize];
    while let Some(at) = frontier.pop() {
        let current = elements[at].clone();
        for g in &generators {
            let next = current.matrix.mul(g);
            let key = next.canonical_bytes();
            if index.contains_key(&key) {
                continue;
            }
            if elements.len() >= order_cap {
                return Err(CoxeterError::OrderCapExceeded { cap: order_cap });
            }
            index.insert(key, elements.len());
            frontier.push(elements.len());
            elements.push(GroupElement { matrix: next, det: -current.det });
        }
    }
    Ok(CoxeterGroup {
        system: system.clone(),
        elements,
        index,
    })
}

impl CoxeterGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn system(&self) -> &PseudoRootSystem {
        &self.system
    }

    pub fn find(&self, m: &FMatrix) -> Option<usize> {
        self.index.get(&m.canonical_bytes()).copied()
    }

    pub fn num_reflections(&self) -> usize {
        self.elements
            .iter()
            .filter(|e| {
                e.det == -1 && {
                    let sq = e.matrix.mul(&e.matrix);
                    sq == FMatrix::identity(self.system.field(), self.system.ambient_dim())
                        && e.matrix.dim() - fixed_space_dim(&e.matrix) == 1
                }
            })
            .count()
    }

    /// True iff -id is an element of the group.
    pub fn has_minus_id(&self) -> bool {
        let m = FMatrix::minus_identity(self.system.field(), self.system.ambient_dim());
        self.find(&m).is_some()
    }

    /// Apply element `w` to a vector.
    pub fn apply(&self, w: usize, v: &FVector) -> FVector {
        self.elements[w].matrix.mul_vec(v)
    }
}

fn fixed_space_dim(m: &FMatrix) -> usize {
    // dim of ker(M - I) = n - rank(M - I)
    let n = m.dim();
    let field = m.field();
    let id = FMatrix::identity(field, n);
    let rows: Vec<FVector> = (0..n)
        .map(|i| {
            FVector::new(
                (0..n)
                    .map(|j| &m.rows[i][j] - &id.rows[i][j])
                    .collect(),
            )
        })
        .collect();
    n - crate::algebra::rank_of_rows(&rows)
}

/// Spec'd operation: Inv(w) = positive roots sent to negative roots by w^-1,
/// i.e. the hyperplanes separating w(T0) from T0.
pub fn inversion_set(group: &CoxeterGroup, w: usize, positive: &PositiveSystem) -> Vec<usize> {
    let w_inv = group.elements[w].matrix.transpose(); // orthogonal inverse
    let system = &positive.system;
    let mut out = Vec::new();
    for &i in &positive.positive {
        let pre = w_inv.mul_vec(&system.roots()[i]);
        let j = system
            .find_root(&pre)
            .expect("group preserves the root set");
        if !positive.is_positive_index(j) {
            out.push(i);
        }
    }
    out
}

/// A chamber w(T0) of an essential Coxeter arrangement.
#[derive(Clone, Debug)]
pub struct Chamber {
    /// Index of w in the group's element list.
    pub element: usize,
    /// (-1)^T = det(w).
    pub sign: i8,
    /// Root indices of hyperplanes separating this chamber from the base.
    pub separating: Vec<usize>,
    /// The chamber is { v : (v, normal) > 0 for all normals }; the closed
    /// chamber uses >=.
    pub normals: Vec<FVector>,
}

/// One chamber per group element; the base chamber (identity) has sign +1.
pub fn chambers_with_signs(
    arrangement: &Arrangement,
    group: &CoxeterGroup,
) -> Result<Vec<Chamber>, CoxeterError> {
    let system = arrangement.system();
    if !system.is_essential() {
        return Err(CoxeterError::NonEssential {
            rank: system.rank(),
            ambient: system.ambient_dim(),
        });
    }
    let positive = &arrangement.positive;
    let chambers = (0..group.order())
        .map(|w| {
            let normals = positive
                .positive_roots()
                .map(|alpha| group.apply(w, alpha))
                .collect();
            Chamber {
                element: w,
                sign: group.elements()[w].det,
                separating: inversion_set(group, w, positive),
                normals,
            }
        })
        .collect();
    Ok(chambers)
}

/// Sign of the (unique) open chamber containing a point strictly off every
/// hyperplane: parity of the number of negative inner products with the
/// positive roots. Returns None when the point lies on a hyperplane.
pub fn point_chamber_sign(positive: &PositiveSystem, point: &FVector) -> Option<i8> {
    let mut neg = 0usize;
    for alpha in positive.positive_roots() {
        match point.dot(alpha).sign() {
            1 => {}
            -1 => neg += 1,
            _ => return None,
        }
    }
    Some(if neg % 2 == 0 { 1 } else { -1 })
}
