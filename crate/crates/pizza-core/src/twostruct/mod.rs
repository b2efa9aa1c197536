//! 2-structures: subsets of a pseudo-root system that split into pairwise
//! orthogonal components of type A1, B2 or I2(2^k), whose positive-part
//! stabilizer in W has determinant one. The group acts transitively on them;
//! the sign eps is assigned by orbit transport from a base structure.

use std::collections::{HashMap, HashSet};

use thiserror::Error;

use crate::coxeter::CoxeterGroup;
use crate::exec::{map_collect, Exec};
use crate::roots::{PositiveSystem, PseudoRootSystem};

#[derive(Debug, Error)]
pub enum TwoStructError {
    #[error("the group does not contain -id; 2-structure machinery requires it")]
    NoMinusId,
    #[error("exhaustive component search found no 2-structure (this would falsify the transitivity theorem for this type)")]
    NotFound,
    #[error("two transporters with different determinants map the base to the same structure; condition (b) is violated")]
    InconsistentSign,
    #[error("brute-force enumeration is capped at {cap} positive roots, got {got}")]
    BruteForceTooLarge { cap: usize, got: usize },
}

/// Cached action of every group element on root indices.
pub struct RootAction {
    perms: Vec<Vec<usize>>,
}

impl RootAction {
    pub fn new(group: &CoxeterGroup) -> Self {
        let system = group.system();
        let perms = map_collect(Exec::default(), group.order(), |w| {
            system
                .roots()
                .iter()
                .map(|r| {
                    system
                        .find_root(&group.elements()[w].matrix.mul_vec(r))
                        .expect("group preserves the root set")
                })
                .collect()
        });
        Self { perms }
    }

    pub fn apply(&self, w: usize, root: usize) -> usize {
        self.perms[w][root]
    }

    /// Image of a sorted root-index set.
    pub fn apply_set(&self, w: usize, set: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = set.iter().map(|&i| self.perms[w][i]).collect();
        out.sort_unstable();
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComponentKind {
    A1,
    B2,
    /// I2(m) with m = 2^k, k >= 3.
    Dihedral(u32),
}

impl std::fmt::Display for ComponentKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ComponentKind::A1 => write!(f, "A1"),
            ComponentKind::B2 => write!(f, "B2"),
            ComponentKind::Dihedral(m) => write!(f, "I2({m})"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Component {
    /// Sorted root indices of this component.
    pub roots: Vec<usize>,
    pub kind: ComponentKind,
}

#[derive(Clone, Debug)]
pub struct TwoStructure {
    /// Sorted indices (into the system's root list) of all roots of phi.
    pub roots: Vec<usize>,
    pub components: Vec<Component>,
    /// phi intersected with the chosen positive system, sorted.
    pub positive_part: Vec<usize>,
    /// Orbit-transport sign; +1 for the base structure.
    pub epsilon: i8,
    /// A group element mapping the base structure (with positive parts) here.
    pub transporter: usize,
}

impl TwoStructure {
    pub fn type_string(&self) -> String {
        let mut kinds: Vec<String> = self.components.iter().map(|c| c.kind.to_string()).collect();
        kinds.sort();
        kinds.join("x")
    }
}

/// All candidate components: A1 pairs and closed irreducible dihedral
/// subsystems of allowed type (B2 = I2(4), I2(8), I2(16), ...).
fn allowed_components(system: &PseudoRootSystem) -> Vec<Vec<usize>> {
    let n = system.num_roots();
    let mut out: HashSet<Vec<usize>> = HashSet::new();
    // A1 pairs
    for i in 0..n {
        let j = system
            .find_root(&system.roots()[i].neg())
            .expect("closed under negation");
        let mut pair = vec![i, j];
        pair.sort_unstable();
        out.insert(pair);
    }
    // dihedral closures of non-orthogonal, non-proportional pairs
    for i in 0..n {
        for j in (i + 1)..n {
            let dot = system.roots()[i].dot(&system.roots()[j]);
            if dot.is_zero() {
                continue;
            }
            if system.roots()[i] == system.roots()[j].neg() {
                continue;
            }
            let closure = reflection_closure(system, &[i, j]);
            let count = closure.len();
            // irreducible dihedral subsystem: 2m roots, m = count/2
            let m = (count / 2) as u32;
            if m >= 4 && m.is_power_of_two() {
                out.insert(closure);
            }
        }
    }
    let mut v: Vec<Vec<usize>> = out.into_iter().collect();
    v.sort();
    v
}

fn reflection_closure(system: &PseudoRootSystem, seed: &[usize]) -> Vec<usize> {
    let mut set: HashSet<usize> = seed.iter().copied().collect();
    let mut frontier: Vec<usize> = seed.to_vec();
    while let Some(i) = frontier.pop() {
        let members: Vec<usize> = set.iter().copied().collect();
        for j in members {
            for (a, b) in [(i, j), (j, i)] {
                let img = system.reflect_vec(a, &system.roots()[b]);
                let k = system.find_root(&img).expect("root system closed");
                if set.insert(k) {
                    frontier.push(k);
                }
            }
        }
    }
    let mut v: Vec<usize> = set.into_iter().collect();
    v.sort_unstable();
    v
}

fn classify_component(system: &PseudoRootSystem, roots: &[usize]) -> ComponentKind {
    match roots.len() {
        2 => ComponentKind::A1,
        8 => ComponentKind::B2,
        n => ComponentKind::Dihedral(n as u32 / 2),
    }
}

/// Split a root set into orthogonality-connected components.
fn connected_components(system: &PseudoRootSystem, roots: &[usize]) -> Vec<Component> {
    let mut remaining: Vec<usize> = roots.to_vec();
    let mut out = Vec::new();
    while let Some(start) = remaining.first().copied() {
        let mut comp = vec![start];
        let mut frontier = vec![start];
        remaining.retain(|&x| x != start);
        while let Some(i) = frontier.pop() {
            let linked: Vec<usize> = remaining
                .iter()
                .copied()
                .filter(|&j| {
                    !system.roots()[i].dot(&system.roots()[j]).is_zero()
                        || system.roots()[j] == system.roots()[i].neg()
                })
                .collect();
            for j in linked {
                remaining.retain(|&x| x != j);
                comp.push(j);
                frontier.push(j);
            }
        }
        comp.sort_unstable();
        let kind = classify_component(system, &comp);
        out.push(Component { roots: comp, kind });
    }
    out
}

/// Condition (b): every group element stabilizing the positive part setwise
/// has determinant +1. Returns a violating witness otherwise.
pub fn check_condition_b(
    phi_plus: &[usize],
    group: &CoxeterGroup,
    action: &RootAction,
) -> (bool, Option<usize>) {
    for w in 0..group.order() {
        if group.elements()[w].det == -1 && action.apply_set(w, phi_plus) == phi_plus {
            return (false, Some(w));
        }
    }
    (true, None)
}

fn positive_part(positive: &PositiveSystem, roots: &[usize]) -> Vec<usize> {
    roots
        .iter()
        .copied()
        .filter(|&i| positive.is_positive_index(i))
        .collect()
}

/// Deterministic search for one 2-structure: backtracking over pairwise
/// orthogonal allowed components, testing condition (b) on full-rank
/// families. Requires -id in W.
pub fn find_base_two_structure(
    positive: &PositiveSystem,
    group: &CoxeterGroup,
    action: &RootAction,
) -> Result<TwoStructure, TwoStructError> {
    if !group.has_minus_id() {
        return Err(TwoStructError::NoMinusId);
    }
    let system = &positive.system;
    let candidates = allowed_components(system);
    let full_rank = system.rank();
    // pairwise orthogonality between candidates
    let orthogonal = |a: &[usize], b: &[usize]| -> bool {
        a.iter().all(|&i| {
            b.iter()
                .all(|&j| system.roots()[i].dot(&system.roots()[j]).is_zero())
        })
    };
    fn dfs(
        start: usize,
        chosen: &mut Vec<usize>,
        union: &mut Vec<usize>,
        candidates: &[Vec<usize>],
        system: &PseudoRootSystem,
        full_rank: usize,
        positive: &PositiveSystem,
        group: &CoxeterGroup,
        action: &RootAction,
        orthogonal: &dyn Fn(&[usize], &[usize]) -> bool,
    ) -> Option<Vec<usize>> {
        let vecs: Vec<_> = union.iter().map(|&i| system.roots()[i].clone()).collect();
        if crate::algebra::rank_of_rows(&vecs) == full_rank {
            let mut sorted = union.clone();
            sorted.sort_unstable();
            let phi_plus = positive_part(positive, &sorted);
            if check_condition_b(&phi_plus, group, action).0 {
                return Some(sorted);
            }
            return None;
        }
        for c in start..candidates.len() {
            if !chosen
                .iter()
                .all(|&prev| orthogonal(&candidates[prev], &candidates[c]))
            {
                continue;
            }
            chosen.push(c);
            let before = union.len();
            union.extend_from_slice(&candidates[c]);
            if let Some(found) = dfs(
                c + 1,
                chosen,
                union,
                candidates,
                system,
                full_rank,
                positive,
                group,
                action,
                orthogonal,
            ) {
                return Some(found);
            }
            union.truncate(before);
            chosen.pop();
        }
        None
    }
    let mut chosen = Vec::new();
    let mut union = Vec::new();
    let found = dfs(
        0,
        &mut chosen,
        &mut union,
        &candidates,
        system,
        full_rank,
        positive,
        group,
        action,
        &orthogonal,
    )
    .ok_or(TwoStructError::NotFound)?;
    let components = connected_components(system, &found);
    let phi_plus = positive_part(positive, &found);
    Ok(TwoStructure {
        roots: found,
        components,
        positive_part: phi_plus,
        epsilon: 1,
        transporter: 0,
    })
}

/// Full orbit of the base structure under W, deduplicated as root sets, with
/// eps assigned by transport: eps(phi) = det(w) for any w mapping the base
/// (and its positive part) onto phi (and its positive part). Consistency of
/// all transporters is verified.
pub fn enumerate_two_structures(
    positive: &PositiveSystem,
    group: &CoxeterGroup,
    action: &RootAction,
) -> Result<Vec<TwoStructure>, TwoStructError> {
    let base = find_base_two_structure(positive, group, action)?;
    let system = &positive.system;
    let mut orbit: HashMap<Vec<usize>, Vec<usize>> = HashMap::new(); // set -> transporters
    for w in 0..group.order() {
        let image = action.apply_set(w, &base.roots);
        orbit.entry(image).or_default().push(w);
    }
    let mut sets: Vec<Vec<usize>> = orbit.keys().cloned().collect();
    sets.sort();
    let mut out = Vec::new();
    for set in sets {
        let phi_plus = positive_part(positive, &set);
        // transporters that also match the positive parts
        let matching: Vec<usize> = orbit[&set]
            .iter()
            .copied()
            .filter(|&w| action.apply_set(w, &base.positive_part) == phi_plus)
            .collect();
        if matching.is_empty() {
            // every orbit element admits a positive-part-compatible
            // transporter: adjust inside the subgroup of the structure, which
            // is transitive on its positive systems. The full group scan
            // above already covers those products, so this cannot happen.
            return Err(TwoStructError::NotFound);
        }
        let eps = group.elements()[matching[0]].det;
        if matching
            .iter()
            .any(|&w| group.elements()[w].det != eps)
        {
            return Err(TwoStructError::InconsistentSign);
        }
        let (ok, _witness) = check_condition_b(&phi_plus, group, action);
        debug_assert!(ok, "orbit image violates condition (b)");
        out.push(TwoStructure {
            components: connected_components(system, &set),
            positive_part: phi_plus,
            epsilon: eps,
            transporter: matching[0],
            roots: set,
        });
    }
    Ok(out)
}

/// Independent brute-force enumerator: every pairwise-orthogonal family of
/// allowed components satisfying condition (b), regardless of how it was
/// found. Used as an oracle against the orbit method at desk scale.
pub fn brute_force_two_structures(
    positive: &PositiveSystem,
    group: &CoxeterGroup,
    action: &RootAction,
    cap: usize,
) -> Result<Vec<Vec<usize>>, TwoStructError> {
    if positive.count() > cap {
        return Err(TwoStructError::BruteForceTooLarge {
            cap,
            got: positive.count(),
        });
    }
    let system = &positive.system;
    let candidates = allowed_components(system);
    let mut results: HashSet<Vec<usize>> = HashSet::new();
    // iterate over all orthogonal families by DFS, testing condition (b) on
    // every nonempty family
    fn dfs(
        start: usize,
        union: &mut Vec<usize>,
        candidates: &[Vec<usize>],
        system: &PseudoRootSystem,
        positive: &PositiveSystem,
        group: &CoxeterGroup,
        action: &RootAction,
        results: &mut HashSet<Vec<usize>>,
    ) {
        if !union.is_empty() {
            let mut sorted = union.clone();
            sorted.sort_unstable();
            let phi_plus = positive_part(positive, &sorted);
            if check_condition_b(&phi_plus, group, action).0 {
                results.insert(sorted);
            }
        }
        'next: for c in start..candidates.len() {
            for &i in union.iter() {
                for &j in &candidates[c] {
                    if !system.roots()[i].dot(&system.roots()[j]).is_zero() {
                        continue 'next;
                    }
                }
            }
            let before = union.len();
            union.extend_from_slice(&candidates[c]);
            dfs(
                c + 1,
                union,
                candidates,
                system,
                positive,
                group,
                action,
                results,
            );
            union.truncate(before);
        }
    }
    let mut union = Vec::new();
    dfs(
        0,
        &mut union,
        &candidates,
        system,
        positive,
        group,
        action,
        &mut results,
    );
    let mut v: Vec<Vec<usize>> = results.into_iter().collect();
    v.sort();
    Ok(v)
}
