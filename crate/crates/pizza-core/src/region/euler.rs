//! Euler characteristic with compact support, via the face lattice of the
//! closure: a face's relative interior belongs to the region exactly when no
//! strict constraint is active on the whole face, and each open d-cell
//! contributes (-1)^d.

use std::collections::HashSet;

use crate::algebra::{rank_of_rows, FVector};

use super::{region_vertices, HalfOpenRegion, RegionError, MAX_EXACT_DIM};

pub fn euler_cs(region: &HalfOpenRegion) -> Result<i64, RegionError> {
    if region.dim > MAX_EXACT_DIM {
        return Err(RegionError::DimTooHigh { max: MAX_EXACT_DIM, got: region.dim });
    }
    if region.is_empty() {
        return Ok(0);
    }
    if !region.is_bounded() {
        return Err(RegionError::Unbounded);
    }
    let verts = region_vertices(region, false)?;
    assert!(
        !verts.is_empty(),
        "nonempty bounded polyhedron must have a vertex"
    );
    let closure = region.closure();
    let actives: Vec<Vec<usize>> = closure
        .constraints
        .iter()
        .map(|c| {
            (0..verts.len())
                .filter(|&i| c.is_active_at(&verts[i]))
                .collect()
        })
        .collect();
    // face lattice: closure under intersection of the active vertex sets,
    // seeded with the polytope itself
    let mut faces: HashSet<Vec<usize>> = HashSet::new();
    faces.insert((0..verts.len()).collect());
    for a in &actives {
        if !a.is_empty() {
            faces.insert(a.clone());
        }
    }
    loop {
        let snapshot: Vec<Vec<usize>> = faces.iter().cloned().collect();
        let before = faces.len();
        for i in 0..snapshot.len() {
            for j in (i + 1)..snapshot.len() {
                let inter = intersect_sorted(&snapshot[i], &snapshot[j]);
                if !inter.is_empty() {
                    faces.insert(inter);
                }
            }
        }
        if faces.len() == before {
            break;
        }
    }
    let strict_actives: Vec<&Vec<usize>> = region
        .constraints
        .iter()
        .zip(&actives)
        .filter(|(c, _)| c.strict)
        .map(|(_, a)| a)
        .collect();
    let mut chi = 0i64;
    for face in &faces {
        // excluded when some strict constraint is active on the whole face
        if strict_actives.iter().any(|a| contains_sorted(a, face)) {
            continue;
        }
        let d = affine_dim(face, &verts);
        chi += if d % 2 == 0 { 1 } else { -1 };
    }
    Ok(chi)
}

fn intersect_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn contains_sorted(superset: &[usize], subset: &[usize]) -> bool {
    let mut i = 0;
    for x in subset {
        while i < superset.len() && superset[i] < *x {
            i += 1;
        }
        if i >= superset.len() || superset[i] != *x {
            return false;
        }
    }
    true
}

fn affine_dim(indices: &[usize], verts: &[FVector]) -> usize {
    if indices.len() <= 1 {
        return 0;
    }
    let base = &verts[indices[0]];
    let rows: Vec<FVector> = indices[1..].iter().map(|&i| verts[i].sub(base)).collect();
    rank_of_rows(&rows)
}
