//! Exact vertex enumeration for bounded regions: every vertex of the closure
//! is the unique solution of some n linearly independent active constraints.

use std::collections::HashSet;

use crate::algebra::{FMatrix, FVector};

use super::{HalfOpenRegion, RegionError, MAX_EXACT_DIM};

/// All vertices of the closure, deduplicated, in canonical order.
/// With `require_bounded`, unbounded regions are rejected up front.
pub fn region_vertices(
    region: &HalfOpenRegion,
    require_bounded: bool,
) -> Result<Vec<FVector>, RegionError> {
    let n = region.dim;
    if n > MAX_EXACT_DIM {
        return Err(RegionError::DimTooHigh { max: MAX_EXACT_DIM, got: n });
    }
    if require_bounded && !region.is_bounded() {
        return Err(RegionError::Unbounded);
    }
    let closure = region.closure();
    let cs = &closure.constraints;
    if cs.len() < n {
        return Ok(Vec::new());
    }
    let field = region.field().clone();
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut out = Vec::new();
    let mut subset: Vec<usize> = (0..n).collect();
    loop {
        // solve the n chosen constraints as equalities
        let rows: Vec<Vec<_>> = subset
            .iter()
            .map(|&i| cs[i].normal.coords.clone())
            .collect();
        let rhs = FVector::new(subset.iter().map(|&i| cs[i].offset.clone()).collect());
        let m = FMatrix::from_rows(rows);
        if let Ok(p) = m.solve(&rhs) {
            if closure.contains_point(&p) && seen.insert(p.canonical_bytes()) {
                out.push(p);
            }
        }
        let _ = &field;
        if !advance(&mut subset, cs.len()) {
            break;
        }
    }
    // canonical deterministic order
    out.sort_by(|a, b| a.canonical_bytes().cmp(&b.canonical_bytes()));
    Ok(out)
}

/// Next k-combination in lexicographic order.
fn advance(subset: &mut [usize], n: usize) -> bool {
    let k = subset.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if subset[i] < n - (k - i) {
            subset[i] += 1;
            for j in (i + 1)..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
