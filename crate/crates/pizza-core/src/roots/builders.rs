//! Standard coordinates for the supported families.
//!
//! Conventions: B/D/F series use +-e_i and (+-e_i +- e_j)/sqrt2; A_n sits in
//! the sum-zero hyperplane of R^(n+1) (except A1 = {+-e1} in R^1, which keeps
//! products of A1 factors essential); I2(m) uses (cos(k pi/m), sin(k pi/m));
//! H3/H4 use golden-ratio coordinates.

use crate::algebra::{embed_cos, embed_sin, rat_from_i64, AlgebraicNumber, FVector, Field};

use super::parser::TypeExpr;
use super::{product, PseudoRootSystem, RootsError};

pub fn build_in_field(expr: &TypeExpr, field: &Field) -> Result<PseudoRootSystem, RootsError> {
    match expr {
        TypeExpr::Product(fs) => {
            let mut acc: Option<PseudoRootSystem> = None;
            for f in fs {
                let part = build_in_field(f, field)?;
                acc = Some(match acc {
                    None => part,
                    Some(sys) => product(&sys, &part),
                });
            }
            acc.ok_or_else(|| RootsError::Parse("empty product".into()))
        }
        irreducible => build_irreducible(irreducible, field),
    }
}

fn build_irreducible(expr: &TypeExpr, field: &Field) -> Result<PseudoRootSystem, RootsError> {
    let roots = match expr {
        TypeExpr::A(1) => vec![
            FVector::basis(field, 1, 0),
            FVector::basis(field, 1, 0).neg(),
        ],
        TypeExpr::A(k) => a_series(field, *k as usize)?,
        TypeExpr::B(k) => b_series(field, *k as usize)?,
        TypeExpr::D(k) => d_series(field, *k as usize)?,
        TypeExpr::I2(m) => i2_series(field, *m)?,
        TypeExpr::H3 => h3(field)?,
        TypeExpr::H4 => h4(field)?,
        TypeExpr::F4 => f4(field)?,
        TypeExpr::E(k) => e_series(field, *k)?,
        TypeExpr::Product(_) | TypeExpr::Custom(_) => unreachable!("handled by caller"),
    };
    let dim = roots[0].dim();
    let construction_only = matches!(expr, TypeExpr::E(_));
    Ok(PseudoRootSystem::from_roots(
        field.clone(),
        dim,
        roots,
        expr.clone(),
        construction_only,
    ))
}

fn inv_sqrt2(field: &Field) -> Result<AlgebraicNumber, RootsError> {
    // 1/sqrt2 = cos(pi/4)
    Ok(embed_cos(field, 1, 4)?)
}

fn a_series(field: &Field, n: usize) -> Result<Vec<FVector>, RootsError> {
    let c = inv_sqrt2(field)?;
    let dim = n + 1;
    let mut roots = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            if i == j {
                continue;
            }
            let mut v = FVector::zero(field, dim);
            v.coords[i] = c.clone();
            v.coords[j] = -&c;
            roots.push(v);
        }
    }
    Ok(roots)
}

fn b_series(field: &Field, n: usize) -> Result<Vec<FVector>, RootsError> {
    let mut roots = Vec::new();
    for i in 0..n {
        roots.push(FVector::basis(field, n, i));
        roots.push(FVector::basis(field, n, i).neg());
    }
    roots.extend(d_series(field, n)?);
    Ok(roots)
}

fn d_series(field: &Field, n: usize) -> Result<Vec<FVector>, RootsError> {
    let c = inv_sqrt2(field)?;
    let mut roots = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut v = FVector::zero(field, n);
                v.coords[i] = if si > 0 { c.clone() } else { -&c };
                v.coords[j] = if sj > 0 { c.clone() } else { -&c };
                roots.push(v);
            }
        }
    }
    Ok(roots)
}

fn i2_series(field: &Field, m: u32) -> Result<Vec<FVector>, RootsError> {
    let mut roots = Vec::new();
    for k in 0..(2 * m as i64) {
        let c = embed_cos(field, k, m)?;
        let s = embed_sin(field, k, m)?;
        roots.push(FVector::new(vec![c, s]));
    }
    Ok(roots)
}

fn h3(field: &Field) -> Result<Vec<FVector>, RootsError> {
    // golden ratio over 2: phi/2 = cos(pi/5), (phi-1)/2 = cos(2pi/5)
    let a = embed_cos(field, 1, 5)?;
    let b = embed_cos(field, 2, 5)?;
    let half = AlgebraicNumber::from_rational(field, rat_from_i64(1, 2));
    let zero = AlgebraicNumber::zero(field);
    let mut roots = Vec::new();
    for i in 0..3 {
        let mut v = FVector::zero(field, 3);
        v.coords[i] = AlgebraicNumber::one(field);
        roots.push(v.clone());
        roots.push(v.neg());
    }
    let base = [half, a, b];
    for cyc in 0..3 {
        for signs in 0..8u8 {
            let mut coords = vec![zero.clone(); 3];
            for (slot, coord) in coords.iter_mut().enumerate() {
                let val = &base[(slot + cyc) % 3];
                *coord = if signs & (1 << slot) != 0 { -val } else { val.clone() };
            }
            roots.push(FVector::new(coords));
        }
    }
    Ok(roots)
}

fn h4(field: &Field) -> Result<Vec<FVector>, RootsError> {
    let a = embed_cos(field, 1, 5)?; // phi/2
    let b = embed_cos(field, 2, 5)?; // (phi-1)/2
    let half = AlgebraicNumber::from_rational(field, rat_from_i64(1, 2));
    let zero = AlgebraicNumber::zero(field);
    let mut roots = Vec::new();
    for i in 0..4 {
        let v = FVector::basis(field, 4, i);
        roots.push(v.clone());
        roots.push(v.neg());
    }
    for signs in 0..16u8 {
        let coords = (0..4)
            .map(|slot| {
                if signs & (1 << slot) != 0 {
                    -&half
                } else {
                    half.clone()
                }
            })
            .collect();
        roots.push(FVector::new(coords));
    }
    // even permutations of (phi/2, 1/2, (phi-1)/2, 0) with all sign choices
    let base = [a, half.clone(), b, zero.clone()];
    for perm in even_permutations_4() {
        for signs in 0..16u8 {
            let mut coords = vec![zero.clone(); 4];
            for slot in 0..4 {
                let val = &base[perm[slot]];
                coords[slot] = if signs & (1 << slot) != 0 { -val } else { val.clone() };
            }
            roots.push(FVector::new(coords));
        }
    }
    Ok(roots)
}

fn even_permutations_4() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    let mut idx = [0usize, 1, 2, 3];
    permute_collect(&mut idx, 0, &mut out);
    out.into_iter().filter(|p| permutation_is_even(p)).collect()
}

fn permute_collect(arr: &mut [usize; 4], k: usize, out: &mut Vec<[usize; 4]>) {
    if k == 4 {
        out.push(*arr);
        return;
    }
    for i in k..4 {
        arr.swap(k, i);
        permute_collect(arr, k + 1, out);
        arr.swap(k, i);
    }
}

fn permutation_is_even(p: &[usize; 4]) -> bool {
    let mut inversions = 0;
    for i in 0..4 {
        for j in (i + 1)..4 {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

fn f4(field: &Field) -> Result<Vec<FVector>, RootsError> {
    let mut roots = b_series(field, 4)?;
    let half = AlgebraicNumber::from_rational(field, rat_from_i64(1, 2));
    for signs in 0..16u8 {
        let coords = (0..4)
            .map(|slot| {
                if signs & (1 << slot) != 0 {
                    -&half
                } else {
                    half.clone()
                }
            })
            .collect();
        roots.push(FVector::new(coords));
    }
    Ok(roots)
}

/// E8 roots normalized to unit length; E7 and E6 as the standard orthogonal
/// slices. Construction-only: group enumeration is refused for these.
fn e_series(field: &Field, k: u8) -> Result<Vec<FVector>, RootsError> {
    let c = inv_sqrt2(field)?; // 1/sqrt2
    let q = &c * &AlgebraicNumber::from_rational(field, rat_from_i64(1, 2)); // 1/(2 sqrt2)
    let mut roots = Vec::new();
    // (+-e_i +- e_j)/sqrt2
    for i in 0..8 {
        for j in (i + 1)..8 {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut v = FVector::zero(field, 8);
                v.coords[i] = if si > 0 { c.clone() } else { -&c };
                v.coords[j] = if sj > 0 { c.clone() } else { -&c };
                roots.push(v);
            }
        }
    }
    // (sum +- e_i)/(2 sqrt2) with an even number of minus signs
    for signs in 0u16..256 {
        if signs.count_ones() % 2 != 0 {
            continue;
        }
        let coords = (0..8)
            .map(|slot| {
                if signs & (1 << slot) != 0 {
                    -&q
                } else {
                    q.clone()
                }
            })
            .collect();
        roots.push(FVector::new(coords));
    }
    debug_assert_eq!(roots.len(), 240);
    if k == 8 {
        return Ok(roots);
    }
    // e7: orthogonal to e7 + e8; e6: additionally orthogonal to e6 + e8
    let field_ref = field;
    let sum = |a: usize, b: usize| {
        let mut v = FVector::zero(field_ref, 8);
        v.coords[a] = AlgebraicNumber::one(field_ref);
        v.coords[b] = AlgebraicNumber::one(field_ref);
        v
    };
    let w1 = sum(6, 7);
    let filtered: Vec<FVector> = roots
        .into_iter()
        .filter(|r| r.dot(&w1).is_zero())
        .collect();
    if k == 7 {
        return Ok(filtered);
    }
    let w2 = sum(5, 7);
    Ok(filtered
        .into_iter()
        .filter(|r| r.dot(&w2).is_zero())
        .collect())
}
