//! Exact volume by pulling triangulation: fix the least vertex, triangulate
//! the facets combinatorially (a facet is an active vertex set of one
//! constraint), and sum |det|/n! over the apex simplices.

use std::collections::HashSet;

use crate::algebra::{rank_of_rows, rat_from_i64, AlgebraicNumber, FMatrix, FVector};

use super::{region_vertices, HalfOpenRegion, RegionError, MAX_EXACT_DIM};

pub fn exact_volume(region: &HalfOpenRegion) -> Result<AlgebraicNumber, RegionError> {
    let n = region.dim;
    if n > MAX_EXACT_DIM {
        return Err(RegionError::DimTooHigh { max: MAX_EXACT_DIM, got: n });
    }
    if !region.is_bounded() {
        return Err(RegionError::Unbounded);
    }
    let verts = region_vertices(region, false)?;
    let field = match verts.first() {
        Some(v) => v.field().clone(),
        None => return Ok(AlgebraicNumber::zero(region.field())),
    };
    if verts.len() < n + 1 {
        return Ok(AlgebraicNumber::zero(&field));
    }
    let diffs: Vec<FVector> = verts[1..].iter().map(|v| v.sub(&verts[0])).collect();
    if rank_of_rows(&diffs) < n {
        return Ok(AlgebraicNumber::zero(&field));
    }
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
    let all: Vec<usize> = (0..verts.len()).collect();
    let simplices = triangulate(&all, n, &verts, &actives);
    let mut total = AlgebraicNumber::zero(&field);
    for s in simplices {
        let rows: Vec<Vec<AlgebraicNumber>> = s[1..]
            .iter()
            .map(|&i| verts[i].sub(&verts[s[0]]).coords)
            .collect();
        let det = FMatrix::from_rows(rows).det();
        total += &det.abs();
    }
    let mut fact: i64 = 1;
    for k in 2..=(n as i64) {
        fact *= k;
    }
    Ok(total.mul_rat(&rat_from_i64(1, fact)))
}

/// Decompose a face (given by its sorted vertex indices, of affine dimension
/// `level`) into simplices sharing the face's least vertex as apex.
fn triangulate(
    face: &[usize],
    level: usize,
    verts: &[FVector],
    actives: &[Vec<usize>],
) -> Vec<Vec<usize>> {
    if level == 0 {
        debug_assert_eq!(face.len(), 1);
        return vec![face.to_vec()];
    }
    let apex = face[0];
    let mut sub_facets: HashSet<Vec<usize>> = HashSet::new();
    for act in actives {
        let s: Vec<usize> = face
            .iter()
            .copied()
            .filter(|i| act.binary_search(i).is_ok())
            .collect();
        if s.is_empty() || s.contains(&apex) {
            continue;
        }
        if affine_dim(&s, verts) == level - 1 {
            sub_facets.insert(s);
        }
    }
    let mut ordered: Vec<Vec<usize>> = sub_facets.into_iter().collect();
    ordered.sort();
    let mut out = Vec::new();
    for facet in ordered {
        for sub in triangulate(&facet, level - 1, verts, actives) {
            let mut simplex = Vec::with_capacity(sub.len() + 1);
            simplex.push(apex);
            simplex.extend(sub);
            out.push(simplex);
        }
    }
    out
}

fn affine_dim(indices: &[usize], verts: &[FVector]) -> usize {
    if indices.len() <= 1 {
        return 0;
    }
    let base = &verts[indices[0]];
    let rows: Vec<FVector> = indices[1..].iter().map(|&i| verts[i].sub(base)).collect();
    rank_of_rows(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{make_field, Field};
    use crate::region::Constraint;

    fn an(field: &Field, p: i64, q: i64) -> AlgebraicNumber {
        AlgebraicNumber::from_rational(field, rat_from_i64(p, q))
    }

    #[test]
    fn simplex_volume_half() {
        let f = make_field(4).unwrap();
        let tri = HalfOpenRegion::polygon(&[
            FVector::new(vec![an(&f, 0, 1), an(&f, 0, 1)]),
            FVector::new(vec![an(&f, 1, 1), an(&f, 0, 1)]),
            FVector::new(vec![an(&f, 0, 1), an(&f, 1, 1)]),
        ]);
        assert_eq!(exact_volume(&tri).unwrap(), an(&f, 1, 2));
    }

    #[test]
    fn half_open_box_volume_is_closure_volume() {
        let f = make_field(4).unwrap();
        let r = HalfOpenRegion::axis_box(
            &f,
            &[
                (an(&f, 0, 1), an(&f, 2, 5), true, false),
                (an(&f, 0, 1), an(&f, 1, 5), true, false),
            ],
        );
        assert_eq!(exact_volume(&r).unwrap(), an(&f, 2, 25));
    }

    #[test]
    fn octagon_volume_against_shoelace_oracle() {
        // conv(W(B2) . (1,0)): regular octagon on the unit circle
        let f = make_field(4).unwrap();
        let s = crate::roots::build_system("B2").unwrap();
        let one = AlgebraicNumber::one(&f);
        let p0 = FVector::new(vec![one.clone(), AlgebraicNumber::zero(&f)]);
        let orbit: Vec<FVector> = s
            .roots()
            .iter()
            .map(|_| p0.clone())
            .enumerate()
            .map(|(i, _)| {
                // orbit of p0 under reflections: the 8 roots themselves double
                s.roots()[i].clone()
            })
            .collect();
        let hull = crate::region::convex_hull_2d(&orbit);
        assert_eq!(hull.len(), 8);
        let region = HalfOpenRegion::polygon(&hull);
        let vol = exact_volume(&region).unwrap();
        let oracle = crate::region::hull2d::shoelace_area(&hull);
        assert_eq!(vol, oracle);
        // the octagon inscribed in the unit circle has area 2*sqrt(2)
        let theta = AlgebraicNumber::theta(&f); // sqrt 2
        assert_eq!(vol, &theta + &theta);
    }

    #[test]
    fn cube_and_shifted_tetrahedron_in_3d() {
        let f = make_field(4).unwrap();
        let cube = HalfOpenRegion::closed_box(
            &f,
            &[an(&f, -1, 2), an(&f, -1, 2), an(&f, -1, 2)],
            &[an(&f, 1, 2), an(&f, 1, 2), an(&f, 1, 2)],
        );
        assert_eq!(exact_volume(&cube).unwrap(), an(&f, 1, 1));
        // tetrahedron x,y,z >= 0, x+y+z <= 1/2 has volume (1/2)^3/6 = 1/48
        let mut cs = Vec::new();
        for i in 0..3 {
            cs.push(Constraint::new(FVector::basis(&f, 3, i), an(&f, 0, 1), false));
        }
        cs.push(Constraint::new(
            FVector::new(vec![an(&f, -1, 1), an(&f, -1, 1), an(&f, -1, 1)]),
            an(&f, -1, 2),
            false,
        ));
        let tet = HalfOpenRegion::from_constraints(3, cs);
        assert_eq!(exact_volume(&tet).unwrap(), an(&f, 1, 48));
    }

    #[test]
    fn lower_dimensional_regions_have_zero_volume() {
        let f = make_field(4).unwrap();
        let seg = HalfOpenRegion::axis_box(
            &f,
            &[
                (an(&f, 0, 1), an(&f, 5, 1), false, false),
                (an(&f, 1, 1), an(&f, 1, 1), false, false),
            ],
        );
        assert!(exact_volume(&seg).unwrap().is_zero());
        let empty = HalfOpenRegion::axis_box(
            &f,
            &[
                (an(&f, 0, 1), an(&f, 0, 1), true, false),
                (an(&f, 0, 1), an(&f, 1, 1), false, false),
            ],
        );
        assert!(exact_volume(&empty).unwrap().is_zero());
    }

    #[test]
    fn four_dimensional_cross_polytope_volume() {
        // conv(+-e_i) in R^4 has volume 2^4 / 4! = 2/3
        let f = make_field(4).unwrap();
        let mut cs = Vec::new();
        for signs in 0..16u8 {
            let coords: Vec<AlgebraicNumber> = (0..4)
                .map(|i| {
                    if signs & (1 << i) != 0 {
                        an(&f, -1, 1)
                    } else {
                        an(&f, 1, 1)
                    }
                })
                .collect();
            cs.push(Constraint::new(FVector::new(coords).neg(), an(&f, -1, 1), false));
        }
        let cross = HalfOpenRegion::from_constraints(4, cs);
        assert_eq!(exact_volume(&cross).unwrap(), an(&f, 2, 3));
    }
}
