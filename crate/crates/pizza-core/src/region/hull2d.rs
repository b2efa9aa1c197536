//! Exact planar convex hull (monotone chain with exact orientation tests).

use crate::algebra::{AlgebraicNumber, FVector};

/// Sign of the cross product (b - a) x (c - a).
pub fn orientation(a: &FVector, b: &FVector, c: &FVector) -> i8 {
    let abx = &b.coords[0] - &a.coords[0];
    let aby = &b.coords[1] - &a.coords[1];
    let acx = &c.coords[0] - &a.coords[0];
    let acy = &c.coords[1] - &a.coords[1];
    (&(&abx * &acy) - &(&aby * &acx)).sign()
}

/// Convex hull in counterclockwise order, collinear interior points dropped.
/// Handles degenerate inputs (all equal, all collinear) by returning the
/// extreme points only.
pub fn convex_hull_2d(points: &[FVector]) -> Vec<FVector> {
    let mut pts: Vec<FVector> = points.to_vec();
    pts.sort_by(|p, q| {
        cmp_num(&p.coords[0], &q.coords[0]).then_with(|| cmp_num(&p.coords[1], &q.coords[1]))
    });
    pts.dedup_by(|a, b| a == b);
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<FVector> = Vec::new();
    for p in &pts {
        while lower.len() >= 2
            && orientation(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= 0
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<FVector> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2
            && orientation(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= 0
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() < 2 {
        // fully collinear input collapses here; recover the two extremes
        return vec![pts[0].clone(), pts[pts.len() - 1].clone()];
    }
    lower
}

fn cmp_num(a: &AlgebraicNumber, b: &AlgebraicNumber) -> std::cmp::Ordering {
    a.cmp(b)
}

/// Exact shoelace area of a ccw-ordered polygon (signed; positive for ccw).
pub fn shoelace_area(vertices: &[FVector]) -> AlgebraicNumber {
    let field = vertices[0].field();
    let mut twice = AlgebraicNumber::zero(field);
    let n = vertices.len();
    for i in 0..n {
        let a = &vertices[i];
        let b = &vertices[(i + 1) % n];
        twice += &(&(&a.coords[0] * &b.coords[1]) - &(&a.coords[1] * &b.coords[0]));
    }
    twice.mul_rat(&crate::algebra::rat_from_i64(1, 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{make_field, rat_from_i64, AlgebraicNumber, Field};

    fn pt(f: &Field, x: i64, y: i64) -> FVector {
        FVector::new(vec![
            AlgebraicNumber::from_rational(f, rat_from_i64(x, 1)),
            AlgebraicNumber::from_rational(f, rat_from_i64(y, 1)),
        ])
    }

    #[test]
    fn hull_of_square_with_interior_points() {
        let f = make_field(4).unwrap();
        let pts = vec![
            pt(&f, 0, 0),
            pt(&f, 2, 0),
            pt(&f, 2, 2),
            pt(&f, 0, 2),
            pt(&f, 1, 1),
            pt(&f, 1, 0), // collinear on an edge
        ];
        let hull = convex_hull_2d(&pts);
        assert_eq!(hull.len(), 4);
        assert_eq!(shoelace_area(&hull), AlgebraicNumber::from_integer(&f, 4));
    }

    #[test]
    fn collinear_inputs_collapse_to_segment() {
        let f = make_field(4).unwrap();
        let pts = vec![pt(&f, 0, 0), pt(&f, 1, 1), pt(&f, 3, 3), pt(&f, 2, 2)];
        let hull = convex_hull_2d(&pts);
        assert_eq!(hull.len(), 2);
        assert_eq!(hull[0], pt(&f, 0, 0));
        assert_eq!(hull[1], pt(&f, 3, 3));
    }
}
