//! Dense exact vectors and matrices over Q(theta).

use serde::{Deserialize, Serialize};

use super::field::Field;
use super::num::AlgebraicNumber;
use super::AlgebraError;

/// Vector with exact entries.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FVector {
    pub coords: Vec<AlgebraicNumber>,
}

impl std::fmt::Debug for FVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl FVector {
    pub fn new(coords: Vec<AlgebraicNumber>) -> Self {
        Self { coords }
    }

    pub fn zero(field: &Field, dim: usize) -> Self {
        Self { coords: vec![AlgebraicNumber::zero(field); dim] }
    }

    pub fn basis(field: &Field, dim: usize, i: usize) -> Self {
        let mut v = Self::zero(field, dim);
        v.coords[i] = AlgebraicNumber::one(field);
        v
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn field(&self) -> &Field {
        self.coords[0].field()
    }

    pub fn dot(&self, other: &Self) -> AlgebraicNumber {
        assert_eq!(self.dim(), other.dim(), "dot of mismatched dims");
        let mut acc = AlgebraicNumber::zero(self.field());
        for (a, b) in self.coords.iter().zip(&other.coords) {
            acc += &(a * b);
        }
        acc
    }

    pub fn norm_sq(&self) -> AlgebraicNumber {
        self.dot(self)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Self { coords: self.coords.iter().map(|a| -a).collect() }
    }

    pub fn scale(&self, s: &AlgebraicNumber) -> Self {
        Self { coords: self.coords.iter().map(|a| a * s).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(AlgebraicNumber::is_zero)
    }

    /// Concatenate into a higher-dimensional block vector.
    pub fn concat(&self, other: &Self) -> Self {
        let mut coords = self.coords.clone();
        coords.extend(other.coords.iter().cloned());
        Self { coords }
    }

    pub fn canonical_bytes(&self) -> Vec<u8> {
        let mut out = Vec::new();
        for c in &self.coords {
            c.canonical_bytes(&mut out);
        }
        out
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coords.iter().map(AlgebraicNumber::to_f64).collect()
    }
}

/// Square matrix with exact entries, row-major.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FMatrix {
    pub rows: Vec<Vec<AlgebraicNumber>>,
}

impl std::fmt::Debug for FMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "FMatrix[")?;
        for r in &self.rows {
            write!(f, "  [")?;
            for (i, c) in r.iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{c}")?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl FMatrix {
    pub fn from_rows(rows: Vec<Vec<AlgebraicNumber>>) -> Self {
        let n = rows.len();
        for r in &rows {
            assert_eq!(r.len(), n, "matrix must be square");
        }
        Self { rows }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut rows = vec![vec![AlgebraicNumber::zero(field); n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = AlgebraicNumber::one(field);
        }
        Self { rows }
    }

    pub fn minus_identity(field: &Field, n: usize) -> Self {
        let mut m = Self::identity(field, n);
        for (i, row) in m.rows.iter_mut().enumerate() {
            row[i] = -&row[i];
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn field(&self) -> &Field {
        self.rows[0][0].field()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.dim();
        assert_eq!(n, other.dim());
        let field = self.field();
        let mut rows = vec![vec![AlgebraicNumber::zero(field); n]; n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.rows[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.rows[k][j];
                    if b.is_zero() {
                        continue;
                    }
                    rows[i][j] += &(a * b);
                }
            }
        }
        Self { rows }
    }

    pub fn mul_vec(&self, v: &FVector) -> FVector {
        let n = self.dim();
        assert_eq!(n, v.dim());
        let field = self.field();
        let mut out = vec![AlgebraicNumber::zero(field); n];
        for i in 0..n {
            for j in 0..n {
                let a = &self.rows[i][j];
                if a.is_zero() || v.coords[j].is_zero() {
                    continue;
                }
                out[i] += &(a * &v.coords[j]);
            }
        }
        FVector::new(out)
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim();
        let mut rows = vec![Vec::with_capacity(n); n];
        for j in 0..n {
            for row in &self.rows {
                rows[j].push(row[j].clone());
            }
        }
        Self { rows }
    }

    pub fn is_orthogonal(&self) -> bool {
        let prod = self.transpose().mul(self);
        prod == Self::identity(self.field(), self.dim())
    }

    /// Exact determinant by Gaussian elimination with exact division.
    pub fn det(&self) -> AlgebraicNumber {
        let n = self.dim();
        let field = self.field();
        let mut m: Vec<Vec<AlgebraicNumber>> = self.rows.clone();
        let mut det = AlgebraicNumber::one(field);
        for col in 0..n {
            let pivot_row = (col..n).find(|&r| !m[r][col].is_zero());
            let Some(p) = pivot_row else {
                return AlgebraicNumber::zero(field);
            };
            if p != col {
                m.swap(p, col);
                det = -det;
            }
            let pivot = m[col][col].clone();
            det = &det * &pivot;
            let pivot_inv = pivot.inv().expect("nonzero pivot");
            for r in (col + 1)..n {
                if m[r][col].is_zero() {
                    continue;
                }
                let factor = &m[r][col] * &pivot_inv;
                for c in col..n {
                    let delta = &factor * &m[col][c];
                    m[r][c] -= &delta;
                }
            }
        }
        det
    }

    /// Solve M x = b exactly; errors when singular.
    pub fn solve(&self, b: &FVector) -> Result<FVector, AlgebraError> {
        let n = self.dim();
        assert_eq!(n, b.dim());
        let field = self.field();
        let mut m = self.rows.clone();
        let mut rhs = b.coords.clone();
        for col in 0..n {
            let pivot_row = (col..n).find(|&r| !m[r][col].is_zero());
            let Some(p) = pivot_row else {
                return Err(AlgebraError::SingularMatrix);
            };
            m.swap(p, col);
            rhs.swap(p, col);
            let pivot_inv = m[col][col].inv().expect("nonzero pivot");
            for r in (col + 1)..n {
                if m[r][col].is_zero() {
                    continue;
                }
                let factor = &m[r][col] * &pivot_inv;
                for c in col..n {
                    let delta = &factor * &m[col][c];
                    m[r][c] -= &delta;
                }
                let delta = &factor * &rhs[col];
                rhs[r] -= &delta;
            }
        }
        let mut x = vec![AlgebraicNumber::zero(field); n];
        for row in (0..n).rev() {
            let mut acc = rhs[row].clone();
            for c in (row + 1)..n {
                acc -= &(&m[row][c] * &x[c]);
            }
            x[row] = &acc / &m[row][row];
        }
        Ok(FVector::new(x))
    }

    /// Rank by row reduction; works on non-square inputs via an explicit row
    /// list, so it is exposed as a free function too.
    pub fn rank(rows: &[FVector]) -> usize {
        rank_of_rows(rows)
    }

    /// Orthogonal reflection in the hyperplane normal to a unit vector.
    pub fn reflection(alpha: &FVector) -> Self {
        let n = alpha.dim();
        let field = alpha.field();
        let two = AlgebraicNumber::from_integer(field, 2);
        let mut rows = Self::identity(field, n).rows;
        for i in 0..n {
            for j in 0..n {
                let delta = &(&two * &alpha.coords[i]) * &alpha.coords[j];
                rows[i][j] -= &delta;
            }
        }
        Self { rows }
    }

    pub fn canonical_bytes(&self) -> Vec<u8> {
        let mut out = Vec::new();
        for r in &self.rows {
            for c in r {
                c.canonical_bytes(&mut out);
            }
        }
        out
    }

    /// Inverse of an orthogonal matrix is its transpose; general inverse via
    /// column solves.
    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        let n = self.dim();
        let field = self.field();
        let mut cols = Vec::with_capacity(n);
        for i in 0..n {
            let e = FVector::basis(field, n, i);
            cols.push(self.solve(&e)?);
        }
        let mut rows = vec![vec![AlgebraicNumber::zero(field); n]; n];
        for (j, col) in cols.iter().enumerate() {
            for i in 0..n {
                rows[i][j] = col.coords[i].clone();
            }
        }
        Ok(Self { rows })
    }
}

/// Rank of a list of vectors, by exact row reduction.
pub fn rank_of_rows(rows: &[FVector]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let dim = rows[0].dim();
    let mut m: Vec<Vec<AlgebraicNumber>> = rows.iter().map(|r| r.coords.clone()).collect();
    let mut rank = 0;
    for col in 0..dim {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(p, rank);
        let pivot_inv = m[rank][col].inv().expect("nonzero pivot");
        for r in (rank + 1)..m.len() {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] * &pivot_inv;
            for c in col..dim {
                let delta = &factor * &m[rank][c];
                m[r][c] -= &delta;
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::make_field;
    use crate::algebra::num::{embed_cos, embed_sin, rat_from_i64};

    fn num(field: &Field, p: i64, q: i64) -> AlgebraicNumber {
        AlgebraicNumber::from_rational(field, rat_from_i64(p, q))
    }

    #[test]
    fn det_identity_is_one() {
        let f = make_field(4).unwrap();
        let m = FMatrix::identity(&f, 3);
        assert!(m.det().is_one());
    }

    #[test]
    fn reflection_matrices_are_involutive_orthogonal_det_minus_one() {
        let f = make_field(4).unwrap();
        // alpha = (1/sqrt2, 1/sqrt2): coordinates sqrt2/2
        let half_sqrt2 = embed_cos(&f, 1, 4).unwrap();
        let alpha = FVector::new(vec![half_sqrt2.clone(), half_sqrt2]);
        assert!(alpha.norm_sq().is_one());
        let s = FMatrix::reflection(&alpha);
        let id = FMatrix::identity(&f, 2);
        assert_eq!(s.mul(&s), id);
        assert!(s.is_orthogonal());
        assert_eq!(s.det(), num(&f, -1, 1));
    }

    #[test]
    fn rotation_by_pi_over_3_has_det_one() {
        let f = make_field(6).unwrap();
        let c = embed_cos(&f, 1, 3).unwrap();
        let s = embed_sin(&f, 1, 3).unwrap();
        let rot = FMatrix::from_rows(vec![
            vec![c.clone(), -&s],
            vec![s.clone(), c.clone()],
        ]);
        assert!(rot.det().is_one());
        assert!(rot.is_orthogonal());
        // product of two reflection determinants
        let a0 = FVector::new(vec![
            AlgebraicNumber::one(&f),
            AlgebraicNumber::zero(&f),
        ]);
        let s0 = FMatrix::reflection(&a0);
        assert_eq!(&s0.det() * &s0.det(), AlgebraicNumber::one(&f));
    }

    #[test]
    fn solve_and_inverse() {
        let f = make_field(4).unwrap();
        let t = AlgebraicNumber::theta(&f);
        let m = FMatrix::from_rows(vec![
            vec![t.clone(), num(&f, 1, 1)],
            vec![num(&f, 1, 1), num(&f, 1, 1)],
        ]);
        let b = FVector::new(vec![num(&f, 3, 1), num(&f, 2, 1)]);
        let x = m.solve(&b).unwrap();
        assert_eq!(m.mul_vec(&x), b);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), FMatrix::identity(&f, 2));
        // singular case
        let sing = FMatrix::from_rows(vec![
            vec![num(&f, 1, 1), num(&f, 2, 1)],
            vec![num(&f, 2, 1), num(&f, 4, 1)],
        ]);
        assert!(sing.solve(&b).is_err());
        assert!(sing.det().is_zero());
    }

    #[test]
    fn rank_computation() {
        let f = make_field(4).unwrap();
        let e1 = FVector::basis(&f, 3, 0);
        let e2 = FVector::basis(&f, 3, 1);
        let sum = e1.add(&e2);
        assert_eq!(rank_of_rows(&[e1.clone(), e2.clone(), sum]), 2);
        assert_eq!(rank_of_rows(&[e1, e2]), 2);
    }
}
