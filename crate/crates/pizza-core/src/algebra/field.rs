//! The real cyclotomic fields Q(theta), theta = 2cos(pi/N).
//!
//! The minimal polynomial of theta is obtained by folding the palindromic
//! cyclotomic polynomial Phi_{2N}: writing Phi_{2N}(x) = x^d psi(x + 1/x)
//! with d = deg(Phi_{2N})/2, the fold psi is the minimal polynomial of
//! zeta + 1/zeta = 2cos(pi/N) and has degree phi(2N)/2.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::interval::{two_cos_pi_over, Rat, RatInterval};
use super::AlgebraError;

/// Default cap on the field degree; H4, F4 and all dihedral cases used by the
/// dissection machinery sit far below this.
pub const DEFAULT_DEGREE_CAP: usize = 64;

/// Description of the working field Q(theta), theta = 2cos(pi/N).
///
/// Values of this type are always shared behind an [`Arc`] obtained from
/// [`make_field`]; the constructor memoizes per N, so elements of the same
/// field share one allocation and field identity can be checked cheaply.
pub struct FieldSpec {
    n: u32,
    /// Monic integer minimal polynomial of theta, ascending coefficients,
    /// length `degree + 1`.
    min_poly: Vec<BigInt>,
    degree: usize,
    /// theta^(degree + j), j = 0..degree-1, expressed in the power basis.
    high_powers: Vec<Vec<Rat>>,
    /// Cached enclosures of theta at increasing precision.
    theta_cache: Mutex<HashMap<u32, RatInterval>>,
}

impl std::fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FieldSpec")
            .field("n", &self.n)
            .field("degree", &self.degree)
            .finish()
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
    }
}
impl Eq for FieldSpec {}

pub type Field = Arc<FieldSpec>;

fn registry() -> &'static Mutex<HashMap<u32, Field>> {
    static REG: OnceLock<Mutex<HashMap<u32, Field>>> = OnceLock::new();
    REG.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Construct (or fetch) the field Q(2cos(pi/n)) with the default degree cap.
pub fn make_field(n: u32) -> Result<Field, AlgebraError> {
    make_field_with_cap(n, DEFAULT_DEGREE_CAP)
}

pub fn make_field_with_cap(n: u32, cap: usize) -> Result<Field, AlgebraError> {
    if n == 0 {
        return Err(AlgebraError::InvalidFieldIndex(n));
    }
    let degree = field_degree(n);
    if degree > cap {
        return Err(AlgebraError::DegreeCapExceeded { n, degree, cap });
    }
    if let Some(f) = registry().lock().unwrap().get(&n) {
        return Ok(f.clone());
    }
    let min_poly = min_poly_two_cos(n);
    debug_assert_eq!(min_poly.len(), degree + 1);
    let high_powers = precompute_high_powers(&min_poly, degree);
    let field = Arc::new(FieldSpec {
        n,
        min_poly,
        degree,
        high_powers,
        theta_cache: Mutex::new(HashMap::new()),
    });
    let mut reg = registry().lock().unwrap();
    Ok(reg.entry(n).or_insert(field).clone())
}

impl FieldSpec {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn min_poly(&self) -> &[BigInt] {
        &self.min_poly
    }

    /// theta as a rational number, only valid when degree == 1.
    pub fn theta_rational(&self) -> Option<Rat> {
        if self.degree == 1 {
            // x + c0 = 0
            Some(Rat::from_integer(-self.min_poly[0].clone()))
        } else {
            None
        }
    }

    pub(crate) fn high_power(&self, j: usize) -> &[Rat] {
        &self.high_powers[j]
    }

    /// Rigorous enclosure of theta with width below 2^-bits.
    pub fn theta_enclosure(&self, bits: u32) -> RatInterval {
        if let Some(r) = self.theta_rational() {
            return RatInterval::point(r);
        }
        let mut cache = self.theta_cache.lock().unwrap();
        cache
            .entry(bits)
            .or_insert_with(|| two_cos_pi_over(self.n, bits))
            .clone()
    }
}

/// Degree of Q(2cos(pi/n)) over Q: phi(2n)/2, with the n = 1 special case.
pub fn field_degree(n: u32) -> usize {
    if n == 1 {
        return 1; // theta = -2
    }
    (euler_phi(2 * n as u64) / 2) as usize
}

pub fn euler_phi(mut m: u64) -> u64 {
    let mut result = m;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Minimal polynomial of 2cos(pi/n), monic with integer coefficients.
pub fn min_poly_two_cos(n: u32) -> Vec<BigInt> {
    if n == 1 {
        // theta = -2
        return vec![BigInt::from(2), BigInt::one()];
    }
    let cyc = cyclotomic(2 * n as u64);
    fold_palindromic(&cyc)
}

/// Cyclotomic polynomial Phi_m as ascending integer coefficients.
pub fn cyclotomic(m: u64) -> Vec<BigInt> {
    let mut cache: HashMap<u64, Vec<BigInt>> = HashMap::new();
    cyclotomic_cached(m, &mut cache)
}

fn cyclotomic_cached(m: u64, cache: &mut HashMap<u64, Vec<BigInt>>) -> Vec<BigInt> {
    if let Some(p) = cache.get(&m) {
        return p.clone();
    }
    // x^m - 1
    let mut num = vec![BigInt::zero(); m as usize + 1];
    num[0] = -BigInt::one();
    num[m as usize] = BigInt::one();
    let mut result = num;
    for d in 1..m {
        if m % d == 0 {
            let phi_d = cyclotomic_cached(d, cache);
            result = poly_div_exact(&result, &phi_d);
        }
    }
    cache.insert(m, result.clone());
    result
}

/// Exact division of integer polynomials, panicking on a nonzero remainder
/// (cyclotomic recursion guarantees divisibility).
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    let dn = den.len() - 1;
    assert!(den[dn].is_one(), "divisor must be monic");
    let qn = rem.len() - 1 - dn;
    let mut quot = vec![BigInt::zero(); qn + 1];
    for i in (0..=qn).rev() {
        let c = rem[i + dn].clone();
        quot[i] = c.clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
    }
    assert!(rem.iter().all(Zero::is_zero), "non-exact polynomial division");
    quot
}

/// Fold a monic palindromic polynomial P of even degree 2d into psi with
/// P(x) = x^d psi(x + 1/x).
fn fold_palindromic(p: &[BigInt]) -> Vec<BigInt> {
    let deg = p.len() - 1;
    assert!(deg % 2 == 0, "expected even degree, got {deg}");
    let d = deg / 2;
    for i in 0..=deg {
        assert_eq!(p[i], p[deg - i], "polynomial is not palindromic");
    }
    // Base polynomials p_k(y) = z^k + z^-k with y = z + 1/z:
    // p_0 = 2, p_1 = y, p_k = y p_{k-1} - p_{k-2}.
    let mut pk_prev: Vec<BigInt> = vec![BigInt::from(2)];
    let mut pk: Vec<BigInt> = vec![BigInt::zero(), BigInt::one()];
    // psi = a_d + sum_{k=1..d} a_{d+k} p_k
    let mut psi = vec![BigInt::zero(); d + 1];
    psi[0] = p[d].clone();
    for k in 1..=d {
        let coeff = &p[d + k];
        for (i, c) in pk.iter().enumerate() {
            psi[i] += coeff * c;
        }
        if k < d {
            // next = y*pk - pk_prev
            let mut next = vec![BigInt::zero(); pk.len() + 1];
            for (i, c) in pk.iter().enumerate() {
                next[i + 1] = c.clone();
            }
            for (i, c) in pk_prev.iter().enumerate() {
                next[i] -= c;
            }
            pk_prev = std::mem::take(&mut pk);
            pk = next;
        }
    }
    psi
}

fn precompute_high_powers(min_poly: &[BigInt], degree: usize) -> Vec<Vec<Rat>> {
    // theta^degree = -(c_0 + ... + c_{d-1} theta^{d-1})
    let base: Vec<Rat> = (0..degree)
        .map(|i| -Rat::from_integer(min_poly[i].clone()))
        .collect();
    let mut powers = vec![base.clone()];
    for _ in 1..degree.max(1) {
        let prev = powers.last().unwrap();
        // multiply by theta: shift, then reduce the overflow coefficient
        let overflow = prev[degree - 1].clone();
        let mut next = vec![Rat::zero(); degree];
        for i in 1..degree {
            next[i] = prev[i - 1].clone();
        }
        if !overflow.is_zero() {
            for i in 0..degree {
                next[i] += &overflow * &base[i];
            }
        }
        powers.push(next);
    }
    powers
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::interval::rat_to_f64;

    #[test]
    fn cyclotomic_small_cases() {
        let to_i64 = |v: Vec<BigInt>| -> Vec<i64> {
            v.into_iter().map(|c| i64::try_from(c).unwrap()).collect()
        };
        assert_eq!(to_i64(cyclotomic(1)), vec![-1, 1]);
        assert_eq!(to_i64(cyclotomic(2)), vec![1, 1]);
        assert_eq!(to_i64(cyclotomic(4)), vec![1, 0, 1]);
        assert_eq!(to_i64(cyclotomic(8)), vec![1, 0, 0, 0, 1]);
        assert_eq!(to_i64(cyclotomic(10)), vec![1, -1, 1, -1, 1]);
        assert_eq!(to_i64(cyclotomic(12)), vec![1, 0, -1, 0, 1]);
        // degree of Phi_105 is phi(105) = 48 and it has a -2 coefficient
        let c105 = cyclotomic(105);
        assert_eq!(c105.len(), 49);
        assert!(c105.iter().any(|c| *c == BigInt::from(-2)));
    }

    #[test]
    fn min_poly_known_fields() {
        let to_i64 = |v: Vec<BigInt>| -> Vec<i64> {
            v.into_iter().map(|c| i64::try_from(c).unwrap()).collect()
        };
        // N=4: theta = sqrt(2), x^2 - 2
        assert_eq!(to_i64(min_poly_two_cos(4)), vec![-2, 0, 1]);
        // N=2: theta = 0
        assert_eq!(to_i64(min_poly_two_cos(2)), vec![0, 1]);
        // N=3: theta = 1
        assert_eq!(to_i64(min_poly_two_cos(3)), vec![-1, 1]);
        // N=5: golden ratio, x^2 - x - 1
        assert_eq!(to_i64(min_poly_two_cos(5)), vec![-1, -1, 1]);
        // N=6: theta = sqrt(3)
        assert_eq!(to_i64(min_poly_two_cos(6)), vec![-3, 0, 1]);
        // N=1: theta = -2
        assert_eq!(to_i64(min_poly_two_cos(1)), vec![2, 1]);
    }

    #[test]
    fn min_poly_root_is_numerically_correct() {
        for n in [4u32, 5, 6, 8, 12, 16, 7, 9] {
            let p = min_poly_two_cos(n);
            let theta = 2.0 * (std::f64::consts::PI / n as f64).cos();
            let mut val = 0.0;
            for c in p.iter().rev() {
                val = val * theta + rat_to_f64(&Rat::from_integer(c.clone()));
            }
            assert!(val.abs() < 1e-9, "N={n}: residual {val}");
            assert_eq!(p.len() - 1, field_degree(n), "degree mismatch at N={n}");
        }
    }

    #[test]
    fn degree_cap_is_enforced() {
        let err = make_field_with_cap(257, 64).unwrap_err();
        match err {
            AlgebraError::DegreeCapExceeded { n: 257, .. } => {}
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn field_registry_shares_instances() {
        let a = make_field(12).unwrap();
        let b = make_field(12).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
        assert_eq!(a.degree(), 4); // phi(24)/2
    }

    #[test]
    fn theta_enclosure_brackets() {
        let f = make_field(8).unwrap();
        let enc = f.theta_enclosure(100);
        let theta = 2.0 * (std::f64::consts::PI / 8.0).cos();
        assert!(rat_to_f64(&enc.lo) <= theta && theta <= rat_to_f64(&enc.hi));
        assert!(rat_to_f64(&enc.width()) < 1e-29);
    }
}
