//! Rational interval arithmetic with rigorous enclosures of pi and cosine.
//!
//! This is the engine behind exact sign determination: an algebraic number
//! given in the power basis of theta = 2cos(pi/N) is evaluated over an
//! interval enclosure of theta, and the precision is refined until the
//! interval excludes zero (the syntactic zero test handles the zero case, so
//! refinement terminates).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

/// Closed interval with exact rational endpoints, `lo <= hi`.
#[derive(Clone, Debug, PartialEq)]
pub struct RatInterval {
    pub lo: Rat,
    pub hi: Rat,
}

impl RatInterval {
    pub fn point(v: Rat) -> Self {
        Self { lo: v.clone(), hi: v }
    }

    pub fn new(lo: Rat, hi: Rat) -> Self {
        debug_assert!(lo <= hi);
        Self { lo, hi }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self { lo: &self.lo + &other.lo, hi: &self.hi + &other.hi }
    }

    pub fn add_point(&self, v: &Rat) -> Self {
        Self { lo: &self.lo + v, hi: &self.hi + v }
    }

    pub fn neg(&self) -> Self {
        Self { lo: -self.hi.clone(), hi: -self.lo.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let cands = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let mut lo = cands[0].clone();
        let mut hi = cands[0].clone();
        for c in &cands[1..] {
            if *c < lo {
                lo = c.clone();
            }
            if *c > hi {
                hi = c.clone();
            }
        }
        Self { lo, hi }
    }

    pub fn scale(&self, v: &Rat) -> Self {
        if v.is_negative() {
            Self { lo: &self.hi * v, hi: &self.lo * v }
        } else {
            Self { lo: &self.lo * v, hi: &self.hi * v }
        }
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Sign of every point in the interval, if consistent.
    pub fn definite_sign(&self) -> Option<i8> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else {
            None
        }
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rat {
        (&self.lo + &self.hi) / Rat::from_integer(BigInt::from(2))
    }

    /// Round endpoints outward to denominator 2^bits, bounding coefficient
    /// growth during long Horner evaluations.
    pub fn round_out(&self, bits: u32) -> Self {
        Self {
            lo: dyadic_floor(&self.lo, bits),
            hi: dyadic_ceil(&self.hi, bits),
        }
    }
}

fn dyadic_floor(r: &Rat, bits: u32) -> Rat {
    let scaled_num = r.numer() << bits;
    let q = scaled_num.div_floor(r.denom());
    Rat::new(q, BigInt::one() << bits)
}

fn dyadic_ceil(r: &Rat, bits: u32) -> Rat {
    let scaled_num = r.numer() << bits;
    let q = scaled_num.div_ceil(r.denom());
    Rat::new(q, BigInt::one() << bits)
}

fn pow2_inv(bits: u32) -> Rat {
    Rat::new(BigInt::one(), BigInt::one() << bits)
}

/// Enclosure of arctan(1/x) for integer x >= 2, via the alternating series.
/// Terms strictly decrease, so consecutive partial sums bracket the value.
/// The partial sum is kept as a dyadically rounded interval so denominators
/// stay bounded.
fn atan_inv_enclosure(x: u64, bits: u32) -> RatInterval {
    let work_bits = bits + 16;
    let eps = pow2_inv(bits + 8);
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut partial = RatInterval::point(Rat::zero());
    let mut denom_pow = x.clone(); // x^(2k+1)
    let mut k: u64 = 0;
    loop {
        let term = Rat::new(BigInt::one(), &denom_pow * BigInt::from(2 * k + 1));
        if k % 2 == 0 {
            partial = partial.add_point(&term).round_out(work_bits);
            if term < eps {
                return RatInterval::new(&partial.lo - &term, partial.hi);
            }
        } else {
            partial = partial.add_point(&-term.clone()).round_out(work_bits);
            if term < eps {
                return RatInterval::new(partial.lo.clone(), &partial.hi + &term);
            }
        }
        denom_pow *= &x2;
        k += 1;
    }
}

/// Rigorous enclosure of pi via Machin's formula, memoized at the highest
/// precision computed so far.
pub fn pi_enclosure(bits: u32) -> RatInterval {
    use std::sync::Mutex;
    static CACHE: Mutex<Option<(u32, RatInterval)>> = Mutex::new(None);
    {
        let cache = CACHE.lock().unwrap();
        if let Some((cached_bits, interval)) = cache.as_ref() {
            if *cached_bits >= bits {
                return interval.clone();
            }
        }
    }
    let a = atan_inv_enclosure(5, bits + 6);
    let b = atan_inv_enclosure(239, bits + 6);
    let sixteen = Rat::from_integer(BigInt::from(16));
    let four = Rat::from_integer(BigInt::from(4));
    let result = RatInterval::new(
        &a.lo * &sixteen - &b.hi * &four,
        &a.hi * &sixteen - &b.lo * &four,
    )
    .round_out(bits + 4);
    *CACHE.lock().unwrap() = Some((bits, result.clone()));
    result
}

/// Enclosure of cos(x) for exact rational x with 0 <= x <= 4, by Taylor
/// series with an alternating-tail bound. Interval accumulation with dyadic
/// rounding keeps per-term denominators bounded.
fn cos_point_enclosure(x: &Rat, bits: u32) -> RatInterval {
    debug_assert!(!x.is_negative());
    let work_bits = bits + 24;
    let eps = pow2_inv(bits + 8);
    let x2 = RatInterval::point(x * x).round_out(work_bits);
    let mut sum = RatInterval::point(Rat::one());
    let mut term = RatInterval::point(Rat::one()); // x^(2k) / (2k)!
    let mut k: u64 = 0;
    loop {
        k += 1;
        let denom = Rat::new(BigInt::one(), BigInt::from((2 * k - 1) * (2 * k)));
        term = term.mul(&x2).scale(&denom).round_out(work_bits);
        if k % 2 == 1 {
            sum = sum.add(&term.neg()).round_out(work_bits);
        } else {
            sum = sum.add(&term).round_out(work_bits);
        }
        // Tail is bounded by the next term once terms are decreasing, which
        // for x <= 4 holds from k >= 4 on.
        if k >= 4 && term.hi < eps {
            let bound = (&term.hi * &x2.hi).max(Rat::zero());
            return RatInterval::new(&sum.lo - &bound, &sum.hi + &bound).round_out(bits + 4);
        }
    }
}

/// Enclosure of cos over a rational interval contained in [0, pi], using that
/// cosine decreases there.
pub fn cos_decreasing_enclosure(x: &RatInterval, bits: u32) -> RatInterval {
    let at_hi = cos_point_enclosure(&x.hi, bits);
    let at_lo = cos_point_enclosure(&x.lo, bits);
    RatInterval::new(at_hi.lo, at_lo.hi)
}

/// Enclosure of theta = 2 cos(pi / n).
pub fn two_cos_pi_over(n: u32, bits: u32) -> RatInterval {
    let pi = pi_enclosure(bits + 8);
    let n_rat = Rat::from_integer(BigInt::from(n));
    let arg = RatInterval::new(&pi.lo / &n_rat, &pi.hi / &n_rat);
    let c = cos_decreasing_enclosure(&arg, bits + 4);
    let two = Rat::from_integer(BigInt::from(2));
    RatInterval::new(&c.lo * &two, &c.hi * &two).round_out(bits)
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    // Scale to keep integer magnitudes in range before converting.
    let num_bits = r.numer().bits() as i64;
    let den_bits = r.denom().bits() as i64;
    let shift = (num_bits.max(den_bits) - 500).max(0) as u64;
    let num = r.numer() >> shift;
    let den = r.denom() >> shift;
    let nf = bigint_to_f64(&num);
    let df = bigint_to_f64(&den);
    if df == 0.0 {
        if nf >= 0.0 {
            f64::INFINITY
        } else {
            f64::NEG_INFINITY
        }
    } else {
        nf / df
    }
}

fn bigint_to_f64(x: &BigInt) -> f64 {
    let mut out = 0.0f64;
    let (sign, digits) = x.to_u64_digits();
    for d in digits.iter().rev() {
        out = out * 1.8446744073709552e19 + *d as f64;
    }
    if sign == num_bigint::Sign::Minus {
        -out
    } else {
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> Rat {
        Rat::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn pi_enclosure_brackets_pi() {
        let pi = pi_enclosure(128);
        // rational bounds on pi, good to 10 digits
        assert!(pi.lo < rat(31415926536, 10000000000));
        assert!(pi.hi > rat(31415926535, 10000000000));
        let width = rat_to_f64(&pi.width());
        assert!(width < 1e-35, "width {width}");
    }

    #[test]
    fn cos_enclosure_matches_known_values() {
        // cos(pi/3) = 1/2 exactly
        let pi = pi_enclosure(96);
        let third = RatInterval::new(&pi.lo / rat(3, 1), &pi.hi / rat(3, 1));
        let c = cos_decreasing_enclosure(&third, 96);
        assert!(c.lo < rat(1, 2) && rat(1, 2) < c.hi);
        assert!(rat_to_f64(&c.width()) < 1e-25);
    }

    #[test]
    fn theta_enclosures() {
        // 2cos(pi/4) = sqrt(2): check the enclosure squares around 2
        let t = two_cos_pi_over(4, 128);
        assert!(rat_to_f64(&t.width()) < 1e-37);
        let sq_lo = &t.lo * &t.lo;
        let sq_hi = &t.hi * &t.hi;
        assert!(sq_lo < rat(2, 1) && rat(2, 1) < sq_hi);
        // 2cos(pi/5) = golden ratio: satisfies x^2 - x - 1 = 0
        let t5 = two_cos_pi_over(5, 128);
        let m = t5.midpoint();
        let residual = &m * &m - &m - rat(1, 1);
        assert!(rat_to_f64(&residual).abs() < 1e-35);
    }

    #[test]
    fn interval_mul_covers_products() {
        let a = RatInterval::new(rat(-2, 1), rat(3, 1));
        let b = RatInterval::new(rat(-1, 1), rat(5, 1));
        let p = a.mul(&b);
        assert_eq!(p.lo, rat(-10, 1));
        assert_eq!(p.hi, rat(15, 1));
    }

    #[test]
    fn dyadic_rounding_is_outward() {
        let x = RatInterval::new(rat(1, 3), rat(2, 3));
        let r = x.round_out(8);
        assert!(r.lo <= x.lo && x.hi <= r.hi);
        assert!(rat_to_f64(&r.width()) - rat_to_f64(&x.width()) < 0.01);
    }
}
