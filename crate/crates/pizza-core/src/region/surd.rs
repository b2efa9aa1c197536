//! Formal sums of square roots of field elements, used for the intrinsic
//! volume V1 (perimeters involve lengths sqrt(s) that may leave the field).
//!
//! Each term c*sqrt(s) is canonicalized as sign(c) * u * sqrt(y) where the
//! whole field part is folded into the radicand first (c^2 s) and the
//! rational square content u^2 is then pulled back out. Equal single-term
//! values therefore always share a radicand, so sums with matching length
//! multisets cancel symbolically; interval evaluation is only used to
//! certify *dis*equality.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::interval::{Rat, RatInterval};
use crate::algebra::AlgebraicNumber;

use super::RegionError;

/// Value = sum of coeff * sqrt(radicand) with rational coefficients and
/// canonical nonnegative radicands.
#[derive(Clone, Debug)]
pub struct SurdSum {
    terms: Vec<(Rat, AlgebraicNumber)>,
}

impl SurdSum {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn from_elem(x: &AlgebraicNumber) -> Self {
        let one = AlgebraicNumber::one(x.field());
        Self::from_raw_terms(vec![(x.clone(), one)])
    }

    /// sqrt of a nonnegative field element, kept formal.
    pub fn sqrt(s: &AlgebraicNumber) -> Self {
        assert!(s.sign() >= 0, "radicand must be nonnegative");
        let one = AlgebraicNumber::one(s.field());
        Self::from_raw_terms(vec![(one, s.clone())])
    }

    fn from_raw_terms(raw: Vec<(AlgebraicNumber, AlgebraicNumber)>) -> Self {
        let mut canon: Vec<(Vec<u8>, Rat, AlgebraicNumber)> = Vec::new();
        for (coeff, radicand) in raw {
            let Some((q, y)) = canonical_term(&coeff, &radicand) else {
                continue;
            };
            let mut key = Vec::new();
            y.canonical_bytes(&mut key);
            match canon.iter_mut().find(|(k, _, _)| *k == key) {
                Some((_, existing, _)) => *existing += &q,
                None => canon.push((key, q, y)),
            }
        }
        canon.retain(|(_, q, _)| !q.is_zero());
        canon.sort_by(|a, b| a.0.cmp(&b.0));
        Self {
            terms: canon.into_iter().map(|(_, q, y)| (q, y)).collect(),
        }
    }

    pub fn terms(&self) -> &[(Rat, AlgebraicNumber)] {
        &self.terms
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut canon: Vec<(Vec<u8>, Rat, AlgebraicNumber)> = Vec::new();
        for (q, y) in self.terms.iter().chain(&other.terms) {
            let mut key = Vec::new();
            y.canonical_bytes(&mut key);
            match canon.iter_mut().find(|(k, _, _)| *k == key) {
                Some((_, existing, _)) => *existing += q,
                None => canon.push((key, q.clone(), y.clone())),
            }
        }
        canon.retain(|(_, q, _)| !q.is_zero());
        canon.sort_by(|a, b| a.0.cmp(&b.0));
        Self {
            terms: canon.into_iter().map(|(_, q, y)| (q, y)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(q, y)| (-q.clone(), y.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Multiply by an exact field element.
    pub fn scale(&self, x: &AlgebraicNumber) -> Self {
        let raw: Vec<(AlgebraicNumber, AlgebraicNumber)> = self
            .terms
            .iter()
            .map(|(q, y)| (x.mul_rat(q), y.clone()))
            .collect();
        Self::from_raw_terms(raw)
    }

    pub fn scale_rat(&self, q: &Rat) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        let mut out = self.clone();
        for (c, _) in &mut out.terms {
            *c *= q;
        }
        if q.is_negative() {
            // sign flip leaves canonical radicands valid
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut raw = Vec::new();
        for (q1, y1) in &self.terms {
            for (q2, y2) in &other.terms {
                let field = y1.field();
                let coeff = AlgebraicNumber::from_rational(field, q1 * q2);
                raw.push((coeff, y1 * y2));
            }
        }
        Self::from_raw_terms(raw)
    }

    /// Definitive zero test: symbolic cancellation first, then interval
    /// separation. `Err(Undecided)` when precision runs out, which the
    /// matched-radicand sums of the dissection checks never trigger.
    pub fn is_zero(&self) -> Result<bool, RegionError> {
        if self.terms.is_empty() {
            return Ok(true);
        }
        if self.terms.len() == 1 {
            return Ok(false); // nonzero rational coeff, positive radicand
        }
        for bits in [128u32, 512, 2048, 8192] {
            if self.enclosure(bits).definite_sign().is_some() {
                return Ok(false);
            }
        }
        Err(RegionError::Undecided)
    }

    pub fn eq(&self, other: &Self) -> Result<bool, RegionError> {
        self.sub(other).is_zero()
    }

    /// Present as an exact field element when every radicand is one.
    pub fn as_field_elem(&self, field: &crate::algebra::Field) -> Option<AlgebraicNumber> {
        let mut acc = AlgebraicNumber::zero(field);
        for (q, y) in &self.terms {
            if !y.is_one() {
                return None;
            }
            acc += &AlgebraicNumber::from_rational(field, q.clone());
        }
        Some(acc)
    }

    pub fn enclosure(&self, bits: u32) -> RatInterval {
        let mut acc = RatInterval::point(Rat::zero());
        for (q, y) in &self.terms {
            let se = y.enclosure(bits);
            let root = sqrt_interval(&se, bits);
            acc = acc.add(&root.scale(q)).round_out(bits + 16);
        }
        acc
    }

    pub fn to_f64(&self) -> f64 {
        crate::algebra::interval::rat_to_f64(&self.enclosure(80).midpoint())
    }
}

/// Canonical form of c*sqrt(s): fold c into the radicand as c^2 s, then pull
/// the rational square content out again. Equal values get equal forms.
fn canonical_term(coeff: &AlgebraicNumber, radicand: &AlgebraicNumber) -> Option<(Rat, AlgebraicNumber)> {
    if coeff.is_zero() || radicand.is_zero() {
        return None;
    }
    debug_assert!(radicand.sign() > 0);
    let sign = coeff.sign();
    let folded = &(coeff * coeff) * radicand;
    let (u, y) = extract_rational_square(&folded);
    let q = if sign < 0 { -u } else { u };
    Some((q, y))
}

/// Write x = u^2 * y with u rational > 0 and y having integer coefficients
/// whose square-free content is kept inside. sqrt(x) = u sqrt(y).
fn extract_rational_square(x: &AlgebraicNumber) -> (Rat, AlgebraicNumber) {
    // content = gcd(numerators)/lcm(denominators) over nonzero coefficients
    let mut num_gcd = BigUint::zero();
    let mut den_lcm = BigUint::one();
    for c in x.coeffs() {
        if c.is_zero() {
            continue;
        }
        num_gcd = num_gcd.gcd(c.numer().magnitude());
        den_lcm = den_lcm.lcm(c.denom().magnitude());
    }
    assert!(!num_gcd.is_zero(), "zero radicand after folding");
    let content = Rat::new(BigInt::from(num_gcd), BigInt::from(den_lcm.clone()));
    let core = x.mul_rat(&content.recip());
    // sqrt(p/q) = sqrt(p q)/q; split the square part of p q
    let pq = content.numer().magnitude() * content.denom().magnitude();
    let (square_root_part, squarefree) = split_square(&pq);
    let u = Rat::new(
        BigInt::from(square_root_part),
        BigInt::from(content.denom().magnitude().clone()),
    );
    let y = core.mul_rat(&Rat::from_integer(BigInt::from(squarefree)));
    (u, y)
}

/// m = a^2 * b with b squarefree up to a trial-division bound; prime squares
/// beyond the bound stay inside b, which only weakens merging, never
/// correctness.
fn split_square(m: &BigUint) -> (BigUint, BigUint) {
    let mut a = BigUint::one();
    let mut b = BigUint::one();
    let mut rest = m.clone();
    let mut p = 2u64;
    while p < 10_000 {
        let pb = BigUint::from(p);
        if &pb * &pb > rest {
            break;
        }
        let mut count = 0u32;
        while (&rest % &pb).is_zero() {
            rest /= &pb;
            count += 1;
        }
        a *= pb.pow(count / 2);
        if count % 2 == 1 {
            b *= BigUint::from(p);
        }
        p += 1;
    }
    let s = rest.sqrt();
    if &s * &s == rest {
        a *= s;
    } else {
        b *= rest;
    }
    (a, b)
}

/// Rigorous enclosure of sqrt over a nonnegative rational interval.
fn sqrt_interval(x: &RatInterval, bits: u32) -> RatInterval {
    let lo = if x.lo.is_negative() { Rat::zero() } else { x.lo.clone() };
    RatInterval::new(sqrt_lower(&lo, bits), sqrt_upper(&x.hi, bits))
}

fn sqrt_lower(r: &Rat, bits: u32) -> Rat {
    // floor(sqrt(r * 4^bits)) / 2^bits
    let scaled = (r.numer().magnitude() << (2 * bits)) / r.denom().magnitude();
    Rat::new(BigInt::from(scaled.sqrt()), BigInt::one() << bits)
}

fn sqrt_upper(r: &Rat, bits: u32) -> Rat {
    let num = r.numer().magnitude() << (2 * bits);
    let den = r.denom().magnitude();
    let scaled = (&num + den - BigUint::one()) / den; // ceil
    let s = scaled.sqrt();
    let s = if &s * &s == scaled { s } else { s + BigUint::one() };
    Rat::new(BigInt::from(s), BigInt::one() << bits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{make_field, rat_from_i64};

    fn an(p: i64, q: i64) -> AlgebraicNumber {
        let f = make_field(4).unwrap();
        AlgebraicNumber::from_rational(&f, rat_from_i64(p, q))
    }

    #[test]
    fn rational_square_content_merges() {
        // sqrt(8) = 2 sqrt(2) and sqrt(2): combine to 3 sqrt(2)
        let s8 = SurdSum::sqrt(&an(8, 1));
        let s2 = SurdSum::sqrt(&an(2, 1));
        let total = s8.add(&s2);
        assert_eq!(total.terms().len(), 1);
        let (c, r) = &total.terms()[0];
        assert_eq!(c, &rat_from_i64(3, 1));
        assert_eq!(r, &an(2, 1));
        // sqrt(9/4) is rational
        let s94 = SurdSum::sqrt(&an(9, 4));
        assert_eq!(s94.terms().len(), 1);
        assert_eq!(s94.terms()[0].0, rat_from_i64(3, 2));
        assert!(s94.terms()[0].1.is_one());
    }

    #[test]
    fn field_element_and_formal_radical_unify() {
        // the field element 2 sqrt2 (= 2 theta in Q(2cos(pi/4))) and the
        // formal sqrt(8) are the same canonical term
        let f = make_field(4).unwrap();
        let theta = AlgebraicNumber::theta(&f);
        let as_elem = SurdSum::from_elem(&(&theta + &theta));
        let as_radical = SurdSum::sqrt(&an(8, 1));
        assert!(as_elem.eq(&as_radical).unwrap());
        assert!(as_elem.sub(&as_radical).is_zero().unwrap());
    }

    #[test]
    fn cancellation_and_zero_test() {
        let a = SurdSum::sqrt(&an(2, 1)).add(&SurdSum::sqrt(&an(3, 1)));
        let b = SurdSum::sqrt(&an(3, 1)).add(&SurdSum::sqrt(&an(8, 1)));
        // a - b = sqrt2 - 2 sqrt2 = -sqrt2: nonzero
        let diff = a.sub(&b);
        assert!(!diff.is_zero().unwrap());
        assert!(a.sub(&a.clone()).is_zero().unwrap());
        assert!(a.eq(&a.clone()).unwrap());
    }

    #[test]
    fn disequality_via_intervals() {
        let a = SurdSum::sqrt(&an(2, 1)).add(&SurdSum::sqrt(&an(3, 1)));
        let b = SurdSum::sqrt(&an(10, 1));
        assert!(!a.eq(&b).unwrap());
        let fa = a.to_f64();
        assert!((fa - (2.0f64.sqrt() + 3.0f64.sqrt())).abs() < 1e-12);
    }

    #[test]
    fn field_coefficients_in_radicands() {
        // lengths like sqrt(2 + sqrt2) stay formal but merge when equal
        let f = make_field(4).unwrap();
        let theta = AlgebraicNumber::theta(&f);
        let rad = &an(2, 1) + &theta;
        let x = SurdSum::sqrt(&rad);
        let y = SurdSum::sqrt(&rad.mul_rat(&rat_from_i64(4, 1)));
        let merged = x.add(&y); // sqrt r + 2 sqrt r
        assert_eq!(merged.terms().len(), 1);
        assert_eq!(merged.terms()[0].0, rat_from_i64(3, 1));
        let diff = y.sub(&x.scale(&an(2, 1)));
        assert!(diff.is_zero().unwrap());
        // theta * sqrt(rad) = sqrt(2 rad): folding makes these identical
        let lhs = x.scale(&theta);
        let rhs = SurdSum::sqrt(&rad.mul_rat(&rat_from_i64(2, 1)));
        assert!(lhs.eq(&rhs).unwrap());
    }

    #[test]
    fn mul_multiplies_radicands() {
        let a = SurdSum::sqrt(&an(2, 1));
        let b = SurdSum::sqrt(&an(8, 1));
        let p = a.mul(&b); // sqrt2 * 2 sqrt2 = 4
        assert_eq!(p.terms().len(), 1);
        assert_eq!(p.terms()[0].0, rat_from_i64(4, 1));
        assert!(p.terms()[0].1.is_one());
        assert_eq!(p.as_field_elem(&make_field(4).unwrap()).unwrap(), an(4, 1));
    }
}
