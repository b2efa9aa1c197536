//! Elements of Q(theta) in the power basis, with exact arithmetic and
//! adaptive-precision sign determination.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::field::{make_field, Field};
use super::interval::{rat_to_f64, Rat, RatInterval};
use super::AlgebraError;

/// An element of Q(theta), theta = 2cos(pi/N), stored as coordinates in the
/// power basis 1, theta, ..., theta^(d-1). The representation is canonical:
/// the element is zero iff every coordinate is zero.
#[derive(Clone)]
pub struct AlgebraicNumber {
    field: Field,
    coeffs: Vec<Rat>,
}

impl fmt::Debug for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgNum(N={}; {})", self.field.n(), self)
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*t")?,
                _ => write!(f, "{c}*t^{i}")?,
            }
        }
        Ok(())
    }
}

impl AlgebraicNumber {
    pub fn zero(field: &Field) -> Self {
        Self {
            field: field.clone(),
            coeffs: vec![Rat::zero(); field.degree()],
        }
    }

    pub fn one(field: &Field) -> Self {
        Self::from_rational(field, Rat::one())
    }

    pub fn from_rational(field: &Field, r: Rat) -> Self {
        let mut coeffs = vec![Rat::zero(); field.degree()];
        coeffs[0] = r;
        Self { field: field.clone(), coeffs }
    }

    pub fn from_integer(field: &Field, v: i64) -> Self {
        Self::from_rational(field, Rat::from_integer(BigInt::from(v)))
    }

    /// The generator theta = 2cos(pi/N).
    pub fn theta(field: &Field) -> Self {
        if let Some(r) = field.theta_rational() {
            return Self::from_rational(field, r);
        }
        let mut coeffs = vec![Rat::zero(); field.degree()];
        coeffs[1] = Rat::one();
        Self { field: field.clone(), coeffs }
    }

    pub fn from_coeffs(field: &Field, mut coeffs: Vec<Rat>) -> Self {
        assert!(coeffs.len() <= field.degree(), "coefficient vector too long");
        coeffs.resize(field.degree(), Rat::zero());
        Self { field: field.clone(), coeffs }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<&Rat> {
        if self.is_rational() {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn check_same_field(&self, other: &Self) {
        assert_eq!(
            self.field.n(),
            other.field.n(),
            "mixed-field arithmetic: N={} vs N={}",
            self.field.n(),
            other.field.n()
        );
    }

    pub fn mul_rat(&self, r: &Rat) -> Self {
        Self {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    fn mul_impl(&self, other: &Self) -> Self {
        self.check_same_field(other);
        let d = self.field.degree();
        // Rational fast paths keep rational-only instances cheap even when
        // the ambient field has higher degree.
        if let Some(r) = self.as_rational() {
            if r.is_zero() {
                return Self::zero(&self.field);
            }
            return other.mul_rat(r);
        }
        if let Some(r) = other.as_rational() {
            if r.is_zero() {
                return Self::zero(&self.field);
            }
            return self.mul_rat(r);
        }
        let mut prod = vec![Rat::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                prod[i + j] += a * b;
            }
        }
        let mut out = prod[..d].to_vec();
        for j in 0..(d - 1) {
            let c = &prod[d + j];
            if c.is_zero() {
                continue;
            }
            let rep = self.field.high_power(j);
            for i in 0..d {
                if !rep[i].is_zero() {
                    out[i] += c * &rep[i];
                }
            }
        }
        Self { field: self.field.clone(), coeffs: out }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in Q[x];
    /// the minimal polynomial is irreducible, so every nonzero element is a
    /// unit.
    pub fn inv(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(&self.field, r.recip()));
        }
        let d = self.field.degree();
        let modulus: Vec<Rat> = self
            .field
            .min_poly()
            .iter()
            .map(|c| Rat::from_integer(c.clone()))
            .collect();
        // Invariant: r0 = s0 * a (mod m), r1 = s1 * a (mod m).
        let mut r0 = modulus;
        let mut r1 = trim(self.coeffs.clone());
        let mut s0 = vec![Rat::zero()];
        let mut s1 = vec![Rat::one()];
        while poly_deg(&r1) > 0 {
            let (q, rem) = poly_divmod(&r0, &r1);
            let s_next = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s_next);
        }
        assert!(!r1.is_empty() && !r1[0].is_zero(), "gcd degenerated: minimal polynomial not irreducible?");
        let scale = r1[0].recip();
        let mut coeffs: Vec<Rat> = s1.iter().map(|c| c * &scale).collect();
        coeffs.resize(d, Rat::zero());
        Ok(Self { field: self.field.clone(), coeffs })
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_impl(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_impl(&base);
            }
        }
        acc
    }

    pub fn square(&self) -> Self {
        self.mul_impl(self)
    }

    /// Exact sign: 0 iff the canonical representation is zero, otherwise the
    /// sign of the real embedding theta = 2cos(pi/N), found by refining an
    /// interval enclosure until it excludes zero.
    pub fn sign(&self) -> i8 {
        if self.is_zero() {
            return 0;
        }
        if let Some(r) = self.as_rational() {
            return if r.is_positive() { 1 } else { -1 };
        }
        if let Some(theta) = self.field.theta_rational() {
            let mut acc = Rat::zero();
            for c in self.coeffs.iter().rev() {
                acc = acc * &theta + c;
            }
            return match acc.cmp(&Rat::zero()) {
                Ordering::Greater => 1,
                Ordering::Less => -1,
                Ordering::Equal => unreachable!("canonical form is nonzero"),
            };
        }
        let mut bits: u32 = 64;
        loop {
            let enc = self.enclosure(bits);
            if let Some(s) = enc.definite_sign() {
                return s;
            }
            bits *= 2;
            assert!(bits < (1 << 22), "sign refinement failed to converge");
        }
    }

    /// Interval enclosure of the real value, via interval Horner evaluation.
    pub fn enclosure(&self, bits: u32) -> RatInterval {
        let theta = self.field.theta_enclosure(bits);
        let mut acc = RatInterval::point(Rat::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&theta).add_point(c);
            acc = acc.round_out(bits + 32);
        }
        acc
    }

    pub fn to_f64(&self) -> f64 {
        if let Some(r) = self.as_rational() {
            return rat_to_f64(r);
        }
        rat_to_f64(&self.enclosure(80).midpoint())
    }

    pub fn abs(&self) -> Self {
        if self.sign() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    /// Canonical byte encoding, suitable for exact hashing and dedup.
    pub fn canonical_bytes(&self, out: &mut Vec<u8>) {
        for c in &self.coeffs {
            let (s, mag) = c.numer().clone().into_parts();
            out.push(match s {
                num_bigint::Sign::Minus => 0,
                num_bigint::Sign::NoSign => 1,
                num_bigint::Sign::Plus => 2,
            });
            let nb = mag.to_bytes_le();
            out.extend_from_slice(&(nb.len() as u32).to_le_bytes());
            out.extend_from_slice(&nb);
            let db = c.denom().magnitude().to_bytes_le();
            out.extend_from_slice(&(db.len() as u32).to_le_bytes());
            out.extend_from_slice(&db);
        }
    }
}

fn trim(mut v: Vec<Rat>) -> Vec<Rat> {
    while v.len() > 1 && v.last().unwrap().is_zero() {
        v.pop();
    }
    v
}

fn poly_deg(v: &[Rat]) -> usize {
    let mut d = v.len();
    while d > 1 && v[d - 1].is_zero() {
        d -= 1;
    }
    d - 1
}

fn poly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(out)
}

fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_divmod(num: &[Rat], den: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let dd = poly_deg(den);
    let lead = den[dd].clone();
    let mut rem = num.to_vec();
    let nd = poly_deg(&rem);
    if nd < dd {
        return (vec![Rat::zero()], trim(rem));
    }
    let mut quot = vec![Rat::zero(); nd - dd + 1];
    for i in (0..=(nd - dd)).rev() {
        let c = &rem[i + dd] / &lead;
        if c.is_zero() {
            quot[i] = c;
            continue;
        }
        quot[i] = c.clone();
        for j in 0..=dd {
            let delta = &c * &den[j];
            rem[i + j] -= delta;
        }
    }
    (trim(quot), trim(rem))
}

impl PartialEq for AlgebraicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.field.n() == other.field.n() && self.coeffs == other.coeffs
    }
}
impl Eq for AlgebraicNumber {}

impl Hash for AlgebraicNumber {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.n().hash(state);
        let mut bytes = Vec::new();
        self.canonical_bytes(&mut bytes);
        bytes.hash(state);
    }
}

impl PartialOrd for AlgebraicNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AlgebraicNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self - other).sign() {
            1 => Ordering::Greater,
            -1 => Ordering::Less,
            _ => Ordering::Equal,
        }
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident, |$a:ident, $b:ident| $body:expr) => {
        impl $trait for &AlgebraicNumber {
            type Output = AlgebraicNumber;
            fn $method(self, rhs: &AlgebraicNumber) -> AlgebraicNumber {
                let $a = self;
                let $b = rhs;
                $body
            }
        }
        impl $trait for AlgebraicNumber {
            type Output = AlgebraicNumber;
            fn $method(self, rhs: AlgebraicNumber) -> AlgebraicNumber {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&AlgebraicNumber> for AlgebraicNumber {
            type Output = AlgebraicNumber;
            fn $method(self, rhs: &AlgebraicNumber) -> AlgebraicNumber {
                $trait::$method(&self, rhs)
            }
        }
    };
}

impl_binop!(Add, add, |a, b| {
    a.check_same_field(b);
    AlgebraicNumber {
        field: a.field.clone(),
        coeffs: a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| x + y)
            .collect(),
    }
});

impl_binop!(Sub, sub, |a, b| {
    a.check_same_field(b);
    AlgebraicNumber {
        field: a.field.clone(),
        coeffs: a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| x - y)
            .collect(),
    }
});

impl_binop!(Mul, mul, |a, b| a.mul_impl(b));

impl_binop!(Div, div, |a, b| {
    let inv = b.inv().expect("division by zero algebraic number");
    a.mul_impl(&inv)
});

impl Neg for &AlgebraicNumber {
    type Output = AlgebraicNumber;
    fn neg(self) -> AlgebraicNumber {
        AlgebraicNumber {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for AlgebraicNumber {
    type Output = AlgebraicNumber;
    fn neg(self) -> AlgebraicNumber {
        -&self
    }
}

impl AddAssign<&AlgebraicNumber> for AlgebraicNumber {
    fn add_assign(&mut self, rhs: &AlgebraicNumber) {
        self.check_same_field(rhs);
        for (x, y) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *x += y;
        }
    }
}

impl SubAssign<&AlgebraicNumber> for AlgebraicNumber {
    fn sub_assign(&mut self, rhs: &AlgebraicNumber) {
        self.check_same_field(rhs);
        for (x, y) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *x -= y;
        }
    }
}

/// Exact embedding of cos(k*pi/M) into Q(theta), theta = 2cos(pi/N).
///
/// The value lies in the field whenever k*N/M is an integer j, in which case
/// cos(k*pi/M) = cos(j*pi/N) = p_j(theta)/2 with p_j the Chebyshev-style
/// basis polynomial for z^j + z^-j.
pub fn embed_cos(field: &Field, k: i64, m: u32) -> Result<AlgebraicNumber, AlgebraError> {
    if m == 0 {
        return Err(AlgebraError::InvalidFieldIndex(0));
    }
    let n = field.n() as i64;
    let num = k.unsigned_abs() as i128 * n as i128;
    if num % m as i128 != 0 {
        return Err(AlgebraError::NotInField {
            what: format!("cos({k}*pi/{m})"),
            n: field.n(),
        });
    }
    let mut j = (num / m as i128) as i64;
    let two_n = 2 * n;
    j = j.rem_euclid(two_n);
    if j > n {
        j = two_n - j;
    }
    // p_0 = 2, p_1 = theta, p_j = theta p_{j-1} - p_{j-2}
    let theta = AlgebraicNumber::theta(field);
    let mut p_prev = AlgebraicNumber::from_integer(field, 2);
    let mut p = theta.clone();
    if j == 0 {
        return Ok(AlgebraicNumber::one(field));
    }
    for _ in 1..j {
        let next = &(&theta * &p) - &p_prev;
        p_prev = p;
        p = next;
    }
    Ok(p.mul_rat(&Rat::new(BigInt::one(), BigInt::from(2))))
}

/// sin(k*pi/M) = cos((M-2k)*pi/(2M)).
pub fn embed_sin(field: &Field, k: i64, m: u32) -> Result<AlgebraicNumber, AlgebraError> {
    embed_cos(field, m as i64 - 2 * k, 2 * m)
}

/// Spec'd operation name: sign of an algebraic number in {-1, 0, +1}.
pub fn sign_of(x: &AlgebraicNumber) -> i8 {
    x.sign()
}

#[derive(Serialize, Deserialize)]
struct WireNumber {
    #[serde(rename = "N")]
    n: u32,
    coeffs: Vec<String>,
}

impl Serialize for AlgebraicNumber {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let wire = WireNumber {
            n: self.field.n(),
            coeffs: self
                .coeffs
                .iter()
                .map(|c| format!("{}/{}", c.numer(), c.denom()))
                .collect(),
        };
        wire.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for AlgebraicNumber {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let wire = WireNumber::deserialize(deserializer)?;
        let field = make_field(wire.n).map_err(D::Error::custom)?;
        if wire.coeffs.len() != field.degree() {
            return Err(D::Error::custom(format!(
                "expected {} coefficients for N={}, got {}",
                field.degree(),
                wire.n,
                wire.coeffs.len()
            )));
        }
        let coeffs = wire
            .coeffs
            .iter()
            .map(|s| parse_rat(s))
            .collect::<Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        Ok(AlgebraicNumber { field, coeffs })
    }
}

pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let pn: BigInt = p.trim().parse().map_err(|e| format!("bad numerator {p:?}: {e}"))?;
        let qn: BigInt = q.trim().parse().map_err(|e| format!("bad denominator {q:?}: {e}"))?;
        if qn.is_zero() {
            return Err("zero denominator".into());
        }
        Ok(Rat::new(pn, qn))
    } else if let Some((int_part, frac_part)) = s.split_once('.') {
        // decimal literal, parsed exactly as a rational
        let negative = int_part.trim_start().starts_with('-');
        let ip: BigInt = if int_part.is_empty() || int_part == "-" {
            BigInt::zero()
        } else {
            int_part.parse().map_err(|e| format!("bad decimal {s:?}: {e}"))?
        };
        if !frac_part.chars().all(|c| c.is_ascii_digit()) {
            return Err(format!("bad decimal {s:?}"));
        }
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let fp: BigInt = if frac_part.is_empty() {
            BigInt::zero()
        } else {
            frac_part.parse().map_err(|e| format!("bad decimal {s:?}: {e}"))?
        };
        let mag = ip.magnitude().clone() * scale.magnitude() + fp.magnitude();
        let num = BigInt::from_biguint(
            if negative { num_bigint::Sign::Minus } else { num_bigint::Sign::Plus },
            mag,
        );
        Ok(Rat::new(num, scale))
    } else {
        let pn: BigInt = s.parse().map_err(|e| format!("bad integer {s:?}: {e}"))?;
        Ok(Rat::from_integer(pn))
    }
}

pub fn rat_from_i64(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::make_field;

    fn q(field: &Field, p: i64, q_: i64) -> AlgebraicNumber {
        AlgebraicNumber::from_rational(field, rat_from_i64(p, q_))
    }

    #[test]
    fn sqrt2_squares_to_two() {
        let f = make_field(4).unwrap();
        let t = AlgebraicNumber::theta(&f); // sqrt(2)
        assert_eq!(t.square(), q(&f, 2, 1));
        assert_eq!(t.sign(), 1);
        assert_eq!((&t - &q(&f, 1, 1)).sign(), 1); // sqrt2 - 1 > 0
        assert_eq!((&t - &q(&f, 2, 1)).sign(), -1);
    }

    #[test]
    fn embed_cos_examples() {
        // cos(pi/4) = sqrt(2)/2, squares to 1/2
        let f4 = make_field(4).unwrap();
        let c = embed_cos(&f4, 1, 4).unwrap();
        assert_eq!(c.square(), q(&f4, 1, 2));
        // 2 cos(pi/5) is the golden ratio: satisfies x^2 = x + 1
        let f5 = make_field(5).unwrap();
        let c5 = embed_cos(&f5, 1, 5).unwrap();
        let twoc = &c5 + &c5;
        assert_eq!(twoc.square(), &twoc + &AlgebraicNumber::one(&f5));
        assert_eq!((&twoc - &AlgebraicNumber::one(&f5)).sign(), 1);
        // cos(pi/6) = sqrt(3)/2 in Q(2cos(pi/12)), squares to 3/4
        let f12 = make_field(12).unwrap();
        let c6 = embed_cos(&f12, 1, 6).unwrap();
        assert_eq!(c6.square(), q(&f12, 3, 4));
        // not in field: cos(pi/3) IS rational, cos(pi/8) not in Q(2cos(pi/12))
        assert!(embed_cos(&f12, 1, 8).is_err());
        let c3 = embed_cos(&f12, 1, 3).unwrap();
        assert_eq!(c3, q(&f12, 1, 2));
    }

    #[test]
    fn embed_cos_periodicity_and_negatives() {
        let f = make_field(6).unwrap();
        assert_eq!(embed_cos(&f, 0, 6).unwrap(), AlgebraicNumber::one(&f));
        assert_eq!(embed_cos(&f, 6, 6).unwrap(), q(&f, -1, 1));
        assert_eq!(embed_cos(&f, -2, 6).unwrap(), embed_cos(&f, 2, 6).unwrap());
        assert_eq!(embed_cos(&f, 14, 6).unwrap(), embed_cos(&f, 2, 6).unwrap());
        // sin(pi/6) = 1/2
        assert_eq!(embed_sin(&f, 1, 6).unwrap(), q(&f, 1, 2));
    }

    #[test]
    fn sign_of_cos_difference() {
        // 2cos(pi/8) - 2cos(pi/12) < 0 since cos decreases on (0, pi)
        let f = make_field(24).unwrap();
        let a = embed_cos(&f, 3, 24).unwrap(); // cos(pi/8)
        let b = embed_cos(&f, 2, 24).unwrap(); // cos(pi/12)
        assert_eq!((&a - &b).sign(), -1);
        let float = 2.0 * (std::f64::consts::PI / 8.0).cos() - 2.0 * (std::f64::consts::PI / 12.0).cos();
        assert!(float < 0.0);
    }

    #[test]
    fn inverse_roundtrip() {
        let f = make_field(8).unwrap();
        let t = AlgebraicNumber::theta(&f);
        let x = &(&t * &t) + &q(&f, -3, 7); // theta^2 - 3/7
        let inv = x.inv().unwrap();
        assert!( (&x * &inv).is_one());
        assert!(AlgebraicNumber::zero(&f).inv().is_err());
    }

    #[test]
    fn serialization_roundtrip_bit_exact() {
        let f = make_field(8).unwrap();
        let t = AlgebraicNumber::theta(&f);
        let x = &t.pow(3) + &q(&f, -22, 7);
        let json = serde_json::to_string(&x).unwrap();
        let back: AlgebraicNumber = serde_json::from_str(&json).unwrap();
        assert_eq!(x, back);
        assert!(json.contains("\"N\":8"));
        assert!(json.contains("-22/7"));
    }

    #[test]
    fn parse_rat_decimal_forms() {
        assert_eq!(parse_rat("0.3").unwrap(), rat_from_i64(3, 10));
        assert_eq!(parse_rat("-1.25").unwrap(), rat_from_i64(-5, 4));
        assert_eq!(parse_rat("3/10").unwrap(), rat_from_i64(3, 10));
        assert_eq!(parse_rat("7").unwrap(), rat_from_i64(7, 1));
        assert!(parse_rat("1/0").is_err());
    }

    #[test]
    fn high_precision_agrees_with_float_oracle() {
        // canonical zero test vs 200-digit evaluation on structured elements
        let f = make_field(16).unwrap();
        let t = AlgebraicNumber::theta(&f);
        // theta^2 - 2 - theta*0: nonzero; and an exact cancellation
        let x = &t.square() - &q(&f, 2, 1);
        assert!(!x.is_zero());
        let enc = x.enclosure(700);
        assert!(enc.definite_sign().is_some());
        let built = &(&t * &t) - &t.square();
        assert!(built.is_zero());
    }

    #[test]
    fn ordering_is_exact() {
        let f = make_field(4).unwrap();
        let t = AlgebraicNumber::theta(&f); // 1.4142...
        let a = q(&f, 141421356, 100000000);
        let b = q(&f, 141421357, 100000000);
        assert!(a < t && t < b);
    }
}
