//! Type-expression grammar for root systems:
//!
//! ```text
//! TYPE := "A"k | "B"k | "D"k | "I2("m")" | "H3" | "H4" | "F4"
//!       | "E6" | "E7" | "E8" | TYPE "x" TYPE | TYPE "^" k
//! ```
//!
//! `^` binds tighter than `x`; products are flattened left to right.

use num_integer::Integer;
use serde::Serialize;

use super::RootsError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum TypeExpr {
    A(u32),
    B(u32),
    D(u32),
    I2(u32),
    H3,
    H4,
    F4,
    E(u8),
    Product(Vec<TypeExpr>),
    /// Escape hatch for ad-hoc validated sets; never produced by the parser.
    Custom(String),
}

impl TypeExpr {
    /// Irreducible factors in order; a non-product expression is one factor.
    pub fn factors(&self) -> Vec<&TypeExpr> {
        match self {
            TypeExpr::Product(fs) => fs.iter().flat_map(|f| f.factors()).collect(),
            other => vec![other],
        }
    }

    pub fn product_of(a: TypeExpr, b: TypeExpr) -> TypeExpr {
        let mut fs: Vec<TypeExpr> = a.factors().into_iter().cloned().collect();
        fs.extend(b.factors().into_iter().cloned());
        TypeExpr::Product(fs)
    }

    /// Ambient dimension of the standard realization.
    pub fn ambient_dim(&self) -> usize {
        match self {
            TypeExpr::A(1) => 1,
            TypeExpr::A(k) => *k as usize + 1,
            TypeExpr::B(k) | TypeExpr::D(k) => *k as usize,
            TypeExpr::I2(_) => 2,
            TypeExpr::H3 => 3,
            TypeExpr::H4 | TypeExpr::F4 => 4,
            TypeExpr::E(_) => 8,
            TypeExpr::Product(fs) => fs.iter().map(TypeExpr::ambient_dim).sum(),
            TypeExpr::Custom(_) => 0,
        }
    }

    /// Smallest N with all needed cosines in Q(2cos(pi/N)).
    pub fn field_requirement(&self) -> u32 {
        match self {
            TypeExpr::A(1) => 1,
            TypeExpr::A(_) | TypeExpr::B(_) | TypeExpr::D(_) | TypeExpr::F4 | TypeExpr::E(_) => 4,
            TypeExpr::I2(m) => {
                if m % 2 == 0 {
                    *m
                } else {
                    2 * m
                }
            }
            TypeExpr::H3 | TypeExpr::H4 => 5,
            TypeExpr::Product(fs) => fs
                .iter()
                .map(TypeExpr::field_requirement)
                .fold(1, |acc, n| acc.lcm(&n)),
            TypeExpr::Custom(_) => 1,
        }
    }

    pub fn is_a1_power(&self) -> bool {
        self.factors().iter().all(|f| matches!(f, TypeExpr::A(1)))
    }

    pub fn has_e_factor(&self) -> bool {
        self.factors().iter().any(|f| matches!(f, TypeExpr::E(_)))
    }
}

impl std::fmt::Display for TypeExpr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TypeExpr::A(k) => write!(f, "A{k}"),
            TypeExpr::B(k) => write!(f, "B{k}"),
            TypeExpr::D(k) => write!(f, "D{k}"),
            TypeExpr::I2(m) => write!(f, "I2({m})"),
            TypeExpr::H3 => write!(f, "H3"),
            TypeExpr::H4 => write!(f, "H4"),
            TypeExpr::F4 => write!(f, "F4"),
            TypeExpr::E(k) => write!(f, "E{k}"),
            TypeExpr::Product(fs) => {
                for (i, t) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, "x")?;
                    }
                    write!(f, "{t}")?;
                }
                Ok(())
            }
            TypeExpr::Custom(s) => write!(f, "{s}"),
        }
    }
}

pub fn parse_type(input: &str) -> Result<TypeExpr, RootsError> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(RootsError::Parse("empty type expression".into()));
    }
    let mut factors = Vec::new();
    for part in split_top_level_x(&s)? {
        let (base, power) = if let Some(pos) = part.find('^') {
            let k: u32 = part[pos + 1..]
                .parse()
                .map_err(|_| RootsError::Parse(format!("bad exponent in {part:?}")))?;
            if k == 0 {
                return Err(RootsError::Parse(format!("zero exponent in {part:?}")));
            }
            (&part[..pos], k)
        } else {
            (part.as_str(), 1)
        };
        let expr = parse_base(base)?;
        for _ in 0..power {
            factors.push(expr.clone());
        }
    }
    if factors.len() == 1 {
        Ok(factors.pop().unwrap())
    } else {
        Ok(TypeExpr::Product(factors))
    }
}

/// Split on 'x' outside parentheses. The only parentheses in the grammar are
/// the I2(m) argument.
fn split_top_level_x(s: &str) -> Result<Vec<String>, RootsError> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '(' => {
                depth += 1;
                cur.push(c);
            }
            ')' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| RootsError::Parse(format!("unbalanced parens in {s:?}")))?;
                cur.push(c);
            }
            'x' if depth == 0 => {
                parts.push(std::mem::take(&mut cur));
            }
            _ => cur.push(c),
        }
    }
    if depth != 0 {
        return Err(RootsError::Parse(format!("unbalanced parens in {s:?}")));
    }
    parts.push(cur);
    if parts.iter().any(String::is_empty) {
        return Err(RootsError::Parse(format!("empty factor in {s:?}")));
    }
    Ok(parts)
}

fn parse_base(s: &str) -> Result<TypeExpr, RootsError> {
    let bad = || RootsError::Parse(format!("unrecognized type {s:?}"));
    if let Some(rest) = s.strip_prefix("I2(") {
        let inner = rest.strip_suffix(')').ok_or_else(bad)?;
        let m: u32 = inner.parse().map_err(|_| bad())?;
        if m < 2 {
            return Err(RootsError::Parse(format!("I2({m}) requires m >= 2")));
        }
        return Ok(TypeExpr::I2(m));
    }
    match s {
        "H3" => return Ok(TypeExpr::H3),
        "H4" => return Ok(TypeExpr::H4),
        "F4" => return Ok(TypeExpr::F4),
        "E6" => return Ok(TypeExpr::E(6)),
        "E7" => return Ok(TypeExpr::E(7)),
        "E8" => return Ok(TypeExpr::E(8)),
        _ => {}
    }
    let mut chars = s.chars();
    let head = chars.next().ok_or_else(bad)?;
    let k: u32 = chars.as_str().parse().map_err(|_| bad())?;
    match head {
        'A' if k >= 1 => Ok(TypeExpr::A(k)),
        'B' if k >= 2 => Ok(TypeExpr::B(k)),
        'C' if k >= 2 => Ok(TypeExpr::B(k)), // B and C coincide after normalization
        'D' if k >= 2 => Ok(TypeExpr::D(k)),
        _ => Err(bad()),
    }
}
