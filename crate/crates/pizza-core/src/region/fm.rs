//! Exact Fourier-Motzkin feasibility for systems of strict/weak linear
//! inequalities over the ordered field. Constraint counts at desk scale are
//! small; duplicates and dominated constraints are merged after each
//! elimination to keep the quadratic growth in check.

use std::collections::HashMap;

use crate::algebra::AlgebraicNumber;

use super::Constraint;

/// Internal row: coefficients on the remaining variables plus the offset,
/// meaning sum(coeff_i x_i) >= offset (or > when strict).
#[derive(Clone)]
struct Row {
    coeffs: Vec<AlgebraicNumber>,
    offset: AlgebraicNumber,
    strict: bool,
}

pub fn feasible(dim: usize, constraints: &[Constraint]) -> bool {
    let mut rows: Vec<Row> = constraints
        .iter()
        .map(|c| Row {
            coeffs: c.normal.coords.clone(),
            offset: c.offset.clone(),
            strict: c.strict,
        })
        .collect();
    for var in (0..dim).rev() {
        match eliminate(rows, var) {
            Some(next) => rows = next,
            None => return false,
        }
    }
    // only constant rows remain: 0 >= offset / 0 > offset
    rows.iter().all(|r| {
        let s = r.offset.sign();
        if r.strict {
            s < 0
        } else {
            s <= 0
        }
    })
}

/// Eliminate variable `var`; None signals early constant infeasibility.
fn eliminate(rows: Vec<Row>, var: usize) -> Option<Vec<Row>> {
    let mut lowers = Vec::new(); // coeff > 0: x_var >= ...
    let mut uppers = Vec::new(); // coeff < 0: x_var <= ...
    let mut out = Vec::new();
    for r in rows {
        match r.coeffs[var].sign() {
            1 => lowers.push(r),
            -1 => uppers.push(r),
            _ => out.push(r),
        }
    }
    for lo in &lowers {
        let a = &lo.coeffs[var]; // > 0
        for up in &uppers {
            let b = &up.coeffs[var]; // < 0
            // combine: (a*up - b*lo) dropped onto remaining vars
            let mut coeffs = Vec::with_capacity(var);
            for k in 0..var {
                coeffs.push(&(a * &up.coeffs[k]) - &(b * &lo.coeffs[k]));
            }
            // pad eliminated slots with zeros so indexing stays aligned
            let field = a.field();
            coeffs.resize(lo.coeffs.len(), AlgebraicNumber::zero(field));
            let offset = &(a * &up.offset) - &(b * &lo.offset);
            let strict = lo.strict || up.strict;
            let row = Row { coeffs, offset, strict };
            if let Some(false) = constant_row_ok(&row, var) {
                return None;
            }
            out.push(row);
        }
    }
    Some(dedup(out, var))
}

/// If the row is constant on the remaining vars 0..var, evaluate it.
fn constant_row_ok(row: &Row, var: usize) -> Option<bool> {
    if row.coeffs[..var].iter().all(AlgebraicNumber::is_zero) {
        let s = row.offset.sign();
        Some(if row.strict { s < 0 } else { s <= 0 })
    } else {
        None
    }
}

/// Merge rows with proportional... identical normalized coefficient vectors:
/// keep the largest offset; at equal offsets strict dominates.
fn dedup(rows: Vec<Row>, var: usize) -> Vec<Row> {
    let mut best: HashMap<Vec<u8>, Row> = HashMap::new();
    let mut constants = Vec::new();
    for row in rows {
        if row.coeffs[..var].iter().all(AlgebraicNumber::is_zero) {
            constants.push(row);
            continue;
        }
        let normalized = normalize(row);
        let mut key = Vec::new();
        for c in &normalized.coeffs {
            c.canonical_bytes(&mut key);
        }
        match best.get_mut(&key) {
            None => {
                best.insert(key, normalized);
            }
            Some(existing) => {
                let cmp = (&normalized.offset - &existing.offset).sign();
                if cmp > 0 || (cmp == 0 && normalized.strict && !existing.strict) {
                    *existing = normalized;
                }
            }
        }
    }
    // keep one strongest constant row (they are all checked at the end)
    let mut out: Vec<Row> = best.into_values().collect();
    out.extend(keep_strongest_constant(constants));
    out
}

fn keep_strongest_constant(constants: Vec<Row>) -> Option<Row> {
    constants.into_iter().reduce(|a, b| {
        let cmp = (&b.offset - &a.offset).sign();
        if cmp > 0 || (cmp == 0 && b.strict && !a.strict) {
            b
        } else {
            a
        }
    })
}

fn normalize(mut row: Row) -> Row {
    let Some(lead) = row.coeffs.iter().find(|c| !c.is_zero()).cloned() else {
        return row;
    };
    let scale = lead.abs().inv().expect("nonzero lead");
    for c in &mut row.coeffs {
        *c = &*c * &scale;
    }
    row.offset = &row.offset * &scale;
    row
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{make_field, rat_from_i64, AlgebraicNumber, FVector};

    #[test]
    fn simplex_interior_is_feasible() {
        let f = make_field(4).unwrap();
        let an = |p: i64| AlgebraicNumber::from_rational(&f, rat_from_i64(p, 1));
        // x >= 0, y >= 0, x + y <= 1 strictly inside
        let cs = vec![
            Constraint::new(FVector::basis(&f, 2, 0), an(0), false),
            Constraint::new(FVector::basis(&f, 2, 1), an(0), false),
            Constraint::new(
                FVector::new(vec![an(-1), an(-1)]),
                an(-1),
                false,
            ),
        ];
        assert!(feasible(2, &cs));
        // adding x + y > 1 makes only the boundary feasible for the weak
        // system, but the strict pair is empty
        let mut cs2 = cs.clone();
        cs2.push(Constraint::new(FVector::new(vec![an(1), an(1)]), an(1), true));
        assert!(!feasible(2, &cs2));
        let mut cs3 = cs;
        cs3.push(Constraint::new(FVector::new(vec![an(1), an(1)]), an(1), false));
        assert!(feasible(2, &cs3));
    }

    #[test]
    fn strictness_propagates_through_elimination() {
        let f = make_field(4).unwrap();
        let an = |p: i64, q: i64| AlgebraicNumber::from_rational(&f, rat_from_i64(p, q));
        // y > x, y < x + 0: empty; y < x + 1: feasible
        let up = |c: i64| {
            Constraint::new(FVector::new(vec![an(1, 1), an(-1, 1)]), an(-c, 1), true)
        };
        let lo = Constraint::new(FVector::new(vec![an(-1, 1), an(1, 1)]), an(0, 1), true);
        assert!(!feasible(2, &[lo.clone(), up(0)]));
        assert!(feasible(2, &[lo, up(1)]));
    }

    #[test]
    fn three_d_box_feasibility() {
        let f = make_field(4).unwrap();
        let an = |p: i64| AlgebraicNumber::from_rational(&f, rat_from_i64(p, 1));
        let mut cs = Vec::new();
        for i in 0..3 {
            cs.push(Constraint::new(FVector::basis(&f, 3, i), an(0), true));
            cs.push(Constraint::new(FVector::basis(&f, 3, i).neg(), an(-1), false));
        }
        assert!(feasible(3, &cs));
        cs.push(Constraint::new(
            FVector::new(vec![an(1), an(1), an(1)]),
            an(3),
            true,
        ));
        assert!(!feasible(3, &cs));
    }
}
