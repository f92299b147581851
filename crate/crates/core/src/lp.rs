//! Exact feasibility of `A λ = b, λ >= 0` over the rationals.
//!
//! Phase-one simplex on a dense tableau with one artificial variable per
//! row, minimising the artificial sum. Entering and leaving variables are
//! chosen by Bland's rule, so the method terminates and pivots
//! deterministically.

use num::{BigInt, BigRational, One, Signed, Zero};

pub type Rational = BigRational;

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `p` or `p/q`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let t = text.trim();
    match t.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            (!q.is_zero()).then(|| Rational::new(p, q))
        }
        None => t.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// Returns a nonnegative `λ` with `Σ_j λ_j columns[j] = rhs`, or `None`
/// if none exists. Every column must have length `rhs.len()`.
pub fn nonnegative_combination(columns: &[Vec<i64>], rhs: &[Rational]) -> Option<Vec<Rational>> {
    let rows = rhs.len();
    let cols = columns.len();
    debug_assert!(columns.iter().all(|c| c.len() == rows));
    if rows == 0 {
        return Some(vec![Rational::zero(); cols]);
    }
    let width = cols + rows;
    // tableau rows: [coefficients (width) | rhs]
    let mut t: Vec<Vec<Rational>> = Vec::with_capacity(rows);
    for i in 0..rows {
        let flip = rhs[i].is_negative();
        let mut row = Vec::with_capacity(width + 1);
        for col in columns {
            let v = rational(col[i]);
            row.push(if flip { -v } else { v });
        }
        for k in 0..rows {
            row.push(if k == i {
                Rational::one()
            } else {
                Rational::zero()
            });
        }
        row.push(if flip {
            -rhs[i].clone()
        } else {
            rhs[i].clone()
        });
        t.push(row);
    }
    let mut basis: Vec<usize> = (cols..width).collect();
    // reduced costs of the phase-one objective, plus its negated value
    let mut cost = vec![Rational::zero(); width + 1];
    for row in &t {
        for j in 0..cols {
            cost[j] -= &row[j];
        }
        cost[width] -= &row[width];
    }
    loop {
        let Some(enter) = (0..width).find(|&j| cost[j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, Rational)> = None;
        for (i, row) in t.iter().enumerate() {
            if !row[enter].is_positive() {
                continue;
            }
            let ratio = &row[width] / &row[enter];
            let better = match &leave {
                None => true,
                Some((li, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*li]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        // phase one is bounded below by zero, so a pivot row always exists
        let (pr, _) = leave.expect("phase-one objective is bounded");
        pivot(&mut t, &mut cost, pr, enter);
        basis[pr] = enter;
    }
    if !cost[width].is_zero() {
        return None;
    }
    let mut lambda = vec![Rational::zero(); cols];
    for (i, &b) in basis.iter().enumerate() {
        if b < cols {
            lambda[b] = t[i][width].clone();
        } else if !t[i][width].is_zero() {
            return None;
        }
    }
    Some(lambda)
}

fn pivot(t: &mut [Vec<Rational>], cost: &mut [Rational], pr: usize, pc: usize) {
    let inv = t[pr][pc].recip();
    for v in t[pr].iter_mut() {
        *v *= &inv;
    }
    let prow = t[pr].clone();
    for (i, row) in t.iter_mut().enumerate() {
        if i == pr || row[pc].is_zero() {
            continue;
        }
        let f = row[pc].clone();
        for (v, p) in row.iter_mut().zip(&prow) {
            if !p.is_zero() {
                *v -= &f * p;
            }
        }
    }
    if !cost[pc].is_zero() {
        let f = cost[pc].clone();
        for (v, p) in cost.iter_mut().zip(&prow) {
            if !p.is_zero() {
                *v -= &f * p;
            }
        }
    }
}
