//! Exact feasibility for homogeneous linear systems.
//!
//! The core routine is a dense Phase I simplex over the rationals using
//! Bland's rule, so it always terminates. Strict inequalities `f > 0` are
//! homogenized to `f >= 1`, which is only equivalent on cones: every system
//! passed to [`lp_feasible`] must be positively homogeneous.

use num_traits::{One, Signed, Zero};

use super::linalg::{dot, rat};
use super::{Rational, RationalVector};

/// Finds `x >= 0` with `a x = b`, or `None` if the system is infeasible.
pub fn feasible_nonneg(a: &[RationalVector], b: &[Rational], n: usize) -> Option<RationalVector> {
    let m = a.len();
    debug_assert_eq!(b.len(), m);
    // Tableau rows [A | b] with b >= 0; the initial basis is made of artificial
    // variables, which are identified by indices >= n and never re-enter.
    let mut t: Vec<RationalVector> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            if rhs.is_negative() {
                for x in r.iter_mut() {
                    *x = -x.clone();
                }
            }
            r
        })
        .collect();
    let mut basis: Vec<usize> = (n..n + m).collect();
    // Reduced costs of the Phase I objective (sum of artificials), rhs last.
    let mut cost: RationalVector = (0..=n)
        .map(|j| -t.iter().fold(Rational::zero(), |acc, row| acc + &row[j]))
        .collect();

    // Bland's rule: lowest-index entering and leaving columns.
    while let Some(enter) = (0..n).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, Rational)> = None;
        for (i, row) in t.iter().enumerate() {
            if !row[enter].is_positive() {
                continue;
            }
            let ratio = &row[n] / &row[enter];
            let better = match &leave {
                None => true,
                Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        // Phase I is bounded below by zero, so a negative reduced cost always has a pivot row.
        let (r, _) = leave.expect("phase one objective is bounded");
        pivot(&mut t, &mut cost, r, enter, n);
        basis[r] = enter;
    }

    if !cost[n].is_zero() {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for (row, &bv) in t.iter().zip(&basis) {
        if bv < n {
            x[bv] = row[n].clone();
        }
    }
    Some(x)
}

fn pivot(t: &mut [RationalVector], cost: &mut RationalVector, r: usize, c: usize, n: usize) {
    let inv = t[r][c].recip();
    for x in t[r].iter_mut() {
        if !x.is_zero() {
            *x = &*x * &inv;
        }
    }
    let pivot_row = t[r].clone();
    let support: Vec<usize> = (0..=n).filter(|&j| !pivot_row[j].is_zero()).collect();
    for (i, row) in t.iter_mut().enumerate() {
        if i == r || row[c].is_zero() {
            continue;
        }
        let f = row[c].clone();
        for &j in &support {
            row[j] -= &f * &pivot_row[j];
        }
    }
    if !cost[c].is_zero() {
        let f = cost[c].clone();
        for &j in &support {
            cost[j] -= &f * &pivot_row[j];
        }
    }
}

/// Decides whether some `x` satisfies `e . x = 0` for every `e` in `equalities`,
/// `w . x >= 0` for every `w` in `weak` and `s . x > 0` for every `s` in `strict`.
///
/// Returns an exact witness on success. All forms must have length `dim`.
pub fn lp_feasible(
    equalities: &[RationalVector],
    weak: &[RationalVector],
    strict: &[RationalVector],
    dim: usize,
) -> Option<RationalVector> {
    let n_slack = weak.len() + strict.len();
    let n = 2 * dim + n_slack;
    let mut rows = Vec::with_capacity(equalities.len() + n_slack);
    let mut rhs = Vec::with_capacity(rows.capacity());
    let split = |form: &RationalVector| -> RationalVector {
        debug_assert_eq!(form.len(), dim);
        let mut row = Vec::with_capacity(n);
        row.extend(form.iter().cloned());
        row.extend(form.iter().map(|x| -x.clone()));
        row.resize(n, Rational::zero());
        row
    };
    for e in equalities {
        rows.push(split(e));
        rhs.push(Rational::zero());
    }
    for (k, w) in weak.iter().chain(strict).enumerate() {
        let mut row = split(w);
        row[2 * dim + k] = -Rational::one();
        rows.push(row);
        rhs.push(if k < weak.len() { Rational::zero() } else { rat(1) });
    }
    let y = feasible_nonneg(&rows, &rhs, n)?;
    let x: RationalVector = (0..dim).map(|i| &y[i] - &y[dim + i]).collect();
    assert!(
        equalities.iter().all(|e| dot(e, &x).is_zero())
            && weak.iter().all(|w| !dot(w, &x).is_negative())
            && strict.iter().all(|s| dot(s, &x).is_positive()),
        "simplex witness failed re-substitution"
    );
    Some(x)
}

/// True iff the origin is a strictly positive combination of all `points`,
/// i.e. it lies in the relative interior of their convex hull.
pub fn zero_in_relative_interior(points: &[RationalVector]) -> bool {
    let Some(first) = points.first() else {
        return false;
    };
    let dim = first.len();
    // c_i = 1 + y_i with y_i >= 0 turns the strict positivity into a standard-form system.
    let rows: Vec<RationalVector> = (0..dim)
        .map(|d| points.iter().map(|p| p[d].clone()).collect())
        .collect();
    let rhs: RationalVector = rows
        .iter()
        .map(|row| -row.iter().fold(Rational::zero(), |acc, x| acc + x))
        .collect();
    match feasible_nonneg(&rows, &rhs, points.len()) {
        Some(y) => {
            debug_assert!(rows
                .iter()
                .zip(&rhs)
                .all(|(row, b)| dot(row, &y) == *b));
            true
        }
        None => false,
    }
}
