//! Dense exact linear algebra over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Rational, RationalMatrix, RationalVector};

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_vec(v: &[i64]) -> RationalVector {
    v.iter().map(|&x| rat(x)).collect()
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Reduced row echelon form. Returns the reduced rows and the pivot column of each nonzero row.
pub fn rref(rows: &[RationalVector], dim: usize) -> (RationalMatrix, Vec<usize>) {
    let mut m: RationalMatrix = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..dim {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..dim {
                    let delta = &f * &m[r][j];
                    m[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(rows: &[RationalVector], dim: usize) -> usize {
    rref(rows, dim).1.len()
}

/// Basis of `{x : row . x = 0 for every row}`.
pub fn kernel(rows: &[RationalVector], dim: usize) -> Vec<RationalVector> {
    let (m, pivots) = rref(rows, dim);
    let free: Vec<usize> = (0..dim).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); dim];
            v[f] = Rational::one();
            for (row, &p) in m.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// Some solution of `a x = b`, if one exists.
pub fn solve(a: &[RationalVector], b: &[Rational], dim: usize) -> Option<RationalVector> {
    let augmented: RationalMatrix = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let (m, pivots) = rref(&augmented, dim + 1);
    if pivots.last() == Some(&dim) {
        return None;
    }
    let mut x = vec![Rational::zero(); dim];
    for (row, &p) in m.iter().zip(&pivots) {
        x[p] = row[dim].clone();
    }
    Some(x)
}

pub fn inverse(a: &[RationalVector]) -> Option<RationalMatrix> {
    let n = a.len();
    let augmented: RationalMatrix = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    let (m, pivots) = rref(&augmented, 2 * n);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(m.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub fn transpose<T: Clone>(m: &[Vec<T>]) -> Vec<Vec<T>> {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len())
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

pub fn mat_vec(m: &[RationalVector], v: &[Rational]) -> RationalVector {
    m.iter().map(|row| dot(row, v)).collect()
}

/// Positive multiple of `v` with coprime integer entries. The zero vector maps to zeros.
pub fn primitive_integer(v: &[Rational]) -> Vec<BigInt> {
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

/// Positive multiple of an integer vector with coprime entries.
pub fn primitive_i64(v: &[i64]) -> Vec<i64> {
    let g = v.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    if g == 0 {
        return v.to_vec();
    }
    v.iter().map(|x| x / g.abs()).collect()
}

pub fn bigint_to_i64(v: &[BigInt]) -> Option<Vec<i64>> {
    v.iter().map(|x| i64::try_from(x).ok()).collect()
}

pub fn sign(x: &Rational) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}
