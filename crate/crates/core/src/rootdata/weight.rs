use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactgeom::linalg::{bigint_to_i64, primitive_i64, primitive_integer};
use crate::exactgeom::Rational;

/// A character of the maximal torus, in the fundamental-weight basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Weight(coeffs)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// `d` times the `i`-th fundamental weight (0-based `i`).
    pub fn fundamental(rank: usize, i: usize, d: i64) -> Self {
        let mut v = vec![0; rank];
        v[i] = d;
        Weight(v)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub_scaled(&self, other: &Weight, k: i64) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - k * b).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

pub(crate) fn write_tuple<T: fmt::Display>(f: &mut impl fmt::Write, v: &[T]) -> fmt::Result {
    write!(f, "(")?;
    for (i, x) in v.iter().enumerate() {
        if i > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, ")")
}

/// A one-parameter subgroup of the maximal torus, in the fundamental-coweight basis.
///
/// Always stored as a primitive integer vector. Normalization only rescales by a
/// positive factor, since `lambda` and `-lambda` are different subgroups.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct OneParameterSubgroup(Vec<i64>);

impl OneParameterSubgroup {
    pub fn new(coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.iter().all(|&x| x == 0) {
            return Err(Error::InvalidCoordinates(
                "a one-parameter subgroup must be nonzero".into(),
            ));
        }
        Ok(OneParameterSubgroup(primitive_i64(&coeffs)))
    }

    /// Primitive integer multiple of a nonzero rational coweight vector.
    pub fn from_rational(coeffs: &[Rational]) -> Result<Self> {
        let ints = bigint_to_i64(&primitive_integer(coeffs)).ok_or_else(|| {
            Error::InvalidCoordinates("one-parameter subgroup does not fit in 64 bits".into())
        })?;
        Self::new(ints)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// The fundamental chamber is the non-negative orthant in this basis.
    pub fn in_fundamental_chamber(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }
}

impl fmt::Display for OneParameterSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}
