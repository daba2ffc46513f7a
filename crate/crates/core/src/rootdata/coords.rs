//! Coordinate systems on the character lattice `M` and the one-parameter-subgroup
//! lattice `N`.
//!
//! Characters: fundamental weights (canonical), simple roots, and for type A the
//! `L`-coordinates of `GL_{r+1}` (defined modulo the trace `(1, ..., 1)`).
//! One-parameter subgroups: fundamental coweights (canonical), coroots, and for type
//! A the diagonal `H`-coordinates (summing to zero) and `T_i = H_i - H_{i+1}`, which
//! coincide with coroot coordinates.

use num_traits::{ToPrimitive, Zero};

use super::group::SimpleGroup;
use super::weight::{OneParameterSubgroup, Weight};
use crate::error::{Error, Result};
use crate::exactgeom::linalg::{dot, primitive_integer, rat, rat_vec};
use crate::exactgeom::{Rational, RationalVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoordSystem {
    FundamentalWeight,
    SimpleRoot,
    L,
    FundamentalCoweight,
    Coroot,
    H,
    T,
}

impl CoordSystem {
    pub fn name(self) -> &'static str {
        match self {
            CoordSystem::FundamentalWeight => "fundamental-weight",
            CoordSystem::SimpleRoot => "simple-root",
            CoordSystem::L => "L",
            CoordSystem::FundamentalCoweight => "fundamental-coweight",
            CoordSystem::Coroot => "coroot",
            CoordSystem::H => "H",
            CoordSystem::T => "T",
        }
    }

    fn is_character(self) -> bool {
        matches!(
            self,
            CoordSystem::FundamentalWeight | CoordSystem::SimpleRoot | CoordSystem::L
        )
    }

    fn type_a_only(self) -> bool {
        matches!(self, CoordSystem::L | CoordSystem::H | CoordSystem::T)
    }
}

impl SimpleGroup {
    /// Exact change of basis between two coordinate systems on the same lattice.
    ///
    /// `L` output uses the representative whose last coordinate is zero.
    pub fn convert_coordinates(
        &self,
        v: &[Rational],
        from: CoordSystem,
        to: CoordSystem,
    ) -> Result<RationalVector> {
        let unsupported = || Error::UnsupportedConversion {
            from: from.name(),
            to: to.name(),
            group: self.name(),
        };
        if from.is_character() != to.is_character()
            || ((from.type_a_only() || to.type_a_only()) && !self.is_type_a())
        {
            return Err(unsupported());
        }
        let expected = match from {
            CoordSystem::L | CoordSystem::H => self.rnk() + 1,
            _ => self.rnk(),
        };
        if v.len() != expected {
            return Err(Error::RankMismatch { expected, found: v.len() });
        }
        let hub = self.to_hub(v, from)?;
        Ok(self.hub_to(hub, to))
    }

    fn to_hub(&self, v: &[Rational], from: CoordSystem) -> Result<RationalVector> {
        let r = self.rnk();
        let a = self.cartan();
        Ok(match from {
            CoordSystem::FundamentalWeight | CoordSystem::FundamentalCoweight => v.to_vec(),
            CoordSystem::SimpleRoot => (0..r)
                .map(|i| (0..r).fold(Rational::zero(), |acc, j| acc + rat(a[i][j]) * &v[j]))
                .collect(),
            CoordSystem::L => (0..r).map(|i| &v[i] - &v[i + 1]).collect(),
            CoordSystem::Coroot | CoordSystem::T => coroot_to_coweight(self, v),
            CoordSystem::H => {
                let total = v.iter().fold(Rational::zero(), |acc, x| acc + x);
                if !total.is_zero() {
                    return Err(Error::InvalidCoordinates(format!(
                        "H-coordinates must sum to zero, got sum {total}"
                    )));
                }
                let mut partial = Rational::zero();
                let t: RationalVector = v[..r]
                    .iter()
                    .map(|h| {
                        partial += h;
                        partial.clone()
                    })
                    .collect();
                coroot_to_coweight(self, &t)
            }
        })
    }

    fn hub_to(&self, hub: RationalVector, to: CoordSystem) -> RationalVector {
        let r = self.rnk();
        match to {
            CoordSystem::FundamentalWeight | CoordSystem::FundamentalCoweight => hub,
            CoordSystem::SimpleRoot => self
                .cartan_inverse()
                .iter()
                .map(|row| dot(row, &hub))
                .collect(),
            CoordSystem::L => {
                let mut l = vec![Rational::zero(); r + 1];
                for i in (0..r).rev() {
                    l[i] = &l[i + 1] + &hub[i];
                }
                l
            }
            CoordSystem::Coroot | CoordSystem::T => coweight_to_coroot(self, &hub),
            CoordSystem::H => {
                let t = coweight_to_coroot(self, &hub);
                (0..=r)
                    .map(|i| {
                        let cur = if i < r { t[i].clone() } else { Rational::zero() };
                        let prev = if i > 0 { t[i - 1].clone() } else { Rational::zero() };
                        cur - prev
                    })
                    .collect()
            }
        }
    }

    /// `L`-coordinates of a type-A weight with the given coordinate sum, if integral.
    pub fn l_form(&self, w: &Weight, total: i64) -> Option<Vec<i64>> {
        if !self.is_type_a() {
            return None;
        }
        let r = self.rnk() as i64;
        let weighted: i64 = w.coeffs().iter().enumerate().map(|(k, &x)| (k as i64 + 1) * x).sum();
        let numer = total - weighted;
        if numer % (r + 1) != 0 {
            return None;
        }
        let base = numer / (r + 1);
        let mut l = vec![base; r as usize + 1];
        for i in (0..r as usize).rev() {
            l[i] = l[i + 1] + w.coeffs()[i];
        }
        Some(l)
    }

    /// Sum of the `L`-coordinates of `w` in the representative with last entry zero.
    pub fn l_total(&self, w: &Weight) -> i64 {
        w.coeffs().iter().enumerate().map(|(k, &x)| (k as i64 + 1) * x).sum()
    }

    /// Smallest `L`-coordinate sum giving every weight in `weights` a non-negative integral `L`-form.
    pub fn l_total_for(&self, weights: &[Weight]) -> Option<i64> {
        if !self.is_type_a() {
            return None;
        }
        let n = self.rnk() as i64 + 1;
        let first = self.l_total(weights.first()?);
        let mut best = i64::MIN;
        for w in weights {
            let t = self.l_total(w);
            if (t - first).rem_euclid(n) != 0 {
                return None;
            }
            let low = *self.l_form(w, t)?.iter().min().unwrap();
            best = best.max(t - n * low.min(0));
        }
        Some(best)
    }

    pub fn weight_from_l_form(&self, l: &[i64]) -> Result<Weight> {
        let v = self.convert_coordinates(&rat_vec(l), CoordSystem::L, CoordSystem::FundamentalWeight)?;
        Ok(Weight::new(v.iter().map(|x| x.to_integer().to_i64().unwrap()).collect()))
    }

    /// Primitive integer `H`-coordinates of a type-A one-parameter subgroup.
    pub fn h_form(&self, lam: &OneParameterSubgroup) -> Option<Vec<i64>> {
        let h = self
            .convert_coordinates(
                &rat_vec(lam.coeffs()),
                CoordSystem::FundamentalCoweight,
                CoordSystem::H,
            )
            .ok()?;
        primitive_integer(&h).iter().map(|x| x.to_i64()).collect()
    }

    pub fn coweight_from_h_form(&self, h: &[i64]) -> Result<OneParameterSubgroup> {
        let v = self.convert_coordinates(
            &rat_vec(h),
            CoordSystem::H,
            CoordSystem::FundamentalCoweight,
        )?;
        OneParameterSubgroup::from_rational(&v)
    }
}

/// Coweight coordinates of `sum_j c_j alpha_j^vee`: row `j` of the Cartan matrix is `alpha_j^vee`.
fn coroot_to_coweight(g: &SimpleGroup, c: &[Rational]) -> RationalVector {
    let r = g.rnk();
    let a = g.cartan();
    (0..r)
        .map(|k| (0..r).fold(Rational::zero(), |acc, j| acc + &c[j] * rat(a[j][k])))
        .collect()
}

fn coweight_to_coroot(g: &SimpleGroup, m: &[Rational]) -> RationalVector {
    let r = g.rnk();
    let inv = g.cartan_inverse();
    (0..r)
        .map(|j| (0..r).fold(Rational::zero(), |acc, k| acc + &inv[k][j] * &m[k]))
        .collect()
}
