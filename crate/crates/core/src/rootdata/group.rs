use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::dynkin::{DynkinLetter, DynkinType};
use super::weight::{OneParameterSubgroup, Weight};
use crate::error::{Error, Result};
use crate::exactgeom::linalg::{dot, inverse, primitive_integer, rat, rat_vec};
use crate::exactgeom::{Rational, RationalMatrix, RationalVector};

/// A positive root in fundamental-weight coordinates, paired with its coroot in
/// coroot coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositiveRoot {
    pub root: Weight,
    pub coroot: Vec<i64>,
}

/// Root datum of a simple group.
///
/// Cartan convention, used by every formula in this crate:
/// `cartan[i][j] = <alpha_i^vee, alpha_j> = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)`.
/// Consequently the fundamental-weight coordinates of `alpha_j` are column `j`,
/// and the fundamental-coweight coordinates of `alpha_i^vee` are row `i`.
#[derive(Clone, Debug)]
pub struct SimpleGroup {
    dynkin: DynkinType,
    cartan: Vec<Vec<i64>>,
    cartan_inv: RationalMatrix,
    /// `det(cartan) * cartan^{-1}`, an integer matrix.
    adjugate: Vec<Vec<i64>>,
    det: i64,
    euclidean_roots: Vec<RationalVector>,
    chamber_generators: Vec<Vec<i64>>,
    weyl_generators: Vec<Vec<Vec<i64>>>,
    positive_roots: Vec<PositiveRoot>,
    warnings: Vec<String>,
}

impl SimpleGroup {
    pub fn new(letter: char, rank: usize) -> Result<Self> {
        let letter = DynkinLetter::from_char(letter)
            .ok_or_else(|| Error::ParseGroup(format!("{letter}{rank}")))?;
        Ok(Self::from_type(DynkinType::new(letter, rank)?))
    }

    /// Parses names such as `A2`, `b3` or `E6`.
    pub fn parse(name: &str) -> Result<Self> {
        Ok(Self::from_type(name.parse()?))
    }

    pub fn from_type(dynkin: DynkinType) -> Self {
        let r = dynkin.rank();
        let euclidean_roots = dynkin.euclidean_simple_roots();
        let cartan: Vec<Vec<i64>> = (0..r)
            .map(|i| {
                let norm = dot(&euclidean_roots[i], &euclidean_roots[i]);
                (0..r)
                    .map(|j| {
                        let v = rat(2) * dot(&euclidean_roots[i], &euclidean_roots[j]) / &norm;
                        assert!(v.is_integer(), "non-integral Cartan entry for {dynkin}");
                        v.to_integer().to_i64().expect("small Cartan entry")
                    })
                    .collect()
            })
            .collect();
        let cartan_rat: RationalMatrix = cartan.iter().map(|row| rat_vec(row)).collect();
        let cartan_inv = inverse(&cartan_rat).expect("Cartan matrices are invertible");
        let det = determinant(&cartan);
        let adjugate = cartan_inv
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| {
                        let v = x * rat(det);
                        debug_assert!(v.is_integer());
                        v.to_integer().to_i64().unwrap()
                    })
                    .collect()
            })
            .collect();
        // Fundamental coweight k has coroot coordinates given by row k of cartan^{-1}.
        let chamber_generators = cartan_inv
            .iter()
            .map(|row| {
                primitive_integer(row)
                    .iter()
                    .map(|x| x.to_i64().unwrap())
                    .collect()
            })
            .collect();
        let weyl_generators = (0..r)
            .map(|i| {
                (0..r)
                    .map(|k| {
                        (0..r)
                            .map(|m| i64::from(k == m) - if m == i { cartan[k][i] } else { 0 })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let mut warnings = Vec::new();
        if !dynkin.is_simple() {
            warnings.push(format!(
                "{dynkin} is semisimple but not simple (it is A1 x A1)"
            ));
        }
        let mut group = SimpleGroup {
            dynkin,
            cartan,
            cartan_inv,
            adjugate,
            det,
            euclidean_roots,
            chamber_generators,
            weyl_generators,
            positive_roots: Vec::new(),
            warnings,
        };
        group.positive_roots = group.compute_positive_roots();
        group
    }

    pub fn dynkin(&self) -> DynkinType {
        self.dynkin
    }

    /// The Dynkin letter, e.g. `"A"`.
    pub fn group_type(&self) -> String {
        self.dynkin.letter().as_char().to_string()
    }

    pub fn rnk(&self) -> usize {
        self.dynkin.rank()
    }

    pub fn name(&self) -> String {
        self.dynkin.to_string()
    }

    pub fn is_type_a(&self) -> bool {
        self.dynkin.letter() == DynkinLetter::A
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn cartan_determinant(&self) -> i64 {
        self.det
    }

    pub fn cartan_inverse(&self) -> &RationalMatrix {
        &self.cartan_inv
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// Fundamental coweights in the coroot basis, cleared to primitive integer vectors.
    pub fn fundamental_chamber_generators(&self) -> &[Vec<i64>] {
        &self.chamber_generators
    }

    /// Simple reflections as matrices acting on fundamental-weight column vectors.
    pub fn weyl_generators(&self) -> &[Vec<Vec<i64>>] {
        &self.weyl_generators
    }

    pub fn positive_roots(&self) -> &[PositiveRoot] {
        &self.positive_roots
    }

    /// `alpha_i` in fundamental-weight coordinates.
    pub fn simple_root(&self, i: usize) -> Weight {
        Weight::new(self.cartan.iter().map(|row| row[i]).collect())
    }

    /// `alpha_i^vee` in fundamental-coweight coordinates.
    pub fn simple_coroot(&self, i: usize) -> Vec<i64> {
        self.cartan[i].clone()
    }

    pub fn euclidean_simple_roots(&self) -> &[RationalVector] {
        &self.euclidean_roots
    }

    /// Simple roots for display: Euclidean coordinates for types A-D and F4,
    /// fundamental-weight coefficients for E and G.
    pub fn simple_roots_display(&self) -> Vec<RationalVector> {
        match self.dynkin.letter() {
            DynkinLetter::E | DynkinLetter::G => (0..self.rnk())
                .map(|i| rat_vec(self.simple_root(i).coeffs()))
                .collect(),
            _ => self.euclidean_roots.clone(),
        }
    }

    fn check_rank(&self, len: usize) -> Result<()> {
        if len == self.rnk() {
            Ok(())
        } else {
            Err(Error::RankMismatch { expected: self.rnk(), found: len })
        }
    }

    /// Coordinates of `chi` in the simple-root basis. These are also the pairings of
    /// `chi` with the fundamental coweights.
    pub fn simple_root_coords(&self, chi: &Weight) -> RationalVector {
        let v = rat_vec(chi.coeffs());
        self.cartan_inv.iter().map(|row| dot(row, &v)).collect()
    }

    /// `det(cartan)` times the simple-root coordinates: an integer normal vector with the
    /// same sign pattern against every one-parameter subgroup as `chi`.
    pub fn scaled_normal(&self, chi: &Weight) -> Vec<i64> {
        self.adjugate
            .iter()
            .map(|row| row.iter().zip(chi.coeffs()).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `<chi, lambda>` with `chi` in fundamental weights and `lambda` in fundamental coweights.
    pub fn pairing(&self, chi: &Weight, lam: &OneParameterSubgroup) -> Result<Rational> {
        self.pairing_rational(chi, &rat_vec(lam.coeffs()))
    }

    /// Pairing against an arbitrary rational coweight vector (not necessarily primitive).
    pub fn pairing_rational(&self, chi: &Weight, lam: &[Rational]) -> Result<Rational> {
        self.check_rank(chi.rank())?;
        self.check_rank(lam.len())?;
        Ok(dot(&self.simple_root_coords(chi), lam))
    }

    /// `det(cartan) * <chi, lambda>`, exact in integers; same sign as the pairing.
    pub fn scaled_pairing(&self, chi: &Weight, lam: &[i64]) -> i128 {
        self.scaled_normal(chi)
            .iter()
            .zip(lam)
            .map(|(&a, &b)| a as i128 * b as i128)
            .sum()
    }

    /// `<chi, lambda^vee>` for a coroot given in coroot coordinates.
    pub fn pairing_with_coroot(chi: &Weight, coroot: &[i64]) -> i64 {
        chi.coeffs().iter().zip(coroot).map(|(a, b)| a * b).sum()
    }

    /// Orbit of the simple roots (with their coroots) under the simple reflections,
    /// keeping the positive half.
    fn compute_positive_roots(&self) -> Vec<PositiveRoot> {
        let r = self.rnk();
        let mut seen = std::collections::BTreeSet::new();
        let mut queue: std::collections::VecDeque<(Weight, Vec<i64>)> = (0..r)
            .map(|i| {
                let mut e = vec![0; r];
                e[i] = 1;
                (self.simple_root(i), e)
            })
            .collect();
        let mut all = Vec::new();
        while let Some((root, coroot)) = queue.pop_front() {
            if !seen.insert(root.clone()) {
                continue;
            }
            for k in 0..r {
                let next = (self.reflect_weight(k, &root), self.reflect_coroot(k, &coroot));
                if !seen.contains(&next.0) {
                    queue.push_back(next);
                }
            }
            all.push((root, coroot));
        }
        let mut positive: Vec<PositiveRoot> = all
            .into_iter()
            .filter(|(_, c)| c.iter().all(|&x| x >= 0))
            .map(|(root, coroot)| PositiveRoot { root, coroot })
            .collect();
        positive.sort_by(|a, b| {
            let ha: i64 = a.coroot.iter().sum();
            let hb: i64 = b.coroot.iter().sum();
            ha.cmp(&hb).then_with(|| b.root.cmp(&a.root))
        });
        positive
    }

    /// `s_i` applied to a coroot-lattice vector in coroot coordinates.
    pub(crate) fn reflect_coroot(&self, i: usize, c: &[i64]) -> Vec<i64> {
        let alpha_i_on_c: i64 = c.iter().enumerate().map(|(j, &cj)| cj * self.cartan[j][i]).sum();
        let mut out = c.to_vec();
        out[i] -= alpha_i_on_c;
        out
    }
}

fn determinant(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m.iter().map(|r| rat_vec(r)).collect();
    let mut det = rat(1);
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return 0;
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= a[c][c].clone();
        for i in c + 1..n {
            let f = &a[i][c] / &a[c][c];
            for j in c..n {
                let delta = &f * &a[c][j];
                a[i][j] -= delta;
            }
        }
    }
    let d: BigInt = det.to_integer();
    d.to_i64().unwrap()
}
