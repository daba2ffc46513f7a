//! The stability engine.
//!
//! Candidate one-parameter subgroups are faces of the arrangement cut out of the
//! fundamental chamber by the hyperplanes `chi^perp`, `chi` ranging over the
//! nonzero weights:
//!
//! * Moving `lambda` from the relative interior of a face onto a face of its
//!   closure can only turn strict signs into zeros, so `{chi : <chi, lambda> >= 0}`
//!   weakly grows. Every face of the (pointed) chamber arrangement has a ray in its
//!   closure, hence the maximal `>= 0` states are attained on rays.
//! * Dually, perturbing `lambda` into an adjacent open cell keeps every strict sign
//!   and resolves zeros, so `{chi : <chi, lambda> > 0}` weakly grows; the maximal
//!   `> 0` states are attained on open cells.
//! * Strictly polystable candidates are the `= 0` states over rays and cells whose
//!   convex hull contains the origin in its relative interior.
//!
//! Every one-parameter subgroup is Weyl-conjugate to one in the chamber, so these
//! lists describe all states up to the Weyl group.

mod classify;
mod state;

use std::collections::BTreeMap;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rayon::prelude::*;

pub use classify::{TorusClass, TorusClassification};
pub use state::{Relation, State, StateKind};

use crate::error::{Error, Result};
use crate::exactgeom::linalg::{bigint_to_i64, rat_vec};
use crate::exactgeom::{
    arrangement_cells, arrangement_rays, zero_in_relative_interior, Rational, RationalVector,
};
use crate::limits::Limits;
use crate::repsupport::{weight_support_with_limits, HighestWeight, RepresentationSupport};
use crate::rootdata::{OneParameterSubgroup, SimpleGroup, Weight};

/// Which loci to compute.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Loci {
    pub nonstable: bool,
    pub unstable: bool,
    pub polystable: bool,
}

impl Loci {
    pub const ALL: Loci = Loci { nonstable: true, unstable: true, polystable: true };

    /// Parses a comma-separated subset of `nonstable`, `unstable`, `polystable` (or `all`).
    pub fn parse(text: &str) -> Result<Self> {
        let mut loci = Loci { nonstable: false, unstable: false, polystable: false };
        for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            match part.to_ascii_lowercase().as_str() {
                "nonstable" | "non-stable" => loci.nonstable = true,
                "unstable" => loci.unstable = true,
                "polystable" | "strictly-polystable" => loci.polystable = true,
                "all" => loci = Loci::ALL,
                _ => return Err(Error::InvalidLoci(text.to_string())),
            }
        }
        if !(loci.nonstable || loci.unstable || loci.polystable) {
            return Err(Error::InvalidLoci(text.to_string()));
        }
        Ok(loci)
    }
}

/// A stability problem: a simple group together with the weights of a representation.
#[derive(Debug)]
pub struct GitProblem {
    group: SimpleGroup,
    support: RepresentationSupport,
    weyl_optimisation: bool,
    limits: Limits,
    rays: OnceLock<Vec<OneParameterSubgroup>>,
    cells: OnceLock<Vec<OneParameterSubgroup>>,
}

/// Solver output together with run metadata.
#[derive(Clone, Debug)]
pub struct GitSolution {
    pub group: String,
    pub highest_weight: Option<HighestWeight>,
    pub weyl_optimisation: bool,
    pub warnings: Vec<String>,
    pub support_size: usize,
    pub nonstable: Option<Vec<State>>,
    pub unstable: Option<Vec<State>>,
    pub strictly_polystable: Option<Vec<State>>,
    /// Wall-clock time of the solve. Not part of any serialized report.
    pub elapsed: Duration,
}

impl GitProblem {
    pub fn new(group: SimpleGroup, hw: HighestWeight, weyl_optimisation: bool) -> Result<Self> {
        Self::with_limits(group, hw, weyl_optimisation, Limits::default())
    }

    pub fn with_limits(
        group: SimpleGroup,
        hw: HighestWeight,
        weyl_optimisation: bool,
        limits: Limits,
    ) -> Result<Self> {
        let support = weight_support_with_limits(&group, &hw, &limits)?;
        Ok(Self::from_support(group, support, weyl_optimisation, limits))
    }

    /// Problem over an explicit (Weyl-closed) weight set, e.g. of a reducible representation.
    pub fn from_support(
        group: SimpleGroup,
        support: RepresentationSupport,
        weyl_optimisation: bool,
        limits: Limits,
    ) -> Self {
        GitProblem {
            group,
            support,
            weyl_optimisation,
            limits,
            rays: OnceLock::new(),
            cells: OnceLock::new(),
        }
    }

    pub fn group(&self) -> &SimpleGroup {
        &self.group
    }

    pub fn support(&self) -> &RepresentationSupport {
        &self.support
    }

    pub fn weyl_optimisation(&self) -> bool {
        self.weyl_optimisation
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    fn normals(&self) -> Vec<RationalVector> {
        self.support
            .weights()
            .iter()
            .filter(|w| !w.is_zero())
            .map(|w| rat_vec(&self.group.scaled_normal(w)))
            .collect()
    }

    fn chamber(&self) -> Vec<RationalVector> {
        let r = self.group.rnk();
        (0..r)
            .map(|i| rat_vec(&(0..r).map(|j| i64::from(i == j)).collect::<Vec<_>>()))
            .collect()
    }

    fn to_one_ps(point: &[num_bigint::BigInt]) -> OneParameterSubgroup {
        let v = bigint_to_i64(point).expect("candidate fits in 64 bits");
        OneParameterSubgroup::new(v).expect("arrangement faces are nonzero")
    }

    /// Rays of the weight arrangement inside the fundamental chamber, in fundamental-coweight
    /// coordinates, sorted lexicographically.
    pub fn candidate_rays(&self) -> &[OneParameterSubgroup] {
        self.rays.get_or_init(|| {
            arrangement_rays(&self.normals(), &self.chamber(), self.group.rnk())
                .iter()
                .map(|f| Self::to_one_ps(&f.point))
                .collect()
        })
    }

    /// One interior point of every open cell of the weight arrangement in the chamber.
    pub fn candidate_cells(&self) -> Result<&[OneParameterSubgroup]> {
        if let Some(c) = self.cells.get() {
            return Ok(c);
        }
        let cells: Vec<OneParameterSubgroup> = arrangement_cells(
            &self.normals(),
            &self.chamber(),
            self.group.rnk(),
            self.limits.max_cells,
        )?
        .iter()
        .map(|f| Self::to_one_ps(&f.point))
        .collect();
        Ok(self.cells.get_or_init(|| cells))
    }

    /// The weights satisfying `relation` against `lam`.
    pub fn state_of(&self, lam: &OneParameterSubgroup, relation: Relation) -> State {
        let weights = self
            .support
            .weights()
            .iter()
            .filter(|w| relation.holds(self.group.scaled_pairing(w, lam.coeffs())))
            .cloned()
            .collect();
        State::new(weights, Some(lam.clone()), StateKind::for_relation(relation))
    }

    fn states_over(&self, candidates: &[OneParameterSubgroup], relation: Relation) -> Vec<State> {
        candidates
            .par_iter()
            .map(|lam| self.state_of(lam, relation))
            .collect()
    }

    /// Keeps the first state for each weight set, then drops states strictly contained in another.
    fn maximal(&self, states: Vec<State>) -> Result<Vec<State>> {
        let mut seen = BTreeMap::new();
        let mut unique = Vec::new();
        for s in states {
            if s.is_empty() {
                continue;
            }
            if seen.insert(s.weights().to_vec(), ()).is_none() {
                unique.push(s);
            }
        }
        let mut kept: Vec<State> = unique
            .iter()
            .filter(|s| !unique.iter().any(|t| s.is_proper_subset_of(t)))
            .cloned()
            .collect();
        kept.sort_by(State::cmp_size_desc);
        if self.weyl_optimisation {
            kept = self.weyl_dedup(kept)?;
        }
        Ok(kept)
    }

    /// Drops states Weyl-equivalent to an earlier one.
    fn weyl_dedup(&self, states: Vec<State>) -> Result<Vec<State>> {
        let forms: Vec<Vec<Weight>> = states
            .par_iter()
            .map(|s| self.group.canonical_set_form(s.weights(), self.limits.max_weyl_enumeration))
            .collect::<Result<_>>()?;
        let mut seen = std::collections::BTreeSet::new();
        Ok(states
            .into_iter()
            .zip(forms)
            .filter_map(|(s, f)| seen.insert(f).then_some(s))
            .collect())
    }

    /// Maximal non-stable states, largest first.
    pub fn solve_non_stable(&self) -> Result<Vec<State>> {
        let states = self.states_over(self.candidate_rays(), Relation::NonNegative);
        self.maximal(states)
    }

    /// Maximal unstable states, largest first.
    pub fn solve_unstable(&self) -> Result<Vec<State>> {
        let states = self.states_over(self.candidate_cells()?, Relation::Positive);
        self.maximal(states)
    }

    /// Strictly polystable states up to the Weyl group, smallest first. Nested states are kept.
    pub fn solve_strictly_polystable(&self) -> Result<Vec<State>> {
        let candidates: Vec<OneParameterSubgroup> = self
            .candidate_rays()
            .iter()
            .chain(self.candidate_cells()?)
            .cloned()
            .collect();
        let states: Vec<Option<State>> = self
            .states_over(&candidates, Relation::Zero)
            .into_par_iter()
            .map(|s| {
                let points: Vec<RationalVector> =
                    s.weights().iter().map(|w| rat_vec(w.coeffs())).collect();
                (!s.is_empty() && zero_in_relative_interior(&points)).then_some(s)
            })
            .collect();
        let mut seen = BTreeMap::new();
        let mut unique = Vec::new();
        for s in states.into_iter().flatten() {
            if seen.insert(s.weights().to_vec(), ()).is_none() {
                unique.push(s);
            }
        }
        let mut out = self.weyl_dedup(unique)?;
        out.sort_by(State::cmp_size_asc);
        Ok(out)
    }

    /// Hilbert-Mumford weight `mu(x, lambda) = min <chi, lambda>` over the support of `x`.
    pub fn hm_mu(&self, point_support: &[Weight], lam: &OneParameterSubgroup) -> Result<Rational> {
        self.check_point_support(point_support)?;
        let mut best: Option<Rational> = None;
        for w in point_support {
            let p = self.group.pairing(w, lam)?;
            if best.as_ref().is_none_or(|b| p < *b) {
                best = Some(p);
            }
        }
        Ok(best.expect("non-empty support"))
    }

    pub(crate) fn check_point_support(&self, point_support: &[Weight]) -> Result<()> {
        if point_support.is_empty() {
            return Err(Error::EmptySupport);
        }
        for w in point_support {
            if !self.support.contains(w) {
                return Err(Error::NotInSupport(w.coeffs().to_vec()));
            }
        }
        Ok(())
    }

    pub fn solve(&self, loci: Loci) -> Result<GitSolution> {
        let start = Instant::now();
        let nonstable = loci.nonstable.then(|| self.solve_non_stable()).transpose()?;
        let unstable = loci.unstable.then(|| self.solve_unstable()).transpose()?;
        let strictly_polystable = loci.polystable.then(|| self.solve_strictly_polystable()).transpose()?;
        Ok(GitSolution {
            group: self.group.name(),
            highest_weight: self.support.highest().cloned(),
            weyl_optimisation: self.weyl_optimisation,
            warnings: self.group.warnings().to_vec(),
            support_size: self.support.len(),
            nonstable,
            unstable,
            strictly_polystable,
            elapsed: start.elapsed(),
        })
    }
}

#[cfg(test)]
mod tests;
