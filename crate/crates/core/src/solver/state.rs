use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::rootdata::{OneParameterSubgroup, Weight};

/// Which sign condition cuts a state out of the weight set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    /// `<chi, lambda> >= 0`
    NonNegative,
    /// `<chi, lambda> > 0`
    Positive,
    /// `<chi, lambda> = 0`
    Zero,
}

impl Relation {
    pub fn holds(self, scaled_pairing: i128) -> bool {
        match self {
            Relation::NonNegative => scaled_pairing >= 0,
            Relation::Positive => scaled_pairing > 0,
            Relation::Zero => scaled_pairing == 0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StateKind {
    Nonstable,
    Unstable,
    StrictlyPolystable,
}

impl StateKind {
    pub fn relation(self) -> Relation {
        match self {
            StateKind::Nonstable => Relation::NonNegative,
            StateKind::Unstable => Relation::Positive,
            StateKind::StrictlyPolystable => Relation::Zero,
        }
    }

    pub fn for_relation(rel: Relation) -> Self {
        match rel {
            Relation::NonNegative => StateKind::Nonstable,
            Relation::Positive => StateKind::Unstable,
            Relation::Zero => StateKind::StrictlyPolystable,
        }
    }
}

impl fmt::Display for StateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StateKind::Nonstable => "nonstable",
            StateKind::Unstable => "unstable",
            StateKind::StrictlyPolystable => "strictly polystable",
        })
    }
}

/// A set of weights cut out by a one-parameter subgroup.
///
/// Weights are kept sorted in descending lexicographic order of their
/// fundamental-weight coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct State {
    weights: Vec<Weight>,
    witness: Option<OneParameterSubgroup>,
    kind: StateKind,
}

impl State {
    pub fn new(mut weights: Vec<Weight>, witness: Option<OneParameterSubgroup>, kind: StateKind) -> Self {
        weights.sort_by(|a, b| b.cmp(a));
        weights.dedup();
        State { weights, witness, kind }
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn witness(&self) -> Option<&OneParameterSubgroup> {
        self.witness.as_ref()
    }

    pub fn kind(&self) -> StateKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn contains(&self, w: &Weight) -> bool {
        self.weights.binary_search_by(|x| w.cmp(x)).is_ok()
    }

    pub fn is_subset_of(&self, other: &State) -> bool {
        self.len() <= other.len() && self.weights.iter().all(|w| other.contains(w))
    }

    pub fn is_proper_subset_of(&self, other: &State) -> bool {
        self.len() < other.len() && self.is_subset_of(other)
    }

    pub(crate) fn cmp_size_desc(&self, other: &State) -> Ordering {
        other.len().cmp(&self.len()).then_with(|| self.weights.cmp(&other.weights))
    }

    pub(crate) fn cmp_size_asc(&self, other: &State) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.weights.cmp(&other.weights))
    }
}
