//! Weight supports of irreducible representations.
//!
//! The support of the irreducible module with highest weight `lambda` is the
//! saturated set generated by `lambda`: every Weyl image of every dominant `mu`
//! with `lambda - mu` a non-negative integer combination of simple roots.
//! Multiplicities are never computed.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::rootdata::{SimpleGroup, Weight};

/// A dominant weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HighestWeight(Weight);

impl HighestWeight {
    pub fn new(w: Weight) -> Result<Self> {
        if w.is_dominant() {
            Ok(HighestWeight(w))
        } else {
            Err(Error::NonDominant(w.coeffs().to_vec()))
        }
    }

    pub fn weight(&self) -> &Weight {
        &self.0
    }

    /// `d1*w1+d2*w2+...` with zero terms omitted, `0` for the trivial weight.
    pub fn omega_notation(&self) -> String {
        let terms: Vec<String> = self
            .0
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, c)| format!("{c}*w{}", i + 1))
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
}

/// The weights of a representation, sorted, together with where they came from.
#[derive(Clone, Debug)]
pub struct RepresentationSupport {
    highest: Option<HighestWeight>,
    weights: Vec<Weight>,
}

impl RepresentationSupport {
    /// Support given directly as a weight list; it must be closed under the Weyl group.
    pub fn from_weights(g: &SimpleGroup, weights: impl IntoIterator<Item = Weight>) -> Result<Self> {
        let set: BTreeSet<Weight> = weights.into_iter().collect();
        for w in &set {
            if w.rank() != g.rnk() {
                return Err(Error::RankMismatch { expected: g.rnk(), found: w.rank() });
            }
        }
        for w in &set {
            for i in 0..g.rnk() {
                let img = g.reflect_weight(i, w);
                if !set.contains(&img) {
                    return Err(Error::NotWeylClosed(w.coeffs().to_vec()));
                }
            }
        }
        Ok(RepresentationSupport { highest: None, weights: set.into_iter().collect() })
    }

    pub fn highest(&self) -> Option<&HighestWeight> {
        self.highest.as_ref()
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn contains(&self, w: &Weight) -> bool {
        self.weights.binary_search(w).is_ok()
    }
}

/// Dominant weights `mu` with `hw - mu` in the positive root cone, found by walking
/// root strings from already-found dominant weights.
pub fn dominant_weights(g: &SimpleGroup, hw: &HighestWeight) -> BTreeSet<Weight> {
    let mut found = BTreeSet::from([hw.weight().clone()]);
    let mut queue = VecDeque::from([hw.weight().clone()]);
    while let Some(mu) = queue.pop_front() {
        for pr in g.positive_roots() {
            let p = SimpleGroup::pairing_with_coroot(&mu, &pr.coroot);
            for k in 1..=p {
                let nu = g.dominant_representative(&mu.sub_scaled(&pr.root, k));
                if found.insert(nu.clone()) {
                    queue.push_back(nu);
                }
            }
        }
    }
    found
}

pub fn weight_support(g: &SimpleGroup, hw: &HighestWeight) -> Result<RepresentationSupport> {
    weight_support_with_limits(g, hw, &Limits::default())
}

pub fn weight_support_with_limits(
    g: &SimpleGroup,
    hw: &HighestWeight,
    limits: &Limits,
) -> Result<RepresentationSupport> {
    if hw.weight().rank() != g.rnk() {
        return Err(Error::RankMismatch { expected: g.rnk(), found: hw.weight().rank() });
    }
    let cap = limits.max_weights as u64;
    let mut weights = BTreeSet::new();
    for mu in dominant_weights(g, hw) {
        let orbit = g.weyl_orbit_capped(&mu, cap.saturating_sub(weights.len() as u64).max(1))
            .map_err(|_| Error::ResourceGuard { what: "number of weights", limit: cap })?;
        weights.extend(orbit);
        if weights.len() as u64 > cap {
            return Err(Error::ResourceGuard { what: "number of weights", limit: cap });
        }
    }
    Ok(RepresentationSupport { highest: Some(hw.clone()), weights: weights.into_iter().collect() })
}

/// Distinct weights of the `k`-th exterior power of a module whose basis has the given weights.
///
/// Each entry of `basis` is one basis vector, so weights must be repeated by multiplicity.
/// This is the weight set of the Plucker embedding of `Gr(k, V)`.
pub fn exterior_power_weights(basis: &[Weight], k: usize) -> BTreeSet<Weight> {
    let Some(first) = basis.first() else {
        return BTreeSet::new();
    };
    if k > basis.len() {
        return BTreeSet::new();
    }
    // sums[j] holds the weights of j-element subsets of the basis seen so far.
    let mut sums: Vec<BTreeSet<Weight>> = vec![BTreeSet::new(); k + 1];
    sums[0].insert(Weight::zero(first.rank()));
    for w in basis {
        for j in (1..=k).rev() {
            let grown: Vec<Weight> = sums[j - 1].iter().map(|s| s.add(w)).collect();
            sums[j].extend(grown);
        }
    }
    std::mem::take(&mut sums[k])
}

/// Parses highest-weight notation.
///
/// Accepted forms: `r` comma-separated fundamental-weight coefficients; for type A,
/// `r+1` comma-separated weakly decreasing `L`-coordinates; or a sum of terms
/// `d*w<i>` (also `w<i>`), e.g. `3*w1` or `w1+2*w3`.
pub fn parse_highest_weight(g: &SimpleGroup, text: &str) -> Result<HighestWeight> {
    let malformed = |reason: &str| Error::ParseWeight { text: text.to_string(), reason: reason.to_string() };
    let trimmed = text.trim().trim_start_matches('(').trim_end_matches(')');
    if trimmed.is_empty() {
        return Err(malformed("empty weight"));
    }
    let r = g.rnk();
    if trimmed.contains('w') {
        let mut coeffs = vec![0i64; r];
        for term in trimmed.split('+') {
            let term = term.trim();
            let (d, idx) = match term.split_once('*') {
                Some((d, rest)) => (d.trim().parse::<i64>().map_err(|_| malformed("bad coefficient"))?, rest.trim()),
                None => (1, term),
            };
            let i: usize = idx
                .strip_prefix('w')
                .ok_or_else(|| malformed("expected a term of the form d*w<i>"))?
                .parse()
                .map_err(|_| malformed("bad fundamental weight index"))?;
            if i == 0 || i > r {
                return Err(malformed(&format!("fundamental weight index must be in 1..={r}")));
            }
            coeffs[i - 1] += d;
        }
        return HighestWeight::new(Weight::new(coeffs));
    }
    let values: Vec<i64> = trimmed
        .split(',')
        .map(|s| s.trim().parse::<i64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| malformed("expected comma-separated integers"))?;
    if values.len() == r {
        HighestWeight::new(Weight::new(values))
    } else if values.len() == r + 1 {
        if !g.is_type_a() {
            return Err(Error::LFormOutsideTypeA(g.name()));
        }
        if values.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::NonDominant(values));
        }
        HighestWeight::new(g.weight_from_l_form(&values)?)
    } else {
        Err(malformed(&format!("expected {r} coefficients{}", if g.is_type_a() { format!(" or {} L-coordinates", r + 1) } else { String::new() })))
    }
}
