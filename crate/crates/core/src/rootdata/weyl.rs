//! Weyl group actions. Nothing here materializes the whole group unless asked
//! to, and every enumeration is bounded by an explicit cap.

use std::collections::{BTreeSet, VecDeque};

use super::group::SimpleGroup;
use super::weight::Weight;
use crate::error::{Error, Result};
use crate::limits::DEFAULT_GUARD;

impl SimpleGroup {
    /// `s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i` in fundamental-weight coordinates.
    pub fn reflect_weight(&self, i: usize, w: &Weight) -> Weight {
        let c = w.coeffs();
        let li = c[i];
        Weight::new(
            c.iter()
                .enumerate()
                .map(|(k, &x)| x - li * self.cartan()[k][i])
                .collect(),
        )
    }

    /// `s_i(x) = x - <alpha_i, x> alpha_i^vee` in fundamental-coweight coordinates.
    pub fn reflect_coweight(&self, i: usize, x: &[i64]) -> Vec<i64> {
        let xi = x[i];
        x.iter()
            .enumerate()
            .map(|(k, &v)| v - xi * self.cartan()[i][k])
            .collect()
    }

    /// Full Weyl orbit of `w` by breadth-first closure.
    pub fn weyl_orbit(&self, w: &Weight) -> BTreeSet<Weight> {
        self.weyl_orbit_capped(w, u64::MAX).expect("uncapped")
    }

    pub fn weyl_orbit_capped(&self, w: &Weight, cap: u64) -> Result<BTreeSet<Weight>> {
        bfs(w.clone(), cap, "Weyl orbit size", |x, i| self.reflect_weight(i, x), self.rnk())
    }

    /// Weyl orbit of a one-parameter subgroup, in fundamental-coweight coordinates.
    pub fn coweight_orbit_capped(&self, x: &[i64], cap: u64) -> Result<BTreeSet<Vec<i64>>> {
        bfs(x.to_vec(), cap, "Weyl orbit size", |v, i| self.reflect_coweight(i, v), self.rnk())
    }

    /// The unique dominant element of the orbit of `w`.
    pub fn dominant_representative(&self, w: &Weight) -> Weight {
        let mut cur = w.clone();
        while let Some(i) = cur.coeffs().iter().position(|&x| x < 0) {
            cur = self.reflect_weight(i, &cur);
        }
        cur
    }

    /// `|W|` as the product of the degrees of the basic invariants.
    pub fn weyl_group_order_formula(&self) -> u128 {
        self.dynkin()
            .invariant_degrees()
            .iter()
            .map(|&d| d as u128)
            .product()
    }

    /// `|W|` by enumerating the (free) orbit of the regular weight `rho`.
    pub fn enumerate_weyl_group_order(&self, cap: u64) -> Result<u64> {
        let rho = Weight::new(vec![1; self.rnk()]);
        Ok(self.weyl_orbit_capped(&rho, cap)?.len() as u64)
    }

    /// `|W|`, enumerated when the group is below the default guard and taken from the
    /// product formula otherwise.
    pub fn weyl_group_order(&self) -> u128 {
        self.weyl_group_order_with_guard(DEFAULT_GUARD as u64)
    }

    pub fn weyl_group_order_with_guard(&self, guard: u64) -> u128 {
        let formula = self.weyl_group_order_formula();
        if formula <= guard as u128 {
            if let Ok(n) = self.enumerate_weyl_group_order(guard) {
                return n as u128;
            }
        }
        formula
    }

    /// Canonical form of a set of weights up to the Weyl action: the least sorted
    /// image over the orbit of the set.
    pub fn canonical_set_form(&self, set: &[Weight], cap: u64) -> Result<Vec<Weight>> {
        let mut start = set.to_vec();
        start.sort();
        start.dedup();
        let orbit = bfs(
            start,
            cap,
            "Weyl orbit of a weight set",
            |s: &Vec<Weight>, i| {
                let mut img: Vec<Weight> = s.iter().map(|w| self.reflect_weight(i, w)).collect();
                img.sort();
                img
            },
            self.rnk(),
        )?;
        Ok(orbit.into_iter().next().expect("orbit contains the start"))
    }
}

fn bfs<T: Ord + Clone>(
    start: T,
    cap: u64,
    what: &'static str,
    step: impl Fn(&T, usize) -> T,
    gens: usize,
) -> Result<BTreeSet<T>> {
    let mut seen = BTreeSet::new();
    seen.insert(start.clone());
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for i in 0..gens {
            let y = step(&x, i);
            if !seen.contains(&y) {
                if seen.len() as u64 >= cap {
                    return Err(Error::ResourceGuard { what, limit: cap });
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(seen)
}
