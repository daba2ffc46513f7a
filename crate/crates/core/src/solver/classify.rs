//! Torus-level classification of individual points from the solved loci.

use serde::Serialize;

use super::{GitProblem, Relation, State};
use crate::error::Result;
use crate::rootdata::{OneParameterSubgroup, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TorusClass {
    Stable,
    NonStableSemistable,
    Unstable,
}

/// Classification with respect to the maximal torus, with the destabilizing
/// one-parameter subgroup when there is one. `G`-stability is not decided here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusClassification {
    pub class: TorusClass,
    pub certificate: Option<OneParameterSubgroup>,
}

impl GitProblem {
    /// Classifies a point by its weight support: `T`-unstable iff the support lies in a
    /// Weyl image of a maximal unstable state, otherwise `T`-non-stable iff it lies in a
    /// Weyl image of a maximal non-stable state.
    pub fn classify_torus(&self, point_support: &[Weight]) -> Result<TorusClassification> {
        self.check_point_support(point_support)?;
        if let Some(lam) = self.conjugate_witness(&self.solve_unstable()?, point_support, Relation::Positive)? {
            return Ok(TorusClassification { class: TorusClass::Unstable, certificate: Some(lam) });
        }
        if let Some(lam) =
            self.conjugate_witness(&self.solve_non_stable()?, point_support, Relation::NonNegative)?
        {
            return Ok(TorusClassification {
                class: TorusClass::NonStableSemistable,
                certificate: Some(lam),
            });
        }
        Ok(TorusClassification { class: TorusClass::Stable, certificate: None })
    }

    /// Searches the Weyl orbits of the state witnesses for one whose state contains the
    /// support. `w . Xi_{lambda rel 0} = Xi_{w lambda rel 0}` because the weight set is
    /// Weyl-invariant, so orbits of witnesses enumerate the Weyl images of states.
    fn conjugate_witness(
        &self,
        states: &[State],
        point_support: &[Weight],
        relation: Relation,
    ) -> Result<Option<OneParameterSubgroup>> {
        let g = self.group();
        for s in states {
            let Some(lam) = s.witness() else { continue };
            for image in g.coweight_orbit_capped(lam.coeffs(), self.limits().max_weyl_enumeration)? {
                if point_support
                    .iter()
                    .all(|w| relation.holds(g.scaled_pairing(w, &image)))
                {
                    return Ok(Some(OneParameterSubgroup::new(image)?));
                }
            }
        }
        Ok(None)
    }
}
