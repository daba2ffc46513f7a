//! Faces of a central hyperplane arrangement inside a polyhedral chamber.
//!
//! The chamber is `{x : c . x >= 0 for c in chamber}`. Rays are the
//! one-dimensional faces of the arrangement cut by the chamber walls; cells are
//! the full-dimensional regions of the chamber interior avoiding every
//! arrangement hyperplane.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use super::linalg::{dot, is_zero_vector, kernel, primitive_integer, rank, sign};
use super::lp::lp_feasible;
use super::{Rational, RationalVector};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FaceKind {
    Ray,
    Cell,
}

/// A point in the relative interior of a face, scaled to a primitive integer vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrangementFaceWitness {
    pub point: Vec<BigInt>,
    pub kind: FaceKind,
    /// Indices into the `normals` argument of the hyperplanes containing the face.
    pub zero_set: Vec<usize>,
}

impl ArrangementFaceWitness {
    pub fn point_rational(&self) -> RationalVector {
        self.point.iter().cloned().map(Rational::from_integer).collect()
    }
}

/// Hyperplane key: primitive integer normal with first nonzero entry positive.
fn hyperplane_key(n: &[Rational]) -> Vec<BigInt> {
    let mut p = primitive_integer(n);
    if p.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        for x in p.iter_mut() {
            *x = -x.clone();
        }
    }
    p
}

fn to_rational(v: &[BigInt]) -> RationalVector {
    v.iter().cloned().map(Rational::from_integer).collect()
}

fn degenerate(normals: &[RationalVector], chamber: &[RationalVector], dim: usize) -> bool {
    dim == 0
        || normals.iter().any(|n| is_zero_vector(n))
        || lp_feasible(&[], &[], chamber, dim).is_none()
}

fn in_chamber(chamber: &[RationalVector], x: &[Rational]) -> bool {
    chamber.iter().all(|c| !dot(c, x).is_negative())
}

/// Distinct hyperplanes among `forms`, in first-occurrence order.
fn distinct_hyperplanes<'a>(forms: impl IntoIterator<Item = &'a RationalVector>) -> Vec<RationalVector> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for f in forms {
        if is_zero_vector(f) {
            continue;
        }
        let key = hyperplane_key(f);
        if seen.insert(key.clone()) {
            out.push(to_rational(&key));
        }
    }
    out
}

fn for_each_subset(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    rec(0, n, k, &mut Vec::with_capacity(k), f);
}

/// All rays of the arrangement `{n^perp}` together with the chamber walls that lie in
/// the chamber, as primitive integer vectors sorted lexicographically.
///
/// Degenerate input (a zero normal, or a chamber without interior) yields no rays.
pub fn arrangement_rays(
    normals: &[RationalVector],
    chamber: &[RationalVector],
    dim: usize,
) -> Vec<ArrangementFaceWitness> {
    if degenerate(normals, chamber, dim) {
        return Vec::new();
    }
    let constraints = distinct_hyperplanes(normals.iter().chain(chamber));
    let mut rays: BTreeSet<Vec<BigInt>> = BTreeSet::new();
    for_each_subset(constraints.len(), dim - 1, &mut |subset| {
        let rows: Vec<RationalVector> = subset.iter().map(|&i| constraints[i].clone()).collect();
        if rank(&rows, dim) != dim - 1 {
            return;
        }
        let line = kernel(&rows, dim);
        debug_assert_eq!(line.len(), 1);
        let v = &line[0];
        let neg: RationalVector = v.iter().map(|x| -x.clone()).collect();
        for dir in [v, &neg] {
            if in_chamber(chamber, dir) {
                rays.insert(primitive_integer(dir));
            }
        }
    });
    rays.into_iter()
        .map(|point| {
            let p = to_rational(&point);
            let zero_set = normals
                .iter()
                .enumerate()
                .filter(|(_, n)| dot(n, &p).is_zero())
                .map(|(i, _)| i)
                .collect();
            ArrangementFaceWitness { point, kind: FaceKind::Ray, zero_set }
        })
        .collect()
}

/// One interior witness per full-dimensional cell of the arrangement restricted to
/// the chamber interior, sorted by point.
///
/// When the chamber is pointed each cell is tracked by the extreme rays of its
/// closure and the witness is their sum. Otherwise sign vectors are extended one
/// hyperplane at a time and pruned with an exact LP.
pub fn arrangement_cells(
    normals: &[RationalVector],
    chamber: &[RationalVector],
    dim: usize,
    max_cells: usize,
) -> Result<Vec<ArrangementFaceWitness>> {
    if degenerate(normals, chamber, dim) {
        return Ok(Vec::new());
    }
    let hyperplanes = distinct_hyperplanes(normals);
    let mut out = if rank(chamber, dim) == dim {
        cells_by_rays(&hyperplanes, chamber, dim, max_cells)?
    } else {
        cells_by_lp(&hyperplanes, chamber, dim, max_cells)?
    };
    out.sort_by(|a, b| a.point.cmp(&b.point));
    Ok(out)
}

fn guard(count: usize, max_cells: usize) -> Result<()> {
    if count > max_cells {
        return Err(Error::ResourceGuard { what: "arrangement cell count", limit: max_cells as u64 });
    }
    Ok(())
}

fn int_dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn cell_witness(point: Vec<BigInt>) -> ArrangementFaceWitness {
    ArrangementFaceWitness { point, kind: FaceKind::Cell, zero_set: Vec::new() }
}

/// A closed pointed cone: its extreme rays and inequalities `f . x >= 0` containing every facet.
#[derive(Clone)]
struct RayCell {
    rays: Vec<Vec<BigInt>>,
    facets: Vec<Vec<BigInt>>,
}

impl RayCell {
    /// Extreme rays `a`, `b` are adjacent iff the inequalities tight at both have rank `dim - 2`.
    fn adjacent(&self, a: &[BigInt], b: &[BigInt], dim: usize) -> bool {
        let tight: Vec<RationalVector> = self
            .facets
            .iter()
            .filter(|f| int_dot(f, a).is_zero() && int_dot(f, b).is_zero())
            .map(|f| to_rational(f))
            .collect();
        tight.len() + 2 >= dim && rank(&tight, dim) + 2 == dim
    }

    /// The part of the cell on the side `s` of `h`, which must be full-dimensional.
    fn side(&self, h: &[BigInt], values: &[BigInt], s: i8, dim: usize) -> RayCell {
        let on = |v: &BigInt| if s > 0 { v.is_positive() } else { v.is_negative() };
        let mut rays: Vec<Vec<BigInt>> = self
            .rays
            .iter()
            .zip(values)
            .filter(|(_, v)| v.is_zero() || on(v))
            .map(|(r, _)| r.clone())
            .collect();
        for (a, va) in self.rays.iter().zip(values) {
            if !on(va) {
                continue;
            }
            for (b, vb) in self.rays.iter().zip(values) {
                if vb.is_zero() || on(vb) || !self.adjacent(a, b, dim) {
                    continue;
                }
                let cut: RationalVector = a
                    .iter()
                    .zip(b)
                    .map(|(x, y)| Rational::from_integer(va.abs() * y + vb.abs() * x))
                    .collect();
                rays.push(primitive_integer(&cut));
            }
        }
        let signed_h: Vec<BigInt> = h.iter().map(|x| if s > 0 { x.clone() } else { -x }).collect();
        let mut facets = self.facets.clone();
        facets.push(signed_h);
        facets.retain(|f| rays.iter().filter(|r| int_dot(f, r).is_zero()).count() + 1 >= dim);
        RayCell { rays, facets }
    }
}

fn cells_by_rays(
    hyperplanes: &[RationalVector],
    chamber: &[RationalVector],
    dim: usize,
    max_cells: usize,
) -> Result<Vec<ArrangementFaceWitness>> {
    let start = RayCell {
        rays: arrangement_rays(&[], chamber, dim).into_iter().map(|r| r.point).collect(),
        facets: chamber.iter().map(|c| primitive_integer(c)).collect(),
    };
    let mut cells = vec![start];
    for h in hyperplanes {
        let h = primitive_integer(h);
        let next: Vec<Vec<RayCell>> = cells
            .par_iter()
            .map(|cell| {
                let values: Vec<BigInt> = cell.rays.iter().map(|r| int_dot(&h, r)).collect();
                let pos = values.iter().any(|v| v.is_positive());
                let neg = values.iter().any(|v| v.is_negative());
                if pos && neg {
                    vec![cell.side(&h, &values, 1, dim), cell.side(&h, &values, -1, dim)]
                } else {
                    let s = if pos { 1 } else { -1 };
                    let mut kept = cell.clone();
                    kept.facets.push(h.iter().map(|x| if s > 0 { x.clone() } else { -x }).collect());
                    kept.facets.retain(|f| kept.rays.iter().filter(|r| int_dot(f, r).is_zero()).count() + 1 >= dim);
                    vec![kept]
                }
            })
            .collect();
        cells = next.into_iter().flatten().collect();
        guard(cells.len(), max_cells)?;
    }
    Ok(cells
        .par_iter()
        .map(|cell| {
            let mut sum = vec![BigInt::zero(); dim];
            for r in &cell.rays {
                for (acc, x) in sum.iter_mut().zip(r) {
                    *acc += x;
                }
            }
            cell_witness(primitive_integer(&to_rational(&sum)))
        })
        .collect())
}

#[derive(Clone)]
struct PartialCell {
    signs: Vec<i8>,
    witness: RationalVector,
}

fn cells_by_lp(
    hyperplanes: &[RationalVector],
    chamber: &[RationalVector],
    dim: usize,
    max_cells: usize,
) -> Result<Vec<ArrangementFaceWitness>> {
    let start = lp_feasible(&[], &[], chamber, dim).expect("chamber has interior");
    let mut cells = vec![PartialCell { signs: Vec::new(), witness: start }];
    for h in hyperplanes {
        let constraints_for = |cell: &PartialCell, s: i8| -> Vec<RationalVector> {
            let mut strict: Vec<RationalVector> = chamber.to_vec();
            for (k, &sk) in cell.signs.iter().enumerate() {
                strict.push(signed(&hyperplanes[k], sk));
            }
            strict.push(signed(h, s));
            strict
        };
        let next: Vec<Vec<PartialCell>> = cells
            .par_iter()
            .map(|cell| {
                let current = sign(&dot(h, &cell.witness));
                let mut out = Vec::with_capacity(2);
                for s in [1i8, -1] {
                    let witness = if s == current {
                        Some(cell.witness.clone())
                    } else {
                        lp_feasible(&[], &[], &constraints_for(cell, s), dim)
                    };
                    if let Some(witness) = witness {
                        let mut signs = cell.signs.clone();
                        signs.push(s);
                        out.push(PartialCell { signs, witness });
                    }
                }
                out
            })
            .collect();
        cells = next.into_iter().flatten().collect();
        guard(cells.len(), max_cells)?;
    }
    Ok(cells.into_iter().map(|c| cell_witness(primitive_integer(&c.witness))).collect())
}

fn signed(v: &RationalVector, s: i8) -> RationalVector {
    if s >= 0 {
        v.clone()
    } else {
        v.iter().map(|x| -x.clone()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::linalg::rat_vec;

    fn quadrant() -> Vec<RationalVector> {
        vec![rat_vec(&[1, 0]), rat_vec(&[0, 1])]
    }

    fn points(faces: &[ArrangementFaceWitness]) -> Vec<Vec<i64>> {
        faces
            .iter()
            .map(|f| f.point.iter().map(|x| i64::try_from(x).unwrap()).collect())
            .collect()
    }

    #[test]
    fn hyperplane_missing_open_quadrant() {
        let rays = arrangement_rays(&[rat_vec(&[1, 1])], &quadrant(), 2);
        assert_eq!(points(&rays), vec![vec![0, 1], vec![1, 0]]);
        assert!(rays.iter().all(|r| r.zero_set.is_empty()));
    }

    #[test]
    fn no_normals_gives_chamber_edges_and_one_cell() {
        let rays = arrangement_rays(&[], &quadrant(), 2);
        assert_eq!(points(&rays), vec![vec![0, 1], vec![1, 0]]);
        let cells = arrangement_cells(&[], &quadrant(), 2, 100).unwrap();
        assert_eq!(points(&cells), vec![vec![1, 1]]);
    }

    #[test]
    fn diagonal_splits_quadrant() {
        let normals = [rat_vec(&[1, -1])];
        let rays = arrangement_rays(&normals, &quadrant(), 2);
        assert_eq!(points(&rays), vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(rays[2].zero_set, vec![0]);
        let cells = arrangement_cells(&normals, &quadrant(), 2, 100).unwrap();
        assert_eq!(points(&cells), vec![vec![1, 2], vec![2, 1]]);
    }

    #[test]
    fn degenerate_inputs_are_empty() {
        assert!(arrangement_rays(&[rat_vec(&[0, 0])], &quadrant(), 2).is_empty());
        let flat = vec![rat_vec(&[1, 0]), rat_vec(&[-1, 0])];
        assert!(arrangement_rays(&[], &flat, 2).is_empty());
        assert!(arrangement_cells(&[], &flat, 2, 10).unwrap().is_empty());
    }

    #[test]
    fn cell_guard_trips() {
        let normals = [rat_vec(&[1, -1]), rat_vec(&[1, -2]), rat_vec(&[2, -1])];
        let err = arrangement_cells(&normals, &quadrant(), 2, 2).unwrap_err();
        assert!(matches!(err, Error::ResourceGuard { .. }));
        assert_eq!(arrangement_cells(&normals, &quadrant(), 2, 10).unwrap().len(), 4);
    }

    fn sign_vectors(faces: &[ArrangementFaceWitness], hyperplanes: &[RationalVector]) -> Vec<Vec<i8>> {
        let mut v: Vec<Vec<i8>> = faces
            .iter()
            .map(|f| hyperplanes.iter().map(|h| sign(&dot(h, &f.point_rational()))).collect())
            .collect();
        v.sort();
        v
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(48))]
        #[test]
        fn ray_tracking_matches_lp(raw in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 3), 1..7)) {
            let chamber: Vec<RationalVector> = (0..3).map(|i| {
                let mut e = vec![0; 3];
                e[i] = 1;
                rat_vec(&e)
            }).collect();
            let normals: Vec<RationalVector> = raw.iter().map(|n| rat_vec(n)).filter(|n| !is_zero_vector(n)).collect();
            let hyperplanes = distinct_hyperplanes(&normals);
            let by_rays = cells_by_rays(&hyperplanes, &chamber, 3, 10_000).unwrap();
            let by_lp = cells_by_lp(&hyperplanes, &chamber, 3, 10_000).unwrap();
            for c in &by_rays {
                let p = c.point_rational();
                proptest::prop_assert!(chamber.iter().all(|w| dot(w, &p).is_positive()));
                proptest::prop_assert!(hyperplanes.iter().all(|h| !dot(h, &p).is_zero()));
            }
            proptest::prop_assert_eq!(sign_vectors(&by_rays, &hyperplanes), sign_vectors(&by_lp, &hyperplanes));
        }
    }
}
