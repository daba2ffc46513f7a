use super::*;
use crate::repsupport::parse_highest_weight;
use crate::exactgeom::linalg::rat;

fn problem(group: &str, weight: &str) -> GitProblem {
    let g = SimpleGroup::parse(group).unwrap();
    let hw = parse_highest_weight(&g, weight).unwrap();
    GitProblem::new(g, hw, false).unwrap()
}

fn l_set(p: &GitProblem, s: &State) -> Vec<Vec<i64>> {
    let mut v: Vec<Vec<i64>> = s.weights().iter().map(|w| p.group().l_form(w, 3).unwrap()).collect();
    v.sort();
    v
}

fn sorted(mut v: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    v.sort();
    v
}

fn h(p: &GitProblem, s: &State) -> Vec<i64> {
    p.group().h_form(s.witness().unwrap()).unwrap()
}

#[test]
fn plane_cubics_problem_size() {
    assert_eq!(problem("A2", "3,0,0").support().len(), 10);
    assert_eq!(problem("B2", "3*w1").support().len(), 25);
}

#[test]
fn plane_cubics_state_of() {
    let p = problem("A2", "3,0,0");
    let lam = p.group().coweight_from_h_form(&[1, 1, -2]).unwrap();
    let s = p.state_of(&lam, Relation::NonNegative);
    assert_eq!(
        l_set(&p, &s),
        sorted(vec![
            vec![1, 2, 0], vec![2, 1, 0], vec![1, 1, 1], vec![0, 2, 1],
            vec![0, 3, 0], vec![2, 0, 1], vec![3, 0, 0],
        ])
    );
    let z = p.state_of(&lam, Relation::Zero);
    assert_eq!(l_set(&p, &z), sorted(vec![vec![1, 1, 1], vec![2, 0, 1], vec![0, 2, 1]]));
    // A chamber-interior subgroup pairing non-negatively with everything returns the whole support.
    let t = problem("A1", "0");
    let s = t.state_of(&OneParameterSubgroup::new(vec![1]).unwrap(), Relation::NonNegative);
    assert_eq!(s.len(), 1);
}

#[test]
fn plane_cubics_non_stable() {
    let p = problem("A2", "3,0,0");
    let ns = p.solve_non_stable().unwrap();
    assert_eq!(ns.len(), 2);
    assert_eq!(ns[0].len(), 7);
    assert_eq!(h(&p, &ns[0]), vec![1, 1, -2]);
    assert_eq!(ns[1].len(), 6);
    assert_eq!(h(&p, &ns[1]), vec![2, -1, -1]);
    assert_eq!(
        l_set(&p, &ns[1]),
        sorted(vec![
            vec![1, 2, 0], vec![1, 0, 2], vec![2, 1, 0], vec![1, 1, 1], vec![2, 0, 1], vec![3, 0, 0],
        ])
    );
}

#[test]
fn plane_cubics_unstable() {
    let p = problem("A2", "3,0,0");
    let us = p.solve_unstable().unwrap();
    assert_eq!(us.len(), 1);
    assert_eq!(
        l_set(&p, &us[0]),
        sorted(vec![vec![1, 2, 0], vec![2, 1, 0], vec![0, 3, 0], vec![2, 0, 1], vec![3, 0, 0]])
    );
    assert_eq!(h(&p, &us[0]), vec![4, 1, -5]);
}

#[test]
fn plane_cubics_polystable() {
    let p = problem("A2", "3,0,0");
    let ps = p.solve_strictly_polystable().unwrap();
    assert_eq!(ps.len(), 2);
    assert_eq!(l_set(&p, &ps[0]), vec![vec![1, 1, 1]]);
    assert_eq!(l_set(&p, &ps[1]), sorted(vec![vec![0, 2, 1], vec![2, 0, 1], vec![1, 1, 1]]));
}

#[test]
fn b2_cubic_counts() {
    let p = problem("B2", "3*w1");
    assert_eq!(p.solve_non_stable().unwrap().len(), 3);
    assert_eq!(p.solve_unstable().unwrap().len(), 2);
    assert_eq!(p.solve_strictly_polystable().unwrap().len(), 4);
}

#[test]
fn trivial_representation_forced_answers() {
    let p = problem("A1", "0");
    let ns = p.solve_non_stable().unwrap();
    assert_eq!(ns.len(), 1);
    assert_eq!(ns[0].weights(), &[Weight::zero(1)]);
    assert!(p.solve_unstable().unwrap().is_empty());
    let ps = p.solve_strictly_polystable().unwrap();
    assert_eq!(ps.len(), 1);
    assert_eq!(ps[0].weights(), &[Weight::zero(1)]);
}

#[test]
fn hilbert_mumford_weight() {
    let p = problem("A2", "3,0,0");
    let g = p.group();
    let lam = g.coweight_from_h_form(&[1, 1, -2]).unwrap();
    let full = p.state_of(&lam, Relation::NonNegative);
    assert!(p.hm_mu(full.weights(), &lam).unwrap() >= rat(0));
    assert_eq!(p.hm_mu(&[Weight::zero(2)], &lam).unwrap(), rat(0));
    let chi = g.weight_from_l_form(&[0, 3, 0]).unwrap();
    let lam2 = g.coweight_from_h_form(&[2, -1, -1]).unwrap();
    // (2,-1,-1) is three times the primitive fundamental coweight.
    assert_eq!(p.hm_mu(&[chi], &lam2).unwrap() * rat(3), rat(-3));
    assert!(matches!(p.hm_mu(&[], &lam), Err(Error::EmptySupport)));
    assert!(matches!(p.hm_mu(&[Weight::new(vec![5, 5])], &lam), Err(Error::NotInSupport(_))));
}

#[test]
fn torus_classification() {
    let p = problem("A2", "3,0,0");
    let all = p.support().weights().to_vec();
    assert_eq!(p.classify_torus(&all).unwrap().class, TorusClass::Stable);
    let us = p.solve_unstable().unwrap();
    let c = p.classify_torus(us[0].weights()).unwrap();
    assert_eq!(c.class, TorusClass::Unstable);
    let lam = c.certificate.unwrap();
    assert!(us[0].weights().iter().all(|w| p.group().scaled_pairing(w, lam.coeffs()) > 0));
    let c = p.classify_torus(&[Weight::zero(2)]).unwrap();
    assert_eq!(c.class, TorusClass::NonStableSemistable);
    // A Weyl-moved unstable state is still unstable.
    let moved: Vec<Weight> = us[0].weights().iter().map(|w| p.group().reflect_weight(1, w)).collect();
    assert_eq!(p.classify_torus(&moved).unwrap().class, TorusClass::Unstable);
}

#[test]
fn weyl_optimisation_never_increases_counts() {
    for (g, w) in [("B2", "3*w1"), ("A2", "3,0,0"), ("G2", "w1"), ("C3", "w3")] {
        let plain = problem(g, w);
        let gr = SimpleGroup::parse(g).unwrap();
        let hw = parse_highest_weight(&gr, w).unwrap();
        let opt = GitProblem::new(gr, hw, true).unwrap();
        assert!(opt.solve_non_stable().unwrap().len() <= plain.solve_non_stable().unwrap().len());
        assert!(opt.solve_unstable().unwrap().len() <= plain.solve_unstable().unwrap().len());
    }
}

#[test]
fn loci_parsing() {
    assert_eq!(Loci::parse("nonstable,unstable,polystable").unwrap(), Loci::ALL);
    assert_eq!(Loci::parse("all").unwrap(), Loci::ALL);
    let l = Loci::parse("unstable").unwrap();
    assert!(l.unstable && !l.nonstable && !l.polystable);
    assert!(Loci::parse("").is_err());
    assert!(Loci::parse("stable").is_err());
}
