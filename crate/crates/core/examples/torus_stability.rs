//! Hilbert-Mumford weights and torus stability of a point given by its weight support.
//!
//! Run with `cargo run --example torus_stability`.

use gitloci::{parse_highest_weight, GitProblem, SimpleGroup};

fn main() -> gitloci::Result<()> {
    let g = SimpleGroup::parse("A2")?;
    let problem = GitProblem::new(g.clone(), parse_highest_weight(&g, "3,0,0")?, false)?;
    let l = |v: [i64; 3]| g.weight_from_l_form(&v);

    // The Fermat cubic x0^3 + x1^3 + x2^3.
    let fermat = [l([3, 0, 0])?, l([0, 3, 0])?, l([0, 0, 3])?];
    // x0^3 + x0^2 x1: a triple line through a point.
    let cuspidal = [l([3, 0, 0])?, l([2, 1, 0])?];
    // x0 x1 x2.
    let triangle = [l([1, 1, 1])?];

    let lam = g.coweight_from_h_form(&[2, -1, -1])?;
    for (name, pts) in [("fermat", &fermat[..]), ("degenerate", &cuspidal[..]), ("triangle", &triangle[..])] {
        let c = problem.classify_torus(pts)?;
        println!(
            "{name:>10}: {:?}, mu(., (2,-1,-1)) = {}, H-form certificate {:?}",
            c.class,
            problem.hm_mu(pts, &lam)?,
            c.certificate.and_then(|w| g.h_form(&w))
        );
    }
    Ok(())
}
