//! `Sp(6)` acting on `Gr(9, V)` with `V` the 14-dimensional module of highest weight `w3`.
//!
//! The Grassmannian sits in `P(wedge^9 V)` by the Plucker embedding, so its states
//! are computed over the weights of the exterior power.
//!
//! Run with `cargo run --release --example grassmannian`.

use gitloci::{exterior_power_weights, parse_highest_weight, weight_support, GitProblem, Limits, RepresentationSupport, SimpleGroup};

fn main() -> gitloci::Result<()> {
    let g = SimpleGroup::parse("C3")?;
    let v = weight_support(&g, &parse_highest_weight(&g, "w3")?)?;
    let wedge = exterior_power_weights(v.weights(), 9);
    let support = RepresentationSupport::from_weights(&g, wedge)?;
    let p = GitProblem::from_support(g, support, false, Limits::from_env());
    println!("distinct Plucker weights: {}", p.support().len());
    println!("maximal non-stable states: {}", p.solve_non_stable()?.len());
    println!("maximal unstable states: {}", p.solve_unstable()?.len());
    Ok(())
}
