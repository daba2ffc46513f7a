//! Coordinate systems for weights and one-parameter subgroups, and their pairing.
//!
//! Run with `cargo run --example coordinates`.

use gitloci::exactgeom::linalg::rat_vec;
use gitloci::exactgeom::Rational;

fn show(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}
use gitloci::{CoordSystem, SimpleGroup, Weight};

fn main() -> gitloci::Result<()> {
    let g = SimpleGroup::parse("A2")?;

    let chi = g.weight_from_l_form(&[0, 3, 0])?;
    println!("x1^3 has weight {chi} in fundamental coordinates");
    let in_roots = g.convert_coordinates(&rat_vec(chi.coeffs()), CoordSystem::FundamentalWeight, CoordSystem::SimpleRoot)?;
    println!("  and {} in simple-root coordinates", show(&in_roots));

    let lam = g.coweight_from_h_form(&[1, 1, -2])?;
    println!("Diag(t, t, t^-2) is the coweight {:?}", lam.coeffs());
    let coroot = g.convert_coordinates(&rat_vec(lam.coeffs()), CoordSystem::FundamentalCoweight, CoordSystem::Coroot)?;
    println!("  in coroot coordinates {}", show(&coroot));
    println!("  <x1^3, lambda> = {}", g.pairing(&chi, &lam)?);

    let b2 = SimpleGroup::parse("B2")?;
    let w = Weight::new(vec![1, 0]);
    let lam = gitloci::OneParameterSubgroup::new(vec![0, 1])?;
    println!("B2: <{w}, {:?}> = {}", lam.coeffs(), b2.pairing(&w, &lam)?);
    Ok(())
}
