//! Rays and open cells of the weight hyperplane arrangement in the fundamental chamber.
//!
//! Run with `cargo run --example arrangement`.

use gitloci::exactgeom::linalg::rat_vec;
use gitloci::exactgeom::{arrangement_cells, arrangement_rays};
use gitloci::{parse_highest_weight, weight_support, SimpleGroup};

fn main() -> gitloci::Result<()> {
    let g = SimpleGroup::parse("A2")?;
    let support = weight_support(&g, &parse_highest_weight(&g, "3,0,0")?)?;
    // The zero weight pairs to zero with everything and cuts no hyperplane.
    let normals: Vec<_> = support.weights().iter().filter(|w| !w.is_zero()).map(|w| rat_vec(&g.scaled_normal(w))).collect();
    let chamber: Vec<_> = (0..2).map(|i| rat_vec(&[(i == 0) as i64, (i == 1) as i64])).collect();

    for r in arrangement_rays(&normals, &chamber, 2) {
        println!("ray  {:?}  on {} weight hyperplanes", r.point, r.zero_set.len());
    }
    for c in arrangement_cells(&normals, &chamber, 2, 1000)? {
        println!("cell {:?}", c.point);
    }
    Ok(())
}
