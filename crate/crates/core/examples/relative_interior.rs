//! Exact LP feasibility and relative-interior membership of the origin.
//!
//! Run with `cargo run --example relative_interior`.

use gitloci::exactgeom::linalg::rat_vec;
use gitloci::exactgeom::{lp_feasible, zero_in_relative_interior};

fn main() {
    let segment = [rat_vec(&[1, 0]), rat_vec(&[-1, 0])];
    let corner = [rat_vec(&[1, 0]), rat_vec(&[0, 1])];
    let triangle = [rat_vec(&[1, 0]), rat_vec(&[0, 1]), rat_vec(&[-1, -1])];
    let edge_through_zero = [rat_vec(&[1, 0]), rat_vec(&[-1, 0]), rat_vec(&[0, 1])];
    for (name, pts) in [
        ("segment", &segment[..]),
        ("corner", &corner[..]),
        ("triangle", &triangle[..]),
        ("zero on an edge", &edge_through_zero[..]),
    ] {
        println!("{name:>16}: 0 in relint = {}", zero_in_relative_interior(pts));
    }

    // x + y - z = 0, y >= 0, x - y > 0, z > 0
    let eq = [rat_vec(&[1, 1, -1])];
    let weak = [rat_vec(&[0, 1, 0])];
    let strict = [rat_vec(&[1, -1, 0]), rat_vec(&[0, 0, 1])];
    match lp_feasible(&eq, &weak, &strict, 3) {
        Some(x) => println!("feasible point {}", x.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")),
        None => println!("infeasible"),
    }
    // x > 0 and -x > 0
    println!("x > 0 and -x > 0 feasible: {}", lp_feasible(&[], &[], &[rat_vec(&[1]), rat_vec(&[-1])], 1).is_some());
}
