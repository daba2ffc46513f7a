//! Weight sets of irreducible representations.
//!
//! Run with `cargo run --example weight_support`.

use gitloci::repsupport::dominant_weights;
use gitloci::{parse_highest_weight, weight_support, SimpleGroup};

fn main() -> gitloci::Result<()> {
    for (group, weight) in [("A2", "3,0,0"), ("B2", "4*w1"), ("C3", "w3"), ("G2", "w1"), ("E6", "w1"), ("F4", "w4")] {
        let g = SimpleGroup::parse(group)?;
        let hw = parse_highest_weight(&g, weight)?;
        let dominant: Vec<String> = dominant_weights(&g, &hw).iter().map(ToString::to_string).collect();
        let support = weight_support(&g, &hw)?;
        println!("{group} {:<8} {:>3} weights, dominant: {}", hw.omega_notation(), support.len(), dominant.join(" "));
    }
    Ok(())
}
