//! Family counts for `B2` acting on `Gamma_{d w1}`, `d = 3..8`.
//!
//! Run with `cargo run --release --example binary_forms_family`.

use gitloci::{parse_highest_weight, GitProblem, SimpleGroup};

fn main() -> gitloci::Result<()> {
    println!("{:>2} {:>6} {:>4} {:>4} {:>4}", "d", "|Xi|", "ns", "us", "ps");
    for d in 3..=8 {
        let g = SimpleGroup::parse("B2")?;
        let hw = parse_highest_weight(&g, &format!("{d}*w1"))?;
        let p = GitProblem::new(g, hw, false)?;
        println!(
            "{:>2} {:>6} {:>4} {:>4} {:>4}",
            d,
            p.support().len(),
            p.solve_non_stable()?.len(),
            p.solve_unstable()?.len(),
            p.solve_strictly_polystable()?.len()
        );
    }
    Ok(())
}
