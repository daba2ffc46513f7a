//! Stability of plane cubics: `SL(3)` acting on cubic forms in three variables.
//!
//! Run with `cargo run --example plane_cubics`.

use gitloci::report::ReportDocument;
use gitloci::solver::Loci;
use gitloci::{parse_highest_weight, GitProblem, SimpleGroup};

fn main() -> gitloci::Result<()> {
    let g = SimpleGroup::parse("A2")?;
    let hw = parse_highest_weight(&g, "3,0,0")?;
    let problem = GitProblem::new(g, hw, false)?;
    let solution = problem.solve(Loci::ALL)?;
    print!("{}", ReportDocument::from_solution(&problem, &solution).to_text());
    Ok(())
}
