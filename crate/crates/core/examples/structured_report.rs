//! Structured output and solving over an explicit weight list.
//!
//! Run with `cargo run --example structured_report`.

use std::io::Write;

use gitloci::cli::{run, RunConfig};
use gitloci::report::{OutputFormat, ReportDocument};
use gitloci::solver::Loci;

fn main() -> gitloci::Result<()> {
    let mut config = RunConfig::new("B2", "3*w1")?;
    config.format = OutputFormat::JsonLike;
    config.loci = Loci::parse("unstable")?;
    print!("{}", run(&config)?);

    // The adjoint representation of A1 plus a trivial summand, given weight by weight.
    let mut file = tempfile::NamedTempFile::new().map_err(|source| gitloci::Error::Io { path: "tmp".into(), source })?;
    writeln!(file, "# weights of sl2 + C\n2\n0\n-2").unwrap();
    let mut config = RunConfig::new("A1", "0")?;
    config.weights_file = Some(file.path().to_path_buf());
    let doc = ReportDocument::from_json(&{
        config.format = OutputFormat::JsonLike;
        run(&config)?
    })?;
    for locus in &doc.loci {
        println!("{:?}: {} states", locus.kind, locus.states.len());
    }
    Ok(())
}
