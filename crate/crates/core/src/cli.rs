//! Run configuration shared by the `gitloci` binary and the examples.

use std::fs;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::report::{OutputFormat, ReportDocument};
use crate::repsupport::{parse_highest_weight, weight_support_with_limits, RepresentationSupport};
use crate::rootdata::{DynkinType, SimpleGroup, Weight};
use crate::solver::{GitProblem, Loci};

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub group: DynkinType,
    /// Highest weight; ignored when `weights_file` is set.
    pub weight_text: Option<String>,
    pub weights_file: Option<PathBuf>,
    pub loci: Loci,
    pub weyl_opt: bool,
    pub format: OutputFormat,
    pub output_path: Option<PathBuf>,
    pub limits: Limits,
}

impl RunConfig {
    pub fn new(group: &str, weight_text: &str) -> Result<Self> {
        Ok(RunConfig {
            group: group.parse()?,
            weight_text: Some(weight_text.to_string()),
            weights_file: None,
            loci: Loci::ALL,
            weyl_opt: false,
            format: OutputFormat::Text,
            output_path: None,
            limits: Limits::default(),
        })
    }
}

/// Reads one weight per line in fundamental coefficients. Blank lines and `#` comments are skipped.
pub fn read_weights_file(g: &SimpleGroup, path: &Path) -> Result<RepresentationSupport> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
    let mut weights = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let coeffs: Vec<i64> = line
            .trim_start_matches('(')
            .trim_end_matches(')')
            .split([',', ' ', '\t'])
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse().map_err(|_| Error::ParseWeight {
                    text: line.to_string(),
                    reason: format!("`{s}` is not an integer"),
                })
            })
            .collect::<Result<_>>()?;
        if coeffs.len() != g.rnk() {
            return Err(Error::RankMismatch { expected: g.rnk(), found: coeffs.len() });
        }
        weights.push(Weight::new(coeffs));
    }
    if weights.is_empty() {
        return Err(Error::EmptySupport);
    }
    RepresentationSupport::from_weights(g, weights)
}

pub fn build_problem(config: &RunConfig) -> Result<GitProblem> {
    let g = SimpleGroup::from_type(config.group);
    let support = match (&config.weights_file, &config.weight_text) {
        (Some(path), _) => read_weights_file(&g, path)?,
        (None, Some(text)) => {
            let hw = parse_highest_weight(&g, text)?;
            weight_support_with_limits(&g, &hw, &config.limits)?
        }
        (None, None) => {
            return Err(Error::ParseWeight {
                text: String::new(),
                reason: "a highest weight or a weights file is required".into(),
            })
        }
    };
    Ok(GitProblem::from_support(g, support, config.weyl_opt, config.limits))
}

/// Solves the requested loci and returns the rendered report, also writing it to `output_path` if set.
pub fn run(config: &RunConfig) -> Result<String> {
    let problem = build_problem(config)?;
    let solution = problem.solve(config.loci)?;
    let doc = ReportDocument::from_solution(&problem, &solution);
    let text = doc.render(config.format)?;
    if let Some(path) = &config.output_path {
        fs::write(path, &text).map_err(|source| Error::Io { path: path.clone(), source })?;
    }
    Ok(text)
}

/// Support size of the representation, followed by the sorted weights if `list` is set.
pub fn run_support_only(group: &str, weight_text: &str, list: bool, limits: &Limits) -> Result<String> {
    let g = SimpleGroup::parse(group)?;
    let hw = parse_highest_weight(&g, weight_text)?;
    let support = weight_support_with_limits(&g, &hw, limits)?;
    let mut out = format!("{}\n", support.len());
    if list {
        for w in support.weights() {
            out.push_str(&w.to_string());
            out.push('\n');
        }
    }
    Ok(out)
}
