//! Text and structured renderings of a [`GitSolution`].
//!
//! Type-A reports print weights in `L`-coordinates and witnesses in primitive
//! `H`-form, which reads as a diagonal torus of `SL(r+1)`. Other types print
//! fundamental-weight and fundamental-coweight coordinates.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootdata::{write_tuple, OneParameterSubgroup, SimpleGroup, Weight};
use crate::solver::{GitProblem, GitSolution, State, StateKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    JsonLike,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "text" => Ok(OutputFormat::Text),
            "json-like" | "json" | "structured" => Ok(OutputFormat::JsonLike),
            _ => Err(Error::ParseReport(format!("unknown output format `{s}`"))),
        }
    }
}

/// Coordinates in which a report lists weights.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WeightCoordinates {
    L,
    FundamentalWeight,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HighestWeightDoc {
    pub fundamental: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub l_form: Option<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub coweight: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub h_form: Option<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StateDoc {
    pub kind: StateKind,
    pub witness: Option<WitnessDoc>,
    pub weights: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocusDoc {
    pub kind: StateKind,
    pub states: Vec<StateDoc>,
}

/// The structured report. Contains no timing data, so it is stable across runs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub group: String,
    pub highest_weight: Option<HighestWeightDoc>,
    pub weyl_optimisation: bool,
    pub warnings: Vec<String>,
    pub support_size: usize,
    pub weight_coordinates: WeightCoordinates,
    pub loci: Vec<LocusDoc>,
}

impl ReportDocument {
    pub fn from_solution(problem: &GitProblem, sol: &GitSolution) -> Self {
        let group = problem.group();
        let loci: Vec<(StateKind, &Vec<State>)> = [
            (StateKind::Nonstable, &sol.nonstable),
            (StateKind::Unstable, &sol.unstable),
            (StateKind::StrictlyPolystable, &sol.strictly_polystable),
        ]
        .into_iter()
        .filter_map(|(k, s)| s.as_ref().map(|s| (k, s)))
        .collect();

        let total = group.l_total_for(problem.support().weights());
        let coords = if total.is_some() { WeightCoordinates::L } else { WeightCoordinates::FundamentalWeight };
        let render_weight = |w: &Weight| match total {
            Some(t) => group.l_form(w, t).expect("checked integral"),
            None => w.coeffs().to_vec(),
        };

        ReportDocument {
            group: sol.group.clone(),
            highest_weight: sol.highest_weight.as_ref().map(|hw| HighestWeightDoc {
                fundamental: hw.weight().coeffs().to_vec(),
                l_form: total.and_then(|t| group.l_form(hw.weight(), t)),
            }),
            weyl_optimisation: sol.weyl_optimisation,
            warnings: sol.warnings.clone(),
            support_size: sol.support_size,
            weight_coordinates: coords,
            loci: loci
                .into_iter()
                .map(|(kind, states)| LocusDoc {
                    kind,
                    states: states
                        .iter()
                        .map(|s| StateDoc {
                            kind: s.kind(),
                            witness: s.witness().map(|lam| WitnessDoc {
                                coweight: lam.coeffs().to_vec(),
                                h_form: group.h_form(lam),
                            }),
                            weights: s.weights().iter().map(render_weight).collect(),
                        })
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::ParseReport(e.to_string()))
    }

    pub fn render(&self, format: OutputFormat) -> Result<String> {
        match format {
            OutputFormat::Text => Ok(self.to_text()),
            OutputFormat::JsonLike => self.to_json(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (n, locus) in self.loci.iter().enumerate() {
            if n > 0 {
                out.push('\n');
            }
            let banner = format!("SOLUTION TO GIT PROBLEM: {} LOCI", banner_name(locus.kind));
            let stars = "*".repeat(banner.len());
            let _ = writeln!(out, "{stars}\n{banner}\n{stars}");
            let _ = writeln!(out, "Group: {}", self.group);
            let _ = writeln!(out, "Representation  {}", self.representation_label());
            let _ = writeln!(out, "Weight coordinates: {}", coords_name(self.weight_coordinates));
            let _ = writeln!(out, "Number of weights: {}", self.support_size);
            let _ = writeln!(
                out,
                "Weyl optimisation: {}",
                if self.weyl_optimisation { "on" } else { "off" }
            );
            for w in &self.warnings {
                let _ = writeln!(out, "Warning: {w}");
            }
            let _ = writeln!(out, "Set of {}:", set_heading(locus.kind));
            for (i, s) in locus.states.iter().enumerate() {
                let _ = write!(out, "({}) ", i + 1);
                if let Some(w) = &s.witness {
                    let _ = write!(out, "1-PS = ");
                    let _ = write_tuple(&mut out, w.h_form.as_deref().unwrap_or(&w.coweight));
                    let _ = writeln!(out, " yields a state with {} characters", s.weights.len());
                } else {
                    let _ = writeln!(out, "A state with {} characters", s.weights.len());
                }
                let _ = write!(out, "{}={{", state_label(locus.kind));
                for (j, w) in s.weights.iter().enumerate() {
                    if j > 0 {
                        out.push_str(", ");
                    }
                    let _ = write_tuple(&mut out, w);
                }
                out.push_str("}\n");
            }
        }
        out
    }

    fn representation_label(&self) -> String {
        match &self.highest_weight {
            Some(hw) => {
                let v = hw.l_form.as_ref().unwrap_or(&hw.fundamental);
                let parts: Vec<String> = v.iter().map(i64::to_string).collect();
                format!("{}({})", self.group, parts.join(","))
            }
            None => format!("{}(weight list)", self.group),
        }
    }

    /// Parses a text report back into a document.
    ///
    /// `L`-form of the highest weight and `H`-forms of witnesses are recomputed from the group.
    pub fn parse_text(text: &str) -> Result<Self> {
        let bad = |msg: &str| Error::ParseReport(msg.to_string());
        let mut doc: Option<ReportDocument> = None;
        let mut group: Option<SimpleGroup> = None;
        let mut pending_witness: Option<Option<WitnessDoc>> = None;
        let mut lines = text.lines().peekable();
        while let Some(line) = lines.next() {
            let line = line.trim_end();
            if let Some(name) = line.strip_prefix("SOLUTION TO GIT PROBLEM: ") {
                let kind = kind_from_banner(name.trim_end_matches(" LOCI"))
                    .ok_or_else(|| bad("unknown locus banner"))?;
                let d = doc.get_or_insert_with(|| ReportDocument {
                    group: String::new(),
                    highest_weight: None,
                    weyl_optimisation: false,
                    warnings: Vec::new(),
                    support_size: 0,
                    weight_coordinates: WeightCoordinates::FundamentalWeight,
                    loci: Vec::new(),
                });
                let fresh = d.loci.is_empty();
                d.loci.push(LocusDoc { kind, states: Vec::new() });
                // Header lines repeat per section; only the first copy is recorded.
                while let Some(h) = lines.peek() {
                    let h = h.trim_end();
                    if h.starts_with("Set of ") {
                        lines.next();
                        break;
                    }
                    lines.next();
                    if !fresh {
                        continue;
                    }
                    if let Some(g) = h.strip_prefix("Group: ") {
                        let parsed = SimpleGroup::parse(g.trim())?;
                        d.group = parsed.name();
                        group = Some(parsed);
                    } else if let Some(r) = h.strip_prefix("Representation") {
                        d.highest_weight = parse_representation(r.trim(), group.as_ref())?;
                    } else if let Some(c) = h.strip_prefix("Weight coordinates: ") {
                        d.weight_coordinates = match c.trim() {
                            "L" => WeightCoordinates::L,
                            "fundamental weight" => WeightCoordinates::FundamentalWeight,
                            _ => return Err(bad("unknown weight coordinates")),
                        };
                    } else if let Some(n) = h.strip_prefix("Number of weights: ") {
                        d.support_size = n.trim().parse().map_err(|_| bad("bad support size"))?;
                    } else if let Some(w) = h.strip_prefix("Weyl optimisation: ") {
                        d.weyl_optimisation = w.trim() == "on";
                    } else if let Some(w) = h.strip_prefix("Warning: ") {
                        d.warnings.push(w.to_string());
                    }
                }
            } else if line.starts_with('(') && line.contains(") ") {
                let rest = &line[line.find(") ").unwrap() + 2..];
                let witness = match rest.strip_prefix("1-PS = ") {
                    Some(r) => {
                        let end = r.find(')').ok_or_else(|| bad("unterminated 1-PS"))? + 1;
                        let v = parse_tuple(&r[..end])?;
                        let g = group.as_ref().ok_or_else(|| bad("1-PS before group line"))?;
                        let lam = if g.is_type_a() {
                            g.coweight_from_h_form(&v)?
                        } else {
                            OneParameterSubgroup::new(v)?
                        };
                        Some(WitnessDoc { coweight: lam.coeffs().to_vec(), h_form: g.h_form(&lam) })
                    }
                    None => None,
                };
                pending_witness = Some(witness);
            } else if let Some(idx) = line.find("={") {
                let d = doc.as_mut().ok_or_else(|| bad("state before banner"))?;
                let locus = d.loci.last_mut().ok_or_else(|| bad("state before banner"))?;
                let body = line[idx + 2..].strip_suffix('}').ok_or_else(|| bad("unterminated state"))?;
                let weights = split_tuples(body)?;
                let witness = pending_witness.take().ok_or_else(|| bad("state without header"))?;
                locus.states.push(StateDoc { kind: locus.kind, witness, weights });
            }
        }
        doc.ok_or_else(|| bad("no solution banner found"))
    }
}

fn banner_name(kind: StateKind) -> &'static str {
    match kind {
        StateKind::Nonstable => "NONSTABLE",
        StateKind::Unstable => "UNSTABLE",
        StateKind::StrictlyPolystable => "STRICTLY POLYSTABLE",
    }
}

fn kind_from_banner(s: &str) -> Option<StateKind> {
    [StateKind::Nonstable, StateKind::Unstable, StateKind::StrictlyPolystable]
        .into_iter()
        .find(|&k| banner_name(k) == s)
}

fn set_heading(kind: StateKind) -> &'static str {
    match kind {
        StateKind::Nonstable => "maximal non-stable states",
        StateKind::Unstable => "maximal unstable states",
        StateKind::StrictlyPolystable => "strictly polystable states",
    }
}

fn state_label(kind: StateKind) -> &'static str {
    match kind {
        StateKind::Nonstable => "Maximal nonstable state",
        StateKind::Unstable => "Maximal unstable state",
        StateKind::StrictlyPolystable => "Strictly polystable state",
    }
}

fn coords_name(c: WeightCoordinates) -> &'static str {
    match c {
        WeightCoordinates::L => "L",
        WeightCoordinates::FundamentalWeight => "fundamental weight",
    }
}

fn parse_representation(r: &str, group: Option<&SimpleGroup>) -> Result<Option<HighestWeightDoc>> {
    let bad = || Error::ParseReport(format!("bad representation line `{r}`"));
    if r.ends_with("(weight list)") {
        return Ok(None);
    }
    let g = group.ok_or_else(bad)?;
    let open = r.find('(').ok_or_else(bad)?;
    let v = parse_tuple(&r[open..])?;
    let w = if v.len() == g.rnk() + 1 && g.is_type_a() {
        g.weight_from_l_form(&v)?
    } else if v.len() == g.rnk() {
        Weight::new(v)
    } else {
        return Err(bad());
    };
    Ok(Some(HighestWeightDoc {
        fundamental: w.coeffs().to_vec(),
        l_form: g.l_form(&w, g.l_total(&w)),
    }))
}

fn parse_tuple(s: &str) -> Result<Vec<i64>> {
    let inner = s
        .trim()
        .strip_prefix('(')
        .and_then(|x| x.strip_suffix(')'))
        .ok_or_else(|| Error::ParseReport(format!("bad tuple `{s}`")))?;
    inner
        .split(',')
        .map(|x| x.trim().parse().map_err(|_| Error::ParseReport(format!("bad integer in `{s}`"))))
        .collect()
}

fn split_tuples(body: &str) -> Result<Vec<Vec<i64>>> {
    let mut out = Vec::new();
    let mut rest = body.trim();
    while !rest.is_empty() {
        let end = rest.find(')').ok_or_else(|| Error::ParseReport("unterminated tuple".into()))? + 1;
        out.push(parse_tuple(&rest[..end])?);
        rest = rest[end..].trim_start_matches([',', ' ']);
    }
    Ok(out)
}
