//! Exact Hilbert-Mumford analysis for a simple group `G` acting on the
//! projectivization of an irreducible representation.
//!
//! Given a Dynkin type and a dominant highest weight, the solver computes the
//! maximal non-stable and unstable states (families of points destabilized by a
//! one-parameter subgroup of a maximal torus) and the strictly `T`-polystable
//! states. All arithmetic is exact.
//!
//! ```
//! use gitloci::{GitProblem, SimpleGroup, parse_highest_weight};
//!
//! let g = SimpleGroup::parse("A2").unwrap();
//! let hw = parse_highest_weight(&g, "3,0,0").unwrap();
//! let problem = GitProblem::new(g, hw, false).unwrap();
//! assert_eq!(problem.solve_non_stable().unwrap().len(), 2);
//! assert_eq!(problem.solve_unstable().unwrap().len(), 1);
//! ```

pub mod cli;
pub mod error;
pub mod exactgeom;
pub mod limits;
pub mod report;
pub mod repsupport;
pub mod rootdata;
pub mod solver;

pub use error::{Error, Result};
pub use limits::Limits;
pub use repsupport::{exterior_power_weights, parse_highest_weight, weight_support, HighestWeight, RepresentationSupport};
pub use rootdata::{CoordSystem, DynkinType, OneParameterSubgroup, SimpleGroup, Weight};
pub use solver::{GitProblem, GitSolution, State, StateKind, TorusClass};
