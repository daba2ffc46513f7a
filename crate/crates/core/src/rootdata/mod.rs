//! Root data for the simple groups of types A-G: Cartan matrices, lattices,
//! pairings, coordinate changes and Weyl group actions.

mod coords;
mod dynkin;
mod group;
mod weight;
mod weyl;

pub use coords::CoordSystem;
pub use dynkin::{DynkinLetter, DynkinType};
pub use group::{PositiveRoot, SimpleGroup};
pub use weight::{OneParameterSubgroup, Weight};
pub(crate) use weight::write_tuple;
