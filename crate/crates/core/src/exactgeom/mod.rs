//! Exact rational geometry: linear algebra, LP feasibility, relative-interior
//! membership and arrangement face enumeration. No floating point is used here.

pub mod arrangement;
pub mod linalg;
pub mod lp;

use num_rational::BigRational;

pub type Rational = BigRational;
pub type RationalVector = Vec<Rational>;
pub type RationalMatrix = Vec<RationalVector>;

pub use arrangement::{arrangement_cells, arrangement_rays, ArrangementFaceWitness, FaceKind};
pub use lp::{lp_feasible, zero_in_relative_interior};
