//! Resource guards shared by the enumeration routines.

/// Upper bounds on the sizes of objects the library is willing to materialize.
///
/// Defaults are `10^6` for every guard. [`Limits::from_env`] reads overrides from
/// `GITLOCI_MAX_WEIGHTS`, `GITLOCI_MAX_CELLS` and `GITLOCI_MAX_WEYL`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Cap on the number of weights of a representation.
    pub max_weights: usize,
    /// Cap on the number of cells produced by arrangement enumeration.
    pub max_cells: usize,
    /// Largest Weyl group (or Weyl orbit) that may be enumerated element by element.
    pub max_weyl_enumeration: u64,
}

pub const DEFAULT_GUARD: usize = 1_000_000;

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_weights: DEFAULT_GUARD,
            max_cells: DEFAULT_GUARD,
            max_weyl_enumeration: DEFAULT_GUARD as u64,
        }
    }
}

impl Limits {
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(v) = read_var("GITLOCI_MAX_WEIGHTS") {
            limits.max_weights = v as usize;
        }
        if let Some(v) = read_var("GITLOCI_MAX_CELLS") {
            limits.max_cells = v as usize;
        }
        if let Some(v) = read_var("GITLOCI_MAX_WEYL") {
            limits.max_weyl_enumeration = v;
        }
        limits
    }
}

fn read_var(name: &str) -> Option<u64> {
    std::env::var(name).ok()?.trim().replace('_', "").parse().ok()
}
