use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactgeom::linalg::rat;
use crate::exactgeom::{Rational, RationalVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DynkinLetter {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl DynkinLetter {
    pub fn from_char(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => DynkinLetter::A,
            'B' => DynkinLetter::B,
            'C' => DynkinLetter::C,
            'D' => DynkinLetter::D,
            'E' => DynkinLetter::E,
            'F' => DynkinLetter::F,
            'G' => DynkinLetter::G,
            _ => return None,
        })
    }

    pub fn as_char(self) -> char {
        match self {
            DynkinLetter::A => 'A',
            DynkinLetter::B => 'B',
            DynkinLetter::C => 'C',
            DynkinLetter::D => 'D',
            DynkinLetter::E => 'E',
            DynkinLetter::F => 'F',
            DynkinLetter::G => 'G',
        }
    }
}

/// A Dynkin letter together with a rank valid for it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DynkinType {
    letter: DynkinLetter,
    rank: usize,
}

impl DynkinType {
    pub fn new(letter: DynkinLetter, rank: usize) -> Result<Self> {
        let ok = match letter {
            DynkinLetter::A => rank >= 1,
            DynkinLetter::B | DynkinLetter::C | DynkinLetter::D => rank >= 2,
            DynkinLetter::E => (6..=8).contains(&rank),
            DynkinLetter::F => rank == 4,
            DynkinLetter::G => rank == 2,
        };
        if ok {
            Ok(DynkinType { letter, rank })
        } else {
            Err(Error::InvalidRank { letter: letter.as_char(), rank })
        }
    }

    pub fn letter(&self) -> DynkinLetter {
        self.letter
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// D2 is A1 x A1: semisimple but not simple.
    pub fn is_simple(&self) -> bool {
        !(self.letter == DynkinLetter::D && self.rank == 2)
    }

    /// Degrees of the basic invariants; their product is the Weyl group order.
    pub fn invariant_degrees(&self) -> Vec<u64> {
        let n = self.rank as u64;
        match self.letter {
            DynkinLetter::A => (2..=n + 1).collect(),
            DynkinLetter::B | DynkinLetter::C => (1..=n).map(|k| 2 * k).collect(),
            DynkinLetter::D => (1..n).map(|k| 2 * k).chain([n]).collect(),
            DynkinLetter::E => match n {
                6 => vec![2, 5, 6, 8, 9, 12],
                7 => vec![2, 6, 8, 10, 12, 14, 18],
                _ => vec![2, 8, 12, 14, 18, 20, 24, 30],
            },
            DynkinLetter::F => vec![2, 6, 8, 12],
            DynkinLetter::G => vec![2, 6],
        }
    }

    /// Simple roots in a Euclidean realization with rational coordinates (Bourbaki conventions).
    pub fn euclidean_simple_roots(&self) -> Vec<RationalVector> {
        let n = self.rank;
        let half = || Rational::new(1.into(), 2.into());
        let unit = |dim: usize, pairs: &[(usize, i64)]| -> RationalVector {
            let mut v = vec![Rational::zero(); dim];
            for &(i, c) in pairs {
                v[i] = rat(c);
            }
            v
        };
        let chain = |dim: usize, count: usize| -> Vec<RationalVector> {
            (0..count).map(|i| unit(dim, &[(i, 1), (i + 1, -1)])).collect()
        };
        match self.letter {
            DynkinLetter::A => chain(n + 1, n),
            DynkinLetter::B => {
                let mut r = chain(n, n - 1);
                r.push(unit(n, &[(n - 1, 1)]));
                r
            }
            DynkinLetter::C => {
                let mut r = chain(n, n - 1);
                r.push(unit(n, &[(n - 1, 2)]));
                r
            }
            DynkinLetter::D => {
                let mut r = chain(n, n - 1);
                r.push(unit(n, &[(n - 2, 1), (n - 1, 1)]));
                r
            }
            DynkinLetter::E => {
                let mut first = vec![-half(); 8];
                first[0] = half();
                first[7] = half();
                let mut r = vec![first, unit(8, &[(0, 1), (1, 1)])];
                r.extend((0..6).map(|i| unit(8, &[(i, -1), (i + 1, 1)])));
                r.truncate(n);
                r
            }
            DynkinLetter::F => vec![
                unit(4, &[(1, 1), (2, -1)]),
                unit(4, &[(2, 1), (3, -1)]),
                unit(4, &[(3, 1)]),
                vec![half(), -half(), -half(), -half()],
            ],
            DynkinLetter::G => vec![unit(3, &[(0, 1), (1, -1)]), unit(3, &[(0, -2), (1, 1), (2, 1)])],
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter.as_char(), self.rank)
    }
}

impl FromStr for DynkinType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars
            .next()
            .and_then(DynkinLetter::from_char)
            .ok_or_else(|| Error::ParseGroup(s.to_string()))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::ParseGroup(s.to_string()))?;
        DynkinType::new(letter, rank)
    }
}
