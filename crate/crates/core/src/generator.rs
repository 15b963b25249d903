use std::fmt;

use serde::{Deserialize, Serialize};

use crate::ck::Family;
use crate::error::{Error, Result};

/// A basis element of a CK quasi-unitary algebra.
///
/// The derived `Ord` is not the canonical basis order; use
/// [`CkBasis::index_of`] for tensor indexing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Generator {
    J(usize, usize),
    M(usize, usize),
    B(usize),
    I,
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Generator::J(a, b) => write!(f, "J_{a}{b}"),
            Generator::M(a, b) => write!(f, "M_{a}{b}"),
            Generator::B(l) => write!(f, "B_{l}"),
            Generator::I => write!(f, "I"),
        }
    }
}

/// Number of index pairs `0 ≤ a < b ≤ n`.
pub fn pair_count(n: usize) -> usize {
    n * (n + 1) / 2
}

/// Position of `(a, b)` in the lexicographic list of pairs `a < b ≤ n`.
pub fn pair_index(n: usize, a: usize, b: usize) -> usize {
    debug_assert!(a < b && b <= n);
    a * n - a * (a.saturating_sub(1)) / 2 + (b - a - 1)
}

/// Canonical ordered basis: `J` lexicographic, `M` lexicographic,
/// `B_1..B_N`, then `I` for the `u` family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CkBasis {
    n: usize,
    family: Family,
    generators: Vec<Generator>,
}

impl CkBasis {
    pub fn new(n: usize, family: Family) -> Self {
        let mut generators = Vec::new();
        let pairs: Vec<(usize, usize)> = (0..=n)
            .flat_map(|a| (a + 1..=n).map(move |b| (a, b)))
            .collect();
        generators.extend(pairs.iter().map(|&(a, b)| Generator::J(a, b)));
        generators.extend(pairs.iter().map(|&(a, b)| Generator::M(a, b)));
        generators.extend((1..=n).map(Generator::B));
        if family == Family::U {
            generators.push(Generator::I);
        }
        Self {
            n,
            family,
            generators,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn generator(&self, index: usize) -> Generator {
        self.generators[index]
    }

    pub fn contains(&self, g: Generator) -> bool {
        match g {
            Generator::J(a, b) | Generator::M(a, b) => a < b && b <= self.n,
            Generator::B(l) => l >= 1 && l <= self.n,
            Generator::I => self.family == Family::U,
        }
    }

    pub fn index_of(&self, g: Generator) -> Result<usize> {
        if !self.contains(g) {
            return Err(Error::IndexOutOfRange {
                index: 0,
                expected: format!(
                    "generator {g} of a {}(N+1) basis with N = {}",
                    self.family, self.n
                ),
            });
        }
        let p = pair_count(self.n);
        Ok(match g {
            Generator::J(a, b) => pair_index(self.n, a, b),
            Generator::M(a, b) => p + pair_index(self.n, a, b),
            Generator::B(l) => 2 * p + l - 1,
            Generator::I => 2 * p + self.n,
        })
    }

    /// Panicking lookup for generators known to be in range.
    pub fn idx(&self, g: Generator) -> usize {
        self.index_of(g).expect("generator in basis")
    }
}
