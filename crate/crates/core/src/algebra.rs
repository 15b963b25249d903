//! Finite-dimensional Lie algebras as sparse structure-constant tensors.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::ck::Family;
use crate::error::{Error, Result};
use crate::omega::OmegaVector;
use crate::rational::Rational;

/// Sparse vector in the basis of an algebra: sorted `(index, coefficient)`
/// pairs with no zero coefficients.
pub type SparseVec = Vec<(usize, Rational)>;

/// Family tag carried by algebras built from the CK bracket table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CkMeta {
    pub family: Family,
    pub omega: OmegaVector,
}

/// `[X_i, X_j] = Σ_k C_ij^k X_k`, stored for `i < j` only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    meta: Option<CkMeta>,
    constants: BTreeMap<(usize, usize), SparseVec>,
}

fn accumulate(acc: &mut BTreeMap<usize, Rational>, k: usize, c: Rational) {
    if c.is_zero() {
        return;
    }
    let entry = acc.entry(k).or_insert_with(Rational::zero);
    *entry += c;
    if entry.is_zero() {
        acc.remove(&k);
    }
}

impl LieAlgebra {
    /// The abelian algebra of the given dimension.
    pub fn abelian(dim: usize) -> Self {
        Self {
            dim,
            meta: None,
            constants: BTreeMap::new(),
        }
    }

    /// Builds an algebra from `(i, j, k, C_ij^k)` entries. Entries with `i > j`
    /// are stored negated; duplicate entries are summed.
    pub fn from_entries<I>(dim: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, Rational)>,
    {
        let mut acc: BTreeMap<(usize, usize), BTreeMap<usize, Rational>> = BTreeMap::new();
        for (i, j, k, c) in entries {
            let bad = i.max(j).max(k);
            if bad >= dim {
                return Err(Error::IndexOutOfRange {
                    index: bad,
                    expected: format!("< {dim}"),
                });
            }
            if i == j {
                if !c.is_zero() {
                    return Err(Error::Parse(format!("nonzero self bracket [X_{i}, X_{i}]")));
                }
                continue;
            }
            let (key, c) = if i < j { ((i, j), c) } else { ((j, i), -c) };
            accumulate(acc.entry(key).or_default(), k, c);
        }
        let mut g = Self::abelian(dim);
        for (key, v) in acc {
            if !v.is_empty() {
                g.constants.insert(key, v.into_iter().collect());
            }
        }
        Ok(g)
    }

    pub(crate) fn with_meta(mut self, meta: Option<CkMeta>) -> Self {
        self.meta = meta;
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn meta(&self) -> Option<&CkMeta> {
        self.meta.as_ref()
    }

    /// Nonzero brackets `(i, j) -> Σ_k C_ij^k X_k` with `i < j`.
    pub fn brackets(&self) -> impl Iterator<Item = (&(usize, usize), &SparseVec)> {
        self.constants.iter()
    }

    /// Flat `(i, j, k, C_ij^k)` list with `i < j`, in canonical order.
    pub fn entries(&self) -> Vec<(usize, usize, usize, Rational)> {
        self.constants
            .iter()
            .flat_map(|(&(i, j), v)| v.iter().map(move |(k, c)| (i, j, *k, c.clone())))
            .collect()
    }

    pub fn nonzero_count(&self) -> usize {
        self.constants.values().map(Vec::len).sum()
    }

    /// `[X_i, X_j]` as a sparse vector, reading `(j, i)` negated.
    pub fn bracket(&self, i: usize, j: usize) -> SparseVec {
        use std::cmp::Ordering;
        match i.cmp(&j) {
            Ordering::Equal => Vec::new(),
            Ordering::Less => self.constants.get(&(i, j)).cloned().unwrap_or_default(),
            Ordering::Greater => self
                .constants
                .get(&(j, i))
                .map(|v| v.iter().map(|(k, c)| (*k, -c)).collect())
                .unwrap_or_default(),
        }
    }

    /// Borrowing access for `i < j`.
    pub(crate) fn bracket_ordered(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        debug_assert!(i < j);
        self.constants
            .get(&(i, j))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Rational {
        self.bracket(i, j)
            .into_iter()
            .find(|(kk, _)| *kk == k)
            .map(|(_, c)| c)
            .unwrap_or_else(Rational::zero)
    }

    /// Bracket of two arbitrary elements.
    pub fn bracket_vectors(&self, x: &[(usize, Rational)], y: &[(usize, Rational)]) -> SparseVec {
        let mut acc = BTreeMap::new();
        for (i, a) in x {
            for (j, b) in y {
                if i == j {
                    continue;
                }
                let ab = a * b;
                for (k, c) in self.bracket(*i, *j) {
                    accumulate(&mut acc, k, &ab * c);
                }
            }
        }
        acc.into_iter().collect()
    }

    /// `[[X_i,X_j],X_l] + [[X_j,X_l],X_i] + [[X_l,X_i],X_j]`.
    pub fn jacobiator(&self, i: usize, j: usize, l: usize) -> SparseVec {
        let mut acc = BTreeMap::new();
        for (a, b, c) in [(i, j, l), (j, l, i), (l, i, j)] {
            for (k, ck) in self.bracket(a, b) {
                for (m, cm) in self.bracket(k, c) {
                    accumulate(&mut acc, m, &ck * cm);
                }
            }
        }
        acc.into_iter().collect()
    }

    /// Largest absolute Jacobi residual over all triples `i < j < l`; zero iff
    /// the tensor defines a Lie algebra.
    pub fn jacobi_residual(&self) -> Rational {
        let mut worst = Rational::zero();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for l in j + 1..self.dim {
                    for (_, c) in self.jacobiator(i, j, l) {
                        let c = c.abs();
                        if c > worst {
                            worst = c;
                        }
                    }
                }
            }
        }
        worst
    }

    pub fn check_jacobi(&self) -> Result<()> {
        let r = self.jacobi_residual();
        if r.is_zero() {
            Ok(())
        } else {
            Err(Error::InvalidAlgebra(r))
        }
    }

    /// True iff every bracket of two listed basis elements lies in their span.
    pub fn closes(&self, indices: &[usize]) -> bool {
        let mut member = vec![false; self.dim];
        for &i in indices {
            member[i] = true;
        }
        indices.iter().all(|&i| {
            indices.iter().filter(|&&j| j > i).all(|&j| {
                self.bracket_ordered(i.min(j), i.max(j))
                    .iter()
                    .all(|(k, _)| member[*k])
            })
        })
    }

    /// Relabels the basis: old generator `i` becomes new generator `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: perm.len(),
            });
        }
        let mut seen = vec![false; self.dim];
        for &p in perm {
            if p >= self.dim || std::mem::replace(&mut seen[p], true) {
                return Err(Error::Parse("not a permutation".into()));
            }
        }
        Self::from_entries(
            self.dim,
            self.entries()
                .into_iter()
                .map(|(i, j, k, c)| (perm[i], perm[j], perm[k], c)),
        )
    }

    /// Direct sum `self ⊕ other`, with `other`'s basis appended.
    pub fn direct_sum(&self, other: &LieAlgebra) -> Self {
        let off = self.dim;
        Self::from_entries(
            self.dim + other.dim,
            self.entries().into_iter().chain(
                other
                    .entries()
                    .into_iter()
                    .map(|(i, j, k, c)| (i + off, j + off, k + off, c)),
            ),
        )
        .expect("indices in range")
    }
}
