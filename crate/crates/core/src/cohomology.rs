//! Second cohomology `H²(g, ℚ)` with trivial coefficients for any
//! finite-dimensional Lie algebra given by structure constants.
//!
//! A two-cochain `ξ` is a cocycle iff for every `i < j < l`
//!
//! ```text
//! Σ_k ( C_ij^k ξ_kl + C_jl^k ξ_ki + C_li^k ξ_kj ) = 0,
//! ```
//!
//! and a coboundary iff `ξ_ij = Σ_k C_ij^k μ_k` for some one-cochain `μ`.
//! Cochain variables are the pairs `i < j` in lexicographic order.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::LieAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{rref, SparseMatrix};
use crate::rational::Rational;

/// Number of cochain variables `r(r-1)/2`.
pub fn pair_count(dim: usize) -> usize {
    dim * dim.saturating_sub(1) / 2
}

/// Column of the variable `ξ_ij`, `i < j < dim`.
pub fn pair_index(dim: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < dim);
    i * (2 * dim - i - 1) / 2 + (j - i - 1)
}

/// Inverse of [`pair_index`].
pub fn pair_at(dim: usize, index: usize) -> (usize, usize) {
    let mut rest = index;
    for i in 0..dim {
        let len = dim - i - 1;
        if rest < len {
            return (i, i + 1 + rest);
        }
        rest -= len;
    }
    panic!("pair index {index} out of range for dimension {dim}");
}

/// Antisymmetric bilinear form `ξ(X_i, X_j) = ξ_ij`, stored for `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoCochain {
    dim: usize,
    entries: BTreeMap<(usize, usize), Rational>,
}

impl TwoCochain {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            entries: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        use std::cmp::Ordering;
        match i.cmp(&j) {
            Ordering::Equal => Rational::zero(),
            Ordering::Less => self
                .entries
                .get(&(i, j))
                .cloned()
                .unwrap_or_else(Rational::zero),
            Ordering::Greater => -self
                .entries
                .get(&(j, i))
                .cloned()
                .unwrap_or_else(Rational::zero),
        }
    }

    /// Sets `ξ(X_i, X_j) = value` (and implicitly `ξ(X_j, X_i) = -value`).
    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        assert!(
            i != j || value.is_zero(),
            "diagonal of an antisymmetric form"
        );
        assert!(i < self.dim && j < self.dim);
        if i == j {
            return;
        }
        let (key, v) = if i < j {
            ((i, j), value)
        } else {
            ((j, i), -value)
        };
        if v.is_zero() {
            self.entries.remove(&key);
        } else {
            self.entries.insert(key, v);
        }
    }

    pub fn add(&mut self, i: usize, j: usize, value: Rational) {
        let v = self.get(i, j) + value;
        self.set(i, j, v);
    }

    /// Nonzero entries with `i < j`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.entries.iter().map(|(&(i, j), v)| (i, j, v))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn to_vector(&self) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); pair_count(self.dim)];
        for (&(i, j), x) in &self.entries {
            v[pair_index(self.dim, i, j)] = x.clone();
        }
        v
    }

    pub fn from_vector(dim: usize, v: &[Rational]) -> Result<Self> {
        if v.len() != pair_count(dim) {
            return Err(Error::DimensionMismatch {
                expected: pair_count(dim),
                got: v.len(),
            });
        }
        let mut c = Self::zero(dim);
        for (idx, x) in v.iter().enumerate() {
            if !x.is_zero() {
                c.entries.insert(pair_at(dim, idx), x.clone());
            }
        }
        Ok(c)
    }

    pub fn scaled(&self, q: &Rational) -> Self {
        let mut out = Self::zero(self.dim);
        if !q.is_zero() {
            out.entries = self.entries.iter().map(|(k, v)| (*k, v * q)).collect();
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (i, j, v) in other.entries() {
            out.add(i, j, -v);
        }
        out
    }
}

/// Linear form `μ(X_i) = μ_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneCochain {
    dim: usize,
    mu: BTreeMap<usize, Rational>,
}

impl OneCochain {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            mu: BTreeMap::new(),
        }
    }

    pub fn from_vector(v: &[Rational]) -> Self {
        Self {
            dim: v.len(),
            mu: v
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| (i, x.clone()))
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize) -> Rational {
        self.mu.get(&i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn set(&mut self, i: usize, value: Rational) {
        assert!(i < self.dim);
        if value.is_zero() {
            self.mu.remove(&i);
        } else {
            self.mu.insert(i, value);
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.mu.iter().map(|(i, v)| (*i, v))
    }

    pub fn is_zero(&self) -> bool {
        self.mu.is_empty()
    }

    /// `δμ(X_i, X_j) = Σ_k C_ij^k μ_k`.
    pub fn coboundary(&self, g: &LieAlgebra) -> TwoCochain {
        assert_eq!(self.dim, g.dim());
        let mut out = TwoCochain::zero(g.dim());
        for (&(i, j), v) in g.brackets() {
            let s = v
                .iter()
                .fold(Rational::zero(), |acc, (k, c)| acc + c * self.get(*k));
            out.set(i, j, s);
        }
        out
    }
}

fn push_term(row: &mut BTreeMap<usize, Rational>, dim: usize, k: usize, l: usize, c: &Rational) {
    use std::cmp::Ordering;
    let (col, c) = match k.cmp(&l) {
        Ordering::Equal => return,
        Ordering::Less => (pair_index(dim, k, l), c.clone()),
        Ordering::Greater => (pair_index(dim, l, k), -c),
    };
    let e = row.entry(col).or_insert_with(Rational::zero);
    *e += c;
    if e.is_zero() {
        row.remove(&col);
    }
}

/// Row of the cocycle condition for the triple `i < j < l`.
fn cocycle_row(g: &LieAlgebra, i: usize, j: usize, l: usize) -> Vec<(usize, Rational)> {
    let dim = g.dim();
    let mut row = BTreeMap::new();
    for (k, c) in g.bracket_ordered(i, j) {
        push_term(&mut row, dim, *k, l, c);
    }
    for (k, c) in g.bracket_ordered(j, l) {
        push_term(&mut row, dim, *k, i, c);
    }
    // C_li^k = -C_il^k
    for (k, c) in g.bracket_ordered(i, l) {
        push_term(&mut row, dim, *k, j, &-c);
    }
    row.into_iter().collect()
}

/// The cocycle system, one row per triple `i < j < l` with a nonzero
/// condition (identically zero rows are dropped), `r(r-1)/2` columns.
pub fn cocycle_system(g: &LieAlgebra) -> Result<SparseMatrix> {
    g.check_jacobi()?;
    Ok(cocycle_system_unchecked(g))
}

pub(crate) fn cocycle_system_unchecked(g: &LieAlgebra) -> SparseMatrix {
    let dim = g.dim();
    let mut m = SparseMatrix::zeros(0, pair_count(dim));
    for i in 0..dim {
        for j in i + 1..dim {
            for l in j + 1..dim {
                let row = cocycle_row(g, i, j, l);
                if !row.is_empty() {
                    m.push_row(row);
                }
            }
        }
    }
    m
}

/// Matrix of `μ ↦ δμ`, shape `r(r-1)/2 × r`.
pub fn coboundary_matrix(g: &LieAlgebra) -> SparseMatrix {
    let dim = g.dim();
    SparseMatrix::from_triplets(
        pair_count(dim),
        dim,
        g.entries()
            .into_iter()
            .map(|(i, j, k, c)| (pair_index(dim, i, j), k, c)),
    )
    .expect("indices in range")
}

/// Number of violated cocycle equations.
pub fn cocycle_violations(g: &LieAlgebra, xi: &TwoCochain) -> Result<usize> {
    if xi.dim() != g.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            got: xi.dim(),
        });
    }
    let dim = g.dim();
    let mut bad = 0;
    for i in 0..dim {
        for j in i + 1..dim {
            for l in j + 1..dim {
                let s = cocycle_row(g, i, j, l)
                    .iter()
                    .fold(Rational::zero(), |acc, (col, c)| {
                        let (a, b) = pair_at(dim, *col);
                        acc + c * xi.get(a, b)
                    });
                if !s.is_zero() {
                    bad += 1;
                }
            }
        }
    }
    Ok(bad)
}

pub fn is_cocycle(g: &LieAlgebra, xi: &TwoCochain) -> Result<bool> {
    Ok(cocycle_violations(g, xi)? == 0)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyResult {
    pub dim_z2: usize,
    pub dim_b2: usize,
    pub dim_h2: usize,
    /// Canonical basis of a complement of `B²` in `Z²`.
    pub representatives: Vec<TwoCochain>,
    /// Canonical basis of `Z²` (reduced row echelon form of the kernel).
    pub cocycles: Vec<TwoCochain>,
}

/// Full `H²(g, ℚ)`.
///
/// Representatives are the reduced echelon basis of the cocycles after
/// clearing the pivot coordinates of the (reduced echelon) coboundary space,
/// so they depend only on `g` and its basis order.
pub fn h2(g: &LieAlgebra) -> Result<CohomologyResult> {
    g.check_jacobi()?;
    let dim = g.dim();
    let m = pair_count(dim);
    let z = cocycle_system_unchecked(g).nullspace();
    let delta = coboundary_matrix(g);
    let images: Vec<Vec<Rational>> = delta.transpose().to_dense();
    let b = rref::canonical_basis(m, images);
    let b_pivots = rref::pivots(&b);
    let reduced: Vec<Vec<Rational>> = z
        .iter()
        .map(|v| {
            let mut v = v.clone();
            rref::reduce(&mut v, &b, &b_pivots);
            v
        })
        .collect();
    let reps = rref::canonical_basis(m, reduced);
    let (dim_z2, dim_b2) = (z.len(), b.len());
    debug_assert_eq!(reps.len() + dim_b2, dim_z2, "B² must lie inside Z²");
    let to_cochains = |vs: &[Vec<Rational>]| {
        vs.iter()
            .map(|v| TwoCochain::from_vector(dim, v).expect("length"))
            .collect::<Vec<_>>()
    };
    Ok(CohomologyResult {
        dim_z2,
        dim_b2,
        dim_h2: dim_z2 - dim_b2,
        representatives: to_cochains(&reps),
        cocycles: to_cochains(&z),
    })
}

/// `Some(μ)` with `δμ = ξ` if `ξ` is a coboundary, `None` if it is a
/// non-trivial cocycle, and `NotCocycle` if it fails the cocycle condition.
pub fn is_coboundary(g: &LieAlgebra, xi: &TwoCochain) -> Result<Option<OneCochain>> {
    let violations = cocycle_violations(g, xi)?;
    if violations > 0 {
        return Err(Error::NotCocycle { violations });
    }
    Ok(coboundary_matrix(g)
        .solve(&xi.to_vector())
        .map(|mu| OneCochain::from_vector(&mu)))
}

/// `g ⊕_ξ ℚΞ`: brackets `[X_i, X_j] = Σ_k C_ij^k X_k + ξ_ij Ξ`, with `Ξ` the
/// new last basis element, central. A Lie algebra iff `ξ` is a cocycle.
pub fn central_extension(g: &LieAlgebra, xi: &TwoCochain) -> Result<LieAlgebra> {
    if xi.dim() != g.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            got: xi.dim(),
        });
    }
    let center = g.dim();
    LieAlgebra::from_entries(
        g.dim() + 1,
        g.entries()
            .into_iter()
            .chain(xi.entries().map(|(i, j, v)| (i, j, center, v.clone()))),
    )
}
