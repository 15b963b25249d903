//! Exact linear algebra over `ℚ`.
//!
//! Rank, nullspace and linear solves run on integer rows: every rational row
//! is scaled to a primitive integer vector first. Wide systems go through the
//! sparse [`echelon`] engine, narrow ones through the dense [`bareiss`] kernel.
//! Both produce the same canonical nullspace basis (see [`rref`]).

pub mod bareiss;
pub mod echelon;
pub mod rref;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Below this many columns elimination runs on a dense matrix.
pub const DENSE_COLUMN_LIMIT: usize = 200;

pub type IntRow = Vec<(usize, BigInt)>;

/// Row-major sparse matrix over `ℚ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, Rational)>>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    /// Builds from `(row, col, value)`; duplicates are summed, zeros dropped.
    pub fn from_triplets<I>(rows: usize, cols: usize, triplets: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Rational)>,
    {
        let mut m = Self::zeros(rows, cols);
        for (r, c, v) in triplets {
            if r >= rows || c >= cols {
                return Err(Error::IndexOutOfRange {
                    index: if r >= rows { r } else { c },
                    expected: format!("{rows}x{cols} matrix"),
                });
            }
            m.data[r].push((c, v));
        }
        for row in &mut m.data {
            *row = normalize(std::mem::take(row));
        }
        Ok(m)
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        Self {
            rows: rows.len(),
            cols,
            data: rows
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|(_, v)| !v.is_zero())
                        .map(|(c, v)| (c, v.clone()))
                        .collect()
                })
                .collect(),
        }
    }

    /// Appends a row given as `(col, value)` pairs.
    pub fn push_row(&mut self, row: Vec<(usize, Rational)>) {
        debug_assert!(row.iter().all(|(c, _)| *c < self.cols));
        self.data.push(normalize(row));
        self.rows += 1;
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[(usize, Rational)] {
        &self.data[r]
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.data[r]
            .binary_search_by_key(&c, |(cc, _)| *cc)
            .map(|i| self.data[r][i].1.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, c.to_owned(), v)))
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        self.data
            .iter()
            .map(|row| {
                let mut d = vec![Rational::zero(); self.cols];
                for (c, v) in row {
                    d[*c] = v.clone();
                }
                d
            })
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for (r, c, v) in self.triplets() {
            t.data[c].push((r, v.clone()));
        }
        t
    }

    pub fn mul_vec(&self, x: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.cols);
        self.data
            .iter()
            .map(|row| {
                row.iter()
                    .fold(Rational::zero(), |acc, (c, v)| acc + v * &x[*c])
            })
            .collect()
    }

    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for (r, row) in self.data.iter().enumerate() {
            let mut acc = std::collections::BTreeMap::<usize, Rational>::new();
            for (k, a) in row {
                for (c, b) in &other.data[*k] {
                    *acc.entry(*c).or_insert_with(Rational::zero) += a * b;
                }
            }
            out.data[r] = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    fn integer_rows(&self) -> Vec<IntRow> {
        self.data
            .iter()
            .filter(|r| !r.is_empty())
            .map(|r| primitive_row(r))
            .collect()
    }

    pub fn rank(&self) -> usize {
        if self.cols < DENSE_COLUMN_LIMIT {
            self.rank_dense()
        } else {
            self.rank_sparse()
        }
    }

    pub fn rank_sparse(&self) -> usize {
        echelon::Echelon::reduce(self.cols, self.cols, self.integer_rows()).rank()
    }

    pub fn rank_dense(&self) -> usize {
        bareiss::Bareiss::reduce(self.cols, self.integer_rows()).rank()
    }

    /// Canonical kernel basis: the reduced row echelon form (leftmost pivots,
    /// pivot entries 1) of the kernel, one vector per row, ordered by pivot.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        if self.cols < DENSE_COLUMN_LIMIT {
            self.nullspace_dense()
        } else {
            self.nullspace_sparse()
        }
    }

    pub fn nullspace_sparse(&self) -> Vec<Vec<Rational>> {
        let e = echelon::Echelon::reduce(self.cols, self.cols, self.integer_rows());
        rref::canonical_basis(self.cols, e.kernel_basis())
    }

    pub fn nullspace_dense(&self) -> Vec<Vec<Rational>> {
        let b = bareiss::Bareiss::reduce(self.cols, self.integer_rows());
        rref::canonical_basis(self.cols, b.kernel_basis())
    }

    /// Some `x` with `self · x = b`, or `None` if the system is inconsistent.
    /// Free variables are set to zero.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(b.len(), self.rows);
        let aug: Vec<IntRow> = self
            .data
            .iter()
            .zip(b)
            .filter(|(r, v)| !r.is_empty() || !v.is_zero())
            .map(|(r, v)| {
                let mut row = r.clone();
                if !v.is_zero() {
                    row.push((self.cols, v.clone()));
                }
                primitive_row(&row)
            })
            .collect();
        let e = echelon::Echelon::reduce(self.cols + 1, self.cols, aug);
        if e.inconsistent() {
            return None;
        }
        Some(e.particular_solution(self.cols))
    }
}

fn normalize(mut row: Vec<(usize, Rational)>) -> Vec<(usize, Rational)> {
    row.sort_by_key(|(c, _)| *c);
    let mut out: Vec<(usize, Rational)> = Vec::with_capacity(row.len());
    for (c, v) in row {
        match out.last_mut() {
            Some((lc, lv)) if *lc == c => *lv += v,
            _ => out.push((c, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

/// Scales a rational row to a primitive integer row (content 1, same sign).
pub fn primitive_row(row: &[(usize, Rational)]) -> IntRow {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
    let ints: IntRow = row
        .iter()
        .map(|(c, v)| (*c, v.numer() * (&lcm / v.denom())))
        .collect();
    make_primitive(ints)
}

pub(crate) fn make_primitive(mut row: IntRow) -> IntRow {
    let g = row.iter().fold(BigInt::zero(), |acc, (_, v)| acc.gcd(v));
    if !g.is_zero() && !g.is_one() {
        for (_, v) in &mut row {
            *v /= &g;
        }
    }
    row
}

/// `Σ_k a_k v_k = 0` check used throughout the tests.
pub fn is_kernel_vector(m: &SparseMatrix, v: &[Rational]) -> bool {
    m.mul_vec(v).iter().all(Zero::is_zero)
}

pub(crate) fn abs_is_one(v: &BigInt) -> bool {
    v.abs().is_one()
}

pub fn format_vector(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(rational::to_short).collect();
    format!("[{}]", parts.join(", "))
}
