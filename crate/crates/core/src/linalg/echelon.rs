//! Sparse fraction-free Gauss-Jordan elimination.
//!
//! Rows are kept as primitive integer vectors. A row `t` is cleared at the
//! pivot column of row `p` by `t ← (p_c/g)·t − (t_c/g)·p` with
//! `g = gcd(p_c, t_c)`, followed by division by the row content, so no
//! rational arithmetic happens inside the loop. Pivot rows are kept fully
//! reduced: a pivot column appears in exactly one stored row.
//!
//! Incoming rows are processed sparsest first; the pivot of each new row is the
//! column that currently occurs in the fewest stored rows (least fill, in the
//! spirit of Markowitz), preferring unit entries, then the lowest index. The
//! whole procedure is deterministic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{abs_is_one, make_primitive, IntRow};
use crate::rational::Rational;

pub struct Echelon {
    cols: usize,
    pivot_limit: usize,
    /// `(pivot column, row)`; the pivot entry is positive.
    rows: Vec<(usize, IntRow)>,
    /// Row slot holding each pivot column.
    pivot_of: Vec<Option<usize>>,
    /// Number of stored rows containing each column.
    col_count: Vec<usize>,
    inconsistent: bool,
}

fn entry(row: &IntRow, col: usize) -> Option<&BigInt> {
    row.binary_search_by_key(&col, |(c, _)| *c)
        .ok()
        .map(|i| &row[i].1)
}

/// `a·x − b·y` for sorted sparse rows.
fn combine(a: &BigInt, x: &IntRow, b: &BigInt, y: &IntRow) -> IntRow {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push((x[i].0, a * &x[i].1));
            i += 1;
        } else if take_y {
            out.push((y[j].0, -(b * &y[j].1)));
            j += 1;
        } else {
            let v = a * &x[i].1 - b * &y[j].1;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Clears column `col` of `target` using `pivot` (whose entry at `col` is
/// nonzero).
fn eliminate(target: &IntRow, pivot: &IntRow, col: usize) -> IntRow {
    let pc = entry(pivot, col).expect("pivot entry");
    let Some(tc) = entry(target, col) else {
        return target.clone();
    };
    let g = pc.gcd(tc);
    let (a, b) = (pc / &g, tc / &g);
    make_primitive(combine(&a, target, &b, pivot))
}

impl Echelon {
    /// Reduces `rows` (over `cols` columns). Only columns `< pivot_limit` may
    /// become pivots; a row left with support only at or beyond the limit
    /// marks the system inconsistent (used for augmented solves).
    pub fn reduce(cols: usize, pivot_limit: usize, mut rows: Vec<IntRow>) -> Self {
        let mut e = Self {
            cols,
            pivot_limit,
            rows: Vec::new(),
            pivot_of: vec![None; cols],
            col_count: vec![0; cols],
            inconsistent: false,
        };
        rows.sort_by_key(Vec::len);
        for row in rows {
            e.insert(row);
        }
        e
    }

    fn count(&mut self, row: &IntRow, delta: isize) {
        for (c, _) in row {
            self.col_count[*c] = (self.col_count[*c] as isize + delta) as usize;
        }
    }

    fn insert(&mut self, mut row: IntRow) {
        let present: Vec<usize> = row.iter().filter_map(|(c, _)| self.pivot_of[*c]).collect();
        for slot in present {
            let (col, pivot) = &self.rows[slot];
            row = eliminate(&row, pivot, *col);
        }
        if row.is_empty() {
            return;
        }
        let Some(col) = row
            .iter()
            .filter(|(c, _)| *c < self.pivot_limit)
            .min_by_key(|(c, v)| (self.col_count[*c], !abs_is_one(v), *c))
            .map(|(c, _)| *c)
        else {
            self.inconsistent = true;
            return;
        };
        if entry(&row, col).is_some_and(|v| v.is_negative()) {
            for (_, v) in &mut row {
                *v = -std::mem::take(v);
            }
        }
        let slot = self.rows.len();
        for other in 0..self.rows.len() {
            if entry(&self.rows[other].1, col).is_none() {
                continue;
            }
            let old = std::mem::take(&mut self.rows[other].1);
            let mut new = eliminate(&old, &row, col);
            let pc = self.rows[other].0;
            if entry(&new, pc).is_some_and(|v| v.is_negative()) {
                for (_, v) in &mut new {
                    *v = -std::mem::take(v);
                }
            }
            self.count(&old, -1);
            self.count(&new, 1);
            self.rows[other].1 = new;
        }
        self.count(&row, 1);
        self.pivot_of[col] = Some(slot);
        self.rows.push((col, row));
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn inconsistent(&self) -> bool {
        self.inconsistent
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.rows.iter().map(|(c, _)| *c).collect()
    }

    /// One kernel vector per free column `f < pivot_limit`: `x_f = 1`, other
    /// free columns zero.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let n = self.pivot_limit;
        (0..n)
            .filter(|&f| self.pivot_of[f].is_none())
            .map(|f| {
                let mut v = vec![Rational::zero(); n];
                v[f] = Rational::from_integer(1.into());
                for (p, row) in &self.rows {
                    if let Some(x) = entry(row, f) {
                        let pv = entry(row, *p).expect("pivot");
                        v[*p] = -Rational::new(x.clone(), pv.clone());
                    }
                }
                v
            })
            .collect()
    }

    /// Solution of the augmented system whose right-hand side sits in column
    /// `rhs`, free variables zero.
    pub fn particular_solution(&self, rhs: usize) -> Vec<Rational> {
        debug_assert!(rhs < self.cols);
        let mut x = vec![Rational::zero(); rhs];
        for (p, row) in &self.rows {
            if let Some(b) = entry(row, rhs) {
                let pv = entry(row, *p).expect("pivot");
                x[*p] = Rational::new(b.clone(), pv.clone());
            }
        }
        x
    }
}
