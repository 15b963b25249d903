//! Test-only reference implementations.
//!
//! `oracle` knows nothing about the library's solver: it builds the cocycle
//! and coboundary systems from the dense structure tensor and runs textbook
//! Gaussian elimination over `BigRational`, taking pivots in natural column
//! order.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::HashMap;

use ckcoh_core::rational::{int, ratio};
use ckcoh_core::{build_su_omega, LieAlgebra, OmegaVector, Rational};
use num_traits::{One, Zero};
use rand::Rng;

pub mod oracle {
    use super::*;

    /// Row rank by plain Gaussian elimination.
    pub fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
        let cols = rows.first().map_or(0, Vec::len);
        let mut rank = 0;
        for c in 0..cols {
            let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
                continue;
            };
            rows.swap(rank, p);
            let pivot = rows[rank][c].clone();
            for r in rank + 1..rows.len() {
                if rows[r][c].is_zero() {
                    continue;
                }
                let f = &rows[r][c] / &pivot;
                for k in c..cols {
                    let t = &f * &rows[rank][k];
                    rows[r][k] -= t;
                }
            }
            rank += 1;
        }
        rank
    }

    /// `C[i][j][k]` for all indices.
    pub fn tensor(g: &LieAlgebra) -> Vec<Vec<Vec<Rational>>> {
        let n = g.dim();
        let mut t = vec![vec![vec![Rational::zero(); n]; n]; n];
        for (i, j, k, c) in g.entries() {
            t[j][i][k] = -c.clone();
            t[i][j][k] = c;
        }
        t
    }

    fn pairs(n: usize) -> Vec<(usize, usize)> {
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect()
    }

    fn column(index: &HashMap<(usize, usize), usize>, a: usize, b: usize) -> Option<(usize, i64)> {
        match a.cmp(&b) {
            std::cmp::Ordering::Equal => None,
            std::cmp::Ordering::Less => Some((index[&(a, b)], 1)),
            std::cmp::Ordering::Greater => Some((index[&(b, a)], -1)),
        }
    }

    /// `ξ([X_i,X_j],X_l) + ξ([X_j,X_l],X_i) + ξ([X_l,X_i],X_j) = 0` for
    /// every `i < j < l`.
    pub fn cocycle_rows(g: &LieAlgebra) -> Vec<Vec<Rational>> {
        let n = g.dim();
        let t = tensor(g);
        let all = pairs(n);
        let m = all.len();
        let index: HashMap<(usize, usize), usize> = all.into_iter().zip(0..).collect();
        let mut rows = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for l in j + 1..n {
                    let mut row = vec![Rational::zero(); m];
                    for (x, y, z) in [(i, j, l), (j, l, i), (l, i, j)] {
                        for k in 0..n {
                            if let Some((col, s)) = column(&index, k, z) {
                                row[col] += &t[x][y][k] * int(s);
                            }
                        }
                    }
                    rows.push(row);
                }
            }
        }
        rows
    }

    /// `δe_k(X_a, X_b) = C_ab^k`, one row per `k`.
    pub fn coboundary_rows(g: &LieAlgebra) -> Vec<Vec<Rational>> {
        let n = g.dim();
        let t = tensor(g);
        (0..n)
            .map(|k| pairs(n).iter().map(|&(a, b)| t[a][b][k].clone()).collect())
            .collect()
    }

    /// `(dim Z², dim B², dim H²)`.
    pub fn h2_dims(g: &LieAlgebra) -> (usize, usize, usize) {
        let m = pairs(g.dim()).len();
        let rows = cocycle_rows(g);
        let z = m - if rows.is_empty() { 0 } else { rank(rows) };
        let b = if m == 0 { 0 } else { rank(coboundary_rows(g)) };
        (z, b, z - b)
    }

    /// Exact inverse by Gauss-Jordan; `None` if singular.
    pub fn inverse(a: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
        let n = a.len();
        let mut m: Vec<Vec<Rational>> = a
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut r = row.clone();
                r.extend((0..n).map(|j| {
                    if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                }));
                r
            })
            .collect();
        for c in 0..n {
            let p = (c..n).find(|&r| !m[r][c].is_zero())?;
            m.swap(c, p);
            let pivot = m[c][c].clone();
            for k in 0..2 * n {
                m[c][k] = &m[c][k] / &pivot;
            }
            for r in 0..n {
                if r != c && !m[r][c].is_zero() {
                    let f = m[r][c].clone();
                    for k in 0..2 * n {
                        let t = &f * &m[c][k];
                        m[r][k] -= t;
                    }
                }
            }
        }
        Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
    }
}

pub fn heisenberg() -> LieAlgebra {
    LieAlgebra::from_entries(3, [(0, 1, 2, int(1))]).unwrap()
}

/// `[X_0, X_1] = X_1`.
pub fn affine_line() -> LieAlgebra {
    LieAlgebra::from_entries(2, [(0, 1, 1, int(1))]).unwrap()
}

fn random_sign<R: Rng>(rng: &mut R) -> i64 {
    rng.gen_range(-1..=1)
}

/// A random direct sum of small algebras, dimension at most `max_dim`.
pub fn random_direct_sum<R: Rng>(rng: &mut R, max_dim: usize) -> LieAlgebra {
    let mut g = LieAlgebra::abelian(0);
    loop {
        let block = match rng.gen_range(0..5) {
            0 => LieAlgebra::abelian(rng.gen_range(1..=2)),
            1 => heisenberg(),
            2 => build_su_omega(1, &OmegaVector::from_ints(&[random_sign(rng)]).unwrap()).unwrap(),
            3 => affine_line(),
            _ => {
                let w = OmegaVector::from_ints(&[random_sign(rng), random_sign(rng)]).unwrap();
                build_su_omega(2, &w).unwrap()
            }
        };
        if g.dim() + block.dim() > max_dim {
            if g.dim() == 0 {
                continue;
            }
            return g;
        }
        g = g.direct_sum(&block);
        if rng.gen_bool(0.3) {
            return g;
        }
    }
}

/// `g` in the basis `Y_i = Σ_a P_ia X_a` for a random unimodular `P`.
pub fn random_change_of_basis<R: Rng>(rng: &mut R, g: &LieAlgebra) -> LieAlgebra {
    let n = g.dim();
    let mut lower = vec![vec![Rational::zero(); n]; n];
    let mut upper = vec![vec![Rational::zero(); n]; n];
    for i in 0..n {
        lower[i][i] = Rational::one();
        upper[i][i] = int(if rng.gen_bool(0.5) { 1 } else { 2 });
        for j in 0..i {
            lower[i][j] = ratio(rng.gen_range(-2..=2), 1);
            upper[j][i] = ratio(rng.gen_range(-1..=1), rng.gen_range(1..=2));
        }
    }
    let p: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(Rational::zero(), |acc, k| acc + &lower[i][k] * &upper[k][j]))
                .collect()
        })
        .collect();
    let p_inv = oracle::inverse(&p).expect("triangular factors are invertible");
    let t = oracle::tensor(g);
    let mut entries = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            // v = Σ_{a,b} P_ia P_jb [X_a, X_b] in X coordinates
            let mut v = vec![Rational::zero(); n];
            for a in 0..n {
                if p[i][a].is_zero() {
                    continue;
                }
                for b in 0..n {
                    if p[j][b].is_zero() {
                        continue;
                    }
                    let f = &p[i][a] * &p[j][b];
                    for c in 0..n {
                        if !t[a][b][c].is_zero() {
                            v[c] += &f * &t[a][b][c];
                        }
                    }
                }
            }
            // X_c = Σ_k (P^{-1})_ck Y_k
            for k in 0..n {
                let u = (0..n).fold(Rational::zero(), |acc, c| acc + &v[c] * &p_inv[c][k]);
                if !u.is_zero() {
                    entries.push((i, j, k, u));
                }
            }
        }
    }
    LieAlgebra::from_entries(n, entries).unwrap()
}
