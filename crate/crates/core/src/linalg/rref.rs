//! Canonical bases of row spaces.

use num_traits::{One, Zero};

use crate::rational::Rational;

/// Gauss-Jordan with leftmost pivots over `ℚ`; returns the nonzero rows of
/// the reduced row echelon form, each with pivot entry 1, sorted by pivot.
pub fn canonical_basis(cols: usize, vectors: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    let mut rows = vectors;
    debug_assert!(rows.iter().all(|r| r.len() == cols));
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = Rational::one() / &rows[rank][c];
        if !inv.is_one() {
            for v in rows[rank].iter_mut() {
                *v *= &inv;
            }
        }
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot).skip(c) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    rows
}

/// Pivot column of each canonical row.
pub fn pivots(rows: &[Vec<Rational>]) -> Vec<usize> {
    rows.iter()
        .map(|r| r.iter().position(|v| !v.is_zero()).expect("nonzero row"))
        .collect()
}

/// Subtracts from `v` its components along the canonical `basis` rows, so the
/// result vanishes at every basis pivot.
pub fn reduce(v: &mut [Rational], basis: &[Vec<Rational>], basis_pivots: &[usize]) {
    for (row, &p) in basis.iter().zip(basis_pivots) {
        if v[p].is_zero() {
            continue;
        }
        let f = v[p].clone();
        for (x, b) in v.iter_mut().zip(row) {
            if !b.is_zero() {
                *x -= &f * b;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn rref_of_dependent_rows() {
        let rows = vec![
            vec![int(0), int(2), int(4)],
            vec![int(0), int(1), int(2)],
            vec![int(1), int(1), int(1)],
        ];
        let b = canonical_basis(3, rows);
        assert_eq!(
            b,
            vec![vec![int(1), int(0), int(-1)], vec![int(0), int(1), int(2)]]
        );
        assert_eq!(pivots(&b), vec![0, 1]);
        let mut v = vec![int(3), int(5), int(0)];
        reduce(&mut v, &b, &[0, 1]);
        assert_eq!(v, vec![int(0), int(0), int(-7)]);
    }
}
