//! Dense fraction-free (Bareiss) elimination for narrow systems.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntRow;
use crate::rational::Rational;

fn exact_div(num: BigInt, den: &BigInt) -> BigInt {
    debug_assert!((&num % den).is_zero(), "Bareiss division must be exact");
    num / den
}

pub struct Bareiss {
    cols: usize,
    /// Upper echelon rows, paired with their pivot column.
    echelon: Vec<(usize, Vec<BigInt>)>,
}

impl Bareiss {
    pub fn reduce(cols: usize, rows: Vec<IntRow>) -> Self {
        let mut m: Vec<Vec<BigInt>> = rows
            .into_iter()
            .map(|r| {
                let mut d = vec![BigInt::zero(); cols];
                for (c, v) in r {
                    d[c] = v;
                }
                d
            })
            .collect();
        let mut prev = BigInt::one();
        let mut r = 0;
        let mut pivots = Vec::new();
        for c in 0..cols {
            if r == m.len() {
                break;
            }
            let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let (head, tail) = m.split_at_mut(r + 1);
            let pivot_row = &head[r];
            let pv = &pivot_row[c];
            for row in tail.iter_mut() {
                let f = std::mem::take(&mut row[c]);
                if f.is_zero() {
                    for x in row.iter_mut().skip(c + 1) {
                        if !x.is_zero() {
                            *x = exact_div(&*x * pv, &prev);
                        }
                    }
                    continue;
                }
                for (x, y) in row.iter_mut().zip(pivot_row).skip(c + 1) {
                    *x = exact_div(&*x * pv - &f * y, &prev);
                }
            }
            prev = m[r][c].clone();
            pivots.push(c);
            r += 1;
        }
        m.truncate(r);
        Self {
            cols,
            echelon: pivots.into_iter().zip(m).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.echelon.len()
    }

    /// Back substitution: one kernel vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let mut is_pivot = vec![false; self.cols];
        for (p, _) in &self.echelon {
            is_pivot[*p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut x = vec![Rational::zero(); self.cols];
                x[f] = Rational::one();
                for (p, row) in self.echelon.iter().rev() {
                    let s = row
                        .iter()
                        .enumerate()
                        .skip(p + 1)
                        .filter(|(_, v)| !v.is_zero())
                        .fold(Rational::zero(), |acc, (j, v)| {
                            acc + Rational::from_integer(v.clone()) * &x[j]
                        });
                    x[*p] = -s / Rational::from_integer(row[*p].clone());
                }
                x
            })
            .collect()
    }
}
