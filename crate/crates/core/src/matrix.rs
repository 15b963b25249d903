//! Exact complex matrices and the fundamental realization of the CK algebras.

use std::ops::{Add, Mul, Sub};

use num_traits::Zero;

use crate::ck::Family;
use crate::error::{Error, Result};
use crate::generator::{CkBasis, Generator};
use crate::omega::OmegaVector;
use crate::rational::{self, Rational};

/// Square matrix over `ℚ(i)`, stored as real and imaginary parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexMatrix {
    size: usize,
    re: Vec<Rational>,
    im: Vec<Rational>,
}

impl ComplexMatrix {
    pub fn zero(size: usize) -> Self {
        Self {
            size,
            re: vec![Rational::zero(); size * size],
            im: vec![Rational::zero(); size * size],
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn re(&self, r: usize, c: usize) -> &Rational {
        &self.re[r * self.size + c]
    }

    pub fn im(&self, r: usize, c: usize) -> &Rational {
        &self.im[r * self.size + c]
    }

    pub fn add_entry(&mut self, r: usize, c: usize, re: Rational, im: Rational) {
        self.re[r * self.size + c] += re;
        self.im[r * self.size + c] += im;
    }

    /// Real diagonal matrix.
    pub fn diagonal(values: &[Rational]) -> Self {
        let mut m = Self::zero(values.len());
        for (i, v) in values.iter().enumerate() {
            m.re[i * m.size + i] = v.clone();
        }
        m
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Self {
            size: self.size,
            re: self.re.iter().map(|x| x * q).collect(),
            im: self.im.iter().map(|x| x * q).collect(),
        }
    }

    pub fn conj_transpose(&self) -> Self {
        let n = self.size;
        let mut out = Self::zero(n);
        for r in 0..n {
            for c in 0..n {
                out.re[c * n + r] = self.re[r * n + c].clone();
                out.im[c * n + r] = -&self.im[r * n + c];
            }
        }
        out
    }

    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    pub fn trace(&self) -> (Rational, Rational) {
        let n = self.size;
        (0..n).fold((Rational::zero(), Rational::zero()), |(re, im), i| {
            (re + &self.re[i * n + i], im + &self.im[i * n + i])
        })
    }

    pub fn is_zero(&self) -> bool {
        self.re.iter().chain(&self.im).all(Zero::is_zero)
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.size, rhs.size);
        ComplexMatrix {
            size: self.size,
            re: self.re.iter().zip(&rhs.re).map(|(a, b)| a + b).collect(),
            im: self.im.iter().zip(&rhs.im).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.size, rhs.size);
        ComplexMatrix {
            size: self.size,
            re: self.re.iter().zip(&rhs.re).map(|(a, b)| a - b).collect(),
            im: self.im.iter().zip(&rhs.im).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.size, rhs.size);
        let n = self.size;
        let mut out = ComplexMatrix::zero(n);
        for r in 0..n {
            for k in 0..n {
                let (ar, ai) = (&self.re[r * n + k], &self.im[r * n + k]);
                if ar.is_zero() && ai.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let (br, bi) = (&rhs.re[k * n + c], &rhs.im[k * n + c]);
                    if br.is_zero() && bi.is_zero() {
                        continue;
                    }
                    out.re[r * n + c] += ar * br - ai * bi;
                    out.im[r * n + c] += ar * bi + ai * br;
                }
            }
        }
        out
    }
}

/// `𝕀_ω = diag(1, ω_01, …, ω_0N)`.
pub fn metric_matrix(w: &OmegaVector) -> ComplexMatrix {
    let values: Vec<Rational> = (0..=w.n()).map(|i| w.prod(0, i)).collect();
    ComplexMatrix::diagonal(&values)
}

/// The fundamental `(N+1)×(N+1)` realization, in canonical generator order:
/// `J_ab = -ω_ab e_ab + e_ba`, `M_ab = i(ω_ab e_ab + e_ba)`,
/// `B_l = i(e_{l-1,l-1} - e_ll)`, `I = i Σ e_aa`.
pub fn fundamental_matrices(
    n: usize,
    w: &OmegaVector,
    family: Family,
) -> Result<Vec<(Generator, ComplexMatrix)>> {
    if w.n() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: w.n(),
        });
    }
    let size = n + 1;
    let basis = CkBasis::new(n, family);
    let z = Rational::zero;
    Ok(basis
        .generators()
        .iter()
        .map(|&g| {
            let mut m = ComplexMatrix::zero(size);
            match g {
                Generator::J(a, b) => {
                    m.add_entry(a, b, -w.prod(a, b), z());
                    m.add_entry(b, a, rational::one(), z());
                }
                Generator::M(a, b) => {
                    m.add_entry(a, b, z(), w.prod(a, b));
                    m.add_entry(b, a, z(), rational::one());
                }
                Generator::B(l) => {
                    m.add_entry(l - 1, l - 1, z(), rational::one());
                    m.add_entry(l, l, z(), -rational::one());
                }
                Generator::I => {
                    for a in 0..size {
                        m.add_entry(a, a, z(), rational::one());
                    }
                }
            }
            (g, m)
        })
        .collect())
}

/// `X†𝕀_ω + 𝕀_ω X`.
pub fn isometry_defect(x: &ComplexMatrix, metric: &ComplexMatrix) -> ComplexMatrix {
    &(&x.conj_transpose() * metric) + &(metric * x)
}
