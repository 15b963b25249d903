//! The Cayley-Klein quasi-unitary families `su_ω(N+1)` and `u_ω(N+1)`.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{CkMeta, LieAlgebra, SparseVec};
use crate::error::{Error, Result};
use crate::generator::{CkBasis, Generator};
use crate::omega::OmegaVector;
use crate::rational::{self, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Su,
    U,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Su => "su",
            Family::U => "u",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "su" => Ok(Family::Su),
            "u" => Ok(Family::U),
            other => Err(Error::Parse(format!(
                "unknown family `{other}` (expected su or u)"
            ))),
        }
    }
}

/// Multiplicity of `M_ab` in `[J_ab, B_l]`, expanded case by case.
///
/// `l = a` gives -1, `l = a+1` gives +1 (or +2 when `b = a+1`), `l = b` gives
/// +1, `l = b+1` gives -1, everything else 0.
pub fn b_selector(a: usize, b: usize, l: usize) -> i64 {
    debug_assert!(a < b);
    if l == a {
        -1
    } else if l == a + 1 {
        if b == a + 1 {
            2
        } else {
            1
        }
    } else if l == b {
        1
    } else if l == b + 1 {
        -1
    } else {
        0
    }
}

/// Compact Kronecker form `δ_{a,l-1} - δ_{b,l-1} + δ_{bl} - δ_{al}`.
pub fn b_selector_delta(a: usize, b: usize, l: usize) -> i64 {
    let d = |x: usize, y: usize| i64::from(x == y);
    let lm1 = l.wrapping_sub(1);
    d(a, lm1) - d(b, lm1) + d(b, l) - d(a, l)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    J,
    M,
}

#[derive(Clone, Copy)]
enum Config {
    /// `(xy, xz)`
    Left,
    /// `(xy, yz)`
    Middle,
    /// `(xz, yz)`
    Right,
}

fn pair_of(g: Generator) -> Option<(Kind, usize, usize)> {
    match g {
        Generator::J(a, b) => Some((Kind::J, a, b)),
        Generator::M(a, b) => Some((Kind::M, a, b)),
        _ => None,
    }
}

/// The three-index rows of the bracket table, `x < y < z`, with the pair in
/// first position listed first in `config`.
fn three_index(
    first: Kind,
    second: Kind,
    config: Config,
    x: usize,
    y: usize,
    z: usize,
    w: &OmegaVector,
) -> (Rational, Generator) {
    use Kind::{J, M};
    match config {
        Config::Left => {
            let c = w.prod(x, y);
            match (first, second) {
                (J, J) | (M, M) => (c, Generator::J(y, z)),
                (J, M) => (c, Generator::M(y, z)),
                (M, J) => (-c, Generator::M(y, z)),
            }
        }
        Config::Middle => match (first, second) {
            (J, J) => (rational::int(-1), Generator::J(x, z)),
            (M, M) => (rational::int(1), Generator::J(x, z)),
            (J, M) | (M, J) => (rational::int(-1), Generator::M(x, z)),
        },
        Config::Right => {
            let c = w.prod(y, z);
            match (first, second) {
                (J, J) | (M, M) => (c, Generator::J(x, y)),
                (J, M) => (-c, Generator::M(x, y)),
                (M, J) => (c, Generator::M(x, y)),
            }
        }
    }
}

fn pair_bracket(
    x: (Kind, usize, usize),
    y: (Kind, usize, usize),
    w: &OmegaVector,
) -> Vec<(Generator, Rational)> {
    let (kx, a, b) = x;
    let (ky, c, d) = y;
    if (a, b) == (c, d) {
        let sign = match (kx, ky) {
            (Kind::J, Kind::M) => -2,
            (Kind::M, Kind::J) => 2,
            _ => return Vec::new(),
        };
        let coef = rational::int(sign) * w.prod(a, b);
        if coef.is_zero() {
            return Vec::new();
        }
        return (a + 1..=b)
            .map(|s| (Generator::B(s), coef.clone()))
            .collect();
    }
    let mut idx = [a, b, c, d];
    idx.sort_unstable();
    let distinct: Vec<usize> = {
        let mut v = idx.to_vec();
        v.dedup();
        v
    };
    if distinct.len() != 3 {
        return Vec::new();
    }
    let (p, q, r) = (distinct[0], distinct[1], distinct[2]);
    // Which configuration is (a,b),(c,d), and is X the table's first pair?
    let (config, x_first) = match ((a, b), (c, d)) {
        (f, s) if f == (p, q) && s == (p, r) => (Config::Left, true),
        (f, s) if f == (p, r) && s == (p, q) => (Config::Left, false),
        (f, s) if f == (p, q) && s == (q, r) => (Config::Middle, true),
        (f, s) if f == (q, r) && s == (p, q) => (Config::Middle, false),
        (f, s) if f == (p, r) && s == (q, r) => (Config::Right, true),
        (f, s) if f == (q, r) && s == (p, r) => (Config::Right, false),
        _ => unreachable!("three distinct indices cover one of the configurations"),
    };
    let (coef, gen) = if x_first {
        three_index(kx, ky, config, p, q, r, w)
    } else {
        let (c, g) = three_index(ky, kx, config, p, q, r, w);
        (-c, g)
    };
    if coef.is_zero() {
        Vec::new()
    } else {
        vec![(gen, coef)]
    }
}

/// `[X, Y]` in the CK quasi-unitary algebra with parameters `w`.
pub fn ck_bracket(x: Generator, y: Generator, w: &OmegaVector) -> Vec<(Generator, Rational)> {
    match (pair_of(x), pair_of(y)) {
        (Some(px), Some(py)) => pair_bracket(px, py, w),
        (Some((k, a, b)), None) => match y {
            Generator::B(l) => {
                let s = b_selector(a, b, l);
                match (s, k) {
                    (0, _) => Vec::new(),
                    (s, Kind::J) => vec![(Generator::M(a, b), rational::int(s))],
                    (s, Kind::M) => vec![(Generator::J(a, b), rational::int(-s))],
                }
            }
            _ => Vec::new(),
        },
        (None, Some(_)) => ck_bracket(y, x, w)
            .into_iter()
            .map(|(g, c)| (g, -c))
            .collect(),
        (None, None) => Vec::new(),
    }
}

fn build(family: Family, n: usize, w: &OmegaVector) -> Result<LieAlgebra> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    if w.n() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: w.n(),
        });
    }
    let basis = CkBasis::new(n, family);
    let gens = basis.generators();
    let mut entries = Vec::new();
    for (i, &x) in gens.iter().enumerate() {
        for (j, &y) in gens.iter().enumerate().skip(i + 1) {
            for (g, c) in ck_bracket(x, y, w) {
                entries.push((i, j, basis.idx(g), c));
            }
        }
    }
    Ok(
        LieAlgebra::from_entries(basis.len(), entries)?.with_meta(Some(CkMeta {
            family,
            omega: w.clone(),
        })),
    )
}

/// `su_ω(N+1)`, of dimension `(N+1)² - 1`.
pub fn build_su_omega(n: usize, w: &OmegaVector) -> Result<LieAlgebra> {
    build(Family::Su, n, w)
}

/// `u_ω(N+1) = su_ω(N+1) ⊕ ⟨I⟩`, of dimension `(N+1)²`.
pub fn build_u_omega(n: usize, w: &OmegaVector) -> Result<LieAlgebra> {
    build(Family::U, n, w)
}

pub fn build_family(family: Family, n: usize, w: &OmegaVector) -> Result<LieAlgebra> {
    build(family, n, w)
}

/// Basis of a CK algebra, or `NotCayleyKlein` for generic input.
pub fn basis_of(g: &LieAlgebra) -> Result<CkBasis> {
    let meta = g.meta().ok_or(Error::NotCayleyKlein)?;
    Ok(CkBasis::new(meta.omega.n(), meta.family))
}

/// Coefficients of the Cartan generator `G_a` over `B_1..B_N`:
/// `s/a` for `s < a`, `1` at `s = a`, `(N+1-s)/(N+1-a)` for `s > a`.
pub fn cartan_g(n: usize, a: usize) -> Result<Vec<Rational>> {
    if a == 0 || a > n {
        return Err(Error::IndexOutOfRange {
            index: a,
            expected: format!("1..={n}"),
        });
    }
    Ok((1..=n)
        .map(|s| {
            if s < a {
                rational::ratio(s as i64, a as i64)
            } else if s == a {
                rational::one()
            } else {
                rational::ratio((n + 1 - s) as i64, (n + 1 - a) as i64)
            }
        })
        .collect())
}

/// `G_a` as a sparse element of `basis`.
pub fn cartan_g_element(basis: &CkBasis, a: usize) -> Result<SparseVec> {
    Ok(cartan_g(basis.n(), a)?
        .into_iter()
        .enumerate()
        .map(|(s, c)| (basis.idx(Generator::B(s + 1)), c))
        .collect())
}

/// Generators `{J_ij, M_ij : i < a ≤ j}`: an abelian ideal of dimension
/// `2a(N+1-a)` when `ω_a = 0`.
pub fn split_ideal(n: usize, a: usize) -> Vec<Generator> {
    let pairs: Vec<(usize, usize)> = (0..a).flat_map(|i| (a..=n).map(move |j| (i, j))).collect();
    pairs
        .iter()
        .map(|&(i, j)| Generator::J(i, j))
        .chain(pairs.iter().map(|&(i, j)| Generator::M(i, j)))
        .collect()
}

/// Whether the listed generators close a subalgebra of the CK algebra `g`.
pub fn subalgebra_closure_check(g: &LieAlgebra, gens: &[Generator]) -> Result<bool> {
    let basis = basis_of(g)?;
    let indices = gens
        .iter()
        .map(|&x| basis.index_of(x))
        .collect::<Result<Vec<_>>>()?;
    Ok(g.closes(&indices))
}

/// A linear map sending each basis element to `±` another basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedPermutation {
    target: Vec<usize>,
    sign: Vec<i8>,
}

impl SignedPermutation {
    pub fn identity(dim: usize) -> Self {
        Self {
            target: (0..dim).collect(),
            sign: vec![1; dim],
        }
    }

    pub fn new(target: Vec<usize>, sign: Vec<i8>) -> Self {
        assert_eq!(target.len(), sign.len());
        Self { target, sign }
    }

    pub fn dim(&self) -> usize {
        self.target.len()
    }

    /// `X_i ↦ sign(i) X_{target(i)}`.
    pub fn image(&self, i: usize) -> (i8, usize) {
        (self.sign[i], self.target[i])
    }

    pub fn signs(&self) -> &[i8] {
        &self.sign
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SignedPermutation) -> Self {
        let (target, sign) = (0..other.dim())
            .map(|i| {
                let (s1, t1) = other.image(i);
                let (s2, t2) = self.image(t1);
                (t2, s1 * s2)
            })
            .unzip();
        Self { target, sign }
    }

    /// Structure constants of `g` pushed through the map:
    /// `[φX_i, φX_j] := φ[X_i, X_j]`.
    pub fn transport(&self, g: &LieAlgebra) -> Result<LieAlgebra> {
        if self.dim() != g.dim() {
            return Err(Error::DimensionMismatch {
                expected: g.dim(),
                got: self.dim(),
            });
        }
        LieAlgebra::from_entries(
            g.dim(),
            g.entries().into_iter().map(|(i, j, k, c)| {
                let s = i64::from(self.sign[i] * self.sign[j] * self.sign[k]);
                (
                    self.target[i],
                    self.target[j],
                    self.target[k],
                    c * rational::int(s),
                )
            }),
        )
    }

    /// True iff the map preserves every bracket of `g`.
    pub fn is_automorphism_of(&self, g: &LieAlgebra) -> Result<bool> {
        Ok(self.transport(g)?.entries() == g.entries())
    }
}

/// `J_ab ↦ -J_{N-b,N-a}`, `M_ab ↦ -M_{N-b,N-a}`, `B_l ↦ B_{N+1-l}`, `I ↦ I`:
/// an isomorphism `su_{ω_1..ω_N}(N+1) → su_{ω_N..ω_1}(N+1)`.
pub fn polarity_map(n: usize, family: Family) -> SignedPermutation {
    let basis = CkBasis::new(n, family);
    let (target, sign) = basis
        .generators()
        .iter()
        .map(|&g| {
            let (s, image) = match g {
                Generator::J(a, b) => (-1, Generator::J(n - b, n - a)),
                Generator::M(a, b) => (-1, Generator::M(n - b, n - a)),
                Generator::B(l) => (1, Generator::B(n + 1 - l)),
                Generator::I => (1, Generator::I),
            };
            (basis.idx(image), s)
        })
        .unzip();
    SignedPermutation { target, sign }
}

/// The grading involution `S_𝒮` for a subset `subset ⊆ {0..N}`: sign
/// `(-1)^{χ(a)+χ(b)}` on `J_ab`, `M_ab`, identity on `B_l` and `I`.
pub fn involution_automorphism(g: &LieAlgebra, subset: &[usize]) -> Result<SignedPermutation> {
    let basis = basis_of(g)?;
    if let Some(&bad) = subset.iter().find(|&&s| s > basis.n()) {
        return Err(Error::IndexOutOfRange {
            index: bad,
            expected: format!("0..={}", basis.n()),
        });
    }
    let chi = |a: usize| subset.contains(&a) as u8;
    let sign = basis
        .generators()
        .iter()
        .map(|&x| match x {
            Generator::J(a, b) | Generator::M(a, b) => {
                if (chi(a) + chi(b)) % 2 == 0 {
                    1
                } else {
                    -1
                }
            }
            _ => 1,
        })
        .collect();
    Ok(SignedPermutation {
        target: (0..basis.len()).collect(),
        sign,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn w(v: &[i64]) -> OmegaVector {
        OmegaVector::from_ints(v).unwrap()
    }

    #[test]
    fn selector_table_matches_delta_formula() {
        for n in 1..=7 {
            for a in 0..=n {
                for b in a + 1..=n {
                    for l in 1..=n {
                        assert_eq!(
                            b_selector(a, b, l),
                            b_selector_delta(a, b, l),
                            "a={a} b={b} l={l}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn su2_brackets() {
        let g = build_su_omega(1, &w(&[1])).unwrap();
        assert_eq!(g.dim(), 3);
        // J_01 = 0, M_01 = 1, B_1 = 2
        assert_eq!(g.bracket(0, 1), vec![(2, int(-2))]);
        assert_eq!(g.bracket(0, 2), vec![(1, int(2))]);
        assert_eq!(g.bracket(1, 2), vec![(0, int(-2))]);
    }

    #[test]
    fn su3_table_rows() {
        let omega = w(&[3, 5]);
        let b = CkBasis::new(2, Family::Su);
        let g = build_su_omega(2, &omega).unwrap();
        let br = |x, y| {
            g.bracket(b.idx(x), b.idx(y))
                .into_iter()
                .map(|(k, c)| (b.generator(k), c))
                .collect::<Vec<_>>()
        };
        use Generator::{B, J, M};
        assert_eq!(br(J(0, 1), J(0, 2)), vec![(J(1, 2), int(3))]);
        assert_eq!(br(J(0, 1), J(1, 2)), vec![(J(0, 2), int(-1))]);
        assert_eq!(br(J(0, 2), J(1, 2)), vec![(J(0, 1), int(5))]);
        assert_eq!(br(M(0, 1), M(1, 2)), vec![(J(0, 2), int(1))]);
        assert_eq!(br(J(0, 2), M(1, 2)), vec![(M(0, 1), int(-5))]);
        assert_eq!(br(M(0, 1), J(0, 2)), vec![(M(1, 2), int(-3))]);
        assert_eq!(br(M(0, 2), J(1, 2)), vec![(M(0, 1), int(5))]);
        assert_eq!(br(J(0, 2), B(1)), vec![(M(0, 2), int(1))]);
        assert_eq!(br(J(1, 2), B(1)), vec![(M(1, 2), int(-1))]);
        assert_eq!(br(M(1, 2), B(2)), vec![(J(1, 2), int(-2))]);
        assert_eq!(
            br(J(0, 2), M(0, 2)),
            vec![(B(1), int(-30)), (B(2), int(-30))]
        );
        assert!(br(B(1), B(2)).is_empty());
    }

    #[test]
    fn flag_algebra_n3() {
        let g = build_su_omega(3, &w(&[0, 0, 0])).unwrap();
        let b = CkBasis::new(3, Family::Su);
        assert_eq!(g.dim(), 15);
        for (a, c) in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)] {
            assert!(g
                .bracket(b.idx(Generator::J(a, c)), b.idx(Generator::M(a, c)))
                .is_empty());
        }
        // Hand-expanded: with ω ≡ 0 only the ω-free rows survive.
        assert_eq!(
            g.bracket(b.idx(Generator::J(0, 1)), b.idx(Generator::J(1, 3))),
            vec![(b.idx(Generator::J(0, 3)), int(-1))]
        );
        assert!(g
            .bracket(b.idx(Generator::J(0, 1)), b.idx(Generator::J(0, 2)))
            .is_empty());
        assert!(g
            .bracket(b.idx(Generator::J(0, 3)), b.idx(Generator::J(2, 3)))
            .is_empty());
        assert_eq!(
            g.bracket(b.idx(Generator::M(1, 2)), b.idx(Generator::M(2, 3))),
            vec![(b.idx(Generator::J(1, 3)), int(1))]
        );
        for k in 1..=3 {
            for l in k + 1..=3 {
                assert!(g
                    .bracket(b.idx(Generator::B(k)), b.idx(Generator::B(l)))
                    .is_empty());
            }
        }
        assert!(g.jacobi_residual().is_zero());
    }

    #[test]
    fn u_family_extends_su() {
        let omega = w(&[1, -1, 1]);
        let su = build_su_omega(3, &omega).unwrap();
        let u = build_u_omega(3, &omega).unwrap();
        assert_eq!(u.dim(), 16);
        assert_eq!(su.entries(), u.entries());
        let i = u.dim() - 1;
        assert!((0..i).all(|k| u.bracket(k, i).is_empty()));
        assert_eq!(build_u_omega(2, &w(&[0, 1])).unwrap().dim(), 9);
        assert_eq!(build_u_omega(1, &w(&[1])).unwrap().dim(), 4);
    }

    #[test]
    fn length_mismatch() {
        assert!(matches!(
            build_su_omega(2, &w(&[1, 1, 1])),
            Err(Error::LengthMismatch {
                expected: 2,
                got: 3
            })
        ));
    }

    #[test]
    fn jacobi_zero_and_corruption_detected() {
        let g = build_su_omega(2, &w(&[1, 1])).unwrap();
        assert!(g.jacobi_residual().is_zero());
        assert!(build_u_omega(3, &w(&[0, 1, -1]))
            .unwrap()
            .jacobi_residual()
            .is_zero());
        let b = CkBasis::new(2, Family::Su);
        let (j01, j02) = (b.idx(Generator::J(0, 1)), b.idx(Generator::J(0, 2)));
        let corrupted = LieAlgebra::from_entries(
            g.dim(),
            g.entries().into_iter().map(|(i, j, k, c)| {
                if (i, j) == (j01, j02) {
                    (i, j, k, -c)
                } else {
                    (i, j, k, c)
                }
            }),
        )
        .unwrap();
        // (J_01, J_02, J_12) cannot see the flip: [J_12, J_12] = 0.
        let j12 = b.idx(Generator::J(1, 2));
        assert!(corrupted.jacobiator(j01, j02, j12).is_empty());
        let b1 = b.idx(Generator::B(1));
        let m12 = b.idx(Generator::M(1, 2));
        assert_eq!(corrupted.jacobiator(j01, j02, b1), vec![(m12, int(2))]);
        assert!(!corrupted.jacobi_residual().is_zero());
    }

    #[test]
    fn cartan_generators() {
        assert_eq!(cartan_g(2, 1).unwrap(), vec![int(1), rational::ratio(1, 2)]);
        assert_eq!(cartan_g(2, 2).unwrap(), vec![rational::ratio(1, 2), int(1)]);
        assert!(cartan_g(2, 0).is_err());
        assert!(cartan_g(2, 3).is_err());
    }

    #[test]
    fn cartan_generator_centralizes_blocks() {
        for omega in OmegaVector::all_signs(3) {
            let g = build_su_omega(3, &omega).unwrap();
            let basis = CkBasis::new(3, Family::Su);
            for a in 1..=3 {
                let ga = cartan_g_element(&basis, a).unwrap();
                for (idx, &x) in basis.generators().iter().enumerate() {
                    let in_upper = match x {
                        Generator::J(i, j) | Generator::M(i, j) => j < a || i >= a,
                        Generator::B(l) => l != a,
                        Generator::I => true,
                    };
                    if in_upper {
                        assert!(
                            g.bracket_vectors(&ga, &[(idx, int(1))]).is_empty(),
                            "G_{a} vs {x} at {omega}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn split_ideal_closure() {
        for n in 1..=4 {
            for a in 1..=n {
                let t = split_ideal(n, a);
                assert_eq!(t.len(), 2 * a * (n + 1 - a));
                let mut values = vec![1i64; n];
                values[a - 1] = 0;
                let g = build_su_omega(n, &OmegaVector::from_ints(&values).unwrap()).unwrap();
                assert!(subalgebra_closure_check(&g, &t).unwrap());
                values[a - 1] = -1;
                let g = build_su_omega(n, &OmegaVector::from_ints(&values).unwrap()).unwrap();
                assert!(!subalgebra_closure_check(&g, &t).unwrap());
                let all = CkBasis::new(n, Family::Su).generators().to_vec();
                assert!(subalgebra_closure_check(&g, &all).unwrap());
            }
        }
    }

    #[test]
    fn closure_check_rejects_generic_algebra() {
        let g = LieAlgebra::abelian(3);
        assert!(matches!(
            subalgebra_closure_check(&g, &[Generator::B(1)]),
            Err(Error::NotCayleyKlein)
        ));
    }

    #[test]
    fn polarity_examples() {
        let g = build_su_omega(2, &w(&[0, 1])).unwrap();
        let p = polarity_map(2, Family::Su);
        assert_eq!(
            p.transport(&g).unwrap().entries(),
            build_su_omega(2, &w(&[1, 0])).unwrap().entries()
        );
        let g = build_su_omega(3, &w(&[1, 1, 1])).unwrap();
        assert!(polarity_map(3, Family::Su).is_automorphism_of(&g).unwrap());
        let p = polarity_map(3, Family::U);
        let twice = p.compose(&p);
        assert_eq!(twice, SignedPermutation::identity(16));
    }

    #[test]
    fn involution_examples() {
        let g = build_su_omega(2, &w(&[1, 1])).unwrap();
        let id = SignedPermutation::identity(8);
        assert_eq!(involution_automorphism(&g, &[]).unwrap(), id);
        assert_eq!(involution_automorphism(&g, &[0, 1, 2]).unwrap(), id);
        let s0 = involution_automorphism(&g, &[0]).unwrap();
        let flipped: Vec<String> = (0..8)
            .filter(|&i| s0.signs()[i] == -1)
            .map(|i| CkBasis::new(2, Family::Su).generator(i).to_string())
            .collect();
        assert_eq!(flipped, ["J_01", "J_02", "M_01", "M_02"]);
        assert!(s0.is_automorphism_of(&g).unwrap());
        assert!(involution_automorphism(&g, &[3]).is_err());
        assert!(involution_automorphism(&LieAlgebra::abelian(2), &[0]).is_err());
    }
}
