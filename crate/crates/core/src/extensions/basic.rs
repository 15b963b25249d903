use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::LieAlgebra;
use crate::ck::{self, b_selector, Family};
use crate::cohomology::{self, OneCochain, TwoCochain};
use crate::error::{Error, Result};
use crate::generator::{CkBasis, Generator};
use crate::omega::OmegaVector;
use crate::rational::{self, Rational};

/// Basic extension coefficients. Missing entries are zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BasicCoefficients {
    pub eta: BTreeMap<(usize, usize), Rational>,
    pub tau: BTreeMap<(usize, usize), Rational>,
    pub alpha: BTreeMap<usize, Rational>,
    pub beta: BTreeMap<(usize, usize), Rational>,
    pub gamma: BTreeMap<usize, Rational>,
}

fn read<K: Ord>(m: &BTreeMap<K, Rational>, k: &K) -> Rational {
    m.get(k).cloned().unwrap_or_else(Rational::zero)
}

fn put<K: Ord>(m: &mut BTreeMap<K, Rational>, k: K, v: Rational) {
    if v.is_zero() {
        m.remove(&k);
    } else {
        m.insert(k, v);
    }
}

impl BasicCoefficients {
    pub fn eta(&self, a: usize, b: usize) -> Rational {
        read(&self.eta, &(a, b))
    }

    pub fn tau(&self, a: usize, b: usize) -> Rational {
        read(&self.tau, &(a, b))
    }

    pub fn alpha(&self, k: usize) -> Rational {
        read(&self.alpha, &k)
    }

    pub fn beta(&self, k: usize, l: usize) -> Rational {
        read(&self.beta, &(k, l))
    }

    pub fn gamma(&self, k: usize) -> Rational {
        read(&self.gamma, &k)
    }

    pub fn set_eta(&mut self, a: usize, b: usize, v: Rational) {
        put(&mut self.eta, (a, b), v);
    }

    pub fn set_tau(&mut self, a: usize, b: usize, v: Rational) {
        put(&mut self.tau, (a, b), v);
    }

    pub fn set_alpha(&mut self, k: usize, v: Rational) {
        put(&mut self.alpha, k, v);
    }

    pub fn set_beta(&mut self, k: usize, l: usize, v: Rational) {
        put(&mut self.beta, (k, l), v);
    }

    pub fn set_gamma(&mut self, k: usize, v: Rational) {
        put(&mut self.gamma, k, v);
    }

    pub fn is_zero(&self) -> bool {
        self.eta.is_empty()
            && self.tau.is_empty()
            && self.alpha.is_empty()
            && self.beta.is_empty()
            && self.gamma.is_empty()
    }

    /// Drops the Type I part (`η`, `τ`).
    pub fn without_type1(&self) -> Self {
        Self {
            eta: BTreeMap::new(),
            tau: BTreeMap::new(),
            ..self.clone()
        }
    }

    /// Index ranges plus `ω_k β_kl = ω_l β_kl = 0` and `ω_k γ_k = 0`.
    pub fn validate(&self, family: Family, w: &OmegaVector) -> Result<()> {
        let n = w.n();
        let out = |what: String| Err(Error::Constraint(what));
        for &(a, b) in self.eta.keys().chain(self.tau.keys()) {
            if a >= b || b > n {
                return out(format!("η/τ index ({a},{b}) outside 0 <= a < b <= {n}"));
            }
        }
        for &k in self.alpha.keys() {
            if k == 0 || k > n {
                return out(format!("alpha_{k} outside 1..={n}"));
            }
        }
        for &(k, l) in self.beta.keys() {
            if k == 0 || k >= l || l > n {
                return out(format!("beta_{k}{l} outside 1 <= k < l <= {n}"));
            }
            if !w.get(k).is_zero() || !w.get(l).is_zero() {
                return out(format!(
                    "beta_{k}{l} != 0 requires omega_{k} = omega_{l} = 0"
                ));
            }
        }
        if family == Family::Su && !self.gamma.is_empty() {
            return out("gamma coefficients exist only for the u family".into());
        }
        for &k in self.gamma.keys() {
            if k == 0 || k > n {
                return out(format!("gamma_{k} outside 1..={n}"));
            }
            if !w.get(k).is_zero() {
                return out(format!("gamma_{k} != 0 requires omega_{k} = 0"));
            }
        }
        Ok(())
    }
}

type KeyedMap = BTreeMap<String, String>;

#[derive(Serialize, Deserialize, Default)]
struct BasicJson {
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    eta: KeyedMap,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    tau: KeyedMap,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    alpha: KeyedMap,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    beta: KeyedMap,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    gamma: KeyedMap,
}

fn pairs_out(m: &BTreeMap<(usize, usize), Rational>) -> KeyedMap {
    m.iter()
        .map(|((a, b), v)| (format!("{a},{b}"), rational::to_fraction(v)))
        .collect()
}

fn singles_out(m: &BTreeMap<usize, Rational>) -> KeyedMap {
    m.iter()
        .map(|(k, v)| (k.to_string(), rational::to_fraction(v)))
        .collect()
}

fn pairs_in(m: KeyedMap) -> Result<BTreeMap<(usize, usize), Rational>> {
    let mut out = BTreeMap::new();
    for (k, v) in m {
        let (a, b) = k
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("pair key `{k}` must be `a,b`")))?;
        let a = a
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad key `{k}`")))?;
        let b = b
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad key `{k}`")))?;
        put(&mut out, (a, b), rational::parse(&v)?);
    }
    Ok(out)
}

fn singles_in(m: KeyedMap) -> Result<BTreeMap<usize, Rational>> {
    let mut out = BTreeMap::new();
    for (k, v) in m {
        let k = k
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad key `{k}`")))?;
        put(&mut out, k, rational::parse(&v)?);
    }
    Ok(out)
}

/// JSON form: `{"eta": {"0,2": "1/2"}, "alpha": {"1": "1/1"}, ...}`.
impl Serialize for BasicCoefficients {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        BasicJson {
            eta: pairs_out(&self.eta),
            tau: pairs_out(&self.tau),
            alpha: singles_out(&self.alpha),
            beta: pairs_out(&self.beta),
            gamma: singles_out(&self.gamma),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BasicCoefficients {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = BasicJson::deserialize(d)?;
        let conv = || -> Result<Self> {
            Ok(Self {
                eta: pairs_in(j.eta)?,
                tau: pairs_in(j.tau)?,
                alpha: singles_in(j.alpha)?,
                beta: pairs_in(j.beta)?,
                gamma: singles_in(j.gamma)?,
            })
        };
        conv().map_err(serde::de::Error::custom)
    }
}

/// `ξ(J_ac, M_ac) = Σ_{s=a+1}^{c} ω_{a,s-1} ω_{s,c} α_s`.
fn jm_value(w: &OmegaVector, a: usize, c: usize, alpha: impl Fn(usize) -> Rational) -> Rational {
    (a + 1..=c).fold(Rational::zero(), |acc, s| {
        let a_s = alpha(s);
        if a_s.is_zero() {
            acc
        } else {
            acc + w.prod(a, s - 1) * w.prod(s, c) * a_s
        }
    })
}

/// The cocycle of the general extension with the given coefficients; no
/// constraint checks.
fn cocycle_unchecked(basis: &CkBasis, w: &OmegaVector, c: &BasicCoefficients) -> TwoCochain {
    use Generator::{B, I, J, M};
    let n = basis.n();
    let mut xi = TwoCochain::zero(basis.len());
    let mut set = |x: Generator, y: Generator, v: Rational| {
        if !v.is_zero() {
            xi.set(basis.idx(x), basis.idx(y), v);
        }
    };
    for x in 0..=n {
        for y in x + 1..=n {
            for z in y + 1..=n {
                // (xy, xz)
                let (e, t) = (c.eta(y, z), c.tau(y, z));
                let wxy = w.prod(x, y);
                set(J(x, y), J(x, z), &wxy * &e);
                set(M(x, y), M(x, z), &wxy * &e);
                set(J(x, y), M(x, z), &wxy * &t);
                set(M(x, y), J(x, z), -(&wxy * &t));
                // (xy, yz)
                let (e, t) = (c.eta(x, z), c.tau(x, z));
                set(J(x, y), J(y, z), -e.clone());
                set(M(x, y), M(y, z), e);
                set(J(x, y), M(y, z), -t.clone());
                set(M(x, y), J(y, z), -t);
                // (xz, yz)
                let (e, t) = (c.eta(x, y), c.tau(x, y));
                let wyz = w.prod(y, z);
                set(J(x, z), J(y, z), &wyz * &e);
                set(M(x, z), M(y, z), &wyz * &e);
                set(J(x, z), M(y, z), -(&wyz * &t));
                set(M(x, z), J(y, z), &wyz * &t);
            }
        }
    }
    for a in 0..=n {
        for b in a + 1..=n {
            let (e, t) = (c.eta(a, b), c.tau(a, b));
            for l in 1..=n {
                let s = rational::int(b_selector(a, b, l));
                set(J(a, b), B(l), &s * &t);
                set(M(a, b), B(l), -(&s * &e));
            }
            set(J(a, b), M(a, b), jm_value(w, a, b, |s| c.alpha(s)));
        }
    }
    for k in 1..=n {
        for l in k + 1..=n {
            set(B(k), B(l), c.beta(k, l));
        }
        if basis.family() == Family::U {
            set(B(k), I, c.gamma(k));
        }
    }
    xi
}

/// Cocycle of the general central extension determined by `coeffs`.
pub fn cocycle_from_basic(
    family: Family,
    w: &OmegaVector,
    coeffs: &BasicCoefficients,
) -> Result<TwoCochain> {
    coeffs.validate(family, w)?;
    Ok(cocycle_unchecked(&CkBasis::new(w.n(), family), w, coeffs))
}

/// The extended algebra with the central generator `Ξ` appended last.
pub fn build_extended(
    family: Family,
    n: usize,
    w: &OmegaVector,
    coeffs: &BasicCoefficients,
) -> Result<LieAlgebra> {
    if w.n() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: w.n(),
        });
    }
    let xi = cocycle_from_basic(family, w, coeffs)?;
    let g = ck::build_family(family, n, w)?;
    cohomology::central_extension(&g, &xi)
}

/// A cocycle entry that differs from the value forced by the extracted basic
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationViolation {
    pub relation: &'static str,
    pub x: Generator,
    pub y: Generator,
    pub found: Rational,
    pub expected: Rational,
}

impl std::fmt::Display for RelationViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}: xi({}, {}) = {} but expected {}",
            self.relation,
            self.x,
            self.y,
            rational::to_short(&self.found),
            rational::to_short(&self.expected)
        )
    }
}

fn relation_name(x: Generator, y: Generator) -> &'static str {
    use Generator::{B, I, J, M};
    let pair = |g: Generator| match g {
        J(a, b) | M(a, b) => Some((a, b)),
        _ => None,
    };
    match (x, y) {
        (B(_), B(_)) => "Type III constraint omega_k beta_kl = omega_l beta_kl = 0",
        (_, I) | (I, _) => "u-family relations xi(J,I) = xi(M,I) = 0, omega_k gamma_k = 0",
        (B(_), _) | (_, B(_)) => "B-column collapse / vanishing away from {a,a+1,b,b+1}",
        _ => {
            let ((a, b), (c, d)) = (pair(x).unwrap(), pair(y).unwrap());
            if (a, b) == (c, d) {
                "alpha recursion xi(J_ac,M_ac) = sum omega_{a,s-1} omega_{s,c} alpha_s"
            } else if a != c && a != d && b != c && b != d {
                "four-index vanishing"
            } else if b == c || d == a {
                "middle pattern -xi(J_ab,J_bc) = xi(M_ab,M_bc) = eta_ac, independent of b"
            } else if a == c {
                "first pattern xi(J_ab,J_ac) = xi(M_ab,M_ac) = omega_ab eta_bc"
            } else {
                "third pattern xi(J_ac,J_bc) = xi(M_ac,M_bc) = omega_bc eta_ab"
            }
        }
    }
}

/// Reads the basic coefficients off `xi` without any checks.
fn read_basic(basis: &CkBasis, xi: &TwoCochain) -> BasicCoefficients {
    use Generator::{B, I, J, M};
    let n = basis.n();
    let at = |x: Generator, y: Generator| xi.get(basis.idx(x), basis.idx(y));
    let mut c = BasicCoefficients::default();
    for a in 0..=n {
        for b in a + 1..=n {
            let (eta, tau) = if b >= a + 2 {
                (-at(J(a, a + 1), J(a + 1, b)), -at(J(a, a + 1), M(a + 1, b)))
            } else {
                // adjacent pair: read the B_{a+1} column, where the selector is 2
                let two = rational::int(2);
                (-at(M(a, b), B(a + 1)) / &two, at(J(a, b), B(a + 1)) / &two)
            };
            c.set_eta(a, b, eta);
            c.set_tau(a, b, tau);
        }
    }
    for k in 1..=n {
        c.set_alpha(k, at(J(k - 1, k), M(k - 1, k)));
        for l in k + 1..=n {
            c.set_beta(k, l, at(B(k), B(l)));
        }
        if basis.family() == Family::U {
            c.set_gamma(k, at(B(k), I));
        }
    }
    c
}

/// Every entry of `xi` that disagrees with the general solution of the
/// cocycle equations, parametrized by the coefficients read from `xi` itself.
pub fn relation_violations(g: &LieAlgebra, xi: &TwoCochain) -> Result<Vec<RelationViolation>> {
    let basis = ck::basis_of(g)?;
    let w = &g.meta().expect("CK meta").omega;
    if xi.dim() != g.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            got: xi.dim(),
        });
    }
    let mut coeffs = read_basic(&basis, xi);
    // inadmissible Type III values must be zero, so they are left out of the
    // expected cocycle
    coeffs
        .beta
        .retain(|&(k, l), _| w.is_zero_at(k) && w.is_zero_at(l));
    coeffs.gamma.retain(|&k, _| w.is_zero_at(k));
    let expected = cocycle_unchecked(&basis, w, &coeffs);
    let mut keys: Vec<(usize, usize)> = xi
        .entries()
        .map(|(i, j, _)| (i, j))
        .chain(expected.entries().map(|(i, j, _)| (i, j)))
        .collect();
    keys.sort_unstable();
    keys.dedup();
    Ok(keys
        .into_iter()
        .filter_map(|(i, j)| {
            let (found, want) = (xi.get(i, j), expected.get(i, j));
            (found != want).then(|| {
                let (x, y) = (basis.generator(i), basis.generator(j));
                RelationViolation {
                    relation: relation_name(x, y),
                    x,
                    y,
                    found,
                    expected: want,
                }
            })
        })
        .collect())
}

/// Basic coefficients of a cocycle of a CK algebra.
///
/// `η_ac = -ξ(J_{a,a+1}, J_{a+1,c})` and `τ_ac = -ξ(J_{a,a+1}, M_{a+1,c})` for
/// `c ≥ a+2`; adjacent pairs are read from the `B_{a+1}` column. Afterwards
/// the whole cocycle is compared against the general solution built from the
/// extracted values; any mismatch is an error.
pub fn extract_basic(g: &LieAlgebra, xi: &TwoCochain) -> Result<BasicCoefficients> {
    let basis = ck::basis_of(g)?;
    let violations = cohomology::cocycle_violations(g, xi)?;
    if violations > 0 {
        return Err(Error::NotCocycle { violations });
    }
    let found = relation_violations(g, xi)?;
    if let Some(first) = found.first() {
        return Err(Error::DerivedRelation(format!(
            "{first} ({} mismatches in total)",
            found.len()
        )));
    }
    let coeffs = read_basic(&basis, xi);
    let w = &g.meta().expect("CK meta").omega;
    coeffs.validate(basis.family(), w)?;
    Ok(coeffs)
}

/// `μ(B_s) = -α_s / (2ω_s)`, zero elsewhere: the one-cochain whose coboundary
/// is the Type II part of the extension.
pub fn trivializing_cochain(
    family: Family,
    w: &OmegaVector,
    alpha: &BTreeMap<usize, Rational>,
) -> Result<OneCochain> {
    let basis = CkBasis::new(w.n(), family);
    let mut mu = OneCochain::zero(basis.len());
    for (&s, a) in alpha {
        if s == 0 || s > w.n() {
            return Err(Error::IndexOutOfRange {
                index: s,
                expected: format!("1..={}", w.n()),
            });
        }
        if a.is_zero() {
            continue;
        }
        let ws = w.get(s);
        if ws.is_zero() {
            return Err(Error::NonTrivialTypeII(s));
        }
        mu.set(basis.idx(Generator::B(s)), -a / (rational::int(2) * ws));
    }
    Ok(mu)
}
