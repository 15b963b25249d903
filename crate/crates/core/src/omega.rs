use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// The contraction parameters `ω_1..ω_N` of a Cayley-Klein family member.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OmegaVector {
    #[serde(with = "serde_omega")]
    omega: Vec<Rational>,
}

impl OmegaVector {
    pub fn new(omega: Vec<Rational>) -> Result<Self> {
        if omega.is_empty() {
            return Err(Error::ZeroRank);
        }
        Ok(Self { omega })
    }

    pub fn from_ints(values: &[i64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| rational::int(v)).collect())
    }

    /// Parses a comma separated list of rationals or sign characters.
    pub fn parse(list: &str) -> Result<Self> {
        let values = list
            .split(',')
            .map(rational::parse)
            .collect::<Result<Vec<_>>>()?;
        Self::new(values)
    }

    /// `N`, the number of parameters.
    pub fn n(&self) -> usize {
        self.omega.len()
    }

    /// `ω_a` for `1 ≤ a ≤ N`.
    pub fn get(&self, a: usize) -> &Rational {
        assert!(
            a >= 1 && a <= self.n(),
            "omega index {a} out of 1..={}",
            self.n()
        );
        &self.omega[a - 1]
    }

    pub fn values(&self) -> &[Rational] {
        &self.omega
    }

    /// Two-index product `ω_ab = ω_{a+1}·…·ω_b`, with `ω_aa = 1`.
    pub fn product(&self, a: usize, b: usize) -> Result<Rational> {
        if a > b || b > self.n() {
            return Err(Error::IndexOutOfRange {
                index: if b > self.n() { b } else { a },
                expected: format!("0 <= a <= b <= {}", self.n()),
            });
        }
        Ok(self.prod(a, b))
    }

    /// Unchecked version of [`product`](Self::product) for internal use.
    pub(crate) fn prod(&self, a: usize, b: usize) -> Rational {
        debug_assert!(a <= b && b <= self.n());
        let mut acc = Rational::one();
        for w in &self.omega[a..b] {
            if w.is_zero() {
                return Rational::zero();
            }
            acc *= w;
        }
        acc
    }

    pub fn is_zero_at(&self, k: usize) -> bool {
        self.get(k).is_zero()
    }

    /// Indices `k` (1-based) with `ω_k = 0`.
    pub fn zero_indices(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&k| self.is_zero_at(k)).collect()
    }

    pub fn reversed(&self) -> Self {
        Self {
            omega: self.omega.iter().rev().cloned().collect(),
        }
    }

    /// Copy with `ω_k` set to zero.
    pub fn with_zero(&self, k: usize) -> Result<Self> {
        if k == 0 || k > self.n() {
            return Err(Error::IndexOutOfRange {
                index: k,
                expected: format!("1..={}", self.n()),
            });
        }
        let mut omega = self.omega.clone();
        omega[k - 1] = Rational::zero();
        Ok(Self { omega })
    }

    /// Sign-vector `(+,0,-)` rendering of the signs.
    pub fn sign_string(&self) -> String {
        let signs: Vec<String> = self
            .omega
            .iter()
            .map(|w| rational::sign_char(w).to_string())
            .collect();
        format!("({})", signs.join(","))
    }

    /// [`sign_string`](Self::sign_string) when every entry is -1, 0 or 1,
    /// otherwise the values, e.g. `(1/2,0,-3)`.
    pub fn notation(&self) -> String {
        if self.omega.iter().all(|w| w.is_zero() || w.abs().is_one()) {
            self.sign_string()
        } else {
            format!("({self})")
        }
    }

    /// Every vector in `{-1,0,1}^n`, in lexicographic order of the digits
    /// `-1 < 0 < 1`.
    pub fn all_signs(n: usize) -> Vec<Self> {
        let mut out = Vec::with_capacity(3usize.pow(n as u32));
        for mut code in 0..3usize.pow(n as u32) {
            let mut values = vec![0i64; n];
            for slot in values.iter_mut().rev() {
                *slot = (code % 3) as i64 - 1;
                code /= 3;
            }
            out.push(Self::from_ints(&values).expect("n > 0"));
        }
        out
    }
}

impl std::fmt::Display for OmegaVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.omega.iter().map(rational::to_short).collect();
        write!(f, "{}", parts.join(","))
    }
}

mod serde_omega {
    use serde::{de, Deserialize, Deserializer, Serializer};

    use crate::rational::{self, Rational};

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(rational::to_fraction))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|s| rational::parse(s).map_err(de::Error::custom))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn product_examples() {
        let w = OmegaVector::from_ints(&[2, 3, 5]).unwrap();
        assert_eq!(w.product(2, 2).unwrap(), int(1));
        assert_eq!(w.product(0, 3).unwrap(), int(30));
        let ones = OmegaVector::from_ints(&[1, 1, 1]).unwrap();
        assert_eq!(ones.product(0, 3).unwrap(), int(1));
        let z = OmegaVector::from_ints(&[1, 0, -1]).unwrap();
        assert_eq!(z.product(0, 3).unwrap(), int(0));
    }

    #[test]
    fn product_out_of_range() {
        let w = OmegaVector::from_ints(&[1, 1]).unwrap();
        assert!(w.product(0, 3).is_err());
        assert!(w.product(2, 1).is_err());
    }

    #[test]
    fn two_index_identities_exhaustive() {
        for n in 1..=6 {
            let w = OmegaVector::new(
                (1..=n)
                    .map(|k| int(k as i64 + 1) * int(if k % 2 == 0 { -1 } else { 1 }))
                    .collect(),
            )
            .unwrap();
            for a in 0..=n {
                assert_eq!(w.product(a, a).unwrap(), int(1));
                for b in a..=n {
                    for c in b..=n {
                        assert_eq!(
                            w.product(a, c).unwrap(),
                            w.product(a, b).unwrap() * w.product(b, c).unwrap()
                        );
                    }
                }
            }
            for a in 1..=n {
                assert_eq!(&w.product(a - 1, a).unwrap(), w.get(a));
            }
        }
    }

    #[test]
    fn sign_enumeration() {
        let all = OmegaVector::all_signs(3);
        assert_eq!(all.len(), 27);
        assert_eq!(all[0].sign_string(), "(-,-,-)");
        assert_eq!(all[26].sign_string(), "(+,+,+)");
    }

    #[test]
    fn parse_list() {
        let w = OmegaVector::parse("+,0,-,1/2").unwrap();
        assert_eq!(
            w.values(),
            &[int(1), int(0), int(-1), crate::rational::ratio(1, 2)]
        );
        assert_eq!(w.to_string(), "1,0,-1,1/2");
    }
}
