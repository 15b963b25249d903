use std::fmt;

use serde::Serialize;

use crate::ck::Family;
use crate::omega::OmegaVector;

/// A non-trivial extension coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum Label {
    Alpha { k: usize },
    Beta { k: usize, l: usize },
    Gamma { k: usize },
}

impl Label {
    /// Type II or III.
    pub fn type_number(self) -> u8 {
        match self {
            Label::Alpha { .. } => 2,
            _ => 3,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Label::Alpha { k } => write!(f, "α_{k}"),
            Label::Gamma { k } => write!(f, "γ_{k}"),
            Label::Beta { k, l } if k < 10 && l < 10 => write!(f, "β_{k}{l}"),
            Label::Beta { k, l } => write!(f, "β_{{{k},{l}}}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtensionClassification {
    pub family: Family,
    pub omega: OmegaVector,
    pub n_zero: usize,
    /// `η_ab`, `τ_ab`: always coboundaries.
    pub type1_count: usize,
    /// `α_k` with `ω_k ≠ 0`: pseudo-extensions.
    pub type2_trivial: Vec<usize>,
    pub type2_nontrivial: Vec<usize>,
    pub type3_beta_allowed: Vec<(usize, usize)>,
    pub type3_gamma_allowed: Vec<usize>,
    pub dim_h2_formula: usize,
}

impl ExtensionClassification {
    /// Non-trivial coefficients: `α` first, then `β`, then `γ`.
    pub fn labels(&self) -> Vec<Label> {
        let alpha = self.type2_nontrivial.iter().map(|&k| Label::Alpha { k });
        let beta = self
            .type3_beta_allowed
            .iter()
            .map(|&(k, l)| Label::Beta { k, l });
        let gamma = self.type3_gamma_allowed.iter().map(|&k| Label::Gamma { k });
        alpha.chain(beta).chain(gamma).collect()
    }

    pub fn type2_count(&self) -> usize {
        self.type2_nontrivial.len()
    }

    pub fn type3_count(&self) -> usize {
        self.type3_beta_allowed.len() + self.type3_gamma_allowed.len()
    }
}

/// `n(n+1)/2` for `su`, `n(n+3)/2` for `u`, with `n` the number of zero `ω_k`.
pub fn dim_h2_formula(family: Family, w: &OmegaVector) -> usize {
    let n = w.zero_indices().len();
    match family {
        Family::Su => n * (n + 1) / 2,
        Family::U => n * (n + 3) / 2,
    }
}

pub fn classify(family: Family, w: &OmegaVector) -> ExtensionClassification {
    let zeros = w.zero_indices();
    let big_n = w.n();
    let type3_beta_allowed = zeros
        .iter()
        .enumerate()
        .flat_map(|(i, &k)| zeros[i + 1..].iter().map(move |&l| (k, l)))
        .collect();
    ExtensionClassification {
        family,
        omega: w.clone(),
        n_zero: zeros.len(),
        type1_count: big_n * (big_n + 1),
        type2_trivial: (1..=big_n).filter(|&k| !w.is_zero_at(k)).collect(),
        type3_gamma_allowed: match family {
            Family::U => zeros.clone(),
            Family::Su => Vec::new(),
        },
        type2_nontrivial: zeros,
        type3_beta_allowed,
        dim_h2_formula: dim_h2_formula(family, w),
    }
}
