use rayon::prelude::*;
use serde::Serialize;

use super::basic::{cocycle_from_basic, BasicCoefficients};
use super::classify::{classify, Label};
use crate::ck::{self, Family};
use crate::cohomology::{self, TwoCochain};
use crate::error::Result;
use crate::omega::OmegaVector;
use crate::rational::{self, Rational};

/// The cocycle with a single basic coefficient equal to one. Type II
/// cocycles exist for every `ω`; Type III ones only where admissible.
pub fn generator_cocycle(family: Family, w: &OmegaVector, label: Label) -> Result<TwoCochain> {
    let mut c = BasicCoefficients::default();
    match label {
        Label::Alpha { k } => c.set_alpha(k, rational::one()),
        Label::Beta { k, l } => c.set_beta(k, l, rational::one()),
        Label::Gamma { k } => c.set_gamma(k, rational::one()),
    }
    cocycle_from_basic(family, w, &c)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorCheck {
    pub label: Label,
    pub expected_trivial: bool,
    pub is_coboundary: bool,
}

impl GeneratorCheck {
    pub fn ok(&self) -> bool {
        self.expected_trivial == self.is_coboundary
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub family: Family,
    pub omega: OmegaVector,
    pub dim_z2: usize,
    pub dim_b2: usize,
    pub dim_h2: usize,
    pub dim_h2_formula: usize,
    pub generators: Vec<GeneratorCheck>,
    /// The non-trivial generator cocycles are independent modulo `B²` and as
    /// many as `dim H²`, hence a basis of `H²`.
    pub spans_h2: bool,
}

impl TheoremReport {
    pub fn dims_match(&self) -> bool {
        self.dim_h2 == self.dim_h2_formula
    }

    pub fn ok(&self) -> bool {
        self.dims_match() && self.spans_h2 && self.generators.iter().all(GeneratorCheck::ok)
    }
}

/// Solves `H²` of the CK algebra generically and compares it with the
/// classification.
pub fn verify_theorem(family: Family, n: usize, w: &OmegaVector) -> Result<TheoremReport> {
    let g = ck::build_family(family, n, w)?;
    let h = cohomology::h2(&g)?;
    let class = classify(family, w);

    let mut generators = Vec::new();
    let mut nontrivial = Vec::new();
    let type2 = (1..=n).map(|k| Label::Alpha { k });
    let type3 = class.labels().into_iter().filter(|l| l.type_number() == 3);
    for label in type2.chain(type3) {
        let xi = generator_cocycle(family, w, label)?;
        let is_coboundary = cohomology::is_coboundary(&g, &xi)?.is_some();
        let expected_trivial = !class.labels().contains(&label);
        if !expected_trivial {
            nontrivial.push(xi);
        }
        generators.push(GeneratorCheck {
            label,
            expected_trivial,
            is_coboundary,
        });
    }

    let delta = cohomology::coboundary_matrix(&g).transpose();
    let mut stacked = delta.clone();
    for xi in &nontrivial {
        let row: Vec<(usize, Rational)> = xi
            .to_vector()
            .into_iter()
            .enumerate()
            .filter(|(_, v)| !num_traits::Zero::is_zero(v))
            .collect();
        stacked.push_row(row);
    }
    let spans_h2 =
        stacked.rank() - delta.rank() == nontrivial.len() && nontrivial.len() == h.dim_h2;

    Ok(TheoremReport {
        family,
        omega: w.clone(),
        dim_z2: h.dim_z2,
        dim_b2: h.dim_b2,
        dim_h2: h.dim_h2,
        dim_h2_formula: class.dim_h2_formula,
        generators,
        spans_h2,
    })
}

/// [`verify_theorem`] for every sign vector in `{-1,0,1}^n`, in the order of
/// [`OmegaVector::all_signs`]. Runs on the current rayon pool.
pub fn verify_all_signs(family: Family, n: usize) -> Result<Vec<TheoremReport>> {
    OmegaVector::all_signs(n)
        .into_par_iter()
        .map(|w| verify_theorem(family, n, &w))
        .collect()
}
