use serde::Serialize;

use super::classify::{classify, Label};
use crate::ck::Family;
use crate::error::{Error, Result};
use crate::omega::OmegaVector;

/// What happens to the extensions when `ω_k` is set to zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContractionReport {
    pub family: Family,
    pub index: usize,
    pub before: OmegaVector,
    pub after: OmegaVector,
    /// Pseudo-extensions that become non-trivial (`α_k`).
    pub became_nontrivial: Vec<Label>,
    /// Type III coefficients that become admissible.
    pub newly_allowed: Vec<Label>,
    pub dim_before: usize,
    pub dim_after: usize,
}

impl ContractionReport {
    pub fn is_noop(&self) -> bool {
        self.before == self.after
    }
}

/// Formula-level contraction `ω_k → 0`.
pub fn contract(family: Family, w: &OmegaVector, k: usize) -> Result<ContractionReport> {
    if k == 0 || k > w.n() {
        return Err(Error::IndexOutOfRange {
            index: k,
            expected: format!("1..={}", w.n()),
        });
    }
    let after = w.with_zero(k)?;
    let (old, new) = (classify(family, w), classify(family, &after));
    let old_labels = old.labels();
    let gained: Vec<Label> = new
        .labels()
        .into_iter()
        .filter(|l| !old_labels.contains(l))
        .collect();
    let (became_nontrivial, newly_allowed) = gained.into_iter().partition(|l| l.type_number() == 2);
    Ok(ContractionReport {
        family,
        index: k,
        before: w.clone(),
        after,
        became_nontrivial,
        newly_allowed,
        dim_before: old.dim_h2_formula,
        dim_after: new.dim_h2_formula,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(family: Family, w: &str, k: usize) -> ContractionReport {
        contract(family, &OmegaVector::parse(w).unwrap(), k).unwrap()
    }

    #[test]
    fn examples() {
        let r = run(Family::Su, "+,+", 1);
        assert_eq!((r.dim_before, r.dim_after), (0, 1));
        assert_eq!(r.became_nontrivial, vec![Label::Alpha { k: 1 }]);
        assert!(r.newly_allowed.is_empty());

        let r = run(Family::Su, "0,+", 2);
        assert_eq!((r.dim_before, r.dim_after), (1, 3));
        assert_eq!(r.became_nontrivial, vec![Label::Alpha { k: 2 }]);
        assert_eq!(r.newly_allowed, vec![Label::Beta { k: 1, l: 2 }]);

        let r = run(Family::U, "0,+", 2);
        assert_eq!(
            r.newly_allowed,
            vec![Label::Beta { k: 1, l: 2 }, Label::Gamma { k: 2 }]
        );
        assert_eq!((r.dim_before, r.dim_after), (2, 5));
    }

    #[test]
    fn idempotent_and_monotone() {
        let r = run(Family::Su, "0,+", 1);
        assert!(r.is_noop());
        assert!(r.became_nontrivial.is_empty() && r.newly_allowed.is_empty());
        for family in [Family::Su, Family::U] {
            for w in OmegaVector::all_signs(3) {
                for k in 1..=3 {
                    let r = contract(family, &w, k).unwrap();
                    assert!(r.dim_after >= r.dim_before);
                    let gained = r.became_nontrivial.len() + r.newly_allowed.len();
                    assert_eq!(r.dim_after - r.dim_before, gained);
                }
            }
        }
    }

    #[test]
    fn index_checked() {
        let w = OmegaVector::parse("+,+").unwrap();
        assert!(contract(Family::Su, &w, 0).is_err());
        assert!(contract(Family::Su, &w, 3).is_err());
    }
}
