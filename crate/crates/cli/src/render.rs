//! Text forms shared by several commands.

use ckcoh_core::extensions::BasicCoefficients;
use ckcoh_core::generator::CkBasis;
use ckcoh_core::rational::to_fraction;
use ckcoh_core::TwoCochain;
use serde_json::{json, Value};

/// `eta[0,2]=1/2 alpha[1]=1/1 …`, or `0` when every coefficient vanishes.
/// Keys and values match the JSON form of [`BasicCoefficients`].
pub fn basic_text(c: &BasicCoefficients) -> String {
    let mut parts = Vec::new();
    let pairs = [("eta", &c.eta), ("tau", &c.tau)];
    for (name, map) in pairs {
        parts.extend(
            map.iter()
                .map(|((a, b), v)| format!("{name}[{a},{b}]={}", to_fraction(v))),
        );
    }
    parts.extend(
        c.alpha
            .iter()
            .map(|(k, v)| format!("alpha[{k}]={}", to_fraction(v))),
    );
    parts.extend(
        c.beta
            .iter()
            .map(|((k, l), v)| format!("beta[{k},{l}]={}", to_fraction(v))),
    );
    parts.extend(
        c.gamma
            .iter()
            .map(|(k, v)| format!("gamma[{k}]={}", to_fraction(v))),
    );
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" ")
    }
}

/// Nonzero entries `ξ(X, Y)` with generator names, in index order.
pub fn cochain_entries(basis: &CkBasis, xi: &TwoCochain) -> Vec<(String, String, String)> {
    xi.entries()
        .map(|(i, j, v)| {
            (
                basis.generator(i).to_string(),
                basis.generator(j).to_string(),
                to_fraction(v),
            )
        })
        .collect()
}

pub fn cochain_json(basis: &CkBasis, xi: &TwoCochain) -> Value {
    cochain_entries(basis, xi)
        .into_iter()
        .map(|(x, y, v)| json!({ "x": x, "y": y, "value": v }))
        .collect()
}
