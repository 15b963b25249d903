//! Central extensions of the CK quasi-unitary families.
//!
//! Every two-cocycle of `su_ω(N+1)` / `u_ω(N+1)` is fixed by a handful of
//! basic coefficients:
//!
//! * Type I, `η_ab`, `τ_ab`: always coboundaries.
//! * Type II, `α_k`: non-trivial exactly when `ω_k = 0`.
//! * Type III, `β_kl` (needs `ω_k = ω_l = 0`) and, for `u`, `γ_k` (needs
//!   `ω_k = 0`): non-trivial whenever allowed.

mod basic;
mod classify;
mod contract;
mod table;
mod verify;

pub use basic::{
    build_extended, cocycle_from_basic, extract_basic, relation_violations, trivializing_cochain,
    BasicCoefficients, RelationViolation,
};
pub use classify::{classify, dim_h2_formula, ExtensionClassification, Label};
pub use contract::{contract, ContractionReport};
pub use table::{published_row_order, render_table, table, table_4_1, TableRow};
pub use verify::{
    generator_cocycle, verify_all_signs, verify_theorem, GeneratorCheck, TheoremReport,
};
