//! Property tests over random parameters, cochains and bases.

mod common;

use ckcoh_core::ck::{build_family, Family};
use ckcoh_core::cohomology::{h2, is_cocycle, OneCochain};
use ckcoh_core::extensions::{
    build_extended, cocycle_from_basic, dim_h2_formula, extract_basic, BasicCoefficients,
};
use ckcoh_core::rational::ratio;
use ckcoh_core::{OmegaVector, Rational, SparseMatrix};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rational() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| ratio(n, d))
}

fn omega(max_n: usize) -> impl Strategy<Value = OmegaVector> {
    prop::collection::vec(prop_oneof![Just(ratio(0, 1)), rational()], 1..=max_n)
        .prop_map(|v| OmegaVector::new(v).unwrap())
}

fn family() -> impl Strategy<Value = Family> {
    prop_oneof![Just(Family::Su), Just(Family::U)]
}

/// Admissible coefficients for `ω`, with arbitrary Type I part.
fn coefficients(family: Family, w: &OmegaVector, seed: &[Rational]) -> BasicCoefficients {
    let mut it = seed.iter().cycle();
    let mut next = || it.next().unwrap().clone();
    let n = w.n();
    let mut c = BasicCoefficients::default();
    for a in 0..=n {
        for b in a + 1..=n {
            c.set_eta(a, b, next());
            c.set_tau(a, b, next());
        }
    }
    for k in 1..=n {
        c.set_alpha(k, next());
        if family == Family::U && w.is_zero_at(k) {
            c.set_gamma(k, next());
        }
        for l in k + 1..=n {
            if w.is_zero_at(k) && w.is_zero_at(l) {
                c.set_beta(k, l, next());
            }
        }
    }
    c
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 48,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn solver_matches_formula_for_rational_omega(f in family(), w in omega(3)) {
        let g = build_family(f, w.n(), &w).unwrap();
        prop_assert!(g.jacobi_residual() == ratio(0, 1));
        prop_assert_eq!(h2(&g).unwrap().dim_h2, dim_h2_formula(f, &w));
    }

    #[test]
    fn basic_coefficients_round_trip(
        f in family(),
        w in omega(3),
        seed in prop::collection::vec(rational(), 1..12),
    ) {
        let c = coefficients(f, &w, &seed);
        let xi = cocycle_from_basic(f, &w, &c).unwrap();
        let g = build_family(f, w.n(), &w).unwrap();
        prop_assert!(is_cocycle(&g, &xi).unwrap());
        prop_assert_eq!(&extract_basic(&g, &xi).unwrap(), &c);
        let e = build_extended(f, w.n(), &w, &c).unwrap();
        prop_assert!(e.jacobi_residual() == ratio(0, 1));
    }

    #[test]
    fn coboundaries_are_cocycles(
        f in family(),
        w in omega(3),
        values in prop::collection::vec(rational(), 1..8),
    ) {
        let g = build_family(f, w.n(), &w).unwrap();
        let mu: Vec<Rational> = (0..g.dim()).map(|i| values[i % values.len()].clone()).collect();
        let xi = OneCochain::from_vector(&mu).coboundary(&g);
        prop_assert!(is_cocycle(&g, &xi).unwrap());
        // a coboundary only carries pseudo-extensions: α_k = -2 ω_k μ(B_k)
        let c = extract_basic(&g, &xi).unwrap();
        prop_assert!(c.beta.is_empty() && c.gamma.is_empty());
        prop_assert!(c.alpha.keys().all(|&k| !w.is_zero_at(k)));
    }

    #[test]
    fn sparse_and_dense_nullspaces_agree(
        rows in 1usize..7,
        cols in 1usize..9,
        entries in prop::collection::vec((0usize..7, 0usize..9, -3i64..=3), 0..30),
    ) {
        let m = SparseMatrix::from_triplets(
            rows,
            cols,
            entries.into_iter().filter(|&(r, c, _)| r < rows && c < cols).map(|(r, c, v)| (r, c, ratio(v, 1))),
        ).unwrap();
        prop_assert_eq!(m.nullspace_sparse(), m.nullspace_dense());
        prop_assert_eq!(m.rank_sparse(), m.rank_dense());
        prop_assert_eq!(m.rank() + m.nullspace().len(), cols);
        prop_assert_eq!(m.rank(), common::oracle::rank(m.to_dense()));
    }

    #[test]
    fn solve_recovers_consistent_right_hand_sides(
        entries in prop::collection::vec((0usize..5, 0usize..6, -3i64..=3), 0..20),
        x in prop::collection::vec(-3i64..=3, 6),
    ) {
        let m = SparseMatrix::from_triplets(5, 6, entries.into_iter().map(|(r, c, v)| (r, c, ratio(v, 1)))).unwrap();
        let x: Vec<Rational> = x.into_iter().map(|v| ratio(v, 1)).collect();
        let b = m.mul_vec(&x);
        let y = m.solve(&b).expect("consistent");
        prop_assert_eq!(m.mul_vec(&y), b);
    }
}

#[test]
fn cohomology_is_basis_independent() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..20 {
        let g = common::random_direct_sum(&mut rng, 8);
        let moved = common::random_change_of_basis(&mut rng, &g);
        let (a, b) = (h2(&g).unwrap(), h2(&moved).unwrap());
        assert_eq!(
            (a.dim_z2, a.dim_b2, a.dim_h2),
            (b.dim_z2, b.dim_b2, b.dim_h2)
        );
    }
}

#[test]
fn oracle_agrees_on_textbook_algebras() {
    // Heisenberg: every cochain is a cocycle, one coboundary.
    assert_eq!(common::oracle::h2_dims(&common::heisenberg()), (3, 1, 2));
    let g = common::heisenberg();
    let r = h2(&g).unwrap();
    assert_eq!((r.dim_z2, r.dim_b2, r.dim_h2), (3, 1, 2));
    let g = common::affine_line();
    let r = h2(&g).unwrap();
    assert_eq!((r.dim_z2, r.dim_b2, r.dim_h2), common::oracle::h2_dims(&g));
    assert_eq!(r.dim_h2, 0);
}
