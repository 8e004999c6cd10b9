//! Algebraic invariants over random rational parameters.

use proptest::prelude::*;
use ratext::darboux::{b16_identity_check, build_decompositions, decompositions_consistent, leading_chain_holds};
use ratext::exactpoly::{apply_ladder, jacobi_poly, rat, ri, y_to_z, z_to_y, LadderKind};
use ratext::seedcat::{make_seed, quantization_residual, Family, RayIds, SeedType};
use ratext::xopgen::gs_heine;
use ratext::zerocensus::census_point;
use ratext::{Poly, Rational};

/// Positive non-integer rationals with small denominators.
fn exponent() -> impl Strategy<Value = Rational> {
    (1i64..40, 2i64..7)
        .prop_map(|(n, d)| rat(n, d))
        .prop_filter("non-integer", |x| !x.is_integer())
}

fn signed() -> impl Strategy<Value = Rational> {
    (-40i64..40, 1i64..7).prop_map(|(n, d)| rat(n, d))
}

fn poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(signed(), 0..=max_deg + 1).prop_map(Poly::new)
}

fn ray() -> impl Strategy<Value = RayIds> {
    (0u8..3, exponent(), exponent()).prop_map(|(f, l, m)| match f {
        0 => RayIds::dpt(l, m),
        1 => RayIds::hpt(l, m),
        _ => RayIds::isotonic(l),
    })
}

fn seed_type(family: Family, k: usize) -> SeedType {
    match family {
        Family::Hpt => SeedType::HPT[k % SeedType::HPT.len()],
        _ => SeedType::DPT[k % SeedType::DPT.len()],
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn div_rem_reconstructs(a in poly(6), b in poly(3)) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&b);
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.degree().is_none_or(|d| d < b.degree().unwrap()));
    }

    #[test]
    fn variable_change_round_trips(a in poly(5)) {
        prop_assert_eq!(z_to_y(&y_to_z(&a)), a);
    }

    #[test]
    fn seeds_satisfy_quantization(ray in ray(), k in 0usize..7, m in 0u32..5) {
        let t = seed_type(ray.family, k);
        let Ok(seed) = make_seed(&ray, t, m) else { return Ok(()) };
        prop_assert!(quantization_residual(&seed).is_zero());
        prop_assert!(b16_identity_check(&seed));
        prop_assert!(decompositions_consistent(&seed));
        let dec = build_decompositions(&seed);
        prop_assert_ne!(leading_chain_holds(&seed, &dec), Some(false));
    }

    #[test]
    fn heine_members_are_certified(lambda in exponent(), mu in exponent(), k in 0usize..4, m in 1u32..3, t in 0usize..4, v in 0u32..4) {
        let ray = RayIds::dpt(lambda, mu);
        let Ok(seed) = make_seed(&ray, SeedType::DPT[k], m) else { return Ok(()) };
        let Ok(gs) = gs_heine(&seed, SeedType::DPT[t], v) else { return Ok(()) };
        prop_assert!(gs.certified());
        prop_assert!(gs.monic.is_monic());
    }

    #[test]
    fn census_agrees_with_sturm(lambda in signed(), mu in signed(), m in 0u32..7) {
        if let Some((analytic, exact)) = census_point(&lambda, &mu, m) {
            prop_assert_eq!(analytic, exact);
        }
    }

    #[test]
    fn ladder_a_lowers_first_index(lambda in signed(), mu in signed(), n in 0u32..8) {
        let lhs = apply_ladder(LadderKind::A, &lambda, &mu, &jacobi_poly(n, &-&mu, &lambda));
        let rhs = jacobi_poly(n, &(-&mu - ri(1)), &(&lambda + ri(1))).scale(&(&mu - ri(n as i64)));
        prop_assert_eq!(lhs, rhs);
    }
}
