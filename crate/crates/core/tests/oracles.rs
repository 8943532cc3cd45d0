//! Independent oracles and property tests.

use std::collections::BTreeMap;

use proptest::prelude::*;

use wtrans::arith::{gcd, prime_power, rational, totient};
use wtrans::bielliptic::{bielliptic_window, kato_max_weight, nu};
use wtrans::fermat::{automorphism_group, FermatAutomorphism, FermatPoint};
use wtrans::fixedpoints::{cyclic_fixed_points, is_psl2_element_order, psl2q_fixed_points};
use wtrans::orbits::{
    classify, hurwitz_divisibility, necessary_weight, solve_weight_equation, ZeroMask,
};
use wtrans::platonic::{accola_maclachlan, catalog, double_cover, BranchLocus};
use wtrans::psl::{is_hurwitz_psl2q, order_census, psl2_order, psl2q_transitivity_verdict};
use wtrans::surface::{
    rh_area_consistency, total_weight, validate_map, FuchsianSignature, MapStatus,
};
use wtrans::{Genus, Status};

fn prime_powers(lo: u64, hi: u64) -> impl Iterator<Item = u64> {
    (lo..=hi).filter(|&q| prime_power(q).is_some())
}

/// Solutions by brute force over every vector in the bounding box.
fn box_search(coefficients: &[u64], target: u64) -> Vec<Vec<u64>> {
    let bounds: Vec<u64> = coefficients.iter().map(|c| target / c).collect();
    let mut out = Vec::new();
    let mut v = vec![0u64; coefficients.len()];
    loop {
        let sum: u64 = v.iter().zip(coefficients).map(|(w, c)| w * c).sum();
        if sum == target {
            out.push(v.clone());
        }
        let mut i = v.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if v[i] < bounds[i] {
                v[i] += 1;
                for x in &mut v[i + 1..] {
                    *x = 0;
                }
                break;
            }
        }
    }
}

/// Element-order counts of `PSL(2, q)` from the conjugacy class structure of
/// its tori and unipotent elements.
fn census_formula(q: u64) -> BTreeMap<u64, u64> {
    let (p, _) = prime_power(q).unwrap();
    let g = gcd(2, q - 1);
    let mut out = BTreeMap::from([(1, 1)]);
    for d in 2..=q + 1 {
        if d == p {
            out.insert(d, q * q - 1);
            continue;
        }
        let mut count = 0;
        if ((q - 1) / g).is_multiple_of(d) {
            count += totient(d) * q * (q + 1) / 2;
        }
        if ((q + 1) / g).is_multiple_of(d) {
            count += totient(d) * q * (q - 1) / 2;
        }
        if count > 0 {
            out.insert(d, count);
        }
    }
    out
}

#[test]
fn census_matches_closed_form() {
    for q in prime_powers(2, 32) {
        let c = order_census(q).unwrap();
        assert_eq!(c.counts, census_formula(q), "q = {q}");
        assert_eq!(c.total(), psl2_order(q).unwrap());
    }
}

#[test]
fn census_fixed_points_on_the_line() {
    for q in prime_powers(2, 32) {
        let (p, _) = prime_power(q).unwrap();
        let c = order_census(q).unwrap();
        for (&order, fixed) in &c.fixed_points {
            if order == 1 {
                continue;
            }
            assert!(fixed.iter().all(|&f| f <= 2), "q = {q}, order {order}: {fixed:?}");
            if order == p {
                assert_eq!(fixed.iter().copied().collect::<Vec<_>>(), vec![1], "q = {q}");
            }
        }
    }
}

#[test]
fn arithmetic_orders_agree_with_census() {
    for q in prime_powers(2, 32) {
        let c = order_census(q).unwrap();
        for d in 1..=q + 1 {
            assert_eq!(c.count(d) > 0, is_psl2_element_order(q, d), "q = {q}, d = {d}");
        }
    }
}

#[test]
fn hyperelliptic_involution_fixes_branch_points() {
    for g in 1..=50u64 {
        let periods = vec![2; (2 * g + 2) as usize];
        assert_eq!(cyclic_fixed_points(2, &periods, 2), Ok(2 * g + 2));
    }
}

#[test]
fn schoeneberg_pipeline_for_large_hurwitz_q() {
    for q in prime_powers(16, 1000) {
        if !is_hurwitz_psl2q(q).unwrap().is_hurwitz {
            continue;
        }
        if q % 2 == 1 {
            assert!(psl2q_fixed_points(q, &[2, 3, 7], 2).unwrap() >= 5, "q = {q}");
            assert!(psl2q_fixed_points(q, &[2, 3, 7], 3).unwrap() >= 5, "q = {q}");
        }
        assert_eq!(psl2q_transitivity_verdict(q, 7).unwrap().status, Status::NotTransitive, "q = {q}");
    }
}

#[test]
fn hurwitz_divisibility_matches_necessary_weight() {
    for g in 2..=300u64 {
        let admissible = hurwitz_divisibility(Genus::new(g)).unwrap();
        for m in [2, 3, 7] {
            let w = necessary_weight(84 * (g - 1), m, Genus::new(g)).unwrap();
            assert_eq!(w.weight().is_some(), admissible.contains(&m), "g = {g}, m = {m}");
        }
    }
}

#[test]
fn nu_decreases_past_eleven() {
    // nu(g) > nu(g + 1) by cross-multiplication of positive denominators.
    let key = |g: i128| (28 * g - 100, g * g - 5 * g + 10);
    for g in 12..1_000_000i128 {
        let (a, b) = key(g);
        let (c, d) = key(g + 1);
        assert!(a * d > c * b, "nu not decreasing at {g}");
    }
    assert!(nu(Genus::new(11)) < rational(3, 1));
}

#[test]
fn bielliptic_parities_and_kato() {
    for g in 11..=20_000u64 {
        let w = bielliptic_window(Genus::new(g)).unwrap();
        assert_eq!(2 * w.candidate_weights.0, g * g - 5 * g + 6);
        assert_eq!(2 * w.candidate_weights.1, g * g - 5 * g + 10);
        assert!(w.low < w.high_exclusive);
    }
    for g in 3..=2000u64 {
        assert!(kato_max_weight(Genus::new(g)).unwrap() < (g * g - g) / 2, "g = {g}");
    }
}

#[test]
fn every_cover_is_consistent() {
    for param in 2..=30 {
        for base in catalog(param).unwrap() {
            for locus in [BranchLocus::Vertices, BranchLocus::FaceCentres, BranchLocus::EdgeCentres] {
                let Ok(cover) = double_cover(&base, locus) else { continue };
                if let Some(map) = cover.map {
                    assert_eq!(validate_map(&map).unwrap().status, MapStatus::Valid);
                }
                if cover.genus.get() >= 1 {
                    assert!(rh_area_consistency(&cover.lifted_signature, cover.aut_order(), cover.genus).unwrap());
                }
            }
        }
    }
    for g in 1..=100 {
        let am = accola_maclachlan(Genus::new(g)).unwrap();
        assert_eq!(am.aut_order(), 8 * (g + 1));
        assert!(am.transitive_on_wp);
    }
}

#[test]
fn fermat_group_order() {
    for n in 4..=9u64 {
        assert_eq!(automorphism_group(n).unwrap().len() as u64, 6 * n * n);
    }
}

fn automorphism(n: u64) -> impl Strategy<Value = FermatAutomorphism> {
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    (0..n as u32, 0..n as u32, 0..6usize).prop_map(move |(a, b, p)| FermatAutomorphism {
        twist: [a, b],
        perm: perms[p],
    })
}

fn point(n: u64) -> impl Strategy<Value = FermatPoint> {
    let n32 = n as u32;
    prop_oneof![
        (0u8..3, 0..n32).prop_map(|(z, k)| FermatPoint::trivial(z, k)),
        (0u8..3, 0..n32, 0..n32).prop_map(|(g, a, b)| FermatPoint::leopoldt(g, a, b)),
    ]
}

fn action_case() -> impl Strategy<Value = (u64, FermatAutomorphism, FermatAutomorphism, FermatPoint)> {
    (5u64..=11).prop_flat_map(|n| (Just(n), automorphism(n), automorphism(n), point(n)))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn solver_matches_box_search(
        coefficients in prop::collection::vec(20u64..=1000, 1..=4),
        target in 0u64..=5000,
    ) {
        let set = solve_weight_equation(&coefficients, target).unwrap();
        prop_assert_eq!(set.solutions, box_search(&coefficients, target));
    }

    #[test]
    fn masks_never_raise_the_orbit_bound(
        coefficients in prop::collection::vec(1u64..=60, 2..=4),
        target in 1u64..=300,
        mask_bits in 0u8..16,
    ) {
        let set = solve_weight_equation(&coefficients, target).unwrap();
        prop_assume!(!set.is_empty());
        let base = classify(&set, None).unwrap();
        let mask = ZeroMask::new((1..=coefficients.len()).filter(|i| mask_bits & (1 << (i - 1)) != 0));
        if let Ok(masked) = classify(&set, Some(&mask)) {
            prop_assert!(masked.verdict.orbit_count_range.1 <= base.verdict.orbit_count_range.1);
            prop_assert!(masked.surviving.len() <= base.surviving.len());
        }
    }

    #[test]
    fn fermat_action_is_a_homomorphism((n, g, h, p) in action_case()) {
        let lhs = g.compose(&h, n).apply(&p, n).unwrap();
        let rhs = g.apply(&h.apply(&p, n).unwrap(), n).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(lhs.is_trivial(), p.is_trivial());
    }

    #[test]
    fn psl_fixed_points_are_integral(idx in 0usize..200, d_seed in 0u64..1000, t_seed in 0u64..1000) {
        let qs: Vec<u64> = prime_powers(2, 64).collect();
        let q = qs[idx % qs.len()];
        let orders: Vec<u64> = (2..=q + 1).filter(|&d| is_psl2_element_order(q, d)).collect();
        let d = orders[(d_seed as usize) % orders.len()];
        let t = orders[(t_seed as usize) % orders.len()];
        if [2, 3, t].iter().all(|&m| is_psl2_element_order(q, m)) {
            prop_assert!(psl2q_fixed_points(q, &[2, 3, t], d).is_ok());
        }
    }

    #[test]
    fn total_weight_is_cubic(g in 1u64..2_000_000) {
        let w = total_weight(Genus::new(g)).unwrap();
        prop_assert_eq!(w as u128, (g as u128).pow(3) - g as u128);
    }

    #[test]
    fn hyperelliptic_signature_area(g in 1u64..500) {
        let sig = FuchsianSignature::hyperelliptic(Genus::new(g));
        prop_assert!(rh_area_consistency(&sig, 2, Genus::new(g)).unwrap());
        prop_assert!(!rh_area_consistency(&sig, 2, Genus::new(g + 1)).unwrap());
    }
}
