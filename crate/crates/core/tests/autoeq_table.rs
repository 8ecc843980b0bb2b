use sunk::autoeq::{
    autoeq_report, braided_sceq_subgroup, charge_conjugation, orbit_count, sceq_group,
    sceq_group_from_ring, table_brsceq_order, table_sceq_type, table_tau,
};
use sunk::{FusionRing, SuNk};

fn su(n: u32, k: u32) -> SuNk {
    SuNk::new(n, k).unwrap()
}

#[test]
fn su2_level_two_is_trivial() {
    let r = autoeq_report(su(2, 2)).unwrap();
    assert_eq!(r.sceq_order, 1);
    assert!(r.sceq.invariant_factors.is_empty());
    assert_eq!(r.brsceq.summary.order, 1);
    assert!(r.table1_match);
}

#[test]
fn two_exactly_divides_gcd_rows() {
    // (6,2): m = 3, n = 2, so Z_3^* × Z_2 × Z_1 = Z_2 × Z_2.
    let g = sceq_group(su(6, 2)).unwrap();
    assert_eq!(g.group_type.invariant_factors, vec![2, 2]);
    assert_eq!(g.group_type, table_sceq_type(su(6, 2)).unwrap());
    // (4,2): m = 1, n = 4, so Z_2 × Z_2.
    let g = sceq_group(su(4, 2)).unwrap();
    assert_eq!(g.group_type.invariant_factors, vec![2, 2]);
}

#[test]
fn cyclic_rows() {
    // (4,4): 4 divides gcd, so Z_4.
    assert_eq!(sceq_group(su(4, 4)).unwrap().group_type.invariant_factors, vec![4]);
    // (5,2): m = 5, Z_5^* = Z_4.
    assert_eq!(sceq_group(su(5, 2)).unwrap().group_type.invariant_factors, vec![4]);
}

#[test]
fn braided_orders_from_the_table() {
    assert_eq!(table_tau(su(6, 2)), 1);
    assert_eq!(table_brsceq_order(su(6, 2)), 4);
    assert_eq!(table_tau(su(4, 2)), 1);
    assert_eq!(table_brsceq_order(su(4, 2)), 2);
    for n in 2..=8 {
        for k in 2..=8 {
            let g = sceq_group(su(n, k)).unwrap();
            let b = braided_sceq_subgroup(&g).unwrap();
            assert!(b.matches_claim && b.closed, "SU({n})_{k}: {b:?}");
        }
    }
}

#[test]
fn table_matches_computed_groups() {
    for n in 2..=8 {
        for k in 2..=8 {
            let r = autoeq_report(su(n, k)).unwrap();
            assert!(r.table1_match, "SU({n})_{k}");
        }
    }
}

#[test]
fn charge_conjugation_is_a_simple_current_only_at_level_two() {
    for n in 3..=6 {
        for k in 2..=5 {
            let ring = FusionRing::build(su(n, k)).unwrap();
            let group = sceq_group_from_ring(&ring).unwrap();
            let c = charge_conjugation(&ring).unwrap();
            assert!(!c.is_identity());
            assert_eq!(group.elements.contains(&c.perm), k == 2, "SU({n})_{k}");
        }
    }
}

#[test]
fn uncorrected_criterion_misses_odd_pairs() {
    for (n, k) in [(3, 7), (5, 3), (7, 5)] {
        let b = braided_sceq_subgroup(&sceq_group(su(n, k)).unwrap()).unwrap();
        assert!(b.matches_claim);
        assert!(!b.uncorrected_matches_claim, "SU({n})_{k}");
    }
}

#[test]
fn action_three_resolves_two_orbits() {
    for (n, k) in [(2, 2), (2, 6), (6, 2), (6, 6)] {
        let r = orbit_count(su(n, k)).unwrap();
        assert!(r.action3_engaged);
        assert_eq!(r.orbit_count_without_action3, 2);
        assert_eq!(r.orbit_count, 1);
    }
}

#[test]
fn orbit_accounting_is_consistent() {
    for n in 2..=8 {
        for k in 2..=8 {
            let r = orbit_count(su(n, k)).unwrap();
            assert!(r.descends && r.factors_through_labels, "SU({n})_{k}");
            assert!(r.accounting_consistent, "SU({n})_{k}");
            assert_eq!(r.action3_engaged, n % 4 == 2 && k % 4 == 2);
        }
    }
}

/// Pairs where the braided subgroup is too small for a single orbit.
#[test]
fn orbit_counts_above_one() {
    let mut above = Vec::new();
    for n in 2..=8 {
        for k in 2..=8 {
            let r = orbit_count(su(n, k)).unwrap();
            if r.orbit_count > 1 {
                above.push((n, k, r.orbit_count));
            }
        }
    }
    assert_eq!(above, vec![(4, 2, 2), (4, 6, 2), (8, 2, 2), (8, 6, 2)]);
}
