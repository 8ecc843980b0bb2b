use std::f64::consts::PI;

use proptest::prelude::*;

use sunk::fusion_ring::MAX_RING_RANK;
use sunk::oracle::verify_ring;
use sunk::{FusionRing, SuNk};

/// Quantum dimension from the Weyl formula, `q = exp(πi/(N+k))`.
fn quantum_dimension(rows: &[u32], n: u32, k: u32) -> f64 {
    let l = (n + k) as f64;
    let mut lam = rows.to_vec();
    lam.resize(n as usize, 0);
    let mut d = 1.0;
    for i in 0..n as usize {
        for j in i + 1..n as usize {
            let num = lam[i] as f64 - lam[j] as f64 + (j - i) as f64;
            d *= (PI * num / l).sin() / (PI * (j - i) as f64 / l).sin();
        }
    }
    d
}

/// Adds one box, deletes a full first column, drops rows longer than k.
fn tensor_with_box(rows: &[u32], n: u32, k: u32) -> Vec<Vec<u32>> {
    let mut lam = rows.to_vec();
    lam.resize(n as usize, 0);
    let mut out = Vec::new();
    for r in 0..n as usize {
        if r > 0 && lam[r] == lam[r - 1] {
            continue;
        }
        let mut mu = lam.clone();
        mu[r] += 1;
        if mu[n as usize - 1] > 0 {
            let last = mu[n as usize - 1];
            mu.iter_mut().for_each(|x| *x -= last.min(1));
        }
        if mu[0] > k {
            continue;
        }
        while mu.last() == Some(&0) {
            mu.pop();
        }
        out.push(mu);
    }
    out.sort();
    out
}

fn small_pair() -> impl Strategy<Value = (u32, u32)> {
    (2u32..=6, 1u32..=6).prop_filter("rank ≤ 84", |&(n, k)| {
        SuNk::new(n, k).map(|p| p.rank() <= 84).unwrap_or(false)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn axioms_hold((n, k) in small_pair()) {
        let ring = FusionRing::build(SuNk::new(n, k).unwrap()).unwrap();
        let report = verify_ring(&ring);
        prop_assert!(report.all_passed(), "{:?}", report.checks);
    }

    #[test]
    fn generator_rule_matches_box_addition((n, k) in small_pair()) {
        let ring = FusionRing::build(SuNk::new(n, k).unwrap()).unwrap();
        let x = ring.generator();
        for b in 0..ring.rank() {
            let mut got: Vec<Vec<u32>> = ring
                .constants()
                .product(x, b)
                .into_iter()
                .map(|(c, mult)| {
                    assert_eq!(mult, 1);
                    ring.label(c).rows().to_vec()
                })
                .collect();
            got.sort();
            prop_assert_eq!(got, tensor_with_box(ring.label(b).rows(), n, k));
        }
    }

    #[test]
    fn dimensions_are_characters((n, k) in small_pair()) {
        let ring = FusionRing::build(SuNk::new(n, k).unwrap()).unwrap();
        let dims: Vec<f64> = ring
            .labels()
            .iter()
            .map(|l| quantum_dimension(l.rows(), n, k))
            .collect();
        for a in 0..ring.rank() {
            for b in a..ring.rank() {
                let rhs: f64 = ring
                    .constants()
                    .product(a, b)
                    .iter()
                    .map(|&(c, m)| m as f64 * dims[c])
                    .sum();
                prop_assert!((dims[a] * dims[b] - rhs).abs() < 1e-8 * rhs.max(1.0));
            }
        }
    }

    #[test]
    fn invertibles_are_rectangles((n, k) in small_pair()) {
        let ring = FusionRing::build(SuNk::new(n, k).unwrap()).unwrap();
        let pointed = ring.pointed_objects().unwrap();
        prop_assert_eq!(pointed.len(), n as usize);
        for (i, &a) in pointed.iter().enumerate() {
            let want: Vec<u32> = vec![k; i];
            prop_assert_eq!(ring.label(a).rows(), &want[..]);
            prop_assert!((quantum_dimension(&want, n, k) - 1.0).abs() < 1e-9);
        }
    }
}

#[test]
fn rank_is_binomial() {
    for n in 2..=6u32 {
        for k in 1..=6u32 {
            let p = SuNk::new(n, k).unwrap();
            let want = (1..n as u64).fold(1u64, |acc, i| acc * (k as u64 + i) / i);
            assert_eq!(p.rank(), want);
            if want as usize <= MAX_RING_RANK {
                assert_eq!(FusionRing::build(p).unwrap().rank() as u64, want);
            } else {
                assert!(FusionRing::build(p).is_err());
            }
        }
    }
}

#[test]
fn su2_level_three_by_hand() {
    // Spins 0, 1/2, 1, 3/2; the unit is the empty diagram.
    let ring = FusionRing::build(SuNk::new(2, 3).unwrap()).unwrap();
    let c = ring.constants();
    let idx = |r: &[u32]| {
        ring.labels()
            .iter()
            .position(|l| l.rows() == r)
            .unwrap()
    };
    let (s1, s2, s3) = (idx(&[1]), idx(&[2]), idx(&[3]));
    let prod = |a, b| c.product(a, b).into_iter().map(|t| t.0).collect::<Vec<_>>();
    let mut want = vec![s1, s3];
    want.sort();
    assert_eq!(prod(s1, s2), want);
    assert_eq!(prod(s3, s3), vec![ring.unit()]);
    assert_eq!(prod(s3, s1), vec![s2]);
}
