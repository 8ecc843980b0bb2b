//! Per-(N, k) cross-checks of the main modules against the oracles.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::autoeq::{
    braided_sceq_subgroup, charge_conjugation, generate_group, orbit_count, sceq_group_from_ring,
    table_sceq_type,
};
use crate::classifier::{
    admits_degenerate_braiding, classify, classify_subcategory, classify_twisted, decompose,
};
use crate::error::Result;
use crate::fusion_ring::{FusionRing, DOCUMENT_VERSION, MAX_RING_RANK};
use crate::oracle::{
    brute_force_automorphisms, brute_force_pointed_braidings, generator_power_route, verify_ring,
    AxiomCheck,
};
use crate::pointed::solve_hexagons;
use crate::root::UnitRootExp;
use crate::young::{fuse_generator, SuNk};

/// Largest rank for building the ring and checking its axioms (the
/// associativity check is quartic in the rank).
pub const RING_CHECK_MAX_RANK: usize = 126;
/// Largest rank for the rational generator-power cross-check.
pub const GENERATOR_ROUTE_MAX_RANK: usize = 36;
/// Largest rank for the exhaustive automorphism search.
pub const AUTOMORPHISM_SEARCH_MAX_RANK: usize = 20;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PairVerification {
    pub version: u32,
    #[serde(rename = "N")]
    pub n: u32,
    pub k: u32,
    pub rank: u64,
    pub checks: Vec<AxiomCheck>,
    pub passed: bool,
}

/// Runs every applicable check for `(N, k)`. Checks that do not apply
/// (level 1, rank limits) are left out rather than reported as passing.
pub fn verify_pair(p: SuNk) -> Result<PairVerification> {
    let mut checks = Vec::new();
    let mut check = |name: &str, failure: Option<String>| {
        checks.push(AxiomCheck {
            name: name.to_string(),
            passed: failure.is_none(),
            detail: failure,
        })
    };
    let when = |ok: bool, msg: String| if ok { None } else { Some(msg) };
    let nn = p.n as u64;

    let rank = p.rank() as usize;
    let ring = if rank <= RING_CHECK_MAX_RANK.min(MAX_RING_RANK) {
        Some(FusionRing::build(p)?)
    } else {
        None
    };
    if let Some(ring) = &ring {
        for c in verify_ring(ring).checks {
            let failure = if c.passed {
                None
            } else {
                Some(c.detail.unwrap_or_default())
            };
            check(&format!("ring.{}", c.name), failure);
        }
        check(
            "ring.rank",
            when(ring.rank() as u64 == p.rank(), format!("rank {}", ring.rank())),
        );
        let pointed = ring.pointed_objects();
        check(
            "ring.pointed_objects",
            match &pointed {
                Ok(list) => when(list.len() as u64 == nn, format!("{} invertibles", list.len())),
                Err(e) => Some(e.to_string()),
            },
        );
        let mut mismatch = None;
        for (b, l) in ring.labels().iter().enumerate() {
            let mut want: Vec<usize> = fuse_generator(l, p)?
                .iter()
                .filter_map(|c| ring.index_of(c))
                .collect();
            want.sort_unstable();
            let got: Vec<usize> = ring
                .constants()
                .product(ring.generator(), b)
                .iter()
                .map(|t| t.0)
                .collect();
            if got != want {
                mismatch.get_or_insert(format!("X ⊗ {l}"));
            }
        }
        check("ring.generator_rule", mismatch);
        if rank <= GENERATOR_ROUTE_MAX_RANK {
            if let Some(route) = generator_power_route(p)? {
                check(
                    "ring.generator_power_route",
                    when(&route == ring.constants(), "routes differ".into()),
                );
            }
        }
    }

    for eta in [UnitRootExp::one(), UnitRootExp::minus_one()] {
        if eta != UnitRootExp::one() && nn % 2 == 1 {
            continue;
        }
        let solved = solve_hexagons(nn, eta)?;
        let scan = brute_force_pointed_braidings(nn, eta)?;
        check(
            &format!("pointed.hexagons[eta={eta}]"),
            when(
                solved == scan.solutions && scan.extra.is_empty() && solved.len() as u64 == nn,
                format!("solver {} vs scan {}", solved.len(), scan.solutions.len()),
            ),
        );
    }

    if p.k >= 2 {
        let report = classify(p)?;
        check(
            "classifier.sections",
            when(
                report.count as u64 == 2 * nn && report.distinct_invariants == report.count,
                format!("{} sections", report.count),
            ),
        );
        check(
            "classifier.degeneracy",
            admits_degenerate_braiding(p).err().map(|e| e.to_string()),
        );
        let labels = ring.as_ref().map(|r| r.label_set().clone());
        let labels = labels.unwrap_or_else(|| crate::fusion_ring::LabelSet::new(p));
        check("classifier.decomposition", decompose(&labels).err().map(|e| e.to_string()));
        let sub = classify_subcategory(p)?;
        check(
            "classifier.subcategory",
            when(
                sub.count as u64 == sub.claimed_count
                    && sub.count_by_formula == sub.claimed_count
                    && sub.units_by_gcd
                    && sub.units_by_series
                    && sub.all_nondegenerate,
                format!("{sub:?}"),
            ),
        );
        if nn % 2 == 0 {
            let tw = classify_twisted(p)?;
            let ok = tw.count as u64 == 2 * nn
                && if p.k % 2 == 1 {
                    tw.all_degenerate && tw.factor_count == Some(2 * nn)
                } else {
                    tw.nondegenerate_exists
                };
            check("classifier.twisted", when(ok, format!("{tw:?}")));
        }
        let orbits = orbit_count(p)?;
        check(
            "autoeq.orbit_accounting",
            when(
                orbits.descends && orbits.accounting_consistent,
                format!("{orbits:?}"),
            ),
        );
        if let Some(ring) = &ring {
            if rank <= AUTOMORPHISM_SEARCH_MAX_RANK {
                let group = sceq_group_from_ring(ring)?;
                check(
                    "autoeq.table1",
                    when(
                        group.group_type == table_sceq_type(p)?,
                        format!("{:?}", group.group_type),
                    ),
                );
                let braided = braided_sceq_subgroup(&group)?;
                check(
                    "autoeq.braided_order",
                    when(
                        braided.matches_claim && braided.closed,
                        format!("{} vs {}", braided.summary.order, braided.claimed_order),
                    ),
                );
                let mut gens = group.generators.clone();
                gens.push(charge_conjugation(ring)?.perm);
                let generated: BTreeSet<Vec<usize>> =
                    generate_group(ring.rank(), &gens).into_iter().collect();
                let searched: BTreeSet<Vec<usize>> = brute_force_automorphisms(ring.constants())?
                    .into_iter()
                    .map(|a| a.perm)
                    .collect();
                check(
                    "autoeq.generation",
                    when(
                        generated == searched,
                        format!("generated {} vs searched {}", generated.len(), searched.len()),
                    ),
                );
            }
        }
    }

    let passed = checks.iter().all(|c| c.passed);
    Ok(PairVerification {
        version: DOCUMENT_VERSION,
        n: p.n,
        k: p.k,
        rank: p.rank(),
        checks,
        passed,
    })
}
