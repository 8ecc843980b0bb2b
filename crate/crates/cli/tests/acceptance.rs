//! Acceptance gate. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use sunk::autoeq::{
    braided_sceq_subgroup, charge_conjugation, generate_group, orbit_count,
    sceq_group_from_ring, table_sceq_type, AbelianGroupType,
};
use sunk::classifier::{
    admits_degenerate_braiding, classify, classify_subcategory, classify_twisted, decompose,
};
use sunk::oracle::{brute_force_automorphisms, brute_force_pointed_braidings, verify_ring};
use sunk::pointed::solve_hexagons;
use sunk::{FusionRing, LabelSet, SuNk, UnitRootExp};

const POINTED_BUDGET: Duration = Duration::from_secs(5);
const RING_BUDGET: Duration = Duration::from_secs(30);
const SECTIONS_BUDGET: Duration = Duration::from_secs(5);
const AUTOMORPHISM_BUDGET: Duration = Duration::from_secs(60);
const AUTOMORPHISM_MAX_RANK: u64 = 20;

struct Outcome {
    failures: Vec<String>,
    note: String,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            failures: Vec::new(),
            note: String::new(),
        }
    }

    fn require(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn budget(&mut self, start: Instant, limit: Duration) {
        let took = start.elapsed();
        self.require(took <= limit, || format!("took {took:.2?}, budget {limit:?}"));
        self.note = format!("{took:.2?}");
    }
}

fn su(n: u32, k: u32) -> SuNk {
    SuNk::new(n, k).expect("valid parameters")
}

fn sweep(ns: std::ops::RangeInclusive<u32>, ks: std::ops::RangeInclusive<u32>) -> Vec<SuNk> {
    ns.flat_map(|n| ks.clone().map(move |k| su(n, k))).collect()
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn odd_primes(n: u64) -> Vec<u64> {
    (3..=n).step_by(2).filter(|&q| n % q == 0 && (2..q).all(|d| q % d != 0)).collect()
}

fn binomial(n: u64, r: u64) -> u64 {
    (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// 1. Pointed braiding counts, 1 ≤ N ≤ 12.
fn pointed_counts() -> Outcome {
    let mut out = Outcome::new();
    let start = Instant::now();
    for n in 1..=12u64 {
        for j in 0..n {
            // η = exp(2πi j/N); j = N/2 is η = −1.
            let eta = UnitRootExp::new(j as i64, n);
            let want = if j == 0 || 2 * j == n { n as usize } else { 0 };
            let solved = solve_hexagons(n, eta).map(|v| v.len());
            out.require(solved == Ok(want), || {
                format!("N={n} η^{j}: solver {solved:?}, want {want}")
            });
            match brute_force_pointed_braidings(n, eta) {
                Ok(scan) => {
                    let agrees = solve_hexagons(n, eta).ok() == Some(scan.solutions.clone());
                    out.require(agrees && scan.extra.is_empty(), || {
                        format!("N={n} η^{j}: scan disagrees")
                    });
                }
                Err(e) => out.failures.push(format!("N={n} η^{j}: {e}")),
            }
        }
    }
    out.budget(start, POINTED_BUDGET);
    out
}

/// 2. Fusion ring integrity, 2 ≤ N, k ≤ 5.
fn ring_integrity() -> Outcome {
    let mut out = Outcome::new();
    let start = Instant::now();
    for p in sweep(2..=5, 2..=5) {
        let ring = match FusionRing::build(p) {
            Ok(r) => r,
            Err(e) => {
                out.failures.push(format!("{p}: {e}"));
                continue;
            }
        };
        let want = binomial((p.n + p.k - 1) as u64, (p.n - 1) as u64);
        out.require(ring.rank() as u64 == want, || format!("{p}: rank {}", ring.rank()));
        let axioms = verify_ring(&ring);
        for c in axioms.checks.iter().filter(|c| !c.passed) {
            out.failures.push(format!("{p}: axiom {} failed", c.name));
        }
        let pointed = ring.pointed_objects().map(|v| v.len());
        out.require(pointed == Ok(p.n as usize), || format!("{p}: pointed {pointed:?}"));
        let g = ring.constants().as_permutation(ring.g());
        match g {
            Some(perm) => {
                let mut x = ring.unit();
                for _ in 0..p.n {
                    x = perm[x];
                }
                let mut y = ring.unit();
                let mut order = 0;
                loop {
                    y = perm[y];
                    order += 1;
                    if y == ring.unit() {
                        break;
                    }
                }
                out.require(x == ring.unit() && order == p.n, || {
                    format!("{p}: g has order {order}")
                });
            }
            None => out.failures.push(format!("{p}: g is not invertible")),
        }
    }
    out.budget(start, RING_BUDGET);
    out
}

/// 3. Section classification and the degeneracy criterion, 2 ≤ N, k ≤ 8.
fn section_classification() -> Outcome {
    let mut out = Outcome::new();
    let start = Instant::now();
    for p in sweep(2..=8, 2..=8) {
        let (n, k) = (p.n as u64, p.k as u64);
        match classify(p) {
            Ok(r) => {
                out.require(r.count as u64 == 2 * n && r.distinct_invariants == r.count, || {
                    format!("{p}: {} sections, {} distinct", r.count, r.distinct_invariants)
                });
                let by_primes = odd_primes(n).iter().any(|&q| k % q != 0);
                let by_scan = (0..n).any(|i| gcd(2 * i * k + 1, n) > 1);
                let by_centers = r.sections.iter().any(|s| s.center_order > 1);
                out.require(by_primes == by_scan, || format!("{p}: prime test vs scan"));
                out.require(r.degenerate_exists == by_scan && by_centers == by_scan, || {
                    format!("{p}: degenerate {} vs scan {by_scan}", r.degenerate_exists)
                });
                out.require(admits_degenerate_braiding(p) == Ok(by_scan), || {
                    format!("{p}: library criterion disagrees")
                });
            }
            Err(e) => out.failures.push(format!("{p}: {e}")),
        }
    }
    out.budget(start, SECTIONS_BUDGET);
    out
}

/// 4. CRT decomposition and 2N = 2n·m.
fn decomposition() -> Outcome {
    let mut out = Outcome::new();
    for p in sweep(2..=8, 2..=8) {
        let labels = LabelSet::new(p);
        let d = match decompose(&labels) {
            Ok(d) => d,
            Err(e) => {
                out.failures.push(format!("{p}: {e}"));
                continue;
            }
        };
        let nn = p.n as u64;
        let mut grades = BTreeSet::new();
        for i in 0..d.n {
            for j in 0..d.m {
                let g = d.crt(i, j);
                grades.insert(g);
                out.require(d.crt_inverse(g) == (i, j), || format!("{p}: CRT at ({i},{j})"));
            }
        }
        out.require(grades.len() as u64 == nn, || format!("{p}: CRT not onto"));
        // Each label recombines from its factors.
        for (v, &(w, l)) in d.factorization.iter().enumerate() {
            out.require(labels.shift_by_current(w, l * d.n) == v, || {
                format!("{p}: label {v} does not recombine")
            });
        }
        let factor_count = solve_hexagons(d.m, UnitRootExp::one()).map(|v| v.len() as u64);
        let mc_count = classify_subcategory(p).map(|r| r.count as u64);
        match (factor_count, mc_count) {
            (Ok(f), Ok(c)) => out.require(f == d.m && c * f == 2 * nn && c == 2 * d.n, || {
                format!("{p}: 2n = {c}, factor braidings {f}, m = {}", d.m)
            }),
            (a, b) => out.failures.push(format!("{p}: {a:?} {b:?}")),
        }
    }
    out
}

/// 5. Braidings on Fus(MC), with units checked by gcd and by the series.
fn subcategory() -> Outcome {
    let mut out = Outcome::new();
    for p in sweep(2..=8, 2..=8) {
        let r = match classify_subcategory(p) {
            Ok(r) => r,
            Err(e) => {
                out.failures.push(format!("{p}: {e}"));
                continue;
            }
        };
        let (k, n) = (p.k as u64, r.n_part);
        out.require(r.count as u64 == 2 * n && r.all_nondegenerate, || {
            format!("{p}: {} braidings, nondegenerate {}", r.count, r.all_nondegenerate)
        });
        out.require(r.units_by_gcd && r.units_by_series, || format!("{p}: library unit checks"));
        // Smallest M with n | k^M, then 1 − (2ki)^M ≡ 1 (mod n) exactly and
        // Σ_{t<M} (−2ki)^t inverts 2ik + 1.
        let big_n = BigUint::from(n);
        let mut mm = 0u32;
        while !(BigUint::from(k).pow(mm) % &big_n).is_zero() {
            mm += 1;
        }
        for i in 0..n {
            out.require(gcd(2 * i * k + 1, n) == 1, || format!("{p}: 2·{i}k+1 not a unit"));
            let x = BigUint::from(2 * k * i);
            let power = x.pow(mm);
            out.require((&power % &big_n).is_zero(), || format!("{p}: (2k·{i})^M ≢ 0"));
            let mut inverse = BigUint::zero();
            for t in 0..mm {
                let term = x.pow(t) % &big_n;
                inverse = if t % 2 == 0 {
                    (inverse + term) % &big_n
                } else {
                    (inverse + &big_n - term) % &big_n
                };
            }
            let e = BigUint::from(2 * i * k + 1);
            out.require((e * inverse) % &big_n == BigUint::one() % &big_n, || {
                format!("{p}: series inverse fails at i={i}")
            });
        }
    }
    out
}

/// 6. Twisted braidings for N even.
fn twisted() -> Outcome {
    let mut out = Outcome::new();
    for p in sweep(2..=8, 2..=8).into_iter().filter(|p| p.n % 2 == 0) {
        let r = match classify_twisted(p) {
            Ok(r) => r,
            Err(e) => {
                out.failures.push(format!("{p}: {e}"));
                continue;
            }
        };
        let nn = p.n as u64;
        out.require(r.count as u64 == 2 * nn, || format!("{p}: {} braidings", r.count));
        if p.k % 2 == 1 {
            out.require(
                r.all_degenerate
                    && r.transparent_witness.is_some()
                    && r.sections.iter().all(|s| s.center_order > 1),
                || format!("{p}: missing degeneracy witness"),
            );
        } else {
            out.require(r.nondegenerate_exists, || format!("{p}: no nondegenerate braiding"));
            out.require(r.twisted_exponent.map(|e| gcd(e, nn)) == Some(1), || {
                format!("{p}: e' = {:?}", r.twisted_exponent)
            });
        }
    }
    out
}

/// 7. Automorphism groups for rank ≤ 20.
fn automorphisms() -> Outcome {
    let mut out = Outcome::new();
    let start = Instant::now();
    let pairs: Vec<SuNk> = sweep(2..=20, 2..=19)
        .into_iter()
        .filter(|p| p.rank() <= AUTOMORPHISM_MAX_RANK)
        .collect();
    let mut exact_two = 0;
    for &p in &pairs {
        let res = (|| -> sunk::Result<()> {
            let ring = FusionRing::build(p)?;
            let group = sceq_group_from_ring(&ring)?;
            let mut gens = group.generators.clone();
            gens.push(charge_conjugation(&ring)?.perm);
            let generated: BTreeSet<Vec<usize>> =
                generate_group(ring.rank(), &gens).into_iter().collect();
            let searched: BTreeSet<Vec<usize>> = brute_force_automorphisms(ring.constants())?
                .into_iter()
                .map(|a| a.perm)
                .collect();
            out.require(generated == searched, || {
                format!("{p}: generated {} vs searched {}", generated.len(), searched.len())
            });
            let claimed = table_sceq_type(p)?;
            out.require(group.group_type == claimed, || {
                format!("{p}: {:?} vs claimed {:?}", group.group_type, claimed)
            });
            let g = gcd(p.n as u64, p.k as u64);
            if (p.n, p.k) == (2, 2) {
                out.require(group.group_type == AbelianGroupType::trivial(), || {
                    format!("{p}: not trivial")
                });
            } else if g % 2 == 0 && g % 4 != 0 {
                exact_two += 1;
            }
            let braided = braided_sceq_subgroup(&group)?;
            out.require(braided.matches_claim && braided.closed, || {
                format!(
                    "{p}: braided order {} vs claimed {}",
                    braided.summary.order, braided.claimed_order
                )
            });
            Ok(())
        })();
        if let Err(e) = res {
            out.failures.push(format!("{p}: {e}"));
        }
    }
    out.require(exact_two > 0, || "no row with 2 exactly dividing gcd(N,k)".into());
    out.budget(start, AUTOMORPHISM_BUDGET);
    out.note = format!("{} pairs, {}", pairs.len(), out.note);
    out
}

/// 8. One braiding up to braided autoequivalence, 2 ≤ N, k ≤ 8.
fn orbits() -> Outcome {
    let mut out = Outcome::new();
    for p in sweep(2..=8, 2..=8) {
        let r = match orbit_count(p) {
            Ok(r) => r,
            Err(e) => {
                out.failures.push(format!("{p}: {e}"));
                continue;
            }
        };
        let engage = p.n % 4 == 2 && p.k % 4 == 2;
        out.require(r.action3_engaged == engage, || format!("{p}: action (3) flag"));
        out.require(r.descends && r.accounting_consistent, || {
            format!("{p}: orbit-stabilizer accounting")
        });
        out.require(r.orbit_count == 1, || {
            format!(
                "{p}: {} orbits of {} braidings (stabilizer {}, braided image {})",
                r.orbit_count, r.braidings, r.stabilizer_order, r.braided_image_order
            )
        });
    }
    out
}

/// 9. Byte-identical CLI output across runs.
fn determinism() -> Outcome {
    let mut out = Outcome::new();
    let mut runs: Vec<Vec<String>> = vec![
        vec!["labels", "--N", "2..5", "--k", "2..5"],
        vec!["fusion", "--N", "2..5", "--k", "2..5"],
        vec!["pointed", "--N", "1..12"],
        vec!["classify", "--N", "2..8", "--k", "2..8"],
        vec!["classify", "--N", "2..8", "--k", "2..8", "--subcategory"],
        vec!["autoeq", "--N", "2..8", "--k", "2..8"],
        vec!["orbits", "--N", "2..8", "--k", "2..8"],
        vec!["verify", "--N", "2..5", "--k", "2..5"],
    ]
    .into_iter()
    .map(|v| v.into_iter().map(String::from).collect())
    .collect();
    for n in (2..=8).step_by(2) {
        let n = n.to_string();
        runs.push(
            ["classify", "--N", &n, "--k", "2..8", "--twist", "minus"]
                .map(String::from)
                .to_vec(),
        );
        runs.push(["pointed", "--N", &n, "--twist", "minus"].map(String::from).to_vec());
    }
    for args in &runs {
        let run = || Command::new(env!("CARGO_BIN_EXE_sunk")).args(args).output();
        match (run(), run()) {
            (Ok(a), Ok(b)) => {
                out.require(!a.stdout.is_empty(), || format!("{}: no output", args.join(" ")));
                out.require(a.stdout == b.stdout && a.status.code() == b.status.code(), || {
                    format!("{}: outputs differ", args.join(" "))
                });
            }
            (a, b) => out.failures.push(format!("{}: {a:?} {b:?}", args.join(" "))),
        }
    }
    out.note = format!("{} commands", runs.len());
    out
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("1 pointed braiding counts", pointed_counts),
        ("2 fusion ring integrity", ring_integrity),
        ("3 section classification", section_classification),
        ("4 decomposition", decomposition),
        ("5 subcategory braidings", subcategory),
        ("6 twisted braidings", twisted),
        ("7 automorphism groups", automorphisms),
        ("8 orbit theorem", orbits),
        ("9 determinism", determinism),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let outcome = check();
        let status = if outcome.failures.is_empty() { "PASS" } else { "FAIL" };
        let note = if outcome.note.is_empty() {
            String::new()
        } else {
            format!(" ({})", outcome.note)
        };
        println!("criterion {name}: {status}{note}");
        for f in &outcome.failures {
            println!("    {f}");
        }
        if !outcome.failures.is_empty() {
            failed += 1;
        }
    }
    println!("acceptance: {}/9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
