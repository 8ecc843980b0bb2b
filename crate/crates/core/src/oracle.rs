//! Brute-force checks. These deliberately avoid the algorithms of the other
//! modules and only share their data types.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::autoeq::{AutSource, RingAutomorphism};
use crate::error::{Error, Result};
use crate::fusion_ring::{FusionRing, StructureConstants};
use crate::pointed::PointedBraiding;
use crate::root::UnitRootExp;
use crate::young::{enumerate_labels, fuse_generator, SuNk};

/// Largest N for which the unrestricted hexagon scan runs.
pub const GENERAL_SCAN_MAX_N: u64 = 5;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointedScan {
    /// Solutions of the form `c(i,j) = s^{ij}`, one per distinct table.
    pub solutions: Vec<PointedBraiding>,
    /// Number of solutions among all `c: Z_N × Z_N → μ_{2N}`, when scanned.
    pub general_count: Option<usize>,
    /// General solutions not of the form `s^{ij}`, as exponent tables.
    pub extra: Vec<Vec<u64>>,
}

/// Exhaustive hexagon scan in exponents modulo 2N.
pub fn brute_force_pointed_braidings(n: u64, eta: UnitRootExp) -> Result<PointedScan> {
    if n == 0 || n > 16 {
        return Err(Error::param(format!("pointed scan needs 1 ≤ N ≤ 16, got {n}")));
    }
    let m = 2 * n;
    let eta_exp = eta
        .reduced()
        .lift(m)
        .ok_or_else(|| Error::param(format!("{eta} is not a 2N-th root of unity")))?
        .exponent();
    let omega = |i: u64, j: u64, l: u64| -> u64 {
        if i % n + j % n >= n {
            eta_exp * (l % n) % m
        } else {
            0
        }
    };
    let hexagons_hold = |c: &dyn Fn(u64, u64) -> u64| -> bool {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let l1 = omega(j, k, i) + c(i, (j + k) % n) + omega(i, j, k);
                    let r1 = c(i, k) + omega(j, i, k) + c(i, j);
                    if l1 % m != r1 % m {
                        return false;
                    }
                    let l2 = m - omega(k, i, j) + c((i + j) % n, k) + m - omega(i, j, k);
                    let r2 = c(i, k) + m - omega(i, k, j) + c(j, k);
                    if l2 % m != r2 % m {
                        return false;
                    }
                }
            }
        }
        true
    };

    let mut tables: Vec<Vec<u64>> = Vec::new();
    let mut solutions = Vec::new();
    for s in 0..m {
        let table: Vec<u64> = (0..n * n).map(|x| s * (x / n) * (x % n) % m).collect();
        if tables.contains(&table) {
            continue;
        }
        if hexagons_hold(&|i, j| table[(i * n + j) as usize]) {
            tables.push(table);
            solutions.push(PointedBraiding::new(n, s as i64)?);
        }
    }

    let (general_count, extra) = if n <= GENERAL_SCAN_MAX_N {
        let general = general_scan(n, m, &omega);
        let extra: Vec<Vec<u64>> = general.iter().filter(|t| !tables.contains(t)).cloned().collect();
        (Some(general.len()), extra)
    } else {
        (None, Vec::new())
    };
    Ok(PointedScan {
        solutions,
        general_count,
        extra,
    })
}

/// Backtracking over all tables `c(i,j) ∈ Z_{2N}`; each hexagon instance is
/// checked as soon as its last entry is assigned.
fn general_scan(n: u64, m: u64, omega: &dyn Fn(u64, u64, u64) -> u64) -> Vec<Vec<u64>> {
    let cells = (n * n) as usize;
    let at = |i: u64, j: u64| (i % n * n + j % n) as usize;
    // (cells, constant): Σ sign·c[cell] + constant ≡ 0.
    let mut by_last: Vec<Vec<(Vec<(usize, i64)>, i64)>> = vec![Vec::new(); cells];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let e1 = vec![(at(i, j + k), 1), (at(i, k), -1), (at(i, j), -1)];
                let k1 = omega(j, k, i) as i64 + omega(i, j, k) as i64 - omega(j, i, k) as i64;
                let e2 = vec![(at(i + j, k), 1), (at(i, k), -1), (at(j, k), -1)];
                let k2 = -(omega(k, i, j) as i64) - omega(i, j, k) as i64 + omega(i, k, j) as i64;
                for (e, konst) in [(e1, k1), (e2, k2)] {
                    let last = e.iter().map(|t| t.0).max().expect("nonempty");
                    by_last[last].push((e, konst));
                }
            }
        }
    }
    let mut out = Vec::new();
    let mut table = vec![0u64; cells];
    fn rec(
        pos: usize,
        m: u64,
        table: &mut Vec<u64>,
        by_last: &[Vec<(Vec<(usize, i64)>, i64)>],
        out: &mut Vec<Vec<u64>>,
    ) {
        if pos == table.len() {
            out.push(table.clone());
            return;
        }
        for v in 0..m {
            table[pos] = v;
            let ok = by_last[pos].iter().all(|(terms, konst)| {
                let total: i64 = terms.iter().map(|&(c, s)| s * table[c] as i64).sum::<i64>() + konst;
                total.rem_euclid(m as i64) == 0
            });
            if ok {
                rec(pos + 1, m, table, by_last, out);
            }
        }
    }
    rec(0, m, &mut table, &by_last, &mut out);
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomCheck {
    pub name: String,
    pub passed: bool,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn passed(&self, name: &str) -> Option<bool> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.passed)
    }
}

/// Named checks of the based-ring axioms on raw structure constants.
/// `grades` (with values in Z_modulus) may be empty to skip the grading check.
pub fn verify_ring_axioms(c: &StructureConstants, grades: &[u32], modulus: u32) -> AxiomReport {
    let r = c.rank();
    let u = c.unit();
    let mut checks = Vec::new();
    let mut push = |name: &str, failure: Option<String>| {
        checks.push(AxiomCheck {
            name: name.to_string(),
            passed: failure.is_none(),
            detail: failure,
        })
    };

    // Entries are stored unsigned; a wrapped negative shows up as a huge value.
    let bound = (r as u64).pow(2).max(1);
    let bad = (0..r)
        .flat_map(|a| (0..r).flat_map(move |b| (0..r).map(move |x| (a, b, x))))
        .find(|&(a, b, x)| c.get(a, b, x) as u64 > bound);
    push(
        "nonnegative_integral",
        bad.map(|t| format!("implausible entry at {t:?}")),
    );

    let mut fail = None;
    'unit: for b in 0..r {
        for x in 0..r {
            let want = u32::from(b == x);
            if c.get(u, b, x) != want || c.get(b, u, x) != want {
                fail = Some(format!("unit row/column wrong at ({b}, {x})"));
                break 'unit;
            }
        }
    }
    push("unit", fail);

    let mut fail = None;
    'comm: for a in 0..r {
        for b in 0..a {
            if c.row(a, b) != c.row(b, a) {
                fail = Some(format!("{a}·{b} ≠ {b}·{a}"));
                break 'comm;
            }
        }
    }
    push("commutativity", fail);

    push("associativity", associativity_failure(c));

    let mut duals = vec![usize::MAX; r];
    let mut fail = None;
    for a in 0..r {
        let hits: Vec<usize> = (0..r).filter(|&b| c.get(a, b, u) != 0).collect();
        match hits.as_slice() {
            [b] if c.get(a, *b, u) == 1 => duals[a] = *b,
            _ => {
                fail.get_or_insert(format!("label {a} has dual candidates {hits:?}"));
            }
        }
    }
    if fail.is_none() {
        if let Some(a) = (0..r).find(|&a| duals[duals[a]] != a) {
            fail = Some(format!("duality is not involutive at {a}"));
        }
    }
    let frobenius = fail.is_none()
        && (0..r).all(|a| (0..r).all(|b| (0..r).all(|x| c.get(a, b, x) == c.get(duals[a], x, b))));
    push("duality", fail.clone());
    push(
        "frobenius_reciprocity",
        if fail.is_some() {
            Some("no duality".into())
        } else if !frobenius {
            Some("N_ab^c ≠ N_{a*c}^b".into())
        } else {
            None
        },
    );

    if !grades.is_empty() {
        let md = modulus.max(1);
        let mut fail = None;
        'grade: for a in 0..r {
            for b in 0..r {
                for x in 0..r {
                    if c.get(a, b, x) != 0 && (grades[a] + grades[b]) % md != grades[x] % md {
                        fail = Some(format!("{a}·{b} ∋ {x} breaks the grading"));
                        break 'grade;
                    }
                }
            }
        }
        if fail.is_none() {
            let mut hit = vec![false; md as usize];
            grades.iter().for_each(|&g| hit[(g % md) as usize] = true);
            if hit.contains(&false) {
                fail = Some("grading is not faithful".into());
            }
        }
        push("grading", fail);
    }
    AxiomReport { checks }
}

fn associativity_failure(c: &StructureConstants) -> Option<String> {
    let r = c.rank();
    let mut lhs = vec![0u64; r];
    let mut rhs = vec![0u64; r];
    for a in 0..r {
        for b in 0..r {
            let ab = c.product(a, b);
            // With commutativity, (x·b)·a = a·(b·x), so x ≥ a suffices.
            for x in a..r {
                // (a·b)·x against a·(b·x).
                lhs.iter_mut().for_each(|v| *v = 0);
                rhs.iter_mut().for_each(|v| *v = 0);
                for &(e, m) in &ab {
                    for (d, &v) in c.row(e, x).iter().enumerate() {
                        lhs[d] += m as u64 * v as u64;
                    }
                }
                for (f, m) in c.product(b, x) {
                    for (d, &v) in c.row(a, f).iter().enumerate() {
                        rhs[d] += m as u64 * v as u64;
                    }
                }
                if lhs != rhs {
                    return Some(format!("({a}·{b})·{x} ≠ {a}·({b}·{x})"));
                }
            }
        }
    }
    None
}

pub fn verify_ring(ring: &FusionRing) -> AxiomReport {
    verify_ring_axioms(ring.constants(), ring.grades(), ring.params().n)
}

/// Every permutation of the basis preserving unit and structure constants.
pub fn brute_force_automorphisms(c: &StructureConstants) -> Result<Vec<RingAutomorphism>> {
    let r = c.rank();
    if r > 20 {
        return Err(Error::param(format!("automorphism search needs rank ≤ 20, got {r}")));
    }
    // Invariants preserved by any automorphism, used only for pruning.
    let signature: Vec<(u32, u32, usize)> = (0..r)
        .map(|a| {
            let total = (0..r).flat_map(|b| c.row(a, b).iter()).sum();
            let trace = (0..r).map(|b| c.get(a, b, b)).sum();
            let support = (0..r).filter(|&b| c.get(a, a, b) != 0).count();
            (total, trace, support)
        })
        .collect();
    let mut out = Vec::new();
    let mut perm = vec![usize::MAX; r];
    let mut used = vec![false; r];
    fn rec(
        pos: usize,
        c: &StructureConstants,
        signature: &[(u32, u32, usize)],
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let r = perm.len();
        if pos == r {
            out.push(perm.clone());
            return;
        }
        for y in 0..r {
            if used[y] || signature[y] != signature[pos] || (pos == c.unit()) != (y == c.unit()) {
                continue;
            }
            perm[pos] = y;
            // Check every constant among assigned labels that involves pos.
            let ok = (0..=pos).all(|a| {
                (0..=pos).all(|b| {
                    (a != pos && b != pos)
                        || (0..=pos).all(|x| c.get(perm[a], perm[b], perm[x]) == c.get(a, b, x))
                }) && (0..pos).all(|b| c.get(perm[a], perm[b], perm[pos]) == c.get(a, b, pos))
            });
            if ok {
                used[y] = true;
                rec(pos + 1, c, signature, perm, used, out);
                used[y] = false;
            }
            perm[pos] = usize::MAX;
        }
    }
    let mut found = Vec::new();
    rec(0, c, &signature, &mut perm, &mut used, &mut found);
    for p in found {
        out.push(RingAutomorphism {
            perm: p,
            source: AutSource::Search,
        });
    }
    out.sort_by(|a, b| a.perm.cmp(&b.perm));
    Ok(out)
}

/// The ring obtained by writing each basis vector as a rational polynomial
/// in the generator matrix applied to the unit. `None` when the Krylov
/// vectors of the unit do not span.
pub fn generator_power_route(p: SuNk) -> Result<Option<StructureConstants>> {
    let labels = enumerate_labels(p);
    let r = labels.len();
    let pos = |l: &crate::young::YoungDiagram| labels.iter().position(|x| x == l);
    let mut mx = vec![vec![BigInt::zero(); r]; r];
    for (b, l) in labels.iter().enumerate() {
        for child in fuse_generator(l, p)? {
            let c = pos(&child).ok_or_else(|| Error::consistency("child is not a label"))?;
            mx[b][c] += 1;
        }
    }
    let unit = pos(&labels[0]).expect("unit");

    // powers[t] = M_X^t, krylov[t] = e_unit · M_X^t.
    let mut powers = vec![identity(r)];
    for t in 1..r {
        powers.push(mat_mul(&powers[t - 1], &mx));
    }
    let krylov: Vec<Vec<BigRational>> = powers
        .iter()
        .map(|m| m[unit].iter().map(|v| BigRational::from_integer(v.clone())).collect())
        .collect();
    let Some(inverse) = invert(krylov) else {
        return Ok(None);
    };

    let mut data = Vec::with_capacity(r * r * r);
    for coeffs in inverse.iter().take(r) {
        for b in 0..r {
            for x in 0..r {
                let mut v = BigRational::zero();
                for (t, coef) in coeffs.iter().enumerate() {
                    if !coef.is_zero() {
                        v += coef * BigRational::from_integer(powers[t][b][x].clone());
                    }
                }
                if !v.is_integer() || v.is_negative() {
                    return Err(Error::consistency(format!(
                        "generator-power route produced {v} for {p}"
                    )));
                }
                data.push(v.to_integer().to_u32().ok_or_else(|| Error::consistency("entry overflow"))?);
            }
        }
    }
    Ok(Some(StructureConstants::new(r, unit, data)?))
}

fn identity(r: usize) -> Vec<Vec<BigInt>> {
    (0..r)
        .map(|i| (0..r).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let r = a.len();
    let mut out = vec![vec![BigInt::zero(); r]; r];
    for i in 0..r {
        for (t, ait) in a[i].iter().enumerate() {
            if ait.is_zero() {
                continue;
            }
            for j in 0..r {
                if !b[t][j].is_zero() {
                    out[i][j] += ait * &b[t][j];
                }
            }
        }
    }
    out
}

/// Gauss–Jordan inverse over the rationals.
fn invert(mut a: Vec<Vec<BigRational>>) -> Option<Vec<Vec<BigRational>>> {
    let r = a.len();
    let mut inv: Vec<Vec<BigRational>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| if i == j { BigRational::one() } else { BigRational::zero() })
                .collect()
        })
        .collect();
    for col in 0..r {
        let pivot = (col..r).find(|&i| !a[i][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let scale = a[col][col].recip();
        for j in 0..r {
            a[col][j] = &a[col][j] * &scale;
            inv[col][j] = &inv[col][j] * &scale;
        }
        for i in 0..r {
            if i == col || a[i][col].is_zero() {
                continue;
            }
            let f = a[i][col].clone();
            for j in 0..r {
                let (x, y) = (&a[col][j] * &f, &inv[col][j] * &f);
                a[i][j] -= x;
                inv[i][j] -= y;
            }
        }
    }
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pointed_scans() {
        let s = brute_force_pointed_braidings(3, UnitRootExp::one()).unwrap();
        assert_eq!(s.solutions.len(), 3);
        assert_eq!(s.general_count, Some(3));
        assert!(s.extra.is_empty());
        let s = brute_force_pointed_braidings(2, UnitRootExp::minus_one()).unwrap();
        assert_eq!(s.solutions.len(), 2);
        assert_eq!(brute_force_pointed_braidings(1, UnitRootExp::one()).unwrap().solutions.len(), 1);
    }

    #[test]
    fn ring_checks() {
        let ring = FusionRing::build(SuNk::new(3, 2).unwrap()).unwrap();
        assert!(verify_ring(&ring).all_passed());
        let mut bad = ring.constants().clone();
        let x = ring.generator();
        let v = bad.get(x, x, ring.column(2));
        bad.set(x, x, ring.column(2), v + 1);
        let report = verify_ring_axioms(&bad, &[], 3);
        assert_eq!(report.passed("associativity"), Some(false));
        let trivial = StructureConstants::new(1, 0, vec![1]).unwrap();
        assert!(verify_ring_axioms(&trivial, &[0], 1).all_passed());
    }

    #[test]
    fn automorphism_search() {
        let ring = FusionRing::build(SuNk::new(2, 2).unwrap()).unwrap();
        let auts = brute_force_automorphisms(ring.constants()).unwrap();
        assert_eq!(auts.len(), 1);
        assert!(auts[0].is_identity());
        let ring = FusionRing::build(SuNk::new(3, 2).unwrap()).unwrap();
        assert_eq!(brute_force_automorphisms(ring.constants()).unwrap().len(), 2);
    }

    #[test]
    fn generator_powers_agree_when_cyclic() {
        for (n, k) in [(2, 2), (2, 5), (3, 2), (3, 3), (4, 1)] {
            let p = SuNk::new(n, k).unwrap();
            let ring = FusionRing::build(p).unwrap();
            let route = generator_power_route(p).unwrap().expect("cyclic");
            assert_eq!(&route, ring.constants());
        }
        // Two labels fixed by g² share the generator eigenvalue 0 here.
        assert!(generator_power_route(SuNk::new(4, 2).unwrap()).unwrap().is_none());
    }
}
