//! Braidings on the fusion category of SU(N)_k.
//!
//! The reference braiding has `b_{X,g} = t` for a primitive N-th root `t`.
//! Every braiding comes from a section `X ↦ X⊗g^i ⊠ g^{-i}` (standard side)
//! or its reverse, and is recorded by the exponent of `b_{X,g}` in powers of
//! `t`: `2ik+1` on the standard side and its negative on the reversed side.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fusion_ring::{LabelSet, DOCUMENT_VERSION};
use crate::numtheory::{gcd, gcd_k_infinity, inv_mod, prime_factors};
use crate::pointed::{pointed_b_value, solve_hexagons};
use crate::root::UnitRootExp;
use crate::young::SuNk;

/// `(m, n)` with `n = gcd(N, k^∞)` and `m = N/n`.
pub fn compute_mn(n: u64, k: u64) -> (u64, u64) {
    let big_n = gcd_k_infinity(n, k);
    (n / big_n, big_n)
}

fn require_level(p: SuNk) -> Result<()> {
    if p.k < 2 {
        return Err(Error::param(format!(
            "{p}: level 1 is pointed; use the pointed solver"
        )));
    }
    Ok(())
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DecompositionData {
    pub m: u64,
    pub n: u64,
    /// Label indices with grade in `mZ_N`.
    pub mc_labels: Vec<usize>,
    /// `g^{jn}` for `j = 0..m`.
    pub pointed_factor: Vec<usize>,
    /// For each label `V`, the pair `(W, l)` with `V = W ⊗ g^{ln}`, `W` in MC.
    pub factorization: Vec<(usize, u64)>,
}

impl DecompositionData {
    /// `crt(i, j) = i·m + j·n`, a bijection `Z_n × Z_m → Z_N`.
    pub fn crt(&self, i: u64, j: u64) -> u64 {
        (i * self.m + j * self.n) % (self.m * self.n)
    }

    /// Inverse of [`DecompositionData::crt`].
    pub fn crt_inverse(&self, grade: u64) -> (u64, u64) {
        let solve = |modulus: u64, other: u64| {
            if modulus == 1 {
                0
            } else {
                grade % modulus * inv_mod(other % modulus, modulus).expect("coprime") % modulus
            }
        };
        (solve(self.n, self.m), solve(self.m, self.n))
    }
}

/// Factors every label as an MC label times a power of `g^n`.
pub fn decompose(labels: &LabelSet) -> Result<DecompositionData> {
    let p = labels.params();
    require_level(p)?;
    let (nn, k) = (p.n as u64, p.k as u64);
    let (m, n) = compute_mn(nn, k);
    if gcd(m, n) != 1 || m * n != nn || gcd(m, k) != 1 {
        return Err(Error::consistency(format!("bad (m, n) = ({m}, {n}) for {p}")));
    }
    let mc_labels: Vec<usize> = (0..labels.len())
        .filter(|&a| labels.grade(a) as u64 % m == 0)
        .collect();
    let pointed_factor: Vec<usize> = (0..m).map(|j| labels.current_power(j * n)).collect();
    let mut data = DecompositionData {
        m,
        n,
        mc_labels,
        pointed_factor,
        factorization: Vec::with_capacity(labels.len()),
    };

    // The CRT map must be a bijection.
    let mut hit = vec![false; nn as usize];
    for i in 0..n {
        for j in 0..m {
            let g = data.crt(i, j);
            if hit[g as usize] || data.crt_inverse(g) != (i, j) {
                return Err(Error::consistency(format!("CRT map fails at ({i}, {j})")));
            }
            hit[g as usize] = true;
        }
    }

    // g^{ln} has grade lnk, so V ⊗ g^{-ln} lands in MC for l = j·k^{-1} mod m.
    let k_inv = if m == 1 { 0 } else { inv_mod(k % m, m).expect("gcd(m,k) = 1") };
    let mut seen = vec![false; m as usize * labels.len()];
    for v in 0..labels.len() {
        let (_, j) = data.crt_inverse(labels.grade(v) as u64);
        let l = j * k_inv % m.max(1);
        let w = labels.shift_by_current(v, (nn - l * n % nn) % nn);
        if labels.grade(w) as u64 % m != 0 {
            return Err(Error::consistency(format!(
                "{} ⊗ g^-{} is not in MC",
                labels.label(v),
                l * n
            )));
        }
        if labels.shift_by_current(w, l * n) != v {
            return Err(Error::consistency("factorization does not recombine"));
        }
        let slot = w * m as usize + l as usize;
        if seen[slot] {
            return Err(Error::consistency("factorization is not injective"));
        }
        seen[slot] = true;
        data.factorization.push((w, l));
    }
    if data.mc_labels.len() as u64 * m != labels.len() as u64 {
        return Err(Error::consistency(format!(
            "|MC| · m = {} · {m} differs from rank {}",
            data.mc_labels.len(),
            labels.len()
        )));
    }
    Ok(data)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Standard,
    Reversed,
}

impl Side {
    pub fn sign(self) -> i64 {
        match self {
            Side::Standard => 1,
            Side::Reversed => -1,
        }
    }

    pub fn flip(self) -> Side {
        match self {
            Side::Standard => Side::Reversed,
            Side::Reversed => Side::Standard,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectionDescriptor {
    pub i: u64,
    pub side: Side,
    /// `b_{X,g}` as a power of `t`.
    pub t_exp: UnitRootExp,
}

impl SectionDescriptor {
    pub fn new(p: SuNk, side: Side, i: u64) -> Self {
        let (n, k) = (p.n as u64, p.k as u64);
        let i = i % n;
        let e = (2 * i * k + 1) as i64;
        SectionDescriptor {
            i,
            side,
            t_exp: UnitRootExp::new(side.sign() * e, n),
        }
    }

    /// Exponent of `b_{X,g}` modulo N.
    pub fn exponent(&self) -> u64 {
        self.t_exp.exponent()
    }
}

/// The 2N sections, standard side first, then by `i`.
pub fn enumerate_sections(p: SuNk) -> Result<Vec<SectionDescriptor>> {
    require_level(p)?;
    Ok([Side::Standard, Side::Reversed]
        .into_iter()
        .flat_map(|side| (0..p.n as u64).map(move |i| SectionDescriptor::new(p, side, i)))
        .collect())
}

/// Exponent of `b_{X, g^j}` modulo N.
pub fn double_braiding_exponent(sec: &SectionDescriptor, j: u64) -> u64 {
    let n = sec.t_exp.order();
    (sec.exponent() * (j % n)) % n
}

/// Transparent powers of `g`: `{j : (2ik+1)j ≡ 0 mod N}`.
pub fn symmetric_center(sec: &SectionDescriptor) -> Vec<u64> {
    let n = sec.t_exp.order();
    (0..n).filter(|&j| double_braiding_exponent(sec, j) == 0).collect()
}

/// N has an odd prime factor coprime to k. Cross-checked against a scan of
/// `gcd(2ik+1, N)` over all sections.
pub fn admits_degenerate_braiding(p: SuNk) -> Result<bool> {
    require_level(p)?;
    let (n, k) = (p.n as u64, p.k as u64);
    let criterion = prime_factors(n).iter().any(|&q| q % 2 == 1 && k % q != 0);
    let scan = enumerate_sections(p)?
        .iter()
        .any(|s| symmetric_center(s).len() > 1);
    let gcd_scan = (0..n).any(|i| gcd(2 * i * k + 1, n) > 1);
    if criterion != scan || scan != gcd_scan {
        return Err(Error::consistency(format!(
            "{p}: prime criterion {criterion}, center scan {scan}, gcd scan {gcd_scan}"
        )));
    }
    Ok(criterion)
}

/// Complete scalar invariant of a braiding: the side, the multiplier on
/// `c_{X,X}` relative to the reference (a power of a primitive 2N-th root
/// `w` with `w² = t`), and the exponents of `b_{X,g^j}` in powers of `t`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BraidingInvariant {
    pub side: Side,
    pub xx_exp: u64,
    pub b_exps: Vec<u64>,
}

impl BraidingInvariant {
    /// Invariant of a section on the full category.
    pub fn of_section(p: SuNk, sec: &SectionDescriptor) -> Self {
        let n = p.n as u64;
        let xx = UnitRootExp::new(sec.side.sign() * 2 * sec.i as i64, 2 * n).exponent();
        BraidingInvariant {
            side: sec.side,
            xx_exp: xx,
            b_exps: (0..n).map(|j| double_braiding_exponent(sec, j)).collect(),
        }
    }

    /// Invariant of the restriction to MC, measured on an object of grade m
    /// against `g^{jm}`, `j ∈ Z_n`.
    pub fn of_restriction(p: SuNk, sec: &SectionDescriptor) -> Self {
        let (nn, k) = (p.n as u64, p.k as u64);
        let (m, n) = compute_mn(nn, k);
        let xx = UnitRootExp::new(sec.side.sign() * 2 * (sec.i * m * m) as i64, 2 * nn);
        BraidingInvariant {
            side: sec.side,
            xx_exp: xx.exponent(),
            b_exps: (0..n).map(|j| sec.exponent() * m * m % nn * j % nn).collect(),
        }
    }

    /// Additive in `j` and vanishing at `j = 0`.
    pub fn is_additive(&self, modulus: u64) -> bool {
        let len = self.b_exps.len();
        if len == 0 || self.b_exps[0] != 0 {
            return false;
        }
        (0..len).all(|a| {
            (0..len).all(|b| {
                self.b_exps[(a + b) % len] == (self.b_exps[a] + self.b_exps[b]) % modulus
            })
        })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SectionReport {
    pub i: u64,
    pub side: Side,
    pub b_exponent: u64,
    pub center_order: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub version: u32,
    #[serde(rename = "N")]
    pub n: u32,
    pub k: u32,
    pub m: u64,
    #[serde(rename = "n")]
    pub n_part: u64,
    pub count: usize,
    pub claimed_count: u64,
    pub distinct_invariants: usize,
    pub degenerate_exists: bool,
    pub claimed_degenerate_exists: bool,
    pub nondegenerate_count: usize,
    pub sections: Vec<SectionReport>,
}

/// Braidings on the untwisted category.
pub fn classify(p: SuNk) -> Result<ClassificationReport> {
    let sections = enumerate_sections(p)?;
    let mut invariants: Vec<BraidingInvariant> = sections
        .iter()
        .map(|s| BraidingInvariant::of_section(p, s))
        .collect();
    if invariants.iter().any(|inv| !inv.is_additive(p.n as u64)) {
        return Err(Error::consistency("double braiding exponents are not additive"));
    }
    invariants.sort();
    invariants.dedup();
    let reports: Vec<SectionReport> = sections
        .iter()
        .map(|s| SectionReport {
            i: s.i,
            side: s.side,
            b_exponent: s.exponent(),
            center_order: symmetric_center(s).len() as u64,
        })
        .collect();
    for s in &sections {
        if symmetric_center(s).len() as u64 != gcd(2 * s.i * p.k as u64 + 1, p.n as u64) {
            return Err(Error::consistency("center order differs from gcd(2ik+1, N)"));
        }
    }
    let (m, n) = compute_mn(p.n as u64, p.k as u64);
    let claimed = prime_factors(p.n as u64)
        .iter()
        .any(|&q| q % 2 == 1 && p.k as u64 % q != 0);
    Ok(ClassificationReport {
        version: DOCUMENT_VERSION,
        n: p.n,
        k: p.k,
        m,
        n_part: n,
        count: sections.len(),
        claimed_count: 2 * p.n as u64,
        distinct_invariants: invariants.len(),
        degenerate_exists: reports.iter().any(|r| r.center_order > 1),
        claimed_degenerate_exists: claimed,
        nondegenerate_count: reports.iter().filter(|r| r.center_order == 1).count(),
        sections: reports,
    })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TwistedSection {
    pub i: u64,
    pub side: Side,
    /// Exponent of `b'_{X,g}` with the printed shift `2kr`.
    pub b_exponent: u64,
    pub center_order: u64,
    /// Same with the shift `kr` from the intermediate step.
    pub b_exponent_alt: u64,
    pub center_order_alt: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TwistedReport {
    pub version: u32,
    #[serde(rename = "N")]
    pub n: u32,
    pub k: u32,
    pub m: u64,
    #[serde(rename = "n")]
    pub n_part: u64,
    pub count: usize,
    pub claimed_count: u64,
    pub all_degenerate: bool,
    pub nondegenerate_exists: bool,
    /// `k` odd: `2n` (MC braidings) times the braidings on the pointed factor.
    pub factor_count: Option<u64>,
    /// `k` odd: grade-in-factor `j` of a transparent object shared by all
    /// pointed-factor braidings.
    pub transparent_witness: Option<u64>,
    /// `k` even: exponents `1+2kr` and `1+kr`, `N = 2^p·r`.
    pub twisted_exponent: Option<u64>,
    pub twisted_exponent_alt: Option<u64>,
    /// Sections where the two readings disagree on degeneracy.
    pub reading_disagreements: Vec<u64>,
    pub sections: Vec<TwistedSection>,
}

/// Braidings on the category twisted by the sign cocycle. Needs N even.
pub fn classify_twisted(p: SuNk) -> Result<TwistedReport> {
    require_level(p)?;
    let (nn, k) = (p.n as u64, p.k as u64);
    if nn % 2 == 1 {
        return Err(Error::param(format!("{p}: the sign twist needs N even")));
    }
    let (m, n) = compute_mn(nn, k);
    let r = nn >> nn.trailing_zeros();
    let sections = enumerate_sections(p)?;

    let mut report = TwistedReport {
        version: DOCUMENT_VERSION,
        n: p.n,
        k: p.k,
        m,
        n_part: n,
        count: sections.len(),
        claimed_count: 2 * nn,
        all_degenerate: false,
        nondegenerate_exists: false,
        factor_count: None,
        transparent_witness: None,
        twisted_exponent: None,
        twisted_exponent_alt: None,
        reading_disagreements: Vec::new(),
        sections: Vec::new(),
    };

    if k % 2 == 1 {
        // Twisting flips the class of the pointed part from (-1)^k to 1, and
        // the factor C(Z_m) inherits a trivial associator. m is even here.
        let pointed_class = UnitRootExp::new((k + 1) as i64, 2);
        let factor_class = pointed_class.pow(n as i64);
        let factor = solve_hexagons(m, factor_class)?;
        let witness = m / 2;
        for brd in &factor {
            if (0..m).any(|i| !pointed_b_value(brd, i, witness).is_one()) {
                return Err(Error::consistency(format!(
                    "{p}: g-factor object {witness} is not transparent"
                )));
            }
        }
        report.factor_count = Some(2 * n * factor.len() as u64);
        report.transparent_witness = Some(witness);
        report.all_degenerate = true;
        for s in &sections {
            report.sections.push(TwistedSection {
                i: s.i,
                side: s.side,
                b_exponent: s.exponent(),
                center_order: m,
                b_exponent_alt: s.exponent(),
                center_order_alt: m,
            });
        }
    } else {
        let e = 1 + 2 * k * r;
        let alt = 1 + k * r;
        if gcd(e, nn) != 1 || gcd(alt, nn) != 1 {
            return Err(Error::consistency(format!(
                "{p}: twisted exponents {e}, {alt} not coprime to N"
            )));
        }
        report.twisted_exponent = Some(e % nn);
        report.twisted_exponent_alt = Some(alt % nn);
        for s in &sections {
            let shift = |x: u64| UnitRootExp::new(s.side.sign() * x as i64, nn) * s.t_exp;
            let (b, b_alt) = (shift(2 * k * r), shift(k * r));
            let center = gcd(b.exponent(), nn);
            let center_alt = gcd(b_alt.exponent(), nn);
            if (center == 1) != (center_alt == 1) {
                report.reading_disagreements.push(s.i);
            }
            report.sections.push(TwistedSection {
                i: s.i,
                side: s.side,
                b_exponent: b.exponent(),
                center_order: center,
                b_exponent_alt: b_alt.exponent(),
                center_order_alt: center_alt,
            });
        }
        report.all_degenerate = report.sections.iter().all(|s| s.center_order > 1);
    }
    report.nondegenerate_exists = report.sections.iter().any(|s| s.center_order == 1);
    Ok(report)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SubcategoryReport {
    pub version: u32,
    #[serde(rename = "N")]
    pub n: u32,
    pub k: u32,
    pub m: u64,
    #[serde(rename = "n")]
    pub n_part: u64,
    pub count: usize,
    pub claimed_count: u64,
    /// `2N/m`.
    pub count_by_formula: u64,
    pub units_by_gcd: bool,
    pub units_by_series: bool,
    /// Smallest `M` with `n | k^M`.
    pub series_length: u32,
    pub all_nondegenerate: bool,
}

/// Braidings on the fusion category of MC.
pub fn classify_subcategory(p: SuNk) -> Result<SubcategoryReport> {
    let sections = enumerate_sections(p)?;
    let (nn, k) = (p.n as u64, p.k as u64);
    let (m, n) = compute_mn(nn, k);
    let mut restricted: Vec<BraidingInvariant> = sections
        .iter()
        .map(|s| BraidingInvariant::of_restriction(p, s))
        .collect();
    restricted.sort();
    restricted.dedup();

    let mut series_length = 0u32;
    let mut power = BigInt::one();
    while !(&power % n).is_zero() {
        power *= k;
        series_length += 1;
    }
    let units_by_gcd = (0..nn).all(|i| gcd(2 * i * k + 1, n) == 1);
    // (1 + 2ki)·Σ_{t<M} (−2ki)^t = 1 − (−2ki)^M ≡ 1, since n | (2ki)^M.
    let units_by_series = (0..nn).all(|i| {
        let x = BigInt::from(2 * k * i);
        let modn = |v: BigInt| ((v % n) + n) % n;
        let series: BigInt = (0..series_length).map(|t| (-&x).pow(t)).sum();
        let inverse_ok = modn((BigInt::one() + &x) * series) == BigInt::from(1 % n);
        let printed_ok = modn(BigInt::one() - x.pow(series_length)) == BigInt::from(1 % n);
        inverse_ok && printed_ok
    });
    let all_nondegenerate = restricted
        .iter()
        .all(|inv| inv.b_exps.iter().skip(1).all(|&e| e != 0));
    Ok(SubcategoryReport {
        version: DOCUMENT_VERSION,
        n: p.n,
        k: p.k,
        m,
        n_part: n,
        count: restricted.len(),
        claimed_count: 2 * n,
        count_by_formula: 2 * nn / m,
        units_by_gcd,
        units_by_series,
        series_length,
        all_nondegenerate,
    })
}
