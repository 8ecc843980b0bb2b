use std::fmt::Write;

use serde::Serialize;

use sunk::autoeq::{autoeq_report, orbit_count, AutoeqReport, OrbitReport};
use sunk::classifier::{
    classify, classify_subcategory, classify_twisted, ClassificationReport, SubcategoryReport,
    TwistedReport,
};
use sunk::fusion_ring::{RingDocument, DOCUMENT_VERSION};
use sunk::pointed::PointedDocument;
use sunk::verify::{verify_pair, PairVerification};
use sunk::{FusionRing, LabelSet, SuNk, UnitRootExp};

#[derive(Clone, Debug, Serialize)]
pub struct LabelsDocument {
    pub version: u32,
    #[serde(rename = "N")]
    pub n: u32,
    pub k: u32,
    pub rank: usize,
    pub labels: Vec<Vec<u32>>,
    pub grades: Vec<u32>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum Report {
    Labels(LabelsDocument),
    Fusion(RingDocument),
    Pointed(PointedDocument),
    Classify(ClassificationReport),
    Twisted(TwistedReport),
    Subcategory(SubcategoryReport),
    Autoeq(AutoeqReport),
    Orbits(OrbitReport),
    Verify(PairVerification),
}

impl Report {
    pub fn labels(p: SuNk) -> Report {
        let set = LabelSet::new(p);
        Report::Labels(LabelsDocument {
            version: DOCUMENT_VERSION,
            n: p.n,
            k: p.k,
            rank: set.len(),
            labels: set.labels().iter().map(|l| l.rows().to_vec()).collect(),
            grades: set.grades().to_vec(),
        })
    }

    pub fn fusion(p: SuNk) -> sunk::Result<Report> {
        Ok(Report::Fusion(FusionRing::build(p)?.document()))
    }

    pub fn pointed(n: u64, eta: UnitRootExp) -> sunk::Result<Report> {
        Ok(Report::Pointed(PointedDocument::new(n, eta)?))
    }

    pub fn classify(p: SuNk) -> sunk::Result<Report> {
        Ok(Report::Classify(classify(p)?))
    }

    pub fn twisted(p: SuNk) -> sunk::Result<Report> {
        Ok(Report::Twisted(classify_twisted(p)?))
    }

    pub fn subcategory(p: SuNk) -> sunk::Result<Report> {
        Ok(Report::Subcategory(classify_subcategory(p)?))
    }

    pub fn autoeq(p: SuNk) -> sunk::Result<Report> {
        Ok(Report::Autoeq(autoeq_report(p)?))
    }

    pub fn orbits(p: SuNk) -> sunk::Result<Report> {
        Ok(Report::Orbits(orbit_count(p)?))
    }

    pub fn verify(p: SuNk) -> sunk::Result<Report> {
        Ok(Report::Verify(verify_pair(p)?))
    }

    /// Computed value differing from the claimed one, if any.
    pub fn discrepancy(&self) -> Option<String> {
        let msg = match self {
            Report::Labels(_) | Report::Fusion(_) => return None,
            Report::Pointed(d) => {
                let want = if d.admissible { d.n as usize } else { 0 };
                if d.solutions.len() == want {
                    return None;
                }
                format!("N={}: {} pointed braidings, expected {want}", d.n, d.solutions.len())
            }
            Report::Classify(r) => {
                if r.count as u64 == r.claimed_count
                    && r.degenerate_exists == r.claimed_degenerate_exists
                {
                    return None;
                }
                format!(
                    "SU({})_{}: {} braidings (claimed {}), degenerate {} (claimed {})",
                    r.n, r.k, r.count, r.claimed_count, r.degenerate_exists,
                    r.claimed_degenerate_exists
                )
            }
            Report::Twisted(r) => {
                let degeneracy = if r.k % 2 == 1 {
                    r.all_degenerate
                } else {
                    r.nondegenerate_exists
                };
                if r.count as u64 == r.claimed_count && degeneracy {
                    return None;
                }
                format!(
                    "twisted SU({})_{}: {} braidings (claimed {}), degeneracy claim {}",
                    r.n, r.k, r.count, r.claimed_count, degeneracy
                )
            }
            Report::Subcategory(r) => {
                if r.count as u64 == r.claimed_count
                    && r.units_by_gcd
                    && r.units_by_series
                    && r.all_nondegenerate
                {
                    return None;
                }
                format!(
                    "MC of SU({})_{}: {} braidings (claimed {}), all nondegenerate {}",
                    r.n, r.k, r.count, r.claimed_count, r.all_nondegenerate
                )
            }
            Report::Autoeq(r) => {
                if r.table1_match && r.brsceq.matches_claim {
                    return None;
                }
                format!(
                    "SU({})_{}: group {:?} (claimed {:?}), braided order {} (claimed {})",
                    r.n, r.k, r.sceq.invariant_factors, r.sceq_claimed,
                    r.brsceq.summary.order, r.brsceq.claimed_order
                )
            }
            Report::Orbits(r) => {
                if r.orbit_count == r.claimed_orbit_count && r.accounting_consistent {
                    return None;
                }
                format!(
                    "SU({})_{}: {} orbits (claimed {}), accounting consistent {}",
                    r.n, r.k, r.orbit_count, r.claimed_orbit_count, r.accounting_consistent
                )
            }
            Report::Verify(r) => {
                if r.passed {
                    return None;
                }
                let failed: Vec<&str> = r
                    .checks
                    .iter()
                    .filter(|c| !c.passed)
                    .map(|c| c.name.as_str())
                    .collect();
                format!("SU({})_{}: failed {}", r.n, r.k, failed.join(", "))
            }
        };
        Some(msg)
    }

    pub fn table(&self) -> String {
        let mut s = String::new();
        match self {
            Report::Labels(d) => {
                let _ = writeln!(s, "SU({})_{}  rank {}", d.n, d.k, d.rank);
                let _ = writeln!(s, "{:>5}  {:>5}  rows", "index", "grade");
                for (i, (rows, g)) in d.labels.iter().zip(&d.grades).enumerate() {
                    let _ = writeln!(s, "{i:>5}  {g:>5}  {}", join(rows));
                }
            }
            Report::Fusion(d) => {
                let _ = writeln!(s, "SU({})_{}  rank {}  unit {}", d.n, d.k, d.rank, d.unit);
                for (a, m) in d.matrices.iter().enumerate() {
                    for (b, row) in m.iter().enumerate().filter(|(b, _)| a <= *b) {
                        let terms: Vec<String> = row
                            .iter()
                            .enumerate()
                            .filter(|(_, &v)| v > 0)
                            .map(|(c, &v)| if v == 1 { format!("{c}") } else { format!("{v}*{c}") })
                            .collect();
                        let _ = writeln!(s, "{a} x {b} = {}", terms.join(" + "));
                    }
                }
            }
            Report::Pointed(d) => {
                let _ = writeln!(
                    s,
                    "N={}  eta=exp(2πi·{}/{})  admissible {}",
                    d.n, d.eta_exponent, d.n, d.admissible
                );
                let _ = writeln!(s, "{:>8}  {:>6}", "s (2N)", "center");
                for (e, c) in d.solutions.iter().zip(&d.center_orders) {
                    let _ = writeln!(s, "{e:>8}  {c:>6}");
                }
            }
            Report::Classify(r) => {
                let _ = writeln!(
                    s,
                    "SU({})_{}  m={} n={}  braidings {} (claimed {})  degenerate {}",
                    r.n, r.k, r.m, r.n_part, r.count, r.claimed_count, r.degenerate_exists
                );
                let _ = writeln!(s, "{:>4}  {:<9}  {:>5}  {:>6}", "i", "side", "b", "center");
                for sec in &r.sections {
                    let _ = writeln!(
                        s,
                        "{:>4}  {:<9}  {:>5}  {:>6}",
                        sec.i,
                        format!("{:?}", sec.side),
                        sec.b_exponent,
                        sec.center_order
                    );
                }
            }
            Report::Twisted(r) => {
                let _ = writeln!(
                    s,
                    "twisted SU({})_{}  braidings {} (claimed {})  all degenerate {}  nondegenerate exists {}",
                    r.n, r.k, r.count, r.claimed_count, r.all_degenerate, r.nondegenerate_exists
                );
                let _ = writeln!(
                    s,
                    "{:>4}  {:<9}  {:>5}  {:>6}  {:>5}  {:>6}",
                    "i", "side", "b", "center", "b alt", "center"
                );
                for sec in &r.sections {
                    let _ = writeln!(
                        s,
                        "{:>4}  {:<9}  {:>5}  {:>6}  {:>5}  {:>6}",
                        sec.i,
                        format!("{:?}", sec.side),
                        sec.b_exponent,
                        sec.center_order,
                        sec.b_exponent_alt,
                        sec.center_order_alt
                    );
                }
            }
            Report::Subcategory(r) => {
                let _ = writeln!(
                    s,
                    "MC of SU({})_{}  m={} n={}  braidings {} (claimed {})  units {}/{}  all nondegenerate {}",
                    r.n, r.k, r.m, r.n_part, r.count, r.claimed_count, r.units_by_gcd,
                    r.units_by_series, r.all_nondegenerate
                );
            }
            Report::Autoeq(r) => {
                let _ = writeln!(
                    s,
                    "SU({})_{}  SCEq {:?} order {} (claimed {:?}, match {})  BrSCEq order {} (claimed {}, match {})  orbits {}",
                    r.n, r.k, r.sceq.invariant_factors, r.sceq_order, r.sceq_claimed,
                    r.table1_match, r.brsceq.summary.order, r.brsceq.claimed_order,
                    r.brsceq.matches_claim, r.orbit_count
                );
            }
            Report::Orbits(r) => {
                let _ = writeln!(
                    s,
                    "SU({})_{}  braidings {}  orbits {} (claimed {}, without action 3: {})  action 3 {}  stabilizer {}  accounting {}",
                    r.n, r.k, r.braidings, r.orbit_count, r.claimed_orbit_count,
                    r.orbit_count_without_action3, r.action3_engaged, r.stabilizer_order,
                    r.accounting_consistent
                );
            }
            Report::Verify(r) => {
                let _ = writeln!(s, "SU({})_{}  rank {}  passed {}", r.n, r.k, r.rank, r.passed);
                for c in &r.checks {
                    let status = if c.passed { "ok" } else { "FAIL" };
                    let _ = write!(s, "  {status:<4}  {}", c.name);
                    if let Some(d) = &c.detail {
                        let _ = write!(s, "  ({d})");
                    }
                    s.push('\n');
                }
            }
        }
        s
    }
}

fn join(v: &[u32]) -> String {
    let parts: Vec<String> = v.iter().map(u32::to_string).collect();
    format!("({})", parts.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn su(n: u32, k: u32) -> SuNk {
        SuNk::new(n, k).unwrap()
    }

    #[test]
    fn orbit_discrepancy_is_reported() {
        assert!(Report::orbits(su(4, 2)).unwrap().discrepancy().is_some());
        assert!(Report::orbits(su(3, 2)).unwrap().discrepancy().is_none());
    }

    #[test]
    fn classify_has_no_discrepancy() {
        for n in 2..=5 {
            for k in 2..=5 {
                assert!(Report::classify(su(n, k)).unwrap().discrepancy().is_none());
            }
        }
    }

    #[test]
    fn fusion_table_lists_products() {
        let t = Report::fusion(su(2, 2)).unwrap().table();
        assert!(t.contains("1 x 1 = 0 + 2"));
    }
}
