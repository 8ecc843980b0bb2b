//! Young diagrams labelling the simple objects of SU(N)_k.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::binomial;

/// The pair `(N, k)`: rank parameter of SU(N) and the level.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SuNk {
    pub n: u32,
    pub k: u32,
}

impl SuNk {
    pub fn new(n: u32, k: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::param(format!("N must be at least 2, got {n}")));
        }
        if k < 1 {
            return Err(Error::param(format!("k must be at least 1, got {k}")));
        }
        Ok(SuNk { n, k })
    }

    /// Number of simple objects, `binomial(N+k-1, N-1)`.
    pub fn rank(&self) -> u64 {
        binomial((self.n + self.k - 1) as u64, (self.n - 1) as u64)
    }

    pub(crate) fn n64(&self) -> u64 {
        self.n as u64
    }
}

impl fmt::Display for SuNk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SU({})_{}", self.n, self.k)
    }
}

/// A partition given by weakly decreasing row lengths, trailing zeros
/// stripped. The empty diagram is the unit label.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct YoungDiagram {
    rows: Vec<u32>,
}

impl YoungDiagram {
    pub fn new(mut rows: Vec<u32>) -> Result<Self> {
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::param(format!(
                "row lengths must be weakly decreasing: {rows:?}"
            )));
        }
        while rows.last() == Some(&0) {
            rows.pop();
        }
        Ok(YoungDiagram { rows })
    }

    pub fn empty() -> Self {
        YoungDiagram { rows: Vec::new() }
    }

    /// `rows` rows of length `len` each.
    pub fn rectangle(rows: u32, len: u32) -> Self {
        if len == 0 {
            return Self::empty();
        }
        YoungDiagram {
            rows: vec![len; rows as usize],
        }
    }

    /// A single column of `height` boxes.
    pub fn column(height: u32) -> Self {
        Self::rectangle(height, 1)
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn boxes(&self) -> u32 {
        self.rows.iter().sum()
    }

    pub fn num_rows(&self) -> u32 {
        self.rows.len() as u32
    }

    /// Number of columns, i.e. the length of the first row.
    pub fn width(&self) -> u32 {
        self.rows.first().copied().unwrap_or(0)
    }

    /// Column lengths (the conjugate partition).
    pub fn columns(&self) -> Vec<u32> {
        (0..self.width())
            .map(|c| self.rows.iter().filter(|&&r| r > c).count() as u32)
            .collect()
    }

    /// Whether the diagram labels a simple object of SU(N)_k.
    pub fn fits(&self, p: SuNk) -> bool {
        self.num_rows() < p.n && self.width() <= p.k
    }

    pub fn check_fits(&self, p: SuNk) -> Result<()> {
        if self.fits(p) {
            Ok(())
        } else {
            Err(Error::param(format!("{self} is not a label of {p}")))
        }
    }

    /// Universal grade: number of boxes mod N.
    pub fn grade(&self, n: u32) -> u32 {
        self.boxes() % n
    }

    /// The diagram with its first column removed.
    pub fn without_first_column(&self) -> Self {
        let rows = self.rows.iter().filter(|&&r| r > 1).map(|r| r - 1).collect();
        YoungDiagram { rows }
    }

    /// Affine Dynkin labels `(λ_0, λ_1, …, λ_{N-1})` with `λ_0 = k - m_1`.
    pub fn dynkin(&self, p: SuNk) -> Vec<u32> {
        let padded = self.padded(p.n as usize - 1);
        let mut out = Vec::with_capacity(p.n as usize);
        out.push(p.k - padded[0]);
        for i in 0..padded.len() {
            let next = padded.get(i + 1).copied().unwrap_or(0);
            out.push(padded[i] - next);
        }
        out
    }

    pub fn from_dynkin(labels: &[u32]) -> Self {
        let finite = &labels[1..];
        let rows = (0..finite.len()).map(|i| finite[i..].iter().sum()).collect();
        YoungDiagram::new(rows).expect("suffix sums are weakly decreasing")
    }

    /// Fusion with the invertible object `g` (the 1×k row): rotation of
    /// the affine Dynkin labels.
    pub fn simple_current(&self, p: SuNk) -> Self {
        let mut d = self.dynkin(p);
        d.rotate_right(1);
        Self::from_dynkin(&d)
    }

    fn padded(&self, len: usize) -> Vec<u32> {
        let mut rows = self.rows.clone();
        rows.resize(len.max(rows.len()), 0);
        rows
    }
}

impl Ord for YoungDiagram {
    /// Canonical label order: box count, then lexicographic on rows.
    fn cmp(&self, other: &Self) -> Ordering {
        self.boxes()
            .cmp(&other.boxes())
            .then_with(|| self.rows.cmp(&other.rows))
    }
}

impl PartialOrd for YoungDiagram {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "[0]");
        }
        write!(f, "(")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

/// All labels of SU(N)_k in canonical order.
pub fn enumerate_labels(p: SuNk) -> Vec<YoungDiagram> {
    fn rec(p: SuNk, prefix: &mut Vec<u32>, cap: u32, out: &mut Vec<YoungDiagram>) {
        if prefix.len() == p.n as usize - 1 {
            out.push(YoungDiagram::new(prefix.clone()).expect("built decreasing"));
            return;
        }
        for r in 0..=cap {
            prefix.push(r);
            rec(p, prefix, r, out);
            prefix.pop();
        }
    }
    let mut out = Vec::with_capacity(p.rank() as usize);
    rec(p, &mut Vec::new(), p.k, &mut out);
    out.sort();
    out
}

/// `X ⊗ μ` for the generating object `X` (one box).
pub fn fuse_generator(mu: &YoungDiagram, p: SuNk) -> Result<Vec<YoungDiagram>> {
    fuse_column(1, mu, p)
}

/// `Λ^j X ⊗ μ`: add a vertical strip of `j` boxes (at most one per row) to
/// `μ`, delete the first column whenever it reaches length N, and drop
/// children wider than k. Every child has multiplicity one.
pub fn fuse_column(j: u32, mu: &YoungDiagram, p: SuNk) -> Result<Vec<YoungDiagram>> {
    mu.check_fits(p)?;
    if j == 0 || j >= p.n {
        return Err(Error::param(format!(
            "column height must be in 1..{}, got {j}",
            p.n
        )));
    }
    let n = p.n as usize;
    let base = mu.padded(n);
    let mut out = Vec::new();
    let mut chosen = vec![false; n];
    strips(&base, j as usize, 0, &mut chosen, &mut |sel| {
        let mut rows: Vec<u32> = base
            .iter()
            .zip(sel)
            .map(|(&r, &s)| r + s as u32)
            .collect();
        if rows[n - 1] > 0 {
            for r in rows.iter_mut() {
                *r -= 1;
            }
        }
        if rows[0] <= p.k {
            out.push(YoungDiagram::new(rows).expect("strip keeps rows decreasing"));
        }
    });
    out.sort();
    Ok(out)
}

fn strips(
    base: &[u32],
    left: usize,
    row: usize,
    chosen: &mut [bool],
    emit: &mut dyn FnMut(&[bool]),
) {
    if left == 0 {
        emit(chosen);
        return;
    }
    if row >= base.len() || base.len() - row < left {
        return;
    }
    // Adding to `row` keeps the shape a partition iff the row above is longer
    // (or also receives a box).
    let room = row == 0 || base[row - 1] > base[row] || chosen[row - 1];
    if room {
        chosen[row] = true;
        strips(base, left - 1, row + 1, chosen, emit);
        chosen[row] = false;
    }
    strips(base, left, row + 1, chosen, emit);
}
