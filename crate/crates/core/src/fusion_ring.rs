//! The fusion ring of SU(N)_k.
//!
//! Labels are built by [`LabelSet`]; the ring itself is assembled from the
//! column rule [`fuse_column`] through the Pieri recursion
//! `L_λ = L_{μ} · L_{C_c} − Σ_{ν ≠ λ} L_ν`, where `c` is the number of rows of
//! `λ`, `μ` is `λ` minus its first column and `ν` runs over the other terms of
//! `C_c ⊗ μ`. Every `ν` precedes `λ` in canonical order, so one pass suffices.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::young::{enumerate_labels, fuse_column, SuNk, YoungDiagram};

/// Largest rank for which dense structure constants are materialized.
pub const MAX_RING_RANK: usize = 330;

/// Schema version stamped into every serialized document.
pub const DOCUMENT_VERSION: u32 = 1;

/// Labels of SU(N)_k with grades and the simple-current action. Cheap even
/// when the full ring would be too large to store.
#[derive(Clone, Debug)]
pub struct LabelSet {
    params: SuNk,
    labels: Vec<YoungDiagram>,
    index: HashMap<YoungDiagram, usize>,
    grades: Vec<u32>,
    current: Vec<usize>,
}

impl LabelSet {
    pub fn new(params: SuNk) -> Self {
        let labels = enumerate_labels(params);
        let index: HashMap<_, _> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        let grades = labels.iter().map(|l| l.grade(params.n)).collect();
        let current = labels
            .iter()
            .map(|l| index[&l.simple_current(params)])
            .collect();
        LabelSet {
            params,
            labels,
            index,
            grades,
            current,
        }
    }

    pub fn params(&self) -> SuNk {
        self.params
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[YoungDiagram] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &YoungDiagram {
        &self.labels[i]
    }

    pub fn index_of(&self, l: &YoungDiagram) -> Option<usize> {
        self.index.get(l).copied()
    }

    pub fn grade(&self, i: usize) -> u32 {
        self.grades[i]
    }

    pub fn grades(&self) -> &[u32] {
        &self.grades
    }

    pub fn unit(&self) -> usize {
        0
    }

    /// Index of `g^p ⊗ λ_i`, using the Dynkin rotation.
    pub fn shift_by_current(&self, i: usize, p: u64) -> usize {
        let mut x = i;
        for _ in 0..p % self.params.n64() {
            x = self.current[x];
        }
        x
    }

    /// Index of the rectangle `g^p` (p rows of length k).
    pub fn current_power(&self, p: u64) -> usize {
        self.shift_by_current(self.unit(), p)
    }
}

/// Dense structure constants `N_{ab}^c`, stored at `(a·r + b)·r + c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    rank: usize,
    unit: usize,
    data: Vec<u32>,
}

impl StructureConstants {
    pub fn new(rank: usize, unit: usize, data: Vec<u32>) -> Result<Self> {
        if data.len() != rank * rank * rank || unit >= rank.max(1) {
            return Err(Error::param(format!(
                "structure constants of rank {rank} need {} entries, got {}",
                rank * rank * rank,
                data.len()
            )));
        }
        Ok(StructureConstants { rank, unit, data })
    }

    /// Builds constants from one left-multiplication matrix per basis element.
    pub fn from_matrices(unit: usize, matrices: &[Vec<Vec<u32>>]) -> Result<Self> {
        let rank = matrices.len();
        let mut data = Vec::with_capacity(rank * rank * rank);
        for m in matrices {
            if m.len() != rank || m.iter().any(|row| row.len() != rank) {
                return Err(Error::param("fusion matrices must be square of size rank"));
            }
            data.extend(m.iter().flatten().copied());
        }
        Self::new(rank, unit, data)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize, c: usize) -> u32 {
        self.data[(a * self.rank + b) * self.rank + c]
    }

    pub fn set(&mut self, a: usize, b: usize, c: usize, value: u32) {
        self.data[(a * self.rank + b) * self.rank + c] = value;
    }

    /// Row `b` of the matrix of `a`: the coefficients of `a ⊗ b`.
    pub fn row(&self, a: usize, b: usize) -> &[u32] {
        let start = (a * self.rank + b) * self.rank;
        &self.data[start..start + self.rank]
    }

    /// Nonzero terms of `a ⊗ b`.
    pub fn product(&self, a: usize, b: usize) -> Vec<(usize, u32)> {
        self.row(a, b)
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(|(c, &v)| (c, v))
            .collect()
    }

    pub fn matrix(&self, a: usize) -> Vec<Vec<u32>> {
        (0..self.rank).map(|b| self.row(a, b).to_vec()).collect()
    }

    /// If the matrix of `a` is a permutation matrix, the image of each basis
    /// element under `a ⊗ -`.
    pub fn as_permutation(&self, a: usize) -> Option<Vec<usize>> {
        let mut perm = Vec::with_capacity(self.rank);
        let mut hit = vec![false; self.rank];
        for b in 0..self.rank {
            match self.product(a, b).as_slice() {
                [(c, 1)] if !hit[*c] => {
                    hit[*c] = true;
                    perm.push(*c);
                }
                _ => return None,
            }
        }
        Some(perm)
    }
}

/// How a label's matrix is obtained from earlier ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recipe {
    /// Height of the column object `C_c`.
    pub column: u32,
    /// Index of `λ` with its first column removed.
    pub rest: usize,
    /// Other terms of `C_c ⊗ rest`, to be subtracted.
    pub subtract: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct FusionRing {
    labels: LabelSet,
    constants: StructureConstants,
    dual: Vec<usize>,
    recipes: Vec<Option<Recipe>>,
    columns: Vec<usize>,
}

impl FusionRing {
    pub fn build(params: SuNk) -> Result<Self> {
        let labels = LabelSet::new(params);
        let r = labels.len();
        if r > MAX_RING_RANK {
            return Err(Error::param(format!(
                "{params} has rank {r}; dense rings are limited to rank {MAX_RING_RANK}"
            )));
        }

        // Sparse column operators: column_ops[j-1][d] = children of C_j ⊗ d.
        let mut column_ops: Vec<Vec<Vec<usize>>> = Vec::new();
        for j in 1..params.n {
            let mut op = Vec::with_capacity(r);
            for l in labels.labels() {
                let kids = fuse_column(j, l, params)?
                    .iter()
                    .map(|c| {
                        labels.index_of(c).ok_or_else(|| {
                            Error::consistency(format!("{c} produced by fusion is not a label"))
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                op.push(kids);
            }
            column_ops.push(op);
        }
        let columns = (1..params.n)
            .map(|j| labels.index_of(&YoungDiagram::column(j)))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::consistency("column object missing"))?;

        let mut data = vec![0u32; r * r * r];
        let mut recipes = vec![None; r];
        let unit = labels.unit();
        for b in 0..r {
            data[(unit * r + b) * r + b] = 1;
        }

        let mut scratch = vec![0i64; r * r];
        for lam in 1..r {
            let diagram = labels.label(lam);
            let column = diagram.num_rows();
            let rest_diagram = diagram.without_first_column();
            let rest = labels.index_of(&rest_diagram).expect("sub-diagram fits");
            let terms = &column_ops[column as usize - 1][rest];
            if !terms.contains(&lam) {
                return Err(Error::consistency(format!(
                    "{diagram} missing from C_{column} ⊗ {rest_diagram}"
                )));
            }
            let subtract: Vec<usize> = terms.iter().copied().filter(|&t| t != lam).collect();
            if let Some(&late) = subtract.iter().find(|&&t| t > lam) {
                return Err(Error::consistency(format!(
                    "{} in C_{column} ⊗ {rest_diagram} does not precede {diagram}",
                    labels.label(late)
                )));
            }

            scratch.iter_mut().for_each(|x| *x = 0);
            let op = &column_ops[column as usize - 1];
            for b in 0..r {
                let row = &data[(rest * r + b) * r..(rest * r + b + 1) * r];
                for (d, &coef) in row.iter().enumerate() {
                    if coef != 0 {
                        for &c in &op[d] {
                            scratch[b * r + c] += coef as i64;
                        }
                    }
                }
            }
            for &nu in &subtract {
                let block = &data[nu * r * r..(nu + 1) * r * r];
                for (s, &v) in scratch.iter_mut().zip(block) {
                    *s -= v as i64;
                }
            }
            let out = &mut data[lam * r * r..(lam + 1) * r * r];
            for (o, &s) in out.iter_mut().zip(&scratch) {
                *o = u32::try_from(s).map_err(|_| {
                    Error::consistency(format!("negative structure constant for {diagram}"))
                })?;
            }
            recipes[lam] = Some(Recipe {
                column,
                rest,
                subtract,
            });
        }

        let constants = StructureConstants::new(r, unit, data)?;
        let dual = (0..r)
            .map(|a| {
                let hits: Vec<usize> = (0..r).filter(|&b| constants.get(a, b, unit) != 0).collect();
                match hits.as_slice() {
                    [b] if constants.get(a, *b, unit) == 1 => Ok(*b),
                    _ => Err(Error::consistency(format!(
                        "label {} has no unique dual",
                        labels.label(a)
                    ))),
                }
            })
            .collect::<Result<Vec<_>>>()?;

        Ok(FusionRing {
            labels,
            constants,
            dual,
            recipes,
            columns,
        })
    }

    pub fn params(&self) -> SuNk {
        self.labels.params()
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn label_set(&self) -> &LabelSet {
        &self.labels
    }

    pub fn labels(&self) -> &[YoungDiagram] {
        self.labels.labels()
    }

    pub fn label(&self, i: usize) -> &YoungDiagram {
        self.labels.label(i)
    }

    pub fn index_of(&self, l: &YoungDiagram) -> Option<usize> {
        self.labels.index_of(l)
    }

    pub fn constants(&self) -> &StructureConstants {
        &self.constants
    }

    pub fn unit(&self) -> usize {
        self.constants.unit()
    }

    /// Index of the generating object `X` (one box).
    pub fn generator(&self) -> usize {
        self.columns[0]
    }

    /// Index of the column `C_j` of height `j`, `1 ≤ j ≤ N−1`.
    pub fn column(&self, j: u32) -> usize {
        self.columns[j as usize - 1]
    }

    /// Index of `g`, the 1×k rectangle.
    pub fn g(&self) -> usize {
        self.labels.current_power(1)
    }

    pub fn grade(&self, a: usize) -> u32 {
        self.labels.grade(a)
    }

    pub fn grades(&self) -> &[u32] {
        self.labels.grades()
    }

    pub fn dual(&self, a: usize) -> usize {
        self.dual[a]
    }

    pub fn dual_permutation(&self) -> &[usize] {
        &self.dual
    }

    pub fn recipe(&self, a: usize) -> Option<&Recipe> {
        self.recipes[a].as_ref()
    }

    pub fn matrix(&self, a: usize) -> Vec<Vec<u32>> {
        self.constants.matrix(a)
    }

    /// The `N` invertible labels, ordered as `g^0, g^1, …, g^{N−1}`.
    pub fn pointed_objects(&self) -> Result<Vec<usize>> {
        let p = self.params();
        let mut by_matrix: Vec<usize> = (0..self.rank())
            .filter(|&a| self.constants.as_permutation(a).is_some())
            .collect();
        let rectangles: Vec<usize> = (0..p.n)
            .map(|i| {
                self.index_of(&YoungDiagram::rectangle(i, p.k))
                    .ok_or_else(|| Error::consistency(format!("{i}×{} rectangle missing", p.k)))
            })
            .collect::<Result<_>>()?;
        let mut sorted = rectangles.clone();
        sorted.sort_unstable();
        by_matrix.sort_unstable();
        if by_matrix != sorted {
            return Err(Error::consistency(format!(
                "invertible labels {by_matrix:?} differ from rectangles {sorted:?}"
            )));
        }
        // g^i must be the i×k rectangle.
        let g = self.g();
        let mut power = self.unit();
        for (i, &rect) in rectangles.iter().enumerate() {
            if power != rect {
                return Err(Error::consistency(format!("g^{i} is not the {i}×k rectangle")));
            }
            power = match self.constants.product(g, power).as_slice() {
                [(c, 1)] => *c,
                _ => return Err(Error::consistency("g is not invertible")),
            };
        }
        if power != self.unit() {
            return Err(Error::consistency("g^N is not the unit"));
        }
        Ok(rectangles)
    }

    /// Restriction to labels whose grade lies in `dZ_N`.
    pub fn graded_subring(&self, d: u32) -> Result<GradedSubring> {
        let n = self.params().n;
        if d == 0 || n % d != 0 {
            return Err(Error::param(format!("{d} does not divide N = {n}")));
        }
        let members: Vec<usize> = (0..self.rank()).filter(|&a| self.grade(a) % d == 0).collect();
        let position: HashMap<usize, usize> =
            members.iter().enumerate().map(|(i, &a)| (a, i)).collect();
        let s = members.len();
        let mut data = vec![0u32; s * s * s];
        for (ia, &a) in members.iter().enumerate() {
            for (ib, &b) in members.iter().enumerate() {
                for (c, v) in self.constants.product(a, b) {
                    let ic = *position.get(&c).ok_or_else(|| {
                        Error::consistency(format!("graded piece for d={d} not closed under fusion"))
                    })?;
                    data[(ia * s + ib) * s + ic] = v;
                }
            }
            if !position.contains_key(&self.dual(a)) {
                return Err(Error::consistency("graded piece not closed under duality"));
            }
        }
        let unit = position[&self.unit()];
        Ok(GradedSubring {
            divisor: d,
            members,
            constants: StructureConstants::new(s, unit, data)?,
        })
    }

    pub fn document(&self) -> RingDocument {
        let p = self.params();
        RingDocument {
            version: DOCUMENT_VERSION,
            n: p.n,
            k: p.k,
            rank: self.rank(),
            labels: self.labels().iter().map(|l| l.rows().to_vec()).collect(),
            unit: self.unit(),
            grades: self.grades().to_vec(),
            dual: self.dual.clone(),
            matrices: (0..self.rank()).map(|a| self.matrix(a)).collect(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct GradedSubring {
    pub divisor: u32,
    /// Parent indices of the member labels, ascending.
    pub members: Vec<usize>,
    pub constants: StructureConstants,
}

impl GradedSubring {
    pub fn rank(&self) -> usize {
        self.members.len()
    }
}

/// Canonical serialized form of a ring. `matrices[a][b][c] = N_{ab}^c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingDocument {
    pub version: u32,
    #[serde(rename = "N")]
    pub n: u32,
    pub k: u32,
    pub rank: usize,
    pub labels: Vec<Vec<u32>>,
    pub unit: usize,
    pub grades: Vec<u32>,
    pub dual: Vec<usize>,
    pub matrices: Vec<Vec<Vec<u32>>>,
}
