//! Based rings with nonnegative integer structure constants.
//!
//! A [`FusionRing`] stores `N[i][j][k]`, the multiplicity of `b_k` in
//! `b_i·b_j`, densely. The unit is an index set so that multifusion rings
//! (decomposed units) are representable; the duality involution is optional
//! because module fusion tables of `Mod(C)` under the relative product are
//! unital and associative but need not be rigid.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::{ElementNames, FiniteAbelianGroup};
use crate::intmat;

/// Largest rank of a dense structure-constant tensor.
pub const DEFAULT_RANK_CAP: usize = 256;

pub const FP_TOLERANCE: f64 = 1e-12;
pub const FP_MAX_ITERATIONS: usize = 10_000;
pub const INTEGRALITY_TOLERANCE: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionRing {
    labels: Vec<String>,
    unit: Vec<usize>,
    dual: Option<Vec<usize>>,
    n: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct FusionRingJson {
    labels: Vec<String>,
    unit: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    dual: Option<Vec<usize>>,
    #[serde(rename = "N")]
    n: Vec<Vec<Vec<u32>>>,
}

impl Serialize for FusionRing {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for FusionRing {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let json = FusionRingJson::deserialize(d)?;
        FusionRing::new(json.labels, json.unit, json.dual, json.n).map_err(serde::de::Error::custom)
    }
}

impl FusionRing {
    /// Checks shapes and index ranges; the ring axioms are checked by
    /// [`FusionRing::validate`].
    pub fn new(
        labels: Vec<String>,
        unit: Vec<usize>,
        dual: Option<Vec<usize>>,
        n: Vec<Vec<Vec<u32>>>,
    ) -> Result<Self> {
        let rank = labels.len();
        if rank == 0 {
            return Err(Error::Malformed(
                "a fusion ring needs at least one basis element".into(),
            ));
        }
        if rank > DEFAULT_RANK_CAP {
            return Err(Error::CapExceeded {
                what: "ring rank",
                size: rank as u64,
                cap: DEFAULT_RANK_CAP as u64,
            });
        }
        if n.len() != rank {
            return Err(Error::Malformed(format!(
                "N has {} slices, expected {rank}",
                n.len()
            )));
        }
        for (i, slice) in n.iter().enumerate() {
            if slice.len() != rank {
                return Err(Error::Malformed(format!(
                    "N[{i}] has {} rows, expected {rank}",
                    slice.len()
                )));
            }
            for (j, row) in slice.iter().enumerate() {
                if row.len() != rank {
                    return Err(Error::Malformed(format!(
                        "N[{i}][{j}] has {} entries, expected {rank}",
                        row.len()
                    )));
                }
            }
        }
        if unit.is_empty() {
            return Err(Error::Malformed("unit index set is empty".into()));
        }
        if let Some(&u) = unit.iter().find(|&&u| u >= rank) {
            return Err(Error::Malformed(format!("unit index {u} out of range")));
        }
        if unit.iter().collect::<HashSet<_>>().len() != unit.len() {
            return Err(Error::Malformed("unit indices repeat".into()));
        }
        if let Some(d) = &dual {
            if d.len() != rank {
                return Err(Error::Malformed(format!(
                    "dual has {} entries, expected {rank}",
                    d.len()
                )));
            }
            if let Some(&x) = d.iter().find(|&&x| x >= rank) {
                return Err(Error::Malformed(format!("dual index {x} out of range")));
            }
        }
        let flat = n.into_iter().flatten().flatten().collect();
        Ok(FusionRing {
            labels,
            unit,
            dual,
            n: flat,
        })
    }

    fn from_flat(
        labels: Vec<String>,
        unit: Vec<usize>,
        dual: Option<Vec<usize>>,
        n: Vec<u32>,
    ) -> Self {
        debug_assert_eq!(n.len(), labels.len().pow(3));
        FusionRing {
            labels,
            unit,
            dual,
            n,
        }
    }

    fn to_json(&self) -> FusionRingJson {
        let r = self.rank();
        FusionRingJson {
            labels: self.labels.clone(),
            unit: self.unit.clone(),
            dual: self.dual.clone(),
            n: (0..r)
                .map(|i| {
                    (0..r)
                        .map(|j| (0..r).map(|k| self.n(i, j, k)).collect())
                        .collect()
                })
                .collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[usize] {
        &self.unit
    }

    pub fn dual(&self) -> Option<&[usize]> {
        self.dual.as_deref()
    }

    #[inline]
    pub fn n(&self, i: usize, j: usize, k: usize) -> u32 {
        let r = self.rank();
        self.n[(i * r + j) * r + k]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// `b_i · b_j` as a coefficient vector.
    pub fn product(&self, i: usize, j: usize) -> &[u32] {
        let r = self.rank();
        &self.n[(i * r + j) * r..(i * r + j + 1) * r]
    }

    /// Left multiplication by `b_i`: entry `[j][k] = N[i][j][k]`.
    pub fn left_matrix(&self, i: usize) -> Vec<Vec<u32>> {
        (0..self.rank())
            .map(|j| self.product(i, j).to_vec())
            .collect()
    }

    /// Every left multiplication matrix is a permutation matrix.
    pub fn is_pointed(&self) -> bool {
        let indices: Vec<usize> = (0..self.rank()).collect();
        block_is_pointed(self, &indices)
    }

    /// Checks associativity, the unit laws and duality exhaustively.
    pub fn validate(&self) -> ValidationReport {
        let r = self.rank();
        let mut report = ValidationReport::default();

        // support[x][k]: the nonzero terms of b_x·b_k
        let support: Vec<Vec<Vec<(usize, u64)>>> = (0..r)
            .map(|x| {
                (0..r)
                    .map(|k| {
                        self.product(x, k)
                            .iter()
                            .enumerate()
                            .filter(|(_, &c)| c != 0)
                            .map(|(m, &c)| (m, c as u64))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let mut left = vec![0u64; r * r];
        let mut right = vec![0u64; r * r];
        for i in 0..r {
            for j in 0..r {
                left.iter_mut().for_each(|v| *v = 0);
                right.iter_mut().for_each(|v| *v = 0);
                // (b_i b_j) b_k
                for &(m, c) in &support[i][j] {
                    for k in 0..r {
                        for &(l, v) in &support[m][k] {
                            left[k * r + l] += c * v;
                        }
                    }
                }
                // b_i (b_j b_k)
                for k in 0..r {
                    for &(m, c) in &support[j][k] {
                        for &(l, v) in &support[i][m] {
                            right[k * r + l] += c * v;
                        }
                    }
                }
                for (idx, (&a, &b)) in left.iter().zip(&right).enumerate() {
                    if a != b {
                        report.push(Violation::Associativity {
                            i,
                            j,
                            k: idx / r,
                            l: idx % r,
                            left: a,
                            right: b,
                        });
                    }
                }
            }
        }

        for j in 0..r {
            for k in 0..r {
                let expected = u64::from(j == k);
                let left: u64 = self.unit.iter().map(|&u| self.n(u, j, k) as u64).sum();
                if left != expected {
                    report.push(Violation::LeftUnit { j, k, value: left });
                }
                let right: u64 = self.unit.iter().map(|&u| self.n(j, u, k) as u64).sum();
                if right != expected {
                    report.push(Violation::RightUnit { j, k, value: right });
                }
            }
        }

        if let Some(dual) = &self.dual {
            for i in 0..r {
                if dual[dual[i]] != i {
                    report.push(Violation::DualNotInvolution { i });
                }
                for j in 0..r {
                    let value: u64 = self.unit.iter().map(|&u| self.n(i, j, u) as u64).sum();
                    if value != u64::from(dual[i] == j) {
                        report.push(Violation::Duality { i, j, value });
                    }
                }
            }
        }
        report
    }

    /// Renames basis elements; labels missing from `map` are kept.
    pub fn relabeled(&self, map: &HashMap<String, String>) -> Self {
        let labels = self
            .labels
            .iter()
            .map(|l| map.get(l).cloned().unwrap_or_else(|| l.clone()))
            .collect();
        FusionRing {
            labels,
            ..self.clone()
        }
    }

    /// Reorders the basis: new index `a` is old index `order[a]`.
    pub fn reordered(&self, order: &[usize]) -> Result<Self> {
        let r = self.rank();
        let mut seen = vec![false; r];
        if order.len() != r
            || order
                .iter()
                .any(|&o| o >= r || std::mem::replace(&mut seen[o], true))
        {
            return Err(Error::Malformed(format!(
                "{order:?} is not a permutation of 0..{r}"
            )));
        }
        let mut inverse = vec![0; r];
        for (a, &o) in order.iter().enumerate() {
            inverse[o] = a;
        }
        let labels = order.iter().map(|&o| self.labels[o].clone()).collect();
        let mut unit: Vec<usize> = self.unit.iter().map(|&u| inverse[u]).collect();
        unit.sort_unstable();
        let dual = self
            .dual
            .as_ref()
            .map(|d| order.iter().map(|&o| inverse[d[o]]).collect());
        let mut n = vec![0u32; r * r * r];
        for a in 0..r {
            for b in 0..r {
                for c in 0..r {
                    n[(a * r + b) * r + c] = self.n(order[a], order[b], order[c]);
                }
            }
        }
        Ok(FusionRing::from_flat(labels, unit, dual, n))
    }

    /// Reorders the basis to follow `labels`.
    pub fn reordered_by_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<Self> {
        let order: Vec<usize> = labels
            .iter()
            .map(|l| {
                self.index_of(l.as_ref())
                    .ok_or_else(|| Error::Malformed(format!("unknown label {}", l.as_ref())))
            })
            .collect::<Result<_>>()?;
        self.reordered(&order)
    }

    /// The based subring spanned by `indices`, which must contain the unit
    /// and be closed under multiplication (and duality, when present).
    pub fn restricted(&self, indices: &[usize]) -> Result<Self> {
        let keep: HashSet<usize> = indices.iter().copied().collect();
        if self.unit.iter().any(|u| !keep.contains(u)) {
            return Err(Error::Malformed("restriction must contain the unit".into()));
        }
        for &i in indices {
            for &j in indices {
                if let Some(k) =
                    (0..self.rank()).find(|k| self.n(i, j, *k) != 0 && !keep.contains(k))
                {
                    return Err(Error::Malformed(format!(
                        "{}·{} leaves the restriction through {}",
                        self.labels[i], self.labels[j], self.labels[k]
                    )));
                }
            }
        }
        let pos: HashMap<usize, usize> = indices.iter().enumerate().map(|(a, &i)| (i, a)).collect();
        let dual = match &self.dual {
            Some(d) => Some(
                indices
                    .iter()
                    .map(|&i| {
                        pos.get(&d[i]).copied().ok_or_else(|| {
                            Error::Malformed("restriction not closed under duality".into())
                        })
                    })
                    .collect::<Result<Vec<_>>>()?,
            ),
            None => None,
        };
        let r = indices.len();
        let mut n = vec![0u32; r * r * r];
        for (a, &i) in indices.iter().enumerate() {
            for (b, &j) in indices.iter().enumerate() {
                for (c, &k) in indices.iter().enumerate() {
                    n[(a * r + b) * r + c] = self.n(i, j, k);
                }
            }
        }
        let unit = self.unit.iter().map(|u| pos[u]).collect();
        Ok(FusionRing::from_flat(
            indices.iter().map(|&i| self.labels[i].clone()).collect(),
            unit,
            dual,
            n,
        ))
    }

    /// `b_i·b_j` written as `3⟨b⟩` or `⟨0⟩ + a`; `0` for the zero product.
    pub fn entry_text(&self, i: usize, j: usize) -> String {
        let terms: Vec<String> = self
            .product(i, j)
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| {
                if c == 1 {
                    self.labels[k].clone()
                } else {
                    format!("{c}{}", self.labels[k])
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    /// Aligned multiplication grid with a header row and column of labels.
    pub fn render_text(&self, corner: &str) -> String {
        let r = self.rank();
        let mut grid: Vec<Vec<String>> = Vec::with_capacity(r + 1);
        grid.push(
            std::iter::once(corner.to_string())
                .chain(self.labels.iter().cloned())
                .collect(),
        );
        for i in 0..r {
            grid.push(
                std::iter::once(self.labels[i].clone())
                    .chain((0..r).map(|j| self.entry_text(i, j)))
                    .collect(),
            );
        }
        let width = |c: usize| {
            grid.iter()
                .map(|row| row[c].chars().count())
                .max()
                .unwrap_or(0)
        };
        let widths: Vec<usize> = (0..=r).map(width).collect();
        let pad = |s: &str, w: usize| format!("{s}{}", " ".repeat(w - s.chars().count()));

        let mut out = String::new();
        for (row_idx, row) in grid.iter().enumerate() {
            let body: Vec<String> = row[1..]
                .iter()
                .zip(&widths[1..])
                .map(|(s, &w)| pad(s, w))
                .collect();
            let line = format!("{} | {}", pad(&row[0], widths[0]), body.join("  "));
            out.push_str(line.trim_end());
            out.push('\n');
            if row_idx == 0 {
                let rest: usize = widths[1..].iter().sum::<usize>() + 2 * (r - 1);
                out.push_str(&format!(
                    "{}-+-{}\n",
                    "-".repeat(widths[0]),
                    "-".repeat(rest)
                ));
            }
        }
        out
    }

    /// One CSV record per row, with a label header.
    pub fn render_csv(&self, corner: &str) -> String {
        let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
        let header: Vec<&str> = std::iter::once(corner)
            .chain(self.labels.iter().map(String::as_str))
            .collect();
        w.write_record(&header).expect("writing to memory");
        for i in 0..self.rank() {
            let row: Vec<String> = std::iter::once(self.labels[i].clone())
                .chain((0..self.rank()).map(|j| self.entry_text(i, j)))
                .collect();
            w.write_record(&row).expect("writing to memory");
        }
        String::from_utf8(w.into_inner().expect("flush to memory")).expect("labels are UTF-8")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "axiom")]
pub enum Violation {
    Associativity {
        i: usize,
        j: usize,
        k: usize,
        l: usize,
        left: u64,
        right: u64,
    },
    LeftUnit {
        j: usize,
        k: usize,
        value: u64,
    },
    RightUnit {
        j: usize,
        k: usize,
        value: u64,
    },
    Duality {
        i: usize,
        j: usize,
        value: u64,
    },
    DualNotInvolution {
        i: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Associativity {
                i,
                j,
                k,
                l,
                left,
                right,
            } => {
                write!(
                    f,
                    "associativity at (i,j,k,l)=({i},{j},{k},{l}): {left} != {right}"
                )
            }
            Violation::LeftUnit { j, k, value } => {
                write!(f, "left unit at (j,k)=({j},{k}): got {value}")
            }
            Violation::RightUnit { j, k, value } => {
                write!(f, "right unit at (j,k)=({j},{k}): got {value}")
            }
            Violation::Duality { i, j, value } => {
                write!(f, "duality at (i,j)=({i},{j}): unit coefficient {value}")
            }
            Violation::DualNotInvolution { i } => write!(f, "dual is not an involution at {i}"),
        }
    }
}

/// Outcome of [`FusionRing::validate`]: the first ten violations and the
/// total count.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    pub total: usize,
}

impl ValidationReport {
    const KEEP: usize = 10;

    fn push(&mut self, v: Violation) {
        if self.violations.len() < Self::KEEP {
            self.violations.push(v);
        }
        self.total += 1;
    }

    pub fn is_ok(&self) -> bool {
        self.total == 0
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return write!(f, "ok");
        }
        writeln!(f, "{} violation(s)", self.total)?;
        for v in &self.violations {
            writeln!(f, "  {v}")?;
        }
        Ok(())
    }
}

/// The rank-one ring `ℤ`.
pub fn rank_one(label: &str) -> FusionRing {
    FusionRing::from_flat(vec![label.to_string()], vec![0], Some(vec![0]), vec![1])
}

fn group_labels(g: &FiniteAbelianGroup) -> Vec<String> {
    let names = ElementNames::default();
    g.elements().map(|e| names.name(g, &e)).collect()
}

/// Grothendieck ring of `Vect_G`.
pub fn group_ring(g: &FiniteAbelianGroup) -> Result<FusionRing> {
    let r = g.order() as usize;
    if r > DEFAULT_RANK_CAP {
        return Err(Error::CapExceeded {
            what: "ring rank",
            size: r as u64,
            cap: DEFAULT_RANK_CAP as u64,
        });
    }
    let elems: Vec<Vec<u64>> = g.elements().collect();
    let mut n = vec![0u32; r * r * r];
    for i in 0..r {
        for j in 0..r {
            let k = g.index_of(&g.add(&elems[i], &elems[j]));
            n[(i * r + j) * r + k] = 1;
        }
    }
    let dual = elems.iter().map(|e| g.index_of(&g.neg(e))).collect();
    Ok(FusionRing::from_flat(
        group_labels(g),
        vec![0],
        Some(dual),
        n,
    ))
}

/// Tambara–Yamagami fusion rules: `G ∪ {m}` with `m·m = Σ_g g`.
pub fn tambara_yamagami(g: &FiniteAbelianGroup) -> Result<FusionRing> {
    let order = g.order() as usize;
    let r = order + 1;
    if r > DEFAULT_RANK_CAP {
        return Err(Error::CapExceeded {
            what: "ring rank",
            size: r as u64,
            cap: DEFAULT_RANK_CAP as u64,
        });
    }
    let base = group_ring(g)?;
    let m = order;
    let mut n = vec![0u32; r * r * r];
    let at = |i: usize, j: usize, k: usize| (i * r + j) * r + k;
    for i in 0..order {
        for j in 0..order {
            for k in 0..order {
                n[at(i, j, k)] = base.n(i, j, k);
            }
        }
        n[at(i, m, m)] = 1;
        n[at(m, i, m)] = 1;
        n[at(m, m, i)] = 1;
    }
    let mut labels = base.labels.clone();
    labels.push("m".into());
    let mut dual = base.dual.clone().expect("group rings carry duals");
    dual.push(m);
    Ok(FusionRing::from_flat(labels, vec![0], Some(dual), n))
}

/// Structure constants multiply: `N[(i,j)][(i',j')][(k,l)] = N_R[i][i'][k]·N_S[j][j'][l]`,
/// pairs in row-major order.
pub fn deligne_product(r: &FusionRing, s: &FusionRing) -> Result<FusionRing> {
    let (a, b) = (r.rank(), s.rank());
    let rank = a * b;
    if rank > DEFAULT_RANK_CAP {
        return Err(Error::CapExceeded {
            what: "ring rank",
            size: rank as u64,
            cap: DEFAULT_RANK_CAP as u64,
        });
    }
    let pair = |i: usize, j: usize| i * b + j;
    let mut n = vec![0u32; rank * rank * rank];
    for i in 0..a {
        for i2 in 0..a {
            for k in 0..a {
                let x = r.n(i, i2, k);
                if x == 0 {
                    continue;
                }
                for j in 0..b {
                    for j2 in 0..b {
                        for l in 0..b {
                            let y = s.n(j, j2, l);
                            if y != 0 {
                                n[(pair(i, j) * rank + pair(i2, j2)) * rank + pair(k, l)] = x * y;
                            }
                        }
                    }
                }
            }
        }
    }
    let labels = (0..a)
        .flat_map(|i| (0..b).map(move |j| (i, j)))
        .map(|(i, j)| format!("{}⊠{}", r.labels[i], s.labels[j]))
        .collect();
    let mut unit: Vec<usize> = r
        .unit
        .iter()
        .flat_map(|&u| s.unit.iter().map(move |&v| pair(u, v)))
        .collect();
    unit.sort_unstable();
    let dual = match (&r.dual, &s.dual) {
        (Some(dr), Some(ds)) => Some(
            (0..a)
                .flat_map(|i| (0..b).map(move |j| pair(dr[i], ds[j])))
                .collect(),
        ),
        _ => None,
    };
    Ok(FusionRing::from_flat(labels, unit, dual, n))
}

/// Block-diagonal sum: the unit is `unit_R ∪ unit_S` and cross products vanish.
pub fn direct_sum(r: &FusionRing, s: &FusionRing) -> Result<FusionRing> {
    let (a, b) = (r.rank(), s.rank());
    let rank = a + b;
    if rank > DEFAULT_RANK_CAP {
        return Err(Error::CapExceeded {
            what: "ring rank",
            size: rank as u64,
            cap: DEFAULT_RANK_CAP as u64,
        });
    }
    let mut n = vec![0u32; rank * rank * rank];
    for i in 0..a {
        for j in 0..a {
            for k in 0..a {
                n[(i * rank + j) * rank + k] = r.n(i, j, k);
            }
        }
    }
    for i in 0..b {
        for j in 0..b {
            for k in 0..b {
                n[((a + i) * rank + a + j) * rank + a + k] = s.n(i, j, k);
            }
        }
    }
    let labels = r.labels.iter().chain(&s.labels).cloned().collect();
    let unit = r
        .unit
        .iter()
        .copied()
        .chain(s.unit.iter().map(|u| a + u))
        .collect();
    let dual = match (&r.dual, &s.dual) {
        (Some(dr), Some(ds)) => Some(dr.iter().copied().chain(ds.iter().map(|d| a + d)).collect()),
        _ => None,
    };
    Ok(FusionRing::from_flat(labels, unit, dual, n))
}

/// Frobenius–Perron data of a ring.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FPData {
    pub per_basis: Vec<f64>,
    pub total: f64,
    pub integral: bool,
}

impl FPData {
    /// `Vect_G`: every simple is invertible, total `|G|`, exact.
    pub fn pointed(order: u64) -> Self {
        FPData {
            per_basis: vec![1.0; order as usize],
            total: order as f64,
            integral: true,
        }
    }

    /// The total rounded to an integer when it is certified integral.
    pub fn integral_total(&self) -> Option<u64> {
        self.integral.then(|| self.total.round() as u64)
    }
}

fn block_is_pointed(ring: &FusionRing, block: &[usize]) -> bool {
    block.iter().all(|&i| {
        let mut hit = vec![false; ring.rank()];
        block.iter().all(|&j| {
            let row = ring.product(i, j);
            let mut targets = block.iter().filter(|&&k| row[k] != 0);
            match (targets.next(), targets.next()) {
                (Some(&k), None) if row[k] == 1 && !std::mem::replace(&mut hit[k], true) => true,
                _ => false,
            }
        })
    })
}

/// Splits the basis into the diagonal blocks `{ i : u·i = i = i·u }`, one
/// per unit summand.
fn unit_blocks(ring: &FusionRing) -> Result<Vec<(usize, Vec<usize>)>> {
    let mut owner = vec![None; ring.rank()];
    for &u in ring.unit() {
        for i in 0..ring.rank() {
            if ring.n(u, i, i) == 1 && ring.n(i, u, i) == 1 {
                if owner[i].is_some() {
                    return Err(Error::Malformed(format!(
                        "{} lies in two unit blocks",
                        ring.labels[i]
                    )));
                }
                owner[i] = Some(u);
            }
        }
    }
    if let Some(i) = owner.iter().position(Option::is_none) {
        return Err(Error::Unsupported(format!(
            "FP dimensions of off-diagonal multifusion components ({} is not in a diagonal block)",
            ring.labels[i]
        )));
    }
    Ok(ring
        .unit()
        .iter()
        .map(|&u| {
            (
                u,
                (0..ring.rank()).filter(|&i| owner[i] == Some(u)).collect(),
            )
        })
        .collect())
}

/// FP dimensions by Perron power iteration, block by block.
///
/// Within a block the common Perron eigenvector `d` of the left
/// multiplication matrices is the dominant eigenvector of their sum;
/// `d_i` is read as the eigenvalue ratio of `N_i` on it. Pointed blocks take
/// the exact path `d_i = 1`.
pub fn fp_data(ring: &FusionRing) -> Result<FPData> {
    let mut per_basis = vec![0.0; ring.rank()];
    let mut exact = true;
    for (u, block) in unit_blocks(ring)? {
        if block_is_pointed(ring, &block) {
            for &i in &block {
                per_basis[i] = 1.0;
            }
            continue;
        }
        exact = false;
        let dims = perron_block(ring, u, &block)?;
        for (&i, d) in block.iter().zip(dims) {
            per_basis[i] = d;
        }
    }
    let total: f64 = per_basis.iter().map(|d| d * d).sum();
    let integral = if exact {
        true
    } else {
        (total - total.round()).abs() < INTEGRALITY_TOLERANCE && certify_squares(ring, &per_basis)
    };
    Ok(FPData {
        per_basis,
        total,
        integral,
    })
}

fn perron_block(ring: &FusionRing, unit: usize, block: &[usize]) -> Result<Vec<f64>> {
    let b = block.len();
    let mut sum = vec![vec![0.0f64; b]; b];
    for &i in block {
        for (a, &j) in block.iter().enumerate() {
            for (c, &k) in block.iter().enumerate() {
                sum[a][c] += ring.n(i, j, k) as f64;
            }
        }
    }
    let mut x = vec![1.0f64; b];
    let mut converged = false;
    for _ in 0..FP_MAX_ITERATIONS {
        let y: Vec<f64> = sum
            .iter()
            .map(|row| row.iter().zip(&x).map(|(s, v)| s * v).sum())
            .collect();
        let scale = y.iter().cloned().fold(0.0, f64::max);
        if scale <= 0.0 {
            return Err(Error::Malformed(
                "left multiplication sum annihilates the Perron vector".into(),
            ));
        }
        let next: Vec<f64> = y.iter().map(|v| v / scale).collect();
        let delta = next
            .iter()
            .zip(&x)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        x = next;
        if delta < FP_TOLERANCE {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence(FP_MAX_ITERATIONS));
    }
    let u_pos = block
        .iter()
        .position(|&i| i == unit)
        .expect("unit lies in its block");
    let norm = x[u_pos];
    let x: Vec<f64> = x.iter().map(|v| v / norm).collect();
    let mass: f64 = x.iter().sum();
    Ok(block
        .iter()
        .map(|&i| {
            let image: f64 = block
                .iter()
                .map(|&j| {
                    block
                        .iter()
                        .enumerate()
                        .map(|(c, &k)| ring.n(i, j, k) as f64 * x[c])
                        .sum::<f64>()
                })
                .sum();
            image / mass
        })
        .collect())
}

/// Exact check that every `d_i²` is an integer `q_i`: `q_i` must be within
/// tolerance of `d_i²` and `N_i² − q_i·I` must be singular, so `√q_i` is an
/// eigenvalue of `N_i` up to sign.
fn certify_squares(ring: &FusionRing, dims: &[f64]) -> bool {
    let r = ring.rank();
    let mut checked: HashMap<(Vec<u32>, i64), bool> = HashMap::new();
    (0..r).all(|i| {
        let sq = dims[i] * dims[i];
        let q = sq.round();
        if (sq - q).abs() >= INTEGRALITY_TOLERANCE {
            return false;
        }
        let m = ring.left_matrix(i);
        let key = (m.iter().flatten().copied().collect::<Vec<u32>>(), q as i64);
        *checked.entry(key).or_insert_with(|| {
            let mut sq_mat = vec![vec![0i64; r]; r];
            for a in 0..r {
                for c in 0..r {
                    sq_mat[a][c] = (0..r).map(|b| m[a][b] as i64 * m[b][c] as i64).sum();
                }
                sq_mat[a][a] -= q as i64;
            }
            intmat::is_singular(&sq_mat)
        })
    })
}

/// A basis bijection `π` with `N_S[π i][π j][π k] = N_R[i][j][k]` that maps
/// unit to unit, found by exhaustive backtracking.
pub fn find_isomorphism(r: &FusionRing, s: &FusionRing) -> Option<Vec<usize>> {
    if r.rank() != s.rank() || r.unit.len() != s.unit.len() {
        return None;
    }
    let rank = r.rank();
    let mut map = vec![usize::MAX; rank];
    let mut used = vec![false; rank];

    fn consistent(r: &FusionRing, s: &FusionRing, map: &[usize], upto: usize) -> bool {
        let i = upto;
        (0..=upto).all(|a| {
            (0..=upto).all(|b| {
                (0..=upto).all(|c| {
                    if a != i && b != i && c != i {
                        return true;
                    }
                    r.n(a, b, c) == s.n(map[a], map[b], map[c])
                })
            })
        })
    }

    fn search(
        r: &FusionRing,
        s: &FusionRing,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        i: usize,
    ) -> bool {
        if i == r.rank() {
            // products landing outside the assigned prefix are now all checked
            return true;
        }
        let is_unit = r.unit.contains(&i);
        for t in 0..s.rank() {
            if used[t] || s.unit.contains(&t) != is_unit {
                continue;
            }
            map[i] = t;
            used[t] = true;
            if consistent(r, s, map, i) && search(r, s, map, used, i + 1) {
                return true;
            }
            used[t] = false;
        }
        map[i] = usize::MAX;
        false
    }

    search(r, s, &mut map, &mut used, 0).then_some(map)
}
