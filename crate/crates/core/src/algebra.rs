//! Finite semisimple algebras as formal sums of matrix algebras `M_n(D)`.
//!
//! Over an algebraically closed field every division algebra is the base
//! field; over ℝ it is one of ℝ, ℂ, ℍ.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::CharDescriptor;
use crate::intmat::rational_rank;

/// Largest `dim A · dim B` handled by [`tensor_brute_force`].
pub const BRUTE_FORCE_DIM_CAP: u64 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum FieldDescriptor {
    AlgClosed(CharDescriptor),
    Real,
}

impl FieldDescriptor {
    pub fn is_real(self) -> bool {
        self == FieldDescriptor::Real
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Real => write!(f, "R"),
            FieldDescriptor::AlgClosed(c) if c.value() == 0 => write!(f, "AC0"),
            FieldDescriptor::AlgClosed(c) => write!(f, "ACp:{}", c.value()),
        }
    }
}

impl FromStr for FieldDescriptor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "R" => Ok(FieldDescriptor::Real),
            "AC0" => Ok(FieldDescriptor::AlgClosed(CharDescriptor::ZERO)),
            _ => {
                let p = s
                    .strip_prefix("ACp:")
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| Error::Malformed(format!("unknown field descriptor {s:?}")))?;
                if p == 0 {
                    return Err(Error::InvalidCharacteristic(0));
                }
                Ok(FieldDescriptor::AlgClosed(CharDescriptor::new(p)?))
            }
        }
    }
}

impl TryFrom<String> for FieldDescriptor {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<FieldDescriptor> for String {
    fn from(f: FieldDescriptor) -> Self {
        f.to_string()
    }
}

/// Division algebra of a Wedderburn factor: the base field, ℂ or ℍ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum DivisionTag {
    #[serde(rename = "R")]
    Base,
    #[serde(rename = "C")]
    Cplx,
    #[serde(rename = "H")]
    Quat,
}

impl DivisionTag {
    pub fn dimension(self) -> u64 {
        match self {
            DivisionTag::Base => 1,
            DivisionTag::Cplx => 2,
            DivisionTag::Quat => 4,
        }
    }

    pub fn center_dimension(self) -> u64 {
        match self {
            DivisionTag::Cplx => 2,
            _ => 1,
        }
    }

    /// `D ⊗_ℝ E` as a list of factors `(n, F)`.
    fn tensor(self, other: DivisionTag) -> Vec<(u64, DivisionTag)> {
        use DivisionTag::*;
        match (self, other) {
            (Base, x) | (x, Base) => vec![(1, x)],
            (Cplx, Cplx) => vec![(1, Cplx), (1, Cplx)],
            (Cplx, Quat) | (Quat, Cplx) => vec![(2, Cplx)],
            (Quat, Quat) => vec![(4, Base)],
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            DivisionTag::Base => "R",
            DivisionTag::Cplx => "C",
            DivisionTag::Quat => "H",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "AlgebraJson", into = "AlgebraJson")]
pub struct SemisimpleAlgebra {
    field: FieldDescriptor,
    factors: Vec<(u64, DivisionTag)>,
}

#[derive(Serialize, Deserialize)]
struct AlgebraJson {
    field: FieldDescriptor,
    factors: Vec<(u64, DivisionTag)>,
}

impl TryFrom<AlgebraJson> for SemisimpleAlgebra {
    type Error = Error;
    fn try_from(j: AlgebraJson) -> Result<Self> {
        SemisimpleAlgebra::new(j.field, j.factors)
    }
}

impl From<SemisimpleAlgebra> for AlgebraJson {
    fn from(a: SemisimpleAlgebra) -> Self {
        AlgebraJson {
            field: a.field,
            factors: a.factors,
        }
    }
}

impl SemisimpleAlgebra {
    pub fn new(field: FieldDescriptor, mut factors: Vec<(u64, DivisionTag)>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::Malformed(
                "a semisimple algebra needs at least one factor".into(),
            ));
        }
        if factors.iter().any(|&(n, _)| n == 0) {
            return Err(Error::Malformed("matrix sizes must be at least 1".into()));
        }
        if !field.is_real() && factors.iter().any(|&(_, d)| d != DivisionTag::Base) {
            return Err(Error::Malformed(format!(
                "only the base field is a division algebra over {field}"
            )));
        }
        factors.sort_unstable();
        Ok(SemisimpleAlgebra { field, factors })
    }

    /// The ground field itself.
    pub fn base(field: FieldDescriptor) -> Self {
        SemisimpleAlgebra {
            field,
            factors: vec![(1, DivisionTag::Base)],
        }
    }

    pub fn simple(field: FieldDescriptor, n: u64, d: DivisionTag) -> Result<Self> {
        Self::new(field, vec![(n, d)])
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn factors(&self) -> &[(u64, DivisionTag)] {
        &self.factors
    }

    pub fn simple_module_count(&self) -> usize {
        self.factors.len()
    }

    pub fn center_factor_count(&self) -> usize {
        self.factors.len()
    }

    pub fn dimension(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(n, d)| n * n * d.dimension())
            .sum()
    }

    pub fn center_dimension(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(_, d)| d.center_dimension())
            .sum()
    }

    /// Splits into single-factor algebras.
    pub fn components(&self) -> Vec<SemisimpleAlgebra> {
        self.factors
            .iter()
            .map(|&f| SemisimpleAlgebra {
                field: self.field,
                factors: vec![f],
            })
            .collect()
    }
}

impl fmt::Display for SemisimpleAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|&(n, d)| {
                if n == 1 {
                    d.symbol().to_string()
                } else {
                    format!("M{n}({})", d.symbol())
                }
            })
            .collect();
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

/// `A ⊗ B`, distributing over factors.
pub fn tensor(a: &SemisimpleAlgebra, b: &SemisimpleAlgebra) -> Result<SemisimpleAlgebra> {
    if a.field != b.field {
        return Err(Error::FieldMismatch {
            left: a.field.to_string(),
            right: b.field.to_string(),
        });
    }
    let mut factors = Vec::new();
    for &(n, d) in &a.factors {
        for &(m, e) in &b.factors {
            factors.extend(d.tensor(e).into_iter().map(|(k, f)| (n * m * k, f)));
        }
    }
    SemisimpleAlgebra::new(a.field, factors)
}

/// Dense structure constants `c[x][y][z]` of an algebra over ℚ.
struct Structure {
    dim: usize,
    c: Vec<i64>,
}

impl Structure {
    fn at(&self, x: usize, y: usize, z: usize) -> i64 {
        self.c[(x * self.dim + y) * self.dim + z]
    }

    /// ℝ, ℂ, ℍ over their standard bases `1, i, j, k`.
    fn division(d: DivisionTag) -> Structure {
        let dim = d.dimension() as usize;
        let mut c = vec![0; dim * dim * dim];
        // quaternion products: (left, right) -> (sign, result)
        let quat = |x: usize, y: usize| -> (i64, usize) {
            match (x, y) {
                (0, y) => (1, y),
                (x, 0) => (1, x),
                (x, y) if x == y => (-1, 0),
                (1, 2) => (1, 3),
                (2, 1) => (-1, 3),
                (2, 3) => (1, 1),
                (3, 2) => (-1, 1),
                (3, 1) => (1, 2),
                (1, 3) => (-1, 2),
                _ => unreachable!(),
            }
        };
        for x in 0..dim {
            for y in 0..dim {
                let (s, z) = quat(x, y);
                c[(x * dim + y) * dim + z] = s;
            }
        }
        Structure { dim, c }
    }

    fn matrix(n: usize, d: DivisionTag) -> Structure {
        let div = Structure::division(d);
        let k = div.dim;
        let dim = n * n * k;
        let idx = |i: usize, j: usize, a: usize| (i * n + j) * k + a;
        let mut c = vec![0; dim * dim * dim];
        for i in 0..n {
            for j in 0..n {
                for m in 0..n {
                    for a in 0..k {
                        for b in 0..k {
                            for r in 0..k {
                                let v = div.at(a, b, r);
                                if v != 0 {
                                    c[(idx(i, j, a) * dim + idx(j, m, b)) * dim + idx(i, m, r)] = v;
                                }
                            }
                        }
                    }
                }
            }
        }
        Structure { dim, c }
    }

    fn of(a: &SemisimpleAlgebra) -> Structure {
        let blocks: Vec<Structure> = a
            .factors
            .iter()
            .map(|&(n, d)| Structure::matrix(n as usize, d))
            .collect();
        let dim = blocks.iter().map(|b| b.dim).sum();
        let mut c = vec![0; dim * dim * dim];
        let mut offset = 0;
        for b in &blocks {
            for x in 0..b.dim {
                for y in 0..b.dim {
                    for z in 0..b.dim {
                        c[((offset + x) * dim + offset + y) * dim + offset + z] = b.at(x, y, z);
                    }
                }
            }
            offset += b.dim;
        }
        Structure { dim, c }
    }

    fn tensor(&self, other: &Structure) -> Structure {
        let (p, q) = (self.dim, other.dim);
        let dim = p * q;
        let mut c = vec![0; dim * dim * dim];
        for x in 0..p {
            for y in 0..p {
                for z in 0..p {
                    let v = self.at(x, y, z);
                    if v == 0 {
                        continue;
                    }
                    for x2 in 0..q {
                        for y2 in 0..q {
                            for z2 in 0..q {
                                let w = other.at(x2, y2, z2);
                                if w != 0 {
                                    c[((x * q + x2) * dim + y * q + y2) * dim + z * q + z2] = v * w;
                                }
                            }
                        }
                    }
                }
            }
        }
        Structure { dim, c }
    }

    /// Dimension of `{ a : a·y = y·a for all basis y }`.
    fn center_dimension(&self) -> usize {
        let d = self.dim;
        let mut rows = Vec::new();
        for y in 0..d {
            for w in 0..d {
                let row: Vec<i64> = (0..d)
                    .map(|x| self.at(x, y, w) - self.at(y, x, w))
                    .collect();
                if row.iter().any(|&v| v != 0) {
                    rows.push(row);
                }
            }
        }
        d - rational_rank(&rows)
    }
}

/// Materializes `A ⊗_ℝ B` from explicit structure constants and returns
/// `(dimension, center dimension)`.
pub fn tensor_brute_force(a: &SemisimpleAlgebra, b: &SemisimpleAlgebra) -> Result<(u64, u64)> {
    if !a.field.is_real() || !b.field.is_real() {
        return Err(Error::Unsupported(
            "the structure-constant oracle works over the reals only".into(),
        ));
    }
    let size = a.dimension() * b.dimension();
    if size > BRUTE_FORCE_DIM_CAP {
        return Err(Error::CapExceeded {
            what: "tensor dimension",
            size,
            cap: BRUTE_FORCE_DIM_CAP,
        });
    }
    let t = Structure::of(a).tensor(&Structure::of(b));
    Ok((t.dim as u64, t.center_dimension() as u64))
}
