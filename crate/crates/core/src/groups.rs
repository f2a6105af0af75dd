//! Finite abelian groups `⊕ ℤ/n_i`, their subgroups, and `H²(H, k*)`.
//!
//! Elements are residue tuples. Element indices are little-endian mixed
//! radix (the first coordinate varies fastest), so in `ℤ/2 ⊕ ℤ/2` the
//! nonzero elements come out as `a = (1,0)`, `b = (0,1)`, `c = (1,1)`.
//!
//! A subgroup is stored through the Hermite normal form of its preimage
//! lattice in `ℤ^r`; that form is unique, so equality of [`Subgroup`] values
//! is equality of subgroups.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intmat::{self, gcd, lcm};

/// Default cap on group orders, subgroup counts and class counts.
pub const DEFAULT_ORDER_CAP: u64 = 10_000;

/// Largest subgroup order accepted by [`h2_brute_force_count`].
pub const BRUTE_FORCE_CAP: u64 = 16;

/// Characteristic of the (perfect, algebraically closed) ground field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct CharDescriptor(u64);

impl CharDescriptor {
    pub const ZERO: CharDescriptor = CharDescriptor(0);

    pub fn new(char: u64) -> Result<Self> {
        if char == 0 || intmat::is_prime(char) {
            Ok(CharDescriptor(char))
        } else {
            Err(Error::InvalidCharacteristic(char))
        }
    }

    pub fn value(self) -> u64 {
        self.0
    }

    /// Removes every factor of the characteristic from `n`; `k*` has no
    /// `p`-torsion in characteristic `p`.
    pub fn strip(self, mut n: u64) -> u64 {
        if self.0 == 0 || n == 0 {
            return n;
        }
        while n.is_multiple_of(self.0) {
            n /= self.0;
        }
        n
    }

    pub fn divides(self, n: u64) -> bool {
        self.0 != 0 && n.is_multiple_of(self.0)
    }
}

impl TryFrom<u64> for CharDescriptor {
    type Error = Error;
    fn try_from(value: u64) -> Result<Self> {
        CharDescriptor::new(value)
    }
}

impl From<CharDescriptor> for u64 {
    fn from(c: CharDescriptor) -> u64 {
        c.0
    }
}

impl fmt::Display for CharDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `ℤ/n_1 ⊕ … ⊕ ℤ/n_r`; the empty sequence is the trivial group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GroupJson", into = "GroupJson")]
pub struct FiniteAbelianGroup {
    orders: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct GroupJson {
    orders: Vec<u64>,
}

impl TryFrom<GroupJson> for FiniteAbelianGroup {
    type Error = Error;
    fn try_from(json: GroupJson) -> Result<Self> {
        FiniteAbelianGroup::new(&json.orders)
    }
}

impl From<FiniteAbelianGroup> for GroupJson {
    fn from(g: FiniteAbelianGroup) -> GroupJson {
        GroupJson { orders: g.orders }
    }
}

impl FiniteAbelianGroup {
    pub fn new(orders: &[u64]) -> Result<Self> {
        Self::with_cap(orders, DEFAULT_ORDER_CAP)
    }

    pub fn with_cap(orders: &[u64], cap: u64) -> Result<Self> {
        let mut size: u64 = 1;
        for &n in orders {
            if n < 2 {
                return Err(Error::InvalidOrder(n));
            }
            size = size.saturating_mul(n);
        }
        if size > cap {
            return Err(Error::CapExceeded {
                what: "group order",
                size,
                cap,
            });
        }
        Ok(FiniteAbelianGroup {
            orders: orders.to_vec(),
        })
    }

    pub fn trivial() -> Self {
        FiniteAbelianGroup { orders: Vec::new() }
    }

    pub fn cyclic(n: u64) -> Result<Self> {
        Self::new(&[n])
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn order(&self) -> u64 {
        self.orders.iter().product()
    }

    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1, |acc, &n| lcm(acc, n))
    }

    /// Little-endian mixed-radix index of an element.
    pub fn index_of(&self, element: &[u64]) -> usize {
        let mut idx = 0u64;
        let mut stride = 1u64;
        for (&x, &n) in element.iter().zip(&self.orders) {
            idx += (x % n) * stride;
            stride *= n;
        }
        idx as usize
    }

    pub fn element(&self, mut index: usize) -> Vec<u64> {
        self.orders
            .iter()
            .map(|&n| {
                let x = index as u64 % n;
                index /= n as usize;
                x
            })
            .collect()
    }

    pub fn elements(&self) -> impl Iterator<Item = Vec<u64>> + '_ {
        (0..self.order() as usize).map(move |i| self.element(i))
    }

    pub fn zero(&self) -> Vec<u64> {
        vec![0; self.rank()]
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter()
            .zip(b)
            .zip(&self.orders)
            .map(|((x, y), n)| (x + y) % n)
            .collect()
    }

    pub fn neg(&self, a: &[u64]) -> Vec<u64> {
        a.iter()
            .zip(&self.orders)
            .map(|(x, n)| (n - x % n) % n)
            .collect()
    }

    pub fn element_order(&self, a: &[u64]) -> u64 {
        a.iter()
            .zip(&self.orders)
            .fold(1, |acc, (&x, &n)| lcm(acc, n / gcd(x, n)))
    }

    /// Direct sum `self ⊕ other` (orders concatenated).
    pub fn direct_sum(&self, other: &FiniteAbelianGroup) -> Result<Self> {
        let orders: Vec<u64> = self.orders.iter().chain(&other.orders).copied().collect();
        Self::new(&orders)
    }

    pub fn is_trivial(&self) -> bool {
        self.orders.is_empty()
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orders.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.orders.iter().map(|n| format!("ℤ/{n}")).collect();
        write!(f, "{}", parts.join("⊕"))
    }
}

/// Every isomorphism type of abelian group of order `n`, as invariant-factor
/// orders `d_1 | d_2 | …` (all ≥ 2). Order 1 yields the trivial group.
pub fn abelian_groups_of_order(n: u64) -> Vec<FiniteAbelianGroup> {
    fn partitions(e: u32, max: u32) -> Vec<Vec<u32>> {
        if e == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in (1..=e.min(max)).rev() {
            for mut rest in partitions(e - first, first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }

    let mut types: Vec<Vec<u64>> = vec![vec![]];
    for (p, e) in intmat::factorize(n) {
        let mut next = Vec::new();
        for ty in &types {
            for part in partitions(e, e) {
                // combine prime-power parts into invariant factors, largest last
                let mut factors = ty.clone();
                let len = factors.len().max(part.len());
                factors.resize(len, 1);
                let mut padded: Vec<u32> = part.clone();
                padded.resize(len, 0);
                padded.sort_unstable();
                factors.sort_unstable();
                for (f, k) in factors.iter_mut().zip(&padded) {
                    *f *= p.pow(*k);
                }
                next.push(factors);
            }
        }
        types = next;
    }
    let mut out: Vec<FiniteAbelianGroup> = types
        .into_iter()
        .map(|mut t| {
            t.retain(|&x| x > 1);
            t.sort_unstable();
            FiniteAbelianGroup { orders: t }
        })
        .collect();
    out.sort_by(|a, b| {
        a.orders
            .len()
            .cmp(&b.orders.len())
            .then(a.orders.cmp(&b.orders))
    });
    out
}

/// A subgroup in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    ambient: FiniteAbelianGroup,
    /// HNF of the preimage lattice, `rank × rank`.
    lattice: Vec<Vec<i64>>,
    /// Nonzero HNF rows reduced modulo the ambient orders.
    basis: Vec<Vec<u64>>,
}

impl Subgroup {
    pub fn generated_by(ambient: &FiniteAbelianGroup, generators: &[Vec<u64>]) -> Self {
        let gens: Vec<Vec<i64>> = generators
            .iter()
            .map(|g| g.iter().map(|&x| x as i64).collect())
            .collect();
        Self::from_lattice(ambient, intmat::hnf_with_moduli(&gens, &ambient.orders))
    }

    fn from_lattice(ambient: &FiniteAbelianGroup, lattice: Vec<Vec<i64>>) -> Self {
        let basis = lattice
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&ambient.orders)
                    .map(|(&x, &n)| x.rem_euclid(n as i64) as u64)
                    .collect::<Vec<u64>>()
            })
            .filter(|row| row.iter().any(|&x| x != 0))
            .collect();
        Subgroup {
            ambient: ambient.clone(),
            lattice,
            basis,
        }
    }

    pub fn trivial(ambient: &FiniteAbelianGroup) -> Self {
        Self::generated_by(ambient, &[])
    }

    pub fn full(ambient: &FiniteAbelianGroup) -> Self {
        let gens: Vec<Vec<u64>> = (0..ambient.rank())
            .map(|i| {
                let mut e = ambient.zero();
                e[i] = 1;
                e
            })
            .collect();
        Self::generated_by(ambient, &gens)
    }

    /// Rebuilds the canonical form from the stored basis.
    pub fn canonicalize(&self) -> Self {
        Self::generated_by(&self.ambient, &self.basis)
    }

    pub fn ambient(&self) -> &FiniteAbelianGroup {
        &self.ambient
    }

    pub fn basis(&self) -> &[Vec<u64>] {
        &self.basis
    }

    pub fn order(&self) -> u64 {
        let index: u64 = self
            .lattice
            .iter()
            .enumerate()
            .map(|(i, r)| r[i] as u64)
            .product();
        self.ambient.order() / index
    }

    pub fn contains(&self, element: &[u64]) -> bool {
        let target: Vec<i64> = element.iter().map(|&x| x as i64).collect();
        intmat::solve_row_upper(&self.lattice, &target).is_some()
    }

    pub fn elements(&self) -> Vec<Vec<u64>> {
        self.ambient
            .elements()
            .filter(|e| self.contains(e))
            .collect()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.basis.iter().all(|b| other.contains(b))
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let common: Vec<Vec<u64>> = self
            .elements()
            .into_iter()
            .filter(|e| other.contains(e))
            .collect();
        Subgroup::generated_by(&self.ambient, &common)
    }

    /// Invariant factors `s_1 | s_2 | …` (all ≥ 2) of the subgroup as an
    /// abstract group, from the Smith form of the ambient relations written
    /// in the subgroup's lattice basis.
    pub fn invariant_factors(&self) -> Vec<u64> {
        let r = self.ambient.rank();
        let relations: Vec<Vec<i64>> = (0..r)
            .map(|i| {
                let mut t = vec![0i64; r];
                t[i] = self.ambient.orders[i] as i64;
                intmat::solve_row_upper(&self.lattice, &t)
                    .expect("ambient relations lie in the preimage lattice")
            })
            .collect();
        intmat::smith_diagonal(&relations)
            .into_iter()
            .filter(|&d| d > 1)
            .map(|d| d as u64)
            .collect()
    }

    /// Sort key: order first, then basis elements by index.
    pub fn sort_key(&self) -> (u64, Vec<usize>) {
        (
            self.order(),
            self.basis
                .iter()
                .map(|b| self.ambient.index_of(b))
                .collect(),
        )
    }
}

impl Serialize for Subgroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SubgroupJson {
            orders: self.ambient.orders.clone(),
            basis: self.basis.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Subgroup {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let json = SubgroupJson::deserialize(d)?;
        let ambient = FiniteAbelianGroup::new(&json.orders).map_err(serde::de::Error::custom)?;
        if json.basis.iter().any(|b| b.len() != ambient.rank()) {
            return Err(serde::de::Error::custom(
                "basis rows must match the number of orders",
            ));
        }
        Ok(Subgroup::generated_by(&ambient, &json.basis))
    }
}

#[derive(Serialize, Deserialize)]
struct SubgroupJson {
    orders: Vec<u64>,
    basis: Vec<Vec<u64>>,
}

/// Every subgroup exactly once, sorted by `(order, basis)`.
///
/// Subgroups correspond to upper-triangular Hermite forms whose lattice
/// contains every `n_i·e_i`; those are enumerated directly.
pub fn enumerate_subgroups(g: &FiniteAbelianGroup) -> Result<Vec<Subgroup>> {
    enumerate_subgroups_with_cap(g, DEFAULT_ORDER_CAP)
}

pub fn enumerate_subgroups_with_cap(g: &FiniteAbelianGroup, cap: u64) -> Result<Vec<Subgroup>> {
    if g.order() > cap {
        return Err(Error::CapExceeded {
            what: "group order",
            size: g.order(),
            cap,
        });
    }
    let r = g.rank();
    let mut found = Vec::new();
    let mut lattice = vec![vec![0i64; r]; r];
    fill_rows(g, r, &mut lattice, &mut found, cap)?;
    let mut subgroups: Vec<Subgroup> = found
        .into_iter()
        .map(|l| Subgroup::from_lattice(g, l))
        .collect();
    subgroups.sort_by_key(|s| s.sort_key());
    Ok(subgroups)
}

// rows are filled bottom-up so every entry above a pivot can be bounded by it
fn fill_rows(
    g: &FiniteAbelianGroup,
    row: usize,
    lattice: &mut Vec<Vec<i64>>,
    found: &mut Vec<Vec<Vec<i64>>>,
    cap: u64,
) -> Result<()> {
    if row == 0 {
        let contains_relations = (0..g.rank()).all(|i| {
            let mut t = vec![0i64; g.rank()];
            t[i] = g.orders[i] as i64;
            intmat::solve_row_upper(lattice, &t).is_some()
        });
        if contains_relations {
            if found.len() as u64 >= cap {
                return Err(Error::CapExceeded {
                    what: "subgroup count",
                    size: found.len() as u64 + 1,
                    cap,
                });
            }
            found.push(lattice.clone());
        }
        return Ok(());
    }
    let i = row - 1;
    for d in intmat::divisors(g.orders[i]) {
        lattice[i] = vec![0; g.rank()];
        lattice[i][i] = d as i64;
        fill_tail(g, i, i + 1, lattice, found, cap)?;
    }
    Ok(())
}

fn fill_tail(
    g: &FiniteAbelianGroup,
    i: usize,
    j: usize,
    lattice: &mut Vec<Vec<i64>>,
    found: &mut Vec<Vec<Vec<i64>>>,
    cap: u64,
) -> Result<()> {
    if j == g.rank() {
        return fill_rows(g, i, lattice, found, cap);
    }
    for v in 0..lattice[j][j] {
        lattice[i][j] = v;
        fill_tail(g, i, j + 1, lattice, found, cap)?;
    }
    lattice[i][j] = 0;
    Ok(())
}

/// Cyclic invariants of `H²(H, k*)`: for each pair `i < j` of invariant
/// factors, `gcd(s_i, s_j)` with the characteristic stripped; trivial
/// entries are dropped.
pub fn h2_invariants(h: &Subgroup, k: CharDescriptor) -> Vec<u64> {
    let factors = h.invariant_factors();
    let mut out = Vec::new();
    for i in 0..factors.len() {
        for j in i + 1..factors.len() {
            let m = k.strip(gcd(factors[i], factors[j]));
            if m > 1 {
                out.push(m);
            }
        }
    }
    out
}

/// A class in `H²(H, k*)` as a residue vector against the cyclic invariants.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct H2Class {
    subgroup: Subgroup,
    residues: Vec<u64>,
    moduli: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct H2ClassJson {
    residues: Vec<u64>,
    moduli: Vec<u64>,
}

impl Serialize for H2Class {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        H2ClassJson {
            residues: self.residues.clone(),
            moduli: self.moduli.clone(),
        }
        .serialize(s)
    }
}

impl H2Class {
    pub fn trivial(subgroup: &Subgroup, k: CharDescriptor) -> Self {
        let moduli = h2_invariants(subgroup, k);
        H2Class {
            subgroup: subgroup.clone(),
            residues: vec![0; moduli.len()],
            moduli,
        }
    }

    pub fn from_residues(subgroup: &Subgroup, k: CharDescriptor, residues: &[u64]) -> Result<Self> {
        let moduli = h2_invariants(subgroup, k);
        if residues.len() != moduli.len() || residues.iter().zip(&moduli).any(|(r, m)| r >= m) {
            return Err(Error::Malformed(format!(
                "residues {residues:?} do not fit the H² moduli {moduli:?}"
            )));
        }
        Ok(H2Class {
            subgroup: subgroup.clone(),
            residues: residues.to_vec(),
            moduli,
        })
    }

    /// Rebuilds a class from its JSON parts. The moduli must be the `H²`
    /// invariants of `subgroup` in characteristic 0 or in a prime dividing
    /// `|H|`.
    pub fn from_parts(subgroup: &Subgroup, residues: &[u64], moduli: &[u64]) -> Result<Self> {
        let candidates = std::iter::once(0).chain(
            intmat::factorize(subgroup.order())
                .into_iter()
                .map(|(p, _)| p),
        );
        for c in candidates {
            let k = CharDescriptor(c);
            if h2_invariants(subgroup, k) == moduli {
                return Self::from_residues(subgroup, k, residues);
            }
        }
        Err(Error::Malformed(format!(
            "moduli {moduli:?} are not the H² invariants of this subgroup"
        )))
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn residues(&self) -> &[u64] {
        &self.residues
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn is_trivial(&self) -> bool {
        self.residues.iter().all(|&r| r == 0)
    }

    /// Group law of `H²`: componentwise addition.
    pub fn add(&self, other: &H2Class) -> Result<H2Class> {
        if self.subgroup != other.subgroup || self.moduli != other.moduli {
            return Err(Error::Malformed(
                "classes live on different subgroups".into(),
            ));
        }
        let residues = self
            .residues
            .iter()
            .zip(&other.residues)
            .zip(&self.moduli)
            .map(|((a, b), m)| (a + b) % m)
            .collect();
        Ok(H2Class {
            subgroup: self.subgroup.clone(),
            residues,
            moduli: self.moduli.clone(),
        })
    }
}

/// Every class of `H²(H, k*)`, trivial class first, last residue fastest.
pub fn h2_classes(h: &Subgroup, k: CharDescriptor) -> Result<Vec<H2Class>> {
    h2_classes_with_cap(h, k, DEFAULT_ORDER_CAP)
}

pub fn h2_classes_with_cap(h: &Subgroup, k: CharDescriptor, cap: u64) -> Result<Vec<H2Class>> {
    let moduli = h2_invariants(h, k);
    let count = moduli.iter().fold(1u64, |acc, &m| acc.saturating_mul(m));
    if count > cap {
        return Err(Error::CapExceeded {
            what: "H² class count",
            size: count,
            cap,
        });
    }
    let mut out = Vec::with_capacity(count as usize);
    for mut code in 0..count {
        let mut residues = vec![0; moduli.len()];
        for (r, &m) in residues.iter_mut().zip(&moduli).rev() {
            *r = code % m;
            code /= m;
        }
        out.push(H2Class {
            subgroup: h.clone(),
            residues,
            moduli: moduli.clone(),
        });
    }
    Ok(out)
}

/// Independent count of `H²(H, k*)` straight from the cocycle identity.
///
/// Normalized 2-cochains take values in `μ_m` with `m` the
/// characteristic-free part of `exponent(H)·|H|`. Writing `Z²` for the
/// cocycles and `Z²_sym` for the symmetric ones (which contain every
/// coboundary of an abelian group), the count is `|Z²| / |Z²_sym|`: the
/// symmetric classes form the `Ext(H, μ_m)` part of `H²(H, μ_m)`, which
/// dies in `H²(H, k*)` because `k*` is divisible. Both kernels are counted
/// exactly over `ℤ/m` from the full system of cocycle equations.
pub fn h2_brute_force_count(h: &Subgroup, k: CharDescriptor) -> Result<u64> {
    let size = h.order();
    if size > BRUTE_FORCE_CAP {
        return Err(Error::CapExceeded {
            what: "brute-force subgroup order",
            size,
            cap: BRUTE_FORCE_CAP,
        });
    }
    let elems = h.elements();
    let g = h.ambient();
    let index: HashMap<Vec<u64>, usize> = elems
        .iter()
        .enumerate()
        .map(|(i, e)| (e.clone(), i))
        .collect();
    let n = elems.len();
    let zero = index[&g.zero()];
    let sum = |a: usize, b: usize| index[&g.add(&elems[a], &elems[b])];

    let exponent_h = elems.iter().fold(1, |acc, e| lcm(acc, g.element_order(e)));
    let m = k.strip(exponent_h * size);
    if m == 1 {
        return Ok(1);
    }

    // unknown f(x, y) for nonzero x, y
    let nonzero: Vec<usize> = (0..n).filter(|&i| i != zero).collect();
    let mut var = vec![vec![None; n]; n];
    let mut nvars = 0;
    for &x in &nonzero {
        for &y in &nonzero {
            var[x][y] = Some(nvars);
            nvars += 1;
        }
    }
    let term = |row: &mut Vec<i64>, x: usize, y: usize, coeff: i64| {
        if let Some(v) = var[x][y] {
            row[v] += coeff;
        }
    };

    // δf(x,y,z) = f(y,z) − f(x+y,z) + f(x,y+z) − f(x,y)
    let mut cocycle_rows = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let mut row = vec![0i64; nvars];
                term(&mut row, y, z, 1);
                term(&mut row, sum(x, y), z, -1);
                term(&mut row, x, sum(y, z), 1);
                term(&mut row, x, y, -1);
                if row.iter().any(|&c| c != 0) {
                    cocycle_rows.push(row);
                }
            }
        }
    }
    cocycle_rows.sort();
    cocycle_rows.dedup();

    let mut symmetric_rows = cocycle_rows.clone();
    for &x in &nonzero {
        for &y in &nonzero {
            if x < y {
                let mut row = vec![0i64; nvars];
                term(&mut row, x, y, 1);
                term(&mut row, y, x, -1);
                symmetric_rows.push(row);
            }
        }
    }

    let cocycles = intmat::kernel_size_mod(&cocycle_rows, nvars, m);
    let symmetric = intmat::kernel_size_mod(&symmetric_rows, nvars, m);
    let mut count = 1u64;
    for (p, e) in cocycles {
        let e_sym = symmetric
            .iter()
            .find(|(q, _)| *q == p)
            .map_or(0, |(_, e)| *e);
        debug_assert!(e >= e_sym);
        count *= p.pow((e - e_sym) as u32);
    }
    Ok(count)
}

/// Display names for group elements.
///
/// Cyclic groups use residues (`3`), groups of rank ≥ 2 use letter
/// combinations of the standard generators (`a`, `2a+b`). Individual
/// elements can be overridden, e.g. `c` for `a+b` in `ℤ/2 ⊕ ℤ/2`.
#[derive(Clone, Debug, Default)]
pub struct ElementNames {
    overrides: HashMap<Vec<u64>, String>,
}

impl ElementNames {
    pub fn with_override(mut self, element: Vec<u64>, name: impl Into<String>) -> Self {
        self.overrides.insert(element, name.into());
        self
    }

    pub fn name(&self, g: &FiniteAbelianGroup, element: &[u64]) -> String {
        if let Some(n) = self.overrides.get(element) {
            return n.clone();
        }
        if element.iter().all(|&x| x == 0) {
            return "0".into();
        }
        if g.rank() == 1 {
            return element[0].to_string();
        }
        if g.rank() > 26 {
            let parts: Vec<String> = element.iter().map(|x| x.to_string()).collect();
            return format!("({})", parts.join(","));
        }
        element
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(i, &x)| {
                let letter = (b'a' + i as u8) as char;
                if x == 1 {
                    letter.to_string()
                } else {
                    format!("{x}{letter}")
                }
            })
            .collect::<Vec<_>>()
            .join("+")
    }

    /// `⟨g_1,…,g_k⟩` over the canonical basis; `⟨0⟩` for the trivial subgroup.
    pub fn subgroup_label(&self, h: &Subgroup) -> String {
        if h.basis().is_empty() {
            return "⟨0⟩".into();
        }
        let names: Vec<String> = h
            .basis()
            .iter()
            .map(|b| self.name(h.ambient(), b))
            .collect();
        format!("⟨{}⟩", names.join(","))
    }
}

/// Label of an `H²` class: `triv`, `ν` when the class group has order two,
/// otherwise `ν` followed by the residue vector.
pub fn class_label(class: &H2Class) -> String {
    if class.is_trivial() {
        "triv".into()
    } else if class.moduli() == [2] {
        "ν".into()
    } else {
        let parts: Vec<String> = class.residues().iter().map(|r| r.to_string()).collect();
        format!("ν({})", parts.join(","))
    }
}
