//! Exact integer linear algebra used across the crate.
//!
//! Everything here works on small dense matrices of machine integers:
//! Hermite normal forms of lattices containing a diagonal sublattice, Smith
//! diagonals, kernel counts over `ℤ/m`, rational ranks and exact singularity
//! tests.

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// Returns `(g, s, t)` with `g = s·a + t·b` and `g ≥ 0`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i64, 0i64);
    let (mut old_t, mut t) = (0i64, 1i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization as `(prime, exponent)` pairs in increasing prime order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    out.sort_unstable();
    out
}

fn reduce_row(row: &mut [i64], moduli: &[u64], from: usize) {
    for (x, &m) in row.iter_mut().zip(moduli).skip(from) {
        *x = x.rem_euclid(m as i64);
    }
}

/// Hermite normal form of the lattice spanned by `gens` together with
/// `moduli[i]·e_i` for every `i`.
///
/// The result is square and upper triangular with positive pivots, and every
/// entry above a pivot lies in `[0, pivot)`. The lattice always contains the
/// diagonal sublattice, so the form is unique for the subgroup of
/// `⊕ ℤ/moduli[i]` that the generators span.
pub fn hnf_with_moduli(gens: &[Vec<i64>], moduli: &[u64]) -> Vec<Vec<i64>> {
    let r = moduli.len();
    let mut rows: Vec<Vec<i64>> = gens
        .iter()
        .map(|g| {
            let mut row = g.clone();
            reduce_row(&mut row, moduli, 0);
            row
        })
        .filter(|row| row.iter().any(|&x| x != 0))
        .collect();
    for (i, &m) in moduli.iter().enumerate() {
        let mut e = vec![0i64; r];
        e[i] = m as i64;
        rows.push(e);
    }

    let mut basis: Vec<Vec<i64>> = Vec::with_capacity(r);
    for col in 0..r {
        let mut pivot: Option<Vec<i64>> = None;
        let mut rest = Vec::with_capacity(rows.len());
        for row in rows.drain(..) {
            if row[col] == 0 {
                rest.push(row);
                continue;
            }
            pivot = Some(match pivot.take() {
                None => row,
                Some(p) => {
                    let (g, s, t) = ext_gcd(p[col], row[col]);
                    let (a, b) = (p[col] / g, row[col] / g);
                    let mut np: Vec<i64> = p.iter().zip(&row).map(|(x, y)| s * x + t * y).collect();
                    let mut nq: Vec<i64> = p.iter().zip(&row).map(|(x, y)| a * y - b * x).collect();
                    reduce_row(&mut np, moduli, col + 1);
                    reduce_row(&mut nq, moduli, col + 1);
                    debug_assert_eq!(nq[col], 0);
                    if nq.iter().any(|&x| x != 0) {
                        rest.push(nq);
                    }
                    np
                }
            });
        }
        // the row moduli[col]·e_col always has a nonzero entry here
        let mut p = pivot.expect("diagonal generator guarantees a pivot");
        if p[col] < 0 {
            p.iter_mut().for_each(|x| *x = -*x);
            reduce_row(&mut p, moduli, col + 1);
        }
        basis.push(p);
        rows = rest;
    }

    for i in 0..r {
        let d = basis[i][i];
        for k in 0..i {
            let q = basis[k][i].div_euclid(d);
            if q != 0 {
                let pivot_row = basis[i].clone();
                for (x, y) in basis[k].iter_mut().zip(&pivot_row) {
                    *x -= q * y;
                }
            }
        }
    }
    basis
}

/// Solves `x · basis = target` for an upper-triangular integer basis.
/// Returns `None` when no integer solution exists.
pub fn solve_row_upper(basis: &[Vec<i64>], target: &[i64]) -> Option<Vec<i64>> {
    let r = basis.len();
    let mut x = vec![0i64; r];
    for j in 0..r {
        let mut s = target[j];
        for k in 0..j {
            s -= x[k] * basis[k][j];
        }
        let d = basis[j][j];
        if d == 0 {
            if s != 0 {
                return None;
            }
            continue;
        }
        if s % d != 0 {
            return None;
        }
        x[j] = s / d;
    }
    Some(x)
}

/// Smith diagonal `d_1 | d_2 | … ` of an integer matrix, zeros included,
/// of length `min(rows, cols)`.
pub fn smith_diagonal(mat: &[Vec<i64>]) -> Vec<i64> {
    let mut a: Vec<Vec<i64>> = mat.to_vec();
    let m = a.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    let k = m.min(n);
    for t in 0..k {
        loop {
            // smallest nonzero entry of the trailing block moves to (t, t)
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    if a[i][j] != 0 && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                return finish_diagonal(&a, k);
            };
            a.swap(t, bi);
            for row in a.iter_mut() {
                row.swap(t, bj);
            }
            let p = a[t][t];
            let mut clean = true;
            for i in t + 1..m {
                let q = a[i][t] / p;
                if q != 0 {
                    let pivot_row = a[t].clone();
                    for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                        *x -= q * y;
                    }
                }
                if a[i][t] != 0 {
                    clean = false;
                }
            }
            for j in t + 1..n {
                let q = a[t][j] / p;
                if q != 0 {
                    for row in a.iter_mut() {
                        let v = row[t];
                        row[j] -= q * v;
                    }
                }
                if a[t][j] != 0 {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // divisibility: fold any offending row into row t and retry
            let offending = (t + 1..m).find(|&i| (t + 1..n).any(|j| a[i][j] % p != 0));
            match offending {
                Some(i) => {
                    let row_i = a[i].clone();
                    for (x, y) in a[t].iter_mut().zip(&row_i) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
    }
    finish_diagonal(&a, k)
}

fn finish_diagonal(a: &[Vec<i64>], k: usize) -> Vec<i64> {
    let mut d: Vec<i64> = (0..k).map(|i| a[i][i].abs()).collect();
    // zeros sink to the end; nonzero part already forms a divisibility chain
    d.sort_by_key(|&x| if x == 0 { i64::MAX } else { x });
    d
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    let (g, s, _) = ext_gcd(a as i64, m as i64);
    debug_assert_eq!(g, 1);
    s.rem_euclid(m as i64) as u64
}

fn valuation(mut x: u64, p: u64) -> u32 {
    let mut v = 0;
    while x.is_multiple_of(p) {
        x /= p;
        v += 1;
    }
    v
}

/// Number of solutions of `A·x ≡ 0 (mod m)` with `x ∈ (ℤ/m)^ncols`,
/// returned as a prime factorization so huge counts stay exact.
///
/// Each prime power `p^e ‖ m` is handled over the local ring `ℤ/p^e`, where
/// a pivot of minimal valuation divides its whole row and column.
pub fn kernel_size_mod(rows: &[Vec<i64>], ncols: usize, m: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for (p, e) in factorize(m) {
        let q = p.pow(e);
        let mut mat: Vec<Vec<u64>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&x| x.rem_euclid(q as i64) as u64)
                    .collect::<Vec<u64>>()
            })
            .filter(|r| r.iter().any(|&x| x != 0))
            .collect();
        let val_table: Vec<u32> = (0..q)
            .map(|x| if x == 0 { u32::MAX } else { valuation(x, p) })
            .collect();
        let mut pivots = 0usize;
        let mut exponent: u64 = 0;
        // eliminated columns are zero in every remaining row
        loop {
            let mut best: Option<(usize, usize, u32)> = None;
            'search: for (ri, row) in mat.iter().enumerate() {
                for (c, &x) in row.iter().enumerate() {
                    let v = val_table[x as usize];
                    if v == u32::MAX {
                        continue;
                    }
                    if best.is_none_or(|(_, _, bv)| v < bv) {
                        best = Some((ri, c, v));
                        if v == 0 {
                            break 'search;
                        }
                    }
                }
            }
            let Some((pr, pc, v)) = best else { break };
            exponent += v as u64;
            pivots += 1;
            let pivot_row = mat.swap_remove(pr);
            let support: Vec<(usize, u64)> = pivot_row
                .iter()
                .enumerate()
                .filter(|(_, &y)| y != 0)
                .map(|(c, &y)| (c, y))
                .collect();
            let pv = p.pow(v);
            let unit_inv = mod_inverse(pivot_row[pc] / pv, q);
            let mut emptied = false;
            for row in mat.iter_mut() {
                if row[pc] == 0 {
                    continue;
                }
                let factor = (row[pc] / pv) * unit_inv % q;
                for &(c, y) in &support {
                    row[c] = (row[c] + q - factor * y % q) % q;
                }
                emptied |= row.iter().all(|&x| x == 0);
            }
            if emptied {
                mat.retain(|r| r.iter().any(|&x| x != 0));
            }
        }
        exponent += e as u64 * (ncols - pivots) as u64;
        if exponent > 0 {
            out.push((p, exponent));
        }
    }
    out
}

/// Rank over ℚ of an integer matrix, by fraction-free elimination.
pub fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut mat: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect::<Vec<i128>>())
        .filter(|r| r.iter().any(|&x| x != 0))
        .collect();
    let ncols = mat.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..ncols {
        let Some(pi) = (rank..mat.len()).find(|&i| mat[i][c] != 0) else {
            continue;
        };
        mat.swap(rank, pi);
        let pivot_row = mat[rank].clone();
        for row in mat.iter_mut().skip(rank + 1) {
            if row[c] == 0 {
                continue;
            }
            let (a, b) = (pivot_row[c], row[c]);
            let mut g: i128 = 0;
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                *x = a * *x - b * y;
                g = gcd_i128(g, *x);
            }
            if g > 1 {
                row.iter_mut().for_each(|x| *x /= g);
            }
        }
        rank += 1;
    }
    rank
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Exact determinant by Bareiss elimination over arbitrary-precision integers.
pub fn determinant(mat: &[Vec<i64>]) -> BigInt {
    let n = mat.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = mat
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// The sixteen largest primes below `2^31`.
const MODULI: [u64; 16] = [
    2147483647, 2147483629, 2147483587, 2147483579, 2147483563, 2147483549, 2147483543, 2147483497,
    2147483489, 2147483477, 2147483423, 2147483399, 2147483353, 2147483323, 2147483269, 2147483249,
];

fn determinant_mod(mat: &[Vec<i64>], p: u64) -> u64 {
    let n = mat.len();
    let mut a: Vec<Vec<u64>> = mat
        .iter()
        .map(|r| r.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect())
        .collect();
    let mut det = 1u64;
    for k in 0..n {
        let Some(pivot) = (k..n).find(|&i| a[i][k] != 0) else {
            return 0;
        };
        if pivot != k {
            a.swap(k, pivot);
            det = (p - det) % p;
        }
        det = det * a[k][k] % p;
        let inv = pow_mod(a[k][k], p - 2, p);
        for i in k + 1..n {
            let f = a[i][k] * inv % p;
            if f == 0 {
                continue;
            }
            for j in k..n {
                a[i][j] = (a[i][j] + (p - f) * a[k][j]) % p;
            }
        }
    }
    det
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Exact singularity test. A nonzero residue modulo any prime proves
/// `det ≠ 0`; vanishing modulo primes whose product exceeds twice the
/// Hadamard bound proves `det = 0`. Falls back to [`determinant`] when the
/// bound outgrows the prime table.
pub fn is_singular(mat: &[Vec<i64>]) -> bool {
    let bound_bits: f64 = mat
        .iter()
        .map(|r| {
            0.5 * r
                .iter()
                .map(|&x| (x as f64) * (x as f64))
                .sum::<f64>()
                .max(1.0)
                .log2()
        })
        .sum::<f64>()
        + 1.0;
    let mut covered = 0.0;
    for &p in &MODULI {
        if determinant_mod(mat, p) != 0 {
            return false;
        }
        covered += (p as f64).log2();
        if covered > bound_bits + 1.0 {
            return true;
        }
    }
    determinant(mat).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn count_from_factors(f: &[(u64, u64)]) -> u64 {
        f.iter().map(|&(p, e)| p.pow(e as u32)).product()
    }

    fn brute_kernel(rows: &[Vec<i64>], ncols: usize, m: u64) -> u64 {
        let total = m.pow(ncols as u32);
        let mut count = 0;
        for code in 0..total {
            let mut x = vec![0i64; ncols];
            let mut c = code;
            for xi in x.iter_mut() {
                *xi = (c % m) as i64;
                c /= m;
            }
            if rows.iter().all(|r| {
                r.iter()
                    .zip(&x)
                    .map(|(a, b)| a * b)
                    .sum::<i64>()
                    .rem_euclid(m as i64)
                    == 0
            }) {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn kernel_count_matches_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let m = [2u64, 4, 6, 8, 9, 12][rng.gen_range(0..6)];
            let ncols = rng.gen_range(1..=3);
            let nrows = rng.gen_range(0..=4);
            let rows: Vec<Vec<i64>> = (0..nrows)
                .map(|_| (0..ncols).map(|_| rng.gen_range(-5..=5)).collect())
                .collect();
            let fast = count_from_factors(&kernel_size_mod(&rows, ncols, m));
            assert_eq!(fast, brute_kernel(&rows, ncols, m), "rows {rows:?} m {m}");
        }
    }

    #[test]
    fn hnf_is_canonical_for_the_generated_subgroup() {
        // (1,1) and (3,3) generate the same subgroup of Z/2 ⊕ Z/4
        let a = hnf_with_moduli(&[vec![1, 1]], &[2, 4]);
        let b = hnf_with_moduli(&[vec![1, 3], vec![0, 2]], &[2, 4]);
        assert_eq!(a, b);
        assert_eq!(a, vec![vec![1, 1], vec![0, 2]]);
        assert_eq!(hnf_with_moduli(&[], &[6]), vec![vec![6]]);
        assert_eq!(hnf_with_moduli(&[vec![4]], &[6]), vec![vec![2]]);
    }

    #[test]
    fn smith_diagonal_small_cases() {
        assert_eq!(smith_diagonal(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(smith_diagonal(&[vec![2, 4], vec![6, 8]]), vec![2, 4]);
        assert_eq!(smith_diagonal(&[vec![0, 0], vec![0, 5]]), vec![5, 0]);
        assert_eq!(smith_diagonal(&[vec![4, 0], vec![0, 6]]), vec![2, 12]);
    }

    #[test]
    fn determinant_and_rank() {
        assert_eq!(determinant(&[vec![2, 1], vec![1, 1]]), BigInt::from(1));
        assert_eq!(determinant(&[vec![0, 1], vec![1, 0]]), BigInt::from(-1));
        assert!(determinant(&[vec![1, 2], vec![2, 4]]).is_zero());
        assert_eq!(rational_rank(&[vec![1, 2], vec![2, 4], vec![0, 1]]), 2);
        assert_eq!(rational_rank(&[vec![0, 0]]), 0);
    }

    #[test]
    fn modular_singularity_agrees_with_bareiss() {
        assert!(MODULI.iter().all(|&p| is_prime(p)));
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let n = rng.gen_range(1..=7);
            let mut m: Vec<Vec<i64>> = (0..n)
                .map(|_| (0..n).map(|_| rng.gen_range(-3..=3)).collect())
                .collect();
            if n > 1 && rng.gen_bool(0.5) {
                let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
                let k = rng.gen_range(-2..=2);
                let row: Vec<i64> = m[a].iter().map(|x| x * k).collect();
                if a != b {
                    m[b] = row;
                }
            }
            assert_eq!(is_singular(&m), determinant(&m).is_zero(), "{m:?}");
        }
        // det = 2147483647, a multiple of the first modulus
        assert!(!is_singular(&[vec![2147483647]]));
    }

    #[test]
    fn ext_gcd_identity() {
        for a in -12i64..=12 {
            for b in -12i64..=12 {
                let (g, s, t) = ext_gcd(a, b);
                assert_eq!(g, gcd(a.unsigned_abs(), b.unsigned_abs()) as i64);
                assert_eq!(s * a + t * b, g);
            }
        }
    }
}
