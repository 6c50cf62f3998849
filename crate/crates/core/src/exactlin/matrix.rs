//! Sparse integer matrices and the ring selector.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coefficient ring for complexes and homology: the integers, or a prime
/// field F_p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RingSelector {
    Integers,
    PrimeField(u64),
}

impl RingSelector {
    /// Prime-field selector; rejects non-primes.
    pub fn prime_field(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(RingSelector::PrimeField(p))
        } else {
            Err(Error::UnsupportedRing(format!("{p} is not prime")))
        }
    }

    pub fn is_integral(&self) -> bool {
        matches!(self, RingSelector::Integers)
    }

    pub fn prime(&self) -> Option<u64> {
        match self {
            RingSelector::Integers => None,
            RingSelector::PrimeField(p) => Some(*p),
        }
    }
}

impl fmt::Display for RingSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSelector::Integers => write!(f, "Z"),
            RingSelector::PrimeField(p) => write!(f, "F_{p}"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Sparse matrix over the integers: only nonzero entries are stored, keyed by
/// (row, column).  Row and column counts are explicit so that zero rows and
/// columns (and entirely empty matrices) are well defined.
#[derive(Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), BigInt>,
}

impl IntegerMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntegerMatrix { rows, cols, entries: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.entries.insert((i, i), BigInt::one());
        }
        m
    }

    /// Build from dense rows of machine integers (test and display helper).
    pub fn from_rows(rows: usize, cols: usize, data: &[&[i64]]) -> Self {
        assert_eq!(data.len(), rows, "row count mismatch");
        let mut m = Self::zero(rows, cols);
        for (i, row) in data.iter().enumerate() {
            assert_eq!(row.len(), cols, "column count mismatch");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(v));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> BigInt {
        debug_assert!(r < self.rows && c < self.cols, "index out of bounds");
        self.entries.get(&(r, c)).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Set an entry; zero values are removed from storage so the invariant
    /// "only nonzero entries are stored" holds.
    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        if v.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), v);
        }
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: &BigInt) {
        if v.is_zero() {
            return;
        }
        let cur = self.get(r, c);
        self.set(r, c, cur + v);
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter_entries(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols, self.rows);
        for (r, c, v) in self.iter_entries() {
            t.entries.insert((c, r), v.clone());
        }
        t
    }

    pub fn neg(&self) -> Self {
        let mut m = self.clone();
        for v in m.entries.values_mut() {
            *v = -std::mem::take(v);
        }
        m
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(self.rows, self.cols);
        }
        let mut m = self.clone();
        for v in m.entries.values_mut() {
            *v = std::mem::take(v) * k;
        }
        m
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        let mut m = self.clone();
        for (r, c, v) in other.iter_entries() {
            m.add_to(r, c, v);
        }
        m
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut m = Self::zero(self.rows, other.cols);
        for (&(i, j), a) in &self.entries {
            // walk row j of `other`
            for (&(_, k), b) in other.entries.range((j, 0)..(j + 1, 0)) {
                let cur = m.entries.entry((i, k)).or_insert_with(BigInt::zero);
                *cur += a * b;
            }
        }
        m.entries.retain(|_, v| !v.is_zero());
        m
    }

    /// Vertical stack: self on top of other.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "column mismatch in vstack");
        let mut m = Self::zero(self.rows + other.rows, self.cols);
        for (r, c, v) in self.iter_entries() {
            m.entries.insert((r, c), v.clone());
        }
        for (r, c, v) in other.iter_entries() {
            m.entries.insert((r + self.rows, c), v.clone());
        }
        m
    }

    /// Horizontal stack: self to the left of other.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "row mismatch in hstack");
        let mut m = Self::zero(self.rows, self.cols + other.cols);
        for (r, c, v) in self.iter_entries() {
            m.entries.insert((r, c), v.clone());
        }
        for (r, c, v) in other.iter_entries() {
            m.entries.insert((r, c + self.cols), v.clone());
        }
        m
    }

    /// Copy `block` into self with its (0,0) at (r0, c0).
    pub fn paste(&mut self, r0: usize, c0: usize, block: &Self) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols, "paste out of bounds");
        for (r, c, v) in block.iter_entries() {
            self.set(r0 + r, c0 + c, v.clone());
        }
    }

    pub fn column(&self, c: usize) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.rows];
        for (&(r, cc), v) in self.entries.range((0, 0)..) {
            if cc == c {
                out[r] = v.clone();
            }
        }
        out
    }

    pub fn from_columns(rows: usize, cols: &[Vec<BigInt>]) -> Self {
        let mut m = Self::zero(rows, cols.len());
        for (c, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (r, v) in col.iter().enumerate() {
                if !v.is_zero() {
                    m.entries.insert((r, c), v.clone());
                }
            }
        }
        m
    }

    /// Select a subset of columns, in the given order.
    pub fn select_columns(&self, which: &[usize]) -> Self {
        let mut m = Self::zero(self.rows, which.len());
        for (new_c, &c) in which.iter().enumerate() {
            for r in 0..self.rows {
                let v = self.get(r, c);
                if !v.is_zero() {
                    m.entries.insert((r, new_c), v);
                }
            }
        }
        m
    }

    /// Select a subset of rows, in the given order.
    pub fn select_rows(&self, which: &[usize]) -> Self {
        let mut m = Self::zero(which.len(), self.cols);
        for (new_r, &r) in which.iter().enumerate() {
            for (&(rr, c), v) in self.entries.range((r, 0)..(r + 1, 0)) {
                debug_assert_eq!(rr, r);
                m.entries.insert((new_r, c), v.clone());
            }
        }
        m
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let mut out = vec![BigInt::zero(); self.rows];
        for (r, c, a) in self.iter_entries() {
            if !v[c].is_zero() {
                out[r] += a * &v[c];
            }
        }
        out
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        let mut d = vec![vec![BigInt::zero(); self.cols]; self.rows];
        for (r, c, v) in self.iter_entries() {
            d[r][c] = v.clone();
        }
        d
    }

    /// Dense machine-integer view for debug dumps; panics if an entry does
    /// not fit (entries in this crate's workloads are tiny).
    pub fn to_dense_i64(&self) -> Vec<Vec<i64>> {
        let mut d = vec![vec![0i64; self.cols]; self.rows];
        for (r, c, v) in self.iter_entries() {
            d[r][c] = v.to_i64().expect("matrix entry exceeds i64 in debug dump");
        }
        d
    }

    /// Entrywise absolute value (used by tests that compare matrices up to
    /// per-basis-vector sign).
    pub fn abs(&self) -> Self {
        let mut m = self.clone();
        for v in m.entries.values_mut() {
            *v = v.abs();
        }
        m
    }

    /// Reduction mod p as a dense prime-field matrix.
    pub fn reduce_mod(&self, p: u64) -> ModMatrix {
        let mut m = ModMatrix::zero(p, self.rows, self.cols);
        let bp = BigInt::from(p);
        for (r, c, v) in self.iter_entries() {
            let mut rem = v % &bp;
            if rem.is_negative() {
                rem += &bp;
            }
            m.set(r, c, rem.to_u64().unwrap());
        }
        m
    }

    /// Entrywise reduction into 0..p as an integer matrix (used when a
    /// prime-field matrix must flow through integral storage).
    pub fn mod_p_normalized(&self, p: u64) -> IntegerMatrix {
        let mut out = IntegerMatrix::zero(self.rows, self.cols);
        let bp = BigInt::from(p);
        for (r, c, v) in self.iter_entries() {
            let mut rem = v % &bp;
            if rem.is_negative() {
                rem += &bp;
            }
            if !rem.is_zero() {
                out.entries.insert((r, c), rem);
            }
        }
        out
    }

    /// Equality as maps over the selected ring.
    pub fn eq_over(&self, other: &Self, ring: RingSelector) -> bool {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return false;
        }
        match ring {
            RingSelector::Integers => self == other,
            RingSelector::PrimeField(p) => self.mod_p_normalized(p) == other.mod_p_normalized(p),
        }
    }

    pub fn is_zero_over(&self, ring: RingSelector) -> bool {
        match ring {
            RingSelector::Integers => self.is_zero(),
            RingSelector::PrimeField(p) => self.mod_p_normalized(p).is_zero(),
        }
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntegerMatrix {}x{} [", self.rows, self.cols)?;
        for row in self.to_dense() {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Dense matrix over F_p with entries normalized to 0..p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModMatrix {
    p: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl ModMatrix {
    pub fn zero(p: u64, rows: usize, cols: usize) -> Self {
        ModMatrix { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v % self.p;
    }

    fn mul_mod(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    fn inv_mod(&self, a: u64) -> u64 {
        // extended Euclid; p is prime and a != 0 mod p
        let (mut t, mut new_t) = (0i128, 1i128);
        let (mut r, mut new_r) = (self.p as i128, (a % self.p) as i128);
        while new_r != 0 {
            let q = r / new_r;
            (t, new_t) = (new_t, t - q * new_t);
            (r, new_r) = (new_r, r - q * new_r);
        }
        assert_eq!(r, 1, "not invertible mod p");
        (((t % self.p as i128) + self.p as i128) % self.p as i128) as u64
    }

    /// Row-reduce in place; returns pivot columns.  The matrix ends in
    /// reduced row echelon form.
    pub fn row_reduce(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&r| self.get(r, col) != 0) else {
                continue;
            };
            if pr != row {
                for c in 0..self.cols {
                    self.data.swap(row * self.cols + c, pr * self.cols + c);
                }
            }
            let inv = self.inv_mod(self.get(row, col));
            for c in col..self.cols {
                let v = self.mul_mod(self.get(row, c), inv);
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r != row && self.get(r, col) != 0 {
                    let factor = self.get(r, col);
                    for c in col..self.cols {
                        let sub = self.mul_mod(factor, self.get(row, c));
                        let v = (self.get(r, c) + self.p - sub) % self.p;
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.row_reduce().len()
    }

    /// Basis of the right kernel, as columns of an integer matrix with
    /// entries in 0..p.
    pub fn kernel_basis(&self) -> IntegerMatrix {
        let mut m = self.clone();
        let pivots = m.row_reduce();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_set.contains(c)).collect();
        let mut out = IntegerMatrix::zero(self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            out.set(fc, k, BigInt::one());
            for (prow, &pc) in pivots.iter().enumerate() {
                let v = m.get(prow, fc);
                if v != 0 {
                    out.set(pc, k, BigInt::from(self.p - v));
                }
            }
        }
        out
    }

    /// Solve self * X = B over F_p; None when inconsistent.
    pub fn solve_matrix(&self, b: &ModMatrix) -> Option<IntegerMatrix> {
        assert_eq!(self.rows, b.rows, "shape mismatch in solve");
        assert_eq!(self.p, b.p, "modulus mismatch in solve");
        // reduce the augmented matrix [self | b]
        let mut aug = ModMatrix::zero(self.p, self.rows, self.cols + b.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c));
            }
            for c in 0..b.cols {
                aug.set(r, self.cols + c, b.get(r, c));
            }
        }
        let pivots = aug.row_reduce();
        // inconsistent iff a pivot lands in the b-block
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = IntegerMatrix::zero(self.cols, b.cols);
        for (prow, &pc) in pivots.iter().enumerate() {
            for c in 0..b.cols {
                let v = aug.get(prow, self.cols + c);
                if v != 0 {
                    x.set(pc, c, BigInt::from(v));
                }
            }
        }
        Some(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_selector_accepts_primes_only() {
        assert!(RingSelector::prime_field(2).is_ok());
        assert!(RingSelector::prime_field(97).is_ok());
        assert!(RingSelector::prime_field(1).is_err());
        assert!(RingSelector::prime_field(6).is_err());
    }

    #[test]
    fn sparse_storage_drops_zeros() {
        let mut m = IntegerMatrix::zero(2, 2);
        m.set(0, 1, BigInt::from(5));
        assert_eq!(m.nnz(), 1);
        m.set(0, 1, BigInt::zero());
        assert_eq!(m.nnz(), 0);
        m.add_to(1, 1, &BigInt::from(3));
        m.add_to(1, 1, &BigInt::from(-3));
        assert_eq!(m.nnz(), 0);
        assert!(m.is_zero());
    }

    #[test]
    fn product_and_transpose() {
        let a = IntegerMatrix::from_rows(2, 3, &[&[1, 2, 0], &[0, -1, 4]]);
        let b = IntegerMatrix::from_rows(3, 2, &[&[1, 0], &[2, 1], &[0, 3]]);
        let ab = a.mul(&b);
        assert_eq!(ab, IntegerMatrix::from_rows(2, 2, &[&[5, 2], &[-2, 11]]));
        assert_eq!(a.transpose().transpose(), a);
    }

    #[test]
    fn empty_matrices_are_legal() {
        let a = IntegerMatrix::zero(0, 3);
        let b = IntegerMatrix::zero(3, 2);
        let ab = a.mul(&b);
        assert_eq!((ab.rows(), ab.cols()), (0, 2));
        assert!(ab.is_zero());
    }

    #[test]
    fn mod_p_rank_and_kernel() {
        let m = IntegerMatrix::from_rows(2, 3, &[&[2, 0, 2], &[0, 2, 0]]);
        assert_eq!(m.reduce_mod(2).rank(), 0);
        assert_eq!(m.reduce_mod(3).rank(), 2);
        let k = m.reduce_mod(3).kernel_basis();
        assert_eq!(k.cols(), 1);
        // kernel vector (1, 0, -1) up to scalar: check it is killed mod 3
        let img = m.mul(&k);
        assert!(img.mod_p_normalized(3).is_zero());
    }

    #[test]
    fn mod_p_solve() {
        let m = IntegerMatrix::from_rows(2, 2, &[&[1, 1], &[0, 1]]);
        let b = IntegerMatrix::from_rows(2, 1, &[&[0], &[1]]);
        let x = m.reduce_mod(5).solve_matrix(&b.reduce_mod(5)).unwrap();
        assert!(m.mul(&x).sub(&b).mod_p_normalized(5).is_zero());
        // inconsistent system
        let sing = IntegerMatrix::from_rows(2, 1, &[&[1], &[1]]);
        let bad = IntegerMatrix::from_rows(2, 1, &[&[1], &[0]]);
        assert!(sing.reduce_mod(5).solve_matrix(&bad.reduce_mod(5)).is_none());
    }
}
