//! Dense linear algebra over a prime field `F_p`.
//!
//! Entries are stored reduced in `0..p` as `u32`. Inner products accumulate
//! in `u64` and reduce only when the accumulator could overflow.

use super::{Echelon, Prime};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fp {
    p: u32,
    /// Number of `(p-1)^2` terms that can be added to a `u64` below `p` without overflow.
    batch: usize,
}

impl Fp {
    pub fn new(p: Prime) -> Self {
        let p = p.get();
        let sq = (p as u64 - 1).max(1).pow(2);
        let batch = ((u64::MAX - p as u64) / sq).min(1 << 20) as usize;
        Fp { p, batch: batch.max(1) }
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(&self, v: u64) -> u32 {
        (v % self.p as u64) as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        self.reduce(s)
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.reduce(a as u64 + (self.p - b) as u64)
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.reduce(a as u64 * b as u64)
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn pow(&self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1 % self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Inverse of a nonzero element.
    pub fn inv(&self, a: u32) -> u32 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero in F_{}", self.p);
        self.pow(a, self.p as u64 - 2)
    }

    /// Reduces a signed integer.
    pub fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    /// Dot product with delayed reduction.
    pub fn dot(&self, a: &[u32], b: &[u32]) -> u32 {
        let mut acc = 0u64;
        for (chunk_a, chunk_b) in a.chunks(self.batch).zip(b.chunks(self.batch)) {
            for (x, y) in chunk_a.iter().zip(chunk_b) {
                acc += *x as u64 * *y as u64;
            }
            acc %= self.p as u64;
        }
        acc as u32
    }
}

/// Dense row-major matrix over `F_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpMatrix {
    field: Fp,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl FpMatrix {
    pub fn zeros(field: Fp, rows: usize, cols: usize) -> Self {
        FpMatrix { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: Fp, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % field.p;
        }
        m
    }

    /// Builds a matrix from reduced rows; all rows must have equal length.
    pub fn from_rows(field: Fp, cols: usize, rows: &[Vec<u32>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().map(|&x| x % field.p));
        }
        FpMatrix { field, rows: rows.len(), cols, data }
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v % self.field.p;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.field, self.rows, other.cols);
        mul_into(
            &self.field,
            self.rows,
            self.cols,
            other.cols,
            &self.data,
            &other.data,
            &mut out.data,
        );
        out
    }

    /// Reduced row echelon form in place; returns pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let f = self.field;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(src) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            if src != r {
                for j in 0..self.cols {
                    self.data.swap(src * self.cols + j, r * self.cols + j);
                }
            }
            let inv = f.inv(self.get(r, c));
            for j in c..self.cols {
                let v = self.get(r, j);
                self.data[r * self.cols + j] = f.mul(v, inv);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c);
                if factor == 0 {
                    continue;
                }
                let nf = f.neg(factor);
                for j in c..self.cols {
                    let pivot_row = self.data[r * self.cols + j];
                    if pivot_row != 0 {
                        let cell = &mut self.data[i * self.cols + j];
                        *cell = f.reduce(*cell as u64 + nf as u64 * pivot_row as u64);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of the right kernel `{x : A x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<u32>> {
        let f = self.field;
        let mut m = self.clone();
        let pivots = m.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut x = vec![0u32; self.cols];
            x[free] = 1;
            for (r, &c) in pivots.iter().enumerate() {
                x[c] = f.neg(m.get(r, free));
            }
            basis.push(x);
        }
        basis
    }

    /// Basis of the left kernel `{y : y A = 0}`.
    pub fn left_kernel(&self) -> Vec<Vec<u32>> {
        self.transpose().kernel()
    }
}

/// `out = a * b` for row-major `a` (m×k) and `b` (k×n); zero entries of `a` are skipped.
pub(crate) fn mul_into(
    f: &Fp,
    m: usize,
    k: usize,
    n: usize,
    a: &[u32],
    b: &[u32],
    out: &mut [u32],
) {
    let mut acc = vec![0u64; n];
    for i in 0..m {
        acc.iter_mut().for_each(|x| *x = 0);
        let mut pending = 0usize;
        for l in 0..k {
            let x = a[i * k + l] as u64;
            if x == 0 {
                continue;
            }
            let row = &b[l * n..(l + 1) * n];
            for (slot, &y) in acc.iter_mut().zip(row) {
                *slot += x * y as u64;
            }
            pending += 1;
            if pending == f.batch {
                acc.iter_mut().for_each(|v| *v %= f.p as u64);
                pending = 0;
            }
        }
        for (o, v) in out[i * n..(i + 1) * n].iter_mut().zip(&acc) {
            *o = f.reduce(*v);
        }
    }
}

/// Incremental reduced row echelon basis over `F_p`.
///
/// Every stored row has a leading 1 at its pivot and zeros at every other
/// row's pivot, so the coordinates of a vector in the span are its entries
/// at the pivot columns.
#[derive(Debug, Clone)]
pub struct FpEchelon {
    field: Fp,
    len: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl FpEchelon {
    pub fn new(field: Fp, len: usize) -> Self {
        FpEchelon { field, len, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coefficients of `v` with respect to the stored rows, assuming `v` lies in the span.
    pub fn coordinates(&self, v: &[u32]) -> Vec<u32> {
        self.pivots.iter().map(|&c| v[c]).collect()
    }

    /// Rows sorted by pivot column.
    pub fn sorted_rows(&self) -> Vec<Vec<u32>> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.pivots[i]);
        order.into_iter().map(|i| self.rows[i].clone()).collect()
    }
}

impl Echelon for FpEchelon {
    type Vector = Vec<u32>;

    fn ambient(&self) -> usize {
        self.len
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    fn reduce(&self, v: &mut Vec<u32>) {
        let f = self.field;
        // Pivot entries of v are untouched by other rows, so all factors are known upfront.
        let factors: Vec<(usize, u64)> = self
            .pivots
            .iter()
            .enumerate()
            .filter(|(_, &c)| v[c] != 0)
            .map(|(i, &c)| (i, f.neg(v[c]) as u64))
            .collect();
        if factors.is_empty() {
            return;
        }
        let mut acc: Vec<u64> = v.iter().map(|&x| x as u64).collect();
        for chunk in factors.chunks(f.batch) {
            for &(i, factor) in chunk {
                for (slot, &y) in acc.iter_mut().zip(&self.rows[i]) {
                    *slot += factor * y as u64;
                }
            }
            acc.iter_mut().for_each(|x| *x %= f.p as u64);
        }
        for (o, a) in v.iter_mut().zip(acc) {
            *o = a as u32;
        }
    }

    fn insert(&mut self, mut v: Vec<u32>) -> bool {
        debug_assert_eq!(v.len(), self.len);
        self.reduce(&mut v);
        let Some(c) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let f = self.field;
        let inv = f.inv(v[c]);
        v.iter_mut().for_each(|x| *x = f.mul(*x, inv));
        for row in &mut self.rows {
            let factor = row[c];
            if factor != 0 {
                let nf = f.neg(factor) as u64;
                for (r, &y) in row.iter_mut().zip(&v) {
                    if y != 0 {
                        *r = f.reduce(*r as u64 + nf * y as u64);
                    }
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(c);
        true
    }

    fn is_zero(v: &Vec<u32>) -> bool {
        v.iter().all(|&x| x == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> Fp {
        Fp::new(Prime::new(p).unwrap())
    }

    #[test]
    fn inverse_table() {
        let fp = f(13);
        for a in 1..13 {
            assert_eq!(fp.mul(a, fp.inv(a)), 1);
        }
    }

    #[test]
    fn rank_and_kernels() {
        let fp = f(5);
        let m = FpMatrix::from_rows(fp, 3, &[vec![1, 2, 3], vec![0, 1, 4], vec![1, 3, 2]]);
        // third row = first + second
        assert_eq!(m.rank(), 2);
        for x in m.kernel() {
            for i in 0..3 {
                assert_eq!(fp.dot(m.row(i), &x), 0);
            }
        }
        let lk = m.left_kernel();
        assert_eq!(lk.len(), 1);
        let y = &lk[0];
        for j in 0..3 {
            let col: Vec<u32> = (0..3).map(|i| m.get(i, j)).collect();
            assert_eq!(fp.dot(y, &col), 0);
        }
    }

    #[test]
    fn echelon_coordinates() {
        let fp = f(7);
        let mut e = FpEchelon::new(fp, 3);
        assert!(e.insert(vec![1, 2, 0]));
        assert!(e.insert(vec![0, 1, 3]));
        assert!(!e.insert(vec![2, 5, 3]));
        let v = vec![3, 2, 2];
        let mut w = v.clone();
        e.reduce(&mut w);
        assert!(FpEchelon::is_zero(&w));
        let coords = e.coordinates(&v);
        let mut recon = vec![0u32; 3];
        for (c, row) in coords.iter().zip(e.rows()) {
            for j in 0..3 {
                recon[j] = fp.add(recon[j], fp.mul(*c, row[j]));
            }
        }
        assert_eq!(recon, v);
    }

    #[test]
    fn large_prime_delayed_reduction() {
        let fp = f(2_147_483_647);
        let a = vec![fp.neg(1); 64];
        let b = vec![fp.neg(1); 64];
        assert_eq!(fp.dot(&a, &b), 64);
    }
}
