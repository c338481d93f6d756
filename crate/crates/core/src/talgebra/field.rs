//! Square matrices over a field, flattened into vectors so that a matrix
//! algebra is just a subspace with an echelon basis.

use std::fmt::Debug;

use num_traits::Zero;

use crate::exactlin::{
    first_bit, get_bit, mul_into, set_bit, words_for, xor_into, Coeff, Domain, Echelon, Fp, FpEchelon,
    Gf2Echelon, Int, IntMatrix, Prime, QEchelon,
};

/// Arithmetic on `n × n` matrices over a field.
#[allow(clippy::wrong_self_convention)]
pub trait MatrixField: Clone + Debug + Send + Sync {
    type Vector: Clone + Debug + PartialEq + Send + Sync;
    type Basis: Echelon<Vector = Self::Vector> + Debug;

    fn domain(&self) -> Domain;
    /// Matrix size `n`.
    fn order(&self) -> usize;
    fn empty_basis(&self) -> Self::Basis;
    fn zero(&self) -> Self::Vector;
    /// The 0/1 matrix with ones at the given `(row, col)` positions.
    fn from_entries(&self, ones: &[(usize, usize)]) -> Self::Vector;
    fn from_int(&self, m: &IntMatrix) -> Self::Vector;
    fn mul(&self, a: &Self::Vector, b: &Self::Vector) -> Self::Vector;
    fn add(&self, a: &Self::Vector, b: &Self::Vector) -> Self::Vector;
    fn transpose(&self, a: &Self::Vector) -> Self::Vector;
    fn is_zero(&self, a: &Self::Vector) -> bool;
    /// An integer matrix representing `a` (residues in `0..p` over `F_p`).
    fn to_int(&self, a: &Self::Vector) -> IntMatrix;

    fn identity(&self) -> Self::Vector {
        let n = self.order();
        let ones: Vec<(usize, usize)> = (0..n).map(|i| (i, i)).collect();
        self.from_entries(&ones)
    }
}

/// A matrix field of positive characteristic.
#[allow(clippy::wrong_self_convention)]
pub trait ModularField: MatrixField {
    fn prime(&self) -> Prime;
    /// Entries in `0..p`, row-major.
    fn residues(&self, a: &Self::Vector) -> Vec<u32>;
    fn from_residues(&self, r: &[u32]) -> Self::Vector;
}

/// Matrices over `Q`, stored as integer vectors (any nonzero rational multiple is equivalent).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RationalMatrices {
    n: usize,
}

impl RationalMatrices {
    pub fn new(n: usize) -> Self {
        RationalMatrices { n }
    }
}

impl MatrixField for RationalMatrices {
    type Vector = Vec<Int>;
    type Basis = QEchelon;

    fn domain(&self) -> Domain {
        Domain::Rationals
    }

    fn order(&self) -> usize {
        self.n
    }

    fn empty_basis(&self) -> QEchelon {
        QEchelon::new(self.n * self.n)
    }

    fn zero(&self) -> Vec<Int> {
        vec![Int::zero(); self.n * self.n]
    }

    fn from_entries(&self, ones: &[(usize, usize)]) -> Vec<Int> {
        let mut v = self.zero();
        for &(i, j) in ones {
            v[i * self.n + j] = Int::from(1);
        }
        v
    }

    fn from_int(&self, m: &IntMatrix) -> Vec<Int> {
        m.flatten()
    }

    fn mul(&self, a: &Vec<Int>, b: &Vec<Int>) -> Vec<Int> {
        let n = self.n;
        let mut out = self.zero();
        for i in 0..n {
            for k in 0..n {
                let x = &a[i * n + k];
                if x.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let y = &b[k * n + j];
                    if !y.is_zero() {
                        out[i * n + j] += x * y;
                    }
                }
            }
        }
        out
    }

    fn add(&self, a: &Vec<Int>, b: &Vec<Int>) -> Vec<Int> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    fn transpose(&self, a: &Vec<Int>) -> Vec<Int> {
        let n = self.n;
        (0..n * n).map(|k| a[(k % n) * n + k / n].clone()).collect()
    }

    fn is_zero(&self, a: &Vec<Int>) -> bool {
        a.iter().all(Zero::is_zero)
    }

    fn to_int(&self, a: &Vec<Int>) -> IntMatrix {
        IntMatrix::unflatten(self.n, a)
    }
}

/// Matrices over `F_p` with `u32` entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeMatrices {
    n: usize,
    fp: Fp,
    prime: Prime,
}

impl PrimeMatrices {
    pub fn new(n: usize, p: Prime) -> Self {
        PrimeMatrices { n, fp: Fp::new(p), prime: p }
    }

    pub fn fp(&self) -> Fp {
        self.fp
    }
}

impl MatrixField for PrimeMatrices {
    type Vector = Vec<u32>;
    type Basis = FpEchelon;

    fn domain(&self) -> Domain {
        Domain::PrimeField(self.prime)
    }

    fn order(&self) -> usize {
        self.n
    }

    fn empty_basis(&self) -> FpEchelon {
        FpEchelon::new(self.fp, self.n * self.n)
    }

    fn zero(&self) -> Vec<u32> {
        vec![0; self.n * self.n]
    }

    fn from_entries(&self, ones: &[(usize, usize)]) -> Vec<u32> {
        let mut v = self.zero();
        for &(i, j) in ones {
            v[i * self.n + j] = 1 % self.fp.modulus();
        }
        v
    }

    fn from_int(&self, m: &IntMatrix) -> Vec<u32> {
        m.entries().iter().map(|x| x.residue(self.fp.modulus())).collect()
    }

    fn mul(&self, a: &Vec<u32>, b: &Vec<u32>) -> Vec<u32> {
        let mut out = self.zero();
        mul_into(&self.fp, self.n, self.n, self.n, a, b, &mut out);
        out
    }

    fn add(&self, a: &Vec<u32>, b: &Vec<u32>) -> Vec<u32> {
        a.iter().zip(b).map(|(&x, &y)| self.fp.add(x, y)).collect()
    }

    fn transpose(&self, a: &Vec<u32>) -> Vec<u32> {
        let n = self.n;
        (0..n * n).map(|k| a[(k % n) * n + k / n]).collect()
    }

    fn is_zero(&self, a: &Vec<u32>) -> bool {
        a.iter().all(|&x| x == 0)
    }

    fn to_int(&self, a: &Vec<u32>) -> IntMatrix {
        IntMatrix::from_vec(self.n, self.n, a.iter().map(|&x| Int::from(x)).collect())
    }
}

impl ModularField for PrimeMatrices {
    fn prime(&self) -> Prime {
        self.prime
    }

    fn residues(&self, a: &Vec<u32>) -> Vec<u32> {
        a.clone()
    }

    fn from_residues(&self, r: &[u32]) -> Vec<u32> {
        r.to_vec()
    }
}

/// Matrices over `F_2`, one bit per entry; every row occupies `stride` words.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BinaryMatrices {
    n: usize,
    stride: usize,
}

impl BinaryMatrices {
    pub fn new(n: usize) -> Self {
        BinaryMatrices { n, stride: words_for(n) }
    }

    #[inline]
    fn bit(&self, i: usize, j: usize) -> usize {
        i * self.stride * 64 + j
    }

    fn row<'v>(&self, a: &'v [u64], i: usize) -> &'v [u64] {
        &a[i * self.stride..(i + 1) * self.stride]
    }
}

impl MatrixField for BinaryMatrices {
    type Vector = Vec<u64>;
    type Basis = Gf2Echelon;

    fn domain(&self) -> Domain {
        Domain::PrimeField(Prime::new(2).expect("2 is prime"))
    }

    fn order(&self) -> usize {
        self.n
    }

    fn empty_basis(&self) -> Gf2Echelon {
        Gf2Echelon::new(self.n * self.stride * 64)
    }

    fn zero(&self) -> Vec<u64> {
        vec![0; self.n * self.stride]
    }

    fn from_entries(&self, ones: &[(usize, usize)]) -> Vec<u64> {
        let mut v = self.zero();
        for &(i, j) in ones {
            set_bit(&mut v, self.bit(i, j), true);
        }
        v
    }

    fn from_int(&self, m: &IntMatrix) -> Vec<u64> {
        let mut v = self.zero();
        for i in 0..self.n {
            for j in 0..self.n {
                if m.get(i, j).residue(2) == 1 {
                    set_bit(&mut v, self.bit(i, j), true);
                }
            }
        }
        v
    }

    fn mul(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        let mut out = self.zero();
        for i in 0..self.n {
            let (dst_lo, dst_hi) = (i * self.stride, (i + 1) * self.stride);
            let mut row = self.row(a, i).to_vec();
            // walk the set bits of row i of a
            while let Some(k) = first_bit(&row) {
                set_bit(&mut row, k, false);
                xor_into(&mut out[dst_lo..dst_hi], self.row(b, k));
            }
        }
        out
    }

    fn add(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| x ^ y).collect()
    }

    fn transpose(&self, a: &Vec<u64>) -> Vec<u64> {
        let mut out = self.zero();
        for i in 0..self.n {
            for j in 0..self.n {
                if get_bit(a, self.bit(i, j)) {
                    set_bit(&mut out, self.bit(j, i), true);
                }
            }
        }
        out
    }

    fn is_zero(&self, a: &Vec<u64>) -> bool {
        a.iter().all(|&w| w == 0)
    }

    fn to_int(&self, a: &Vec<u64>) -> IntMatrix {
        let data = (0..self.n * self.n)
            .map(|k| Int::from(u8::from(get_bit(a, self.bit(k / self.n, k % self.n)))))
            .collect();
        IntMatrix::from_vec(self.n, self.n, data)
    }
}

impl ModularField for BinaryMatrices {
    fn prime(&self) -> Prime {
        Prime::new(2).expect("2 is prime")
    }

    fn residues(&self, a: &Vec<u64>) -> Vec<u32> {
        (0..self.n * self.n)
            .map(|k| u32::from(get_bit(a, self.bit(k / self.n, k % self.n))))
            .collect()
    }

    fn from_residues(&self, r: &[u32]) -> Vec<u64> {
        let mut v = self.zero();
        for (k, &x) in r.iter().enumerate() {
            if x % 2 == 1 {
                set_bit(&mut v, self.bit(k / self.n, k % self.n), true);
            }
        }
        v
    }
}
