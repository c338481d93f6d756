//! Bit-packed linear algebra over `F_2`.

use super::Echelon;

#[inline]
pub fn words_for(bits: usize) -> usize {
    bits.div_ceil(64)
}

#[inline]
pub fn get_bit(v: &[u64], i: usize) -> bool {
    (v[i / 64] >> (i % 64)) & 1 == 1
}

#[inline]
pub fn set_bit(v: &mut [u64], i: usize, on: bool) {
    let mask = 1u64 << (i % 64);
    if on {
        v[i / 64] |= mask;
    } else {
        v[i / 64] &= !mask;
    }
}

#[inline]
pub fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= *s;
    }
}

pub fn first_bit(v: &[u64]) -> Option<usize> {
    v.iter()
        .enumerate()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

/// Packs a 0/1 slice.
pub fn pack(bits: impl IntoIterator<Item = bool>, len: usize) -> Vec<u64> {
    let mut v = vec![0u64; words_for(len)];
    for (i, b) in bits.into_iter().enumerate() {
        if b {
            set_bit(&mut v, i, true);
        }
    }
    v
}

/// Incremental reduced echelon basis of packed `F_2` vectors.
#[derive(Debug, Clone)]
pub struct Gf2Echelon {
    len: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Gf2Echelon {
    pub fn new(len: usize) -> Self {
        Gf2Echelon { len, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
}

impl Echelon for Gf2Echelon {
    type Vector = Vec<u64>;

    fn ambient(&self) -> usize {
        self.len
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    fn reduce(&self, v: &mut Vec<u64>) {
        // Pivot bits are only touched by their own row.
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            if get_bit(v, c) {
                xor_into(v, row);
            }
        }
    }

    fn insert(&mut self, mut v: Vec<u64>) -> bool {
        self.reduce(&mut v);
        let Some(c) = first_bit(&v) else {
            return false;
        };
        for row in &mut self.rows {
            if get_bit(row, c) {
                xor_into(row, &v);
            }
        }
        self.rows.push(v);
        self.pivots.push(c);
        true
    }

    fn is_zero(v: &Vec<u64>) -> bool {
        v.iter().all(|&w| w == 0)
    }
}
