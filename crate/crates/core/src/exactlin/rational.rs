//! Linear algebra over the rationals using fraction-free integer rows.
//!
//! A subspace of `Q^n` is stored as integer rows in echelon form, each
//! primitive (content 1) with a positive leading entry. No rational numbers
//! are ever formed.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Echelon, Int};

#[derive(Debug, Clone)]
pub struct QEchelon {
    len: usize,
    /// Sorted by pivot column.
    rows: Vec<Vec<Int>>,
    pivots: Vec<usize>,
}

impl QEchelon {
    pub fn new(len: usize) -> Self {
        QEchelon { len, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
}

/// Divides out the content and makes the leading entry positive.
pub fn make_primitive(v: &mut [Int]) {
    let mut g = Int::zero();
    for x in v.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                break;
            }
        }
    }
    if g.is_zero() {
        return;
    }
    let lead_negative = v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    if lead_negative {
        g = -g;
    }
    if !g.is_one() {
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = &*x / &g;
            }
        }
    }
}

impl Echelon for QEchelon {
    type Vector = Vec<Int>;

    fn ambient(&self) -> usize {
        self.len
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    fn rows(&self) -> &[Vec<Int>] {
        &self.rows
    }

    fn reduce(&self, v: &mut Vec<Int>) {
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            if v[c].is_zero() {
                continue;
            }
            let a = &row[c];
            let g = a.gcd(&v[c]);
            let mult_v = a / &g;
            let mult_r = &v[c] / &g;
            // entries before the pivot are scaled too; the row is zero there
            for x in v[..c].iter_mut() {
                *x = &*x * &mult_v;
            }
            for (x, y) in v.iter_mut().zip(row.iter()).skip(c) {
                *x = &*x * &mult_v - y * &mult_r;
            }
            make_primitive(v);
        }
    }

    fn insert(&mut self, mut v: Vec<Int>) -> bool {
        self.reduce(&mut v);
        let Some(c) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        make_primitive(&mut v);
        let at = self.pivots.partition_point(|&p| p < c);
        self.rows.insert(at, v);
        self.pivots.insert(at, c);
        true
    }

    fn is_zero(v: &Vec<Int>) -> bool {
        v.iter().all(Zero::is_zero)
    }
}

/// Rank over `Q` by fraction-free (Bareiss) elimination.
pub fn rank(rows: &[Vec<Int>]) -> usize {
    let mut m: Vec<Vec<Int>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut prev = Int::one();
    let mut r = 0;
    for c in 0..ncols {
        let Some(src) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, src);
        for i in r + 1..m.len() {
            for j in c + 1..ncols {
                let val = (&m[r][c] * &m[i][j] - &m[i][c] * &m[r][j]) / &prev;
                m[i][j] = val;
            }
            m[i][c] = Int::zero();
        }
        prev = m[r][c].clone();
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}
