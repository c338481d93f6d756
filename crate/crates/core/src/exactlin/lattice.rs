//! Integer lattices in row Hermite normal form.
//!
//! A lattice is kept as a list of rows with strictly increasing pivot
//! columns, positive pivots, and every entry above a pivot reduced into
//! `0..pivot`. That form is unique, so two generating sets of the same
//! lattice give identical bases.

use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::integer::{from_int, Checked, Coeff, Int};
use super::modp::{Fp, FpMatrix};
use super::prime::prime_factors;
use super::{IntMatrix, Prime};

/// Incremental HNF over a coefficient type; may fail with overflow for `i64`.
#[derive(Debug, Clone)]
pub(crate) struct HnfBuilder<C: Coeff> {
    len: usize,
    rows: Vec<Vec<C>>,
    pivots: Vec<usize>,
}

fn first_nonzero<C: Coeff>(v: &[C]) -> Option<usize> {
    v.iter().position(|x| !x.is_nil())
}

impl<C: Coeff> HnfBuilder<C> {
    pub fn new(len: usize) -> Self {
        HnfBuilder { len, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<C>] {
        &self.rows
    }

    /// Is `v` an integer combination of the rows?
    pub fn contains(&self, v: &[C]) -> Checked<bool> {
        let mut v = v.to_vec();
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            if let Some(f) = first_nonzero(&v) {
                if f < c {
                    return Ok(false);
                }
            } else {
                return Ok(true);
            }
            if v[c].is_nil() {
                continue;
            }
            let q = v[c].fdiv(&row[c])?;
            if !q.times(&row[c])?.minus(&v[c])?.is_nil() {
                return Ok(false);
            }
            sub_multiple(&mut v, row, &q, c)?;
        }
        Ok(first_nonzero(&v).is_none())
    }

    /// Adds `v` to the generating set; returns whether the lattice grew.
    pub fn insert(&mut self, v: &[C]) -> Checked<bool> {
        debug_assert_eq!(v.len(), self.len);
        let mut v = v.to_vec();
        let mut changed = false;
        let mut idx = 0;
        while let Some(f) = first_nonzero(&v) {
            while idx < self.rows.len() && self.pivots[idx] < f {
                idx += 1;
            }
            if idx == self.rows.len() || self.pivots[idx] > f {
                if v[f].is_neg() {
                    for x in v.iter_mut() {
                        *x = x.negate()?;
                    }
                }
                self.rows.insert(idx, v);
                self.pivots.insert(idx, f);
                changed = true;
                break;
            }
            let row = &mut self.rows[idx];
            let a = row[f].clone();
            let b = v[f].clone();
            let q = b.fdiv(&a)?;
            if q.times(&a)? == b {
                sub_multiple(&mut v, row, &q, f)?;
            } else {
                // Replace (row, v) by a unimodular combination whose first row has pivot gcd(a, b).
                let (g, s, t) = a.xgcd(&b)?;
                let a_g = a.fdiv(&g)?;
                let b_g = b.fdiv(&g)?;
                for j in f..self.len {
                    let r = row[j].clone();
                    let x = v[j].clone();
                    row[j] = s.times(&r)?.plus(&t.times(&x)?)?;
                    v[j] = a_g.times(&x)?.minus(&b_g.times(&r)?)?;
                }
                changed = true;
            }
            idx += 1;
        }
        if changed {
            self.normalize()?;
        }
        Ok(changed)
    }

    /// Reduces every entry above a pivot into `0..pivot`.
    fn normalize(&mut self) -> Checked<()> {
        for i in 0..self.rows.len() {
            let c = self.pivots[i];
            let (above, rest) = self.rows.split_at_mut(i);
            let pivot_row = &rest[0];
            for row in above.iter_mut() {
                if row[c].is_nil() {
                    continue;
                }
                let q = row[c].fdiv(&pivot_row[c])?;
                if !q.is_nil() {
                    sub_multiple(row, pivot_row, &q, c)?;
                }
            }
        }
        Ok(())
    }

    pub fn to_lattice(&self) -> IntegerLattice {
        IntegerLattice {
            ambient: self.len,
            rows: self.rows.iter().map(|r| r.iter().map(Coeff::to_int).collect()).collect(),
            pivots: self.pivots.clone(),
        }
    }
}

/// `v -= q * row` on columns `from..`.
fn sub_multiple<C: Coeff>(v: &mut [C], row: &[C], q: &C, from: usize) -> Checked<()> {
    for (x, r) in v.iter_mut().zip(row).skip(from) {
        if !r.is_nil() {
            *x = x.minus(&q.times(r)?)?;
        }
    }
    Ok(())
}

/// Runs a lattice computation with `i64` coefficients and reruns it with
/// big integers if any step overflows.
pub(crate) fn with_fallback<T>(
    fast: impl FnOnce() -> Checked<T>,
    exact: impl FnOnce() -> Checked<T>,
) -> T {
    match fast() {
        Ok(v) => v,
        Err(_) => exact().expect("big-integer arithmetic cannot overflow"),
    }
}

/// A sublattice of `Z^N` given by its row Hermite normal form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntegerLattice {
    ambient: usize,
    #[serde(with = "int_rows")]
    rows: Vec<Vec<Int>>,
    pivots: Vec<usize>,
}

mod int_rows {
    use super::Int;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(rows: &[Vec<Int>], s: S) -> Result<S::Ok, S::Error> {
        let text: Vec<Vec<String>> =
            rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
        text.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Int>>, D::Error> {
        let text: Vec<Vec<String>> = Vec::deserialize(d)?;
        text.into_iter()
            .map(|r| r.into_iter().map(|x| x.parse::<Int>().map_err(serde::de::Error::custom)).collect())
            .collect()
    }
}

impl IntegerLattice {
    pub fn zero(ambient: usize) -> Self {
        IntegerLattice { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    /// The lattice generated by the given rows.
    pub fn from_generators(ambient: usize, gens: &[Vec<Int>]) -> Self {
        with_fallback(
            || Self::build::<i64>(ambient, gens),
            || Self::build::<Int>(ambient, gens),
        )
    }

    fn build<C: Coeff>(ambient: usize, gens: &[Vec<Int>]) -> Checked<Self> {
        let mut b = HnfBuilder::<C>::new(ambient);
        for g in gens {
            assert_eq!(g.len(), ambient, "generator length does not match ambient dimension");
            let v: Vec<C> = g.iter().map(from_int).collect::<Checked<_>>()?;
            b.insert(&v)?;
        }
        Ok(b.to_lattice())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// HNF basis rows.
    pub fn basis(&self) -> &[Vec<Int>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_matrix(&self) -> IntMatrix {
        IntMatrix::from_int_rows(self.ambient, &self.rows)
    }

    pub fn contains(&self, v: &[Int]) -> bool {
        with_fallback(
            || self.contains_with::<i64>(v),
            || self.contains_with::<Int>(v),
        )
    }

    fn contains_with<C: Coeff>(&self, v: &[Int]) -> Checked<bool> {
        let b = self.builder::<C>()?;
        let v: Vec<C> = v.iter().map(from_int).collect::<Checked<_>>()?;
        b.contains(&v)
    }

    pub(crate) fn builder<C: Coeff>(&self) -> Checked<HnfBuilder<C>> {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(from_int).collect::<Checked<Vec<C>>>())
            .collect::<Checked<Vec<_>>>()?;
        Ok(HnfBuilder { len: self.ambient, rows, pivots: self.pivots.clone() })
    }

    /// Is every basis row of `other` in `self`?
    pub fn contains_lattice(&self, other: &IntegerLattice) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    /// The lattice generated by both.
    pub fn join(&self, other: &IntegerLattice) -> IntegerLattice {
        let mut gens = self.rows.clone();
        gens.extend(other.rows.iter().cloned());
        IntegerLattice::from_generators(self.ambient, &gens)
    }

    /// Product of the pivots; the saturation index divides it.
    pub fn pivot_product(&self) -> Int {
        self.rows.iter().zip(&self.pivots).map(|(r, &c)| r[c].clone()).product()
    }

    /// Rank of the basis matrix reduced modulo `p`.
    pub fn rank_mod_p(&self, p: Prime) -> usize {
        self.basis_mod_p(p).rank()
    }

    pub fn basis_mod_p(&self, p: Prime) -> FpMatrix {
        let f = Fp::new(p);
        let rows: Vec<Vec<u32>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| Coeff::residue(x, p.get())).collect())
            .collect();
        FpMatrix::from_rows(f, self.ambient, &rows)
    }

    /// `(Q-span of self) ∩ Z^N`.
    ///
    /// For each prime `p` that can divide the index, vectors `u` of the
    /// lattice with `u ≡ 0 (mod p)` are found from the left kernel of the
    /// basis mod `p`, and `u/p` is adjoined until the basis has full rank mod `p`.
    pub fn saturation(&self) -> IntegerLattice {
        let mut current = self.clone();
        for p in pivot_primes(self) {
            let prime = Prime::new(p as u32).expect("pivot prime factor fits in u32");
            loop {
                let kernel = current.basis_mod_p(prime).left_kernel();
                if kernel.is_empty() {
                    break;
                }
                let pz = Int::from(p);
                let mut gens = current.rows.clone();
                for y in kernel {
                    let mut u = vec![<Int as Zero>::zero(); self.ambient];
                    for (coef, row) in y.iter().zip(&current.rows) {
                        if *coef == 0 {
                            continue;
                        }
                        let c = Int::from(*coef);
                        for (acc, x) in u.iter_mut().zip(row) {
                            *acc += &c * x;
                        }
                    }
                    for x in u.iter_mut() {
                        debug_assert!((&*x % &pz).is_nil());
                        *x = &*x / &pz;
                    }
                    gens.push(u);
                }
                current = IntegerLattice::from_generators(self.ambient, &gens);
            }
        }
        current
    }

    /// `[saturation : self]`.
    pub fn saturation_index(&self) -> Int {
        // Both lattices project isomorphically onto the pivot columns of self.
        let sat = self.saturation();
        let own = self.pivot_product();
        let theirs = sat.pivot_product();
        own / theirs
    }
}

fn pivot_primes(l: &IntegerLattice) -> Vec<u64> {
    let mut primes: Vec<u64> = Vec::new();
    for (r, &c) in l.rows.iter().zip(&l.pivots) {
        let pivot = r[c].to_u64().expect("pivot fits in u64");
        for q in prime_factors(pivot) {
            if !primes.contains(&q) {
                primes.push(q);
            }
        }
    }
    primes.sort_unstable();
    primes
}

/// Canonical row HNF of the row lattice of `rows`.
pub fn hnf(rows: &IntMatrix) -> IntegerLattice {
    IntegerLattice::from_generators(rows.cols(), &rows.row_vecs())
}

/// Rank over `F_p` of the lattice basis; equals the number of elementary divisors prime to `p`.
pub fn rank_mod_p(l: &IntegerLattice, p: Prime) -> usize {
    l.rank_mod_p(p)
}

pub fn saturation(l: &IntegerLattice) -> IntegerLattice {
    l.saturation()
}
