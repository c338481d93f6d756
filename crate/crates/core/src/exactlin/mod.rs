//! Exact dense linear algebra over `Q`, `Z` and prime fields.

mod gf2;
mod integer;
mod lattice;
mod matrix;
mod modp;
mod prime;
mod rational;
mod snf;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use gf2::Gf2Echelon;
pub use integer::{Coeff, Int};
pub use lattice::{hnf, rank_mod_p, saturation, IntegerLattice};
pub use matrix::IntMatrix;
pub use modp::{Fp, FpEchelon, FpMatrix};
pub use prime::{is_prime, prime_factors, Prime};
pub use rational::QEchelon;
pub use snf::{snf_divisors, DivisorReport};

pub(crate) use gf2::{first_bit, get_bit, pack, set_bit, words_for, xor_into};
pub(crate) use integer::{from_int, Checked};
pub(crate) use lattice::{with_fallback, HnfBuilder};
pub(crate) use modp::mul_into;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("the integers are not a field; use the lattice routines instead")]
    NotAField,
}

/// Coefficient domain of a computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Domain {
    Rationals,
    Integers,
    PrimeField(Prime),
}

impl Domain {
    pub fn prime_field(p: u32) -> Result<Self, LinalgError> {
        Ok(Domain::PrimeField(Prime::new(p)?))
    }

    /// 0 for `Q` and `Z`, otherwise `p`.
    pub fn characteristic(&self) -> u32 {
        match self {
            Domain::Rationals | Domain::Integers => 0,
            Domain::PrimeField(p) => p.get(),
        }
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, Domain::Integers)
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Rationals => write!(f, "Q"),
            Domain::Integers => write!(f, "Z"),
            Domain::PrimeField(p) => write!(f, "F_{p}"),
        }
    }
}

/// An incrementally maintained echelon basis of a subspace.
pub trait Echelon: Clone + Send + Sync {
    type Vector: Clone + Send + Sync;

    /// Length of the vectors.
    fn ambient(&self) -> usize;
    fn rank(&self) -> usize;
    fn rows(&self) -> &[Self::Vector];
    /// Reduces `v` against the basis; the result is zero iff `v` is in the span.
    fn reduce(&self, v: &mut Self::Vector);
    /// Inserts `v`; returns whether the span grew.
    fn insert(&mut self, v: Self::Vector) -> bool;
    fn is_zero(v: &Self::Vector) -> bool;

    fn contains(&self, v: &Self::Vector) -> bool {
        let mut w = v.clone();
        self.reduce(&mut w);
        Self::is_zero(&w)
    }
}

/// Echelon basis over one of the supported fields, fed with integer vectors.
#[derive(Debug, Clone)]
pub enum EchelonBasis {
    Rational(QEchelon),
    Binary(Gf2Echelon),
    Prime(FpEchelon),
}

impl EchelonBasis {
    pub fn new(domain: Domain, len: usize) -> Result<Self, LinalgError> {
        Ok(match domain {
            Domain::Integers => return Err(LinalgError::NotAField),
            Domain::Rationals => EchelonBasis::Rational(QEchelon::new(len)),
            Domain::PrimeField(p) if p.get() == 2 => EchelonBasis::Binary(Gf2Echelon::new(len)),
            Domain::PrimeField(p) => EchelonBasis::Prime(FpEchelon::new(Fp::new(p), len)),
        })
    }

    pub fn rank(&self) -> usize {
        match self {
            EchelonBasis::Rational(e) => e.rank(),
            EchelonBasis::Binary(e) => e.rank(),
            EchelonBasis::Prime(e) => e.rank(),
        }
    }

    /// Reduces `v` into the field and inserts it; returns whether the span grew.
    pub fn insert(&mut self, v: &[Int]) -> bool {
        match self {
            EchelonBasis::Rational(e) => e.insert(v.to_vec()),
            EchelonBasis::Binary(e) => e.insert(pack(v.iter().map(|x| x.residue(2) == 1), v.len())),
            EchelonBasis::Prime(e) => {
                let p = e.field().modulus();
                e.insert(v.iter().map(|x| x.residue(p)).collect())
            }
        }
    }

    pub fn contains(&self, v: &[Int]) -> bool {
        match self {
            EchelonBasis::Rational(e) => e.contains(&v.to_vec()),
            EchelonBasis::Binary(e) => e.contains(&pack(v.iter().map(|x| x.residue(2) == 1), v.len())),
            EchelonBasis::Prime(e) => {
                let p = e.field().modulus();
                e.contains(&v.iter().map(|x| x.residue(p)).collect())
            }
        }
    }
}

/// Echelon basis of the span of `vectors` over a field.
pub fn echelonize(vectors: &[Vec<Int>], domain: Domain) -> Result<EchelonBasis, LinalgError> {
    let len = vectors.first().map_or(0, Vec::len);
    let mut e = EchelonBasis::new(domain, len)?;
    for v in vectors {
        assert_eq!(v.len(), len, "vectors of different lengths");
        e.insert(v);
    }
    Ok(e)
}

/// Rank of the Gram matrix `G_ij = trace(b_i b_j)` over a field.
pub fn trace_form_rank(basis: &[IntMatrix], domain: Domain) -> Result<usize, LinalgError> {
    let d = basis.len();
    let mut gram = vec![vec![Int::from(0); d]; d];
    for i in 0..d {
        let bt = basis[i].transpose();
        for j in i..d {
            // trace(b_i b_j) = sum over (k, l) of b_i[k][l] * b_j[l][k]
            let t: Int = bt.entries().iter().zip(basis[j].entries()).map(|(a, b)| a * b).sum();
            gram[i][j] = t.clone();
            gram[j][i] = t;
        }
    }
    match domain {
        Domain::Integers => Err(LinalgError::NotAField),
        Domain::Rationals => Ok(rational::rank(&gram)),
        Domain::PrimeField(p) => {
            let rows: Vec<Vec<u32>> =
                gram.iter().map(|r| r.iter().map(|x| x.residue(p.get())).collect()).collect();
            Ok(FpMatrix::from_rows(Fp::new(p), d, &rows).rank())
        }
    }
}

/// Rank over `Q` of integer rows.
pub fn rank_over_q(rows: &[Vec<Int>]) -> usize {
    rational::rank(rows)
}
