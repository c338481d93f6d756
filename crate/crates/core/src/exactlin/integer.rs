//! Integer coefficient arithmetic.
//!
//! Lattice routines are written once against [`Coeff`] and instantiated
//! twice: with checked `i64` as a fast path and with [`Int`] as the exact
//! fallback. A computation that overflows the fast path reports
//! [`Overflow`] and is rerun with big integers.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

/// Arbitrary-precision integer used throughout the crate.
pub type Int = BigInt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Overflow;

pub type Checked<T> = Result<T, Overflow>;

pub trait Coeff: Clone + Debug + PartialEq + Send + Sync {
    fn nil() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_nil(&self) -> bool;
    fn is_neg(&self) -> bool;
    fn plus(&self, other: &Self) -> Checked<Self>;
    fn minus(&self, other: &Self) -> Checked<Self>;
    fn times(&self, other: &Self) -> Checked<Self>;
    fn negate(&self) -> Checked<Self>;
    /// Floor division.
    fn fdiv(&self, other: &Self) -> Checked<Self>;
    /// Non-negative remainder of floor division by a positive modulus.
    fn fmod(&self, other: &Self) -> Checked<Self>;
    /// `(g, s, t)` with `g = gcd(a, b) >= 0` and `s*a + t*b = g`.
    fn xgcd(&self, other: &Self) -> Checked<(Self, Self, Self)>;
    /// Residue in `0..p`.
    fn residue(&self, p: u32) -> u32;
    fn to_int(&self) -> Int;
}

impl Coeff for i64 {
    fn nil() -> Self {
        0
    }
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_nil(&self) -> bool {
        *self == 0
    }
    fn is_neg(&self) -> bool {
        *self < 0
    }
    fn plus(&self, other: &Self) -> Checked<Self> {
        self.checked_add(*other).ok_or(Overflow)
    }
    fn minus(&self, other: &Self) -> Checked<Self> {
        self.checked_sub(*other).ok_or(Overflow)
    }
    fn times(&self, other: &Self) -> Checked<Self> {
        self.checked_mul(*other).ok_or(Overflow)
    }
    fn negate(&self) -> Checked<Self> {
        self.checked_neg().ok_or(Overflow)
    }
    fn fdiv(&self, other: &Self) -> Checked<Self> {
        if *other == 0 || (*self == i64::MIN && *other == -1) {
            return Err(Overflow);
        }
        Ok(Integer::div_floor(self, other))
    }
    fn fmod(&self, other: &Self) -> Checked<Self> {
        if *other <= 0 {
            return Err(Overflow);
        }
        Ok(Integer::mod_floor(self, other))
    }
    fn xgcd(&self, other: &Self) -> Checked<(Self, Self, Self)> {
        // i128 keeps the Bezout coefficients exact; they are bounded by
        // the inputs in magnitude, so converting back only fails at i64::MIN.
        let e = (*self as i128).extended_gcd(&(*other as i128));
        let (mut g, mut s, mut t) = (e.gcd, e.x, e.y);
        if g < 0 {
            g = -g;
            s = -s;
            t = -t;
        }
        let conv = |v: i128| i64::try_from(v).map_err(|_| Overflow);
        Ok((conv(g)?, conv(s)?, conv(t)?))
    }
    fn residue(&self, p: u32) -> u32 {
        self.rem_euclid(p as i64) as u32
    }
    fn to_int(&self) -> Int {
        Int::from(*self)
    }
}

impl Coeff for Int {
    fn nil() -> Self {
        Zero::zero()
    }
    fn from_i64(v: i64) -> Self {
        Int::from(v)
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_neg(&self) -> bool {
        Signed::is_negative(self)
    }
    fn plus(&self, other: &Self) -> Checked<Self> {
        Ok(self + other)
    }
    fn minus(&self, other: &Self) -> Checked<Self> {
        Ok(self - other)
    }
    fn times(&self, other: &Self) -> Checked<Self> {
        Ok(self * other)
    }
    fn negate(&self) -> Checked<Self> {
        Ok(-self)
    }
    fn fdiv(&self, other: &Self) -> Checked<Self> {
        if Zero::is_zero(other) {
            return Err(Overflow);
        }
        Ok(Integer::div_floor(self, other))
    }
    fn fmod(&self, other: &Self) -> Checked<Self> {
        if !Signed::is_positive(other) {
            return Err(Overflow);
        }
        Ok(Integer::mod_floor(self, other))
    }
    fn xgcd(&self, other: &Self) -> Checked<(Self, Self, Self)> {
        let e = self.extended_gcd(other);
        if Signed::is_negative(&e.gcd) {
            Ok((-e.gcd, -e.x, -e.y))
        } else {
            Ok((e.gcd, e.x, e.y))
        }
    }
    fn residue(&self, p: u32) -> u32 {
        Integer::mod_floor(self, &Int::from(p))
            .to_u32()
            .expect("residue below modulus")
    }
    fn to_int(&self) -> Int {
        self.clone()
    }
}

/// Converts a big integer to the coefficient type, failing if it does not fit.
pub fn from_int<C: Coeff>(v: &Int) -> Checked<C> {
    // Route through i64 when possible; the big-integer instance never fails.
    match v.to_i64() {
        Some(small) => Ok(C::from_i64(small)),
        None => {
            let mut acc = C::nil();
            let base = C::from_i64(1 << 32);
            let (sign, digits) = v.to_u32_digits();
            for d in digits.iter().rev() {
                acc = acc.times(&base)?.plus(&C::from_i64(*d as i64))?;
            }
            if sign == num_bigint::Sign::Minus {
                acc = acc.negate()?;
            }
            Ok(acc)
        }
    }
}
