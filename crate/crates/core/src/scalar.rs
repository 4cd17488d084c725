//! Integer scalar abstraction.
//!
//! The exact linear algebra is written once over [`IntScalar`] and run on
//! machine integers first. Every arithmetic step is checked; on overflow the
//! caller reruns the same algorithm over [`BigInt`], so results are always
//! exact.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

/// Raised by checked arithmetic when a machine-integer scalar overflows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Overflow;

pub type Checked<T> = Result<T, Overflow>;

/// Exact integer scalar usable by the generic matrix algorithms.
pub trait IntScalar:
    Clone
    + Debug
    + Display
    + Eq
    + Ord
    + Hash
    + Send
    + Sync
    + Zero
    + One
    + Signed
    + Integer
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + 'static
{
    fn to_big(&self) -> BigInt;
    fn from_big(b: &BigInt) -> Option<Self>;
    fn from_i64(v: i64) -> Self;

    #[inline]
    fn add_c(&self, o: &Self) -> Checked<Self> {
        self.checked_add(o).ok_or(Overflow)
    }
    #[inline]
    fn sub_c(&self, o: &Self) -> Checked<Self> {
        self.checked_sub(o).ok_or(Overflow)
    }
    #[inline]
    fn mul_c(&self, o: &Self) -> Checked<Self> {
        self.checked_mul(o).ok_or(Overflow)
    }
    /// `self - q * o`
    #[inline]
    fn sub_mul_c(&self, q: &Self, o: &Self) -> Checked<Self> {
        self.sub_c(&q.mul_c(o)?)
    }
    /// Negation; fails only for the most negative machine integer.
    #[inline]
    fn neg_c(&self) -> Checked<Self> {
        Self::zero().sub_c(self)
    }
}

impl IntScalar for i64 {
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn from_big(b: &BigInt) -> Option<Self> {
        b.to_i64()
    }
    fn from_i64(v: i64) -> Self {
        v
    }
}

impl IntScalar for i128 {
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn from_big(b: &BigInt) -> Option<Self> {
        b.to_i128()
    }
    fn from_i64(v: i64) -> Self {
        v as i128
    }
}

impl IntScalar for BigInt {
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn from_big(b: &BigInt) -> Option<Self> {
        Some(b.clone())
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
}

/// Extended gcd: returns `(g, x, y)` with `g = x*a + y*b`, `g >= 0`.
pub fn xgcd<T: IntScalar>(a: &T, b: &T) -> Checked<(T, T, T)> {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (T::one(), T::zero());
    let (mut old_t, mut t) = (T::zero(), T::one());
    while !r.is_zero() {
        let q = old_r.div_floor(&r);
        let nr = old_r.sub_mul_c(&q, &r)?;
        old_r = std::mem::replace(&mut r, nr);
        let ns = old_s.sub_mul_c(&q, &s)?;
        old_s = std::mem::replace(&mut s, ns);
        let nt = old_t.sub_mul_c(&q, &t)?;
        old_t = std::mem::replace(&mut t, nt);
    }
    if old_r.is_negative() {
        Ok((old_r.neg_c()?, old_s.neg_c()?, old_t.neg_c()?))
    } else {
        Ok((old_r, old_s, old_t))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn xgcd_bezout() {
        for a in -30i64..30 {
            for b in -30i64..30 {
                let (g, x, y) = xgcd(&a, &b).unwrap();
                assert_eq!(g, a.gcd(&b));
                assert_eq!(x * a + y * b, g);
            }
        }
    }

    #[test]
    fn overflow_is_detected() {
        let big = i64::MAX;
        assert_eq!(big.mul_c(&2), Err(Overflow));
        assert!(BigInt::from(big).mul_c(&BigInt::from(2)).is_ok());
    }
}
