//! Arbitrary-precision binary floating point: a BigInt mantissa times a
//! power of two, truncated to a working precision. Rounding is toward
//! zero; every operation that rounds can report an upper bound on the
//! rounding error, which the ball layer consumes.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::mag::Mag;

/// value = mant * 2^exp; zero iff mant = 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigFloat {
    pub mant: BigInt,
    pub exp: i64,
}

impl BigFloat {
    pub fn zero() -> Self {
        Self { mant: BigInt::zero(), exp: 0 }
    }

    pub fn from_i64(v: i64) -> Self {
        Self { mant: BigInt::from(v), exp: 0 }
    }

    pub fn from_bigint(v: BigInt) -> Self {
        Self { mant: v, exp: 0 }
    }

    /// Exact ratio a / b truncated to prec bits.
    pub fn from_ratio(a: &BigInt, b: &BigInt, prec: u32) -> Self {
        assert!(!b.is_zero());
        if a.is_zero() {
            return Self::zero();
        }
        let shift = prec as i64 + 8;
        let scaled = a << shift as usize;
        let q = scaled.div_floor(b);
        let mut out = Self { mant: q, exp: -shift };
        out.truncate(prec);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn bits(&self) -> u64 {
        self.mant.bits()
    }

    /// Floor of log2(|x|) + 1, i.e. |x| <= 2^mag_exp, for nonzero x.
    pub fn mag_exp(&self) -> i64 {
        self.exp + self.mant.bits() as i64
    }

    /// Upper bound of |x| as a Mag.
    pub fn mag(&self) -> Mag {
        if self.is_zero() {
            Mag::zero()
        } else {
            Mag::pow2(self.mag_exp())
        }
    }

    /// Truncate to prec bits; returns an upper bound of the discarded
    /// amount.
    pub fn truncate(&mut self, prec: u32) -> Mag {
        let bits = self.mant.bits();
        if bits <= prec as u64 {
            return Mag::zero();
        }
        let drop = (bits - prec as u64) as i64;
        // truncation toward zero: error below 2^(exp + drop)
        let err = Mag::pow2(self.exp + drop);
        self.mant = &self.mant >> drop as usize;
        self.exp += drop;
        if self.mant.is_zero() {
            self.exp = 0;
        }
        err
    }

    pub fn neg(&self) -> Self {
        Self { mant: -self.mant.clone(), exp: self.exp }
    }

    pub fn abs(&self) -> Self {
        Self { mant: self.mant.abs(), exp: self.exp }
    }

    pub fn add_full(&self, rhs: &Self, prec: u32) -> (Self, Mag) {
        if self.is_zero() {
            return (rhs.clone(), Mag::zero());
        }
        if rhs.is_zero() {
            return (self.clone(), Mag::zero());
        }
        // if the operands are wildly separated, the small one is pure error
        let (hi, lo) = if self.mag_exp() >= rhs.mag_exp() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        if hi.mag_exp() - lo.mag_exp() > prec as i64 + 8 {
            return (hi.clone(), lo.mag());
        }
        let e = hi.exp.min(lo.exp);
        let a = &hi.mant << (hi.exp - e) as usize;
        let b = &lo.mant << (lo.exp - e) as usize;
        let mut out = Self { mant: a + b, exp: e };
        let err = out.truncate(prec);
        (out, err)
    }

    pub fn add(&self, rhs: &Self, prec: u32) -> Self {
        self.add_full(rhs, prec).0
    }

    pub fn sub(&self, rhs: &Self, prec: u32) -> Self {
        self.add(&rhs.neg(), prec)
    }

    pub fn sub_full(&self, rhs: &Self, prec: u32) -> (Self, Mag) {
        self.add_full(&rhs.neg(), prec)
    }

    pub fn mul_full(&self, rhs: &Self, prec: u32) -> (Self, Mag) {
        if self.is_zero() || rhs.is_zero() {
            return (Self::zero(), Mag::zero());
        }
        let mut out = Self { mant: &self.mant * &rhs.mant, exp: self.exp + rhs.exp };
        let err = out.truncate(prec);
        (out, err)
    }

    pub fn mul(&self, rhs: &Self, prec: u32) -> Self {
        self.mul_full(rhs, prec).0
    }

    pub fn div(&self, rhs: &Self, prec: u32) -> Self {
        assert!(!rhs.is_zero(), "division by zero");
        if self.is_zero() {
            return Self::zero();
        }
        let shift = prec as i64 + 8 + rhs.mant.bits() as i64;
        let scaled = &self.mant << shift as usize;
        let q = scaled.div_floor(&rhs.mant);
        let mut out = Self { mant: q, exp: self.exp - rhs.exp - shift };
        out.truncate(prec);
        out
    }

    /// Square root (value must be non-negative), truncated to prec bits.
    pub fn sqrt(&self, prec: u32) -> Self {
        assert!(!self.mant.is_negative(), "sqrt of negative value");
        if self.is_zero() {
            return Self::zero();
        }
        // scale so that the shifted exponent is even and the mantissa has
        // ~2*prec bits
        let bits = self.mant.bits() as i64;
        let mut shift = (2 * prec as i64 + 16 - bits).max(0);
        if (self.exp - shift) % 2 != 0 {
            shift += 1;
        }
        let scaled: BigInt = &self.mant << shift as usize;
        let root = scaled.sqrt();
        let mut out = Self { mant: root, exp: (self.exp - shift) / 2 };
        out.truncate(prec);
        out
    }

    pub fn cmp_abs(&self, rhs: &Self) -> Ordering {
        // cheap pre-check on magnitudes
        if self.is_zero() {
            return if rhs.is_zero() { Ordering::Equal } else { Ordering::Less };
        }
        if rhs.is_zero() {
            return Ordering::Greater;
        }
        let d = self.abs().sub(&rhs.abs(), 64);
        if d.is_zero() {
            Ordering::Equal
        } else if d.mant.is_negative() {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    /// Approximate conversion for diagnostics.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.mant.bits() as i64;
        let keep = 53.min(bits);
        let top: BigInt = &self.mant >> (bits - keep) as usize;
        let t = top.to_f64().unwrap_or(0.0);
        t * 2f64.powi((self.exp + bits - keep) as i32)
    }

    /// Exact rational value (numerator, power-of-two denominator exponent).
    pub fn to_dyadic(&self) -> (BigInt, i64) {
        (self.mant.clone(), self.exp)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u32 = 128;

    #[test]
    fn ratio_and_mul() {
        let third = BigFloat::from_ratio(&BigInt::from(1), &BigInt::from(3), P);
        let three = BigFloat::from_i64(3);
        let one = third.mul(&three, P);
        let err = one.sub(&BigFloat::from_i64(1), P);
        assert!(err.is_zero() || err.mag_exp() < -(P as i64) + 4);
    }

    #[test]
    fn sqrt_squares_back() {
        let two = BigFloat::from_i64(2);
        let r = two.sqrt(P);
        let back = r.mul(&r, P);
        let err = back.sub(&two, P);
        assert!(err.mag_exp() < -(P as i64) + 6);
    }

    #[test]
    fn well_separated_addition() {
        let big = BigFloat::from_i64(1);
        let tiny = BigFloat { mant: BigInt::from(1), exp: -4000 };
        let (sum, err) = big.add_full(&tiny, P);
        assert_eq!(sum, big);
        assert!(!err.is_zero());
    }

    #[test]
    fn truncation_error_is_bounded() {
        let mut v = BigFloat { mant: (BigInt::from(1) << 300) + 12345, exp: -300 };
        let before = v.clone();
        let err = v.truncate(P);
        let diff = before.sub(&v, 512).abs();
        // |diff| <= err
        assert!(diff.mag_exp() <= err.exp_upper());
    }
}
