//! Gaussian integers and Gaussian rationals with exact arbitrary-precision arithmetic.
//!
//! `GaussianRational` is the universal coefficient type of the crate: every
//! embedded equation set and every exact linear-algebra routine works over it.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Element of Z[i].
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GaussianInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussianInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        Self { re: re.into(), im: im.into() }
    }

    pub fn zero() -> Self {
        Self::new(0, 0)
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    pub fn i() -> Self {
        Self::new(0, 1)
    }

    pub fn from_i64(re: i64, im: i64) -> Self {
        Self::new(re, im)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -self.im.clone() }
    }

    /// Field norm a^2 + b^2; zero iff the element is zero.
    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl fmt::Debug for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            if self.im.is_one() {
                return write!(f, "i");
            }
            if self.im == BigInt::from(-1) {
                return write!(f, "-i");
            }
            return write!(f, "{}i", self.im);
        }
        if self.im.is_positive() {
            if self.im.is_one() {
                write!(f, "{}+i", self.re)
            } else {
                write!(f, "{}+{}i", self.re, self.im)
            }
        } else if self.im == BigInt::from(-1) {
            write!(f, "{}-i", self.re)
        } else {
            write!(f, "{}{}i", self.re, self.im)
        }
    }
}

impl Add for &GaussianInt {
    type Output = GaussianInt;
    fn add(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub for &GaussianInt {
    type Output = GaussianInt;
    fn sub(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Mul for &GaussianInt {
    type Output = GaussianInt;
    fn mul(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> GaussianInt {
        GaussianInt { re: -self.re.clone(), im: -self.im.clone() }
    }
}

macro_rules! forward_owned_binop {
    ($t:ty, $tr:ident, $m:ident) => {
        impl $tr for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned_binop!(GaussianInt, Add, add);
forward_owned_binop!(GaussianInt, Sub, sub);
forward_owned_binop!(GaussianInt, Mul, mul);

impl Neg for GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> GaussianInt {
        -&self
    }
}

/// Element of Q(i), stored in canonical form: the denominator is a positive
/// rational integer and gcd(num.re, num.im, den) = 1.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GaussianRational {
    num: GaussianInt,
    den: BigInt,
}

impl GaussianRational {
    /// Build from a Gaussian-integer numerator and denominator, clearing i
    /// from the denominator and reducing to canonical form.
    pub fn new(num: GaussianInt, den: GaussianInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        // Multiply by the conjugate so the denominator becomes the norm.
        let num = &num * &den.conj();
        let den = den.norm();
        Self::from_ratio(num, den)
    }

    /// Build from numerator in Z[i] and a rational-integer denominator.
    pub fn from_ratio(num: GaussianInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut num = num;
        let mut den = den;
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        let g = num.re.gcd(&num.im).gcd(&den);
        if !g.is_one() && !g.is_zero() {
            num.re /= &g;
            num.im /= &g;
            den /= &g;
        }
        if num.is_zero() {
            den = BigInt::one();
        }
        Self { num, den }
    }

    pub fn from_int(v: impl Into<BigInt>) -> Self {
        Self { num: GaussianInt::new(v, 0), den: BigInt::one() }
    }

    pub fn from_gaussian_int(v: GaussianInt) -> Self {
        Self { num: v, den: BigInt::one() }
    }

    /// (a + b i) / d from small components.
    pub fn from_parts(a: i64, b: i64, d: i64) -> Self {
        Self::from_ratio(GaussianInt::from_i64(a, b), BigInt::from(d))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn i() -> Self {
        Self::from_gaussian_int(GaussianInt::i())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.im.is_zero() && self.num.re.is_one()
    }

    pub fn numerator(&self) -> &GaussianInt {
        &self.num
    }

    /// Canonical denominator: a positive rational integer.
    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn conj(&self) -> Self {
        Self { num: self.num.conj(), den: self.den.clone() }
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        let num = self.num.conj() * GaussianInt::new(self.den.clone(), 0);
        Self::from_ratio(num, self.num.norm())
    }

    /// True if the value lies in Q (imaginary part zero).
    pub fn is_rational(&self) -> bool {
        self.num.im.is_zero()
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else if self.num.im.is_zero() {
            write!(f, "{}/{}", self.num.re, self.den)
        } else {
            write!(f, "({})/{}", self.num, self.den)
        }
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        let num = GaussianInt {
            re: &self.num.re * &rhs.den + &rhs.num.re * &self.den,
            im: &self.num.im * &rhs.den + &rhs.num.im * &self.den,
        };
        GaussianRational::from_ratio(num, &self.den * &rhs.den)
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        let num = GaussianInt {
            re: &self.num.re * &rhs.den - &rhs.num.re * &self.den,
            im: &self.num.im * &rhs.den - &rhs.num.im * &self.den,
        };
        GaussianRational::from_ratio(num, &self.den * &rhs.den)
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::from_ratio(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        self * &rhs.inv()
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { num: -&self.num, den: self.den.clone() }
    }
}

forward_owned_binop!(GaussianRational, Add, add);
forward_owned_binop!(GaussianRational, Sub, sub);
forward_owned_binop!(GaussianRational, Mul, mul);
forward_owned_binop!(GaussianRational, Div, div);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gi(a: i64, b: i64) -> GaussianInt {
        GaussianInt::from_i64(a, b)
    }

    #[test]
    fn gaussian_int_norm() {
        assert_eq!(gi(3, 4).norm(), BigInt::from(25));
        assert_eq!(gi(0, 0).norm(), BigInt::from(0));
        assert_eq!(gi(10, -1).norm(), BigInt::from(101));
    }

    #[test]
    fn canonical_form_clears_i_from_denominator() {
        // 1 / (1 + i) = (1 - i)/2
        let q = GaussianRational::new(gi(1, 0), gi(1, 1));
        assert_eq!(q.numerator(), &gi(1, -1));
        assert_eq!(q.denominator(), &BigInt::from(2));
    }

    #[test]
    fn canonical_form_reduces_and_normalizes_sign() {
        let q = GaussianRational::from_ratio(gi(4, -6), BigInt::from(-10));
        assert_eq!(q.numerator(), &gi(-2, 3));
        assert_eq!(q.denominator(), &BigInt::from(5));
        let z = GaussianRational::from_ratio(gi(0, 0), BigInt::from(7));
        assert_eq!(z.denominator(), &BigInt::from(1));
    }

    #[test]
    fn field_inverse() {
        let q = GaussianRational::from_parts(2, 3, 7);
        let p = &q * &q.inv();
        assert!(p.is_one());
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = GaussianRational::i();
        assert_eq!(&i * &i, GaussianRational::from_int(-1));
    }
}
