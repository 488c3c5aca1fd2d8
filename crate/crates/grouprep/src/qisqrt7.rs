//! Exact arithmetic in the degree-4 extension Q(i, sqrt(7)) with basis
//! {1, i, sqrt7, i*sqrt7}. Character values of U3(3) live here.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use ballq_algebra::GaussianRational;

/// a + b*i + c*sqrt7 + d*i*sqrt7 with rational coordinates.
#[derive(Clone, PartialEq, Eq)]
pub struct QiSqrt7 {
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
    pub d: BigRational,
}

fn br(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl QiSqrt7 {
    pub fn zero() -> Self {
        Self { a: BigRational::zero(), b: BigRational::zero(), c: BigRational::zero(), d: BigRational::zero() }
    }

    pub fn from_int(v: i64) -> Self {
        Self { a: br(v, 1), ..Self::zero() }
    }

    pub fn from_gaussian(re: i64, im: i64) -> Self {
        Self { a: br(re, 1), b: br(im, 1), ..Self::zero() }
    }

    pub fn from_gaussian_rational(q: &GaussianRational) -> Self {
        let den = q.denominator().clone();
        Self {
            a: BigRational::new(q.numerator().re.clone(), den.clone()),
            b: BigRational::new(q.numerator().im.clone(), den),
            ..Self::zero()
        }
    }

    /// (p + q*i*sqrt7)/r, the shape of the constant A = (1 - i sqrt7)/2.
    pub fn from_isqrt7_part(p: i64, q: i64, r: i64) -> Self {
        Self { a: br(p, r), d: br(q, r), ..Self::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    /// Complex conjugation: i -> -i.
    pub fn conj(&self) -> Self {
        Self { a: self.a.clone(), b: -self.b.clone(), c: self.c.clone(), d: -self.d.clone() }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Self { a: &self.a * r, b: &self.b * r, c: &self.c * r, d: &self.d * r }
    }

    /// The value as a non-negative integer, if it is one.
    pub fn as_non_negative_integer(&self) -> Option<u64> {
        if !self.b.is_zero() || !self.c.is_zero() || !self.d.is_zero() {
            return None;
        }
        if !self.a.is_integer() || self.a.is_negative() {
            return None;
        }
        use num_traits::ToPrimitive;
        self.a.to_integer().to_u64()
    }

    /// The value as a Gaussian rational, if the sqrt7 parts vanish.
    pub fn as_gaussian_rational(&self) -> Option<GaussianRational> {
        if !self.c.is_zero() || !self.d.is_zero() {
            return None;
        }
        let da = self.a.denom().clone();
        let db = self.b.denom().clone();
        let den = da.lcm(&db);
        let re = self.a.numer() * (&den / self.a.denom());
        let im = self.b.numer() * (&den / self.b.denom());
        Some(GaussianRational::from_ratio(
            ballq_algebra::GaussianInt::new(re, im),
            den,
        ))
    }
}

impl Add for &QiSqrt7 {
    type Output = QiSqrt7;
    fn add(self, rhs: &QiSqrt7) -> QiSqrt7 {
        QiSqrt7 {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
            c: &self.c + &rhs.c,
            d: &self.d + &rhs.d,
        }
    }
}

impl Sub for &QiSqrt7 {
    type Output = QiSqrt7;
    fn sub(self, rhs: &QiSqrt7) -> QiSqrt7 {
        QiSqrt7 {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
            c: &self.c - &rhs.c,
            d: &self.d - &rhs.d,
        }
    }
}

impl Mul for &QiSqrt7 {
    type Output = QiSqrt7;
    fn mul(self, rhs: &QiSqrt7) -> QiSqrt7 {
        // (a1 + b1 i + c1 s + d1 is)(a2 + b2 i + c2 s + d2 is), s^2 = 7
        let (a1, b1, c1, d1) = (&self.a, &self.b, &self.c, &self.d);
        let (a2, b2, c2, d2) = (&rhs.a, &rhs.b, &rhs.c, &rhs.d);
        let seven = br(7, 1);
        QiSqrt7 {
            a: a1 * a2 - b1 * b2 + &seven * &(c1 * c2) - &seven * &(d1 * d2),
            b: a1 * b2 + b1 * a2 + &seven * &(c1 * d2) + &seven * &(d1 * c2),
            c: a1 * c2 + c1 * a2 - b1 * d2 - d1 * b2,
            d: a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
        }
    }
}

impl Neg for &QiSqrt7 {
    type Output = QiSqrt7;
    fn neg(self) -> QiSqrt7 {
        QiSqrt7 { a: -self.a.clone(), b: -self.b.clone(), c: -self.c.clone(), d: -self.d.clone() }
    }
}

impl fmt::Display for QiSqrt7 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        if !self.a.is_zero() {
            parts.push(format!("{}", self.a));
        }
        if !self.b.is_zero() {
            parts.push(format!("{}*i", self.b));
        }
        if !self.c.is_zero() {
            parts.push(format!("{}*sqrt7", self.c));
        }
        if !self.d.is_zero() {
            parts.push(format!("{}*i*sqrt7", self.d));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for QiSqrt7 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt7_squares_to_seven() {
        let s = QiSqrt7 { c: br(1, 1), ..QiSqrt7::zero() };
        let s2 = &s * &s;
        assert_eq!(s2, QiSqrt7::from_int(7));
        let is = QiSqrt7 { d: br(1, 1), ..QiSqrt7::zero() };
        assert_eq!(&is * &is, QiSqrt7::from_int(-7));
    }

    #[test]
    fn norm_of_a_constant() {
        // A = (1 - i sqrt7)/2, A * conj(A) = (1 + 7)/4 = 2
        let a = QiSqrt7::from_isqrt7_part(1, -1, 2);
        let n = &a * &a.conj();
        assert_eq!(n, QiSqrt7::from_int(2));
    }
}
