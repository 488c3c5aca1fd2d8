//! Complex arithmetic over the arbitrary-precision floats.

use num_bigint::BigInt;

use ballq_algebra::GaussianRational;

use crate::mag::Mag;
use crate::real::BigFloat;

#[derive(Clone, Debug, PartialEq)]
pub struct CplxF {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl CplxF {
    pub fn zero() -> Self {
        Self { re: BigFloat::zero(), im: BigFloat::zero() }
    }

    pub fn one() -> Self {
        Self { re: BigFloat::from_i64(1), im: BigFloat::zero() }
    }

    pub fn from_f64(re: f64, im: f64, prec: u32) -> Self {
        let conv = |v: f64| {
            if v == 0.0 {
                return BigFloat::zero();
            }
            let (m, e) = frexp(v);
            let mant = (m * 2f64.powi(53)) as i64;
            let mut f = BigFloat { mant: BigInt::from(mant), exp: (e - 53) as i64 };
            f.truncate(prec);
            f
        };
        Self { re: conv(re), im: conv(im) }
    }

    pub fn from_gaussian_rational(q: &GaussianRational, prec: u32) -> Self {
        Self {
            re: BigFloat::from_ratio(&q.numerator().re, q.denominator(), prec),
            im: BigFloat::from_ratio(&q.numerator().im, q.denominator(), prec),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: self.im.neg() }
    }

    pub fn neg(&self) -> Self {
        Self { re: self.re.neg(), im: self.im.neg() }
    }

    pub fn add(&self, rhs: &Self, prec: u32) -> Self {
        Self { re: self.re.add(&rhs.re, prec), im: self.im.add(&rhs.im, prec) }
    }

    pub fn sub(&self, rhs: &Self, prec: u32) -> Self {
        Self { re: self.re.sub(&rhs.re, prec), im: self.im.sub(&rhs.im, prec) }
    }

    pub fn mul(&self, rhs: &Self, prec: u32) -> Self {
        self.mul_full(rhs, prec).0
    }

    /// Product together with an upper bound on the rounding error.
    pub fn mul_full(&self, rhs: &Self, prec: u32) -> (Self, Mag) {
        let (ac, e1) = self.re.mul_full(&rhs.re, prec);
        let (bd, e2) = self.im.mul_full(&rhs.im, prec);
        let (ad, e3) = self.re.mul_full(&rhs.im, prec);
        let (bc, e4) = self.im.mul_full(&rhs.re, prec);
        let (re, e5) = ac.sub_full(&bd, prec);
        let (im, e6) = ad.add_full(&bc, prec);
        let err = e1.add(&e2).add(&e3).add(&e4).add(&e5).add(&e6);
        (Self { re, im }, err)
    }

    pub fn add_full(&self, rhs: &Self, prec: u32) -> (Self, Mag) {
        let (re, e1) = self.re.add_full(&rhs.re, prec);
        let (im, e2) = self.im.add_full(&rhs.im, prec);
        (Self { re, im }, e1.add(&e2))
    }

    /// |z|^2 as a real float.
    pub fn norm_sq(&self, prec: u32) -> BigFloat {
        self.re.mul(&self.re, prec).add(&self.im.mul(&self.im, prec), prec)
    }

    pub fn abs(&self, prec: u32) -> BigFloat {
        self.norm_sq(prec).sqrt(prec)
    }

    pub fn div(&self, rhs: &Self, prec: u32) -> Self {
        let n = rhs.norm_sq(prec);
        let t = self.mul(&rhs.conj(), prec);
        Self { re: t.re.div(&n, prec), im: t.im.div(&n, prec) }
    }

    pub fn scale(&self, s: &BigFloat, prec: u32) -> Self {
        Self { re: self.re.mul(s, prec), im: self.im.mul(s, prec) }
    }

    /// Upper bound of |z|.
    pub fn mag(&self) -> Mag {
        self.re.mag().add(&self.im.mag())
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

fn frexp(v: f64) -> (f64, i32) {
    if v == 0.0 || !v.is_finite() {
        return (v, 0);
    }
    let bits = v.to_bits();
    let exponent = ((bits >> 52) & 0x7ff) as i32;
    if exponent == 0 {
        // subnormal: scale up first
        let scaled = v * 2f64.powi(64);
        let (m, e) = frexp(scaled);
        (m, e - 64)
    } else {
        let e = exponent - 1022;
        let m = f64::from_bits((bits & !(0x7ffu64 << 52)) | (1022u64 << 52));
        (m, e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u32 = 128;

    #[test]
    fn complex_field_ops() {
        let a = CplxF::from_f64(1.5, -2.25, P);
        let b = CplxF::from_f64(0.75, 4.0, P);
        let prod = a.mul(&b, P);
        let back = prod.div(&b, P);
        let diff = back.sub(&a, P);
        assert!(diff.mag().exp_upper() < -(P as i64) + 12);
    }

    #[test]
    fn from_rational_is_accurate() {
        let q = GaussianRational::from_parts(2, 3, 7);
        let z = CplxF::from_gaussian_rational(&q, P);
        let expect = CplxF::from_f64(2.0 / 7.0, 3.0 / 7.0, P);
        assert!(z.sub(&expect, P).mag().exp_upper() < -48);
    }

    #[test]
    fn frexp_round_trip() {
        for &v in &[1.0, -3.5, 0.001953125, 123456.789] {
            let (m, e) = frexp(v);
            assert!((0.5..1.0).contains(&m.abs()), "{v}");
            assert!((m * 2f64.powi(e) - v).abs() < 1e-12 * v.abs());
        }
    }
}
