//! Exact holomorphic-Lefschetz dimension counts in Q(w), w = e^{2 pi i/3}.
//!
//! For an order-3 automorphism with `fixed_points` isolated fixed points
//! of type (1/3, 1/3), the alternating sums of the character-component
//! dimensions on cohomology are
//!   (1/3) * (N + w^{2k} * F(g) + w^{k} * F(g^2)),    k = 0, 1, 2,
//! where F(g) = fixed_points * w^t / (1 - w)^2 and
//! F(g^2) = fixed_points * w^{2t} / (1 - w^2)^2, with t = 0 for the
//! structure-sheaf count and t = 1 for the twisted (2K) count.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::NumericError;

/// a + b w with w^2 = -1 - w, exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Qw {
    pub a: BigRational,
    pub b: BigRational,
}

impl Qw {
    pub fn zero() -> Self {
        Self { a: BigRational::zero(), b: BigRational::zero() }
    }

    pub fn from_int(v: i64) -> Self {
        Self { a: BigRational::from(BigInt::from(v)), b: BigRational::zero() }
    }

    pub fn w() -> Self {
        Self { a: BigRational::zero(), b: BigRational::one() }
    }

    pub fn w_pow(k: u32) -> Self {
        match k % 3 {
            0 => Self::from_int(1),
            1 => Self::w(),
            // w^2 = -1 - w
            _ => Self { a: -BigRational::one(), b: -BigRational::one() },
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        // (a1 + b1 w)(a2 + b2 w) = a1 a2 + (a1 b2 + a2 b1) w + b1 b2 w^2
        let cross = &(&self.a * &rhs.b) + &(&self.b * &rhs.a);
        let sq = &self.b * &rhs.b;
        Self { a: &(&self.a * &rhs.a) - &sq, b: &cross - &sq }
    }

    pub fn inv(&self) -> Self {
        // (a + b w)^{-1} = (a - b - b w) / (a^2 - a b + b^2)
        let norm = &(&(&self.a * &self.a) - &(&self.a * &self.b)) + &(&self.b * &self.b);
        assert!(!norm.is_zero(), "inverse of zero in Q(w)");
        Self { a: &(&self.a - &self.b) / &norm, b: -&self.b / &norm }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Self { a: &self.a * r, b: &self.b * r }
    }

    /// Exact integer value, if the w-part vanishes and a is integral.
    pub fn as_integer(&self) -> Option<i64> {
        if !self.b.is_zero() || !self.a.is_integer() {
            return None;
        }
        self.a.to_integer().to_i64()
    }
}

/// The three character-component dimensions for characters 1, w, w^2.
pub fn lefschetz_dimensions(
    fixed_points: u32,
    twist: u32,
    alternating_sum_total: i64,
) -> Result<[i64; 3], NumericError> {
    let n = Qw::from_int(alternating_sum_total);
    let one_minus_w = Qw::from_int(1).add(&Qw::w().scale(&-BigRational::one()));
    let one_minus_w2 = Qw::from_int(1).add(&Qw::w_pow(2).scale(&-BigRational::one()));
    let f = BigRational::from(BigInt::from(fixed_points));
    // F(g) = fp * w^t / (1-w)^2, F(g^2) = fp * w^{2t} / (1-w^2)^2
    let fg = Qw::w_pow(twist)
        .scale(&f)
        .mul(&one_minus_w.mul(&one_minus_w).inv());
    let fg2 = Qw::w_pow(2 * twist)
        .scale(&f)
        .mul(&one_minus_w2.mul(&one_minus_w2).inv());
    let third = BigRational::new(BigInt::one(), BigInt::from(3));
    let mut out = [0i64; 3];
    for k in 0..3u32 {
        let total = n
            .add(&Qw::w_pow(2 * k).mul(&fg))
            .add(&Qw::w_pow(k).mul(&fg2))
            .scale(&third);
        out[k as usize] = total
            .as_integer()
            .ok_or(NumericError::NonIntegralLefschetz)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qw_arithmetic() {
        // w^3 = 1 and 1 + w + w^2 = 0
        let w = Qw::w();
        assert_eq!(w.mul(&w).mul(&w), Qw::from_int(1));
        assert_eq!(
            Qw::from_int(1).add(&w).add(&Qw::w_pow(2)),
            Qw::zero()
        );
        let z = Qw { a: BigRational::from(BigInt::from(3)), b: BigRational::from(BigInt::from(-2)) };
        assert_eq!(z.mul(&z.inv()), Qw::from_int(1));
    }

    #[test]
    fn structure_sheaf_counts() {
        let dims = lefschetz_dimensions(63, 0, 21).unwrap();
        assert_eq!(dims, [14, 14, -7]);
    }

    #[test]
    fn twisted_counts() {
        let dims = lefschetz_dimensions(63, 1, 210).unwrap();
        assert_eq!(dims[1], 77);
    }

    #[test]
    fn no_fixed_points_splits_evenly() {
        let dims = lefschetz_dimensions(0, 0, 21).unwrap();
        assert_eq!(dims, [7, 7, 7]);
    }
}
