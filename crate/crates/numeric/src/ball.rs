//! Certified complex ball arithmetic: a high-precision midpoint plus an
//! upward-rounded radius. Ring operations are inclusion-monotone: if the
//! true inputs lie in the argument balls, the true result lies in the
//! result ball.

use ballq_algebra::{GaussianRational, SparsePolynomial};

use crate::complex::CplxF;
use crate::mag::Mag;
use crate::real::BigFloat;

#[derive(Clone, Debug)]
pub struct BallComplex {
    pub mid: CplxF,
    pub rad: Mag,
}

impl BallComplex {
    pub fn zero() -> Self {
        Self { mid: CplxF::zero(), rad: Mag::zero() }
    }

    pub fn exact(mid: CplxF) -> Self {
        Self { mid, rad: Mag::zero() }
    }

    /// Exact rational input rounded at prec with the rounding absorbed
    /// into the radius.
    pub fn from_gaussian_rational(q: &GaussianRational, prec: u32) -> Self {
        let mid = CplxF::from_gaussian_rational(q, prec);
        // from_ratio truncates at prec + a few guard bits; bound both parts
        let ulp = |f: &BigFloat| {
            if f.is_zero() {
                // the ratio rounds to zero only if it is zero exactly
                Mag::zero()
            } else {
                Mag::pow2(f.mag_exp() - prec as i64 + 1)
            }
        };
        let rad = ulp(&mid.re).add(&ulp(&mid.im));
        Self { mid, rad }
    }

    pub fn add(&self, rhs: &Self, prec: u32) -> Self {
        let (mid, err) = self.mid.add_full(&rhs.mid, prec);
        Self { mid, rad: self.rad.add(&rhs.rad).add(&err) }
    }

    pub fn sub(&self, rhs: &Self, prec: u32) -> Self {
        self.add(&rhs.neg(), prec)
    }

    pub fn neg(&self) -> Self {
        Self { mid: self.mid.neg(), rad: self.rad }
    }

    pub fn mul(&self, rhs: &Self, prec: u32) -> Self {
        let (mid, err) = self.mid.mul_full(&rhs.mid, prec);
        let cross = self
            .mid
            .mag()
            .mul(&rhs.rad)
            .add(&rhs.mid.mag().mul(&self.rad))
            .add(&self.rad.mul(&rhs.rad));
        Self { mid, rad: cross.add(&err) }
    }

    /// Upper bound for |z| over the ball.
    pub fn abs_upper(&self) -> Mag {
        self.mid.mag().add(&self.rad)
    }

    /// True if the ball certainly contains zero (an upper bound of |mid|
    /// does not exceed the radius).
    pub fn contains_zero(&self) -> bool {
        self.rad.ge(&self.mid.mag())
    }
}

/// Certified evaluation of a polynomial over Q(i) at ball coordinates.
pub fn evaluate_ball(
    poly: &SparsePolynomial,
    point: &[BallComplex],
    prec: u32,
) -> BallComplex {
    assert_eq!(point.len(), poly.frame().len());
    let mut acc = BallComplex::zero();
    for (m, c) in poly.terms() {
        let mut term = BallComplex::from_gaussian_rational(c, prec);
        for (v, &e) in m.exponents().iter().enumerate() {
            for _ in 0..e {
                term = term.mul(&point[v], prec);
            }
        }
        acc = acc.add(&term, prec);
    }
    acc
}

/// Certified residual: the largest |equation| upper bound over the set.
pub fn max_residual(
    equations: &[SparsePolynomial],
    point: &[BallComplex],
    prec: u32,
) -> Mag {
    let mut worst = Mag::zero();
    for eq in equations {
        let v = evaluate_ball(eq, point, prec);
        worst = worst.max(&v.abs_upper());
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use ballq_algebra::{parse_polynomial, VariableFrame};

    const P: u32 = 128;

    #[test]
    fn exact_rational_evaluation_is_contained() {
        // inclusion: evaluate exactly over Q(i) and with balls; the exact
        // value must lie inside the result ball
        let frame = VariableFrame::numbered("x", 3);
        let p = parse_polynomial(&frame, "(2+3i) x1^2 x3 - x2^3 + x1 x2 x3 / 7").unwrap();
        let point_q: Vec<GaussianRational> = vec![
            GaussianRational::from_parts(3, -2, 5),
            GaussianRational::from_parts(-1, 4, 3),
            GaussianRational::from_parts(7, 1, 2),
        ];
        let exact = p.evaluate(&point_q).unwrap();
        let point_b: Vec<BallComplex> = point_q
            .iter()
            .map(|q| BallComplex::from_gaussian_rational(q, P))
            .collect();
        let ball = evaluate_ball(&p, &point_b, P);
        // distance from ball midpoint to the exact value must be <= rad
        let exact_f = CplxF::from_gaussian_rational(&exact, 2 * P);
        let dist = ball.mid.sub(&exact_f, 2 * P).mag();
        assert!(ball.rad.ge(&dist) || dist.is_zero());
    }

    #[test]
    fn mul_radius_grows() {
        let a = BallComplex {
            mid: CplxF::from_f64(1.0, 0.0, P),
            rad: Mag::from_f64(0.5),
        };
        let b = a.mul(&a, P);
        // (1 +- 0.5)^2: radius must be at least 1.25
        assert!(b.rad.to_f64() >= 1.25);
    }
}
