//! Recognition of Gaussian rationals from high-precision balls via
//! lattice reduction on the relation lattice of (1, x).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use ballq_algebra::{GaussianInt, GaussianRational};

use crate::ball::BallComplex;
use crate::error::NumericError;
use crate::mag::Mag;
use crate::real::BigFloat;

/// Exact LLL reduction (delta = 3/4) of an integer lattice basis given as
/// rows. Dimension stays tiny here, so rational Gram-Schmidt with a full
/// recompute after each swap is fine.
pub fn lll_reduce(basis: &mut Vec<Vec<BigInt>>) {
    let n = basis.len();
    if n < 2 {
        return;
    }
    let dot = |a: &[BigInt], b: &[BigInt]| -> BigInt {
        a.iter().zip(b).map(|(x, y)| x * y).sum()
    };
    let delta = BigRational::new(BigInt::from(3), BigInt::from(4));

    fn gram_schmidt(basis: &[Vec<BigInt>]) -> (Vec<Vec<BigRational>>, Vec<BigRational>) {
        let n = basis.len();
        let mut mu = vec![vec![BigRational::zero(); n]; n];
        let mut b_star_sq = vec![BigRational::zero(); n];
        let mut star: Vec<Vec<BigRational>> = Vec::with_capacity(n);
        for i in 0..n {
            let mut s: Vec<BigRational> = basis[i]
                .iter()
                .map(|v| BigRational::from(v.clone()))
                .collect();
            for j in 0..i {
                if b_star_sq[j].is_zero() {
                    continue;
                }
                let num: BigRational = basis[i]
                    .iter()
                    .zip(&star[j])
                    .map(|(x, y)| BigRational::from(x.clone()) * y)
                    .sum();
                mu[i][j] = num / &b_star_sq[j];
                for (sk, stk) in s.iter_mut().zip(&star[j]) {
                    *sk -= &mu[i][j] * stk;
                }
            }
            b_star_sq[i] = s.iter().map(|v| v * v).sum();
            star.push(s);
        }
        (mu, b_star_sq)
    }

    let (mut mu, mut b_star_sq) = gram_schmidt(basis);
    let mut k = 1usize;
    while k < n {
        // size-reduce row k with live mu updates
        for j in (0..k).rev() {
            let r = mu[k][j].round().to_integer();
            if r.is_zero() {
                continue;
            }
            let (head, tail) = basis.split_at_mut(k);
            for (x, y) in tail[0].iter_mut().zip(&head[j]) {
                *x -= &r * y;
            }
            let rq = BigRational::from(r);
            for l in 0..j {
                let adj = &rq * &mu[j][l];
                mu[k][l] -= adj;
            }
            mu[k][j] -= rq;
        }
        // Lovasz condition at (k-1, k)
        let lhs = &b_star_sq[k] + &(&mu[k][k - 1] * &mu[k][k - 1]) * &b_star_sq[k - 1];
        if lhs >= &delta * &b_star_sq[k - 1] {
            k += 1;
        } else {
            basis.swap(k - 1, k);
            let gs = gram_schmidt(basis);
            mu = gs.0;
            b_star_sq = gs.1;
            k = k.max(2) - 1;
        }
    }
    // deterministic output: rows by squared length
    basis.sort_by_key(|row| dot(row, row));
}

/// Recognize a Gaussian rational p/q from a ball, with norm(p), norm(q)
/// bounded by `height_bound`. The containment p/q in the ball is verified
/// exactly before returning.
pub fn recognize_gaussian_rational(
    x: &BallComplex,
    height_bound: f64,
) -> Result<GaussianRational, NumericError> {
    // precondition: the radius must resolve gaps of order 1/height^2
    let needed = Mag::from_f64(1.0 / (height_bound * height_bound)).scale_pow2(-20);
    if !x.rad.is_zero() && x.rad.ge(&needed) {
        return Err(NumericError::InsufficientPrecision);
    }
    // dyadic integer approximation X + iY ~ S x with S = 2^s
    let s: i64 = {
        // enough bits to separate candidates: |q|^2 |q'|^2 spacing
        let hb = height_bound.log2().ceil() as i64;
        (4 * hb + 64).max(96)
    };
    let scale_int = |f: &BigFloat| -> BigInt {
        let (mant, exp) = f.to_dyadic();
        let shift = exp + s;
        if shift >= 0 {
            mant << shift as usize
        } else {
            mant >> (-shift) as usize
        }
    };
    let xi = scale_int(&x.mid.re);
    let yi = scale_int(&x.mid.im);
    let s_big = BigInt::one() << s as usize;
    let mut basis = vec![
        vec![xi.clone(), yi.clone(), BigInt::one(), BigInt::zero()],
        vec![-yi, xi, BigInt::zero(), BigInt::one()],
        vec![-s_big.clone(), BigInt::zero(), BigInt::zero(), BigInt::zero()],
        vec![BigInt::zero(), -s_big, BigInt::zero(), BigInt::zero()],
    ];
    lll_reduce(&mut basis);

    let height = BigInt::from(height_bound as u128);
    for row in &basis {
        let q = GaussianInt::new(row[2].clone(), row[3].clone());
        if q.is_zero() || q.norm() > height {
            continue;
        }
        // p = gaussian rounding of q * mid
        let qx_re = mul_dyadic(&q, &x.mid, true);
        let qx_im = mul_dyadic(&q, &x.mid, false);
        let p = GaussianInt::new(round_dyadic(&qx_re), round_dyadic(&qx_im));
        if p.norm() > height {
            continue;
        }
        let candidate = GaussianRational::new(p, q);
        if ball_contains_exact(x, &candidate) {
            return Ok(candidate);
        }
    }
    Err(NumericError::NoCandidate)
}

/// Re(q * mid) or Im(q * mid) as an exact dyadic (numerator, exponent).
fn mul_dyadic(q: &GaussianInt, mid: &crate::complex::CplxF, real_part: bool) -> (BigInt, i64) {
    let (mr, er) = mid.re.to_dyadic();
    let (mi, ei) = mid.im.to_dyadic();
    let e = er.min(ei);
    let a = &mr << (er - e) as usize;
    let b = &mi << (ei - e) as usize;
    // q = c + d i, mid = a + b i (times 2^e)
    let num = if real_part {
        &q.re * &a - &q.im * &b
    } else {
        &q.re * &b + &q.im * &a
    };
    (num, e)
}

fn round_dyadic((num, e): &(BigInt, i64)) -> BigInt {
    if *e >= 0 {
        num << *e as usize
    } else {
        // round half up: add half an ulp, then floor-shift (valid for
        // negative values too, since >> floors)
        let shift = (-e) as usize;
        let half = BigInt::one() << (shift - 1);
        (num + half) >> shift
    }
}

/// Exact containment: |q * mid - p|^2 <= (|q| * rad)^2 over the rationals.
fn ball_contains_exact(x: &BallComplex, value: &GaussianRational) -> bool {
    let q_den = BigInt::from(value.denominator().clone());
    let q = GaussianInt::new(q_den.clone(), BigInt::zero());
    let p = value.numerator().clone();
    // d = q*mid - p as exact dyadic pair
    let (dr, er) = mul_dyadic(&q, &x.mid, true);
    let (di, ei) = mul_dyadic(&q, &x.mid, false);
    let e = er.min(ei).min(0);
    let dr = (dr << (er - e) as usize) - (&p.re << (-e) as usize);
    let di = (di << (ei - e) as usize) - (&p.im << (-e) as usize);
    // |d|^2 * 2^(2e) <= |q|^2 * rad^2
    let dist_sq = BigRational::from(&dr * &dr + &di * &di)
        * pow2_rational(2 * e);
    let rad = mag_to_rational(&x.rad);
    let bound = BigRational::from(&q_den * &q_den) * &rad * &rad;
    dist_sq <= bound
}

fn pow2_rational(e: i64) -> BigRational {
    if e >= 0 {
        BigRational::from(BigInt::one() << e as usize)
    } else {
        BigRational::new(BigInt::one(), BigInt::one() << (-e) as usize)
    }
}

fn mag_to_rational(m: &Mag) -> BigRational {
    if m.is_zero() {
        return BigRational::zero();
    }
    let (man, exp) = m.to_dyadic_upper();
    BigRational::from(BigInt::from(man)) * pow2_rational(exp)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_simple() {
        let half = GaussianRational::from_parts(1, 0, 2);
        let ball = BallComplex::from_gaussian_rational(&half, 256);
        let r = recognize_gaussian_rational(&ball, 1e6).unwrap();
        assert_eq!(r, half);
    }

    #[test]
    fn round_trip_gaussian() {
        let v = GaussianRational::from_parts(2, 3, 7);
        let ball = BallComplex::from_gaussian_rational(&v, 256);
        let r = recognize_gaussian_rational(&ball, 1e6).unwrap();
        assert_eq!(r, v);
    }

    #[test]
    fn insufficient_precision_flagged() {
        let v = GaussianRational::from_parts(2, 3, 7);
        let mut ball = BallComplex::from_gaussian_rational(&v, 256);
        ball.rad = Mag::from_f64(1e-3);
        assert!(matches!(
            recognize_gaussian_rational(&ball, 1e6),
            Err(NumericError::InsufficientPrecision)
        ));
    }

    #[test]
    fn large_height_round_trip() {
        // numerator and denominator with norms near 1e12
        let v = GaussianRational::from_parts(700_001, 500_003, 999_983);
        let ball = BallComplex::from_gaussian_rational(&v, 256);
        let r = recognize_gaussian_rational(&ball, 1e12).unwrap();
        assert_eq!(r, v);
    }
}
