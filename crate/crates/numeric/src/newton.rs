//! Gauss-Newton least-squares iteration on overdetermined polynomial
//! systems, with certified residuals via ball evaluation at the end.

use ballq_algebra::{GaussianRational, Monomial, SparsePolynomial};

use crate::ball::{max_residual, BallComplex};
use crate::complex::CplxF;
use crate::error::NumericError;
use crate::linalg::{least_squares, CMatrix};
use crate::mag::Mag;

/// Where a variety point came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    LineExact,
    Newton,
    Lifted,
}

/// A point with certified residual bound over a defining equation set.
#[derive(Clone, Debug)]
pub struct VarietyPoint {
    pub coords: Vec<BallComplex>,
    pub residual: Mag,
    pub provenance: Provenance,
}

impl VarietyPoint {
    pub fn midpoints(&self) -> Vec<CplxF> {
        self.coords.iter().map(|b| b.mid.clone()).collect()
    }
}

/// Partial derivative over Q(i).
pub fn derivative(p: &SparsePolynomial, var: usize) -> SparsePolynomial {
    let terms: Vec<(Monomial, GaussianRational)> = p
        .terms()
        .iter()
        .filter_map(|(m, c)| {
            let e = m.exponents()[var];
            if e == 0 {
                return None;
            }
            let mut exps = m.exponents().to_vec();
            exps[var] -= 1;
            Some((
                Monomial::new(exps),
                c * &GaussianRational::from_int(e as i64),
            ))
        })
        .collect();
    SparsePolynomial::from_terms(p.frame().clone(), terms).expect("same frame")
}

/// Evaluate a polynomial at float coordinates (midpoint arithmetic).
pub fn evaluate_float(p: &SparsePolynomial, x: &[CplxF], prec: u32) -> CplxF {
    let mut acc = CplxF::zero();
    for (m, c) in p.terms() {
        let mut t = CplxF::from_gaussian_rational(c, prec);
        for (v, &e) in m.exponents().iter().enumerate() {
            for _ in 0..e {
                t = t.mul(&x[v], prec);
            }
        }
        acc = acc.add(&t, prec);
    }
    acc
}

/// A stacked polynomial system with precomputed Jacobian.
pub struct PolySystem {
    pub equations: Vec<SparsePolynomial>,
    jacobian: Vec<Vec<SparsePolynomial>>,
    nvars: usize,
}

impl PolySystem {
    pub fn new(equations: Vec<SparsePolynomial>) -> Self {
        let nvars = equations.first().map_or(0, |p| p.frame().len());
        let jacobian = equations
            .iter()
            .map(|p| (0..nvars).map(|v| derivative(p, v)).collect())
            .collect();
        Self { equations, jacobian, nvars }
    }

    pub fn residual_vector(&self, x: &[CplxF], prec: u32) -> Vec<CplxF> {
        self.equations
            .iter()
            .map(|p| evaluate_float(p, x, prec))
            .collect()
    }

    pub fn jacobian_at(&self, x: &[CplxF], prec: u32) -> CMatrix {
        CMatrix::from_fn(self.equations.len(), self.nvars, |r, c| {
            evaluate_float(&self.jacobian[r][c], x, prec)
        })
    }

    fn max_abs(v: &[CplxF]) -> Mag {
        v.iter().fold(Mag::zero(), |acc, z| acc.max(&z.mag()))
    }
}

pub struct NewtonOptions {
    pub precision: u32,
    /// Convergence threshold for both the step and the residual,
    /// as a power of two: converged when below 2^tol_exp.
    pub tol_exp: i64,
    pub max_iterations: usize,
}

impl Default for NewtonOptions {
    fn default() -> Self {
        Self { precision: 256, tol_exp: -200, max_iterations: 60 }
    }
}

/// Least-squares Newton on the stacked system (equations plus slice).
/// Converges when the step and residual fall below tolerance; the final
/// residual is certified by ball evaluation over the full stack.
pub fn gauss_newton(
    system: &PolySystem,
    slice: &[SparsePolynomial],
    start: &[CplxF],
    opts: &NewtonOptions,
) -> Result<VarietyPoint, NumericError> {
    let prec = opts.precision;
    let tol = Mag::pow2(opts.tol_exp);
    let stacked: Vec<SparsePolynomial> = system
        .equations
        .iter()
        .chain(slice.iter())
        .cloned()
        .collect();
    let full = PolySystem::new(stacked);
    if full.equations.len() < full.nvars {
        return Err(NumericError::Underdetermined);
    }
    let mut x = start.to_vec();
    let mut last_residual = Mag::pow2(i64::MAX / 4);
    for _ in 0..opts.max_iterations {
        let f = full.residual_vector(&x, prec);
        let res = PolySystem::max_abs(&f);
        let j = full.jacobian_at(&x, prec);
        let step = least_squares_checked(&j, &f, prec)?;
        let step_size = PolySystem::max_abs(&step);
        for (xi, si) in x.iter_mut().zip(&step) {
            *xi = xi.sub(si, prec);
        }
        if tol.ge(&step_size) && tol.ge(&res) {
            let coords: Vec<BallComplex> = x.iter().map(|z| BallComplex::exact(z.clone())).collect();
            let residual = max_residual(&full.equations, &coords, prec);
            return Ok(VarietyPoint { coords, residual, provenance: Provenance::Newton });
        }
        // divergence heuristic: residual exploding across iterations
        if res.ge(&last_residual.mul(&Mag::from_f64(1e12))) {
            return Err(NumericError::Diverged);
        }
        last_residual = res;
    }
    Err(NumericError::Diverged)
}

fn least_squares_checked(
    j: &CMatrix,
    f: &[CplxF],
    prec: u32,
) -> Result<Vec<CplxF>, NumericError> {
    // rank sanity: a vanishing diagonal entry in the QR means a rank drop
    let qr = crate::linalg::pivoted_qr(j, prec);
    for d in &qr.diag {
        if d.is_zero() {
            return Err(NumericError::SingularJacobian);
        }
    }
    if let (Some(first), Some(last)) = (qr.diag.first(), qr.diag.last()) {
        if !last.is_zero() && first.mag_exp() - last.mag_exp() > prec as i64 - 16 {
            return Err(NumericError::SingularJacobian);
        }
    }
    Ok(least_squares(j, f, prec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use ballq_algebra::{parse_polynomial, VariableFrame};

    #[test]
    fn converges_on_a_circle_line_intersection() {
        let frame = VariableFrame::numbered("x", 2);
        let sys = PolySystem::new(vec![
            parse_polynomial(&frame, "x1^2 + x2^2 - 2").unwrap(),
        ]);
        let slice = vec![parse_polynomial(&frame, "x1 - x2").unwrap()];
        let opts = NewtonOptions { precision: 192, tol_exp: -150, max_iterations: 80 };
        let start = vec![
            CplxF::from_f64(0.9, 0.05, 192),
            CplxF::from_f64(1.2, -0.02, 192),
        ];
        let pt = gauss_newton(&sys, &slice, &start, &opts).unwrap();
        // solution is (1, 1); residual certified tiny
        assert!(Mag::pow2(-140).ge(&pt.residual));
        let (re, _) = pt.coords[0].mid.to_f64_pair();
        assert!((re - 1.0).abs() < 1e-12);
    }

    #[test]
    fn exact_start_converges_immediately() {
        let frame = VariableFrame::numbered("x", 2);
        let sys = PolySystem::new(vec![parse_polynomial(&frame, "x1 x2 - 1").unwrap()]);
        let slice = vec![parse_polynomial(&frame, "x1 - 1").unwrap()];
        let opts = NewtonOptions { precision: 192, tol_exp: -150, max_iterations: 5 };
        let start = vec![CplxF::one(), CplxF::one()];
        let pt = gauss_newton(&sys, &slice, &start, &opts).unwrap();
        assert!(pt.residual.is_zero() || Mag::pow2(-150).ge(&pt.residual));
    }

    #[test]
    fn underdetermined_rejected() {
        let frame = VariableFrame::numbered("x", 3);
        let sys = PolySystem::new(vec![parse_polynomial(&frame, "x1^2 - x2 x3").unwrap()]);
        let start = vec![CplxF::one(), CplxF::one(), CplxF::one()];
        assert!(matches!(
            gauss_newton(&sys, &[], &start, &NewtonOptions::default()),
            Err(NumericError::Underdetermined)
        ));
    }
}
