//! Approximate kernels of monomial-evaluation matrices with a certified
//! rank gap, the relation-guessing workhorse.

use ballq_algebra::{monomials_of_degree, Monomial, SparsePolynomial, VariableFrame};

use crate::ball::BallComplex;
use crate::complex::CplxF;
use crate::error::NumericError;
use crate::linalg::{pivoted_qr, CMatrix};
use crate::mag::Mag;
use crate::newton::VarietyPoint;

/// A kernel vector over the monomial basis with residual statistics, and
/// the recognized exact polynomial when recognition succeeded.
pub struct RelationCandidate {
    pub coefficients: Vec<CplxF>,
    pub residual: Mag,
    pub exact: Option<SparsePolynomial>,
}

pub struct KernelReport {
    pub monomials: Vec<Monomial>,
    pub rank: usize,
    pub kernel_dimension: usize,
    /// ratio of the boundary diagonal magnitudes, as a power-of-two
    /// exponent (larger is a cleaner gap)
    pub gap_exp: i64,
    /// threshold below which diagonals count as numerically zero
    pub threshold: Mag,
    pub candidates: Vec<RelationCandidate>,
}

pub struct KernelOptions {
    pub precision: u32,
    /// required ratio between consecutive diagonals at the rank boundary
    pub min_gap_ratio_exp: i64,
    /// scale factor applied to the certified entry/residual bound
    pub threshold_scale_exp: i64,
}

impl Default for KernelOptions {
    fn default() -> Self {
        // gap ratio 10^8 ~ 2^27; threshold headroom 2^20
        Self { precision: 256, min_gap_ratio_exp: 27, threshold_scale_exp: 20 }
    }
}

/// Build the evaluation matrix (rows = points, columns = degree-d
/// monomials at chart-normalized coordinates) and extract the kernel with
/// a certified rank gap.
///
/// The threshold combines the certified evaluation error of the entries
/// with the points' own certified residual bounds: a singular value can
/// only be declared zero when it is below
///   2^threshold_scale_exp * sqrt(rows * cols) * max(entry error, point residual).
pub fn numeric_kernel(
    frame: &std::sync::Arc<VariableFrame>,
    degree: u64,
    points: &[VarietyPoint],
    opts: &KernelOptions,
) -> Result<KernelReport, NumericError> {
    let prec = opts.precision;
    let monomials = monomials_of_degree(frame, degree);
    let cols = monomials.len();
    let rows = points.len();
    if rows < cols {
        return Err(NumericError::NotEnoughPoints { have: rows, want: cols });
    }

    // chart normalization: scale every point so its largest coordinate is 1
    let normalized: Vec<Vec<BallComplex>> = points
        .iter()
        .map(|p| {
            let mut best = 0usize;
            for (k, b) in p.coords.iter().enumerate() {
                if b.mid.abs(prec).cmp_abs(&p.coords[best].mid.abs(prec))
                    == std::cmp::Ordering::Greater
                {
                    best = k;
                }
            }
            let scale = p.coords[best].mid.clone();
            // radius propagation through the division: scale the old
            // radius by a 2x-headroom bound of |1/scale| and add one ulp
            // per component for the rounding of the midpoint itself
            let recip_mag = CplxF::one().div(&scale, prec).mag().mul(&Mag::from_f64(2.0));
            p.coords
                .iter()
                .map(|b| {
                    let mid = b.mid.div(&scale, prec);
                    let ulps = mid.mag().scale_pow2(-(prec as i64) + 2);
                    BallComplex { rad: b.rad.mul(&recip_mag).add(&ulps), mid }
                })
                .collect()
        })
        .collect();

    // entries with certified error bounds
    let mut entry_err = Mag::zero();
    let mut matrix = CMatrix::zero(rows, cols);
    for (r, pt) in normalized.iter().enumerate() {
        for (c, m) in monomials.iter().enumerate() {
            let mut ball = BallComplex::exact(CplxF::one());
            for (v, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    ball = ball.mul(&pt[v], prec);
                }
            }
            entry_err = entry_err.max(&ball.rad);
            *matrix.at_mut(r, c) = ball.mid;
        }
    }
    let point_residual = points
        .iter()
        .fold(Mag::zero(), |acc, p| acc.max(&p.residual));
    let size_factor = Mag::from_f64(((rows * cols) as f64).sqrt());
    let threshold = entry_err
        .max(&point_residual)
        .mul(&size_factor)
        .scale_pow2(opts.threshold_scale_exp);

    let qr = pivoted_qr(&matrix, prec);
    // find the rank boundary: first diagonal below threshold with a large
    // ratio against its predecessor
    let mut rank = None;
    for k in 0..qr.diag.len() {
        let below = qr.diag[k].is_zero() || !qr.diag[k].mag().ge(&threshold);
        if !below {
            continue;
        }
        if k == 0 {
            rank = Some(0);
            break;
        }
        let gap_ok = qr.diag[k].is_zero()
            || qr.diag[k - 1].mag_exp() - qr.diag[k].mag_exp() >= opts.min_gap_ratio_exp;
        if gap_ok {
            rank = Some(k);
            break;
        }
        return Err(NumericError::GapTooSmall {
            at: k,
            ratio_exp: qr.diag[k - 1].mag_exp() - qr.diag[k].mag_exp(),
        });
    }
    let rank = rank.unwrap_or(qr.diag.len());
    let gap_exp = if rank == 0 || rank >= qr.diag.len() {
        i64::MAX / 2
    } else if qr.diag[rank].is_zero() {
        i64::MAX / 2
    } else {
        qr.diag[rank - 1].mag_exp() - qr.diag[rank].mag_exp()
    };

    let kernel = qr.kernel_basis(rank, prec);
    let candidates = kernel
        .into_iter()
        .map(|v| {
            // residual statistic: max |A v| over the sample rows
            let mut worst = Mag::zero();
            for r in 0..rows {
                let mut acc = CplxF::zero();
                for c in 0..cols {
                    acc = acc.add(&matrix.at(r, c).mul(&v[c], prec), prec);
                }
                worst = worst.max(&acc.mag());
            }
            RelationCandidate { coefficients: v, residual: worst, exact: None }
        })
        .collect();

    Ok(KernelReport {
        monomials,
        rank,
        kernel_dimension: cols - rank,
        gap_exp,
        threshold,
        candidates,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::newton::Provenance;
    use ballq_algebra::GaussianRational;

    fn exact_point(coords: Vec<(i64, i64, i64)>, prec: u32) -> VarietyPoint {
        VarietyPoint {
            coords: coords
                .into_iter()
                .map(|(a, b, d)| {
                    BallComplex::from_gaussian_rational(
                        &GaussianRational::from_parts(a, b, d),
                        prec,
                    )
                })
                .collect(),
            residual: Mag::zero(),
            provenance: Provenance::LineExact,
        }
    }

    #[test]
    fn conic_through_sampled_points() {
        // points (1, t, t^2) on the conic x z = y^2 in P^2
        let frame = VariableFrame::standard(&["x", "y", "z"]);
        let prec = 192;
        let points: Vec<VarietyPoint> = (1..=9)
            .map(|k| {
                let t = GaussianRational::from_parts(k, 1, 3);
                let t2 = &t * &t;
                VarietyPoint {
                    coords: vec![
                        BallComplex::from_gaussian_rational(&GaussianRational::one(), prec),
                        BallComplex::from_gaussian_rational(&t, prec),
                        BallComplex::from_gaussian_rational(&t2, prec),
                    ],
                    residual: Mag::zero(),
                    provenance: Provenance::LineExact,
                }
            })
            .collect();
        let report = numeric_kernel(&frame, 2, &points, &KernelOptions {
            precision: prec,
            ..Default::default()
        })
        .unwrap();
        assert_eq!(report.kernel_dimension, 1);
        assert!(report.gap_exp > 100);
    }

    #[test]
    fn random_points_have_no_relations() {
        let frame = VariableFrame::standard(&["x", "y", "z"]);
        let prec = 192;
        let points: Vec<VarietyPoint> = (1..=12)
            .map(|k| {
                exact_point(
                    vec![
                        (k, 3 * k % 7 + 1, 2),
                        (k * k % 11 + 1, k % 5, 3),
                        (2 * k % 9 + 1, k * 3 % 8, 1),
                    ],
                    prec,
                )
            })
            .collect();
        let report = numeric_kernel(&frame, 2, &points, &KernelOptions {
            precision: prec,
            ..Default::default()
        })
        .unwrap();
        assert_eq!(report.kernel_dimension, 0);
    }

    #[test]
    fn not_enough_points_is_an_error() {
        let frame = VariableFrame::standard(&["x", "y"]);
        assert!(matches!(
            numeric_kernel(&frame, 3, &[], &KernelOptions::default()),
            Err(NumericError::NotEnoughPoints { .. })
        ));
    }
}
