//! High-precision complex linear algebra: Householder QR least squares
//! for the Newton steps and column-pivoted QR for rank and kernel
//! extraction. Plain floating arithmetic; certification happens at the
//! ball-evaluation layer, not here.

use crate::complex::CplxF;
use crate::real::BigFloat;

/// Dense column-major complex matrix.
#[derive(Clone)]
pub struct CMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<CplxF>,
}

impl CMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![CplxF::zero(); rows * cols] }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> CplxF) -> Self {
        let mut m = Self::zero(rows, cols);
        for c in 0..cols {
            for r in 0..rows {
                *m.at_mut(r, c) = f(r, c);
            }
        }
        m
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> &CplxF {
        &self.data[c * self.rows + r]
    }

    #[inline]
    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut CplxF {
        &mut self.data[c * self.rows + r]
    }

    pub fn column(&self, c: usize) -> &[CplxF] {
        &self.data[c * self.rows..(c + 1) * self.rows]
    }
}

/// Solve min ||A x - b|| by Householder QR (A rows >= cols, full rank).
pub fn least_squares(a: &CMatrix, b: &[CplxF], prec: u32) -> Vec<CplxF> {
    assert_eq!(a.rows, b.len());
    assert!(a.rows >= a.cols);
    let mut work = a.clone();
    let mut rhs = b.to_vec();
    for k in 0..a.cols {
        let h = householder_vector(&mut work, k, prec);
        if let Some(v) = h {
            apply_householder(&mut work, &v, k, k + 1, prec);
            apply_householder_vec(&mut rhs, &v, k, prec);
        }
    }
    back_substitute(&work, &rhs, a.cols, prec)
}

/// Build the Householder reflector for column k (rows k..) and apply it to
/// that column, leaving the pivot value at (k, k). Returns the reflector.
fn householder_vector(m: &mut CMatrix, k: usize, prec: u32) -> Option<Vec<CplxF>> {
    let rows = m.rows;
    let mut norm_sq = BigFloat::zero();
    for r in k..rows {
        norm_sq = norm_sq.add(&m.at(r, k).norm_sq(prec), prec);
    }
    if norm_sq.is_zero() {
        return None;
    }
    let norm = norm_sq.sqrt(prec);
    let x0 = m.at(k, k).clone();
    // alpha = -phase(x0) * norm
    let alpha = if x0.is_zero() {
        CplxF { re: norm.neg(), im: BigFloat::zero() }
    } else {
        let a = x0.abs(prec);
        x0.scale(&norm.div(&a, prec), prec).neg()
    };
    // v = x - alpha e_k
    let mut v = vec![CplxF::zero(); rows - k];
    v[0] = x0.sub(&alpha, prec);
    for r in (k + 1)..rows {
        v[r - k] = m.at(r, k).clone();
    }
    let vnorm_sq: BigFloat = v
        .iter()
        .fold(BigFloat::zero(), |acc, z| acc.add(&z.norm_sq(prec), prec));
    if vnorm_sq.is_zero() {
        return None;
    }
    // column k becomes (alpha, 0, ..., 0)
    *m.at_mut(k, k) = alpha;
    for r in (k + 1)..rows {
        *m.at_mut(r, k) = CplxF::zero();
    }
    // store 2/||v||^2 in the last slot by convention
    let scale = BigFloat::from_i64(2).div(&vnorm_sq, prec);
    v.push(CplxF { re: scale, im: BigFloat::zero() });
    Some(v)
}

/// Apply H = I - 2 v v* / ||v||^2 to columns from..cols at row offset k.
fn apply_householder(m: &mut CMatrix, v: &[CplxF], k: usize, from: usize, prec: u32) {
    let rows = m.rows;
    let n = v.len() - 1;
    let scale = &v[n].re;
    for c in from..m.cols {
        // t = v* x
        let mut t = CplxF::zero();
        for r in 0..n {
            t = t.add(&v[r].conj().mul(m.at(k + r, c), prec), prec);
        }
        t = t.scale(scale, prec);
        for r in 0..n {
            let delta = v[r].mul(&t, prec);
            let cur = m.at(k + r, c).clone();
            *m.at_mut(k + r, c) = cur.sub(&delta, prec);
        }
        let _ = rows;
    }
}

fn apply_householder_vec(x: &mut [CplxF], v: &[CplxF], k: usize, prec: u32) {
    let n = v.len() - 1;
    let scale = &v[n].re;
    let mut t = CplxF::zero();
    for r in 0..n {
        t = t.add(&v[r].conj().mul(&x[k + r], prec), prec);
    }
    t = t.scale(scale, prec);
    for r in 0..n {
        let delta = v[r].mul(&t, prec);
        x[k + r] = x[k + r].sub(&delta, prec);
    }
}

fn back_substitute(r: &CMatrix, rhs: &[CplxF], n: usize, prec: u32) -> Vec<CplxF> {
    let mut x = vec![CplxF::zero(); n];
    for k in (0..n).rev() {
        let mut acc = rhs[k].clone();
        for j in (k + 1)..n {
            acc = acc.sub(&r.at(k, j).mul(&x[j], prec), prec);
        }
        x[k] = acc.div(r.at(k, k), prec);
    }
    x
}

/// Column-pivoted QR: returns the pivot permutation, the diagonal
/// magnitudes of R (descending), and the matrix in factored form for
/// kernel extraction.
pub struct PivotedQr {
    pub r: CMatrix,
    pub pivots: Vec<usize>,
    pub diag: Vec<BigFloat>,
}

pub fn pivoted_qr(a: &CMatrix, prec: u32) -> PivotedQr {
    let mut work = a.clone();
    let n = a.cols;
    let steps = a.cols.min(a.rows);
    let mut pivots: Vec<usize> = (0..n).collect();
    let mut diag = Vec::with_capacity(steps);
    for k in 0..steps {
        // pivot: column with the largest remaining norm
        let mut best = k;
        let mut best_norm = BigFloat::zero();
        for c in k..n {
            let mut s = BigFloat::zero();
            for r in k..a.rows {
                s = s.add(&work.at(r, c).norm_sq(prec), prec);
            }
            if s.cmp_abs(&best_norm) == std::cmp::Ordering::Greater {
                best = c;
                best_norm = s;
            }
        }
        if best != k {
            for r in 0..a.rows {
                let tmp = work.at(r, k).clone();
                *work.at_mut(r, k) = work.at(r, best).clone();
                *work.at_mut(r, best) = tmp;
            }
            pivots.swap(k, best);
        }
        if best_norm.is_zero() {
            diag.push(BigFloat::zero());
            continue;
        }
        if let Some(v) = householder_vector(&mut work, k, prec) {
            apply_householder(&mut work, &v, k, k + 1, prec);
        }
        diag.push(work.at(k, k).abs(prec));
    }
    PivotedQr { r: work, pivots, diag }
}

impl PivotedQr {
    /// Kernel basis assuming numerical rank `rank`: solves
    /// R11 X = -R12 and embeds through the pivot permutation. Vectors are
    /// normalized so the largest coordinate is one.
    pub fn kernel_basis(&self, rank: usize, prec: u32) -> Vec<Vec<CplxF>> {
        let n = self.r.cols;
        let mut out = Vec::with_capacity(n - rank);
        for free in rank..n {
            let rhs: Vec<CplxF> = (0..rank).map(|r| self.r.at(r, free).neg()).collect();
            let x = back_substitute(&self.r, &rhs, rank, prec);
            let mut v = vec![CplxF::zero(); n];
            for (k, val) in x.into_iter().enumerate() {
                v[self.pivots[k]] = val;
            }
            v[self.pivots[free]] = CplxF::one();
            // normalize by the largest coordinate
            let mut best = 0usize;
            for (k, z) in v.iter().enumerate() {
                if z.abs(prec).cmp_abs(&v[best].abs(prec)) == std::cmp::Ordering::Greater {
                    best = k;
                }
            }
            let scale = v[best].clone();
            let v = v.iter().map(|z| z.div(&scale, prec)).collect();
            out.push(v);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u32 = 192;

    fn c(re: f64, im: f64) -> CplxF {
        CplxF::from_f64(re, im, P)
    }

    #[test]
    fn least_squares_recovers_exact_solution() {
        // A x = b with square invertible A
        let a = CMatrix::from_fn(3, 3, |r, col| {
            c((r * 3 + col) as f64 + 1.0, if r == col { 0.5 } else { -0.25 })
        });
        let x_true = vec![c(1.0, -2.0), c(0.5, 0.0), c(-3.0, 1.0)];
        let mut b = vec![CplxF::zero(); 3];
        for r in 0..3 {
            for k in 0..3 {
                b[r] = b[r].add(&a.at(r, k).mul(&x_true[k], P), P);
            }
        }
        let x = least_squares(&a, &b, P);
        for k in 0..3 {
            assert!(x[k].sub(&x_true[k], P).mag().exp_upper() < -(P as i64) + 40);
        }
    }

    #[test]
    fn overdetermined_consistent_system() {
        // 5 x 2 with consistent rhs
        let a = CMatrix::from_fn(5, 2, |r, col| c((r + col) as f64 + 1.0, r as f64 - col as f64));
        let x_true = vec![c(2.0, 1.0), c(-1.0, 0.5)];
        let mut b = vec![CplxF::zero(); 5];
        for r in 0..5 {
            for k in 0..2 {
                b[r] = b[r].add(&a.at(r, k).mul(&x_true[k], P), P);
            }
        }
        let x = least_squares(&a, &b, P);
        for k in 0..2 {
            assert!(x[k].sub(&x_true[k], P).mag().exp_upper() < -(P as i64) + 40);
        }
    }

    #[test]
    fn pivoted_qr_detects_rank_and_kernel() {
        // 4 x 3 with column 3 = column 1 + column 2
        let base = CMatrix::from_fn(4, 2, |r, col| c((r * 2 + col) as f64 + 1.0, (r as f64) * 0.5));
        let a = CMatrix::from_fn(4, 3, |r, col| {
            if col < 2 {
                base.at(r, col).clone()
            } else {
                base.at(r, 0).add(base.at(r, 1), P)
            }
        });
        let qr = pivoted_qr(&a, P);
        assert!(qr.diag[2].is_zero() || qr.diag[2].mag_exp() < qr.diag[1].mag_exp() - 100);
        let kernel = qr.kernel_basis(2, P);
        assert_eq!(kernel.len(), 1);
        // kernel vector satisfies A v = 0
        for r in 0..4 {
            let mut acc = CplxF::zero();
            for k in 0..3 {
                acc = acc.add(&a.at(r, k).mul(&kernel[0][k], P), P);
            }
            assert!(acc.is_zero() || acc.mag().exp_upper() < -(P as i64) + 60);
        }
    }
}
