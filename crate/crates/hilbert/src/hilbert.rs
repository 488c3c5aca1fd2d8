//! Per-degree Hilbert functions of graded ideals via modular Macaulay
//! ranks, and quadratic Hilbert-polynomial fits with the surface
//! invariants they encode.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use ballq_algebra::{
    macaulay_rank, monomials_of_degree, FpPolynomial, PrimeField, SparsePolynomial, VariableFrame,
};

use crate::error::HilbertError;

/// A homogeneous ideal in a positively graded polynomial ring.
pub struct GradedIdeal {
    pub frame: Arc<VariableFrame>,
    pub generators: Vec<SparsePolynomial>,
}

impl GradedIdeal {
    pub fn new(
        frame: Arc<VariableFrame>,
        generators: Vec<SparsePolynomial>,
    ) -> Result<Self, HilbertError> {
        for g in &generators {
            if !g.is_zero() && g.homogeneous_degree().is_none() {
                return Err(HilbertError::NonHomogeneous);
            }
        }
        Ok(Self { frame, generators })
    }

    pub fn reduce_mod(&self, field: &PrimeField) -> Result<Vec<FpPolynomial>, HilbertError> {
        self.generators
            .iter()
            .map(|g| g.reduce_mod(field).map_err(HilbertError::from))
            .collect()
    }
}

/// Degree-wise data: ambient monomial count, Macaulay rank, quotient
/// dimension. The modular rank is at most the characteristic-zero rank,
/// so the modular quotient dimension is an upper bound for the exact one;
/// equality with an expected formula certifies it by semicontinuity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertRecord {
    pub prime: u64,
    pub entries: BTreeMap<u64, HilbertEntry>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HilbertEntry {
    pub ambient: u64,
    pub rank: u64,
    pub quotient: u64,
}

/// Compute the Hilbert function of the quotient by the ideal at the given
/// degrees, mod p. Degrees run in parallel.
pub fn hilbert_function(
    ideal: &GradedIdeal,
    degrees: impl IntoIterator<Item = u64>,
    field: &PrimeField,
) -> Result<HilbertRecord, HilbertError> {
    let gens = ideal.reduce_mod(field)?;
    let degrees: Vec<u64> = degrees.into_iter().collect();
    let computed: Result<Vec<(u64, HilbertEntry)>, HilbertError> = degrees
        .par_iter()
        .map(|&d| {
            let ambient = monomials_of_degree(&ideal.frame, d).len() as u64;
            let rank = if gens.is_empty() {
                0
            } else {
                let (_rows, _cols, rank) = macaulay_rank(&gens, d, field)?;
                rank as u64
            };
            Ok((d, HilbertEntry { ambient, rank, quotient: ambient - rank }))
        })
        .collect();
    Ok(HilbertRecord { prime: field.modulus(), entries: computed?.into_iter().collect() })
}

/// A quadratic a k^2 + b k + c fitted through consecutive record degrees,
/// with the surface invariants read off through Riemann-Roch for
/// chi(O(kD)) on a surface: D^2 = 2a, K.D = -2b, chi(O) = c.
#[derive(Debug, Clone, PartialEq)]
pub struct HilbertFit {
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
    pub window: (u64, u64),
    pub d_squared: BigRational,
    pub k_dot_d: BigRational,
    pub chi: BigRational,
}

impl HilbertFit {
    pub fn value_at(&self, k: u64) -> BigRational {
        let k = BigRational::from(BigInt::from(k));
        &(&(&self.a * &k) * &k) + &(&self.b * &k) + self.c.clone()
    }

    pub fn integer_invariants(&self) -> Option<(i64, i64, i64)> {
        let to_int = |r: &BigRational| -> Option<i64> {
            if r.is_integer() {
                r.to_integer().to_i64()
            } else {
                None
            }
        };
        Some((
            to_int(&self.d_squared)?,
            to_int(&self.k_dot_d)?,
            to_int(&self.chi)?,
        ))
    }
}

/// Fit a single quadratic through every record degree >= `from_degree`.
/// Requires at least three consecutive degrees; fails with NotStabilized
/// when the record does not agree with one quadratic on the window.
pub fn fit_hilbert_polynomial(
    record: &HilbertRecord,
    from_degree: u64,
) -> Result<HilbertFit, HilbertError> {
    let window: Vec<(u64, u64)> = record
        .entries
        .range(from_degree..)
        .map(|(&d, e)| (d, e.quotient))
        .collect();
    if window.len() < 3 {
        return Err(HilbertError::NotStabilized(
            "need at least 3 degrees in the window".into(),
        ));
    }
    for pair in window.windows(2) {
        if pair[1].0 != pair[0].0 + 1 {
            return Err(HilbertError::NotStabilized(
                "window degrees are not consecutive".into(),
            ));
        }
    }
    let r = |v: u64| BigRational::from(BigInt::from(v));
    let (k0, h0) = window[0];
    let (_, h1) = window[1];
    let (_, h2) = window[2];
    // finite differences at k0
    let two_a = &(&r(h2) - &(&r(h1) + &r(h1))) + &r(h0);
    let a = &two_a / &BigRational::from(BigInt::from(2));
    let d1 = &r(h1) - &r(h0); // a(2k0+1) + b
    let k0r = r(k0);
    let b = &d1 - &(&a * &(&(&k0r + &k0r) + &BigRational::from(BigInt::from(1))));
    let c = &(&r(h0) - &(&(&a * &k0r) * &k0r)) - &(&b * &k0r);
    let fit = HilbertFit {
        d_squared: &a + &a,
        k_dot_d: -(&b + &b),
        chi: c.clone(),
        a,
        b,
        c,
        window: (k0, window.last().unwrap().0),
    };
    for &(k, h) in &window {
        if fit.value_at(k) != r(h) {
            return Err(HilbertError::NotStabilized(format!(
                "degree {k} value {h} off the fitted quadratic"
            )));
        }
    }
    Ok(fit)
}

/// Largest suffix window on which the record agrees with a single
/// quadratic, fitted from the high end. At least four degrees are
/// required (three pin a quadratic; the rest confirm it).
pub fn auto_fit(record: &HilbertRecord) -> Result<HilbertFit, HilbertError> {
    let degrees: Vec<u64> = record.entries.keys().copied().collect();
    if degrees.len() < 4 {
        return Err(HilbertError::NotStabilized("record too short".into()));
    }
    let mut best: Option<HilbertFit> = None;
    for start in (0..=degrees.len() - 4).rev() {
        match fit_hilbert_polynomial(record, degrees[start]) {
            Ok(fit) => best = Some(fit),
            Err(_) => break,
        }
    }
    best.ok_or_else(|| {
        HilbertError::NotStabilized("no quadratic window at the high end".into())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use ballq_algebra::parse_polynomial;

    #[test]
    fn linear_forms_reproduce_subspace_hilbert() {
        // r generic linear forms in n variables cut a linear subspace;
        // quotient dimensions match binomial counts in n - r variables.
        let frame = VariableFrame::numbered("x", 5);
        let field = PrimeField::default_field();
        let gens = vec![
            parse_polynomial(&frame, "x1 + 2x2 - x3 + 7x4 + 3x5").unwrap(),
            parse_polynomial(&frame, "x2 + (5+i)x3 - x4 + 11x5").unwrap(),
        ];
        let ideal = GradedIdeal::new(frame, gens).unwrap();
        let record = hilbert_function(&ideal, 1..=5, &field).unwrap();
        for (&d, e) in &record.entries {
            let expect = ballq_algebra::count_standard_monomials(3, d);
            assert_eq!(e.quotient, expect, "degree {d}");
        }
        // the fit of C(d+2,2) = d^2/2 + 3d/2 + 1 exists on any window
        let fit = fit_hilbert_polynomial(&record, 1).unwrap();
        assert_eq!(fit.value_at(9), BigRational::from(BigInt::from(55)));
    }

    #[test]
    fn degree_one_has_no_relations_from_quadrics() {
        let frame = VariableFrame::numbered("x", 13);
        let field = PrimeField::default_field();
        let gens = vec![parse_polynomial(&frame, "x1^2 - x2 x3").unwrap()];
        let ideal = GradedIdeal::new(frame, gens).unwrap();
        let record = hilbert_function(&ideal, [1, 2], &field).unwrap();
        assert_eq!(record.entries[&1].quotient, 13);
        assert_eq!(record.entries[&2].quotient, 90);
    }

    #[test]
    fn adding_a_generator_never_increases_the_hilbert_function() {
        let frame = VariableFrame::numbered("x", 4);
        let field = PrimeField::default_field();
        let base = vec![parse_polynomial(&frame, "x1 x2 - x3 x4").unwrap()];
        let extra = parse_polynomial(&frame, "x1^2 + (3+2i) x2 x4 - x3^2").unwrap();
        let mut bigger = base.clone();
        bigger.push(extra);
        let r1 = hilbert_function(
            &GradedIdeal::new(frame.clone(), base).unwrap(),
            1..=5,
            &field,
        )
        .unwrap();
        let r2 = hilbert_function(&GradedIdeal::new(frame, bigger).unwrap(), 1..=5, &field)
            .unwrap();
        for d in 1..=5u64 {
            assert!(r2.entries[&d].quotient <= r1.entries[&d].quotient);
        }
    }

    #[test]
    fn fit_reads_surface_invariants() {
        // synthetic record h(k) = 21k^2 - 21k + 14
        let entries: BTreeMap<u64, HilbertEntry> = (2..=6)
            .map(|k| {
                let h = 21 * k * k - 21 * k + 14;
                (k, HilbertEntry { ambient: 0, rank: 0, quotient: h })
            })
            .collect();
        let record = HilbertRecord { prime: 101, entries };
        let fit = fit_hilbert_polynomial(&record, 2).unwrap();
        assert_eq!(fit.integer_invariants(), Some((42, 42, 14)));
        // constant record fits with a = b = 0
        let entries: BTreeMap<u64, HilbertEntry> = (1..=4)
            .map(|k| (k, HilbertEntry { ambient: 0, rank: 0, quotient: 5 }))
            .collect();
        let record = HilbertRecord { prime: 101, entries };
        let fit = fit_hilbert_polynomial(&record, 1).unwrap();
        assert_eq!(fit.integer_invariants(), Some((0, 0, 5)));
    }

    #[test]
    fn not_stabilized_detected() {
        let entries: BTreeMap<u64, HilbertEntry> = [(1u64, 3u64), (2, 7), (3, 12), (4, 99)]
            .into_iter()
            .map(|(k, h)| (k, HilbertEntry { ambient: 0, rank: 0, quotient: h }))
            .collect();
        let record = HilbertRecord { prime: 101, entries };
        assert!(fit_hilbert_polynomial(&record, 1).is_err());
        // the auto fit drops the bad head if the tail works: here the tail
        // is too short, so it fails
        assert!(auto_fit(&record).is_err());
    }
}
