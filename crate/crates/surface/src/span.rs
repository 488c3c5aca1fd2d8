//! G-stable spans of seed polynomials and the involution checks.

use std::collections::HashMap;
use std::sync::Arc;

use ballq_algebra::{
    monomials_of_degree, GaussianRational, Monomial, QiRowSpace, SparsePolynomial, VariableFrame,
};
use ballq_grouprep::{GiMatrix, MatrixRepresentation};

use crate::error::SurfaceError;

/// A basis of a span of homogeneous polynomials of one degree, kept in
/// reduced row-echelon form over the degrevlex monomial basis.
pub struct HomogeneousSpan {
    pub frame: Arc<VariableFrame>,
    pub degree: u64,
    pub basis_monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    pub space: QiRowSpace,
}

impl HomogeneousSpan {
    pub fn new(frame: Arc<VariableFrame>, degree: u64) -> Self {
        let basis_monomials = monomials_of_degree(&frame, degree);
        let index = basis_monomials
            .iter()
            .enumerate()
            .map(|(k, m)| (m.clone(), k))
            .collect();
        let space = QiRowSpace::new(basis_monomials.len());
        Self { frame, degree, basis_monomials, index, space }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn vector_of(&self, p: &SparsePolynomial) -> Result<Vec<GaussianRational>, SurfaceError> {
        Ok(p.coefficient_vector(&self.index, self.basis_monomials.len())?)
    }

    pub fn absorb(&mut self, p: &SparsePolynomial) -> Result<bool, SurfaceError> {
        let v = self.vector_of(p)?;
        Ok(self.space.absorb(v))
    }

    pub fn contains(&self, p: &SparsePolynomial) -> Result<bool, SurfaceError> {
        Ok(self.space.contains(&self.vector_of(p)?))
    }

    pub fn contains_vector(&self, v: &[GaussianRational]) -> bool {
        self.space.contains(v)
    }

    pub fn basis_polynomials(&self) -> Vec<SparsePolynomial> {
        self.space
            .rows()
            .iter()
            .map(|row| {
                SparsePolynomial::from_coefficient_vector(
                    self.frame.clone(),
                    &self.basis_monomials,
                    row,
                )
            })
            .collect()
    }
}

/// Iteratively apply the generator substitutions to the seeds and
/// re-echelonize until the dimension stabilizes. Returns the exact
/// G-stable span.
pub fn orbit_span(
    seeds: &[SparsePolynomial],
    rep: &MatrixRepresentation,
) -> Result<HomogeneousSpan, SurfaceError> {
    let degree = seeds
        .iter()
        .filter_map(|s| s.homogeneous_degree())
        .max()
        .ok_or_else(|| SurfaceError::Data("orbit_span needs homogeneous seeds".into()))?;
    for s in seeds {
        if s.homogeneous_degree() != Some(degree) {
            return Err(SurfaceError::Data(
                "orbit_span seeds must share one degree".into(),
            ));
        }
    }
    let mut span = HomogeneousSpan::new(rep.frame.clone(), degree);
    let mut layer: Vec<SparsePolynomial> = Vec::new();
    for s in seeds {
        if span.absorb(s)? {
            layer.push(s.clone());
        }
    }
    let images: Vec<Vec<SparsePolynomial>> = (0..rep.generators.len())
        .map(|g| rep.substitution_images(g))
        .collect();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for p in &layer {
            for imgs in &images {
                let q = p.substitute(imgs)?;
                if span.absorb(&q)? {
                    next.push(q);
                }
            }
        }
        layer = next;
    }
    Ok(span)
}

/// Substitution images of a plain matrix over the frame of the span.
pub fn matrix_images(frame: &Arc<VariableFrame>, m: &GiMatrix) -> Vec<SparsePolynomial> {
    let n = frame.len();
    (0..n)
        .map(|j| {
            let terms: Vec<_> = (0..n)
                .filter_map(|i| {
                    let c = m.entry_rational(i, j);
                    if c.is_zero() {
                        None
                    } else {
                        Some((Monomial::var(n, i), c))
                    }
                })
                .collect();
            SparsePolynomial::from_terms(frame.clone(), terms).expect("frame matches")
        })
        .collect()
}

/// Check that a diagonal-block sign matrix commutes with every generator
/// and that the span is stable under its substitution.
pub struct InvolutionReport {
    pub commutes_with_generators: bool,
    pub span_stable: bool,
}

pub fn verify_involution(
    rep: &MatrixRepresentation,
    involution: &GiMatrix,
    span: &HomogeneousSpan,
) -> Result<InvolutionReport, SurfaceError> {
    let mut commutes = true;
    for g in &rep.generators {
        let gi = g.checked_mul(involution)?;
        let ig = involution.checked_mul(g)?;
        if gi != ig {
            commutes = false;
        }
    }
    let images = matrix_images(&rep.frame, involution);
    let mut stable = true;
    for p in span.basis_polynomials() {
        let q = p.substitute(&images)?;
        if !span.contains(&q)? {
            stable = false;
        }
    }
    Ok(InvolutionReport { commutes_with_generators: commutes, span_stable: stable })
}

#[cfg(test)]
mod tests {
    use super::*;
    use ballq_algebra::parse_polynomial;

    #[test]
    fn span_of_symmetric_seed_under_swap() {
        let frame = VariableFrame::numbered("x", 2);
        let rep = MatrixRepresentation::from_substitutions(frame.clone(), &[vec!["x2", "x1"]])
            .unwrap();
        let seed = parse_polynomial(&frame, "x1^2").unwrap();
        let span = orbit_span(&[seed], &rep).unwrap();
        // x1^2 and x2^2
        assert_eq!(span.dim(), 2);
        assert!(span
            .contains(&parse_polynomial(&frame, "3 x1^2 - x2^2").unwrap())
            .unwrap());
        assert!(!span
            .contains(&parse_polynomial(&frame, "x1 x2").unwrap())
            .unwrap());
    }
}
