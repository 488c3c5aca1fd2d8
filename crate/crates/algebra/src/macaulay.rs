//! Macaulay matrices of graded ideals and their modular ranks.
//!
//! Rows are indexed by (generator, cofactor monomial) pairs whose weighted
//! degrees add to the target degree; columns are the degree-k monomials in
//! descending degrevlex order. The rank mod p is computed by streaming rows
//! through the echelon accumulator so the full matrix never needs to be
//! materialized for the large degrees.

use std::collections::HashMap;

use crate::error::AlgebraError;
use crate::fp::{FpMatrix, PrimeField, RowEchelon};
use crate::monomial::{monomials_of_degree, Monomial};
use crate::poly::FpPolynomial;

/// Shape and column basis of a Macaulay matrix at one degree.
pub struct MacaulayLayout {
    pub degree: u64,
    pub columns: Vec<Monomial>,
    pub column_index: HashMap<Monomial, usize>,
    /// (generator index, cofactor monomial) per row, in deterministic order.
    pub row_index: Vec<(usize, Monomial)>,
}

impl MacaulayLayout {
    pub fn rows(&self) -> usize {
        self.row_index.len()
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }
}

/// Compute the layout for generators of a graded ideal at the given degree.
pub fn macaulay_layout(gens: &[FpPolynomial], degree: u64) -> Result<MacaulayLayout, AlgebraError> {
    let frame = gens
        .first()
        .map(|g| g.frame().clone())
        .expect("at least one generator");
    let columns = monomials_of_degree(&frame, degree);
    let column_index: HashMap<Monomial, usize> = columns
        .iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i))
        .collect();
    let mut row_index = Vec::new();
    for (gi, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let d = g
            .homogeneous_degree()
            .ok_or(AlgebraError::NonHomogeneousGenerator)?;
        if d > degree {
            continue;
        }
        for cof in monomials_of_degree(&frame, degree - d) {
            row_index.push((gi, cof));
        }
    }
    Ok(MacaulayLayout { degree, columns, column_index, row_index })
}

fn build_row(layout: &MacaulayLayout, g: &FpPolynomial, cof: &Monomial) -> Vec<u64> {
    let mut row = vec![0u64; layout.cols()];
    for (m, c) in g.terms() {
        let idx = layout.column_index[&m.mul(cof)];
        row[idx] = *c;
    }
    row
}

/// Materialized Macaulay matrix over F_p (for moderate sizes).
pub fn macaulay_matrix(
    gens: &[FpPolynomial],
    degree: u64,
    field: &PrimeField,
) -> Result<FpMatrix, AlgebraError> {
    let layout = macaulay_layout(gens, degree)?;
    let rows: Vec<Vec<u64>> = layout
        .row_index
        .iter()
        .map(|(gi, cof)| build_row(&layout, &gens[*gi], cof))
        .collect();
    let mut m = FpMatrix::zero(field.clone(), layout.rows(), layout.cols());
    for (r, row) in rows.into_iter().enumerate() {
        for (c, v) in row.into_iter().enumerate() {
            if v != 0 {
                m.set(r, c, v);
            }
        }
    }
    Ok(m)
}

/// Rank of the Macaulay matrix at one degree, streaming rows.
pub fn macaulay_rank(
    gens: &[FpPolynomial],
    degree: u64,
    field: &PrimeField,
) -> Result<(usize, usize, usize), AlgebraError> {
    let layout = macaulay_layout(gens, degree)?;
    let mut ech = RowEchelon::new(field.clone(), layout.cols());
    ech.absorb_rows(
        layout
            .row_index
            .iter()
            .map(|(gi, cof)| build_row(&layout, &gens[*gi], cof)),
    );
    Ok((layout.rows(), layout.cols(), ech.rank()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::VariableFrame;
    use crate::parse::parse_polynomial;

    #[test]
    fn single_generator_shape() {
        let frame = VariableFrame::numbered("x", 13);
        let field = PrimeField::default_field();
        let g = parse_polynomial(&frame, "x1^2")
            .unwrap()
            .reduce_mod(&field)
            .unwrap();
        let m = macaulay_matrix(&[g.clone()], 2, &field).unwrap();
        assert_eq!((m.rows, m.cols), (1, 91));
        let nonzero: usize = (0..m.cols).filter(|&c| m.at(0, c) != 0).count();
        assert_eq!(nonzero, 1);
        // at degree 3 the cofactors are the 13 variables
        let (rows, cols, rank) = macaulay_rank(&[g], 3, &field).unwrap();
        assert_eq!((rows, cols), (13, 455));
        assert_eq!(rank, 13);
    }

    #[test]
    fn rejects_inhomogeneous() {
        let frame = VariableFrame::numbered("x", 3);
        let field = PrimeField::default_field();
        let g = parse_polynomial(&frame, "x1^2 + x2")
            .unwrap()
            .reduce_mod(&field)
            .unwrap();
        assert!(matches!(
            macaulay_layout(&[g], 2),
            Err(AlgebraError::NonHomogeneousGenerator)
        ));
    }

    #[test]
    fn rank_transpose_invariance() {
        let frame = VariableFrame::numbered("x", 4);
        let field = PrimeField::default_field();
        let gens: Vec<FpPolynomial> = ["x1*x2 - x3^2", "x2^2 + x1*x4", "x1^2 - 2x3*x4"]
            .iter()
            .map(|s| {
                parse_polynomial(&frame, s)
                    .unwrap()
                    .reduce_mod(&field)
                    .unwrap()
            })
            .collect();
        let m = macaulay_matrix(&gens, 3, &field).unwrap();
        assert_eq!(m.rank(), m.transpose().rank());
    }
}
