//! Invariant subspaces of induced degree-d actions.
//!
//! The Reynolds operator R = (1/|G|) sum_N T_N projects onto the fixed
//! space, so averaging basis monomials and echelonizing spans exactly the
//! invariants. A kernel computation mod p gives an upper bound on the
//! fixed dimension (rank can only drop mod p) used both as an early exit
//! and as an independent certification of the dimension.

use ballq_algebra::{
    FpMatrix, GaussianRational, PrimeField, QiRowSpace, RowEchelon, SparsePolynomial,
};

use crate::action::InducedAction;
use crate::closure::FiniteGroupClosure;
use crate::error::GroupError;
use crate::projector::reynolds_column;

/// Upper bound for the fixed-space dimension: the kernel dimension mod p
/// of the stacked (T_g - 1) matrices over the generators.
pub fn invariant_dimension_bound(
    group: &FiniteGroupClosure,
    action: &InducedAction,
    field: &PrimeField,
) -> Result<usize, GroupError> {
    let dim = action.dim();
    let p = field.modulus();
    let mut ech = RowEchelon::new(field.clone(), dim);
    for &g in group.generator_ids() {
        let m: FpMatrix = action.induced_matrix_mod_p(group.element(g), field)?;
        // rows of (M - I)^T as linear conditions on fixed vectors:
        // fixed vector v satisfies M v = v, i.e. each row r gives
        // sum_c (M[r][c] - delta) v_c = 0.
        for r in 0..dim {
            let mut row = vec![0u64; dim];
            for c in 0..dim {
                let mut v = m.at(r, c);
                if r == c {
                    v = (v + p - 1) % p;
                }
                row[c] = v;
            }
            ech.absorb(row);
        }
    }
    Ok(dim - ech.rank())
}

/// Exact basis of the invariant polynomials of the induced action,
/// echelonized deterministically. Certified: every basis vector is fixed
/// by all generators exactly, and the dimension is checked against the
/// modular upper bound.
pub struct InvariantBasis {
    pub polynomials: Vec<SparsePolynomial>,
    pub space: QiRowSpace,
    pub modular_bound: usize,
}

pub fn invariant_subspace(
    group: &FiniteGroupClosure,
    action: &InducedAction,
    field: &PrimeField,
) -> Result<InvariantBasis, GroupError> {
    let dim = action.dim();
    let bound = invariant_dimension_bound(group, action, field)?;
    let mut space = QiRowSpace::new(dim);
    for b in 0..dim {
        if space.dim() >= bound {
            break;
        }
        let avg = reynolds_column(group, action, b)?;
        if avg.iter().all(|c| c.is_zero()) {
            continue;
        }
        space.absorb(avg);
    }
    // verify: each basis vector fixed by every generator, exactly
    for &g in group.generator_ids() {
        let gen = group.element(g);
        for row in space.rows() {
            let mut image = vec![GaussianRational::zero(); dim];
            for (b, c) in row.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let img = action.image_of_basis_monomial(gen, b)?;
                for (dst, &(re, im)) in image.iter_mut().zip(&img) {
                    if re != 0 || im != 0 {
                        *dst += &(c * &GaussianRational::from_parts(re, im, 1));
                    }
                }
            }
            if image != *row {
                return Err(GroupError::ClassMismatch(
                    "Reynolds average not fixed by a generator".into(),
                ));
            }
        }
    }
    let polynomials = space
        .rows()
        .iter()
        .map(|row| {
            SparsePolynomial::from_coefficient_vector(action.frame.clone(), action.basis(), row)
        })
        .collect();
    Ok(InvariantBasis { polynomials, space, modular_bound: bound })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::MatrixRepresentation;
    use ballq_algebra::VariableFrame;

    #[test]
    fn symmetric_group_invariants() {
        // S3 permuting three variables: invariants of degree 2 are spanned
        // by e1^2-related power sums: x1^2+x2^2+x3^2 and x1x2+x1x3+x2x3.
        let frame = VariableFrame::numbered("x", 3);
        let rep = MatrixRepresentation::from_substitutions(
            frame.clone(),
            &[vec!["x2", "x1", "x3"], vec!["x2", "x3", "x1"]],
        )
        .unwrap();
        let group = FiniteGroupClosure::compute(&rep, 10).unwrap();
        let action = InducedAction::new(frame.clone(), 2);
        let field = PrimeField::default_field();
        let inv = invariant_subspace(&group, &action, &field).unwrap();
        assert_eq!(inv.space.dim(), 2);
        assert_eq!(inv.modular_bound, 2);
        // degree 1: only x1+x2+x3
        let action1 = InducedAction::new(frame, 1);
        let inv1 = invariant_subspace(&group, &action1, &field).unwrap();
        assert_eq!(inv1.space.dim(), 1);
    }

    #[test]
    fn alternating_sign_action_has_no_linear_invariants() {
        let frame = VariableFrame::numbered("x", 1);
        let rep =
            MatrixRepresentation::from_substitutions(frame.clone(), &[vec!["-x1"]]).unwrap();
        let group = FiniteGroupClosure::compute(&rep, 10).unwrap();
        let field = PrimeField::default_field();
        let inv1 = invariant_subspace(&group, &InducedAction::new(frame.clone(), 1), &field).unwrap();
        assert_eq!(inv1.space.dim(), 0);
        let inv2 = invariant_subspace(&group, &InducedAction::new(frame, 2), &field).unwrap();
        assert_eq!(inv2.space.dim(), 1);
    }
}
