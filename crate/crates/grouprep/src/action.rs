//! The induced action of a matrix group on degree-d polynomial spaces.
//!
//! Polynomials transform by row-substitution: T_M replaces variable j by
//! `sum_i M[j][i] v_i`, which composes as a left action, T_A . T_B =
//! T_{AB}. Images of basis monomials are expanded with plain integer
//! arithmetic (overflow-checked) since all group elements in scope have
//! Gaussian-integer entries, and the group-sized sums are accumulated in
//! i128 before a single exact division.

use std::collections::HashMap;
use std::sync::Arc;

use ballq_algebra::{
    monomials_of_degree, FpMatrix, GaussianRational, Monomial, PrimeField, VariableFrame,
};

use crate::error::GroupError;
use crate::gimatrix::GiMatrix;

/// Monomial bases of degrees 0..=d with variable-multiplication tables.
pub struct InducedAction {
    pub frame: Arc<VariableFrame>,
    pub degree: usize,
    bases: Vec<Vec<Monomial>>,
    index_top: HashMap<Monomial, usize>,
    /// var_mult[t][b * nvars + v] = index of basis[t][b] * x_v in basis[t+1]
    var_mult: Vec<Vec<u32>>,
}

impl InducedAction {
    pub fn new(frame: Arc<VariableFrame>, degree: usize) -> Self {
        assert!(frame.is_standard_grading(), "induced actions use standard grading");
        let n = frame.len();
        let bases: Vec<Vec<Monomial>> = (0..=degree as u64)
            .map(|d| monomials_of_degree(&frame, d))
            .collect();
        let indexes: Vec<HashMap<Monomial, usize>> = bases
            .iter()
            .map(|b| b.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect())
            .collect();
        let mut var_mult = Vec::with_capacity(degree);
        for t in 0..degree {
            let mut table = vec![0u32; bases[t].len() * n];
            for (bi, m) in bases[t].iter().enumerate() {
                for v in 0..n {
                    let prod = m.mul(&Monomial::var(n, v));
                    table[bi * n + v] = indexes[t + 1][&prod] as u32;
                }
            }
            var_mult.push(table);
        }
        let index_top = indexes.last().cloned().unwrap_or_default();
        Self { frame, degree, bases, index_top, var_mult }
    }

    pub fn dim(&self) -> usize {
        self.bases[self.degree].len()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.bases[self.degree]
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index_top.get(m).copied()
    }

    /// Dense image of basis monomial `b` under substitution by `mat`, as
    /// Gaussian-integer pairs over the degree-d basis.
    pub fn image_of_basis_monomial(
        &self,
        mat: &GiMatrix,
        b: usize,
    ) -> Result<Vec<(i64, i64)>, GroupError> {
        if mat.den != 1 {
            return Err(GroupError::Overflow);
        }
        let n = self.frame.len();
        let exps = self.bases[self.degree][b].exponents().to_vec();
        let mut cur: Vec<(i64, i64)> = vec![(1, 0)];
        let mut t = 0usize;
        for (v, &e) in exps.iter().enumerate() {
            for _ in 0..e {
                let mut next = vec![(0i64, 0i64); self.bases[t + 1].len()];
                for (bi, &(cre, cim)) in cur.iter().enumerate() {
                    if cre == 0 && cim == 0 {
                        continue;
                    }
                    for w in 0..n {
                        // row-substitution: v_j <- sum_w M[j][w] v_w
                        let (a, bim) = mat.entry(v, w);
                        if a == 0 && bim == 0 {
                            continue;
                        }
                        let idx = self.var_mult[t][bi * n + w] as usize;
                        let re = cre
                            .checked_mul(a)
                            .and_then(|p| cim.checked_mul(bim).map(|q| (p, q)))
                            .and_then(|(p, q)| p.checked_sub(q))
                            .ok_or(GroupError::Overflow)?;
                        let im = cre
                            .checked_mul(bim)
                            .and_then(|p| cim.checked_mul(a).map(|q| (p, q)))
                            .and_then(|(p, q)| p.checked_add(q))
                            .ok_or(GroupError::Overflow)?;
                        next[idx].0 = next[idx].0.checked_add(re).ok_or(GroupError::Overflow)?;
                        next[idx].1 = next[idx].1.checked_add(im).ok_or(GroupError::Overflow)?;
                    }
                }
                cur = next;
                t += 1;
            }
        }
        Ok(cur)
    }

    /// The full induced matrix of one element (columns = images of basis
    /// monomials), entries exact Gaussian integers.
    pub fn induced_columns(&self, mat: &GiMatrix) -> Result<Vec<Vec<(i64, i64)>>, GroupError> {
        (0..self.dim())
            .map(|b| self.image_of_basis_monomial(mat, b))
            .collect()
    }

    /// Induced matrix of one element reduced mod p (dim x dim, column-image
    /// convention kept: entry (r, c) = coefficient of basis r in image of c).
    pub fn induced_matrix_mod_p(
        &self,
        mat: &GiMatrix,
        field: &PrimeField,
    ) -> Result<FpMatrix, GroupError> {
        let dim = self.dim();
        let p = field.modulus();
        let root = field.root_of_minus_one();
        let mut out = FpMatrix::zero(field.clone(), dim, dim);
        for c in 0..dim {
            let col = self.image_of_basis_monomial(mat, c)?;
            for (r, &(re, im)) in col.iter().enumerate() {
                if re == 0 && im == 0 {
                    continue;
                }
                let re = re.rem_euclid(p as i64) as u64;
                let im = im.rem_euclid(p as i64) as u64;
                out.set(r, c, field.add(re, field.mul(im, root)));
            }
        }
        Ok(out)
    }
}

/// Accumulator for group-sized sums of integer vectors with Gaussian
/// integer weights.
pub struct WeightedSum {
    pub acc: Vec<(i128, i128)>,
}

impl WeightedSum {
    pub fn new(dim: usize) -> Self {
        Self { acc: vec![(0, 0); dim] }
    }

    pub fn add(&mut self, weight: (i64, i64), v: &[(i64, i64)]) {
        let (wr, wi) = (weight.0 as i128, weight.1 as i128);
        for (a, &(re, im)) in self.acc.iter_mut().zip(v) {
            if re == 0 && im == 0 {
                continue;
            }
            let (re, im) = (re as i128, im as i128);
            a.0 += wr * re - wi * im;
            a.1 += wr * im + wi * re;
        }
    }

    /// Divide by `den` exactly into Gaussian rationals, scaled by
    /// `num_scale`.
    pub fn finish(&self, num_scale: i64, den: i64) -> Vec<GaussianRational> {
        self.acc
            .iter()
            .map(|&(re, im)| {
                let num = ballq_algebra::GaussianInt::new(
                    num_bigint::BigInt::from(re) * num_scale,
                    num_bigint::BigInt::from(im) * num_scale,
                );
                GaussianRational::from_ratio(num, num_bigint::BigInt::from(den))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::MatrixRepresentation;

    #[test]
    fn induced_degree_two_of_a_swap() {
        let frame = VariableFrame::numbered("x", 2);
        let rep = MatrixRepresentation::from_substitutions(frame.clone(), &[vec!["x2", "x1"]])
            .unwrap();
        let action = InducedAction::new(frame, 2);
        // basis (descending degrevlex): x1^2, x1 x2, x2^2
        assert_eq!(action.dim(), 3);
        let img = action
            .image_of_basis_monomial(&rep.generators[0], 0)
            .unwrap();
        // x1^2 -> x2^2
        assert_eq!(img, vec![(0, 0), (0, 0), (1, 0)]);
        let img = action
            .image_of_basis_monomial(&rep.generators[0], 1)
            .unwrap();
        // x1 x2 fixed
        assert_eq!(img, vec![(0, 0), (1, 0), (0, 0)]);
    }

    #[test]
    fn substitution_matches_exact_path() {
        let frame = VariableFrame::numbered("x", 3);
        let rep = MatrixRepresentation::from_substitutions(
            frame.clone(),
            &[vec!["x2 + i x3", "x1 - x3", "x1 + x2"]],
        )
        .unwrap();
        let action = InducedAction::new(frame.clone(), 2);
        let images = rep.substitution_images(0);
        for (b, m) in action.basis().iter().enumerate() {
            let fast = action
                .image_of_basis_monomial(&rep.generators[0], b)
                .unwrap();
            let exact = ballq_algebra::SparsePolynomial::from_terms(
                frame.clone(),
                vec![(m.clone(), GaussianRational::one())],
            )
            .unwrap()
            .substitute(&images)
            .unwrap();
            let fast_poly = ballq_algebra::SparsePolynomial::from_terms(
                frame.clone(),
                action
                    .basis()
                    .iter()
                    .zip(&fast)
                    .filter(|(_, &(re, im))| re != 0 || im != 0)
                    .map(|(mm, &(re, im))| {
                        (mm.clone(), GaussianRational::from_parts(re, im, 1))
                    })
                    .collect(),
            )
            .unwrap();
            assert_eq!(fast_poly, exact);
        }
    }
}
