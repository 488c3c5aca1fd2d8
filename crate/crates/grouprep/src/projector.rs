//! Isotypic projectors, Reynolds averaging, and matrix-element transport.
//!
//! For a left action T and an irreducible character chi, the projector
//! onto the chi-isotypic component is
//!   P = (dim chi / |G|) * sum_N chi(N^{-1}) T_N.
//! With an explicit matrix model X of an irreducible (a diagonal block of
//! the group elements), the transport operators
//!   Pi_{k,l} = (dim / |G|) * sum_N X(N^{-1})_{l,k} T_N
//! send any vector w to a tuple (Pi_{0,l} w, ..., Pi_{d-1,l} w) that
//! transforms exactly like the model basis, which is how matching
//! chi_2-bases inside different product spaces are produced.

use ballq_algebra::{GaussianRational, QiRowSpace};

use crate::action::{InducedAction, WeightedSum};
use crate::classes::ConjugacyClassData;
use crate::closure::FiniteGroupClosure;
use crate::error::GroupError;
use crate::qisqrt7::QiSqrt7;

fn gaussian_weight(v: &QiSqrt7) -> Result<(i64, i64), GroupError> {
    let q = v.as_gaussian_rational().ok_or(GroupError::IrrationalWeight)?;
    if !q.denominator().eq(&num_bigint::BigInt::from(1)) {
        return Err(GroupError::IrrationalWeight);
    }
    use num_traits::ToPrimitive;
    let re = q.numerator().re.to_i64().ok_or(GroupError::Overflow)?;
    let im = q.numerator().im.to_i64().ok_or(GroupError::Overflow)?;
    Ok((re, im))
}

/// Full projector matrix onto the chi-isotypic component of the induced
/// action; entry (r, c) is the coefficient of basis r in P(basis c).
pub fn isotypic_projector_matrix(
    group: &FiniteGroupClosure,
    classes: &ConjugacyClassData,
    chi_by_class: &[QiSqrt7],
    action: &InducedAction,
) -> Result<Vec<Vec<GaussianRational>>, GroupError> {
    let dim = action.dim();
    let weights: Vec<(i64, i64)> = (0..group.order() as u32)
        .map(|id| {
            let cls = classes.class_of(group.inverse_id(id));
            gaussian_weight(&chi_by_class[cls as usize])
        })
        .collect::<Result<_, _>>()?;
    let chi_dim = {
        let identity_class = classes.class_of(0);
        let v = chi_by_class[identity_class as usize]
            .as_non_negative_integer()
            .ok_or(GroupError::IrrationalWeight)?;
        v as i64
    };
    let mut acc: Vec<WeightedSum> = (0..dim).map(|_| WeightedSum::new(dim)).collect();
    for id in 0..group.order() as u32 {
        let w = weights[id as usize];
        if w == (0, 0) {
            continue;
        }
        let mat = group.element(id);
        for (b, sum) in acc.iter_mut().enumerate() {
            let img = action.image_of_basis_monomial(mat, b)?;
            sum.add(w, &img);
        }
    }
    let den = group.order() as i64;
    let cols: Vec<Vec<GaussianRational>> = acc.iter().map(|s| s.finish(chi_dim, den)).collect();
    // transpose to row-major
    Ok((0..dim)
        .map(|r| (0..dim).map(|c| cols[c][r].clone()).collect())
        .collect())
}

/// Reynolds average of one basis monomial: (1/|G|) sum_N T_N(m_b).
pub fn reynolds_column(
    group: &FiniteGroupClosure,
    action: &InducedAction,
    b: usize,
) -> Result<Vec<GaussianRational>, GroupError> {
    let mut sum = WeightedSum::new(action.dim());
    for id in 0..group.order() as u32 {
        let img = action.image_of_basis_monomial(group.element(id), b)?;
        sum.add((1, 0), &img);
    }
    Ok(sum.finish(1, group.order() as i64))
}

/// Transport of a vector through the matrix-element operators of an
/// explicit irreducible block. Returns `dim(model)` vectors over the
/// action basis that transform exactly like the model variables.
pub fn transport_tuple(
    group: &FiniteGroupClosure,
    action: &InducedAction,
    model: std::ops::Range<usize>,
    l: usize,
    w: &[GaussianRational],
) -> Result<Vec<Vec<GaussianRational>>, GroupError> {
    let dim = action.dim();
    assert_eq!(w.len(), dim);
    let model_dim = model.len();
    // scale w to Gaussian integers
    let mut den = num_bigint::BigInt::from(1);
    for c in w {
        use num_integer::Integer;
        den = den.lcm(c.denominator());
    }
    use num_traits::ToPrimitive;
    let w_int: Vec<(i64, i64)> = w
        .iter()
        .map(|c| {
            let s = &den / c.denominator();
            let re = (&c.numerator().re * &s).to_i64().ok_or(GroupError::Overflow)?;
            let im = (&c.numerator().im * &s).to_i64().ok_or(GroupError::Overflow)?;
            Ok((re, im))
        })
        .collect::<Result<Vec<_>, GroupError>>()?;
    let support: Vec<usize> = w_int
        .iter()
        .enumerate()
        .filter(|(_, &(re, im))| re != 0 || im != 0)
        .map(|(i, _)| i)
        .collect();

    let mut acc: Vec<WeightedSum> = (0..model_dim).map(|_| WeightedSum::new(dim)).collect();
    let mut img_sum = vec![(0i64, 0i64); dim];
    for id in 0..group.order() as u32 {
        let mat = group.element(id);
        let inv = group.element(group.inverse_id(id));
        if inv.den != 1 {
            return Err(GroupError::Overflow);
        }
        // image of w under T_mat
        for v in img_sum.iter_mut() {
            *v = (0, 0);
        }
        for &b in &support {
            let img = action.image_of_basis_monomial(mat, b)?;
            let (cre, cim) = w_int[b];
            for (dst, &(re, im)) in img_sum.iter_mut().zip(&img) {
                if re == 0 && im == 0 {
                    continue;
                }
                dst.0 = dst
                    .0
                    .checked_add(
                        cre.checked_mul(re)
                            .and_then(|p| cim.checked_mul(im).map(|q| p - q))
                            .ok_or(GroupError::Overflow)?,
                    )
                    .ok_or(GroupError::Overflow)?;
                dst.1 = dst
                    .1
                    .checked_add(
                        cre.checked_mul(im)
                            .and_then(|p| cim.checked_mul(re).map(|q| p + q))
                            .ok_or(GroupError::Overflow)?,
                    )
                    .ok_or(GroupError::Overflow)?;
            }
        }
        for (k, sum) in acc.iter_mut().enumerate() {
            let (a, b) = inv.entry(model.start + l, model.start + k);
            if a == 0 && b == 0 {
                continue;
            }
            sum.add((a, b), &img_sum);
        }
    }
    // The overall scale (model_dim/|G| and the cleared denominator of w)
    // does not matter to callers, which treat results projectively; still
    // return the exact normalized values.
    let den_i64 = group.order() as i64;
    Ok(acc
        .iter()
        .map(|s| {
            let v = s.finish(model_dim as i64, den_i64);
            v.iter()
                .map(|c| c * &GaussianRational::from_ratio(
                    ballq_algebra::GaussianInt::one(),
                    den.clone(),
                ))
                .collect()
        })
        .collect())
}

/// Span of the columns of an exact matrix, echelonized.
pub fn column_space(matrix: &[Vec<GaussianRational>]) -> QiRowSpace {
    let dim = matrix.len();
    let mut space = QiRowSpace::new(dim);
    for c in 0..dim {
        let col: Vec<GaussianRational> = (0..dim).map(|r| matrix[r][c].clone()).collect();
        space.absorb(col);
    }
    space
}

/// Exact matrix-vector product.
pub fn apply_matrix(m: &[Vec<GaussianRational>], v: &[GaussianRational]) -> Vec<GaussianRational> {
    m.iter()
        .map(|row| {
            let mut acc = GaussianRational::zero();
            for (a, b) in row.iter().zip(v) {
                if !a.is_zero() && !b.is_zero() {
                    acc += &(a * b);
                }
            }
            acc
        })
        .collect()
}

/// Exact matrix product (small matrices only).
pub fn matrix_product(
    a: &[Vec<GaussianRational>],
    b: &[Vec<GaussianRational>],
) -> Vec<Vec<GaussianRational>> {
    let n = a.len();
    let k = b.len();
    let m = b.first().map_or(0, |r| r.len());
    (0..n)
        .map(|r| {
            (0..m)
                .map(|c| {
                    let mut acc = GaussianRational::zero();
                    for t in 0..k {
                        if !a[r][t].is_zero() && !b[t][c].is_zero() {
                            acc += &(&a[r][t] * &b[t][c]);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}
