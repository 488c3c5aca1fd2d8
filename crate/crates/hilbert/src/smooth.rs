//! Jacobian-minor smoothness checks over F_p.
//!
//! A finite-field certificate that the chosen minors and the ideal have
//! no common solutions supports the characteristic-zero smoothness claim
//! by semicontinuity. The check either proves emptiness (unit ideal, or a
//! zero-dimensional affine cone for homogeneous input), reports a
//! positive-dimensional common zero locus, or gives up on budget.

use ballq_algebra::{FpPolynomial, Monomial, PrimeField};

use crate::error::HilbertError;
use crate::groebner::{dimension_from_leading_terms, groebner_basis, GroebnerBasis, ResourceBudget};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinorCheckOutcome {
    /// Unit ideal (or empty projective scheme): smoothness certified mod p.
    Empty,
    /// Common zeros exist; the affine dimension of the locus is reported.
    NotEmpty { affine_dimension: usize },
}

pub struct MinorCheckReport {
    pub outcome: MinorCheckOutcome,
    pub minors_used: usize,
    pub pairs_reduced: usize,
}

/// Partial derivative of an F_p polynomial.
pub fn partial_derivative(p: &FpPolynomial, var: usize) -> FpPolynomial {
    let field = p.field().clone();
    let terms: Vec<(Monomial, u64)> = p
        .terms()
        .iter()
        .filter_map(|(m, c)| {
            let e = m.exponents()[var];
            if e == 0 {
                return None;
            }
            let mut exps = m.exponents().to_vec();
            exps[var] -= 1;
            Some((Monomial::new(exps), field.mul(*c, (e as u64) % field.modulus())))
        })
        .collect();
    FpPolynomial::from_terms(p.frame().clone(), field, terms)
}

/// Determinant of a square polynomial matrix by cofactor expansion with
/// memoization over column subsets. Fine for sizes up to ~8.
pub fn determinant(rows: &[Vec<FpPolynomial>]) -> FpPolynomial {
    let n = rows.len();
    assert!(n <= 16);
    let frame = rows[0][0].frame().clone();
    let field = rows[0][0].field().clone();
    let mut memo: std::collections::HashMap<u32, FpPolynomial> = Default::default();
    memo.insert(0, FpPolynomial::from_terms(
        frame.clone(),
        field.clone(),
        vec![(Monomial::one(frame.len()), 1)],
    ));
    // process rows one at a time; state = set of used columns
    let mut states: Vec<u32> = vec![0];
    for r in 0..n {
        let mut next: std::collections::HashMap<u32, FpPolynomial> = Default::default();
        for &cols in &states {
            let acc = memo[&cols].clone();
            for c in 0..n {
                let bit = 1u32 << c;
                if cols & bit != 0 {
                    continue;
                }
                let entry = &rows[r][c];
                if entry.is_zero() {
                    continue;
                }
                // permutation parity: inversions added = used columns > c
                let inversions = (cols >> (c + 1)).count_ones();
                let term = if inversions % 2 == 0 {
                    acc.mul(entry)
                } else {
                    acc.mul(entry).scale(field.modulus() - 1)
                };
                let key = cols | bit;
                match next.entry(key) {
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        let combined = e.get().add(&term);
                        e.insert(combined);
                    }
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(term);
                    }
                }
            }
        }
        memo = next;
        states = memo.keys().copied().collect();
        states.sort();
    }
    memo.remove(&((1u32 << n) - 1))
        .unwrap_or_else(|| FpPolynomial::zero(frame, field))
}

/// All size-k subsets of 0..n in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k == 0 || k > n {
        return if k == 0 { vec![vec![]] } else { out };
    }
    loop {
        out.push(cur.clone());
        // advance
        let mut i = k;
        while i > 0 {
            i -= 1;
            if cur[i] < i + n - k {
                cur[i] += 1;
                for j in (i + 1)..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
            if i == 0 {
                return out;
            }
        }
    }
}

/// Greedy selection of `size` generators whose gradients are linearly
/// independent at the given point, by rank growth.
pub fn select_rows_at_point(
    gens: &[FpPolynomial],
    point: &[u64],
    size: usize,
    field: &PrimeField,
) -> Option<Vec<usize>> {
    let nvars = gens.first()?.frame().len();
    let mut ech = ballq_algebra::RowEchelon::new(field.clone(), nvars);
    let mut chosen = Vec::new();
    for (gi, g) in gens.iter().enumerate() {
        if chosen.len() == size {
            break;
        }
        let grad: Vec<u64> = (0..nvars)
            .map(|v| partial_derivative(g, v).evaluate(point))
            .collect();
        if ech.absorb(grad) {
            chosen.push(gi);
        }
    }
    (chosen.len() == size).then_some(chosen)
}

/// Test whether the ideal together with the selected size-r minors of the
/// Jacobian of the selected generators has no common zeros mod p.
pub fn jacobian_minor_check(
    gens: &[FpPolynomial],
    selected_rows: &[usize],
    minor_size: usize,
    budget: ResourceBudget,
) -> Result<MinorCheckReport, HilbertError> {
    let frame = gens
        .first()
        .map(|g| g.frame().clone())
        .ok_or_else(|| HilbertError::ResourceLimit("no generators".into()))?;
    let nvars = frame.len();
    if selected_rows.len() < minor_size || nvars < minor_size {
        return Err(HilbertError::ResourceLimit(
            "not enough rows or variables for the minor size".into(),
        ));
    }
    // Jacobian block of the selected generators
    let jac: Vec<Vec<FpPolynomial>> = selected_rows
        .iter()
        .map(|&r| (0..nvars).map(|v| partial_derivative(&gens[r], v)).collect())
        .collect();
    // all size-r column subsets of the first `minor_size` selected rows
    let mut system: Vec<FpPolynomial> = gens.to_vec();
    let mut minors_used = 0usize;
    let row_block: Vec<&Vec<FpPolynomial>> = jac.iter().take(minor_size).collect();
    for cols in combinations(nvars, minor_size) {
        let sub: Vec<Vec<FpPolynomial>> = row_block
            .iter()
            .map(|row| cols.iter().map(|&c| row[c].clone()).collect())
            .collect();
        let det = determinant(&sub);
        if !det.is_zero() {
            system.push(det);
            minors_used += 1;
        }
    }
    let gb: GroebnerBasis = groebner_basis(&system, budget)?;
    let outcome = if gb.is_unit_ideal() {
        MinorCheckOutcome::Empty
    } else {
        let dim = dimension_from_leading_terms(&gb.leading_monomials(), nvars);
        if dim == 0 {
            // homogeneous input: only the irrelevant origin survives
            MinorCheckOutcome::Empty
        } else {
            MinorCheckOutcome::NotEmpty { affine_dimension: dim }
        }
    };
    Ok(MinorCheckReport { outcome, minors_used, pairs_reduced: gb.pairs_reduced })
}

#[cfg(test)]
mod tests {
    use super::*;
    use ballq_algebra::{parse_polynomial, VariableFrame};

    fn fp(frame: &std::sync::Arc<VariableFrame>, src: &str) -> FpPolynomial {
        parse_polynomial(frame, src)
            .unwrap()
            .reduce_mod(&PrimeField::default_field())
            .unwrap()
    }

    #[test]
    fn derivative_basics() {
        let frame = VariableFrame::numbered("x", 2);
        let p = fp(&frame, "x1^3 + 4 x1 x2 - x2^2");
        let d1 = partial_derivative(&p, 0);
        assert_eq!(format!("{:?}", d1), "3*x1^2 + 4*x2");
    }

    #[test]
    fn determinant_of_linear_matrix() {
        let frame = VariableFrame::numbered("x", 2);
        let rows = vec![
            vec![fp(&frame, "x1"), fp(&frame, "x2")],
            vec![fp(&frame, "x2"), fp(&frame, "x1")],
        ];
        let det = determinant(&rows);
        assert_eq!(det, fp(&frame, "x1^2 - x2^2"));
    }

    #[test]
    fn smooth_hyperplane_gives_unit_ideal() {
        // ideal (x1) in one variable: the 1x1 minor of the Jacobian is 1
        let frame = VariableFrame::numbered("x", 1);
        let gens = vec![fp(&frame, "x1")];
        let report =
            jacobian_minor_check(&gens, &[0], 1, ResourceBudget::default()).unwrap();
        assert_eq!(report.outcome, MinorCheckOutcome::Empty);
    }

    #[test]
    fn double_point_detected() {
        // ideal (x1^2): minor is 2 x1, common zero locus is the origin
        // with multiplicity; in one variable the cone is 0-dimensional,
        // so use two variables to expose the singular line
        let frame = VariableFrame::numbered("x", 2);
        let gens = vec![fp(&frame, "x1^2")];
        let report =
            jacobian_minor_check(&gens, &[0], 1, ResourceBudget::default()).unwrap();
        assert_eq!(
            report.outcome,
            MinorCheckOutcome::NotEmpty { affine_dimension: 1 }
        );
    }

    #[test]
    fn greedy_row_selection() {
        let frame = VariableFrame::numbered("x", 3);
        let gens = vec![
            fp(&frame, "x1^2"),
            fp(&frame, "2 x1^2"), // dependent gradient at any point
            fp(&frame, "x2 x3"),
            fp(&frame, "x3^2"),
        ];
        let rows = select_rows_at_point(&gens, &[1, 1, 1], 3, &PrimeField::default_field())
            .unwrap();
        assert_eq!(rows, vec![0, 2, 3]);
    }
}
