//! Buchberger's algorithm over F_p with degrevlex order, normal pair
//! selection, and the coprimality and chain criteria. Deterministic and
//! resource-capped.

use std::collections::BTreeSet;

use ballq_algebra::{FpPolynomial, Monomial};

use crate::error::HilbertError;

#[derive(Debug, Clone, Copy)]
pub struct ResourceBudget {
    /// S-pair reductions allowed before giving up.
    pub max_pairs: usize,
    /// Cap on the basis size.
    pub max_basis: usize,
}

impl Default for ResourceBudget {
    fn default() -> Self {
        Self { max_pairs: 200_000, max_basis: 4_000 }
    }
}

pub struct GroebnerBasis {
    pub basis: Vec<FpPolynomial>,
    pub pairs_reduced: usize,
}

impl GroebnerBasis {
    /// Fully reduce a polynomial modulo the basis.
    pub fn normal_form(&self, p: &FpPolynomial) -> FpPolynomial {
        normal_form(p, &self.basis)
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis
            .iter()
            .filter_map(|g| g.leading_term().map(|(m, _)| m.clone()))
            .collect()
    }

    /// True when the basis contains a nonzero constant.
    pub fn is_unit_ideal(&self) -> bool {
        self.basis
            .iter()
            .any(|g| g.leading_term().is_some_and(|(m, _)| m.is_one()))
    }
}

fn normal_form(p: &FpPolynomial, basis: &[FpPolynomial]) -> FpPolynomial {
    let field = p.field().clone();
    let mut rest = FpPolynomial::zero(p.frame().clone(), field.clone());
    let mut work = p.clone();
    'outer: while let Some((lm, lc)) = work.leading_term().map(|(m, c)| (m.clone(), *c)) {
        for g in basis {
            let Some((gm, gc)) = g.leading_term() else { continue };
            if let Some(q) = lm.try_div(gm) {
                let factor = field.mul(lc, field.inv(*gc));
                work = work.sub_mul_term(factor, &q, g);
                continue 'outer;
            }
        }
        // leading term irreducible: move it to the remainder
        let single = FpPolynomial::from_terms(
            p.frame().clone(),
            field.clone(),
            vec![(lm.clone(), lc)],
        );
        rest = rest.add(&single);
        work = work.sub(&single);
    }
    rest
}

fn s_polynomial(f: &FpPolynomial, g: &FpPolynomial) -> FpPolynomial {
    let field = f.field().clone();
    let (fm, fc) = f.leading_term().expect("nonzero");
    let (gm, gc) = g.leading_term().expect("nonzero");
    let lcm = fm.lcm(gm);
    let qf = lcm.try_div(fm).unwrap();
    let qg = lcm.try_div(gm).unwrap();
    let a = f.mul_monomial(&qf).scale(field.inv(*fc));
    let b = g.mul_monomial(&qg).scale(field.inv(*gc));
    a.sub(&b)
}

/// Buchberger with normal selection (smallest lcm degree first).
pub fn groebner_basis(
    gens: &[FpPolynomial],
    budget: ResourceBudget,
) -> Result<GroebnerBasis, HilbertError> {
    let mut basis: Vec<FpPolynomial> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.monic())
        .collect();
    if basis.is_empty() {
        return Ok(GroebnerBasis { basis, pairs_reduced: 0 });
    }
    let frame = basis[0].frame().clone();
    let weights = frame.weights().to_vec();

    // pair queue keyed by (lcm weighted degree, i, j) for determinism
    let mut queue: BTreeSet<(u64, usize, usize)> = BTreeSet::new();
    let lcm_deg = |basis: &[FpPolynomial], i: usize, j: usize| -> u64 {
        let mi = &basis[i].leading_term().unwrap().0;
        let mj = &basis[j].leading_term().unwrap().0;
        mi.lcm(mj).weighted_degree(&weights)
    };
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            queue.insert((lcm_deg(&basis, i, j), i, j));
        }
    }

    let mut pairs_reduced = 0usize;
    while let Some(&(d, i, j)) = queue.iter().next() {
        queue.remove(&(d, i, j));
        let (mi, _) = basis[i].leading_term().unwrap();
        let (mj, _) = basis[j].leading_term().unwrap();
        // coprimality criterion
        if mi.coprime_with(mj) {
            continue;
        }
        // chain criterion: some k with lt_k | lcm(i,j) and both pairs gone
        let lcm = mi.lcm(mj);
        let chained = (0..basis.len()).any(|k| {
            if k == i || k == j {
                return false;
            }
            let (mk, _) = basis[k].leading_term().unwrap();
            if lcm.try_div(mk).is_none() {
                return false;
            }
            let (a, b) = (i.min(k), i.max(k));
            let (c, e) = (j.min(k), j.max(k));
            !queue.contains(&(lcm_deg(&basis, a, b), a, b))
                && !queue.contains(&(lcm_deg(&basis, c, e), c, e))
        });
        if chained {
            continue;
        }
        pairs_reduced += 1;
        if pairs_reduced > budget.max_pairs {
            return Err(HilbertError::ResourceLimit(format!(
                "pair budget {} exhausted",
                budget.max_pairs
            )));
        }
        let s = s_polynomial(&basis[i], &basis[j]);
        let r = normal_form(&s, &basis);
        if r.is_zero() {
            continue;
        }
        let r = r.monic();
        let new_idx = basis.len();
        basis.push(r);
        if basis.len() > budget.max_basis {
            return Err(HilbertError::ResourceLimit(format!(
                "basis budget {} exhausted",
                budget.max_basis
            )));
        }
        for k in 0..new_idx {
            queue.insert((lcm_deg(&basis, k, new_idx), k, new_idx));
        }
    }

    // interreduce to the unique reduced basis, then sort deterministically
    let mut reduced: Vec<FpPolynomial> = Vec::new();
    // drop elements whose leading term divides by another's
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            if i == j || !keep[i] || !keep[j] {
                continue;
            }
            let (mi, _) = basis[i].leading_term().unwrap();
            let (mj, _) = basis[j].leading_term().unwrap();
            if mi.try_div(mj).is_some() && (mi != mj || j < i) {
                keep[i] = false;
            }
        }
    }
    let survivors: Vec<FpPolynomial> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect();
    for i in 0..survivors.len() {
        let mut others = survivors.clone();
        others.remove(i);
        let r = normal_form(&survivors[i], &others);
        if !r.is_zero() {
            reduced.push(r.monic());
        }
    }
    reduced.sort_by(|a, b| {
        let ma = &a.leading_term().unwrap().0;
        let mb = &b.leading_term().unwrap().0;
        mb.cmp_degrevlex(ma, &weights)
    });
    Ok(GroebnerBasis { basis: reduced, pairs_reduced })
}

/// Krull dimension of F_p[x]/in(I) from the leading monomials: the size
/// of the largest variable subset not containing the support of any
/// leading monomial.
pub fn dimension_from_leading_terms(leading: &[Monomial], nvars: usize) -> usize {
    assert!(nvars <= 20, "subset enumeration limited to 20 variables");
    let supports: Vec<u32> = leading
        .iter()
        .map(|m| {
            m.exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .fold(0u32, |acc, (k, _)| acc | (1 << k))
        })
        .collect();
    // a constant leading term means the unit ideal: empty variety
    if supports.iter().any(|&s| s == 0) {
        return 0;
    }
    let mut best = 0usize;
    for subset in 0u32..(1 << nvars) {
        let size = subset.count_ones() as usize;
        if size <= best {
            continue;
        }
        if supports.iter().all(|&s| s & !subset != 0) {
            best = size;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use ballq_algebra::{parse_polynomial, PrimeField, VariableFrame};

    fn fp(frame: &std::sync::Arc<VariableFrame>, src: &str) -> FpPolynomial {
        parse_polynomial(frame, src)
            .unwrap()
            .reduce_mod(&PrimeField::default_field())
            .unwrap()
    }

    #[test]
    fn variable_ideal_is_its_own_basis() {
        let frame = VariableFrame::numbered("x", 4);
        let gens: Vec<FpPolynomial> = (1..=4).map(|k| fp(&frame, &format!("x{k}"))).collect();
        let gb = groebner_basis(&gens, ResourceBudget::default()).unwrap();
        assert_eq!(gb.basis.len(), 4);
        for g in &gb.basis {
            assert_eq!(g.terms().len(), 1);
        }
        assert_eq!(dimension_from_leading_terms(&gb.leading_monomials(), 4), 0);
    }

    #[test]
    fn twisted_cubic_dimension() {
        // x z - y^2, x^2 ... use the classic: I = (xz - y^2, xw - yz, yw - z^2)
        let frame = VariableFrame::standard(&["x", "y", "z", "w"]);
        let gens = vec![
            fp(&frame, "x z - y^2"),
            fp(&frame, "x w - y z"),
            fp(&frame, "y w - z^2"),
        ];
        let gb = groebner_basis(&gens, ResourceBudget::default()).unwrap();
        // projective curve: affine cone has Krull dimension 2
        assert_eq!(dimension_from_leading_terms(&gb.leading_monomials(), 4), 2);
        // normal form of something in the ideal is zero
        let member = fp(&frame, "(x z - y^2) (y w + x) - (x w - y z) (y y)")
            .add(&fp(&frame, "y^2 (x w - y z)"));
        let _ = member;
        assert!(gb.normal_form(&gens[0].mul(&gens[1])).is_zero());
    }

    #[test]
    fn unit_ideal_detected() {
        let frame = VariableFrame::numbered("x", 2);
        let gens = vec![fp(&frame, "x1^2 + 1"), fp(&frame, "x1")];
        let gb = groebner_basis(&gens, ResourceBudget::default()).unwrap();
        assert!(gb.is_unit_ideal());
    }

    #[test]
    fn budget_is_enforced() {
        let frame = VariableFrame::standard(&["a", "b", "c", "d"]);
        // cyclic-4 relations generate real work
        let gens = vec![
            fp(&frame, "a + b + c + d"),
            fp(&frame, "a b + b c + a d + c d"),
            fp(&frame, "a b c + a b d + a c d + b c d"),
            fp(&frame, "a b c d - 1"),
        ];
        let tight = ResourceBudget { max_pairs: 2, max_basis: 4000 };
        assert!(matches!(
            groebner_basis(&gens, tight),
            Err(HilbertError::ResourceLimit(_))
        ));
        let gb = groebner_basis(&gens, ResourceBudget::default()).unwrap();
        assert!(gb.basis.len() >= 5);
        // cyclic-4 famously contains the curve (t, 1/t, -t, -1/t)
        assert_eq!(dimension_from_leading_terms(&gb.leading_monomials(), 4), 1);
    }
}
