//! Monomials, variable frames and the degree-reverse-lexicographic order.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::AlgebraError;

/// An ordered set of variable names with a positive weight per variable.
/// All polynomials and representation matrices reference a frame; lengths
/// must agree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VariableFrame {
    names: Vec<String>,
    weights: Vec<u32>,
}

impl VariableFrame {
    pub fn new(names: Vec<String>, weights: Vec<u32>) -> Result<Arc<Self>, AlgebraError> {
        if names.len() != weights.len() {
            return Err(AlgebraError::FrameMismatch {
                expected: names.len(),
                got: weights.len(),
            });
        }
        let mut seen = std::collections::HashSet::new();
        for n in &names {
            if !seen.insert(n.clone()) {
                return Err(AlgebraError::DuplicateVariable(n.clone()));
            }
        }
        if weights.iter().any(|&w| w == 0) {
            return Err(AlgebraError::ZeroWeight);
        }
        Ok(Arc::new(Self { names, weights }))
    }

    /// Standard grading: all weights one.
    pub fn standard(names: &[&str]) -> Arc<Self> {
        Self::new(names.iter().map(|s| s.to_string()).collect(), vec![1; names.len()])
            .expect("valid frame")
    }

    /// Numbered family like x1..x6.
    pub fn numbered(prefix: &str, n: usize) -> Arc<Self> {
        let names: Vec<String> = (1..=n).map(|k| format!("{prefix}{k}")).collect();
        Self::new(names, vec![1; n]).expect("valid frame")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn is_standard_grading(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }
}

/// Exponent vector. Exponents are u16 with checked addition; degrees in
/// play never exceed a few dozen.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Monomial {
    exps: Vec<u16>,
}

impl Monomial {
    pub fn new(exps: Vec<u16>) -> Self {
        Self { exps }
    }

    pub fn one(nvars: usize) -> Self {
        Self { exps: vec![0; nvars] }
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        Self { exps }
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u64 {
        self.exps
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u64 * w as u64)
            .sum()
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial, AlgebraError> {
        if self.exps.len() != other.exps.len() {
            return Err(AlgebraError::FrameMismatch {
                expected: self.exps.len(),
                got: other.exps.len(),
            });
        }
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).ok_or(AlgebraError::ExponentOverflow))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Monomial { exps })
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.checked_mul(other).expect("exponent overflow")
    }

    /// Divide if possible.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = Vec::with_capacity(self.exps.len());
        for (&a, &b) in self.exps.iter().zip(&other.exps) {
            if a < b {
                return None;
            }
            exps.push(a - b);
        }
        Some(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    pub fn coprime_with(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Degree-reverse-lexicographic comparison under the given weights:
    /// higher weighted degree wins; on ties the last nonzero entry of the
    /// exponent difference decides, negative meaning greater.
    pub fn cmp_degrevlex(&self, other: &Monomial, weights: &[u32]) -> Ordering {
        let da = self.weighted_degree(weights);
        let db = other.weighted_degree(weights);
        match da.cmp(&db) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for i in (0..self.exps.len()).rev() {
            let a = self.exps[i];
            let b = other.exps[i];
            if a != b {
                // smaller trailing exponent is larger in degrevlex
                return b.cmp(&a);
            }
        }
        Ordering::Equal
    }

    pub fn display<'a>(&'a self, frame: &'a VariableFrame) -> MonomialDisplay<'a> {
        MonomialDisplay { m: self, frame }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m{:?}", self.exps)
    }
}

pub struct MonomialDisplay<'a> {
    m: &'a Monomial,
    frame: &'a VariableFrame,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", self.frame.names()[i])?;
            if e > 1 {
                write!(f, "^{}", e)?;
            }
        }
        Ok(())
    }
}

/// All monomials of exact weighted degree `d`, listed in descending
/// degrevlex order (the canonical column order of Macaulay matrices).
pub fn monomials_of_degree(frame: &VariableFrame, d: u64) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u16; frame.len()];
    gen_rec(frame.weights(), 0, d, &mut current, &mut out);
    out.sort_by(|a, b| b.cmp_degrevlex(a, frame.weights()));
    out
}

fn gen_rec(weights: &[u32], i: usize, remaining: u64, current: &mut Vec<u16>, out: &mut Vec<Monomial>) {
    if i == weights.len() {
        if remaining == 0 {
            out.push(Monomial::new(current.clone()));
        }
        return;
    }
    if i + 1 == weights.len() {
        // last variable must absorb the remainder exactly
        let w = weights[i] as u64;
        if remaining % w == 0 {
            let e = remaining / w;
            if e <= u16::MAX as u64 {
                current[i] = e as u16;
                out.push(Monomial::new(current.clone()));
                current[i] = 0;
            }
        }
        return;
    }
    let w = weights[i] as u64;
    let max_e = remaining / w;
    for e in 0..=max_e.min(u16::MAX as u64) {
        current[i] = e as u16;
        gen_rec(weights, i + 1, remaining - e * w, current, out);
    }
    current[i] = 0;
}

/// Number of monomials of total degree d in n variables (standard grading):
/// C(d + n - 1, n - 1). Used as an independent combinatorial oracle.
pub fn count_standard_monomials(nvars: u64, d: u64) -> u64 {
    // binomial(d + nvars - 1, nvars - 1)
    let n = d + nvars - 1;
    let k = (nvars - 1).min(d);
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..k {
        num *= (n - i) as u128;
        den *= (i + 1) as u128;
    }
    (num / den) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrevlex_basics() {
        let w = vec![1u32; 3];
        let x = Monomial::new(vec![1, 0, 0]);
        let y = Monomial::new(vec![0, 1, 0]);
        let z = Monomial::new(vec![0, 0, 1]);
        // x > y > z in degrevlex
        assert_eq!(x.cmp_degrevlex(&y, &w), Ordering::Greater);
        assert_eq!(y.cmp_degrevlex(&z, &w), Ordering::Greater);
        // x^2 > x*y > y^2 > x*z > y*z > z^2
        let x2 = Monomial::new(vec![2, 0, 0]);
        let xy = Monomial::new(vec![1, 1, 0]);
        let y2 = Monomial::new(vec![0, 2, 0]);
        let xz = Monomial::new(vec![1, 0, 1]);
        assert_eq!(x2.cmp_degrevlex(&xy, &w), Ordering::Greater);
        assert_eq!(xy.cmp_degrevlex(&y2, &w), Ordering::Greater);
        assert_eq!(y2.cmp_degrevlex(&xz, &w), Ordering::Greater);
    }

    #[test]
    fn monomial_counts() {
        let f = VariableFrame::numbered("x", 13);
        assert_eq!(monomials_of_degree(&f, 2).len(), 91);
        assert_eq!(monomials_of_degree(&f, 3).len(), 455);
        assert_eq!(count_standard_monomials(13, 2), 91);
        assert_eq!(count_standard_monomials(13, 3), 455);
        assert_eq!(count_standard_monomials(15, 3), 680);
    }

    #[test]
    fn weighted_monomials() {
        // weights (1,2,2,2,3,3,3,3): degree 2 -> W0^2, W1, W2, W3
        let f = VariableFrame::new(
            (0..8).map(|k| format!("W{k}")).collect(),
            vec![1, 2, 2, 2, 3, 3, 3, 3],
        )
        .unwrap();
        assert_eq!(monomials_of_degree(&f, 1).len(), 1);
        assert_eq!(monomials_of_degree(&f, 2).len(), 4);
        assert_eq!(monomials_of_degree(&f, 3).len(), 8);
        assert_eq!(monomials_of_degree(&f, 4).len(), 14);
    }

    #[test]
    fn sorted_descending() {
        let f = VariableFrame::numbered("x", 4);
        let ms = monomials_of_degree(&f, 3);
        for w in ms.windows(2) {
            assert_eq!(w[0].cmp_degrevlex(&w[1], f.weights()), Ordering::Greater);
        }
    }
}
