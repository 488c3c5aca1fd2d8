//! Sparse multivariate polynomials over Q(i) and over F_p.
//!
//! Terms are kept sorted in descending degrevlex order with no stored zero
//! coefficients, so equal polynomials have identical representations.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::AlgebraError;
use crate::fp::PrimeField;
use crate::gaussian::GaussianRational;
use crate::monomial::{Monomial, VariableFrame};

/// Polynomial over Q(i) attached to a variable frame.
#[derive(Clone, PartialEq, Eq)]
pub struct SparsePolynomial {
    frame: Arc<VariableFrame>,
    /// Sorted descending in degrevlex; coefficients nonzero.
    terms: Vec<(Monomial, GaussianRational)>,
}

impl SparsePolynomial {
    pub fn zero(frame: Arc<VariableFrame>) -> Self {
        Self { frame, terms: Vec::new() }
    }

    pub fn from_terms(
        frame: Arc<VariableFrame>,
        terms: Vec<(Monomial, GaussianRational)>,
    ) -> Result<Self, AlgebraError> {
        for (m, _) in &terms {
            if m.nvars() != frame.len() {
                return Err(AlgebraError::FrameMismatch {
                    expected: frame.len(),
                    got: m.nvars(),
                });
            }
        }
        let mut p = Self { frame, terms };
        p.normalize();
        Ok(p)
    }

    pub fn constant(frame: Arc<VariableFrame>, c: GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero(frame);
        }
        let one = Monomial::one(frame.len());
        Self { frame, terms: vec![(one, c)] }
    }

    pub fn variable(frame: Arc<VariableFrame>, index: usize) -> Self {
        let m = Monomial::var(frame.len(), index);
        Self { frame, terms: vec![(m, GaussianRational::one())] }
    }

    pub fn frame(&self) -> &Arc<VariableFrame> {
        &self.frame
    }

    pub fn terms(&self) -> &[(Monomial, GaussianRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading_term(&self) -> Option<&(Monomial, GaussianRational)> {
        self.terms.first()
    }

    fn normalize(&mut self) {
        let weights = self.frame.weights().to_vec();
        self.terms
            .sort_by(|a, b| b.0.cmp_degrevlex(&a.0, &weights));
        let mut out: Vec<(Monomial, GaussianRational)> = Vec::with_capacity(self.terms.len());
        for (m, c) in self.terms.drain(..) {
            if let Some(last) = out.last_mut() {
                if last.0 == m {
                    last.1 += &c;
                    continue;
                }
            }
            out.push((m, c));
        }
        out.retain(|(_, c)| !c.is_zero());
        self.terms = out;
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.frame, other.frame, "frame mismatch");
        let weights = self.frame.weights();
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match ma.cmp_degrevlex(mb, weights) {
                Ordering::Greater => {
                    terms.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    terms.push((mb.clone(), cb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ca + cb;
                    if !c.is_zero() {
                        terms.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend_from_slice(&self.terms[i..]);
        terms.extend(other.terms[j..].iter().cloned());
        Self { frame: self.frame.clone(), terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            frame: self.frame.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.frame.clone());
        }
        Self {
            frame: self.frame.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.frame, other.frame, "frame mismatch");
        let mut acc: HashMap<Monomial, GaussianRational> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.entry(m) {
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        *e.get_mut() += &c;
                    }
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                }
            }
        }
        let mut p = Self {
            frame: self.frame.clone(),
            terms: acc.into_iter().collect(),
        };
        p.normalize();
        p
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(self.frame.clone(), GaussianRational::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// The common weighted degree if homogeneous, None for 0 or mixed.
    pub fn homogeneous_degree(&self) -> Option<u64> {
        let weights = self.frame.weights();
        let mut deg = None;
        for (m, _) in &self.terms {
            let d = m.weighted_degree(weights);
            match deg {
                None => deg = Some(d),
                Some(existing) if existing != d => return None,
                _ => {}
            }
        }
        deg
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Exact evaluation at a point over Q(i).
    pub fn evaluate(&self, point: &[GaussianRational]) -> Result<GaussianRational, AlgebraError> {
        if point.len() != self.frame.len() {
            return Err(AlgebraError::FrameMismatch {
                expected: self.frame.len(),
                got: point.len(),
            });
        }
        let mut acc = GaussianRational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    v *= &point[i];
                }
            }
            acc += &v;
        }
        Ok(acc)
    }

    /// Substitute each variable by the corresponding polynomial. Used for
    /// linear group actions on polynomials.
    pub fn substitute(&self, images: &[SparsePolynomial]) -> Result<SparsePolynomial, AlgebraError> {
        if images.len() != self.frame.len() {
            return Err(AlgebraError::FrameMismatch {
                expected: self.frame.len(),
                got: images.len(),
            });
        }
        let target = images
            .first()
            .map(|p| p.frame.clone())
            .unwrap_or_else(|| self.frame.clone());
        let mut acc = SparsePolynomial::zero(target.clone());
        for (m, c) in &self.terms {
            let mut term = SparsePolynomial::constant(target.clone(), c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    term = term.mul(&images[i].pow(e as u32));
                }
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// Reduce every coefficient mod p. Fails if a denominator vanishes mod p.
    pub fn reduce_mod(&self, field: &PrimeField) -> Result<FpPolynomial, AlgebraError> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let r = field.reduce(c)?;
            if r != 0 {
                terms.push((m.clone(), r));
            }
        }
        Ok(FpPolynomial {
            frame: self.frame.clone(),
            field: field.clone(),
            terms,
        })
    }

    /// Dense coefficient vector with respect to a monomial basis (the basis
    /// must contain every monomial of the polynomial).
    pub fn coefficient_vector(
        &self,
        basis_index: &HashMap<Monomial, usize>,
        len: usize,
    ) -> Result<Vec<GaussianRational>, AlgebraError> {
        let mut v = vec![GaussianRational::zero(); len];
        for (m, c) in &self.terms {
            let idx = basis_index
                .get(m)
                .ok_or(AlgebraError::MonomialOutsideBasis)?;
            v[*idx] = c.clone();
        }
        Ok(v)
    }

    pub fn from_coefficient_vector(
        frame: Arc<VariableFrame>,
        basis: &[Monomial],
        coeffs: &[GaussianRational],
    ) -> Self {
        let terms: Vec<(Monomial, GaussianRational)> = basis
            .iter()
            .zip(coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        Self::from_terms(frame, terms).expect("basis monomials match frame")
    }
}

impl fmt::Debug for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{}", c)?;
            } else if c.is_one() {
                write!(f, "{}", m.display(&self.frame))?;
            } else {
                write!(f, "({})*{}", c, m.display(&self.frame))?;
            }
        }
        Ok(())
    }
}

/// Polynomial over F_p. Same term layout as `SparsePolynomial`.
#[derive(Clone, PartialEq, Eq)]
pub struct FpPolynomial {
    frame: Arc<VariableFrame>,
    field: PrimeField,
    terms: Vec<(Monomial, u64)>,
}

impl FpPolynomial {
    pub fn zero(frame: Arc<VariableFrame>, field: PrimeField) -> Self {
        Self { frame, field, terms: Vec::new() }
    }

    pub fn from_terms(
        frame: Arc<VariableFrame>,
        field: PrimeField,
        terms: Vec<(Monomial, u64)>,
    ) -> Self {
        let mut p = Self { frame, field, terms };
        p.normalize();
        p
    }

    pub fn frame(&self) -> &Arc<VariableFrame> {
        &self.frame
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn terms(&self) -> &[(Monomial, u64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&(Monomial, u64)> {
        self.terms.first()
    }

    fn normalize(&mut self) {
        let p = self.field.modulus();
        let weights = self.frame.weights().to_vec();
        for t in &mut self.terms {
            t.1 %= p;
        }
        self.terms
            .sort_by(|a, b| b.0.cmp_degrevlex(&a.0, &weights));
        let mut out: Vec<(Monomial, u64)> = Vec::with_capacity(self.terms.len());
        for (m, c) in self.terms.drain(..) {
            if let Some(last) = out.last_mut() {
                if last.0 == m {
                    last.1 = self.field.add(last.1, c);
                    continue;
                }
            }
            out.push((m, c));
        }
        out.retain(|(_, c)| *c != 0);
        self.terms = out;
    }

    pub fn homogeneous_degree(&self) -> Option<u64> {
        let weights = self.frame.weights();
        let mut deg = None;
        for (m, _) in &self.terms {
            let d = m.weighted_degree(weights);
            match deg {
                None => deg = Some(d),
                Some(existing) if existing != d => return None,
                _ => {}
            }
        }
        deg
    }

    pub fn scale(&self, c: u64) -> Self {
        let c = c % self.field.modulus();
        if c == 0 {
            return Self::zero(self.frame.clone(), self.field.clone());
        }
        Self {
            frame: self.frame.clone(),
            field: self.field.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), self.field.mul(*k, c)))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.frame, other.frame, "frame mismatch");
        let weights = self.frame.weights();
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match ma.cmp_degrevlex(mb, weights) {
                Ordering::Greater => {
                    terms.push((ma.clone(), *ca));
                    i += 1;
                }
                Ordering::Less => {
                    terms.push((mb.clone(), *cb));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = self.field.add(*ca, *cb);
                    if c != 0 {
                        terms.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend_from_slice(&self.terms[i..]);
        terms.extend(other.terms[j..].iter().cloned());
        Self { frame: self.frame.clone(), field: self.field.clone(), terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(self.field.modulus() - 1))
    }

    /// self - c * m * other, the Groebner reduction step.
    pub fn sub_mul_term(&self, c: u64, m: &Monomial, other: &Self) -> Self {
        let shifted = Self {
            frame: other.frame.clone(),
            field: other.field.clone(),
            terms: other
                .terms
                .iter()
                .map(|(mm, cc)| (mm.mul(m), self.field.mul(*cc, c)))
                .collect(),
        };
        self.sub(&shifted)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut acc: HashMap<Monomial, u64> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = self.field.mul(*ca, *cb);
                let e = acc.entry(m).or_insert(0);
                *e = self.field.add(*e, c);
            }
        }
        Self::from_terms(
            self.frame.clone(),
            self.field.clone(),
            acc.into_iter().collect(),
        )
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Self {
            frame: self.frame.clone(),
            field: self.field.clone(),
            terms: self.terms.iter().map(|(mm, c)| (mm.mul(m), *c)).collect(),
        }
    }

    pub fn evaluate(&self, point: &[u64]) -> u64 {
        let mut acc = 0u64;
        for (m, c) in &self.terms {
            let mut v = *c;
            for (i, &e) in m.exponents().iter().enumerate() {
                v = self.field.mul(v, self.field.pow(point[i], e as u64));
            }
            acc = self.field.add(acc, v);
        }
        acc
    }

    /// Normalize the leading coefficient to one.
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => self.scale(self.field.inv(*c)),
        }
    }
}

impl fmt::Debug for FpPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}*{}", c, m.display(&self.frame))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    #[test]
    fn arithmetic_and_normal_form() {
        let f = VariableFrame::numbered("x", 3);
        let p = parse_polynomial(&f, "x1^2 + 2*x2*x3 - x1^2").unwrap();
        let q = parse_polynomial(&f, "2*x2*x3").unwrap();
        assert_eq!(p, q);
        let prod = parse_polynomial(&f, "(x1 + x2)*(x1 - x2)").unwrap();
        let expect = parse_polynomial(&f, "x1^2 - x2^2").unwrap();
        assert_eq!(prod, expect);
    }

    #[test]
    fn evaluate_homogeneous_at_zero() {
        let f = VariableFrame::numbered("x", 3);
        let p = parse_polynomial(&f, "x1^2 + (3+i)*x2*x3").unwrap();
        let zero = vec![GaussianRational::zero(); 3];
        assert!(p.evaluate(&zero).unwrap().is_zero());
        assert_eq!(p.homogeneous_degree(), Some(2));
    }

    #[test]
    fn substitution_is_ring_hom() {
        let f = VariableFrame::numbered("x", 2);
        let p = parse_polynomial(&f, "x1^2 + x2").unwrap();
        let q = parse_polynomial(&f, "x1*x2 - 1").unwrap();
        let images = vec![
            parse_polynomial(&f, "x1 + x2").unwrap(),
            parse_polynomial(&f, "i*x1").unwrap(),
        ];
        let lhs = p.mul(&q).substitute(&images).unwrap();
        let rhs = p.substitute(&images).unwrap().mul(&q.substitute(&images).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn reduce_mod_examples() {
        let frame = VariableFrame::new(
            vec!["x1".into(), "y1".into()],
            vec![1, 1],
        )
        .unwrap();
        let field = PrimeField::default_field();
        // x1^2 + i*y1 -> x1^2 + 10*y1 over F_101 (not homogeneous; fine here)
        let p = parse_polynomial(&frame, "x1^2 + i*y1").unwrap();
        let r = p.reduce_mod(&field).unwrap();
        let terms: Vec<u64> = r.terms().iter().map(|t| t.1).collect();
        assert_eq!(terms, vec![1, 10]);
        // (10 - i)*x1 -> 0
        let p = parse_polynomial(&frame, "(10-i)*x1").unwrap();
        assert!(p.reduce_mod(&field).unwrap().is_zero());
        // (1/3)*x1 -> 34*x1
        let p = parse_polynomial(&frame, "(1/3)*x1").unwrap();
        let r = p.reduce_mod(&field).unwrap();
        assert_eq!(r.terms()[0].1, 34);
    }
}
