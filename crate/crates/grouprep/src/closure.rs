//! Representation of a matrix group by generators, and breadth-first
//! product closure with deterministic element ordering.

use std::collections::HashMap;
use std::sync::Arc;

use sha2::{Digest, Sha256};

use ballq_algebra::{parse_polynomial, SparsePolynomial, VariableFrame};

use crate::error::GroupError;
use crate::gimatrix::GiMatrix;

/// Generator matrices of a finite group acting linearly on a variable
/// frame. Convention: column j of a generator holds the image of variable
/// j expressed in the variable basis, matching the printed substitution
/// rules `v_j -> sum_i M[i][j] v_i`.
#[derive(Clone, Debug)]
pub struct MatrixRepresentation {
    pub frame: Arc<VariableFrame>,
    pub generators: Vec<GiMatrix>,
}

impl MatrixRepresentation {
    pub fn new(frame: Arc<VariableFrame>, generators: Vec<GiMatrix>) -> Result<Self, GroupError> {
        for g in &generators {
            if g.n != frame.len() {
                return Err(GroupError::SizeMismatch { expected: frame.len(), got: g.n });
            }
        }
        Ok(Self { frame, generators })
    }

    /// Build a representation from printed substitution rules: one linear
    /// expression per variable, in frame order.
    pub fn from_substitutions(
        frame: Arc<VariableFrame>,
        rules: &[Vec<&str>],
    ) -> Result<Self, GroupError> {
        let n = frame.len();
        let mut generators = Vec::with_capacity(rules.len());
        for rule in rules {
            if rule.len() != n {
                return Err(GroupError::SizeMismatch { expected: n, got: rule.len() });
            }
            let mut cols: Vec<Vec<ballq_algebra::GaussianRational>> = Vec::with_capacity(n);
            for src in rule {
                let p = parse_polynomial(&frame, src)?;
                cols.push(linear_coefficients(&p)?);
            }
            // cols[j][i] = coefficient of v_i in the image of v_j; transpose
            // into row-major entries[i][j].
            let entries: Vec<Vec<ballq_algebra::GaussianRational>> = (0..n)
                .map(|i| (0..n).map(|j| cols[j][i].clone()).collect())
                .collect();
            generators.push(GiMatrix::from_rational(&entries)?);
        }
        Self::new(frame, generators)
    }

    /// The polynomial substitution images of the variables under generator
    /// `g`. Polynomials transform contravariantly to the printed symbol
    /// action, so variable j is replaced by row j of the matrix; this makes
    /// substitution a left action of the matrix group (the transpose-free
    /// reading would fix y1 under the order-21 subgroup, contradicting the
    /// printed invariant form).
    pub fn substitution_images(&self, g: usize) -> Vec<SparsePolynomial> {
        substitution_images_of(&self.frame, &self.generators[g])
    }

    /// Restrict block-diagonal generators to a contiguous variable range.
    pub fn restrict_block(
        &self,
        range: std::ops::Range<usize>,
        frame: Arc<VariableFrame>,
    ) -> Result<Self, GroupError> {
        let k = range.len();
        if frame.len() != k {
            return Err(GroupError::SizeMismatch { expected: k, got: frame.len() });
        }
        let gens = self
            .generators
            .iter()
            .map(|g| {
                let mut m = GiMatrix::zero(k);
                m.den = g.den;
                for (r, gr) in range.clone().enumerate() {
                    for (c, gc) in range.clone().enumerate() {
                        let (a, b) = g.entry(gr, gc);
                        m.set_entry(r, c, a, b);
                    }
                }
                m
            })
            .collect();
        Self::new(frame, gens)
    }
}

/// Row-substitution images of a matrix over a frame: variable j maps to
/// `sum_i M[j][i] v_i`.
pub fn substitution_images_of(
    frame: &Arc<VariableFrame>,
    m: &GiMatrix,
) -> Vec<SparsePolynomial> {
    let n = m.n;
    (0..n)
        .map(|j| {
            let terms: Vec<_> = (0..n)
                .filter_map(|i| {
                    let c = m.entry_rational(j, i);
                    if c.is_zero() {
                        None
                    } else {
                        Some((ballq_algebra::Monomial::var(n, i), c))
                    }
                })
                .collect();
            SparsePolynomial::from_terms(frame.clone(), terms).expect("frame matches")
        })
        .collect()
}

fn linear_coefficients(
    p: &SparsePolynomial,
) -> Result<Vec<ballq_algebra::GaussianRational>, GroupError> {
    let n = p.frame().len();
    let mut coeffs = vec![ballq_algebra::GaussianRational::zero(); n];
    for (m, c) in p.terms() {
        if m.total_degree() != 1 {
            return Err(GroupError::Algebra(
                ballq_algebra::AlgebraError::Parse("substitution rule must be linear".into()),
            ));
        }
        let var = m.exponents().iter().position(|&e| e == 1).unwrap();
        coeffs[var] = c.clone();
    }
    Ok(coeffs)
}

/// The full element list of a finite matrix group, in BFS order
/// (layer by layer, then insertion order within a layer).
pub struct FiniteGroupClosure {
    pub dim: usize,
    elements: Vec<GiMatrix>,
    index: HashMap<Vec<u8>, u32>,
    generator_ids: Vec<u32>,
    inverse: Vec<u32>,
    max_abs_entry: i64,
}

impl FiniteGroupClosure {
    /// BFS product closure. `limit` bounds the element count.
    pub fn compute(rep: &MatrixRepresentation, limit: usize) -> Result<Self, GroupError> {
        let n = rep.frame.len();
        let mut elements: Vec<GiMatrix> = Vec::new();
        let mut index: HashMap<Vec<u8>, u32> = HashMap::new();
        let mut parent: Vec<(u32, u32)> = Vec::new();

        let identity = GiMatrix::identity(n);
        index.insert(identity.canonical_bytes(), 0);
        elements.push(identity);
        parent.push((0, u32::MAX));

        let mut generator_ids = Vec::new();
        let mut frontier: Vec<u32> = vec![0];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &eid in &frontier {
                for (gi, g) in rep.generators.iter().enumerate() {
                    let prod = elements[eid as usize].checked_mul(g)?;
                    let bytes = prod.canonical_bytes();
                    if index.contains_key(&bytes) {
                        continue;
                    }
                    if elements.len() >= limit {
                        return Err(GroupError::LimitExceeded(limit));
                    }
                    let id = elements.len() as u32;
                    index.insert(bytes, id);
                    elements.push(prod);
                    parent.push((eid, gi as u32));
                    next.push(id);
                }
            }
            frontier = next;
        }

        // locate generator ids (a generator may duplicate the identity)
        for g in &rep.generators {
            let id = *index
                .get(&g.canonical_bytes())
                .expect("generators are in their own closure");
            generator_ids.push(id);
        }

        // generator inverses by order search, then element inverses along
        // BFS parents: (p*g)^-1 = g^-1 * p^-1.
        let mut gen_inverse: Vec<GiMatrix> = Vec::new();
        for g in &rep.generators {
            let mut pow = g.clone();
            let mut prev = GiMatrix::identity(n);
            let mut steps = 0usize;
            while !pow.is_identity() {
                prev = pow.clone();
                pow = pow.checked_mul(g)?;
                steps += 1;
                if steps > elements.len() {
                    return Err(GroupError::SingularGenerator);
                }
            }
            gen_inverse.push(prev);
        }
        let mut inverse = vec![0u32; elements.len()];
        for id in 1..elements.len() {
            let (pid, gi) = parent[id];
            let inv_parent = &elements[inverse[pid as usize] as usize];
            let inv = gen_inverse[gi as usize].checked_mul(inv_parent)?;
            inverse[id] = *index
                .get(&inv.canonical_bytes())
                .expect("group closed under inverses");
        }

        let max_abs_entry = elements.iter().map(|m| m.max_abs_entry()).max().unwrap_or(1);
        Ok(Self { dim: n, elements, index, generator_ids, inverse, max_abs_entry })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, id: u32) -> &GiMatrix {
        &self.elements[id as usize]
    }

    pub fn elements(&self) -> &[GiMatrix] {
        &self.elements
    }

    pub fn id_of(&self, m: &GiMatrix) -> Option<u32> {
        self.index.get(&m.canonical_bytes()).copied()
    }

    pub fn generator_ids(&self) -> &[u32] {
        &self.generator_ids
    }

    pub fn inverse_id(&self, id: u32) -> u32 {
        self.inverse[id as usize]
    }

    pub fn max_abs_entry(&self) -> i64 {
        self.max_abs_entry
    }

    /// Multiply two elements by id.
    pub fn multiply(&self, a: u32, b: u32) -> Result<u32, GroupError> {
        let prod = self.elements[a as usize].checked_mul(&self.elements[b as usize])?;
        Ok(*self
            .index
            .get(&prod.canonical_bytes())
            .expect("group closed under products"))
    }

    /// Multiplicative order of an element.
    pub fn element_order(&self, id: u32) -> Result<u32, GroupError> {
        let mut cur = id;
        let mut k = 1;
        while cur != 0 {
            cur = self.multiply(cur, id)?;
            k += 1;
        }
        Ok(k)
    }

    /// Content hash of the whole element list (cache key material).
    pub fn content_hash(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update((self.dim as u64).to_le_bytes());
        hasher.update((self.elements.len() as u64).to_le_bytes());
        for e in &self.elements {
            hasher.update(e.canonical_bytes());
        }
        let digest = hasher.finalize();
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }

    /// Serialize for the closure cache: header line, inverse table, then
    /// raw element bytes.
    pub fn to_cache_bytes(&self) -> Vec<u8> {
        let header = format!(
            "ballq-closure v1 dim={} count={} gens={} hash={}\n",
            self.dim,
            self.elements.len(),
            self.generator_ids
                .iter()
                .map(|g| g.to_string())
                .collect::<Vec<_>>()
                .join(","),
            self.content_hash()
        );
        let mut out = header.into_bytes();
        for &inv in &self.inverse {
            out.extend_from_slice(&inv.to_le_bytes());
        }
        for e in &self.elements {
            out.extend_from_slice(&e.canonical_bytes());
        }
        out
    }

    pub fn from_cache_bytes(bytes: &[u8]) -> Result<Self, GroupError> {
        let newline = bytes
            .iter()
            .position(|&b| b == b'\n')
            .ok_or_else(|| GroupError::BadCache("missing header".into()))?;
        let header = std::str::from_utf8(&bytes[..newline])
            .map_err(|_| GroupError::BadCache("bad header".into()))?;
        let mut dim = 0usize;
        let mut count = 0usize;
        let mut gens: Vec<u32> = Vec::new();
        let mut hash = String::new();
        for field in header.split_whitespace().skip(2) {
            if let Some(v) = field.strip_prefix("dim=") {
                dim = v.parse().map_err(|_| GroupError::BadCache("bad dim".into()))?;
            } else if let Some(v) = field.strip_prefix("count=") {
                count = v.parse().map_err(|_| GroupError::BadCache("bad count".into()))?;
            } else if let Some(v) = field.strip_prefix("gens=") {
                gens = v
                    .split(',')
                    .filter(|s| !s.is_empty())
                    .map(|s| s.parse().map_err(|_| GroupError::BadCache("bad gens".into())))
                    .collect::<Result<_, _>>()?;
            } else if let Some(v) = field.strip_prefix("hash=") {
                hash = v.to_string();
            }
        }
        let body = &bytes[newline + 1..];
        let elem_len = 8 * (1 + 2 * dim * dim);
        if body.len() != count * (4 + elem_len) {
            return Err(GroupError::BadCache("body length mismatch".into()));
        }
        let (inv_bytes, elem_bytes) = body.split_at(4 * count);
        let inverse: Vec<u32> = inv_bytes
            .chunks_exact(4)
            .map(|c| u32::from_le_bytes(c.try_into().unwrap()))
            .collect();
        if inverse.iter().any(|&v| v as usize >= count) {
            return Err(GroupError::BadCache("inverse id out of range".into()));
        }
        let mut elements = Vec::with_capacity(count);
        let mut index = HashMap::with_capacity(count);
        for k in 0..count {
            let m =
                GiMatrix::from_canonical_bytes(dim, &elem_bytes[k * elem_len..(k + 1) * elem_len])?;
            index.insert(m.canonical_bytes(), k as u32);
            elements.push(m);
        }
        let max_abs_entry = elements.iter().map(|m| m.max_abs_entry()).max().unwrap_or(1);
        let closure = Self {
            dim,
            elements,
            index,
            generator_ids: gens,
            inverse,
            max_abs_entry,
        };
        if closure.content_hash() != hash {
            return Err(GroupError::BadCache("content hash mismatch".into()));
        }
        Ok(closure)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic4() -> MatrixRepresentation {
        // multiplication by i on one variable: order 4
        let frame = VariableFrame::numbered("x", 1);
        MatrixRepresentation::from_substitutions(frame, &[vec!["i x1"]]).unwrap()
    }

    #[test]
    fn closure_of_cyclic_group() {
        let rep = cyclic4();
        let g = FiniteGroupClosure::compute(&rep, 100).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.element_order(g.generator_ids()[0]).unwrap(), 4);
        // inverse of i is -i = i^3
        let gid = g.generator_ids()[0];
        let inv = g.inverse_id(gid);
        assert_eq!(g.multiply(gid, inv).unwrap(), 0);
    }

    #[test]
    fn identity_only() {
        let frame = VariableFrame::numbered("x", 2);
        let rep =
            MatrixRepresentation::from_substitutions(frame, &[vec!["x1", "x2"]]).unwrap();
        let g = FiniteGroupClosure::compute(&rep, 10).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn limit_exceeded() {
        let rep = cyclic4();
        assert!(matches!(
            FiniteGroupClosure::compute(&rep, 3),
            Err(GroupError::LimitExceeded(3))
        ));
    }

    #[test]
    fn cache_round_trip() {
        let rep = cyclic4();
        let g = FiniteGroupClosure::compute(&rep, 100).unwrap();
        let bytes = g.to_cache_bytes();
        let back = FiniteGroupClosure::from_cache_bytes(&bytes).unwrap();
        assert_eq!(back.order(), 4);
        assert_eq!(back.content_hash(), g.content_hash());
        for id in 0..4u32 {
            assert_eq!(back.multiply(id, back.inverse_id(id)).unwrap(), 0);
        }
    }

    #[test]
    fn closure_independent_of_generator_order() {
        let frame = VariableFrame::numbered("x", 2);
        let a = vec!["x2", "x1"];
        let b = vec!["-x1", "x2"];
        let r1 = MatrixRepresentation::from_substitutions(frame.clone(), &[a.clone(), b.clone()])
            .unwrap();
        let r2 = MatrixRepresentation::from_substitutions(frame, &[b, a]).unwrap();
        let g1 = FiniteGroupClosure::compute(&r1, 100).unwrap();
        let g2 = FiniteGroupClosure::compute(&r2, 100).unwrap();
        let mut s1: Vec<Vec<u8>> = g1.elements().iter().map(|m| m.canonical_bytes()).collect();
        let mut s2: Vec<Vec<u8>> = g2.elements().iter().map(|m| m.canonical_bytes()).collect();
        s1.sort();
        s2.sort();
        assert_eq!(s1, s2);
    }
}
