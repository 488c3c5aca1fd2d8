//! Exact linear algebra over Q(i): reduced row-echelon row spaces,
//! ranks, kernels. Dimensions in play are small (at most a few hundred),
//! so plain fraction arithmetic with pivot normalization is fine.

use crate::gaussian::GaussianRational;

/// A row space over Q(i) maintained in reduced row-echelon form with
/// leading coefficients one. Two equal subspaces have identical rows, so
/// subspace equality is plain `==` on `rows()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QiRowSpace {
    cols: usize,
    rows: Vec<Vec<GaussianRational>>,
    pivots: Vec<usize>,
}

impl QiRowSpace {
    pub fn new(cols: usize) -> Self {
        Self { cols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vec<GaussianRational>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduce a vector against the space; the remainder has zeros in all
    /// pivot columns.
    pub fn residue(&self, mut v: Vec<GaussianRational>) -> Vec<GaussianRational> {
        assert_eq!(v.len(), self.cols);
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            if v[pc].is_zero() {
                continue;
            }
            let f = v[pc].clone();
            for (x, y) in v.iter_mut().zip(row) {
                *x -= &(&f * y);
            }
        }
        v
    }

    pub fn contains(&self, v: &[GaussianRational]) -> bool {
        self.residue(v.to_vec()).iter().all(|c| c.is_zero())
    }

    /// Insert a vector; returns true if the dimension grew.
    pub fn absorb(&mut self, v: Vec<GaussianRational>) -> bool {
        let v = self.residue(v);
        let lead = match v.iter().position(|c| !c.is_zero()) {
            Some(i) => i,
            None => return false,
        };
        let inv = v[lead].inv();
        let mut v: Vec<GaussianRational> = v.iter().map(|c| c * &inv).collect();
        // clear the new pivot column from existing rows
        for row in &mut self.rows {
            if !row[lead].is_zero() {
                let f = row[lead].clone();
                for (x, y) in row.iter_mut().zip(&v) {
                    *x -= &(&f * y);
                }
            }
        }
        // normalize tiny negative-zero style artifacts: nothing to do, exact.
        for c in v.iter_mut() {
            if c.is_zero() {
                *c = GaussianRational::zero();
            }
        }
        let pos = self.pivots.partition_point(|&c| c < lead);
        self.pivots.insert(pos, lead);
        self.rows.insert(pos, v);
        true
    }

    pub fn absorb_all<I: IntoIterator<Item = Vec<GaussianRational>>>(&mut self, vs: I) {
        for v in vs {
            self.absorb(v);
        }
    }
}

/// Exact rank of a dense matrix over Q(i).
pub fn rank_qi(rows: &[Vec<GaussianRational>]) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut space = QiRowSpace::new(cols);
    for r in rows {
        space.absorb(r.clone());
    }
    space.dim()
}

/// Right kernel basis of a dense matrix over Q(i): solves A x = 0.
pub fn kernel_qi(rows: &[Vec<GaussianRational>], cols: usize) -> Vec<Vec<GaussianRational>> {
    let mut space = QiRowSpace::new(cols);
    for r in rows {
        assert_eq!(r.len(), cols);
        space.absorb(r.clone());
    }
    let pivot_set: std::collections::HashSet<usize> = space.pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for fc in 0..cols {
        if pivot_set.contains(&fc) {
            continue;
        }
        let mut v = vec![GaussianRational::zero(); cols];
        v[fc] = GaussianRational::one();
        for (row, &pc) in space.rows.iter().zip(&space.pivots) {
            v[pc] = -&row[fc];
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64, d: i64) -> GaussianRational {
        GaussianRational::from_parts(a, b, d)
    }

    #[test]
    fn row_space_membership() {
        let mut s = QiRowSpace::new(3);
        assert!(s.absorb(vec![q(1, 0, 1), q(0, 1, 1), q(0, 0, 1)]));
        assert!(s.absorb(vec![q(0, 0, 1), q(2, 0, 1), q(1, 1, 1)]));
        assert!(!s.absorb(vec![q(2, 0, 1), q(2, 2, 1), q(1, 1, 1)])); // row1*2 + row2
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&[q(1, 0, 1), q(0, 1, 1), q(0, 0, 1)]));
    }

    #[test]
    fn rref_canonical() {
        // same space from different generating sets gives identical rows
        let mut a = QiRowSpace::new(3);
        a.absorb(vec![q(1, 0, 1), q(1, 0, 1), q(0, 0, 1)]);
        a.absorb(vec![q(0, 0, 1), q(1, 0, 1), q(1, 0, 1)]);
        let mut b = QiRowSpace::new(3);
        b.absorb(vec![q(2, 0, 1), q(3, 0, 1), q(1, 0, 1)]);
        b.absorb(vec![q(3, 0, 1), q(4, 0, 1), q(1, 0, 1)]);
        assert_eq!(a.rows(), b.rows());
    }

    #[test]
    fn kernel_dimensions() {
        let rows = vec![
            vec![q(1, 0, 1), q(0, 0, 1), q(1, 0, 1), q(0, 0, 1)],
            vec![q(0, 0, 1), q(1, 0, 1), q(0, 0, 1), q(1, 0, 1)],
        ];
        let k = kernel_qi(&rows, 4);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!((&v[0] + &v[2]).is_zero());
            assert!((&v[1] + &v[3]).is_zero());
        }
    }
}
