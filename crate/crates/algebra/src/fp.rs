//! Prime field F_p arithmetic and dense exact linear algebra mod p.
//!
//! The reduction map from Z[i] sends i to a square root of -1 mod p, so p
//! must satisfy p = 1 (mod 4). The default prime is 101 = norm(10 - i),
//! with i mapped to 10.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;

use crate::error::AlgebraError;
use crate::gaussian::GaussianRational;

/// Default modulus: the norm of the Gaussian prime 10 - i.
pub const DEFAULT_PRIME: u64 = 101;

/// A prime field context. Elements are plain `u64` residues in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
    /// Square root of -1 mod p (exists since p = 1 mod 4).
    root_of_minus_one: u64,
}

/// A single residue tagged with its modulus, for contexts that need a
/// self-describing value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeFieldElement {
    pub value: u64,
    pub p: u64,
}

impl PrimeField {
    /// Create the field, checking p = 1 (mod 4) and searching for the root
    /// of -1. Primality of small p is checked by trial division.
    pub fn new(p: u64) -> Result<Self, AlgebraError> {
        if p < 5 || p % 4 != 1 || !is_prime(p) {
            return Err(AlgebraError::BadModulus(p));
        }
        let root = (2..p)
            .find(|&r| mul_mod(r, r, p) == p - 1)
            .ok_or(AlgebraError::BadModulus(p))?;
        Ok(Self { p, root_of_minus_one: root })
    }

    pub fn default_field() -> Self {
        Self::new(DEFAULT_PRIME).expect("101 is a valid modulus")
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn root_of_minus_one(&self) -> u64 {
        self.root_of_minus_one
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p { s - self.p } else { s }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b { a - b } else { a + self.p - b }
    }

    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 { 0 } else { self.p - a }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        mul_mod(a, b, self.p)
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "inverse of zero");
        // Fermat: a^(p-2) mod p.
        self.pow(a, self.p - 2)
    }

    pub fn pow(&self, mut base: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn from_bigint(&self, v: &BigInt) -> u64 {
        let p = BigInt::from(self.p);
        let mut r = v.mod_floor(&p);
        if r.is_negative() {
            r += &p;
        }
        r.to_u64().expect("residue fits in u64")
    }

    /// Reduce an exact Gaussian rational: (a + b i)/d maps to
    /// (a + b r) * d^{-1} where r^2 = -1 mod p.
    pub fn reduce(&self, q: &GaussianRational) -> Result<u64, AlgebraError> {
        let d = self.from_bigint(q.denominator());
        if d == 0 {
            return Err(AlgebraError::DenominatorDivisibleByP {
                p: self.p,
                value: q.to_string(),
            });
        }
        let a = self.from_bigint(&q.numerator().re);
        let b = self.from_bigint(&q.numerator().im);
        let num = self.add(a, self.mul(b, self.root_of_minus_one));
        Ok(self.mul(num, self.inv(d)))
    }

    pub fn element(&self, value: u64) -> PrimeFieldElement {
        PrimeFieldElement { value: value % self.p, p: self.p }
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Dense matrix over F_p with row-major `u64` storage.
#[derive(Clone, Debug)]
pub struct FpMatrix {
    pub field: PrimeField,
    pub rows: usize,
    pub cols: usize,
    data: Vec<u64>,
}

impl FpMatrix {
    pub fn zero(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn from_rows(field: PrimeField, rows: Vec<Vec<u64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in &rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().map(|&v| v % field.modulus().max(1)));
        }
        Self { field, rows: r, cols: c, data }
    }

    pub fn at(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v % self.field.modulus();
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(self.field.clone(), self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.data[c * self.rows + r] = self.at(r, c);
            }
        }
        out
    }

    /// Exact rank by feeding rows into an echelon accumulator.
    pub fn rank(&self) -> usize {
        let mut ech = RowEchelon::new(self.field.clone(), self.cols);
        ech.absorb_rows((0..self.rows).map(|r| self.row(r).to_vec()));
        ech.rank()
    }
}

/// Streaming row-echelon accumulator over F_p.
///
/// Rows are reduced against the pivot rows already collected; a nonzero
/// remainder becomes a new normalized pivot row. Reduction uses lazy
/// modular arithmetic: entries accumulate as `a + f*b` in u64 and are only
/// reduced when the growth bound approaches 2^63. Batches of incoming rows
/// reduce in parallel; pivot insertion is sequential, so the result is
/// deterministic regardless of thread count.
pub struct RowEchelon {
    field: PrimeField,
    cols: usize,
    /// Pivot rows sorted by pivot column; entry values fully reduced and the
    /// pivot entry normalized to 1.
    rows: Vec<Vec<u64>>,
    pivot_cols: Vec<usize>,
    /// Applications of `x += f*y` allowed before a renormalization pass.
    lazy_budget: usize,
}

impl RowEchelon {
    pub fn new(field: PrimeField, cols: usize) -> Self {
        let p = field.modulus();
        // a + k * f * b stays below 2^63 while k < 2^63 / p^2.
        let lazy_budget = ((1u128 << 63) / (p as u128 * p as u128)) as usize;
        Self { field, cols, rows: Vec::new(), pivot_cols: Vec::new(), lazy_budget: lazy_budget.max(1) }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot_columns(&self) -> &[usize] {
        &self.pivot_cols
    }

    pub fn pivot_rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    /// Reduce a row in place against the current pivots; returns the column
    /// of the first surviving nonzero entry, if any.
    fn reduce_row(&self, row: &mut [u64]) -> Option<usize> {
        let p = self.field.modulus();
        let mut since_renorm = 0usize;
        for (pivot_row, &pc) in self.rows.iter().zip(&self.pivot_cols) {
            let a = row[pc] % p;
            if a == 0 {
                row[pc] = 0;
                continue;
            }
            let f = p - a; // add f * pivot_row to clear column pc
            for (x, &y) in row[pc..].iter_mut().zip(&pivot_row[pc..]) {
                *x += f * y;
            }
            since_renorm += 1;
            if since_renorm >= self.lazy_budget {
                for x in row.iter_mut() {
                    *x %= p;
                }
                since_renorm = 0;
            }
        }
        let mut lead = None;
        for x in row.iter_mut() {
            *x %= p;
        }
        for (c, &x) in row.iter().enumerate() {
            if x != 0 {
                lead = Some(c);
                break;
            }
        }
        lead
    }

    fn insert_pivot(&mut self, mut row: Vec<u64>, lead: usize) {
        let inv = self.field.inv(row[lead]);
        for x in row.iter_mut() {
            *x = self.field.mul(*x, inv);
        }
        // Keep pivot rows sorted by pivot column.
        let pos = self.pivot_cols.partition_point(|&c| c < lead);
        self.pivot_cols.insert(pos, lead);
        self.rows.insert(pos, row);
    }

    /// Absorb one row; returns true if it increased the rank.
    pub fn absorb(&mut self, mut row: Vec<u64>) -> bool {
        assert_eq!(row.len(), self.cols);
        match self.reduce_row(&mut row) {
            Some(lead) => {
                self.insert_pivot(row, lead);
                true
            }
            None => false,
        }
    }

    /// Absorb many rows with parallel batch pre-reduction.
    pub fn absorb_rows<I: IntoIterator<Item = Vec<u64>>>(&mut self, rows: I) {
        const BATCH: usize = 64;
        let mut iter = rows.into_iter();
        loop {
            let batch: Vec<Vec<u64>> = iter.by_ref().take(BATCH).collect();
            if batch.is_empty() {
                break;
            }
            let reduced: Vec<(Vec<u64>, Option<usize>)> = batch
                .into_par_iter()
                .map(|mut row| {
                    assert_eq!(row.len(), self.cols);
                    let lead = self.reduce_row(&mut row);
                    (row, lead)
                })
                .collect();
            // New pivots found in the batch may interact; resolve serially.
            for (row, lead) in reduced {
                if lead.is_some() {
                    self.absorb(row);
                }
            }
        }
    }

    /// Full reduction of a row, returning the residue (for membership tests
    /// and normal forms).
    pub fn residue(&self, mut row: Vec<u64>) -> Vec<u64> {
        assert_eq!(row.len(), self.cols);
        self.reduce_row(&mut row);
        row
    }

    /// Kernel basis of the matrix whose rows were absorbed, i.e. of the
    /// row space viewed as linear forms: solves R x = 0 for the reduced
    /// echelon rows R. Back-substitutes to fully reduced echelon form first.
    pub fn kernel_basis(&mut self) -> Vec<Vec<u64>> {
        self.back_substitute();
        let p = self.field.modulus();
        let pivot_set: std::collections::HashSet<usize> = self.pivot_cols.iter().copied().collect();
        let free_cols: Vec<usize> = (0..self.cols).filter(|c| !pivot_set.contains(c)).collect();
        let mut basis = Vec::with_capacity(free_cols.len());
        for &fc in &free_cols {
            let mut v = vec![0u64; self.cols];
            v[fc] = 1;
            for (row, &pc) in self.rows.iter().zip(&self.pivot_cols) {
                // pivot entry is 1; x_pc = -row[fc]
                v[pc] = self.field.neg(row[fc] % p);
            }
            basis.push(v);
        }
        basis
    }

    /// Reduce above pivots so rows form the reduced row echelon form.
    pub fn back_substitute(&mut self) {
        let p = self.field.modulus();
        for i in (0..self.rows.len()).rev() {
            let (head, tail) = self.rows.split_at_mut(i + 1);
            let _ = tail;
            let pc = self.pivot_cols[i];
            let lower = head[i].clone();
            for j in 0..i {
                let f = head[j][pc] % p;
                if f == 0 {
                    continue;
                }
                let f = p - f;
                for (x, &y) in head[j][pc..].iter_mut().zip(&lower[pc..]) {
                    *x = (*x + f * y) % p;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_construction() {
        let f = PrimeField::new(101).unwrap();
        assert_eq!(f.root_of_minus_one(), 10);
        assert!(PrimeField::new(7).is_err()); // 7 = 3 mod 4
        assert!(PrimeField::new(9).is_err()); // not prime
        let f13 = PrimeField::new(13).unwrap();
        assert_eq!(f13.mul(f13.root_of_minus_one(), f13.root_of_minus_one()), 12);
    }

    #[test]
    fn reduce_examples() {
        let f = PrimeField::default_field();
        // i -> 10
        assert_eq!(f.reduce(&GaussianRational::i()).unwrap(), 10);
        // 10 - i -> 0
        assert_eq!(f.reduce(&GaussianRational::from_parts(10, -1, 1)).unwrap(), 0);
        // 1/3 -> 34
        assert_eq!(f.reduce(&GaussianRational::from_parts(1, 0, 3)).unwrap(), 34);
        // denominator divisible by p
        assert!(f.reduce(&GaussianRational::from_parts(1, 0, 101)).is_err());
    }

    #[test]
    fn rank_small() {
        let f = PrimeField::default_field();
        let m = FpMatrix::from_rows(
            f.clone(),
            vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]],
        );
        assert_eq!(m.rank(), 2);
        let z = FpMatrix::zero(f, 4, 5);
        assert_eq!(z.rank(), 0);
    }

    #[test]
    fn kernel_matches_rank() {
        let f = PrimeField::default_field();
        let mut ech = RowEchelon::new(f.clone(), 4);
        ech.absorb(vec![1, 0, 2, 3]);
        ech.absorb(vec![0, 1, 1, 1]);
        let kernel = ech.kernel_basis();
        assert_eq!(kernel.len(), 2);
        for v in kernel {
            // check both rows annihilate v
            let r1 = (v[0] + 2 * v[2] + 3 * v[3]) % 101;
            let r2 = (v[1] + v[2] + v[3]) % 101;
            assert_eq!((r1, r2), (0, 0));
        }
    }
}
