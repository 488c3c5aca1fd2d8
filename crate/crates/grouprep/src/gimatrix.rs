//! Compact exact matrices over Q(i): Gaussian-integer entries in i64 with
//! a common positive denominator, content-normalized. All arithmetic is
//! overflow-checked; the groups in scope keep entries tiny.

use num_integer::Integer;
use num_traits::ToPrimitive;

use ballq_algebra::{GaussianInt, GaussianRational};

use crate::error::GroupError;

/// Square matrix (1/den) * (re + i*im), row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GiMatrix {
    pub n: usize,
    pub den: i64,
    /// Interleaved (re, im) pairs, row-major: entry (r, c) at 2*(r*n + c).
    pub data: Vec<i64>,
}

impl GiMatrix {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![0i64; 2 * n * n];
        for k in 0..n {
            data[2 * (k * n + k)] = 1;
        }
        Self { n, den: 1, data }
    }

    pub fn zero(n: usize) -> Self {
        Self { n, den: 1, data: vec![0; 2 * n * n] }
    }

    #[inline]
    pub fn entry(&self, r: usize, c: usize) -> (i64, i64) {
        let k = 2 * (r * self.n + c);
        (self.data[k], self.data[k + 1])
    }

    #[inline]
    pub fn set_entry(&mut self, r: usize, c: usize, re: i64, im: i64) {
        let k = 2 * (r * self.n + c);
        self.data[k] = re;
        self.data[k + 1] = im;
    }

    pub fn entry_rational(&self, r: usize, c: usize) -> GaussianRational {
        let (re, im) = self.entry(r, c);
        GaussianRational::from_parts(re, im, self.den)
    }

    /// Build from exact rational entries; clears to a common denominator.
    pub fn from_rational(entries: &[Vec<GaussianRational>]) -> Result<Self, GroupError> {
        let n = entries.len();
        let mut den = num_bigint::BigInt::from(1);
        for row in entries {
            if row.len() != n {
                return Err(GroupError::SizeMismatch { expected: n, got: row.len() });
            }
            for e in row {
                den = den.lcm(e.denominator());
            }
        }
        let mut m = Self::zero(n);
        m.den = den.to_i64().ok_or(GroupError::Overflow)?;
        for (r, row) in entries.iter().enumerate() {
            for (c, e) in row.iter().enumerate() {
                let scale = &den / e.denominator();
                let re = (&e.numerator().re * &scale)
                    .to_i64()
                    .ok_or(GroupError::Overflow)?;
                let im = (&e.numerator().im * &scale)
                    .to_i64()
                    .ok_or(GroupError::Overflow)?;
                m.set_entry(r, c, re, im);
            }
        }
        m.normalize();
        Ok(m)
    }

    /// Divide out the gcd of all entries and the denominator.
    fn normalize(&mut self) {
        if self.den < 0 {
            self.den = -self.den;
            for v in self.data.iter_mut() {
                *v = -*v;
            }
        }
        if self.den == 1 {
            return;
        }
        let mut g = self.den;
        for &v in &self.data {
            g = g.gcd(&v);
            if g == 1 {
                return;
            }
        }
        self.den /= g;
        for v in self.data.iter_mut() {
            *v /= g;
        }
    }

    pub fn checked_mul(&self, rhs: &GiMatrix) -> Result<GiMatrix, GroupError> {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = GiMatrix::zero(n);
        out.den = self.den.checked_mul(rhs.den).ok_or(GroupError::Overflow)?;
        for r in 0..n {
            for c in 0..n {
                let mut acc_re: i64 = 0;
                let mut acc_im: i64 = 0;
                for k in 0..n {
                    let (a, b) = self.entry(r, k);
                    let (x, y) = rhs.entry(k, c);
                    if (a | b) == 0 || (x | y) == 0 {
                        continue;
                    }
                    let re = a
                        .checked_mul(x)
                        .and_then(|p| b.checked_mul(y).map(|q| (p, q)))
                        .and_then(|(p, q)| p.checked_sub(q))
                        .ok_or(GroupError::Overflow)?;
                    let im = a
                        .checked_mul(y)
                        .and_then(|p| b.checked_mul(x).map(|q| (p, q)))
                        .and_then(|(p, q)| p.checked_add(q))
                        .ok_or(GroupError::Overflow)?;
                    acc_re = acc_re.checked_add(re).ok_or(GroupError::Overflow)?;
                    acc_im = acc_im.checked_add(im).ok_or(GroupError::Overflow)?;
                }
                out.set_entry(r, c, acc_re, acc_im);
            }
        }
        out.normalize();
        Ok(out)
    }

    /// Trace of a contiguous diagonal block.
    pub fn block_trace(&self, range: std::ops::Range<usize>) -> GaussianRational {
        let mut re: i64 = 0;
        let mut im: i64 = 0;
        for k in range {
            let (a, b) = self.entry(k, k);
            re += a;
            im += b;
        }
        GaussianRational::from_parts(re, im, self.den)
    }

    pub fn is_identity(&self) -> bool {
        self.den == 1 && *self == Self::identity(self.n)
    }

    /// Canonical byte serialization (den then interleaved entries, LE).
    pub fn canonical_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(8 * (1 + self.data.len()));
        out.extend_from_slice(&self.den.to_le_bytes());
        for v in &self.data {
            out.extend_from_slice(&v.to_le_bytes());
        }
        out
    }

    pub fn from_canonical_bytes(n: usize, bytes: &[u8]) -> Result<Self, GroupError> {
        let expect = 8 * (1 + 2 * n * n);
        if bytes.len() != expect {
            return Err(GroupError::BadCache(format!(
                "element byte length {} != {}",
                bytes.len(),
                expect
            )));
        }
        let mut vals = bytes
            .chunks_exact(8)
            .map(|c| i64::from_le_bytes(c.try_into().unwrap()));
        let den = vals.next().unwrap();
        let data: Vec<i64> = vals.collect();
        Ok(Self { n, den, data })
    }

    pub fn max_abs_entry(&self) -> i64 {
        self.data.iter().map(|v| v.abs()).max().unwrap_or(0).max(self.den)
    }

    /// Exact Gaussian-rational rows, for interop with the algebra layer.
    pub fn to_rational_rows(&self) -> Vec<Vec<GaussianRational>> {
        (0..self.n)
            .map(|r| (0..self.n).map(|c| self.entry_rational(r, c)).collect())
            .collect()
    }

    pub fn to_gaussian_int_rows(&self) -> Option<Vec<Vec<GaussianInt>>> {
        if self.den != 1 {
            return None;
        }
        Some(
            (0..self.n)
                .map(|r| {
                    (0..self.n)
                        .map(|c| {
                            let (a, b) = self.entry(r, c);
                            GaussianInt::from_i64(a, b)
                        })
                        .collect()
                })
                .collect(),
        )
    }
}

impl std::fmt::Debug for GiMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "GiMatrix({}x{}, den={})", self.n, self.n, self.den)?;
        for r in 0..self.n {
            let row: Vec<String> = (0..self.n)
                .map(|c| {
                    let (a, b) = self.entry(r, c);
                    format!("{a}{b:+}i")
                })
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiply_and_normalize() {
        let mut a = GiMatrix::identity(2);
        a.set_entry(0, 1, 0, 1); // [[1, i], [0, 1]]
        let b = a.checked_mul(&a).unwrap();
        assert_eq!(b.entry(0, 1), (0, 2));
        let mut half = GiMatrix::identity(2);
        half.den = 2;
        half.data.iter_mut().for_each(|v| *v *= 2);
        // content normalization shrinks back to identity only through from_rational
        let r = GiMatrix::from_rational(&vec![
            vec![GaussianRational::from_parts(1, 0, 2), GaussianRational::zero()],
            vec![GaussianRational::zero(), GaussianRational::from_parts(1, 0, 2)],
        ])
        .unwrap();
        let two = GiMatrix::from_rational(&vec![
            vec![GaussianRational::from_int(2), GaussianRational::zero()],
            vec![GaussianRational::zero(), GaussianRational::from_int(2)],
        ])
        .unwrap();
        assert!(r.checked_mul(&two).unwrap().is_identity());
    }

    #[test]
    fn canonical_bytes_round_trip() {
        let mut a = GiMatrix::identity(3);
        a.set_entry(1, 2, -5, 7);
        let bytes = a.canonical_bytes();
        let back = GiMatrix::from_canonical_bytes(3, &bytes).unwrap();
        assert_eq!(a, back);
    }
}
