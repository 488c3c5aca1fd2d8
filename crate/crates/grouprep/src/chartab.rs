//! The character table of U3(3), its integrity checks, alignment of
//! computed conjugacy classes to table columns, and character arithmetic
//! (inner products, decompositions, symmetric powers).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use ballq_algebra::GaussianRational;

use crate::classes::ConjugacyClassData;
use crate::closure::FiniteGroupClosure;
use crate::error::GroupError;
use crate::qisqrt7::QiSqrt7;

/// Irreducible character values of a finite group at its conjugacy
/// classes, with class labels and element orders per column.
#[derive(Clone)]
pub struct CharacterTable {
    pub group_order: u64,
    pub labels: Vec<&'static str>,
    pub column_orders: Vec<u32>,
    /// values[row][column]
    pub values: Vec<Vec<QiSqrt7>>,
}

fn int(v: i64) -> QiSqrt7 {
    QiSqrt7::from_int(v)
}

fn gauss(re: i64, im: i64) -> QiSqrt7 {
    QiSqrt7::from_gaussian(re, im)
}

/// The character table of U3(3), order 6048, 14 classes. Constants:
/// A = (1 - i sqrt7)/2, B = -1-2i, C = -3-2i, D = -4i, E = -1-i, F = -i.
pub fn u33_character_table() -> CharacterTable {
    let a = QiSqrt7::from_isqrt7_part(1, -1, 2);
    let ab = a.conj();
    let b = gauss(-1, -2);
    let bb = b.conj();
    let c = gauss(-3, -2);
    let cb = c.conj();
    let d = gauss(0, -4);
    let db = d.conj();
    let e = gauss(-1, -1);
    let eb = e.conj();
    let f = gauss(0, -1);
    let fb = f.conj();

    let values = vec![
        vec![int(1); 14],
        vec![int(6), int(-1), int(-1), int(-2), int(-3), int(-2), int(-2), int(1), int(1), int(1), int(0), int(0), int(2), int(0)],
        vec![int(7), int(0), int(0), int(-1), int(-2), int(3), int(3), int(2), int(0), int(0), int(-1), int(-1), int(-1), int(1)],
        vec![int(7), int(0), int(0), int(3), int(-2), b.clone(), bb.clone(), int(0), e.clone(), eb.clone(), f.clone(), fb.clone(), int(1), int(1)],
        vec![int(7), int(0), int(0), int(3), int(-2), bb, b, int(0), eb, e, fb.clone(), f.clone(), int(1), int(1)],
        vec![int(14), int(0), int(0), int(-2), int(5), int(2), int(2), int(1), int(-1), int(-1), int(0), int(0), int(2), int(-1)],
        vec![int(21), int(0), int(0), int(5), int(3), int(1), int(1), int(-1), int(1), int(1), int(-1), int(-1), int(1), int(0)],
        vec![int(21), int(0), int(0), int(1), int(3), c.clone(), cb.clone(), int(1), f.clone(), fb.clone(), fb.clone(), f.clone(), int(-1), int(0)],
        vec![int(21), int(0), int(0), int(1), int(3), cb, c, int(1), fb.clone(), f.clone(), f.clone(), fb.clone(), int(-1), int(0)],
        vec![int(27), int(-1), int(-1), int(3), int(0), int(3), int(3), int(0), int(0), int(0), int(1), int(1), int(-1), int(0)],
        vec![int(28), int(0), int(0), int(-4), int(1), d.clone(), db.clone(), int(-1), fb.clone(), f.clone(), int(0), int(0), int(0), int(1)],
        vec![int(28), int(0), int(0), int(-4), int(1), db, d, int(-1), f, fb, int(0), int(0), int(0), int(1)],
        vec![int(32), a.clone(), ab.clone(), int(0), int(-4), int(0), int(0), int(0), int(0), int(0), int(0), int(0), int(0), int(-1)],
        vec![int(32), ab, a, int(0), int(-4), int(0), int(0), int(0), int(0), int(0), int(0), int(0), int(0), int(-1)],
    ];

    CharacterTable {
        group_order: 6048,
        labels: vec!["1a", "7a", "7b", "2a", "3a", "4a", "4b", "6a", "12a", "12b", "8a", "8b", "4c", "3b"],
        column_orders: vec![1, 7, 7, 2, 3, 4, 4, 6, 12, 12, 8, 8, 4, 3],
        values,
    }
}

impl CharacterTable {
    pub fn num_rows(&self) -> usize {
        self.values.len()
    }

    pub fn num_columns(&self) -> usize {
        self.labels.len()
    }

    pub fn row(&self, r: usize) -> &[QiSqrt7] {
        &self.values[r]
    }

    pub fn degree(&self, r: usize) -> u64 {
        self.values[r][0]
            .as_non_negative_integer()
            .expect("degrees are positive integers")
    }

    /// Class sizes from column orthogonality: the centralizer order of a
    /// class is the sum of |chi(c)|^2 over rows, and size = |G|/|C|.
    pub fn class_sizes(&self) -> Result<Vec<u64>, GroupError> {
        let mut sizes = Vec::with_capacity(self.num_columns());
        for c in 0..self.num_columns() {
            let mut cent = QiSqrt7::zero();
            for r in 0..self.num_rows() {
                let v = &self.values[r][c];
                cent = &cent + &(v * &v.conj());
            }
            let cent = cent
                .as_non_negative_integer()
                .ok_or_else(|| GroupError::ClassMismatch("centralizer order not integral".into()))?;
            if cent == 0 || self.group_order % cent != 0 {
                return Err(GroupError::ClassMismatch("centralizer does not divide |G|".into()));
            }
            sizes.push(self.group_order / cent);
        }
        Ok(sizes)
    }

    /// Hermitian inner product of class functions given per column.
    pub fn inner_product(&self, f: &[QiSqrt7], g: &[QiSqrt7]) -> Result<QiSqrt7, GroupError> {
        let sizes = self.class_sizes()?;
        let mut acc = QiSqrt7::zero();
        for c in 0..self.num_columns() {
            let term = &f[c] * &g[c].conj();
            acc = &acc + &term.scale(&BigRational::from(BigInt::from(sizes[c])));
        }
        Ok(acc.scale(&BigRational::new(BigInt::one(), BigInt::from(self.group_order))))
    }

    /// Row and column orthogonality plus the degree-square sum.
    pub fn verify_integrity(&self) -> Result<(), GroupError> {
        let sizes = self.class_sizes()?;
        let order: u64 = sizes.iter().sum();
        if order != self.group_order {
            return Err(GroupError::ClassMismatch(format!(
                "class sizes sum to {order}, expected {}",
                self.group_order
            )));
        }
        let degree_sq: u64 = (0..self.num_rows()).map(|r| self.degree(r) * self.degree(r)).sum();
        if degree_sq != self.group_order {
            return Err(GroupError::ClassMismatch(format!(
                "degree squares sum to {degree_sq}"
            )));
        }
        for r1 in 0..self.num_rows() {
            for r2 in r1..self.num_rows() {
                let ip = self.inner_product(&self.values[r1], &self.values[r2])?;
                let expect = if r1 == r2 { QiSqrt7::from_int(1) } else { QiSqrt7::zero() };
                if ip != expect {
                    return Err(GroupError::ClassMismatch(format!(
                        "row orthogonality fails at ({r1}, {r2})"
                    )));
                }
            }
        }
        // column orthogonality: sum_r chi_r(c1) conj(chi_r(c2)) = delta * |C(c1)|
        for c1 in 0..self.num_columns() {
            for c2 in c1..self.num_columns() {
                let mut acc = QiSqrt7::zero();
                for r in 0..self.num_rows() {
                    acc = &acc + &(&self.values[r][c1] * &self.values[r][c2].conj());
                }
                let expect = if c1 == c2 {
                    QiSqrt7::from_int((self.group_order / sizes[c1]) as i64)
                } else {
                    QiSqrt7::zero()
                };
                if acc != expect {
                    return Err(GroupError::ClassMismatch(format!(
                        "column orthogonality fails at ({c1}, {c2})"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Multiplicities of each irreducible in a class function (values per
    /// column). Errors when a multiplicity is not a non-negative integer.
    pub fn decompose(&self, f: &[QiSqrt7]) -> Result<Vec<u64>, GroupError> {
        let mut mults = Vec::with_capacity(self.num_rows());
        for r in 0..self.num_rows() {
            let ip = self.inner_product(f, &self.values[r])?;
            let m = ip
                .as_non_negative_integer()
                .ok_or_else(|| GroupError::NonIntegralMultiplicity(format!("chi_{}", r + 1)))?;
            mults.push(m);
        }
        Ok(mults)
    }

    /// The unique row exactly equal to the class function, if any.
    pub fn identify(&self, f: &[QiSqrt7]) -> Result<usize, GroupError> {
        self.values
            .iter()
            .position(|row| row.as_slice() == f)
            .ok_or(GroupError::NoMatchingIrreducible)
    }

    /// Format a multiplicity vector like "chi2 + chi4 + 2*chi7".
    pub fn format_multiplicities(&self, mults: &[u64]) -> String {
        let mut parts = Vec::new();
        for (r, &m) in mults.iter().enumerate() {
            if m == 1 {
                parts.push(format!("chi{}", r + 1));
            } else if m > 1 {
                parts.push(format!("{}*chi{}", m, r + 1));
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

/// The correspondence between computed conjugacy classes and table
/// columns, together with power maps translated to column indices.
#[derive(Debug, Clone)]
pub struct ClassAlignment {
    /// column -> class id
    pub column_class: Vec<u32>,
    /// column -> column of the square / cube of the class
    pub power2: Vec<usize>,
    pub power3: Vec<usize>,
}

impl ClassAlignment {
    /// Match computed classes against table columns by (order, size)
    /// signature. Conjugate column pairs sharing a signature are pinned by
    /// the anchor character (given per class id), which must match one of
    /// the two assignments of a designated anchor row exactly; ties (the
    /// order-7 pair, which no embedded representation separates) break
    /// deterministically by representative id.
    pub fn align(
        table: &CharacterTable,
        classes: &ConjugacyClassData,
        anchor: &[QiSqrt7],
        anchor_row: usize,
    ) -> Result<Self, GroupError> {
        let ncols = table.num_columns();
        if classes.count() != ncols {
            return Err(GroupError::ClassMismatch(format!(
                "group has {} classes, table has {ncols} columns",
                classes.count()
            )));
        }
        let sizes = table.class_sizes()?;
        let mut column_class = vec![u32::MAX; ncols];
        let mut used = vec![false; ncols];
        // group columns by signature
        let mut by_sig: std::collections::BTreeMap<(u32, u64), Vec<usize>> = Default::default();
        for c in 0..ncols {
            by_sig
                .entry((table.column_orders[c], sizes[c]))
                .or_default()
                .push(c);
        }
        for (sig, cols) in by_sig {
            let mut cands: Vec<u32> = (0..ncols as u32)
                .filter(|&k| {
                    classes.element_order(k) == sig.0 && classes.size(k) as u64 == sig.1
                })
                .collect();
            if cands.len() != cols.len() {
                return Err(GroupError::ClassMismatch(format!(
                    "signature {sig:?}: {} classes vs {} columns",
                    cands.len(),
                    cols.len()
                )));
            }
            match cols.len() {
                1 => {
                    column_class[cols[0]] = cands[0];
                    used[cols[0]] = true;
                }
                2 => {
                    // deterministic candidate order by representative id
                    cands.sort_by_key(|&k| classes.representative(k));
                    let row = &table.values[anchor_row];
                    let straight = anchor[cands[0] as usize] == row[cols[0]]
                        && anchor[cands[1] as usize] == row[cols[1]];
                    let flipped = anchor[cands[0] as usize] == row[cols[1]]
                        && anchor[cands[1] as usize] == row[cols[0]];
                    let (first, second) = if straight {
                        (cands[0], cands[1])
                    } else if flipped {
                        (cands[1], cands[0])
                    } else {
                        return Err(GroupError::ClassMismatch(format!(
                            "anchor character separates neither assignment of columns {:?}",
                            (table.labels[cols[0]], table.labels[cols[1]])
                        )));
                    };
                    column_class[cols[0]] = first;
                    column_class[cols[1]] = second;
                }
                n => {
                    return Err(GroupError::ClassMismatch(format!(
                        "{n} columns share signature {sig:?}"
                    )));
                }
            }
        }
        // translate power maps to column space
        let class_to_col: std::collections::HashMap<u32, usize> = column_class
            .iter()
            .enumerate()
            .map(|(col, &cls)| (cls, col))
            .collect();
        let mut power2 = Vec::with_capacity(ncols);
        let mut power3 = Vec::with_capacity(ncols);
        for c in 0..ncols {
            let cls = column_class[c];
            power2.push(class_to_col[&classes.power_class(cls, 2)?]);
            power3.push(class_to_col[&classes.power_class(cls, 3)?]);
        }
        Ok(Self { column_class, power2, power3 })
    }

    /// Reindex a per-class function into table-column order.
    pub fn to_columns(&self, per_class: &[QiSqrt7]) -> Vec<QiSqrt7> {
        self.column_class
            .iter()
            .map(|&cls| per_class[cls as usize].clone())
            .collect()
    }
}

/// Trace of each class representative restricted to a diagonal block,
/// indexed by class id.
pub fn character_of_block(
    group: &FiniteGroupClosure,
    classes: &ConjugacyClassData,
    block: std::ops::Range<usize>,
) -> Vec<QiSqrt7> {
    (0..classes.count() as u32)
        .map(|c| {
            let rep = group.element(classes.representative(c));
            let tr: GaussianRational = rep.block_trace(block.clone());
            QiSqrt7::from_gaussian_rational(&tr)
        })
        .collect()
}

/// Character of the n-th symmetric power, n in {2, 3}, from the power maps:
/// Sym^2: (chi(g)^2 + chi(g^2))/2,
/// Sym^3: (chi(g)^3 + 3 chi(g) chi(g^2) + 2 chi(g^3))/6.
pub fn sym_power_character(
    chi: &[QiSqrt7],
    n: u32,
    alignment: &ClassAlignment,
) -> Result<Vec<QiSqrt7>, GroupError> {
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let sixth = BigRational::new(BigInt::one(), BigInt::from(6));
    match n {
        2 => Ok((0..chi.len())
            .map(|c| {
                let sq = &chi[c] * &chi[c];
                let p2 = &chi[alignment.power2[c]];
                (&sq + p2).scale(&half)
            })
            .collect()),
        3 => Ok((0..chi.len())
            .map(|c| {
                let cube = &(&chi[c] * &chi[c]) * &chi[c];
                let p2 = &chi[alignment.power2[c]];
                let p3 = &chi[alignment.power3[c]];
                let mixed = (&chi[c] * p2).scale(&BigRational::from(BigInt::from(3)));
                let tail = p3.scale(&BigRational::from(BigInt::from(2)));
                (&(&cube + &mixed) + &tail).scale(&sixth)
            })
            .collect()),
        other => Err(GroupError::MissingPowerMap(other)),
    }
}

/// Pointwise product of two class functions (the character of the tensor
/// product).
pub fn product_character(f: &[QiSqrt7], g: &[QiSqrt7]) -> Vec<QiSqrt7> {
    f.iter().zip(g).map(|(a, b)| a * b).collect()
}

/// Pointwise sum.
pub fn sum_character(f: &[QiSqrt7], g: &[QiSqrt7]) -> Vec<QiSqrt7> {
    f.iter().zip(g).map(|(a, b)| a + b).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_integrity() {
        let t = u33_character_table();
        t.verify_integrity().unwrap();
        // sizes from column orthogonality; 3a has centralizer order 108
        let sizes = t.class_sizes().unwrap();
        assert_eq!(
            sizes,
            vec![1, 864, 864, 63, 56, 63, 63, 504, 504, 504, 756, 756, 378, 672]
        );
    }

    #[test]
    fn trivial_decomposition() {
        let t = u33_character_table();
        let trivial = t.values[0].clone();
        let mults = t.decompose(&trivial).unwrap();
        assert_eq!(mults[0], 1);
        assert_eq!(mults[1..].iter().sum::<u64>(), 0);
    }

    #[test]
    fn regular_character_decomposes_with_degrees() {
        let t = u33_character_table();
        // regular character: |G| at identity, 0 elsewhere
        let mut reg = vec![QiSqrt7::zero(); 14];
        reg[0] = QiSqrt7::from_int(6048);
        let mults = t.decompose(&reg).unwrap();
        for r in 0..14 {
            assert_eq!(mults[r], t.degree(r));
        }
    }
}
