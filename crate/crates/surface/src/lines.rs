//! The 126 lines on S: canonical forms, orbits under G and the
//! involution, exact vanishing checks, incidence and connectivity.

use std::collections::{HashMap, VecDeque};

use rayon::prelude::*;

use ballq_algebra::{
    parse_polynomial, GaussianRational, QiRowSpace, SparsePolynomial, VariableFrame,
};
use ballq_grouprep::GiMatrix;

use crate::error::SurfaceError;

/// A projective line in P^12, stored as the reduced row echelon form of
/// the 2 x 13 span matrix, so equal lines have equal representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjectiveLine {
    rows: Vec<Vec<GaussianRational>>,
}

impl ProjectiveLine {
    pub fn from_span(
        a: &[GaussianRational],
        b: &[GaussianRational],
    ) -> Result<Self, SurfaceError> {
        let n = a.len();
        let mut space = QiRowSpace::new(n);
        space.absorb(a.to_vec());
        space.absorb(b.to_vec());
        if space.dim() != 2 {
            return Err(SurfaceError::Data("line span has rank != 2".into()));
        }
        Ok(Self { rows: space.rows().to_vec() })
    }

    pub fn span(&self) -> (&[GaussianRational], &[GaussianRational]) {
        (&self.rows[0], &self.rows[1])
    }

    pub fn dim_ambient(&self) -> usize {
        self.rows[0].len()
    }

    /// Image under the point action of a group element. Points transform
    /// as P -> M P (relations transform contravariantly by
    /// row-substitution), so span rows are right-multiplied by the
    /// transpose.
    pub fn apply(&self, m: &GiMatrix) -> Result<Self, SurfaceError> {
        let n = self.dim_ambient();
        let map_row = |row: &[GaussianRational]| -> Vec<GaussianRational> {
            (0..n)
                .map(|c| {
                    let mut acc = GaussianRational::zero();
                    for (k, v) in row.iter().enumerate() {
                        if !v.is_zero() {
                            let e = m.entry_rational(c, k);
                            if !e.is_zero() {
                                acc += &(v * &e);
                            }
                        }
                    }
                    acc
                })
                .collect()
        };
        Self::from_span(&map_row(&self.rows[0]), &map_row(&self.rows[1]))
    }

    /// Exact point u*A + v*B on the line.
    pub fn point(&self, u: &GaussianRational, v: &GaussianRational) -> Vec<GaussianRational> {
        self.rows[0]
            .iter()
            .zip(&self.rows[1])
            .map(|(a, b)| &(u * a) + &(v * b))
            .collect()
    }

    /// Lines meet iff the stacked 4 x n span matrix has rank <= 3.
    pub fn meets(&self, other: &ProjectiveLine) -> bool {
        let mut space = QiRowSpace::new(self.dim_ambient());
        for r in self.rows.iter().chain(&other.rows) {
            space.absorb(r.clone());
        }
        space.dim() <= 3
    }
}

/// Restrict a homogeneous polynomial to the pencil u*A + v*B: the result
/// is a binary form in (u, v), returned as a polynomial over that frame.
pub fn restrict_to_line(
    p: &SparsePolynomial,
    a: &[GaussianRational],
    b: &[GaussianRational],
) -> Result<SparsePolynomial, SurfaceError> {
    let frame_uv = VariableFrame::standard(&["u", "v"]);
    let u = parse_polynomial(&frame_uv, "u")?;
    let v = parse_polynomial(&frame_uv, "v")?;
    let images: Vec<SparsePolynomial> = a
        .iter()
        .zip(b)
        .map(|(ca, cb)| u.scale(ca).add(&v.scale(cb)))
        .collect();
    Ok(p.substitute(&images)?)
}

/// True iff the polynomial vanishes identically on the line.
pub fn vanishes_on_line(
    p: &SparsePolynomial,
    line: &ProjectiveLine,
) -> Result<bool, SurfaceError> {
    let (a, b) = line.span();
    Ok(restrict_to_line(p, a, b)?.is_zero())
}

/// An orbit of lines under a list of matrices, with G-orbit labels and
/// labels after adjoining the involution.
pub struct LineOrbit {
    pub lines: Vec<ProjectiveLine>,
    /// orbit label under the group generators alone, per line
    pub g_orbit: Vec<usize>,
    pub g_orbit_count: usize,
    /// orbit label after adding the involution
    pub full_orbit_count: usize,
}

/// Build the closure of a seed line under the generator point actions and
/// the involution. Every line is verified against the relation span.
pub fn build_line_orbit(
    seed: &ProjectiveLine,
    generators: &[GiMatrix],
    involution: &GiMatrix,
    relations: &[SparsePolynomial],
    limit: usize,
) -> Result<LineOrbit, SurfaceError> {
    for (ri, r) in relations.iter().enumerate() {
        if !vanishes_on_line(r, seed)? {
            return Err(SurfaceError::SeedNotOnVariety { relation: ri });
        }
    }
    let mut index: HashMap<ProjectiveLine, usize> = HashMap::new();
    let mut lines = vec![seed.clone()];
    index.insert(seed.clone(), 0);
    let mut all_mats: Vec<&GiMatrix> = generators.iter().collect();
    all_mats.push(involution);
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        for m in &all_mats {
            let img = lines[k].apply(m)?;
            if !index.contains_key(&img) {
                if lines.len() >= limit {
                    return Err(SurfaceError::Data(format!(
                        "line orbit exceeded limit {limit}"
                    )));
                }
                index.insert(img.clone(), lines.len());
                queue.push_back(lines.len());
                lines.push(img);
            }
        }
    }

    // verify every line against every relation, in parallel over lines
    let bad = lines
        .par_iter()
        .enumerate()
        .find_map_any(|(li, line)| {
            for (ri, r) in relations.iter().enumerate() {
                match vanishes_on_line(r, line) {
                    Ok(true) => {}
                    Ok(false) => return Some(SurfaceError::LineOffIdeal { line: li, relation: ri }),
                    Err(e) => return Some(e),
                }
            }
            None
        });
    if let Some(e) = bad {
        return Err(e);
    }

    // orbit labels under the group generators alone
    let g_orbit = connected_labels(&lines, &index, generators)?;
    let g_orbit_count = g_orbit.iter().copied().max().map_or(0, |m| m + 1);
    let full = connected_labels(&lines, &index, &all_mats.iter().map(|m| (*m).clone()).collect::<Vec<_>>())?;
    let full_orbit_count = full.iter().copied().max().map_or(0, |m| m + 1);
    Ok(LineOrbit { lines, g_orbit, g_orbit_count, full_orbit_count })
}

fn connected_labels(
    lines: &[ProjectiveLine],
    index: &HashMap<ProjectiveLine, usize>,
    mats: &[impl std::borrow::Borrow<GiMatrix>],
) -> Result<Vec<usize>, SurfaceError> {
    let mut label = vec![usize::MAX; lines.len()];
    let mut next = 0usize;
    for start in 0..lines.len() {
        if label[start] != usize::MAX {
            continue;
        }
        label[start] = next;
        let mut queue = VecDeque::from([start]);
        while let Some(k) = queue.pop_front() {
            for m in mats {
                let img = lines[k].apply(m.borrow())?;
                let j = *index
                    .get(&img)
                    .ok_or_else(|| SurfaceError::Data("orbit not closed".into()))?;
                if label[j] == usize::MAX {
                    label[j] = next;
                    queue.push_back(j);
                }
            }
        }
        next += 1;
    }
    Ok(label)
}

/// Count and list the lines lying identically on a hyperplane form.
pub fn lines_on_form(
    orbit: &[ProjectiveLine],
    form: &SparsePolynomial,
) -> Result<Vec<usize>, SurfaceError> {
    let mut hits = Vec::new();
    for (k, line) in orbit.iter().enumerate() {
        if vanishes_on_line(form, line)? {
            hits.push(k);
        }
    }
    Ok(hits)
}

/// Incidence graph: vertices are lines, edges are intersecting pairs.
pub struct IncidenceReport {
    pub edges: Vec<(usize, usize)>,
    pub components: usize,
}

pub fn line_incidence_graph(orbit: &[ProjectiveLine]) -> IncidenceReport {
    let n = orbit.len();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| ((a + 1)..n).map(move |b| (a, b)))
        .collect();
    let edges: Vec<(usize, usize)> = pairs
        .into_par_iter()
        .filter(|&(a, b)| orbit[a].meets(&orbit[b]))
        .collect();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(a, b) in &edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; n];
    let mut components = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        components += 1;
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(k) = queue.pop_front() {
            for &j in &adj[k] {
                if !seen[j] {
                    seen[j] = true;
                    queue.push_back(j);
                }
            }
        }
    }
    IncidenceReport { edges, components }
}

/// Exact points on a line at the given parameters, each verified against
/// the relation set.
pub fn exact_points(
    line: &ProjectiveLine,
    params: &[(GaussianRational, GaussianRational)],
    relations: &[SparsePolynomial],
) -> Result<Vec<Vec<GaussianRational>>, SurfaceError> {
    let mut out = Vec::with_capacity(params.len());
    for (u, v) in params {
        let p = line.point(u, v);
        for (ri, r) in relations.iter().enumerate() {
            if !r.evaluate(&p)?.is_zero() {
                return Err(SurfaceError::LineOffIdeal { line: 0, relation: ri });
            }
        }
        out.push(p);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64) -> GaussianRational {
        GaussianRational::from_int(a)
    }

    #[test]
    fn canonical_form_identifies_equal_lines() {
        let a = vec![q(1), q(0), q(2), q(0)];
        let b = vec![q(0), q(1), q(1), q(0)];
        let l1 = ProjectiveLine::from_span(&a, &b).unwrap();
        // same line from different spanning vectors
        let c: Vec<GaussianRational> = a.iter().zip(&b).map(|(x, y)| &(x * &q(3)) + y).collect();
        let l2 = ProjectiveLine::from_span(&c, &b).unwrap();
        assert_eq!(l1, l2);
    }

    #[test]
    fn disjoint_lines_do_not_meet() {
        let l1 = ProjectiveLine::from_span(
            &[q(1), q(0), q(0), q(0)],
            &[q(0), q(1), q(0), q(0)],
        )
        .unwrap();
        let l2 = ProjectiveLine::from_span(
            &[q(0), q(0), q(1), q(0)],
            &[q(0), q(0), q(0), q(1)],
        )
        .unwrap();
        assert!(!l1.meets(&l2));
        let l3 = ProjectiveLine::from_span(
            &[q(1), q(0), q(0), q(0)],
            &[q(0), q(0), q(1), q(0)],
        )
        .unwrap();
        assert!(l1.meets(&l3)); // share the point (1:0:0:0)
    }

    #[test]
    fn restriction_degree() {
        let frame = VariableFrame::numbered("x", 3);
        let p = parse_polynomial(&frame, "x1 x2 - x3^2").unwrap();
        let a = vec![q(1), q(0), q(1)];
        let b = vec![q(0), q(1), q(0)];
        let r = restrict_to_line(&p, &a, &b).unwrap();
        // (u)(v) - (u)^2 = uv - u^2
        assert_eq!(r.num_terms(), 2);
    }
}
