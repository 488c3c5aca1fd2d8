//! Parsed embedded data: frames, representations, equation sets, and the
//! content hash that pins them.

use std::sync::Arc;

use sha2::{Digest, Sha256};

use ballq_algebra::{
    parse_polynomial, EquationSet, GaussianRational, SparsePolynomial, VariableFrame,
};
use ballq_grouprep::{GiMatrix, MatrixRepresentation};

use crate::data;
use crate::error::SurfaceError;

/// SHA-256 of the canonical serialization of the embedded dataset, frozen
/// after the structural and group-theoretic validation passed. Any edit
/// to the embedded tables changes this value and fails the checksum gate.
pub const PINNED_DATASET_HASH: &str =
    "70fbf06db9f4b6a158b4e17aa075145be9d4f023ce9a9a660ba1f440aa7443f0";

/// Everything printed in the source tables, parsed and frame-attached.
pub struct PaperDataset {
    /// x1..x6, y1..y7 (frame of the 13 canonical coordinates of Z3)
    pub frame_xy: Arc<VariableFrame>,
    /// z1..z14
    pub frame_z: Arc<VariableFrame>,
    /// all 27 coordinates of the Z2 model
    pub frame_xyz: Arc<VariableFrame>,
    /// W0..W7 with weights (1,2,2,2,3,3,3,3)
    pub frame_w: Arc<VariableFrame>,
    /// U0..U9
    pub frame_u: Arc<VariableFrame>,

    pub g_xy: MatrixRepresentation,
    pub g21_xy: MatrixRepresentation,
    pub g_z: MatrixRepresentation,
    pub g21_z: MatrixRepresentation,
    /// block-diagonal action on all 27 variables, same generators
    pub g_xyz: MatrixRepresentation,
    pub g21_xyz: MatrixRepresentation,

    /// the two Table-4 seed quadrics (diagonal, bilinear)
    pub seeds: [SparsePolynomial; 2],
    /// the G21-invariant canonical form H
    pub h_form: SparsePolynomial,
    /// the seed line: coefficient vectors of u and of v
    pub line_u: Vec<GaussianRational>,
    pub line_v: Vec<GaussianRational>,

    pub z1_equations: EquationSet,
    pub curve_equations: EquationSet,

    /// the involution diag(-1 on x, +1 on y)
    pub involution_xy: GiMatrix,
}

fn xy_names() -> Vec<String> {
    (1..=6)
        .map(|k| format!("x{k}"))
        .chain((1..=7).map(|k| format!("y{k}")))
        .collect()
}

fn z_names() -> Vec<String> {
    (1..=14).map(|k| format!("z{k}")).collect()
}

impl PaperDataset {
    pub fn load() -> Result<Self, SurfaceError> {
        let frame_xy = VariableFrame::new(xy_names(), vec![1; 13])?;
        let frame_z = VariableFrame::new(z_names(), vec![1; 14])?;
        let xyz_names: Vec<String> = xy_names().into_iter().chain(z_names()).collect();
        let frame_xyz = VariableFrame::new(xyz_names, vec![1; 27])?;
        let frame_w = VariableFrame::new(
            (0..8).map(|k| format!("W{k}")).collect(),
            vec![1, 2, 2, 2, 3, 3, 3, 3],
        )?;
        let frame_u = VariableFrame::new((0..10).map(|k| format!("U{k}")).collect(), vec![1; 10])?;

        let g_xy = MatrixRepresentation::from_substitutions(
            frame_xy.clone(),
            &[data::G_XY_GEN1.to_vec(), data::G_XY_GEN2.to_vec()],
        )?;
        let g21_xy = MatrixRepresentation::from_substitutions(
            frame_xy.clone(),
            &[data::G21_XY_GEN1.to_vec(), data::G21_XY_GEN2.to_vec()],
        )?;
        let g_z = MatrixRepresentation::from_substitutions(
            frame_z.clone(),
            &[data::G_Z_GEN1.to_vec(), data::G_Z_GEN2.to_vec()],
        )?;
        let g21_z = MatrixRepresentation::from_substitutions(
            frame_z.clone(),
            &[data::G21_Z_GEN1.to_vec(), data::G21_Z_GEN2.to_vec()],
        )?;
        fn combine(xy: &[&'static str; 13], z: &[&'static str; 14]) -> Vec<&'static str> {
            xy.iter().chain(z.iter()).copied().collect()
        }
        let g_xyz = MatrixRepresentation::from_substitutions(
            frame_xyz.clone(),
            &[
                combine(&data::G_XY_GEN1, &data::G_Z_GEN1),
                combine(&data::G_XY_GEN2, &data::G_Z_GEN2),
            ],
        )?;
        let g21_xyz = MatrixRepresentation::from_substitutions(
            frame_xyz.clone(),
            &[
                combine(&data::G21_XY_GEN1, &data::G21_Z_GEN1),
                combine(&data::G21_XY_GEN2, &data::G21_Z_GEN2),
            ],
        )?;

        let seeds = [
            parse_polynomial(&frame_xy, data::SEED_DIAGONAL)?,
            parse_polynomial(&frame_xy, data::SEED_BILINEAR)?,
        ];
        let h_form = parse_polynomial(&frame_xy, data::H_FORM)?;

        let frame_uv = VariableFrame::standard(&["u", "v"]);
        let mut line_u = Vec::with_capacity(13);
        let mut line_v = Vec::with_capacity(13);
        for src in data::LINE_COORDS {
            let p = parse_polynomial(&frame_uv, src)?;
            let mut cu = GaussianRational::zero();
            let mut cv = GaussianRational::zero();
            for (m, c) in p.terms() {
                match m.exponents() {
                    [1, 0] => cu = c.clone(),
                    [0, 1] => cv = c.clone(),
                    _ => {
                        return Err(SurfaceError::Data(
                            "line coordinate is not linear in (u, v)".into(),
                        ))
                    }
                }
            }
            line_u.push(cu);
            line_v.push(cv);
        }

        let z1_equations = EquationSet::new(
            frame_w.clone(),
            data::Z1_EQUATIONS
                .iter()
                .map(|s| parse_polynomial(&frame_w, s))
                .collect::<Result<_, _>>()?,
        );
        let mut curve_eqs = vec![parse_polynomial(&frame_u, data::CURVE_LINEAR)?];
        for s in data::CURVE_QUADRICS {
            curve_eqs.push(parse_polynomial(&frame_u, s)?);
        }
        let curve_equations = EquationSet::new(frame_u.clone(), curve_eqs);

        let mut involution_xy = GiMatrix::identity(13);
        for k in 0..6 {
            involution_xy.set_entry(k, k, -1, 0);
        }

        let ds = Self {
            frame_xy,
            frame_z,
            frame_xyz,
            frame_w,
            frame_u,
            g_xy,
            g21_xy,
            g_z,
            g21_z,
            g_xyz,
            g21_xyz,
            seeds,
            h_form,
            line_u,
            line_v,
            z1_equations,
            curve_equations,
            involution_xy,
        };
        ds.validate_structure()?;
        Ok(ds)
    }

    /// Cheap structural invariants checked on every load: homogeneity in
    /// the right gradings, seed bidegrees, line shape.
    fn validate_structure(&self) -> Result<(), SurfaceError> {
        for (k, eq) in self.z1_equations.equations.iter().enumerate() {
            if eq.homogeneous_degree().is_none() {
                return Err(SurfaceError::Data(format!(
                    "Z1 equation {k} is not weighted-homogeneous"
                )));
            }
        }
        for (k, eq) in self.curve_equations.equations.iter().enumerate() {
            let expect = if k == 0 { 1 } else { 2 };
            if eq.homogeneous_degree() != Some(expect) {
                return Err(SurfaceError::Data(format!(
                    "curve equation {k} has unexpected degree"
                )));
            }
        }
        for (k, seed) in self.seeds.iter().enumerate() {
            if seed.homogeneous_degree() != Some(2) {
                return Err(SurfaceError::Data(format!("seed {k} is not a quadric")));
            }
        }
        if self.h_form.homogeneous_degree() != Some(1) {
            return Err(SurfaceError::Data("H-form is not linear".into()));
        }
        Ok(())
    }

    /// SHA-256 over the canonical serialization of every embedded item.
    pub fn content_hash(&self) -> String {
        let mut hasher = Sha256::new();
        for rep in [
            &self.g_xy,
            &self.g21_xy,
            &self.g_z,
            &self.g21_z,
            &self.g_xyz,
            &self.g21_xyz,
        ] {
            for g in &rep.generators {
                hasher.update(g.canonical_bytes());
            }
        }
        let seed_set = EquationSet::new(self.frame_xy.clone(), self.seeds.to_vec());
        hasher.update(seed_set.to_canonical_json().as_bytes());
        let h_set = EquationSet::new(self.frame_xy.clone(), vec![self.h_form.clone()]);
        hasher.update(h_set.to_canonical_json().as_bytes());
        for c in self.line_u.iter().chain(&self.line_v) {
            hasher.update(c.to_string().as_bytes());
            hasher.update(b";");
        }
        hasher.update(self.z1_equations.to_canonical_json().as_bytes());
        hasher.update(self.curve_equations.to_canonical_json().as_bytes());
        let digest = hasher.finalize();
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }

    /// The seed line as a pair of exact 13-vectors (u- and v-coefficients).
    pub fn seed_line(&self) -> (Vec<GaussianRational>, Vec<GaussianRational>) {
        (self.line_u.clone(), self.line_v.clone())
    }

    /// Compare the content hash against the pinned value.
    pub fn verify_checksum(&self) -> Result<(), SurfaceError> {
        let h = self.content_hash();
        if h != PINNED_DATASET_HASH {
            return Err(SurfaceError::Data(format!(
                "dataset checksum mismatch: computed {h}"
            )));
        }
        Ok(())
    }
}
