//! The equation-set JSON format.
//!
//! Layout: `{ "frame": [names], "grading": [ints], "equations":
//! [ { "terms": [ { "exp": [ints], "c": { "n": [re, im], "d": [re, im] } } ] } ] }`
//! with Gaussian integers as `[re, im]` pairs of decimal strings.
//!
//! Serialization is canonical (terms in descending degrevlex, coefficients
//! in canonical form, compact JSON), so canonical files round-trip
//! byte-exactly.

use std::sync::Arc;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::AlgebraError;
use crate::gaussian::{GaussianInt, GaussianRational};
use crate::monomial::{Monomial, VariableFrame};
use crate::poly::SparsePolynomial;

#[derive(Serialize, Deserialize)]
struct CoeffJson {
    n: [String; 2],
    d: [String; 2],
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: Vec<u16>,
    c: CoeffJson,
}

#[derive(Serialize, Deserialize)]
struct EquationJson {
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct FileJson {
    frame: Vec<String>,
    grading: Vec<u32>,
    equations: Vec<EquationJson>,
}

/// A named frame together with its equations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquationSet {
    pub frame: Arc<VariableFrame>,
    pub equations: Vec<SparsePolynomial>,
}

impl EquationSet {
    pub fn new(frame: Arc<VariableFrame>, equations: Vec<SparsePolynomial>) -> Self {
        Self { frame, equations }
    }

    pub fn to_canonical_json(&self) -> String {
        let file = FileJson {
            frame: self.frame.names().to_vec(),
            grading: self.frame.weights().to_vec(),
            equations: self
                .equations
                .iter()
                .map(|p| EquationJson {
                    terms: p
                        .terms()
                        .iter()
                        .map(|(m, c)| TermJson {
                            exp: m.exponents().to_vec(),
                            c: CoeffJson {
                                n: [
                                    c.numerator().re.to_string(),
                                    c.numerator().im.to_string(),
                                ],
                                d: [c.denominator().to_string(), "0".to_string()],
                            },
                        })
                        .collect(),
                })
                .collect(),
        };
        serde_json::to_string(&file).expect("serialization cannot fail")
    }

    pub fn from_json(src: &str) -> Result<Self, AlgebraError> {
        let file: FileJson = serde_json::from_str(src)
            .map_err(|e| AlgebraError::EquationFile(e.to_string()))?;
        let frame = VariableFrame::new(file.frame, file.grading)?;
        let mut equations = Vec::with_capacity(file.equations.len());
        for eq in file.equations {
            let mut terms = Vec::with_capacity(eq.terms.len());
            for t in eq.terms {
                if t.exp.len() != frame.len() {
                    return Err(AlgebraError::FrameMismatch {
                        expected: frame.len(),
                        got: t.exp.len(),
                    });
                }
                let num = GaussianInt::new(parse_big(&t.c.n[0])?, parse_big(&t.c.n[1])?);
                let d_re = parse_big(&t.c.d[0])?;
                let d_im = parse_big(&t.c.d[1])?;
                let den = GaussianInt::new(d_re, d_im);
                if den.is_zero() {
                    return Err(AlgebraError::EquationFile("zero denominator".into()));
                }
                let coeff = GaussianRational::new(num, den);
                terms.push((Monomial::new(t.exp), coeff));
            }
            equations.push(SparsePolynomial::from_terms(frame.clone(), terms)?);
        }
        Ok(Self { frame, equations })
    }

    /// SHA-256 of the canonical serialization, hex encoded.
    pub fn content_hash(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update(self.to_canonical_json().as_bytes());
        let digest = hasher.finalize();
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }
}

fn parse_big(s: &str) -> Result<BigInt, AlgebraError> {
    s.parse()
        .map_err(|_| AlgebraError::EquationFile(format!("bad integer '{s}'")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    #[test]
    fn round_trip_bit_exact() {
        let frame = VariableFrame::numbered("x", 3);
        let eqs = vec![
            parse_polynomial(&frame, "x1^2 - (2+3i)/7 x2*x3").unwrap(),
            parse_polynomial(&frame, "i x3^2 + x1*x2").unwrap(),
        ];
        let set = EquationSet::new(frame, eqs);
        let json = set.to_canonical_json();
        let back = EquationSet::from_json(&json).unwrap();
        assert_eq!(set, back);
        assert_eq!(json, back.to_canonical_json());
    }

    #[test]
    fn clears_i_denominators_on_load() {
        let src = r#"{"frame":["x1"],"grading":[1],"equations":[{"terms":[{"exp":[1],"c":{"n":["1","0"],"d":["1","1"]}}]}]}"#;
        let set = EquationSet::from_json(src).unwrap();
        // 1/(1+i) = (1-i)/2
        let c = &set.equations[0].terms()[0].1;
        assert_eq!(c, &GaussianRational::from_parts(1, -1, 2));
    }
}
