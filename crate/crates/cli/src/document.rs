//! The JSON interchange format for metric Lie algebras.
//!
//! Coefficients are exact rational strings ("3/2", "-1"); brackets are sparse
//! with i < j only (the opposite orientation is implied by antisymmetry); the
//! gram matrix may be dense (array of rows) or sparse (list of upper-triangle
//! entries). Export always emits dense gram and reduced coefficient strings,
//! so export . import is the identity on documents.

use metric_lie::forms::{MetricLieAlgebra, SymBilinearForm};
use metric_lie::lie::{BracketEntry, LieAlgebra};
use metric_lie::matrix::Matrix;
use metric_lie::rational::{format_rational, parse_rational};
use num::traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BracketJson {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub coeff: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GramEntryJson {
    pub i: usize,
    pub j: usize,
    pub coeff: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GramJson {
    Dense(Vec<Vec<String>>),
    Sparse(Vec<GramEntryJson>),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraDocument {
    pub schema_version: String,
    pub dim: usize,
    pub labels: Vec<String>,
    pub brackets: Vec<BracketJson>,
    pub gram: GramJson,
    #[serde(default)]
    pub metadata: BTreeMap<String, String>,
}

impl AlgebraDocument {
    pub fn from_metric(m: &MetricLieAlgebra, metadata: BTreeMap<String, String>) -> Self {
        let n = m.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                for (k, c) in m.algebra.bracket_basis(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        brackets.push(BracketJson {
                            i,
                            j,
                            k,
                            coeff: format_rational(c),
                        });
                    }
                }
            }
        }
        let gram = GramJson::Dense(
            (0..n)
                .map(|r| {
                    (0..n)
                        .map(|c| format_rational(m.form.gram.get(r, c)))
                        .collect()
                })
                .collect(),
        );
        AlgebraDocument {
            schema_version: SCHEMA_VERSION.into(),
            dim: n,
            labels: m.algebra.labels.clone(),
            brackets,
            gram,
            metadata,
        }
    }

    pub fn to_metric(&self) -> Result<MetricLieAlgebra, String> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(format!(
                "unsupported schema_version {:?} (expected {:?})",
                self.schema_version, SCHEMA_VERSION
            ));
        }
        let n = self.dim;
        if self.labels.len() != n {
            return Err(format!("{} labels for dimension {n}", self.labels.len()));
        }
        let mut entries = Vec::new();
        for b in &self.brackets {
            if b.i >= b.j {
                return Err(format!(
                    "bracket entries must have i < j, got ({}, {})",
                    b.i, b.j
                ));
            }
            entries.push(BracketEntry {
                i: b.i,
                j: b.j,
                k: b.k,
                coeff: parse_rational(&b.coeff)?,
            });
        }
        let algebra = LieAlgebra::from_structure_constants(n, self.labels.clone(), &entries)
            .map_err(|e| e.to_string())?;
        let mut gram = Matrix::zero(n, n);
        match &self.gram {
            GramJson::Dense(rows) => {
                if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                    return Err("gram matrix has the wrong shape".into());
                }
                for (r, row) in rows.iter().enumerate() {
                    for (c, s) in row.iter().enumerate() {
                        gram.set(r, c, parse_rational(s)?);
                    }
                }
            }
            GramJson::Sparse(entries) => {
                for e in entries {
                    if e.i >= n || e.j >= n {
                        return Err(format!("gram entry ({}, {}) out of range", e.i, e.j));
                    }
                    let v = parse_rational(&e.coeff)?;
                    gram.set(e.i, e.j, v.clone());
                    gram.set(e.j, e.i, v);
                }
            }
        }
        let form = SymBilinearForm::new(gram).map_err(|e| e.to_string())?;
        MetricLieAlgebra::new(algebra, form).map_err(|e| e.to_string())
    }

    pub fn parse(text: &str) -> Result<AlgebraDocument, String> {
        serde_json::from_str(text).map_err(|e| format!("invalid document JSON: {e}"))
    }

    pub fn render(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }
}
