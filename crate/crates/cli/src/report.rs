//! The analysis report: every structural quantity the toolkit computes for a
//! single metric Lie algebra, reproducible by re-running the underlying
//! operations.

use metric_lie::classify::classify_low_index;
use metric_lie::forms::{
    form_signature, index_and_relative_index, invariance_subalgebra, is_invariant, metric_radical,
    MetricLieAlgebra,
};
use metric_lie::levi::levi_decomposition;
use metric_lie::nilinv::nil_invariance_check;
use metric_lie::radicals::nilradical;
use metric_lie::rational::format_rational;
use metric_lie::reduction::is_effective;
use metric_lie::subspace::Subspace;
use serde_json::{json, Value};

pub struct AnalysisReport {
    pub dim: usize,
    pub labels: Vec<String>,
    pub signature: (usize, usize, usize),
    pub index: usize,
    pub relative_index: usize,
    pub metric_radical_basis: Vec<Vec<String>>,
    pub radical_basis: Vec<Vec<String>>,
    pub nilradical_basis: Vec<Vec<String>>,
    pub compact_basis: Vec<Vec<String>>,
    pub noncompact_basis: Vec<Vec<String>>,
    pub effective: bool,
    pub invariant: bool,
    pub invariance_dim: usize,
    pub nil_invariant: bool,
    pub nil_invariance_operators: usize,
    pub nil_invariance_witness: Option<String>,
    pub classification: Option<String>,
    pub classification_note: Option<String>,
}

fn basis_strings(w: &Subspace) -> Vec<Vec<String>> {
    w.basis_vectors()
        .iter()
        .map(|v| v.iter().map(format_rational).collect())
        .collect()
}

pub fn analyze(m: &MetricLieAlgebra) -> AnalysisReport {
    let sig = form_signature(m);
    let (mu, ell) = index_and_relative_index(m);
    let gperp = metric_radical(m);
    let levi = levi_decomposition(&m.algebra);
    let nil = nilradical(&m.algebra);
    let cert = nil_invariance_check(m);
    let effective = is_effective(m);
    let inv = invariance_subalgebra(m);
    let witness = cert.witness.as_ref().map(|w| {
        let label = |v: &Vec<metric_lie::rational::Rational>| {
            v.iter()
                .position(|c| !num::traits::Zero::is_zero(c))
                .map(|i| m.algebra.labels[i].clone())
                .unwrap_or_else(|| "0".into())
        };
        format!(
            "skewness fails on the pair ({}, {}) for a nilpotent test operator",
            label(&w.left),
            label(&w.right)
        )
    });
    let (classification, note) = if !cert.verdict {
        (None, Some("not nil-invariant".to_string()))
    } else if !effective {
        (
            None,
            Some("not effective; apply effectivize before classifying".to_string()),
        )
    } else {
        match classify_low_index(m) {
            Ok(rep) => (Some(rep.case_label.to_string()), None),
            Err(e) => (None, Some(e.to_string())),
        }
    };
    AnalysisReport {
        dim: m.dim(),
        labels: m.algebra.labels.clone(),
        signature: (sig.positives, sig.negatives, sig.zeros),
        index: mu,
        relative_index: ell,
        metric_radical_basis: basis_strings(&gperp),
        radical_basis: basis_strings(&levi.radical),
        nilradical_basis: basis_strings(&nil),
        compact_basis: basis_strings(&levi.compact),
        noncompact_basis: basis_strings(&levi.noncompact),
        effective,
        invariant: is_invariant(m),
        invariance_dim: inv.dim(),
        nil_invariant: cert.verdict,
        nil_invariance_operators: cert.tested_operators.len(),
        nil_invariance_witness: witness,
        classification,
        classification_note: note,
    }
}

impl AnalysisReport {
    pub fn to_json(&self) -> Value {
        json!({
            "schema_version": super::document::SCHEMA_VERSION,
            "dim": self.dim,
            "labels": self.labels,
            "signature": {
                "positives": self.signature.0,
                "negatives": self.signature.1,
                "zeros": self.signature.2,
            },
            "index": self.index,
            "relative_index": self.relative_index,
            "metric_radical": {
                "dim": self.metric_radical_basis.len(),
                "basis": self.metric_radical_basis,
            },
            "radical": { "dim": self.radical_basis.len(), "basis": self.radical_basis },
            "nilradical": { "dim": self.nilradical_basis.len(), "basis": self.nilradical_basis },
            "levi": {
                "compact_dim": self.compact_basis.len(),
                "compact_basis": self.compact_basis,
                "noncompact_dim": self.noncompact_basis.len(),
                "noncompact_basis": self.noncompact_basis,
            },
            "effective": self.effective,
            "invariant": self.invariant,
            "invariance_subalgebra_dim": self.invariance_dim,
            "nil_invariant": self.nil_invariant,
            "nil_invariance": {
                "verdict": if self.nil_invariant { "pass" } else { "fail" },
                "tested_operators": self.nil_invariance_operators,
                "witness": self.nil_invariance_witness,
            },
            "classification": self.classification,
            "classification_note": self.classification_note,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        line(format!("dimension          {}", self.dim));
        line(format!("basis              {}", self.labels.join(" ")));
        line(format!(
            "signature          ({}, {}, {})  [positives, negatives, zeros]",
            self.signature.0, self.signature.1, self.signature.2
        ));
        line(format!("index mu           {}", self.index));
        line(format!("relative index l   {}", self.relative_index));
        line(format!(
            "metric radical     dim {}",
            self.metric_radical_basis.len()
        ));
        line(format!(
            "solvable radical   dim {}",
            self.radical_basis.len()
        ));
        line(format!(
            "nilradical         dim {}",
            self.nilradical_basis.len()
        ));
        line(format!(
            "levi factor        compact dim {}, non-compact dim {}",
            self.compact_basis.len(),
            self.noncompact_basis.len()
        ));
        line(format!("effective          {}", yesno(self.effective)));
        line(format!(
            "invariant          {} (invariance subalgebra dim {})",
            yesno(self.invariant),
            self.invariance_dim
        ));
        line(format!(
            "nil-invariant      {} ({} operators tested)",
            yesno(self.nil_invariant),
            self.nil_invariance_operators
        ));
        if let Some(w) = &self.nil_invariance_witness {
            line(format!("witness            {w}"));
        }
        match (&self.classification, &self.classification_note) {
            (Some(c), _) => line(format!("classification     {c}")),
            (None, Some(n)) => line(format!("classification     n/a ({n})")),
            _ => {}
        }
        out
    }
}

fn yesno(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
