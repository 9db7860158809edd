//! Catalog names and parameter parsing for `metric-lie build`.

use metric_lie::constructions as cons;
use metric_lie::forms::{MetricLieAlgebra, SymBilinearForm};
use metric_lie::matrix::Matrix;
use metric_lie::rational::{parse_rational, Rational};
use std::collections::BTreeMap;

#[derive(Debug, Default, Clone)]
pub struct BuildParams {
    pub n: Option<usize>,
    pub s: Option<usize>,
    pub neg: Option<usize>,
    pub steps: Option<usize>,
    pub alpha1: Option<String>,
    pub alpha2: Option<String>,
    pub one: bool,
    pub base: Option<String>,
    pub form: Option<String>,
    pub gram: Option<String>,
}

impl BuildParams {
    /// Parses "name:key=value:key=value" into (name, params).
    pub fn from_spec(spec: &str) -> Result<(String, BuildParams), String> {
        let mut parts = spec.split(':');
        let name = parts.next().unwrap_or("").to_string();
        let mut p = BuildParams::default();
        for kv in parts {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| format!("expected key=value in {kv:?}"))?;
            match k {
                "n" => p.n = Some(v.parse().map_err(|_| format!("bad n: {v}"))?),
                "s" => p.s = Some(v.parse().map_err(|_| format!("bad s: {v}"))?),
                "neg" => p.neg = Some(v.parse().map_err(|_| format!("bad neg: {v}"))?),
                "steps" => p.steps = Some(v.parse().map_err(|_| format!("bad steps: {v}"))?),
                "alpha1" => p.alpha1 = Some(v.into()),
                "alpha2" => p.alpha2 = Some(v.into()),
                "one" => p.one = v == "true" || v == "1",
                "base" => p.base = Some(v.into()),
                "form" => p.form = Some(v.into()),
                "gram" => p.gram = Some(v.into()),
                _ => return Err(format!("unknown parameter {k:?} in {spec:?}")),
            }
        }
        Ok((name, p))
    }
}

fn parse_tuple(s: &str) -> Result<Vec<Rational>, String> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_rational).collect()
}

fn base_algebra(name: &str) -> Result<metric_lie::lie::LieAlgebra, String> {
    match name {
        "sl2" => Ok(cons::sl2()),
        "so3" => Ok(cons::so3()),
        "line" => Ok(metric_lie::lie::LieAlgebra::abelian(1)),
        other => Err(format!(
            "unknown cotangent base {other:?} (expected sl2, so3 or line)"
        )),
    }
}

/// Builds a named catalog family; returns the metric algebra plus metadata
/// describing the instantiated parameters.
pub fn build_named(
    name: &str,
    p: &BuildParams,
) -> Result<(MetricLieAlgebra, BTreeMap<String, String>), String> {
    let mut meta = BTreeMap::new();
    meta.insert("name".to_string(), name.to_string());
    let m = match name {
        "abelian" => {
            let n = p.n.ok_or("abelian needs --n")?;
            let s = p.s.unwrap_or(0);
            meta.insert("n".into(), n.to_string());
            meta.insert("s".into(), s.to_string());
            cons::build_abelian(n, s).map_err(|e| e.to_string())?
        }
        "heisenberg" => {
            let n = p.n.ok_or("heisenberg needs --n")?;
            let neg = p.neg.unwrap_or(0);
            if neg > n {
                return Err("heisenberg needs neg <= n".into());
            }
            let signs: Vec<i64> = (0..n).map(|j| if j < n - neg { 1 } else { -1 }).collect();
            meta.insert("n".into(), n.to_string());
            meta.insert("neg".into(), neg.to_string());
            cons::build_heisenberg(n, &signs).map_err(|e| e.to_string())?
        }
        "osc" => {
            let n = p.n.unwrap_or(1);
            meta.insert("n".into(), n.to_string());
            cons::standard_oscillator(n)
        }
        "osc-nilpotent" => match p.steps.unwrap_or(3) {
            2 => {
                meta.insert("steps".into(), "2".into());
                cons::nilpotent_oscillator_two_step()
            }
            3 => {
                meta.insert("steps".into(), "3".into());
                cons::nilpotent_oscillator_three_step()
            }
            other => return Err(format!("osc-nilpotent supports steps 2 or 3, got {other}")),
        },
        "osc-alpha" => {
            let a1 = parse_tuple(p.alpha1.as_deref().unwrap_or(""))?;
            let a2 = parse_tuple(p.alpha2.as_deref().unwrap_or(""))?;
            meta.insert("alpha1".into(), p.alpha1.clone().unwrap_or_default());
            meta.insert("alpha2".into(), p.alpha2.clone().unwrap_or_default());
            meta.insert("one".into(), p.one.to_string());
            cons::build_osc_alpha(&a1, &a2, p.one).map_err(|e| e.to_string())?
        }
        "cotangent" => {
            let base = p.base.as_deref().unwrap_or("sl2");
            meta.insert("base".into(), base.into());
            cons::build_cotangent(&base_algebra(base)?)
        }
        "sl2" => cons::sl2_killing(),
        "so3" => match p.form.as_deref().unwrap_or("neg-killing") {
            "neg-killing" => cons::so3_neg_killing(),
            "killing" => {
                let g = cons::so3();
                let k = g.killing_form();
                MetricLieAlgebra::new(g, SymBilinearForm::new(k).unwrap()).unwrap()
            }
            "split" => cons::so3_split_form(),
            other => {
                return Err(format!(
                    "unknown so3 form {other:?} (expected neg-killing, killing or split)"
                ))
            }
        },
        "so3-pair" => cons::build_so3_pair(),
        "graph-radical" => cons::build_graph_radical(),
        "graph-radical-torus" => cons::build_graph_radical_torus(),
        "euclidean" => {
            let n = p.n.ok_or("euclidean needs --n")?;
            meta.insert("n".into(), n.to_string());
            let g = cons::build_euclidean(n).map_err(|e| e.to_string())?;
            let dim = g.dim;
            let gram = match p.gram.as_deref().unwrap_or("zero") {
                "zero" => Matrix::zero(dim, dim),
                "identity" => Matrix::identity(dim),
                other => {
                    return Err(format!(
                        "unknown euclidean gram {other:?} (expected zero or identity)"
                    ))
                }
            };
            MetricLieAlgebra::new(g, SymBilinearForm::new(gram).unwrap())
                .map_err(|e| e.to_string())?
        }
        other => {
            return Err(format!(
                "unknown builder {other:?}; known names: abelian, heisenberg, osc, \
                 osc-nilpotent, osc-alpha, cotangent, sl2, so3, so3-pair, graph-radical, \
                 graph-radical-torus, euclidean"
            ))
        }
    };
    Ok((m, meta))
}

/// Builds a primary name with optional `--with` factors as an orthogonal
/// direct product.
pub fn build_with_factors(
    name: &str,
    params: &BuildParams,
    with: &[String],
) -> Result<(MetricLieAlgebra, BTreeMap<String, String>), String> {
    let (mut m, mut meta) = build_named(name, params)?;
    for (idx, spec) in with.iter().enumerate() {
        let (fname, fparams) = BuildParams::from_spec(spec)?;
        let (factor, _) = build_named(&fname, &fparams)?;
        m = cons::direct_product(&[&m, &factor]);
        meta.insert(format!("with{}", idx + 1), spec.clone());
    }
    Ok((m, meta))
}
