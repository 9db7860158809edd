//! Effectivization, transporters and isotropic-ideal reduction.

use crate::error::LieError;
use crate::forms::{
    index_and_relative_index, is_invariant, metric_radical, perp, MetricLieAlgebra, SymBilinearForm,
};
use crate::lie::{complement_projection_rows, LieAlgebra};
use crate::matrix::Matrix;
use crate::radicals::{is_solvable_algebra, nilradical};
use crate::rational::Rational;
use crate::subspace::Subspace;
use num::traits::Zero;

/// Effective: the metric radical contains no nonzero ideal.
pub fn is_effective(m: &MetricLieAlgebra) -> bool {
    m.algebra.largest_ideal_within(&metric_radical(m)).is_zero()
}

/// Quotient by the largest ideal inside the metric radical, with the
/// pushed-forward form. The result is effective.
pub fn effectivize(m: &MetricLieAlgebra) -> MetricLieAlgebra {
    let ideal = m.algebra.largest_ideal_within(&metric_radical(m));
    if ideal.is_zero() {
        return m.clone();
    }
    let (quot, _) = m
        .algebra
        .quotient(&ideal)
        .expect("largest contained ideal is an ideal");
    let gram = push_form_through(&m.form.gram, &ideal, quot.dim);
    let out = MetricLieAlgebra::new(
        quot,
        SymBilinearForm::new(gram).expect("pushed form stays symmetric"),
    )
    .expect("dimensions agree");
    assert!(is_effective(&out), "effectivization must be effective");
    out
}

/// Pushes a form vanishing on `ideal` through its quotient projection, using
/// the canonical complement sections.
fn push_form_through(gram: &Matrix, ideal: &Subspace, qdim: usize) -> Matrix {
    let n = gram.rows;
    let pivots = ideal.pivots();
    let comp: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    assert_eq!(comp.len(), qdim);
    let mut out = Matrix::zero(qdim, qdim);
    for (a, &ca) in comp.iter().enumerate() {
        for (b, &cb) in comp.iter().enumerate() {
            out.set(a, b, gram.get(ca, cb).clone());
        }
    }
    out
}

/// Transporter {x in q : [x, V] <= U}.
pub fn transporter(g: &LieAlgebra, q: &Subspace, v: &Subspace, u: &Subspace) -> Subspace {
    assert!(
        v.contains_subspace(u),
        "transporter use sites require u <= v"
    );
    if q.is_zero() || v.is_zero() {
        return q.clone();
    }
    let qb = q.basis_vectors();
    let proj = complement_projection_rows(u);
    if proj.is_empty() {
        return q.clone();
    }
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for vv in v.basis_vectors() {
        // columns: [q_a, vv] for each q basis vector
        let cols: Vec<Vec<Rational>> = qb.iter().map(|qa| g.bracket(qa, &vv)).collect();
        let mat = Matrix::from_cols(cols);
        for row in &proj {
            rows.push(
                (0..mat.cols)
                    .map(|c| {
                        let mut acc = Rational::zero();
                        for r in 0..mat.rows {
                            if !row[r].is_zero() {
                                acc += &row[r] * mat.get(r, c);
                            }
                        }
                        acc
                    })
                    .collect(),
            );
        }
    }
    let ker = Matrix::from_rows(rows).kernel_matrix();
    let cols = (0..ker.cols)
        .map(|c| q.basis().mul_vec(&ker.col(c)))
        .collect();
    Subspace::from_columns(g.dim, cols)
}

/// Reduction of a metric Lie algebra by a totally isotropic ideal j:
/// the quotient metric algebra on j-perp / j.
pub fn reduce_by_isotropic_ideal(
    m: &MetricLieAlgebra,
    j: &Subspace,
) -> Result<MetricLieAlgebra, LieError> {
    if !m.form.restricted_gram(j).is_zero() {
        return Err(LieError::NotTotallyIsotropic);
    }
    if !m.algebra.is_ideal(j) {
        return Err(LieError::NotAnIdeal);
    }
    let jperp = perp(m, j);
    if !m.algebra.is_subalgebra(&jperp) {
        return Err(LieError::Precondition(
            "the orthogonal space of the ideal is not a subalgebra".into(),
        ));
    }
    let (sub, inclusion) = m.algebra.restrict(&jperp)?;
    let sub_gram = inclusion.transpose().mul(&m.form.gram).mul(&inclusion);
    let j_in_sub = Subspace::from_columns(
        sub.dim,
        j.basis_vectors()
            .iter()
            .map(|v| {
                jperp
                    .coordinates_of(v)
                    .expect("isotropic ideal lies inside its own perp")
            })
            .collect(),
    );
    let (quot, _) = sub.quotient(&j_in_sub)?;
    let gram = push_form_through(&sub_gram, &j_in_sub, quot.dim);
    MetricLieAlgebra::new(quot, SymBilinearForm::new(gram)?)
}

/// The characteristic totally isotropic ideal z(n) ∩ [g, n] of a solvable
/// metric Lie algebra with invariant form.
pub fn characteristic_isotropic_ideal(m: &MetricLieAlgebra) -> Result<Subspace, LieError> {
    if !is_solvable_algebra(&m.algebra) {
        return Err(LieError::Precondition(
            "characteristic isotropic ideal needs a solvable algebra".into(),
        ));
    }
    if !is_invariant(m) {
        return Err(LieError::Precondition(
            "characteristic isotropic ideal needs an invariant form".into(),
        ));
    }
    let n = nilradical(&m.algebra);
    let zn = m.algebra.centralizer(&n).intersect(&n);
    let gn = m.algebra.bracket_space(&Subspace::full(m.dim()), &n);
    Ok(zn.intersect(&gn))
}

#[derive(Debug, Clone)]
pub struct ReductionStep {
    pub isotropic_ideal: Subspace,
    pub quotient: MetricLieAlgebra,
}

#[derive(Debug, Clone)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
}

impl ReductionTrace {
    pub fn final_algebra<'a>(&'a self, start: &'a MetricLieAlgebra) -> &'a MetricLieAlgebra {
        self.steps.last().map_or(start, |s| &s.quotient)
    }
}

/// Repeatedly reduces a solvable metric Lie algebra with (nil-)invariant form
/// by characteristic totally isotropic ideals until it is abelian.
///
/// The preferred ideal is z(n) ∩ [g, n]; when that is not totally isotropic
/// it is replaced by its intersection with its own orthogonal space, and as a
/// last resort by a totally isotropic ideal inside the center.
pub fn complete_reduction(m: &MetricLieAlgebra) -> Result<ReductionTrace, LieError> {
    if !is_solvable_algebra(&m.algebra) {
        return Err(LieError::Precondition(
            "complete reduction needs a solvable algebra".into(),
        ));
    }
    if !is_invariant(m) {
        return Err(LieError::Precondition(
            "complete reduction needs a nil-invariant (hence invariant) form".into(),
        ));
    }
    let mut steps = Vec::new();
    let mut current = m.clone();
    let (mu0, _) = index_and_relative_index(m);
    let mut last_mu = mu0;
    while !current.algebra.derived_subalgebra().is_zero() {
        let j0 = characteristic_isotropic_ideal(&current)?;
        let j = if current.form.restricted_gram(&j0).is_zero() {
            j0
        } else {
            let refined = j0.intersect(&perp(&current, &j0));
            if refined.is_zero() {
                central_isotropic_ideal(&current)?
            } else {
                refined
            }
        };
        let j = if j.is_zero() {
            central_isotropic_ideal(&current)?
        } else {
            j
        };
        let next = reduce_by_isotropic_ideal(&current, &j)?;
        let (mu, _) = index_and_relative_index(&next);
        if mu >= last_mu {
            return Err(LieError::InvariantViolation(
                "reduction failed to decrease the index".into(),
            ));
        }
        last_mu = mu;
        steps.push(ReductionStep {
            isotropic_ideal: j,
            quotient: next.clone(),
        });
        if steps.len() > mu0 {
            return Err(LieError::InvariantViolation(
                "reduction exceeded the initial index".into(),
            ));
        }
        current = next;
    }
    Ok(ReductionTrace { steps })
}

fn central_isotropic_ideal(m: &MetricLieAlgebra) -> Result<Subspace, LieError> {
    let z = m.algebra.center();
    let w = z.intersect(&perp(m, &z));
    if !w.is_zero() {
        return Ok(w);
    }
    for v in z.basis_vectors() {
        if m.form.eval(&v, &v).is_zero() {
            return Ok(Subspace::from_columns(m.dim(), vec![v]));
        }
    }
    Err(LieError::InvariantViolation(
        "no totally isotropic central ideal in a non-abelian solvable reduction".into(),
    ))
}
