//! Symmetric bilinear forms on Lie algebras: metric radical, index and
//! relative index, and the invariance subalgebra.

use crate::error::LieError;
use crate::jordan::{signature, Signature};
use crate::lie::LieAlgebra;
use crate::matrix::{unit_vec, Matrix};
use crate::rational::Rational;
use crate::subspace::Subspace;
use num::traits::Zero;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymBilinearForm {
    pub gram: Matrix,
}

impl SymBilinearForm {
    pub fn new(gram: Matrix) -> Result<SymBilinearForm, LieError> {
        if !gram.is_symmetric() {
            return Err(LieError::NotSymmetric);
        }
        Ok(SymBilinearForm { gram })
    }

    pub fn dim(&self) -> usize {
        self.gram.rows
    }

    pub fn eval(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let gy = self.gram.mul_vec(y);
        x.iter()
            .zip(&gy)
            .map(|(a, b)| a * b)
            .fold(Rational::zero(), |acc, v| acc + v)
    }

    /// Gram matrix of the restriction to a subspace basis.
    pub fn restricted_gram(&self, w: &Subspace) -> Matrix {
        let b = w.basis();
        b.transpose().mul(&self.gram).mul(b)
    }
}

#[derive(Debug, Clone)]
pub struct MetricLieAlgebra {
    pub algebra: LieAlgebra,
    pub form: SymBilinearForm,
}

impl MetricLieAlgebra {
    pub fn new(algebra: LieAlgebra, form: SymBilinearForm) -> Result<MetricLieAlgebra, LieError> {
        if algebra.dim != form.dim() {
            return Err(LieError::DimensionMismatch(format!(
                "algebra dimension {} vs form dimension {}",
                algebra.dim,
                form.dim()
            )));
        }
        Ok(MetricLieAlgebra { algebra, form })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim
    }
}

/// Kernel of the form on the whole algebra.
pub fn metric_radical(m: &MetricLieAlgebra) -> Subspace {
    Subspace::from_matrix_columns(&m.form.gram.kernel_matrix())
}

/// Orthogonal space of a subspace with respect to the form.
pub fn perp(m: &MetricLieAlgebra, w: &Subspace) -> Subspace {
    if w.is_zero() {
        return Subspace::full(m.dim());
    }
    let rows: Vec<Vec<Rational>> = w
        .basis_vectors()
        .iter()
        .map(|v| m.form.gram.mul_vec(v))
        .collect();
    Subspace::from_matrix_columns(&Matrix::from_rows(rows).kernel_matrix())
}

pub fn form_signature(m: &MetricLieAlgebra) -> Signature {
    signature(&m.form.gram).expect("gram matrices are symmetric by construction")
}

/// (index, relative index).
///
/// For possibly degenerate forms the index is taken as the dimension of a
/// maximal totally isotropic subspace: zeros + min(positives, negatives).
/// The relative index is the index of the induced form on g / g-perp,
/// i.e. min(positives, negatives).
pub fn index_and_relative_index(m: &MetricLieAlgebra) -> (usize, usize) {
    let s = form_signature(m);
    let ell = s.positives.min(s.negatives);
    (s.zeros + ell, ell)
}

/// Index data of the form restricted to a subspace.
pub fn restricted_index(m: &MetricLieAlgebra, w: &Subspace) -> Signature {
    signature(&m.form.restricted_gram(w)).expect("restriction of symmetric is symmetric")
}

/// Skewness defect of an operator: phi^T G + G phi.
pub fn skew_defect(gram: &Matrix, phi: &Matrix) -> Matrix {
    phi.transpose().mul(gram).add(&gram.mul(phi))
}

pub fn is_skew(gram: &Matrix, phi: &Matrix) -> bool {
    skew_defect(gram, phi).is_zero()
}

/// Maximal subalgebra by which the form is invariant:
/// {x : ad(x)^T G + G ad(x) = 0}, verified to be bracket-closed.
pub fn invariance_subalgebra(m: &MetricLieAlgebra) -> Subspace {
    let n = m.dim();
    let mut rows = Vec::new();
    for a in 0..n {
        for b in a..n {
            // x -> <[x, e_a], e_b> + <e_a, [x, e_b]> is linear in x
            let row: Vec<Rational> = (0..n)
                .map(|i| {
                    let ea = unit_vec(n, a);
                    let eb = unit_vec(n, b);
                    let xi = unit_vec(n, i);
                    let t1 = m.form.eval(&m.algebra.bracket(&xi, &ea), &eb);
                    let t2 = m.form.eval(&ea, &m.algebra.bracket(&xi, &eb));
                    t1 + t2
                })
                .collect();
            rows.push(row);
        }
    }
    let inv = Subspace::from_matrix_columns(&Matrix::from_rows(rows).kernel_matrix());
    assert!(
        m.algebra.is_subalgebra(&inv),
        "invariance locus must be a subalgebra"
    );
    inv
}

pub fn is_invariant(m: &MetricLieAlgebra) -> bool {
    (0..m.dim()).all(|i| is_skew(&m.form.gram, &m.algebra.ad_basis(i)))
}

/// The form is invariant under every element of the given subspace.
pub fn is_invariant_under(m: &MetricLieAlgebra, w: &Subspace) -> bool {
    w.basis_vectors()
        .iter()
        .all(|x| is_skew(&m.form.gram, &m.algebra.ad(x)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_heisenberg, standard_oscillator};
    use crate::rational::rat;

    #[test]
    fn abelian_forms_are_invariant() {
        let g = LieAlgebra::abelian(3);
        let form =
            SymBilinearForm::new(Matrix::from_i64(&[&[1, 2, 0], &[2, 0, 1], &[0, 1, 5]])).unwrap();
        let m = MetricLieAlgebra::new(g, form).unwrap();
        assert!(invariance_subalgebra(&m).is_full());
        assert!(is_invariant(&m));
    }

    #[test]
    fn oscillator_form_is_invariant_and_lorentzian() {
        let m = standard_oscillator(1);
        assert!(is_invariant(&m));
        assert!(invariance_subalgebra(&m).is_full());
        let (mu, ell) = index_and_relative_index(&m);
        assert_eq!((mu, ell), (1, 1));
        assert!(metric_radical(&m).is_zero());
    }

    #[test]
    fn heisenberg_metric_radical_is_the_center() {
        let m = build_heisenberg(1, &[1]).unwrap();
        let r = metric_radical(&m);
        assert_eq!(r.dim(), 1);
        assert!(r.contains(&unit_vec(3, 2)));
        // signature (2, 0, 1): index 1, relative index 0
        let (mu, ell) = index_and_relative_index(&m);
        assert_eq!((mu, ell), (1, 0));
    }

    #[test]
    fn nondegenerate_symmetric_checks() {
        assert!(SymBilinearForm::new(Matrix::from_i64(&[&[0, 1], &[2, 0]])).is_err());
        let f = SymBilinearForm::new(Matrix::identity(2)).unwrap();
        assert_eq!(f.eval(&[rat(1), rat(2)], &[rat(3), rat(4)]), rat(11));
    }
}
