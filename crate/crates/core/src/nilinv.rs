//! Nil-invariance certificates and nil-invariant form spaces.
//!
//! Full nil-invariance quantifies over all nilpotent operators in the
//! algebraic hull of the adjoint representation. The computable test set
//! N(S) used here is built from three sources:
//!   * nilpotent Jordan parts of a spanning set of S, where S is the closure
//!     of ad(g) under commutators and Jordan-part extraction (to
//!     linear-span fixpoint),
//!   * ad(x) for x in the nilradical,
//!   * ad(y) for nilpotent generators y of the non-compact Levi part.
//! Every member of N(S) is a genuine nilpotent element of the hull, so a
//! failed check is always correct. The certificate records the full operator
//! list so a stricter checker can be swapped in.

use crate::forms::{skew_defect, MetricLieAlgebra, SymBilinearForm};
use crate::jordan::jordan_chevalley;
use crate::levi::{levi_decomposition, simple_ideals};
use crate::lie::LieAlgebra;
use crate::matrix::{unit_vec, vec_add, vec_sub, Matrix};
use crate::radicals::nilradical;
use crate::rational::Rational;
use crate::subspace::Subspace;
use num::traits::{One, Zero};
use std::collections::VecDeque;

/// Incremental echelon span of vectorized operators.
struct MatSpan {
    len: usize,
    rows: Vec<(usize, Vec<Rational>)>, // (pivot, reduced vector)
}

impl MatSpan {
    fn new(n: usize) -> MatSpan {
        MatSpan {
            len: n * n,
            rows: Vec::new(),
        }
    }

    fn reduce(&self, v: &mut Vec<Rational>) {
        for (p, row) in &self.rows {
            let c = v[*p].clone();
            if !c.is_zero() {
                for i in *p..self.len {
                    if !row[i].is_zero() {
                        v[i] = &v[i] - &c * &row[i];
                    }
                }
            }
        }
    }

    /// Adds the matrix if it enlarges the span; returns whether it did.
    fn try_add(&mut self, m: &Matrix) -> bool {
        let mut v = m.vectorize();
        assert_eq!(v.len(), self.len);
        self.reduce(&mut v);
        match v.iter().position(|x| !x.is_zero()) {
            None => false,
            Some(p) => {
                let inv = Rational::one() / &v[p];
                for x in v.iter_mut() {
                    *x = &*x * &inv;
                }
                self.rows.push((p, v));
                self.rows.sort_by_key(|(p, _)| *p);
                true
            }
        }
    }
}

/// Closure of {ad(e_i)} under commutators and Jordan-part extraction, as a
/// list of spanning operators in deterministic insertion order.
pub fn operator_closure(g: &LieAlgebra) -> Vec<Matrix> {
    let n = g.dim;
    let mut span = MatSpan::new(n);
    let mut basis: Vec<Matrix> = Vec::new();
    let mut queue: VecDeque<Matrix> = VecDeque::new();
    for i in 0..n {
        let m = g.ad_basis(i);
        if span.try_add(&m) {
            basis.push(m.clone());
            queue.push_back(m);
        }
    }
    while let Some(a) = queue.pop_front() {
        let jp = jordan_chevalley(&a);
        for part in [jp.semisimple, jp.nilpotent] {
            if span.try_add(&part) {
                basis.push(part.clone());
                queue.push_back(part);
            }
        }
        for b in basis.clone() {
            let c = a.commutator(&b);
            if span.try_add(&c) {
                basis.push(c.clone());
                queue.push_back(c);
            }
        }
    }
    basis
}

/// The nilpotent test set N(S).
pub fn nilpotent_test_set(g: &LieAlgebra) -> Vec<Matrix> {
    let mut set: Vec<Matrix> = Vec::new();
    let push = |m: Matrix, set: &mut Vec<Matrix>| {
        if !m.is_zero() && !set.contains(&m) {
            debug_assert!(m.is_nilpotent());
            set.push(m);
        }
    };
    for a in operator_closure(g) {
        let jp = jordan_chevalley(&a);
        push(jp.nilpotent, &mut set);
    }
    for x in nilradical(g).basis_vectors() {
        push(g.ad(&x), &mut set);
    }
    for y in noncompact_nilpotent_generators(g) {
        push(g.ad(&y), &mut set);
    }
    for m in &set {
        assert!(m.is_nilpotent(), "test set must consist of nilpotents");
    }
    set
}

/// Nilpotent elements generating each simple non-compact Levi factor, found
/// by scanning small integer combinations and abstract Jordan parts.
pub fn noncompact_nilpotent_generators(g: &LieAlgebra) -> Vec<Vec<Rational>> {
    let levi = levi_decomposition(g);
    let mut out = Vec::new();
    if levi.noncompact.is_zero() {
        return out;
    }
    let (s_alg, s_inc) = g
        .restrict(&levi.noncompact)
        .expect("Levi factor is a subalgebra");
    for ideal in simple_ideals(&s_alg) {
        let (f, f_inc) = s_alg
            .restrict(&ideal)
            .expect("simple ideals are subalgebras");
        for y in nilpotent_generators_of_simple(&f) {
            out.push(s_inc.mul_vec(&f_inc.mul_vec(&y)));
        }
    }
    out
}

fn nilpotent_generators_of_simple(f: &LieAlgebra) -> Vec<Vec<Rational>> {
    let n = f.dim;
    // the map y -> ad(y), for pulling abstract Jordan parts back into f
    let ad_map = Matrix::from_cols((0..n).map(|i| f.ad_basis(i).vectorize()).collect());
    let mut candidates: Vec<Vec<Rational>> = (0..n).map(|i| unit_vec(n, i)).collect();
    for i in 0..n {
        for j in (i + 1)..n {
            candidates.push(vec_add(&unit_vec(n, i), &unit_vec(n, j)));
            candidates.push(vec_sub(&unit_vec(n, i), &unit_vec(n, j)));
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let ij = vec_add(&unit_vec(n, i), &unit_vec(n, j));
                candidates.push(vec_add(&ij, &unit_vec(n, k)));
                candidates.push(vec_sub(&ij, &unit_vec(n, k)));
            }
        }
    }
    let mut found: Vec<Vec<Rational>> = Vec::new();
    for x in candidates {
        let a = f.ad(&x);
        if a.is_zero() {
            continue;
        }
        let jp = jordan_chevalley(&a);
        if jp.nilpotent.is_zero() {
            continue;
        }
        let y = if jp.semisimple.is_zero() {
            x
        } else {
            match ad_map.solve_vec(&jp.nilpotent.vectorize()) {
                Some(y) => y,
                None => continue,
            }
        };
        if !found.contains(&y) {
            found.push(y);
        }
        if generated_subalgebra(f, &found).is_full() {
            break;
        }
    }
    found
}

fn generated_subalgebra(f: &LieAlgebra, seed: &[Vec<Rational>]) -> Subspace {
    let mut w = Subspace::from_columns(f.dim, seed.to_vec());
    loop {
        let grown = w.sum(&f.bracket_space(&w, &w));
        if grown.dim() == w.dim() {
            return w;
        }
        w = grown;
    }
}

#[derive(Debug, Clone)]
pub struct NilInvarianceWitness {
    pub operator: Matrix,
    pub left: Vec<Rational>,
    pub right: Vec<Rational>,
}

#[derive(Debug, Clone)]
pub struct NilInvarianceCertificate {
    pub verdict: bool,
    pub tested_operators: Vec<Matrix>,
    pub witness: Option<NilInvarianceWitness>,
}

/// Checks skewness of the form under every operator in N(S). A failure comes
/// with the offending operator and a basis pair violating skewness exactly.
pub fn nil_invariance_check(m: &MetricLieAlgebra) -> NilInvarianceCertificate {
    let ops = nilpotent_test_set(&m.algebra);
    for phi in &ops {
        let defect = skew_defect(&m.form.gram, phi);
        if defect.is_zero() {
            continue;
        }
        let n = m.dim();
        let (mut p, mut q) = (0, 0);
        'scan: for a in 0..n {
            for b in 0..n {
                if !defect.get(a, b).is_zero() {
                    p = a;
                    q = b;
                    break 'scan;
                }
            }
        }
        return NilInvarianceCertificate {
            verdict: false,
            tested_operators: ops.clone(),
            witness: Some(NilInvarianceWitness {
                operator: phi.clone(),
                left: unit_vec(n, p),
                right: unit_vec(n, q),
            }),
        };
    }
    NilInvarianceCertificate {
        verdict: true,
        tested_operators: ops,
        witness: None,
    }
}

/// Basis of the space of symmetric forms skew under every operator in N(S).
pub fn nilinvariant_form_space(g: &LieAlgebra) -> Vec<SymBilinearForm> {
    let n = g.dim;
    let ops = nilpotent_test_set(g);
    let unknowns: Vec<(usize, usize)> = (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
    let index_of = |a: usize, b: usize| -> usize {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        // position of (a, b) in the row-major upper triangle
        a * n - a * (a + 1) / 2 + b
    };
    let sols = if ops.is_empty() {
        Matrix::identity(unknowns.len())
    } else {
        let mut rows = Vec::new();
        for phi in &ops {
            for p in 0..n {
                for q in p..n {
                    let mut row = vec![Rational::zero(); unknowns.len()];
                    for r in 0..n {
                        let c1 = phi.get(r, p);
                        if !c1.is_zero() {
                            let u = index_of(r, q);
                            row[u] = &row[u] + c1;
                        }
                        let c2 = phi.get(r, q);
                        if !c2.is_zero() {
                            let u = index_of(p, r);
                            row[u] = &row[u] + c2;
                        }
                    }
                    rows.push(row);
                }
            }
        }
        Matrix::from_rows(rows).kernel_matrix()
    };
    let mut out = Vec::new();
    for c in 0..sols.cols {
        let coeffs = sols.col(c);
        let mut gram = Matrix::zero(n, n);
        for (u, &(a, b)) in unknowns.iter().enumerate() {
            gram.set(a, b, coeffs[u].clone());
            gram.set(b, a, coeffs[u].clone());
        }
        out.push(SymBilinearForm::new(gram).expect("constructed symmetric"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{
        build_graph_radical, build_so3_pair, sl2, so3_split_form, standard_oscillator,
    };
    use crate::forms::invariance_subalgebra;
    use crate::lie::LieAlgebra;

    #[test]
    fn abelian_form_space_is_everything() {
        let g = LieAlgebra::abelian(3);
        assert_eq!(nilinvariant_form_space(&g).len(), 6);
    }

    #[test]
    fn sl2_form_space_is_the_killing_line() {
        let g = sl2();
        let basis = nilinvariant_form_space(&g);
        assert_eq!(basis.len(), 1);
        // proportional to the Killing form
        let k = g.killing_form();
        let b = &basis[0].gram;
        let ratio = k.get(2, 2) / b.get(2, 2);
        assert_eq!(b.scale(&ratio), k);
    }

    #[test]
    fn oscillator_passes() {
        let m = standard_oscillator(1);
        let cert = nil_invariance_check(&m);
        assert!(cert.verdict);
        assert!(!cert.tested_operators.is_empty());
    }

    #[test]
    fn compact_indefinite_form_passes_vacuously() {
        let m = so3_split_form();
        let cert = nil_invariance_check(&m);
        assert!(cert.verdict);
        assert!(cert.tested_operators.is_empty());
    }

    #[test]
    fn so3_pair_is_nil_invariant_but_not_invariant() {
        let m = build_so3_pair();
        assert!(nil_invariance_check(&m).verdict);
        let inv = invariance_subalgebra(&m);
        assert_eq!(inv.dim(), 6);
        // inv is exactly the abelian radical
        for i in 3..9 {
            assert!(inv.contains(&unit_vec(9, i)));
        }
    }

    #[test]
    fn graph_radical_is_nil_invariant() {
        let m = build_graph_radical();
        assert!(nil_invariance_check(&m).verdict);
        assert!(!crate::forms::is_invariant(&m));
    }

    #[test]
    fn euclidean_identity_form_fails_with_witness() {
        let g = crate::constructions::build_euclidean(4).unwrap();
        let m =
            MetricLieAlgebra::new(g, SymBilinearForm::new(Matrix::identity(10)).unwrap()).unwrap();
        let cert = nil_invariance_check(&m);
        assert!(!cert.verdict);
        let w = cert.witness.unwrap();
        let defect = crate::forms::skew_defect(&m.form.gram, &w.operator);
        let val = {
            // <phi left, right> + <left, phi right> reproduced from the defect
            let mut acc = Rational::zero();
            for (i, l) in w.left.iter().enumerate() {
                for (j, r) in w.right.iter().enumerate() {
                    acc += l * defect.get(i, j) * r;
                }
            }
            acc
        };
        assert!(!val.is_zero());
    }

    #[test]
    fn sl2_nilpotent_generators_generate() {
        let f = sl2();
        let gens = nilpotent_generators_of_simple(&f);
        assert!(generated_subalgebra(&f, &gens).is_full());
        for y in &gens {
            assert!(f.ad(y).is_nilpotent());
        }
    }
}
