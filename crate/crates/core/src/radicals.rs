//! Solvable radical and nilradical.

use crate::lie::LieAlgebra;
use crate::matrix::Matrix;
use crate::rational::Rational;
use crate::subspace::Subspace;

/// Derived series test.
pub fn is_solvable_algebra(g: &LieAlgebra) -> bool {
    let mut cur = Subspace::full(g.dim);
    loop {
        let next = g.bracket_space(&cur, &cur);
        if next.is_zero() {
            return true;
        }
        if next.dim() == cur.dim() {
            return false;
        }
        cur = next;
    }
}

/// Lower central series test.
pub fn is_nilpotent_algebra(g: &LieAlgebra) -> bool {
    let full = Subspace::full(g.dim);
    let mut cur = full.clone();
    loop {
        let next = g.bracket_space(&full, &cur);
        if next.is_zero() {
            return true;
        }
        if next.dim() == cur.dim() {
            return false;
        }
        cur = next;
    }
}

/// Nilpotency of the algebra induced on a bracket-closed subspace.
pub fn is_nilpotent_on(g: &LieAlgebra, w: &Subspace) -> bool {
    let mut cur = w.clone();
    loop {
        let next = g.bracket_space(w, &cur);
        if next.is_zero() {
            return true;
        }
        if next.dim() == cur.dim() {
            return false;
        }
        cur = next;
    }
}

/// Solvable radical by the Cartan criterion: the Killing-orthogonal space of
/// the derived algebra. Verified to be a solvable ideal.
pub fn solvable_radical(g: &LieAlgebra) -> Subspace {
    let killing = g.killing_form();
    let derived = g.derived_subalgebra();
    let rad = if derived.is_zero() {
        Subspace::full(g.dim)
    } else {
        // rows: x -> kappa(x, d) for each derived basis vector d
        let rows: Vec<Vec<Rational>> = derived
            .basis_vectors()
            .iter()
            .map(|d| killing.mul_vec(d))
            .collect();
        Subspace::from_matrix_columns(&Matrix::from_rows(rows).kernel_matrix())
    };
    assert!(g.is_ideal(&rad), "radical must be an ideal");
    if !rad.is_zero() {
        let (sub, _) = g.restrict(&rad).expect("radical is bracket-closed");
        assert!(is_solvable_algebra(&sub), "radical must be solvable");
    }
    rad
}

/// Maximal nilpotent ideal.
///
/// Computed inside the solvable radical r as the set of x whose adjoint on r
/// is nilpotent. That set equals the preimage of the Jacobson radical of the
/// associative matrix algebra generated by ad_r(r) (char 0), which is cut out
/// by the exact linear conditions tr(ad_r(x) b) = 0 over a basis b of that
/// algebra. The result is verified to be a nilpotent ideal of g.
pub fn nilradical(g: &LieAlgebra) -> Subspace {
    let rad = solvable_radical(g);
    if rad.is_zero() {
        return rad;
    }
    let (r, inclusion) = g.restrict(&rad).expect("radical is bracket-closed");
    let nil_in_r = nilradical_of_solvable(&r);
    // map back to ambient coordinates
    let cols = nil_in_r
        .basis_vectors()
        .iter()
        .map(|v| inclusion.mul_vec(v))
        .collect();
    let nil = Subspace::from_columns(g.dim, cols);
    assert!(
        g.is_ideal(&nil),
        "nilradical must be an ideal of the ambient algebra"
    );
    assert!(is_nilpotent_on(g, &nil), "nilradical must be nilpotent");
    nil
}

fn nilradical_of_solvable(r: &LieAlgebra) -> Subspace {
    let n = r.dim;
    if n == 0 {
        return Subspace::zero(0);
    }
    let ads: Vec<Matrix> = (0..n).map(|i| r.ad_basis(i)).collect();
    if ads.iter().all(|m| m.is_zero()) {
        return Subspace::full(n); // abelian
    }
    // associative span closure of ad(r) under matrix products
    let mut span: Vec<Matrix> = Vec::new();
    let mut span_rows: Vec<Vec<Rational>> = Vec::new();
    let add = |m: Matrix, span: &mut Vec<Matrix>, rows: &mut Vec<Vec<Rational>>| -> bool {
        if m.is_zero() {
            return false;
        }
        let v = m.vectorize();
        let in_span = !rows.is_empty()
            && Matrix::from_rows(rows.clone())
                .transpose()
                .solve_vec(&v)
                .is_some();
        if in_span {
            return false;
        }
        rows.push(v);
        span.push(m);
        true
    };
    for m in &ads {
        add(m.clone(), &mut span, &mut span_rows);
    }
    let mut frontier = span.clone();
    while !frontier.is_empty() {
        let mut fresh = Vec::new();
        for f in &frontier {
            for b in span.clone() {
                for prod in [f.mul(&b), b.mul(f)] {
                    if add(prod.clone(), &mut span, &mut span_rows) {
                        fresh.push(prod);
                    }
                }
            }
        }
        frontier = fresh;
    }
    // trace-form radical: x in r with tr(ad(x) b) = 0 for every basis b
    let rows: Vec<Vec<Rational>> = span
        .iter()
        .map(|b| (0..n).map(|i| ads[i].trace_mul(b)).collect())
        .collect();
    Subspace::from_matrix_columns(&Matrix::from_rows(rows).kernel_matrix())
}
