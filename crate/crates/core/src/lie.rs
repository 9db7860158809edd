//! Lie algebras presented by structure constants, with the structural
//! operations that do not need a bilinear form: brackets and adjoints,
//! Killing form, center/centralizer/normalizer, derived algebra, largest
//! contained ideal, quotients, subalgebra restriction and semidirect
//! products. Everything is validated at construction: antisymmetry and the
//! Jacobi identity are checked exactly over the rationals.

use crate::error::LieError;
use crate::matrix::{unit_vec, vec_is_zero, Matrix};
use crate::rational::Rational;
use crate::subspace::Subspace;
use num::traits::Zero;

#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    pub dim: usize,
    pub labels: Vec<String>,
    // c[i][j][k] with [e_i, e_j] = sum_k c[i][j][k] e_k, flattened
    structure: Vec<Rational>,
}

impl std::fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "LieAlgebra(dim {}, labels {:?})", self.dim, self.labels)
    }
}

/// Sparse structure-constant entry: [e_i, e_j] += coeff * e_k.
#[derive(Debug, Clone)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub coeff: Rational,
}

impl LieAlgebra {
    /// Builds and validates a Lie algebra from sparse bracket entries.
    ///
    /// Entries may specify either orientation; whatever is given for (i, j)
    /// must be consistent with antisymmetry if (j, i) is also given, and the
    /// missing orientation is filled in automatically.
    pub fn from_structure_constants(
        dim: usize,
        labels: Vec<String>,
        entries: &[BracketEntry],
    ) -> Result<LieAlgebra, LieError> {
        if labels.len() != dim {
            return Err(LieError::DimensionMismatch(format!(
                "{} labels for dimension {}",
                labels.len(),
                dim
            )));
        }
        let mut structure = vec![Rational::zero(); dim * dim * dim];
        let mut given = vec![false; dim * dim];
        let idx = |i: usize, j: usize, k: usize| (i * dim + j) * dim + k;
        for e in entries {
            if e.i >= dim || e.j >= dim || e.k >= dim {
                return Err(LieError::DimensionMismatch(format!(
                    "bracket entry ({}, {}, {}) out of range for dimension {}",
                    e.i, e.j, e.k, dim
                )));
            }
            structure[idx(e.i, e.j, e.k)] += &e.coeff;
            given[e.i * dim + e.j] = true;
        }
        // fill opposite orientation; detect inconsistent double specification
        for i in 0..dim {
            for j in 0..dim {
                if i == j {
                    for k in 0..dim {
                        if !structure[idx(i, i, k)].is_zero() {
                            return Err(LieError::Antisymmetry(i, i));
                        }
                    }
                    continue;
                }
                if given[i * dim + j] && given[j * dim + i] {
                    for k in 0..dim {
                        let s = &structure[idx(i, j, k)] + &structure[idx(j, i, k)];
                        if !s.is_zero() {
                            return Err(LieError::Antisymmetry(i, j));
                        }
                    }
                } else if given[i * dim + j] && !given[j * dim + i] {
                    for k in 0..dim {
                        structure[idx(j, i, k)] = -structure[idx(i, j, k)].clone();
                    }
                    given[j * dim + i] = true;
                }
            }
        }
        let g = LieAlgebra {
            dim,
            labels,
            structure,
        };
        g.check_jacobi()?;
        Ok(g)
    }

    /// Dense constructor used when structure constants are computed, not typed in.
    pub fn from_dense(
        labels: Vec<String>,
        table: Vec<Vec<Vec<Rational>>>,
    ) -> Result<LieAlgebra, LieError> {
        let dim = table.len();
        let mut entries = Vec::new();
        for (i, bi) in table.iter().enumerate() {
            for (j, bij) in bi.iter().enumerate() {
                for (k, c) in bij.iter().enumerate() {
                    if !c.is_zero() {
                        entries.push(BracketEntry {
                            i,
                            j,
                            k,
                            coeff: c.clone(),
                        });
                    }
                }
            }
        }
        LieAlgebra::from_structure_constants(dim, labels, &entries)
    }

    pub fn abelian(dim: usize) -> LieAlgebra {
        let labels = (0..dim).map(|i| format!("e{}", i + 1)).collect();
        LieAlgebra::from_structure_constants(dim, labels, &[]).unwrap()
    }

    fn check_jacobi(&self) -> Result<(), LieError> {
        let n = self.dim;
        for i in 0..n {
            for j in (i + 1)..n {
                let bij = self.bracket_basis(i, j);
                for k in (j + 1)..n {
                    let bjk = self.bracket_basis(j, k);
                    let bki = self.bracket_basis(k, i);
                    let mut s = self.bracket(&bij, &unit_vec(n, k));
                    let t = self.bracket(&bjk, &unit_vec(n, i));
                    let u = self.bracket(&bki, &unit_vec(n, j));
                    for l in 0..n {
                        s[l] = &s[l] + &t[l] + &u[l];
                    }
                    if !vec_is_zero(&s) {
                        return Err(LieError::Jacobi(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.structure[(i * self.dim + j) * self.dim + k]
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Rational> {
        (0..self.dim)
            .map(|k| self.structure_constant(i, j, k).clone())
            .collect()
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let mut out = vec![Rational::zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let f = &x[i] * &y[j];
                for k in 0..self.dim {
                    let c = self.structure_constant(i, j, k);
                    if !c.is_zero() {
                        out[k] = &out[k] + &f * c;
                    }
                }
            }
        }
        out
    }

    /// ad(e_i) as a matrix (column j is [e_i, e_j]).
    pub fn ad_basis(&self, i: usize) -> Matrix {
        let cols = (0..self.dim).map(|j| self.bracket_basis(i, j)).collect();
        Matrix::from_cols(cols)
    }

    pub fn ad(&self, x: &[Rational]) -> Matrix {
        let cols = (0..self.dim)
            .map(|j| self.bracket(x, &unit_vec(self.dim, j)))
            .collect();
        Matrix::from_cols(cols)
    }

    /// Gram(i,j) = trace(ad(e_i) ad(e_j)).
    pub fn killing_form(&self) -> Matrix {
        let ads: Vec<Matrix> = (0..self.dim).map(|i| self.ad_basis(i)).collect();
        let mut g = Matrix::zero(self.dim, self.dim);
        for i in 0..self.dim {
            for j in i..self.dim {
                let t = ads[i].trace_mul(&ads[j]);
                g.set(i, j, t.clone());
                g.set(j, i, t);
            }
        }
        g
    }

    /// Killing form of the ambient algebra restricted to a subspace basis.
    pub fn killing_on(&self, w: &Subspace) -> Matrix {
        let vecs = w.basis_vectors();
        let ads: Vec<Matrix> = vecs.iter().map(|v| self.ad(v)).collect();
        let d = vecs.len();
        let mut g = Matrix::zero(d, d);
        for i in 0..d {
            for j in i..d {
                let t = ads[i].trace_mul(&ads[j]);
                g.set(i, j, t.clone());
                g.set(j, i, t);
            }
        }
        g
    }

    pub fn derived_subalgebra(&self) -> Subspace {
        let mut cols = Vec::new();
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                cols.push(self.bracket_basis(i, j));
            }
        }
        Subspace::from_columns(self.dim, cols)
    }

    /// span of [x, W] over a spanning set x and the basis of W.
    pub fn bracket_space(&self, v: &Subspace, w: &Subspace) -> Subspace {
        let mut cols = Vec::new();
        for x in v.basis_vectors() {
            for y in w.basis_vectors() {
                cols.push(self.bracket(&x, &y));
            }
        }
        Subspace::from_columns(self.dim, cols)
    }

    pub fn center(&self) -> Subspace {
        self.centralizer(&Subspace::full(self.dim))
    }

    /// {x : [x, W] = 0}.
    pub fn centralizer(&self, w: &Subspace) -> Subspace {
        let mut rows = Vec::new();
        for y in w.basis_vectors() {
            // the map x -> [x, y] is linear in x; stack its matrix
            let m = self.ad(&y).neg(); // [x, y] = -[y, x] = -ad(y) x
            for r in 0..self.dim {
                rows.push(m.row(r));
            }
        }
        if rows.is_empty() {
            return Subspace::full(self.dim);
        }
        Subspace::from_matrix_columns(&Matrix::from_rows(rows).kernel_matrix())
    }

    /// {x : [x, W] <= W}.
    pub fn normalizer(&self, w: &Subspace) -> Subspace {
        let mut rows = Vec::new();
        for y in w.basis_vectors() {
            let m = self.ad(&y).neg();
            // require [x, y] in W: project onto a complement of W
            for row in complement_projection_rows(w) {
                rows.push(row_times_matrix(&row, &m));
            }
        }
        if rows.is_empty() {
            return Subspace::full(self.dim);
        }
        Subspace::from_matrix_columns(&Matrix::from_rows(rows).kernel_matrix())
    }

    pub fn is_subalgebra(&self, w: &Subspace) -> bool {
        let vecs = w.basis_vectors();
        for (a, x) in vecs.iter().enumerate() {
            for y in vecs.iter().skip(a + 1) {
                if !w.contains(&self.bracket(x, y)) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_ideal(&self, w: &Subspace) -> bool {
        for i in 0..self.dim {
            for y in w.basis_vectors() {
                if !w.contains(&self.bracket(&unit_vec(self.dim, i), &y)) {
                    return false;
                }
            }
        }
        true
    }

    /// Smallest ideal containing the given vectors.
    pub fn ideal_closure(&self, seed: Vec<Vec<Rational>>) -> Subspace {
        let mut w = Subspace::from_columns(self.dim, seed);
        loop {
            let grown = w.sum(&self.bracket_space(&Subspace::full(self.dim), &w));
            if grown.dim() == w.dim() {
                return w;
            }
            w = grown;
        }
    }

    /// Greatest ideal of the algebra contained in w, by monotone shrinking.
    pub fn largest_ideal_within(&self, w: &Subspace) -> Subspace {
        let mut cur = w.clone();
        loop {
            // cur ∩ {x : [e_i, x] in cur for all i}
            let mut rows = Vec::new();
            let proj = complement_projection_rows(&cur);
            for i in 0..self.dim {
                let m = self.ad_basis(i);
                for row in &proj {
                    rows.push(row_times_matrix(row, &m));
                }
            }
            let stable = if rows.is_empty() {
                Subspace::full(self.dim)
            } else {
                Subspace::from_matrix_columns(&Matrix::from_rows(rows).kernel_matrix())
            };
            let next = cur.intersect(&stable);
            if next.dim() == cur.dim() {
                return next;
            }
            cur = next;
        }
    }

    /// Quotient by a validated ideal, in the canonical complement basis
    /// (lexicographically earliest non-pivot coordinates). Also returns the
    /// projection matrix g -> quotient coordinates.
    pub fn quotient(&self, ideal: &Subspace) -> Result<(LieAlgebra, Matrix), LieError> {
        if !self.is_ideal(ideal) {
            return Err(LieError::NotAnIdeal);
        }
        let pivots: Vec<usize> = ideal.pivots().to_vec();
        let comp: Vec<usize> = (0..self.dim).filter(|c| !pivots.contains(c)).collect();
        let q = comp.len();
        // projection: reduce modulo the echelon ideal basis, then read off
        // complement coordinates
        let mut proj = Matrix::zero(q, self.dim);
        for c in 0..self.dim {
            let mut v = unit_vec(self.dim, c);
            for (k, &p) in pivots.iter().enumerate() {
                let f = v[p].clone();
                if !f.is_zero() {
                    for r in 0..self.dim {
                        let b = ideal.basis().get(r, k);
                        if !b.is_zero() {
                            v[r] = &v[r] - &f * b;
                        }
                    }
                }
            }
            for (qi, &cc) in comp.iter().enumerate() {
                proj.set(qi, c, v[cc].clone());
            }
        }
        let mut table = vec![vec![vec![Rational::zero(); q]; q]; q];
        for (a, &ca) in comp.iter().enumerate() {
            for (b, &cb) in comp.iter().enumerate() {
                let br = self.bracket(&unit_vec(self.dim, ca), &unit_vec(self.dim, cb));
                let pq = proj.mul_vec(&br);
                table[a][b] = pq;
            }
        }
        let labels = comp.iter().map(|&c| self.labels[c].clone()).collect();
        let quot = LieAlgebra::from_dense(labels, table)?;
        Ok((quot, proj))
    }

    /// The algebra structure induced on a subspace closed under the bracket,
    /// with the inclusion matrix back into the ambient algebra.
    pub fn restrict(&self, w: &Subspace) -> Result<(LieAlgebra, Matrix), LieError> {
        let vecs = w.basis_vectors();
        let d = vecs.len();
        let mut table = vec![vec![vec![Rational::zero(); d]; d]; d];
        for a in 0..d {
            for b in 0..d {
                let br = self.bracket(&vecs[a], &vecs[b]);
                let coords = w.coordinates_of(&br).ok_or(LieError::NotASubalgebra)?;
                table[a][b] = coords;
            }
        }
        let labels = (0..d).map(|i| format!("w{}", i + 1)).collect();
        let sub = LieAlgebra::from_dense(labels, table)?;
        Ok((sub, w.basis().clone()))
    }
}

/// Rows of a projection onto a complement of w (zero rows omitted); v lies in
/// w iff every returned row annihilates v.
pub fn complement_projection_rows(w: &Subspace) -> Vec<Vec<Rational>> {
    let n = w.ambient;
    if w.is_full() {
        return Vec::new();
    }
    if w.is_zero() {
        return (0..n).map(|i| unit_vec(n, i)).collect();
    }
    // complement coordinates after reduction by the echelon basis
    let pivots = w.pivots();
    let comp: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut rows = Vec::new();
    for &cc in &comp {
        // functional x -> (x reduced mod w)[cc]
        let mut row = unit_vec(n, cc);
        for (k, &p) in pivots.iter().enumerate() {
            // reduction subtracts x[p] * basis_k; its cc-coordinate contributes
            let b = w.basis().get(cc, k).clone();
            row[p] = -b;
        }
        rows.push(row);
    }
    rows
}

fn row_times_matrix(row: &[Rational], m: &Matrix) -> Vec<Rational> {
    (0..m.cols)
        .map(|c| {
            let mut acc = Rational::zero();
            for r in 0..m.rows {
                if !row[r].is_zero() {
                    acc += &row[r] * m.get(r, c);
                }
            }
            acc
        })
        .collect()
}

/// f ⋉ v for a representation of f by derivations of v.
///
/// `action[i]` is the matrix by which the i-th basis vector of f acts on v.
/// The representation property and the derivation property are validated.
pub fn semidirect_product(
    f: &LieAlgebra,
    v: &LieAlgebra,
    action: &[Matrix],
) -> Result<LieAlgebra, LieError> {
    if action.len() != f.dim {
        return Err(LieError::DimensionMismatch(
            "one action matrix per basis vector of the acting algebra".into(),
        ));
    }
    for m in action {
        if m.rows != v.dim || m.cols != v.dim {
            return Err(LieError::DimensionMismatch(
                "action matrices must be square of the module dimension".into(),
            ));
        }
    }
    let act = |x: &[Rational]| -> Matrix {
        let mut m = Matrix::zero(v.dim, v.dim);
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                m = m.add(&action[i].scale(c));
            }
        }
        m
    };
    // representation: rho([x,y]) = [rho(x), rho(y)]
    for i in 0..f.dim {
        for j in (i + 1)..f.dim {
            let lhs = act(&f.bracket_basis(i, j));
            let rhs = action[i].commutator(&action[j]);
            if lhs != rhs {
                return Err(LieError::Precondition(format!(
                    "action is not a representation at basis pair ({i}, {j})"
                )));
            }
        }
    }
    // derivation: rho(x)[a,b] = [rho(x)a, b] + [a, rho(x)b]
    for m in action {
        for a in 0..v.dim {
            for b in (a + 1)..v.dim {
                let lhs = m.mul_vec(&v.bracket_basis(a, b));
                let ea = unit_vec(v.dim, a);
                let eb = unit_vec(v.dim, b);
                let rhs = crate::matrix::vec_add(
                    &v.bracket(&m.mul_vec(&ea), &eb),
                    &v.bracket(&ea, &m.mul_vec(&eb)),
                );
                if lhs != rhs {
                    return Err(LieError::Precondition(format!(
                        "action is not by derivations at module pair ({a}, {b})"
                    )));
                }
            }
        }
    }
    let n = f.dim + v.dim;
    let mut table = vec![vec![vec![Rational::zero(); n]; n]; n];
    for i in 0..f.dim {
        for j in 0..f.dim {
            let br = f.bracket_basis(i, j);
            for k in 0..f.dim {
                table[i][j][k] = br[k].clone();
            }
        }
        for a in 0..v.dim {
            let img = action[i].col(a);
            for k in 0..v.dim {
                table[i][f.dim + a][f.dim + k] = img[k].clone();
                table[f.dim + a][i][f.dim + k] = -img[k].clone();
            }
        }
    }
    for a in 0..v.dim {
        for b in 0..v.dim {
            let br = v.bracket_basis(a, b);
            for k in 0..v.dim {
                table[f.dim + a][f.dim + b][f.dim + k] = br[k].clone();
            }
        }
    }
    let labels = f
        .labels
        .iter()
        .cloned()
        .chain(v.labels.iter().cloned())
        .collect();
    LieAlgebra::from_dense(labels, table)
}

/// Direct product of Lie algebras (block brackets).
pub fn direct_product_algebras(parts: &[&LieAlgebra]) -> LieAlgebra {
    let n: usize = parts.iter().map(|g| g.dim).sum();
    let mut table = vec![vec![vec![Rational::zero(); n]; n]; n];
    let mut labels = Vec::new();
    let mut off = 0;
    for g in parts {
        for i in 0..g.dim {
            for j in 0..g.dim {
                for k in 0..g.dim {
                    table[off + i][off + j][off + k] = g.structure_constant(i, j, k).clone();
                }
            }
        }
        labels.extend(g.labels.iter().cloned());
        off += g.dim;
    }
    LieAlgebra::from_dense(labels, table).expect("blocks of valid algebras stay valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    pub(crate) fn sl2() -> LieAlgebra {
        // [X,Y] = H, [H,X] = 2X, [H,Y] = -2Y with basis order X, Y, H
        LieAlgebra::from_structure_constants(
            3,
            vec!["X".into(), "Y".into(), "H".into()],
            &[
                BracketEntry {
                    i: 0,
                    j: 1,
                    k: 2,
                    coeff: rat(1),
                },
                BracketEntry {
                    i: 2,
                    j: 0,
                    k: 0,
                    coeff: rat(2),
                },
                BracketEntry {
                    i: 2,
                    j: 1,
                    k: 1,
                    coeff: rat(-2),
                },
            ],
        )
        .unwrap()
    }

    pub(crate) fn so3() -> LieAlgebra {
        LieAlgebra::from_structure_constants(
            3,
            vec!["e1".into(), "e2".into(), "e3".into()],
            &[
                BracketEntry {
                    i: 0,
                    j: 1,
                    k: 2,
                    coeff: rat(1),
                },
                BracketEntry {
                    i: 1,
                    j: 2,
                    k: 0,
                    coeff: rat(1),
                },
                BracketEntry {
                    i: 2,
                    j: 0,
                    k: 1,
                    coeff: rat(1),
                },
            ],
        )
        .unwrap()
    }

    #[test]
    fn one_dimensional_abelian() {
        let g = LieAlgebra::abelian(1);
        assert_eq!(g.dim, 1);
        assert!(g.derived_subalgebra().is_zero());
        assert!(LieAlgebra::abelian(3).killing_form().is_zero());
    }

    #[test]
    fn quotient_by_zero_is_an_isomorphic_copy() {
        let g = sl2();
        let (q, proj) = g.quotient(&Subspace::zero(3)).unwrap();
        assert_eq!(q, g);
        assert_eq!(proj, Matrix::identity(3));
    }

    #[test]
    fn normalizer_of_a_root_line_in_sl2() {
        let g = sl2();
        let x_line = Subspace::from_columns(3, vec![unit_vec(3, 0)]);
        let n = g.normalizer(&x_line);
        // [H, X] = 2X and [Y, X] = -H: the normalizer is span{X, H}
        assert_eq!(n.dim(), 2);
        assert!(n.contains(&unit_vec(3, 0)));
        assert!(n.contains(&unit_vec(3, 2)));
        assert!(!n.contains(&unit_vec(3, 1)));
        // centralizer of the full space is the center
        assert!(g.centralizer(&Subspace::full(3)).is_zero());
    }

    #[test]
    fn sl2_is_valid_and_killing_matches_trace_oracle() {
        let g = sl2();
        // oracle: direct trace of ad(H)^2 over the three basis vectors
        let ad_h = g.ad_basis(2);
        let oracle = ad_h.trace_mul(&ad_h);
        assert_eq!(oracle, rat(8));
        let k = g.killing_form();
        assert_eq!(*k.get(2, 2), rat(8));
        assert_eq!(*k.get(0, 1), rat(4));
        assert_eq!(*k.get(0, 0), rat(0));
    }

    #[test]
    fn so3_killing_is_minus_two_identity() {
        let g = so3();
        let k = g.killing_form();
        let expect = Matrix::identity(3).scale(&rat(-2));
        assert_eq!(k, expect);
    }

    #[test]
    fn inconsistent_antisymmetry_rejected() {
        let r = LieAlgebra::from_structure_constants(
            2,
            vec!["e1".into(), "e2".into()],
            &[
                BracketEntry {
                    i: 0,
                    j: 1,
                    k: 0,
                    coeff: rat(1),
                },
                BracketEntry {
                    i: 1,
                    j: 0,
                    k: 0,
                    coeff: rat(1),
                },
            ],
        );
        assert!(matches!(r, Err(LieError::Antisymmetry(_, _))));
    }

    #[test]
    fn jacobi_violation_names_triple() {
        // [e1,e2] = e3, [e1,e3] = e1 fails Jacobi on (1,2,3)
        let r = LieAlgebra::from_structure_constants(
            3,
            vec!["e1".into(), "e2".into(), "e3".into()],
            &[
                BracketEntry {
                    i: 0,
                    j: 1,
                    k: 2,
                    coeff: rat(1),
                },
                BracketEntry {
                    i: 0,
                    j: 2,
                    k: 0,
                    coeff: rat(1),
                },
            ],
        );
        assert!(matches!(r, Err(LieError::Jacobi(0, 1, 2))));
    }

    #[test]
    fn heisenberg_center_and_quotient() {
        let h3 = LieAlgebra::from_structure_constants(
            3,
            vec!["X".into(), "Y".into(), "Z".into()],
            &[BracketEntry {
                i: 0,
                j: 1,
                k: 2,
                coeff: rat(1),
            }],
        )
        .unwrap();
        let z = h3.center();
        assert_eq!(z, Subspace::from_columns(3, vec![unit_vec(3, 2)]));
        let (q, proj) = h3.quotient(&z).unwrap();
        assert_eq!(q.dim, 2);
        assert!(q.derived_subalgebra().is_zero());
        // projection is a homomorphism
        for i in 0..3 {
            for j in 0..3 {
                let lhs = proj.mul_vec(&h3.bracket_basis(i, j));
                let rhs = q.bracket(
                    &proj.mul_vec(&unit_vec(3, i)),
                    &proj.mul_vec(&unit_vec(3, j)),
                );
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn center_of_sl2_is_zero() {
        assert!(sl2().center().is_zero());
    }

    #[test]
    fn semidirect_so3_on_r3_gives_euclidean_algebra() {
        let f = so3();
        let v = LieAlgebra::abelian(3);
        let action: Vec<Matrix> = (0..3).map(|i| f.ad_basis(i)).collect();
        let e3 = semidirect_product(&f, &v, &action).unwrap();
        assert_eq!(e3.dim, 6);
        // the translations form an abelian ideal
        let tr = Subspace::from_columns(6, (3..6).map(|i| unit_vec(6, i)).collect());
        assert!(e3.is_ideal(&tr));
        let (q, _) = e3.quotient(&tr).unwrap();
        assert_eq!(q.killing_form(), Matrix::identity(3).scale(&rat(-2)));
        // trivial action degenerates to the direct product
        let zero_action = vec![Matrix::zero(3, 3); 3];
        let prod = semidirect_product(&f, &v, &zero_action).unwrap();
        assert_eq!(prod, direct_product_algebras(&[&f, &v]));
        // non-representation input is rejected
        let bad = vec![Matrix::identity(3); 3];
        assert!(semidirect_product(&f, &v, &bad).is_err());
    }

    #[test]
    fn largest_ideal_within_examples() {
        let g = sl2();
        assert!(g
            .largest_ideal_within(&Subspace::from_columns(3, vec![unit_vec(3, 0)]))
            .is_zero());
        assert!(g.largest_ideal_within(&Subspace::full(3)).is_full());
        // the center of the Heisenberg algebra is already an ideal
        let h3 = LieAlgebra::from_structure_constants(
            3,
            vec!["X".into(), "Y".into(), "Z".into()],
            &[BracketEntry {
                i: 0,
                j: 1,
                k: 2,
                coeff: rat(1),
            }],
        )
        .unwrap();
        let z = h3.center();
        assert_eq!(h3.largest_ideal_within(&z), z);
    }
}
