//! Linear subspaces in canonical echelon form.
//!
//! A `Subspace` stores an ambient dimension and a basis matrix whose columns
//! are the basis vectors. The basis is always the unique reduced echelon
//! basis, so two subspaces are equal as sets iff their basis matrices are
//! equal, which keeps every structural test deterministic.

use crate::matrix::Matrix;
use crate::rational::Rational;
use num::traits::Zero;

#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    pub ambient: usize,
    basis: Matrix,      // columns are basis vectors, canonical
    pivots: Vec<usize>, // pivot coordinate of each basis column
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Subspace(dim {} in {}; basis {:?})",
            self.dim(),
            self.ambient,
            self.basis
        )
    }
}

impl Subspace {
    pub fn zero(ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Matrix::zero(ambient, 0),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Subspace {
        Subspace::from_columns(
            ambient,
            (0..ambient)
                .map(|i| crate::matrix::unit_vec(ambient, i))
                .collect(),
        )
    }

    /// Span of the given vectors, canonicalized.
    pub fn from_columns(ambient: usize, cols: Vec<Vec<Rational>>) -> Subspace {
        for c in &cols {
            assert_eq!(c.len(), ambient, "vector length != ambient dimension");
        }
        if cols.is_empty() {
            return Subspace::zero(ambient);
        }
        // vectors as rows, rref, back to columns
        let mut m = Matrix::from_rows(cols);
        let pivots = m.rref();
        let dim = pivots.len();
        let mut basis_cols = Vec::with_capacity(dim);
        for r in 0..dim {
            basis_cols.push(m.row(r));
        }
        if basis_cols.is_empty() {
            return Subspace::zero(ambient);
        }
        Subspace {
            ambient,
            basis: Matrix::from_cols(basis_cols),
            pivots,
        }
    }

    pub fn from_matrix_columns(m: &Matrix) -> Subspace {
        Subspace::from_columns(m.rows, (0..m.cols).map(|c| m.col(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.basis.cols
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Basis matrix (columns = canonical basis vectors).
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rational>> {
        (0..self.dim()).map(|c| self.basis.col(c)).collect()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of v in the canonical basis, if v lies in the span.
    pub fn coordinates_of(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(v.len(), self.ambient);
        if self.dim() == 0 {
            return if v.iter().all(|x| x.is_zero()) {
                Some(Vec::new())
            } else {
                None
            };
        }
        // echelon basis: coordinate k is v[pivot_k] after reduction
        let mut rem = v.to_vec();
        let mut coords = Vec::with_capacity(self.dim());
        for (k, &p) in self.pivots.iter().enumerate() {
            let c = rem[p].clone();
            if !c.is_zero() {
                for r in 0..self.ambient {
                    let b = self.basis.get(r, k);
                    if !b.is_zero() {
                        rem[r] = &rem[r] - &c * b;
                    }
                }
            }
            coords.push(c);
        }
        if rem.iter().all(|x| x.is_zero()) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coordinates_of(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis_vectors().iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let mut cols = self.basis_vectors();
        cols.extend(other.basis_vectors());
        Subspace::from_columns(self.ambient, cols)
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.ambient);
        }
        // solve A x = B y; kernel of [A | -B]
        let stacked = self.basis.hstack(&other.basis.neg());
        let ker = stacked.kernel_matrix();
        let mut cols = Vec::new();
        for c in 0..ker.cols {
            let k = ker.col(c);
            let x: Vec<Rational> = k[..self.dim()].to_vec();
            cols.push(self.basis.mul_vec(&x));
        }
        Subspace::from_columns(self.ambient, cols)
    }

    /// Image of this subspace under a linear map (matrix acts on columns).
    pub fn map(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols, self.ambient);
        let cols = self.basis_vectors().iter().map(|v| m.mul_vec(v)).collect();
        Subspace::from_columns(m.rows, cols)
    }
}

/// Null space of a matrix, in canonical echelon form.
pub fn kernel(m: &Matrix) -> Subspace {
    Subspace::from_matrix_columns(&m.kernel_matrix())
}

#[derive(Debug, Clone)]
pub struct LinearSolution {
    /// One solution with all free variables zero, absent when inconsistent.
    pub particular: Option<Vec<Rational>>,
    pub kernel: Subspace,
}

/// Solves a x = b, returning a particular solution (if any) and the kernel.
pub fn solve_linear(a: &Matrix, b: &[Rational]) -> Result<LinearSolution, crate::error::LieError> {
    if a.rows != b.len() {
        return Err(crate::error::LieError::DimensionMismatch(format!(
            "matrix has {} rows but the right-hand side has {} entries",
            a.rows,
            b.len()
        )));
    }
    Ok(LinearSolution {
        particular: a.solve_vec(b),
        kernel: kernel(a),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn kernel_and_solve_ops() {
        let m = Matrix::from_i64(&[&[1, 2], &[2, 4]]);
        let k = kernel(&m);
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&[rat(2), rat(-1)]));
        assert!(kernel(&Matrix::identity(2)).is_zero());
        assert_eq!(kernel(&Matrix::zero(2, 2)).dim(), 2);

        let sol = solve_linear(&Matrix::from_i64(&[&[1, 1]]), &[rat(2)]).unwrap();
        assert_eq!(sol.particular.unwrap(), vec![rat(2), rat(0)]);
        assert!(sol.kernel.contains(&[rat(1), rat(-1)]));
        let id = Matrix::identity(2);
        let sol = solve_linear(&id, &[rat(5), rat(7)]).unwrap();
        assert_eq!(sol.particular.unwrap(), vec![rat(5), rat(7)]);
        assert!(sol.kernel.is_zero());
        let zero = Matrix::zero(2, 2);
        let sol = solve_linear(&zero, &[rat(0), rat(0)]).unwrap();
        assert_eq!(sol.particular.unwrap(), vec![rat(0), rat(0)]);
        assert!(sol.kernel.is_full());
        assert!(solve_linear(&id, &[rat(1)]).is_err());
    }

    #[test]
    fn canonical_equality() {
        let a = Subspace::from_columns(2, vec![vec![rat(2), rat(-1)]]);
        let b = Subspace::from_columns(2, vec![vec![rat(-4), rat(2)]]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 1);
    }

    #[test]
    fn sum_and_intersection() {
        let e1 = Subspace::from_columns(3, vec![vec![rat(1), rat(0), rat(0)]]);
        let plane = Subspace::from_columns(
            3,
            vec![vec![rat(1), rat(1), rat(0)], vec![rat(0), rat(1), rat(0)]],
        );
        assert_eq!(e1.sum(&plane).dim(), 2);
        assert_eq!(e1.intersect(&plane), e1);
        let e3 = Subspace::from_columns(3, vec![vec![rat(0), rat(0), rat(1)]]);
        assert!(e1.intersect(&e3).is_zero());
    }

    #[test]
    fn coordinates_round_trip() {
        let w = Subspace::from_columns(
            3,
            vec![vec![rat(1), rat(2), rat(0)], vec![rat(0), rat(0), rat(3)]],
        );
        let v = vec![rat(2), rat(4), rat(3)];
        let c = w.coordinates_of(&v).unwrap();
        let back = w.basis().mul_vec(&c);
        assert_eq!(back, v);
        assert!(!w.contains(&[rat(1), rat(0), rat(0)]));
    }
}
