//! Finite-dimensional modules, symmetric powers, rational so3 irreducibles,
//! and the solver for skew pairings <X, Yv> = -<Y, Xv>.

use crate::constructions::{so3, so3_vector_matrices};
use crate::error::LieError;
use crate::lie::LieAlgebra;
use crate::matrix::Matrix;
use crate::rational::{rat, Rational};
use crate::subspace::Subspace;
use num::traits::Zero;

#[derive(Debug, Clone)]
pub struct ModuleAction {
    pub algebra: LieAlgebra,
    pub module_dim: usize,
    pub matrices: Vec<Matrix>,
}

impl ModuleAction {
    /// Validates the representation property rho([x,y]) = [rho(x), rho(y)].
    pub fn new(algebra: LieAlgebra, matrices: Vec<Matrix>) -> Result<ModuleAction, LieError> {
        if matrices.len() != algebra.dim {
            return Err(LieError::DimensionMismatch(
                "one action matrix per basis vector".into(),
            ));
        }
        let module_dim = matrices.first().map_or(0, |m| m.rows);
        for m in &matrices {
            if m.rows != module_dim || m.cols != module_dim {
                return Err(LieError::DimensionMismatch(
                    "action matrices must be square of equal size".into(),
                ));
            }
        }
        for i in 0..algebra.dim {
            for j in (i + 1)..algebra.dim {
                let br = algebra.bracket_basis(i, j);
                let mut lhs = Matrix::zero(module_dim, module_dim);
                for (k, c) in br.iter().enumerate() {
                    if !c.is_zero() {
                        lhs = lhs.add(&matrices[k].scale(c));
                    }
                }
                if lhs != matrices[i].commutator(&matrices[j]) {
                    return Err(LieError::Precondition(format!(
                        "not a representation at basis pair ({i}, {j})"
                    )));
                }
            }
        }
        Ok(ModuleAction {
            algebra,
            module_dim,
            matrices,
        })
    }

    pub fn trivial(algebra: LieAlgebra, module_dim: usize) -> ModuleAction {
        let matrices = vec![Matrix::zero(module_dim, module_dim); algebra.dim];
        ModuleAction::new(algebra, matrices).expect("zero action is a representation")
    }

    pub fn adjoint(algebra: LieAlgebra) -> ModuleAction {
        let matrices = (0..algebra.dim).map(|i| algebra.ad_basis(i)).collect();
        ModuleAction::new(algebra, matrices).expect("adjoint is a representation")
    }
}

/// Exponent vectors of total degree k over n variables, lexicographic.
fn monomials(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, k: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 1 {
            let mut m = prefix.clone();
            m.push(k);
            out.push(m);
            return;
        }
        for a in (0..=k).rev() {
            prefix.push(a);
            rec(n - 1, k - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    rec(n, k, &mut Vec::new(), &mut out);
    out
}

fn monomial_index(mons: &[Vec<usize>], target: &[usize]) -> usize {
    mons.iter()
        .position(|m| m == target)
        .expect("monomial in range")
}

/// Induced action on degree-k symmetric tensors in the monomial basis.
pub fn symmetric_power_module(base: &ModuleAction, k: usize) -> ModuleAction {
    assert!(k >= 1, "symmetric powers start at k = 1");
    if k == 1 {
        return base.clone();
    }
    let n = base.module_dim;
    let mons = monomials(n, k);
    let d = mons.len();
    let mut matrices = Vec::new();
    for rho in &base.matrices {
        let mut m = Matrix::zero(d, d);
        for (col, alpha) in mons.iter().enumerate() {
            // derivation rule: act on one factor at a time
            for i in 0..n {
                if alpha[i] == 0 {
                    continue;
                }
                let mult = rat(alpha[i] as i64);
                for t in 0..n {
                    let c = rho.get(t, i);
                    if c.is_zero() {
                        continue;
                    }
                    let mut target = alpha.clone();
                    target[i] -= 1;
                    target[t] += 1;
                    let row = monomial_index(&mons, &target);
                    let v = m.get(row, col) + &mult * c;
                    m.set(row, col, v);
                }
            }
        }
        matrices.push(m);
    }
    ModuleAction::new(base.algebra.clone(), matrices)
        .expect("symmetric power of a representation is a representation")
}

/// The standard 2-dimensional sl2 module in the X, Y, H basis order.
pub fn sl2_standard_module() -> ModuleAction {
    let alg = crate::constructions::sl2();
    let matrices = vec![
        Matrix::from_i64(&[&[0, 1], &[0, 0]]),
        Matrix::from_i64(&[&[0, 0], &[1, 0]]),
        Matrix::from_i64(&[&[1, 0], &[0, -1]]),
    ];
    ModuleAction::new(alg, matrices).expect("standard sl2 module")
}

/// The (2l+1)-dimensional real irreducible so3 module, realized on harmonic
/// polynomials of degree l with rational structure matrices.
pub fn so3_irreducible(l: usize) -> ModuleAction {
    assert!(l >= 1);
    let mons = monomials(3, l);
    let lower = monomials(3, l - 2.min(l));
    let d = mons.len();
    // Laplacian: degree l -> degree l-2
    let lap = if l >= 2 {
        let mut m = Matrix::zero(lower.len(), d);
        for (col, alpha) in mons.iter().enumerate() {
            for i in 0..3 {
                if alpha[i] >= 2 {
                    let mut t = alpha.clone();
                    t[i] -= 2;
                    let row = monomial_index(&lower, &t);
                    let c = rat((alpha[i] * (alpha[i] - 1)) as i64);
                    let v = m.get(row, col) + c;
                    m.set(row, col, v);
                }
            }
        }
        m
    } else {
        Matrix::zero(0, d)
    };
    let harmonic = if l >= 2 {
        Subspace::from_matrix_columns(&lap.kernel_matrix())
    } else {
        Subspace::full(d)
    };
    assert_eq!(harmonic.dim(), 2 * l + 1);
    // derivation extension of the vector action to degree-l monomials
    let rotations = so3_vector_matrices();
    let mut matrices = Vec::new();
    for rho in &rotations {
        let mut m = Matrix::zero(d, d);
        for (col, alpha) in mons.iter().enumerate() {
            for i in 0..3 {
                if alpha[i] == 0 {
                    continue;
                }
                let mult = rat(alpha[i] as i64);
                for t in 0..3 {
                    let c = rho.get(t, i);
                    if c.is_zero() {
                        continue;
                    }
                    let mut target = alpha.clone();
                    target[i] -= 1;
                    target[t] += 1;
                    let row = monomial_index(&mons, &target);
                    let v = m.get(row, col) + &mult * c;
                    m.set(row, col, v);
                }
            }
        }
        // restrict to the harmonic subspace
        let cols: Vec<Vec<Rational>> = harmonic
            .basis_vectors()
            .iter()
            .map(|h| {
                harmonic
                    .coordinates_of(&m.mul_vec(h))
                    .expect("rotations preserve harmonics")
            })
            .collect();
        matrices.push(Matrix::from_cols(cols));
    }
    ModuleAction::new(so3(), matrices).expect("harmonic action is a representation")
}

/// Basis of the space of skew pairings f x V -> Q for the given module:
/// bilinear P with P(X, Yv) = -P(Y, Xv). Each basis element is returned as
/// the (dim f) x (dim V) matrix of values on basis pairs.
pub fn skew_pairing_space(module: &ModuleAction) -> Vec<Matrix> {
    let nf = module.algebra.dim;
    let nv = module.module_dim;
    if nf == 0 || nv == 0 {
        return Vec::new();
    }
    let unknowns = nf * nv;
    let mut rows = Vec::new();
    for i in 0..nf {
        for j in i..nf {
            for a in 0..nv {
                let mut row = vec![Rational::zero(); unknowns];
                for b in 0..nv {
                    let cj = module.matrices[j].get(b, a);
                    if !cj.is_zero() {
                        row[i * nv + b] = &row[i * nv + b] + cj;
                    }
                    let ci = module.matrices[i].get(b, a);
                    if !ci.is_zero() {
                        row[j * nv + b] = &row[j * nv + b] + ci;
                    }
                }
                rows.push(row);
            }
        }
    }
    let ker = Matrix::from_rows(rows).kernel_matrix();
    (0..ker.cols)
        .map(|c| Matrix::from_flat(nf, nv, ker.col(c)))
        .collect()
}

/// Left kernel of a pairing: {X in f : P(X, V) = 0}.
pub fn pairing_left_kernel(p: &Matrix) -> Subspace {
    Subspace::from_matrix_columns(&p.transpose().kernel_matrix())
}

/// Module of invariants V^g = {v : rho(x) v = 0 for all x}.
pub fn module_invariants(module: &ModuleAction) -> Subspace {
    let mut rows = Vec::new();
    for m in &module.matrices {
        for r in 0..m.rows {
            rows.push(m.row(r));
        }
    }
    if rows.is_empty() {
        return Subspace::full(module.module_dim);
    }
    Subspace::from_matrix_columns(&Matrix::from_rows(rows).kernel_matrix())
}
