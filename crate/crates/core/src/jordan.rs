//! Jordan decomposition of rational matrices and exact symmetric signatures.
//!
//! The semisimple/nilpotent split is computed with the factorization-free
//! Newton iteration on the squarefree part of the minimal polynomial, so the
//! result is exact and never touches eigenvalues or extension fields.

use crate::error::LieError;
use crate::matrix::Matrix;
use crate::poly::minimal_polynomial;
use crate::rational::Rational;
use num::traits::{Signed, Zero};

/// The unique commuting semisimple + nilpotent split of a square matrix.
#[derive(Debug, Clone)]
pub struct JordanPair {
    pub semisimple: Matrix,
    pub nilpotent: Matrix,
}

/// Computes the Jordan decomposition m = semisimple + nilpotent.
///
/// Iterates x <- x - g(x) g'(x)^{-1} with g the squarefree part of the
/// minimal polynomial; g'(x) stays invertible because g(x) is nilpotent
/// throughout, and the iteration converges quadratically in the nilpotency
/// degree. Both parts are polynomials in m, hence they commute with m and
/// with each other.
pub fn jordan_chevalley(m: &Matrix) -> JordanPair {
    assert!(m.is_square(), "jordan_chevalley needs a square matrix");
    let n = m.rows;
    if n == 0 {
        return JordanPair {
            semisimple: m.clone(),
            nilpotent: m.clone(),
        };
    }
    let minpoly = minimal_polynomial(m);
    let g = minpoly.squarefree_part();
    let g_prime = g.derivative();
    let mut x = m.clone();
    let mut guard = 0usize;
    loop {
        let gx = g.eval_matrix(&x);
        if gx.is_zero() {
            break;
        }
        let gpx = g_prime.eval_matrix(&x);
        let inv = gpx
            .inverse()
            .expect("g'(x) invertible modulo nilpotents by squarefreeness");
        x = x.sub(&gx.mul(&inv));
        guard += 1;
        assert!(guard <= n + 1, "Jordan iteration failed to converge");
    }
    let nilpotent = m.sub(&x);
    JordanPair {
        semisimple: x,
        nilpotent,
    }
}

/// Returns true when the matrix equals its own semisimple part.
pub fn is_semisimple(m: &Matrix) -> bool {
    minimal_polynomial(m).is_squarefree()
}

pub fn semisimple_has_squarefree_minpoly(p: &JordanPair) -> bool {
    is_semisimple(&p.semisimple)
}

/// Inertia counts of a symmetric bilinear form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Signature {
    pub positives: usize,
    pub negatives: usize,
    pub zeros: usize,
}

impl Signature {
    pub fn dim(&self) -> usize {
        self.positives + self.negatives + self.zeros
    }
}

/// Sylvester signature by exact symmetric congruence diagonalization.
pub fn signature(g: &Matrix) -> Result<Signature, LieError> {
    if !g.is_symmetric() {
        return Err(LieError::NotSymmetric);
    }
    let mut m = g.clone();
    let n = m.rows;
    let mut active: Vec<usize> = (0..n).collect();
    let mut positives = 0usize;
    let mut negatives = 0usize;
    let mut zeros = 0usize;
    while let Some(&_first) = active.first() {
        // find a nonzero diagonal entry among active indices
        let diag = active.iter().copied().find(|&i| !m.get(i, i).is_zero());
        let pivot = match diag {
            Some(i) => i,
            None => {
                // all active diagonal entries are zero; look for an off-diagonal
                let mut found = None;
                'outer: for (a, &i) in active.iter().enumerate() {
                    for &j in active.iter().skip(a + 1) {
                        if !m.get(i, j).is_zero() {
                            found = Some((i, j));
                            break 'outer;
                        }
                    }
                }
                match found {
                    None => {
                        zeros += active.len();
                        break;
                    }
                    Some((i, j)) => {
                        // congruence e_i <- e_i + e_j makes the (i,i) entry 2*m[i][j]
                        for k in 0..n {
                            let v = m.get(i, k) + m.get(j, k);
                            m.set(i, k, v);
                        }
                        for k in 0..n {
                            let v = m.get(k, i) + m.get(k, j);
                            m.set(k, i, v);
                        }
                        i
                    }
                }
            }
        };
        let d = m.get(pivot, pivot).clone();
        if d.is_positive() {
            positives += 1;
        } else {
            negatives += 1;
        }
        // clear the pivot row/column on the remaining active indices; the
        // pivot row must stay intact until every row is updated
        let others: Vec<usize> = active.iter().copied().filter(|&k| k != pivot).collect();
        for &k in &others {
            let f = m.get(k, pivot) / &d;
            if f.is_zero() {
                continue;
            }
            for &l in &others {
                let v = m.get(k, l) - &f * m.get(pivot, l);
                m.set(k, l, v);
            }
        }
        for &k in &others {
            m.set(k, pivot, Rational::zero());
            m.set(pivot, k, Rational::zero());
        }
        active.retain(|&k| k != pivot);
    }
    Ok(Signature {
        positives,
        negatives,
        zeros,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Matrix;

    #[test]
    fn nilpotent_input_is_its_own_nilpotent_part() {
        let m = Matrix::from_i64(&[&[0, 1, 2], &[0, 0, 3], &[0, 0, 0]]);
        let jp = jordan_chevalley(&m);
        assert!(jp.semisimple.is_zero());
        assert_eq!(jp.nilpotent, m);
    }

    #[test]
    fn diagonal_input_is_semisimple() {
        let m = Matrix::from_i64(&[&[2, 0], &[0, 5]]);
        let jp = jordan_chevalley(&m);
        assert_eq!(jp.semisimple, m);
        assert!(jp.nilpotent.is_zero());
    }

    #[test]
    fn jordan_block_splits_into_identity_plus_shift() {
        let m = Matrix::from_i64(&[&[1, 1], &[0, 1]]);
        let jp = jordan_chevalley(&m);
        assert_eq!(jp.semisimple, Matrix::identity(2));
        assert_eq!(jp.nilpotent, Matrix::from_i64(&[&[0, 1], &[0, 0]]));
        // uniqueness witnesses: commuting, nilpotent, squarefree semisimple part
        assert!(jp.semisimple.commutator(&jp.nilpotent).is_zero());
        assert!(jp.nilpotent.is_nilpotent());
        assert!(semisimple_has_squarefree_minpoly(&jp));
    }

    #[test]
    fn signature_basics() {
        let g = Matrix::from_i64(&[&[1, 0], &[0, -1]]);
        let s = signature(&g).unwrap();
        assert_eq!((s.positives, s.negatives, s.zeros), (1, 1, 0));
        let z = Matrix::zero(3, 3);
        let s = signature(&z).unwrap();
        assert_eq!((s.positives, s.negatives, s.zeros), (0, 0, 3));
        // hyperbolic plane via off-diagonal pivoting
        let h = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        let s = signature(&h).unwrap();
        assert_eq!((s.positives, s.negatives, s.zeros), (1, 1, 0));
        assert!(signature(&Matrix::from_i64(&[&[0, 1], &[0, 0]])).is_err());
    }

    #[test]
    fn oscillator_gram_signature() {
        // basis J, X, Y, Z with <J,Z> = 1, <X,X> = <Y,Y> = 1
        let g = Matrix::from_i64(&[&[0, 0, 0, 1], &[0, 1, 0, 0], &[0, 0, 1, 0], &[1, 0, 0, 0]]);
        let s = signature(&g).unwrap();
        assert_eq!((s.positives, s.negatives, s.zeros), (3, 1, 0));
    }
}
