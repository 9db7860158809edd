//! Fitting decomposition relative to a regular element.

use crate::lie::LieAlgebra;
use crate::radicals::is_nilpotent_on;
use crate::rational::{rat, Rational};
use crate::subspace::Subspace;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_FITTING_SEED: u64 = 0x4c69_6546_6974;

#[derive(Debug, Clone)]
pub struct FittingDecomposition {
    pub regular_element: Vec<Rational>,
    /// Generalized null space of ad(regular_element): a Cartan subalgebra.
    pub fitting_zero: Subspace,
    /// Complementary invariant subspace, on which ad(regular_element) is
    /// invertible.
    pub fitting_one: Subspace,
}

/// Fitting decomposition relative to a given element, provided the element is
/// regular: the null part must come out as a Cartan subalgebra
/// (self-normalizing and nilpotent), otherwise None.
pub fn fitting_with_element(g: &LieAlgebra, x: &[Rational]) -> Option<FittingDecomposition> {
    let n = g.dim;
    if n == 0 {
        return Some(FittingDecomposition {
            regular_element: Vec::new(),
            fitting_zero: Subspace::zero(0),
            fitting_one: Subspace::zero(0),
        });
    }
    let p = g.ad(x).pow(n);
    let zero_part = Subspace::from_matrix_columns(&p.kernel_matrix());
    let one_part = Subspace::from_columns(n, (0..n).map(|c| p.col(c)).collect());
    let cartan_like = g.is_subalgebra(&zero_part)
        && is_nilpotent_on(g, &zero_part)
        && g.normalizer(&zero_part) == zero_part;
    if !cartan_like {
        return None;
    }
    assert_eq!(zero_part.dim() + one_part.dim(), n);
    assert!(zero_part.intersect(&one_part).is_zero());
    if !one_part.is_zero() {
        // ad(x) restricted to the one-part is invertible
        let ad = g.ad(x);
        let cols: Vec<Vec<Rational>> = one_part
            .basis_vectors()
            .iter()
            .map(|v| {
                one_part
                    .coordinates_of(&ad.mul_vec(v))
                    .expect("one-part is ad(x)-invariant")
            })
            .collect();
        let restricted = crate::matrix::Matrix::from_cols(cols);
        if restricted.rank() != one_part.dim() {
            return None;
        }
    }
    Some(FittingDecomposition {
        regular_element: x.to_vec(),
        fitting_zero: zero_part,
        fitting_one: one_part,
    })
}

/// Finds a regular element by seeded random sampling (batches of 64 integer
/// vectors, keeping a sample minimizing the generalized null space) and
/// returns its Fitting decomposition. Minimality is re-verified through the
/// Cartan check in `fitting_with_element`; non-regular batch winners trigger
/// another batch. The fixed default seed makes the result reproducible.
pub fn fitting_decomposition(g: &LieAlgebra, seed: u64) -> FittingDecomposition {
    let n = g.dim;
    if n == 0 {
        return fitting_with_element(g, &[]).unwrap();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _round in 0..64 {
        let mut best: Option<(Vec<Rational>, usize)> = None;
        for _ in 0..64 {
            let x: Vec<Rational> = (0..n).map(|_| rat(rng.gen_range(-9..=9))).collect();
            let p = g.ad(&x).pow(n);
            let null_dim = n - p.rank();
            if best.as_ref().map_or(true, |(_, b)| null_dim < *b) {
                best = Some((x, null_dim));
            }
        }
        let (x, _) = best.unwrap();
        if let Some(f) = fitting_with_element(g, &x) {
            return f;
        }
    }
    panic!("failed to sample a regular element at dimension {n}");
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::BracketEntry;
    use crate::matrix::unit_vec;

    #[test]
    fn abelian_and_nilpotent_degenerate_to_zero_part() {
        let g = LieAlgebra::abelian(3);
        let f = fitting_decomposition(&g, DEFAULT_FITTING_SEED);
        assert!(f.fitting_zero.is_full());
        assert!(f.fitting_one.is_zero());
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
        let f = fitting_decomposition(&h3, DEFAULT_FITTING_SEED);
        assert!(f.fitting_zero.is_full());
    }

    #[test]
    fn oscillator_fitting_at_the_rotation_generator() {
        // J, X, Y, Z: relative to J the parts are span{J, Z} and span{X, Y}
        let g = LieAlgebra::from_structure_constants(
            4,
            vec!["J".into(), "X".into(), "Y".into(), "Z".into()],
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
                    k: 1,
                    coeff: rat(-1),
                },
                BracketEntry {
                    i: 1,
                    j: 2,
                    k: 3,
                    coeff: rat(1),
                },
            ],
        )
        .unwrap();
        let f = fitting_with_element(&g, &unit_vec(4, 0)).unwrap();
        let jz = Subspace::from_columns(4, vec![unit_vec(4, 0), unit_vec(4, 3)]);
        let xy = Subspace::from_columns(4, vec![unit_vec(4, 1), unit_vec(4, 2)]);
        assert_eq!(f.fitting_zero, jz);
        assert_eq!(f.fitting_one, xy);
        // sampled decompositions give a (possibly different) Cartan of the
        // same dimension
        let fs = fitting_decomposition(&g, DEFAULT_FITTING_SEED);
        assert_eq!(fs.fitting_zero.dim(), 2);
        assert_eq!(fs.fitting_one.dim(), 2);
    }
}
