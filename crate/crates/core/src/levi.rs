//! Levi decomposition and the compact/non-compact split of the Levi factor.
//!
//! The Levi subalgebra is found by the classical linear-lifting argument:
//! quotient by the derived algebra of the radical until the radical is
//! abelian, lift a basis of the semisimple quotient, and correct the lift by
//! solving one linear system (solvable by Whitehead's lemma). Simple ideals
//! are then separated and routed by the sign of their intrinsic Killing form.

use crate::error::LieError;
use crate::jordan::signature;
use crate::lie::LieAlgebra;
use crate::matrix::{unit_vec, Matrix};
use crate::poly::minimal_polynomial;
use crate::radicals::solvable_radical;
use crate::rational::Rational;
use crate::subspace::Subspace;
use num::traits::Zero;

/// g = (compact x noncompact) ⋉ radical.
#[derive(Debug, Clone)]
pub struct LeviDecomposition {
    pub compact: Subspace,
    pub noncompact: Subspace,
    pub radical: Subspace,
}

impl LeviDecomposition {
    pub fn levi_subspace(&self) -> Subspace {
        self.compact.sum(&self.noncompact)
    }

    /// The characteristic ideal spanned by the non-compact Levi part and the
    /// radical.
    pub fn characteristic_ideal(&self) -> Subspace {
        self.noncompact.sum(&self.radical)
    }
}

pub fn levi_decomposition(g: &LieAlgebra) -> LeviDecomposition {
    let radical = solvable_radical(g);
    let levi = levi_subalgebra(g, &radical);
    assert!(g.is_subalgebra(&levi), "Levi factor must be a subalgebra");
    assert_eq!(
        levi.dim() + radical.dim(),
        g.dim,
        "Levi factor and radical must be complementary"
    );
    assert!(levi.intersect(&radical).is_zero());
    let (compact, noncompact) =
        split_compact_noncompact(g, &levi).expect("computed Levi factor is semisimple");
    // compact and non-compact parts commute and the compact Killing form is
    // definite by construction; re-check the commuting claim exactly
    assert!(g.bracket_space(&compact, &noncompact).is_zero());
    LeviDecomposition {
        compact,
        noncompact,
        radical,
    }
}

fn levi_subalgebra(g: &LieAlgebra, radical: &Subspace) -> Subspace {
    if radical.is_zero() {
        return Subspace::full(g.dim);
    }
    if radical.is_full() {
        return Subspace::zero(g.dim);
    }
    let derived_r = g.bracket_space(radical, radical);
    if derived_r.is_zero() {
        return levi_lift_abelian(g, radical);
    }
    // reduce to an abelian radical in g/[r,r], then recurse inside the
    // preimage of that Levi factor, whose radical is [r,r]
    let (q, proj) = g.quotient(&derived_r).expect("[r,r] is an ideal");
    let radical_q = Subspace::from_columns(
        q.dim,
        radical
            .basis_vectors()
            .iter()
            .map(|v| proj.mul_vec(v))
            .collect(),
    );
    let levi_q = levi_lift_abelian(&q, &radical_q);
    let mut cols = derived_r.basis_vectors();
    for v in levi_q.basis_vectors() {
        let pre = proj.solve_vec(&v).expect("projection is surjective");
        cols.push(pre);
    }
    let preimage = Subspace::from_columns(g.dim, cols);
    let (p_alg, inclusion) = g
        .restrict(&preimage)
        .expect("preimage of a subalgebra is a subalgebra");
    let p_radical = solvable_radical(&p_alg);
    let levi_p = levi_subalgebra(&p_alg, &p_radical);
    Subspace::from_columns(
        g.dim,
        levi_p
            .basis_vectors()
            .iter()
            .map(|v| inclusion.mul_vec(v))
            .collect(),
    )
}

/// Levi lift when the radical is abelian: one linear system for the
/// correction terms.
fn levi_lift_abelian(g: &LieAlgebra, radical: &Subspace) -> Subspace {
    let (q, _proj) = g.quotient(radical).expect("radical is an ideal");
    let m = q.dim;
    let pivots = radical.pivots();
    let comp: Vec<usize> = (0..g.dim).filter(|c| !pivots.contains(c)).collect();
    let lifts: Vec<Vec<Rational>> = comp.iter().map(|&c| unit_vec(g.dim, c)).collect();
    let dr = radical.dim();
    // bracket action of each lift on the radical, in radical coordinates
    let act: Vec<Matrix> = lifts
        .iter()
        .map(|x| {
            let cols = radical
                .basis_vectors()
                .iter()
                .map(|rv| {
                    radical
                        .coordinates_of(&g.bracket(x, rv))
                        .expect("radical is an ideal")
                })
                .collect();
            Matrix::from_cols(cols)
        })
        .collect();
    // defects d_ij = [x_i, x_j] - sum_k gamma_ijk x_k, always inside r
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for i in 0..m {
        for j in (i + 1)..m {
            let mut d = g.bracket(&lifts[i], &lifts[j]);
            let gamma = q.bracket_basis(i, j);
            for (k, c) in gamma.iter().enumerate() {
                if !c.is_zero() {
                    for (t, l) in lifts[k].iter().enumerate() {
                        d[t] = &d[t] - c * l;
                    }
                }
            }
            let d_coords = radical
                .coordinates_of(&d)
                .expect("defect lies in the radical");
            // unknowns a_0..a_{m-1}, each a block of dr coordinates:
            //   d_ij + [x_i, a_j] - [x_j, a_i] - sum_k gamma_ijk a_k = 0
            for rho in 0..dr {
                let mut row = vec![Rational::zero(); m * dr];
                for t in 0..dr {
                    row[j * dr + t] = &row[j * dr + t] + act[i].get(rho, t);
                    row[i * dr + t] = &row[i * dr + t] - act[j].get(rho, t);
                }
                for (k, c) in gamma.iter().enumerate() {
                    if !c.is_zero() {
                        row[k * dr + rho] = &row[k * dr + rho] - c;
                    }
                }
                rows.push(row);
                rhs.push(-d_coords[rho].clone());
            }
        }
    }
    if rows.is_empty() {
        return Subspace::from_columns(g.dim, lifts);
    }
    let a = Matrix::from_rows(rows)
        .solve_vec(&rhs)
        .expect("Levi correction system is solvable in characteristic zero");
    let rb = radical.basis_vectors();
    let mut cols = Vec::with_capacity(m);
    for (i, x) in lifts.iter().enumerate() {
        let mut y = x.clone();
        for (t, rv) in rb.iter().enumerate() {
            let c = &a[i * dr + t];
            if !c.is_zero() {
                for l in 0..g.dim {
                    y[l] = &y[l] + c * &rv[l];
                }
            }
        }
        cols.push(y);
    }
    Subspace::from_columns(g.dim, cols)
}

/// Splits a semisimple subalgebra into (compact part, non-compact part):
/// each simple ideal goes to the compact side iff its intrinsic Killing form
/// is negative definite.
pub fn split_compact_noncompact(
    g: &LieAlgebra,
    levi: &Subspace,
) -> Result<(Subspace, Subspace), LieError> {
    if levi.is_zero() {
        return Ok((Subspace::zero(g.dim), Subspace::zero(g.dim)));
    }
    let (f, inclusion) = g.restrict(levi)?;
    let kf = f.killing_form();
    if kf.rank() != f.dim {
        return Err(LieError::Precondition(
            "compact/non-compact split needs a semisimple input".into(),
        ));
    }
    let mut compact_cols = Vec::new();
    let mut noncompact_cols = Vec::new();
    for ideal in simple_ideals(&f) {
        let (fi, _) = f.restrict(&ideal)?;
        let sig = signature(&fi.killing_form())?;
        let vecs: Vec<Vec<Rational>> = ideal
            .basis_vectors()
            .iter()
            .map(|v| inclusion.mul_vec(v))
            .collect();
        if sig.negatives == fi.dim && sig.positives == 0 && sig.zeros == 0 {
            compact_cols.extend(vecs);
        } else {
            noncompact_cols.extend(vecs);
        }
    }
    Ok((
        Subspace::from_columns(g.dim, compact_cols),
        Subspace::from_columns(g.dim, noncompact_cols),
    ))
}

/// Minimal (simple) ideals of a semisimple algebra.
///
/// Splitting is factorization-free: an ideal generated by a single basis
/// vector splits the algebra directly; otherwise the centroid is computed by
/// propagating a module map through the generator and the algebra splits
/// along rational eigenvalues of a non-scalar centroid element.
pub fn simple_ideals(f: &LieAlgebra) -> Vec<Subspace> {
    if f.dim == 0 {
        return Vec::new();
    }
    for i in 0..f.dim {
        let ideal = f.ideal_closure(vec![unit_vec(f.dim, i)]);
        if ideal.dim() < f.dim {
            let comp = killing_perp(f, &ideal);
            let mut out = simple_ideals_within(f, &ideal);
            out.extend(simple_ideals_within(f, &comp));
            return out;
        }
    }
    // every basis vector generates: either simple, or the centroid splits it
    for theta in centroid_via_generator(f, 0) {
        let mp = minimal_polynomial(&theta);
        if mp.degree() == 0 {
            continue;
        }
        for lambda in mp.rational_roots() {
            let mut shifted = theta.clone();
            for d in 0..f.dim {
                let v = shifted.get(d, d) - &lambda;
                shifted.set(d, d, v);
            }
            let ker = Subspace::from_matrix_columns(&shifted.kernel_matrix());
            if !ker.is_zero() && ker.dim() < f.dim {
                let comp = killing_perp(f, &ker);
                let mut out = simple_ideals_within(f, &ker);
                out.extend(simple_ideals_within(f, &comp));
                return out;
            }
        }
    }
    vec![Subspace::full(f.dim)]
}

fn simple_ideals_within(f: &LieAlgebra, ideal: &Subspace) -> Vec<Subspace> {
    if ideal.is_zero() {
        return Vec::new();
    }
    let (sub, inclusion) = f.restrict(ideal).expect("ideals are bracket-closed");
    simple_ideals(&sub)
        .into_iter()
        .map(|w| {
            Subspace::from_columns(
                f.dim,
                w.basis_vectors()
                    .iter()
                    .map(|v| inclusion.mul_vec(v))
                    .collect(),
            )
        })
        .collect()
}

fn killing_perp(f: &LieAlgebra, w: &Subspace) -> Subspace {
    let killing = f.killing_form();
    let rows: Vec<Vec<Rational>> = w
        .basis_vectors()
        .iter()
        .map(|v| killing.mul_vec(v))
        .collect();
    Subspace::from_matrix_columns(&Matrix::from_rows(rows).kernel_matrix())
}

/// Centroid elements of f computed through a single generating basis vector:
/// a module endomorphism is determined by its value on the generator, and the
/// consistency conditions on that value form a linear system.
fn centroid_via_generator(f: &LieAlgebra, generator: usize) -> Vec<Matrix> {
    let n = f.dim;
    // span vectors reached from the generator, each with the matrix sending
    // phi(e_gen) to phi(that vector)
    let mut span = Subspace::from_columns(n, vec![unit_vec(n, generator)]);
    let mut reached: Vec<(Vec<Rational>, Matrix)> =
        vec![(unit_vec(n, generator), Matrix::identity(n))];
    let mut frontier = reached.clone();
    while span.dim() < n && !frontier.is_empty() {
        let mut fresh = Vec::new();
        for (v, l) in &frontier {
            for i in 0..n {
                let w = f.bracket(&unit_vec(n, i), v);
                let grown = span.sum(&Subspace::from_columns(n, vec![w.clone()]));
                if grown.dim() > span.dim() {
                    span = grown;
                    let lw = f.ad_basis(i).mul(l);
                    reached.push((w.clone(), lw.clone()));
                    fresh.push((w, lw));
                }
            }
        }
        frontier = fresh;
    }
    if span.dim() < n {
        // generator does not generate; caller already handles proper ideals
        return Vec::new();
    }
    // basis change: express phi on the standard basis from phi on `reached`
    let basis_mat = Matrix::from_cols(reached.iter().map(|(v, _)| v.clone()).collect());
    let inv_coords = |target: &[Rational]| -> Vec<Rational> {
        basis_mat
            .solve_vec(target)
            .expect("reached vectors span the algebra")
    };
    let value_on = |x: &[Rational], u: &[Rational]| -> Vec<Rational> {
        let c = inv_coords(x);
        let mut out = vec![Rational::zero(); n];
        for (t, ct) in c.iter().enumerate() {
            if !ct.is_zero() {
                let img = reached[t].1.mul_vec(u);
                for r in 0..n {
                    out[r] = &out[r] + ct * &img[r];
                }
            }
        }
        out
    };
    // consistency: phi([e_i, v_j]) = [e_i, phi(v_j)] for all i, j; rows over
    // the unknown u = phi(e_gen)
    let mut rows = Vec::new();
    for i in 0..n {
        let ad_i = f.ad_basis(i);
        for (v, l) in &reached {
            let w = f.bracket(&unit_vec(n, i), v);
            let c = inv_coords(&w);
            // map u -> phi(w) minus ad_i * l u must vanish
            let mut mat = ad_i.mul(l).neg();
            for (t, ct) in c.iter().enumerate() {
                if !ct.is_zero() {
                    mat = mat.add(&reached[t].1.scale(ct));
                }
            }
            for r in 0..n {
                rows.push(mat.row(r));
            }
        }
    }
    let kernel = Matrix::from_rows(rows).kernel_matrix();
    let mut thetas = Vec::new();
    for c in 0..kernel.cols {
        let u = kernel.col(c);
        // assemble the endomorphism column by column
        let cols: Vec<Vec<Rational>> = (0..n).map(|j| value_on(&unit_vec(n, j), &u)).collect();
        let theta = Matrix::from_cols(cols);
        // skip scalars
        let scalar = theta.get(0, 0).clone();
        let diff = theta.sub(&Matrix::identity(n).scale(&scalar));
        if !diff.is_zero() {
            thetas.push(theta);
        }
    }
    thetas
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{direct_product_algebras, semidirect_product, BracketEntry};
    use crate::rational::rat;

    fn sl2() -> LieAlgebra {
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

    fn so3() -> LieAlgebra {
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
    fn semisimple_algebra_is_its_own_levi_factor() {
        let g = sl2();
        let levi = levi_decomposition(&g);
        assert!(levi.radical.is_zero());
        assert!(levi.compact.is_zero());
        assert!(levi.noncompact.is_full());
    }

    #[test]
    fn euclidean_algebra_splits_as_built() {
        let f = so3();
        let action: Vec<Matrix> = (0..3).map(|i| f.ad_basis(i)).collect();
        let e3 = semidirect_product(&f, &LieAlgebra::abelian(3), &action).unwrap();
        let levi = levi_decomposition(&e3);
        assert_eq!(levi.compact.dim(), 3);
        assert!(levi.noncompact.is_zero());
        assert_eq!(levi.radical.dim(), 3);
        assert!(levi.compact.contains(&unit_vec(6, 0)));
    }

    #[test]
    fn so3_times_sl2_routes_factors() {
        let g = direct_product_algebras(&[&so3(), &sl2()]);
        let levi = levi_decomposition(&g);
        assert_eq!(levi.compact.dim(), 3);
        assert_eq!(levi.noncompact.dim(), 3);
        assert!(levi.compact.contains(&unit_vec(6, 0)));
        assert!(levi.noncompact.contains(&unit_vec(6, 3)));
        // sl2 alone routes entirely to the non-compact side
        let (k, s) = split_compact_noncompact(&sl2(), &Subspace::full(3)).unwrap();
        assert!(k.is_zero());
        assert!(s.is_full());
    }

    #[test]
    fn cotangent_of_sl2_has_split_levi_factor() {
        let m = crate::constructions::build_cotangent(&sl2());
        let levi = levi_decomposition(&m.algebra);
        assert!(levi.compact.is_zero());
        assert_eq!(levi.noncompact.dim(), 3);
        assert_eq!(levi.radical.dim(), 3);
        // the radical is the coadjoint (dual) summand
        for i in 3..6 {
            assert!(levi.radical.contains(&unit_vec(6, i)));
        }
        for i in 0..3 {
            assert!(levi.noncompact.contains(&unit_vec(6, i)));
        }
    }

    #[test]
    fn split_rejects_non_semisimple_input() {
        let g = LieAlgebra::abelian(2);
        assert!(split_compact_noncompact(&g, &Subspace::full(2)).is_err());
    }

    #[test]
    fn so4_is_compact_with_two_simple_ideals() {
        // so4 via the Euclidean construction: Levi factor of so4 ⋉ R^4
        let so4 = crate::constructions::so_n(4);
        let ideals = simple_ideals(&so4);
        assert_eq!(ideals.len(), 2);
        assert_eq!(ideals[0].dim(), 3);
        assert_eq!(ideals[1].dim(), 3);
        let (k, s) = split_compact_noncompact(&so4, &Subspace::full(6)).unwrap();
        assert!(k.is_full(), "so4 is of compact type");
        assert!(s.is_zero());
    }
}
