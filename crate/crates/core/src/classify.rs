//! Structure verifiers and the classification decision procedure for
//! relative index at most two.

use crate::error::LieError;
use crate::forms::{
    index_and_relative_index, is_invariant_under, metric_radical, restricted_index,
    MetricLieAlgebra,
};
use crate::levi::{levi_decomposition, simple_ideals, LeviDecomposition};
use crate::lie::LieAlgebra;
use crate::nilinv::nil_invariance_check;
use crate::radicals::is_solvable_algebra;
use crate::reduction::is_effective;
use crate::subspace::Subspace;
use num::traits::Zero;

/// Exact checks behind the strong invariance statement: the restriction of
/// the form to the characteristic ideal s ⋉ r is invariant under the whole
/// algebra, the form is invariant under s ⋉ r, and the compact/non-compact
/// orthogonality relations hold.
#[derive(Debug, Clone)]
pub struct StrongInvarianceReport {
    pub restriction_invariant_under_g: bool,
    pub invariant_under_characteristic_ideal: bool,
    pub s_perp_bracket_k_g: bool,
    pub k_perp_bracket_s_g: bool,
    pub simple_factors_pairwise_orthogonal: bool,
}

impl StrongInvarianceReport {
    pub fn all_hold(&self) -> bool {
        self.restriction_invariant_under_g
            && self.invariant_under_characteristic_ideal
            && self.s_perp_bracket_k_g
            && self.k_perp_bracket_s_g
            && self.simple_factors_pairwise_orthogonal
    }
}

pub fn verify_strong_invariance(m: &MetricLieAlgebra) -> Result<StrongInvarianceReport, LieError> {
    let cert = nil_invariance_check(m);
    if !cert.verdict {
        return Err(LieError::Precondition(
            "strong invariance needs a nil-invariant form".into(),
        ));
    }
    let levi = levi_decomposition(&m.algebra);
    let gs = levi.characteristic_ideal();
    let g = &m.algebra;
    let full = Subspace::full(g.dim);

    // (1) <[x, y], z> = -<y, [x, z]> for x in g, y, z in gs
    let mut restriction_invariant = true;
    'outer1: for x in full.basis_vectors() {
        for y in gs.basis_vectors() {
            for z in gs.basis_vectors() {
                let lhs = m.form.eval(&g.bracket(&x, &y), &z);
                let rhs = -m.form.eval(&y, &g.bracket(&x, &z));
                if lhs != rhs {
                    restriction_invariant = false;
                    break 'outer1;
                }
            }
        }
    }
    // (2) ad(x) skew on all of g for x in gs
    let invariant_under_gs = is_invariant_under(m, &gs);

    // s ⟂ [k, g] and k ⟂ [s, g]
    let bracket_k_g = g.bracket_space(&levi.compact, &full);
    let bracket_s_g = g.bracket_space(&levi.noncompact, &full);
    let s_perp = gram_block_zero(m, &levi.noncompact, &bracket_k_g);
    let k_perp = gram_block_zero(m, &levi.compact, &bracket_s_g);

    // simple factors of s pairwise orthogonal
    let mut pairwise = true;
    if !levi.noncompact.is_zero() {
        let (s_alg, inc) = g.restrict(&levi.noncompact)?;
        let factors: Vec<Subspace> = simple_ideals(&s_alg)
            .into_iter()
            .map(|w| {
                Subspace::from_columns(
                    g.dim,
                    w.basis_vectors().iter().map(|v| inc.mul_vec(v)).collect(),
                )
            })
            .collect();
        for (a, fa) in factors.iter().enumerate() {
            for fb in factors.iter().skip(a + 1) {
                if !gram_block_zero(m, fa, fb) {
                    pairwise = false;
                }
            }
        }
    }
    Ok(StrongInvarianceReport {
        restriction_invariant_under_g: restriction_invariant,
        invariant_under_characteristic_ideal: invariant_under_gs,
        s_perp_bracket_k_g: s_perp,
        k_perp_bracket_s_g: k_perp,
        simple_factors_pairwise_orthogonal: pairwise,
    })
}

pub fn gram_block_zero(m: &MetricLieAlgebra, a: &Subspace, b: &Subspace) -> bool {
    a.basis_vectors().iter().all(|x| {
        b.basis_vectors()
            .iter()
            .all(|y| m.form.eval(x, y).is_zero())
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseLabel {
    CI,
    CII,
    CIII,
    DIa,
    DIb,
    DIc,
    DII,
    DIIIa,
    DIIIb,
    Semidefinite,
    OutOfRange,
}

impl std::fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            CaseLabel::CI => "C-I",
            CaseLabel::CII => "C-II",
            CaseLabel::CIII => "C-III",
            CaseLabel::DIa => "D-I-a",
            CaseLabel::DIb => "D-I-b",
            CaseLabel::DIc => "D-I-c",
            CaseLabel::DII => "D-II",
            CaseLabel::DIIIa => "D-III-a",
            CaseLabel::DIIIb => "D-III-b",
            CaseLabel::Semidefinite => "SEMIDEFINITE",
            CaseLabel::OutOfRange => "OUT_OF_RANGE",
        };
        f.write_str(s)
    }
}

/// Structural witnesses recorded alongside a classification verdict.
#[derive(Debug, Clone)]
pub struct ClassificationWitnesses {
    pub compact: Subspace,
    pub noncompact: Subspace,
    pub radical: Subspace,
    pub metric_radical: Subspace,
    pub direct_sum_of_ideals: bool,
    pub s_perp_k_and_r: bool,
    pub k_perp_derived_r: bool,
    pub gperp_in_k_plus_center_r: bool,
    pub gperp_meets_r_trivially: bool,
}

#[derive(Debug, Clone)]
pub struct ClassificationReport {
    pub ell: usize,
    pub case_label: CaseLabel,
    pub witnesses: ClassificationWitnesses,
}

/// Classifies an effective metric Lie algebra with nil-invariant form by its
/// relative index: the semidefinite case, the five Lorentzian/index-two case
/// families, or OUT_OF_RANGE for relative index three and above. The
/// structural claims behind the case list are re-verified exactly and any
/// mismatch is reported as an invariant violation.
pub fn classify_low_index(m: &MetricLieAlgebra) -> Result<ClassificationReport, LieError> {
    if !is_effective(m) {
        return Err(LieError::Precondition(
            "classification needs an effective input; apply effectivize first".into(),
        ));
    }
    if !nil_invariance_check(m).verdict {
        return Err(LieError::Precondition(
            "classification needs a nil-invariant form".into(),
        ));
    }
    let g = &m.algebra;
    let levi = levi_decomposition(g);
    let gperp = metric_radical(m);
    let (_, ell) = index_and_relative_index(m);
    let witnesses =
        |direct: bool, s_perp: bool, k_perp: bool, gkz: bool, gr: bool| ClassificationWitnesses {
            compact: levi.compact.clone(),
            noncompact: levi.noncompact.clone(),
            radical: levi.radical.clone(),
            metric_radical: gperp.clone(),
            direct_sum_of_ideals: direct,
            s_perp_k_and_r: s_perp,
            k_perp_derived_r: k_perp,
            gperp_in_k_plus_center_r: gkz,
            gperp_meets_r_trivially: gr,
        };
    if ell >= 3 {
        return Ok(ClassificationReport {
            ell,
            case_label: CaseLabel::OutOfRange,
            witnesses: witnesses(false, false, false, false, false),
        });
    }
    // structural claims for relative index <= 2
    let direct = g.bracket_space(&levi.compact, &levi.noncompact).is_zero()
        && g.bracket_space(&levi.compact, &levi.radical).is_zero()
        && g.bracket_space(&levi.noncompact, &levi.radical).is_zero();
    let derived_r = g.bracket_space(&levi.radical, &levi.radical);
    let s_perp = gram_block_zero(m, &levi.noncompact, &levi.compact.sum(&levi.radical));
    let k_perp = gram_block_zero(m, &levi.compact, &derived_r);
    let center_r = if levi.radical.is_zero() {
        Subspace::zero(g.dim)
    } else {
        let (r_alg, r_inc) = g.restrict(&levi.radical)?;
        Subspace::from_columns(
            g.dim,
            r_alg
                .center()
                .basis_vectors()
                .iter()
                .map(|v| r_inc.mul_vec(v))
                .collect(),
        )
    };
    let gkz = levi.compact.sum(&center_r).contains_subspace(&gperp);
    let gr = gperp.intersect(&levi.radical).is_zero();
    let wit = witnesses(direct, s_perp, k_perp, gkz, gr);
    if ell == 0 {
        // semidefinite: k x r with r abelian and definite
        if !levi.noncompact.is_zero()
            || !derived_r.is_zero()
            || !definite_on(m, &levi.radical)
            || !direct
        {
            return Err(LieError::InvariantViolation(
                "semidefinite structure claims failed".into(),
            ));
        }
        return Ok(ClassificationReport {
            ell,
            case_label: CaseLabel::Semidefinite,
            witnesses: wit,
        });
    }
    if !(direct && s_perp && k_perp && gkz && gr) {
        return Err(LieError::InvariantViolation(
            "structure claims for relative index <= 2 failed".into(),
        ));
    }
    let r_abelian = derived_r.is_zero();
    let label = if levi.noncompact.is_zero() {
        let ell_r = restricted_relative_index(m, &levi.radical);
        match (ell, r_abelian) {
            (1, true) => {
                must(
                    ell_r <= 1,
                    "case C-I needs a semidefinite or Lorentzian radical",
                )?;
                CaseLabel::CI
            }
            (1, false) => {
                must(
                    oscillator_type(m, g, &levi, 1)?,
                    "case C-II needs a Lorentzian radical of oscillator type",
                )?;
                CaseLabel::CII
            }
            (2, true) => CaseLabel::DIa,
            (2, false) => match ell_r {
                1 => {
                    must(
                        oscillator_type(m, g, &levi, 1)?,
                        "case D-I-b needs a Lorentzian radical of oscillator type",
                    )?;
                    CaseLabel::DIb
                }
                2 => {
                    must(
                        restricted_index(m, &levi.radical).zeros == 0,
                        "case D-I-c needs a nondegenerate radical",
                    )?;
                    CaseLabel::DIc
                }
                _ => {
                    return Err(LieError::InvariantViolation(
                        "non-abelian radical with semidefinite restriction".into(),
                    ))
                }
            },
            _ => unreachable!("ell is 1 or 2 here"),
        }
    } else {
        let sig_s = restricted_index(m, &levi.noncompact);
        must(sig_s.zeros == 0, "non-compact factor must be nondegenerate")?;
        let ell_s = sig_s.positives.min(sig_s.negatives);
        let (s_alg, _) = g.restrict(&levi.noncompact)?;
        let factor_count = simple_ideals(&s_alg).len();
        match (ell, ell_s) {
            (1, 1) => {
                must(
                    s_alg.dim == 3 && factor_count == 1,
                    "case C-III carries a single three-dimensional split factor",
                )?;
                must(
                    r_abelian && definite_on(m, &levi.radical),
                    "case C-III radical must be abelian and definite",
                )?;
                CaseLabel::CIII
            }
            (2, 2) => {
                must(
                    s_alg.dim == 6 && factor_count == 2,
                    "case D-II carries two three-dimensional split factors",
                )?;
                must(
                    r_abelian && definite_on(m, &levi.radical),
                    "case D-II radical must be abelian and definite",
                )?;
                CaseLabel::DII
            }
            (2, 1) => {
                must(
                    s_alg.dim == 3 && factor_count == 1,
                    "case D-III carries a single three-dimensional split factor",
                )?;
                if r_abelian {
                    must(
                        restricted_relative_index(m, &levi.radical) <= 1,
                        "case D-III-a radical must be semidefinite or Lorentzian",
                    )?;
                    CaseLabel::DIIIa
                } else {
                    must(
                        oscillator_type(m, g, &levi, 1)?,
                        "case D-III-b needs a Lorentzian radical of oscillator type",
                    )?;
                    CaseLabel::DIIIb
                }
            }
            _ => {
                return Err(LieError::InvariantViolation(
                    "no case matches the computed indices".into(),
                ))
            }
        }
    };
    Ok(ClassificationReport {
        ell,
        case_label: label,
        witnesses: wit,
    })
}

fn must(cond: bool, claim: &str) -> Result<bool, LieError> {
    if cond {
        Ok(true)
    } else {
        Err(LieError::InvariantViolation(claim.into()))
    }
}

fn definite_on(m: &MetricLieAlgebra, w: &Subspace) -> bool {
    let s = restricted_index(m, w);
    s.zeros == 0 && s.positives.min(s.negatives) == 0
}

fn restricted_relative_index(m: &MetricLieAlgebra, w: &Subspace) -> usize {
    let s = restricted_index(m, w);
    s.positives.min(s.negatives)
}

/// Structural oscillator-type recognition for the radical: solvable(trivially
/// true for the radical), non-abelian, of Lorentzian type with the stated
/// relative index.
fn oscillator_type(
    m: &MetricLieAlgebra,
    g: &LieAlgebra,
    levi: &LeviDecomposition,
    expect_ell: usize,
) -> Result<bool, LieError> {
    let (r_alg, _) = g.restrict(&levi.radical)?;
    let solvable = is_solvable_algebra(&r_alg);
    let non_abelian = !r_alg.derived_subalgebra().is_zero();
    let lorentzian = restricted_relative_index(m, &levi.radical) == expect_ell;
    Ok(solvable && non_abelian && lorentzian)
}

/// Decomposition of an effective metric Lie algebra with abelian radical into
/// the Euclidean-type ideal, the kernel factor, and the cotangent factor.
#[derive(Debug, Clone)]
pub struct AbelianRadicalSplit {
    /// k ⋉ a: compact Levi part acting on the s-invariants of the radical.
    pub g1: Subspace,
    /// s0: the kernel of the s-action on [s, r].
    pub g2: Subspace,
    /// s1 ⋉ [s, r]: a metric cotangent algebra.
    pub g3: Subspace,
}

pub fn abelian_radical_decomposition(
    m: &MetricLieAlgebra,
) -> Result<AbelianRadicalSplit, LieError> {
    let g = &m.algebra;
    let levi = levi_decomposition(g);
    if !g.bracket_space(&levi.radical, &levi.radical).is_zero() {
        return Err(LieError::Precondition(
            "abelian-radical decomposition needs an abelian radical".into(),
        ));
    }
    if !is_effective(m) {
        return Err(LieError::Precondition(
            "abelian-radical decomposition needs an effective input".into(),
        ));
    }
    if !nil_invariance_check(m).verdict {
        return Err(LieError::Precondition(
            "abelian-radical decomposition needs a nil-invariant form".into(),
        ));
    }
    // a = r^s, b = [s, r]
    let a = g.centralizer(&levi.noncompact).intersect(&levi.radical);
    let b = g.bracket_space(&levi.noncompact, &levi.radical);
    // s0 = kernel of the s-action on b; s1 = sum of the complementary factors
    let s0 = g.centralizer(&b).intersect(&levi.noncompact);
    let mut s1 = Subspace::zero(g.dim);
    if !levi.noncompact.is_zero() {
        let (s_alg, inc) = g.restrict(&levi.noncompact)?;
        for w in simple_ideals(&s_alg) {
            let ambient = Subspace::from_columns(
                g.dim,
                w.basis_vectors().iter().map(|v| inc.mul_vec(v)).collect(),
            );
            if !s0.contains_subspace(&ambient) {
                s1 = s1.sum(&ambient);
            }
        }
    }
    let g1 = levi.compact.sum(&a);
    let g2 = s0.clone();
    let g3 = s1.sum(&b);
    // exact verification of the claimed structure
    let split_ok = g1.dim() + g2.dim() + g3.dim() == g.dim
        && g1.intersect(&g2).is_zero()
        && g1.intersect(&g3).is_zero()
        && g2.intersect(&g3).is_zero();
    let ideals_ok = g.is_ideal(&g1) && g.is_ideal(&g2) && g.is_ideal(&g3);
    let orth_ok = gram_block_zero(m, &g1, &g2)
        && gram_block_zero(m, &g1, &g3)
        && gram_block_zero(m, &g2, &g3);
    let nondeg_ok = (g2.is_zero() || restricted_index(m, &g2).zeros == 0)
        && (g3.is_zero() || restricted_index(m, &g3).zeros == 0);
    let inv_ok = (g2.is_zero() || is_invariant_under(m, &g2))
        && (g3.is_zero() || is_invariant_under(m, &g3));
    // cotangent shape of g3: s1 and b dually paired, b totally isotropic
    let cotangent_ok = s1.dim() == b.dim()
        && m.form.restricted_gram(&b).is_zero()
        && (b.is_zero() || {
            let pairing_rank = {
                let bs = s1.basis();
                let bb = b.basis();
                bs.transpose().mul(&m.form.gram).mul(bb).rank()
            };
            pairing_rank == b.dim()
        });
    let gperp_ok = g1.contains_subspace(&metric_radical(m));
    if !(split_ok && ideals_ok && orth_ok && nondeg_ok && inv_ok && cotangent_ok && gperp_ok) {
        return Err(LieError::InvariantViolation(format!(
            "abelian-radical split claims failed: split {split_ok}, ideals {ideals_ok}, \
             orthogonality {orth_ok}, nondegeneracy {nondeg_ok}, invariance {inv_ok}, \
             cotangent {cotangent_ok}, radical containment {gperp_ok}"
        )));
    }
    Ok(AbelianRadicalSplit { g1, g2, g3 })
}
