//! Named verification suites over the instance catalog. Each suite prints
//! one line per assertion and reports the failure count; any failure makes
//! the command exit nonzero with the first counterexample named.

use metric_lie::classify::{
    abelian_radical_decomposition, classify_low_index, verify_strong_invariance, CaseLabel,
};
use metric_lie::constructions::{self as cons, catalog, catalog_entry};
use metric_lie::fitting::fitting_decomposition;
use metric_lie::forms::{
    form_signature, index_and_relative_index, invariance_subalgebra, metric_radical,
    MetricLieAlgebra, SymBilinearForm,
};
use metric_lie::matrix::Matrix;
use metric_lie::modules::{
    skew_pairing_space, sl2_standard_module, so3_irreducible, symmetric_power_module, ModuleAction,
};
use metric_lie::nilinv::nilinvariant_form_space;
use metric_lie::radicals::is_solvable_algebra;
use metric_lie::rational::{rat, Rational};
use metric_lie::reduction::{complete_reduction, is_effective};
use num::traits::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub struct SuiteResult {
    pub lines: Vec<String>,
    pub failures: usize,
}

impl SuiteResult {
    fn new() -> SuiteResult {
        SuiteResult {
            lines: Vec::new(),
            failures: 0,
        }
    }

    fn check(&mut self, cond: bool, what: &str) {
        if cond {
            self.lines.push(format!("ok   {what}"));
        } else {
            self.failures += 1;
            self.lines.push(format!("FAIL {what}"));
        }
    }
}

pub const SUITES: &[&str] = &[
    "thmA",
    "thmB",
    "thmC",
    "thmD",
    "prop42",
    "appendixA",
    "euclid",
];

pub fn run_suite(name: &str, seed: u64) -> Result<SuiteResult, String> {
    match name {
        "thmA" => Ok(suite_strong_invariance(seed)),
        "thmB" => Ok(suite_structure()),
        "thmC" => Ok(suite_lorentzian()),
        "thmD" => Ok(suite_index_two()),
        "prop42" => Ok(suite_reduction()),
        "appendixA" => Ok(suite_skew_pairings()),
        "euclid" => Ok(suite_euclidean()),
        other => Err(format!(
            "unknown suite {other:?}; known suites: {} or all",
            SUITES.join(", ")
        )),
    }
}

/// Strong invariance on every catalog instance, plus solvable invariance with
/// seeded random nil-invariant forms and Fitting orthogonality.
fn suite_strong_invariance(seed: u64) -> SuiteResult {
    let mut r = SuiteResult::new();
    for e in catalog() {
        match verify_strong_invariance(&e.metric) {
            Ok(rep) => r.check(rep.all_hold(), &format!("strong invariance on {}", e.name)),
            Err(err) => r.check(false, &format!("strong invariance on {} ({err})", e.name)),
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for e in catalog() {
        if !is_solvable_algebra(&e.metric.algebra) {
            continue;
        }
        let g = &e.metric.algebra;
        let basis = nilinvariant_form_space(g);
        let fit = fitting_decomposition(g, seed);
        let mut all_invariant = true;
        let mut all_orthogonal = true;
        for _ in 0..200 {
            let mut gram = Matrix::zero(g.dim, g.dim);
            for b in &basis {
                let c = rat(rng.gen_range(-9..=9i64));
                if !c.is_zero() {
                    gram = gram.add(&b.gram.scale(&c));
                }
            }
            let m = MetricLieAlgebra::new(g.clone(), SymBilinearForm::new(gram).unwrap()).unwrap();
            if !invariance_subalgebra(&m).is_full() {
                all_invariant = false;
            }
            for x in fit.fitting_zero.basis_vectors() {
                for y in fit.fitting_one.basis_vectors() {
                    if !m.form.eval(&x, &y).is_zero() {
                        all_orthogonal = false;
                    }
                }
            }
        }
        r.check(
            all_invariant,
            &format!(
                "200 sampled nil-invariant forms on solvable {} are invariant",
                e.name
            ),
        );
        r.check(
            all_orthogonal,
            &format!("Fitting parts orthogonal under sampled forms on {}", e.name),
        );
    }
    r
}

/// Structure theorem for relative index <= 2 on every effective instance.
fn suite_structure() -> SuiteResult {
    let mut r = SuiteResult::new();
    for e in catalog() {
        if !is_effective(&e.metric) {
            continue;
        }
        let (_, ell) = index_and_relative_index(&e.metric);
        if ell > 2 {
            continue;
        }
        match classify_low_index(&e.metric) {
            Ok(rep) => {
                let w = &rep.witnesses;
                let ok = rep.case_label == CaseLabel::Semidefinite
                    || (w.direct_sum_of_ideals
                        && w.s_perp_k_and_r
                        && w.k_perp_derived_r
                        && w.gperp_in_k_plus_center_r
                        && w.gperp_meets_r_trivially);
                r.check(ok, &format!("structure claims hold on {}", e.name));
            }
            Err(err) => r.check(
                false,
                &format!("structure claims hold on {} ({err})", e.name),
            ),
        }
    }
    r
}

fn expect_case(r: &mut SuiteResult, name: &str, expected: CaseLabel) {
    let m = catalog_entry(name).expect("catalog name");
    match classify_low_index(&m) {
        Ok(rep) => r.check(
            rep.case_label == expected,
            &format!("{name} classifies as {expected} (got {})", rep.case_label),
        ),
        Err(err) => r.check(false, &format!("{name} classifies as {expected} ({err})")),
    }
}

fn suite_lorentzian() -> SuiteResult {
    let mut r = SuiteResult::new();
    expect_case(&mut r, "class-c1", CaseLabel::CI);
    expect_case(&mut r, "class-c2", CaseLabel::CII);
    expect_case(&mut r, "sl2", CaseLabel::CIII);
    r
}

fn suite_index_two() -> SuiteResult {
    let mut r = SuiteResult::new();
    expect_case(&mut r, "class-d1a", CaseLabel::DIa);
    expect_case(&mut r, "class-d1b", CaseLabel::DIb);
    expect_case(&mut r, "osc-alpha-12", CaseLabel::DIc);
    expect_case(&mut r, "sl2-sl2", CaseLabel::DII);
    expect_case(&mut r, "class-d3a", CaseLabel::DIIIa);
    expect_case(&mut r, "class-d3b", CaseLabel::DIIIb);
    r
}

/// Complete reduction of every solvable catalog instance to an abelian
/// quotient with strictly decreasing index and at most mu steps.
fn suite_reduction() -> SuiteResult {
    let mut r = SuiteResult::new();
    for e in catalog() {
        if !is_solvable_algebra(&e.metric.algebra) {
            continue;
        }
        let (mu, _) = index_and_relative_index(&e.metric);
        match complete_reduction(&e.metric) {
            Ok(trace) => {
                let endpoint = trace
                    .steps
                    .last()
                    .map(|s| s.quotient.clone())
                    .unwrap_or_else(|| e.metric.clone());
                let abelian = endpoint.algebra.derived_subalgebra().is_zero();
                let mut decreasing = true;
                let mut prev = mu;
                for s in &trace.steps {
                    let (m2, _) = index_and_relative_index(&s.quotient);
                    if m2 >= prev {
                        decreasing = false;
                    }
                    prev = m2;
                }
                r.check(
                    abelian && trace.steps.len() <= mu && decreasing,
                    &format!(
                        "{} reduces to abelian in {} step(s), index {} at the start",
                        e.name,
                        trace.steps.len(),
                        mu
                    ),
                );
            }
            Err(err) => r.check(false, &format!("{} reduces to abelian ({err})", e.name)),
        }
    }
    r
}

/// Skew-pairing dimension tables and the Killing-form identification.
fn suite_skew_pairings() -> SuiteResult {
    let mut r = SuiteResult::new();
    let base = sl2_standard_module();
    let expected = [0usize, 1, 0, 0, 0, 0];
    for k in 1..=6 {
        let module = symmetric_power_module(&base, k);
        let dim = skew_pairing_space(&module).len();
        r.check(
            dim == expected[k - 1],
            &format!(
                "sl2 S^{k} pairing space has dimension {} (expected {})",
                dim,
                expected[k - 1]
            ),
        );
    }
    // the k = 2 pairing is a rational multiple of the Killing form
    let s2 = symmetric_power_module(&base, 2);
    let pairings = skew_pairing_space(&s2);
    r.check(
        pairings.len() == 1 && pairing_is_killing_multiple(&s2, &pairings[0]),
        "sl2 S^2 pairing is a rational multiple of the Killing form",
    );
    for l in 1..=3 {
        let module = so3_irreducible(l);
        let dim = skew_pairing_space(&module).len();
        let expected = usize::from(l == 1);
        r.check(
            dim == expected,
            &format!(
                "so3 irreducible of dimension {} has pairing space dimension {dim} (expected {expected})",
                2 * l + 1
            ),
        );
    }
    // trivial module: the skew condition degenerates, every pairing works
    let trivial = ModuleAction::trivial(cons::sl2(), 2);
    r.check(
        skew_pairing_space(&trivial).len() == 6,
        "trivial 2-dim sl2 module has a 6-dimensional pairing space",
    );
    r
}

/// Equates a pairing on an adjoint-isomorphic module with the Killing form
/// through an explicitly solved intertwiner.
pub fn pairing_is_killing_multiple(module: &ModuleAction, pairing: &Matrix) -> bool {
    let f = &module.algebra;
    let nf = f.dim;
    let nv = module.module_dim;
    if nf != nv {
        return false;
    }
    // solve the equivariance phi(rho(x) v) = ad(x) phi(v) for phi: V -> f
    let mut rows = Vec::new();
    for i in 0..nf {
        let ad = f.ad_basis(i);
        let rho = &module.matrices[i];
        // constraint matrix on vectorized phi: phi rho(x) - ad(x) phi = 0
        for a in 0..nf {
            for b in 0..nv {
                let mut row = vec![Rational::zero(); nf * nv];
                for t in 0..nv {
                    let c = rho.get(t, b);
                    if !c.is_zero() {
                        row[a * nv + t] = &row[a * nv + t] + c;
                    }
                }
                for t in 0..nf {
                    let c = ad.get(a, t);
                    if !c.is_zero() {
                        row[t * nv + b] = &row[t * nv + b] - c;
                    }
                }
                rows.push(row);
            }
        }
    }
    let ker = Matrix::from_rows(rows).kernel_matrix();
    if ker.cols != 1 {
        return false;
    }
    let phi = Matrix::from_flat(nf, nv, ker.col(0));
    let killing = f.killing_form();
    // pairing(x, v) should equal c * kappa(x, phi v) for a single constant c
    let composed = killing.mul(&phi);
    let mut c: Option<Rational> = None;
    for i in 0..nf {
        for j in 0..nv {
            let lhs = pairing.get(i, j);
            let rhs = composed.get(i, j);
            match (lhs.is_zero(), rhs.is_zero()) {
                (true, true) => {}
                (false, false) => {
                    let ratio = lhs / rhs;
                    match &c {
                        None => c = Some(ratio),
                        Some(prev) if *prev == ratio => {}
                        _ => return false,
                    }
                }
                _ => return false,
            }
        }
    }
    c.is_some()
}

/// Euclidean non-existence, the two graph-radical examples, and the
/// abelian-radical decomposition witnesses.
fn suite_euclidean() -> SuiteResult {
    let mut r = SuiteResult::new();
    for n in [4usize, 5] {
        let g = cons::build_euclidean(n).unwrap();
        let basis = nilinvariant_form_space(&g);
        let rot_dim = n * (n - 1) / 2;
        let mut translations_in_kernel = true;
        for form in &basis {
            for t in rot_dim..g.dim {
                for c in 0..g.dim {
                    if !form.gram.get(t, c).is_zero() {
                        translations_in_kernel = false;
                    }
                }
            }
        }
        r.check(
            translations_in_kernel,
            &format!(
                "every nil-invariant form on the euclidean algebra e{n} kills the translations \
                 ({} basis forms)",
                basis.len()
            ),
        );
        r.check(
            basis.len() == rot_dim * (rot_dim + 1) / 2,
            &format!("the e{n} form space is exactly the symmetric forms on so{n}"),
        );
    }
    let g95 = cons::build_graph_radical();
    let sig = form_signature(&g95);
    r.check(
        (sig.positives, sig.negatives, sig.zeros) == (3, 3, 3),
        "graph-radical example has signature (3,3,3)",
    );
    let rad = metric_radical(&g95);
    r.check(
        !g95.algebra.is_ideal(&rad) && g95.algebra.largest_ideal_within(&rad).is_zero(),
        "graph-radical metric radical is not an ideal and contains none",
    );
    let g96 = cons::build_graph_radical_torus();
    let sig = form_signature(&g96);
    r.check(
        (sig.positives, sig.negatives, sig.zeros) == (15, 3, 3),
        "torus-embedded graph example has signature (15,3,3)",
    );
    // abelian-radical splits
    let cot = cons::build_cotangent(&cons::sl2());
    match abelian_radical_decomposition(&cot) {
        Ok(split) => r.check(
            split.g1.is_zero() && split.g2.is_zero() && split.g3.is_full(),
            "cotangent of sl2 splits as (0, 0, everything)",
        ),
        Err(err) => r.check(false, &format!("cotangent of sl2 splits ({err})")),
    }
    match abelian_radical_decomposition(&g95) {
        Ok(split) => r.check(
            split.g1.is_full() && split.g2.is_zero() && split.g3.is_zero(),
            "graph-radical example splits as (everything, 0, 0)",
        ),
        Err(err) => r.check(false, &format!("graph-radical example splits ({err})")),
    }
    let so3m = cons::so3_neg_killing();
    match abelian_radical_decomposition(&so3m) {
        Ok(split) => r.check(
            split.g1.is_full() && split.g2.is_zero() && split.g3.is_zero(),
            "compact so3 splits as (everything, 0, 0)",
        ),
        Err(err) => r.check(false, &format!("compact so3 splits ({err})")),
    }
    r
}
