//! Exact-rational toolkit for finite-dimensional metric Lie algebras.
//!
//! A metric Lie algebra is a Lie algebra over the rationals given by
//! structure constants, paired with a symmetric bilinear form. The crate
//! computes the standard structural decompositions (solvable radical,
//! nilradical, Levi factors, Fitting and Jordan decompositions), decides
//! invariance and nil-invariance of the form, performs isotropic-ideal
//! reduction, and classifies effective algebras of relative index at most
//! two. All arithmetic is exact; there is no floating point anywhere.
//!
//! ```
//! use metric_lie::classify::{classify_low_index, CaseLabel};
//! use metric_lie::constructions::standard_oscillator;
//! use metric_lie::forms::index_and_relative_index;
//! use metric_lie::nilinv::nil_invariance_check;
//!
//! let osc = standard_oscillator(1);
//! assert_eq!(index_and_relative_index(&osc), (1, 1));
//! assert!(nil_invariance_check(&osc).verdict);
//! assert_eq!(classify_low_index(&osc).unwrap().case_label, CaseLabel::CII);
//! ```

pub mod classify;
pub mod constructions;
pub mod error;
pub mod fitting;
pub mod forms;
pub mod jordan;
pub mod levi;
pub mod lie;
pub mod matrix;
pub mod modules;
pub mod nilinv;
pub mod poly;
pub mod radicals;
pub mod rational;
pub mod reduction;
pub mod subspace;

pub use classify::{
    abelian_radical_decomposition, classify_low_index, verify_strong_invariance,
    AbelianRadicalSplit, CaseLabel, ClassificationReport,
};
pub use error::LieError;
pub use fitting::{
    fitting_decomposition, fitting_with_element, FittingDecomposition, DEFAULT_FITTING_SEED,
};
pub use forms::{
    index_and_relative_index, invariance_subalgebra, is_invariant, metric_radical, perp,
    MetricLieAlgebra, SymBilinearForm,
};
pub use jordan::{jordan_chevalley, signature, JordanPair, Signature};
pub use levi::{levi_decomposition, simple_ideals, split_compact_noncompact, LeviDecomposition};
pub use lie::{semidirect_product, BracketEntry, LieAlgebra};
pub use matrix::Matrix;
pub use modules::{skew_pairing_space, symmetric_power_module, ModuleAction};
pub use nilinv::{nil_invariance_check, nilinvariant_form_space, NilInvarianceCertificate};
pub use radicals::{nilradical, solvable_radical};
pub use rational::{parse_rational, Rational};
pub use reduction::{
    complete_reduction, effectivize, is_effective, reduce_by_isotropic_ideal, transporter,
    ReductionTrace,
};
pub use subspace::{kernel, solve_linear, LinearSolution, Subspace};
