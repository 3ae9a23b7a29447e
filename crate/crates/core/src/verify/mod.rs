//! Checks of every quantitative claim: error decay, inequalities, integral
//! identities, gamma ratios, lemma residuals, matching and zero locations.

pub mod brackets;
pub mod compare;
pub mod gamma_ratio;
pub mod lemma;
pub mod matching;
pub mod quadrature;
pub mod sweep;
pub mod zero_proximity;

pub use brackets::{bracket_check_hermite, bracket_check_ismail, BracketReport, BracketRow};
pub use compare::{
    compare, exact_value, float_argument, rational_argument, CompareOptions, ErrorReport,
};
pub use gamma_ratio::{gamma_ratio_check, GammaRow, GammaTable};
pub use lemma::{
    lemma_residual, lemma_residual_check, lemma_residual_table, rounding_bound, LemmaRow,
    LemmaTable,
};
pub use matching::{matching_check, MatchReport};
pub use quadrature::{quadrature_check, quadrature_suite, Identity, QuadCheck};
pub use sweep::{
    assemble_sweep, convergence_sweep, sweep_point, SweepEntry, SweepResult, NEAR_ZERO_FRACTION,
};
pub use zero_proximity::{zero_proximity, ZeroRow, ZeroTable};
