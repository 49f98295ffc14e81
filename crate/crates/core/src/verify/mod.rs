//! Numerical verification of the coefficient inequalities on random
//! subordinate functions and K-quasiconformal harmonic mappings.

pub mod report;
pub mod sample;
pub mod schwarz;
pub mod suites;

pub use report::{ControlCheck, EqualityCase, FailureRecord, VerificationReport, INEQUALITY_TOL};
pub use sample::{
    bohr_sum, gen_member, gen_member_recipe, gen_quasiconformal, HarmonicMapSample, HarmonicParts, MemberRecipe,
    Source, Target,
};
pub use schwarz::{gen_schwarz, gen_schwarz_seeded, gen_unit_factor, SchwarzKind, SchwarzMap, UnitFactor};
pub use suites::{
    check_bohr_theorem, check_generalized_lemma, check_log_bohr, check_log_gamma_bounds, check_majorant_lemma,
    check_majorant_suite, check_rogosinski, LogGammaMode, SuiteConfig,
};
