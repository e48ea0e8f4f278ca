//! Verification harnesses for the qualitative favoring and equivalence
//! theses. Likelihood-side conditions are decided exactly; the quantifier
//! over orderings is checked on orderings induced by sampled priors, which
//! every report marks as the "representable" restriction.

mod equivalence;
mod favoring;
mod report;

pub use equivalence::{
    assumption1_probe, claim5_equiv_check, corollary1_check, posterior_equivalence_sample_check,
    qlp_equivalence_sample_check, theorem2_witness_check, Assumption1Report, ConditionResult,
    WitnessDoc, WitnessFamily, WitnessReport, EXHAUSTIVE_THETA, SAMPLED_PAIRS,
};
pub use favoring::{
    favoring_sample_check, favoring_sample_check_claim, proposition3_bridge_check, qll_favors,
    theorem1_conditions, theorem1_conditions_with, Diagnostic, FavoringReport, FavoringVerdict,
    StrictScope,
};
pub use report::{AtomDoc, Conclusion, SampleCheckReport, SampleFailure, FAILURE_CAP, RESTRICTION};
