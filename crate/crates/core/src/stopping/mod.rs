//! Sequential binary designs with deterministic, parameter-free stopping
//! rules.
//!
//! A design fixes the i.i.d. trial kernel; a rule decides after each history
//! whether to stop. Truncating at the rule's horizon turns the pair into an
//! ordinary [`Experiment`](crate::experiments::Experiment) whose outcomes are
//! the terminal bit strings, so the LP and qualitative checks apply to it.
//! Long horizons are handled by lumping every unshared sequence into one
//! remainder outcome.

mod design;
mod mixture;
mod tails;

pub use design::{
    build_lumped_experiment, build_truncated_experiment, build_truncated_experiment_with_cap,
    factored_likelihood, other_label, parse_sequence, sequence_label, shared_terminals,
    terminal_sequences, BernoulliDesign, Design, DesignDoc, RuleDoc, RuleKind, StoppingRule,
    OUTCOME_CAP,
};
pub use mixture::{
    definition15_agreement, irrelevance_check, mixture, shared_outcomes, tagged,
    Definition15Mismatch, Definition15Report, IrrelevanceReport, OutcomeIrrelevance, MISMATCH_CAP,
};
pub use tails::{
    binomial_cdf, example3_tails, example3_tails_at, Example3Tails, Tail, PUBLISHED_BINOMIAL,
    PUBLISHED_NEGATIVE_BINOMIAL,
};

use crate::error::Result;
use crate::experiments::Experiment;
use crate::rational::ratio;

/// Death probabilities `1-θ` for the survival rates 9/10, 47/50 and 49/50.
pub fn example3_design() -> BernoulliDesign {
    let labels = ["9/10", "47/50", "49/50"].map(String::from).to_vec();
    BernoulliDesign::new(labels, vec![ratio(1, 10), ratio(3, 50), ratio(1, 50)])
        .expect("valid probabilities")
}

/// Treat 100 patients, or treat until the second death (at most 100).
pub fn example3_rules() -> (StoppingRule, StoppingRule) {
    (
        StoppingRule::fixed_n(100),
        StoppingRule::inverse_sampling(2, 100),
    )
}

/// Lumped versions of a pair of rules on one design, keeping exactly the
/// sequences terminal under both.
pub fn lumped_pair(
    design: &BernoulliDesign,
    a: &StoppingRule,
    b: &StoppingRule,
) -> Result<(Experiment, Experiment)> {
    let keep = shared_terminals(a, b, OUTCOME_CAP)?;
    Ok((
        build_lumped_experiment(design, a, &keep)?,
        build_lumped_experiment(design, b, &keep)?,
    ))
}
