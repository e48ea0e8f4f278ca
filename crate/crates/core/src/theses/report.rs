use crate::experiments::{Prior, PriorDoc};
use crate::qualitative::{Atom, DeltaSpace, EventDoc};
use serde::Serialize;

/// Failures kept per sample check.
pub const FAILURE_CAP: usize = 16;

/// Sample checks quantify over probability-realized orderings only.
pub const RESTRICTION: &str = "representable";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Conclusion {
    Consistent,
    CounterexampleFound,
    /// A negative claim for which no sampled prior produced a witness.
    Unwitnessed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AtomDoc {
    pub left: EventDoc,
    pub cond: EventDoc,
}

impl AtomDoc {
    pub(crate) fn new(space: &DeltaSpace, atom: Atom) -> Self {
        AtomDoc {
            left: space.doc(atom.left),
            cond: space.doc(atom.cond),
        }
    }
}

/// One prior at which a check failed, replayable from `prior`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SampleFailure {
    /// Position of the prior in the deterministic sample.
    pub index: usize,
    pub prior: PriorDoc,
    pub atoms: Vec<AtomDoc>,
    pub detail: String,
}

impl SampleFailure {
    pub(crate) fn new(
        index: usize,
        prior: &Prior,
        atoms: Vec<AtomDoc>,
        detail: impl Into<String>,
    ) -> Self {
        SampleFailure {
            index,
            prior: prior.to_doc(),
            atoms,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SampleCheckReport {
    pub check: String,
    pub restriction: &'static str,
    pub seed: u64,
    pub priors_examined: usize,
    pub conclusion: Conclusion,
    pub failures: Vec<SampleFailure>,
    /// For negative claims: the first prior exhibiting the claimed failure.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<SampleFailure>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub posterior_equivalent: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub favoring_equivalent: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub separating_prior: Option<PriorDoc>,
}

impl SampleCheckReport {
    pub(crate) fn new(
        check: &str,
        seed: u64,
        priors_examined: usize,
        mut failures: Vec<SampleFailure>,
    ) -> Self {
        failures.sort_by_key(|f| f.index);
        failures.truncate(FAILURE_CAP);
        SampleCheckReport {
            check: check.to_string(),
            restriction: RESTRICTION,
            seed,
            priors_examined,
            conclusion: if failures.is_empty() {
                Conclusion::Consistent
            } else {
                Conclusion::CounterexampleFound
            },
            failures,
            witness: None,
            posterior_equivalent: None,
            favoring_equivalent: None,
            separating_prior: None,
        }
    }

    pub fn is_consistent(&self) -> bool {
        self.conclusion == Conclusion::Consistent
    }
}
