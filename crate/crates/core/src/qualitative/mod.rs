//! Qualitative conditional probability on Δ = Θ × Ω.

mod axioms;
mod enumerate;
mod lemmas;
mod likelihood;
mod measure;
mod ordering;
mod space;

pub use axioms::{
    check_axiom0, check_axiom0_with, check_axioms, check_axioms_capped, AxiomReport,
    AXIOM0_EXHAUSTIVE_CAP, AXIOM0_SAMPLES, EXHAUSTIVE_CAP,
};
pub use enumerate::{Mode, PropertyResult, Status, Witness, WITNESS_CAP};
pub use lemmas::{lemma_suite, lemma_suite_with};
pub use likelihood::{induce_likelihood, QualLikelihood};
pub use ordering::{
    almost_sure, compare, cond_independent, induce_ordering, is_null, OverrideDoc, ProvenanceDoc,
    QualOrdering,
};
pub use space::{Atom, DeltaEvent, DeltaSpace, EventDoc, MAX_DELTA};
