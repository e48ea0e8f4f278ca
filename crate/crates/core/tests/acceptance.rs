//! Acceptance criteria, one printed line each.
//!
//! Runs with a custom harness so that every criterion is reported even when
//! one fails. Criteria listed in `EXPECTED_FAILURES` are unattainable as
//! stated (the analysis is in the README); they are still checked literally
//! and reported as FAIL, and the run only errors if one of them unexpectedly
//! passes or any other criterion fails.

mod common;

use common::*;
use likelihood_lab::experiments::{
    bayesian_supports, counterexample_prior_for, estimator_coverage, fraser_experiment,
    fraser_high, fraser_low, fraser_mid, lp_equivalent, random_prior, sample_priors, Experiment,
    Prior, SupportVerdict, SupportWitness,
};
use likelihood_lab::qualitative::{
    check_axiom0, check_axioms, induce_likelihood, induce_ordering, lemma_suite, Atom, DeltaEvent,
    Mode, Status,
};
use likelihood_lab::rational::{self, ratio, Rational};
use likelihood_lab::stopping::{
    build_truncated_experiment, definition15_agreement, example3_design, example3_rules,
    example3_tails, irrelevance_check, lumped_pair, shared_outcomes, BernoulliDesign, StoppingRule,
};
use likelihood_lab::theses::{
    assumption1_probe, claim5_equiv_check, corollary1_check, favoring_sample_check,
    qlp_equivalence_sample_check, theorem1_conditions, theorem2_witness_check, Conclusion,
    WitnessFamily, RESTRICTION,
};
use likelihood_lab::{EventSet, HypothesisSet, Subset};
use num_traits::{One, Zero};
use serde_json::{json, Value};
use std::time::Instant;

const EXPECTED_FAILURES: &[u32] = &[2];
const PRIORS: usize = 200;
const SEED: u64 = 20_240_601;

struct Outcome {
    pass: bool,
    detail: String,
    reports: Vec<Value>,
}

impl Outcome {
    fn new(pass: bool, detail: String, reports: Vec<Value>) -> Self {
        Outcome {
            pass,
            detail,
            reports,
        }
    }
}

fn value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).unwrap()
}

fn mass(exp: &Experiment, t: usize, e: &EventSet) -> Rational {
    e.iter().map(|w| exp.likelihood(t, w)).sum()
}

fn example1_golden() -> Outcome {
    let (e, f) = example1();
    let (h1, h2) = (
        e.hypothesis(&["t1"]).unwrap(),
        e.hypothesis(&["t2"]).unwrap(),
    );
    let ev = |x: &Experiment, n: &str| x.event(&[n]).unwrap();
    let lp_ab = lp_equivalent(&e, &ev(&e, "A"), &e, &ev(&e, "B")).unwrap();
    let lp_aa = lp_equivalent(&e, &ev(&e, "A"), &f, &ev(&f, "A'")).unwrap();
    let ab = bayesian_supports(&e, &ev(&e, "A"), &e, &ev(&e, "B"), &h1, &h2).unwrap();
    let ba = bayesian_supports(&e, &ev(&e, "B"), &e, &ev(&e, "A"), &h1, &h2).unwrap();
    let bp_a = bayesian_supports(&f, &ev(&f, "B'"), &e, &ev(&e, "A"), &h1, &h2).unwrap();
    let bp_b = bayesian_supports(&f, &ev(&f, "B'"), &e, &ev(&e, "B"), &h1, &h2).unwrap();
    let bp = ev(&f, "B'");
    let ratio_bp = mass(&f, 0, &bp) / mass(&f, 1, &bp);
    let pass = lp_ab == Some(ratio(3, 4))
        && lp_aa == Some(ratio(1, 2))
        && ab == SupportVerdict::WeakSupport
        && ba == SupportVerdict::WeakSupport
        && bp_a == SupportVerdict::StrictSupport
        && bp_b == SupportVerdict::StrictSupport
        && ratio_bp == Rational::from_integer(12.into());
    let detail = format!(
        "c(A,B)={} c(A,A')={} A/B {:?}/{:?}, B' vs A {:?}, B' vs B {:?}, ratio(B')={}",
        lp_ab.as_ref().map_or("none".into(), rational::format),
        lp_aa.as_ref().map_or("none".into(), rational::format),
        ab,
        ba,
        bp_a,
        bp_b,
        rational::format(&ratio_bp)
    );
    Outcome::new(pass, detail, vec![value(&ab), value(&bp_a)])
}

fn fraser_family() -> Outcome {
    let k = 50;
    let exp = fraser_experiment(k).unwrap();
    let n = exp.n_omega();
    let mut related = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (Subset::singleton(n, i), Subset::singleton(n, j));
            if lp_equivalent(&exp, &a, &exp, &b).unwrap().is_some() {
                related.push((i + 1, j + 1));
            }
        }
    }
    let low = estimator_coverage(&exp, &fraser_low(&exp)).unwrap();
    let mid = estimator_coverage(&exp, &fraser_mid(&exp)).unwrap();
    let high = estimator_coverage(&exp, &fraser_high(&exp)).unwrap();
    let two_thirds = ratio(2, 3);
    let third = ratio(1, 3);
    // Every θ ≤ K keeps its whole support {⌊θ/2⌋, 2θ, 2θ+1} inside Ω.
    let off: Vec<usize> = (0..k)
        .filter(|&t| low[t] != two_thirds)
        .map(|t| t + 1)
        .collect();
    let small_ok = mid.iter().chain(&high).all(|c| *c <= third);
    let pass = related.is_empty() && off.is_empty() && small_ok;
    // What does hold: related pairs are exactly the truncation artifacts
    // (2m, 2m+1) with 2m > K, and the low estimator has coverage ≥ 2/3.
    let artifacts = related
        .iter()
        .all(|&(a, b)| a % 2 == 0 && b == a + 1 && 2 * a > k);
    let low_at_least = low.iter().all(|c| *c >= two_thirds);
    let detail = format!(
        "{} LP-related outcome pairs ({:?}..{:?}; all (2m,2m+1) with 2m>K: {}); low coverage ≠ 2/3 at θ={:?} \
         (value {}), ≥ 2/3 everywhere: {}; mid/high ≤ 1/3: {}",
        related.len(),
        related.first(),
        related.last(),
        artifacts,
        off,
        off.first().map_or("-".into(), |&t| rational::format(&low[t - 1])),
        low_at_least,
        small_ok
    );
    Outcome::new(
        pass,
        detail,
        vec![
            json!(related),
            json!(low.iter().map(rational::format).collect::<Vec<_>>()),
        ],
    )
}

fn example3_significance() -> Outcome {
    let start = Instant::now();
    let t = example3_tails();
    let elapsed = start.elapsed();
    // Independent float oracle (binomial sums in double precision).
    let oracle = [
        (&t.binomial, "0.056612776667857"),
        (&t.negative_binomial, "0.015999930309192"),
        (&t.alternatives[0], "0.015171096710036"),
    ];
    let digits_ok = oracle
        .iter()
        .all(|(tail, s)| rational::to_decimal(&tail.exact, 15) == *s);
    let pass = t.binomial.decimal == "0.0566"
        && digits_ok
        && !t.negative_binomial_reproduced
        && elapsed.as_secs_f64() < 1.0;
    let detail = format!(
        "binomial {} (published {}), at most 1 death in 99: {}, in 100: {}; rounds to {}: {}; {:.1} ms",
        t.binomial.decimal,
        t.published_binomial,
        t.negative_binomial.decimal,
        t.alternatives[0].decimal,
        t.published_negative_binomial,
        t.negative_binomial_reproduced,
        elapsed.as_secs_f64() * 1e3
    );
    Outcome::new(pass, detail, vec![value(&t)])
}

/// `Q(H1 | E, H1∪H2)` computed from scratch; `None` when undefined.
fn restricted(
    exp: &Experiment,
    q: &Prior,
    e: &EventSet,
    h1: &HypothesisSet,
    h2: &HypothesisSet,
) -> Option<Rational> {
    let side =
        |h: &HypothesisSet| -> Rational { h.iter().map(|t| q.mass(t) * mass(exp, t, e)).sum() };
    let (a1, a2) = (side(h1), side(h2));
    let total = &a1 + &a2;
    (!total.is_zero()).then(|| a1 / total)
}

fn violated(pe: &Option<Rational>, pf: &Option<Rational>) -> bool {
    match (pe, pf) {
        (_, None) => false,
        (None, Some(_)) => true,
        (Some(a), Some(b)) => a < b,
    }
}

fn shape(i: usize) -> (usize, usize) {
    (2 + i % 3, 2 + (i / 3) % 4)
}

fn claim1_equivalence() -> Outcome {
    let mut rng = rng(SEED);
    let (mut failures, mut counts) = (Vec::new(), [0usize; 3]);
    let mut reports = Vec::new();
    for i in 0..50 {
        let (k, n) = shape(i);
        let exp = experiment(&mut rng, k, n);
        let (e, f) = (nonempty_subset(&mut rng, n), nonempty_subset(&mut rng, n));
        let (h1, h2) = disjoint_pair(&mut rng, k);
        let verdict = bayesian_supports(&exp, &e, &exp, &f, &h1, &h2).unwrap();
        let priors = sample_priors(exp.theta_labels(), PRIORS, SEED + i as u64);
        match &verdict {
            SupportVerdict::NoSupport { witness } => {
                counts[0] += 1;
                let (t1, t2) = match witness {
                    Some(SupportWitness::NullLikelihood { theta }) => (*theta, *theta),
                    Some(SupportWitness::CrossProduct { theta1, theta2 }) => (*theta1, *theta2),
                    None => {
                        failures.push(format!("instance {i}: no witness"));
                        continue;
                    }
                };
                match counterexample_prior_for(&exp, &e, &exp, &f, &h1, &h2, t1, t2) {
                    Ok(q) => {
                        if !violated(
                            &restricted(&exp, &q, &e, &h1, &h2),
                            &restricted(&exp, &q, &f, &h1, &h2),
                        ) {
                            failures.push(format!(
                                "instance {i}: counterexample prior does not violate"
                            ));
                        }
                        reports.push(value(&q.to_doc()));
                    }
                    Err(err) => failures.push(format!("instance {i}: {err}")),
                }
            }
            SupportVerdict::WeakSupport | SupportVerdict::StrictSupport => {
                let strict = verdict == SupportVerdict::StrictSupport;
                counts[if strict { 2 } else { 1 }] += 1;
                for (j, q) in priors.iter().enumerate() {
                    let (pe, pf) = (
                        restricted(&exp, q, &e, &h1, &h2),
                        restricted(&exp, q, &f, &h1, &h2),
                    );
                    if violated(&pe, &pf) {
                        failures.push(format!("instance {i}: prior {j} violates support"));
                    }
                    let both = !q.mass_of(&h1).is_zero() && !q.mass_of(&h2).is_zero();
                    if strict
                        && both
                        && pf.is_some()
                        && pe.as_ref().zip(pf.as_ref()).is_none_or(|(a, b)| a <= b)
                    {
                        failures.push(format!("instance {i}: prior {j} gives no strict gain"));
                    }
                }
            }
        }
        reports.push(value(&verdict));
    }
    let detail = format!(
        "50 experiments: {} no-support (all with verified counterexample priors), {} weak, {} strict; failures: {}",
        counts[0],
        counts[1],
        counts[2],
        if failures.is_empty() { "none".into() } else { failures.join("; ") }
    );
    Outcome::new(failures.is_empty(), detail, reports)
}

fn claim5_equivalence() -> Outcome {
    let mut rng = rng(SEED + 1);
    let mut failures = Vec::new();
    let (mut proportional, mut instances) = (0, 0);
    let mut reports = Vec::new();
    for i in 0..50 {
        let (k, n) = shape(i);
        let exp = split_first(&experiment(&mut rng, k, n));
        let m = exp.n_omega();
        let pairs = [
            (exp.event(&["s1"]).unwrap(), exp.event(&["s2"]).unwrap()),
            (nonempty_subset(&mut rng, m), nonempty_subset(&mut rng, m)),
        ];
        for (e, f) in pairs {
            instances += 1;
            let lp = lp_equivalent(&exp, &e, &exp, &f).unwrap().is_some();
            proportional += lp as usize;
            let r = claim5_equiv_check(&exp, &e, &f, PRIORS, SEED + i as u64).unwrap();
            if !(r.is_consistent()
                && r.posterior_equivalent == Some(lp)
                && r.favoring_equivalent == Some(lp))
            {
                failures.push(format!(
                    "instance {i}: lp={lp} report={:?}/{:?}",
                    r.posterior_equivalent, r.favoring_equivalent
                ));
            }
            reports.push(value(&r));
        }
    }
    let detail = format!(
        "{instances} event pairs ({proportional} proportional), all 3^|Θ| hypothesis pairs, {PRIORS} priors each; failures: {}",
        if failures.is_empty() { "none".into() } else { failures.join("; ") }
    );
    Outcome::new(failures.is_empty(), detail, reports)
}

const SMALL_SHAPES: [(usize, usize); 7] = [(1, 2), (1, 3), (1, 4), (2, 1), (2, 2), (3, 1), (4, 1)];

fn axiom_suite() -> Outcome {
    let mut rng = rng(SEED + 2);
    let mut failures = Vec::new();
    let mut reports = Vec::new();
    let mut orderings = 0;
    for (k, n) in SMALL_SHAPES {
        for _ in 0..3 {
            let exp = experiment(&mut rng, k, n);
            let prior = positive_prior(&mut rng, exp.theta_labels());
            let ord = induce_ordering(&exp, &prior).unwrap();
            let axioms = check_axioms(&ord, Mode::Exhaustive).unwrap();
            let axiom0 = check_axiom0(&ord, &induce_likelihood(&exp)).unwrap();
            orderings += 1;
            if k * n == 4 && axioms.get("5").map(|r| r.examined) != Some(36u64.pow(4)) {
                failures.push(format!("{k}x{n}: Axiom 5 not exhaustive"));
            }
            for r in axioms.failures().chain(axiom0.failures()) {
                failures.push(format!("{k}x{n}: axiom {} fails", r.name()));
            }
            reports.push(value(&axioms));
        }
    }
    let exp = experiment(&mut rng, 2, 2);
    let ord = induce_ordering(&exp, &Prior::uniform(exp.theta_labels())).unwrap();
    let full = ord.space().full();
    let bad = ord
        .with_swapped_values(
            Atom::new(DeltaEvent(0b0001), full),
            Atom::new(DeltaEvent(0b0011), full),
        )
        .unwrap();
    let corrupt = check_axioms(&bad, Mode::Exhaustive).unwrap();
    let caught: Vec<String> = corrupt
        .results
        .iter()
        .filter(|r| r.status == Status::Fail && r.witness.is_some())
        .map(|r| r.name().to_string())
        .collect();
    if caught.is_empty() {
        failures.push("corrupted ordering passes".into());
    }
    reports.push(value(&corrupt));
    let detail = format!(
        "{orderings} induced orderings (|Δ| ≤ 4, positive priors) pass Axioms 0-6b, {} Axiom-5 tuples at |Δ|=4; \
         corrupted ordering fails axioms {:?} with witnesses; failures: {}",
        36u64.pow(4),
        caught,
        if failures.is_empty() { "none".into() } else { failures.join("; ") }
    );
    Outcome::new(failures.is_empty(), detail, reports)
}

fn lemma_suite_check() -> Outcome {
    let mut rng = rng(SEED + 3);
    let mut failures = Vec::new();
    let mut reports = Vec::new();
    let mut properties = 0;
    for i in 0..50 {
        let (k, n) = SMALL_SHAPES[i % SMALL_SHAPES.len()];
        let exp = experiment(&mut rng, k, n);
        let prior = random_prior(&mut rng, exp.theta_labels());
        let ord = induce_ordering(&exp, &prior).unwrap();
        let report = lemma_suite(&ord).unwrap();
        properties = report.results.len();
        for r in report.failures() {
            failures.push(format!("ordering {i}: lemma {} fails", r.name()));
        }
        reports.push(value(&report));
    }
    let detail = format!(
        "50 induced orderings (|Δ| ≤ 4) × {properties} lemmas, exhaustive; failures: {}",
        if failures.is_empty() {
            "none".into()
        } else {
            failures.join("; ")
        }
    );
    Outcome::new(failures.is_empty(), detail, reports)
}

fn theorem1_equivalence() -> Outcome {
    let mut rng = rng(SEED + 4);
    let mut failures = Vec::new();
    let mut reports = Vec::new();
    let mut verdicts = [0usize; 3];
    for i in 0..50 {
        let (k, n) = shape(i);
        let exp = experiment(&mut rng, k, n);
        let e = nonempty_subset(&mut rng, n);
        let (h1, h2) = disjoint_pair(&mut rng, k);
        let cond = theorem1_conditions(&induce_likelihood(&exp), &e, &h1, &h2).unwrap();
        verdicts[cond.verdict as usize] += 1;
        let sample = favoring_sample_check(&exp, &e, &h1, &h2, PRIORS, SEED + i as u64).unwrap();
        let doc = value(&sample);
        if sample.conclusion != Conclusion::Consistent {
            failures.push(format!(
                "instance {i}: {:?} under verdict {:?}",
                sample.conclusion, cond.verdict
            ));
        }
        if doc["restriction"] != RESTRICTION {
            failures.push(format!("instance {i}: restriction badge missing"));
        }
        reports.push(json!({ "conditions": value(&cond), "sample": doc }));
    }
    let detail = format!(
        "50 experiments × {PRIORS} priors: verdicts none/weak/strict = {:?}, every report marked {RESTRICTION:?}; failures: {}",
        verdicts,
        if failures.is_empty() { "none".into() } else { failures.join("; ") }
    );
    Outcome::new(failures.is_empty(), detail, reports)
}

fn urn_witnesses() -> Outcome {
    let exp = urn();
    let ql = induce_likelihood(&exp);
    let (e, f) = (
        draws(&exp, Some("blue"), None),
        draws(&exp, Some("white"), None),
    );
    let w = WitnessFamily::new(
        &exp,
        vec![
            draws(&exp, None, Some("cyan")),
            draws(&exp, None, Some("cobalt")),
        ],
    )
    .unwrap();
    let witness = theorem2_witness_check(&ql, &e, &f, &w).unwrap();
    let sample = qlp_equivalence_sample_check(&exp, &e, &f, &w, PRIORS, SEED).unwrap();
    let (ce, cf) = (
        exp.event(&["blue-white"]).unwrap(),
        exp.event(&["white-blue"]).unwrap(),
    );
    let sure = WitnessFamily::sure(&exp);
    let corollary = corollary1_check(&ql, &ce, &cf).unwrap();
    let sure_witness = theorem2_witness_check(&ql, &ce, &cf, &sure).unwrap();
    let sure_sample = qlp_equivalence_sample_check(&exp, &ce, &cf, &sure, PRIORS, SEED).unwrap();
    let pass = witness.holds
        && sample.is_consistent()
        && sample.priors_examined >= PRIORS
        && corollary
        && sure_witness.holds
        && sure_sample.is_consistent();
    let detail = format!(
        "witnesses (second draw cyan / cobalt): {}; sampled equivalence over {} priors: {:?}; \
         Ω witnesses for blue-white vs white-blue: premise {}, conditions {}, sampled {:?}",
        witness.holds,
        sample.priors_examined,
        sample.conclusion,
        corollary,
        sure_witness.holds,
        sure_sample.conclusion
    );
    Outcome::new(
        pass,
        detail,
        vec![value(&witness), value(&sample), value(&sure_sample)],
    )
}

fn identical_columns(e: &Experiment, f: &Experiment) -> bool {
    shared_outcomes(e, f).iter().all(|w| {
        let (i, j) = (e.omega_index(w).unwrap(), f.omega_index(w).unwrap());
        (0..e.n_theta()).all(|t| e.likelihood(t, i) == f.likelihood(t, j))
    })
}

fn stopping_irrelevance() -> Outcome {
    let small = BernoulliDesign::new(
        vec!["a".into(), "b".into(), "c".into()],
        vec![ratio(1, 10), ratio(3, 50), ratio(1, 2)],
    )
    .unwrap();
    let se = build_truncated_experiment(&small, &StoppingRule::fixed_n(6)).unwrap();
    let sf = build_truncated_experiment(&small, &StoppingRule::inverse_sampling(2, 6)).unwrap();
    let (a, b) = example3_rules();
    let (le, lf) = lumped_pair(&example3_design(), &a, &b).unwrap();
    let mut pass = true;
    let mut parts = Vec::new();
    let mut reports = Vec::new();
    for (name, e, f) in [("n=6/r=2", &se, &sf), ("100 patients", &le, &lf)] {
        let identical = identical_columns(e, f);
        let irr = irrelevance_check(e, f).unwrap();
        let unit = irr
            .outcomes
            .iter()
            .all(|o| o.lp_constant.as_ref().is_some_and(One::is_one));
        let d15 = definition15_agreement(e, f, PRIORS, SEED).unwrap();
        let ok = identical
            && irr.irrelevant
            && unit
            && d15.formulations_agree
            && d15.across_experiments
            && d15.within_mixture
            && d15.priors_examined >= PRIORS;
        pass &= ok;
        parts.push(format!(
            "{name}: {} shared outcomes, identical {identical}, c=1 {unit}, irrelevant {}, formulations agree over {} priors {}",
            irr.shared, irr.irrelevant, d15.priors_examined, d15.formulations_agree
        ));
        reports.push(value(&irr));
        reports.push(value(&d15));
    }
    Outcome::new(pass, parts.join("; "), reports)
}

fn assumption1() -> Outcome {
    let (e1, f1) = example1();
    let mut exps = vec![e1, f1, urn()];
    let mut rng = rng(SEED + 5);
    for i in 0..12 {
        let (k, n) = (1 + i % 4, 1 + (i / 4) % 5);
        exps.push(experiment(&mut rng, k, n));
    }
    let mut probes = 0;
    let mut failures = Vec::new();
    let mut reports = Vec::new();
    for (i, exp) in exps.iter().enumerate() {
        let k = exp.n_theta();
        for m in 1..1u64 << k {
            let h = Subset::from_mask(k, m);
            let (_, r) = assumption1_probe(exp, &h).unwrap();
            probes += 1;
            if !r.holds {
                failures.push(format!("experiment {i}, H mask {m:b}"));
            }
            reports.push(value(&r));
        }
    }
    let detail = format!(
        "{} experiments (|Θ| ≤ 4), {probes} nonempty hypotheses; failures: {}",
        exps.len(),
        if failures.is_empty() {
            "none".into()
        } else {
            failures.join("; ")
        }
    );
    Outcome::new(failures.is_empty(), detail, reports)
}

type Criterion = (u32, &'static str, fn() -> Outcome);

const CRITERIA: [Criterion; 11] = [
    (1, "opening example golden values", example1_golden),
    (2, "uniform-on-three-points family", fraser_family),
    (3, "stopping-rule significance tails", example3_significance),
    (4, "support verdicts against posteriors", claim1_equivalence),
    (
        5,
        "posterior, LP and favoring equivalence",
        claim5_equivalence,
    ),
    (6, "axioms on induced orderings", axiom_suite),
    (7, "lemmas on induced orderings", lemma_suite_check),
    (
        8,
        "favoring conditions against sampled favoring",
        theorem1_equivalence,
    ),
    (9, "urn witnesses and equal-likelihood case", urn_witnesses),
    (10, "stopping-rule irrelevance", stopping_irrelevance),
    (11, "almost-sure hypotheses probe", assumption1),
];

fn suite_json(outcomes: &[Outcome]) -> String {
    let all: Vec<&Vec<Value>> = outcomes.iter().map(|o| &o.reports).collect();
    serde_json::to_string(&all).unwrap()
}

fn cli_json(args: &[&str]) -> String {
    let mut full = vec!["likelihood-lab", "--format", "json", "--seed", "7"];
    full.extend_from_slice(args);
    let out = likelihood_lab::cli::run_args(full);
    format!("{}|{}", out.code, out.stdout)
}

fn determinism(first: &[Outcome]) -> Outcome {
    let second: Vec<Outcome> = CRITERIA.iter().map(|(_, _, f)| f()).collect();
    let same_suite = suite_json(first) == suite_json(&second);
    let data = |name: &str| format!("{}/../../data/{name}", env!("CARGO_MANIFEST_DIR"));
    let commands: Vec<Vec<String>> = vec![
        vec!["stopping-demo".into(), data("small_stopping.json")],
        vec![
            "theorem2-verify".into(),
            data("urn.json"),
            "--events".into(),
            "blue-*".into(),
            "white-*".into(),
            "--witness".into(),
            data("urn_witness.json"),
        ],
        vec![
            "theorem1-verify".into(),
            data("example1.json"),
            "--event".into(),
            "A".into(),
            "--h1".into(),
            "t1".into(),
            "--h2".into(),
            "t2".into(),
        ],
    ];
    let same_cli = commands.iter().all(|c| {
        let args: Vec<&str> = c.iter().map(String::as_str).collect();
        cli_json(&args) == cli_json(&args)
    });
    let bytes = suite_json(first).len();
    Outcome::new(
        same_suite && same_cli,
        format!(
            "second run of criteria 1-11 byte-identical ({bytes} bytes of JSON): {same_suite}; CLI reports identical: {same_cli}"
        ),
        vec![],
    )
}

fn main() {
    let mut unexpected = 0;
    let mut outcomes = Vec::new();
    let mut report = |id: u32, name: &str, o: &Outcome, secs: f64| {
        let expected_fail = EXPECTED_FAILURES.contains(&id);
        let verdict = match (o.pass, expected_fail) {
            (true, false) => "PASS",
            (false, true) => "FAIL (expected: unattainable as stated, see README)",
            (true, true) => "PASS (unexpected: listed as unattainable)",
            (false, false) => "FAIL",
        };
        if o.pass == expected_fail {
            unexpected += 1;
        }
        println!(
            "criterion {id:>2} [{name}]: {verdict} ({secs:.1}s) {}",
            o.detail
        );
    };
    for (id, name, f) in CRITERIA {
        let start = Instant::now();
        let o = f();
        report(id, name, &o, start.elapsed().as_secs_f64());
        outcomes.push(o);
    }
    let start = Instant::now();
    let o = determinism(&outcomes);
    report(
        12,
        "deterministic reports",
        &o,
        start.elapsed().as_secs_f64(),
    );
    if unexpected > 0 {
        println!("acceptance: {unexpected} unexpected result(s)");
        std::process::exit(1);
    }
    println!("acceptance: all results as expected");
}
