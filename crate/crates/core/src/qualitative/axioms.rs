use super::enumerate::{
    eq, le, lt, run, Kind, Mode, Property, PropertyResult, Scheme, Status, Tuple, Verdict, Witness,
    WITNESS_CAP,
};
use super::likelihood::QualLikelihood;
use super::ordering::{ProvenanceDoc, QualOrdering};
use super::space::{Atom, DeltaEvent};
use crate::error::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

/// Default |Δ| cap for exhaustive axiom checks.
pub const EXHAUSTIVE_CAP: usize = 4;
/// |Δ| up to which Axiom 0 is checked exhaustively.
pub const AXIOM0_EXHAUSTIVE_CAP: usize = 6;
/// Sample count used by Axiom 0 above its exhaustive cap.
pub const AXIOM0_SAMPLES: u64 = 100_000;

/// Results for a list of axioms or lemmas on one ordering.
#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    pub delta_size: usize,
    pub provenance: ProvenanceDoc,
    pub results: Vec<PropertyResult>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(PropertyResult::passed)
    }

    pub fn get(&self, name: &str) -> Option<&PropertyResult> {
        self.results.iter().find(|r| r.name() == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &PropertyResult> {
        self.results.iter().filter(|r| !r.passed())
    }
}

const A: usize = 0;
const B: usize = 1;
const C: usize = 2;
const A2: usize = 3;
const B2: usize = 4;
const C2: usize = 5;

fn axiom2(o: &QualOrdering, t: &Tuple) -> Verdict {
    let full = o.space().full();
    if t[A] == full && o.is_null(full) {
        return Verdict::Violated("delta-not-null");
    }
    let null = o.is_null(t[A]);
    if null != le(o.cmp(t[A], full, DeltaEvent::EMPTY, full)) {
        return Verdict::Violated("null-iff-below-empty");
    }
    Verdict::Held
}

fn axiom3(o: &QualOrdering, t: &Tuple) -> Verdict {
    let full = o.space().full();
    let mut applied = false;
    if !o.is_null(t[A]) && !o.is_null(t[B]) {
        applied = true;
        if !eq(o.cmp(t[A], t[A], t[B], t[B])) {
            return Verdict::Violated("self-conditionals-equal");
        }
    }
    if !o.is_null(t[B]) && !o.is_null(t[C]) {
        applied = true;
        if !le(o.cmp(t[A], t[B], full, t[C])) {
            return Verdict::Violated("bounded-by-sure");
        }
    }
    if applied {
        Verdict::Held
    } else {
        Verdict::Vacuous
    }
}

fn axiom4(o: &QualOrdering, t: &Tuple) -> Verdict {
    if o.is_null(t[B]) {
        return Verdict::Vacuous;
    }
    if eq(o.cmp(t[A].inter(t[B]), t[B], t[A], t[B])) {
        Verdict::Held
    } else {
        Verdict::Violated("intersection-invariance")
    }
}

fn axiom5(o: &QualOrdering, t: &Tuple) -> Verdict {
    if o.is_null(t[C]) || o.is_null(t[C2]) {
        return Verdict::Vacuous;
    }
    let p1 = o.cmp(t[A], t[C], t[A2], t[C2]);
    let p2 = o.cmp(t[B], t[C], t[B2], t[C2]);
    if !(le(p1) && le(p2)) {
        return Verdict::Vacuous;
    }
    let concl = o.cmp(t[A].union(t[B]), t[C], t[A2].union(t[B2]), t[C2]);
    if !le(concl) {
        return Verdict::Violated("additivity");
    }
    if (lt(p1) || lt(p2)) && !lt(concl) {
        return Verdict::Violated("additivity-strict");
    }
    Verdict::Held
}

fn chain_defined(o: &QualOrdering, t: &Tuple) -> bool {
    [t[A], t[B], t[A2], t[B2]].iter().all(|&e| !o.is_null(e))
}

fn axiom6a(o: &QualOrdering, t: &Tuple) -> Verdict {
    if !chain_defined(o, t) {
        return Verdict::Vacuous;
    }
    let p1 = o.cmp(t[B], t[A], t[C2], t[B2]);
    let p2 = o.cmp(t[C], t[B], t[B2], t[A2]);
    if !(le(p1) && le(p2)) {
        return Verdict::Vacuous;
    }
    let concl = o.cmp(t[C], t[A], t[C2], t[A2]);
    if !le(concl) {
        return Verdict::Violated("cross-product");
    }
    if (lt(p1) || lt(p2)) && !lt(concl) {
        return Verdict::Violated("cross-product-strict");
    }
    Verdict::Held
}

fn axiom6b(o: &QualOrdering, t: &Tuple) -> Verdict {
    if !chain_defined(o, t) {
        return Verdict::Vacuous;
    }
    let p1 = o.cmp(t[B], t[A], t[B2], t[A2]);
    let p2 = o.cmp(t[C], t[B], t[C2], t[B2]);
    if !(le(p1) && le(p2)) {
        return Verdict::Vacuous;
    }
    let concl = o.cmp(t[C], t[A], t[C2], t[A2]);
    if !le(concl) {
        return Verdict::Violated("chain-product");
    }
    if (lt(p1) || lt(p2)) && !o.is_null(t[C]) && !lt(concl) {
        return Verdict::Violated("chain-product-strict");
    }
    Verdict::Held
}

const SIX: &[&str] = &["A", "B", "C", "A'", "B'", "C'"];

fn properties() -> Vec<Property> {
    let bit = |s: usize| 1u8 << s;
    let disjoint = [0, bit(A), bit(B)];
    let disjoint2 = [0, bit(A2), bit(B2)];
    let chain = [0, bit(A), bit(A) | bit(B), bit(A) | bit(B) | bit(C)];
    let chain2 = [0, bit(A2), bit(A2) | bit(B2), bit(A2) | bit(B2) | bit(C2)];
    vec![
        Property {
            name: "2",
            scheme: Scheme::free(&["A"]),
            check: axiom2,
        },
        Property {
            name: "3",
            scheme: Scheme::free(&["A", "B", "C"]),
            check: axiom3,
        },
        Property {
            name: "4",
            scheme: Scheme::free(&["A", "B"]),
            check: axiom4,
        },
        Property {
            name: "5",
            scheme: Scheme::product(SIX, &[&disjoint, &disjoint2, &[0, bit(C)], &[0, bit(C2)]]),
            check: axiom5,
        },
        Property {
            name: "6a",
            scheme: Scheme::product(SIX, &[&chain, &chain2]),
            check: axiom6a,
        },
        Property {
            name: "6b",
            scheme: Scheme::product(SIX, &[&chain, &chain2]),
            check: axiom6b,
        },
    ]
}

pub(crate) fn check_mode(size: usize, mode: Mode, cap: usize) -> Result<()> {
    if mode == Mode::Exhaustive && size > cap {
        return Err(Error::CapExceeded {
            what: "|Δ| for exhaustive checking",
            size,
            cap,
        });
    }
    Ok(())
}

/// Checks Axioms 1–5, 6a and 6b. Exhaustive mode requires |Δ| ≤ 4.
pub fn check_axioms(ord: &QualOrdering, mode: Mode) -> Result<AxiomReport> {
    check_axioms_capped(ord, mode, EXHAUSTIVE_CAP)
}

/// [`check_axioms`] with an explicit exhaustive |Δ| cap.
pub fn check_axioms_capped(ord: &QualOrdering, mode: Mode, cap: usize) -> Result<AxiomReport> {
    let size = ord.space().size();
    check_mode(size, mode, cap)?;
    let mut results = vec![PropertyResult::named(Kind::Axiom, "1", Status::Pass, mode)];
    for p in properties() {
        results.push(run(ord, &p, mode, Kind::Axiom));
    }
    Ok(AxiomReport {
        delta_size: size,
        provenance: ord.provenance(),
        results,
    })
}

/// Axiom 0: on atoms conditioned on `⪯`-non-null slices `{θ}×E`, `⪯` and
/// `⊑` agree. Exhaustive for |Δ| ≤ 6, otherwise sampled with a fixed seed.
pub fn check_axiom0(ord: &QualOrdering, ql: &QualLikelihood) -> Result<AxiomReport> {
    let mode = if ord.space().size() <= AXIOM0_EXHAUSTIVE_CAP {
        Mode::Exhaustive
    } else {
        Mode::Sampled {
            samples: AXIOM0_SAMPLES,
            seed: 0,
        }
    };
    check_axiom0_with(ord, ql, mode)
}

/// Tuple code and the two atoms whose comparisons disagree.
type Mismatch = (u64, Atom, Atom);

pub fn check_axiom0_with(
    ord: &QualOrdering,
    ql: &QualLikelihood,
    mode: Mode,
) -> Result<AxiomReport> {
    let exp = ql.experiment();
    if exp.theta_labels() != ord.space().theta_labels()
        || exp.omega_labels() != ord.space().omega_labels()
    {
        return Err(Error::MismatchedSpace(
            "ordering and likelihood relation live on different Δ".into(),
        ));
    }
    let space = ord.space().clone();
    let size = space.size();
    check_mode(size, mode, AXIOM0_EXHAUSTIVE_CAP)?;
    let n_omega_sets = 1u64 << space.n_omega();
    let slices: Vec<DeltaEvent> = (0..space.n_theta())
        .flat_map(|t| (1..n_omega_sets).map(move |m| (t, m)))
        .map(|(t, m)| DeltaEvent(m << (t * space.n_omega())))
        .filter(|&b| !ord.is_null(b))
        .collect();
    let lefts = 1u64 << size;
    let test =
        |a: Atom, b: Atom| -> Result<bool> { Ok(ord.compare(a, b) == ql.compare_atoms(a, b)?) };

    let (examined, applicable, found) = match mode {
        Mode::Exhaustive => {
            let ns = slices.len() as u64;
            let per_first = lefts * ns;
            let parts: Vec<Result<(u64, Vec<Mismatch>)>> = (0..per_first)
                .into_par_iter()
                .map(|i| {
                    let a = Atom::new(DeltaEvent(i / ns), slices[(i % ns) as usize]);
                    let mut found = Vec::new();
                    let mut n = 0;
                    for j in 0..per_first {
                        let b = Atom::new(DeltaEvent(j / ns), slices[(j % ns) as usize]);
                        n += 1;
                        if !test(a, b)? && found.len() < WITNESS_CAP {
                            found.push((i * per_first + j, a, b));
                        }
                    }
                    Ok((n, found))
                })
                .collect();
            let mut total = 0;
            let mut all = Vec::new();
            for p in parts {
                let (n, f) = p?;
                total += n;
                all.extend(f.into_iter().take(WITNESS_CAP - all.len().min(WITNESS_CAP)));
            }
            all.truncate(WITNESS_CAP);
            (total, total, all)
        }
        Mode::Sampled { samples, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut found = Vec::new();
            let full = space.full().0;
            let pick = |rng: &mut ChaCha8Rng| {
                Atom::new(
                    DeltaEvent(rng.gen::<u64>() & full),
                    slices[rng.gen_range(0..slices.len())],
                )
            };
            for s in 0..samples {
                if slices.is_empty() {
                    break;
                }
                let (a, b) = (pick(&mut rng), pick(&mut rng));
                if !test(a, b)? && found.len() < WITNESS_CAP {
                    found.push((s, a, b));
                }
            }
            (samples, samples, found)
        }
    };
    let witnesses: Vec<Witness> = found
        .into_iter()
        .map(|(code, a, b)| Witness {
            code,
            part: "orderings-agree-on-parameter-slices".into(),
            events: [("A", a.left), ("B", a.cond), ("C", b.left), ("D", b.cond)]
                .into_iter()
                .map(|(k, e)| (k.to_string(), space.doc(e)))
                .collect(),
        })
        .collect();
    let mut res = PropertyResult::named(
        Kind::Axiom,
        "0",
        if witnesses.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        },
        mode,
    );
    res.witness = witnesses.first().cloned();
    res.witnesses = witnesses;
    res.examined = examined;
    res.applicable = applicable;
    Ok(AxiomReport {
        delta_size: size,
        provenance: ord.provenance(),
        results: vec![res],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiments::{Experiment, Prior};
    use crate::qualitative::{induce_likelihood, induce_ordering};

    fn two_by_two() -> Experiment {
        Experiment::from_table(
            &["t1", "t2"],
            &["x", "y"],
            &[&["1/3", "2/3"], &["3/4", "1/4"]],
        )
        .unwrap()
    }

    #[test]
    fn induced_ordering_satisfies_every_axiom() {
        let exp = two_by_two();
        let prior = Prior::new(
            exp.theta_labels().to_vec(),
            vec![crate::rational::ratio(2, 5), crate::rational::ratio(3, 5)],
        )
        .unwrap();
        let ord = induce_ordering(&exp, &prior).unwrap();
        let rep = check_axioms(&ord, Mode::Exhaustive).unwrap();
        assert!(rep.all_pass(), "{:?}", rep.failures().collect::<Vec<_>>());
        let ax5 = rep.get("5").unwrap();
        assert_eq!(ax5.examined, 36u64.pow(4));
        assert!(ax5.applicable > 0);
        assert_eq!(rep.get("6a").unwrap().examined, 16u64.pow(4));
        assert_eq!(rep.get("1").unwrap().status, Status::Pass);
    }

    #[test]
    fn swapped_values_break_additivity() {
        let exp = two_by_two();
        let ord = induce_ordering(&exp, &Prior::uniform(exp.theta_labels())).unwrap();
        let full = ord.space().full();
        let x = Atom::new(DeltaEvent(0b0001), full);
        let xy = Atom::new(DeltaEvent(0b0011), full);
        let bad = ord.with_swapped_values(x, xy).unwrap();
        let rep = check_axioms(&bad, Mode::Exhaustive).unwrap();
        let ax5 = rep.get("5").unwrap();
        assert_eq!(ax5.status, Status::Fail);
        let w = ax5.witness.as_ref().unwrap();
        assert_eq!(w.events.len(), 6);
    }

    #[test]
    fn exhaustive_cap_is_enforced() {
        let exp = Experiment::from_table(
            &["t1"],
            &["a", "b", "c", "d", "e"],
            &[&["1/5", "1/5", "1/5", "1/5", "1/5"]],
        )
        .unwrap();
        let ord = induce_ordering(&exp, &Prior::uniform(exp.theta_labels())).unwrap();
        assert!(matches!(
            check_axioms(&ord, Mode::Exhaustive),
            Err(Error::CapExceeded { .. })
        ));
        let rep = check_axioms(
            &ord,
            Mode::Sampled {
                samples: 20_000,
                seed: 3,
            },
        )
        .unwrap();
        assert!(rep.all_pass());
        assert!(check_axioms_capped(&ord, Mode::Exhaustive, 5).is_ok());
    }

    #[test]
    fn axiom0_agrees_and_detects_foreign_likelihoods() {
        let exp = two_by_two();
        let ord = induce_ordering(&exp, &Prior::uniform(exp.theta_labels())).unwrap();
        assert!(check_axiom0(&ord, &induce_likelihood(&exp))
            .unwrap()
            .all_pass());
        let point = induce_ordering(&exp, &Prior::point_mass(exp.theta_labels(), 0)).unwrap();
        assert!(check_axiom0(&point, &induce_likelihood(&exp))
            .unwrap()
            .all_pass());
        let other = Experiment::from_table(
            &["t1", "t2"],
            &["x", "y"],
            &[&["1/3", "2/3"], &["1/2", "1/2"]],
        )
        .unwrap();
        let foreign = induce_ordering(&other, &Prior::uniform(other.theta_labels())).unwrap();
        let rep = check_axiom0(&foreign, &induce_likelihood(&exp)).unwrap();
        assert_eq!(rep.results[0].status, Status::Fail);
        assert!(rep.results[0].witness.is_some());
    }
}
