//! Derived lemmas of the qualitative axioms as executable properties.
//!
//! Partition-indexed lemmas use three block slots `B1..B3`; empty blocks are
//! dropped, so every partition of `G` into one to three blocks is covered.
//! Per-block events such as `C_i` only matter inside `B_i` (Axiom 4), so a
//! single slot `C` carries `C_i = C ∩ B_i`.

use super::axioms::{check_mode, AxiomReport, EXHAUSTIVE_CAP};
use super::enumerate::{eq, le, lt, run, Kind, Mode, Property, Scheme, Tuple, Verdict};
use super::ordering::QualOrdering;
use super::space::DeltaEvent;
use crate::error::Result;

const EMPTY: DeltaEvent = DeltaEvent::EMPTY;

type Step = std::result::Result<(), Verdict>;

fn bit(s: usize) -> u8 {
    1 << s
}

/// Collapses "no applicable part" into `Vacuous`.
struct Parts(bool);

impl Parts {
    fn new() -> Self {
        Parts(false)
    }

    fn check(&mut self, holds: bool, part: &'static str) -> Step {
        self.0 = true;
        if holds {
            Ok(())
        } else {
            Err(Verdict::Violated(part))
        }
    }

    fn done(self) -> Verdict {
        if self.0 {
            Verdict::Held
        } else {
            Verdict::Vacuous
        }
    }
}

fn verdict(f: impl FnOnce(&mut Parts) -> Step) -> Verdict {
    let mut p = Parts::new();
    match f(&mut p) {
        Ok(()) => p.done(),
        Err(v) => v,
    }
}

fn lemma1(o: &QualOrdering, t: &Tuple) -> Verdict {
    let (a, b) = (t[0], t[1]);
    let full = o.space().full();
    verdict(|p| {
        if !o.is_null(b) {
            p.check(le(o.cmp(EMPTY, full, a, b)), "above-empty")?;
        }
        Ok(())
    })
}

fn lemma2(o: &QualOrdering, t: &Tuple) -> Verdict {
    let (a, b) = (t[0], t[1]);
    verdict(|p| {
        if !o.is_null(a) && !o.is_null(b) {
            p.check(eq(o.cmp(EMPTY, a, EMPTY, b)), "empty-constant")?;
        }
        Ok(())
    })
}

fn lemma3(o: &QualOrdering, t: &Tuple) -> Verdict {
    let (a, b, c) = (t[0], t[1], t[2]);
    verdict(|p| {
        if !o.is_null(c) {
            p.check(le(o.cmp(b, c, a, c)), "monotone")?;
        }
        Ok(())
    })
}

fn lemma4(o: &QualOrdering, t: &Tuple) -> Verdict {
    let (a, b) = (t[0], t[1]);
    let sp = o.space();
    verdict(|p| {
        if a.is_empty() {
            p.check(o.is_null(a), "empty-is-null")?;
        }
        if o.is_null(a) {
            p.check(!o.is_null(sp.complement(a)), "complement-not-null")?;
            if b.is_subset(a) {
                p.check(o.is_null(b), "downward-closed")?;
            }
            if o.is_null(b) {
                p.check(o.is_null(a.union(b)), "union-closed")?;
            }
        }
        Ok(())
    })
}

fn lemma5(o: &QualOrdering, t: &Tuple) -> Verdict {
    let (a, b) = (t[0], t[1]);
    verdict(|p| {
        if o.almost_sure(a) {
            p.check(!o.is_null(a), "sure-not-null")?;
            if !o.is_null(b) {
                p.check(!o.is_null(a.inter(b)), "sure-meets-non-null")?;
            }
        }
        Ok(())
    })
}

fn lemma6(o: &QualOrdering, t: &Tuple) -> Verdict {
    let (a, b, c) = (t[0], t[1], t[2]);
    let full = o.space().full();
    verdict(|p| {
        if o.is_null(b) {
            return Ok(());
        }
        let null = o.is_null(a);
        let sure = o.almost_sure(a);
        if null {
            p.check(eq(o.cmp(a, b, EMPTY, full)), "null-equals-empty")?;
            if !o.is_null(c) {
                p.check(eq(o.cmp(a, b, EMPTY, c)), "null-equals-empty-anywhere")?;
            }
            p.check(eq(o.cmp(c, b, c.union(a), b)), "null-union-left")?;
            p.check(eq(o.cmp(c, b, c, b.union(a))), "null-union-right")?;
        }
        if a.is_subset(b) && le(o.cmp(a, b, EMPTY, full)) {
            p.check(null, "below-empty-is-null")?;
        }
        if sure {
            p.check(eq(o.cmp(a, a, a, b)), "sure-self")?;
            p.check(eq(o.cmp(c, b, a.inter(c), b)), "sure-intersect-left")?;
            p.check(eq(o.cmp(c, b, c, b.inter(a))), "sure-intersect-right")?;
        }
        Ok(())
    })
}

fn lemma7(o: &QualOrdering, t: &Tuple) -> Verdict {
    let (x, w, y) = (t[0], t[1], t[2]);
    let full = o.space().full();
    verdict(|p| {
        if !o.is_null(y) {
            let cond = le(o.cmp(x, y, w, y));
            let joint = le(o.cmp(x.inter(y), full, w.inter(y), full));
            p.check(cond == joint, "conditional-iff-joint")?;
        }
        Ok(())
    })
}

fn lemma8(o: &QualOrdering, t: &Tuple) -> Verdict {
    let (a, b, b2, c) = (t[0], t[1], t[2], t[3]);
    verdict(|p| {
        if o.is_null(b) || o.is_null(b2) {
            return Ok(());
        }
        let pre = o.cmp(c, b2, b, a);
        if le(pre) {
            let concl = o.cmp(c, b, b2, a);
            p.check(le(concl), "exchange")?;
            if lt(pre) {
                p.check(lt(concl), "exchange-strict")?;
            }
        }
        Ok(())
    })
}

const B1: usize = 0;
const BLOCKS: usize = 3;
const PA: usize = 3;
const PC: usize = 4;
const PARTITION_SLOTS: &[&str] = &["B1", "B2", "B3", "A", "C"];

fn blocks(t: &Tuple) -> Vec<DeltaEvent> {
    t[B1..B1 + BLOCKS]
        .iter()
        .copied()
        .filter(|b| !b.is_empty())
        .collect()
}

fn union(events: impl Iterator<Item = DeltaEvent>) -> DeltaEvent {
    events.fold(EMPTY, DeltaEvent::union)
}

fn bayes_ltp_helper(o: &QualOrdering, t: &Tuple) -> Verdict {
    let bs = blocks(t);
    let (a, c) = (t[PA], t[PC]);
    verdict(|p| {
        if bs.is_empty() {
            return Ok(());
        }
        let premise = bs
            .iter()
            .all(|&b| !o.is_null(b) && eq(o.cmp(a.inter(b), b, c.inter(b), b)));
        if premise {
            let g = union(bs.iter().copied());
            p.check(eq(o.cmp(a, g, c, g)), "block-sums-agree")?;
        }
        Ok(())
    })
}

fn bayes_ltp(o: &QualOrdering, t: &Tuple) -> Verdict {
    let bs = blocks(t);
    let (a, c) = (t[PA], t[PC]);
    let g = union(bs.iter().copied());
    let ag = a.inter(g);
    verdict(|p| {
        if bs.is_empty() || o.is_null(ag) {
            return Ok(());
        }
        let premise = bs
            .iter()
            .all(|&b| !o.is_null(b) && eq(o.cmp(a, b, c.inter(b), b)));
        if premise {
            for &b in &bs {
                p.check(eq(o.cmp(b, ag, b.inter(c), c)), "block-posterior")?;
            }
        }
        Ok(())
    })
}

fn lp_posterior_equivalence(o: &QualOrdering, t: &Tuple) -> Verdict {
    let bs = blocks(t);
    let (a, c) = (t[PA], t[PC]);
    let g = union(bs.iter().copied());
    verdict(|p| {
        if bs.is_empty() || bs.iter().any(|&b| o.is_null(a.inter(b))) {
            return Ok(());
        }
        let independent = bs
            .iter()
            .all(|&b| o.cond_independent(a, c.inter(b), b) == Ok(true));
        let constant = bs
            .iter()
            .all(|&b| eq(o.cmp(c.inter(b), b, c.inter(bs[0]), bs[0])));
        if independent && constant {
            for &b in &bs {
                p.check(
                    eq(o.cmp(c, a.inter(g), c.inter(b), b)),
                    "posterior-constant",
                )?;
            }
        }
        Ok(())
    })
}

fn zero_conditional(o: &QualOrdering, t: &Tuple) -> Verdict {
    let (a, b, c) = (t[0], t[1], t[2]);
    let full = o.space().full();
    verdict(|p| {
        if o.is_null(b) || o.is_null(c) {
            return Ok(());
        }
        let cond_zero = eq(o.cmp(a, b, EMPTY, full));
        let ab = a.inter(b);
        p.check(
            !cond_zero || eq(o.cmp(ab, c, EMPTY, full)),
            "conditional-to-joint",
        )?;
        // The converse quantifies over every non-null C; it is checked once,
        // at the instance C = Δ.
        if c == full && joint_zero_everywhere(o, ab) {
            p.check(cond_zero, "joint-to-conditional")?;
        }
        Ok(())
    })
}

/// `ab|C ∼ ∅|Δ` for all non-null `C`. Beyond 16 points only `C = Δ` is
/// consulted.
fn joint_zero_everywhere(o: &QualOrdering, ab: DeltaEvent) -> bool {
    let full = o.space().full();
    let holds = |c: DeltaEvent| o.is_null(c) || eq(o.cmp(ab, c, EMPTY, full));
    if o.space().size() > 16 {
        return holds(full);
    }
    (0..=full.0).all(|m| holds(DeltaEvent(m)))
}

const PX: usize = 0;
const PW: usize = 1;
const PY: usize = 2;
const PY2: usize = 3;
const PZ: usize = 4;
const PZ2: usize = 5;

fn partition_on_right(o: &QualOrdering, t: &Tuple) -> Verdict {
    let (x, w, y, y2, z, z2) = (t[PX], t[PW], t[PY], t[PY2], t[PZ], t[PZ2]);
    let full = o.space().full();
    verdict(|p| {
        if [y, y2, z, z2].iter().any(|&e| o.is_null(e)) {
            return Ok(());
        }
        let premise =
            eq(o.cmp(x, y, w, z)) && eq(o.cmp(x, y2, EMPTY, full)) && eq(o.cmp(w, z2, EMPTY, full));
        if !premise {
            return Ok(());
        }
        let (yy, zz) = (y.union(y2), z.union(z2));
        let target = le(o.cmp(x, yy, w, zz));
        let weights = le(o.cmp(y, yy, z, zz));
        if weights {
            p.check(target, "weights-to-target")?;
        }
        // When X|Y ∼ ∅ the target holds regardless of the weights; the
        // forward direction needs X ∩ Y ∉ N.
        if target && !o.is_null(x.inter(y)) {
            p.check(weights, "target-to-weights")?;
        }
        Ok(())
    })
}

fn zero_prob_chain(o: &QualOrdering, t: &Tuple) -> Verdict {
    let (x, y, z) = (t[0], t[1], t[2]);
    verdict(|p| {
        let yz = y.inter(z);
        if o.is_null(z) || o.is_null(yz) || !le(o.cmp(x, z, EMPTY, z)) {
            return Ok(());
        }
        p.check(eq(o.cmp(x, yz, EMPTY, yz)), "zero-persists")?;
        Ok(())
    })
}

const CX1: usize = 0;
const CX2: usize = 1;
const CY: usize = 2;
const CG: usize = 3;
const CZ: usize = 4;

fn constant_on_partition(o: &QualOrdering, t: &Tuple) -> Verdict {
    let (x1, x2, y, g, z) = (t[CX1], t[CX2], t[CY], t[CG], t[CZ]);
    let full = o.space().full();
    verdict(|p| {
        let (gz, g_z) = (g.inter(z), g.minus(z));
        let (ygz, yg_z) = (y.inter(gz), y.inter(g_z));
        if o.is_null(ygz) || o.is_null(yg_z) {
            return Ok(());
        }
        let premise = eq(o.cmp(x1, ygz, x2, yg_z))
            && eq(o.cmp(x1, g_z, EMPTY, full))
            && eq(o.cmp(x2, gz, EMPTY, full));
        if premise {
            let x = x1.union(x2);
            p.check(eq(o.cmp(x, y.inter(g), x1, ygz)), "constant-on-blocks")?;
        }
        Ok(())
    })
}

fn independence_symmetric(o: &QualOrdering, t: &Tuple) -> Verdict {
    let (a, b, c) = (t[0], t[1], t[2]);
    verdict(|p| {
        if o.is_null(c) {
            return Ok(());
        }
        p.check(
            o.cond_independent(a, b, c) == o.cond_independent(b, a, c),
            "symmetric",
        )?;
        Ok(())
    })
}

fn properties() -> Vec<Property> {
    let chain3 = [0, bit(0), bit(0) | bit(1)];
    let exchange = [
        0,
        bit(0),
        bit(0) | bit(1),
        bit(0) | bit(2),
        bit(0) | bit(1) | bit(2),
        bit(0) | bit(1) | bit(2) | bit(3),
    ];
    let inner = [0, bit(PA), bit(PC), bit(PA) | bit(PC)];
    let helper: Vec<u8> = std::iter::once(0)
        .chain((0..BLOCKS).flat_map(|i| inner.iter().map(move |o| bit(B1 + i) | o)))
        .collect();
    let ltp: Vec<u8> = [0, bit(PA)]
        .into_iter()
        .chain((0..BLOCKS).flat_map(|i| inner.iter().map(move |o| bit(B1 + i) | o)))
        .collect();
    vec![
        Property {
            name: "1",
            scheme: Scheme::free(&["A", "B"]),
            check: lemma1,
        },
        Property {
            name: "2",
            scheme: Scheme::free(&["A", "B"]),
            check: lemma2,
        },
        Property {
            name: "3",
            scheme: Scheme::product(&["A", "B", "C"], &[&chain3, &[0, bit(2)]]),
            check: lemma3,
        },
        Property {
            name: "4",
            scheme: Scheme::free(&["A", "B"]),
            check: lemma4,
        },
        Property {
            name: "5",
            scheme: Scheme::free(&["A", "B"]),
            check: lemma5,
        },
        Property {
            name: "6",
            scheme: Scheme::free(&["A", "B", "C"]),
            check: lemma6,
        },
        Property {
            name: "7",
            scheme: Scheme::free(&["X", "W", "Y"]),
            check: lemma7,
        },
        Property {
            name: "8",
            scheme: Scheme::product(&["A", "B", "B'", "C"], &[&exchange]),
            check: lemma8,
        },
        Property {
            name: "qBayesLTPHelper",
            scheme: Scheme::product(PARTITION_SLOTS, &[&helper]),
            check: bayes_ltp_helper,
        },
        Property {
            name: "qZeroConditionalProbEqualsZeroConjunctiveProb",
            scheme: Scheme::free(&["A", "B", "C"]),
            check: zero_conditional,
        },
        Property {
            name: "qPartitionOnRight",
            scheme: Scheme::product(
                &["X", "W", "Y", "Y'", "Z", "Z'"],
                &[
                    &[0, bit(PX)],
                    &[0, bit(PW)],
                    &[0, bit(PY), bit(PY2)],
                    &[0, bit(PZ), bit(PZ2)],
                ],
            ),
            check: partition_on_right,
        },
        Property {
            name: "qBayesLTP",
            scheme: Scheme::product(PARTITION_SLOTS, &[&ltp]),
            check: bayes_ltp,
        },
        Property {
            name: "qZeroProbChainRule",
            scheme: Scheme::free(&["X", "Y", "Z"]),
            check: zero_prob_chain,
        },
        Property {
            name: "qConditionalProbabilityConstantOnPartition",
            scheme: Scheme::product(
                &["X1", "X2", "Y", "G", "Z"],
                &[
                    &[0, bit(CX1), bit(CX2)],
                    &[0, bit(CY)],
                    &[0, bit(CG)],
                    &[0, bit(CZ)],
                ],
            ),
            check: constant_on_partition,
        },
        Property {
            name: "qLPEntailsPosteriorEquivalence2",
            scheme: Scheme::product(PARTITION_SLOTS, &[&ltp]),
            check: lp_posterior_equivalence,
        },
        Property {
            name: "QConditionalIndependenceIsSymmetric",
            scheme: Scheme::free(&["A", "B", "C"]),
            check: independence_symmetric,
        },
    ]
}

/// Runs every lemma exhaustively. Requires |Δ| ≤ 4.
pub fn lemma_suite(ord: &QualOrdering) -> Result<AxiomReport> {
    lemma_suite_with(ord, Mode::Exhaustive)
}

pub fn lemma_suite_with(ord: &QualOrdering, mode: Mode) -> Result<AxiomReport> {
    let size = ord.space().size();
    check_mode(size, mode, EXHAUSTIVE_CAP)?;
    let results = properties()
        .iter()
        .map(|p| run(ord, p, mode, Kind::Lemma))
        .collect();
    Ok(AxiomReport {
        delta_size: size,
        provenance: ord.provenance(),
        results,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiments::{random_experiment, seeded_rng, Experiment, ExperimentShape, Prior};
    use crate::qualitative::{induce_ordering, Atom, Status};

    fn ordering(prior: &[i64]) -> QualOrdering {
        let exp =
            Experiment::from_table(&["t1", "t2"], &["x", "y"], &[&["1/3", "2/3"], &["0", "1"]])
                .unwrap();
        let total: i64 = prior.iter().sum();
        let p = Prior::new(
            exp.theta_labels().to_vec(),
            prior
                .iter()
                .map(|&m| crate::rational::ratio(m, total))
                .collect(),
        )
        .unwrap();
        induce_ordering(&exp, &p).unwrap()
    }

    #[test]
    fn induced_orderings_pass_every_lemma() {
        for prior in [[1, 1], [1, 0], [0, 1], [2, 7]] {
            let rep = lemma_suite(&ordering(&prior)).unwrap();
            assert!(
                rep.all_pass(),
                "{prior:?}: {:?}",
                rep.failures().collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn random_orderings_pass_every_lemma() {
        let mut rng = seeded_rng(11);
        for shape in [(2, 2), (1, 4), (4, 1), (2, 1), (1, 3)] {
            let exp = random_experiment(
                &mut rng,
                ExperimentShape {
                    n_theta: shape.0,
                    n_omega: shape.1,
                    denominator: 4,
                },
            );
            let prior = Prior::uniform(exp.theta_labels());
            let rep = lemma_suite(&induce_ordering(&exp, &prior).unwrap()).unwrap();
            assert!(
                rep.all_pass(),
                "{shape:?}: {:?}",
                rep.failures().collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn every_lemma_is_applicable_somewhere() {
        let rep = lemma_suite(&ordering(&[1, 1])).unwrap();
        assert_eq!(rep.results.len(), 16);
        for r in &rep.results {
            assert!(r.applicable > 0, "{} never applied", r.name());
        }
        assert_eq!(rep.get("qPartitionOnRight").unwrap().examined, 36u64.pow(4));
        assert_eq!(rep.get("qBayesLTPHelper").unwrap().examined, 13u64.pow(4));
    }

    #[test]
    fn partition_on_right_forward_direction_needs_non_null_numerator() {
        // X = W = ∅ satisfies every hypothesis; the target holds, yet the
        // weights can still be ordered the other way.
        let o = ordering(&[1, 1]);
        let sp = o.space();
        let y = DeltaEvent(1 << sp.bit(0, 1));
        let y2 = sp.complement(y);
        let z = DeltaEvent(1 << sp.bit(0, 0));
        let z2 = sp.complement(z);
        assert!(le(o.cmp(EMPTY, y.union(y2), EMPTY, z.union(z2))));
        assert_eq!(
            o.cmp(y, y.union(y2), z, z.union(z2)),
            Some(std::cmp::Ordering::Greater)
        );
        let mut t = [EMPTY; 8];
        t[PY] = y;
        t[PY2] = y2;
        t[PZ] = z;
        t[PZ2] = z2;
        assert!(!matches!(partition_on_right(&o, &t), Verdict::Violated(_)));
    }

    #[test]
    fn corruption_is_detected() {
        let o = ordering(&[1, 1]);
        let full = o.space().full();
        let bad = o
            .with_swapped_values(
                Atom::new(DeltaEvent(0b0001), full),
                Atom::new(DeltaEvent(0b0011), full),
            )
            .unwrap();
        let rep = lemma_suite(&bad).unwrap();
        let failed: Vec<_> = rep.failures().map(|r| r.name().to_string()).collect();
        assert!(failed.contains(&"3".to_string()), "{failed:?}");
        assert!(rep
            .failures()
            .all(|r| r.status == Status::Fail && r.witness.is_some()));
    }
}
