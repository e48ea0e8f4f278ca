//! Instantiation of quantified properties over subsets of Δ.
//!
//! A property names up to eight event slots. Each point of Δ independently
//! picks one *option*, a set of slots it belongs to, so an assignment of
//! options to all points determines every slot's event. Side conditions such
//! as disjointness or nesting are built into the option list, never filtered
//! afterwards: disjoint `A, B` offer `{}, {A}, {B}`; a chain `C ⊆ B ⊆ A`
//! offers `{}, {A}, {A,B}, {A,B,C}`.

use super::ordering::QualOrdering;
use super::space::{DeltaEvent, EventDoc};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::cmp::Ordering;
use std::collections::BTreeMap;

/// Witnesses kept per property.
pub const WITNESS_CAP: usize = 16;

const CHUNK: u64 = 1 << 13;

/// How instantiations are chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum Mode {
    Exhaustive,
    Sampled { samples: u64, seed: u64 },
}

pub(crate) type Tuple = [DeltaEvent; 8];

pub(crate) enum Verdict {
    Vacuous,
    Held,
    Violated(&'static str),
}

pub(crate) fn le(c: Option<Ordering>) -> bool {
    matches!(c, Some(Ordering::Less | Ordering::Equal))
}

pub(crate) fn lt(c: Option<Ordering>) -> bool {
    c == Some(Ordering::Less)
}

pub(crate) fn eq(c: Option<Ordering>) -> bool {
    c == Some(Ordering::Equal)
}

pub(crate) struct Scheme {
    pub slots: &'static [&'static str],
    /// Slot-membership bitsets, one per option.
    pub options: Vec<u8>,
}

impl Scheme {
    /// Options are the cartesian product of independent factors, combined
    /// by union.
    pub fn product(slots: &'static [&'static str], factors: &[&[u8]]) -> Scheme {
        let mut options = vec![0u8];
        for f in factors {
            options = options
                .iter()
                .flat_map(|o| f.iter().map(move |x| o | x))
                .collect();
        }
        Scheme { slots, options }
    }

    pub fn free(slots: &'static [&'static str]) -> Scheme {
        let factors: Vec<Vec<u8>> = (0..slots.len()).map(|i| vec![0, 1 << i]).collect();
        let refs: Vec<&[u8]> = factors.iter().map(|f| f.as_slice()).collect();
        Scheme::product(slots, &refs)
    }

    fn tuple(&self, choices: impl Iterator<Item = usize>) -> Tuple {
        let mut t = [DeltaEvent::EMPTY; 8];
        for (point, choice) in choices.enumerate() {
            let o = self.options[choice];
            for (slot, ev) in t.iter_mut().enumerate().take(self.slots.len()) {
                if o >> slot & 1 == 1 {
                    ev.0 |= 1 << point;
                }
            }
        }
        t
    }

    fn decode(&self, mut code: u64, points: usize) -> Tuple {
        let k = self.options.len() as u64;
        self.tuple((0..points).map(|_| {
            let d = code % k;
            code /= k;
            d as usize
        }))
    }

    pub fn count(&self, points: usize) -> Option<u64> {
        (self.options.len() as u64).checked_pow(points as u32)
    }
}

pub(crate) struct Property {
    pub name: &'static str,
    pub scheme: Scheme,
    pub check: fn(&QualOrdering, &Tuple) -> Verdict,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// One concrete violating instantiation.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Witness {
    /// Mixed-radix index of the instantiation; orders witnesses.
    pub code: u64,
    pub part: String,
    pub events: BTreeMap<String, EventDoc>,
}

/// Result of checking one property.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct PropertyResult {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub axiom: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lemma: Option<String>,
    pub status: Status,
    pub witness: Option<Witness>,
    pub witnesses: Vec<Witness>,
    pub examined: u64,
    pub applicable: u64,
    #[serde(flatten)]
    pub mode: Mode,
}

impl PropertyResult {
    pub fn name(&self) -> &str {
        self.axiom
            .as_deref()
            .or(self.lemma.as_deref())
            .unwrap_or("")
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    pub(crate) fn named(kind: Kind, name: &str, status: Status, mode: Mode) -> Self {
        let (axiom, lemma) = match kind {
            Kind::Axiom => (Some(name.to_string()), None),
            Kind::Lemma => (None, Some(name.to_string())),
        };
        PropertyResult {
            axiom,
            lemma,
            status,
            witness: None,
            witnesses: Vec::new(),
            examined: 0,
            applicable: 0,
            mode,
        }
    }
}

#[derive(Clone, Copy)]
pub(crate) enum Kind {
    Axiom,
    Lemma,
}

#[derive(Default)]
struct Tally {
    examined: u64,
    applicable: u64,
    found: Vec<(u64, &'static str, Tuple)>,
}

impl Tally {
    fn record(&mut self, code: u64, verdict: Verdict, t: Tuple) {
        self.examined += 1;
        match verdict {
            Verdict::Vacuous => {}
            Verdict::Held => self.applicable += 1,
            Verdict::Violated(part) => {
                self.applicable += 1;
                if self.found.len() < WITNESS_CAP {
                    self.found.push((code, part, t));
                }
            }
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.examined += other.examined;
        self.applicable += other.applicable;
        let room = WITNESS_CAP - self.found.len();
        self.found.extend(other.found.into_iter().take(room));
        self
    }
}

/// Caller guarantees the exhaustive count fits (checked against caps).
pub(crate) fn run(ord: &QualOrdering, prop: &Property, mode: Mode, kind: Kind) -> PropertyResult {
    let points = ord.space().size();
    let scheme = &prop.scheme;
    let k = scheme.options.len() as u64;
    let tally = match mode {
        Mode::Exhaustive => {
            let total = scheme
                .count(points)
                .expect("exhaustive count checked by caller");
            let chunks = total.div_ceil(CHUNK);
            (0..chunks)
                .into_par_iter()
                .map(|c| {
                    let mut tally = Tally::default();
                    for code in c * CHUNK..((c + 1) * CHUNK).min(total) {
                        let t = scheme.decode(code, points);
                        tally.record(code, (prop.check)(ord, &t), t);
                    }
                    tally
                })
                .collect::<Vec<_>>()
                .into_iter()
                .fold(Tally::default(), Tally::merge)
        }
        Mode::Sampled { samples, seed } => {
            let chunks = samples.div_ceil(CHUNK);
            (0..chunks)
                .into_par_iter()
                .map(|c| {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    rng.set_stream(c);
                    let mut tally = Tally::default();
                    for _ in c * CHUNK..((c + 1) * CHUNK).min(samples) {
                        let choice: Vec<usize> =
                            (0..points).map(|_| rng.gen_range(0..k as usize)).collect();
                        let code = choice
                            .iter()
                            .rev()
                            .fold(0u64, |acc, &d| acc.wrapping_mul(k).wrapping_add(d as u64));
                        let t = scheme.tuple(choice.into_iter());
                        tally.record(code, (prop.check)(ord, &t), t);
                    }
                    tally
                })
                .collect::<Vec<_>>()
                .into_iter()
                .fold(Tally::default(), Tally::merge)
        }
    };
    let witnesses: Vec<Witness> = tally
        .found
        .iter()
        .map(|(code, part, t)| Witness {
            code: *code,
            part: part.to_string(),
            events: scheme
                .slots
                .iter()
                .enumerate()
                .map(|(i, s)| (s.to_string(), ord.space().doc(t[i])))
                .collect(),
        })
        .collect();
    let mut res = PropertyResult::named(
        kind,
        prop.name,
        if witnesses.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        },
        mode,
    );
    res.witness = witnesses.first().cloned();
    res.witnesses = witnesses;
    res.examined = tally.examined;
    res.applicable = tally.applicable;
    res
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disjoint_pairs_are_enumerated_directly() {
        const S: &[&str] = &["A", "B"];
        let s = Scheme::product(S, &[&[0, 1, 2]]);
        assert_eq!(s.count(4), Some(81));
        let mut seen = std::collections::HashSet::new();
        for code in 0..81 {
            let t = s.decode(code, 4);
            assert!(t[0].is_disjoint(t[1]));
            seen.insert((t[0], t[1]));
        }
        assert_eq!(seen.len(), 81);
    }

    #[test]
    fn chains_are_nested() {
        const S: &[&str] = &["A", "B", "C"];
        let s = Scheme::product(S, &[&[0, 0b001, 0b011, 0b111]]);
        for code in 0..256 {
            let t = s.decode(code, 4);
            assert!(t[2].is_subset(t[1]) && t[1].is_subset(t[0]));
        }
        assert_eq!(Scheme::free(S).options.len(), 8);
    }
}
