//! The word problem in an automaton semigroup: equality of words, element
//! enumeration by word length, and zero detection.
//!
//! Two words are equal exactly when they have the same action on every
//! string. Equality is decided by a breadth-first search over pairs of state
//! tuples; enumeration deduplicates words through depth-bounded behavioural
//! fingerprints, falling back to the exact check inside fingerprint classes.

mod refute;

pub use refute::{
    periodic_by_recursion, refute_n0_valuation, NatOrZero, PeriodicError, Refutation, Valuation,
};

use crate::mealy::{MealyAutomaton, StateId, SymbolId, Word};
use std::collections::hash_map::Entry;
use std::collections::HashMap;

/// Outcome of an equality query. When the words differ, `witness` holds the
/// shortest (then lexicographically least) input string separating them.
/// `configurations` counts the pair configurations the search visited; the
/// words agree on all strings exactly when they agree on strings no longer
/// than that number.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EqOutcome {
    pub equal: bool,
    pub witness: Option<Vec<SymbolId>>,
    pub configurations: usize,
}

/// Decide whether two words act identically on every string.
///
/// Configurations are pairs of state tuples, starting from `(u, v)`. Every
/// symbol is fed through both tuples; an output mismatch refutes equality,
/// and exhausting the reachable configurations (at most `|Q|^(|u|+|v|)`)
/// confirms it.
pub fn equal(aut: &MealyAutomaton, u: &Word, v: &Word) -> EqOutcome {
    let start = (u.letters().to_vec(), v.letters().to_vec());
    // arena of (config, parent index, symbol read to get here)
    let mut arena: Vec<(Vec<StateId>, Vec<StateId>, usize, SymbolId)> =
        vec![(start.0.clone(), start.1.clone(), usize::MAX, SymbolId(usize::MAX))];
    let mut seen: HashMap<(Vec<StateId>, Vec<StateId>), ()> = HashMap::new();
    seen.insert(start, ());

    let mut head = 0;
    while head < arena.len() {
        for b in aut.symbol_ids() {
            let (out_u, next_u) = step(aut, &arena[head].0, b);
            let (out_v, next_v) = step(aut, &arena[head].1, b);
            if out_u != out_v {
                let mut witness = vec![b];
                let mut at = head;
                while at != 0 {
                    witness.push(arena[at].3);
                    at = arena[at].2;
                }
                witness.reverse();
                return EqOutcome { equal: false, witness: Some(witness), configurations: arena.len() };
            }
            if let Entry::Vacant(e) = seen.entry((next_u.clone(), next_v.clone())) {
                e.insert(());
                arena.push((next_u, next_v, head, b));
            }
        }
        head += 1;
    }
    EqOutcome { equal: true, witness: None, configurations: arena.len() }
}

/// Feed one symbol through a chain of transducers; returns the final output
/// symbol and the advanced state tuple.
fn step(aut: &MealyAutomaton, tuple: &[StateId], b: SymbolId) -> (SymbolId, Vec<StateId>) {
    let mut c = b;
    let mut next = Vec::with_capacity(tuple.len());
    for &q in tuple {
        next.push(aut.next(q, c));
        c = aut.out(q, c);
    }
    (c, next)
}

/// Group words by the element they represent. Class indices follow first
/// appearance, so feeding known-distinct representatives first yields their
/// indices unchanged.
///
/// Words are pre-partitioned by a depth-bounded fingerprint (the depth
/// starts at 3 and doubles while any fingerprint class holds more than 32
/// words and refinement still makes progress); words sharing a fingerprint
/// are then confirmed or split with [`equal`].
pub fn element_classes(aut: &MealyAutomaton, words: &[Word]) -> Vec<usize> {
    let mut depth = 3;
    let mut fids = fingerprints_at_depth(aut, words, depth);
    loop {
        let mut counts: HashMap<usize, usize> = HashMap::new();
        for &f in &fids {
            *counts.entry(f).or_insert(0) += 1;
        }
        if counts.values().all(|&c| c <= 32) {
            break;
        }
        depth *= 2;
        let refined = fingerprints_at_depth(aut, words, depth);
        if refined == fids {
            break;
        }
        fids = refined;
    }

    // class id -> representative word index, grouped under fingerprints
    let mut class_of = vec![usize::MAX; words.len()];
    let mut next_class = 0;
    let mut reps_by_fid: HashMap<usize, Vec<usize>> = HashMap::new();
    for (i, &fid) in fids.iter().enumerate() {
        let reps = reps_by_fid.entry(fid).or_default();
        match reps.iter().find(|&&r| equal(aut, &words[r], &words[i]).equal) {
            Some(&r) => class_of[i] = class_of[r],
            None => {
                reps.push(i);
                class_of[i] = next_class;
                next_class += 1;
            }
        }
    }
    class_of
}

/// Depth-`d` behavioural fingerprints: two words receive the same value
/// exactly when their actions agree on all strings of length at most `d`
/// (or at most the refinement fixpoint, whichever is reached first).
fn fingerprints_at_depth(aut: &MealyAutomaton, words: &[Word], depth: usize) -> Vec<usize> {
    // Close the set of state tuples under stepping.
    let mut tuples: Vec<Vec<StateId>> = Vec::new();
    let mut index: HashMap<Vec<StateId>, usize> = HashMap::new();
    let enqueue = |t: Vec<StateId>, tuples: &mut Vec<Vec<StateId>>, index: &mut HashMap<Vec<StateId>, usize>| -> usize {
        match index.entry(t) {
            Entry::Occupied(e) => *e.get(),
            Entry::Vacant(e) => {
                tuples.push(e.key().clone());
                let id = tuples.len() - 1;
                e.insert(id);
                id
            }
        }
    };
    let word_tuple: Vec<usize> = words
        .iter()
        .map(|w| enqueue(w.letters().to_vec(), &mut tuples, &mut index))
        .collect();
    let mut head = 0;
    let mut succ: Vec<Vec<(SymbolId, usize)>> = Vec::new();
    while head < tuples.len() {
        let row: Vec<(SymbolId, usize)> = aut
            .symbol_ids()
            .map(|b| {
                let (out, next) = step(aut, &tuples[head].clone(), b);
                (out, enqueue(next, &mut tuples, &mut index))
            })
            .collect();
        succ.push(row);
        head += 1;
    }

    // Level-wise refinement; stop early once the partition stabilizes.
    let mut ids = vec![0usize; tuples.len()];
    for _ in 0..depth {
        let mut interner: HashMap<Vec<(usize, usize, usize)>, usize> = HashMap::new();
        let mut next_ids = Vec::with_capacity(tuples.len());
        for t in 0..tuples.len() {
            let sig: Vec<(usize, usize, usize)> = succ[t]
                .iter()
                .map(|&(out, target)| (out.0, ids[target], 0))
                .collect();
            let fresh = interner.len();
            next_ids.push(*interner.entry(sig).or_insert(fresh));
        }
        if next_ids == ids {
            break;
        }
        ids = next_ids;
    }
    word_tuple.iter().map(|&t| ids[t]).collect()
}

/// Independent equality oracle by plain level-wise refinement to the given
/// depth. Agrees with [`equal`] when `depth` is at least the number of pair
/// configurations reachable from `(u, v)`.
pub fn bruteforce_equal_at_depth(aut: &MealyAutomaton, u: &Word, v: &Word, depth: usize) -> bool {
    let words = [u.clone(), v.clone()];
    let fids = fingerprints_at_depth(aut, &words, depth);
    fids[0] == fids[1]
}

/// The ball of the generated semigroup: distinct elements represented by
/// words of length at most `radius`.
#[derive(Clone, Debug)]
pub struct Ball {
    /// Shortlex-least representative word per element, in shortlex order.
    pub representatives: Vec<Word>,
    /// Number of elements first appearing at each length `1..=radius`.
    pub growth: Vec<usize>,
}

impl Ball {
    pub fn element_count(&self) -> usize {
        self.representatives.len()
    }
}

/// Enumerate the ball of the given radius. New elements at each length are
/// found by extending the previous length's representatives by every
/// generator; the shortlex-least word reaching each element is kept.
pub fn ball(aut: &MealyAutomaton, radius: usize) -> Ball {
    assert!(radius >= 1, "radius must be at least 1");
    let mut representatives: Vec<Word> = Vec::new();
    let mut growth = Vec::with_capacity(radius);
    let mut frontier: Vec<Word> = vec![];

    for len in 1..=radius {
        let candidates: Vec<Word> = if len == 1 {
            aut.state_ids().map(Word::single).collect()
        } else {
            frontier
                .iter()
                .flat_map(|w| aut.state_ids().map(move |q| w.concat(&Word::single(q))))
                .collect()
        };
        // Representatives (known distinct) first, then candidates in
        // shortlex order: a candidate whose class index is new is a new
        // element and, being first in order, its shortlex-least word.
        let mut words = representatives.clone();
        words.extend(candidates.iter().cloned());
        let classes = element_classes(aut, &words);
        let known = representatives.len();
        let mut new_frontier = Vec::new();
        let mut seen_new = known;
        for (i, cand) in candidates.iter().enumerate() {
            let class = classes[known + i];
            if class == seen_new {
                seen_new += 1;
                representatives.push(cand.clone());
                new_frontier.push(cand.clone());
            }
        }
        growth.push(new_frontier.len());
        frontier = new_frontier;
    }
    Ball { representatives, growth }
}

/// True when `w` is a zero of the generated semigroup: absorbing under every
/// generator on both sides.
pub fn is_zero_element(aut: &MealyAutomaton, w: &Word) -> bool {
    aut.state_ids().all(|q| {
        let g = Word::single(q);
        equal(aut, &w.concat(&g), w).equal && equal(aut, &g.concat(w), w).equal
    })
}

/// Verdict of [`restrictions_respect_equality`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RestrictionVerdict {
    Pass,
    /// The two words are not even equal, so the property does not apply.
    PreconditionFailed,
    /// Equal words with unequal sections below this vertex (impossible for
    /// a correct implementation; kept as a harness outcome).
    Violation { prefix: Vec<SymbolId> },
}

/// Property harness: equal words must have equal sections below every
/// vertex, checked exhaustively to the given depth.
pub fn restrictions_respect_equality(
    aut: &MealyAutomaton,
    u: &Word,
    v: &Word,
    depth: usize,
) -> RestrictionVerdict {
    if !equal(aut, u, v).equal {
        return RestrictionVerdict::PreconditionFailed;
    }
    let mut prefixes: Vec<Vec<SymbolId>> = vec![Vec::new()];
    for _ in 0..depth {
        let mut next = Vec::new();
        for p in &prefixes {
            for b in aut.symbol_ids() {
                let mut q = p.clone();
                q.push(b);
                next.push(q);
            }
        }
        for p in &next {
            if !equal(aut, &aut.restriction(u, p), &aut.restriction(v, p)).equal {
                return RestrictionVerdict::Violation { prefix: p.clone() };
            }
        }
        prefixes = next;
    }
    RestrictionVerdict::Pass
}

/// Shortlex-least word equal to `w`, found by enumerating words of length
/// at most `|w|` in shortlex order. Exponential in `|w|`; intended for the
/// small payloads of model elements.
pub fn canonical_word(aut: &MealyAutomaton, w: &Word) -> Word {
    let mut level: Vec<Word> = aut.state_ids().map(Word::single).collect();
    for _ in 1..=w.len() {
        for cand in &level {
            if cand.len() == w.len() && cand >= w {
                break;
            }
            if equal(aut, cand, w).equal {
                return cand.clone();
            }
        }
        level = level
            .iter()
            .flat_map(|p| aut.state_ids().map(move |q| p.concat(&Word::single(q))))
            .collect();
    }
    w.clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::fig_wreath_base;

    fn word(aut: &MealyAutomaton, s: &str) -> Word {
        aut.word_from_names(s.split_whitespace()).unwrap().unwrap()
    }

    #[test]
    fn equality_is_reflexive() {
        let aut = fig_wreath_base();
        for w in ["a", "b", "b a b"] {
            let w = word(&aut, w);
            assert!(equal(&aut, &w, &w).equal);
        }
    }

    #[test]
    fn identity_letter_is_absorbed() {
        let aut = fig_wreath_base();
        assert!(equal(&aut, &word(&aut, "a b"), &word(&aut, "b")).equal);
        assert!(equal(&aut, &word(&aut, "b a"), &word(&aut, "b")).equal);
    }

    #[test]
    fn unequal_words_have_a_minimal_witness() {
        let aut = fig_wreath_base();
        let out = equal(&aut, &word(&aut, "b b"), &word(&aut, "b"));
        assert!(!out.equal);
        // Shortest separating string: "1 1" maps to "0 1" under b but
        // "0 0" under b b; nothing of length 1 separates them.
        assert_eq!(out.witness, Some(aut.symbols_from_names(["1", "1"]).unwrap()));
    }

    #[test]
    fn witness_really_separates() {
        let aut = fig_wreath_base();
        let (u, v) = (word(&aut, "b b"), word(&aut, "b"));
        let w = equal(&aut, &u, &v).witness.unwrap();
        assert_ne!(aut.act(&u, &w), aut.act(&v, &w));
    }

    #[test]
    fn counter_ball_is_the_natural_numbers() {
        let aut = fig_wreath_base();
        let ball = ball(&aut, 3);
        assert_eq!(ball.element_count(), 4);
        assert_eq!(ball.growth, vec![2, 1, 1]);
        let reps: Vec<String> = ball
            .representatives
            .iter()
            .map(|w| {
                w.letters().iter().map(|&q| aut.state_name(q)).collect::<Vec<_>>().join(" ")
            })
            .collect();
        assert_eq!(reps, vec!["a", "b", "b b", "b b b"]);
    }

    #[test]
    fn zero_detection_on_the_counter() {
        let aut = fig_wreath_base();
        assert!(!is_zero_element(&aut, &word(&aut, "b")));
        assert!(!is_zero_element(&aut, &word(&aut, "a")));
    }

    #[test]
    fn restrictions_respect_equal_words() {
        let aut = fig_wreath_base();
        assert_eq!(
            restrictions_respect_equality(&aut, &word(&aut, "a a"), &word(&aut, "a"), 2),
            RestrictionVerdict::Pass
        );
        assert_eq!(
            restrictions_respect_equality(&aut, &word(&aut, "b a"), &word(&aut, "b"), 2),
            RestrictionVerdict::Pass
        );
        assert_eq!(
            restrictions_respect_equality(&aut, &word(&aut, "b b"), &word(&aut, "b"), 2),
            RestrictionVerdict::PreconditionFailed
        );
    }

    #[test]
    fn classes_agree_with_pairwise_equality() {
        let aut = fig_wreath_base();
        let words: Vec<Word> = ["a", "b", "a a", "a b", "b a", "b b", "b b a"]
            .iter()
            .map(|s| word(&aut, s))
            .collect();
        let classes = element_classes(&aut, &words);
        for i in 0..words.len() {
            for j in 0..words.len() {
                assert_eq!(
                    classes[i] == classes[j],
                    equal(&aut, &words[i], &words[j]).equal,
                    "words {i} and {j}"
                );
            }
        }
    }

    #[test]
    fn bruteforce_oracle_agrees_with_equal() {
        let aut = fig_wreath_base();
        let words: Vec<Word> = ["a", "b", "a b", "b b", "b a b", "b b b"]
            .iter()
            .map(|s| word(&aut, s))
            .collect();
        for u in &words {
            for v in &words {
                let out = equal(&aut, u, v);
                assert_eq!(out.equal, bruteforce_equal_at_depth(&aut, u, v, out.configurations));
            }
        }
    }

    #[test]
    fn canonical_word_is_shortlex_least() {
        let aut = fig_wreath_base();
        assert_eq!(canonical_word(&aut, &word(&aut, "a a a")), word(&aut, "a"));
        assert_eq!(canonical_word(&aut, &word(&aut, "b a")), word(&aut, "b"));
        assert_eq!(canonical_word(&aut, &word(&aut, "b b")), word(&aut, "b b"));
    }
}
