//! Mealy automata and their actions on strings.
//!
//! An automaton is a triple `(Q, B, delta)`: a finite state set, a finite
//! alphabet and a total map `delta: Q x B -> Q x B`. Each state acts on
//! strings over `B` as a synchronous transducer, and words over `Q` act by
//! chaining these transductions. The semigroup generated by the state
//! actions is the object everything else in this crate computes with.

mod dot;
mod iso;
mod minimize;
mod periodic;

pub use dot::export_dot;
pub use iso::{isomorphic, Isomorphism};
pub use minimize::{minimize, Minimized};
pub use periodic::{act_eventually_periodic, EpString};

use std::fmt;

/// Index of a state within its automaton.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct StateId(pub usize);

/// Index of a symbol within its alphabet.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SymbolId(pub usize);

/// A deterministic synchronous transducer with named states and symbols.
///
/// `next` and `out` are stored as two separate row-major `|Q| x |B|` tables
/// rather than one table of pairs; the BFS inner loops of the word problem
/// only touch one of them at a time.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MealyAutomaton {
    pub states: Vec<String>,
    pub alphabet: Vec<String>,
    pub next: Vec<StateId>,
    pub out: Vec<SymbolId>,
}

/// A structural problem found by [`MealyAutomaton::validate`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Defect {
    /// Table entry for this (state, symbol) cell is absent.
    MissingTransition { state: usize, symbol: usize },
    /// `next` target out of range at this cell.
    StateOutOfRange { state: usize, symbol: usize, target: usize },
    /// `out` target out of range at this cell.
    SymbolOutOfRange { state: usize, symbol: usize, target: usize },
    /// Two states or two symbols share a name.
    DuplicateName { name: String },
    /// No states or no symbols.
    Empty,
}

impl fmt::Display for Defect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Defect::MissingTransition { state, symbol } => {
                write!(f, "missing transition at state {state}, symbol {symbol}")
            }
            Defect::StateOutOfRange { state, symbol, target } => {
                write!(f, "next-state {target} out of range at state {state}, symbol {symbol}")
            }
            Defect::SymbolOutOfRange { state, symbol, target } => {
                write!(f, "output symbol {target} out of range at state {state}, symbol {symbol}")
            }
            Defect::DuplicateName { name } => write!(f, "duplicate name {name:?}"),
            Defect::Empty => write!(f, "automaton has no states or no symbols"),
        }
    }
}

/// A nonempty word over the states of one automaton, denoting an element of
/// the generated semigroup. Emptiness is ruled out at construction; the
/// semigroup has no identity unless the automaton provides one.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Word(Vec<StateId>);

impl Word {
    pub fn new(letters: Vec<StateId>) -> Option<Word> {
        if letters.is_empty() {
            None
        } else {
            Some(Word(letters))
        }
    }

    pub fn single(q: StateId) -> Word {
        Word(vec![q])
    }

    pub fn letters(&self) -> &[StateId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Concatenation, i.e. the product in the generated semigroup.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// `self` repeated `n` times; `n` must be positive.
    pub fn power(&self, n: usize) -> Word {
        assert!(n > 0, "semigroup words have no zeroth power");
        let mut letters = Vec::with_capacity(self.0.len() * n);
        for _ in 0..n {
            letters.extend_from_slice(&self.0);
        }
        Word(letters)
    }
}

/// The wreath recursion of a word: its action on single symbols together
/// with the section below each symbol.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WreathRecursion {
    pub root_map: Vec<SymbolId>,
    pub sections: Vec<Word>,
}

impl WreathRecursion {
    /// Common length of all section words.
    pub fn word_len(&self) -> usize {
        self.sections[0].len()
    }
}

impl MealyAutomaton {
    /// Build from a closure giving `(next, out)` per (state, symbol) cell.
    pub fn build<F>(states: Vec<String>, alphabet: Vec<String>, mut delta: F) -> MealyAutomaton
    where
        F: FnMut(usize, usize) -> (usize, usize),
    {
        let (nq, nb) = (states.len(), alphabet.len());
        let mut next = Vec::with_capacity(nq * nb);
        let mut out = Vec::with_capacity(nq * nb);
        for q in 0..nq {
            for b in 0..nb {
                let (r, c) = delta(q, b);
                next.push(StateId(r));
                out.push(SymbolId(c));
            }
        }
        let aut = MealyAutomaton { states, alphabet, next, out };
        debug_assert!(aut.validate().is_empty(), "builder produced an invalid automaton");
        aut
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    pub fn alphabet_len(&self) -> usize {
        self.alphabet.len()
    }

    #[inline]
    fn cell(&self, q: StateId, b: SymbolId) -> usize {
        q.0 * self.alphabet.len() + b.0
    }

    /// Next state on reading `b` in state `q` (the paper-style `q pi_b`).
    #[inline]
    pub fn next(&self, q: StateId, b: SymbolId) -> StateId {
        self.next[self.cell(q, b)]
    }

    /// Output symbol on reading `b` in state `q` (the paper-style `b tau_q`).
    #[inline]
    pub fn out(&self, q: StateId, b: SymbolId) -> SymbolId {
        self.out[self.cell(q, b)]
    }

    pub fn state_id(&self, name: &str) -> Option<StateId> {
        self.states.iter().position(|s| s == name).map(StateId)
    }

    pub fn symbol_id(&self, name: &str) -> Option<SymbolId> {
        self.alphabet.iter().position(|s| s == name).map(SymbolId)
    }

    pub fn state_name(&self, q: StateId) -> &str {
        &self.states[q.0]
    }

    pub fn symbol_name(&self, b: SymbolId) -> &str {
        &self.alphabet[b.0]
    }

    pub fn state_ids(&self) -> impl Iterator<Item = StateId> {
        (0..self.states.len()).map(StateId)
    }

    pub fn symbol_ids(&self) -> impl Iterator<Item = SymbolId> {
        (0..self.alphabet.len()).map(SymbolId)
    }

    /// Check totality of both tables, index ranges and name uniqueness.
    /// Returns an empty list exactly when the automaton is well-formed.
    pub fn validate(&self) -> Vec<Defect> {
        let mut defects = Vec::new();
        let (nq, nb) = (self.states.len(), self.alphabet.len());
        if nq == 0 || nb == 0 {
            defects.push(Defect::Empty);
        }
        for (i, cell) in (0..nq * nb).enumerate() {
            let (state, symbol) = (cell / nb.max(1), cell % nb.max(1));
            match (self.next.get(i), self.out.get(i)) {
                (Some(r), Some(c)) => {
                    if r.0 >= nq {
                        defects.push(Defect::StateOutOfRange { state, symbol, target: r.0 });
                    }
                    if c.0 >= nb {
                        defects.push(Defect::SymbolOutOfRange { state, symbol, target: c.0 });
                    }
                }
                _ => defects.push(Defect::MissingTransition { state, symbol }),
            }
        }
        for (i, name) in self.states.iter().enumerate() {
            if self.states[..i].iter().any(|m| m == name) {
                defects.push(Defect::DuplicateName { name: name.clone() });
            }
        }
        for (i, name) in self.alphabet.iter().enumerate() {
            if self.alphabet[..i].iter().any(|m| m == name) {
                defects.push(Defect::DuplicateName { name: name.clone() });
            }
        }
        defects
    }

    /// Run a single state over a string, returning the output and final state.
    pub fn run(&self, q: StateId, input: &[SymbolId]) -> (Vec<SymbolId>, StateId) {
        let mut state = q;
        let mut output = Vec::with_capacity(input.len());
        for &b in input {
            output.push(self.out(state, b));
            state = self.next(state, b);
        }
        (output, state)
    }

    /// The action of a word on a string: each letter transduces the previous
    /// letter's output in turn. Length is preserved.
    pub fn act(&self, w: &Word, input: &[SymbolId]) -> Vec<SymbolId> {
        let mut current = input.to_vec();
        for &q in w.letters() {
            let (next, _) = self.run(q, &current);
            current = next;
        }
        current
    }

    /// The section of `w` below the vertex `prefix`: the unique word with
    /// `act(w, prefix ++ beta) = act(w, prefix) ++ act(w|_prefix, beta)`.
    pub fn restriction(&self, w: &Word, prefix: &[SymbolId]) -> Word {
        let mut letters = Vec::with_capacity(w.len());
        let mut current = prefix.to_vec();
        for &q in w.letters() {
            let (next, landed) = self.run(q, &current);
            letters.push(landed);
            current = next;
        }
        Word(letters)
    }

    /// Root action and sections of a word, computed cell by cell.
    pub fn wreath_recursion(&self, w: &Word) -> WreathRecursion {
        let mut root_map = Vec::with_capacity(self.alphabet.len());
        let mut sections = Vec::with_capacity(self.alphabet.len());
        for b in self.symbol_ids() {
            root_map.push(self.act(w, &[b])[0]);
            sections.push(self.restriction(w, &[b]));
        }
        WreathRecursion { root_map, sections }
    }

    /// Translate symbol names to ids, reporting the first unknown token.
    pub fn symbols_from_names<'a, I>(&self, names: I) -> Result<Vec<SymbolId>, String>
    where
        I: IntoIterator<Item = &'a str>,
    {
        names
            .into_iter()
            .map(|n| self.symbol_id(n).ok_or_else(|| n.to_string()))
            .collect()
    }

    /// Translate state names to ids, reporting the first unknown token.
    pub fn word_from_names<'a, I>(&self, names: I) -> Result<Option<Word>, String>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let letters = names
            .into_iter()
            .map(|n| self.state_id(n).ok_or_else(|| n.to_string()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Word::new(letters))
    }
}

/// Product of two wreath recursions over the same alphabet. Sections of the
/// product concatenate the left section with the right section taken below
/// the left root image.
pub fn compose_recursions(
    r1: &WreathRecursion,
    r2: &WreathRecursion,
) -> Result<WreathRecursion, AlphabetMismatch> {
    if r1.root_map.len() != r2.root_map.len() {
        return Err(AlphabetMismatch {
            left: r1.root_map.len(),
            right: r2.root_map.len(),
        });
    }
    let root_map = r1.root_map.iter().map(|&b| r2.root_map[b.0]).collect();
    let sections = r1
        .sections
        .iter()
        .zip(&r1.root_map)
        .map(|(sec, &b)| sec.concat(&r2.sections[b.0]))
        .collect();
    Ok(WreathRecursion { root_map, sections })
}

/// Two recursions were combined over alphabets of different sizes.
#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
#[error("alphabet mismatch: {left} symbols vs {right}")]
pub struct AlphabetMismatch {
    pub left: usize,
    pub right: usize,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::fig_wreath_base;

    fn sym(aut: &MealyAutomaton, s: &str) -> Vec<SymbolId> {
        aut.symbols_from_names(s.split_whitespace()).unwrap()
    }

    fn word(aut: &MealyAutomaton, s: &str) -> Word {
        aut.word_from_names(s.split_whitespace()).unwrap().unwrap()
    }

    #[test]
    fn base_automaton_is_valid() {
        assert!(fig_wreath_base().validate().is_empty());
    }

    #[test]
    fn missing_cell_is_reported() {
        let mut aut = fig_wreath_base();
        aut.next.pop();
        aut.out.pop();
        assert_eq!(
            aut.validate(),
            vec![Defect::MissingTransition { state: 1, symbol: 1 }]
        );
    }

    #[test]
    fn out_of_range_target_is_reported() {
        let mut aut = fig_wreath_base();
        aut.next[0] = StateId(5);
        assert_eq!(
            aut.validate(),
            vec![Defect::StateOutOfRange { state: 0, symbol: 0, target: 5 }]
        );
    }

    #[test]
    fn act_on_the_counter_automaton() {
        let aut = fig_wreath_base();
        // b sends 1|0 into the identity state a, which copies.
        assert_eq!(aut.act(&word(&aut, "b"), &sym(&aut, "1 0")), sym(&aut, "0 0"));
        // a acts as the identity on everything.
        let s = sym(&aut, "1 0 1 1");
        assert_eq!(aut.act(&word(&aut, "a"), &s), s);
    }

    #[test]
    fn restriction_follows_the_transitions() {
        let aut = fig_wreath_base();
        assert_eq!(aut.restriction(&word(&aut, "b"), &sym(&aut, "1")), word(&aut, "a"));
        assert_eq!(aut.restriction(&word(&aut, "b"), &sym(&aut, "0")), word(&aut, "b"));
        let w = word(&aut, "b a b");
        assert_eq!(aut.restriction(&w, &[]), w);
    }

    #[test]
    fn wreath_recursion_of_single_letters() {
        let aut = fig_wreath_base();
        let rec = aut.wreath_recursion(&word(&aut, "b"));
        assert_eq!(rec.root_map, sym(&aut, "0 0"));
        assert_eq!(rec.sections, vec![word(&aut, "b"), word(&aut, "a")]);

        let id = aut.wreath_recursion(&word(&aut, "a"));
        assert_eq!(id.root_map, sym(&aut, "0 1"));
        assert_eq!(id.sections, vec![word(&aut, "a"), word(&aut, "a")]);
    }

    #[test]
    fn wreath_recursion_of_bb_by_hand() {
        let aut = fig_wreath_base();
        let rec = aut.wreath_recursion(&word(&aut, "b b"));
        assert_eq!(rec.root_map, sym(&aut, "0 0"));
        assert_eq!(rec.sections, vec![word(&aut, "b b"), word(&aut, "a b")]);
    }

    #[test]
    fn composing_recursions_matches_concatenation() {
        let aut = fig_wreath_base();
        let rb = aut.wreath_recursion(&word(&aut, "b"));
        let composed = compose_recursions(&rb, &rb).unwrap();
        assert_eq!(composed, aut.wreath_recursion(&word(&aut, "b b")));

        let ra = aut.wreath_recursion(&word(&aut, "a"));
        // a recurses to itself and acts as identity, so it is left-neutral
        // at the recursion level up to its own section letters.
        let left = compose_recursions(&ra, &rb).unwrap();
        assert_eq!(left, aut.wreath_recursion(&word(&aut, "a b")));
    }

    #[test]
    fn recursion_soundness_at_depth_two() {
        let aut = fig_wreath_base();
        let words = ["b", "a b", "b b", "b a b"];
        for w in words {
            let w = word(&aut, w);
            let rec = aut.wreath_recursion(&w);
            for b0 in aut.symbol_ids() {
                for b1 in aut.symbol_ids() {
                    let direct = aut.act(&w, &[b0, b1]);
                    let via_rec = vec![rec.root_map[b0.0], aut.act(&rec.sections[b0.0], &[b1])[0]];
                    assert_eq!(direct, via_rec);
                }
            }
        }
    }
}
