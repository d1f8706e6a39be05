//! Actions on eventually periodic infinite strings.
//!
//! Infinite inputs of the form `prefix . period^omega` stand in for the full
//! space of infinite strings: a word acts on one by transducing the prefix
//! and then pumping whole periods until the tuple of transducer states
//! repeats, which it must within `|Q|^|w|` period iterations.

use super::{MealyAutomaton, StateId, SymbolId, Word};
use std::collections::HashMap;

/// An eventually periodic string in canonical form: the period is primitive
/// and the prefix is as short as possible (every absorbable tail has been
/// rotated into the period). Two values are equal as infinite strings
/// exactly when they are structurally equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct EpString {
    prefix: Vec<SymbolId>,
    period: Vec<SymbolId>,
}

impl EpString {
    /// Canonicalize `prefix . period^omega`. The period must be nonempty.
    pub fn new(prefix: Vec<SymbolId>, period: Vec<SymbolId>) -> Option<EpString> {
        if period.is_empty() {
            return None;
        }
        let mut s = EpString { prefix, period };
        s.canonicalize();
        Some(s)
    }

    pub fn periodic(period: Vec<SymbolId>) -> Option<EpString> {
        EpString::new(Vec::new(), period)
    }

    pub fn prefix(&self) -> &[SymbolId] {
        &self.prefix
    }

    pub fn period(&self) -> &[SymbolId] {
        &self.period
    }

    /// The first `n` symbols of the infinite string.
    pub fn unroll(&self, n: usize) -> Vec<SymbolId> {
        let mut out = Vec::with_capacity(n);
        out.extend(self.prefix.iter().copied().take(n));
        let mut i = 0;
        while out.len() < n {
            out.push(self.period[i % self.period.len()]);
            i += 1;
        }
        out
    }

    fn canonicalize(&mut self) {
        // Shrink the period to its primitive root.
        let n = self.period.len();
        for d in 1..=n / 2 {
            if n % d == 0 && (d..n).all(|i| self.period[i] == self.period[i - d]) {
                self.period.truncate(d);
                break;
            }
        }
        // Absorb the prefix tail: while the prefix ends with the symbol the
        // period would put there, move the period's last symbol to its front.
        while let Some(&last) = self.prefix.last() {
            if last == *self.period.last().unwrap() {
                self.prefix.pop();
                let tail = self.period.pop().unwrap();
                self.period.insert(0, tail);
            } else {
                break;
            }
        }
    }
}

/// Act on an eventually periodic string, producing the exact image.
///
/// The `|w|` chained transducers form one product machine; after the prefix,
/// its state is sampled once per period until a repeat closes the cycle.
pub fn act_eventually_periodic(aut: &MealyAutomaton, w: &Word, input: &EpString) -> EpString {
    let mut states: Vec<StateId> = w.letters().to_vec();

    let transduce = |states: &mut Vec<StateId>, chunk: &[SymbolId]| -> Vec<SymbolId> {
        let mut out = Vec::with_capacity(chunk.len());
        for &b in chunk {
            let mut c = b;
            for q in states.iter_mut() {
                let (state, sym) = (*q, c);
                c = aut.out(state, sym);
                *q = aut.next(state, sym);
            }
            out.push(c);
        }
        out
    };

    let mut out_prefix = transduce(&mut states, input.prefix());

    let mut seen: HashMap<Vec<StateId>, usize> = HashMap::new();
    let mut chunks: Vec<Vec<SymbolId>> = Vec::new();
    let (start, end) = loop {
        if let Some(&start) = seen.get(&states) {
            break (start, chunks.len());
        }
        seen.insert(states.clone(), chunks.len());
        chunks.push(transduce(&mut states, input.period()));
    };

    for chunk in &chunks[..start] {
        out_prefix.extend_from_slice(chunk);
    }
    let mut out_period = Vec::with_capacity((end - start) * input.period().len());
    for chunk in &chunks[start..end] {
        out_period.extend_from_slice(chunk);
    }
    EpString::new(out_prefix, out_period).expect("output period is nonempty")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::fig_wreath_base;

    fn ids(raw: &[usize]) -> Vec<SymbolId> {
        raw.iter().map(|&i| SymbolId(i)).collect()
    }

    #[test]
    fn canonical_form_shrinks_and_absorbs() {
        // 0 (1 0 1 0)^w  =  (0 1)^w
        let s = EpString::new(ids(&[0]), ids(&[1, 0, 1, 0])).unwrap();
        assert_eq!(s.prefix(), &[] as &[SymbolId]);
        assert_eq!(s.period(), ids(&[0, 1]).as_slice());

        // 1 0 (0)^w  =  1 (0)^w
        let s = EpString::new(ids(&[1, 0]), ids(&[0])).unwrap();
        assert_eq!(s.prefix(), ids(&[1]).as_slice());
        assert_eq!(s.period(), ids(&[0]).as_slice());
    }

    #[test]
    fn canonical_equality_is_string_equality() {
        let a = EpString::new(ids(&[0, 1]), ids(&[1, 0])).unwrap();
        let b = EpString::new(ids(&[0]), ids(&[1, 1, 0, 1])).unwrap();
        assert_eq!(a.unroll(12), b.unroll(12));
        assert_eq!(a, b);
    }

    #[test]
    fn identity_word_fixes_every_input() {
        let aut = fig_wreath_base();
        let a = aut.word_from_names(["a"]).unwrap().unwrap();
        let input = EpString::new(ids(&[1, 0]), ids(&[1, 1, 0])).unwrap();
        assert_eq!(act_eventually_periodic(&aut, &a, &input), input);
    }

    #[test]
    fn counter_state_zeroes_the_ones() {
        let aut = fig_wreath_base();
        let b = aut.word_from_names(["b"]).unwrap().unwrap();
        // (1)^w . b = 0 (1)^w read through... b turns the first 1 into 0 and
        // becomes the identity, so the image is 0 1 1 1... = 0 (1)^w.
        let input = EpString::periodic(ids(&[1])).unwrap();
        let expected = EpString::new(ids(&[0]), ids(&[1])).unwrap();
        assert_eq!(act_eventually_periodic(&aut, &b, &input), expected);
    }

    #[test]
    fn output_agrees_with_finite_action_on_long_unrollings() {
        let aut = fig_wreath_base();
        let words = ["b", "b b", "a b", "b a b"];
        let input = EpString::new(ids(&[0]), ids(&[1, 0])).unwrap();
        for w in words {
            let w = aut.word_from_names(w.split_whitespace()).unwrap().unwrap();
            let image = act_eventually_periodic(&aut, &w, &input);
            let n = input.prefix().len() + 4 * input.period().len() * aut.state_count().pow(w.len() as u32);
            assert_eq!(image.unroll(n), aut.act(&w, &input.unroll(n)));
        }
    }
}
