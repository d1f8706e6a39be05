//! Periodicity from wreath recursions, and the refutation procedure for
//! claimed automaton presentations of subsemigroups of the naturals with a
//! zero adjoined.

use super::{equal, is_zero_element};
use crate::mealy::{compose_recursions, MealyAutomaton, StateId, Word, WreathRecursion};
use std::collections::HashMap;
use std::fmt;

/// A value in the naturals-with-zero: a positive natural, or the adjoined
/// absorbing zero.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NatOrZero {
    Zero,
    Nat(u64),
}

impl fmt::Display for NatOrZero {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NatOrZero::Zero => write!(f, "z!"),
            NatOrZero::Nat(n) => write!(f, "{n}"),
        }
    }
}

/// A claimed assignment of automaton states to elements of the naturals
/// with zero, one value per state.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Valuation {
    pub values: Vec<NatOrZero>,
}

impl Valuation {
    /// Sum of letter values; the zero absorbs.
    pub fn sum(&self, w: &Word) -> NatOrZero {
        let mut total = 0u64;
        for &q in w.letters() {
            match self.values[q.0] {
                NatOrZero::Zero => return NatOrZero::Zero,
                NatOrZero::Nat(n) => total += n,
            }
        }
        NatOrZero::Nat(total)
    }
}

#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum PeriodicError {
    #[error("state {zero:?} is not a zero element (fails against generator {generator:?})")]
    NotAZero { zero: String, generator: String },
    #[error("section of {state:?} at symbol {symbol:?} is {section:?}, neither the state itself nor the zero")]
    BadSection { state: String, symbol: String, section: String },
    #[error("power pattern repeated at ({m}, {n}) but the equality check refuted it")]
    VerificationFailed { m: usize, n: usize },
}

/// Find exponents `m < n` with `q^m = q^n`, given that `q` recurses only to
/// itself and to a zero state `z`.
///
/// Sections of `q^n` are products of `n` letters from `{q, z}`, hence equal
/// to `q^n` or to the zero; the per-symbol self-or-zero pattern together
/// with the power of the root action must repeat within
/// `2^|B| * |B|^|B| + 1` iterations, and a repeat forces equality of the
/// corresponding powers. The returned pair is re-verified with [`equal`].
pub fn periodic_by_recursion(
    aut: &MealyAutomaton,
    q: StateId,
    z: StateId,
) -> Result<(usize, usize), PeriodicError> {
    let zero_word = Word::single(z);
    for g in aut.state_ids() {
        let gw = Word::single(g);
        if !equal(aut, &zero_word.concat(&gw), &zero_word).equal
            || !equal(aut, &gw.concat(&zero_word), &zero_word).equal
        {
            return Err(PeriodicError::NotAZero {
                zero: aut.state_name(z).to_string(),
                generator: aut.state_name(g).to_string(),
            });
        }
    }

    let rec = aut.wreath_recursion(&Word::single(q));
    let mut self_at = Vec::with_capacity(aut.alphabet_len());
    for (b, section) in rec.sections.iter().enumerate() {
        let letter = section.letters()[0];
        if letter == q {
            self_at.push(true);
        } else if letter == z {
            self_at.push(false);
        } else {
            return Err(PeriodicError::BadSection {
                state: aut.state_name(q).to_string(),
                symbol: aut.symbol_name(crate::mealy::SymbolId(b)).to_string(),
                section: aut.state_name(letter).to_string(),
            });
        }
    }

    let tau: Vec<usize> = rec.root_map.iter().map(|s| s.0).collect();
    let (m, n) = find_power_repeat(&self_at, &tau);
    let qw = Word::single(q);
    if equal(aut, &qw.power(m), &qw.power(n)).equal {
        Ok((m, n))
    } else {
        Err(PeriodicError::VerificationFailed { m, n })
    }
}

/// Iterate the (self-or-zero pattern, root power) state of successive powers
/// until it repeats; returns the two exponents with identical states.
fn find_power_repeat(self_at: &[bool], tau: &[usize]) -> (usize, usize) {
    let mut seen: HashMap<(Vec<bool>, Vec<usize>), usize> = HashMap::new();
    let mut pattern = self_at.to_vec();
    let mut power = tau.to_vec();
    let mut n = 1;
    loop {
        match seen.insert((pattern.clone(), power.clone()), n) {
            Some(m) => return (m, n),
            None => {
                // pattern of q^(n+1) at b: q itself at b, and q^n below b tau
                pattern = (0..self_at.len())
                    .map(|b| self_at[b] && pattern[tau[b]])
                    .collect();
                power = tau.iter().map(|&b| power[b]).collect();
                n += 1;
            }
        }
    }
}

/// Outcome of [`refute_n0_valuation`]: every run produces a concrete datum.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Refutation {
    /// No state carries a finite value, so there is nothing to refute.
    NoFiniteValues,
    /// The valuation cannot be a homomorphism-respecting labelling: the two
    /// words are equal in the semigroup with distinct value sums, or have
    /// equal sums while acting differently.
    NotHom {
        left: Word,
        right: Word,
        left_sum: NatOrZero,
        right_sum: NatOrZero,
        equal_in_automaton: bool,
    },
    /// A word forced by the valuation to represent a positive natural is
    /// periodic: `word^m = word^n` with `m < n`.
    Periodic { word: Word, m: usize, n: usize },
    /// A malformed claim dodged every scripted contradiction.
    Inconclusive { diagnostic: String },
}

/// Execute the refutation procedure against a claimed valuation of the
/// states in the naturals-with-zero.
///
/// Writing `k` and `l` for the maximal and minimal finite values: if
/// `k = l`, the maximal state either yields a homomorphism violation or
/// recurses (up to equality) only to itself and zero material and is then
/// provably periodic. Otherwise the words `q_k^l` and `q_l^k` carry the
/// same value sum, so either they differ as elements (a violation), or
/// their common recursion forces each section to be all-`k` against
/// all-`l` letters (any deviation gives equal sections with distinct
/// sums), leaving a self-and-zero recursion that is again periodic.
/// Periodicity contradicts representing a positive natural, so a genuine
/// automaton for a nontrivial subsemigroup cannot reach the end.
pub fn refute_n0_valuation(aut: &MealyAutomaton, valuation: &Valuation) -> Refutation {
    assert_eq!(valuation.values.len(), aut.state_count(), "one value per state");
    let finite: Vec<(StateId, u64)> = aut
        .state_ids()
        .filter_map(|q| match valuation.values[q.0] {
            NatOrZero::Nat(n) => Some((q, n)),
            NatOrZero::Zero => None,
        })
        .collect();
    let Some(&(_, first)) = finite.first() else {
        return Refutation::NoFiniteValues;
    };
    let (mut qk, mut k) = (finite[0].0, first);
    let (mut ql, mut l) = (finite[0].0, first);
    for &(q, n) in &finite {
        if n > k {
            (qk, k) = (q, n);
        }
        if n < l {
            (ql, l) = (q, n);
        }
    }

    if k == l {
        return lemma_path(aut, valuation, qk, Word::single(qk));
    }

    // q_k^l and q_l^k have value sums k*l = l*k, so they must be equal.
    let wk = Word::single(qk).power(l as usize);
    let wl = Word::single(ql).power(k as usize);
    if !equal(aut, &wk, &wl).equal {
        return not_hom(valuation, &wk, &wl, false);
    }

    let rk = power_recursion(aut, qk, l as usize);
    let rl = power_recursion(aut, ql, k as usize);
    for b in aut.symbol_ids() {
        let w_b = &rk.sections[b.0];
        let x_b = &rl.sections[b.0];
        let zw = nu_zero(aut, valuation, w_b);
        let zx = nu_zero(aut, valuation, x_b);
        if zw != zx {
            return if equal(aut, w_b, x_b).equal {
                not_hom(valuation, w_b, x_b, true)
            } else {
                Refutation::Inconclusive {
                    diagnostic: format!(
                        "sections at {:?} of equal words are unequal",
                        aut.symbol_name(b)
                    ),
                }
            };
        }
        if zw {
            continue;
        }
        let w_ok = w_b.letters().iter().all(|&r| valuation.values[r.0] == NatOrZero::Nat(k));
        let x_ok = x_b.letters().iter().all(|&r| valuation.values[r.0] == NatOrZero::Nat(l));
        if !w_ok || !x_ok {
            // Deviating letters push the sums strictly apart while the
            // sections stay equal as elements.
            return if equal(aut, w_b, x_b).equal && valuation.sum(w_b) != valuation.sum(x_b) {
                not_hom(valuation, w_b, x_b, true)
            } else {
                Refutation::Inconclusive {
                    diagnostic: format!(
                        "deviating section at {:?} does not separate the sums",
                        aut.symbol_name(b)
                    ),
                }
            };
        }
        // Letters valued k must all represent the same element as q_k.
        for &r in w_b.letters() {
            if r != qk && !equal(aut, &Word::single(r), &Word::single(qk)).equal {
                return not_hom(valuation, &Word::single(r), &Word::single(qk), false);
            }
        }
    }
    lemma_path(aut, valuation, qk, wk)
}

/// The periodicity path: `word` recurses, up to equality, only to itself
/// and to claimed-zero material, so some pair of its powers must coincide.
fn lemma_path(aut: &MealyAutomaton, valuation: &Valuation, qk: StateId, word: Word) -> Refutation {
    let rec = power_recursion_of_word(aut, &word);
    let mut self_at = Vec::with_capacity(aut.alphabet_len());
    let mut claimed_zero_sections: Vec<Word> = Vec::new();
    for b in aut.symbol_ids() {
        let section = &rec.sections[b.0];
        if nu_zero(aut, valuation, section) {
            claimed_zero_sections.push(section.clone());
            self_at.push(false);
            continue;
        }
        // Every letter of a non-zero section must equal q_k as an element.
        for &r in section.letters() {
            match valuation.values[r.0] {
                NatOrZero::Nat(_) => {
                    if r != qk && !equal(aut, &Word::single(r), &Word::single(qk)).equal {
                        return not_hom(valuation, &Word::single(r), &Word::single(qk), false);
                    }
                }
                NatOrZero::Zero => {
                    // A zero-valued letter inside a non-zero section makes
                    // the section sum zero; pair it against the whole word.
                    if equal(aut, section, &word).equal {
                        return not_hom(valuation, section, &word, true);
                    }
                    return Refutation::Inconclusive {
                        diagnostic: format!(
                            "zero-valued letter {:?} in a section not classified zero",
                            aut.state_name(r)
                        ),
                    };
                }
            }
        }
        self_at.push(true);
    }

    let tau: Vec<usize> = rec.root_map.iter().map(|s| s.0).collect();
    let (m, n) = find_power_repeat(&self_at, &tau);
    if equal(aut, &word.power(m), &word.power(n)).equal {
        return Refutation::Periodic { word, m, n };
    }
    // The pattern argument failed, so some claimed zero is not a genuine
    // zero; hunt it down for a concrete violation.
    for section in &claimed_zero_sections {
        for &r in section.letters() {
            if valuation.values[r.0] == NatOrZero::Zero {
                if let Some(witness) = zero_claim_witness(aut, valuation, r) {
                    return witness;
                }
            }
        }
        if let Some(witness) = zero_word_witness(aut, valuation, section) {
            return witness;
        }
    }
    Refutation::Inconclusive {
        diagnostic: format!("pattern repeat ({m}, {n}) was refuted by the equality check"),
    }
}

/// Probe a claimed-zero state against every generator; a failed absorption
/// yields a pair of words contradicting the valuation.
fn zero_claim_witness(
    aut: &MealyAutomaton,
    valuation: &Valuation,
    s: StateId,
) -> Option<Refutation> {
    let sw = Word::single(s);
    for g in aut.state_ids() {
        let gw = Word::single(g);
        for product in [sw.concat(&gw), gw.concat(&sw)] {
            if !equal(aut, &product, &sw).equal {
                // Not absorbed; if the product collapses to the generator the
                // sums z + v(g) vs v(g) disagree, otherwise the unequal pair
                // already has equal (zero) sums.
                if valuation.values[g.0] != NatOrZero::Zero && equal(aut, &product, &gw).equal {
                    return Some(not_hom(valuation, &product, &gw, true));
                }
                return Some(not_hom(valuation, &product, &sw, false));
            }
        }
    }
    None
}

/// Same hunt for a whole claimed-zero section word.
fn zero_word_witness(
    aut: &MealyAutomaton,
    valuation: &Valuation,
    w: &Word,
) -> Option<Refutation> {
    for g in aut.state_ids() {
        let gw = Word::single(g);
        for product in [w.concat(&gw), gw.concat(w)] {
            if !equal(aut, &product, w).equal {
                if valuation.values[g.0] != NatOrZero::Zero && equal(aut, &product, &gw).equal {
                    return Some(not_hom(valuation, &product, &gw, true));
                }
                return Some(not_hom(valuation, &product, w, false));
            }
        }
    }
    None
}

fn not_hom(valuation: &Valuation, left: &Word, right: &Word, equal_in_automaton: bool) -> Refutation {
    Refutation::NotHom {
        left: left.clone(),
        right: right.clone(),
        left_sum: valuation.sum(left),
        right_sum: valuation.sum(right),
        equal_in_automaton,
    }
}

/// A section word is treated as zero material when every letter is valued
/// zero, or when it is outright a zero of the semigroup.
fn nu_zero(aut: &MealyAutomaton, valuation: &Valuation, w: &Word) -> bool {
    w.letters().iter().all(|&r| valuation.values[r.0] == NatOrZero::Zero)
        || is_zero_element(aut, w)
}

/// Wreath recursion of `q^n` computed by composing `n` copies.
fn power_recursion(aut: &MealyAutomaton, q: StateId, n: usize) -> WreathRecursion {
    let base = aut.wreath_recursion(&Word::single(q));
    let mut acc = base.clone();
    for _ in 1..n {
        acc = compose_recursions(&acc, &base).expect("same automaton");
    }
    acc
}

fn power_recursion_of_word(aut: &MealyAutomaton, w: &Word) -> WreathRecursion {
    aut.wreath_recursion(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::adjoin_zero;
    use crate::instances::{fig_wreath_base, sink_with_zero, sink_both_sections_zero};

    #[test]
    fn sink_example_yields_verified_exponents() {
        let aut = sink_with_zero();
        let q = aut.state_id("q").unwrap();
        let z = aut.state_id("z").unwrap();
        let (m, n) = periodic_by_recursion(&aut, q, z).unwrap();
        assert!(m < n);
        let bound = (1usize << aut.alphabet_len())
            * aut.alphabet_len().pow(aut.alphabet_len() as u32)
            + 1;
        assert!(n <= bound);
        let qw = Word::single(q);
        assert!(equal(&aut, &qw.power(m), &qw.power(n)).equal);
    }

    #[test]
    fn counter_rejects_non_zero_precondition() {
        let aut = fig_wreath_base();
        let b = aut.state_id("b").unwrap();
        let a = aut.state_id("a").unwrap();
        assert!(matches!(
            periodic_by_recursion(&aut, b, a),
            Err(PeriodicError::NotAZero { .. })
        ));
    }

    #[test]
    fn both_sections_zero_gives_one_two() {
        let aut = sink_both_sections_zero();
        let q = aut.state_id("q").unwrap();
        let z = aut.state_id("z").unwrap();
        assert_eq!(periodic_by_recursion(&aut, q, z), Ok((1, 2)));
    }

    #[test]
    fn no_finite_values_short_circuits() {
        let aut = fig_wreath_base();
        let valuation = Valuation { values: vec![NatOrZero::Zero, NatOrZero::Zero] };
        assert_eq!(refute_n0_valuation(&aut, &valuation), Refutation::NoFiniteValues);
    }

    #[test]
    fn misvaluing_the_identity_as_zero_is_caught() {
        let aut = adjoin_zero(&fig_wreath_base());
        // a is the identity, not a zero; claiming a -> z! must surface an
        // equal pair with distinct sums, via a b = b.
        let valuation = Valuation {
            values: vec![NatOrZero::Zero, NatOrZero::Nat(1), NatOrZero::Zero],
        };
        match refute_n0_valuation(&aut, &valuation) {
            Refutation::NotHom { left_sum, right_sum, equal_in_automaton, .. } => {
                assert!(equal_in_automaton);
                assert_ne!(left_sum, right_sum);
            }
            other => panic!("expected NotHom, got {other:?}"),
        }
    }

    #[test]
    fn sink_lemma_path_is_periodic() {
        let aut = sink_with_zero();
        let valuation = Valuation { values: vec![NatOrZero::Nat(1), NatOrZero::Zero] };
        match refute_n0_valuation(&aut, &valuation) {
            Refutation::Periodic { m, n, .. } => assert!(m < n),
            other => panic!("expected Periodic, got {other:?}"),
        }
    }

    #[test]
    fn distinct_values_refute_through_the_power_pair() {
        let aut = adjoin_zero(&fig_wreath_base());
        // a -> 2, b -> 1: then a^1 and b^2 share the sum 2 but differ.
        let valuation = Valuation {
            values: vec![NatOrZero::Nat(2), NatOrZero::Nat(1), NatOrZero::Zero],
        };
        match refute_n0_valuation(&aut, &valuation) {
            Refutation::NotHom { left_sum, right_sum, equal_in_automaton, .. } => {
                assert!(!equal_in_automaton);
                assert_eq!(left_sum, right_sum);
            }
            other => panic!("expected NotHom, got {other:?}"),
        }
    }
}
