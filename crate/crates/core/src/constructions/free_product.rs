//! Automata for free products of semigroups.
//!
//! The finite builder takes two Cayley tables with distinguished idempotents
//! and writes elements into domino and tablet symbols, marking them as the
//! word passes. The general builder takes two automata with distinguished
//! states and extends the idea with gate symbols separating blocks.

use super::{merge_names, ConstructionError};
use crate::algebra::{ElemId, FiniteSemigroup};
use crate::mealy::{MealyAutomaton, StateId, Word};
use crate::word_problem::equal;

/// Decoded meaning of a symbol of the finite free-product automaton.
///
/// Dominoes carry an optional element of each factor in writing order
/// (first the left factor, then the right); tablets are the mirror image.
/// `Circled` symbols are inert.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FpSymbol {
    Domino { s: Option<ElemId>, t: Option<ElemId>, circled: bool },
    Tablet { t: Option<ElemId>, s: Option<ElemId>, circled: bool },
}

/// The finite free-product automaton plus its labelling: which factor
/// element each state stands for, and what each symbol encodes.
#[derive(Clone, Debug)]
pub struct FreeProductAutomaton {
    pub automaton: MealyAutomaton,
    /// State ids of the left factor's elements, in table order.
    pub s_states: Vec<StateId>,
    /// State ids of the right factor's elements, in table order.
    pub t_states: Vec<StateId>,
    pub symbols: Vec<FpSymbol>,
}

impl FreeProductAutomaton {
    pub fn symbol_of(&self, sym: FpSymbol) -> crate::mealy::SymbolId {
        crate::mealy::SymbolId(
            self.symbols.iter().position(|&f| f == sym).expect("symbol exists"),
        )
    }
}

/// Build the automaton generating the free product of two finite semigroups,
/// given one idempotent in each.
pub fn free_product_finite(
    s: &FiniteSemigroup,
    t: &FiniteSemigroup,
    e: ElemId,
    f: ElemId,
) -> Result<FreeProductAutomaton, ConstructionError> {
    if s.product(e, e) != e {
        return Err(ConstructionError::NotIdempotent { side: "the left factor", element: s.name(e).into() });
    }
    if t.product(f, f) != f {
        return Err(ConstructionError::NotIdempotent { side: "the right factor", element: t.name(f).into() });
    }

    let (s_names, t_names) = merge_names(s.names(), t.names(), "_S", "_T");
    let mut states = s_names.clone();
    states.extend(t_names.clone());
    let s_state = |x: ElemId| x;
    let t_state = |x: ElemId| s.len() + x;

    let mut symbols: Vec<FpSymbol> = Vec::new();
    let mut names: Vec<String> = Vec::new();
    let push = |sym: FpSymbol, name: String, symbols: &mut Vec<FpSymbol>, names: &mut Vec<String>| {
        symbols.push(sym);
        names.push(name);
    };
    let sn = |x: Option<ElemId>| x.map_or("-".to_string(), |i| s.name(i).to_string());
    let tn = |x: Option<ElemId>| x.map_or("-".to_string(), |i| t.name(i).to_string());
    push(FpSymbol::Domino { s: None, t: None, circled: false }, "D[-|-]".into(), &mut symbols, &mut names);
    for a in 0..s.len() {
        push(FpSymbol::Domino { s: Some(a), t: None, circled: false }, format!("D[{}|-]", s.name(a)), &mut symbols, &mut names);
    }
    for a in 0..s.len() {
        for b in 0..t.len() {
            push(FpSymbol::Domino { s: Some(a), t: Some(b), circled: false }, format!("D[{}|{}]", s.name(a), t.name(b)), &mut symbols, &mut names);
            push(FpSymbol::Domino { s: Some(a), t: Some(b), circled: true }, format!("D[{}|{}]o", s.name(a), t.name(b)), &mut symbols, &mut names);
        }
    }
    push(FpSymbol::Tablet { t: None, s: None, circled: false }, "T[-|-]".into(), &mut symbols, &mut names);
    for b in 0..t.len() {
        push(FpSymbol::Tablet { t: Some(b), s: None, circled: false }, format!("T[{}|-]", t.name(b)), &mut symbols, &mut names);
    }
    for b in 0..t.len() {
        for a in 0..s.len() {
            push(FpSymbol::Tablet { t: Some(b), s: Some(a), circled: false }, format!("T[{}|{}]", t.name(b), s.name(a)), &mut symbols, &mut names);
            push(FpSymbol::Tablet { t: Some(b), s: Some(a), circled: true }, format!("T[{}|{}]o", t.name(b), s.name(a)), &mut symbols, &mut names);
        }
    }
    let _ = (sn, tn);

    let find = |sym: FpSymbol| symbols.iter().position(|&g| g == sym).expect("symbol in table");
    let automaton = MealyAutomaton::build(states, names, |q, c| {
        let sym = symbols[c];
        if q < s.len() {
            // state is the left-factor element x
            let x = q;
            match sym {
                FpSymbol::Domino { s: None, t: None, .. } => {
                    (t_state(f), find(FpSymbol::Domino { s: Some(x), t: None, circled: false }))
                }
                FpSymbol::Domino { s: Some(a), t: None, .. } => {
                    (t_state(f), find(FpSymbol::Domino { s: Some(s.product(a, x)), t: None, circled: false }))
                }
                FpSymbol::Domino { s: a, t: b, circled: false } => {
                    (q, find(FpSymbol::Domino { s: a, t: b, circled: true }))
                }
                FpSymbol::Domino { .. } => (q, c),
                FpSymbol::Tablet { t: None, s: None, .. } => (s_state(e), c),
                FpSymbol::Tablet { t: Some(b), s: None, .. } => {
                    (s_state(e), find(FpSymbol::Tablet { t: Some(b), s: Some(x), circled: false }))
                }
                FpSymbol::Tablet { t: Some(b), s: Some(a), circled: false } => {
                    (s_state(e), find(FpSymbol::Tablet { t: Some(b), s: Some(s.product(a, x)), circled: false }))
                }
                FpSymbol::Tablet { .. } => (q, c),
            }
        } else {
            // state is the right-factor element y
            let y = q - s.len();
            match sym {
                FpSymbol::Domino { s: None, t: None, .. } => (t_state(f), c),
                FpSymbol::Domino { s: Some(a), t: None, .. } => {
                    (t_state(f), find(FpSymbol::Domino { s: Some(a), t: Some(y), circled: false }))
                }
                FpSymbol::Domino { s: a, t: Some(b), circled: false } => {
                    (t_state(f), find(FpSymbol::Domino { s: a, t: Some(t.product(b, y)), circled: false }))
                }
                FpSymbol::Domino { .. } => (q, c),
                FpSymbol::Tablet { t: None, s: None, .. } => {
                    (s_state(e), find(FpSymbol::Tablet { t: Some(y), s: None, circled: false }))
                }
                FpSymbol::Tablet { t: Some(b), s: None, .. } => {
                    (s_state(e), find(FpSymbol::Tablet { t: Some(t.product(b, y)), s: None, circled: false }))
                }
                FpSymbol::Tablet { t: Some(b), s: Some(a), circled: false } => {
                    (q, find(FpSymbol::Tablet { t: Some(b), s: Some(a), circled: true }))
                }
                FpSymbol::Tablet { .. } => (q, c),
            }
        }
    });

    Ok(FreeProductAutomaton {
        automaton,
        s_states: (0..s.len()).map(StateId).collect(),
        t_states: (0..t.len()).map(|x| StateId(s.len() + x)).collect(),
        symbols,
    })
}

/// How the hypothesis of the general free-product construction is handled.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HypothesisMode {
    /// Verify that the distinguished states are idempotent, which implies
    /// the hypothesis outright.
    IdempotentVerified,
    /// Accept the hypothesis by assertion (e.g. homogeneous factors); the
    /// output is flagged unverified.
    AssertedHomogeneous,
}

/// The general free-product automaton with its bookkeeping.
#[derive(Clone, Debug)]
pub struct FreeProductGeneralAutomaton {
    pub automaton: MealyAutomaton,
    pub s_states: Vec<StateId>,
    pub t_states: Vec<StateId>,
    /// False when the hypothesis was only asserted, not machine-verified.
    pub verified: bool,
}

/// Symbol layout of the general construction, shared with the tests: for
/// each domino/tablet, four marks; then the two gate families.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum GenSymbol {
    // a-symbol index, b-symbol index, mark
    Domino(usize, usize, Mark),
    Tablet(usize, usize, Mark),
    Dollar(Gate),
    Hash(Gate),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Mark {
    Plain,
    S,
    T,
    Circled,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Gate {
    Open,
    Half,
    Closed,
    Circled,
}

/// Build the automaton generating the free product of the semigroups of two
/// automata with distinguished states `e` and `f` satisfying the power
/// hypothesis (idempotency of both being the verified sufficient case).
pub fn free_product_general(
    a1: &MealyAutomaton,
    a2: &MealyAutomaton,
    e: StateId,
    f: StateId,
    mode: HypothesisMode,
) -> Result<FreeProductGeneralAutomaton, ConstructionError> {
    let verified = match mode {
        HypothesisMode::IdempotentVerified => {
            for (aut, q) in [(a1, e), (a2, f)] {
                let w = Word::single(q);
                if !equal(aut, &w.concat(&w), &w).equal {
                    return Err(ConstructionError::StateNotIdempotent {
                        state: aut.state_name(q).to_string(),
                    });
                }
            }
            true
        }
        HypothesisMode::AssertedHomogeneous => false,
    };

    let (s_names, t_names) = merge_names(&a1.states, &a2.states, "_S", "_T");
    let mut states = s_names;
    states.extend(t_names);
    let t_base = a1.state_count();

    let mut symbols: Vec<GenSymbol> = Vec::new();
    let mut names: Vec<String> = Vec::new();
    let marks = [Mark::Plain, Mark::S, Mark::T, Mark::Circled];
    let mark_suffix = |m: Mark| match m {
        Mark::Plain => "",
        Mark::S => "^S",
        Mark::T => "^T",
        Mark::Circled => "o",
    };
    for a in 0..a1.alphabet_len() {
        for b in 0..a2.alphabet_len() {
            for m in marks {
                symbols.push(GenSymbol::Domino(a, b, m));
                names.push(format!("D[{}|{}]{}", a1.alphabet[a], a2.alphabet[b], mark_suffix(m)));
            }
        }
    }
    for b in 0..a2.alphabet_len() {
        for a in 0..a1.alphabet_len() {
            for m in marks {
                symbols.push(GenSymbol::Tablet(b, a, m));
                names.push(format!("T[{}|{}]{}", a2.alphabet[b], a1.alphabet[a], mark_suffix(m)));
            }
        }
    }
    let gates = [Gate::Open, Gate::Half, Gate::Closed, Gate::Circled];
    let gate_suffix = |g: Gate| match g {
        Gate::Open => "",
        Gate::Half => "^",
        Gate::Closed => "-",
        Gate::Circled => "o",
    };
    for g in gates {
        symbols.push(GenSymbol::Dollar(g));
        names.push(format!("${}", gate_suffix(g)));
    }
    for g in gates {
        symbols.push(GenSymbol::Hash(g));
        names.push(format!("#{}", gate_suffix(g)));
    }

    let find = |sym: GenSymbol| symbols.iter().position(|&g| g == sym).expect("symbol in table");
    let automaton = MealyAutomaton::build(states, names, |q, c| {
        let sym = symbols[c];
        if q < t_base {
            let s = StateId(q);
            match sym {
                GenSymbol::Domino(a, b, Mark::Plain) | GenSymbol::Domino(a, b, Mark::S) => {
                    let (a0, s0) = (a1.out(s, crate::mealy::SymbolId(a)), a1.next(s, crate::mealy::SymbolId(a)));
                    (s0.0, find(GenSymbol::Domino(a0.0, b, Mark::S)))
                }
                GenSymbol::Domino(a, b, Mark::T) => (q, find(GenSymbol::Domino(a, b, Mark::Circled))),
                GenSymbol::Domino(..) => (q, c),
                GenSymbol::Tablet(b, a, Mark::T) | GenSymbol::Tablet(b, a, Mark::S) => {
                    let (a0, s0) = (a1.out(s, crate::mealy::SymbolId(a)), a1.next(s, crate::mealy::SymbolId(a)));
                    (s0.0, find(GenSymbol::Tablet(b, a0.0, Mark::S)))
                }
                GenSymbol::Tablet(..) => (q, c),
                GenSymbol::Dollar(Gate::Closed) | GenSymbol::Dollar(Gate::Half) => {
                    (t_base + f.0, find(GenSymbol::Dollar(Gate::Half)))
                }
                GenSymbol::Dollar(Gate::Open) => (q, find(GenSymbol::Dollar(Gate::Circled))),
                GenSymbol::Dollar(Gate::Circled) => (q, c),
                GenSymbol::Hash(Gate::Closed) => (e.0, c),
                GenSymbol::Hash(Gate::Half) | GenSymbol::Hash(Gate::Open) => {
                    (e.0, find(GenSymbol::Hash(Gate::Open)))
                }
                GenSymbol::Hash(Gate::Circled) => (q, c),
            }
        } else {
            let t = StateId(q - t_base);
            match sym {
                GenSymbol::Domino(a, b, Mark::S) | GenSymbol::Domino(a, b, Mark::T) => {
                    let (b0, t0) = (a2.out(t, crate::mealy::SymbolId(b)), a2.next(t, crate::mealy::SymbolId(b)));
                    (t_base + t0.0, find(GenSymbol::Domino(a, b0.0, Mark::T)))
                }
                GenSymbol::Domino(..) => (q, c),
                GenSymbol::Tablet(b, a, Mark::Plain) | GenSymbol::Tablet(b, a, Mark::T) => {
                    let (b0, t0) = (a2.out(t, crate::mealy::SymbolId(b)), a2.next(t, crate::mealy::SymbolId(b)));
                    (t_base + t0.0, find(GenSymbol::Tablet(b0.0, a, Mark::T)))
                }
                GenSymbol::Tablet(b, a, Mark::S) => (q, find(GenSymbol::Tablet(b, a, Mark::Circled))),
                GenSymbol::Tablet(..) => (q, c),
                GenSymbol::Dollar(Gate::Closed) => (t_base + f.0, c),
                GenSymbol::Dollar(Gate::Half) | GenSymbol::Dollar(Gate::Open) => {
                    (t_base + f.0, find(GenSymbol::Dollar(Gate::Open)))
                }
                GenSymbol::Dollar(Gate::Circled) => (q, c),
                GenSymbol::Hash(Gate::Closed) | GenSymbol::Hash(Gate::Half) => {
                    (e.0, find(GenSymbol::Hash(Gate::Half)))
                }
                GenSymbol::Hash(Gate::Open) => (q, find(GenSymbol::Hash(Gate::Circled))),
                GenSymbol::Hash(Gate::Circled) => (q, c),
            }
        }
    });

    Ok(FreeProductGeneralAutomaton {
        automaton,
        s_states: (0..t_base).map(StateId).collect(),
        t_states: (0..a2.state_count()).map(|x| StateId(t_base + x)).collect(),
        verified,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::trivial;
    use crate::instances::fig_wreath_base;
    use crate::mealy::act_eventually_periodic;
    use crate::mealy::EpString;

    #[test]
    fn finite_alphabet_size() {
        let fp = free_product_finite(&trivial("e"), &trivial("f"), 0, 0).unwrap();
        // 2 blanks + |S| + |T| open + 4 |S||T| full/marked
        assert_eq!(fp.automaton.alphabet_len(), 8);
        assert_eq!(fp.automaton.state_count(), 2);
        assert!(fp.automaton.validate().is_empty());
    }

    #[test]
    fn finite_transitions_match_the_defining_rows() {
        let s = crate::algebra::cyclic2();
        let t = crate::algebra::cyclic2();
        let fp = free_product_finite(&s, &t, 0, 0).unwrap();
        let aut = &fp.automaton;
        // reading the blank domino in a left-factor state writes the element
        let g_s = fp.s_states[1];
        let blank = fp.symbol_of(FpSymbol::Domino { s: None, t: None, circled: false });
        assert_eq!(aut.next(g_s, blank), fp.t_states[0]);
        assert_eq!(
            aut.out(g_s, blank),
            fp.symbol_of(FpSymbol::Domino { s: Some(1), t: None, circled: false })
        );
        // a right-factor state fills the second slot of an open domino
        let open = fp.symbol_of(FpSymbol::Domino { s: Some(1), t: None, circled: false });
        let g_t = fp.t_states[1];
        assert_eq!(aut.next(g_t, open), fp.t_states[0]);
        assert_eq!(
            aut.out(g_t, open),
            fp.symbol_of(FpSymbol::Domino { s: Some(1), t: Some(1), circled: false })
        );
        // full dominoes get circled by left-factor states, which stay put
        let full = fp.symbol_of(FpSymbol::Domino { s: Some(0), t: Some(1), circled: false });
        assert_eq!(aut.next(g_s, full), g_s);
        assert_eq!(
            aut.out(g_s, full),
            fp.symbol_of(FpSymbol::Domino { s: Some(0), t: Some(1), circled: true })
        );
        // marked symbols are ignored by every state
        let marked = fp.symbol_of(FpSymbol::Tablet { t: Some(1), s: Some(0), circled: true });
        for q in aut.state_ids() {
            assert_eq!(aut.next(q, marked), q);
            assert_eq!(aut.out(q, marked), marked);
        }
    }

    #[test]
    fn domino_stream_spells_the_word() {
        let s = trivial("e");
        let t = trivial("f");
        let fp = free_product_finite(&s, &t, 0, 0).unwrap();
        let aut = &fp.automaton;
        let blank = fp.symbol_of(FpSymbol::Domino { s: None, t: None, circled: false });
        let w = Word::new(vec![fp.s_states[0], fp.t_states[0]]).unwrap();
        let image = aut.act(&w, &[blank, blank]);
        assert_eq!(
            image,
            vec![
                fp.symbol_of(FpSymbol::Domino { s: Some(0), t: Some(0), circled: false }),
                blank
            ]
        );
    }

    #[test]
    fn eventually_periodic_readoff_of_two_pairs() {
        let s = trivial("e");
        let t = trivial("f");
        let fp = free_product_finite(&s, &t, 0, 0).unwrap();
        let aut = &fp.automaton;
        let blank = fp.symbol_of(FpSymbol::Domino { s: None, t: None, circled: false });
        let w = Word::new(vec![fp.s_states[0], fp.t_states[0], fp.s_states[0], fp.t_states[0]])
            .unwrap();
        let image = act_eventually_periodic(aut, &w, &EpString::periodic(vec![blank]).unwrap());
        assert_eq!(
            image.prefix(),
            &[
                fp.symbol_of(FpSymbol::Domino { s: Some(0), t: Some(0), circled: true }),
                fp.symbol_of(FpSymbol::Domino { s: Some(0), t: Some(0), circled: false }),
            ]
        );
        assert_eq!(image.period(), &[blank]);
    }

    #[test]
    fn general_builder_verifies_idempotents() {
        let base = fig_wreath_base();
        let a = base.state_id("a").unwrap();
        let b = base.state_id("b").unwrap();
        assert!(free_product_general(&base, &base, a, a, HypothesisMode::IdempotentVerified).is_ok());
        assert!(matches!(
            free_product_general(&base, &base, b, a, HypothesisMode::IdempotentVerified),
            Err(ConstructionError::StateNotIdempotent { .. })
        ));
        let asserted =
            free_product_general(&base, &base, b, a, HypothesisMode::AssertedHomogeneous).unwrap();
        assert!(!asserted.verified);
    }

    #[test]
    fn general_gate_rows() {
        let base = fig_wreath_base();
        let a = base.state_id("a").unwrap();
        let fp = free_product_general(&base, &base, a, a, HypothesisMode::IdempotentVerified).unwrap();
        let aut = &fp.automaton;
        let closed = aut.symbol_id("$-").unwrap();
        let half = aut.symbol_id("$^").unwrap();
        // left states half-open a closed gate and jump to f
        assert_eq!(aut.next(fp.s_states[0], closed), fp.t_states[0]);
        assert_eq!(aut.out(fp.s_states[0], closed), half);
        // right states leave closed gates closed
        assert_eq!(aut.next(fp.t_states[1], closed), fp.t_states[0]);
        assert_eq!(aut.out(fp.t_states[1], closed), closed);
    }

    #[test]
    fn reduced_length_shows_on_the_closed_gate_stream() {
        let base = fig_wreath_base();
        let a = base.state_id("a").unwrap();
        let fp = free_product_general(&base, &base, a, a, HypothesisMode::IdempotentVerified).unwrap();
        let aut = &fp.automaton;
        let closed = aut.symbol_id("$-").unwrap();
        let gates = EpString::periodic(vec![closed]).unwrap();
        // blocks s | t | s vs s | t: different reduced lengths, so the gate
        // stream images differ.
        let stst = Word::new(vec![fp.s_states[1], fp.t_states[1], fp.s_states[1]]).unwrap();
        let st = Word::new(vec![fp.s_states[1], fp.t_states[1]]).unwrap();
        assert_ne!(
            act_eventually_periodic(aut, &stst, &gates),
            act_eventually_periodic(aut, &st, &gates)
        );
        // same reduced length, equal blocks: identical images.
        let st2 = Word::new(vec![fp.s_states[1], fp.t_states[1], fp.t_states[0]]).unwrap();
        assert_eq!(
            act_eventually_periodic(aut, &st, &gates),
            act_eventually_periodic(aut, &st2, &gates)
        );
    }
}
