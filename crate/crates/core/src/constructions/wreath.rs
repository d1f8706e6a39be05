//! Wreath products of an automaton monoid with a finite monoid.

use super::{adjoin_identity, product::digits, product::index, ConstructionError};
use crate::algebra::FiniteSemigroup;
use crate::mealy::{MealyAutomaton, StateId, SymbolId};

/// The wreath-product automaton, with the index layout needed to address
/// its states and symbols: state `(s, t)` where `s` is a tuple over the
/// base generators and `t` a top element, symbol `(a, b)` likewise.
#[derive(Clone, Debug)]
pub struct WreathAutomaton {
    pub automaton: MealyAutomaton,
    /// Base automaton actually used (the input, possibly with an identity
    /// state adjoined).
    pub base: MealyAutomaton,
    /// Identity state of the base.
    pub identity: StateId,
    /// True when an identity state had to be adjoined, so the result is
    /// the wreath product of the monoid completion.
    pub identity_adjoined: bool,
    pub top: FiniteSemigroup,
}

impl WreathAutomaton {
    /// State id for (base-state tuple, top element).
    pub fn state(&self, tuple: &[usize], t: usize) -> StateId {
        let n = self.top.len();
        StateId(index(tuple, self.base.state_count()) * n + t)
    }

    /// Symbol id for (base-symbol tuple, top element).
    pub fn symbol(&self, tuple: &[usize], b: usize) -> SymbolId {
        let n = self.top.len();
        SymbolId(index(tuple, self.base.alphabet_len()) * n + b)
    }
}

/// Build the automaton whose semigroup is the wreath product of the base
/// monoid with the finite monoid `top`.
///
/// States are pairs of a tuple over the base states (one slot per top
/// element, the slot order following the table order of `top`) and a top
/// element; symbols likewise. Reading `(a, b)` in state `(s, t)` permutes
/// the tuple by right multiplication of the slot indices with `b`, acts
/// componentwise, resets the top part of the state to the identity and
/// multiplies the output's top part on the left of `t`.
pub fn wreath_product(
    base_in: &MealyAutomaton,
    identity: Option<StateId>,
    top: &FiniteSemigroup,
) -> Result<WreathAutomaton, ConstructionError> {
    let Some(one_t) = top.right_zeros_and_identity().1 else {
        return Err(ConstructionError::NotAMonoid);
    };
    let (base, identity, identity_adjoined) = match identity {
        Some(q) => (base_in.clone(), q, false),
        None => {
            let extended = adjoin_identity(base_in);
            let q = StateId(extended.state_count() - 1);
            (extended, q, true)
        }
    };

    let n = top.len();
    let (nq, nb) = (base.state_count(), base.alphabet_len());
    let states = tuple_pair_names(&base.states, top.names(), n);
    let alphabet = tuple_pair_names(&base.alphabet, top.names(), n);

    let automaton = MealyAutomaton::build(states, alphabet, |state, sym| {
        let (s_flat, t) = (state / n, state % n);
        let (a_flat, b) = (sym / n, sym % n);
        let s = digits(s_flat, nq, n);
        let a = digits(a_flat, nb, n);
        // s^b: slot i picks the slot indexed by (element_i * b)
        let twisted: Vec<usize> = (0..n).map(|i| s[top.product(i, b)]).collect();
        let mut next = Vec::with_capacity(n);
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            next.push(base.next(StateId(twisted[i]), SymbolId(a[i])).0);
            out.push(base.out(StateId(twisted[i]), SymbolId(a[i])).0);
        }
        let next_id = index(&next, nq) * n + one_t;
        let out_id = index(&out, nb) * n + top.product(b, t);
        (next_id, out_id)
    });

    Ok(WreathAutomaton { automaton, base, identity, identity_adjoined, top: top.clone() })
}

fn tuple_pair_names(base: &[String], top: &[String], n: usize) -> Vec<String> {
    let mut tuples = vec![String::new()];
    for _ in 0..n {
        tuples = tuples
            .iter()
            .flat_map(|prefix| {
                base.iter().map(move |b| {
                    if prefix.is_empty() {
                        b.clone()
                    } else {
                        format!("{prefix},{b}")
                    }
                })
            })
            .collect();
    }
    let mut names = Vec::with_capacity(tuples.len() * n);
    for tuple in &tuples {
        for t in top {
            names.push(format!("(({tuple}),{t})"));
        }
    }
    names
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::cyclic2;
    use crate::instances::fig_wreath_base;
    use crate::mealy::Word;
    use crate::word_problem::equal;

    fn c2_named() -> FiniteSemigroup {
        FiniteSemigroup::from_fn(vec!["e".into(), "c".into()], |x, y| x ^ y)
    }

    #[test]
    fn figure_edges_from_the_formula() {
        let base = fig_wreath_base();
        let w = wreath_product(&base, base.state_id("a"), &c2_named()).unwrap();
        assert!(w.automaton.validate().is_empty());
        assert_eq!(w.automaton.state_count(), 8);
        assert!(!w.identity_adjoined);
        let aut = &w.automaton;
        // ((a,b),e) reading ((0,1),e) -> ((a,a),e), output ((0,0),e)
        let from = w.state(&[0, 1], 0);
        let sym = w.symbol(&[0, 1], 0);
        assert_eq!(aut.next(from, sym), w.state(&[0, 0], 0));
        assert_eq!(aut.out(from, sym), w.symbol(&[0, 0], 0));
        // ((b,b),c) reading ((0,0),e) -> ((b,b),e), output ((0,0),c)
        let from = w.state(&[1, 1], 1);
        let sym = w.symbol(&[0, 0], 0);
        assert_eq!(aut.next(from, sym), w.state(&[1, 1], 0));
        assert_eq!(aut.out(from, sym), w.symbol(&[0, 0], 1));
    }

    #[test]
    fn twist_squares_to_identity() {
        let base = fig_wreath_base();
        let w = wreath_product(&base, base.state_id("a"), &c2_named()).unwrap();
        let twisted = Word::single(w.state(&[0, 0], 1));
        let id = Word::single(w.state(&[0, 0], 0));
        assert!(equal(&w.automaton, &twisted.power(2), &id).equal);
    }

    #[test]
    fn non_monoid_top_is_rejected() {
        let base = fig_wreath_base();
        let rz = crate::algebra::right_zero_semigroup(&["p", "q"]);
        assert!(matches!(
            wreath_product(&base, base.state_id("a"), &rz),
            Err(ConstructionError::NotAMonoid)
        ));
        assert!(wreath_product(&base, base.state_id("a"), &cyclic2()).is_ok());
    }

    #[test]
    fn missing_identity_state_is_adjoined() {
        // Strip the identity: a base with only the b state is the free
        // semigroup on one generator, no identity element.
        let no_id = MealyAutomaton::build(
            vec!["b".into()],
            vec!["0".into(), "1".into()],
            |_, b| if b == 0 { (0, 0) } else { (0, 0) },
        );
        let w = wreath_product(&no_id, None, &c2_named()).unwrap();
        assert!(w.identity_adjoined);
        assert_eq!(w.base.state_count(), 2);
        assert_eq!(w.automaton.state_count(), 4 * 2);
    }
}
