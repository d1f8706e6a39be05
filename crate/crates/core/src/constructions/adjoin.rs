//! Adjoining an identity or a zero to the generated semigroup.

use super::fresh_name;
use crate::mealy::MealyAutomaton;

/// Add a state acting as the identity endomorphism: it copies every symbol
/// and recurses to itself. Existing transitions are untouched.
pub fn adjoin_identity(aut: &MealyAutomaton) -> MealyAutomaton {
    let one = fresh_name("1", &aut.states);
    let mut states = aut.states.clone();
    states.push(one);
    let id_state = states.len() - 1;
    MealyAutomaton::build(states, aut.alphabet.clone(), |q, b| {
        if q == id_state {
            (id_state, b)
        } else {
            (
                aut.next(crate::mealy::StateId(q), crate::mealy::SymbolId(b)).0,
                aut.out(crate::mealy::StateId(q), crate::mealy::SymbolId(b)).0,
            )
        }
    })
}

/// Add a zero: a fresh symbol that every old state ignores-and-copies, and a
/// fresh state that maps every symbol to the fresh one and sinks into
/// itself. The new state is an absorbing zero of the generated semigroup.
pub fn adjoin_zero(aut: &MealyAutomaton) -> MealyAutomaton {
    let zero_sym = fresh_name("0^", &aut.alphabet);
    let zero_state = fresh_name("z", &aut.states);
    let mut states = aut.states.clone();
    states.push(zero_state);
    let mut alphabet = aut.alphabet.clone();
    alphabet.push(zero_sym);
    let (z, zs) = (states.len() - 1, alphabet.len() - 1);
    MealyAutomaton::build(states, alphabet, |q, b| {
        if q == z {
            (z, zs)
        } else if b == zs {
            (q, zs)
        } else {
            (
                aut.next(crate::mealy::StateId(q), crate::mealy::SymbolId(b)).0,
                aut.out(crate::mealy::StateId(q), crate::mealy::SymbolId(b)).0,
            )
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::fig_wreath_base;
    use crate::mealy::Word;
    use crate::word_problem::{ball, equal, is_zero_element};

    #[test]
    fn adjoined_identity_acts_as_identity() {
        let aut = adjoin_identity(&fig_wreath_base());
        assert_eq!(aut.state_count(), 3);
        assert!(aut.validate().is_empty());
        let one = Word::single(aut.state_id("1").unwrap());
        for q in aut.state_ids() {
            let g = Word::single(q);
            assert!(equal(&aut, &one.concat(&g), &g).equal);
            assert!(equal(&aut, &g.concat(&one), &g).equal);
        }
    }

    #[test]
    fn adjoined_identity_merges_with_an_existing_one() {
        // a already acts as the identity, so the ball does not grow.
        let base = fig_wreath_base();
        let extended = adjoin_identity(&base);
        assert_eq!(ball(&base, 2).element_count(), ball(&extended, 2).element_count());
    }

    #[test]
    fn adjoined_zero_is_a_zero() {
        let aut = adjoin_zero(&fig_wreath_base());
        assert!(aut.validate().is_empty());
        let z = aut.state_id("z").unwrap();
        assert!(is_zero_element(&aut, &Word::single(z)));
    }

    #[test]
    fn zero_state_blanks_the_string() {
        let aut = adjoin_zero(&fig_wreath_base());
        let z = Word::single(aut.state_id("z").unwrap());
        let input = aut.symbols_from_names(["0", "1"]).unwrap();
        let blank = aut.symbols_from_names(["0^", "0^"]).unwrap();
        assert_eq!(aut.act(&z, &input), blank);
    }

    #[test]
    fn old_equalities_are_preserved() {
        let base = fig_wreath_base();
        let extended = adjoin_zero(&base);
        let words: Vec<Vec<usize>> =
            vec![vec![0], vec![1], vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]];
        for u in &words {
            for v in &words {
                let wu = Word::new(u.iter().map(|&q| crate::mealy::StateId(q)).collect()).unwrap();
                let wv = Word::new(v.iter().map(|&q| crate::mealy::StateId(q)).collect()).unwrap();
                assert_eq!(equal(&base, &wu, &wv).equal, equal(&extended, &wu, &wv).equal);
            }
        }
    }
}
