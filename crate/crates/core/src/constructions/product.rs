//! Direct products and powers, acting componentwise.

use crate::mealy::{MealyAutomaton, StateId, SymbolId};

/// The componentwise product of two automata: states and symbols are pairs
/// named `(p,q)`, and both tables act coordinate by coordinate.
pub fn direct_product(a1: &MealyAutomaton, a2: &MealyAutomaton) -> MealyAutomaton {
    let states = pair_names(&a1.states, &a2.states);
    let alphabet = pair_names(&a1.alphabet, &a2.alphabet);
    let (n2, b2) = (a2.state_count(), a2.alphabet_len());
    MealyAutomaton::build(states, alphabet, |q, b| {
        let (q1, q2) = (StateId(q / n2), StateId(q % n2));
        let (c1, c2) = (SymbolId(b / b2), SymbolId(b % b2));
        let next = a1.next(q1, c1).0 * n2 + a2.next(q2, c2).0;
        let out = a1.out(q1, c1).0 * b2 + a2.out(q2, c2).0;
        (next, out)
    })
}

/// The `n`-fold power with flat tuple names `(x,y,...)`; `n = 1` returns the
/// automaton unchanged. Agrees with iterating [`direct_product`] up to
/// isomorphism.
pub fn direct_power(aut: &MealyAutomaton, n: usize) -> MealyAutomaton {
    assert!(n >= 1, "power must be at least 1");
    if n == 1 {
        return aut.clone();
    }
    let states = tuple_names(&aut.states, n);
    let alphabet = tuple_names(&aut.alphabet, n);
    let (nq, nb) = (aut.state_count(), aut.alphabet_len());
    MealyAutomaton::build(states, alphabet, |q, b| {
        let qs = digits(q, nq, n);
        let bs = digits(b, nb, n);
        let mut next = 0;
        let mut out = 0;
        for i in 0..n {
            next = next * nq + aut.next(StateId(qs[i]), SymbolId(bs[i])).0;
            out = out * nb + aut.out(StateId(qs[i]), SymbolId(bs[i])).0;
        }
        (next, out)
    })
}

fn pair_names(left: &[String], right: &[String]) -> Vec<String> {
    let mut names = Vec::with_capacity(left.len() * right.len());
    for l in left {
        for r in right {
            names.push(format!("({l},{r})"));
        }
    }
    names
}

fn tuple_names(base: &[String], n: usize) -> Vec<String> {
    let mut names = vec![String::new()];
    for _ in 0..n {
        names = names
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
    names.into_iter().map(|n| format!("({n})")).collect()
}

/// Mixed-radix digits of `value`, most significant first.
pub(crate) fn digits(value: usize, base: usize, n: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    let mut v = value;
    for i in (0..n).rev() {
        out[i] = v % base;
        v /= base;
    }
    out
}

/// Flat index of mixed-radix digits, most significant first.
pub(crate) fn index(digits: &[usize], base: usize) -> usize {
    digits.iter().fold(0, |acc, &d| acc * base + d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::fig_wreath_base;
    use crate::mealy::{isomorphic, Word};
    use crate::word_problem::{ball, equal};
    use std::collections::BTreeSet;

    #[test]
    fn componentwise_action() {
        let base = fig_wreath_base();
        let squared = direct_power(&base, 2);
        let w = squared.word_from_names(["(b,a)"]).unwrap().unwrap();
        let input = squared.symbols_from_names(["(1,1)"]).unwrap();
        assert_eq!(squared.act(&w, &input), squared.symbols_from_names(["(0,1)"]).unwrap());
    }

    #[test]
    fn identity_pair_acts_as_identity() {
        let base = fig_wreath_base();
        let squared = direct_power(&base, 2);
        let id = squared.word_from_names(["(a,a)"]).unwrap().unwrap();
        for g in squared.state_ids() {
            let g = Word::single(g);
            assert!(equal(&squared, &id.concat(&g), &g).equal);
        }
    }

    #[test]
    fn power_two_matches_product_with_itself() {
        let base = fig_wreath_base();
        assert!(isomorphic(&direct_power(&base, 2), &direct_product(&base, &base)).is_some());
    }

    #[test]
    fn squared_counter_ball_matches_pair_arithmetic() {
        // Oracle: pairs of naturals under componentwise addition, generated
        // by (0,0), (0,1), (1,0), (1,1).
        let generators = [(0u64, 0u64), (0, 1), (1, 0), (1, 1)];
        let mut reachable: BTreeSet<(u64, u64)> = generators.iter().copied().collect();
        let count_radius_1 = reachable.len();
        for g in generators {
            for h in generators {
                reachable.insert((g.0 + h.0, g.1 + h.1));
            }
        }
        let expected_total = reachable.len();
        assert_eq!((count_radius_1, expected_total), (4, 9));

        let squared = direct_power(&fig_wreath_base(), 2);
        let ball = ball(&squared, 2);
        assert_eq!(ball.growth, vec![4, 5]);
        assert_eq!(ball.element_count(), expected_total);
    }
}
