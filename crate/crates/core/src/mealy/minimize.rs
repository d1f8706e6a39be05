//! Behavioural-equivalence quotient by partition refinement.

use super::{MealyAutomaton, StateId};

/// Result of [`minimize`]: the quotient automaton and, per original state,
/// the index of its class in the quotient.
#[derive(Clone, Debug)]
pub struct Minimized {
    pub automaton: MealyAutomaton,
    pub class_of: Vec<usize>,
}

/// Merge states that are behaviourally equivalent: same outputs and, class
/// by class, same successors. Classes are refined from the output rows to a
/// fixpoint. Class indices are ordered by least member state, so the result
/// is independent of hash iteration order.
pub fn minimize(aut: &MealyAutomaton) -> Minimized {
    let nb = aut.alphabet_len();
    let mut class_of: Vec<usize> = signature_classes(aut.state_count(), |q| {
        (0..nb).map(|b| aut.out(StateId(q), super::SymbolId(b)).0).collect()
    });

    loop {
        let prev = class_of.clone();
        class_of = signature_classes(aut.state_count(), |q| {
            let mut sig = Vec::with_capacity(nb + 1);
            sig.push(prev[q]);
            sig.extend((0..nb).map(|b| prev[aut.next(StateId(q), super::SymbolId(b)).0]));
            sig
        });
        if class_of == prev {
            break;
        }
    }

    let mut reps: Vec<usize> = Vec::new();
    for q in 0..aut.state_count() {
        if class_of[q] == reps.len() {
            reps.push(q);
        }
    }
    let states = reps.iter().map(|&q| aut.states[q].clone()).collect();
    let automaton = MealyAutomaton::build(states, aut.alphabet.clone(), |c, b| {
        let q = StateId(reps[c]);
        let b = super::SymbolId(b);
        (class_of[aut.next(q, b).0], aut.out(q, b).0)
    });
    Minimized { automaton, class_of }
}

/// Group 0..n by signature; class indices follow first appearance.
fn signature_classes<F>(n: usize, mut sig: F) -> Vec<usize>
where
    F: FnMut(usize) -> Vec<usize>,
{
    let mut seen: Vec<(Vec<usize>, usize)> = Vec::new();
    let mut classes = Vec::with_capacity(n);
    for q in 0..n {
        let s = sig(q);
        match seen.iter().find(|(t, _)| *t == s) {
            Some(&(_, c)) => classes.push(c),
            None => {
                let c = seen.len();
                seen.push((s, c));
                classes.push(c);
            }
        }
    }
    classes
}
