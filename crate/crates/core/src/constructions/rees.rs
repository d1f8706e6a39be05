//! Rees matrix semigroups over an automaton monoid.

use super::{fresh_name, ConstructionError};
use crate::mealy::{MealyAutomaton, StateId, SymbolId, Word};
use crate::word_problem::equal;

/// Parameters of the Rees matrix construction: a base automaton for the
/// monoid with its identity state, finite index ranges, a sandwich matrix of
/// states (rows indexed by the Lambda range, columns by the I range), and a
/// table of claimed left multiplications entry * state -> state.
#[derive(Clone, Debug)]
pub struct ReesSpec {
    pub base: MealyAutomaton,
    pub identity: StateId,
    pub i_count: usize,
    pub lambda_count: usize,
    /// `entries[lambda][i]` is the matrix entry as a base state.
    pub entries: Vec<Vec<StateId>>,
    /// Claims `(entry state, state) -> state`, each verified by the word
    /// problem before the automaton is emitted.
    pub left_mult: Vec<((StateId, StateId), StateId)>,
}

/// The built automaton plus its index layout: states are triples
/// `(i, base state, lambda)`.
#[derive(Clone, Debug)]
pub struct ReesAutomaton {
    pub automaton: MealyAutomaton,
    pub base: MealyAutomaton,
    pub i_count: usize,
    pub lambda_count: usize,
}

impl ReesAutomaton {
    pub fn state(&self, i: usize, x: StateId, lambda: usize) -> StateId {
        let per_i = self.base.state_count() * self.lambda_count;
        StateId(i * per_i + x.0 * self.lambda_count + lambda)
    }

    /// Symbol id of a base symbol (they come first in the alphabet).
    pub fn base_symbol(&self, a: SymbolId) -> SymbolId {
        a
    }

    /// Symbol id of the pair `(i, lambda)`; `None` in the first slot is the
    /// identity tag.
    pub fn pair_symbol(&self, i: Option<usize>, lambda: usize) -> SymbolId {
        let base = self.base.alphabet_len();
        let row = match i {
            None => 0,
            Some(i) => i + 1,
        };
        SymbolId(base + row * self.lambda_count + lambda)
    }
}

/// Build the Rees matrix automaton. The matrix must contain the identity
/// state, and all claimed left multiplications are verified with the word
/// problem; unlisted products that the construction needs are an error.
pub fn rees_matrix(spec: &ReesSpec) -> Result<ReesAutomaton, ConstructionError> {
    let base = &spec.base;
    if !spec.entries.iter().flatten().any(|&p| p == spec.identity) {
        return Err(ConstructionError::NoIdentityEntry);
    }
    for &((p, x), y) in &spec.left_mult {
        let claim = Word::new(vec![p, x]).unwrap();
        if !equal(base, &claim, &Word::single(y)).equal {
            return Err(ConstructionError::LeftMultClaimFailed {
                p: base.state_name(p).to_string(),
                x: base.state_name(x).to_string(),
                y: base.state_name(y).to_string(),
            });
        }
    }
    let lookup = |p: StateId, x: StateId| -> Result<StateId, ConstructionError> {
        if p == spec.identity {
            return Ok(x);
        }
        spec.left_mult
            .iter()
            .find(|&&((cp, cx), _)| cp == p && cx == x)
            .map(|&(_, y)| y)
            .ok_or_else(|| ConstructionError::LeftMultClaimMissing {
                p: base.state_name(p).to_string(),
                x: base.state_name(x).to_string(),
            })
    };

    let nl = spec.lambda_count;
    let ni = spec.i_count;
    let nx = base.state_count();

    let mut states = Vec::with_capacity(ni * nx * nl);
    for i in 0..ni {
        for x in 0..nx {
            for l in 0..nl {
                states.push(format!("({},{},{})", i + 1, base.states[x], l + 1));
            }
        }
    }
    let e_tag = fresh_name("e", &base.alphabet);
    let mut alphabet = base.alphabet.clone();
    for row in 0..=ni {
        for l in 0..nl {
            if row == 0 {
                alphabet.push(format!("({},{})", e_tag, l + 1));
            } else {
                alphabet.push(format!("({},{})", row, l + 1));
            }
        }
    }

    // Precompute all transitions; the closure form would need fallible
    // lookups, so fill tables directly and fail before building.
    let nb = alphabet.len();
    let base_syms = base.alphabet_len();
    let mut next = vec![0usize; states.len() * nb];
    let mut out = vec![0usize; states.len() * nb];
    for i in 0..ni {
        for x in 0..nx {
            for l in 0..nl {
                let q = (i * nx + x) * nl + l;
                for c in 0..nb {
                    let (r, o) = if c < base_syms {
                        // base symbol a: act in the base, park at (1, _, 1)
                        let a = SymbolId(c);
                        let target = base.next(StateId(x), a);
                        ((target.0) * nl, base.out(StateId(x), a).0)
                    } else {
                        let pair = c - base_syms;
                        let (row, lam) = (pair / nl, pair % nl);
                        if row == 0 {
                            // identity tag: output (i, mu), reset to (1, x, 1)
                            (x * nl, base_syms + (i + 1) * nl + l)
                        } else {
                            // the sandwich entry pairs the symbol's lambda
                            // with the state's own I-index
                            let p = spec.entries[lam][i];
                            let y = lookup(p, StateId(x))?;
                            (y.0 * nl, base_syms + row * nl + l)
                        }
                    };
                    next[q * nb + c] = r;
                    out[q * nb + c] = o;
                }
            }
        }
    }

    let automaton = MealyAutomaton {
        states,
        alphabet,
        next: next.into_iter().map(StateId).collect(),
        out: out.into_iter().map(SymbolId).collect(),
    };
    debug_assert!(automaton.validate().is_empty());
    Ok(ReesAutomaton {
        automaton,
        base: base.clone(),
        i_count: ni,
        lambda_count: nl,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{fig_rees_base, fig_rees_spec};

    #[test]
    fn figure_instance_builds_and_validates() {
        let built = rees_matrix(&fig_rees_spec()).unwrap();
        assert_eq!(built.automaton.state_count(), 12);
        assert_eq!(built.automaton.alphabet_len(), 2 + 6);
        assert!(built.automaton.validate().is_empty());
    }

    #[test]
    fn identity_tag_loops_at_one_b_one() {
        let built = rees_matrix(&fig_rees_spec()).unwrap();
        let base = fig_rees_base();
        let b = base.state_id("b").unwrap();
        let q = built.state(0, b, 0);
        for lambda in 0..2 {
            let sym = built.pair_symbol(None, lambda);
            assert_eq!(built.automaton.next(q, sym), q);
            assert_eq!(built.automaton.out(q, sym), built.pair_symbol(Some(0), 0));
        }
    }

    #[test]
    fn zero_row_collapses_the_middle() {
        let built = rees_matrix(&fig_rees_spec()).unwrap();
        let base = fig_rees_base();
        let b = base.state_id("b").unwrap();
        let zero = base.state_id("0").unwrap();
        let q = built.state(0, b, 0);
        for i in 0..2 {
            // lambda = 2 row of the sandwich matrix is all zero
            let sym = built.pair_symbol(Some(i), 1);
            assert_eq!(built.automaton.next(q, sym), built.state(0, zero, 0));
            assert_eq!(built.automaton.out(q, sym), built.pair_symbol(Some(i), 0));
        }
    }

    #[test]
    fn bad_left_mult_claim_is_rejected() {
        let mut spec = fig_rees_spec();
        let base = &spec.base;
        let a = base.state_id("a").unwrap();
        let b = base.state_id("b").unwrap();
        spec.left_mult.push(((a, b), a));
        assert!(matches!(
            rees_matrix(&spec),
            Err(ConstructionError::LeftMultClaimFailed { .. })
        ));
    }

    #[test]
    fn matrix_without_identity_is_rejected() {
        let mut spec = fig_rees_spec();
        let zero = spec.base.state_id("0").unwrap();
        for row in &mut spec.entries {
            for entry in row {
                *entry = zero;
            }
        }
        assert!(matches!(rees_matrix(&spec), Err(ConstructionError::NoIdentityEntry)));
    }
}
