//! Isomorphism of automata: a pair of bijections on states and symbols
//! commuting with both transition tables.

use super::{MealyAutomaton, StateId, SymbolId};

/// Witnessing bijections: `state_map[q]` is the image of state `q` and
/// `symbol_map[b]` the image of symbol `b`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Isomorphism {
    pub state_map: Vec<StateId>,
    pub symbol_map: Vec<SymbolId>,
}

/// Search for an isomorphism from `a1` to `a2`.
///
/// Candidates are cut down by jointly refining state and symbol colours
/// (a Weisfeiler-Leman style pass over the two tables), then resolved by
/// deterministic backtracking with constraint propagation. Shared names are
/// used only to order candidates, never to exclude a structural match.
pub fn isomorphic(a1: &MealyAutomaton, a2: &MealyAutomaton) -> Option<Isomorphism> {
    if a1.state_count() != a2.state_count() || a1.alphabet_len() != a2.alphabet_len() {
        return None;
    }
    let colors = refine_colors(a1, a2);

    let mut search = Search {
        a1,
        a2,
        colors,
        state_map: vec![None; a1.state_count()],
        state_used: vec![false; a2.state_count()],
        symbol_map: vec![None; a1.alphabet_len()],
        symbol_used: vec![false; a2.alphabet_len()],
    };
    if search.assign_states(0) {
        Some(Isomorphism {
            state_map: search.state_map.into_iter().map(Option::unwrap).collect(),
            symbol_map: search.symbol_map.into_iter().map(Option::unwrap).collect(),
        })
    } else {
        None
    }
}

struct Colors {
    s1: Vec<u64>,
    s2: Vec<u64>,
    b1: Vec<u64>,
    b2: Vec<u64>,
}

/// Mutually refine state and symbol colours of both automata until stable.
/// Isomorphic images necessarily share a colour.
fn refine_colors(a1: &MealyAutomaton, a2: &MealyAutomaton) -> Colors {
    let (nq, nb) = (a1.state_count(), a1.alphabet_len());
    let mut c = Colors {
        s1: vec![0; nq],
        s2: vec![0; nq],
        b1: vec![0; nb],
        b2: vec![0; nb],
    };
    for _ in 0..nq + nb + 2 {
        let mut interner: Vec<Vec<(u64, u64, u64, bool, bool)>> = Vec::new();
        let mut next_states = |aut: &MealyAutomaton, sc: &[u64], bc: &[u64]| -> Vec<u64> {
            (0..nq)
                .map(|q| {
                    let mut sig: Vec<(u64, u64, u64, bool, bool)> = (0..nb)
                        .map(|b| {
                            let r = aut.next(StateId(q), SymbolId(b));
                            let o = aut.out(StateId(q), SymbolId(b));
                            (bc[b], sc[r.0], bc[o.0], r.0 == q, o.0 == b)
                        })
                        .collect();
                    sig.sort_unstable();
                    sig.insert(0, (sc[q], 0, 0, false, false));
                    intern(&mut interner, sig)
                })
                .collect()
        };
        let s1 = next_states(a1, &c.s1, &c.b1);
        let s2 = next_states(a2, &c.s2, &c.b2);

        let mut interner2: Vec<Vec<(u64, u64, u64, bool, bool)>> = Vec::new();
        let mut next_symbols = |aut: &MealyAutomaton, sc: &[u64], bc: &[u64]| -> Vec<u64> {
            (0..nb)
                .map(|b| {
                    let mut sig: Vec<(u64, u64, u64, bool, bool)> = (0..nq)
                        .map(|q| {
                            let r = aut.next(StateId(q), SymbolId(b));
                            let o = aut.out(StateId(q), SymbolId(b));
                            (sc[q], sc[r.0], bc[o.0], r.0 == q, o.0 == b)
                        })
                        .collect();
                    sig.sort_unstable();
                    sig.insert(0, (bc[b], 0, 0, false, false));
                    intern(&mut interner2, sig)
                })
                .collect()
        };
        let b1 = next_symbols(a1, &s1, &c.b1);
        let b2 = next_symbols(a2, &s2, &c.b2);

        let stable = s1 == c.s1 && s2 == c.s2 && b1 == c.b1 && b2 == c.b2;
        c = Colors { s1, s2, b1, b2 };
        if stable {
            break;
        }
    }
    c
}

fn intern(table: &mut Vec<Vec<(u64, u64, u64, bool, bool)>>, sig: Vec<(u64, u64, u64, bool, bool)>) -> u64 {
    match table.iter().position(|t| *t == sig) {
        Some(i) => i as u64,
        None => {
            table.push(sig);
            (table.len() - 1) as u64
        }
    }
}

struct Search<'a> {
    a1: &'a MealyAutomaton,
    a2: &'a MealyAutomaton,
    colors: Colors,
    state_map: Vec<Option<StateId>>,
    state_used: Vec<bool>,
    symbol_map: Vec<Option<SymbolId>>,
    symbol_used: Vec<bool>,
}

impl Search<'_> {
    fn assign_states(&mut self, q: usize) -> bool {
        if q == self.a1.state_count() {
            return self.assign_symbols(0);
        }
        for r in self.candidate_order_states(q) {
            if self.state_used[r] || self.colors.s1[q] != self.colors.s2[r] {
                continue;
            }
            self.state_map[q] = Some(StateId(r));
            self.state_used[r] = true;
            if self.states_consistent(q) && self.assign_states(q + 1) {
                return true;
            }
            self.state_map[q] = None;
            self.state_used[r] = false;
        }
        false
    }

    /// Prefer the same-named state when both sides have it; otherwise plain
    /// ascending order. Purely an ordering heuristic.
    fn candidate_order_states(&self, q: usize) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.a2.state_count()).collect();
        if let Some(anchor) = self.a2.state_id(self.a1.state_name(StateId(q))) {
            order.retain(|&r| r != anchor.0);
            order.insert(0, anchor.0);
        }
        order
    }

    /// Transition targets between already-mapped states must correspond for
    /// some symbol matching; here we only check the multiset of reachable
    /// mapped targets per state pair, deferring exact checks to symbols.
    fn states_consistent(&self, upto: usize) -> bool {
        let nb = self.a1.alphabet_len();
        for q in 0..=upto {
            let Some(r) = self.state_map[q] else { continue };
            let mut t1: Vec<u64> = (0..nb)
                .filter_map(|b| {
                    let target = self.a1.next(StateId(q), SymbolId(b));
                    self.state_map.get(target.0).copied().flatten().map(|m| {
                        (m.0 as u64) << 32 | self.colors.b1[b]
                    })
                })
                .collect();
            let mut t2: Vec<u64> = (0..nb)
                .filter_map(|b| {
                    let target = self.a2.next(r, SymbolId(b));
                    if self.state_used[target.0] {
                        Some((target.0 as u64) << 32 | self.colors.b2[b])
                    } else {
                        None
                    }
                })
                .collect();
            t1.sort_unstable();
            t2.sort_unstable();
            // Mapped targets on side 1 must be matchable on side 2; when all
            // states are mapped the two multisets must agree exactly.
            if self.state_map.iter().all(Option::is_some) && t1 != t2 {
                return false;
            }
        }
        true
    }

    fn assign_symbols(&mut self, b: usize) -> bool {
        if b == self.a1.alphabet_len() {
            return self.full_check();
        }
        for c in self.candidate_order_symbols(b) {
            if self.symbol_used[c] || self.colors.b1[b] != self.colors.b2[c] {
                continue;
            }
            if !self.symbol_fits(b, c) {
                continue;
            }
            self.symbol_map[b] = Some(SymbolId(c));
            self.symbol_used[c] = true;
            if self.symbols_consistent() && self.assign_symbols(b + 1) {
                return true;
            }
            self.symbol_map[b] = None;
            self.symbol_used[c] = false;
        }
        false
    }

    fn candidate_order_symbols(&self, b: usize) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.a2.alphabet_len()).collect();
        if let Some(anchor) = self.a2.symbol_id(self.a1.symbol_name(SymbolId(b))) {
            order.retain(|&c| c != anchor.0);
            order.insert(0, anchor.0);
        }
        order
    }

    /// With all states fixed, `b -> c` must satisfy the next-table equation
    /// for every state; the out-table is checked where the image is mapped.
    fn symbol_fits(&self, b: usize, c: usize) -> bool {
        for q in 0..self.a1.state_count() {
            let r = self.state_map[q].unwrap();
            if self.state_map[self.a1.next(StateId(q), SymbolId(b)).0].unwrap()
                != self.a2.next(r, SymbolId(c))
            {
                return false;
            }
            let o1 = self.a1.out(StateId(q), SymbolId(b));
            let o2 = self.a2.out(r, SymbolId(c));
            if let Some(mapped) = self.symbol_map[o1.0] {
                if mapped != o2 {
                    return false;
                }
            }
        }
        true
    }

    fn symbols_consistent(&self) -> bool {
        for q in 0..self.a1.state_count() {
            let r = self.state_map[q].unwrap();
            for b in 0..self.a1.alphabet_len() {
                let Some(c) = self.symbol_map[b] else { continue };
                let o1 = self.a1.out(StateId(q), SymbolId(b));
                let o2 = self.a2.out(r, c);
                match self.symbol_map[o1.0] {
                    Some(mapped) if mapped != o2 => return false,
                    None if self.symbol_used[o2.0] => return false,
                    _ => {}
                }
            }
        }
        true
    }

    fn full_check(&self) -> bool {
        for q in 0..self.a1.state_count() {
            let r = self.state_map[q].unwrap();
            for b in 0..self.a1.alphabet_len() {
                let c = self.symbol_map[b].unwrap();
                if self.state_map[self.a1.next(StateId(q), SymbolId(b)).0].unwrap()
                    != self.a2.next(r, c)
                    || self.symbol_map[self.a1.out(StateId(q), SymbolId(b)).0].unwrap()
                        != self.a2.out(r, c)
                {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::fig_wreath_base;
    use crate::mealy::minimize;

    #[test]
    fn renamed_automaton_is_isomorphic() {
        let aut = fig_wreath_base();
        let mut renamed = aut.clone();
        renamed.states = vec!["x".into(), "y".into()];
        let iso = isomorphic(&aut, &renamed).expect("renaming is an isomorphism");
        assert_eq!(iso.state_map, vec![StateId(0), StateId(1)]);
    }

    #[test]
    fn minimality_gives_isomorphic_quotient() {
        let aut = fig_wreath_base();
        let min = minimize(&aut);
        assert!(isomorphic(&aut, &min.automaton).is_some());
    }

    #[test]
    fn swapped_outputs_are_not_isomorphic() {
        let aut = fig_wreath_base();
        // Same shape, but b outputs 1 on everything: 0|1 loop, 1|1 to a.
        let tweaked = MealyAutomaton::build(
            vec!["a".into(), "b".into()],
            vec!["0".into(), "1".into()],
            |q, b| match (q, b) {
                (0, b) => (0, b),
                (1, 0) => (1, 1),
                (1, _) => (0, 1),
            },
        );
        assert!(isomorphic(&aut, &tweaked).is_none());
    }

    #[test]
    fn permuted_tables_are_isomorphic() {
        let aut = fig_wreath_base();
        // Reverse both state and symbol order.
        let permuted = MealyAutomaton::build(
            vec!["b'".into(), "a'".into()],
            vec!["1'".into(), "0'".into()],
            |q, b| {
                let r = aut.next(StateId(1 - q), SymbolId(1 - b));
                let o = aut.out(StateId(1 - q), SymbolId(1 - b));
                (1 - r.0, 1 - o.0)
            },
        );
        let iso = isomorphic(&aut, &permuted).expect("permutation is an isomorphism");
        assert_eq!(iso.state_map, vec![StateId(1), StateId(0)]);
        assert_eq!(iso.symbol_map, vec![SymbolId(1), SymbolId(0)]);
    }
}
