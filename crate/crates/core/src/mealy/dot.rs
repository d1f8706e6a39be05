//! Graphviz rendering of an automaton in the usual `in|out` edge style.

use super::MealyAutomaton;
use std::fmt::Write;

/// Render as a DOT digraph: one node per state, one edge per (state, symbol)
/// labelled `in|out`, emitted in (state id, symbol id) order.
pub fn export_dot(aut: &MealyAutomaton) -> String {
    let mut s = String::new();
    s.push_str("digraph mealy {\n    rankdir=LR;\n    node [shape=circle];\n");
    for q in aut.state_ids() {
        let _ = writeln!(s, "    q{} [label={:?}];", q.0, aut.state_name(q));
    }
    for q in aut.state_ids() {
        for b in aut.symbol_ids() {
            let _ = writeln!(
                s,
                "    q{} -> q{} [label=\"{}|{}\"];",
                q.0,
                aut.next(q, b).0,
                escape(aut.symbol_name(b)),
                escape(aut.symbol_name(aut.out(q, b)))
            );
        }
    }
    s.push_str("}\n");
    s
}

fn escape(token: &str) -> String {
    token.replace('\\', "\\\\").replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::fig_wreath_base;

    #[test]
    fn two_nodes_four_edges() {
        let dot = export_dot(&fig_wreath_base());
        let edges = dot.lines().filter(|l| l.contains(" -> ")).count();
        let nodes = dot.lines().filter(|l| l.contains("[label=") && !l.contains(" -> ")).count();
        assert_eq!((nodes, edges), (2, 4));
        assert!(dot.contains("q1 -> q0 [label=\"1|0\"]"));
    }

    #[test]
    fn export_is_deterministic() {
        let aut = fig_wreath_base();
        assert_eq!(export_dot(&aut), export_dot(&aut));
    }
}
