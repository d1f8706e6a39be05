//! Worked instances used across the test suites and the oracle
//! cross-checks: the small automata from the literature's standard diagrams,
//! transcribed by hand, plus the parameter bundles that rebuild them.

use crate::algebra::{semilattice_et, FiniteSemigroup, GeneratorHom};
use crate::constructions::{ActExtensionSpec, ReesSpec, SemilatticeSpec};
use crate::mealy::MealyAutomaton;

fn from_edges(
    states: &[&str],
    alphabet: &[&str],
    edges: &[(&str, &str, &str, &str)],
) -> MealyAutomaton {
    let states: Vec<String> = states.iter().map(|s| s.to_string()).collect();
    let alphabet: Vec<String> = alphabet.iter().map(|s| s.to_string()).collect();
    assert_eq!(edges.len(), states.len() * alphabet.len(), "total transition table");
    let find = |v: &[String], name: &str| v.iter().position(|s| s == name).unwrap_or_else(|| panic!("unknown token {name}"));
    let mut next = vec![usize::MAX; edges.len()];
    let mut out = vec![usize::MAX; edges.len()];
    for &(q, b, r, o) in edges {
        let cell = find(&states, q) * alphabet.len() + find(&alphabet, b);
        assert_eq!(next[cell], usize::MAX, "duplicate edge {q} {b}");
        next[cell] = find(&states, r);
        out[cell] = find(&alphabet, o);
    }
    MealyAutomaton {
        states,
        alphabet,
        next: next.into_iter().map(crate::mealy::StateId).collect(),
        out: out.into_iter().map(crate::mealy::SymbolId).collect(),
    }
}

/// The one-counter automaton over {0,1}: `a` is the identity, `b` turns the
/// first 1 into a 0. Generates the free monoid on one generator.
pub fn fig_wreath_base() -> MealyAutomaton {
    from_edges(
        &["a", "b"],
        &["0", "1"],
        &[
            ("a", "0", "a", "0"),
            ("a", "1", "a", "1"),
            ("b", "0", "b", "0"),
            ("b", "1", "a", "0"),
        ],
    )
}

/// The order-2 group with elements named e, c (the twist of the wreath
/// diagram).
pub fn cyclic2_ec() -> FiniteSemigroup {
    FiniteSemigroup::from_fn(vec!["e".into(), "c".into()], |x, y| x ^ y)
}

/// The wreath-product diagram over the one-counter automaton and the
/// order-2 group, all sixty-four transitions written out.
pub fn fig_wreath_bottom() -> MealyAutomaton {
    let states = ["aa.e", "ab.e", "ba.e", "bb.e", "aa.c", "ab.c", "ba.c", "bb.c"];
    let symbols = ["00.e", "00.c", "01.e", "01.c", "10.e", "10.c", "11.e", "11.c"];
    let mut edges: Vec<(String, String, String, String)> = Vec::new();
    // the identity pair copies everything
    for &s in &symbols {
        edges.push(("aa.e".into(), s.into(), "aa.e".into(), s.into()));
    }
    // the twisted identity flips the group letter and drops the twist
    for &s in &symbols {
        let flipped = if s.ends_with('e') { s.replace(".e", ".c") } else { s.replace(".c", ".e") };
        edges.push(("aa.c".into(), s.into(), "aa.e".into(), flipped));
    }
    let rest: &[(&str, &str, &str, &str)] = &[
        ("ab.e", "00.e", "ab.e", "00.e"),
        ("ab.e", "00.c", "ba.e", "00.c"),
        ("ab.e", "01.e", "aa.e", "00.e"),
        ("ab.e", "01.c", "ba.e", "01.c"),
        ("ab.e", "10.e", "ab.e", "10.e"),
        ("ab.e", "10.c", "aa.e", "00.c"),
        ("ab.e", "11.e", "aa.e", "10.e"),
        ("ab.e", "11.c", "aa.e", "01.c"),
        ("ba.e", "00.e", "ba.e", "00.e"),
        ("ba.e", "00.c", "ab.e", "00.c"),
        ("ba.e", "01.e", "ba.e", "01.e"),
        ("ba.e", "01.c", "aa.e", "00.c"),
        ("ba.e", "10.e", "aa.e", "00.e"),
        ("ba.e", "10.c", "ab.e", "10.c"),
        ("ba.e", "11.e", "aa.e", "01.e"),
        ("ba.e", "11.c", "aa.e", "10.c"),
        ("bb.e", "00.e", "bb.e", "00.e"),
        ("bb.e", "00.c", "bb.e", "00.c"),
        ("bb.e", "01.e", "ba.e", "00.e"),
        ("bb.e", "01.c", "ba.e", "00.c"),
        ("bb.e", "10.e", "ab.e", "00.e"),
        ("bb.e", "10.c", "ab.e", "00.c"),
        ("bb.e", "11.e", "aa.e", "00.e"),
        ("bb.e", "11.c", "aa.e", "00.c"),
        ("ab.c", "00.e", "ab.e", "00.c"),
        ("ab.c", "00.c", "ba.e", "00.e"),
        ("ab.c", "01.e", "aa.e", "00.c"),
        ("ab.c", "01.c", "ba.e", "01.e"),
        ("ab.c", "10.e", "ab.e", "10.c"),
        ("ab.c", "10.c", "aa.e", "00.e"),
        ("ab.c", "11.e", "aa.e", "10.c"),
        ("ab.c", "11.c", "aa.e", "01.e"),
        ("ba.c", "00.e", "ba.e", "00.c"),
        ("ba.c", "00.c", "ab.e", "00.e"),
        ("ba.c", "01.e", "ba.e", "01.c"),
        ("ba.c", "01.c", "aa.e", "00.e"),
        ("ba.c", "10.e", "aa.e", "00.c"),
        ("ba.c", "10.c", "ab.e", "10.e"),
        ("ba.c", "11.e", "aa.e", "01.c"),
        ("ba.c", "11.c", "aa.e", "10.e"),
        ("bb.c", "00.e", "bb.e", "00.c"),
        ("bb.c", "00.c", "bb.e", "00.e"),
        ("bb.c", "01.e", "ba.e", "00.c"),
        ("bb.c", "01.c", "ba.e", "00.e"),
        ("bb.c", "10.e", "ab.e", "00.c"),
        ("bb.c", "10.c", "ab.e", "00.e"),
        ("bb.c", "11.e", "aa.e", "00.c"),
        ("bb.c", "11.c", "aa.e", "00.e"),
    ];
    edges.extend(rest.iter().map(|&(q, b, r, o)| (q.into(), b.into(), r.into(), o.into())));
    let borrowed: Vec<(&str, &str, &str, &str)> =
        edges.iter().map(|(q, b, r, o)| (q.as_str(), b.as_str(), r.as_str(), o.as_str())).collect();
    from_edges(&states, &symbols, &borrowed)
}

/// The rank-2 free semigroup automaton over {1,2}.
pub fn fig_free2() -> MealyAutomaton {
    from_edges(
        &["a", "b"],
        &["1", "2"],
        &[
            ("a", "1", "a", "1"),
            ("a", "2", "b", "1"),
            ("b", "1", "a", "2"),
            ("b", "2", "b", "2"),
        ],
    )
}

/// The one-counter automaton over {1,2}: c is the identity, d adds one.
pub fn fig_counter_12() -> MealyAutomaton {
    from_edges(
        &["c", "d"],
        &["1", "2"],
        &[
            ("c", "1", "c", "1"),
            ("c", "2", "c", "2"),
            ("d", "1", "d", "1"),
            ("d", "2", "c", "1"),
        ],
    )
}

/// Free monoid on b with identity a and a zero: the base of the Rees
/// diagram, over the alphabet {0,1}.
pub fn fig_rees_base() -> MealyAutomaton {
    from_edges(
        &["a", "b", "0"],
        &["0", "1"],
        &[
            ("a", "0", "a", "0"),
            ("a", "1", "a", "1"),
            ("b", "0", "b", "0"),
            ("b", "1", "a", "0"),
            ("0", "0", "0", "0"),
            ("0", "1", "0", "0"),
        ],
    )
}

/// The Rees diagram's parameters: 2 x 2 sandwich matrix [[a, a], [0, 0]]
/// over the base above, with the obvious left multiplications.
pub fn fig_rees_spec() -> ReesSpec {
    let base = fig_rees_base();
    let a = base.state_id("a").unwrap();
    let b = base.state_id("b").unwrap();
    let zero = base.state_id("0").unwrap();
    ReesSpec {
        identity: a,
        i_count: 2,
        lambda_count: 2,
        entries: vec![vec![a, a], vec![zero, zero]],
        left_mult: vec![
            ((a, a), a),
            ((a, b), b),
            ((a, zero), zero),
            ((zero, a), zero),
            ((zero, b), zero),
            ((zero, zero), zero),
        ],
        base,
    }
}

/// The Rees diagram's twelve-state automaton, one rule group per drawn
/// label family.
pub fn fig_rees_bottom() -> MealyAutomaton {
    let m = ["a", "b", "0"];
    let states: Vec<String> = (1..=2)
        .flat_map(|i| m.iter().flat_map(move |x| (1..=2).map(move |l| format!("({i},{x},{l})"))))
        .collect();
    let mut alphabet: Vec<String> = vec!["0".into(), "1".into()];
    for row in ["e", "1", "2"] {
        for l in 1..=2 {
            alphabet.push(format!("({row},{l})"));
        }
    }
    let state_refs: Vec<&str> = states.iter().map(|s| s.as_str()).collect();
    let sym_refs: Vec<&str> = alphabet.iter().map(|s| s.as_str()).collect();

    let mut edges: Vec<(String, String, String, String)> = Vec::new();
    for i in 1..=2 {
        for &x in &m {
            for l in 1..=2 {
                let q = format!("({i},{x},{l})");
                // base letter 0: everything copies it and parks at (1,x,1)
                edges.push((q.clone(), "0".into(), format!("(1,{x},1)"), "0".into()));
                // base letter 1: the free generator counts down, the zero
                // blanks, the identity copies
                let (target, out) = match x {
                    "a" => ("a", "1"),
                    "b" => ("a", "0"),
                    _ => ("0", "0"),
                };
                edges.push((q.clone(), "1".into(), format!("(1,{target},1)"), out.into()));
                for lam in 1..=2 {
                    // identity tag: emit the state's own index pair
                    edges.push((
                        q.clone(),
                        format!("(e,{lam})"),
                        format!("(1,{x},1)"),
                        format!("({i},{l})"),
                    ));
                    for tag in 1..=2 {
                        // sandwich row 1 holds the identity, row 2 the zero
                        let product = if lam == 1 { x } else { "0" };
                        edges.push((
                            q.clone(),
                            format!("({tag},{lam})"),
                            format!("(1,{product},1)"),
                            format!("({tag},{l})"),
                        ));
                    }
                }
            }
        }
    }
    let borrowed: Vec<(&str, &str, &str, &str)> =
        edges.iter().map(|(q, b, r, o)| (q.as_str(), b.as_str(), r.as_str(), o.as_str())).collect();
    from_edges(&state_refs, &sym_refs, &borrowed)
}

/// Parameters of the strong-semilattice diagram: the rank-2 free semigroup
/// and the one-counter monoid above the order-2 semilattice, with the
/// generator maps a,c -> e and b,d -> z.
pub fn fig_semilattice_spec() -> SemilatticeSpec {
    SemilatticeSpec {
        parts: vec![fig_free2(), fig_counter_12()],
        bottom: semilattice_et(),
        zero: 1,
        homs: vec![GeneratorHom { image: vec![0, 1] }, GeneratorHom { image: vec![0, 1] }],
        hom_bound: 4,
    }
}

/// The strong-semilattice diagram's six-state automaton over the 18 tuple
/// symbols, one rule group per drawn label family.
pub fn fig_semilattice_bottom() -> MealyAutomaton {
    let states = ["a", "b", "c", "d", "e", "z"];
    let mut alphabet: Vec<String> = Vec::new();
    let slot = ["1", "2", "0"];
    for a1 in slot {
        for a2 in slot {
            for x in ["e", "z"] {
                alphabet.push(format!("({a1},{a2},{x})"));
            }
        }
    }
    let sym_refs: Vec<&str> = alphabet.iter().map(|s| s.as_str()).collect();
    let mut edges: Vec<(String, String, String, String)> = Vec::new();
    for a1 in slot {
        for a2 in slot {
            for x in ["e", "z"] {
                let sym = format!("({a1},{a2},{x})");
                // part one: a fixes 1s, b turns them into 2s; both blank the
                // other slot; their images fix or zero the last slot
                let (a_target, a_first) = match a1 {
                    "1" => ("a", "1"),
                    "2" => ("b", "1"),
                    _ => ("z", "0"),
                };
                edges.push((
                    "a".into(),
                    sym.clone(),
                    a_target.into(),
                    format!("({a_first},0,{x})"),
                ));
                let (b_target, b_first) = match a1 {
                    "1" => ("a", "2"),
                    "2" => ("b", "2"),
                    _ => ("z", "0"),
                };
                edges.push((
                    "b".into(),
                    sym.clone(),
                    b_target.into(),
                    format!("({b_first},0,z)"),
                ));
                // part two: c copies its slot, d counts the 2s
                let (c_target, c_second) = match a2 {
                    "0" => ("z", "0"),
                    other => ("c", other),
                };
                edges.push((
                    "c".into(),
                    sym.clone(),
                    c_target.into(),
                    format!("(0,{c_second},{x})"),
                ));
                let (d_target, d_second) = match a2 {
                    "1" => ("d", "1"),
                    "2" => ("c", "1"),
                    _ => ("z", "0"),
                };
                edges.push((
                    "d".into(),
                    sym.clone(),
                    d_target.into(),
                    format!("(0,{d_second},z)"),
                ));
                // bottom copy: e keeps the last slot, z zeroes it
                edges.push(("e".into(), sym.clone(), "z".into(), format!("(0,0,{x})")));
                edges.push(("z".into(), sym.clone(), "z".into(), "(0,0,z)".into()));
            }
        }
    }
    let borrowed: Vec<(&str, &str, &str, &str)> =
        edges.iter().map(|(q, b, r, o)| (q.as_str(), b.as_str(), r.as_str(), o.as_str())).collect();
    from_edges(&states, &sym_refs, &borrowed)
}

/// Parameters of the act-extension diagram: the rank-2 free semigroup
/// acting on two points by p^a = q, q^a = p, p^b = q, q^b = q.
pub fn fig_act_extension_spec() -> ActExtensionSpec {
    ActExtensionSpec {
        base: fig_free2(),
        points: vec!["p".into(), "q".into()],
        action: vec![vec![1, 0], vec![1, 1]],
        bound: 4,
    }
}

/// The act-extension diagram's four-state automaton.
pub fn fig_act_extension_right() -> MealyAutomaton {
    from_edges(
        &["a", "b", "p", "q"],
        &["1", "2", "p", "q"],
        &[
            ("a", "1", "a", "1"),
            ("a", "2", "b", "1"),
            ("a", "p", "q", "q"),
            ("a", "q", "p", "p"),
            ("b", "1", "a", "2"),
            ("b", "2", "b", "2"),
            ("b", "p", "q", "q"),
            ("b", "q", "q", "q"),
            ("p", "1", "p", "p"),
            ("p", "2", "p", "p"),
            ("p", "p", "p", "p"),
            ("p", "q", "p", "p"),
            ("q", "1", "q", "q"),
            ("q", "2", "q", "q"),
            ("q", "p", "q", "q"),
            ("q", "q", "q", "q"),
        ],
    )
}

/// A two-state sink pair: q copies zeros, writes the first 1 and falls into
/// the blanking zero state z. The zero is genuine and q is idempotent.
pub fn sink_with_zero() -> MealyAutomaton {
    from_edges(
        &["q", "z"],
        &["0", "1"],
        &[
            ("q", "0", "q", "0"),
            ("q", "1", "z", "1"),
            ("z", "0", "z", "0"),
            ("z", "1", "z", "0"),
        ],
    )
}

/// A state whose every section is the zero: it rewrites the first symbol to
/// 0 and blanks the rest.
pub fn sink_both_sections_zero() -> MealyAutomaton {
    from_edges(
        &["q", "z"],
        &["0", "1"],
        &[
            ("q", "0", "z", "0"),
            ("q", "1", "z", "0"),
            ("z", "0", "z", "0"),
            ("z", "1", "z", "0"),
        ],
    )
}

/// A three-symbol sink example whose power pattern repeats with a gap: the
/// root action swaps two symbols, so the repeat is (2, 4).
pub fn sink_wide() -> MealyAutomaton {
    from_edges(
        &["q", "z"],
        &["0", "1", "2"],
        &[
            ("q", "0", "q", "0"),
            ("q", "1", "q", "2"),
            ("q", "2", "z", "1"),
            ("z", "0", "z", "0"),
            ("z", "1", "z", "0"),
            ("z", "2", "z", "0"),
        ],
    )
}
