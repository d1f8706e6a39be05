//! Line-oriented text formats: automata, semigroup tables and maps.
//!
//! Tokens are whitespace-separated; a token containing whitespace or
//! starting with a quote is written double-quoted with backslash escapes.
//! Lines starting with `#` and blank lines are ignored everywhere.

use crate::algebra::FiniteSemigroup;
use crate::mealy::{MealyAutomaton, StateId, SymbolId};
use std::fmt::Write as _;

#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, message: message.into() })
}

/// Split a line into tokens, honouring double quotes with backslash
/// escapes.
fn tokenize(line: &str, lineno: usize) -> Result<Vec<String>, ParseError> {
    let mut tokens = Vec::new();
    let mut chars = line.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c == '"' {
            chars.next();
            let mut tok = String::new();
            loop {
                match chars.next() {
                    Some('"') => break,
                    Some('\\') => match chars.next() {
                        Some(e) => tok.push(e),
                        None => return err(lineno, "dangling escape in quoted token"),
                    },
                    Some(c) => tok.push(c),
                    None => return err(lineno, "unterminated quoted token"),
                }
            }
            tokens.push(tok);
        } else {
            let mut tok = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_whitespace() {
                    break;
                }
                tok.push(c);
                chars.next();
            }
            tokens.push(tok);
        }
    }
    Ok(tokens)
}

fn quote(token: &str) -> String {
    if token.is_empty() || token.contains(char::is_whitespace) || token.starts_with('"') {
        let mut s = String::from("\"");
        for c in token.chars() {
            if c == '"' || c == '\\' {
                s.push('\\');
            }
            s.push(c);
        }
        s.push('"');
        s
    } else {
        token.to_string()
    }
}

/// Numbered, comment-stripped lines of a document.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Parse the automaton format: a `mealy v1` header, `states:` and
/// `alphabet:` lines, and one `q a -> r b` line per (state, symbol) pair.
pub fn parse_automaton(text: &str) -> Result<MealyAutomaton, ParseError> {
    let mut lines = content_lines(text);
    let (lineno, header) = lines.next().ok_or(ParseError { line: 0, message: "empty document".into() })?;
    if tokenize(header, lineno)? != ["mealy", "v1"] {
        return err(lineno, "expected header \"mealy v1\"");
    }

    let (lineno, states_line) = match lines.next() {
        Some(l) => l,
        None => return err(0, "missing states: line"),
    };
    let mut states = tokenize(states_line, lineno)?;
    if states.first().map(String::as_str) != Some("states:") {
        return err(lineno, "expected states: line");
    }
    states.remove(0);
    let (lineno, alpha_line) = match lines.next() {
        Some(l) => l,
        None => return err(0, "missing alphabet: line"),
    };
    let mut alphabet = tokenize(alpha_line, lineno)?;
    if alphabet.first().map(String::as_str) != Some("alphabet:") {
        return err(lineno, "expected alphabet: line");
    }
    alphabet.remove(0);
    if states.is_empty() || alphabet.is_empty() {
        return err(lineno, "states and alphabet must be nonempty");
    }
    for (i, n) in states.iter().enumerate() {
        if states[..i].contains(n) {
            return err(lineno, format!("duplicate state name {n:?}"));
        }
    }
    for (i, n) in alphabet.iter().enumerate() {
        if alphabet[..i].contains(n) {
            return err(lineno, format!("duplicate symbol name {n:?}"));
        }
    }

    let find = |v: &[String], name: &str, lineno: usize| -> Result<usize, ParseError> {
        v.iter().position(|s| s == name).map_or_else(
            || err(lineno, format!("unknown token {name:?}")),
            Ok,
        )
    };
    let (nq, nb) = (states.len(), alphabet.len());
    let mut next = vec![usize::MAX; nq * nb];
    let mut out = vec![usize::MAX; nq * nb];
    let mut filled = 0usize;
    for (lineno, line) in lines {
        let tokens = tokenize(line, lineno)?;
        if tokens.len() != 5 || tokens[2] != "->" {
            return err(lineno, "expected \"state symbol -> state symbol\"");
        }
        let q = find(&states, &tokens[0], lineno)?;
        let b = find(&alphabet, &tokens[1], lineno)?;
        let r = find(&states, &tokens[3], lineno)?;
        let o = find(&alphabet, &tokens[4], lineno)?;
        let cell = q * nb + b;
        if next[cell] != usize::MAX {
            return err(lineno, format!("duplicate transition for {:?} {:?}", tokens[0], tokens[1]));
        }
        next[cell] = r;
        out[cell] = o;
        filled += 1;
    }
    if filled != nq * nb {
        let missing = next.iter().position(|&v| v == usize::MAX).unwrap();
        return err(
            0,
            format!(
                "missing transition for state {:?}, symbol {:?}",
                states[missing / nb],
                alphabet[missing % nb]
            ),
        );
    }
    Ok(MealyAutomaton {
        states,
        alphabet,
        next: next.into_iter().map(StateId).collect(),
        out: out.into_iter().map(SymbolId).collect(),
    })
}

/// Serialize an automaton, optionally with leading comment lines (used for
/// provenance notes; the parser skips them).
pub fn serialize_automaton(aut: &MealyAutomaton, comments: &[String]) -> String {
    let mut s = String::new();
    for c in comments {
        let _ = writeln!(s, "# {c}");
    }
    s.push_str("mealy v1\n");
    let _ = writeln!(
        s,
        "states: {}",
        aut.states.iter().map(|n| quote(n)).collect::<Vec<_>>().join(" ")
    );
    let _ = writeln!(
        s,
        "alphabet: {}",
        aut.alphabet.iter().map(|n| quote(n)).collect::<Vec<_>>().join(" ")
    );
    for q in aut.state_ids() {
        for b in aut.symbol_ids() {
            let _ = writeln!(
                s,
                "{} {} -> {} {}",
                quote(aut.state_name(q)),
                quote(aut.symbol_name(b)),
                quote(aut.state_name(aut.next(q, b))),
                quote(aut.symbol_name(aut.out(q, b)))
            );
        }
    }
    s
}

/// Parse the semigroup format: a `semigroup v1` header, an `elements:`
/// line, and one `row x: p1 .. pn` line per element. The table is checked
/// for associativity on load.
pub fn parse_semigroup(text: &str) -> Result<FiniteSemigroup, ParseError> {
    let mut lines = content_lines(text);
    let (lineno, header) = lines.next().ok_or(ParseError { line: 0, message: "empty document".into() })?;
    if tokenize(header, lineno)? != ["semigroup", "v1"] {
        return err(lineno, "expected header \"semigroup v1\"");
    }
    let (lineno, elems_line) = match lines.next() {
        Some(l) => l,
        None => return err(0, "missing elements: line"),
    };
    let mut names = tokenize(elems_line, lineno)?;
    if names.first().map(String::as_str) != Some("elements:") {
        return err(lineno, "expected elements: line");
    }
    names.remove(0);
    if names.is_empty() {
        return err(lineno, "no elements");
    }

    let n = names.len();
    let mut table = vec![usize::MAX; n * n];
    for (lineno, line) in lines {
        let tokens = tokenize(line, lineno)?;
        if tokens.len() != n + 2 || tokens[0] != "row" {
            return err(lineno, format!("expected \"row <name>: {n} products\""));
        }
        let row_name = tokens[1].strip_suffix(':').unwrap_or(&tokens[1]);
        let Some(x) = names.iter().position(|m| m == row_name) else {
            return err(lineno, format!("unknown element {row_name:?}"));
        };
        if table[x * n] != usize::MAX {
            return err(lineno, format!("duplicate row for {row_name:?}"));
        }
        for (y, tok) in tokens[2..].iter().enumerate() {
            let Some(v) = names.iter().position(|m| m == tok) else {
                return err(lineno, format!("unknown element {tok:?}"));
            };
            table[x * n + y] = v;
        }
    }
    if let Some(missing) = (0..n).find(|&x| table[x * n] == usize::MAX) {
        return err(0, format!("missing row for element {:?}", names[missing]));
    }
    let sg = FiniteSemigroup::new(names, table)
        .map_err(|e| ParseError { line: 0, message: e.to_string() })?;
    if let Some(d) = sg.validate().first() {
        return err(
            0,
            format!(
                "not associative at ({}, {}, {})",
                sg.name(d.x),
                sg.name(d.y),
                sg.name(d.z)
            ),
        );
    }
    Ok(sg)
}

pub fn serialize_semigroup(sg: &FiniteSemigroup) -> String {
    let mut s = String::from("semigroup v1\n");
    let _ = writeln!(
        s,
        "elements: {}",
        sg.names().iter().map(|n| quote(n)).collect::<Vec<_>>().join(" ")
    );
    for x in 0..sg.len() {
        let row: Vec<String> =
            (0..sg.len()).map(|y| quote(sg.name(sg.product(x, y)))).collect();
        let _ = writeln!(s, "row {}: {}", quote(sg.name(x)), row.join(" "));
    }
    s
}

/// A parsed key-value map: keys may span several tokens, values likewise.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MapFile {
    pub entries: Vec<(Vec<String>, Vec<String>)>,
}

impl MapFile {
    pub fn get(&self, key: &[&str]) -> Option<&[String]> {
        self.entries
            .iter()
            .find(|(k, _)| k.len() == key.len() && k.iter().zip(key).all(|(a, b)| a == b))
            .map(|(_, v)| v.as_slice())
    }

    pub fn get_single(&self, key: &[&str]) -> Option<&str> {
        match self.get(key) {
            Some([v]) => Some(v),
            _ => None,
        }
    }
}

/// Parse the map format: a `map v1` header and `key -> value` lines.
pub fn parse_map(text: &str) -> Result<MapFile, ParseError> {
    let mut lines = content_lines(text);
    let (lineno, header) = lines.next().ok_or(ParseError { line: 0, message: "empty document".into() })?;
    if tokenize(header, lineno)? != ["map", "v1"] {
        return err(lineno, "expected header \"map v1\"");
    }
    let mut entries = Vec::new();
    for (lineno, line) in lines {
        let tokens = tokenize(line, lineno)?;
        let Some(arrow) = tokens.iter().position(|t| t == "->") else {
            return err(lineno, "expected \"key -> value\"");
        };
        let key = tokens[..arrow].to_vec();
        let value = tokens[arrow + 1..].to_vec();
        if key.is_empty() || value.is_empty() {
            return err(lineno, "empty key or value");
        }
        entries.push((key, value));
    }
    Ok(MapFile { entries })
}

pub fn serialize_map(map: &MapFile) -> String {
    let mut s = String::from("map v1\n");
    for (k, v) in &map.entries {
        let _ = writeln!(
            s,
            "{} -> {}",
            k.iter().map(|t| quote(t)).collect::<Vec<_>>().join(" "),
            v.iter().map(|t| quote(t)).collect::<Vec<_>>().join(" ")
        );
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{fig_rees_bottom, fig_wreath_base, fig_wreath_bottom};

    #[test]
    fn automaton_round_trip() {
        for aut in [fig_wreath_base(), fig_wreath_bottom(), fig_rees_bottom()] {
            let text = serialize_automaton(&aut, &["built for a test".into()]);
            assert_eq!(parse_automaton(&text).unwrap(), aut);
        }
    }

    #[test]
    fn missing_transition_is_named() {
        let aut = fig_wreath_base();
        let text = serialize_automaton(&aut, &[]);
        let truncated: Vec<&str> = text.lines().take(text.lines().count() - 1).collect();
        let e = parse_automaton(&truncated.join("\n")).unwrap_err();
        assert!(e.message.contains("missing transition"), "{e}");
        assert!(e.message.contains('b') && e.message.contains('1'), "{e}");
    }

    #[test]
    fn quoted_structured_name_is_one_token() {
        let text = "mealy v1\nstates: q\nalphabet: \"D[a|b]^S\"\nq \"D[a|b]^S\" -> q \"D[a|b]^S\"\n";
        let aut = parse_automaton(text).unwrap();
        assert_eq!(aut.alphabet, vec!["D[a|b]^S"]);
        let out = serialize_automaton(&aut, &[]);
        assert_eq!(parse_automaton(&out).unwrap(), aut);
    }

    #[test]
    fn bad_header_is_rejected() {
        assert!(parse_automaton("moore v1\n").is_err());
        assert!(parse_semigroup("mealy v1\n").is_err());
        assert!(parse_map("maps v1\n").is_err());
    }

    #[test]
    fn semigroup_round_trip_and_assoc_check() {
        let sg = crate::algebra::semilattice_et();
        let text = serialize_semigroup(&sg);
        assert_eq!(parse_semigroup(&text).unwrap(), sg);
        let broken = "semigroup v1\nelements: x y\nrow x: x y\nrow y: x x\n";
        let e = parse_semigroup(broken).unwrap_err();
        assert!(e.message.contains("not associative"), "{e}");
    }

    #[test]
    fn map_round_trip() {
        let text = "map v1\n# a comment\nb -> 1\nz -> z!\n1 2 -> a\n";
        let map = parse_map(text).unwrap();
        assert_eq!(map.get_single(&["b"]), Some("1"));
        assert_eq!(map.get_single(&["1", "2"]), Some("a"));
        assert_eq!(parse_map(&serialize_map(&map)).unwrap(), map);
    }
}
