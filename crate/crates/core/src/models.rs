//! Reference arithmetic in the constructed semigroups, independent of the
//! built automata. Each construction gets a model of its elements with the
//! defining multiplication applied literally; word payloads are kept in
//! shortlex-least form so that structural equality decides equality in the
//! semigroup.

use crate::algebra::{ElemId, FiniteSemigroup, GeneratorHom};
use crate::constructions::{FpSymbol, FreeProductAutomaton, IdealExtensionSpec, ActExtensionSpec};
use crate::mealy::{act_eventually_periodic, EpString, MealyAutomaton, StateId, Word};
use crate::word_problem::canonical_word;

/// Which free factor a block belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Factor {
    Left,
    Right,
}

/// One block of an alternating word: an element of a finite factor, or a
/// word over an automaton factor.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Block {
    Elem(ElemId),
    Auto(Word),
}

/// An element of one of the modelled semigroups.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ModelElement {
    /// Alternating nonempty blocks; adjacent blocks always differ in factor.
    FreeProduct(Vec<(Factor, Block)>),
    /// Coordinate words over the base, one per top element, plus the twist.
    Wreath { coords: Vec<Word>, twist: ElemId },
    /// Triple (i, middle word, lambda), zero-based indices.
    Rees { i: usize, word: Word, lambda: usize },
    /// An element of one of the parts, or of the bottom semigroup.
    Semilattice(SemilatticeElement),
    /// An element of the top semigroup or of the finite ideal.
    IdealExt(IdealElement),
    /// A semigroup word or a point of the act.
    ActExt(ActElement),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SemilatticeElement {
    Part { part: usize, word: Word },
    Bottom(ElemId),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum IdealElement {
    Top(Word),
    Ideal(ElemId),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ActElement {
    Sem(Word),
    Point(usize),
}

#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum OracleError {
    #[error("model elements belong to different constructions")]
    TagMismatch,
    #[error("empty block list")]
    EmptyInput,
    #[error("read-off parse failed: {0}")]
    ReadOff(String),
}

/// The data each model multiplies against.
pub enum ModelOracle {
    FreeProductFinite { s: FiniteSemigroup, t: FiniteSemigroup },
    FreeProductAuto { a1: MealyAutomaton, a2: MealyAutomaton },
    Wreath { base: MealyAutomaton, top: FiniteSemigroup },
    Rees { base: MealyAutomaton, entries: Vec<Vec<StateId>> },
    Semilattice { parts: Vec<MealyAutomaton>, bottom: FiniteSemigroup, homs: Vec<GeneratorHom> },
    IdealExt(IdealExtensionSpec),
    ActExt(ActExtensionSpec),
}

impl ModelOracle {
    /// The defining multiplication of the modelled semigroup.
    pub fn multiply(&self, x: &ModelElement, y: &ModelElement) -> Result<ModelElement, OracleError> {
        use ModelElement::*;
        match (self, x, y) {
            (ModelOracle::FreeProductFinite { .. } | ModelOracle::FreeProductAuto { .. }, FreeProduct(a), FreeProduct(b)) => {
                let mut blocks = a.clone();
                blocks.extend(b.iter().cloned());
                self.free_reduce(blocks)
            }
            (ModelOracle::Wreath { base, top }, Wreath { coords: c1, twist: t1 }, Wreath { coords: c2, twist: t2 }) => {
                let coords = (0..top.len())
                    .map(|i| {
                        let twisted = &c2[top.product(i, *t1)];
                        canonical_word(base, &c1[i].concat(twisted))
                    })
                    .collect();
                Ok(Wreath { coords, twist: top.product(*t1, *t2) })
            }
            (ModelOracle::Rees { base, entries }, Rees { i, word: x, lambda }, Rees { i: j, word: y, lambda: mu }) => {
                let p = entries[*lambda][*j];
                let word = x.concat(&Word::single(p)).concat(y);
                Ok(Rees { i: *i, word: canonical_word(base, &word), lambda: *mu })
            }
            (ModelOracle::Semilattice { parts, bottom, homs }, Semilattice(a), Semilattice(b)) => {
                use SemilatticeElement::*;
                let to_bottom = |e: &SemilatticeElement| match e {
                    Part { part, word } => homs[*part].image_of_word(bottom, word),
                    Bottom(t) => *t,
                };
                Ok(Semilattice(match (a, b) {
                    (Part { part: i, word: u }, Part { part: j, word: v }) if i == j => Part {
                        part: *i,
                        word: canonical_word(&parts[*i], &u.concat(v)),
                    },
                    _ => Bottom(bottom.product(to_bottom(a), to_bottom(b))),
                }))
            }
            (ModelOracle::IdealExt(spec), IdealExt(a), IdealExt(b)) => {
                use IdealElement::*;
                Ok(IdealExt(match (a, b) {
                    (Top(u), Top(v)) => Top(canonical_word(&spec.top, &u.concat(v))),
                    (Top(u), Ideal(s)) => Ideal(left_of_word(spec, u, *s)),
                    (Ideal(s), Top(u)) => Ideal(right_of_word(spec, *s, u)),
                    (Ideal(s), Ideal(t)) => Ideal(spec.ideal.product(*s, *t)),
                }))
            }
            (ModelOracle::ActExt(spec), ActExt(a), ActExt(b)) => {
                use ActElement::*;
                Ok(ActExt(match (a, b) {
                    (Sem(u), Sem(v)) => Sem(canonical_word(&spec.base, &u.concat(v))),
                    (Point(x), Sem(u)) => {
                        Point(u.letters().iter().fold(*x, |p, &q| spec.action[q.0][p]))
                    }
                    (Sem(_), Point(x)) => Point(*x),
                    (Point(_), Point(y)) => Point(*y),
                }))
            }
            _ => Err(OracleError::TagMismatch),
        }
    }

    /// Canonical alternating normal form of a block list: adjacent blocks
    /// from the same factor merge under that factor's multiplication.
    /// Idempotent under repetition.
    pub fn free_reduce(&self, blocks: Vec<(Factor, Block)>) -> Result<ModelElement, OracleError> {
        if blocks.is_empty() {
            return Err(OracleError::EmptyInput);
        }
        let mut reduced: Vec<(Factor, Block)> = Vec::with_capacity(blocks.len());
        for (factor, block) in blocks {
            match reduced.last_mut() {
                Some((last_factor, last_block)) if *last_factor == factor => {
                    *last_block = self.merge(factor, last_block, &block)?;
                }
                _ => reduced.push((factor, block)),
            }
        }
        // canonicalize automaton payloads
        for (factor, block) in reduced.iter_mut() {
            if let Block::Auto(w) = block {
                *w = canonical_word(self.factor_automaton(*factor)?, w);
            }
        }
        Ok(ModelElement::FreeProduct(reduced))
    }

    fn merge(&self, factor: Factor, a: &Block, b: &Block) -> Result<Block, OracleError> {
        match (self, a, b) {
            (ModelOracle::FreeProductFinite { s, t }, Block::Elem(x), Block::Elem(y)) => {
                let table = match factor {
                    Factor::Left => s,
                    Factor::Right => t,
                };
                Ok(Block::Elem(table.product(*x, *y)))
            }
            (ModelOracle::FreeProductAuto { .. }, Block::Auto(u), Block::Auto(v)) => {
                Ok(Block::Auto(u.concat(v)))
            }
            _ => Err(OracleError::TagMismatch),
        }
    }

    fn factor_automaton(&self, factor: Factor) -> Result<&MealyAutomaton, OracleError> {
        match (self, factor) {
            (ModelOracle::FreeProductAuto { a1, .. }, Factor::Left) => Ok(a1),
            (ModelOracle::FreeProductAuto { a2, .. }, Factor::Right) => Ok(a2),
            _ => Err(OracleError::TagMismatch),
        }
    }
}

fn left_of_word(spec: &IdealExtensionSpec, w: &Word, s: usize) -> usize {
    w.letters().iter().rev().fold(s, |acc, &q| spec.left[q.0][acc])
}

fn right_of_word(spec: &IdealExtensionSpec, s: usize, w: &Word) -> usize {
    w.letters().iter().fold(s, |acc, &q| spec.right[acc][q.0])
}

/// Read the alternating normal form of a word of the finite free-product
/// automaton off its action on the two blank streams, exactly as the
/// defining transition rows spell it out.
pub fn recover_reduced_word(
    fp: &FreeProductAutomaton,
    w: &Word,
) -> Result<ModelElement, OracleError> {
    let aut = &fp.automaton;
    let blank_d = fp.symbol_of(FpSymbol::Domino { s: None, t: None, circled: false });
    let blank_t = fp.symbol_of(FpSymbol::Tablet { t: None, s: None, circled: false });
    let d_image = act_eventually_periodic(aut, w, &EpString::periodic(vec![blank_d]).unwrap());
    let t_image = act_eventually_periodic(aut, w, &EpString::periodic(vec![blank_t]).unwrap());

    let d_blocks = parse_domino_stream(fp, &d_image, blank_d, true)?;
    let t_blocks = parse_domino_stream(fp, &t_image, blank_t, false)?;
    let blocks = if d_blocks.len() >= t_blocks.len() { d_blocks } else { t_blocks };
    if blocks.is_empty() {
        return Err(OracleError::ReadOff("no blocks recovered from either stream".into()));
    }
    Ok(ModelElement::FreeProduct(blocks))
}

fn parse_domino_stream(
    fp: &FreeProductAutomaton,
    image: &EpString,
    blank: crate::mealy::SymbolId,
    dominoes: bool,
) -> Result<Vec<(Factor, Block)>, OracleError> {
    if image.period() != [blank] {
        return Err(OracleError::ReadOff(format!(
            "stream does not settle back into the blank: period {:?}",
            image.period()
        )));
    }
    let mut blocks = Vec::new();
    let prefix = image.prefix();
    for (pos, &sym) in prefix.iter().enumerate() {
        let last = pos + 1 == prefix.len();
        let (first, second, circled) = match (dominoes, fp.symbols[sym.0]) {
            (true, FpSymbol::Domino { s, t, circled }) => (s, t, circled),
            (false, FpSymbol::Tablet { t, s, circled }) => (t, s, circled),
            (_, other) => {
                return Err(OracleError::ReadOff(format!("foreign symbol {other:?} in stream")))
            }
        };
        if circled == last {
            return Err(OracleError::ReadOff(
                "marking does not match the position in the stream".into(),
            ));
        }
        let (first_factor, second_factor) = if dominoes {
            (Factor::Left, Factor::Right)
        } else {
            (Factor::Right, Factor::Left)
        };
        match (first, second) {
            (Some(a), Some(b)) => {
                blocks.push((first_factor, Block::Elem(a)));
                blocks.push((second_factor, Block::Elem(b)));
            }
            (Some(a), None) if last => blocks.push((first_factor, Block::Elem(a))),
            _ => {
                return Err(OracleError::ReadOff(
                    "open symbol in the middle of the stream".into(),
                ))
            }
        }
    }
    Ok(blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{cyclic2, trivial};
    use crate::constructions::free_product_finite;

    fn trivial_oracle() -> (ModelOracle, FreeProductAutomaton) {
        let s = trivial("e");
        let t = trivial("f");
        let fp = free_product_finite(&s, &t, 0, 0).unwrap();
        (ModelOracle::FreeProductFinite { s, t }, fp)
    }

    #[test]
    fn free_reduce_merges_boundary_blocks() {
        let (oracle, _) = trivial_oracle();
        let e = (Factor::Left, Block::Elem(0));
        let f = (Factor::Right, Block::Elem(0));
        let reduced = oracle.free_reduce(vec![e.clone(), e.clone(), f.clone()]).unwrap();
        assert_eq!(reduced, ModelElement::FreeProduct(vec![e.clone(), f.clone()]));
        // already alternating input is unchanged
        let same = oracle.free_reduce(vec![e.clone(), f.clone()]).unwrap();
        assert_eq!(same, ModelElement::FreeProduct(vec![e, f]));
    }

    #[test]
    fn free_reduce_multiplies_inside_blocks() {
        let s = cyclic2();
        let t = cyclic2();
        let oracle = ModelOracle::FreeProductFinite { s, t };
        let g = (Factor::Left, Block::Elem(1));
        let reduced = oracle.free_reduce(vec![g.clone(), g]).unwrap();
        assert_eq!(reduced, ModelElement::FreeProduct(vec![(Factor::Left, Block::Elem(0))]));
    }

    #[test]
    fn readoff_of_an_alternating_word() {
        let (_, fp) = trivial_oracle();
        let w = Word::new(vec![fp.s_states[0], fp.t_states[0], fp.s_states[0], fp.t_states[0]])
            .unwrap();
        let got = recover_reduced_word(&fp, &w).unwrap();
        assert_eq!(
            got,
            ModelElement::FreeProduct(vec![
                (Factor::Left, Block::Elem(0)),
                (Factor::Right, Block::Elem(0)),
                (Factor::Left, Block::Elem(0)),
                (Factor::Right, Block::Elem(0)),
            ])
        );
    }

    #[test]
    fn readoff_of_a_tablet_first_word() {
        let (_, fp) = trivial_oracle();
        let w = Word::new(vec![fp.t_states[0], fp.s_states[0]]).unwrap();
        let got = recover_reduced_word(&fp, &w).unwrap();
        assert_eq!(
            got,
            ModelElement::FreeProduct(vec![
                (Factor::Right, Block::Elem(0)),
                (Factor::Left, Block::Elem(0)),
            ])
        );
    }

    #[test]
    fn readoff_equals_reduction_of_the_letters() {
        let s = cyclic2();
        let t = cyclic2();
        let fp = free_product_finite(&s, &t, 0, 0).unwrap();
        let oracle = ModelOracle::FreeProductFinite { s, t };
        // every word of length <= 3 over the four generators
        let mut words: Vec<Vec<usize>> = (0..4).map(|q| vec![q]).collect();
        for _ in 0..2 {
            words = words
                .iter()
                .flat_map(|w| {
                    (0..4).map(move |q| {
                        let mut v = w.clone();
                        v.push(q);
                        v
                    })
                })
                .chain(words.iter().cloned())
                .collect();
        }
        for letters in words {
            let word = Word::new(letters.iter().map(|&q| StateId(q)).collect()).unwrap();
            let blocks: Vec<(Factor, Block)> = letters
                .iter()
                .map(|&q| {
                    if q < 2 {
                        (Factor::Left, Block::Elem(q))
                    } else {
                        (Factor::Right, Block::Elem(q - 2))
                    }
                })
                .collect();
            let expected = oracle.free_reduce(blocks).unwrap();
            assert_eq!(recover_reduced_word(&fp, &word).unwrap(), expected, "word {letters:?}");
        }
    }
}
