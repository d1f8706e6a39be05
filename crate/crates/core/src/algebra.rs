//! Finite semigroups given by Cayley table, transformations of a finite set,
//! and generator-defined homomorphism checks.

use crate::mealy::{MealyAutomaton, StateId, Word};
use crate::word_problem::equal;
use std::fmt;

/// Index of an element within a [`FiniteSemigroup`].
pub type ElemId = usize;

/// A finite semigroup: `n` named elements and an `n x n` product table,
/// `table[x][y]` holding the product (row element) * (column element).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteSemigroup {
    names: Vec<String>,
    table: Vec<ElemId>,
}

/// A triple witnessing a failure of associativity.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct AssocDefect {
    pub x: ElemId,
    pub y: ElemId,
    pub z: ElemId,
}

#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum AlgebraError {
    #[error("product table is not {n} x {n}")]
    BadShape { n: usize },
    #[error("table entry {entry} out of range")]
    EntryOutOfRange { entry: usize },
    #[error("duplicate element name {name:?}")]
    DuplicateName { name: String },
    #[error("not associative: ({x} {y}) {z} differs from {x} ({y} {z})")]
    NotAssociative { x: String, y: String, z: String },
    #[error("{name:?} is not a right zero")]
    NotARightZero { name: String },
    #[error("transformations have mismatched domain sizes {a} and {b}")]
    DomainMismatch { a: usize, b: usize },
}

impl FiniteSemigroup {
    /// Wrap a table without checking associativity; shape and ranges are
    /// still enforced. Use [`FiniteSemigroup::validate`] for the law.
    pub fn new(names: Vec<String>, table: Vec<ElemId>) -> Result<Self, AlgebraError> {
        let n = names.len();
        if table.len() != n * n {
            return Err(AlgebraError::BadShape { n });
        }
        if let Some(&entry) = table.iter().find(|&&e| e >= n) {
            return Err(AlgebraError::EntryOutOfRange { entry });
        }
        for (i, name) in names.iter().enumerate() {
            if names[..i].iter().any(|m| m == name) {
                return Err(AlgebraError::DuplicateName { name: name.clone() });
            }
        }
        Ok(FiniteSemigroup { names, table })
    }

    /// Build from a product closure over element indices.
    pub fn from_fn<F>(names: Vec<String>, mut product: F) -> FiniteSemigroup
    where
        F: FnMut(ElemId, ElemId) -> ElemId,
    {
        let n = names.len();
        let table = (0..n * n).map(|i| product(i / n, i % n)).collect();
        FiniteSemigroup { names, table }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: ElemId) -> &str {
        &self.names[x]
    }

    pub fn element(&self, name: &str) -> Option<ElemId> {
        self.names.iter().position(|n| n == name)
    }

    #[inline]
    pub fn product(&self, x: ElemId, y: ElemId) -> ElemId {
        self.table[x * self.names.len() + y]
    }

    pub fn product_of_word(&self, letters: &[ElemId]) -> ElemId {
        let mut it = letters.iter();
        let first = *it.next().expect("nonempty word");
        it.fold(first, |acc, &x| self.product(acc, x))
    }

    /// Scan all triples for associativity failures.
    pub fn validate(&self) -> Vec<AssocDefect> {
        let n = self.names.len();
        let mut defects = Vec::new();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if self.product(self.product(x, y), z) != self.product(x, self.product(y, z)) {
                        defects.push(AssocDefect { x, y, z });
                    }
                }
            }
        }
        defects
    }

    /// All elements with `x x = x`.
    pub fn idempotents(&self) -> Vec<ElemId> {
        (0..self.len()).filter(|&x| self.product(x, x) == x).collect()
    }

    /// Right zeros (`x z = z` for all `x`) and the two-sided identity, if any.
    pub fn right_zeros_and_identity(&self) -> (Vec<ElemId>, Option<ElemId>) {
        let n = self.len();
        let right_zeros = (0..n)
            .filter(|&z| (0..n).all(|x| self.product(x, z) == z))
            .collect();
        let identity =
            (0..n).find(|&e| (0..n).all(|x| self.product(e, x) == x && self.product(x, e) == x));
        (right_zeros, identity)
    }

    pub fn is_monoid(&self) -> bool {
        self.right_zeros_and_identity().1.is_some()
    }
}

impl fmt::Display for FiniteSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "semigroup of order {}", self.len())
    }
}

/// A total map on `{0, .., m-1}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Transformation {
    pub image: Vec<usize>,
}

impl Transformation {
    pub fn identity(m: usize) -> Transformation {
        Transformation { image: (0..m).collect() }
    }

    pub fn domain(&self) -> usize {
        self.image.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    /// `self` applied first, then `other`.
    pub fn then(&self, other: &Transformation) -> Transformation {
        Transformation { image: self.image.iter().map(|&x| other.image[x]).collect() }
    }
}

/// Closure of a generating set of transformations under composition, in a
/// deterministic breadth-first order. With `with_identity`, the identity map
/// is placed first whether or not it arises as a composite.
pub fn transformation_closure(
    generators: &[Transformation],
    with_identity: bool,
) -> Result<Vec<Transformation>, AlgebraError> {
    let m = match generators.first() {
        Some(g) => g.domain(),
        None if with_identity => 0,
        None => return Ok(Vec::new()),
    };
    if let Some(g) = generators.iter().find(|g| g.domain() != m) {
        return Err(AlgebraError::DomainMismatch { a: m, b: g.domain() });
    }

    let mut closure: Vec<Transformation> = Vec::new();
    if with_identity {
        closure.push(Transformation::identity(m));
    }
    let mut frontier: Vec<Transformation> = Vec::new();
    for g in generators {
        if !closure.contains(g) {
            closure.push(g.clone());
            frontier.push(g.clone());
        }
    }
    while let Some(t) = frontier.first().cloned() {
        frontier.remove(0);
        for g in generators {
            let composite = t.then(g);
            if !closure.contains(&composite) {
                closure.push(composite.clone());
                frontier.push(composite);
            }
        }
    }
    Ok(closure)
}

/// A map from the states of an automaton to the elements of a finite
/// semigroup, claimed to induce a homomorphism from the generated semigroup.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GeneratorHom {
    /// Image element per source state id.
    pub image: Vec<ElemId>,
}

/// Outcome of a bounded well-definedness check: `Pass` is evidence up to the
/// bound, not proof.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum HomVerdict {
    Pass { bound: usize },
    Fail { left: Word, right: Word },
}

impl GeneratorHom {
    pub fn image_of_word(&self, target: &FiniteSemigroup, w: &Word) -> ElemId {
        let letters: Vec<ElemId> = w.letters().iter().map(|q| self.image[q.0]).collect();
        target.product_of_word(&letters)
    }
}

/// Check that equal words of length at most `bound` have equal images: for
/// every pair u, v over the source states with `u = v` in the generated
/// semigroup, the image products must agree in the target.
pub fn check_generator_hom(
    hom: &GeneratorHom,
    source: &MealyAutomaton,
    target: &FiniteSemigroup,
    bound: usize,
) -> HomVerdict {
    // Group words by element using the word problem; the image must be
    // constant on every class.
    let words = all_words(source, bound);
    let classes = crate::word_problem::element_classes(source, &words);
    let mut class_image: Vec<Option<(usize, ElemId)>> = Vec::new();
    for (i, w) in words.iter().enumerate() {
        let img = hom.image_of_word(target, w);
        let class = classes[i];
        if class == class_image.len() {
            class_image.push(Some((i, img)));
        } else if let Some((rep, rep_img)) = class_image[class] {
            if rep_img != img {
                return HomVerdict::Fail { left: words[rep].clone(), right: w.clone() };
            }
        }
    }
    HomVerdict::Pass { bound }
}

fn all_words(aut: &MealyAutomaton, max_len: usize) -> Vec<Word> {
    let mut out: Vec<Word> = Vec::new();
    let mut level: Vec<Vec<StateId>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next_level = Vec::new();
        for w in &level {
            for q in aut.state_ids() {
                let mut letters = w.clone();
                letters.push(q);
                next_level.push(letters);
            }
        }
        out.extend(next_level.iter().cloned().filter_map(Word::new));
        level = next_level;
    }
    out
}

/// The canonical automaton of a finite semigroup with a right zero `z`:
/// states are the elements, the alphabet is the element set with a fresh
/// identity symbol adjoined, and reading `b` in state `t` outputs `b t` and
/// drops into `z`. Each state acts by right multiplication on the first
/// letter only, so the generated semigroup is a faithful copy.
pub fn finite_semigroup_automaton(
    s: &FiniteSemigroup,
    z: ElemId,
) -> Result<MealyAutomaton, AlgebraError> {
    let (right_zeros, _) = s.right_zeros_and_identity();
    if !right_zeros.contains(&z) {
        return Err(AlgebraError::NotARightZero { name: s.name(z).to_string() });
    }
    let states: Vec<String> = s.names().to_vec();
    let mut one = "1".to_string();
    while s.names().iter().any(|n| *n == one) {
        one.push('\'');
    }
    let mut alphabet = vec![one];
    alphabet.extend(s.names().iter().cloned());
    let aut = MealyAutomaton::build(states, alphabet, |t, b| {
        // symbol 0 is the adjoined identity: 1 * t = t.
        let bt = if b == 0 { t } else { s.product(b - 1, t) };
        (z, bt + 1)
    });
    Ok(aut)
}

/// The order-2 semilattice {e, z} with identity e and zero z.
pub fn semilattice_et() -> FiniteSemigroup {
    FiniteSemigroup::from_fn(vec!["e".into(), "z".into()], |x, y| x.max(y))
}

/// The cyclic group of order 2 with elements {1, g}.
pub fn cyclic2() -> FiniteSemigroup {
    FiniteSemigroup::from_fn(vec!["1".into(), "g".into()], |x, y| x ^ y)
}

/// The trivial semigroup on one named element.
pub fn trivial(name: &str) -> FiniteSemigroup {
    FiniteSemigroup::from_fn(vec![name.to_string()], |_, _| 0)
}

/// The right-zero semigroup on the given names (x y = y).
pub fn right_zero_semigroup(names: &[&str]) -> FiniteSemigroup {
    FiniteSemigroup::from_fn(names.iter().map(|s| s.to_string()).collect(), |_, y| y)
}

/// Check a claimed product in the semigroup generated by an automaton.
pub fn verified_product(aut: &MealyAutomaton, p: StateId, x: StateId, claimed: StateId) -> bool {
    equal(aut, &Word::new(vec![p, x]).unwrap(), &Word::single(claimed)).equal
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn the_et_semilattice_is_associative_with_expected_structure() {
        let t = semilattice_et();
        assert!(t.validate().is_empty());
        assert_eq!(t.idempotents(), vec![0, 1]);
        let (zeros, identity) = t.right_zeros_and_identity();
        assert_eq!(zeros, vec![1]);
        assert_eq!(identity, Some(0));
    }

    #[test]
    fn broken_table_yields_assoc_defects() {
        // Left-zero table with one overwritten cell.
        let mut table = vec![0, 0, 1, 1];
        table[1] = 1; // x*y := y at (0,1)
        let s = FiniteSemigroup::new(vec!["x".into(), "y".into()], table).unwrap();
        assert!(!s.validate().is_empty());
    }

    #[test]
    fn trivial_semigroup_is_fine() {
        let s = trivial("e");
        assert!(s.validate().is_empty());
        assert_eq!(s.idempotents(), vec![0]);
    }

    #[test]
    fn cyclic2_has_only_the_identity_idempotent() {
        let g = cyclic2();
        assert!(g.validate().is_empty());
        assert_eq!(g.idempotents(), vec![0]);
        let (zeros, identity) = g.right_zeros_and_identity();
        assert!(zeros.is_empty());
        assert_eq!(identity, Some(0));
    }

    #[test]
    fn right_zero_semigroup_is_all_right_zeros() {
        let x = right_zero_semigroup(&["p", "q"]);
        let (zeros, identity) = x.right_zeros_and_identity();
        assert_eq!(zeros, vec![0, 1]);
        assert_eq!(identity, None);
    }

    #[test]
    fn closure_of_two_constants_with_identity() {
        let c0 = Transformation { image: vec![0, 0] };
        let c1 = Transformation { image: vec![1, 1] };
        let closure = transformation_closure(&[c0, c1], true).unwrap();
        assert_eq!(closure.len(), 3);
        assert_eq!(closure[0], Transformation::identity(2));
    }

    #[test]
    fn closure_of_identity_alone() {
        let id = Transformation::identity(3);
        let closure = transformation_closure(&[id.clone()], false).unwrap();
        assert_eq!(closure, vec![id]);
    }

    #[test]
    fn swap_and_constant_generate_four_maps() {
        // The maps from the S[X] worked example: p->q,q->p and p->q,q->q.
        let swap = Transformation { image: vec![1, 0] };
        let const_q = Transformation { image: vec![1, 1] };
        let closure = transformation_closure(&[swap, const_q], false).unwrap();
        assert_eq!(closure.len(), 4);
        assert!(closure.contains(&Transformation::identity(2)));
        assert!(closure.contains(&Transformation { image: vec![0, 0] }));
    }

    #[test]
    fn closed_under_composition() {
        let swap = Transformation { image: vec![1, 0] };
        let const_q = Transformation { image: vec![1, 1] };
        let closure = transformation_closure(&[swap, const_q], true).unwrap();
        for f in &closure {
            for g in &closure {
                assert!(closure.contains(&f.then(g)));
            }
        }
    }

    #[test]
    fn semigroup_automaton_of_et() {
        let t = semilattice_et();
        let aut = finite_semigroup_automaton(&t, 1).unwrap();
        assert!(aut.validate().is_empty());
        assert_eq!(aut.alphabet, vec!["1", "e", "z"]);
        // delta(e, 1bar) = (z, ebar); z absorbs on the right everywhere.
        assert_eq!(aut.next(StateId(0), crate::mealy::SymbolId(0)), StateId(1));
        assert_eq!(aut.out(StateId(0), crate::mealy::SymbolId(0)), crate::mealy::SymbolId(1));
        for b in aut.symbol_ids() {
            assert_eq!(aut.next(StateId(1), b), StateId(1));
            assert_eq!(aut.out(StateId(1), b), crate::mealy::SymbolId(2));
        }
    }

    #[test]
    fn semigroup_automaton_is_faithful_on_et() {
        let t = semilattice_et();
        let aut = finite_semigroup_automaton(&t, 1).unwrap();
        for x in 0..t.len() {
            for y in 0..t.len() {
                let same = equal(
                    &aut,
                    &Word::single(StateId(x)),
                    &Word::single(StateId(y)),
                )
                .equal;
                assert_eq!(same, x == y);
                let product_word = Word::new(vec![StateId(x), StateId(y)]).unwrap();
                assert!(equal(&aut, &product_word, &Word::single(StateId(t.product(x, y)))).equal);
            }
        }
    }

    #[test]
    fn rejecting_a_non_right_zero() {
        let t = semilattice_et();
        assert!(matches!(
            finite_semigroup_automaton(&t, 0),
            Err(AlgebraError::NotARightZero { .. })
        ));
    }

    #[test]
    fn hom_check_passes_on_free_generators() {
        // Fig-style hom a -> e, b -> z out of the rank-2 free semigroup.
        let source = crate::instances::fig_free2();
        let t = semilattice_et();
        let hom = GeneratorHom { image: vec![0, 1] };
        assert!(matches!(
            check_generator_hom(&hom, &source, &t, 3),
            HomVerdict::Pass { bound: 3 }
        ));
    }

    #[test]
    fn hom_check_fails_on_the_counter_automaton_into_c2() {
        // a acts as identity with a*a = a, but g*g != g in C2.
        let source = crate::instances::fig_wreath_base();
        let hom = GeneratorHom { image: vec![1, 1] };
        match check_generator_hom(&hom, &source, &cyclic2(), 2) {
            HomVerdict::Fail { left, right } => {
                let lens = (left.len(), right.len());
                assert!(lens == (1, 2) || lens == (2, 1));
            }
            other => panic!("expected failure, got {other:?}"),
        }
    }

    #[test]
    fn identity_hom_on_a_finite_semigroup_automaton() {
        let t = semilattice_et();
        let aut = finite_semigroup_automaton(&t, 1).unwrap();
        let hom = GeneratorHom { image: vec![0, 1] };
        assert!(matches!(
            check_generator_hom(&hom, &aut, &t, 4),
            HomVerdict::Pass { .. }
        ));
    }
}
