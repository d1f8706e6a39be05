//! Compilers from semigroup constructions to concrete automata.
//!
//! Each builder validates the hypotheses of its construction first, then
//! emits an automaton over structured symbol names, together with enough
//! labelling to find the generators of the factors inside it.

mod adjoin;
mod free_product;
mod ideal;
mod product;
mod rees;
mod semilattice;
mod wreath;

pub use adjoin::{adjoin_identity, adjoin_zero};
pub use free_product::{
    free_product_finite, free_product_general, FpSymbol, FreeProductAutomaton,
    FreeProductGeneralAutomaton, HypothesisMode,
};
pub use ideal::{act_extension, ideal_extension, ActExtensionSpec, IdealExtensionSpec};
pub use product::{direct_power, direct_product};
pub use rees::{rees_matrix, ReesAutomaton, ReesSpec};
pub use semilattice::{strong_semilattice, SemilatticeAutomaton, SemilatticeSpec};
pub use wreath::{wreath_product, WreathAutomaton};

use crate::mealy::Word;

#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum ConstructionError {
    #[error("{element:?} is not an idempotent of {side}")]
    NotIdempotent { side: &'static str, element: String },
    #[error("state {state:?} is not idempotent in its automaton")]
    StateNotIdempotent { state: String },
    #[error("the top semigroup has no identity element")]
    NotAMonoid,
    #[error("no sandwich matrix entry is the designated identity state")]
    NoIdentityEntry,
    #[error("left-multiplication claim {p:?} * {x:?} = {y:?} failed the equality check")]
    LeftMultClaimFailed { p: String, x: String, y: String },
    #[error("missing left-multiplication claim for {p:?} * {x:?}")]
    LeftMultClaimMissing { p: String, x: String },
    #[error("{z:?} is not a right zero of the bottom semigroup")]
    NotARightZero { z: String },
    #[error("generator map for part {part} failed the bounded homomorphism check: {left:?} = {right:?} in the part but images differ")]
    HomCheckFailed { part: usize, left: Vec<String>, right: Vec<String> },
    #[error("action data is inconsistent: {detail}")]
    ActionInconsistent { detail: String },
    #[error("no element of the ideal realizes the left action of state {state:?} by left multiplication")]
    NoLeftRealizer { state: String },
    #[error("input automaton is invalid: {0}")]
    InvalidInput(String),
}

/// Pick `base` if it is not already taken, else keep appending `'`.
pub(crate) fn fresh_name(base: &str, taken: &[String]) -> String {
    let mut name = base.to_string();
    while taken.iter().any(|t| *t == name) {
        name.push('\'');
    }
    name
}

/// Disambiguate the names of two state families that get merged: names
/// unique across both sides are kept, clashes get the family suffix.
pub(crate) fn merge_names(
    left: &[String],
    right: &[String],
    left_suffix: &str,
    right_suffix: &str,
) -> (Vec<String>, Vec<String>) {
    let clash = |n: &String| left.contains(n) && right.contains(n);
    let l = left
        .iter()
        .map(|n| if clash(n) { format!("{n}{left_suffix}") } else { n.clone() })
        .collect();
    let r = right
        .iter()
        .map(|n| if clash(n) { format!("{n}{right_suffix}") } else { n.clone() })
        .collect();
    (l, r)
}

/// Render a word as space-separated state names (used in errors).
pub(crate) fn word_names(aut: &crate::mealy::MealyAutomaton, w: &Word) -> Vec<String> {
    w.letters().iter().map(|&q| aut.state_name(q).to_string()).collect()
}
