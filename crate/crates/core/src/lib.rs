//! Mealy automata and the semigroups they generate.
//!
//! The crate builds automata for a family of semigroup constructions (free
//! products, wreath products by a finite monoid, Rees matrix semigroups,
//! strong semilattices, ideal and act extensions), decides word equality in
//! the generated semigroups, enumerates elements by word length, and runs
//! the refutation procedure showing that claimed automaton presentations of
//! subsemigroups of the naturals-with-zero always collapse.
//!
//! Entry points:
//! - [`mealy`]: automata, actions, wreath recursions, minimization,
//!   isomorphism, DOT export.
//! - [`algebra`]: finite semigroups by Cayley table, transformation
//!   closures, generator maps.
//! - [`word_problem`]: equality, balls and growth, zero detection,
//!   periodicity and the valuation refuter.
//! - [`constructions`]: the construction compilers.
//! - [`models`]: reference arithmetic used to cross-check the compilers.
//! - [`io`]: the text formats shared with the command-line tool.

pub mod algebra;
pub mod checks;
pub mod constructions;
pub mod instances;
pub mod io;
pub mod mealy;
pub mod models;
pub mod word_problem;
