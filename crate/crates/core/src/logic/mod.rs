//! FO+MOD[<] and LTL over finite words: parsing, evaluation, substitution,
//! relativization, translation, and bounded agreement with automata.
//!
//! FO grammar, loosest first: `φ -> ψ` (right associative), `|`, `&`, then
//! `~φ`, `E x. φ`, `A x. φ`, `E[i mod m] x. φ`, and atoms `Qa x`, `x < y`,
//! `x = y`, `S(x,y)`, `true`, `false`. Comparisons `<=`, `>`, `>=`, `!=` are
//! sugar. Quantifier bodies extend as far right as possible.

mod agreement;
mod eval;
mod fo;
mod ltl;
mod relativize;
mod substitution;

pub use agreement::{agreement, agreement_with_budget, Agreement, Sentence, DEFAULT_MAX_AGREEMENT_WORDS};
pub use eval::{eval_fo, pointed_set, CompiledFormula, WordStructure};
pub use fo::{parse_fo, parse_fo_phi, parse_fo_sentence, Formula, PhiSet};
pub use ltl::{eval_ltl, ltl_to_fo, ltl_to_fo_sentence, parse_ltl, LtlFormula, PointedWord};
pub use relativize::{relativize, Direction};
pub use substitution::{sigma_inverse, substitute, Substitution};
