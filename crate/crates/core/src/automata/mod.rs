//! Regular expressions, automata and language-level utilities.

mod alphabet;
mod compile;
mod dfa;
mod nfa;
mod regex;

pub(crate) use alphabet::{count_words_up_to, words_up_to};
pub use alphabet::{Alphabet, RESERVED};
pub use compile::{compile, compile_with_budget, DEFAULT_MAX_SUBSET_STATES};
pub use dfa::Dfa;
pub use nfa::Nfa;
pub use regex::{parse_regex, RegexAst};

use crate::error::Result;

/// Parses and compiles `text`, returning the minimal complete DFA.
pub fn regex_to_min_dfa(text: &str, alphabet: &Alphabet) -> Result<Dfa> {
    Ok(compile(&parse_regex(text, alphabet)?, alphabet)?.minimize())
}
