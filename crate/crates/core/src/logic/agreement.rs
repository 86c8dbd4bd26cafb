//! Bounded-length comparison of a sentence with an automaton.

use super::eval::CompiledFormula;
use super::fo::Formula;
use super::ltl::LtlFormula;
use crate::automata::{count_words_up_to, words_up_to, Dfa};
use crate::error::{Error, Result};

/// Default cap on the number of words compared.
pub const DEFAULT_MAX_AGREEMENT_WORDS: u64 = 1_000_000;

/// A sentence in either logic.
#[derive(Debug, Clone, Copy)]
pub enum Sentence<'a> {
    Fo(&'a Formula<char>),
    /// Evaluated at the virtual start position.
    Ltl(&'a LtlFormula),
}

impl<'a> From<&'a Formula<char>> for Sentence<'a> {
    fn from(f: &'a Formula<char>) -> Self {
        Sentence::Fo(f)
    }
}

impl<'a> From<&'a LtlFormula> for Sentence<'a> {
    fn from(f: &'a LtlFormula) -> Self {
        Sentence::Ltl(f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Agreement {
    Agree,
    /// Shortest, then lexicographically least, word on which they differ.
    Disagree(String),
}

impl Agreement {
    pub fn agrees(&self) -> bool {
        matches!(self, Agreement::Agree)
    }
}

pub fn agreement<'a>(sentence: impl Into<Sentence<'a>>, dfa: &Dfa, max_len: usize) -> Result<Agreement> {
    agreement_with_budget(sentence, dfa, max_len, DEFAULT_MAX_AGREEMENT_WORDS)
}

pub fn agreement_with_budget<'a>(
    sentence: impl Into<Sentence<'a>>,
    dfa: &Dfa,
    max_len: usize,
    max_words: u64,
) -> Result<Agreement> {
    let alphabet = dfa.alphabet();
    if count_words_up_to(alphabet.len(), max_len) > max_words {
        return Err(Error::Budget {
            what: "agreement word",
            limit: max_words,
        });
    }
    type Truth<'f> = Box<dyn Fn(&[char]) -> bool + 'f>;
    let truth: Truth<'_> = match sentence.into() {
        Sentence::Fo(f) => {
            let compiled = CompiledFormula::new(f);
            if !compiled.free_variables().is_empty() {
                return Err(Error::FreeVariables(compiled.free_variables().to_vec()));
            }
            Box::new(move |w| compiled.eval(w, &[]))
        }
        Sentence::Ltl(f) => Box::new(move |w| f.accepts(w)),
    };
    let mut letters = Vec::with_capacity(max_len);
    for word in words_up_to(alphabet.len(), max_len) {
        letters.clear();
        letters.extend(word.iter().map(|&i| alphabet.letter(i)));
        if truth(&letters) != dfa.accepts_indices(&word) {
            return Ok(Agreement::Disagree(letters.iter().collect()));
        }
    }
    Ok(Agreement::Agree)
}
