//! Bounded syntactic congruence, computed from language membership only.
//!
//! `x ~ y` iff `uxv ∈ L ⇔ uyv ∈ L` for all `|u|, |v| ≤ ctx_len`. The check is
//! organized around the automaton: `u` only matters through the state it
//! reaches and `v` only through which states it leads to acceptance from,
//! which gives the same relation without enumerating context pairs.

use std::collections::HashMap;

use crate::automata::{words_up_to, Dfa};
use crate::error::{Error, Result};

/// Largest `word_len` / `ctx_len` accepted by [`brute_force_congruence`].
pub const DEFAULT_MAX_CONGRUENCE_LEN: usize = 8;

/// Classes of the bounded congruence on words of length `≤ word_len`.
///
/// Words within a class and classes by their first word are in shortlex order.
pub fn brute_force_congruence(dfa: &Dfa, word_len: usize, ctx_len: usize) -> Result<Vec<Vec<String>>> {
    if word_len.max(ctx_len) > DEFAULT_MAX_CONGRUENCE_LEN {
        return Err(Error::Budget {
            what: "congruence word length",
            limit: DEFAULT_MAX_CONGRUENCE_LEN as u64,
        });
    }
    let k = dfa.alphabet().len();
    let contexts: Vec<Vec<usize>> = words_up_to(k, ctx_len).collect();

    let mut left_states: Vec<usize> = contexts.iter().map(|u| dfa.run(dfa.initial(), u)).collect();
    left_states.sort_unstable();
    left_states.dedup();

    // right_class[q]: which suffixes lead q to acceptance
    let mut suffix_ids: HashMap<Vec<bool>, usize> = HashMap::new();
    let right_class: Vec<usize> = (0..dfa.state_count())
        .map(|q| {
            let key: Vec<bool> = contexts.iter().map(|v| dfa.is_accepting(dfa.run(q, v))).collect();
            let next = suffix_ids.len();
            *suffix_ids.entry(key).or_insert(next)
        })
        .collect();

    let mut class_of: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut classes: Vec<Vec<String>> = Vec::new();
    for x in words_up_to(k, word_len) {
        let signature: Vec<usize> = left_states.iter().map(|&p| right_class[dfa.run(p, &x)]).collect();
        let next = classes.len();
        let id = *class_of.entry(signature).or_insert(next);
        if id == next {
            classes.push(Vec::new());
        }
        classes[id].push(dfa.alphabet().decode(&x));
    }
    Ok(classes)
}
