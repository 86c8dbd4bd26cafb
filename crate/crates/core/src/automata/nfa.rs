use std::collections::{BTreeSet, HashMap, VecDeque};

use super::alphabet::Alphabet;
use super::dfa::Dfa;
use crate::error::{Error, Result};

/// Nondeterministic automaton with epsilon moves. Letters are alphabet indices.
#[derive(Debug, Clone)]
pub struct Nfa {
    alphabet: Alphabet,
    /// `transitions[q]` lists `(letter, target)`; `None` is an epsilon move.
    transitions: Vec<Vec<(Option<usize>, usize)>>,
    initial: BTreeSet<usize>,
    accepting: BTreeSet<usize>,
}

impl Nfa {
    pub fn new(alphabet: Alphabet) -> Self {
        Nfa {
            alphabet,
            transitions: Vec::new(),
            initial: BTreeSet::new(),
            accepting: BTreeSet::new(),
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.transitions.len()
    }

    pub fn add_state(&mut self) -> usize {
        self.transitions.push(Vec::new());
        self.transitions.len() - 1
    }

    pub fn add_transition(&mut self, from: usize, letter: Option<usize>, to: usize) {
        assert!(to < self.transitions.len(), "transition target out of range");
        if let Some(l) = letter {
            assert!(l < self.alphabet.len(), "letter index out of range");
        }
        self.transitions[from].push((letter, to));
    }

    pub fn set_initial(&mut self, state: usize) {
        self.initial.insert(state);
    }

    pub fn set_accepting(&mut self, state: usize) {
        self.accepting.insert(state);
    }

    pub fn initial(&self) -> &BTreeSet<usize> {
        &self.initial
    }

    pub fn accepting(&self) -> &BTreeSet<usize> {
        &self.accepting
    }

    pub fn transitions(&self, state: usize) -> &[(Option<usize>, usize)] {
        &self.transitions[state]
    }

    /// Copies the states of `dfa` into this automaton; returns the offset of
    /// its state 0.
    pub(crate) fn embed_dfa(&mut self, dfa: &Dfa) -> usize {
        let offset = self.transitions.len();
        for _ in 0..dfa.state_count() {
            self.add_state();
        }
        for q in 0..dfa.state_count() {
            for a in 0..self.alphabet.len() {
                self.transitions[offset + q].push((Some(a), offset + dfa.next(q, a)));
            }
        }
        offset
    }

    fn closure(&self, set: &mut BTreeSet<usize>) {
        let mut stack: Vec<usize> = set.iter().copied().collect();
        while let Some(q) = stack.pop() {
            for &(label, to) in &self.transitions[q] {
                if label.is_none() && set.insert(to) {
                    stack.push(to);
                }
            }
        }
    }

    pub fn accepts_indices(&self, word: &[usize]) -> bool {
        let mut current = self.initial.clone();
        self.closure(&mut current);
        for &a in word {
            let mut next = BTreeSet::new();
            for &q in &current {
                for &(label, to) in &self.transitions[q] {
                    if label == Some(a) {
                        next.insert(to);
                    }
                }
            }
            self.closure(&mut next);
            current = next;
        }
        current.iter().any(|q| self.accepting.contains(q))
    }

    /// Subset construction. The result is complete: the empty subset is the sink.
    pub fn determinize(&self, max_states: usize) -> Result<Dfa> {
        let k = self.alphabet.len();
        let mut start = self.initial.clone();
        self.closure(&mut start);
        let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut subsets: Vec<Vec<usize>> = Vec::new();
        let mut delta: Vec<Vec<usize>> = Vec::new();
        let key: Vec<usize> = start.into_iter().collect();
        index.insert(key.clone(), 0);
        subsets.push(key);
        let mut queue = VecDeque::from([0usize]);
        while let Some(s) = queue.pop_front() {
            let mut row = Vec::with_capacity(k);
            for a in 0..k {
                let mut next = BTreeSet::new();
                for &q in &subsets[s] {
                    for &(label, to) in &self.transitions[q] {
                        if label == Some(a) {
                            next.insert(to);
                        }
                    }
                }
                self.closure(&mut next);
                let key: Vec<usize> = next.into_iter().collect();
                let id = match index.get(&key) {
                    Some(&id) => id,
                    None => {
                        let id = subsets.len();
                        if id >= max_states {
                            return Err(Error::Budget {
                                what: "subset-construction state",
                                limit: max_states as u64,
                            });
                        }
                        index.insert(key.clone(), id);
                        subsets.push(key);
                        queue.push_back(id);
                        id
                    }
                };
                row.push(id);
            }
            delta.push(row);
        }
        let accepting = subsets
            .iter()
            .map(|s| s.iter().any(|q| self.accepting.contains(q)))
            .collect();
        Ok(Dfa::from_parts(self.alphabet.clone(), delta, 0, accepting))
    }
}
