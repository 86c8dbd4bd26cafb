use std::collections::{HashMap, VecDeque};

use super::alphabet::Alphabet;
use crate::error::Result;

/// A complete deterministic automaton.
///
/// `delta` is total: every state has a successor for every letter, so the
/// transformations induced by words are total functions on the state set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Alphabet,
    delta: Vec<Vec<usize>>,
    initial: usize,
    accepting: Vec<bool>,
}

impl Dfa {
    /// Builds a DFA from its parts.
    ///
    /// Panics if the transition table is not total or refers to a missing state.
    pub fn from_parts(alphabet: Alphabet, delta: Vec<Vec<usize>>, initial: usize, accepting: Vec<bool>) -> Self {
        let n = delta.len();
        assert!(n > 0, "a DFA needs at least one state");
        assert_eq!(accepting.len(), n, "accepting flags must cover every state");
        assert!(initial < n, "initial state out of range");
        for row in &delta {
            assert_eq!(row.len(), alphabet.len(), "transition table must be total");
            assert!(row.iter().all(|&q| q < n), "transition target out of range");
        }
        Dfa {
            alphabet,
            delta,
            initial,
            accepting,
        }
    }

    /// The automaton accepting nothing (a single rejecting sink).
    pub fn empty(alphabet: Alphabet) -> Self {
        let k = alphabet.len();
        Dfa::from_parts(alphabet, vec![vec![0; k]], 0, vec![false])
    }

    /// The automaton accepting every word.
    pub fn universal(alphabet: Alphabet) -> Self {
        Dfa::empty(alphabet).complement()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.delta.len()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn next(&self, state: usize, letter: usize) -> usize {
        self.delta[state][letter]
    }

    pub fn is_accepting(&self, state: usize) -> bool {
        self.accepting[state]
    }

    pub fn accepting_flags(&self) -> &[bool] {
        &self.accepting
    }

    pub fn run(&self, from: usize, word: &[usize]) -> usize {
        word.iter().fold(from, |q, &a| self.delta[q][a])
    }

    pub fn accepts_indices(&self, word: &[usize]) -> bool {
        self.accepting[self.run(self.initial, word)]
    }

    /// Membership test for a word written with alphabet characters.
    pub fn accepts(&self, word: &str) -> Result<bool> {
        Ok(self.accepts_indices(&self.alphabet.encode(word)?))
    }

    pub fn complement(&self) -> Self {
        Dfa {
            alphabet: self.alphabet.clone(),
            delta: self.delta.clone(),
            initial: self.initial,
            accepting: self.accepting.iter().map(|a| !a).collect(),
        }
    }

    /// Reachable part of the synchronous product, with acceptance combined by `op`.
    pub fn product(&self, other: &Dfa, op: impl Fn(bool, bool) -> bool) -> Self {
        assert_eq!(self.alphabet, other.alphabet, "product needs equal alphabets");
        let k = self.alphabet.len();
        let mut index = HashMap::new();
        let mut pairs = vec![(self.initial, other.initial)];
        index.insert(pairs[0], 0);
        let mut delta = Vec::new();
        let mut i = 0;
        while i < pairs.len() {
            let (p, q) = pairs[i];
            let row = (0..k)
                .map(|a| {
                    let target = (self.delta[p][a], other.delta[q][a]);
                    *index.entry(target).or_insert_with(|| {
                        pairs.push(target);
                        pairs.len() - 1
                    })
                })
                .collect();
            delta.push(row);
            i += 1;
        }
        let accepting = pairs
            .iter()
            .map(|&(p, q)| op(self.accepting[p], other.accepting[q]))
            .collect();
        Dfa::from_parts(self.alphabet.clone(), delta, 0, accepting)
    }

    pub fn intersection(&self, other: &Dfa) -> Self {
        self.product(other, |a, b| a && b)
    }

    pub fn union(&self, other: &Dfa) -> Self {
        self.product(other, |a, b| a || b)
    }

    /// Renumbers the reachable states in breadth-first discovery order,
    /// exploring letters in alphabet order, and drops the unreachable ones.
    pub fn canonical(&self) -> Self {
        let mut order = vec![usize::MAX; self.delta.len()];
        let mut queue = VecDeque::from([self.initial]);
        let mut visited = vec![self.initial];
        order[self.initial] = 0;
        while let Some(q) = queue.pop_front() {
            for &t in &self.delta[q] {
                if order[t] == usize::MAX {
                    order[t] = visited.len();
                    visited.push(t);
                    queue.push_back(t);
                }
            }
        }
        let delta = visited
            .iter()
            .map(|&q| self.delta[q].iter().map(|&t| order[t]).collect())
            .collect();
        let accepting = visited.iter().map(|&q| self.accepting[q]).collect();
        Dfa::from_parts(self.alphabet.clone(), delta, 0, accepting)
    }

    /// Minimal complete DFA for the same language, canonically numbered.
    ///
    /// Hopcroft's partition refinement on the reachable part.
    pub fn minimize(&self) -> Self {
        let dfa = self.canonical();
        let n = dfa.state_count();
        let k = dfa.alphabet.len();

        let mut inverse = vec![vec![Vec::new(); n]; k];
        for q in 0..n {
            for a in 0..k {
                inverse[a][dfa.delta[q][a]].push(q);
            }
        }

        let (acc, rej): (Vec<usize>, Vec<usize>) = (0..n).partition(|&q| dfa.accepting[q]);
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut block_of = vec![0usize; n];
        for part in [acc, rej] {
            if !part.is_empty() {
                for &q in &part {
                    block_of[q] = blocks.len();
                }
                blocks.push(part);
            }
        }
        let mut in_work = vec![false; blocks.len()];
        let mut work: Vec<usize> = Vec::new();
        if blocks.len() == 2 {
            let smaller = if blocks[0].len() <= blocks[1].len() { 0 } else { 1 };
            work.push(smaller);
            in_work[smaller] = true;
        }

        let mut marked = vec![false; n];
        while let Some(splitter) = work.pop() {
            in_work[splitter] = false;
            let members = blocks[splitter].clone();
            for preimage in &inverse {
                let mut touched: Vec<usize> = Vec::new();
                for &s in &members {
                    for &p in &preimage[s] {
                        if !marked[p] {
                            marked[p] = true;
                            touched.push(p);
                        }
                    }
                }
                let mut hit: Vec<usize> = touched.iter().map(|&p| block_of[p]).collect();
                hit.sort_unstable();
                hit.dedup();
                for b in hit {
                    let (inside, outside): (Vec<usize>, Vec<usize>) = blocks[b].iter().partition(|&&q| marked[q]);
                    if outside.is_empty() {
                        continue;
                    }
                    let new_id = blocks.len();
                    for &q in &outside {
                        block_of[q] = new_id;
                    }
                    let inside_len = inside.len();
                    let outside_len = outside.len();
                    blocks[b] = inside;
                    blocks.push(outside);
                    in_work.push(false);
                    if in_work[b] {
                        work.push(new_id);
                        in_work[new_id] = true;
                    } else {
                        let pick = if inside_len <= outside_len { b } else { new_id };
                        work.push(pick);
                        in_work[pick] = true;
                    }
                }
                for p in touched {
                    marked[p] = false;
                }
            }
        }

        let delta = blocks
            .iter()
            .map(|block| {
                let q = block[0];
                (0..k).map(|a| block_of[dfa.delta[q][a]]).collect()
            })
            .collect();
        let accepting = blocks.iter().map(|block| dfa.accepting[block[0]]).collect();
        Dfa::from_parts(dfa.alphabet.clone(), delta, block_of[dfa.initial], accepting).canonical()
    }

    /// Language equality, decided on canonical minimal automata.
    pub fn equivalent(&self, other: &Dfa) -> bool {
        self.alphabet == other.alphabet && self.minimize() == other.minimize()
    }

    /// Every accepted word of length at most `max_len`, shortest first and
    /// lexicographic (in alphabet order) within a length.
    pub fn enumerate_words(&self, max_len: usize) -> Vec<String> {
        self.enumerate_indices(max_len)
            .into_iter()
            .map(|w| self.alphabet.decode(&w))
            .collect()
    }

    pub fn enumerate_indices(&self, max_len: usize) -> Vec<Vec<usize>> {
        let n = self.state_count();
        // live[r][q]: some accepted word of length exactly r starts at q
        let mut live = vec![self.accepting.clone()];
        for r in 1..=max_len {
            let prev = &live[r - 1];
            let row = (0..n).map(|q| self.delta[q].iter().any(|&t| prev[t])).collect();
            live.push(row);
        }
        let mut out = Vec::new();
        for len in 0..=max_len {
            let mut word = Vec::with_capacity(len);
            self.collect(self.initial, len, &live, &mut word, &mut out);
        }
        out
    }

    fn collect(
        &self,
        q: usize,
        remaining: usize,
        live: &[Vec<bool>],
        word: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if !live[remaining][q] {
            return;
        }
        if remaining == 0 {
            out.push(word.clone());
            return;
        }
        for a in 0..self.alphabet.len() {
            word.push(a);
            self.collect(self.delta[q][a], remaining - 1, live, word, out);
            word.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn even_a() -> Dfa {
        let alphabet = Alphabet::parse("a").unwrap();
        Dfa::from_parts(alphabet, vec![vec![1], vec![0]], 0, vec![true, false])
    }

    #[test]
    fn enumerate_even_length() {
        assert_eq!(even_a().enumerate_words(5), vec!["", "aa", "aaaa"]);
        let empty = Dfa::empty(Alphabet::parse("ab").unwrap());
        assert!(empty.enumerate_words(10).is_empty());
    }

    #[test]
    fn minimize_merges_equivalent_states() {
        // four-state counter mod 4 accepting even counts == parity automaton
        let alphabet = Alphabet::parse("a").unwrap();
        let dfa = Dfa::from_parts(
            alphabet,
            vec![vec![1], vec![2], vec![3], vec![0]],
            0,
            vec![true, false, true, false],
        );
        let min = dfa.minimize();
        assert_eq!(min, even_a());
        assert_eq!(min.minimize(), min);
    }

    #[test]
    fn universal_and_empty_are_one_state() {
        let alphabet = Alphabet::parse("ab").unwrap();
        assert_eq!(Dfa::universal(alphabet.clone()).minimize().state_count(), 1);
        assert!(Dfa::universal(alphabet.clone()).accepts("").unwrap());
        assert!(!Dfa::empty(alphabet).accepts("ab").unwrap());
    }

    #[test]
    fn undeclared_letter() {
        assert!(even_a().accepts("ab").is_err());
    }
}
