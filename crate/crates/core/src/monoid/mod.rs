//! Finite monoids given by multiplication tables, syntactic monoids of
//! regular languages, and the algebra needed to test pseudo-identities.

mod congruence;
mod green;
mod omega;
mod subgroup;
mod text;

use std::collections::{HashMap, VecDeque};
use std::fmt;

pub use congruence::{brute_force_congruence, DEFAULT_MAX_CONGRUENCE_LEN};
pub use green::{green_relations, GreenData};
pub use omega::{
    check_identity, check_identity_with_budget, eval_omega_term, Assignment, Counterexample, Identity, IdentityCheck,
    OmegaTerm, DEFAULT_MAX_EVALUATIONS,
};
pub use subgroup::{is_abelian, is_solvable, maximal_subgroups, Subgroup};
pub use text::{parse_monoid_text, MonoidFile};

use crate::automata::{regex_to_min_dfa, Alphabet, Dfa};
use crate::error::{Error, Result};

/// Index of a monoid element.
pub type Element = usize;

/// Default cap on the number of elements of a transition monoid.
pub const DEFAULT_MAX_ELEMENTS: usize = 100_000;

/// Largest monoid whose dense multiplication table is materialized.
pub const MAX_TABLE_ELEMENTS: usize = 8_192;

/// Tables up to this size are checked for associativity on construction.
pub const ASSOCIATIVITY_CHECK_LIMIT: usize = 200;

/// A finite monoid as a multiplication table.
///
/// Elements are `0..size`. When the monoid comes from a language, `generators`
/// maps each letter to its image and `reps[m]` is the shortest (then
/// lexicographically least) word evaluating to `m`.
#[derive(Clone, PartialEq, Eq)]
pub struct Monoid {
    size: usize,
    table: Vec<Element>,
    identity: Element,
    generators: Vec<(char, Element)>,
    reps: Vec<Option<String>>,
    omega: Vec<Element>,
}

impl Monoid {
    /// Builds a monoid from an explicit table (`table[i][j]` is `i·j`).
    ///
    /// Validates shape, range and the identity law; associativity is checked
    /// exhaustively for tables up to [`ASSOCIATIVITY_CHECK_LIMIT`] elements.
    pub fn from_table(table: Vec<Vec<Element>>, identity: Element) -> Result<Self> {
        let size = table.len();
        if size == 0 {
            return Err(Error::InvalidMonoid("empty table".into()));
        }
        if identity >= size {
            return Err(Error::InvalidMonoid(format!("identity {identity} out of range")));
        }
        let mut flat = Vec::with_capacity(size * size);
        for (i, row) in table.iter().enumerate() {
            if row.len() != size {
                return Err(Error::InvalidMonoid(format!(
                    "row {i} has {} entries, expected {size}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= size) {
                return Err(Error::InvalidMonoid(format!("row {i} mentions element {bad}")));
            }
            flat.extend_from_slice(row);
        }
        let monoid = Monoid::from_flat(size, flat, identity);
        for m in 0..size {
            if monoid.mul(identity, m) != m || monoid.mul(m, identity) != m {
                return Err(Error::InvalidMonoid(format!(
                    "{identity} is not an identity (fails at {m})"
                )));
            }
        }
        if size <= ASSOCIATIVITY_CHECK_LIMIT {
            if let Some((a, b, c)) = monoid.associativity_failure() {
                return Err(Error::InvalidMonoid(format!(
                    "not associative: ({a}·{b})·{c} ≠ {a}·({b}·{c})"
                )));
            }
        }
        Ok(monoid)
    }

    /// Trusted constructor; callers guarantee a valid monoid table.
    pub(crate) fn from_flat(size: usize, table: Vec<Element>, identity: Element) -> Self {
        let mut monoid = Monoid {
            size,
            table,
            identity,
            generators: Vec::new(),
            reps: vec![None; size],
            omega: Vec::new(),
        };
        monoid.omega = (0..size).map(|m| monoid.compute_idempotent_power(m)).collect();
        monoid
    }

    /// Attaches a generator map and recomputes shortlex representatives.
    ///
    /// Elements not reachable from the generators keep no representative.
    pub fn with_generators(mut self, generators: Vec<(char, Element)>) -> Result<Self> {
        for (i, &(c, m)) in generators.iter().enumerate() {
            if m >= self.size {
                return Err(Error::InvalidMonoid(format!("generator {c} maps to {m}")));
            }
            if generators[..i].iter().any(|&(d, _)| d == c) {
                return Err(Error::InvalidMonoid(format!("generator {c} listed twice")));
            }
        }
        let mut reps: Vec<Option<String>> = vec![None; self.size];
        reps[self.identity] = Some(String::new());
        let mut queue = VecDeque::from([self.identity]);
        while let Some(m) = queue.pop_front() {
            for &(c, g) in &generators {
                let next = self.mul(m, g);
                if reps[next].is_none() {
                    let mut word = reps[m].clone().expect("discovered");
                    word.push(c);
                    reps[next] = Some(word);
                    queue.push_back(next);
                }
            }
        }
        self.generators = generators;
        self.reps = reps;
        Ok(self)
    }

    /// Monoid of total transformations of `0..points` generated by `gens`.
    ///
    /// Elements are discovered breadth-first (letters in the given order), so
    /// element 0 is the identity and each representative is shortlex-minimal.
    /// Transformations compose left to right: `f·g` applies `f` first.
    pub fn from_transformations(points: usize, gens: &[(char, Vec<usize>)], max_elements: usize) -> Result<Self> {
        for (c, t) in gens {
            if t.len() != points || t.iter().any(|&p| p >= points) {
                return Err(Error::InvalidMonoid(format!(
                    "generator {c} is not a transformation of {points} points"
                )));
            }
        }
        let identity: Vec<usize> = (0..points).collect();
        let mut index: HashMap<Vec<usize>, Element> = HashMap::new();
        let mut elements = vec![identity.clone()];
        let mut reps = vec![String::new()];
        index.insert(identity, 0);
        let mut i = 0;
        while i < elements.len() {
            for (c, g) in gens {
                let next: Vec<usize> = elements[i].iter().map(|&p| g[p]).collect();
                if !index.contains_key(&next) {
                    if elements.len() >= max_elements {
                        return Err(Error::Budget {
                            what: "monoid element",
                            limit: max_elements as u64,
                        });
                    }
                    index.insert(next.clone(), elements.len());
                    let mut word = reps[i].clone();
                    word.push(*c);
                    reps.push(word);
                    elements.push(next);
                }
            }
            i += 1;
        }
        let size = elements.len();
        if size > MAX_TABLE_ELEMENTS {
            return Err(Error::Budget {
                what: "multiplication table",
                limit: MAX_TABLE_ELEMENTS as u64,
            });
        }
        let mut table = Vec::with_capacity(size * size);
        let mut scratch = vec![0; points];
        for f in &elements {
            for g in &elements {
                for (p, slot) in scratch.iter_mut().enumerate() {
                    *slot = g[f[p]];
                }
                table.push(index[&scratch]);
            }
        }
        let generators = gens.iter().map(|(c, g)| (*c, index[g])).collect();
        let mut monoid = Monoid::from_flat(size, table, 0);
        monoid.generators = generators;
        monoid.reps = reps.into_iter().map(Some).collect();
        Ok(monoid)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn identity(&self) -> Element {
        self.identity
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.size
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        self.table[a * self.size + b]
    }

    pub fn product(&self, elements: impl IntoIterator<Item = Element>) -> Element {
        elements.into_iter().fold(self.identity, |acc, m| self.mul(acc, m))
    }

    pub fn table_rows(&self) -> impl Iterator<Item = &[Element]> {
        self.table.chunks(self.size)
    }

    pub fn generators(&self) -> &[(char, Element)] {
        &self.generators
    }

    pub fn generator(&self, letter: char) -> Option<Element> {
        self.generators.iter().find(|&&(c, _)| c == letter).map(|&(_, m)| m)
    }

    pub fn rep(&self, m: Element) -> Option<&str> {
        self.reps[m].as_deref()
    }

    /// Representative word, or `#m` when the element has none.
    pub fn label(&self, m: Element) -> String {
        match self.rep(m) {
            Some("") => "1".to_string(),
            Some(w) => w.to_string(),
            None => format!("#{m}"),
        }
    }

    pub(crate) fn set_reps(&mut self, reps: Vec<Option<String>>) {
        self.reps = reps;
    }

    /// Image of a word under the generator map.
    pub fn eval_word(&self, word: &str) -> Result<Element> {
        word.chars().try_fold(self.identity, |acc, c| {
            self.generator(c)
                .map(|g| self.mul(acc, g))
                .ok_or(Error::UndeclaredLetter(c))
        })
    }

    pub fn is_idempotent(&self, m: Element) -> bool {
        self.mul(m, m) == m
    }

    pub fn idempotents(&self) -> Vec<Element> {
        self.elements().filter(|&m| self.is_idempotent(m)).collect()
    }

    /// The unique idempotent among the powers of `m`.
    pub fn idempotent_power(&self, m: Element) -> Element {
        self.omega[m]
    }

    fn compute_idempotent_power(&self, m: Element) -> Element {
        let mut power = m;
        for _ in 0..=self.size {
            if self.is_idempotent(power) {
                return power;
            }
            power = self.mul(power, m);
        }
        unreachable!("the power sequence of a finite monoid element reaches an idempotent")
    }

    /// Letters whose image is the identity.
    pub fn neutral_letters(&self) -> Vec<char> {
        self.generators
            .iter()
            .filter(|&&(_, m)| m == self.identity)
            .map(|&(c, _)| c)
            .collect()
    }

    /// First `(a, b, c)` with `(ab)c ≠ a(bc)`, if any.
    pub fn associativity_failure(&self) -> Option<(Element, Element, Element)> {
        for a in self.elements() {
            for b in self.elements() {
                let ab = self.mul(a, b);
                for c in self.elements() {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn is_commutative(&self) -> bool {
        self.elements()
            .all(|a| (a + 1..self.size).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Explicit-table text format (see [`parse_monoid_text`]).
    pub fn to_text(&self) -> String {
        text::render(self)
    }
}

impl fmt::Debug for Monoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Monoid")
            .field("size", &self.size)
            .field("identity", &self.identity)
            .field("generators", &self.generators)
            .field("reps", &self.reps)
            .finish()
    }
}

impl fmt::Display for Monoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.elements().map(|m| self.label(m)).collect();
        let width = labels.iter().map(|l| l.chars().count()).max().unwrap_or(1);
        write!(f, "{:>width$} |", "·")?;
        for l in &labels {
            write!(f, " {l:>width$}")?;
        }
        writeln!(f)?;
        writeln!(f, "{}", "-".repeat((width + 1) * (self.size + 1) + 1))?;
        for (a, row) in self.table_rows().enumerate() {
            write!(f, "{:>width$} |", labels[a])?;
            for &b in row {
                write!(f, " {:>width$}", labels[b])?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Transition monoid of a complete DFA: the transformations of the state set
/// induced by words, one generator per letter in alphabet order.
pub fn transition_monoid(dfa: &Dfa) -> Result<Monoid> {
    transition_monoid_with_budget(dfa, DEFAULT_MAX_ELEMENTS)
}

pub fn transition_monoid_with_budget(dfa: &Dfa, max_elements: usize) -> Result<Monoid> {
    let gens: Vec<(char, Vec<usize>)> = dfa
        .alphabet()
        .letters()
        .iter()
        .enumerate()
        .map(|(a, &c)| (c, (0..dfa.state_count()).map(|q| dfa.next(q, a)).collect()))
        .collect();
    Monoid::from_transformations(dfa.state_count(), &gens, max_elements)
}

/// Syntactic monoid of the language of `dfa` (transition monoid of its
/// minimal complete automaton).
pub fn syntactic_monoid(dfa: &Dfa) -> Result<Monoid> {
    transition_monoid(&dfa.minimize())
}

/// Syntactic monoid of the language denoted by a regex.
pub fn syntactic_monoid_of_regex(text: &str, alphabet: &Alphabet) -> Result<Monoid> {
    transition_monoid(&regex_to_min_dfa(text, alphabet)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn monoid(regex: &str, alphabet: &str) -> Monoid {
        syntactic_monoid_of_regex(regex, &Alphabet::parse(alphabet).unwrap()).unwrap()
    }

    fn el(m: &Monoid, word: &str) -> Element {
        m.eval_word(word).unwrap()
    }

    #[test]
    fn ab_star_gives_b2() {
        let m = monoid("(ab)*", "ab");
        assert_eq!(m.size(), 6);
        let reps: Vec<_> = m.elements().map(|e| m.label(e)).collect();
        assert_eq!(reps, ["1", "a", "b", "aa", "ab", "ba"]);
        assert_eq!(el(&m, "aba"), el(&m, "a"));
        assert_eq!(el(&m, "bab"), el(&m, "b"));
        assert_eq!(el(&m, "aa"), el(&m, "bb"));
        let zero = el(&m, "aa");
        assert!(m.elements().all(|x| m.mul(x, zero) == zero && m.mul(zero, x) == zero));
        assert!(m.associativity_failure().is_none());
    }

    #[test]
    fn universal_language_trivial_monoid() {
        let m = monoid("!0", "a");
        assert_eq!(m.size(), 1);
        assert_eq!(m.neutral_letters(), vec!['a']);
    }

    #[test]
    fn mod_two_block_language() {
        let m = monoid("(b*ab*a)*b!0", "ab");
        assert_eq!(m.size(), 7);
        assert_eq!(el(&m, "aa"), m.identity());
        assert_eq!(el(&m, "bb"), el(&m, "b"));
        let zero = el(&m, "abab");
        // b·a·b sends every state to the accepting sink
        assert_eq!(el(&m, "bab"), zero);
        assert!(m.elements().all(|x| m.mul(x, zero) == zero && m.mul(zero, x) == zero));
        let mut reps: Vec<_> = m.elements().map(|e| m.label(e)).collect();
        reps.sort();
        assert_eq!(reps, ["1", "a", "ab", "aba", "b", "ba", "bab"]);
    }

    #[test]
    fn idempotent_powers() {
        let b2 = monoid("(ab)*", "ab");
        assert_eq!(b2.idempotent_power(b2.identity()), b2.identity());
        assert_eq!(b2.idempotent_power(el(&b2, "ab")), el(&b2, "ab"));
        assert_eq!(b2.idempotent_power(el(&b2, "a")), el(&b2, "aa"));
        let k = monoid("(b*ab*a)*b!0", "ab");
        assert_eq!(k.idempotent_power(el(&k, "a")), k.identity());
        for m in k.elements() {
            let e = k.idempotent_power(m);
            assert!(k.is_idempotent(e));
        }
    }

    #[test]
    fn neutral_letters() {
        assert_eq!(monoid("e*(ae*be*)*", "abe").neutral_letters(), vec!['e']);
        assert!(monoid("(ab)*", "ab").neutral_letters().is_empty());
    }

    #[test]
    fn reps_round_trip() {
        for (regex, alphabet) in [("(ab)*", "ab"), ("!0ac*a!0", "abc"), ("(b*ab*a)*b!0", "ab")] {
            let m = monoid(regex, alphabet);
            for e in m.elements() {
                assert_eq!(m.eval_word(m.rep(e).unwrap()).unwrap(), e);
            }
        }
    }

    #[test]
    fn explicit_table_validation() {
        assert!(Monoid::from_table(vec![vec![0, 1], vec![1, 0]], 0).is_ok());
        assert!(Monoid::from_table(vec![vec![0, 1], vec![1, 0]], 1).is_err());
        assert!(Monoid::from_table(vec![vec![0, 1], vec![1]], 0).is_err());
        // identity row/column fine but (1·1)·2 ≠ 1·(1·2)
        let bad = vec![vec![0, 1, 2], vec![1, 2, 2], vec![2, 1, 2]];
        assert!(Monoid::from_table(bad, 0).is_err());
    }

    #[test]
    fn element_budget() {
        let alphabet = Alphabet::parse("ab").unwrap();
        let dfa = regex_to_min_dfa("(ab)*", &alphabet).unwrap();
        assert!(transition_monoid_with_budget(&dfa, 3).unwrap_err().is_budget());
    }
}
