//! `N`-transductions and preimages of languages under them.
//!
//! `τ(w)ᵢ = (h_l(w₁…w_{i−1}), wᵢ, h_r(w_{i+1}…w_n))`. Languages over the
//! triple alphabet `N × Σ × N` use [`Transduction::triple_alphabet`], whose
//! letter `(n₁, a, n₂)` has index `(n₁·|Σ| + a)·|N| + n₂`.

use crate::automata::{Alphabet, Dfa, Nfa};
use crate::error::{Error, Result};
use crate::monoid::{Element, Monoid};

/// Cap on the number of preimage automaton states.
pub const MAX_PREIMAGE_STATES: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transduction {
    alphabet: Alphabet,
    target: Monoid,
    left: Vec<Element>,
    right: Vec<Element>,
}

impl Transduction {
    /// `left[a]` and `right[a]` are the images of the `a`-th letter.
    pub fn new(alphabet: Alphabet, target: Monoid, left: Vec<Element>, right: Vec<Element>) -> Result<Self> {
        if left.len() != alphabet.len() || right.len() != alphabet.len() {
            return Err(Error::AlphabetMismatch(format!(
                "homomorphisms must give one image per letter of {alphabet}"
            )));
        }
        if let Some(&bad) = left.iter().chain(&right).find(|&&x| x >= target.size()) {
            return Err(Error::InvalidMonoid(format!("image {bad} is not an element")));
        }
        Ok(Transduction {
            alphabet,
            target,
            left,
            right,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn target(&self) -> &Monoid {
        &self.target
    }

    pub fn triple_count(&self) -> usize {
        self.target.size() * self.alphabet.len() * self.target.size()
    }

    /// Synthetic alphabet with one letter per triple.
    pub fn triple_alphabet(&self) -> Alphabet {
        Alphabet::synthetic(self.triple_count()).expect("triple alphabet fits the private-use range")
    }

    pub fn triple_index(&self, prefix: Element, letter: usize, suffix: Element) -> usize {
        (prefix * self.alphabet.len() + letter) * self.target.size() + suffix
    }

    pub fn triple_of(&self, index: usize) -> (Element, usize, Element) {
        let n = self.target.size();
        let suffix = index % n;
        let rest = index / n;
        (rest / self.alphabet.len(), rest % self.alphabet.len(), suffix)
    }

    /// `τ` on letter indices; returns triple indices.
    pub fn transduce_indices(&self, word: &[usize]) -> Vec<usize> {
        let n = &self.target;
        let mut suffixes = vec![n.identity(); word.len() + 1];
        for i in (0..word.len()).rev() {
            suffixes[i] = n.mul(self.right[word[i]], suffixes[i + 1]);
        }
        let mut prefix = n.identity();
        word.iter()
            .enumerate()
            .map(|(i, &a)| {
                let t = self.triple_index(prefix, a, suffixes[i + 1]);
                prefix = n.mul(prefix, self.left[a]);
                t
            })
            .collect()
    }
}

/// `τ(w)` as `(prefix image, letter, suffix image)` triples.
pub fn transduce(t: &Transduction, word: &str) -> Result<Vec<(Element, char, Element)>> {
    let indices = t.alphabet.encode(word)?;
    Ok(t.transduce_indices(&indices)
        .into_iter()
        .map(|x| {
            let (p, a, s) = t.triple_of(x);
            (p, t.alphabet.letter(a), s)
        })
        .collect())
}

/// An automaton over Σ for `{w : τ(w) ∈ L(k)}`.
///
/// States are `(n, q, s)`: the image `n` of the prefix read so far, the state
/// `q` of `k`, and a guess `s` for the image of the unread suffix. The guess
/// is made nondeterministically at the start and refined letter by letter;
/// acceptance requires an accepting `q` and the empty-suffix guess `1`.
pub fn transduction_preimage(t: &Transduction, k: &Dfa) -> Result<Nfa> {
    if k.alphabet().len() != t.triple_count() {
        return Err(Error::AlphabetMismatch(format!(
            "automaton has {} letters, the transduction has {} triples",
            k.alphabet().len(),
            t.triple_count()
        )));
    }
    let n = &t.target;
    let (ns, qs) = (n.size(), k.state_count());
    let total = ns * qs * ns;
    if total > MAX_PREIMAGE_STATES {
        return Err(Error::Budget {
            what: "preimage state",
            limit: MAX_PREIMAGE_STATES as u64,
        });
    }
    let state = |prefix: Element, q: usize, suffix: Element| (prefix * qs + q) * ns + suffix;
    let mut nfa = Nfa::new(t.alphabet.clone());
    for _ in 0..total {
        nfa.add_state();
    }
    for s in n.elements() {
        nfa.set_initial(state(n.identity(), k.initial(), s));
    }
    for prefix in n.elements() {
        for q in 0..qs {
            if k.is_accepting(q) {
                nfa.set_accepting(state(prefix, q, n.identity()));
            }
            for a in 0..t.alphabet.len() {
                let next_prefix = n.mul(prefix, t.left[a]);
                for rest in n.elements() {
                    let suffix = n.mul(t.right[a], rest);
                    let q2 = k.next(q, t.triple_index(prefix, a, rest));
                    nfa.add_transition(state(prefix, q, suffix), Some(a), state(next_prefix, q2, rest));
                }
            }
        }
    }
    Ok(nfa)
}
