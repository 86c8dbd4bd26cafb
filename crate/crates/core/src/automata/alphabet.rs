use std::fmt;

use crate::error::{Error, Result};

/// Characters with a meaning in the regex or formula grammars.
pub const RESERVED: &[char] = &[
    '|', '&', '*', '+', '?', '!', '(', ')', '0', '1', '.', '~', '-', '<', '>', '=', '[', ']', '{', '}', ',',
];

/// An ordered finite alphabet of single characters.
///
/// The declaration order is the letter order used for every lexicographic
/// tie-break in the crate (word enumeration, representatives, BFS numbering).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    letters: Vec<char>,
}

impl Alphabet {
    pub fn new(letters: impl IntoIterator<Item = char>) -> Result<Self> {
        let letters: Vec<char> = letters.into_iter().collect();
        if letters.is_empty() {
            return Err(Error::InvalidAlphabet("alphabet is empty".into()));
        }
        for (i, c) in letters.iter().enumerate() {
            if letters[..i].contains(c) {
                return Err(Error::InvalidAlphabet(format!("duplicate letter {c:?}")));
            }
            if c.is_whitespace() || RESERVED.contains(c) {
                return Err(Error::InvalidAlphabet(format!("reserved letter {c:?}")));
            }
        }
        Ok(Alphabet { letters })
    }

    /// Parses an alphabet written as a string of letters, e.g. `"abc"`.
    pub fn parse(text: &str) -> Result<Self> {
        Alphabet::new(text.chars())
    }

    /// An alphabet of `size` letters drawn from the Unicode private use area.
    ///
    /// Used for alphabets whose letters are abstract (monoid elements,
    /// transduction triples) rather than characters.
    pub fn synthetic(size: usize) -> Result<Self> {
        if size == 0 || size > 6400 {
            return Err(Error::InvalidAlphabet(format!(
                "synthetic alphabet size {size} out of range 1..=6400"
            )));
        }
        Ok(Alphabet {
            letters: (0..size as u32)
                .map(|i| char::from_u32(0xE000 + i).expect("private use area"))
                .collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    pub fn letter(&self, index: usize) -> char {
        self.letters[index]
    }

    pub fn index_of(&self, c: char) -> Option<usize> {
        self.letters.iter().position(|&l| l == c)
    }

    pub fn contains(&self, c: char) -> bool {
        self.index_of(c).is_some()
    }

    /// Converts a word to letter indices.
    pub fn encode(&self, word: &str) -> Result<Vec<usize>> {
        word.chars()
            .map(|c| self.index_of(c).ok_or(Error::UndeclaredLetter(c)))
            .collect()
    }

    pub fn decode(&self, word: &[usize]) -> String {
        word.iter().map(|&i| self.letters[i]).collect()
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.letters {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet({self})")
    }
}

/// All words over `size` letters of length exactly `len`, in lexicographic order.
pub(crate) fn words_of_length(size: usize, len: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = size.checked_pow(len as u32).unwrap_or(usize::MAX);
    (0..total).map(move |mut n| {
        let mut w = vec![0; len];
        for slot in w.iter_mut().rev() {
            *slot = n % size;
            n /= size;
        }
        w
    })
}

/// All words of length at most `max_len`, in length-then-lexicographic order.
pub(crate) fn words_up_to(size: usize, max_len: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..=max_len).flat_map(move |len| words_of_length(size, len))
}

/// Number of words of length at most `max_len`, saturating.
pub(crate) fn count_words_up_to(size: usize, max_len: usize) -> u64 {
    let mut total: u64 = 0;
    let mut layer: u64 = 1;
    for _ in 0..=max_len {
        total = total.saturating_add(layer);
        layer = layer.saturating_mul(size as u64);
    }
    total
}
