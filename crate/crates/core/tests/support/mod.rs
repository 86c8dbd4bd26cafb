//! Oracles, generators and fixtures shared by the integration tests.
#![allow(dead_code)]

pub mod fixtures;
pub mod laws;
pub mod oracle;
pub mod random;

use regalg::automata::{regex_to_min_dfa, Alphabet, Dfa};
use regalg::monoid::{syntactic_monoid, Monoid};

pub fn alphabet(letters: &str) -> Alphabet {
    Alphabet::parse(letters).unwrap()
}

pub fn dfa(regex: &str, letters: &str) -> Dfa {
    regex_to_min_dfa(regex, &alphabet(letters)).unwrap()
}

pub fn monoid(regex: &str, letters: &str) -> Monoid {
    syntactic_monoid(&dfa(regex, letters)).unwrap()
}

/// Every word over `letters` of length at most `max_len`, shortlex.
pub fn words(letters: &[char], max_len: usize) -> Vec<Vec<char>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w: &Vec<char>| {
                letters.iter().map(move |&c| {
                    let mut v = w.clone();
                    v.push(c);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Prints one verdict line and reports whether it passed.
pub fn report(label: &str, pass: bool, detail: &str) -> bool {
    println!("[{}] {label}: {detail}", if pass { "PASS" } else { "FAIL" });
    pass
}
