//! Regex to minimal automaton: compile, compare and enumerate.
//!
//! Run with `cargo run --example automata`.

use regalg::automata::{regex_to_min_dfa, Alphabet};

fn main() -> regalg::Result<()> {
    let sigma = Alphabet::parse("ab")?;

    let ab_star = regex_to_min_dfa("(ab)*", &sigma)?;
    println!("(ab)* has {} states (sink included)", ab_star.state_count());
    println!("words up to length 6: {:?}", ab_star.enumerate_words(6));

    // Star-free: starts with a, ends with b, no aa and no bb.
    let star_free = regex_to_min_dfa("a!0 & !0b & !(!0aa!0) & !(!0bb!0)", &sigma)?;
    let ab_plus = regex_to_min_dfa("(ab)+", &sigma)?;
    println!("star-free expression equals (ab)+: {}", star_free.equivalent(&ab_plus));
    println!("star-free expression equals (ab)*: {}", star_free.equivalent(&ab_star));
    let with_empty = regex_to_min_dfa("a!0 & !0b & !(!0aa!0) & !(!0bb!0) | 1", &sigma)?;
    println!("adding the empty word gives (ab)*: {}", with_empty.equivalent(&ab_star));

    let k = regex_to_min_dfa("(b*ab*a)*b!0", &sigma)?;
    for w in ["b", "ab", "aab", "abab"] {
        println!("{w:>5} in (b*ab*a)*bΣ*: {}", k.accepts(w)?);
    }
    Ok(())
}
