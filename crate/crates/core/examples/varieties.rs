//! Pseudovariety membership with replayable witnesses.
//!
//! Run with `cargo run --example varieties`.

use regalg::automata::Alphabet;
use regalg::monoid::syntactic_monoid_of_regex;
use regalg::varieties::{check_variety, VarietyId};

fn main() -> regalg::Result<()> {
    let languages = [
        ("(ab)*", "ab"),
        ("!0ac*a!0", "abc"),
        ("(b*ab*a)*b!0", "ab"),
        ("!0ac*d(b|c|d)*", "abcd"),
        ("!0a!0", "ab"),
    ];
    for (regex, letters) in languages {
        let m = syntactic_monoid_of_regex(regex, &Alphabet::parse(letters)?)?;
        println!("{regex} ({} elements)", m.size());
        for v in VarietyId::ALL {
            let verdict = check_variety(&m, v)?;
            match &verdict.witness {
                None => println!("  {:<13} member", v.name()),
                Some(w) => println!("  {:<13} no: {}", v.name(), w.describe(&m)),
            }
        }
    }
    Ok(())
}
