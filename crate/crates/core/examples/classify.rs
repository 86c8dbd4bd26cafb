//! Fragment-by-fragment definability reports, as text and as JSON.
//!
//! Run with `cargo run --example classify`.

use regalg::automata::Alphabet;
use regalg::classify::classify_regex;

fn main() -> regalg::Result<()> {
    for (regex, letters) in [("(ab)*", "ab"), ("(b*ab*a)*b!0", "ab"), ("!0ac*d(b|c|d)*", "abcd")] {
        let report = classify_regex(regex, &Alphabet::parse(letters)?)?;
        println!("{report}");
    }
    let report = classify_regex("(b*ab*a)*b*", &Alphabet::parse("ab")?)?;
    println!("{}", report.to_json());
    Ok(())
}
