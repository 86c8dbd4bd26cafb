//! First-order sentences with modular quantifiers: parsing, evaluation, agreement.
//!
//! Run with `cargo run --example first_order`.

use regalg::automata::{regex_to_min_dfa, Alphabet};
use regalg::logic::{agreement, parse_fo, parse_fo_sentence, pointed_set, Agreement};

fn main() -> regalg::Result<()> {
    let sigma = Alphabet::parse("ab")?;

    // Some b is preceded by an even number of a's.
    let k = parse_fo_sentence("E x. (Qb x & E[0 mod 2] y. (y < x & Qa y))", &sigma)?;
    println!("sentence: {k}");
    println!("quantifier depth {}", k.quantifier_depth());
    let dfa = regex_to_min_dfa("(b*ab*a)*b!0", &sigma)?;
    println!("agrees with (b*ab*a)*bΣ* up to length 8: {:?}", agreement(&k, &dfa, 8)?);

    // The modular sentence for (ab)*.
    let ab = parse_fo_sentence(
        "(E[0 mod 2] x. true) & A x. ((Qa x -> E[0 mod 2] y. y < x) & (Qb x -> E[1 mod 2] y. y < x))",
        &sigma,
    )?;
    let ab_dfa = regex_to_min_dfa("(ab)*", &sigma)?;
    println!("modular sentence agrees with (ab)*: {:?}", agreement(&ab, &ab_dfa, 8)?);

    // A wrong claim is refuted with the shortest counterexample.
    let some_a = parse_fo_sentence("E x. Qa x", &sigma)?;
    if let Agreement::Disagree(w) = agreement(&some_a, &regex_to_min_dfa("b*", &sigma)?, 4)? {
        println!("∃x Qa x vs b*: first disagreement at {w:?}");
    }

    // Positions (1-based) where a formula with one free variable holds.
    let last_a = parse_fo("Qa x & ~E y. (x < y & Qa y)", &sigma)?;
    println!(
        "last a in \"abaab\" at {:?}",
        pointed_set(&last_a, &"abaab".chars().collect::<Vec<_>>())?
    );

    // Successor is sugar for an order formula.
    println!("S(x,y) expands to {}", parse_fo("S(x,y)", &sigma)?);
    Ok(())
}
