//! Temporal logic on finite words and its translation to first-order logic.
//!
//! Run with `cargo run --example temporal`.

use regalg::automata::{regex_to_min_dfa, Alphabet};
use regalg::logic::{agreement, eval_ltl, ltl_to_fo, ltl_to_fo_sentence, parse_ltl, PointedWord};

fn main() -> regalg::Result<()> {
    let sigma = Alphabet::parse("abcd")?;
    let f = parse_ltl("F+ (a & ~F+ a & F+ (d & ~F- ((b | d) & ~F+ a)))", &sigma)?;
    println!("formula: {f}");
    println!("unary: {}, temporal depth {}", f.is_unary(), f.temporal_depth());
    let dfa = regex_to_min_dfa("!0ac*d(b|c|d)*", &sigma)?;
    println!(
        "agrees with Σ*ac*d{{b,c,d}}* up to length 8: {:?}",
        agreement(&f, &dfa, 8)?
    );

    let until = parse_ltl("a U b", &sigma)?;
    for p in 0..=4 {
        println!(
            "a U b at position {p} of \"aaba\": {}",
            eval_ltl(&until, &PointedWord::new("aaba", p))?
        );
    }
    println!("as a formula in x: {}", ltl_to_fo(&until));
    println!("as a sentence: {}", ltl_to_fo_sentence(&until));
    Ok(())
}
