//! Substituting formulas for letters, and relativizing to a prefix or suffix.
//!
//! Run with `cargo run --example substitution`.

use regalg::automata::Alphabet;
use regalg::logic::{
    eval_fo, parse_fo, parse_fo_phi, parse_fo_sentence, relativize, sigma_inverse, substitute, Direction, Substitution,
    WordStructure,
};

fn main() -> regalg::Result<()> {
    let sigma = Alphabet::parse("ab")?;
    // φ1(x): x holds an a.  φ2(x): some b comes after x.
    let phis = vec![parse_fo("Qa x", &sigma)?, parse_fo("E y. (x < y & Qb y)", &sigma)?];
    let sub = Substitution::new(sigma.clone(), phis)?;

    // ψ over sets of formulas: some position satisfies φ1 and φ2 together.
    let psi = parse_fo_phi("E x. Q{1,2} x", sub.len())?;
    let image = substitute(&psi, &sub)?;
    println!("ψ = {psi}");
    println!("σ(ψ) = {image}");
    for w in ["ab", "ba", "aab", "bba"] {
        let letters = sigma_inverse(&sub, w)?;
        let lhs = eval_fo(&image, &WordStructure::plain(w.chars().collect()))?;
        let rhs = eval_fo(&psi, &WordStructure::plain(letters.clone()))?;
        let shown: Vec<String> = letters.iter().map(ToString::to_string).collect();
        println!("{w}: σ⁻¹ = [{}], w ⊨ σ(ψ) {lhs}, σ⁻¹(w) ⊨ ψ {rhs}", shown.join(" "));
    }

    let has_b = parse_fo_sentence("E x. Qb x", &sigma)?;
    let before = relativize(&has_b, "p", Direction::Before)?;
    println!("relativized before p: {before}");
    let w: Vec<char> = "abaa".chars().collect();
    for p in 1..=w.len() {
        let truth = eval_fo(&before, &WordStructure::pointed(w.clone(), "p", p))?;
        println!("prefix before position {p} of abaa contains b: {truth}");
    }
    Ok(())
}
