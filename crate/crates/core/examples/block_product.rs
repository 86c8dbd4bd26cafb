//! Bilateral semidirect products and transductions.
//!
//! Run with `cargo run --example block_product`.

use regalg::automata::{regex_to_min_dfa, Alphabet, Dfa};
use regalg::constructions::{
    bilateral_product, direct_product, pair_of, transduce, transduction_preimage, ActionPair, Transduction,
};
use regalg::monoid::Monoid;

fn main() -> regalg::Result<()> {
    let sl = Monoid::from_table(vec![vec![0, 1], vec![1, 1]], 0)?;
    let z2 = Monoid::from_table(vec![vec![0, 1], vec![1, 0]], 0)?;

    // The zero of SL sends every element of Z2 to the identity, on both sides.
    let actions = ActionPair::from_fns(
        &z2,
        &sl,
        |n, m| if n == 1 { 0 } else { m },
        |m, n| if n == 1 { 0 } else { m },
    );
    let p = bilateral_product(&z2, &sl, &actions)?;
    println!("Z2 ** SL:\n{}", p.to_text());
    for x in p.elements() {
        println!("  element {x} = {:?}", pair_of(x, sl.size()));
    }
    println!("direct product size {}", direct_product(&z2, &sl)?.size());

    // Z2-transduction counting a's before and after each position.
    let sigma = Alphabet::parse("ab")?;
    let t = Transduction::new(sigma.clone(), z2.clone(), vec![1, 0], vec![1, 0])?;
    println!("τ(aba) = {:?}", transduce(&t, "aba")?);

    // Preimage of "some triple (_, a, 1)": an a followed by an odd number of a's.
    let triples = t.triple_alphabet();
    let wanted = [t.triple_index(0, 0, 1), t.triple_index(1, 0, 1)];
    let delta = vec![
        (0..t.triple_count())
            .map(|x| usize::from(wanted.contains(&x)))
            .collect(),
        vec![1; t.triple_count()],
    ];
    let k = Dfa::from_parts(triples, delta, 0, vec![false, true]);
    let preimage = transduction_preimage(&t, &k)?.determinize(1_000_000)?.minimize();
    let expected = regex_to_min_dfa("!0a(b*ab*a)*b*ab*", &sigma)?;
    println!("preimage equals Σ*a(b*ab*a)*b*ab*: {}", preimage.equivalent(&expected));
    Ok(())
}
