//! Syntactic monoid of (ab)*: elements, relations, Green's relations, subgroups.
//!
//! Run with `cargo run --example syntactic_monoid`.

use regalg::automata::Alphabet;
use regalg::monoid::{green_relations, maximal_subgroups, syntactic_monoid_of_regex};

fn main() -> regalg::Result<()> {
    let m = syntactic_monoid_of_regex("(ab)*", &Alphabet::parse("ab")?)?;
    println!("{m}");

    for (lhs, rhs) in [("aba", "a"), ("bab", "b"), ("aa", "bb")] {
        let (l, r) = (m.eval_word(lhs)?, m.eval_word(rhs)?);
        println!("{lhs} = {} and {rhs} = {}: equal {}", m.label(l), m.label(r), l == r);
    }

    let green = green_relations(&m);
    let show = |classes: &[Vec<usize>]| {
        classes
            .iter()
            .map(|c| format!("{{{}}}", c.iter().map(|&e| m.label(e)).collect::<Vec<_>>().join(",")))
            .collect::<Vec<_>>()
            .join(" ")
    };
    println!("R: {}", show(&green.r_classes));
    println!("L: {}", show(&green.l_classes));
    println!("J: {}", show(&green.j_classes));
    println!(
        "idempotents: {:?}",
        m.idempotents().iter().map(|&e| m.label(e)).collect::<Vec<_>>()
    );
    println!(
        "maximal subgroup orders: {:?}",
        maximal_subgroups(&m).iter().map(|g| g.order()).collect::<Vec<_>>()
    );
    Ok(())
}
