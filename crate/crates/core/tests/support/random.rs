//! Seeded generators for regexes and formulas.

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

use regalg::logic::{Formula, LtlFormula};

use super::oracle::Re;

pub fn regex(rng: &mut StdRng, letters: &[char], depth: usize) -> Re {
    if depth == 0 || rng.gen_bool(0.25) {
        return match rng.gen_range(0..10) {
            0 => Re::Epsilon,
            1 => Re::Empty,
            _ => Re::Letter(*letters.choose(rng).unwrap()),
        };
    }
    let sub = |rng: &mut StdRng| Box::new(regex(rng, letters, depth - 1));
    match rng.gen_range(0..9) {
        0..=2 => Re::Cat(sub(rng), sub(rng)),
        3 | 4 => Re::Or(sub(rng), sub(rng)),
        5 => Re::And(sub(rng), sub(rng)),
        6 => Re::Not(sub(rng)),
        _ => Re::Star(sub(rng)),
    }
}

const VARS: [&str; 3] = ["x", "y", "z"];

/// Random formula over `letters`; variables come from x, y, z and may be free.
pub fn formula<L: Copy>(rng: &mut StdRng, letters: &[L], depth: usize, modular: bool) -> Formula<L> {
    let var = |rng: &mut StdRng| *VARS.choose(rng).unwrap();
    if depth == 0 || rng.gen_bool(0.2) {
        return match rng.gen_range(0..8) {
            0 => Formula::True,
            1 => Formula::False,
            2 => Formula::less(var(rng), var(rng)),
            3 => Formula::equal(var(rng), var(rng)),
            _ => Formula::label(*letters.choose(rng).unwrap(), var(rng)),
        };
    }
    let sub = |rng: &mut StdRng| formula(rng, letters, depth - 1, modular);
    match rng.gen_range(0..9) {
        0 => Formula::not(sub(rng)),
        1 => Formula::and(sub(rng), sub(rng)),
        2 => Formula::or(sub(rng), sub(rng)),
        3 => Formula::implies(sub(rng), sub(rng)),
        4 | 5 => Formula::exists(var(rng), sub(rng)),
        6 | 7 => Formula::forall(var(rng), sub(rng)),
        _ if modular => {
            let modulus = rng.gen_range(2..=3);
            Formula::mod_exists(rng.gen_range(0..modulus), modulus, var(rng), sub(rng))
        }
        _ => Formula::exists(var(rng), sub(rng)),
    }
}

/// Random sentence: a random formula with its free variables closed.
pub fn sentence<L: Copy>(rng: &mut StdRng, letters: &[L], depth: usize, modular: bool) -> Formula<L> {
    let f = formula(rng, letters, depth, modular);
    close(rng, f)
}

/// Closes every free variable with a random quantifier.
pub fn close<L: Copy>(rng: &mut StdRng, mut f: Formula<L>) -> Formula<L> {
    for v in f.free_variables() {
        f = match rng.gen_range(0..3) {
            0 => Formula::exists(&v, f),
            1 => Formula::forall(&v, f),
            _ => Formula::mod_exists(rng.gen_range(0..2), 2, &v, f),
        };
    }
    f
}

pub fn ltl(rng: &mut StdRng, letters: &[char], depth: usize) -> LtlFormula {
    if depth == 0 || rng.gen_bool(0.2) {
        return match rng.gen_range(0..6) {
            0 => LtlFormula::True,
            1 => LtlFormula::False,
            _ => LtlFormula::Atom(*letters.choose(rng).unwrap()),
        };
    }
    let sub = |rng: &mut StdRng| ltl(rng, letters, depth - 1);
    match rng.gen_range(0..9) {
        0 => LtlFormula::not(sub(rng)),
        1 => LtlFormula::and(sub(rng), sub(rng)),
        2 => LtlFormula::or(sub(rng), sub(rng)),
        3 => LtlFormula::implies(sub(rng), sub(rng)),
        4 => LtlFormula::future(sub(rng)),
        5 => LtlFormula::past(sub(rng)),
        6 | 7 => LtlFormula::until(sub(rng), sub(rng)),
        _ => LtlFormula::since(sub(rng), sub(rng)),
    }
}
