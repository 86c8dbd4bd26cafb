//! Relativization of quantifiers to one side of a pivot variable.

use super::fo::Formula;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// Quantifiers range over positions strictly before the pivot.
    Before,
    /// Quantifiers range over positions strictly after the pivot.
    After,
}

/// Restricts every quantifier of `f` to positions on one side of `pivot`.
///
/// For a sentence `ψ`, `(w, pivot↦p) ⊨ relativize(ψ, pivot, Before)` iff
/// `w₁…w_{p−1} ⊨ ψ`, and dually for `After` with the suffix.
pub fn relativize<L: Clone>(f: &Formula<L>, pivot: &str, direction: Direction) -> Result<Formula<L>> {
    if f.bound_variables().contains(pivot) {
        return Err(Error::PivotBound(pivot.to_string()));
    }
    Ok(guard(f, pivot, direction))
}

fn guard<L: Clone>(f: &Formula<L>, pivot: &str, direction: Direction) -> Formula<L> {
    let bound = |v: &str| match direction {
        Direction::Before => Formula::less(v, pivot),
        Direction::After => Formula::less(pivot, v),
    };
    match f {
        Formula::True | Formula::False | Formula::Label(..) | Formula::Less(..) | Formula::Equal(..) => f.clone(),
        Formula::Not(a) => Formula::not(guard(a, pivot, direction)),
        Formula::And(a, b) => Formula::and(guard(a, pivot, direction), guard(b, pivot, direction)),
        Formula::Or(a, b) => Formula::or(guard(a, pivot, direction), guard(b, pivot, direction)),
        Formula::Implies(a, b) => Formula::implies(guard(a, pivot, direction), guard(b, pivot, direction)),
        Formula::Exists(v, a) => Formula::exists(v, Formula::and(bound(v), guard(a, pivot, direction))),
        Formula::Forall(v, a) => Formula::forall(v, Formula::implies(bound(v), guard(a, pivot, direction))),
        Formula::ModExists {
            residue,
            modulus,
            var,
            body,
        } => Formula::mod_exists(
            *residue,
            *modulus,
            var,
            Formula::and(bound(var), guard(body, pivot, direction)),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::Alphabet;
    use crate::logic::{parse_fo, CompiledFormula};

    #[test]
    fn prefix_and_suffix_laws() {
        let ab = Alphabet::parse("ab").unwrap();
        let psi = parse_fo("E y. Qa y & E[1 mod 2] z. Qb z", &ab).unwrap();
        let before = CompiledFormula::new(&relativize(&psi, "x", Direction::Before).unwrap());
        let after = CompiledFormula::new(&relativize(&psi, "x", Direction::After).unwrap());
        let plain = CompiledFormula::new(&psi);
        for word in ["ab", "ba", "abba", "bab", "aabb"] {
            let w: Vec<char> = word.chars().collect();
            for p in 1..=w.len() {
                assert_eq!(before.eval(&w, &[p]), plain.eval(&w[..p - 1], &[]));
                assert_eq!(after.eval(&w, &[p]), plain.eval(&w[p..], &[]));
            }
        }
    }

    #[test]
    fn shape_and_errors() {
        let ab = Alphabet::parse("ab").unwrap();
        let psi = parse_fo("A y. Qa y", &ab).unwrap();
        assert_eq!(
            relativize(&psi, "x", Direction::Before).unwrap(),
            parse_fo("A y. y < x -> Qa y", &ab).unwrap()
        );
        assert_eq!(
            relativize(&psi, "y", Direction::After),
            Err(Error::PivotBound("y".into()))
        );
    }
}
