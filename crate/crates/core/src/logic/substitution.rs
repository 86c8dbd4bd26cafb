//! Substitutions of formulas for the letters of a power-set alphabet.
//!
//! Given formulas `φ₁ … φₖ` over Σ, each with at most one free variable, a
//! formula `ψ` over the alphabet of subsets of `{φ₁ … φₖ}` becomes a formula
//! over Σ by replacing `Q_S y` with `∧_{i∈S} φᵢ(y) ∧ ∧_{i∉S} ¬φᵢ(y)`.
//! Then `w ⊨ σ(ψ)` iff `σ⁻¹(w) ⊨ ψ`, where `σ⁻¹(w)` records at each
//! position the set of `φᵢ` that hold there.

use std::collections::BTreeSet;

use super::eval::CompiledFormula;
use super::fo::{Formula, PhiSet};
use crate::automata::Alphabet;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Substitution {
    alphabet: Alphabet,
    phis: Vec<Formula<char>>,
    /// Free variable of each formula, if any.
    vars: Vec<Option<String>>,
}

impl Substitution {
    /// At most 64 formulas, each with at most one free variable and letters from `alphabet`.
    pub fn new(alphabet: Alphabet, phis: Vec<Formula<char>>) -> Result<Self> {
        if phis.len() > 64 {
            return Err(Error::AlphabetMismatch(format!(
                "{} formulas exceed the 64 supported by set letters",
                phis.len()
            )));
        }
        let mut vars = Vec::with_capacity(phis.len());
        for phi in &phis {
            let free = phi.free_variables();
            if free.len() > 1 {
                return Err(Error::Arity(free));
            }
            let mut undeclared = None;
            phi.visit(&mut |g| {
                if let Formula::Label(a, _) = g {
                    if !alphabet.contains(*a) {
                        undeclared.get_or_insert(*a);
                    }
                }
            });
            if let Some(a) = undeclared {
                return Err(Error::UndeclaredLetter(a));
            }
            vars.push(free.into_iter().next());
        }
        Ok(Substitution { alphabet, phis, vars })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn phis(&self) -> &[Formula<char>] {
        &self.phis
    }

    pub fn len(&self) -> usize {
        self.phis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phis.is_empty()
    }

    /// `φᵢ` with its free variable renamed to `target`, binders renamed as
    /// needed to avoid capture.
    fn instantiate(&self, i: usize, target: &str, fresh: &mut Fresh) -> Formula<char> {
        match &self.vars[i] {
            Some(x) => rename_free(&self.phis[i], x, target, fresh),
            None => self.phis[i].clone(),
        }
    }
}

/// Generator of variable names that occur nowhere in the formulas involved.
struct Fresh {
    taken: BTreeSet<String>,
    next: usize,
}

impl Fresh {
    fn new(taken: BTreeSet<String>) -> Self {
        Fresh { taken, next: 0 }
    }

    fn name(&mut self) -> String {
        loop {
            let candidate = format!("_r{}", self.next);
            self.next += 1;
            if self.taken.insert(candidate.clone()) {
                return candidate;
            }
        }
    }
}

/// Replaces free occurrences of `from` by `to`.
fn rename_free<L: Clone>(f: &Formula<L>, from: &str, to: &str, fresh: &mut Fresh) -> Formula<L> {
    if from == to {
        return f.clone();
    }
    let var = |v: &String| if v == from { to.to_string() } else { v.clone() };
    match f {
        Formula::True | Formula::False => f.clone(),
        Formula::Label(a, v) => Formula::Label(a.clone(), var(v)),
        Formula::Less(x, y) => Formula::Less(var(x), var(y)),
        Formula::Equal(x, y) => Formula::Equal(var(x), var(y)),
        Formula::Not(a) => Formula::not(rename_free(a, from, to, fresh)),
        Formula::And(a, b) => Formula::and(rename_free(a, from, to, fresh), rename_free(b, from, to, fresh)),
        Formula::Or(a, b) => Formula::or(rename_free(a, from, to, fresh), rename_free(b, from, to, fresh)),
        Formula::Implies(a, b) => Formula::implies(rename_free(a, from, to, fresh), rename_free(b, from, to, fresh)),
        Formula::Exists(..) | Formula::Forall(..) | Formula::ModExists { .. } => {
            let (v, body) = f.quantifier().unwrap();
            if v == from {
                return f.clone();
            }
            let (v, body) = if v == to && body.free_variables().iter().any(|x| x == from) {
                let renamed = fresh.name();
                let body = rename_free(body, v, &renamed, fresh);
                (renamed, body)
            } else {
                (v.to_string(), body.clone())
            };
            let body = Box::new(rename_free(&body, from, to, fresh));
            match f {
                Formula::Exists(..) => Formula::Exists(v, body),
                Formula::Forall(..) => Formula::Forall(v, body),
                Formula::ModExists { residue, modulus, .. } => Formula::ModExists {
                    residue: *residue,
                    modulus: *modulus,
                    var: v,
                    body,
                },
                _ => unreachable!(),
            }
        }
    }
}

/// `σ(ψ)`: every `Q_S y` replaced by the conjunction of `φᵢ(y)` for `i ∈ S`
/// and `¬φᵢ(y)` for `i ∉ S`.
pub fn substitute(psi: &Formula<PhiSet>, sub: &Substitution) -> Result<Formula<char>> {
    let limit = sub.len();
    let mut bad = None;
    psi.visit(&mut |g| {
        if let Formula::Label(s, _) = g {
            if let Some(i) = s.members().find(|&i| i >= limit) {
                bad.get_or_insert(i);
            }
        }
    });
    if let Some(i) = bad {
        return Err(Error::AlphabetMismatch(format!(
            "letter mentions formula {} but the substitution has {limit}",
            i + 1
        )));
    }
    let mut taken = psi.all_variables();
    for phi in sub.phis() {
        taken.extend(phi.all_variables());
    }
    let mut fresh = Fresh::new(taken);
    Ok(expand(psi, sub, &mut fresh))
}

fn expand(psi: &Formula<PhiSet>, sub: &Substitution, fresh: &mut Fresh) -> Formula<char> {
    match psi {
        Formula::Label(s, y) => Formula::conjunction((0..sub.len()).map(|i| {
            let phi = sub.instantiate(i, y, fresh);
            if s.contains(i) {
                phi
            } else {
                Formula::not(phi)
            }
        })),
        Formula::True => Formula::True,
        Formula::False => Formula::False,
        Formula::Less(x, y) => Formula::Less(x.clone(), y.clone()),
        Formula::Equal(x, y) => Formula::Equal(x.clone(), y.clone()),
        Formula::Not(a) => Formula::not(expand(a, sub, fresh)),
        Formula::And(a, b) => Formula::and(expand(a, sub, fresh), expand(b, sub, fresh)),
        Formula::Or(a, b) => Formula::or(expand(a, sub, fresh), expand(b, sub, fresh)),
        Formula::Implies(a, b) => Formula::implies(expand(a, sub, fresh), expand(b, sub, fresh)),
        Formula::Exists(v, a) => Formula::Exists(v.clone(), Box::new(expand(a, sub, fresh))),
        Formula::Forall(v, a) => Formula::Forall(v.clone(), Box::new(expand(a, sub, fresh))),
        Formula::ModExists {
            residue,
            modulus,
            var,
            body,
        } => Formula::ModExists {
            residue: *residue,
            modulus: *modulus,
            var: var.clone(),
            body: Box::new(expand(body, sub, fresh)),
        },
    }
}

/// `σ⁻¹(w)`: at each position, the set of formulas true there.
pub fn sigma_inverse(sub: &Substitution, word: &str) -> Result<Vec<PhiSet>> {
    let letters: Vec<char> = word.chars().collect();
    for &c in &letters {
        if !sub.alphabet.contains(c) {
            return Err(Error::UndeclaredLetter(c));
        }
    }
    let compiled: Vec<CompiledFormula<char>> = sub.phis.iter().map(CompiledFormula::new).collect();
    Ok((1..=letters.len())
        .map(|p| {
            compiled.iter().enumerate().fold(PhiSet::default(), |set, (i, phi)| {
                let positions: &[usize] = if phi.free_variables().is_empty() { &[] } else { &[p] };
                if phi.eval(&letters, positions) {
                    set.with(i)
                } else {
                    set
                }
            })
        })
        .collect())
}
