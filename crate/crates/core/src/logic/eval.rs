//! Evaluation of formulas on word structures.
//!
//! Formulas are compiled once: each free variable and each binder gets its
//! own slot, so evaluation over many words does no name lookups.

use std::collections::BTreeMap;

use super::fo::Formula;
use crate::error::{Error, Result};

/// A word with some variables pointing at positions `1..=|word|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordStructure<L = char> {
    pub word: Vec<L>,
    pub pointers: BTreeMap<String, usize>,
}

impl<L> WordStructure<L> {
    /// The plain word, with no pointers.
    pub fn plain(word: Vec<L>) -> Self {
        WordStructure {
            word,
            pointers: BTreeMap::new(),
        }
    }

    pub fn pointed(word: Vec<L>, var: &str, position: usize) -> Self {
        WordStructure {
            word,
            pointers: BTreeMap::from([(var.to_string(), position)]),
        }
    }
}

enum Node<L> {
    True,
    False,
    Label(L, usize),
    Less(usize, usize),
    Equal(usize, usize),
    Not(Box<Node<L>>),
    And(Box<Node<L>>, Box<Node<L>>),
    Or(Box<Node<L>>, Box<Node<L>>),
    Implies(Box<Node<L>>, Box<Node<L>>),
    Exists(usize, Box<Node<L>>),
    Forall(usize, Box<Node<L>>),
    Mod(usize, usize, usize, Box<Node<L>>),
}

/// A formula ready for repeated evaluation.
pub struct CompiledFormula<L = char> {
    root: Node<L>,
    free: Vec<String>,
    slots: usize,
}

impl<L: Copy + Eq> CompiledFormula<L> {
    pub fn new(formula: &Formula<L>) -> Self {
        let free = formula.free_variables();
        let mut scope: Vec<(String, usize)> = free.iter().cloned().zip(0..).collect();
        let mut slots = free.len();
        let root = compile(formula, &mut scope, &mut slots);
        CompiledFormula { root, free, slots }
    }

    /// Free variables, in the order `eval` expects their positions.
    pub fn free_variables(&self) -> &[String] {
        &self.free
    }

    /// Truth on `word` with free variables at the given 1-based positions.
    pub fn eval(&self, word: &[L], positions: &[usize]) -> bool {
        debug_assert_eq!(positions.len(), self.free.len());
        let mut env = vec![0; self.slots];
        env[..positions.len()].copy_from_slice(positions);
        eval(&self.root, word, &mut env)
    }

    pub fn eval_structure(&self, s: &WordStructure<L>) -> Result<bool> {
        let mut positions = Vec::with_capacity(self.free.len());
        for v in &self.free {
            let &p = s.pointers.get(v).ok_or_else(|| Error::UnassignedVariable(v.clone()))?;
            if p == 0 || p > s.word.len() {
                return Err(Error::PositionOutOfRange {
                    position: p,
                    len: s.word.len(),
                });
            }
            positions.push(p);
        }
        Ok(self.eval(&s.word, &positions))
    }
}

fn compile<L: Copy>(f: &Formula<L>, scope: &mut Vec<(String, usize)>, slots: &mut usize) -> Node<L> {
    let lookup = |scope: &Vec<(String, usize)>, v: &str| {
        scope
            .iter()
            .rev()
            .find(|(name, _)| name == v)
            .map(|&(_, s)| s)
            .expect("free variables are in scope")
    };
    match f {
        Formula::True => Node::True,
        Formula::False => Node::False,
        Formula::Label(a, v) => Node::Label(*a, lookup(scope, v)),
        Formula::Less(x, y) => Node::Less(lookup(scope, x), lookup(scope, y)),
        Formula::Equal(x, y) => Node::Equal(lookup(scope, x), lookup(scope, y)),
        Formula::Not(a) => Node::Not(Box::new(compile(a, scope, slots))),
        Formula::And(a, b) => Node::And(Box::new(compile(a, scope, slots)), Box::new(compile(b, scope, slots))),
        Formula::Or(a, b) => Node::Or(Box::new(compile(a, scope, slots)), Box::new(compile(b, scope, slots))),
        Formula::Implies(a, b) => Node::Implies(Box::new(compile(a, scope, slots)), Box::new(compile(b, scope, slots))),
        Formula::Exists(v, body) => {
            let (s, n) = bind(v, body, scope, slots);
            Node::Exists(s, n)
        }
        Formula::Forall(v, body) => {
            let (s, n) = bind(v, body, scope, slots);
            Node::Forall(s, n)
        }
        Formula::ModExists {
            residue,
            modulus,
            var,
            body,
        } => {
            let (s, n) = bind(var, body, scope, slots);
            Node::Mod(*residue, *modulus, s, n)
        }
    }
}

fn bind<L: Copy>(
    v: &str,
    body: &Formula<L>,
    scope: &mut Vec<(String, usize)>,
    slots: &mut usize,
) -> (usize, Box<Node<L>>) {
    let slot = *slots;
    *slots += 1;
    scope.push((v.to_string(), slot));
    let node = compile(body, scope, slots);
    scope.pop();
    (slot, Box::new(node))
}

fn eval<L: Copy + Eq>(node: &Node<L>, word: &[L], env: &mut [usize]) -> bool {
    match node {
        Node::True => true,
        Node::False => false,
        Node::Label(a, s) => word[env[*s] - 1] == *a,
        Node::Less(x, y) => env[*x] < env[*y],
        Node::Equal(x, y) => env[*x] == env[*y],
        Node::Not(a) => !eval(a, word, env),
        Node::And(a, b) => eval(a, word, env) && eval(b, word, env),
        Node::Or(a, b) => eval(a, word, env) || eval(b, word, env),
        Node::Implies(a, b) => !eval(a, word, env) || eval(b, word, env),
        Node::Exists(s, body) => (1..=word.len()).any(|p| {
            env[*s] = p;
            eval(body, word, env)
        }),
        Node::Forall(s, body) => (1..=word.len()).all(|p| {
            env[*s] = p;
            eval(body, word, env)
        }),
        Node::Mod(residue, modulus, s, body) => {
            let count = (1..=word.len())
                .filter(|&p| {
                    env[*s] = p;
                    eval(body, word, env)
                })
                .count();
            count % modulus == *residue
        }
    }
}

/// Truth of `formula` on a word structure.
pub fn eval_fo<L: Copy + Eq>(formula: &Formula<L>, structure: &WordStructure<L>) -> Result<bool> {
    CompiledFormula::new(formula).eval_structure(structure)
}

/// Positions `p` with `(word, p) ⊨ formula`; the formula must have exactly
/// one free variable.
pub fn pointed_set<L: Copy + Eq>(formula: &Formula<L>, word: &[L]) -> Result<Vec<usize>> {
    let compiled = CompiledFormula::new(formula);
    if compiled.free_variables().len() != 1 {
        return Err(Error::Arity(compiled.free_variables().to_vec()));
    }
    Ok((1..=word.len()).filter(|&p| compiled.eval(word, &[p])).collect())
}
