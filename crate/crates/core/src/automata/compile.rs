//! Regex to DFA: Thompson construction for the regular operators, subset
//! construction, and product / accepting-set flip for intersection and
//! complement. Extended subexpressions are determinized first and spliced
//! back into the surrounding Thompson automaton.

use super::alphabet::Alphabet;
use super::dfa::Dfa;
use super::nfa::Nfa;
use super::regex::RegexAst;
use crate::error::Result;

/// Default cap on the number of subset-construction states.
pub const DEFAULT_MAX_SUBSET_STATES: usize = 1_000_000;

/// Compiles a regex to a complete DFA (not necessarily minimal).
pub fn compile(ast: &RegexAst, alphabet: &Alphabet) -> Result<Dfa> {
    compile_with_budget(ast, alphabet, DEFAULT_MAX_SUBSET_STATES)
}

pub fn compile_with_budget(ast: &RegexAst, alphabet: &Alphabet, max_states: usize) -> Result<Dfa> {
    match ast {
        RegexAst::Complement(inner) => Ok(compile_with_budget(inner, alphabet, max_states)?.complement()),
        RegexAst::Intersection(a, b) => {
            let left = compile_with_budget(a, alphabet, max_states)?.minimize();
            let right = compile_with_budget(b, alphabet, max_states)?.minimize();
            Ok(left.intersection(&right))
        }
        _ => {
            let mut nfa = Nfa::new(alphabet.clone());
            let (start, end) = thompson(&mut nfa, ast, alphabet, max_states)?;
            nfa.set_initial(start);
            nfa.set_accepting(end);
            nfa.determinize(max_states)
        }
    }
}

/// Builds a fragment for `ast`; returns its entry and exit states.
fn thompson(nfa: &mut Nfa, ast: &RegexAst, alphabet: &Alphabet, max_states: usize) -> Result<(usize, usize)> {
    if ast.is_extended() && matches!(ast, RegexAst::Complement(_) | RegexAst::Intersection(..)) {
        let dfa = compile_with_budget(ast, alphabet, max_states)?.minimize();
        let offset = nfa.embed_dfa(&dfa);
        let exit = nfa.add_state();
        for q in 0..dfa.state_count() {
            if dfa.is_accepting(q) {
                nfa.add_transition(offset + q, None, exit);
            }
        }
        return Ok((offset + dfa.initial(), exit));
    }
    let start = nfa.add_state();
    let end = nfa.add_state();
    match ast {
        RegexAst::Empty => {}
        RegexAst::Epsilon => nfa.add_transition(start, None, end),
        RegexAst::Letter(c) => {
            let a = alphabet.index_of(*c).ok_or(crate::error::Error::UndeclaredLetter(*c))?;
            nfa.add_transition(start, Some(a), end);
        }
        RegexAst::AnyLetter => {
            for a in 0..alphabet.len() {
                nfa.add_transition(start, Some(a), end);
            }
        }
        RegexAst::Concat(a, b) => {
            let (s1, e1) = thompson(nfa, a, alphabet, max_states)?;
            let (s2, e2) = thompson(nfa, b, alphabet, max_states)?;
            nfa.add_transition(start, None, s1);
            nfa.add_transition(e1, None, s2);
            nfa.add_transition(e2, None, end);
        }
        RegexAst::Union(a, b) => {
            for branch in [a, b] {
                let (s, e) = thompson(nfa, branch, alphabet, max_states)?;
                nfa.add_transition(start, None, s);
                nfa.add_transition(e, None, end);
            }
        }
        RegexAst::Star(a) | RegexAst::Plus(a) | RegexAst::Optional(a) => {
            let (s, e) = thompson(nfa, a, alphabet, max_states)?;
            nfa.add_transition(start, None, s);
            nfa.add_transition(e, None, end);
            if !matches!(ast, RegexAst::Plus(_)) {
                nfa.add_transition(start, None, end);
            }
            if !matches!(ast, RegexAst::Optional(_)) {
                nfa.add_transition(e, None, s);
            }
        }
        RegexAst::Complement(_) | RegexAst::Intersection(..) => unreachable!(),
    }
    Ok((start, end))
}
