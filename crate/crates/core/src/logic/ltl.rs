//! Linear temporal logic on finite words.
//!
//! Positions are `1..=|w|`, plus a virtual start `0` at which no letter holds.
//! `F+ φ` holds at `i` if `φ` holds at some `j` with `i < j ≤ |w|`; `F- φ` if at
//! some `1 ≤ j < i`. `φ U ψ` needs `ψ` at some `i < j` with `φ` strictly
//! between; `φ S ψ` is the mirror image. A word `w` is accepted when
//! `(w, 0) ⊨ φ`.

use std::fmt;

use super::fo::Formula;
use crate::automata::Alphabet;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LtlFormula {
    True,
    False,
    Atom(char),
    Not(Box<LtlFormula>),
    And(Box<LtlFormula>, Box<LtlFormula>),
    Or(Box<LtlFormula>, Box<LtlFormula>),
    Implies(Box<LtlFormula>, Box<LtlFormula>),
    /// `F+`
    Future(Box<LtlFormula>),
    /// `F-`
    Past(Box<LtlFormula>),
    Until(Box<LtlFormula>, Box<LtlFormula>),
    Since(Box<LtlFormula>, Box<LtlFormula>),
}

/// A word with a distinguished position `0..=|word|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointedWord {
    pub word: Vec<char>,
    pub position: usize,
}

impl PointedWord {
    pub fn new(word: &str, position: usize) -> Self {
        PointedWord {
            word: word.chars().collect(),
            position,
        }
    }
}

impl LtlFormula {
    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Self) -> Self {
        LtlFormula::Not(Box::new(f))
    }

    pub fn and(a: Self, b: Self) -> Self {
        LtlFormula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Self, b: Self) -> Self {
        LtlFormula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Self, b: Self) -> Self {
        LtlFormula::Implies(Box::new(a), Box::new(b))
    }

    pub fn future(f: Self) -> Self {
        LtlFormula::Future(Box::new(f))
    }

    pub fn past(f: Self) -> Self {
        LtlFormula::Past(Box::new(f))
    }

    pub fn until(a: Self, b: Self) -> Self {
        LtlFormula::Until(Box::new(a), Box::new(b))
    }

    pub fn since(a: Self, b: Self) -> Self {
        LtlFormula::Since(Box::new(a), Box::new(b))
    }

    /// Nesting depth of temporal operators.
    pub fn temporal_depth(&self) -> usize {
        match self {
            LtlFormula::True | LtlFormula::False | LtlFormula::Atom(_) => 0,
            LtlFormula::Not(a) => a.temporal_depth(),
            LtlFormula::And(a, b) | LtlFormula::Or(a, b) | LtlFormula::Implies(a, b) => {
                a.temporal_depth().max(b.temporal_depth())
            }
            LtlFormula::Future(a) | LtlFormula::Past(a) => 1 + a.temporal_depth(),
            LtlFormula::Until(a, b) | LtlFormula::Since(a, b) => 1 + a.temporal_depth().max(b.temporal_depth()),
        }
    }

    /// Uses no until or since.
    pub fn is_unary(&self) -> bool {
        match self {
            LtlFormula::True | LtlFormula::False | LtlFormula::Atom(_) => true,
            LtlFormula::Not(a) | LtlFormula::Future(a) | LtlFormula::Past(a) => a.is_unary(),
            LtlFormula::And(a, b) | LtlFormula::Or(a, b) | LtlFormula::Implies(a, b) => a.is_unary() && b.is_unary(),
            LtlFormula::Until(..) | LtlFormula::Since(..) => false,
        }
    }

    /// Truth value at every position `0..=|word|`.
    pub fn truth_table(&self, word: &[char]) -> Vec<bool> {
        let n = word.len();
        match self {
            LtlFormula::True => vec![true; n + 1],
            LtlFormula::False => vec![false; n + 1],
            LtlFormula::Atom(a) => (0..=n).map(|i| i > 0 && word[i - 1] == *a).collect(),
            LtlFormula::Not(f) => f.truth_table(word).into_iter().map(|b| !b).collect(),
            LtlFormula::And(f, g) => zip(f.truth_table(word), g.truth_table(word), |a, b| a && b),
            LtlFormula::Or(f, g) => zip(f.truth_table(word), g.truth_table(word), |a, b| a || b),
            LtlFormula::Implies(f, g) => zip(f.truth_table(word), g.truth_table(word), |a, b| !a || b),
            LtlFormula::Future(f) => {
                let t = f.truth_table(word);
                let mut out = vec![false; n + 1];
                for i in (0..n).rev() {
                    out[i] = t[i + 1] || out[i + 1];
                }
                out
            }
            LtlFormula::Past(f) => {
                let t = f.truth_table(word);
                let mut out = vec![false; n + 1];
                for i in 2..=n {
                    out[i] = t[i - 1] || out[i - 1];
                }
                out
            }
            LtlFormula::Until(f, g) => {
                let (tf, tg) = (f.truth_table(word), g.truth_table(word));
                let mut out = vec![false; n + 1];
                // out[i] = tg[i+1] ∨ (tf[i+1] ∧ out[i+1])
                for i in (0..n).rev() {
                    out[i] = tg[i + 1] || (tf[i + 1] && out[i + 1]);
                }
                out
            }
            LtlFormula::Since(f, g) => {
                let (tf, tg) = (f.truth_table(word), g.truth_table(word));
                let mut out = vec![false; n + 1];
                for i in 2..=n {
                    out[i] = tg[i - 1] || (tf[i - 1] && out[i - 1]);
                }
                out
            }
        }
    }

    /// Membership of `word` in the language of the formula, `(w, 0) ⊨ φ`.
    pub fn accepts(&self, word: &[char]) -> bool {
        self.truth_table(word)[0]
    }
}

fn zip(a: Vec<bool>, b: Vec<bool>, op: impl Fn(bool, bool) -> bool) -> Vec<bool> {
    a.into_iter().zip(b).map(|(x, y)| op(x, y)).collect()
}

pub fn eval_ltl(f: &LtlFormula, pw: &PointedWord) -> Result<bool> {
    if pw.position > pw.word.len() {
        return Err(Error::PositionOutOfRange {
            position: pw.position,
            len: pw.word.len(),
        });
    }
    Ok(f.truth_table(&pw.word)[pw.position])
}

const VARS: [&str; 3] = ["x", "y", "z"];

fn others(v: &str) -> (&'static str, &'static str) {
    let mut rest = VARS.iter().copied().filter(|w| *w != v);
    (rest.next().unwrap(), rest.next().unwrap())
}

/// Translation to a formula with free variable `x` defining the same
/// pointed language on positions `1..=|w|`. Uses only `x`, `y`, `z`.
///
/// `φ U ψ` at `x` becomes `E y. x < y & ψ(y) & A z. (x < z & z < y) -> φ(z)`.
pub fn ltl_to_fo(f: &LtlFormula) -> Formula<char> {
    translate(f, "x")
}

fn translate(f: &LtlFormula, x: &str) -> Formula<char> {
    let (y, z) = others(x);
    match f {
        LtlFormula::True => Formula::True,
        LtlFormula::False => Formula::False,
        LtlFormula::Atom(a) => Formula::label(*a, x),
        LtlFormula::Not(a) => Formula::not(translate(a, x)),
        LtlFormula::And(a, b) => Formula::and(translate(a, x), translate(b, x)),
        LtlFormula::Or(a, b) => Formula::or(translate(a, x), translate(b, x)),
        LtlFormula::Implies(a, b) => Formula::implies(translate(a, x), translate(b, x)),
        LtlFormula::Future(a) => Formula::exists(y, Formula::and(Formula::less(x, y), translate(a, y))),
        LtlFormula::Past(a) => Formula::exists(y, Formula::and(Formula::less(y, x), translate(a, y))),
        LtlFormula::Until(a, b) => Formula::exists(
            y,
            Formula::conjunction([
                Formula::less(x, y),
                translate(b, y),
                Formula::forall(
                    z,
                    Formula::implies(Formula::and(Formula::less(x, z), Formula::less(z, y)), translate(a, z)),
                ),
            ]),
        ),
        LtlFormula::Since(a, b) => Formula::exists(
            y,
            Formula::conjunction([
                Formula::less(y, x),
                translate(b, y),
                Formula::forall(
                    z,
                    Formula::implies(Formula::and(Formula::less(y, z), Formula::less(z, x)), translate(a, z)),
                ),
            ]),
        ),
    }
}

/// Sentence defining `{w : (w, 0) ⊨ f}`: the translation specialised to the
/// virtual start, where atoms and past operators are false.
pub fn ltl_to_fo_sentence(f: &LtlFormula) -> Formula<char> {
    match f {
        LtlFormula::True => Formula::True,
        LtlFormula::False | LtlFormula::Atom(_) | LtlFormula::Past(_) | LtlFormula::Since(..) => Formula::False,
        LtlFormula::Not(a) => Formula::not(ltl_to_fo_sentence(a)),
        LtlFormula::And(a, b) => Formula::and(ltl_to_fo_sentence(a), ltl_to_fo_sentence(b)),
        LtlFormula::Or(a, b) => Formula::or(ltl_to_fo_sentence(a), ltl_to_fo_sentence(b)),
        LtlFormula::Implies(a, b) => Formula::implies(ltl_to_fo_sentence(a), ltl_to_fo_sentence(b)),
        LtlFormula::Future(a) => Formula::exists("x", translate(a, "x")),
        LtlFormula::Until(a, b) => Formula::exists(
            "x",
            Formula::and(
                translate(b, "x"),
                Formula::forall("y", Formula::implies(Formula::less("y", "x"), translate(a, "y"))),
            ),
        ),
    }
}

const PREC_IMPLIES: u8 = 0;
const PREC_OR: u8 = 1;
const PREC_AND: u8 = 2;
const PREC_TEMPORAL: u8 = 3;
const PREC_UNARY: u8 = 4;

impl LtlFormula {
    fn precedence(&self) -> u8 {
        match self {
            LtlFormula::Implies(..) => PREC_IMPLIES,
            LtlFormula::Or(..) => PREC_OR,
            LtlFormula::And(..) => PREC_AND,
            LtlFormula::Until(..) | LtlFormula::Since(..) => PREC_TEMPORAL,
            _ => PREC_UNARY,
        }
    }

    fn write_operand(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

impl fmt::Display for LtlFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let binary =
            |f: &mut fmt::Formatter<'_>, a: &LtlFormula, op: &str, b: &LtlFormula, prec: u8, right_assoc: bool| {
                a.write_operand(f, if right_assoc { prec + 1 } else { prec })?;
                write!(f, " {op} ")?;
                b.write_operand(f, if right_assoc { prec } else { prec + 1 })
            };
        match self {
            LtlFormula::True => write!(f, "true"),
            LtlFormula::False => write!(f, "false"),
            LtlFormula::Atom(a) => write!(f, "{a}"),
            LtlFormula::Not(a) => {
                write!(f, "~")?;
                a.write_operand(f, PREC_UNARY)
            }
            LtlFormula::Future(a) => {
                write!(f, "F+ ")?;
                a.write_operand(f, PREC_UNARY)
            }
            LtlFormula::Past(a) => {
                write!(f, "F- ")?;
                a.write_operand(f, PREC_UNARY)
            }
            LtlFormula::And(a, b) => binary(f, a, "&", b, PREC_AND, false),
            LtlFormula::Or(a, b) => binary(f, a, "|", b, PREC_OR, false),
            LtlFormula::Implies(a, b) => binary(f, a, "->", b, PREC_IMPLIES, true),
            LtlFormula::Until(a, b) => binary(f, a, "U", b, PREC_TEMPORAL, true),
            LtlFormula::Since(a, b) => binary(f, a, "S", b, PREC_TEMPORAL, true),
        }
    }
}

/// Parses an LTL formula. Atoms are letters of `alphabet`; `U` and `S` in
/// operator position are until and since, so they may also be letters.
/// Precedence from tightest: `~ F+ F-`, `U S` (right associative), `&`, `|`, `->`.
pub fn parse_ltl(text: &str, alphabet: &Alphabet) -> Result<LtlFormula> {
    let mut p = LtlParser {
        chars: text.char_indices().collect(),
        pos: 0,
        end: text.len(),
        alphabet,
    };
    let f = p.implication()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(Error::syntax(p.offset(), "unexpected trailing input"));
    }
    Ok(f)
}

struct LtlParser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    end: usize,
    alphabet: &'a Alphabet,
}

impl LtlParser<'_> {
    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|(_, c)| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.end, |&(o, _)| o)
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn peek2(&self) -> Option<char> {
        self.chars.get(self.pos + 1).map(|&(_, c)| c)
    }

    fn eat(&mut self, s: &str) -> bool {
        self.skip_ws();
        let n = s.chars().count();
        let matches = self.chars.len() >= self.pos + n
            && self.chars[self.pos..self.pos + n].iter().map(|&(_, c)| c).eq(s.chars());
        if matches {
            self.pos += n;
        }
        matches
    }

    fn implication(&mut self) -> Result<LtlFormula> {
        let lhs = self.disjunction()?;
        if self.eat("->") || self.eat("→") {
            Ok(LtlFormula::implies(lhs, self.implication()?))
        } else {
            Ok(lhs)
        }
    }

    fn disjunction(&mut self) -> Result<LtlFormula> {
        let mut f = self.conjunction()?;
        while self.eat("|") || self.eat("∨") {
            f = LtlFormula::or(f, self.conjunction()?);
        }
        Ok(f)
    }

    fn conjunction(&mut self) -> Result<LtlFormula> {
        let mut f = self.temporal()?;
        while self.eat("&") || self.eat("∧") {
            f = LtlFormula::and(f, self.temporal()?);
        }
        Ok(f)
    }

    fn temporal(&mut self) -> Result<LtlFormula> {
        let lhs = self.unary()?;
        if self.eat("U") {
            Ok(LtlFormula::until(lhs, self.temporal()?))
        } else if self.eat("S") {
            Ok(LtlFormula::since(lhs, self.temporal()?))
        } else {
            Ok(lhs)
        }
    }

    fn unary(&mut self) -> Result<LtlFormula> {
        let at = self.offset();
        let Some(c) = self.peek() else {
            return Err(Error::syntax(at, "expected a formula"));
        };
        if self.eat("~") || self.eat("¬") {
            return Ok(LtlFormula::not(self.unary()?));
        }
        if c == 'F' && matches!(self.peek2(), Some('+') | Some('-')) {
            let future = self.peek2() == Some('+');
            self.pos += 2;
            let body = self.unary()?;
            return Ok(if future {
                LtlFormula::future(body)
            } else {
                LtlFormula::past(body)
            });
        }
        if c == '(' {
            self.pos += 1;
            let f = self.implication()?;
            if !self.eat(")") {
                return Err(Error::syntax(self.offset(), "expected ')'"));
            }
            return Ok(f);
        }
        if self.eat("true") {
            return Ok(LtlFormula::True);
        }
        if self.eat("false") {
            return Ok(LtlFormula::False);
        }
        if crate::automata::RESERVED.contains(&c) {
            return Err(Error::syntax(at, format!("unexpected {c:?}")));
        }
        if !self.alphabet.contains(c) {
            return Err(Error::UndeclaredLetter(c));
        }
        self.pos += 1;
        Ok(LtlFormula::Atom(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::CompiledFormula;

    fn abcd() -> Alphabet {
        Alphabet::parse("abcd").unwrap()
    }

    const DA2: &str = "F+ (a & ~F+ a & F+ (d & ~F- ((b | d) & ~F+ a)))";

    #[test]
    fn parse_and_display() {
        let f = parse_ltl(DA2, &abcd()).unwrap();
        assert_eq!(parse_ltl(&f.to_string(), &abcd()).unwrap(), f);
        assert_eq!(
            parse_ltl("a U b U c", &abcd()).unwrap(),
            LtlFormula::until(
                LtlFormula::Atom('a'),
                LtlFormula::until(LtlFormula::Atom('b'), LtlFormula::Atom('c'))
            )
        );
        assert_eq!(
            parse_ltl("~a U b & c", &abcd()).unwrap(),
            LtlFormula::and(
                LtlFormula::until(LtlFormula::not(LtlFormula::Atom('a')), LtlFormula::Atom('b')),
                LtlFormula::Atom('c')
            )
        );
        assert_eq!(parse_ltl("e", &abcd()), Err(Error::UndeclaredLetter('e')));
        assert!(parse_ltl("a &", &abcd()).is_err());
    }

    #[test]
    fn letters_named_like_operators() {
        let us = Alphabet::parse("US").unwrap();
        assert_eq!(
            parse_ltl("U U S", &us).unwrap(),
            LtlFormula::until(LtlFormula::Atom('U'), LtlFormula::Atom('S'))
        );
    }

    #[test]
    fn semantics() {
        let f = parse_ltl(DA2, &abcd()).unwrap();
        let accepts = |w: &str| f.accepts(&w.chars().collect::<Vec<_>>());
        assert!(accepts("acd"));
        assert!(accepts("bacdb"));
        assert!(!accepts("ada"));
        assert!(accepts("adb"));
        assert!(!accepts(""));
        let a = LtlFormula::Atom('a');
        assert!(!eval_ltl(&a, &PointedWord::new("a", 0)).unwrap());
        assert!(eval_ltl(&a, &PointedWord::new("a", 1)).unwrap());
        assert!(eval_ltl(&a, &PointedWord::new("a", 2)).is_err());
    }

    #[test]
    fn future_is_true_until() {
        let fa = parse_ltl("F+ a", &abcd()).unwrap();
        let ua = parse_ltl("true U a", &abcd()).unwrap();
        for w in ["", "a", "ba", "bb", "abb"] {
            let w: Vec<char> = w.chars().collect();
            assert_eq!(fa.truth_table(&w), ua.truth_table(&w));
        }
    }

    #[test]
    fn translation_agrees() {
        let f = parse_ltl("(a | F- b) U (c & F+ d) | b S ~a", &abcd()).unwrap();
        let fo = CompiledFormula::new(&ltl_to_fo(&f));
        let sentence = CompiledFormula::new(&ltl_to_fo_sentence(&f));
        let mut vars = std::collections::BTreeSet::new();
        ltl_to_fo(&f).visit(&mut |g| {
            if let Some((v, _)) = g.quantifier() {
                vars.insert(v.to_string());
            }
        });
        assert!(vars.len() <= 3);
        for w in ["", "a", "cd", "acbd", "bcad", "dcba", "aacdd"] {
            let w: Vec<char> = w.chars().collect();
            let table = f.truth_table(&w);
            assert_eq!(sentence.eval(&w, &[]), table[0]);
            for (p, &expected) in table.iter().enumerate().skip(1) {
                assert_eq!(fo.eval(&w, &[p]), expected);
            }
        }
    }
}
