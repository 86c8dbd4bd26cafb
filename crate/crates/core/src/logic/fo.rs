//! FO+MOD[<] formulas over finite words.

use std::collections::BTreeSet;
use std::fmt;

use crate::automata::Alphabet;
use crate::error::{Error, Result};

/// A formula whose label predicates range over letters of type `L`.
///
/// Variables are bound by the nearest enclosing quantifier of the same name.
/// Successor is not a node: the parser expands `S(x,y)` into
/// `x < y & ~E z. (x < z & z < y)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula<L = char> {
    True,
    False,
    /// `Q_a x`: the letter at position `x` is `a`.
    Label(L, String),
    Less(String, String),
    Equal(String, String),
    Not(Box<Formula<L>>),
    And(Box<Formula<L>>, Box<Formula<L>>),
    Or(Box<Formula<L>>, Box<Formula<L>>),
    Implies(Box<Formula<L>>, Box<Formula<L>>),
    Exists(String, Box<Formula<L>>),
    Forall(String, Box<Formula<L>>),
    /// True iff the number of positions satisfying the body is `residue` mod `modulus`.
    ModExists {
        residue: usize,
        modulus: usize,
        var: String,
        body: Box<Formula<L>>,
    },
}

impl<L> Formula<L> {
    pub fn label(letter: L, var: &str) -> Self {
        Formula::Label(letter, var.to_string())
    }

    pub fn less(x: &str, y: &str) -> Self {
        Formula::Less(x.to_string(), y.to_string())
    }

    pub fn equal(x: &str, y: &str) -> Self {
        Formula::Equal(x.to_string(), y.to_string())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Self) -> Self {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Self, b: Self) -> Self {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Self, b: Self) -> Self {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Self, b: Self) -> Self {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn exists(var: &str, body: Self) -> Self {
        Formula::Exists(var.to_string(), Box::new(body))
    }

    pub fn forall(var: &str, body: Self) -> Self {
        Formula::Forall(var.to_string(), Box::new(body))
    }

    /// `E[residue mod modulus] var. body`; requires `modulus ≥ 2` and `residue < modulus`.
    pub fn mod_exists(residue: usize, modulus: usize, var: &str, body: Self) -> Self {
        assert!(modulus >= 2 && residue < modulus, "invalid modular quantifier");
        Formula::ModExists {
            residue,
            modulus,
            var: var.to_string(),
            body: Box::new(body),
        }
    }

    /// Conjunction of `parts`, `true` when empty.
    pub fn conjunction(parts: impl IntoIterator<Item = Self>) -> Self {
        parts.into_iter().reduce(Formula::and).unwrap_or(Formula::True)
    }

    /// `x < y & ~E z. (x < z & z < y)`.
    pub fn successor(x: &str, y: &str, fresh: &str) -> Self {
        Formula::and(
            Formula::less(x, y),
            Formula::not(Formula::exists(
                fresh,
                Formula::and(Formula::less(x, fresh), Formula::less(fresh, y)),
            )),
        )
    }

    /// Free variables in order of first occurrence.
    pub fn free_variables(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free<'a>(&'a self, bound: &mut Vec<&'a str>, out: &mut Vec<String>) {
        let mut note = |v: &String, bound: &Vec<&str>| {
            if !bound.contains(&v.as_str()) && !out.contains(v) {
                out.push(v.clone());
            }
        };
        match self {
            Formula::True | Formula::False => {}
            Formula::Label(_, v) => note(v, bound),
            Formula::Less(x, y) | Formula::Equal(x, y) => {
                note(x, bound);
                note(y, bound);
            }
            Formula::Not(f) => f.collect_free(bound, out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            Formula::Exists(v, f) | Formula::Forall(v, f) | Formula::ModExists { var: v, body: f, .. } => {
                bound.push(v);
                f.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    /// Variables bound by some quantifier.
    pub fn bound_variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.visit(&mut |f| {
            if let Some((v, _)) = f.quantifier() {
                out.insert(v.to_string());
            }
        });
        out
    }

    /// Every variable name occurring anywhere.
    pub fn all_variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.visit(&mut |f| match f {
            Formula::Label(_, v) => {
                out.insert(v.clone());
            }
            Formula::Less(x, y) | Formula::Equal(x, y) => {
                out.insert(x.clone());
                out.insert(y.clone());
            }
            _ => {
                if let Some((v, _)) = f.quantifier() {
                    out.insert(v.to_string());
                }
            }
        });
        out
    }

    pub fn is_sentence(&self) -> bool {
        self.free_variables().is_empty()
    }

    /// Bound variable and body of a quantifier node.
    pub fn quantifier(&self) -> Option<(&str, &Formula<L>)> {
        match self {
            Formula::Exists(v, f) | Formula::Forall(v, f) | Formula::ModExists { var: v, body: f, .. } => Some((v, f)),
            _ => None,
        }
    }

    /// Pre-order traversal.
    pub fn visit(&self, f: &mut impl FnMut(&Formula<L>)) {
        f(self);
        match self {
            Formula::Not(a) => a.visit(f),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.visit(f);
                b.visit(f);
            }
            Formula::Exists(_, a) | Formula::Forall(_, a) | Formula::ModExists { body: a, .. } => a.visit(f),
            _ => {}
        }
    }

    /// Maximum number of nested quantifiers.
    pub fn quantifier_depth(&self) -> usize {
        match self {
            Formula::Not(a) => a.quantifier_depth(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.quantifier_depth().max(b.quantifier_depth())
            }
            Formula::Exists(_, a) | Formula::Forall(_, a) | Formula::ModExists { body: a, .. } => {
                1 + a.quantifier_depth()
            }
            _ => 0,
        }
    }

    pub fn map_letters<M>(&self, f: &mut impl FnMut(&L) -> M) -> Formula<M> {
        match self {
            Formula::True => Formula::True,
            Formula::False => Formula::False,
            Formula::Label(a, v) => Formula::Label(f(a), v.clone()),
            Formula::Less(x, y) => Formula::Less(x.clone(), y.clone()),
            Formula::Equal(x, y) => Formula::Equal(x.clone(), y.clone()),
            Formula::Not(a) => Formula::not(a.map_letters(f)),
            Formula::And(a, b) => Formula::and(a.map_letters(f), b.map_letters(f)),
            Formula::Or(a, b) => Formula::or(a.map_letters(f), b.map_letters(f)),
            Formula::Implies(a, b) => Formula::implies(a.map_letters(f), b.map_letters(f)),
            Formula::Exists(v, a) => Formula::Exists(v.clone(), Box::new(a.map_letters(f))),
            Formula::Forall(v, a) => Formula::Forall(v.clone(), Box::new(a.map_letters(f))),
            Formula::ModExists {
                residue,
                modulus,
                var,
                body,
            } => Formula::ModExists {
                residue: *residue,
                modulus: *modulus,
                var: var.clone(),
                body: Box::new(body.map_letters(f)),
            },
        }
    }
}

impl<L: Clone> Formula<L> {
    /// Negation normal form: negations only on atoms and modular quantifiers,
    /// implications expanded, `~E` / `~A` dualized.
    pub fn to_nnf(&self) -> Self {
        self.nnf(false)
    }

    fn nnf(&self, negate: bool) -> Self {
        let wrap = |f: Self| if negate { Formula::not(f) } else { f };
        match self {
            Formula::True => {
                if negate {
                    Formula::False
                } else {
                    Formula::True
                }
            }
            Formula::False => {
                if negate {
                    Formula::True
                } else {
                    Formula::False
                }
            }
            Formula::Label(..) | Formula::Less(..) | Formula::Equal(..) => wrap(self.clone()),
            Formula::Not(a) => a.nnf(!negate),
            Formula::And(a, b) if negate => Formula::or(a.nnf(true), b.nnf(true)),
            Formula::And(a, b) => Formula::and(a.nnf(false), b.nnf(false)),
            Formula::Or(a, b) if negate => Formula::and(a.nnf(true), b.nnf(true)),
            Formula::Or(a, b) => Formula::or(a.nnf(false), b.nnf(false)),
            Formula::Implies(a, b) if negate => Formula::and(a.nnf(false), b.nnf(true)),
            Formula::Implies(a, b) => Formula::or(a.nnf(true), b.nnf(false)),
            Formula::Exists(v, a) if negate => Formula::Forall(v.clone(), Box::new(a.nnf(true))),
            Formula::Exists(v, a) => Formula::Exists(v.clone(), Box::new(a.nnf(false))),
            Formula::Forall(v, a) if negate => Formula::Exists(v.clone(), Box::new(a.nnf(true))),
            Formula::Forall(v, a) => Formula::Forall(v.clone(), Box::new(a.nnf(false))),
            Formula::ModExists {
                residue,
                modulus,
                var,
                body,
            } => wrap(Formula::ModExists {
                residue: *residue,
                modulus: *modulus,
                var: var.clone(),
                body: Box::new(body.nnf(false)),
            }),
        }
    }
}

/// Letter of the power-set alphabet over a list of formulas: bit `i` set
/// means the `i`-th formula (displayed 1-based) holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PhiSet(pub u64);

impl PhiSet {
    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Self {
        PhiSet(self.0 | 1 << i)
    }

    pub fn members(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&i| self.contains(i))
    }
}

impl fmt::Display for PhiSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.members().map(|i| (i + 1).to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

const PREC_IMPLIES: u8 = 0;
const PREC_OR: u8 = 1;
const PREC_AND: u8 = 2;
const PREC_UNARY: u8 = 3;

impl<L: fmt::Display> Formula<L> {
    fn precedence(&self) -> u8 {
        match self {
            Formula::Implies(..) => PREC_IMPLIES,
            Formula::Or(..) => PREC_OR,
            Formula::And(..) => PREC_AND,
            _ => PREC_UNARY,
        }
    }

    // Quantifier bodies extend to the right, so quantifiers are parenthesized
    // whenever they are an operand.
    fn write_operand(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.quantifier().is_some() || self.precedence() < min {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

impl<L: fmt::Display> fmt::Display for Formula<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::True => write!(f, "true"),
            Formula::False => write!(f, "false"),
            Formula::Label(a, v) => write!(f, "Q{a} {v}"),
            Formula::Less(x, y) => write!(f, "{x} < {y}"),
            Formula::Equal(x, y) => write!(f, "{x} = {y}"),
            Formula::Not(a) => {
                write!(f, "~")?;
                a.write_operand(f, PREC_UNARY)
            }
            Formula::And(a, b) => {
                a.write_operand(f, PREC_AND)?;
                write!(f, " & ")?;
                b.write_operand(f, PREC_AND + 1)
            }
            Formula::Or(a, b) => {
                a.write_operand(f, PREC_OR)?;
                write!(f, " | ")?;
                b.write_operand(f, PREC_OR + 1)
            }
            Formula::Implies(a, b) => {
                a.write_operand(f, PREC_IMPLIES + 1)?;
                write!(f, " -> ")?;
                b.write_operand(f, PREC_IMPLIES)
            }
            Formula::Exists(v, a) => write!(f, "E {v}. {a}"),
            Formula::Forall(v, a) => write!(f, "A {v}. {a}"),
            Formula::ModExists {
                residue,
                modulus,
                var,
                body,
            } => {
                write!(f, "E[{residue} mod {modulus}] {var}. {body}")
            }
        }
    }
}

/// Letter as written after `Q`: a character or a `{i,j,…}` set of 1-based indices.
#[derive(Debug, Clone, PartialEq, Eq)]
enum RawLetter {
    Char(char, usize),
    Set(Vec<usize>, usize),
}

/// Parses a formula over `alphabet`.
pub fn parse_fo(text: &str, alphabet: &Alphabet) -> Result<Formula<char>> {
    let raw = parse_raw(text)?;
    let mut error = None;
    let f = raw.map_letters(&mut |l| match l {
        RawLetter::Char(c, _) if alphabet.contains(*c) => *c,
        RawLetter::Char(c, _) => {
            error.get_or_insert(Error::UndeclaredLetter(*c));
            *c
        }
        RawLetter::Set(_, at) => {
            error.get_or_insert(Error::syntax(*at, "set-valued letters need a formula list"));
            '?'
        }
    });
    error.map_or(Ok(f), Err)
}

/// Parses a formula that must be a sentence.
pub fn parse_fo_sentence(text: &str, alphabet: &Alphabet) -> Result<Formula<char>> {
    let f = parse_fo(text, alphabet)?;
    let free = f.free_variables();
    if free.is_empty() {
        Ok(f)
    } else {
        Err(Error::FreeVariables(free))
    }
}

/// Parses a formula over the power-set alphabet of `phi_count` formulas.
/// Letters are written `Q{1,3} x` (1-based indices, `Q{} x` for the empty set).
pub fn parse_fo_phi(text: &str, phi_count: usize) -> Result<Formula<PhiSet>> {
    let raw = parse_raw(text)?;
    let mut error = None;
    let f = raw.map_letters(&mut |l| match l {
        RawLetter::Set(items, at) => {
            let mut set = PhiSet::default();
            for &i in items {
                if i == 0 || i > phi_count {
                    error.get_or_insert(Error::syntax(*at, format!("index {i} is not in 1..={phi_count}")));
                } else {
                    set = set.with(i - 1);
                }
            }
            set
        }
        RawLetter::Char(c, at) => {
            error.get_or_insert(Error::syntax(*at, format!("expected a set letter, found {c:?}")));
            PhiSet::default()
        }
    });
    error.map_or(Ok(f), Err)
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Num(usize),
    Q(RawLetter),
    Exists,
    Forall,
    Not,
    And,
    Or,
    Implies,
    Less,
    LessEq,
    Greater,
    GreaterEq,
    Eq,
    NotEq,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Dot,
    End,
}

struct Parser {
    tokens: Vec<(usize, Tok)>,
    pos: usize,
    fresh: usize,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let peek = |i: usize| chars.get(i).map(|&(_, c)| c);
    while i < chars.len() {
        let (at, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let (tok, len) = match c {
            '(' => (Tok::LParen, 1),
            ')' => (Tok::RParen, 1),
            '[' => (Tok::LBracket, 1),
            ']' => (Tok::RBracket, 1),
            ',' => (Tok::Comma, 1),
            '.' => (Tok::Dot, 1),
            '&' | '∧' => (Tok::And, 1),
            '|' | '∨' => (Tok::Or, 1),
            '~' | '¬' => (Tok::Not, 1),
            '→' => (Tok::Implies, 1),
            '∃' => (Tok::Exists, 1),
            '∀' => (Tok::Forall, 1),
            '≤' => (Tok::LessEq, 1),
            '≥' => (Tok::GreaterEq, 1),
            '≠' => (Tok::NotEq, 1),
            '=' => (Tok::Eq, 1),
            '-' if peek(i + 1) == Some('>') => (Tok::Implies, 2),
            '<' if peek(i + 1) == Some('=') => (Tok::LessEq, 2),
            '<' => (Tok::Less, 1),
            '>' if peek(i + 1) == Some('=') => (Tok::GreaterEq, 2),
            '>' => (Tok::Greater, 1),
            '!' if peek(i + 1) == Some('=') => (Tok::NotEq, 2),
            'Q' => {
                let mut j = i + 1;
                while peek(j).is_some_and(char::is_whitespace) {
                    j += 1;
                }
                let Some(&(letter_at, letter)) = chars.get(j) else {
                    return Err(Error::syntax(at, "expected a letter after Q"));
                };
                if letter == '{' {
                    let mut items = Vec::new();
                    let mut k = j + 1;
                    let mut current: Option<usize> = None;
                    loop {
                        match peek(k) {
                            Some(d) if d.is_ascii_digit() => {
                                current = Some(current.unwrap_or(0) * 10 + d.to_digit(10).unwrap() as usize);
                            }
                            Some(',') | Some('}') => {
                                if let Some(n) = current.take() {
                                    items.push(n);
                                } else if peek(k) == Some(',') {
                                    return Err(Error::syntax(letter_at, "empty entry in letter set"));
                                }
                                if peek(k) == Some('}') {
                                    break;
                                }
                            }
                            Some(w) if w.is_whitespace() => {}
                            _ => return Err(Error::syntax(letter_at, "malformed letter set")),
                        }
                        k += 1;
                    }
                    (Tok::Q(RawLetter::Set(items, letter_at)), k + 1 - i)
                } else {
                    (Tok::Q(RawLetter::Char(letter, letter_at)), j + 1 - i)
                }
            }
            'E' => (Tok::Exists, 1),
            'A' => (Tok::Forall, 1),
            d if d.is_ascii_digit() => {
                let mut j = i;
                let mut n = 0usize;
                while let Some(d) = peek(j).and_then(|c| c.to_digit(10)) {
                    n = n.saturating_mul(10).saturating_add(d as usize);
                    j += 1;
                }
                (Tok::Num(n), j - i)
            }
            l if l.is_ascii_lowercase() || l == 'S' => {
                let mut j = i + 1;
                while peek(j).is_some_and(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'') {
                    j += 1;
                }
                let word: String = chars[i..j].iter().map(|&(_, c)| c).collect();
                (Tok::Ident(word), j - i)
            }
            other => return Err(Error::syntax(at, format!("unexpected character {other:?}"))),
        };
        out.push((at, tok));
        i += len;
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

type Raw = Formula<RawLetter>;

fn parse_raw(text: &str) -> Result<Raw> {
    let mut p = Parser {
        tokens: tokenize(text)?,
        pos: 0,
        fresh: 0,
    };
    let f = p.implication()?;
    if *p.peek() != Tok::End {
        return Err(Error::syntax(p.offset(), "unexpected trailing input"));
    }
    Ok(f)
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.tokens[self.pos].1
    }

    fn offset(&self) -> usize {
        self.tokens[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.tokens[self.pos].1.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(Error::syntax(self.offset(), format!("expected {what}")))
        }
    }

    fn implication(&mut self) -> Result<Raw> {
        let lhs = self.disjunction()?;
        if *self.peek() == Tok::Implies {
            self.bump();
            Ok(Formula::implies(lhs, self.implication()?))
        } else {
            Ok(lhs)
        }
    }

    fn disjunction(&mut self) -> Result<Raw> {
        let mut f = self.conjunction()?;
        while *self.peek() == Tok::Or {
            self.bump();
            f = Formula::or(f, self.conjunction()?);
        }
        Ok(f)
    }

    fn conjunction(&mut self) -> Result<Raw> {
        let mut f = self.unary()?;
        while *self.peek() == Tok::And {
            self.bump();
            f = Formula::and(f, self.unary()?);
        }
        Ok(f)
    }

    fn variable(&mut self) -> Result<String> {
        match self.peek().clone() {
            Tok::Ident(v) if !matches!(v.as_str(), "true" | "false" | "mod" | "S") => {
                self.bump();
                Ok(v)
            }
            _ => Err(Error::syntax(self.offset(), "expected a variable")),
        }
    }

    fn unary(&mut self) -> Result<Raw> {
        let at = self.offset();
        match self.bump() {
            Tok::Not => Ok(Formula::not(self.unary()?)),
            Tok::Forall => {
                let v = self.variable()?;
                self.expect(Tok::Dot, "'.' after the quantified variable")?;
                Ok(Formula::forall(&v, self.implication()?))
            }
            Tok::Exists if *self.peek() == Tok::LBracket => {
                self.bump();
                let residue = self.number()?;
                match self.bump() {
                    Tok::Ident(m) if m == "mod" => {}
                    _ => return Err(Error::syntax(self.offset(), "expected 'mod'")),
                }
                let modulus = self.number()?;
                self.expect(Tok::RBracket, "']'")?;
                if modulus < 2 || residue >= modulus {
                    return Err(Error::syntax(at, "modular quantifier needs 0 ≤ i < m and m ≥ 2"));
                }
                let v = self.variable()?;
                self.expect(Tok::Dot, "'.' after the quantified variable")?;
                Ok(Formula::mod_exists(residue, modulus, &v, self.implication()?))
            }
            Tok::Exists => {
                let v = self.variable()?;
                self.expect(Tok::Dot, "'.' after the quantified variable")?;
                Ok(Formula::exists(&v, self.implication()?))
            }
            Tok::LParen => {
                let f = self.implication()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(f)
            }
            Tok::Q(letter) => {
                let v = if *self.peek() == Tok::LParen {
                    self.bump();
                    let v = self.variable()?;
                    self.expect(Tok::RParen, "')'")?;
                    v
                } else {
                    self.variable()?
                };
                Ok(Formula::Label(letter, v))
            }
            Tok::Ident(w) if w == "true" => Ok(Formula::True),
            Tok::Ident(w) if w == "false" => Ok(Formula::False),
            Tok::Ident(w) if w == "S" => {
                self.expect(Tok::LParen, "'(' after S")?;
                let x = self.variable()?;
                self.expect(Tok::Comma, "','")?;
                let y = self.variable()?;
                self.expect(Tok::RParen, "')'")?;
                let fresh = format!("_s{}", self.fresh);
                self.fresh += 1;
                Ok(Formula::successor(&x, &y, &fresh))
            }
            Tok::Ident(x) if x != "mod" => {
                let op_at = self.offset();
                let op = self.bump();
                let y = self.variable()?;
                Ok(match op {
                    Tok::Less => Formula::less(&x, &y),
                    Tok::Greater => Formula::less(&y, &x),
                    Tok::Eq => Formula::equal(&x, &y),
                    Tok::NotEq => Formula::not(Formula::equal(&x, &y)),
                    Tok::LessEq => Formula::or(Formula::less(&x, &y), Formula::equal(&x, &y)),
                    Tok::GreaterEq => Formula::or(Formula::less(&y, &x), Formula::equal(&x, &y)),
                    _ => return Err(Error::syntax(op_at, "expected a comparison")),
                })
            }
            _ => Err(Error::syntax(at, "expected a formula")),
        }
    }

    fn number(&mut self) -> Result<usize> {
        match self.bump() {
            Tok::Num(n) => Ok(n),
            _ => Err(Error::syntax(self.offset(), "expected a number")),
        }
    }
}
