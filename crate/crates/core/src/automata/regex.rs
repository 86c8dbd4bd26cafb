//! Extended regular expressions: union, intersection, complement, star.
//!
//! Concrete syntax, loosest to tightest:
//!
//! ```text
//! union := inter ('|' inter)*
//! inter := cat ('&' cat)*
//! cat   := post+
//! post  := atom ('*' | '+' | '?')*
//! atom  := letter | '0' | '1' | '.' | '!' atom | '(' union ')'
//! ```
//!
//! `0` is the empty set, `1` the empty word and `.` any single letter, so
//! `!0` denotes every word. Whitespace is ignored.

use std::fmt;

use super::alphabet::Alphabet;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RegexAst {
    Empty,
    Epsilon,
    Letter(char),
    /// Any single letter of the alphabet.
    AnyLetter,
    Concat(Box<RegexAst>, Box<RegexAst>),
    Union(Box<RegexAst>, Box<RegexAst>),
    Intersection(Box<RegexAst>, Box<RegexAst>),
    Complement(Box<RegexAst>),
    Star(Box<RegexAst>),
    Plus(Box<RegexAst>),
    Optional(Box<RegexAst>),
}

impl RegexAst {
    pub fn concat(a: RegexAst, b: RegexAst) -> Self {
        RegexAst::Concat(Box::new(a), Box::new(b))
    }

    pub fn union(a: RegexAst, b: RegexAst) -> Self {
        RegexAst::Union(Box::new(a), Box::new(b))
    }

    pub fn intersection(a: RegexAst, b: RegexAst) -> Self {
        RegexAst::Intersection(Box::new(a), Box::new(b))
    }

    pub fn complement(a: RegexAst) -> Self {
        RegexAst::Complement(Box::new(a))
    }

    pub fn star(a: RegexAst) -> Self {
        RegexAst::Star(Box::new(a))
    }

    /// True when the expression uses complement or intersection somewhere.
    pub fn is_extended(&self) -> bool {
        match self {
            RegexAst::Complement(_) | RegexAst::Intersection(..) => true,
            RegexAst::Concat(a, b) | RegexAst::Union(a, b) => a.is_extended() || b.is_extended(),
            RegexAst::Star(a) | RegexAst::Plus(a) | RegexAst::Optional(a) => a.is_extended(),
            _ => false,
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            RegexAst::Union(..) => 0,
            RegexAst::Intersection(..) => 1,
            RegexAst::Concat(..) => 2,
            RegexAst::Star(_) | RegexAst::Plus(_) | RegexAst::Optional(_) => 3,
            _ => 4,
        }
    }

    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let paren = self.precedence() < min;
        if paren {
            write!(f, "(")?;
        }
        match self {
            RegexAst::Empty => write!(f, "0")?,
            RegexAst::Epsilon => write!(f, "1")?,
            RegexAst::Letter(c) => write!(f, "{c}")?,
            RegexAst::AnyLetter => write!(f, ".")?,
            RegexAst::Concat(a, b) => {
                a.fmt_at(f, 2)?;
                b.fmt_at(f, 3)?;
            }
            RegexAst::Union(a, b) => {
                a.fmt_at(f, 0)?;
                write!(f, "|")?;
                b.fmt_at(f, 1)?;
            }
            RegexAst::Intersection(a, b) => {
                a.fmt_at(f, 1)?;
                write!(f, "&")?;
                b.fmt_at(f, 2)?;
            }
            RegexAst::Complement(a) => {
                write!(f, "!")?;
                a.fmt_at(f, 4)?;
            }
            RegexAst::Star(a) => {
                a.fmt_at(f, 3)?;
                write!(f, "*")?;
            }
            RegexAst::Plus(a) => {
                a.fmt_at(f, 3)?;
                write!(f, "+")?;
            }
            RegexAst::Optional(a) => {
                a.fmt_at(f, 3)?;
                write!(f, "?")?;
            }
        }
        if paren {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Display for RegexAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, 0)
    }
}

/// Parses `text` as an extended regular expression over `alphabet`.
pub fn parse_regex(text: &str, alphabet: &Alphabet) -> Result<RegexAst> {
    let mut parser = Parser {
        chars: text.char_indices().collect(),
        pos: 0,
        end: text.len(),
        alphabet,
    };
    let ast = parser.union()?;
    parser.skip_ws();
    if let Some(&(offset, c)) = parser.chars.get(parser.pos) {
        return Err(Error::syntax(offset, format!("unexpected {c:?}")));
    }
    Ok(ast)
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    end: usize,
    alphabet: &'a Alphabet,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while matches!(self.chars.get(self.pos), Some((_, c)) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.end, |&(o, _)| o)
    }

    fn union(&mut self) -> Result<RegexAst> {
        let mut ast = self.inter()?;
        while self.peek() == Some('|') {
            self.pos += 1;
            ast = RegexAst::union(ast, self.inter()?);
        }
        Ok(ast)
    }

    fn inter(&mut self) -> Result<RegexAst> {
        let mut ast = self.cat()?;
        while self.peek() == Some('&') {
            self.pos += 1;
            ast = RegexAst::intersection(ast, self.cat()?);
        }
        Ok(ast)
    }

    fn starts_atom(&self, c: char) -> bool {
        matches!(c, '0' | '1' | '.' | '!' | '(') || !super::alphabet::RESERVED.contains(&c)
    }

    fn cat(&mut self) -> Result<RegexAst> {
        let mut ast = self.post()?;
        while let Some(c) = self.peek() {
            if !self.starts_atom(c) {
                break;
            }
            ast = RegexAst::concat(ast, self.post()?);
        }
        Ok(ast)
    }

    fn post(&mut self) -> Result<RegexAst> {
        let mut ast = self.atom()?;
        loop {
            match self.peek() {
                Some('*') => ast = RegexAst::Star(Box::new(ast)),
                Some('+') => ast = RegexAst::Plus(Box::new(ast)),
                Some('?') => ast = RegexAst::Optional(Box::new(ast)),
                _ => return Ok(ast),
            }
            self.pos += 1;
        }
    }

    fn atom(&mut self) -> Result<RegexAst> {
        let offset = self.offset();
        let Some(c) = self.peek() else {
            return Err(Error::syntax(offset, "expected an expression"));
        };
        self.pos += 1;
        match c {
            '0' => Ok(RegexAst::Empty),
            '1' => Ok(RegexAst::Epsilon),
            '.' => Ok(RegexAst::AnyLetter),
            '!' => Ok(RegexAst::complement(self.atom()?)),
            '(' => {
                let inner = self.union()?;
                if self.peek() != Some(')') {
                    return Err(Error::syntax(self.offset(), "expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            c if super::alphabet::RESERVED.contains(&c) => Err(Error::syntax(offset, format!("unexpected {c:?}"))),
            c if self.alphabet.contains(c) => Ok(RegexAst::Letter(c)),
            c => Err(Error::UndeclaredLetter(c)),
        }
    }
}
