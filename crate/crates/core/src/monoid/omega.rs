//! ω-terms and pseudo-identities.
//!
//! `omega(t)` evaluates to the idempotent power of the value of `t`, computed
//! per subterm. Text syntax: variables are single lowercase letters, `1` is
//! the empty product, `t^w` (or `t^ω`) is the ω-power, `t^3` a plain power.
//! For example `(xy)^w y (xy)^w = (xy)^w`.

use std::collections::BTreeMap;
use std::fmt;

use super::{Element, Monoid};
use crate::error::{Error, Result};

/// Default cap on `|M|^(number of variables)` for an identity check.
pub const DEFAULT_MAX_EVALUATIONS: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum OmegaTerm {
    Var(String),
    /// Product of the factors; the empty product is the identity.
    Concat(Vec<OmegaTerm>),
    Omega(Box<OmegaTerm>),
}

pub type Assignment = BTreeMap<String, Element>;

impl OmegaTerm {
    pub fn var(name: &str) -> Self {
        OmegaTerm::Var(name.to_string())
    }

    pub fn concat(factors: impl IntoIterator<Item = OmegaTerm>) -> Self {
        OmegaTerm::Concat(factors.into_iter().collect())
    }

    pub fn omega(self) -> Self {
        OmegaTerm::Omega(Box::new(self))
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut p = TermParser {
            chars: text.char_indices().collect(),
            pos: 0,
            end: text.len(),
        };
        let t = p.term()?;
        p.skip_ws();
        if let Some(&(o, c)) = p.chars.get(p.pos) {
            return Err(Error::syntax(o, format!("unexpected {c:?}")));
        }
        Ok(t)
    }

    /// Variables in order of first occurrence.
    pub fn variables(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            OmegaTerm::Var(v) => {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
            OmegaTerm::Concat(ts) => ts.iter().for_each(|t| t.collect_vars(out)),
            OmegaTerm::Omega(t) => t.collect_vars(out),
        }
    }

    fn flat_factors(&self) -> Vec<&OmegaTerm> {
        match self {
            OmegaTerm::Concat(ts) => ts.iter().flat_map(|t| t.flat_factors()).collect(),
            other => vec![other],
        }
    }
}

impl fmt::Display for OmegaTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors = self.flat_factors();
        if factors.is_empty() {
            return write!(f, "1");
        }
        let mut previous_plain = None;
        for factor in factors {
            let plain = matches!(factor, OmegaTerm::Var(_));
            if let Some(prev) = previous_plain {
                if !(prev && plain) {
                    write!(f, " ")?;
                }
            }
            match factor {
                OmegaTerm::Var(v) => write!(f, "{v}")?,
                OmegaTerm::Omega(inner) => match inner.as_ref() {
                    OmegaTerm::Var(v) => write!(f, "{v}^ω")?,
                    other => write!(f, "({other})^ω")?,
                },
                OmegaTerm::Concat(_) => unreachable!("flattened"),
            }
            previous_plain = Some(plain);
        }
        Ok(())
    }
}

/// A pseudo-identity `lhs = rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Identity {
    pub lhs: OmegaTerm,
    pub rhs: OmegaTerm,
}

impl Identity {
    pub fn new(lhs: OmegaTerm, rhs: OmegaTerm) -> Self {
        Identity { lhs, rhs }
    }

    /// Parses `lhs = rhs`.
    pub fn parse(text: &str) -> Result<Self> {
        let Some((l, r)) = text.split_once('=') else {
            return Err(Error::syntax(0, "expected '=' between two terms"));
        };
        let rhs = OmegaTerm::parse(r).map_err(|e| match e {
            Error::Syntax { position, message } => Error::Syntax {
                position: position + l.len() + 1,
                message,
            },
            other => other,
        })?;
        Ok(Identity::new(OmegaTerm::parse(l)?, rhs))
    }

    /// Variables of both sides, left side first, in order of first occurrence.
    pub fn variables(&self) -> Vec<String> {
        let mut vars = self.lhs.variables();
        for v in self.rhs.variables() {
            if !vars.contains(&v) {
                vars.push(v);
            }
        }
        vars
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

/// Value of `term` in `monoid` under `assignment`.
pub fn eval_omega_term(term: &OmegaTerm, assignment: &Assignment, monoid: &Monoid) -> Result<Element> {
    Ok(match term {
        OmegaTerm::Var(v) => *assignment.get(v).ok_or_else(|| Error::UnassignedVariable(v.clone()))?,
        OmegaTerm::Concat(ts) => {
            let mut acc = monoid.identity();
            for t in ts {
                acc = monoid.mul(acc, eval_omega_term(t, assignment, monoid)?);
            }
            acc
        }
        OmegaTerm::Omega(t) => monoid.idempotent_power(eval_omega_term(t, assignment, monoid)?),
    })
}

/// A failing assignment, each element annotated with its representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub identity: Identity,
    pub assignment: Vec<(String, Element, Option<String>)>,
    pub lhs_value: Element,
    pub rhs_value: Element,
}

impl Counterexample {
    pub fn as_assignment(&self) -> Assignment {
        self.assignment.iter().map(|(v, m, _)| (v.clone(), *m)).collect()
    }
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at ", self.identity)?;
        for (i, (v, m, word)) in self.assignment.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            match word.as_deref() {
                Some("") => write!(f, "{v}=1")?,
                Some(w) => write!(f, "{v}={w}")?,
                None => write!(f, "{v}=#{m}")?,
            }
        }
        write!(f, " (lhs #{} ≠ rhs #{})", self.lhs_value, self.rhs_value)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdentityCheck {
    Holds,
    Fails(Box<Counterexample>),
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        matches!(self, IdentityCheck::Holds)
    }

    pub fn counterexample(&self) -> Option<&Counterexample> {
        match self {
            IdentityCheck::Holds => None,
            IdentityCheck::Fails(c) => Some(c),
        }
    }
}

pub fn check_identity(identity: &Identity, monoid: &Monoid) -> Result<IdentityCheck> {
    check_identity_with_budget(identity, monoid, DEFAULT_MAX_EVALUATIONS)
}

/// Checks `identity` on every assignment; on failure returns the first
/// failing assignment in lexicographic order of element-index tuples.
pub fn check_identity_with_budget(identity: &Identity, monoid: &Monoid, max_evaluations: u64) -> Result<IdentityCheck> {
    let vars = identity.variables();
    let total = (monoid.size() as u64)
        .checked_pow(vars.len() as u32)
        .unwrap_or(u64::MAX);
    if total > max_evaluations {
        return Err(Error::Budget {
            what: "identity evaluation",
            limit: max_evaluations,
        });
    }
    let lhs = Compiled::new(&identity.lhs, &vars);
    let rhs = Compiled::new(&identity.rhs, &vars);
    let mut values = vec![0; vars.len()];
    loop {
        let l = lhs.eval(&values, monoid);
        let r = rhs.eval(&values, monoid);
        if l != r {
            let assignment = vars
                .iter()
                .zip(&values)
                .map(|(v, &m)| (v.clone(), m, monoid.rep(m).map(str::to_string)))
                .collect();
            return Ok(IdentityCheck::Fails(Box::new(Counterexample {
                identity: identity.clone(),
                assignment,
                lhs_value: l,
                rhs_value: r,
            })));
        }
        // odometer, last variable fastest
        let mut i = values.len();
        loop {
            if i == 0 {
                return Ok(IdentityCheck::Holds);
            }
            i -= 1;
            values[i] += 1;
            if values[i] < monoid.size() {
                break;
            }
            values[i] = 0;
        }
    }
}

/// Term with variables resolved to slots.
enum Compiled {
    Var(usize),
    Concat(Vec<Compiled>),
    Omega(Box<Compiled>),
}

impl Compiled {
    fn new(term: &OmegaTerm, vars: &[String]) -> Self {
        match term {
            OmegaTerm::Var(v) => Compiled::Var(vars.iter().position(|x| x == v).expect("collected")),
            OmegaTerm::Concat(ts) => Compiled::Concat(ts.iter().map(|t| Compiled::new(t, vars)).collect()),
            OmegaTerm::Omega(t) => Compiled::Omega(Box::new(Compiled::new(t, vars))),
        }
    }

    fn eval(&self, values: &[Element], m: &Monoid) -> Element {
        match self {
            Compiled::Var(i) => values[*i],
            Compiled::Concat(ts) => ts.iter().fold(m.identity(), |acc, t| m.mul(acc, t.eval(values, m))),
            Compiled::Omega(t) => m.idempotent_power(t.eval(values, m)),
        }
    }
}

struct TermParser {
    chars: Vec<(usize, char)>,
    pos: usize,
    end: usize,
}

impl TermParser {
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

    fn term(&mut self) -> Result<OmegaTerm> {
        let mut factors = Vec::new();
        while let Some(c) = self.peek() {
            if c == '(' || c == '1' || c.is_ascii_lowercase() {
                factors.push(self.factor()?);
            } else {
                break;
            }
        }
        if factors.is_empty() {
            return Err(Error::syntax(self.offset(), "expected a term"));
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            OmegaTerm::Concat(factors)
        })
    }

    fn factor(&mut self) -> Result<OmegaTerm> {
        let c = self.peek().expect("checked by caller");
        self.pos += 1;
        let mut base = match c {
            '(' => {
                let t = self.term()?;
                if self.peek() != Some(')') {
                    return Err(Error::syntax(self.offset(), "expected ')'"));
                }
                self.pos += 1;
                t
            }
            '1' => OmegaTerm::Concat(Vec::new()),
            v => OmegaTerm::Var(v.to_string()),
        };
        while self.peek() == Some('^') {
            self.pos += 1;
            match self.peek() {
                Some('w') | Some('ω') => {
                    self.pos += 1;
                    base = base.omega();
                }
                Some(d) if d.is_ascii_digit() => {
                    let start = self.offset();
                    let mut n = 0usize;
                    while let Some(d) = self.peek().and_then(|c| c.to_digit(10)) {
                        n = n * 10 + d as usize;
                        self.pos += 1;
                    }
                    if n == 0 || n > 64 {
                        return Err(Error::syntax(start, "exponent must be in 1..=64"));
                    }
                    base = OmegaTerm::Concat(vec![base; n]);
                }
                _ => return Err(Error::syntax(self.offset(), "expected 'w' or a number after '^'")),
            }
        }
        Ok(base)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::Alphabet;
    use crate::monoid::syntactic_monoid_of_regex;

    fn b2() -> Monoid {
        syntactic_monoid_of_regex("(ab)*", &Alphabet::parse("ab").unwrap()).unwrap()
    }

    fn assign(m: &Monoid, pairs: &[(&str, &str)]) -> Assignment {
        pairs
            .iter()
            .map(|(v, w)| (v.to_string(), m.eval_word(w).unwrap()))
            .collect()
    }

    #[test]
    fn parse_and_display() {
        let id = Identity::parse("(xy)^w y (xy)^w = (xy)^w").unwrap();
        assert_eq!(id.to_string(), "(xy)^ω y (xy)^ω = (xy)^ω");
        assert_eq!(id.variables(), ["x", "y"]);
        let t = OmegaTerm::parse("x^w x").unwrap();
        assert_eq!(
            t,
            OmegaTerm::Concat(vec![OmegaTerm::var("x").omega(), OmegaTerm::var("x")])
        );
        assert_eq!(OmegaTerm::parse("x^2").unwrap().to_string(), "xx");
        assert!(OmegaTerm::parse("x^").is_err());
        assert!(Identity::parse("xy").is_err());
    }

    #[test]
    fn evaluation_in_b2() {
        let m = b2();
        let xy_w = OmegaTerm::parse("(xy)^w").unwrap();
        let a = assign(&m, &[("x", "a"), ("y", "b")]);
        assert_eq!(eval_omega_term(&xy_w, &a, &m).unwrap(), m.eval_word("ab").unwrap());
        let t = OmegaTerm::parse("(xy)^w y (xy)^w").unwrap();
        assert_eq!(eval_omega_term(&t, &a, &m).unwrap(), m.eval_word("aa").unwrap());
        let x_w = OmegaTerm::parse("x^w").unwrap();
        let one = assign(&m, &[("x", "")]);
        assert_eq!(eval_omega_term(&x_w, &one, &m).unwrap(), m.identity());
        assert_eq!(
            eval_omega_term(&x_w, &Assignment::new(), &m),
            Err(Error::UnassignedVariable("x".into()))
        );
    }

    #[test]
    fn checks_in_b2() {
        let m = b2();
        let aperiodic = Identity::parse("x^w x = x^w").unwrap();
        assert!(check_identity(&aperiodic, &m).unwrap().holds());
        let da = Identity::parse("(xy)^w y (xy)^w = (xy)^w").unwrap();
        let result = check_identity(&da, &m).unwrap();
        let cex = result.counterexample().unwrap();
        let words: Vec<_> = cex.assignment.iter().map(|(_, _, w)| w.clone().unwrap()).collect();
        assert_eq!(words, ["a", "b"]);
        assert_eq!(
            cex.to_string(),
            "(xy)^ω y (xy)^ω = (xy)^ω fails at x=a, y=b (lhs #3 ≠ rhs #4)"
        );
    }

    #[test]
    fn budget() {
        let m = b2();
        let id = Identity::parse("xyz = zyx").unwrap();
        assert!(check_identity_with_budget(&id, &m, 100).unwrap_err().is_budget());
        assert!(check_identity_with_budget(&id, &m, 216).is_ok());
    }
}
