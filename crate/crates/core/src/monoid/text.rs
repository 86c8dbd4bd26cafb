//! Explicit-monoid text format.
//!
//! ```text
//! size 2
//! 0 1
//! 1 0
//! identity 0
//! gen a=1
//! rep 1=a
//! lact 1 0 = 0
//! ract 0 1 = 0
//! ```
//!
//! Rows give `i·j`. `gen`, `rep`, `lact n m = m'` and `ract m n = m'` lines are
//! optional; the action lines describe how another monoid acts on this one.
//! Blank lines and lines starting with `#` are ignored.

use super::{Element, Monoid};
use crate::error::{Error, Result};

/// A parsed monoid file together with any action entries it carries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidFile {
    pub monoid: Monoid,
    /// `(n, m, n·m)` entries.
    pub left_action: Vec<(Element, Element, Element)>,
    /// `(m, n, m·n)` entries.
    pub right_action: Vec<(Element, Element, Element)>,
}

fn bad(line: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        position: line,
        message: format!("line {}: {}", line + 1, message.into()),
    }
}

fn number(line: usize, token: &str) -> Result<usize> {
    token
        .trim()
        .parse()
        .map_err(|_| bad(line, format!("expected a number, found {token:?}")))
}

/// Parses the explicit-monoid format. Syntax error positions are line indices.
pub fn parse_monoid_text(text: &str) -> Result<MonoidFile> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (i, first) = lines.next().ok_or_else(|| bad(0, "empty input"))?;
    let size = match first.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["size", n] => number(i, n)?,
        _ => return Err(bad(i, "expected `size n`")),
    };
    let mut rows = Vec::with_capacity(size);
    for _ in 0..size {
        let (i, row) = lines.next().ok_or_else(|| bad(i, "missing table row"))?;
        rows.push(
            row.split_whitespace()
                .map(|t| number(i, t))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    let (i, id_line) = lines.next().ok_or_else(|| bad(i, "missing `identity k`"))?;
    let identity = match id_line.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["identity", k] => number(i, k)?,
        _ => return Err(bad(i, "expected `identity k`")),
    };
    let mut monoid = Monoid::from_table(rows, identity)?;

    let mut gens = Vec::new();
    let mut reps: Vec<(usize, Element, String)> = Vec::new();
    let mut left_action = Vec::new();
    let mut right_action = Vec::new();
    for (i, line) in lines {
        let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        match keyword {
            "gen" => {
                let (c, m) = rest.split_once('=').ok_or_else(|| bad(i, "expected `gen a=i`"))?;
                let mut chars = c.trim().chars();
                let letter = match (chars.next(), chars.next()) {
                    (Some(l), None) => l,
                    _ => return Err(bad(i, "generator must be a single character")),
                };
                gens.push((letter, number(i, m)?));
            }
            "rep" => {
                let (m, w) = rest.split_once('=').ok_or_else(|| bad(i, "expected `rep i=word`"))?;
                let w = w.trim();
                let word = if w == "1" { "" } else { w };
                reps.push((i, number(i, m)?, word.to_string()));
            }
            "lact" | "ract" => {
                let (lhs, rhs) = rest
                    .split_once('=')
                    .ok_or_else(|| bad(i, format!("expected `{keyword} x y = z`")))?;
                let args: Vec<usize> = lhs.split_whitespace().map(|t| number(i, t)).collect::<Result<_>>()?;
                let [x, y] = args[..] else {
                    return Err(bad(i, format!("expected `{keyword} x y = z`")));
                };
                let entry = (x, y, number(i, rhs)?);
                if keyword == "lact" {
                    left_action.push(entry);
                } else {
                    right_action.push(entry);
                }
            }
            other => return Err(bad(i, format!("unknown directive {other:?}"))),
        }
    }
    if !gens.is_empty() {
        monoid = monoid.with_generators(gens)?;
    }
    if !reps.is_empty() {
        let mut table = vec![None; monoid.size()];
        for (i, m, word) in reps {
            if m >= monoid.size() {
                return Err(bad(i, format!("element {m} out of range")));
            }
            if !monoid.generators().is_empty() && monoid.eval_word(&word)? != m {
                return Err(bad(i, format!("word {word:?} does not evaluate to {m}")));
            }
            table[m] = Some(word);
        }
        monoid.set_reps(table);
    }
    Ok(MonoidFile {
        monoid,
        left_action,
        right_action,
    })
}

pub(crate) fn render(monoid: &Monoid) -> String {
    let mut out = format!("size {}\n", monoid.size());
    for row in monoid.table_rows() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out.push_str(&format!("identity {}\n", monoid.identity()));
    for &(c, m) in monoid.generators() {
        out.push_str(&format!("gen {c}={m}\n"));
    }
    for m in monoid.elements() {
        if let Some(w) = monoid.rep(m) {
            out.push_str(&format!("rep {m}={}\n", if w.is_empty() { "1" } else { w }));
        }
    }
    out
}
