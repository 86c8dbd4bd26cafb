//! Reference implementations written independently of the library.

use std::collections::{BTreeMap, BTreeSet};

use regalg::logic::{Formula, LtlFormula};
use regalg::monoid::{Element, Monoid};

/// Regular expressions with a direct set-of-words semantics.
#[derive(Debug, Clone)]
pub enum Re {
    Empty,
    Epsilon,
    Letter(char),
    Cat(Box<Re>, Box<Re>),
    Or(Box<Re>, Box<Re>),
    And(Box<Re>, Box<Re>),
    Not(Box<Re>),
    Star(Box<Re>),
}

impl std::fmt::Display for Re {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Re::Empty => write!(f, "0"),
            Re::Epsilon => write!(f, "1"),
            Re::Letter(c) => write!(f, "{c}"),
            Re::Cat(a, b) => write!(f, "({a}{b})"),
            Re::Or(a, b) => write!(f, "({a}|{b})"),
            Re::And(a, b) => write!(f, "({a}&{b})"),
            Re::Not(a) => write!(f, "!({a})"),
            Re::Star(a) => write!(f, "({a})*"),
        }
    }
}

/// `table[i][j]` is true iff `w[i..j]` is in the language of `re`.
fn spans(re: &Re, w: &[char]) -> Vec<Vec<bool>> {
    let n = w.len();
    let mut t = vec![vec![false; n + 1]; n + 1];
    match re {
        Re::Empty => {}
        Re::Epsilon => (0..=n).for_each(|i| t[i][i] = true),
        Re::Letter(c) => (0..n).filter(|&i| w[i] == *c).for_each(|i| t[i][i + 1] = true),
        Re::Cat(a, b) => {
            let (ta, tb) = (spans(a, w), spans(b, w));
            for i in 0..=n {
                for j in i..=n {
                    t[i][j] = (i..=j).any(|k| ta[i][k] && tb[k][j]);
                }
            }
        }
        Re::Or(a, b) | Re::And(a, b) => {
            let (ta, tb) = (spans(a, w), spans(b, w));
            let both = matches!(re, Re::And(..));
            for i in 0..=n {
                for j in i..=n {
                    t[i][j] = if both {
                        ta[i][j] && tb[i][j]
                    } else {
                        ta[i][j] || tb[i][j]
                    };
                }
            }
        }
        Re::Not(a) => {
            let ta = spans(a, w);
            for i in 0..=n {
                for j in i..=n {
                    t[i][j] = !ta[i][j];
                }
            }
        }
        Re::Star(a) => {
            let ta = spans(a, w);
            for (i, row) in t.iter_mut().enumerate() {
                row[i] = true;
            }
            for len in 1..=n {
                for i in 0..=n - len {
                    let j = i + len;
                    t[i][j] = (i + 1..=j).any(|k| ta[i][k] && t[k][j]);
                }
            }
        }
    }
    t
}

pub fn re_matches(re: &Re, w: &[char]) -> bool {
    spans(re, w)[0][w.len()]
}

/// FO+MOD truth by direct recursion with named variables; positions are 1-based.
pub fn fo_holds<L: Copy + Eq>(f: &Formula<L>, w: &[L], env: &mut BTreeMap<String, usize>) -> bool {
    let pos = |env: &BTreeMap<String, usize>, v: &str| env[v];
    match f {
        Formula::True => true,
        Formula::False => false,
        Formula::Label(a, x) => w[pos(env, x) - 1] == *a,
        Formula::Less(x, y) => pos(env, x) < pos(env, y),
        Formula::Equal(x, y) => pos(env, x) == pos(env, y),
        Formula::Not(a) => !fo_holds(a, w, env),
        Formula::And(a, b) => fo_holds(a, w, env) && fo_holds(b, w, env),
        Formula::Or(a, b) => fo_holds(a, w, env) || fo_holds(b, w, env),
        Formula::Implies(a, b) => !fo_holds(a, w, env) || fo_holds(b, w, env),
        Formula::Exists(v, body) | Formula::Forall(v, body) | Formula::ModExists { var: v, body, .. } => {
            let saved = env.get(v).copied();
            let mut count = 0;
            for p in 1..=w.len() {
                env.insert(v.clone(), p);
                if fo_holds(body, w, env) {
                    count += 1;
                }
            }
            match saved {
                Some(p) => env.insert(v.clone(), p),
                None => env.remove(v),
            };
            match f {
                Formula::Exists(..) => count > 0,
                Formula::Forall(..) => count == w.len(),
                Formula::ModExists { residue, modulus, .. } => count % modulus == *residue,
                _ => unreachable!(),
            }
        }
    }
}

pub fn fo_sentence_holds<L: Copy + Eq>(f: &Formula<L>, w: &[L]) -> bool {
    fo_holds(f, w, &mut BTreeMap::new())
}

/// LTL truth at position `i` in `0..=|w|` by direct recursion on the definitions.
pub fn ltl_holds(f: &LtlFormula, w: &[char], i: usize) -> bool {
    let n = w.len();
    match f {
        LtlFormula::True => true,
        LtlFormula::False => false,
        LtlFormula::Atom(a) => i >= 1 && w[i - 1] == *a,
        LtlFormula::Not(a) => !ltl_holds(a, w, i),
        LtlFormula::And(a, b) => ltl_holds(a, w, i) && ltl_holds(b, w, i),
        LtlFormula::Or(a, b) => ltl_holds(a, w, i) || ltl_holds(b, w, i),
        LtlFormula::Implies(a, b) => !ltl_holds(a, w, i) || ltl_holds(b, w, i),
        LtlFormula::Future(a) => (i + 1..=n).any(|j| ltl_holds(a, w, j)),
        LtlFormula::Past(a) => (1..i).any(|j| ltl_holds(a, w, j)),
        LtlFormula::Until(a, b) => (i + 1..=n).any(|j| ltl_holds(b, w, j) && (i + 1..j).all(|k| ltl_holds(a, w, k))),
        LtlFormula::Since(a, b) => (1..i).any(|j| ltl_holds(b, w, j) && (j + 1..i).all(|k| ltl_holds(a, w, k))),
    }
}

fn partition(m: &Monoid, key: impl Fn(Element) -> BTreeSet<Element>) -> Vec<Vec<Element>> {
    let mut classes: BTreeMap<BTreeSet<Element>, Vec<Element>> = BTreeMap::new();
    for e in m.elements() {
        classes.entry(key(e)).or_default().push(e);
    }
    let mut out: Vec<Vec<Element>> = classes.into_values().collect();
    out.sort();
    out
}

/// Green's relations from principal ideals: `aM`, `Ma`, `MaM`.
pub struct IdealGreen {
    pub r: Vec<Vec<Element>>,
    pub l: Vec<Vec<Element>>,
    pub j: Vec<Vec<Element>>,
    pub h: Vec<Vec<Element>>,
}

pub fn ideal_green(m: &Monoid) -> IdealGreen {
    let right = |a: Element| m.elements().map(|x| m.mul(a, x)).collect::<BTreeSet<_>>();
    let left = |a: Element| m.elements().map(|x| m.mul(x, a)).collect::<BTreeSet<_>>();
    let two = |a: Element| {
        m.elements()
            .flat_map(|x| m.elements().map(move |y| (x, y)))
            .map(|(x, y)| m.mul(m.mul(x, a), y))
            .collect::<BTreeSet<_>>()
    };
    let h = partition(m, |a| {
        let mut k: BTreeSet<Element> = right(a).into_iter().map(|x| x * 2).collect();
        k.extend(left(a).into_iter().map(|x| x * 2 + 1));
        k
    });
    IdealGreen {
        r: partition(m, right),
        l: partition(m, left),
        j: partition(m, two),
        h,
    }
}

pub fn sorted_classes(classes: &[Vec<Element>]) -> Vec<Vec<Element>> {
    let mut out: Vec<Vec<Element>> = classes
        .iter()
        .map(|c| {
            let mut c = c.clone();
            c.sort();
            c
        })
        .collect();
    out.sort();
    out
}

/// Subgroup of the group `carrier` (unit `e`) generated by commutators of `part`.
fn commutators(m: &Monoid, e: Element, carrier: &[Element], part: &BTreeSet<Element>) -> BTreeSet<Element> {
    let inverse = |g: Element| {
        *carrier
            .iter()
            .find(|&&h| m.mul(g, h) == e)
            .expect("group element has inverse")
    };
    let mut group: BTreeSet<Element> = BTreeSet::from([e]);
    for &a in part {
        for &b in part {
            group.insert(m.product([inverse(a), inverse(b), a, b]));
        }
    }
    loop {
        let next: BTreeSet<Element> = group
            .iter()
            .flat_map(|&x| group.iter().map(move |&y| m.mul(x, y)))
            .collect();
        if next == group {
            return group;
        }
        group = next;
    }
}

/// Every maximal subgroup (the H-class of each idempotent) has a trivial perfect core.
pub fn all_subgroups_solvable(m: &Monoid) -> bool {
    let green = ideal_green(m);
    m.elements().filter(|&e| m.mul(e, e) == e).all(|e| {
        let carrier = green.h.iter().find(|c| c.contains(&e)).unwrap().clone();
        let mut current: BTreeSet<Element> = carrier.iter().copied().collect();
        loop {
            let next = commutators(m, e, &carrier, &current);
            if next == current {
                return current.len() == 1;
            }
            current = next;
        }
    })
}

/// Group test straight from the definition: every element has a two-sided inverse.
pub fn is_group(m: &Monoid) -> bool {
    let one = m.identity();
    m.elements()
        .all(|a| m.elements().any(|b| m.mul(a, b) == one && m.mul(b, a) == one))
}
