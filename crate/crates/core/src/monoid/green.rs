//! Green's relations.
//!
//! `a R b` iff `aM = bM`, i.e. `a` and `b` lie in the same strongly connected
//! component of the right Cayley graph; dually for `L`. In a finite monoid
//! `J = D`, which is the component relation of the two-sided graph.

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;

use super::{Element, Monoid};

/// Partitions of the elements into R-, L-, J- and H-classes.
///
/// Each class is sorted; classes are sorted by their least element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreenData {
    pub r_classes: Vec<Vec<Element>>,
    pub l_classes: Vec<Vec<Element>>,
    pub j_classes: Vec<Vec<Element>>,
    pub h_classes: Vec<Vec<Element>>,
    r_of: Vec<usize>,
    l_of: Vec<usize>,
    j_of: Vec<usize>,
    h_of: Vec<usize>,
}

impl GreenData {
    pub fn r_class(&self, m: Element) -> &[Element] {
        &self.r_classes[self.r_of[m]]
    }

    pub fn l_class(&self, m: Element) -> &[Element] {
        &self.l_classes[self.l_of[m]]
    }

    pub fn j_class(&self, m: Element) -> &[Element] {
        &self.j_classes[self.j_of[m]]
    }

    pub fn h_class(&self, m: Element) -> &[Element] {
        &self.h_classes[self.h_of[m]]
    }

    pub fn r_equivalent(&self, a: Element, b: Element) -> bool {
        self.r_of[a] == self.r_of[b]
    }

    pub fn l_equivalent(&self, a: Element, b: Element) -> bool {
        self.l_of[a] == self.l_of[b]
    }

    pub fn j_equivalent(&self, a: Element, b: Element) -> bool {
        self.j_of[a] == self.j_of[b]
    }

    pub fn h_equivalent(&self, a: Element, b: Element) -> bool {
        self.h_of[a] == self.h_of[b]
    }

    /// Every J-class is a singleton.
    pub fn is_j_trivial(&self) -> bool {
        self.j_classes.iter().all(|c| c.len() == 1)
    }

    /// First J-class with more than one element.
    pub fn first_nontrivial_j_class(&self) -> Option<&[Element]> {
        self.j_classes.iter().find(|c| c.len() > 1).map(Vec::as_slice)
    }

    pub fn is_h_trivial(&self) -> bool {
        self.h_classes.iter().all(|c| c.len() == 1)
    }
}

/// Multipliers spanning the Cayley graphs: the generator images when they
/// generate the monoid, otherwise every element.
fn spanning_set(monoid: &Monoid) -> Vec<Element> {
    let generated = !monoid.generators().is_empty() && monoid.elements().all(|m| monoid.rep(m).is_some());
    if generated {
        let mut gens: Vec<Element> = monoid.generators().iter().map(|&(_, g)| g).collect();
        gens.sort_unstable();
        gens.dedup();
        gens
    } else {
        monoid.elements().collect()
    }
}

fn components(size: usize, edges: impl Iterator<Item = (Element, Element)>) -> (Vec<Vec<Element>>, Vec<usize>) {
    let mut graph = DiGraph::<(), ()>::with_capacity(size, 0);
    for _ in 0..size {
        graph.add_node(());
    }
    for (a, b) in edges {
        graph.add_edge((a as u32).into(), (b as u32).into(), ());
    }
    let sccs: Vec<Vec<Element>> = tarjan_scc(&graph)
        .into_iter()
        .map(|c| {
            let mut c: Vec<Element> = c.into_iter().map(|n| n.index()).collect();
            c.sort_unstable();
            c
        })
        .collect();
    classes_from(size, sccs)
}

fn classes_from(size: usize, mut classes: Vec<Vec<Element>>) -> (Vec<Vec<Element>>, Vec<usize>) {
    classes.sort_unstable_by_key(|c| c[0]);
    let mut of = vec![0; size];
    for (i, c) in classes.iter().enumerate() {
        for &m in c {
            of[m] = i;
        }
    }
    (classes, of)
}

pub fn green_relations(monoid: &Monoid) -> GreenData {
    let n = monoid.size();
    let span = spanning_set(monoid);
    let right = |m: Element| span.iter().map(move |&g| (m, monoid.mul(m, g)));
    let left = |m: Element| span.iter().map(move |&g| (m, monoid.mul(g, m)));
    let (r_classes, r_of) = components(n, monoid.elements().flat_map(right));
    let (l_classes, l_of) = components(n, monoid.elements().flat_map(left));
    let (j_classes, j_of) = components(n, monoid.elements().flat_map(|m| right(m).chain(left(m))));
    let mut h_map: std::collections::BTreeMap<(usize, usize), Vec<Element>> = Default::default();
    for m in monoid.elements() {
        h_map.entry((r_of[m], l_of[m])).or_default().push(m);
    }
    let (h_classes, h_of) = classes_from(n, h_map.into_values().collect());
    GreenData {
        r_classes,
        l_classes,
        j_classes,
        h_classes,
        r_of,
        l_of,
        j_of,
        h_of,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::Alphabet;
    use crate::monoid::syntactic_monoid_of_regex;

    #[test]
    fn b2_classes() {
        let m = syntactic_monoid_of_regex("(ab)*", &Alphabet::parse("ab").unwrap()).unwrap();
        let g = green_relations(&m);
        let labels = |c: &[Element]| {
            let mut l: Vec<String> = c.iter().map(|&x| m.label(x)).collect();
            l.sort();
            l
        };
        let js: Vec<Vec<String>> = g.j_classes.iter().map(|c| labels(c)).collect();
        assert_eq!(js, [vec!["1"], vec!["a", "ab", "b", "ba"], vec!["aa"]]);
        let a = m.eval_word("a").unwrap();
        assert_eq!(labels(g.r_class(a)), ["a", "ab"]);
        assert_eq!(labels(g.l_class(a)), ["a", "ba"]);
        assert!(g.is_h_trivial());
        assert!(!g.is_j_trivial());
    }

    #[test]
    fn group_is_one_class() {
        let z3 = Monoid::from_table(vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]], 0).unwrap();
        let g = green_relations(&z3);
        for classes in [&g.r_classes, &g.l_classes, &g.j_classes, &g.h_classes] {
            assert_eq!(classes, &vec![vec![0, 1, 2]]);
        }
    }

    #[test]
    fn trivial_monoid() {
        let g = green_relations(&Monoid::from_table(vec![vec![0]], 0).unwrap());
        assert_eq!(g.j_classes, vec![vec![0]]);
        assert!(g.is_j_trivial());
    }
}
