//! Division of finite monoids by exhaustive search.
//!
//! `M` divides `N` when `M` is a homomorphic image of a submonoid of `N`
//! (containing the identity of `N`). Fix a generating set `g₁ … g_k` of `M`.
//! If `M` divides `N`, some choice of preimages `t₁ … t_k` in `N` generates a
//! submonoid `T` on which `tᵢ ↦ gᵢ` extends to a homomorphism, so searching
//! over the `|N|^k` choices is complete.

use std::collections::VecDeque;

use crate::monoid::{Element, Monoid};

/// Result of a bounded search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Divides {
    Yes,
    No,
    /// The budget did not allow a complete search.
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DivisionBudget {
    /// Largest `|N|` searched.
    pub max_target_size: usize,
    /// Largest number of generator assignments tried.
    pub max_candidates: u64,
}

impl Default for DivisionBudget {
    fn default() -> Self {
        DivisionBudget {
            max_target_size: 12,
            max_candidates: 1_000_000,
        }
    }
}

/// Greedy generating set: elements in index order, each kept if it is not
/// already generated by the earlier ones. Empty for the trivial monoid.
pub fn generating_set(m: &Monoid) -> Vec<Element> {
    let mut inside = vec![false; m.size()];
    inside[m.identity()] = true;
    let mut members = vec![m.identity()];
    let mut gens = Vec::new();
    for x in m.elements() {
        if inside[x] {
            continue;
        }
        gens.push(x);
        let mut i = 0;
        while i < members.len() {
            for &g in &gens {
                let p = m.mul(members[i], g);
                if !inside[p] {
                    inside[p] = true;
                    members.push(p);
                }
            }
            i += 1;
        }
    }
    gens
}

pub fn divides(m: &Monoid, n: &Monoid, budget: DivisionBudget) -> Divides {
    if m.size() > n.size() {
        return Divides::No;
    }
    let gens = generating_set(m);
    if gens.is_empty() {
        return Divides::Yes;
    }
    if n.size() > budget.max_target_size {
        return Divides::Unknown;
    }
    let candidates = (n.size() as u64).checked_pow(gens.len() as u32);
    if candidates.is_none_or(|c| c > budget.max_candidates) {
        return Divides::Unknown;
    }
    let mut targets = vec![0; gens.len()];
    loop {
        if extends_to_homomorphism(m, n, &gens, &targets) {
            return Divides::Yes;
        }
        let mut i = targets.len();
        loop {
            if i == 0 {
                return Divides::No;
            }
            i -= 1;
            targets[i] += 1;
            if targets[i] < n.size() {
                break;
            }
            targets[i] = 0;
        }
    }
}

/// Whether `targets[i] ↦ gens[i]` extends to a homomorphism from the
/// submonoid of `n` generated by `targets`.
fn extends_to_homomorphism(m: &Monoid, n: &Monoid, gens: &[Element], targets: &[Element]) -> bool {
    let mut image: Vec<Option<Element>> = vec![None; n.size()];
    image[n.identity()] = Some(m.identity());
    let mut queue = VecDeque::from([n.identity()]);
    while let Some(t) = queue.pop_front() {
        let value = image[t].expect("queued elements have images");
        for (&g, &target) in gens.iter().zip(targets) {
            let next = n.mul(t, target);
            let expected = m.mul(value, g);
            match image[next] {
                Some(v) if v != expected => return false,
                Some(_) => {}
                None => {
                    image[next] = Some(expected);
                    queue.push_back(next);
                }
            }
        }
    }
    true
}
