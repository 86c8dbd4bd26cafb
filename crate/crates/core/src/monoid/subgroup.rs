//! Maximal subgroups and group-theoretic tests on them.

use std::collections::BTreeMap;

use super::{Element, Monoid};

/// A subgroup of a monoid: a subset closed under multiplication that forms a
/// group with identity `unit` (an idempotent, not necessarily the monoid's).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    /// Sorted.
    pub carrier: Vec<Element>,
    pub unit: Element,
    pub inverse: BTreeMap<Element, Element>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.carrier.len() == 1
    }

    pub fn contains(&self, m: Element) -> bool {
        self.carrier.binary_search(&m).is_ok()
    }

    pub fn inverse_of(&self, m: Element) -> Option<Element> {
        self.inverse.get(&m).copied()
    }

    /// The subgroup generated by `gens` inside `self`.
    pub fn generated(&self, monoid: &Monoid, gens: &[Element]) -> Subgroup {
        let mut inside = vec![false; monoid.size()];
        inside[self.unit] = true;
        let mut members = vec![self.unit];
        let mut used: Vec<Element> = Vec::new();
        for &g in gens {
            if inside[g] {
                continue;
            }
            used.push(g);
            // close under right multiplication by every generator used so far
            let mut i = 0;
            while i < members.len() {
                for &h in &used {
                    let p = monoid.mul(members[i], h);
                    if !inside[p] {
                        inside[p] = true;
                        members.push(p);
                    }
                }
                i += 1;
            }
        }
        members.sort_unstable();
        let inverse = members.iter().map(|&m| (m, self.inverse[&m])).collect();
        Subgroup {
            carrier: members,
            unit: self.unit,
            inverse,
        }
    }

    /// Subgroup generated by all commutators `g⁻¹h⁻¹gh`.
    pub fn derived_subgroup(&self, monoid: &Monoid) -> Subgroup {
        let mut seen = vec![false; monoid.size()];
        let mut commutators = Vec::new();
        for &g in &self.carrier {
            for &h in &self.carrier {
                let c = monoid.product([self.inverse[&g], self.inverse[&h], g, h]);
                if !seen[c] {
                    seen[c] = true;
                    commutators.push(c);
                }
            }
        }
        self.generated(monoid, &commutators)
    }

    /// Derived series `G ⊇ G' ⊇ G'' ⊇ …` up to its stable term.
    pub fn derived_series(&self, monoid: &Monoid) -> Vec<Subgroup> {
        let mut series = vec![self.clone()];
        loop {
            let next = series.last().unwrap().derived_subgroup(monoid);
            if next.order() == series.last().unwrap().order() {
                return series;
            }
            series.push(next);
        }
    }
}

/// One subgroup per idempotent `e`: the group of units of `eMe`.
///
/// `g` is a unit of `eMe` iff `ege = g` and some power of `g` equals `e`,
/// i.e. `g^ω = e`. Returned in idempotent order.
pub fn maximal_subgroups(monoid: &Monoid) -> Vec<Subgroup> {
    let mut carriers: BTreeMap<Element, Vec<Element>> =
        monoid.idempotents().into_iter().map(|e| (e, Vec::new())).collect();
    for g in monoid.elements() {
        let e = monoid.idempotent_power(g);
        if monoid.product([e, g, e]) == g {
            carriers.get_mut(&e).expect("idempotent").push(g);
        }
    }
    carriers
        .into_iter()
        .map(|(unit, carrier)| {
            let inverse = carrier
                .iter()
                .map(|&g| {
                    // g^k = unit for the least k ≥ 1, so g^(k-1) (read as unit when k = 1) inverts g
                    let mut previous = unit;
                    let mut power = g;
                    while power != unit {
                        previous = power;
                        power = monoid.mul(power, g);
                    }
                    (g, previous)
                })
                .collect();
            Subgroup { carrier, unit, inverse }
        })
        .collect()
}

pub fn is_abelian(group: &Subgroup, monoid: &Monoid) -> bool {
    group.carrier.iter().enumerate().all(|(i, &a)| {
        group.carrier[i + 1..]
            .iter()
            .all(|&b| monoid.mul(a, b) == monoid.mul(b, a))
    })
}

/// Solvable iff the derived series reaches the trivial group.
pub fn is_solvable(group: &Subgroup, monoid: &Monoid) -> bool {
    group.derived_series(monoid).last().unwrap().is_trivial()
}
