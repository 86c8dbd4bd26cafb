//! Membership in named pseudovarieties, with witnesses on failure.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::monoid::{
    check_identity_with_budget, green_relations, is_abelian, is_solvable, maximal_subgroups, Counterexample, Element,
    Identity, IdentityCheck, Monoid, DEFAULT_MAX_EVALUATIONS,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VarietyId {
    /// Semilattices.
    SL,
    /// Abelian groups.
    Ab,
    /// Groups.
    G,
    /// Solvable groups.
    GSol,
    /// Aperiodic monoids.
    A,
    DA,
    DO,
    /// J-trivial monoids.
    J,
    /// Monoids whose subgroups are solvable.
    MSol,
    DOAndMSol,
    /// DO with abelian subgroups.
    DOAndAbBar,
}

/// Extra condition on every maximal subgroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubgroupCondition {
    Solvable,
    Abelian,
}

impl VarietyId {
    pub const ALL: [VarietyId; 11] = [
        VarietyId::SL,
        VarietyId::Ab,
        VarietyId::G,
        VarietyId::GSol,
        VarietyId::A,
        VarietyId::DA,
        VarietyId::DO,
        VarietyId::J,
        VarietyId::MSol,
        VarietyId::DOAndMSol,
        VarietyId::DOAndAbBar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            VarietyId::SL => "SL",
            VarietyId::Ab => "Ab",
            VarietyId::G => "G",
            VarietyId::GSol => "G_sol",
            VarietyId::A => "A",
            VarietyId::DA => "DA",
            VarietyId::DO => "DO",
            VarietyId::J => "J",
            VarietyId::MSol => "M_sol",
            VarietyId::DOAndMSol => "DO_and_Msol",
            VarietyId::DOAndAbBar => "DO_and_AbBar",
        }
    }

    /// Defining identities, checked in order.
    pub fn identities(self) -> Vec<Identity> {
        let texts: &[&str] = match self {
            VarietyId::SL => &["xx = x", "xy = yx"],
            VarietyId::A => &["x^w x = x^w"],
            VarietyId::G | VarietyId::GSol => &["x^w y = y", "y x^w = y"],
            VarietyId::Ab => &["x^w y = y", "y x^w = y", "xy = yx"],
            VarietyId::DA => &["(xy)^w y (xy)^w = (xy)^w"],
            VarietyId::DO | VarietyId::DOAndMSol | VarietyId::DOAndAbBar => &["(xy)^w (yx)^w (xy)^w = (xy)^w"],
            VarietyId::J | VarietyId::MSol => &[],
        };
        texts
            .iter()
            .map(|t| Identity::parse(t).expect("built-in identity"))
            .collect()
    }

    pub fn subgroup_condition(self) -> Option<SubgroupCondition> {
        match self {
            VarietyId::GSol | VarietyId::MSol | VarietyId::DOAndMSol => Some(SubgroupCondition::Solvable),
            VarietyId::DOAndAbBar => Some(SubgroupCondition::Abelian),
            _ => None,
        }
    }
}

impl fmt::Display for VarietyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for VarietyId {
    type Err = Error;

    /// Case-insensitive; accepts the canonical names plus `Gsol`, `Msol`,
    /// `DO_and_Msol`/`DO_and_AbBar` spelled with or without underscores.
    fn from_str(s: &str) -> Result<Self> {
        let key: String = s.chars().filter(|c| *c != '_').collect::<String>().to_lowercase();
        VarietyId::ALL
            .into_iter()
            .find(|v| v.name().replace('_', "").to_lowercase() == key)
            .ok_or_else(|| Error::syntax(0, format!("unknown variety {s:?}")))
    }
}

/// Why a monoid is not a member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// A defining identity fails.
    Identity(Box<Counterexample>),
    /// The maximal subgroup at `unit` has a nontrivial perfect derived term of
    /// the given order.
    NonSolvableSubgroup {
        unit: Element,
        order: usize,
        perfect_order: usize,
    },
    /// `a` and `b` lie in the maximal subgroup at `unit` and do not commute.
    NonAbelianSubgroup { unit: Element, a: Element, b: Element },
    /// Distinct `a`, `b` generate the same two-sided ideal.
    NonTrivialJClass { a: Element, b: Element },
}

impl Witness {
    /// Statement that the witness refutes.
    pub fn statement(&self) -> String {
        match self {
            Witness::Identity(c) => c.identity.to_string(),
            Witness::NonSolvableSubgroup { .. } => "the maximal subgroup at e is solvable".into(),
            Witness::NonAbelianSubgroup { .. } => "xy = yx in the maximal subgroup at e".into(),
            Witness::NonTrivialJClass { .. } => "MxM = MyM implies x = y".into(),
        }
    }

    /// Named elements of the witness, in display order.
    pub fn assignment(&self) -> Vec<(String, Element)> {
        match self {
            Witness::Identity(c) => c.assignment.iter().map(|(v, m, _)| (v.clone(), *m)).collect(),
            Witness::NonSolvableSubgroup { unit, .. } => vec![("e".into(), *unit)],
            Witness::NonAbelianSubgroup { unit, a, b } => {
                vec![("e".into(), *unit), ("x".into(), *a), ("y".into(), *b)]
            }
            Witness::NonTrivialJClass { a, b } => vec![("x".into(), *a), ("y".into(), *b)],
        }
    }

    /// Re-checks the witness against `monoid` from scratch.
    pub fn replay(&self, monoid: &Monoid) -> bool {
        match self {
            Witness::Identity(c) => {
                let values = c.as_assignment();
                let lhs = crate::monoid::eval_omega_term(&c.identity.lhs, &values, monoid);
                let rhs = crate::monoid::eval_omega_term(&c.identity.rhs, &values, monoid);
                matches!((lhs, rhs), (Ok(l), Ok(r)) if l != r)
            }
            Witness::NonSolvableSubgroup { unit, .. } => maximal_subgroups(monoid)
                .iter()
                .any(|g| g.unit == *unit && !is_solvable(g, monoid)),
            Witness::NonAbelianSubgroup { unit, a, b } => {
                let group = maximal_subgroups(monoid).into_iter().find(|g| g.unit == *unit);
                group.is_some_and(|g| g.contains(*a) && g.contains(*b)) && monoid.mul(*a, *b) != monoid.mul(*b, *a)
            }
            Witness::NonTrivialJClass { a, b } => a != b && green_relations(monoid).j_equivalent(*a, *b),
        }
    }

    pub fn describe(&self, monoid: &Monoid) -> String {
        let names: Vec<String> = self
            .assignment()
            .iter()
            .map(|(v, m)| format!("{v}={}", monoid.label(*m)))
            .collect();
        let mut text = format!("{} fails at {}", self.statement(), names.join(", "));
        if let Witness::NonSolvableSubgroup {
            order, perfect_order, ..
        } = self
        {
            text.push_str(&format!(
                " (order {order}, derived series stops at order {perfect_order})"
            ));
        }
        text
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub member: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    fn member() -> Self {
        Verdict {
            member: true,
            witness: None,
        }
    }

    fn refuted(witness: Witness) -> Self {
        Verdict {
            member: false,
            witness: Some(witness),
        }
    }
}

pub fn check_variety(monoid: &Monoid, variety: VarietyId) -> Result<Verdict> {
    check_variety_with_budget(monoid, variety, DEFAULT_MAX_EVALUATIONS)
}

/// Membership test; identities first, then structural conditions.
pub fn check_variety_with_budget(monoid: &Monoid, variety: VarietyId, max_evaluations: u64) -> Result<Verdict> {
    if matches!(variety, VarietyId::G | VarietyId::GSol | VarietyId::Ab) {
        let mut holds = true;
        for identity in VarietyId::G.identities() {
            holds &= check_identity_with_budget(&identity, monoid, max_evaluations)?.holds();
        }
        assert_eq!(
            holds,
            is_group(monoid),
            "group identities disagree with the idempotent test"
        );
    }
    for identity in variety.identities() {
        if let IdentityCheck::Fails(c) = check_identity_with_budget(&identity, monoid, max_evaluations)? {
            return Ok(Verdict::refuted(Witness::Identity(c)));
        }
    }
    if variety == VarietyId::J {
        let green = green_relations(monoid);
        if let Some(class) = green.first_nontrivial_j_class() {
            return Ok(Verdict::refuted(Witness::NonTrivialJClass {
                a: class[0],
                b: class[1],
            }));
        }
    }
    match variety.subgroup_condition() {
        None => {}
        Some(SubgroupCondition::Solvable) => {
            for group in maximal_subgroups(monoid) {
                let series = group.derived_series(monoid);
                let last = series.last().unwrap();
                if !last.is_trivial() {
                    return Ok(Verdict::refuted(Witness::NonSolvableSubgroup {
                        unit: group.unit,
                        order: group.order(),
                        perfect_order: last.order(),
                    }));
                }
            }
        }
        Some(SubgroupCondition::Abelian) => {
            for group in maximal_subgroups(monoid) {
                if is_abelian(&group, monoid) {
                    continue;
                }
                for &a in &group.carrier {
                    if let Some(&b) = group.carrier.iter().find(|&&b| monoid.mul(a, b) != monoid.mul(b, a)) {
                        return Ok(Verdict::refuted(Witness::NonAbelianSubgroup { unit: group.unit, a, b }));
                    }
                }
            }
        }
    }
    Ok(Verdict::member())
}

/// Structural group test: the identity is the only idempotent.
pub fn is_group(monoid: &Monoid) -> bool {
    monoid.idempotents() == [monoid.identity()]
}
