//! Per-fragment definability report for a regular language.
//!
//! Each logical fragment is matched with the pseudovariety that characterizes
//! it, and the syntactic monoid is tested for membership. Two-variable
//! FO+MOD corresponds to DA □ G_sol, for which no decision procedure is
//! known; it gets YES from a sufficient condition, NO from a necessary one,
//! and UNKNOWN otherwise.

use std::fmt;
use std::str::FromStr;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::automata::{regex_to_min_dfa, Alphabet, Dfa};
use crate::error::{Error, Result};
use crate::monoid::{
    is_abelian, is_solvable, maximal_subgroups, syntactic_monoid, Element, Monoid, DEFAULT_MAX_EVALUATIONS,
};
use crate::varieties::{check_variety_with_budget, VarietyId, Verdict, Witness};

#[allow(non_camel_case_types)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FragmentId {
    FO1,
    MOD1,
    FO,
    FO2,
    MOD,
    FOMOD,
    SIGMA2_AND_PI2,
    UTL,
    LTL,
    STARFREE,
    PIECEWISE_TESTABLE,
    WEAK_FOMOD2_MSOL,
    WEAK_FOMOD2_AB,
    FOMOD2,
}

pub const UNKNOWN_REASON: &str = "membership in DA □ G_sol is not known to be decidable";

impl FragmentId {
    pub const ALL: [FragmentId; 14] = [
        FragmentId::FO1,
        FragmentId::MOD1,
        FragmentId::FO,
        FragmentId::FO2,
        FragmentId::MOD,
        FragmentId::FOMOD,
        FragmentId::SIGMA2_AND_PI2,
        FragmentId::UTL,
        FragmentId::LTL,
        FragmentId::STARFREE,
        FragmentId::PIECEWISE_TESTABLE,
        FragmentId::WEAK_FOMOD2_MSOL,
        FragmentId::WEAK_FOMOD2_AB,
        FragmentId::FOMOD2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FragmentId::FO1 => "FO1",
            FragmentId::MOD1 => "MOD1",
            FragmentId::FO => "FO",
            FragmentId::FO2 => "FO2",
            FragmentId::MOD => "MOD",
            FragmentId::FOMOD => "FOMOD",
            FragmentId::SIGMA2_AND_PI2 => "SIGMA2_AND_PI2",
            FragmentId::UTL => "UTL",
            FragmentId::LTL => "LTL",
            FragmentId::STARFREE => "STARFREE",
            FragmentId::PIECEWISE_TESTABLE => "PIECEWISE_TESTABLE",
            FragmentId::WEAK_FOMOD2_MSOL => "WEAK_FOMOD2_MSOL",
            FragmentId::WEAK_FOMOD2_AB => "WEAK_FOMOD2_AB",
            FragmentId::FOMOD2 => "FOMOD2",
        }
    }

    /// Short description of the fragment.
    pub fn description(self) -> &'static str {
        match self {
            FragmentId::FO1 => "one-variable FO[<]",
            FragmentId::MOD1 => "one-variable MOD[<]",
            FragmentId::FO => "FO[<]",
            FragmentId::FO2 => "two-variable FO[<]",
            FragmentId::MOD => "MOD[<]",
            FragmentId::FOMOD => "FO+MOD[<]",
            FragmentId::SIGMA2_AND_PI2 => "both Σ₂[<] and Π₂[<]",
            FragmentId::UTL => "unary temporal logic",
            FragmentId::LTL => "linear temporal logic",
            FragmentId::STARFREE => "star-free expressions",
            FragmentId::PIECEWISE_TESTABLE => "piecewise-testable languages",
            FragmentId::WEAK_FOMOD2_MSOL => "two-variable FO+MOD[<], modular quantifiers outermost",
            FragmentId::WEAK_FOMOD2_AB => "two-variable FO+MOD[<], modular quantifiers outermost, abelian counting",
            FragmentId::FOMOD2 => "two-variable FO+MOD[<]",
        }
    }

    /// Characterizing pseudovariety; `None` for the three-valued fragment.
    pub fn variety(self) -> Option<VarietyId> {
        Some(match self {
            FragmentId::FO1 => VarietyId::SL,
            FragmentId::MOD1 => VarietyId::Ab,
            FragmentId::FO | FragmentId::STARFREE | FragmentId::LTL => VarietyId::A,
            FragmentId::FO2 | FragmentId::UTL | FragmentId::SIGMA2_AND_PI2 => VarietyId::DA,
            FragmentId::MOD => VarietyId::GSol,
            FragmentId::FOMOD => VarietyId::MSol,
            FragmentId::PIECEWISE_TESTABLE => VarietyId::J,
            FragmentId::WEAK_FOMOD2_MSOL => VarietyId::DOAndMSol,
            FragmentId::WEAK_FOMOD2_AB => VarietyId::DOAndAbBar,
            FragmentId::FOMOD2 => return None,
        })
    }
}

impl fmt::Display for FragmentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FragmentId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FragmentId::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::syntax(0, format!("unknown fragment {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Answer {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Answer::Yes => "yes",
            Answer::No => "no",
            Answer::Unknown => "unknown",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FragmentVerdict {
    pub answer: Answer,
    /// Present exactly when the answer is NO.
    pub witness: Option<Witness>,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupSummary {
    pub unit: Element,
    pub order: usize,
    pub abelian: bool,
    pub solvable: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidSummary {
    pub size: usize,
    pub aperiodic: bool,
    pub idempotents: usize,
    /// Maximal subgroups, one per idempotent.
    pub subgroups: Vec<SubgroupSummary>,
    pub neutral_letters: Vec<char>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub language: String,
    pub alphabet: String,
    pub monoid: Monoid,
    pub summary: MonoidSummary,
    pub fragments: IndexMap<FragmentId, FragmentVerdict>,
}

/// What to classify.
#[derive(Debug, Clone, Copy)]
pub enum ClassifyInput<'a> {
    Regex { text: &'a str, alphabet: &'a Alphabet },
    Dfa(&'a Dfa),
    Monoid(&'a Monoid),
}

pub fn classify(input: ClassifyInput<'_>) -> Result<ClassificationReport> {
    classify_with_budget(input, DEFAULT_MAX_EVALUATIONS)
}

pub fn classify_regex(text: &str, alphabet: &Alphabet) -> Result<ClassificationReport> {
    classify(ClassifyInput::Regex { text, alphabet })
}

pub fn classify_with_budget(input: ClassifyInput<'_>, max_evaluations: u64) -> Result<ClassificationReport> {
    let (language, alphabet, monoid) = match input {
        ClassifyInput::Regex { text, alphabet } => (
            text.to_string(),
            alphabet.to_string(),
            syntactic_monoid(&regex_to_min_dfa(text, alphabet)?)?,
        ),
        ClassifyInput::Dfa(dfa) => (
            "<automaton>".to_string(),
            dfa.alphabet().to_string(),
            syntactic_monoid(dfa)?,
        ),
        ClassifyInput::Monoid(m) => (
            "<monoid>".to_string(),
            m.generators().iter().map(|&(c, _)| c).collect(),
            m.clone(),
        ),
    };
    let mut verdicts: IndexMap<VarietyId, Verdict> = IndexMap::new();
    for v in VarietyId::ALL {
        verdicts.insert(v, check_variety_with_budget(&monoid, v, max_evaluations)?);
    }
    let member = |v: VarietyId| verdicts[&v].member;

    let mut fragments = IndexMap::new();
    for fragment in FragmentId::ALL {
        let verdict = match fragment.variety() {
            Some(v) => {
                let verdict = &verdicts[&v];
                FragmentVerdict {
                    answer: if verdict.member { Answer::Yes } else { Answer::No },
                    witness: verdict.witness.clone(),
                    reason: format!(
                        "{} is characterized by {v}; the syntactic monoid is {}in {v}",
                        fragment.description(),
                        if verdict.member { "" } else { "not " }
                    ),
                }
            }
            None if member(VarietyId::DOAndMSol) || member(VarietyId::DA) => FragmentVerdict {
                answer: Answer::Yes,
                witness: None,
                reason: format!(
                    "the syntactic monoid is in {}, which is contained in DA □ G_sol",
                    if member(VarietyId::DA) { "DA" } else { "DO ∩ M_sol" }
                ),
            },
            None if !member(VarietyId::MSol) => FragmentVerdict {
                answer: Answer::No,
                witness: verdicts[&VarietyId::MSol].witness.clone(),
                reason: "DA □ G_sol is contained in M_sol and the syntactic monoid is not in M_sol".into(),
            },
            None => FragmentVerdict {
                answer: Answer::Unknown,
                witness: None,
                reason: UNKNOWN_REASON.into(),
            },
        };
        fragments.insert(fragment, verdict);
    }

    let subgroups = maximal_subgroups(&monoid)
        .iter()
        .map(|g| SubgroupSummary {
            unit: g.unit,
            order: g.order(),
            abelian: is_abelian(g, &monoid),
            solvable: is_solvable(g, &monoid),
        })
        .collect();
    let summary = MonoidSummary {
        size: monoid.size(),
        aperiodic: member(VarietyId::A),
        idempotents: monoid.idempotents().len(),
        subgroups,
        neutral_letters: monoid.neutral_letters(),
    };
    Ok(ClassificationReport {
        language,
        alphabet,
        monoid,
        summary,
        fragments,
    })
}

impl ClassificationReport {
    pub fn answer(&self, fragment: FragmentId) -> Answer {
        self.fragments[&fragment].answer
    }

    pub fn to_json_value(&self) -> ReportJson {
        let fragments = self
            .fragments
            .iter()
            .map(|(id, v)| {
                let witness = v.witness.as_ref().map(|w| WitnessJson {
                    identity: w.statement(),
                    assignment: w
                        .assignment()
                        .into_iter()
                        .map(|(var, m)| {
                            let word = self.monoid.rep(m).map_or_else(|| format!("#{m}"), str::to_string);
                            (var, ElementJson { element: m, word })
                        })
                        .collect(),
                });
                (
                    id.name().to_string(),
                    FragmentJson {
                        verdict: v.answer,
                        witness,
                        reason: v.reason.clone(),
                    },
                )
            })
            .collect();
        ReportJson {
            language: self.language.clone(),
            alphabet: self.alphabet.clone(),
            monoid: MonoidJson {
                size: self.summary.size,
                aperiodic: self.summary.aperiodic,
                neutral_letters: self.summary.neutral_letters.iter().map(char::to_string).collect(),
            },
            fragments,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("report serializes")
    }
}

impl fmt::Display for ClassificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = &self.summary;
        writeln!(f, "language: {}  over {{{}}}", self.language, self.alphabet)?;
        writeln!(
            f,
            "syntactic monoid: {} elements, {} idempotents, {}",
            s.size,
            s.idempotents,
            if s.aperiodic { "aperiodic" } else { "not aperiodic" }
        )?;
        let groups: Vec<String> = s
            .subgroups
            .iter()
            .filter(|g| g.order > 1)
            .map(|g| {
                format!(
                    "order {} at {} ({}{})",
                    g.order,
                    self.monoid.label(g.unit),
                    if g.abelian { "abelian" } else { "non-abelian" },
                    if g.solvable { ", solvable" } else { ", not solvable" }
                )
            })
            .collect();
        if groups.is_empty() {
            writeln!(f, "nontrivial subgroups: none")?;
        } else {
            writeln!(f, "nontrivial subgroups: {}", groups.join("; "))?;
        }
        let neutral: String = s.neutral_letters.iter().collect();
        writeln!(
            f,
            "neutral letters: {}",
            if neutral.is_empty() { "none".into() } else { neutral }
        )?;
        let width = FragmentId::ALL.iter().map(|x| x.name().len()).max().unwrap_or(0);
        for (id, v) in &self.fragments {
            let note = match &v.witness {
                Some(w) => w.describe(&self.monoid),
                None if v.answer == Answer::Unknown => v.reason.clone(),
                None => String::new(),
            };
            let line = format!("  {:width$}  {:7}  {note}", id.name(), v.answer.to_string());
            writeln!(f, "{}", line.trim_end())?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub language: String,
    pub alphabet: String,
    pub monoid: MonoidJson,
    pub fragments: IndexMap<String, FragmentJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoidJson {
    pub size: usize,
    pub aperiodic: bool,
    pub neutral_letters: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FragmentJson {
    pub verdict: Answer,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub identity: String,
    pub assignment: IndexMap<String, ElementJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub element: Element,
    pub word: String,
}
