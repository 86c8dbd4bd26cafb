//! Law checkers that count violations; shared by the tests and the acceptance harness.

use std::collections::{BTreeMap, HashMap};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use regalg::automata::regex_to_min_dfa;
use regalg::classify::{Answer, ClassificationReport, FragmentId};
use regalg::logic::{
    ltl_to_fo, ltl_to_fo_sentence, parse_fo, parse_fo_sentence, relativize, sigma_inverse, substitute, CompiledFormula,
    Direction, Formula, LtlFormula, PhiSet, Substitution,
};
use regalg::monoid::{syntactic_monoid, Monoid};
use regalg::varieties::{check_variety, VarietyId};

use super::oracle::{fo_holds, fo_sentence_holds, ltl_holds};
use super::{alphabet, fixtures, random, words};

/// Returns the number of violations of w ⊨ σ(ψ) ⇔ σ⁻¹(w) ⊨ ψ over `instances` seeded triples.
pub fn substitution_violations(seed: u64, instances: usize) -> usize {
    let mut rng = StdRng::seed_from_u64(seed);
    let sigma = alphabet("ab");
    let mut violations = 0;
    for _ in 0..instances {
        let k = rng.gen_range(1..=3);
        let phis: Vec<Formula<char>> = (0..k)
            .map(|_| {
                let mut f = random::formula(&mut rng, &['a', 'b'], 2, true);
                for v in f.free_variables().into_iter().skip(1) {
                    f = Formula::exists(&v, f);
                }
                f
            })
            .collect();
        let sets: Vec<PhiSet> = (0..1u64 << k).map(PhiSet).collect();
        let psi = random::sentence(&mut rng, &sets, 3, true);
        let sub = Substitution::new(sigma.clone(), phis.clone()).unwrap();
        let image = substitute(&psi, &sub).unwrap();
        let len = rng.gen_range(0..=7);
        let w: Vec<char> = (0..len).map(|_| if rng.gen_bool(0.5) { 'a' } else { 'b' }).collect();
        let expected: Vec<PhiSet> = (1..=w.len())
            .map(|p| {
                phis.iter().enumerate().fold(PhiSet(0), |set, (i, phi)| {
                    let mut env: BTreeMap<String, usize> = phi.free_variables().into_iter().map(|v| (v, p)).collect();
                    if fo_holds(phi, &w, &mut env) {
                        set.with(i)
                    } else {
                        set
                    }
                })
            })
            .collect();
        let word: String = w.iter().collect();
        let library = sigma_inverse(&sub, &word).unwrap();
        if library != expected || fo_sentence_holds(&image, &w) != fo_sentence_holds(&psi, &expected) {
            violations += 1;
        }
    }
    violations
}

/// Violations of the prefix and suffix laws over all fixture sentences and words up to `max_len`.
pub fn relativization_violations(max_len: usize) -> usize {
    fixtures::fixture_sentences()
        .par_iter()
        .filter(|(_, text)| parse_fo(text, &alphabet("abcd")).unwrap().all_variables().len() <= 3)
        .map(|&(letters, text)| {
            let sigma = alphabet(letters);
            let psi = parse_fo_sentence(text, &sigma).unwrap();
            let plain = CompiledFormula::new(&psi);
            let before = CompiledFormula::new(&relativize(&psi, "p", Direction::Before).unwrap());
            let after = CompiledFormula::new(&relativize(&psi, "p", Direction::After).unwrap());
            let all = words(sigma.letters(), max_len);
            let truth: HashMap<&[char], bool> = all.iter().map(|w| (w.as_slice(), plain.eval(w, &[]))).collect();
            let mut bad = 0;
            for w in &all {
                for p in 1..=w.len() {
                    bad += usize::from(before.eval(w, &[p]) != truth[&w[..p - 1]]);
                    bad += usize::from(after.eval(w, &[p]) != truth[&w[p..]]);
                }
            }
            bad
        })
        .sum()
}

/// Violations of the FO translation against LTL semantics, at every position including 0.
pub fn ltl_translation_violations(seed: u64, formulas: usize) -> usize {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut bad = 0;
    for _ in 0..formulas {
        let f = random::ltl(&mut rng, &['a', 'b'], 3);
        let pointed = CompiledFormula::new(&ltl_to_fo(&f));
        let sentence = CompiledFormula::new(&ltl_to_fo_sentence(&f));
        for w in words(&['a', 'b'], 6) {
            let table = f.truth_table(&w);
            bad += usize::from(table[0] != sentence.eval(&w, &[]) || table[0] != ltl_holds(&f, &w, 0));
            for (p, &expected) in table.iter().enumerate().skip(1) {
                let via_fo = match pointed.free_variables().len() {
                    0 => pointed.eval(&w, &[]),
                    _ => pointed.eval(&w, &[p]),
                };
                bad += usize::from(expected != via_fo || expected != ltl_holds(&f, &w, p));
            }
        }
    }
    bad
}

/// Counts words up to `max_len` where F+ φ and true U φ differ, for a sample of φ.
pub fn future_as_until_violations(max_len: usize) -> usize {
    let mut rng = StdRng::seed_from_u64(11);
    let mut bad = 0;
    for _ in 0..20 {
        let phi = random::ltl(&mut rng, &['a', 'b'], 2);
        let lhs = LtlFormula::future(phi.clone());
        let rhs = LtlFormula::until(LtlFormula::True, phi);
        bad += words(&['a', 'b'], max_len)
            .iter()
            .filter(|w| lhs.truth_table(w) != rhs.truth_table(w))
            .count();
    }
    bad
}

/// Report-level implications that fail for one classification.
pub fn report_violations(r: &ClassificationReport) -> Vec<&'static str> {
    use FragmentId::*;
    let yes = |f| r.answer(f) == Answer::Yes;
    let mut bad = Vec::new();
    let mut need = |ok: bool, what| {
        if !ok {
            bad.push(what);
        }
    };
    need(!yes(FO1) || yes(FO2), "FO1 => FO2");
    need(!yes(FO2) || yes(FO), "FO2 => FO");
    need(!yes(MOD1) || yes(MOD), "MOD1 => MOD");
    need(!(yes(FO) || yes(MOD)) || yes(FOMOD), "FO or MOD => FOMOD");
    need(
        yes(FO2) == yes(UTL) && yes(UTL) == yes(SIGMA2_AND_PI2),
        "FO2 = UTL = SIGMA2_AND_PI2",
    );
    need(
        yes(FO) == yes(STARFREE) && yes(STARFREE) == yes(LTL),
        "FO = STARFREE = LTL",
    );
    need(!yes(PIECEWISE_TESTABLE) || yes(FO2), "PT => FO2");
    need(!yes(WEAK_FOMOD2_AB) || yes(WEAK_FOMOD2_MSOL), "WEAK_AB => WEAK_MSOL");
    need(!yes(WEAK_FOMOD2_MSOL) || yes(FOMOD2), "WEAK_MSOL => FOMOD2");
    need(
        !(yes(FOMOD) && !yes(FO2)) || r.answer(FOMOD2) != Answer::No,
        "FOMOD and not FO2 => FOMOD2 not NO",
    );
    need(!yes(FOMOD) || r.answer(FOMOD2) != Answer::No, "M_sol => FOMOD2 not NO");
    for v in r.fragments.values() {
        need((v.answer == Answer::No) == v.witness.is_some(), "witness exactly on NO");
        if let Some(w) = &v.witness {
            need(w.replay(&r.monoid), "witness replays");
        }
    }
    bad
}

/// Seeded corpus of syntactic monoids whose minimal automata have at most `max_states` states.
pub fn corpus(seed: u64, count: usize, max_states: usize) -> Vec<(String, Monoid)> {
    let mut rng = StdRng::seed_from_u64(seed);
    let sigma = alphabet("ab");
    let mut out = Vec::new();
    while out.len() < count {
        let text = random::regex(&mut rng, &['a', 'b'], 5).to_string();
        let dfa = regex_to_min_dfa(&text, &sigma).unwrap();
        if dfa.state_count() <= max_states {
            out.push((text, syntactic_monoid(&dfa).unwrap()));
        }
    }
    out
}

/// Containment violations among the verdicts of one monoid.
pub fn lattice_violations(m: &Monoid) -> Vec<String> {
    use VarietyId::*;
    let member = |v| check_variety(m, v).unwrap().member;
    let implications = [
        (SL, A),
        (DA, A),
        (DA, DO),
        (J, DA),
        (Ab, GSol),
        (GSol, MSol),
        (DOAndAbBar, DOAndMSol),
        (DOAndMSol, DO),
        (DOAndMSol, MSol),
        (SL, J),
        (A, MSol),
        (G, GSol),
    ];
    implications
        .iter()
        .filter(|&&(a, b)| member(a) && !member(b))
        .map(|(a, b)| format!("{a} without {b}"))
        .collect()
}
