mod support;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use regalg::automata::regex_to_min_dfa;
use regalg::classify::{classify, ClassifyInput};
use regalg::constructions::{direct_product, divides, Divides, DivisionBudget};
use regalg::monoid::{
    brute_force_congruence, green_relations, is_solvable, maximal_subgroups, syntactic_monoid, Monoid,
};
use regalg::varieties::{check_variety, is_group, VarietyId};
use support::laws::{corpus, lattice_violations, report_violations};
use support::oracle::{self, re_matches, sorted_classes};
use support::{alphabet, random, words};

fn random_language(seed: u64) -> (String, Monoid) {
    let mut rng = StdRng::seed_from_u64(seed);
    let re = random::regex(&mut rng, &['a', 'b'], 4);
    let text = re.to_string();
    (
        text.clone(),
        syntactic_monoid(&regex_to_min_dfa(&text, &alphabet("ab")).unwrap()).unwrap(),
    )
}

#[test]
fn variety_lattice_over_random_corpus() {
    let corpus = corpus(1234, 120, 6);
    let failures: Vec<String> = corpus
        .iter()
        .flat_map(|(text, m)| lattice_violations(m).into_iter().map(move |v| format!("{text}: {v}")))
        .collect();
    assert!(failures.is_empty(), "{failures:?}");
}

#[test]
fn report_implications_over_random_corpus() {
    for (text, m) in corpus(77, 60, 8) {
        let r = classify(ClassifyInput::Monoid(&m)).unwrap();
        assert!(report_violations(&r).is_empty(), "{text}: {:?}", report_violations(&r));
    }
}

#[test]
fn congruence_oracle_on_fixtures() {
    for (regex, letters) in support::fixtures::LANGUAGES {
        let dfa = support::dfa(regex, letters);
        let m = syntactic_monoid(&dfa).unwrap();
        let classes = brute_force_congruence(&dfa, 4, 4).unwrap();
        for class in &classes {
            let images: Vec<_> = class.iter().map(|w| m.eval_word(w).unwrap()).collect();
            assert!(images.windows(2).all(|p| p[0] == p[1]), "{regex}: {class:?}");
        }
        let mut firsts: Vec<_> = classes.iter().map(|c| m.eval_word(&c[0]).unwrap()).collect();
        firsts.sort();
        firsts.dedup();
        assert_eq!(firsts.len(), classes.len(), "{regex}: distinct classes share an image");
    }
}

#[test]
fn direct_products_preserve_membership() {
    let fixtures = [
        support::monoid("!0a!0", "ab"),
        support::monoid("(aa)*", "a"),
        support::monoid("(ab)*", "ab"),
        support::monoid("a*b*", "ab"),
    ];
    for m in &fixtures {
        for n in &fixtures {
            let p = direct_product(m, n).unwrap();
            for v in VarietyId::ALL {
                let both = check_variety(m, v).unwrap().member && check_variety(n, v).unwrap().member;
                assert!(!both || check_variety(&p, v).unwrap().member, "{v}");
            }
            let expected = if p.size() <= DivisionBudget::default().max_target_size {
                Divides::Yes
            } else {
                Divides::Unknown
            };
            assert_eq!(divides(m, &p, DivisionBudget::default()), expected);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn automaton_matches_denotation(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let re = random::regex(&mut rng, &['a', 'b'], 4);
        let dfa = regex_to_min_dfa(&re.to_string(), &alphabet("ab")).unwrap();
        for w in words(&['a', 'b'], 5) {
            let text: String = w.iter().collect();
            prop_assert_eq!(dfa.accepts(&text).unwrap(), re_matches(&re, &w), "{} on {:?}", re, text);
        }
    }

    #[test]
    fn monoid_laws(seed in any::<u64>()) {
        let (text, m) = random_language(seed);
        prop_assert!(m.associativity_failure().is_none());
        for e in m.elements() {
            prop_assert_eq!(m.mul(m.identity(), e), e);
            prop_assert_eq!(m.mul(e, m.identity()), e);
            let rep = m.rep(e).unwrap();
            prop_assert_eq!(m.eval_word(rep).unwrap(), e, "{}", text);
            let earlier = words(&['a', 'b'], rep.len())
                .into_iter()
                .map(|w| w.into_iter().collect::<String>())
                .take_while(|w| w != rep)
                .any(|w| m.eval_word(&w).unwrap() == e);
            prop_assert!(!earlier, "{}: rep {} is not shortlex-least", text, rep);
        }
    }

    #[test]
    fn green_relations_match_ideals(seed in any::<u64>()) {
        let (_, m) = random_language(seed);
        let green = green_relations(&m);
        let ideal = oracle::ideal_green(&m);
        prop_assert_eq!(sorted_classes(&green.r_classes), ideal.r);
        prop_assert_eq!(sorted_classes(&green.l_classes), ideal.l);
        prop_assert_eq!(sorted_classes(&green.j_classes), ideal.j);
        prop_assert_eq!(sorted_classes(&green.h_classes), ideal.h);
    }

    #[test]
    fn subgroups_match_oracle(seed in any::<u64>()) {
        let (_, m) = random_language(seed);
        let solvable = maximal_subgroups(&m).iter().all(|g| is_solvable(g, &m));
        prop_assert_eq!(solvable, oracle::all_subgroups_solvable(&m));
        prop_assert_eq!(is_group(&m), oracle::is_group(&m));
        let ideal = oracle::ideal_green(&m);
        for g in maximal_subgroups(&m) {
            let h = ideal.h.iter().find(|c| c.contains(&g.unit)).unwrap();
            prop_assert_eq!(&g.carrier, h);
        }
    }

    #[test]
    fn witnesses_replay(seed in any::<u64>()) {
        let (_, m) = random_language(seed);
        for v in VarietyId::ALL {
            let verdict = check_variety(&m, v).unwrap();
            prop_assert_eq!(verdict.member, verdict.witness.is_none());
            if let Some(w) = verdict.witness {
                prop_assert!(w.replay(&m), "{}: {}", v, w.describe(&m));
            }
        }
    }
}

#[test]
fn permutation_groups() {
    let perms = |n: usize, gens: &[(char, Vec<usize>)]| Monoid::from_transformations(n, gens, 1000).unwrap();
    let s3 = perms(3, &[('s', vec![1, 0, 2]), ('c', vec![1, 2, 0])]);
    let s5 = perms(5, &[('s', vec![1, 0, 2, 3, 4]), ('c', vec![1, 2, 3, 4, 0])]);
    assert!(oracle::all_subgroups_solvable(&s3));
    assert!(check_variety(&s3, VarietyId::GSol).unwrap().member);
    assert!(!check_variety(&s3, VarietyId::Ab).unwrap().member);
    assert!(!oracle::all_subgroups_solvable(&s5));
    assert!(!check_variety(&s5, VarietyId::MSol).unwrap().member);
}
