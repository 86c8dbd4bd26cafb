//! Command-line front end.
//!
//! Exit codes: 0 success, 1 negative `check` or `agree`, 2 usage or input
//! error, 3 budget exceeded.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::Path;

use clap::{Args, Parser, Subcommand};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde_json::json;

use crate::automata::{regex_to_min_dfa, Alphabet, Dfa};
use crate::classify::{classify_with_budget, ClassificationReport, ClassifyInput};
use crate::constructions::{bilateral_product, direct_product, ActionPair};
use crate::error::{Error, Result};
use crate::logic::{
    agreement_with_budget, eval_ltl, parse_fo, parse_fo_sentence, parse_ltl, Agreement, CompiledFormula, PointedWord,
    Sentence, WordStructure, DEFAULT_MAX_AGREEMENT_WORDS,
};
use crate::monoid::{
    green_relations, is_abelian, is_solvable, maximal_subgroups, parse_monoid_text, syntactic_monoid, Monoid,
    MonoidFile, DEFAULT_MAX_EVALUATIONS,
};
use crate::varieties::{check_variety_with_budget, VarietyId};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "regalg",
    version,
    about = "Syntactic monoids and logical definability of regular languages"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// Letters of the alphabet, e.g. `ab`.
    #[arg(long, short = 'a')]
    alphabet: Option<String>,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Maximum word length for bounded checks.
    #[arg(long, default_value_t = 8)]
    max_len: usize,
    /// Evaluation budget (identity evaluations or compared words).
    #[arg(long)]
    budget: Option<u64>,
    /// Seed for randomized checks.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report which logical fragments define each language.
    Classify {
        #[command(flatten)]
        common: Common,
        /// Explicit monoid files to classify alongside the regexes.
        #[arg(long = "monoid")]
        monoids: Vec<String>,
        regexes: Vec<String>,
    },
    /// Print the syntactic monoid of a regex, or inspect a monoid file.
    Monoid {
        #[command(flatten)]
        common: Common,
        /// Read an explicit monoid instead of a regex.
        #[arg(long)]
        file: Option<String>,
        regex: Option<String>,
    },
    /// Test membership of the syntactic monoid in a pseudovariety.
    Check {
        #[command(flatten)]
        common: Common,
        variety: String,
        regex: String,
    },
    /// Evaluate an FO+MOD formula on a word.
    EvalFo {
        #[command(flatten)]
        common: Common,
        /// Position of a free variable, as `x=3` (positions start at 1).
        #[arg(long = "at")]
        at: Vec<String>,
        formula: String,
        word: String,
    },
    /// Evaluate an LTL formula on a word.
    EvalLtl {
        #[command(flatten)]
        common: Common,
        /// Position 0 is before the first letter; the default evaluates the sentence.
        #[arg(long, default_value_t = 0)]
        position: usize,
        formula: String,
        word: String,
    },
    /// Compare a sentence with a regex on all words up to --max-len.
    Agree {
        #[command(flatten)]
        common: Common,
        /// Read the formula as LTL instead of FO.
        #[arg(long)]
        ltl: bool,
        /// Additional random words longer than --max-len.
        #[arg(long, default_value_t = 0)]
        samples: usize,
        formula: String,
        regex: String,
    },
    /// Build a direct or bilateral product of two monoid files.
    Product {
        #[command(flatten)]
        common: Common,
        /// Use the `lact`/`ract` entries of the files as actions of the second monoid on the first.
        #[arg(long)]
        bilateral: bool,
        left: String,
        right: String,
    },
}

struct Output {
    out: String,
    err: String,
    code: i32,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let Output { out, err, code } = execute(args);
    print!("{out}");
    eprint!("{err}");
    code
}

/// Like [`run`] but captures the streams: `(exit code, stdout, stderr)`.
pub fn run_captured<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let Output { out, err, code } = execute(args);
    (code, out, err)
}

fn execute<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output {
                    out: String::new(),
                    err: text,
                    code,
                }
            } else {
                Output {
                    out: text,
                    err: String::new(),
                    code,
                }
            };
        }
    };
    match dispatch(cli.command) {
        Ok((out, code)) => Output {
            out,
            err: String::new(),
            code,
        },
        Err(e) => Output {
            out: String::new(),
            err: format!("error: {e}\n"),
            code: if e.is_budget() { EXIT_BUDGET } else { EXIT_USAGE },
        },
    }
}

fn alphabet(common: &Common) -> Result<Alphabet> {
    match &common.alphabet {
        Some(a) => Alphabet::parse(a),
        None => Err(Error::InvalidAlphabet(
            "--alphabet is required for language inputs".into(),
        )),
    }
}

fn read_file(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::syntax(0, format!("cannot read {path}: {e}")))
}

/// A formula argument names a file if one exists, otherwise it is literal text.
/// Lines of a formula file starting with `#` are comments.
fn formula_text(arg: &str) -> Result<String> {
    if Path::new(arg).is_file() {
        let text = read_file(arg)?;
        Ok(text
            .lines()
            .filter(|l| !l.trim_start().starts_with('#'))
            .collect::<Vec<_>>()
            .join("\n"))
    } else {
        Ok(arg.to_string())
    }
}

fn read_monoid(path: &str) -> Result<MonoidFile> {
    parse_monoid_text(&read_file(path)?)
}

fn dispatch(command: Command) -> Result<(String, i32)> {
    match command {
        Command::Classify {
            common,
            monoids,
            regexes,
        } => classify_cmd(&common, &monoids, &regexes),
        Command::Monoid { common, file, regex } => monoid_cmd(&common, file.as_deref(), regex.as_deref()),
        Command::Check { common, variety, regex } => check_cmd(&common, &variety, &regex),
        Command::EvalFo {
            common,
            at,
            formula,
            word,
        } => eval_fo_cmd(&common, &at, &formula, &word),
        Command::EvalLtl {
            common,
            position,
            formula,
            word,
        } => eval_ltl_cmd(&common, position, &formula, &word),
        Command::Agree {
            common,
            ltl,
            samples,
            formula,
            regex,
        } => agree_cmd(&common, ltl, samples, &formula, &regex),
        Command::Product {
            common,
            bilateral,
            left,
            right,
        } => product_cmd(&common, bilateral, &left, &right),
    }
}

fn classify_cmd(common: &Common, monoid_files: &[String], regexes: &[String]) -> Result<(String, i32)> {
    if regexes.is_empty() && monoid_files.is_empty() {
        return Err(Error::syntax(0, "nothing to classify"));
    }
    let budget = common.budget.unwrap_or(DEFAULT_MAX_EVALUATIONS);
    let mut reports: Vec<ClassificationReport> = Vec::new();
    if !regexes.is_empty() {
        let sigma = alphabet(common)?;
        let results: Vec<Result<ClassificationReport>> = regexes
            .par_iter()
            .map(|text| classify_with_budget(ClassifyInput::Regex { text, alphabet: &sigma }, budget))
            .collect();
        for r in results {
            reports.push(r?);
        }
    }
    for path in monoid_files {
        let file = read_monoid(path)?;
        let mut report = classify_with_budget(ClassifyInput::Monoid(&file.monoid), budget)?;
        report.language = path.clone();
        reports.push(report);
    }
    let out = if common.json {
        let values: Vec<_> = reports.iter().map(ClassificationReport::to_json_value).collect();
        let text = if values.len() == 1 {
            serde_json::to_string_pretty(&values[0])
        } else {
            serde_json::to_string_pretty(&values)
        };
        text.expect("report serializes") + "\n"
    } else {
        reports.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n")
    };
    Ok((out, EXIT_OK))
}

fn describe_monoid(m: &Monoid) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "size {}", m.size());
    let _ = writeln!(s, "identity {}", m.identity());
    let _ = writeln!(s, "elements:");
    for e in m.elements() {
        let _ = writeln!(s, "  {e}: {}", m.label(e));
    }
    let _ = writeln!(s, "table:");
    for row in m.table_rows() {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        let _ = writeln!(s, "  {}", cells.join(" "));
    }
    let labels = |class: &[usize]| class.iter().map(|&e| m.label(e)).collect::<Vec<_>>().join(" ");
    let green = green_relations(m);
    for (name, classes) in [
        ("R", &green.r_classes),
        ("L", &green.l_classes),
        ("J", &green.j_classes),
        ("H", &green.h_classes),
    ] {
        let rendered: Vec<String> = classes.iter().map(|c| format!("{{{}}}", labels(c))).collect();
        let _ = writeln!(s, "{name}-classes: {}", rendered.join(" "));
    }
    let _ = writeln!(s, "idempotents: {}", labels(&m.idempotents()));
    let _ = writeln!(s, "maximal subgroups:");
    for g in maximal_subgroups(m) {
        let _ = writeln!(
            s,
            "  at {}: order {}{}{}",
            m.label(g.unit),
            g.order(),
            if is_abelian(&g, m) {
                ", abelian"
            } else {
                ", non-abelian"
            },
            if is_solvable(&g, m) {
                ", solvable"
            } else {
                ", not solvable"
            }
        );
    }
    let neutral: String = m.neutral_letters().into_iter().collect();
    let _ = writeln!(
        s,
        "neutral letters: {}",
        if neutral.is_empty() { "none" } else { &neutral }
    );
    s
}

fn monoid_json(m: &Monoid) -> serde_json::Value {
    let green = green_relations(m);
    json!({
        "size": m.size(),
        "identity": m.identity(),
        "table": m.table_rows().collect::<Vec<_>>(),
        "reps": m.elements().map(|e| m.rep(e).map(str::to_string)).collect::<Vec<_>>(),
        "generators": m.generators().iter().map(|&(c, e)| (c.to_string(), e)).collect::<indexmap::IndexMap<_, _>>(),
        "r_classes": green.r_classes,
        "l_classes": green.l_classes,
        "j_classes": green.j_classes,
        "h_classes": green.h_classes,
        "idempotents": m.idempotents(),
        "subgroups": maximal_subgroups(m).iter().map(|g| json!({
            "unit": g.unit,
            "order": g.order(),
            "abelian": is_abelian(g, m),
            "solvable": is_solvable(g, m),
        })).collect::<Vec<_>>(),
        "neutral_letters": m.neutral_letters().iter().map(char::to_string).collect::<Vec<_>>(),
    })
}

fn monoid_cmd(common: &Common, file: Option<&str>, regex: Option<&str>) -> Result<(String, i32)> {
    let m = match (file, regex) {
        (Some(path), None) => read_monoid(path)?.monoid,
        (None, Some(text)) => syntactic_monoid(&regex_to_min_dfa(text, &alphabet(common)?)?)?,
        _ => return Err(Error::syntax(0, "give either a regex or --file")),
    };
    let out = if common.json {
        serde_json::to_string_pretty(&monoid_json(&m)).expect("monoid serializes") + "\n"
    } else {
        describe_monoid(&m)
    };
    Ok((out, EXIT_OK))
}

fn check_cmd(common: &Common, variety: &str, regex: &str) -> Result<(String, i32)> {
    let v: VarietyId = variety.parse()?;
    let m = syntactic_monoid(&regex_to_min_dfa(regex, &alphabet(common)?)?)?;
    let verdict = check_variety_with_budget(&m, v, common.budget.unwrap_or(DEFAULT_MAX_EVALUATIONS))?;
    let out = if common.json {
        let mut value = json!({ "variety": v.name(), "member": verdict.member });
        if let Some(w) = &verdict.witness {
            let assignment: indexmap::IndexMap<String, serde_json::Value> = w
                .assignment()
                .into_iter()
                .map(|(var, e)| (var, json!({ "element": e, "word": m.rep(e).unwrap_or_default() })))
                .collect();
            value["witness"] = json!({ "identity": w.statement(), "assignment": assignment });
        }
        serde_json::to_string_pretty(&value).expect("verdict serializes") + "\n"
    } else {
        match &verdict.witness {
            None => format!("{}: member\n", v.name()),
            Some(w) => format!("{}: not a member\n  {}\n", v.name(), w.describe(&m)),
        }
    };
    Ok((out, if verdict.member { EXIT_OK } else { EXIT_NEGATIVE }))
}

fn word_chars(word: &str, sigma: &Alphabet) -> Result<Vec<char>> {
    word.chars()
        .map(|c| {
            if sigma.contains(c) {
                Ok(c)
            } else {
                Err(Error::UndeclaredLetter(c))
            }
        })
        .collect()
}

fn eval_fo_cmd(common: &Common, at: &[String], formula: &str, word: &str) -> Result<(String, i32)> {
    let sigma = alphabet(common)?;
    let f = parse_fo(&formula_text(formula)?, &sigma)?;
    let letters = word_chars(word, &sigma)?;
    let mut structure = WordStructure::plain(letters);
    for a in at {
        let (var, value) = a
            .split_once('=')
            .ok_or_else(|| Error::syntax(0, format!("expected var=position, found {a:?}")))?;
        let p: usize = value
            .trim()
            .parse()
            .map_err(|_| Error::syntax(0, format!("bad position {value:?} for {var}")))?;
        structure.pointers.insert(var.trim().to_string(), p);
    }
    let value = CompiledFormula::new(&f).eval_structure(&structure)?;
    Ok((format!("{value}\n"), EXIT_OK))
}

fn eval_ltl_cmd(common: &Common, position: usize, formula: &str, word: &str) -> Result<(String, i32)> {
    let sigma = alphabet(common)?;
    let f = parse_ltl(&formula_text(formula)?, &sigma)?;
    word_chars(word, &sigma)?;
    let value = eval_ltl(&f, &PointedWord::new(word, position))?;
    Ok((format!("{value}\n"), EXIT_OK))
}

fn random_disagreement(sentence: Sentence<'_>, dfa: &Dfa, common: &Common, samples: usize) -> Option<String> {
    let sigma = dfa.alphabet();
    let compiled = match sentence {
        Sentence::Fo(f) => Some(CompiledFormula::new(f)),
        Sentence::Ltl(_) => None,
    };
    let mut rng = StdRng::seed_from_u64(common.seed);
    for _ in 0..samples {
        let len = rng.gen_range(common.max_len + 1..=2 * common.max_len + 2);
        let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..sigma.len())).collect();
        let letters: Vec<char> = word.iter().map(|&i| sigma.letter(i)).collect();
        let truth = match (sentence, &compiled) {
            (_, Some(c)) => c.eval(&letters, &[]),
            (Sentence::Ltl(f), None) => f.accepts(&letters),
            (Sentence::Fo(_), None) => unreachable!("FO sentences are compiled"),
        };
        if truth != dfa.accepts_indices(&word) {
            return Some(letters.into_iter().collect());
        }
    }
    None
}

fn agree_cmd(common: &Common, ltl: bool, samples: usize, formula: &str, regex: &str) -> Result<(String, i32)> {
    let sigma = alphabet(common)?;
    let text = formula_text(formula)?;
    let dfa = regex_to_min_dfa(regex, &sigma)?;
    let budget = common.budget.unwrap_or(DEFAULT_MAX_AGREEMENT_WORDS);
    let fo;
    let lt;
    let sentence = if ltl {
        lt = parse_ltl(&text, &sigma)?;
        Sentence::Ltl(&lt)
    } else {
        fo = parse_fo_sentence(&text, &sigma)?;
        Sentence::Fo(&fo)
    };
    let outcome = match agreement_with_budget(sentence, &dfa, common.max_len, budget)? {
        Agreement::Disagree(w) => Some(w),
        Agreement::Agree => random_disagreement(sentence, &dfa, common, samples),
    };
    Ok(match outcome {
        None => ("OK\n".to_string(), EXIT_OK),
        Some(w) if common.json => (
            serde_json::to_string_pretty(&json!({ "agree": false, "counterexample": w })).expect("serializes") + "\n",
            EXIT_NEGATIVE,
        ),
        Some(w) => (format!("counterexample: {:?}\n", w), EXIT_NEGATIVE),
    })
}

fn product_cmd(common: &Common, bilateral: bool, left: &str, right: &str) -> Result<(String, i32)> {
    let m = read_monoid(left)?;
    let n = read_monoid(right)?;
    let product = if bilateral {
        let lact: Vec<_> = m.left_action.iter().chain(&n.left_action).copied().collect();
        let ract: Vec<_> = m.right_action.iter().chain(&n.right_action).copied().collect();
        let actions = ActionPair::from_entries(&m.monoid, &n.monoid, &lact, &ract)?;
        bilateral_product(&m.monoid, &n.monoid, &actions)?
    } else {
        direct_product(&m.monoid, &n.monoid)?
    };
    let out = if common.json {
        serde_json::to_string_pretty(&monoid_json(&product)).expect("monoid serializes") + "\n"
    } else {
        product.to_text()
    };
    Ok((out, EXIT_OK))
}
