//! Example languages and their defining sentences.

/// A sentence claimed to define `regex` over `alphabet`.
pub struct Sentence {
    pub name: &'static str,
    pub alphabet: &'static str,
    pub text: &'static str,
    pub regex: &'static str,
}

pub const SIGMA_AC_STAR_A: &str = "!0ac*a!0";
pub const K_REGEX: &str = "(b*ab*a)*b!0";
pub const LAST_A_THEN_D: &str = "!0ac*d(b|c|d)*";
/// Claimed regex; misses words such as `aa` that the sentences accept.
pub const FIRST_A_EVEN_C_CLAIMED: &str = "(b|c)*a((a|b)*c(a|b)*c(a|b)*)*";
/// The language the sentences actually define.
pub const FIRST_A_EVEN_C: &str = "(b|c)*a((a|b)*c(a|b)*c)*(a|b)*";
pub const EVEN_A_AFTER_BC_CLAIMED: &str = "((dc*a|c|b)*bc*a(dc*a|c|b)*bc*a)*(dc*a|c|b)*";
/// Star-free expression offered for (ab)*; it misses the empty word.
pub const AB_STAR_FREE: &str = "a!0 & !0b & !(!0aa!0) & !(!0bb!0)";

pub const TWO_A_ONLY_C_BETWEEN: &str = "E x. E y. A z. (x < y & Qa x & Qa y & ((x < z & z < y) -> Qc z))";
pub const EVEN_A_AFTER_BC: &str = "E[0 mod 2] x. E y. (Qa x & y < x & Qb y & (A z. ((y < z & z < x) -> Qc z)))";
pub const B_AFTER_EVEN_A: &str = "E x. (Qb x & E[0 mod 2] y. (y < x & Qa y))";
pub const FIRST_A_EVEN_C_THREE_VAR: &str = "E x. A y. (Qa x & (y < x -> ~Qa y) & E[0 mod 2] z. (x < z & Qc z))";
pub const FIRST_A_EVEN_C_TWO_VAR: &str = "E x. A y. (Qa x & (y < x -> ~Qa y) & E[0 mod 2] y. (x < y & Qc y))";
pub const LAST_A_THEN_D_THREE_VAR: &str =
    "E x. A y. E z. (Qa x & (x < y -> ~Qa y) & Qd z & x < z & ((x < y & y < z) -> Qc y))";
pub const LAST_A_THEN_D_TWO_VAR: &str =
    "E x. (Qa x & (A y. (x < y -> ~Qa y)) & E y. (x < y & Qd y & A x. ((x < y & ~Qc x) -> E y. (x <= y & Qa y))))";
pub const LAST_A_THEN_D_SIGMA2: &str =
    "E x. E y. A z. (x < y & Qa x & Qd y & ((x < z & z < y) -> Qc z) & (z > y -> (Qb z | Qc z | Qd z)))";
pub const LAST_A_THEN_D_PI2: &str = "A x. A y. A z. E s. E t. E u. (Qa t & Qd u & ((x < y & Qa x & Qd y) -> \
     (((x < z & z < y) -> Qc z) | (x < s & Qa s) | (x < s & s < y & Qd s))))";
pub const AB_STAR_ORDER: &str = "A x. A y. ((Qb x -> E z. z < x) & (Qa x -> E z. x < z) & \
     ((((x != y) & Qa x & Qa y) | ((x != y) & Qb x & Qb y)) -> E z. ((x < z & z < y) | (y < z & z < x))))";
pub const AB_STAR_MODULAR: &str =
    "(E[0 mod 2] x. true) & A x. ((Qa x -> E[0 mod 2] y. y < x) & (Qb x -> E[1 mod 2] y. y < x))";
pub const FIRST_A_EVEN_C_MOD_OUTSIDE: &str = "E[0 mod 2] x. (Qc x & E y. (y < x & Qa y & (A x. (y < x -> ~Qa x))))";
pub const LTL_LAST_A_THEN_D: &str = "F+ (a & ~F+ a & F+ (d & ~F- ((b | d) & ~F+ a)))";

/// Example sentences, each with the regex it is claimed to define.
pub fn example_sentences() -> Vec<Sentence> {
    let s = |name, alphabet, text, regex| Sentence {
        name,
        alphabet,
        text,
        regex,
    };
    vec![
        s(
            "two a's with only c's between",
            "abc",
            TWO_A_ONLY_C_BETWEEN,
            SIGMA_AC_STAR_A,
        ),
        s(
            "even count of a's after bc*",
            "abcd",
            EVEN_A_AFTER_BC,
            EVEN_A_AFTER_BC_CLAIMED,
        ),
        s("b after an even count of a's", "ab", B_AFTER_EVEN_A, K_REGEX),
        s(
            "first a, even c's after it",
            "abc",
            FIRST_A_EVEN_C_THREE_VAR,
            FIRST_A_EVEN_C_CLAIMED,
        ),
        s(
            "first a, even c's after it, two variables",
            "abc",
            FIRST_A_EVEN_C_TWO_VAR,
            FIRST_A_EVEN_C_CLAIMED,
        ),
        s(
            "last a then c*d, three variables",
            "abcd",
            LAST_A_THEN_D_THREE_VAR,
            LAST_A_THEN_D,
        ),
        s(
            "last a then c*d, two variables",
            "abcd",
            LAST_A_THEN_D_TWO_VAR,
            LAST_A_THEN_D,
        ),
        s(
            "last a then c*d, Sigma2 form",
            "abcd",
            LAST_A_THEN_D_SIGMA2,
            LAST_A_THEN_D,
        ),
        s("last a then c*d, Pi2 form", "abcd", LAST_A_THEN_D_PI2, LAST_A_THEN_D),
        s("(ab)* by order", "ab", AB_STAR_ORDER, "(ab)*"),
        s("(ab)* modular form", "ab", AB_STAR_MODULAR, "(ab)*"),
        s(
            "first a, even c's, modular quantifier outermost",
            "abc",
            FIRST_A_EVEN_C_MOD_OUTSIDE,
            FIRST_A_EVEN_C_CLAIMED,
        ),
    ]
}

/// Pairs of sentences claimed to define the same language.
pub fn equivalent_pairs() -> Vec<(&'static str, &'static str, &'static str, &'static str)> {
    vec![
        (
            "first a: three vs two variables",
            "abc",
            FIRST_A_EVEN_C_THREE_VAR,
            FIRST_A_EVEN_C_TWO_VAR,
        ),
        (
            "last a then c*d: three vs two variables",
            "abcd",
            LAST_A_THEN_D_THREE_VAR,
            LAST_A_THEN_D_TWO_VAR,
        ),
        (
            "last a then c*d: Sigma2 vs Pi2",
            "abcd",
            LAST_A_THEN_D_SIGMA2,
            LAST_A_THEN_D_PI2,
        ),
        (
            "last a then c*d: Sigma2 vs two variables",
            "abcd",
            LAST_A_THEN_D_SIGMA2,
            LAST_A_THEN_D_TWO_VAR,
        ),
        ("(ab)*: order vs modular", "ab", AB_STAR_ORDER, AB_STAR_MODULAR),
        (
            "first a: nested vs outermost modular quantifier",
            "abc",
            FIRST_A_EVEN_C_THREE_VAR,
            FIRST_A_EVEN_C_MOD_OUTSIDE,
        ),
    ]
}

/// `(regex, alphabet)` for the eight fixture languages.
pub const LANGUAGES: [(&str, &str); 8] = [
    ("(ab)*", "ab"),
    (SIGMA_AC_STAR_A, "abc"),
    (K_REGEX, "ab"),
    (LAST_A_THEN_D, "abcd"),
    (FIRST_A_EVEN_C, "abc"),
    ("!0a!0", "ab"),
    ("(b*ab*a)*b*", "ab"),
    ("a*b*", "ab"),
];

/// Sentences used for relativization: all of the above plus a few with free-standing modular counts.
pub fn fixture_sentences() -> Vec<(&'static str, &'static str)> {
    let mut v: Vec<(&str, &str)> = example_sentences().into_iter().map(|s| (s.alphabet, s.text)).collect();
    v.push(("ab", "E[1 mod 3] x. Qa x"));
    v.push(("ab", "A x. (Qa x -> E y. (x < y & Qb y))"));
    v
}
