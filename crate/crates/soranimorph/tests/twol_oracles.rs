//! Randomized semantic oracle for the two-level rule compiler: compiled
//! acceptance over all pair strings of bounded length must equal the direct
//! predicate evaluation, for each of the four operators.

use soranimorph::fst::Symbol;
use soranimorph::twol::{
    accepts_pair_string, compile_rule, rule_accepts_oracle, PairRegex, ReToken, RuleOp, RuleSet,
    TwoLevelRule,
};

struct Rng(u64);

impl Rng {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.0 = x;
        x.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }
    fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }
    fn chance(&mut self, percent: u64) -> bool {
        self.next() % 100 < percent
    }
}

fn alphabet() -> Vec<(Symbol, Symbol)> {
    vec![
        (Symbol::grapheme('a'), Symbol::grapheme('a')),
        (Symbol::grapheme('a'), Symbol::grapheme('b')),
        (Symbol::grapheme('b'), Symbol::grapheme('b')),
        (Symbol::grapheme('c'), Symbol::grapheme('c')),
    ]
}

fn random_leaf(rng: &mut Rng, alpha: &[(Symbol, Symbol)]) -> PairRegex {
    match rng.below(6) {
        0 | 1 => {
            let (l, r) = alpha[rng.below(alpha.len())].clone();
            PairRegex::Token(ReToken::Pair(l, r))
        }
        2 | 3 => {
            let (l, _) = alpha[rng.below(alpha.len())].clone();
            PairRegex::Token(ReToken::Lexical(l))
        }
        4 => PairRegex::Token(ReToken::Other),
        _ => PairRegex::Epsilon,
    }
}

fn random_regex(rng: &mut Rng, alpha: &[(Symbol, Symbol)], depth: usize) -> PairRegex {
    if depth == 0 {
        return random_leaf(rng, alpha);
    }
    match rng.below(8) {
        0 => PairRegex::Concat(vec![
            random_regex(rng, alpha, depth - 1),
            random_regex(rng, alpha, depth - 1),
        ]),
        1 => PairRegex::Union(vec![
            random_regex(rng, alpha, depth - 1),
            random_regex(rng, alpha, depth - 1),
        ]),
        2 => PairRegex::Star(Box::new(random_leaf(rng, alpha))),
        3 => PairRegex::Optional(Box::new(random_regex(rng, alpha, depth - 1))),
        4 => PairRegex::Plus(Box::new(random_leaf(rng, alpha))),
        _ => random_leaf(rng, alpha),
    }
}

fn all_words(n_pairs: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for p in 0..n_pairs {
                let mut w2 = w.clone();
                w2.push(p);
                next.push(w2);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn check_operator(op: RuleOp, seed: u64, cases: usize) {
    let alpha = alphabet();
    let words = all_words(alpha.len(), 6);
    let mut rng = Rng(seed);
    for case in 0..cases {
        let pair = alpha[rng.below(alpha.len())].clone();
        let n_ctx = 1 + rng.below(2);
        let mut contexts = Vec::new();
        for _ in 0..n_ctx {
            let left = if rng.chance(70) {
                random_regex(&mut rng, &alpha, 2)
            } else {
                PairRegex::Epsilon
            };
            let right = if rng.chance(70) {
                random_regex(&mut rng, &alpha, 2)
            } else {
                PairRegex::Epsilon
            };
            contexts.push((left, right));
        }
        let rule = TwoLevelRule {
            name: format!("case {case}"),
            pair,
            op,
            contexts,
            line: 0,
        };
        let rs = RuleSet { alphabet: alpha.clone(), sets: vec![], rules: vec![rule.clone()] };
        let compiled = compile_rule(&rule, &rs).expect("rule compiles");
        for w in &words {
            let pairs: Vec<(Symbol, Symbol)> = w.iter().map(|&p| alpha[p].clone()).collect();
            let got = accepts_pair_string(&compiled, &pairs);
            let want = rule_accepts_oracle(&rule, &rs, w).unwrap();
            assert_eq!(got, want, "operator {op:?} case {case} word {w:?}: rule {rule:?}");
        }
    }
}

#[test]
fn only_in_context_matches_oracle_on_200_random_rules() {
    check_operator(RuleOp::OnlyInContext, 0x0111, 200);
}

#[test]
fn always_in_context_matches_oracle_on_200_random_rules() {
    check_operator(RuleOp::AlwaysInContext, 0x0222, 200);
}

#[test]
fn both_directions_matches_oracle_on_200_random_rules() {
    check_operator(RuleOp::Both, 0x0333, 200);
}

#[test]
fn never_in_context_matches_oracle_on_200_random_rules() {
    check_operator(RuleOp::NeverInContext, 0x0444, 200);
}
