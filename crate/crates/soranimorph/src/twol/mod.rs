//! Two-level orthographic rule compiler.
//!
//! Source files have three sections:
//!
//! ```text
//! Alphabet
//!   ا ب گ >K:0 ە:0 0:ی ;
//! Sets
//!   Vow = ا ە ۆ ێ ;
//! Rules
//! "e of the definite suffix drops after a vowel"
//! ە:0 <=> Vow >K _ ;
//! ```
//!
//! A pair token is `lexical:surface` (`0` = the zero placeholder); a bare
//! token is an identity declaration in the alphabet and, inside a context
//! regex, matches every feasible pair with that lexical side. Multi-char
//! unbracketed tokens denote tag-class symbols (morpheme boundaries).
//! Context regexes use `[ ]` grouping, `( )` optionality, `|`, `*`, `+`,
//! set names, and `OTHER` (every feasible pair not explicitly mentioned in
//! the rule). Operators: `=>` (only in context), `<=` (always in context),
//! `<=>` (both), `/<=` (never in context).

pub mod lang;

use thiserror::Error;

use crate::fst::{self, Builder, Symbol, Transducer};
use lang::{complement, determinize, dfa_intersect, dfa_minimize, Dfa, Nfa, PairId};

#[derive(Debug, Error, PartialEq)]
pub enum TwolError {
    #[error("line {line}: pair {pair} is not in the feasible-pair alphabet")]
    InfeasiblePair { line: usize, pair: String },
    #[error("line {line}: unknown set {name:?}")]
    UnknownSet { line: usize, name: String },
    #[error("line {line}: malformed regex: {reason}")]
    MalformedRegex { line: usize, reason: String },
    #[error("line {line}: malformed rule: {reason}")]
    MalformedRule { line: usize, reason: String },
    #[error("rule {name:?} has too many contexts for compilation")]
    TooManyContexts { name: String },
}

/// Rule operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleOp {
    /// `=>` the pair occurs only in a listed context.
    OnlyInContext,
    /// `<=` in a listed context the lexical symbol must surface this way.
    AlwaysInContext,
    /// `<=>` both directions.
    Both,
    /// `/<=` the pair never occurs in the listed contexts.
    NeverInContext,
}

/// Context regular expression over feasible pairs.
#[derive(Debug, Clone, PartialEq)]
pub enum PairRegex {
    Epsilon,
    Token(ReToken),
    Concat(Vec<PairRegex>),
    Union(Vec<PairRegex>),
    Star(Box<PairRegex>),
    Plus(Box<PairRegex>),
    Optional(Box<PairRegex>),
}

#[derive(Debug, Clone, PartialEq)]
pub enum ReToken {
    /// Explicit `a:b`.
    Pair(Symbol, Symbol),
    /// Bare `a`: every feasible pair with lexical side `a`.
    Lexical(Symbol),
    /// Declared set name: lexical side in the set.
    Set(String),
    /// Every feasible pair not explicitly mentioned in the rule.
    Other,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TwoLevelRule {
    pub name: String,
    pub pair: (Symbol, Symbol),
    pub op: RuleOp,
    /// (left, right) context pairs; at least one.
    pub contexts: Vec<(PairRegex, PairRegex)>,
    pub line: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RuleSet {
    pub alphabet: Vec<(Symbol, Symbol)>,
    pub sets: Vec<(String, Vec<Symbol>)>,
    pub rules: Vec<TwoLevelRule>,
}

impl RuleSet {
    pub fn set(&self, name: &str) -> Option<&[Symbol]> {
        self.sets.iter().find(|(n, _)| n == name).map(|(_, m)| m.as_slice())
    }
}

// ---------------------------------------------------------------------------
// Tokenizer / parser
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Word(String),
    Quoted(String),
    LBracket,
    RBracket,
    LParen,
    RParen,
    Pipe,
    Star,
    Plus,
    Underscore,
    Semi,
}

fn tokenize(text: &str) -> Vec<(Tok, usize)> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = match raw.find('!') {
            Some(i) => &raw[..i],
            None => raw,
        };
        let mut chars = content.chars();
        let mut word = String::new();
        let flush = |word: &mut String, out: &mut Vec<(Tok, usize)>, line: usize| {
            if !word.is_empty() {
                out.push((Tok::Word(std::mem::take(word)), line));
            }
        };
        while let Some(c) = chars.next() {
            match c {
                c if c.is_whitespace() => flush(&mut word, &mut out, line),
                '"' => {
                    flush(&mut word, &mut out, line);
                    let mut name = String::new();
                    for q in chars.by_ref() {
                        if q == '"' {
                            break;
                        }
                        name.push(q);
                    }
                    out.push((Tok::Quoted(name), line));
                }
                '[' => {
                    flush(&mut word, &mut out, line);
                    out.push((Tok::LBracket, line));
                }
                ']' => {
                    flush(&mut word, &mut out, line);
                    out.push((Tok::RBracket, line));
                }
                '(' => {
                    flush(&mut word, &mut out, line);
                    out.push((Tok::LParen, line));
                }
                ')' => {
                    flush(&mut word, &mut out, line);
                    out.push((Tok::RParen, line));
                }
                '|' => {
                    flush(&mut word, &mut out, line);
                    out.push((Tok::Pipe, line));
                }
                '*' => {
                    flush(&mut word, &mut out, line);
                    out.push((Tok::Star, line));
                }
                '+' => {
                    flush(&mut word, &mut out, line);
                    out.push((Tok::Plus, line));
                }
                '_' => {
                    flush(&mut word, &mut out, line);
                    out.push((Tok::Underscore, line));
                }
                ';' => {
                    flush(&mut word, &mut out, line);
                    out.push((Tok::Semi, line));
                }
                other => word.push(other),
            }
        }
        flush(&mut word, &mut out, line);
    }
    out
}

/// Side-token convention: `0` is zero, one char is a grapheme, several
/// chars form a tag-class symbol (boundary marker).
fn side_symbol(token: &str) -> Symbol {
    if token == "0" {
        return Symbol::Zero;
    }
    let mut chars = token.chars();
    let first = chars.next().expect("nonempty side token");
    if chars.next().is_none() {
        Symbol::grapheme(first)
    } else {
        Symbol::Tag(token.to_string())
    }
}

fn parse_pair_word(word: &str) -> Option<(Symbol, Option<Symbol>)> {
    match word.find(':') {
        Some(i) => {
            let (l, r) = (&word[..i], &word[i + 1..]);
            if l.is_empty() || r.is_empty() {
                return None;
            }
            Some((side_symbol(l), Some(side_symbol(r))))
        }
        None => Some((side_symbol(word), None)),
    }
}

/// Parses a rule source document into its AST, validating feasibility.
pub fn parse_rules(text: &str) -> Result<RuleSet, TwolError> {
    let toks = tokenize(text);
    let mut pos = 0usize;
    let mut alphabet: Vec<(Symbol, Symbol)> = Vec::new();
    let mut sets: Vec<(String, Vec<Symbol>)> = Vec::new();
    let mut rules: Vec<TwoLevelRule> = Vec::new();

    fn word_at(toks: &[(Tok, usize)], pos: usize) -> Option<(&str, usize)> {
        match toks.get(pos) {
            Some((Tok::Word(w), line)) => Some((w.as_str(), *line)),
            _ => None,
        }
    }

    while pos < toks.len() {
        match word_at(&toks, pos) {
            Some(("Alphabet", _)) => {
                pos += 1;
                loop {
                    match toks.get(pos) {
                        Some((Tok::Word(w), line)) => {
                            if w == "Sets" || w == "Rules" {
                                break;
                            }
                            let (l, r) =
                                parse_pair_word(w).ok_or(TwolError::MalformedRule {
                                    line: *line,
                                    reason: format!("bad alphabet token {w:?}"),
                                })?;
                            let pair = match r {
                                Some(r) => (l, r),
                                None => (l.clone(), l),
                            };
                            if !alphabet.contains(&pair) {
                                alphabet.push(pair);
                            }
                            pos += 1;
                        }
                        Some((Tok::Semi, _)) => pos += 1,
                        _ => break,
                    }
                }
            }
            Some(("Sets", _)) => {
                pos += 1;
                while let Some((name, line)) = word_at(&toks, pos) {
                    if name == "Rules" || name == "Alphabet" {
                        break;
                    }
                    pos += 1;
                    match word_at(&toks, pos) {
                        Some(("=", _)) => pos += 1,
                        _ => {
                            return Err(TwolError::MalformedRule {
                                line,
                                reason: format!("set {name:?} must be declared with '='"),
                            })
                        }
                    }
                    let mut members = Vec::new();
                    loop {
                        match toks.get(pos) {
                            Some((Tok::Word(w), _)) => {
                                members.push(side_symbol(w));
                                pos += 1;
                            }
                            Some((Tok::Semi, _)) => {
                                pos += 1;
                                break;
                            }
                            _ => {
                                return Err(TwolError::MalformedRule {
                                    line,
                                    reason: format!("set {name:?} is not ';'-terminated"),
                                })
                            }
                        }
                    }
                    sets.push((name.to_string(), members));
                }
            }
            Some(("Rules", _)) => {
                pos += 1;
                while pos < toks.len() {
                    let (name, name_line) = match &toks[pos] {
                        (Tok::Quoted(q), line) => (q.clone(), *line),
                        (tok, line) => {
                            return Err(TwolError::MalformedRule {
                                line: *line,
                                reason: format!("expected quoted rule name, found {tok:?}"),
                            })
                        }
                    };
                    pos += 1;
                    let (pair_word, line) =
                        word_at(&toks, pos).ok_or(TwolError::MalformedRule {
                            line: name_line,
                            reason: "expected rule pair".to_string(),
                        })?;
                    let (l, r) = parse_pair_word(pair_word).ok_or(TwolError::MalformedRule {
                        line,
                        reason: format!("bad pair token {pair_word:?}"),
                    })?;
                    let pair = match r {
                        Some(r) => (l, r),
                        None => (l.clone(), l),
                    };
                    pos += 1;
                    let (op_word, op_line) =
                        word_at(&toks, pos).ok_or(TwolError::MalformedRule {
                            line,
                            reason: "expected rule operator".to_string(),
                        })?;
                    let op = match op_word {
                        "=>" => RuleOp::OnlyInContext,
                        "<=" => RuleOp::AlwaysInContext,
                        "<=>" => RuleOp::Both,
                        "/<=" => RuleOp::NeverInContext,
                        other => {
                            return Err(TwolError::MalformedRule {
                                line: op_line,
                                reason: format!("unknown operator {other:?}"),
                            })
                        }
                    };
                    pos += 1;
                    // Contexts: token runs separated by ';', ending before
                    // the next quoted rule name or EOF.
                    let mut contexts = Vec::new();
                    loop {
                        let ctx_start = pos;
                        let mut depth = 0usize;
                        let mut end = None;
                        for (i, (tok, _)) in toks.iter().enumerate().skip(ctx_start) {
                            match tok {
                                Tok::LBracket | Tok::LParen => depth += 1,
                                Tok::RBracket | Tok::RParen => depth = depth.saturating_sub(1),
                                Tok::Semi if depth == 0 => {
                                    end = Some(i);
                                    break;
                                }
                                Tok::Quoted(_) => break,
                                _ => {}
                            }
                        }
                        let end = match end {
                            Some(e) => e,
                            None => break,
                        };
                        let ctx_toks = &toks[ctx_start..end];
                        contexts.push(parse_context(ctx_toks, name_line)?);
                        pos = end + 1;
                        match toks.get(pos) {
                            Some((Tok::Quoted(_), _)) | None => break,
                            _ => {}
                        }
                    }
                    if contexts.is_empty() {
                        return Err(TwolError::MalformedRule {
                            line: name_line,
                            reason: "rule requires at least one context".to_string(),
                        });
                    }
                    rules.push(TwoLevelRule { name, pair, op, contexts, line: name_line });
                }
            }
            Some((other, line)) => {
                return Err(TwolError::MalformedRule {
                    line,
                    reason: format!("unexpected token {other:?} at top level"),
                })
            }
            None => {
                let line = toks[pos].1;
                return Err(TwolError::MalformedRule {
                    line,
                    reason: "unexpected punctuation at top level".to_string(),
                });
            }
        }
    }

    let rs = RuleSet { alphabet, sets, rules };
    validate_rules(&rs)?;
    Ok(rs)
}

fn parse_context(
    toks: &[(Tok, usize)],
    line: usize,
) -> Result<(PairRegex, PairRegex), TwolError> {
    let underscore = toks.iter().position(|(t, _)| *t == Tok::Underscore).ok_or(
        TwolError::MalformedRegex { line, reason: "context must contain '_'".to_string() },
    )?;
    if toks[underscore + 1..].iter().any(|(t, _)| *t == Tok::Underscore) {
        return Err(TwolError::MalformedRegex {
            line,
            reason: "context must contain exactly one '_'".to_string(),
        });
    }
    let left = parse_regex(&toks[..underscore], line)?;
    let right = parse_regex(&toks[underscore + 1..], line)?;
    Ok((left, right))
}

fn parse_regex(toks: &[(Tok, usize)], line: usize) -> Result<PairRegex, TwolError> {
    let mut pos = 0usize;
    let re = parse_union(toks, &mut pos, line)?;
    if pos != toks.len() {
        return Err(TwolError::MalformedRegex {
            line,
            reason: "trailing tokens in regex".to_string(),
        });
    }
    Ok(re)
}

fn parse_union(
    toks: &[(Tok, usize)],
    pos: &mut usize,
    line: usize,
) -> Result<PairRegex, TwolError> {
    let mut alts = vec![parse_concat(toks, pos, line)?];
    while matches!(toks.get(*pos), Some((Tok::Pipe, _))) {
        *pos += 1;
        alts.push(parse_concat(toks, pos, line)?);
    }
    Ok(if alts.len() == 1 { alts.pop().unwrap() } else { PairRegex::Union(alts) })
}

fn parse_concat(
    toks: &[(Tok, usize)],
    pos: &mut usize,
    line: usize,
) -> Result<PairRegex, TwolError> {
    let mut parts = Vec::new();
    while let Some((tok, _)) = toks.get(*pos) {
        match tok {
            Tok::Pipe | Tok::RBracket | Tok::RParen => break,
            _ => parts.push(parse_postfix(toks, pos, line)?),
        }
    }
    Ok(match parts.len() {
        0 => PairRegex::Epsilon,
        1 => parts.pop().unwrap(),
        _ => PairRegex::Concat(parts),
    })
}

fn parse_postfix(
    toks: &[(Tok, usize)],
    pos: &mut usize,
    line: usize,
) -> Result<PairRegex, TwolError> {
    let mut atom = parse_atom(toks, pos, line)?;
    loop {
        match toks.get(*pos) {
            Some((Tok::Star, _)) => {
                atom = PairRegex::Star(Box::new(atom));
                *pos += 1;
            }
            Some((Tok::Plus, _)) => {
                atom = PairRegex::Plus(Box::new(atom));
                *pos += 1;
            }
            _ => return Ok(atom),
        }
    }
}

fn parse_atom(
    toks: &[(Tok, usize)],
    pos: &mut usize,
    line: usize,
) -> Result<PairRegex, TwolError> {
    match toks.get(*pos) {
        Some((Tok::LBracket, _)) => {
            *pos += 1;
            let inner = parse_union(toks, pos, line)?;
            match toks.get(*pos) {
                Some((Tok::RBracket, _)) => {
                    *pos += 1;
                    Ok(inner)
                }
                _ => Err(TwolError::MalformedRegex { line, reason: "unclosed '['".to_string() }),
            }
        }
        Some((Tok::LParen, _)) => {
            *pos += 1;
            let inner = parse_union(toks, pos, line)?;
            match toks.get(*pos) {
                Some((Tok::RParen, _)) => {
                    *pos += 1;
                    Ok(PairRegex::Optional(Box::new(inner)))
                }
                _ => Err(TwolError::MalformedRegex { line, reason: "unclosed '('".to_string() }),
            }
        }
        Some((Tok::Word(w), _)) => {
            *pos += 1;
            if w == "OTHER" {
                return Ok(PairRegex::Token(ReToken::Other));
            }
            // Set names are plain ASCII identifiers of length > 1.
            if w.chars().count() > 1 && w.chars().all(|c| c.is_ascii_alphanumeric()) {
                return Ok(PairRegex::Token(ReToken::Set(w.clone())));
            }
            match parse_pair_word(w) {
                Some((l, Some(r))) => Ok(PairRegex::Token(ReToken::Pair(l, r))),
                Some((l, None)) => Ok(PairRegex::Token(ReToken::Lexical(l))),
                None => Err(TwolError::MalformedRegex {
                    line,
                    reason: format!("bad token {w:?}"),
                }),
            }
        }
        other => Err(TwolError::MalformedRegex {
            line,
            reason: format!("unexpected {other:?} in regex"),
        }),
    }
}

fn validate_rules(rs: &RuleSet) -> Result<(), TwolError> {
    for rule in &rs.rules {
        if !rs.alphabet.contains(&rule.pair) {
            return Err(TwolError::InfeasiblePair {
                line: rule.line,
                pair: format!("{}:{}", rule.pair.0.display_text(), rule.pair.1.display_text()),
            });
        }
        for (l, r) in &rule.contexts {
            validate_regex(rs, l, rule.line)?;
            validate_regex(rs, r, rule.line)?;
        }
    }
    Ok(())
}

fn validate_regex(rs: &RuleSet, re: &PairRegex, line: usize) -> Result<(), TwolError> {
    match re {
        PairRegex::Epsilon => Ok(()),
        PairRegex::Token(tok) => match tok {
            ReToken::Pair(l, r) => {
                if rs.alphabet.contains(&(l.clone(), r.clone())) {
                    Ok(())
                } else {
                    Err(TwolError::InfeasiblePair {
                        line,
                        pair: format!("{}:{}", l.display_text(), r.display_text()),
                    })
                }
            }
            ReToken::Lexical(l) => {
                if rs.alphabet.iter().any(|(al, _)| al == l) {
                    Ok(())
                } else {
                    Err(TwolError::InfeasiblePair {
                        line,
                        pair: format!("{}:?", l.display_text()),
                    })
                }
            }
            ReToken::Set(name) => {
                if rs.set(name).is_some() {
                    Ok(())
                } else {
                    Err(TwolError::UnknownSet { line, name: name.clone() })
                }
            }
            ReToken::Other => Ok(()),
        },
        PairRegex::Concat(parts) | PairRegex::Union(parts) => {
            parts.iter().try_for_each(|p| validate_regex(rs, p, line))
        }
        PairRegex::Star(p) | PairRegex::Plus(p) | PairRegex::Optional(p) => {
            validate_regex(rs, p, line)
        }
    }
}

// ---------------------------------------------------------------------------
// Compilation
// ---------------------------------------------------------------------------

/// Pairs explicitly mentioned by a rule (its own pair plus explicit context
/// pairs); OTHER expands to the alphabet minus these.
fn mentioned_pairs(rule: &TwoLevelRule) -> Vec<(Symbol, Symbol)> {
    let mut out = vec![rule.pair.clone()];
    fn walk(re: &PairRegex, out: &mut Vec<(Symbol, Symbol)>) {
        match re {
            PairRegex::Token(ReToken::Pair(l, r)) => {
                let p = (l.clone(), r.clone());
                if !out.contains(&p) {
                    out.push(p);
                }
            }
            PairRegex::Concat(ps) | PairRegex::Union(ps) => ps.iter().for_each(|p| walk(p, out)),
            PairRegex::Star(p) | PairRegex::Plus(p) | PairRegex::Optional(p) => walk(p, out),
            _ => {}
        }
    }
    for (l, r) in &rule.contexts {
        walk(l, &mut out);
        walk(r, &mut out);
    }
    out
}

fn token_pair_ids(
    tok: &ReToken,
    rs: &RuleSet,
    rule: &TwoLevelRule,
) -> Result<Vec<PairId>, TwolError> {
    let ids = |pred: &dyn Fn(&(Symbol, Symbol)) -> bool| -> Vec<PairId> {
        rs.alphabet
            .iter()
            .enumerate()
            .filter(|(_, p)| pred(p))
            .map(|(i, _)| i)
            .collect()
    };
    Ok(match tok {
        ReToken::Pair(l, r) => ids(&|p| p.0 == *l && p.1 == *r),
        ReToken::Lexical(l) => ids(&|p| p.0 == *l),
        ReToken::Set(name) => {
            let members = rs
                .set(name)
                .ok_or(TwolError::UnknownSet { line: rule.line, name: name.clone() })?;
            ids(&|p| members.contains(&p.0))
        }
        ReToken::Other => {
            let mentioned = mentioned_pairs(rule);
            ids(&|p| !mentioned.contains(p))
        }
    })
}

fn regex_to_nfa(re: &PairRegex, rs: &RuleSet, rule: &TwoLevelRule) -> Result<Nfa, TwolError> {
    Ok(match re {
        PairRegex::Epsilon => Nfa::empty_string(),
        PairRegex::Token(tok) => Nfa::symbols(&token_pair_ids(tok, rs, rule)?),
        PairRegex::Concat(parts) => {
            let mut acc = Nfa::empty_string();
            for p in parts {
                acc = acc.concat(&regex_to_nfa(p, rs, rule)?);
            }
            acc
        }
        PairRegex::Union(parts) => {
            let mut acc = Nfa::nothing();
            for p in parts {
                acc = acc.union(&regex_to_nfa(p, rs, rule)?);
            }
            acc
        }
        PairRegex::Star(p) => regex_to_nfa(p, rs, rule)?.star(),
        PairRegex::Plus(p) => regex_to_nfa(p, rs, rule)?.plus(),
        PairRegex::Optional(p) => regex_to_nfa(p, rs, rule)?.optional(),
    })
}

/// All feasible pairs with the rule's lexical side but a different surface.
fn competing_pair_ids(rule: &TwoLevelRule, rs: &RuleSet) -> Vec<PairId> {
    rs.alphabet
        .iter()
        .enumerate()
        .filter(|(_, (l, r))| *l == rule.pair.0 && *r != rule.pair.1)
        .map(|(i, _)| i)
        .collect()
}

/// Compiles one rule to a DFA over the feasible-pair alphabet.
fn compile_rule_dfa(rule: &TwoLevelRule, rs: &RuleSet) -> Result<Dfa, TwolError> {
    let n_pairs = rs.alphabet.len();
    let pair_id = rs.alphabet.iter().position(|p| *p == rule.pair).expect("validated");
    let sigma_star = Nfa::universe(n_pairs);

    let mut lefts: Vec<Nfa> = Vec::new();
    let mut rights: Vec<Nfa> = Vec::new();
    for (l, r) in &rule.contexts {
        lefts.push(sigma_star.concat(&regex_to_nfa(l, rs, rule)?));
        rights.push(regex_to_nfa(r, rs, rule)?.concat(&sigma_star));
    }
    let k = rule.contexts.len();
    if k > 10 {
        return Err(TwolError::TooManyContexts { name: rule.name.clone() });
    }

    let det = |n: &Nfa| determinize(n, n_pairs);
    let min = dfa_minimize;

    // `=>`: forbid an occurrence of the pair whose exact prefix-match set P
    // is not completed by any matching right context:
    //   Bad = union over P of [ X_P . pair . not(union_{i in P} R_i) ]
    //   X_P = (inter_{i in P} L_i) inter (inter_{i not in P} not L_i)
    let only_in_context = |lefts: &[Nfa], rights: &[Nfa]| -> Dfa {
        let mut bad: Option<Dfa> = None;
        for mask in 0..(1u32 << k) {
            let mut x: Option<Dfa> = None;
            for (i, l) in lefts.iter().enumerate() {
                let li = det(l);
                let piece = if mask & (1 << i) != 0 { li } else { complement(&li) };
                x = Some(match x {
                    None => piece,
                    Some(acc) => min(&dfa_intersect(&acc, &piece)),
                });
            }
            let x = x.unwrap_or_else(|| det(&sigma_star));
            let mut r_union = Nfa::nothing();
            for (i, r) in rights.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    r_union = r_union.union(r);
                }
            }
            let not_r = complement(&det(&r_union));
            let piece = dfa_to_nfa(&x)
                .concat(&Nfa::symbols(&[pair_id]))
                .concat(&dfa_to_nfa(&not_r));
            let piece = min(&det(&piece));
            bad = Some(match bad {
                None => piece,
                Some(acc) => min(&det(&dfa_to_nfa(&acc).union(&dfa_to_nfa(&piece)))),
            });
        }
        min(&complement(&bad.expect("at least the empty mask")))
    };

    // `<=`: in each context, a competing realization of the lexical side is
    // forbidden: inter_i not( L_i . competing . R_i ).
    let always_in_context = |lefts: &[Nfa], rights: &[Nfa]| -> Dfa {
        let competing = competing_pair_ids(rule, rs);
        let mut acc: Option<Dfa> = None;
        for (l, r) in lefts.iter().zip(rights.iter()) {
            let bad = l.concat(&Nfa::symbols(&competing)).concat(r);
            let piece = min(&complement(&det(&bad)));
            acc = Some(match acc {
                None => piece,
                Some(a) => min(&dfa_intersect(&a, &piece)),
            });
        }
        acc.expect("at least one context")
    };

    // `/<=`: the pair itself is forbidden in each context.
    let never_in_context = |lefts: &[Nfa], rights: &[Nfa]| -> Dfa {
        let mut acc: Option<Dfa> = None;
        for (l, r) in lefts.iter().zip(rights.iter()) {
            let bad = l.concat(&Nfa::symbols(&[pair_id])).concat(r);
            let piece = min(&complement(&det(&bad)));
            acc = Some(match acc {
                None => piece,
                Some(a) => min(&dfa_intersect(&a, &piece)),
            });
        }
        acc.expect("at least one context")
    };

    let dfa = match rule.op {
        RuleOp::OnlyInContext => only_in_context(&lefts, &rights),
        RuleOp::AlwaysInContext => always_in_context(&lefts, &rights),
        RuleOp::Both => {
            let a = only_in_context(&lefts, &rights);
            let b = always_in_context(&lefts, &rights);
            min(&dfa_intersect(&a, &b))
        }
        RuleOp::NeverInContext => never_in_context(&lefts, &rights),
    };
    Ok(dfa_minimize(&dfa))
}

fn dfa_to_nfa(d: &Dfa) -> Nfa {
    let mut edges = Vec::new();
    for (s, row) in d.trans.iter().enumerate() {
        for (p, tgt) in row.iter().enumerate() {
            if let Some(t) = tgt {
                edges.push((s, Some(p), *t));
            }
        }
    }
    Nfa { n_states: d.finals.len(), start: d.start, finals: d.finals.clone(), edges }
}

fn dfa_to_transducer(d: &Dfa, alphabet: &[(Symbol, Symbol)]) -> Transducer {
    let d = dfa_minimize(d);
    let mut b = Builder::new();
    let states: Vec<_> = (0..d.finals.len()).map(|_| b.add_state()).collect();
    b.set_start(states[d.start]);
    for (s, row) in d.trans.iter().enumerate() {
        if d.finals[s] {
            b.set_final(states[s]);
        }
        for (p, tgt) in row.iter().enumerate() {
            if let Some(t) = tgt {
                let (l, r) = &alphabet[p];
                let li = b.sym(l.clone());
                let ri = b.sym(r.clone());
                b.add_arc(states[s], li, ri, states[*t]);
            }
        }
    }
    b.finish()
}

/// Compiles a single rule to a pair-symbol automaton accepting exactly the
/// pair strings satisfying the rule.
pub fn compile_rule(rule: &TwoLevelRule, rs: &RuleSet) -> Result<Transducer, TwolError> {
    let dfa = compile_rule_dfa(rule, rs)?;
    Ok(dfa_to_transducer(&dfa, &rs.alphabet))
}

/// Names of a conflicting subset when the grammar blocks every nonempty
/// string.
#[derive(Debug, Clone, PartialEq)]
pub struct RuleConflict {
    pub rule_names: Vec<String>,
}

#[derive(Debug)]
pub struct CompiledRuleGrammar {
    pub fst: Transducer,
    /// Present when the intersection admits no nonempty pair string:
    /// a minimal conflicting rule subset found by greedy removal.
    pub conflict: Option<RuleConflict>,
}

/// Intersects all rule automata with the feasible-pair universal language.
pub fn compile_rule_grammar(rs: &RuleSet) -> Result<CompiledRuleGrammar, TwolError> {
    let n_pairs = rs.alphabet.len();
    let universal = determinize(&Nfa::universe(n_pairs), n_pairs);
    let mut dfas = Vec::new();
    for rule in &rs.rules {
        dfas.push(compile_rule_dfa(rule, rs)?);
    }
    let intersect_all = |keep: &[bool]| -> Dfa {
        let mut acc = universal.clone();
        for (i, d) in dfas.iter().enumerate() {
            if keep[i] {
                acc = dfa_minimize(&dfa_intersect(&acc, d));
            }
        }
        acc
    };
    let all = vec![true; dfas.len()];
    let grammar = intersect_all(&all);
    let conflict = if !dfas.is_empty() && grammar.at_most_epsilon() {
        let mut keep = all.clone();
        for i in 0..dfas.len() {
            keep[i] = false;
            if !intersect_all(&keep).at_most_epsilon() {
                keep[i] = true;
            }
        }
        Some(RuleConflict {
            rule_names: rs
                .rules
                .iter()
                .zip(keep.iter())
                .filter(|(_, &k)| k)
                .map(|(r, _)| r.name.clone())
                .collect(),
        })
    } else {
        None
    };
    Ok(CompiledRuleGrammar { fst: dfa_to_transducer(&grammar, &rs.alphabet), conflict })
}

/// Composes the lexicon's pair language with the rule constraints and strips
/// zero from both tapes of the final analyzer transducer.
pub fn apply_rules(lexicon: &Transducer, rules: &Transducer) -> Transducer {
    let composed = fst::compose(lexicon, rules);
    fst::minimize(&fst::strip_zero(&composed))
}

// ---------------------------------------------------------------------------
// Reference semantics (the brute-force oracle)
// ---------------------------------------------------------------------------

/// Direct predicate evaluation of a rule over a pair string, built on plain
/// NFA simulation; independent of the subset/complement/product pipeline.
pub fn rule_accepts_oracle(
    rule: &TwoLevelRule,
    rs: &RuleSet,
    word: &[PairId],
) -> Result<bool, TwolError> {
    let n_pairs = rs.alphabet.len();
    let sigma_star = Nfa::universe(n_pairs);
    let pair_id = rs.alphabet.iter().position(|p| *p == rule.pair).expect("validated");
    let mut lefts = Vec::new();
    let mut rights = Vec::new();
    for (l, r) in &rule.contexts {
        lefts.push(sigma_star.concat(&regex_to_nfa(l, rs, rule)?));
        rights.push(regex_to_nfa(r, rs, rule)?.concat(&sigma_star));
    }
    let competing = competing_pair_ids(rule, rs);
    let in_context =
        |i: usize, k: usize| lefts[i].accepts(&word[..k]) && rights[i].accepts(&word[k + 1..]);
    let any_context = |k: usize| (0..lefts.len()).any(|i| in_context(i, k));
    let ok = match rule.op {
        RuleOp::OnlyInContext => {
            (0..word.len()).filter(|&k| word[k] == pair_id).all(any_context)
        }
        RuleOp::AlwaysInContext => {
            (0..word.len()).all(|k| !(competing.contains(&word[k]) && any_context(k)))
        }
        RuleOp::Both => {
            (0..word.len()).filter(|&k| word[k] == pair_id).all(any_context)
                && (0..word.len()).all(|k| !(competing.contains(&word[k]) && any_context(k)))
        }
        RuleOp::NeverInContext => {
            (0..word.len()).all(|k| !(word[k] == pair_id && any_context(k)))
        }
    };
    Ok(ok)
}

/// Nondeterministic acceptance of an explicit pair string by a pair-symbol
/// automaton; used by tests comparing compiled machines to the oracle.
pub fn accepts_pair_string(t: &Transducer, pairs: &[(Symbol, Symbol)]) -> bool {
    let mut states = vec![t.start()];
    for (l, r) in pairs {
        let mut next = Vec::new();
        for &s in &states {
            for arc in t.arcs_from(s) {
                if t.table().get(arc.input) == l && t.table().get(arc.output) == r {
                    next.push(arc.target);
                }
            }
        }
        next.sort();
        next.dedup();
        states = next;
        if states.is_empty() {
            return false;
        }
    }
    states.iter().any(|&s| t.is_final(s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fst::lookdown;

    #[test]
    fn empty_rules_section_gives_zero_rules() {
        let rs = parse_rules("Alphabet\n a b ;\nRules\n").unwrap();
        assert!(rs.rules.is_empty());
        assert_eq!(rs.alphabet.len(), 2);
    }

    #[test]
    fn infeasible_pair_is_rejected() {
        let err = parse_rules("Alphabet\n a ;\nRules\n\"x\"\nq:z => a _ ;\n").unwrap_err();
        assert!(matches!(err, TwolError::InfeasiblePair { .. }));
    }

    #[test]
    fn unknown_set_is_rejected() {
        let err =
            parse_rules("Alphabet\n a a:b ;\nRules\n\"x\"\na:b => Vow _ ;\n").unwrap_err();
        assert!(matches!(err, TwolError::UnknownSet { .. }));
    }

    #[test]
    fn empty_context_both_operator_forces_the_change() {
        let rs = parse_rules("Alphabet\n a a:b ;\nRules\n\"force\"\na:b <=> _ ;\n").unwrap();
        let t = compile_rule(&rs.rules[0], &rs).unwrap();
        let a = Symbol::grapheme('a');
        let b = Symbol::grapheme('b');
        let down = lookdown(&t, &[a.clone()]);
        assert_eq!(down, vec![vec![b]]);
    }

    #[test]
    fn zero_rules_grammar_is_universal_feasible_language() {
        let rs = parse_rules("Alphabet\n a a:b ;\nRules\n").unwrap();
        let g = compile_rule_grammar(&rs).unwrap();
        assert!(g.conflict.is_none());
        let a = Symbol::grapheme('a');
        let down = lookdown(&g.fst, &[a.clone(), a.clone()]);
        assert_eq!(down.len(), 4);
    }

    #[test]
    fn single_rule_grammar_equals_that_rule() {
        let src = "Alphabet\n a a:b c ;\nRules\n\"only after c\"\na:b => c _ ;\n";
        let rs = parse_rules(src).unwrap();
        let single = compile_rule(&rs.rules[0], &rs).unwrap();
        let grammar = compile_rule_grammar(&rs).unwrap().fst;
        let n = rs.alphabet.len();
        let mut words: Vec<Vec<PairId>> = vec![vec![]];
        let mut layer: Vec<Vec<PairId>> = vec![vec![]];
        for _ in 0..4 {
            let mut next = Vec::new();
            for w in &layer {
                for p in 0..n {
                    let mut w2 = w.clone();
                    w2.push(p);
                    next.push(w2);
                }
            }
            words.extend(next.iter().cloned());
            layer = next;
        }
        for w in words {
            let pairs: Vec<(Symbol, Symbol)> =
                w.iter().map(|&p| rs.alphabet[p].clone()).collect();
            assert_eq!(
                accepts_pair_string(&single, &pairs),
                accepts_pair_string(&grammar, &pairs),
                "{w:?}"
            );
        }
    }

    #[test]
    fn conflicting_rules_are_diagnosed() {
        let src =
            "Alphabet\n a a:b ;\nRules\n\"force b\"\na:b <= _ ;\n\"forbid b\"\na:b /<= _ ;\n";
        let rs = parse_rules(src).unwrap();
        let g = compile_rule_grammar(&rs).unwrap();
        let c = g.conflict.expect("conflict detected");
        assert_eq!(c.rule_names, vec!["force b".to_string(), "forbid b".to_string()]);
    }

    #[test]
    fn rule_order_independence_canonical_bytes() {
        let src1 =
            "Alphabet\n a b a:b b:a ;\nRules\n\"r1\"\na:b => b _ ;\n\"r2\"\nb:a => a _ ;\n";
        let src2 =
            "Alphabet\n a b a:b b:a ;\nRules\n\"r2\"\nb:a => a _ ;\n\"r1\"\na:b => b _ ;\n";
        let g1 = compile_rule_grammar(&parse_rules(src1).unwrap()).unwrap().fst;
        let g2 = compile_rule_grammar(&parse_rules(src2).unwrap()).unwrap().fst;
        assert_eq!(crate::fst::to_bytes(&g1, 1), crate::fst::to_bytes(&g2, 1));
    }

    #[test]
    fn identity_lexicon_with_zero_rules_composes_to_identity() {
        let rs = parse_rules("Alphabet\n a b ;\nRules\n").unwrap();
        let rules = compile_rule_grammar(&rs).unwrap().fst;
        let lexicon = Transducer::identity(&[Symbol::grapheme('a'), Symbol::grapheme('b')]);
        let analyzer = apply_rules(&lexicon, &rules);
        let w = [Symbol::grapheme('a'), Symbol::grapheme('b'), Symbol::grapheme('a')];
        assert_eq!(lookdown(&analyzer, &w), vec![w.to_vec()]);
    }
}
