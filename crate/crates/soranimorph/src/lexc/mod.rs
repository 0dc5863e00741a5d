//! Compiler for the lexicon source format: `Multichar_Symbols` declarations
//! followed by named `LEXICON` blocks whose entries pair a lexical string
//! with a surface string and name a continuation class.
//!
//! The concrete syntax accepted here:
//!
//! ```text
//! ! comment runs to end of line
//! Multichar_Symbols
//!   [NOUN] {1SG} @U.Word.vi@ >K
//!
//! LEXICON Root
//!   word  Next ;        ! upper = lower = "word"
//!   {1SG}:م  # ;        ! upper/lower split on ':'
//!   Next ;              ! empty entry, pure continuation
//! ```
//!
//! `#` is the sole terminator. Strings tokenize greedily, longest match
//! first, over declared multichar symbols; bracketed tokens (`[..]`, `{..}`,
//! `@..@`) must be declared. `0` denotes the zero placeholder.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::fst::{Builder, Flag, StateId, SymId, Symbol, Transducer, ZERO};

#[derive(Debug, Error, PartialEq)]
pub enum LexcError {
    #[error("line {line}: entry continues to undeclared lexicon {name:?}")]
    UnknownContinuation { line: usize, name: String },
    #[error("line {line}: bracketed token {token:?} is not declared in Multichar_Symbols")]
    UndeclaredMultichar { line: usize, token: String },
    #[error("line {line}: duplicate LEXICON {name:?}")]
    DuplicateLexicon { line: usize, name: String },
    #[error("root lexicon {root:?} is missing or empty")]
    EmptyRoot { root: String },
    #[error("line {line}: malformed entry: {reason}")]
    MalformedEntry { line: usize, reason: String },
    #[error("line {line}: flags on the lower side must mirror the upper side")]
    MismatchedFlags { line: usize },
}

/// One lexicon entry. `lower` of `None` means lower = upper.
#[derive(Debug, Clone, PartialEq)]
pub struct LexEntry {
    pub upper: Vec<Symbol>,
    pub lower: Option<Vec<Symbol>>,
    pub continuation: String,
    pub gloss: Option<String>,
    pub line: usize,
}

/// Parsed lexicon source document.
#[derive(Debug, Clone, PartialEq)]
pub struct LexiconSource {
    pub multichar_symbols: Vec<Symbol>,
    /// Lexicons in declaration order.
    pub lexicons: Vec<(String, Vec<LexEntry>)>,
    pub root_name: String,
}

impl LexiconSource {
    pub fn lexicon(&self, name: &str) -> Option<&[LexEntry]> {
        self.lexicons
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, entries)| entries.as_slice())
    }

    /// Canonical text form; reparsing yields an identical AST.
    pub fn pretty_print(&self) -> String {
        let mut out = String::new();
        out.push_str("Multichar_Symbols\n");
        for sym in &self.multichar_symbols {
            out.push_str("  ");
            out.push_str(&sym.display_text());
            out.push('\n');
        }
        for (name, entries) in &self.lexicons {
            out.push_str("\nLEXICON ");
            out.push_str(name);
            out.push('\n');
            for e in entries {
                out.push_str("  ");
                let upper = join_symbols(&e.upper);
                match &e.lower {
                    None => {
                        if !e.upper.is_empty() {
                            out.push_str(&upper);
                            out.push(' ');
                        }
                    }
                    Some(lower) => {
                        out.push_str(&upper);
                        out.push(':');
                        out.push_str(&join_symbols(lower));
                        out.push(' ');
                    }
                }
                out.push_str(&e.continuation);
                out.push_str(" ;");
                if let Some(g) = &e.gloss {
                    out.push_str(" ! ");
                    out.push_str(g);
                }
                out.push('\n');
            }
        }
        out
    }
}

fn join_symbols(syms: &[Symbol]) -> String {
    let mut s = String::new();
    for sym in syms {
        s.push_str(&sym.display_text());
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

/// Greedy longest-match-first tokenizer over declared multichar symbols.
fn tokenize(text: &str, multichars: &[Symbol], line: usize) -> Result<Vec<Symbol>, LexcError> {
    // Longest declarations first so e.g. ">K" wins over ">".
    let mut decls: Vec<&Symbol> = multichars.iter().collect();
    decls.sort_by(|a, b| {
        b.display_text()
            .len()
            .cmp(&a.display_text().len())
            .then_with(|| a.display_text().cmp(&b.display_text()))
    });
    let mut out = Vec::new();
    let mut rest = text;
    'outer: while !rest.is_empty() {
        for d in &decls {
            let dt = d.display_text();
            if rest.starts_with(dt.as_str()) {
                out.push((*d).clone());
                rest = &rest[dt.len()..];
                continue 'outer;
            }
        }
        let c = rest.chars().next().unwrap();
        if c == '[' || c == '{' || c == '@' {
            let close = match c {
                '[' => ']',
                '{' => '}',
                _ => '@',
            };
            let end = rest[c.len_utf8()..]
                .find(close)
                .map(|i| i + c.len_utf8() + close.len_utf8());
            let token = match end {
                Some(e) => &rest[..e],
                None => rest,
            };
            return Err(LexcError::UndeclaredMultichar { line, token: token.to_string() });
        }
        if c == '0' {
            out.push(Symbol::Zero);
        } else {
            out.push(Symbol::grapheme(c));
        }
        rest = &rest[c.len_utf8()..];
    }
    Ok(out)
}

/// Parses a lexicon source document into its AST.
pub fn parse_lexicon_source(text: &str) -> Result<LexiconSource, LexcError> {
    let mut multichar_symbols: Vec<Symbol> = Vec::new();
    let mut lexicons: Vec<(String, Vec<LexEntry>)> = Vec::new();
    let mut current: Option<usize> = None;
    let mut in_multichar = false;

    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let (content, comment) = match raw_line.find('!') {
            Some(i) => {
                let c = raw_line[i + 1..].trim();
                (&raw_line[..i], if c.is_empty() { None } else { Some(c.to_string()) })
            }
            None => (raw_line, None),
        };
        let content = content.trim();
        if content.is_empty() {
            continue;
        }
        if content == "Multichar_Symbols" {
            in_multichar = true;
            current = None;
            continue;
        }
        if let Some(name) = content.strip_prefix("LEXICON ") {
            let name = name.trim().to_string();
            in_multichar = false;
            if lexicons.iter().any(|(n, _)| *n == name) {
                return Err(LexcError::DuplicateLexicon { line: line_no, name });
            }
            lexicons.push((name, Vec::new()));
            current = Some(lexicons.len() - 1);
            continue;
        }
        if in_multichar {
            for token in content.split_whitespace() {
                let sym = declare_symbol(token, line_no)?;
                if !multichar_symbols.contains(&sym) {
                    multichar_symbols.push(sym);
                }
            }
            continue;
        }
        let lex_idx = current.ok_or_else(|| LexcError::MalformedEntry {
            line: line_no,
            reason: "entry outside of any LEXICON block".to_string(),
        })?;
        let entry = parse_entry(content, comment, &multichar_symbols, line_no)?;
        lexicons[lex_idx].1.push(entry);
    }

    let src = LexiconSource { multichar_symbols, lexicons, root_name: "Root".to_string() };
    validate(&src)?;
    Ok(src)
}

fn declare_symbol(token: &str, line: usize) -> Result<Symbol, LexcError> {
    if token.starts_with('@') {
        let flag = Flag::parse(token).map_err(|_| LexcError::MalformedEntry {
            line,
            reason: format!("bad flag declaration {token:?}"),
        })?;
        return Ok(Symbol::Flag(flag));
    }
    Ok(Symbol::tag(token))
}

fn parse_entry(
    content: &str,
    comment: Option<String>,
    multichars: &[Symbol],
    line: usize,
) -> Result<LexEntry, LexcError> {
    let body = content.trim_end();
    let body = body.strip_suffix(';').ok_or_else(|| LexcError::MalformedEntry {
        line,
        reason: "entry must end with ';'".to_string(),
    })?;
    let fields: Vec<&str> = body.split_whitespace().collect();
    let (pair_field, continuation) = match fields.len() {
        1 => (None, fields[0].to_string()),
        2 => (Some(fields[0]), fields[1].to_string()),
        0 => {
            return Err(LexcError::MalformedEntry { line, reason: "empty entry".to_string() })
        }
        _ => {
            return Err(LexcError::MalformedEntry {
                line,
                reason: "too many fields; expected [upper[:lower]] continuation ;".to_string(),
            })
        }
    };
    let (upper, lower) = match pair_field {
        None => (Vec::new(), None),
        Some(field) => match split_pair(field) {
            (u, None) => (tokenize_pair_side(u, multichars, line)?, None),
            (u, Some(l)) => (
                tokenize_pair_side(u, multichars, line)?,
                Some(tokenize_pair_side(l, multichars, line)?),
            ),
        },
    };
    if let Some(lower_syms) = &lower {
        let fu: Vec<&Symbol> = upper.iter().filter(|s| s.is_flag()).collect();
        let fl: Vec<&Symbol> = lower_syms.iter().filter(|s| s.is_flag()).collect();
        if !fl.is_empty() && fu != fl {
            return Err(LexcError::MismatchedFlags { line });
        }
    }
    Ok(LexEntry { upper, lower, continuation, gloss: comment, line })
}

/// Splits `upper:lower` on the first ':' that is outside brackets.
fn split_pair(field: &str) -> (&str, Option<&str>) {
    let mut depth = 0usize;
    let mut in_flag = false;
    for (i, c) in field.char_indices() {
        match c {
            '[' | '{' => depth += 1,
            ']' | '}' => depth = depth.saturating_sub(1),
            '@' => in_flag = !in_flag,
            ':' if depth == 0 && !in_flag => {
                return (&field[..i], Some(&field[i + 1..]));
            }
            _ => {}
        }
    }
    (field, None)
}

fn tokenize_pair_side(
    text: &str,
    multichars: &[Symbol],
    line: usize,
) -> Result<Vec<Symbol>, LexcError> {
    let toks = tokenize(text, multichars, line)?;
    // A bare "0" denotes the empty side; drop standalone zeros.
    Ok(toks.into_iter().filter(|s| *s != Symbol::Zero).collect())
}

fn validate(src: &LexiconSource) -> Result<(), LexcError> {
    let root = src
        .lexicon(&src.root_name)
        .ok_or_else(|| LexcError::EmptyRoot { root: src.root_name.clone() })?;
    if root.is_empty() {
        return Err(LexcError::EmptyRoot { root: src.root_name.clone() });
    }
    for (_, entries) in &src.lexicons {
        for e in entries {
            if e.continuation != "#" && src.lexicon(&e.continuation).is_none() {
                return Err(LexcError::UnknownContinuation {
                    line: e.line,
                    name: e.continuation.clone(),
                });
            }
        }
    }
    Ok(())
}

/// Compiles the source into a transducer. The relation is every
/// concatenation of entry pairs along continuation chains from the root to
/// `#`. Unequal-length pairs are padded with zero on the shorter side,
/// aligned left to right; flags become two-sided symbols at their upper-side
/// positions.
pub fn compile_lexicon(src: &LexiconSource) -> Result<Transducer, LexcError> {
    validate(src)?;
    let mut b = Builder::new();
    let mut lexicon_state: BTreeMap<&str, StateId> = BTreeMap::new();
    for (name, _) in &src.lexicons {
        let s = b.add_state();
        lexicon_state.insert(name.as_str(), s);
    }
    let terminal = b.add_state();
    b.set_final(terminal);
    b.set_start(lexicon_state[src.root_name.as_str()]);

    for (name, entries) in &src.lexicons {
        let from = lexicon_state[name.as_str()];
        for e in entries {
            let to = if e.continuation == "#" {
                terminal
            } else {
                lexicon_state[e.continuation.as_str()]
            };
            let pairs = align_entry(e);
            let mut cur = from;
            if pairs.is_empty() {
                b.add_arc(cur, crate::fst::EPSILON, crate::fst::EPSILON, to);
                continue;
            }
            for (i, (u, l)) in pairs.iter().enumerate() {
                let next = if i + 1 == pairs.len() { to } else { b.add_state() };
                let ui = intern(&mut b, u);
                let li = intern(&mut b, l);
                b.add_arc(cur, ui, li, next);
                cur = next;
            }
        }
    }
    Ok(b.finish())
}

fn intern(b: &mut Builder, s: &Symbol) -> SymId {
    match s {
        Symbol::Zero => ZERO,
        other => b.sym(other.clone()),
    }
}

/// Left-to-right alignment with right-end zero padding on the shorter side.
/// Flags sit at their upper-side positions as two-sided symbols.
fn align_entry(e: &LexEntry) -> Vec<(Symbol, Symbol)> {
    let lower_src: Vec<Symbol> = match &e.lower {
        Some(l) => l.iter().filter(|s| !s.is_flag()).cloned().collect(),
        None => e.upper.iter().filter(|s| !s.is_flag()).cloned().collect(),
    };
    let mut pairs: Vec<(Symbol, Symbol)> = Vec::new();
    let mut lower_iter = lower_src.into_iter();
    for u in &e.upper {
        if u.is_flag() {
            pairs.push((u.clone(), u.clone()));
        } else {
            let l = lower_iter.next().unwrap_or(Symbol::Zero);
            pairs.push((u.clone(), l));
        }
    }
    for l in lower_iter {
        pairs.push((Symbol::Zero, l));
    }
    pairs
}

/// Counts root-to-`#` chains in the AST by direct graph walk, ignoring
/// flags. Used as the compilation oracle for acyclic sources. Returns
/// `None` when the continuation graph is cyclic.
pub fn ast_path_count(src: &LexiconSource) -> Option<u64> {
    fn count(
        src: &LexiconSource,
        name: &str,
        visiting: &mut Vec<String>,
        memo: &mut BTreeMap<String, u64>,
    ) -> Option<u64> {
        if let Some(&c) = memo.get(name) {
            return Some(c);
        }
        if visiting.iter().any(|v| v == name) {
            return None; // cycle
        }
        visiting.push(name.to_string());
        let mut total = 0u64;
        for e in src.lexicon(name)? {
            if e.continuation == "#" {
                total += 1;
            } else {
                total += count(src, &e.continuation, visiting, memo)?;
            }
        }
        visiting.pop();
        memo.insert(name.to_string(), total);
        Some(total)
    }
    let mut memo = BTreeMap::new();
    count(src, &src.root_name, &mut Vec::new(), &mut memo)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fst::{enumerate_paths, lookdown};

    #[test]
    fn one_entry_document_parses() {
        let src = parse_lexicon_source("LEXICON Root\n a # ;\n").unwrap();
        assert_eq!(src.lexicons.len(), 1);
        let e = &src.lexicon("Root").unwrap()[0];
        assert_eq!(e.upper, vec![Symbol::grapheme('a')]);
        assert_eq!(e.lower, None);
        assert_eq!(e.continuation, "#");
    }

    #[test]
    fn unknown_continuation_is_an_error_with_line() {
        let err = parse_lexicon_source("LEXICON Root\n x Foo ;\n").unwrap_err();
        assert_eq!(err, LexcError::UnknownContinuation { line: 2, name: "Foo".to_string() });
    }

    #[test]
    fn undeclared_bracketed_token_is_an_error() {
        let err = parse_lexicon_source("LEXICON Root\n x[NOUN] # ;\n").unwrap_err();
        assert!(matches!(err, LexcError::UndeclaredMultichar { line: 2, .. }));
    }

    #[test]
    fn duplicate_lexicon_is_an_error() {
        let err =
            parse_lexicon_source("LEXICON Root\n a # ;\nLEXICON Root\n b # ;\n").unwrap_err();
        assert!(matches!(err, LexcError::DuplicateLexicon { .. }));
    }

    #[test]
    fn missing_root_is_empty_root_error() {
        let err = parse_lexicon_source("LEXICON Stems\n a # ;\n").unwrap_err();
        assert!(matches!(err, LexcError::EmptyRoot { .. }));
    }

    #[test]
    fn single_entry_compiles_to_single_path() {
        let src = parse_lexicon_source("LEXICON Root\n ab # ;\n").unwrap();
        let t = compile_lexicon(&src).unwrap();
        let e = enumerate_paths(&t, 10);
        assert_eq!(e.pairs.len(), 1);
        assert_eq!(
            e.pairs[0],
            (
                vec![Symbol::grapheme('a'), Symbol::grapheme('b')],
                vec![Symbol::grapheme('a'), Symbol::grapheme('b')]
            )
        );
    }

    #[test]
    fn unequal_pair_pads_with_zero_on_the_right() {
        let src =
            parse_lexicon_source("Multichar_Symbols\n [N]\nLEXICON Root\n ab[N]:a # ;\n").unwrap();
        let t = compile_lexicon(&src).unwrap();
        let down =
            lookdown(&t, &[Symbol::grapheme('a'), Symbol::grapheme('b'), Symbol::tag("[N]")]);
        assert_eq!(down, vec![vec![Symbol::grapheme('a')]]);
    }

    #[test]
    fn pretty_print_round_trips() {
        let text = "Multichar_Symbols\n [NOUN] {1SG} @U.W.vi@\nLEXICON Root\n a[NOUN]:a Next ; ! stem\nLEXICON Next\n {1SG}:m # ;\n Next2 ;\nLEXICON Next2\n # ;\n";
        let src = parse_lexicon_source(text).unwrap();
        let printed = src.pretty_print();
        let reparsed = parse_lexicon_source(&printed).unwrap();
        // Identical modulo source positions: pretty-printing is a fixed point.
        assert_eq!(printed, reparsed.pretty_print());
    }

    #[test]
    fn ast_path_count_matches_enumeration_on_acyclic_source() {
        let text = "LEXICON Root\n a Mid ;\n b Mid ;\nLEXICON Mid\n x # ;\n y # ;\n # ;\n";
        let src = parse_lexicon_source(text).unwrap();
        let t = compile_lexicon(&src).unwrap();
        let e = enumerate_paths(&t, 1000);
        assert!(!e.truncated);
        assert_eq!(Some(e.pairs.len() as u64), ast_path_count(&src));
    }

    #[test]
    fn cyclic_continuations_are_permitted() {
        let text = "LEXICON Root\n a Root ;\n # ;\n";
        let src = parse_lexicon_source(text).unwrap();
        assert_eq!(ast_path_count(&src), None);
        let t = compile_lexicon(&src).unwrap();
        let e = enumerate_paths(&t, 5);
        assert!(e.truncated);
        assert_eq!(e.pairs.len(), 5);
    }
}
