//! Sorani Arabic-script alphabet, codepoint normalization and the
//! romanization debugging utility.
//!
//! The grammar is authored directly in the Arabic script; the Latin mapping
//! here is a display and test aid. Three letters are ambiguous in the
//! script: و covers /w u û/, ی covers /y î/, and the short vowel /i/ is
//! unwritten, so script-to-Latin conversion is one-to-many.

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ScriptError {
    #[error("unknown character {ch:?} at position {pos}")]
    UnknownCharacter { ch: char, pos: usize },
}

/// (latin, script) pairs; û is the وو digraph. /i/ is unwritten and ʔ is
/// the carrier ئ.
pub const LETTERS: &[(char, &str)] = &[
    ('a', "ا"),
    ('b', "ب"),
    ('c', "ج"),
    ('ç', "چ"),
    ('d', "د"),
    ('e', "ە"),
    ('ê', "ێ"),
    ('f', "ف"),
    ('g', "گ"),
    ('h', "ه"),
    ('ḥ', "ح"),
    ('î', "ی"),
    ('j', "ژ"),
    ('k', "ک"),
    ('l', "ل"),
    ('ł', "ڵ"),
    ('m', "م"),
    ('n', "ن"),
    ('o', "ۆ"),
    ('p', "پ"),
    ('q', "ق"),
    ('r', "ر"),
    ('ř', "ڕ"),
    ('s', "س"),
    ('ş', "ش"),
    ('t', "ت"),
    ('u', "و"),
    ('û', "وو"),
    ('v', "ڤ"),
    ('w', "و"),
    ('x', "خ"),
    ('ẍ', "غ"),
    ('y', "ی"),
    ('z', "ز"),
    ('ʿ', "ع"),
    ('ʔ', "ئ"),
];

pub const VOWELS: &[char] = &['a', 'e', 'ê', 'i', 'î', 'o', 'u', 'û'];

/// Every letter of the standard Sorani alphabet, in canonical order.
pub const SCRIPT_ALPHABET: &[char] = &[
    'ئ', 'ا', 'ب', 'پ', 'ت', 'ج', 'چ', 'ح', 'خ', 'د', 'ر', 'ڕ', 'ز', 'ژ', 'س', 'ش', 'ع',
    'غ', 'ف', 'ڤ', 'ق', 'ک', 'گ', 'ل', 'ڵ', 'م', 'ن', 'ه', 'ە', 'و', 'ۆ', 'ی', 'ێ',
];

/// Letters that never join to the following letter; a following standalone
/// و ('and') is frequently typed joined after these.
pub const NON_JOINING: &[char] = &['ا', 'د', 'ر', 'ڕ', 'ز', 'ژ', 'و', 'ۆ', 'ە', 'ئ'];

const NORMALIZATION_TABLE: &str = include_str!("../../data/normalization.tsv");

fn normalization_rules() -> Vec<(String, String)> {
    let mut rules: Vec<(String, String)> = Vec::new();
    for line in NORMALIZATION_TABLE.lines() {
        if line.starts_with('#') || line.is_empty() {
            continue;
        }
        let mut parts = line.splitn(2, '\t');
        let from = parts.next().unwrap_or("").to_string();
        let to = parts.next().unwrap_or("").to_string();
        if !from.is_empty() {
            rules.push((from, to));
        }
    }
    // Longest source first so digraph folds beat single-char folds.
    rules.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then_with(|| a.0.cmp(&b.0)));
    rules
}

/// Folds presentation-form variants onto the standard codepoint set and
/// strips joiners. Idempotent.
pub fn normalize(text: &str) -> String {
    let rules = normalization_rules();
    let mut out = String::with_capacity(text.len());
    let mut rest = text;
    'outer: while !rest.is_empty() {
        for (from, to) in &rules {
            if rest.starts_with(from.as_str()) {
                out.push_str(to);
                rest = &rest[from.len()..];
                continue 'outer;
            }
        }
        let c = rest.chars().next().unwrap();
        out.push(c);
        rest = &rest[c.len_utf8()..];
    }
    out
}

fn script_of(latin: char) -> Option<&'static str> {
    LETTERS.iter().find(|(l, _)| *l == latin).map(|(_, s)| *s)
}

/// Latin-to-script conversion, total over the Latin alphabet of this
/// toolkit plus digits and punctuation (passed through). The short vowel
/// /i/ is dropped; a word-initial vowel takes the ئ carrier.
pub fn deromanize(latin: &str) -> Result<String, ScriptError> {
    let mut out = String::new();
    let mut at_word_start = true;
    for (pos, c) in latin.chars().enumerate() {
        if c.is_whitespace() || c.is_ascii_digit() || c.is_ascii_punctuation() {
            out.push(c);
            at_word_start = true;
            continue;
        }
        if at_word_start && VOWELS.contains(&c) {
            out.push('ئ');
        }
        at_word_start = false;
        if c == 'i' {
            continue; // unwritten
        }
        match script_of(c) {
            Some(s) => out.push_str(s),
            None => return Err(ScriptError::UnknownCharacter { ch: c, pos }),
        }
    }
    Ok(out)
}

/// Result of script-to-Latin conversion.
#[derive(Debug, Clone, PartialEq)]
pub struct Romanization {
    /// Candidate readings, deterministic order, deduplicated.
    pub candidates: Vec<String>,
    /// More than one reading exists.
    pub ambiguous: bool,
    /// The candidate bound was hit; the set is incomplete.
    pub truncated: bool,
}

const ROMANIZE_BOUND: usize = 512;

fn is_consonant(c: char) -> bool {
    !VOWELS.contains(&c)
}

/// Script-to-Latin conversion. One-to-many where و/ی/unwritten-i are
/// ambiguous; the candidate set is bounded.
pub fn romanize(script: &str) -> Result<Romanization, ScriptError> {
    let chars: Vec<char> = script.chars().collect();
    let mut truncated = false;
    let base = expand(&chars, 0, &mut truncated)?;
    let mut candidates = insert_unwritten_i(base, &mut truncated);
    candidates.sort();
    candidates.dedup();
    Ok(Romanization { ambiguous: candidates.len() > 1, truncated, candidates })
}

/// Candidate expansion over letters, without the unwritten-i insertion.
fn expand(chars: &[char], at: usize, truncated: &mut bool) -> Result<Vec<String>, ScriptError> {
    if at >= chars.len() {
        return Ok(vec![String::new()]);
    }
    let c = chars[at];
    // (readings, consumed) branches for this position.
    let mut branches: Vec<(Vec<String>, usize)> = Vec::new();
    match c {
        'و' if at + 1 < chars.len() && chars[at + 1] == 'و' => {
            branches.push((vec!["û".to_string()], 2));
            branches.push((vec!["w".to_string(), "u".to_string(), "û".to_string()], 1));
        }
        'و' => branches.push((vec!["w".to_string(), "u".to_string(), "û".to_string()], 1)),
        'ی' => branches.push((vec!["y".to_string(), "î".to_string()], 1)),
        'ئ' => {
            if at == 0 {
                branches.push((vec![String::new(), "ʔ".to_string()], 1));
            } else {
                branches.push((vec!["ʔ".to_string()], 1));
            }
        }
        other if other.is_whitespace() || other.is_ascii_digit() || other.is_ascii_punctuation() => {
            branches.push((vec![other.to_string()], 1));
        }
        other => {
            let latin = LETTERS
                .iter()
                .find(|(l, s)| s.chars().count() == 1 && s.starts_with(other) && *l != 'u' && *l != 'w' && *l != 'y')
                .map(|(l, _)| *l)
                .ok_or(ScriptError::UnknownCharacter { ch: other, pos: at })?;
            branches.push((vec![latin.to_string()], 1));
        }
    }
    let mut out: Vec<String> = Vec::new();
    for (readings, consumed) in branches {
        let tails = expand(chars, at + consumed, truncated)?;
        for reading in &readings {
            for tail in &tails {
                out.push(format!("{reading}{tail}"));
                if out.len() > ROMANIZE_BOUND {
                    *truncated = true;
                    out.truncate(ROMANIZE_BOUND);
                    return Ok(out);
                }
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Optionally inserts the unwritten /i/ between adjacent consonants.
fn insert_unwritten_i(base: Vec<String>, truncated: &mut bool) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for cand in base {
        let chars: Vec<char> = cand.chars().collect();
        let slots: Vec<usize> = (1..chars.len())
            .filter(|&j| {
                chars[j - 1].is_alphabetic()
                    && chars[j].is_alphabetic()
                    && is_consonant(chars[j - 1])
                    && is_consonant(chars[j])
            })
            .collect();
        let combos = 1usize << slots.len().min(12);
        for mask in 0..combos {
            let mut s = String::new();
            for (j, &c) in chars.iter().enumerate() {
                if let Some(k) = slots.iter().position(|&sj| sj == j) {
                    if mask & (1 << k) != 0 {
                        s.push('i');
                    }
                }
                s.push(c);
            }
            out.push(s);
            if out.len() > ROMANIZE_BOUND {
                *truncated = true;
                return out;
            }
        }
    }
    out
}
