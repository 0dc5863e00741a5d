//! Analyzer runtime: loads a compiled grammar and exposes analyze/generate
//! over words, producing structured [`Analysis`] records.
//!
//! Handles are immutable and shareable; analyze and generate are reentrant.

use std::path::Path;

use thiserror::Error;

use crate::fst::{self, lookup_paths, Symbol, Transducer};
use crate::script;
use crate::tags;

#[derive(Debug, Error)]
pub enum AnalyzerError {
    #[error(transparent)]
    Io(#[from] fst::IoError),
    #[error("unknown tag {tag:?}")]
    UnknownTag { tag: String },
    #[error("file error: {0}")]
    File(#[from] std::io::Error),
}

/// One morphological reading of a surface token.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Analysis {
    /// Lemma in Sorani script.
    pub lemma: String,
    /// Part-of-speech tag, `[..]` form.
    pub pos: String,
    /// Feature tags in schema order, `{..}` form. NonStd is carried by
    /// `standard` instead.
    pub features: Vec<String>,
    /// False iff the path passed through a non-standard variant.
    pub standard: bool,
    /// (morph, gloss) segmentation recovered from the path, when available.
    pub segmentation: Option<Vec<(String, String)>>,
}

impl Analysis {
    pub fn new(lemma: &str, pos: &str, features: &[&str]) -> Analysis {
        Analysis {
            lemma: lemma.to_string(),
            pos: pos.to_string(),
            features: features.iter().map(|f| f.to_string()).collect(),
            standard: true,
            segmentation: None,
        }
    }

    pub fn nonstandard(lemma: &str, pos: &str, features: &[&str]) -> Analysis {
        Analysis { standard: false, ..Analysis::new(lemma, pos, features) }
    }

    /// Tab-separated line: `surface lemma pos feat;feat std|nonstd`.
    pub fn to_line(&self, surface: &str) -> String {
        format!(
            "{surface}\t{}\t{}\t{}\t{}",
            self.lemma,
            self.pos,
            self.features.join(";"),
            if self.standard { "std" } else { "nonstd" }
        )
    }

    /// JSON-lines record with the same fields.
    pub fn to_json(&self, surface: &str) -> String {
        let feats: Vec<String> = self.features.iter().map(|f| json_str(f)).collect();
        format!(
            "{{\"surface\":{},\"lemma\":{},\"pos\":{},\"features\":[{}],\"standard\":{}}}",
            json_str(surface),
            json_str(&self.lemma),
            json_str(&self.pos),
            feats.join(","),
            self.standard
        )
    }

    /// Parses the four analysis columns of [`Analysis::to_line`].
    pub fn from_columns(lemma: &str, pos: &str, features: &str, standard: &str) -> Analysis {
        Analysis {
            lemma: lemma.to_string(),
            pos: pos.to_string(),
            features: features
                .split(';')
                .filter(|f| !f.is_empty())
                .map(|f| f.to_string())
                .collect(),
            standard: standard != "nonstd",
            segmentation: None,
        }
    }

    /// Equality for evaluation purposes: segmentation is advisory.
    pub fn matches(&self, other: &Analysis) -> bool {
        self.lemma == other.lemma
            && self.pos == other.pos
            && self.features == other.features
            && self.standard == other.standard
    }
}

fn json_str(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            '\r' => out.push_str("\\r"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

/// Immutable compiled-grammar handle.
#[derive(Debug)]
pub struct AnalyzerHandle {
    fst: Transducer,
    schema_version: u32,
}

impl AnalyzerHandle {
    pub fn new(fst: Transducer) -> AnalyzerHandle {
        AnalyzerHandle { fst, schema_version: tags::SCHEMA_VERSION }
    }

    pub fn fst(&self) -> &Transducer {
        &self.fst
    }

    pub fn schema_version(&self) -> u32 {
        self.schema_version
    }

    /// Loads a binary grammar, checking magic, version and checksum.
    pub fn load(path: &Path) -> Result<AnalyzerHandle, AnalyzerError> {
        let data = std::fs::read(path)?;
        let (fst, schema_version) = fst::from_bytes(&data, tags::SCHEMA_VERSION)?;
        Ok(AnalyzerHandle { fst, schema_version })
    }

    pub fn save(&self, path: &Path) -> Result<(), AnalyzerError> {
        std::fs::write(path, fst::to_bytes(&self.fst, self.schema_version))?;
        Ok(())
    }

    /// All flag-valid analyses of a pre-trimmed token, deduplicated,
    /// standard readings first, then lexicographic.
    pub fn analyze(&self, word: &str) -> Vec<Analysis> {
        let normalized = script::normalize(word);
        let symbols: Vec<Symbol> = normalized.chars().map(Symbol::grapheme).collect();
        let mut out: Vec<Analysis> = Vec::new();
        for path in lookup_paths(&self.fst, &symbols) {
            if let Some(a) = analysis_from_path(&path) {
                if !out.iter().any(|x| x.matches(&a)) {
                    out.push(a);
                }
            }
        }
        out.sort_by(|a, b| {
            b.standard
                .cmp(&a.standard)
                .then_with(|| a.lemma.cmp(&b.lemma))
                .then_with(|| a.pos.cmp(&b.pos))
                .then_with(|| a.features.cmp(&b.features))
        });
        out
    }

    /// All surface forms realizing an analysis. Non-standard surfaces are
    /// produced only when the analysis itself is marked non-standard.
    ///
    /// Composes a linear automaton of the lexical string with the grammar
    /// and enumerates the (small) result; flag filtering happens during
    /// enumeration, after composition has pruned the lexical mismatches.
    pub fn generate(&self, analysis: &Analysis) -> Result<Vec<String>, AnalyzerError> {
        let lexical = self.lexical_of(analysis)?;
        let pairs: Vec<(Symbol, Symbol)> =
            lexical.iter().map(|s| (s.clone(), s.clone())).collect();
        let linear = Transducer::linear(&pairs);
        let composed = fst::compose(&linear, &self.fst);
        let mut out: Vec<String> = fst::lookdown(&composed, &lexical)
            .into_iter()
            .map(|syms| syms.iter().map(|s| s.display_text()).collect::<String>())
            .collect();
        out.sort();
        out.dedup();
        Ok(out)
    }

    fn lexical_of(&self, analysis: &Analysis) -> Result<Vec<Symbol>, AnalyzerError> {
        if !tags::is_pos(&analysis.pos) {
            return Err(AnalyzerError::UnknownTag { tag: analysis.pos.clone() });
        }
        let mut feats = analysis.features.clone();
        for f in &feats {
            if !tags::is_feature(f) {
                return Err(AnalyzerError::UnknownTag { tag: f.clone() });
            }
        }
        tags::sort_features(&mut feats);
        let mut symbols: Vec<Symbol> = analysis.lemma.chars().map(Symbol::grapheme).collect();
        symbols.push(Symbol::tag(&analysis.pos));
        for f in &feats {
            symbols.push(Symbol::tag(f));
        }
        if !analysis.standard {
            symbols.push(Symbol::tag("{NonStd}"));
        }
        Ok(symbols)
    }
}

/// Builds an [`Analysis`] from a full path label sequence: graphemes on the
/// lexical side form the lemma, the bracket tag is the part of speech,
/// brace tags are features; surface chunks between tag emissions become the
/// segmentation.
fn analysis_from_path(path: &[(Symbol, Symbol)]) -> Option<Analysis> {
    let mut lemma = String::new();
    let mut pos: Option<String> = None;
    let mut features: Vec<String> = Vec::new();
    let mut standard = true;
    let mut segments: Vec<(String, String)> = Vec::new();
    let mut chunk = String::new();
    let mut gloss = String::new();

    for (lex, surf) in path {
        match lex {
            Symbol::Grapheme(g) => lemma.push_str(g),
            Symbol::Tag(t) if t.starts_with('[') => {
                if !chunk.is_empty() || !gloss.is_empty() {
                    segments.push((std::mem::take(&mut chunk), std::mem::take(&mut gloss)));
                }
                gloss = t.clone();
                pos = Some(t.clone());
            }
            Symbol::Tag(t) if t.starts_with('{') => {
                if !chunk.is_empty() {
                    segments.push((std::mem::take(&mut chunk), std::mem::take(&mut gloss)));
                }
                if t == "{NonStd}" {
                    standard = false;
                } else {
                    if !gloss.is_empty() {
                        gloss.push(' ');
                    }
                    gloss.push_str(t);
                    features.push(t.clone());
                }
            }
            _ => {}
        }
        if let Symbol::Grapheme(g) = surf {
            chunk.push_str(g);
        }
    }
    if !chunk.is_empty() || !gloss.is_empty() {
        segments.push((chunk, gloss));
    }
    let pos = pos?;
    tags::sort_features(&mut features);
    Some(Analysis { lemma, pos, features, standard, segmentation: Some(segments) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_format_round_trips() {
        let a = Analysis::new("گول", "[NOUN]", &["{Def}", "{Plur}"]);
        let line = a.to_line("گولەکان");
        assert_eq!(line, "گولەکان\tگول\t[NOUN]\t{Def};{Plur}\tstd");
        let cols: Vec<&str> = line.split('\t').collect();
        let b = Analysis::from_columns(cols[1], cols[2], cols[3], cols[4]);
        assert!(a.matches(&b));
    }

    #[test]
    fn json_escapes_quotes() {
        let a = Analysis::new("x\"y", "[NOUN]", &[]);
        let j = a.to_json("w");
        assert!(j.contains("x\\\"y"));
        assert!(j.contains("\"standard\":true"));
    }
}
