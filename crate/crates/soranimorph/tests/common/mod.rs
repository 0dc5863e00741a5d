//! Shared test fixtures: the bundled mini-grammar compiled once per test
//! binary, plus the brute-force oracle helpers. Each test binary uses a
//! subset of these.
#![allow(dead_code)]

pub mod oracles;

use std::sync::OnceLock;

use soranimorph::analyzer::AnalyzerHandle;
use soranimorph::grammar::{build_grammar_sources, compile_sources};
use soranimorph::ingest::{parse_stem_lexicon, parse_verb_db};
use soranimorph::script::deromanize;

pub const STEMS_TSV: &str = include_str!("../../data/stems.tsv");
pub const VERBS_TSV: &str = include_str!("../../data/verbs.tsv");
pub const GOLDEN_TSV: &str = include_str!("../../data/golden.tsv");

pub fn handle() -> &'static AnalyzerHandle {
    static HANDLE: OnceLock<AnalyzerHandle> = OnceLock::new();
    HANDLE.get_or_init(|| {
        let stems = parse_stem_lexicon(STEMS_TSV).expect("stems parse");
        let verbs = parse_verb_db(VERBS_TSV).expect("verbs parse");
        assert!(verbs.errors.is_empty(), "verb db diagnostics: {:?}", verbs.errors);
        let sources = build_grammar_sources(&stems, &verbs.entries);
        AnalyzerHandle::new(compile_sources(&sources).expect("grammar compiles"))
    })
}

/// Romanized fields convert to script; fields already in Arabic script are
/// used as-is.
pub fn to_script(field: &str) -> String {
    match deromanize(field) {
        Ok(s) => s,
        Err(_) => field.to_string(),
    }
}
