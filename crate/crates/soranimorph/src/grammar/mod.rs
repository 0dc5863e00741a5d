//! The Central Kurdish grammar: network builders that emit lexicon and
//! rule sources, stem-section generation from the ingested lexicon, and the
//! compilation pipeline producing the analyzer transducer.

pub mod adjective;
pub mod closed;
pub mod noun;
pub mod pronoun;
pub mod rules;
pub mod stems;
pub mod verb;
pub mod vocab;

use thiserror::Error;

use crate::fst::Transducer;
use crate::ingest::{StemEntry, VerbEntry};
use crate::lexc;
use crate::twol;
use vocab::Frag;

pub use rules::build_rule_file;
pub use stems::emit_stem_fragments;

#[derive(Debug, Error)]
pub enum GrammarError {
    #[error("lexicon source error: {0}")]
    Lexc(#[from] lexc::LexcError),
    #[error("rule source error: {0}")]
    Twol(#[from] twol::TwolError),
    #[error("conflicting orthographic rules: {0:?}")]
    RuleConflict(Vec<String>),
    #[error("manifest error: {0}")]
    Manifest(String),
}

/// Assembled grammar sources: one lexicon document and one rule document.
#[derive(Debug, Clone)]
pub struct GrammarSources {
    pub lexc: String,
    pub twol: String,
}

/// Builds the complete grammar sources from the ingested lexicon.
pub fn build_grammar_sources(stem_entries: &[StemEntry], verbs: &[VerbEntry]) -> GrammarSources {
    let mut f = Frag::new();

    // Root: every word class starts here. The joined-preposition spelling
    // extension prefixes بە or لە directly at the root.
    f.bridge("Root", stems::STEM_LEXICON);
    f.entry("Root", "@P.JP.yes@@P.NS.yes@", Some("لە"), stems::STEM_LEXICON);
    f.entry("Root", "@P.JP.yes@@P.NS.yes@", Some("بە"), stems::STEM_LEXICON);
    if !verbs.is_empty() {
        f.bridge("Root", verb::VERB_FINITE);
        f.bridge("Root", verb::VERB_NOMINAL);
    }

    f.merge(emit_stem_fragments(stem_entries));
    f.merge(noun::build_noun_network());
    f.merge(adjective::build_adjective_network());
    f.merge(pronoun::build_pronoun_network());
    f.merge(closed::build_closed_network());
    if !verbs.is_empty() {
        f.merge(verb::build_verb_networks(verbs));
    } else {
        // The adjective network references the nominal tag chain.
        nominal_tag_chain(&mut f);
    }

    GrammarSources { lexc: f.render(), twol: build_rule_file() }
}

/// Tag chain for derived nominals (infinitives, participles, agents),
/// shared between the verb module and the adjective compounds.
pub(crate) fn nominal_tag_chain(f: &mut Frag) {
    if f.has_lexicon("NomTags") {
        return;
    }
    f.entry("NomTags", "@R.Cm.cmp@{Cmp}", Some("0"), "NomTags2");
    f.entry("NomTags", "@R.Cm.sup@{Sup}", Some("0"), "NomTags2");
    f.entry("NomTags", "@D.Cm@", None, "NomTags2");
    f.entry("NomTags2", "@R.Ng.yes@{Neg}", Some("0"), "NomTags3");
    f.entry("NomTags2", "@D.Ng.yes@", None, "NomTags3");
    for (id, _) in vocab::PREVERBS {
        f.entry("NomTags3", &format!("@R.Pv.{id}@{{Preverb={id}}}"), Some("0"), "NomTags4");
    }
    f.entry("NomTags3", "@D.Pv@", None, "NomTags4");
    f.entry("NomTags4", "@R.PV.ewe@{Postverb=ewe}", Some("0"), "NomTags5");
    f.entry("NomTags4", "@D.PV@", None, "NomTags5");
    f.entry("NomTags5", "@R.Ps.yes@{Pass}", Some("0"), "NomTags6");
    f.entry("NomTags5", "@D.Ps.yes@", None, "NomTags6");
    f.entry("NomTags6", "@R.Cs.yes@{Caus}", Some("0"), "NomTags7");
    f.entry("NomTags6", "@D.Cs.yes@", None, "NomTags7");
    f.entry("NomTags7", "@R.Nom.inf@{Inf}", Some("0"), "TagJW");
    f.entry("NomTags7", "@R.Nom.pp@{PastPart}", Some("0"), "TagJW");
    f.entry("NomTags7", "@R.Nom.ag@{Agent}", Some("0"), "TagJW");
}

/// Compiles assembled sources into the final analyzer transducer.
pub fn compile_sources(sources: &GrammarSources) -> Result<Transducer, GrammarError> {
    let lex_src = lexc::parse_lexicon_source(&sources.lexc)?;
    let lexicon = lexc::compile_lexicon(&lex_src)?;
    let rule_set = twol::parse_rules(&sources.twol)?;
    let compiled = twol::compile_rule_grammar(&rule_set)?;
    if let Some(conflict) = compiled.conflict {
        return Err(GrammarError::RuleConflict(conflict.rule_names));
    }
    Ok(twol::apply_rules(&lexicon, &compiled.fst))
}

/// Grammar manifest: plain structured text naming the sources.
#[derive(Debug, Clone, PartialEq)]
pub struct GrammarManifest {
    pub schema_version: u32,
    pub stems: Option<String>,
    pub verbs: Option<String>,
}

impl GrammarManifest {
    /// Parses `key = value` lines; `#` comments.
    pub fn parse(text: &str) -> Result<GrammarManifest, GrammarError> {
        let mut schema_version = None;
        let mut stems = None;
        let mut verbs = None;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                GrammarError::Manifest(format!("line {}: expected key = value", i + 1))
            })?;
            match key.trim() {
                "schema_version" => {
                    schema_version = Some(value.trim().parse::<u32>().map_err(|_| {
                        GrammarError::Manifest(format!("line {}: bad schema_version", i + 1))
                    })?)
                }
                "stems" => stems = Some(value.trim().to_string()),
                "verbs" => verbs = Some(value.trim().to_string()),
                other => {
                    return Err(GrammarError::Manifest(format!(
                        "line {}: unknown key {other:?}",
                        i + 1
                    )))
                }
            }
        }
        let schema_version = schema_version
            .ok_or_else(|| GrammarError::Manifest("missing schema_version".to_string()))?;
        if schema_version != crate::tags::SCHEMA_VERSION {
            return Err(GrammarError::Manifest(format!(
                "manifest schema_version {schema_version} does not match toolkit schema {}",
                crate::tags::SCHEMA_VERSION
            )));
        }
        Ok(GrammarManifest { schema_version, stems, verbs })
    }
}
