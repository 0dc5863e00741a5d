//! Cross-cutting grammar invariants: rule transparency away from morpheme
//! junctures, tag-inventory closure, and the ergativity gate.

mod common;

use soranimorph::analyzer::Analysis;
use soranimorph::fst::{enumerate_paths, lookdown, Symbol};
use soranimorph::grammar::build_rule_file;
use soranimorph::script::SCRIPT_ALPHABET;
use soranimorph::tags;
use soranimorph::twol::{compile_rule_grammar, parse_rules};

/// No rule fires without a boundary trigger: pair strings of plain identity
/// letters always pass the compiled rule grammar.
#[test]
fn rule_grammar_is_transparent_for_plain_letter_strings() {
    let rs = parse_rules(&build_rule_file()).unwrap();
    let grammar = compile_rule_grammar(&rs).unwrap();
    assert!(grammar.conflict.is_none());
    // A few representative letter strings, including the rule-sensitive
    // vowels, as identity pair strings.
    for word in ["گول", "ماسی", "ئاژاوە", "پیاو", "بەڕوو", "دێ", "کەوت", "هەیە"] {
        let symbols: Vec<Symbol> = word.chars().map(Symbol::grapheme).collect();
        let down = lookdown(&grammar.fst, &symbols);
        assert!(
            down.iter().any(|out| {
                out.iter().map(|s| s.display_text()).collect::<String>() == *word
            }),
            "identity pair string for {word} blocked by the rule grammar"
        );
    }
    // And exhaustively over two-letter identity strings.
    for a in SCRIPT_ALPHABET {
        for b in SCRIPT_ALPHABET {
            let symbols = vec![Symbol::grapheme(*a), Symbol::grapheme(*b)];
            let down = lookdown(&grammar.fst, &symbols);
            let word: String = symbols.iter().map(|s| s.display_text()).collect();
            assert!(
                down.iter().any(|out| {
                    out.iter().map(|s| s.display_text()).collect::<String>() == word
                }),
                "identity pair string {word} blocked"
            );
        }
    }
}

/// Every tag emitted by any grammar path belongs to the closed inventory,
/// and features always come out in schema order.
#[test]
fn emitted_tags_stay_inside_the_closed_inventory() {
    let h = common::handle();
    let e = enumerate_paths(h.fst(), 30_000);
    let mut seen_tags = std::collections::BTreeSet::new();
    for (lex, _) in &e.pairs {
        let mut last_index = None;
        for sym in lex {
            if let Symbol::Tag(t) = sym {
                seen_tags.insert(t.clone());
                if t.starts_with('[') {
                    assert!(tags::is_pos(t), "pos tag {t} outside the inventory");
                } else {
                    assert!(tags::is_feature(t), "feature tag {t} outside the inventory");
                    let idx = tags::feature_index(t).unwrap();
                    if let Some(prev) = last_index {
                        assert!(
                            idx >= prev,
                            "feature {t} out of schema order on a path: {lex:?}"
                        );
                    }
                    last_index = Some(idx);
                }
            }
        }
    }
    assert!(seen_tags.len() > 30, "suspiciously few tags seen: {seen_tags:?}");
}

/// Ergativity gate: past transitive verbs take the clitic set as subject
/// and the suffix set as object; the reverse assignment has no realization.
#[test]
fn ergativity_gate_separates_the_pronoun_sets() {
    let h = common::handle();
    // Past transitive with clitic subject and suffix object: fine.
    assert!(
        !h.generate(&Analysis::new(
            "خستن",
            "[VERB]",
            &["{Imperf}", "{Ind}", "{Pos}", "{Subj1P}", "{Obj3S}"],
        ))
        .unwrap()
        .is_empty()
    );
    // Past intransitive with a pronominal clitic: no realization.
    let kewtman = common::to_script("kewtman");
    assert!(h.analyze(&kewtman).is_empty(), "clitic subject on an intransitive past");
    let demankewt = common::to_script("demankewt");
    assert!(h.analyze(&demankewt).is_empty(), "hosted clitic on an intransitive past");
    // Present transitive keeps the suffix as subject: the clitic cannot
    // mark the subject outside the ergative past (wîstin excepted).
    let surfaces = h
        .generate(&Analysis::new(
            "ناسین",
            "[VERB]",
            &["{Pres}", "{Ind}", "{Pos}", "{Subj1P}", "{Obj3P}"],
        ))
        .unwrap();
    assert!(
        surfaces.contains(&common::to_script("deyannasîn")),
        "present transitive subject suffix missing: {surfaces:?}"
    );
}

/// The opening example of the analysis/generation framing: dengim.
#[test]
fn dengim_analyzes_to_the_possessive_reading() {
    let h = common::handle();
    let word = common::to_script("dengim");
    let analyses = h.analyze(&word);
    let want = Analysis::new(&common::to_script("deng"), "[NOUN]", &["{Poss1S}"]);
    assert!(analyses.iter().any(|a| a.matches(&want)), "{analyses:?}");
    assert!(h.generate(&want).unwrap().contains(&word));
}

/// Presentation-form input (heh + zero-width non-joiner) folds onto the
/// standard codepoints before analysis.
#[test]
fn analysis_normalizes_presentation_variants() {
    let h = common::handle();
    let zwnj_spelling = "کوڕه\u{200C}کانیشمانن";
    let analyses = h.analyze(zwnj_spelling);
    assert!(
        analyses.iter().any(|a| a.features
            == vec!["{Def}", "{Plur}", "{Clitic=îş}", "{Poss1P}", "{Cop3P}"]),
        "{analyses:?}"
    );
}

/// Loading a saved grammar and compiling it in memory give the same
/// analyses, and handles are shareable across threads.
#[test]
fn loaded_grammar_matches_the_in_memory_compile() {
    fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<soranimorph::analyzer::AnalyzerHandle>();

    let h = common::handle();
    let dir = std::env::temp_dir().join(format!("soranimorph-load-eq-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("grammar.bin");
    h.save(&path).unwrap();
    let loaded = soranimorph::analyzer::AnalyzerHandle::load(&path).unwrap();
    for line in common::GOLDEN_TSV.lines().filter(|l| !l.starts_with('#') && !l.is_empty()) {
        let surface = common::to_script(line.split('\t').next().unwrap());
        assert_eq!(h.analyze(&surface), loaded.analyze(&surface), "{surface}");
    }
}
