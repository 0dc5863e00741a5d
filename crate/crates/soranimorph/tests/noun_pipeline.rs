//! End-to-end checks of the noun pipeline: stems + networks + orthographic
//! rules composed into an analyzer, exercised over the stem-final classes
//! of the orthography grid.

use soranimorph::fst::{lookdown, lookup, Symbol, Transducer};
use soranimorph::grammar::{build_grammar_sources, compile_sources};
use soranimorph::ingest::parse_stem_lexicon;
use soranimorph::script::deromanize;

fn mini_grammar() -> Transducer {
    let stems_tsv = "surface\tcategory\tflags\tvariants\tgloss\n\
گول\tnoun\t-\t-\tflower\n\
کوڕ\tnoun\t-\t-\tson\n\
ماڵ\tnoun\t-\t-\thome\n\
پیاو\tnoun\t-\t-\tman\n\
مەی\tnoun\t-\t-\twine\n\
بەڕوو\tnoun\t-\t-\tacorn\n\
ماسی\tnoun\t-\t-\tfish\n\
ئاژاوە\tnoun\t-\t-\tchaos\n\
چیا\tnoun\t-\t-\tmountain\n\
درۆ\tnoun\t-\t-\tlie\n\
دێ\tnoun\t-\t-\tvillage\n\
گوێ\tnoun\t-\t-\tear\n";
    let stems = parse_stem_lexicon(stems_tsv).unwrap();
    let sources = build_grammar_sources(&stems, &[]);
    compile_sources(&sources).unwrap()
}

fn graphemes(script: &str) -> Vec<Symbol> {
    script.chars().map(Symbol::grapheme).collect()
}

fn lexical(lemma: &str, pos: &str, feats: &[&str]) -> Vec<Symbol> {
    let mut v = graphemes(&deromanize(lemma).unwrap());
    v.push(Symbol::tag(pos));
    for f in feats {
        v.push(Symbol::tag(f));
    }
    v
}

fn surface_of(t: &Transducer, lemma: &str, pos: &str, feats: &[&str]) -> Vec<String> {
    lookdown(t, &lexical(lemma, pos, feats))
        .into_iter()
        .map(|syms| syms.iter().map(|s| s.display_text()).collect::<String>())
        .collect()
}

#[test]
fn orthography_grid_matches_the_stem_final_classes() {
    let t = mini_grammar();
    // (stem, def, indef, plural, definite izafe, demonstrative, circumposition)
    let grid: &[(&str, &str, &str, &str, &str, &str, &str)] = &[
        ("pyaw", "pyaweke", "pyawêk", "pyawan", "pyawe", "pyawe", "pyawewe"),
        ("mey", "meyeke", "meyêk", "meyan", "meye", "meye", "meyewe"),
        ("beřû", "beřûeke", "beřûyek", "beřûan", "beřûe", "beřûe", "beřûewe"),
        ("masî", "masîyeke", "masîyek", "masîyan", "masîye", "masîye", "masîyewe"),
        ("ajawe", "ajaweke", "ajaweyek", "ajawean", "ajawe", "ajaweye", "ajawewe"),
        ("çya", "çyake", "çyayek", "çyayan", "çya", "çyaye", "çyawe"),
        ("diro", "diroke", "diroyek", "diroyan", "diro", "diroye", "dirowe"),
        ("dê", "dêke", "dêyek", "dêyan", "dê", "dêye", "dêwe"),
        ("gwê", "gwêyeke", "gwêyek", "gwêyan", "gwê", "gwêye", "gwêwe"),
    ];
    for (stem, def, indef, plur, iz, dem, circ) in grid {
        let cases = [
            (vec!["{Def}"], def),
            (vec!["{Indef}"], indef),
            (vec!["{Plur}"], plur),
            (vec!["{DefIzafe}"], iz),
            (vec!["{Dem}"], dem),
            (vec!["{Circ=ewe}"], circ),
        ];
        for (feats, want_rom) in cases {
            let got = surface_of(&t, stem, "[NOUN]", &feats);
            let want = deromanize(want_rom).unwrap();
            assert_eq!(
                got,
                vec![want.clone()],
                "{stem} + {feats:?}: wanted {want_rom} ({want})"
            );
        }
    }
}

#[test]
fn layered_suffixes_generate_and_analyze() {
    let t = mini_grammar();
    // kuř-ekan-îş-man-in 'they are also our sons'
    let got = surface_of(
        &t,
        "kuř",
        "[NOUN]",
        &["{Def}", "{Plur}", "{Clitic=îş}", "{Poss1P}", "{Cop3P}"],
    );
    let want = deromanize("kuřekanîşmanin").unwrap();
    assert_eq!(got, vec![want.clone()]);
    // Analysis direction recovers the same tags.
    let analyses = lookup(&t, &graphemes(&want));
    let rendered: Vec<String> = analyses
        .iter()
        .map(|syms| syms.iter().map(|s| s.display_text()).collect::<String>())
        .collect();
    let lemma = deromanize("kuř").unwrap();
    assert!(
        rendered.contains(&format!("{lemma}[NOUN]{{Def}}{{Plur}}{{Clitic=îş}}{{Poss1P}}{{Cop3P}}")),
        "analyses of {want}: {rendered:?}"
    );
}

#[test]
fn third_singular_swap_inserts_the_epenthetic_t() {
    let t = mini_grammar();
    // mał-î-e 'it is his home': the copula swaps in with -t-.
    let got = surface_of(&t, "mał", "[NOUN]", &["{Poss3S}", "{Cop3S}"]);
    assert_eq!(got, vec![deromanize("małyetî").unwrap()]);
    // mał-yan-e 'it is their home' stays plain.
    let got = surface_of(&t, "mał", "[NOUN]", &["{Poss3P}", "{Cop3S}"]);
    assert_eq!(got, vec![deromanize("małyane").unwrap()]);
}

#[test]
fn kurim_has_copula_possessive_and_argument_readings() {
    let t = mini_grammar();
    let word = deromanize("kuřim").unwrap();
    let analyses = lookup(&t, &graphemes(&word));
    let rendered: Vec<String> = analyses
        .iter()
        .map(|syms| syms.iter().map(|s| s.display_text()).collect::<String>())
        .collect();
    let lemma = deromanize("kuř").unwrap();
    for feats in ["{Cop1S}", "{Poss1S}", "{Arg1S}"] {
        assert!(
            rendered.contains(&format!("{lemma}[NOUN]{feats}")),
            "missing {feats} reading: {rendered:?}"
        );
    }
}

#[test]
fn unknown_word_has_no_analyses() {
    let t = mini_grammar();
    let word = deromanize("qqqq").unwrap();
    assert!(lookup(&t, &graphemes(&word)).is_empty());
}
