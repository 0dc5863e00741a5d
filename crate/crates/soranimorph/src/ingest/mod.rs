//! Stem-lexicon and verb-database ingestion.
//!
//! Both files are tab-delimited UTF-8 with a fixed header row. `stems.tsv`
//! holds non-verb stems; `verbs.tsv` holds verb lemmas (simple and
//! compound) with their stems and valence data. Multi-stem cells are
//! `|`-separated. Causative and passive stems marked `AUTO` are derived
//! here; explicit stems always win.

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum IngestError {
    #[error("line {line}: missing column {column:?}")]
    MissingColumn { line: usize, column: &'static str },
    #[error("header is missing column {column:?}")]
    MissingHeader { column: &'static str },
    #[error("line {line}: unknown category {category:?}")]
    UnknownCategory { line: usize, category: String },
    #[error("line {line}: duplicate stem ({surface:?}, {category:?})")]
    DuplicateStem { line: usize, surface: String, category: String },
}

/// A per-row verb-database diagnostic; parsing continues past these.
#[derive(Debug, Clone, PartialEq)]
pub struct RowDiagnostic {
    pub line: usize,
    pub message: String,
}

// ---------------------------------------------------------------------------
// Stem lexicon
// ---------------------------------------------------------------------------

/// Non-verb stem categories. Verbal categories (intransitive, transitive,
/// onomatopoeic, compound) live in the verb database.
pub const STEM_CATEGORIES: &[&str] = &[
    "noun",
    "unit",
    "title",
    "noun_def",
    "propn_per",
    "propn_loc",
    "propn_org",
    "propn_date",
    "propn_eth",
    "propn_dem",
    "propn_lang",
    "propn_misc",
    "adj",
    "adj_nograd",
    "adj_indecl",
    "adj_hav",
    "adj_exc",
    "adv",
    "num",
    "pron_pers",
    "pron_dem",
    "pron_spec",
    "prep_indecl",
    "prep_arg",
    "prep_noarg",
    "prep_izafe",
    "prep_da",
    "prep_da_ewe",
    "prep_ewe",
    "intj",
    "conj_sub",
    "conj_coord",
    "contr",
    "part",
    "letter",
    "abbrev",
];

#[derive(Debug, Clone, PartialEq)]
pub struct StemEntry {
    pub surface: String,
    pub category: String,
    /// Category-specific flags, e.g. `nograd`, `pow10`, `title=pre`,
    /// `kind=refl`, `final=dem`.
    pub flags: Vec<String>,
    /// Non-standard alternate spellings.
    pub variants: Vec<String>,
    pub gloss: Option<String>,
    pub line: usize,
}

impl StemEntry {
    pub fn flag(&self, name: &str) -> bool {
        self.flags.iter().any(|f| f == name)
    }

    pub fn flag_value(&self, name: &str) -> Option<&str> {
        self.flags.iter().find_map(|f| {
            f.strip_prefix(name).and_then(|rest| rest.strip_prefix('='))
        })
    }
}

fn header_index(
    header: &str,
    wanted: &'static [&'static str],
) -> Result<Vec<usize>, IngestError> {
    let cols: Vec<&str> = header.split('\t').collect();
    wanted
        .iter()
        .map(|w| {
            cols.iter()
                .position(|c| c.trim() == *w)
                .ok_or(IngestError::MissingHeader { column: w })
        })
        .collect()
}

/// Parses `stems.tsv`: columns surface, category, flags, variants, gloss.
pub fn parse_stem_lexicon(text: &str) -> Result<Vec<StemEntry>, IngestError> {
    let mut lines = text.lines().enumerate();
    let header = loop {
        match lines.next() {
            Some((_, l)) if l.trim().is_empty() || l.starts_with('#') => continue,
            Some((_, l)) => break l,
            None => return Ok(Vec::new()),
        }
    };
    let idx = header_index(header, &["surface", "category", "flags", "variants", "gloss"])?;
    let mut out: Vec<StemEntry> = Vec::new();
    for (i, line) in lines {
        let line_no = i + 1;
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let cols: Vec<&str> = line.split('\t').collect();
        let get = |k: usize, name: &'static str| -> Result<&str, IngestError> {
            cols.get(idx[k])
                .map(|c| c.trim())
                .ok_or(IngestError::MissingColumn { line: line_no, column: name })
        };
        let surface = get(0, "surface")?.to_string();
        let category = get(1, "category")?.to_string();
        if !STEM_CATEGORIES.contains(&category.as_str()) {
            return Err(IngestError::UnknownCategory { line: line_no, category });
        }
        let flags: Vec<String> = split_list(get(2, "flags")?);
        let variants: Vec<String> = split_list(get(3, "variants")?);
        let gloss = match get(4, "gloss")? {
            "" => None,
            g => Some(g.to_string()),
        };
        if out.iter().any(|e| e.surface == surface && e.category == category) {
            return Err(IngestError::DuplicateStem { line: line_no, surface, category });
        }
        out.push(StemEntry { surface, category, flags, variants, gloss, line: line_no });
    }
    Ok(out)
}

fn split_list(cell: &str) -> Vec<String> {
    cell.split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty() && s != "-")
        .collect()
}

// ---------------------------------------------------------------------------
// Verb database
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Transitivity {
    Vi,
    Vt,
    Onomatopoeic,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StemSpec {
    Auto,
    None,
    Explicit(Vec<String>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PersonRestriction {
    Any,
    ThirdOnly,
    None,
}

/// One verb-database row. `nonverbal` marks a compound lemma.
#[derive(Debug, Clone, PartialEq)]
pub struct VerbEntry {
    pub lemma: String,
    pub nonverbal: Option<String>,
    pub past_stems: Vec<String>,
    pub present_stems: Vec<String>,
    pub passive_stem: StemSpec,
    pub causative_stem: StemSpec,
    pub transitivity: Transitivity,
    /// Transitivity of the whole compound when it differs from the verbal
    /// part (e.g. incorporated compounds are intransitive).
    pub compound_transitivity: Option<Transitivity>,
    /// Allowed preverbs, romanized ids out of heł/da/řa/der/řo/wer/ser.
    pub preverbs: Vec<String>,
    pub bare_allowed: bool,
    pub requires_ewe: bool,
    pub postverb_e: bool,
    pub object_person: PersonRestriction,
    pub subject_person: PersonRestriction,
    /// Irregular paradigm key (hatin, wistin, hebun, helstan, helhatin, cho).
    pub special: Option<String>,
    pub note: Option<String>,
    pub line: usize,
}

#[derive(Debug)]
pub struct VerbDbParse {
    pub entries: Vec<VerbEntry>,
    pub errors: Vec<RowDiagnostic>,
}

const VERB_COLUMNS: &[&str] = &[
    "lemma",
    "nonverbal",
    "past",
    "present",
    "passive",
    "causative",
    "trans",
    "ctrans",
    "preverbs",
    "bare",
    "ewe",
    "pv_e",
    "obj",
    "subj",
    "special",
    "note",
];

/// Parses `verbs.tsv` with per-row diagnostics; rows with errors are
/// skipped, the rest load.
pub fn parse_verb_db(text: &str) -> Result<VerbDbParse, IngestError> {
    let mut lines = text.lines().enumerate();
    let header = loop {
        match lines.next() {
            Some((_, l)) if l.trim().is_empty() || l.starts_with('#') => continue,
            Some((_, l)) => break l,
            None => return Ok(VerbDbParse { entries: Vec::new(), errors: Vec::new() }),
        }
    };
    let idx = header_index(header, VERB_COLUMNS)?;
    let mut entries = Vec::new();
    let mut errors = Vec::new();
    for (i, line) in lines {
        let line_no = i + 1;
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let cols: Vec<&str> = line.split('\t').collect();
        match parse_verb_row(&cols, &idx, line_no) {
            Ok(entry) => entries.push(entry),
            Err(msg) => errors.push(RowDiagnostic { line: line_no, message: msg }),
        }
    }
    Ok(VerbDbParse { entries, errors })
}

fn parse_verb_row(cols: &[&str], idx: &[usize], line: usize) -> Result<VerbEntry, String> {
    let get = |k: usize| -> &str { cols.get(idx[k]).map(|c| c.trim()).unwrap_or("") };
    let lemma = get(0).to_string();
    if lemma.is_empty() {
        return Err("empty lemma".to_string());
    }
    let nonverbal = match get(1) {
        "" | "-" => None,
        nv => Some(nv.to_string()),
    };
    let past_stems: Vec<String> = split_stems(get(2));
    let present_stems: Vec<String> = split_stems(get(3));
    if past_stems.is_empty() {
        return Err(format!("verb {lemma}: past stems must be nonempty"));
    }
    if present_stems.is_empty() {
        return Err(format!("verb {lemma}: present stems must be nonempty"));
    }
    let passive_stem = parse_stem_spec(get(4));
    let causative_stem = parse_stem_spec(get(5));
    let transitivity = match get(6) {
        "vi" => Transitivity::Vi,
        "vt" => Transitivity::Vt,
        "ono" => Transitivity::Onomatopoeic,
        other => return Err(format!("verb {lemma}: bad transitivity {other:?}")),
    };
    let compound_transitivity = match get(7) {
        "" | "-" => None,
        "vi" => Some(Transitivity::Vi),
        "vt" => Some(Transitivity::Vt),
        other => return Err(format!("verb {lemma}: bad compound transitivity {other:?}")),
    };
    let preverbs = split_list(get(8));
    for p in &preverbs {
        if !["heł", "da", "řa", "der", "řo", "wer", "ser"].contains(&p.as_str()) {
            return Err(format!("verb {lemma}: unknown preverb {p:?}"));
        }
    }
    let bare_allowed = parse_bool(get(9), true)?;
    let requires_ewe = parse_bool(get(10), false)?;
    let postverb_e = parse_bool(get(11), false)?;
    let object_person = parse_person(get(12))?;
    let subject_person = parse_person(get(13))?;
    let special = match get(14) {
        "" | "-" => None,
        s => Some(s.to_string()),
    };
    let note = match get(15) {
        "" | "-" => None,
        s => Some(s.to_string()),
    };

    // Invariants from the database contract.
    match transitivity {
        Transitivity::Vi => {
            if !matches!(passive_stem, StemSpec::None) {
                return Err(format!("verb {lemma}: intransitive verbs take no passive stem"));
            }
        }
        Transitivity::Vt => {
            if matches!(passive_stem, StemSpec::None) && note.is_none() {
                return Err(format!(
                    "verb {lemma}: transitive verbs need a passive stem (or a note)"
                ));
            }
        }
        Transitivity::Onomatopoeic => {
            if !matches!(passive_stem, StemSpec::None)
                || !matches!(causative_stem, StemSpec::None)
                || !preverbs.is_empty()
            {
                return Err(format!(
                    "verb {lemma}: onomatopoeic verbs take no passive, causative or preverbs"
                ));
            }
        }
    }

    Ok(VerbEntry {
        lemma,
        nonverbal,
        past_stems,
        present_stems,
        passive_stem,
        causative_stem,
        transitivity,
        compound_transitivity,
        preverbs,
        bare_allowed,
        requires_ewe,
        postverb_e,
        object_person,
        subject_person,
        special,
        note,
        line,
    })
}

fn split_stems(cell: &str) -> Vec<String> {
    cell.split('|')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty() && s != "-")
        .collect()
}

fn parse_stem_spec(cell: &str) -> StemSpec {
    match cell {
        "AUTO" => StemSpec::Auto,
        "NONE" | "" | "-" => StemSpec::None,
        explicit => StemSpec::Explicit(split_stems(explicit)),
    }
}

fn parse_bool(cell: &str, default: bool) -> Result<bool, String> {
    match cell {
        "" | "-" => Ok(default),
        "yes" => Ok(true),
        "no" => Ok(false),
        other => Err(format!("bad boolean {other:?}")),
    }
}

fn parse_person(cell: &str) -> Result<PersonRestriction, String> {
    match cell {
        "" | "-" | "any" => Ok(PersonRestriction::Any),
        "third" => Ok(PersonRestriction::ThirdOnly),
        "none" => Ok(PersonRestriction::None),
        other => Err(format!("bad person restriction {other:?}")),
    }
}

// ---------------------------------------------------------------------------
// Stem derivation
// ---------------------------------------------------------------------------

fn ends_with(s: &str, suffix: char) -> bool {
    s.chars().last() == Some(suffix)
}

fn drop_last(s: &str) -> String {
    let mut chars: Vec<char> = s.chars().collect();
    chars.pop();
    chars.into_iter().collect()
}

/// Causative stems from an intransitive present stem: final ێ drops, final
/// ە takes an epenthetic ی, final وو turns into the approximant و, and a
/// final written ی (the vowel î) already spells the glide.
pub fn derive_causative(present_stem: &str) -> (String, String) {
    let base = if ends_with(present_stem, 'ێ') {
        drop_last(present_stem)
    } else if ends_with(present_stem, 'ە') {
        format!("{present_stem}ی")
    } else if present_stem.ends_with("وو") {
        drop_last(present_stem)
    } else {
        present_stem.to_string()
    };
    (format!("{base}اند"), format!("{base}ێن"))
}

/// Passive stem from a transitive present stem: append ر; final ە/ێ drop
/// (the vowel weakens to unwritten i), final ۆ becomes و, and stems already
/// ending in ر/ڕ take no suffix.
pub fn derive_passive(present_stem: &str) -> String {
    if ends_with(present_stem, 'ە') || ends_with(present_stem, 'ێ') {
        format!("{}ر", drop_last(present_stem))
    } else if ends_with(present_stem, 'ۆ') {
        format!("{}ور", drop_last(present_stem))
    } else if ends_with(present_stem, 'ر') || ends_with(present_stem, 'ڕ') {
        present_stem.to_string()
    } else {
        format!("{present_stem}ر")
    }
}

/// Tense stems of a passive stem: past adds ا, present adds ێ.
pub fn derive_passive_tense_stems(passive_stem: &str) -> (String, String) {
    (format!("{passive_stem}ا"), format!("{passive_stem}ێ"))
}

/// Fully derived stem inventory for one verb entry, with AUTO derivations
/// resolved and explicit stems taking precedence.
#[derive(Debug, Clone, PartialEq)]
pub struct VerbStems {
    pub past: Vec<String>,
    pub present: Vec<String>,
    /// (passive past, passive present) pairs.
    pub passive: Vec<(String, String)>,
    /// (causative past, causative present) pairs.
    pub causative: Vec<(String, String)>,
    /// (passive-of-causative past, present) pairs.
    pub causative_passive: Vec<(String, String)>,
}

pub fn resolve_stems(entry: &VerbEntry) -> VerbStems {
    let passive_bases: Vec<String> = match &entry.passive_stem {
        StemSpec::None => Vec::new(),
        StemSpec::Explicit(stems) => stems.clone(),
        StemSpec::Auto => entry
            .present_stems
            .iter()
            .map(|p| derive_passive(p))
            .collect(),
    };
    let passive: Vec<(String, String)> =
        passive_bases.iter().map(|b| derive_passive_tense_stems(b)).collect();

    let causative: Vec<(String, String)> = match &entry.causative_stem {
        StemSpec::None => Vec::new(),
        StemSpec::Explicit(stems) => stems
            .iter()
            .filter_map(|s| {
                s.split_once('/')
                    .map(|(past, pres)| (past.to_string(), pres.to_string()))
            })
            .collect(),
        StemSpec::Auto => entry
            .present_stems
            .iter()
            .map(|p| derive_causative(p))
            .collect(),
    };
    // Causatives are transitive, so their passive exists.
    let causative_passive: Vec<(String, String)> = causative
        .iter()
        .map(|(_, pres)| derive_passive_tense_stems(&derive_passive(pres)))
        .collect();

    VerbStems {
        past: entry.past_stems.clone(),
        present: entry.present_stems.clone(),
        passive,
        causative,
        causative_passive,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::script::deromanize;

    fn d(s: &str) -> String {
        deromanize(s).unwrap()
    }

    #[test]
    fn causative_consonant_final() {
        // xew -> (xewand, xewên)
        assert_eq!(derive_causative(&d("xew")), (d("xewand"), d("xewên")));
    }

    #[test]
    fn causative_drops_final_e_circumflex() {
        // qewmê -> (qewmand, qewmên)
        assert_eq!(derive_causative(&d("qewmê")), (d("qewmand"), d("qewmên")));
    }

    #[test]
    fn causative_epenthesis_and_glides() {
        // ge -> (geyand, geyên)
        assert_eq!(derive_causative(&d("ge")), (d("geyand"), d("geyên")));
        // jî -> (jyand, jyên); î and y collapse in script
        assert_eq!(derive_causative(&d("jî")), (d("jyand"), d("jyên")));
        // nû -> (nwand, nwên)
        assert_eq!(derive_causative(&d("nû")), (d("nwand"), d("nwên")));
    }

    #[test]
    fn passive_basic_and_vowel_weakening() {
        assert_eq!(derive_passive(&d("kuj")), d("kujr"));
        assert_eq!(derive_passive(&d("ke")), d("kir"));
        assert_eq!(derive_passive(&d("xo")), d("xur"));
        assert_eq!(derive_passive(&d("de")), d("dir"));
    }

    #[test]
    fn passive_r_final_drops_suffix() {
        assert_eq!(derive_passive(&d("biř")), d("biř"));
        assert_eq!(derive_passive(&d("bijêr")), d("bijêr"));
    }

    #[test]
    fn passive_tense_stems_append_one_letter() {
        let (past, pres) = derive_passive_tense_stems(&d("kujr"));
        assert_eq!(past, d("kujra"));
        assert_eq!(pres, d("kujrê"));
        assert_eq!(past.chars().count(), d("kujr").chars().count() + 1);
        assert_eq!(pres.chars().count(), d("kujr").chars().count() + 1);
    }

    #[test]
    fn passive_of_causative() {
        // xew -> causative xewên -> passive xewênr -> (xewênra, xewênrê)
        let (_, caus_pres) = derive_causative(&d("xew"));
        let (p, q) = derive_passive_tense_stems(&derive_passive(&caus_pres));
        assert_eq!(p, d("xewênra"));
        assert_eq!(q, d("xewênrê"));
    }

    #[test]
    fn verb_db_parses_multi_stem_rows() {
        let tsv = "lemma\tnonverbal\tpast\tpresent\tpassive\tcausative\ttrans\tctrans\tpreverbs\tbare\tewe\tpv_e\tobj\tsubj\tspecial\tnote\n\
دیتن\t-\tدیت|دی|بینی\tبین\tAUTO\tNONE\tvt\t-\t-\tyes\tno\tno\tany\tany\t-\t-\n\
قیڕاندن\t-\tقیڕاند\tقیڕێن\tNONE\tNONE\tono\t-\t-\tyes\tno\tno\tnone\tany\t-\t-\n";
        let parsed = parse_verb_db(tsv).unwrap();
        assert!(parsed.errors.is_empty(), "{:?}", parsed.errors);
        assert_eq!(parsed.entries.len(), 2);
        let see = &parsed.entries[0];
        assert_eq!(see.past_stems, vec![d("dît"), d("dî"), d("bînî")]);
        assert_eq!(see.present_stems, vec![d("bîn")]);
        let ono = &parsed.entries[1];
        assert_eq!(ono.transitivity, Transitivity::Onomatopoeic);
        assert!(matches!(ono.passive_stem, StemSpec::None));
    }

    #[test]
    fn vi_with_passive_stem_is_a_row_error() {
        let tsv = "lemma\tnonverbal\tpast\tpresent\tpassive\tcausative\ttrans\tctrans\tpreverbs\tbare\tewe\tpv_e\tobj\tsubj\tspecial\tnote\n\
کەوتن\t-\tکەوت\tکەو\tAUTO\tNONE\tvi\t-\t-\tyes\tno\tno\tany\tany\t-\t-\n";
        let parsed = parse_verb_db(tsv).unwrap();
        assert!(parsed.entries.is_empty());
        assert_eq!(parsed.errors.len(), 1);
        assert!(parsed.errors[0].message.contains("no passive stem"));
    }

    #[test]
    fn stem_lexicon_round_trip() {
        let tsv = "surface\tcategory\tflags\tvariants\tgloss\n\
گول\tnoun\t-\t-\tflower\n\
ون\tadj_nograd\tnograd\t-\tmissing\n";
        let entries = parse_stem_lexicon(tsv).unwrap();
        assert_eq!(entries.len(), 2);
        assert!(entries[1].flag("nograd"));
    }

    #[test]
    fn unknown_category_is_an_error() {
        let tsv = "surface\tcategory\tflags\tvariants\tgloss\nگول\tbogus\t-\t-\t-\n";
        assert!(matches!(
            parse_stem_lexicon(tsv),
            Err(IngestError::UnknownCategory { .. })
        ));
    }
}

#[cfg(test)]
mod override_tests {
    use super::*;
    use crate::script::deromanize;

    #[test]
    fn explicit_stems_override_auto_derivation() {
        let tsv = "lemma\tnonverbal\tpast\tpresent\tpassive\tcausative\ttrans\tctrans\tpreverbs\tbare\tewe\tpv_e\tobj\tsubj\tspecial\tnote\n\
گرتن\t-\tگرت\tگر\tگیر\tNONE\tvt\t-\t-\tyes\tno\tno\tany\tany\t-\t-\n";
        let parsed = parse_verb_db(tsv).unwrap();
        let stems = resolve_stems(&parsed.entries[0]);
        // The explicit irregular passive wins over gir + r.
        assert_eq!(
            stems.passive,
            vec![(deromanize("gîra").unwrap(), deromanize("gîrê").unwrap())]
        );
    }
}
