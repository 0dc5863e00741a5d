//! Emission of stem sections: routes each stem-lexicon entry into the
//! matching network with its category flags, and emits non-standard
//! variants with the NonStd flag.

use super::adjective::{ADJ_EXC_START, ADJ_START, NUM_START};
use super::closed::{
    ADV_TAIL, BARE_TAIL, CONJ_TAIL, CONTR_ADV_TAIL, CONTR_DEM_TAIL, PART_TAIL, PREP_ARG_TAIL,
    PREP_IZAFE_TAIL,
};
use super::noun::NOUN_INFL;
use super::pronoun::{DEM_TAIL, INT_IND_TAIL, PERS_START, RECP_START, REFL_START};
use super::vocab::Frag;
use crate::ingest::StemEntry;

/// The lexicon all non-verb stems live in; the root bridges here.
pub const STEM_LEXICON: &str = "Stems";

fn pos_of(category: &str) -> &'static str {
    match category {
        "noun" | "noun_def" | "letter" | "abbrev" => "[NOUN]",
        "unit" => "[UNIT]",
        "title" => "[TITLE]",
        "propn_per" => "[PROPN:PER]",
        "propn_loc" => "[PROPN:LOC]",
        "propn_org" => "[PROPN:ORG]",
        "propn_date" => "[PROPN:DATE]",
        "propn_eth" | "propn_dem" | "propn_lang" | "propn_misc" => "[PROPN:MISC]",
        "adj" | "adj_nograd" | "adj_indecl" | "adj_hav" | "adj_exc" => "[ADJ]",
        "adv" => "[ADV]",
        "num" => "[NUM]",
        "pron_pers" => "[PRON:PERS]",
        "pron_dem" => "[PRON:DEM]",
        "prep_indecl" | "prep_arg" | "prep_noarg" | "prep_izafe" | "prep_da" | "prep_da_ewe"
        | "prep_ewe" => "[PREP]",
        "intj" => "[INTJ]",
        "conj_sub" | "conj_coord" => "[CONJ]",
        "contr" => "[CONTR]",
        "part" => "[PART]",
        _ => "[NOUN]",
    }
}

/// (pos-included-in-stem, continuation, stem extra flags)
fn route(entry: &StemEntry) -> (bool, &'static str, String) {
    let mut flags = String::new();
    match entry.category.as_str() {
        "noun" | "propn_per" | "propn_loc" | "propn_org" | "propn_date" | "propn_eth"
        | "propn_dem" | "propn_lang" | "propn_misc" | "letter" | "abbrev" => {
            (true, NOUN_INFL, flags)
        }
        "unit" => {
            flags.push_str("@P.NoPl.on@");
            (true, NOUN_INFL, flags)
        }
        "noun_def" => {
            flags.push_str("@P.NoD.on@@P.NoPoss.on@");
            (true, NOUN_INFL, flags)
        }
        "title" => (true, BARE_TAIL, flags),
        "adj" | "adj_hav" => (false, ADJ_START, flags),
        "adj_nograd" => {
            flags.push_str("@P.Grad.no@");
            (false, ADJ_START, flags)
        }
        "adj_exc" => (true, ADJ_EXC_START, flags),
        "adj_indecl" => (true, BARE_TAIL, flags),
        "num" => {
            flags.push_str("@P.NoPl.on@");
            if entry.flag("pow10") {
                flags.push_str("@P.Pw.yes@");
            }
            (false, NUM_START, flags)
        }
        "adv" => (true, ADV_TAIL, flags),
        "pron_pers" => (true, PERS_START, flags),
        "pron_dem" => (true, DEM_TAIL, flags),
        "pron_spec" => match entry.flag_value("kind") {
            Some("refl") => (true, REFL_START, flags),
            Some("recp") => (true, RECP_START, flags),
            Some("izafe") => (true, PREP_IZAFE_TAIL, flags),
            Some("bare") => (true, BARE_TAIL, flags),
            _ => {
                if entry.flag("nopos") {
                    flags.push_str("@P.NoPoss.on@");
                }
                (true, INT_IND_TAIL, flags)
            }
        },
        "prep_arg" => (true, PREP_ARG_TAIL, flags),
        "prep_izafe" => (true, PREP_IZAFE_TAIL, flags),
        "prep_indecl" | "prep_noarg" | "prep_da" | "prep_da_ewe" | "prep_ewe" => {
            (true, BARE_TAIL, flags)
        }
        "intj" => (true, BARE_TAIL, flags),
        "conj_sub" | "conj_coord" => (true, CONJ_TAIL, flags),
        "part" => (true, PART_TAIL, flags),
        "contr" => match entry.flag_value("final") {
            Some("dem") => (true, CONTR_DEM_TAIL, flags),
            Some("adv") => (true, CONTR_ADV_TAIL, flags),
            _ => (true, BARE_TAIL, flags),
        },
        _ => (true, NOUN_INFL, flags),
    }
}

fn pron_pos(entry: &StemEntry) -> &'static str {
    if entry.flag("refl") {
        return "[PRON:REFL]";
    }
    match entry.flag_value("kind") {
        Some("refl") => "[PRON:REFL]",
        Some("recp") => "[PRON:RECP]",
        Some("int") => "[PRON:INT]",
        Some("ind") => "[PRON:IND]",
        _ => "[PRON:IND]",
    }
}

/// Emits every stem entry (plus its non-standard variants) into the stem
/// lexicon.
pub fn emit_stem_fragments(entries: &[StemEntry]) -> Frag {
    let mut f = Frag::new();
    for entry in entries {
        let pos = if entry.category == "pron_spec" {
            pron_pos(entry)
        } else {
            pos_of(&entry.category)
        };
        let (pos_inline, cont, flags) = route(entry);
        let upper_pos = if pos_inline { pos } else { "" };
        let upper = format!("{flags}{}{upper_pos}", entry.surface);
        f.entry(STEM_LEXICON, &upper, Some(&entry.surface), cont);
        for variant in &entry.variants {
            let upper = format!("@P.NS.yes@{flags}{}{upper_pos}", entry.surface);
            f.entry(STEM_LEXICON, &upper, Some(variant), cont);
        }
        // Adjectives also feed the xo- compound chain.
        if matches!(entry.category.as_str(), "adj" | "adj_nograd" | "adj_hav") {
            let upper = format!("{flags}{}", entry.surface);
            f.entry(
                super::verb::XO_ADJ_LEXICON,
                &upper,
                Some(&entry.surface),
                super::adjective::ADJ_VERB_COMPOUND,
            );
        }
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ingest::parse_stem_lexicon;

    #[test]
    fn stems_route_to_their_networks() {
        let tsv = "surface\tcategory\tflags\tvariants\tgloss\n\
گول\tnoun\t-\t-\tflower\n\
ون\tadj_nograd\t-\t-\tmissing\n\
بست\tunit\t-\t-\tspan\n";
        let entries = parse_stem_lexicon(tsv).unwrap();
        let f = emit_stem_fragments(&entries);
        let text = f.render();
        assert!(text.contains("گول[NOUN]:گول NInfl ;"));
        assert!(text.contains("@P.Grad.no@ون:ون AdjStart ;"));
        assert!(text.contains("@P.NoPl.on@بست[UNIT]:بست NInfl ;"));
    }

    #[test]
    fn variants_carry_the_nonstandard_flag() {
        let tsv = "surface\tcategory\tflags\tvariants\tgloss\n\
موحەمەد\tpropn_per\t-\tمحمد\tname\n";
        let entries = parse_stem_lexicon(tsv).unwrap();
        let text = emit_stem_fragments(&entries).render();
        assert!(text.contains("@P.NS.yes@موحەمەد[PROPN:PER]:محمد NInfl ;"));
    }
}
