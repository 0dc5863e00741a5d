//! The two-level orthographic rule file.
//!
//! All visible alternations happen at morpheme junctures, so every rule
//! context is anchored on a boundary symbol; pair strings of plain letters
//! are never constrained. Where a change is mandatory, the rule carries its
//! companion ban on the unchanged realization.

use super::vocab::BOUNDARIES;
use crate::script::SCRIPT_ALPHABET;

/// Change pairs used by the rules (lexical:surface).
const CHANGE_PAIRS: &[&str] = &[
    "ە:0", // suffix e drops after vowels
    "0:ی", // glide insertion
    "ێ:ە", // indefinite ê weakens after the glide
    "ی:0", // îş loses its vowel after vowels
    "ا:0", // aye reduces after a
    "و:0", // û suffix loses a waw after vowels
    "ە:ا", // present 3SG: e + ê -> a
    "ۆ:و", // present 3SG: o + ê -> wa (1/2)
    "0:ا", // present 3SG: o + ê -> wa (2/2)
    "ێ:0", // present 3SG ê drops
    "0:ر", // imperative euphonic r
    "0:ت", // perfect euphonic t
];

pub fn build_rule_file() -> String {
    let mut out = String::new();

    out.push_str("Alphabet\n ");
    for c in SCRIPT_ALPHABET {
        out.push(' ');
        out.push(*c);
    }
    for b in BOUNDARIES {
        out.push_str(&format!(" {b}:0"));
    }
    for p in CHANGE_PAIRS {
        out.push_str(&format!(" {p}"));
    }
    out.push_str(" ;\n\n");

    out.push_str("Sets\n");
    out.push_str("  Vow = ا ۆ ە ێ ;\n");
    out.push_str(
        "  Cons = ب پ ت ج چ ح خ د ر ڕ ز ژ س ش ع غ ف ڤ ق ک گ ل ڵ م ن ه ئ ;\n\n",
    );

    out.push_str("Rules\n");

    // Suffix-initial e drops after a vowel-final stem: the definite,
    // nominal-circumposition and definite-izafe suffixes, plus the
    // imperative person suffix.
    out.push_str("\"suffix e drops after a vowel\"\n");
    out.push_str(concat!(
        "ە:0 <=> [ [ا|ۆ|ە] [>K|>W|>I] ]",
        " | [ Cons ێ >K ]",
        " | [ ێ [>W|>I] ]",
        " | [ [ا|ۆ|ە|ێ|[Cons ی]|[و و]] >M ] _ ;\n",
    ));

    // Glide insertion between a vowel-final stem and a vowel-initial
    // suffix, per suffix class.
    out.push_str("\"glide insertion at vowel junctures\"\n");
    out.push_str(concat!(
        "0:ی => [ [Cons ی] [>K|>X|>A|>I|>E|>W|>V|>O] ]",
        " | [ [ا|ۆ|ە|ێ|[و و]] >X ]",
        " | [ [ا|ۆ|ێ] >A ]",
        " | [ [ا|ۆ|ە|ێ] [>E|>O] ]",
        " | [ و ێ >K ]",
        " | [ ا >V ] _ ;\n",
    ));

    // Companion bans force the insertion where it is licensed.
    out.push_str("\"no bare vowel at a glide juncture\"\n");
    out.push_str(concat!(
        "ە:ە /<= [ [Cons ی] [>K|>E|>W|>I|>O|>V] ]",
        " | [ [ا|ۆ|ە|ێ] [>E|>O] ]",
        " | [ و ێ >K ]",
        " | [ ا >V ]",
        " | [ [>C|[>Y ا ی]] ە >V ] _ ;\n",
    ));
    out.push_str("\"no bare indefinite vowel after a vowel\"\n");
    out.push_str("ێ:ێ /<= [ [Cons ی]|ا|ۆ|ە|ێ|[و و] ] >X _ ;\n");
    out.push_str("\"no bare plural vowel after a vowel\"\n");
    out.push_str("ا:ا /<= [ [Cons ی]|ا|ۆ|ێ ] >A _ ;\n");

    // The indefinite suffix weakens to ek after the inserted glide.
    out.push_str("\"indefinite vowel weakens after the glide\"\n");
    out.push_str("ێ:ە <=> 0:ی _ ;\n");

    // The adverbial clitic îş loses its vowel after vowels.
    out.push_str("\"clitic îş reduces after a vowel\"\n");
    out.push_str("ی:0 <=> [ ا|ۆ|ە|ێ|[Cons ی]|[و و] ] >S _ ش ;\n");

    // Past participle / perfect û appears as single waw after vowels, and
    // disappears entirely after a û-final stem.
    out.push_str("\"perfect waw reduces after a vowel\"\n");
    out.push_str(concat!(
        "و:0 <=> [ [ا|ۆ|ە|ێ|[Cons ی]] >U و ]",
        " | [ و و >U ]",
        " | [ و:0 ] _ ;\n",
    ));

    // Subjunctive aye reduces to ye after a.
    out.push_str("\"aye reduces after a\"\n");
    out.push_str("ا:0 <=> ا >Y _ ;\n");

    // Third-singular present fusions.
    out.push_str("\"present 3SG e opens to a\"\n");
    out.push_str("ە:ا <=> _ >3 ;\n");
    out.push_str("\"present 3SG o opens to w\"\n");
    out.push_str("ۆ:و <=> _ >3 ;\n");
    out.push_str("\"present 3SG a insertion after the opened o\"\n");
    out.push_str("0:ا <=> ۆ:و >3 _ ;\n");
    out.push_str("\"present 3SG ê drops after a stem vowel\"\n");
    out.push_str("ێ:0 <=> [ ێ >3 ] | [ ە:ا >3 ] | [ 0:ا ] _ ;\n");

    // Euphonic consonants before postverbs.
    out.push_str("\"imperative euphonic r before a postverb\"\n");
    out.push_str("0:ر <=> >M ە >V _ ;\n");
    out.push_str("\"perfect euphonic t before a postverb\"\n");
    out.push_str("0:ت <=> [ [>C ە] | [>Y ا ی ە] ] >V _ ;\n");

    // Non-standard h-initial ordinal allomorph occurs only after vowels.
    out.push_str("\"non-standard ordinal h after vowels\"\n");
    out.push_str(">H:0 => [ ا|ۆ|ە|ێ|[Cons ی]|[و و] ] _ ;\n");

    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::twol::parse_rules;

    #[test]
    fn rule_file_parses() {
        let rs = parse_rules(&build_rule_file()).unwrap();
        assert!(rs.rules.len() >= 14);
        assert!(rs.alphabet.len() > 40);
    }
}
