//! The general noun inflection network.
//!
//! Suffix order: definiteness/number group, the adverbial clitic îş, a
//! possessive slot, an argument slot, then one closing suffix
//! (circumposition, izafe, or copula). All nodes are final. Stem-level
//! flags gate category restrictions: `NoD` blocks the definiteness group
//! (semantically definite nouns), `NoPl` blocks plural-bearing suffixes
//! (units, non-decimal numerals), `NoPoss` blocks possessives, `NoIz`
//! blocks izafe (exceptional adjectives).

use super::vocab::{Frag, CLITIC_SURFACES, COPULA_SURFACES, PERSONS};

/// Entry lexicon for stems that inflect like general nouns.
pub const NOUN_INFL: &str = "NInfl";
/// Terminal tag chain every nominal path funnels into.
pub const NOMINAL_END: &str = "NTagJP";

pub fn build_noun_network() -> Frag {
    let mut f = Frag::new();

    // Definiteness / number group. The plural interleaves: before the
    // indefinite and demonstrative suffixes, after the definite one.
    f.bridge(NOUN_INFL, "NIsh");
    let d = |f: &mut Frag, upper: &str, lower: &str, extra: &str| {
        f.entry(NOUN_INFL, &format!("@P.Hd.on@@P.Dd.on@{extra}{upper}"), Some(lower), "NIsh");
    };
    d(&mut f, "{Def}", ">Kەکە", "@D.NoD.on@");
    d(&mut f, "{Def}{Plur}", ">Kەکان", "@D.NoD.on@@D.NoPl.on@");
    d(&mut f, "{Indef}", ">Xێک", "@D.NoD.on@");
    d(&mut f, "{Indef}{Plur}", ">Aان>Xێک", "@D.NoD.on@@D.NoPl.on@");
    d(&mut f, "{Dem}", ">Eە", "@D.NoD.on@");
    d(&mut f, "{Dem}{Plur}", ">Aان>Eە", "@D.NoD.on@@D.NoPl.on@");
    d(&mut f, "{Plur}", ">Aان", "@D.NoD.on@@D.NoPl.on@");
    // Word-final indefinite with the stop dropped is a common non-standard
    // form; it closes the word.
    f.entry(NOUN_INFL, "@D.NoD.on@@P.NS.yes@{Indef}", Some(">Xێ"), NOMINAL_END);

    // Adverbial clitic îş precedes the personal suffixes.
    f.bridge("NIsh", "NPoss");
    f.entry("NIsh", "{Clitic=îş}@P.Ish.yes@@P.Hd.on@", Some(">Sیش"), "NPoss");

    // Possessive slot.
    f.bridge("NPoss", "NArg");
    for (i, person) in PERSONS.iter().enumerate() {
        let p3 = if *person == "3S" { "@P.P3.on@" } else { "" };
        f.entry(
            "NPoss",
            &format!("@D.NoPoss.on@@P.PA.poss@{p3}{{Poss{person}}}"),
            Some(&format!(">G{}", CLITIC_SURFACES[i])),
            "NArg",
        );
    }

    // Argument slot (subject, object or complement reading). After an
    // argument clitic only the closing third-singular copula and the
    // circumpositions remain available.
    //
    // The clear flag here is deliberate: the swapped copula fires only when
    // the third-singular clitic is ADJACENT to it, so a non-third argument
    // clitic must erase the adjacency record a third-singular possessive
    // left behind. This is the one place the grammar relies on a flag
    // operator beyond U/R/D/P.
    f.bridge("NArg", "NTail");
    for (i, person) in PERSONS.iter().enumerate() {
        let p3 = if *person == "3S" { "@P.P3.on@" } else { "@C.P3@" };
        f.entry(
            "NArg",
            &format!("@P.PA.arg@{p3}{{Arg{person}}}"),
            Some(&format!(">G{}", CLITIC_SURFACES[i])),
            "NTailArg",
        );
    }
    f.bridge("NTailArg", NOMINAL_END);
    f.entry("NTailArg", "{Circ=da}", Some(">Gدا"), NOMINAL_END);
    f.entry("NTailArg", "{Circ=ewe}", Some(">Wەوە"), NOMINAL_END);
    f.entry("NTailArg", "@R.Hd.on@@D.P3.on@{Cop3S}", Some(COPULA_SURFACES[2]), NOMINAL_END);

    // Closing suffixes.
    f.bridge("NTail", NOMINAL_END);
    f.entry("NTail", "{Circ=da}", Some(">Gدا"), NOMINAL_END);
    f.entry("NTail", "{Circ=ewe}", Some(">Wەوە"), NOMINAL_END);
    // Exceptional adjectives close a circumposition phrase with a copula.
    f.entry("NTail", "@R.NoIz.on@{Circ=da}", Some(">Gدا"), "NCircCop");
    f.entry("NTail", "@R.NoIz.on@{Circ=ewe}", Some(">Wەوە"), "NCircCop");
    // Izafe links the noun to a following modifier; it excludes the
    // personal clitics.
    f.entry("NTail", "@D.PA@@D.Ish.yes@@D.NoIz.on@{Izafe}", Some(">Gی"), NOMINAL_END);
    f.entry("NTail", "@D.PA@@D.Ish.yes@@D.NoIz.on@{DefIzafe}", Some(">Iە"), NOMINAL_END);
    // After a personal clitic the copula needs either a definiteness-group
    // host or the absence of îş (kuř-ekan-îş-man-in, mał-yan-e).
    for host in ["@R.Dd.on@", "@D.Ish.yes@"] {
        for (i, person) in PERSONS.iter().enumerate() {
            if *person == "3S" {
                // After a third-singular clitic the copula swaps in with an
                // epenthetic t.
                f.entry("NTail", &format!("@R.PA@{host}@R.P3.on@{{Cop3S}}"), Some(">Gەتی"), NOMINAL_END);
                f.entry("NTail", &format!("@R.PA@{host}@D.P3.on@{{Cop3S}}"), Some(COPULA_SURFACES[i]), NOMINAL_END);
            } else if !matches!(*person, "1S" | "2S") {
                f.entry(
                    "NTail",
                    &format!("@R.PA@{host}{{Cop{person}}}"),
                    Some(COPULA_SURFACES[i]),
                    NOMINAL_END,
                );
            }
        }
    }
    // Without a preceding clitic the full copula paradigm applies.
    for (i, person) in PERSONS.iter().enumerate() {
        f.entry(
            "NTail",
            &format!("@D.PA@{{Cop{person}}}"),
            Some(COPULA_SURFACES[i]),
            NOMINAL_END,
        );
    }

    for (i, person) in PERSONS.iter().enumerate() {
        f.entry("NCircCop", &format!("{{Cop{person}}}"), Some(COPULA_SURFACES[i]), NOMINAL_END);
    }

    // Closing tag slots: joined-preposition mark, joined-و, NonStd.
    f.entry(NOMINAL_END, "@D.JP.yes@", None, "TagJW");
    f.entry(NOMINAL_END, "@R.JP.yes@{JoinedPrep}", Some("0"), "TagJW");
    f.bridge("TagJW", "TagNS");
    f.entry("TagJW", "@P.NS.yes@{JoinedW}", Some("و"), "TagNS");
    f.entry("TagNS", "@D.NS.yes@", None, "#");
    f.entry("TagNS", "@R.NS.yes@{NonStd}", Some("0"), "#");

    f
}
