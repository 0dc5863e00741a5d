//! Closed classes: prepositions, adverbs, conjunctions, interjections,
//! particles and the lexicalized contractions.

use super::noun::NOMINAL_END;
use super::pronoun::DEM_TAIL;
use super::vocab::{Frag, CLITIC_SURFACES, PERSONS};

/// Declinable prepositions (pê, lê, tê, bo): clitic îş plus up to two
/// argument clitics (complement and a displaced one).
pub const PREP_ARG_TAIL: &str = "PrepArgTail";
/// Indeclinable words that still close with the joined-و slot.
pub const BARE_TAIL: &str = "BareTail";
/// Conjunctions: bare, with a non-standard îş.
pub const CONJ_TAIL: &str = "ConjTail";
/// Particles: strictly bare (no joined-و either).
pub const PART_TAIL: &str = "PartTail";
/// Adverbs: displaced clitics only.
pub const ADV_TAIL: &str = "AdvTail";
/// Izafe-bearing prepositions (lebare-, sereřa-): the izafe is mandatory.
pub const PREP_IZAFE_TAIL: &str = "PrepIzafeTail";

/// Lexicon the adverb-final contractions (lêre, bewê) continue into.
pub const CONTR_ADV_TAIL: &str = ADV_TAIL;
/// Lexicon the demonstrative contractions (lem, bew) continue into.
pub const CONTR_DEM_TAIL: &str = DEM_TAIL;

pub fn build_closed_network() -> Frag {
    let mut f = Frag::new();

    f.bridge(PREP_ARG_TAIL, "PrepArg1");
    f.entry(PREP_ARG_TAIL, "{Clitic=îş}", Some(">Sیش"), "PrepArg1");
    f.bridge("PrepArg1", "PrepArg2");
    for (i, person) in PERSONS.iter().enumerate() {
        f.entry(
            "PrepArg1",
            &format!("@P.A1.{}@{{Arg{person}}}", person.to_lowercase()),
            Some(&format!(">G{}", CLITIC_SURFACES[i])),
            "PrepArg2",
        );
    }
    // A second argument clitic follows only a schema-earlier one, so the
    // canonical tag string stays faithful to the morph order.
    f.bridge("PrepArg2", NOMINAL_END);
    for (i, person) in PERSONS.iter().enumerate() {
        let blocked: String = PERSONS
            .iter()
            .skip(i)
            .map(|r| format!("@D.A1.{}@", r.to_lowercase()))
            .collect();
        f.entry(
            "PrepArg2",
            &format!("{blocked}{{Arg{person}}}"),
            Some(&format!(">G{}", CLITIC_SURFACES[i])),
            NOMINAL_END,
        );
    }

    // Bare words still admit the joined-و spelling extension.
    f.bridge(BARE_TAIL, "TagJW");

    f.bridge(CONJ_TAIL, "TagNS");
    f.entry(CONJ_TAIL, "@P.NS.yes@{Clitic=îş}", Some(">Sیش"), "TagNS");

    f.bridge(PART_TAIL, "TagNS");

    f.bridge(ADV_TAIL, "AdvArg");
    f.entry(ADV_TAIL, "{Clitic=îş}", Some(">Sیش"), "AdvArg");
    f.bridge("AdvArg", NOMINAL_END);
    for (i, person) in PERSONS.iter().enumerate() {
        f.entry(
            "AdvArg",
            &format!("{{Arg{person}}}"),
            Some(&format!(">G{}", CLITIC_SURFACES[i])),
            NOMINAL_END,
        );
    }

    f.entry(PREP_IZAFE_TAIL, "{Izafe}", Some(">Gی"), NOMINAL_END);

    f
}
