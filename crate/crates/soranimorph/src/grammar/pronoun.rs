//! Pronoun morphotactics: personal, demonstrative, reflexive, reciprocal,
//! interrogative and indefinite pronouns.

use super::noun::NOMINAL_END;
use super::vocab::{person_class, Frag, CLITIC_SURFACES, COPULA_SURFACES, PERSONS};

pub const PERS_START: &str = "PronPers";
pub const DEM_TAIL: &str = "DemTail";
pub const REFL_START: &str = "PronRefl";
pub const RECP_START: &str = "PronRecp";
pub const INT_IND_TAIL: &str = "PronIntTail";

pub fn build_pronoun_network() -> Frag {
    let mut f = Frag::new();

    // Personal pronouns: clitic îş, then either a copula or a
    // circumposition.
    f.bridge(PERS_START, "PersTail");
    f.entry(PERS_START, "{Clitic=îş}", Some(">Sیش"), "PersTail");
    f.bridge("PersTail", NOMINAL_END);
    for (i, person) in PERSONS.iter().enumerate() {
        f.entry("PersTail", &format!("{{Cop{person}}}"), Some(COPULA_SURFACES[i]), NOMINAL_END);
    }
    f.entry("PersTail", "{Circ=da}", Some(">Gدا"), NOMINAL_END);
    f.entry("PersTail", "{Circ=ewe}", Some(">Wەوە"), NOMINAL_END);

    // Demonstrative pronouns (and the le/be contractions, which inherit
    // this tail): plural, îş, argument clitics, copula.
    f.bridge(DEM_TAIL, "DemIsh");
    f.entry(DEM_TAIL, "{Plur}", Some(">Aان"), "DemIsh");
    f.bridge("DemIsh", "DemArg");
    f.entry("DemIsh", "{Clitic=îş}", Some(">Sیش"), "DemArg");
    f.bridge("DemArg", "DemCop");
    for (i, person) in PERSONS.iter().enumerate() {
        f.entry(
            "DemArg",
            &format!("{{Arg{person}}}"),
            Some(&format!(">G{}", CLITIC_SURFACES[i])),
            "DemCop",
        );
    }
    f.bridge("DemCop", NOMINAL_END);
    f.entry("DemCop", "{Cop3S}", Some(COPULA_SURFACES[2]), NOMINAL_END);

    // Reflexive xo-: possessive clitics, optionally followed by an
    // argument clitic of a different person class.
    f.bridge(REFL_START, NOMINAL_END);
    for (i, person) in PERSONS.iter().enumerate() {
        f.entry(
            REFL_START,
            &format!("@P.ClP.{}@{{Poss{person}}}", person_class(person)),
            Some(&format!(">G{}", CLITIC_SURFACES[i])),
            "ReflArg",
        );
    }
    f.bridge("ReflArg", NOMINAL_END);
    for (i, person) in PERSONS.iter().enumerate() {
        f.entry(
            "ReflArg",
            &format!("@D.ClP.{}@{{Arg{person}}}", person_class(person)),
            Some(&format!(">G{}", CLITIC_SURFACES[i])),
            NOMINAL_END,
        );
    }

    // Reciprocal yektir: no possessives, plural arguments only.
    f.bridge(RECP_START, NOMINAL_END);
    f.entry(RECP_START, "{Clitic=îş}", Some(">Sیش"), "RecpArg");
    f.bridge(RECP_START, "RecpArg");
    for (i, person) in PERSONS.iter().enumerate() {
        if person.ends_with('P') {
            f.entry(
                "RecpArg",
                &format!("{{Arg{person}}}"),
                Some(&format!(">G{}", CLITIC_SURFACES[i])),
                NOMINAL_END,
            );
        }
    }

    // Interrogative and indefinite pronouns: îş, possessives (gated where
    // a stem refuses them), copula.
    f.bridge(INT_IND_TAIL, "PronIntPoss");
    f.entry(INT_IND_TAIL, "{Clitic=îş}", Some(">Sیش"), "PronIntPoss");
    f.bridge("PronIntPoss", "PronIntCop");
    for (i, person) in PERSONS.iter().enumerate() {
        f.entry(
            "PronIntPoss",
            &format!("@D.NoPoss.on@{{Poss{person}}}"),
            Some(&format!(">G{}", CLITIC_SURFACES[i])),
            "PronIntCop",
        );
    }
    f.bridge("PronIntCop", NOMINAL_END);
    for (i, person) in PERSONS.iter().enumerate() {
        f.entry(
            "PronIntCop",
            &format!("{{Cop{person}}}"),
            Some(COPULA_SURFACES[i]),
            NOMINAL_END,
        );
    }

    f
}
