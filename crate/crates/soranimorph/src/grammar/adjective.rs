//! Adjective and numeral morphotactics.
//!
//! Descriptive adjectives inflect like nouns after the stem-adjacent
//! comparative/superlative slot; non-gradable stems carry `Grad=no` and the
//! degree suffixes are disallowed for them. Exceptional adjectives (tir,
//! dîke, ke, dî, weha, wa) only take the clitic, argument, circumposition
//! and copula suffixes. Numerals add the ordinal suffixes; powers of ten
//! may pluralize.
//!
//! Every adjective also feeds the verbal-compound chain (kirdin/bûn),
//! producing compound infinitives, past participles and agent nouns.

use super::noun::NOUN_INFL;
use super::vocab::Frag;

/// Entry lexicon for descriptive adjective stems (after the stem entry).
pub const ADJ_START: &str = "AdjStart";
/// Entry lexicon for exceptional adjectives.
pub const ADJ_EXC_START: &str = "AdjExcStart";
/// Entry lexicon for numerals (after the stem entry).
pub const NUM_START: &str = "NumStart";
/// Verbal-compound chain entry (shared with the reflexive xo- compounds).
pub const ADJ_VERB_COMPOUND: &str = "AdjVC1";

pub fn build_adjective_network() -> Frag {
    let mut f = Frag::new();

    // Nominal route: POS then degree then the noun network.
    f.entry(ADJ_START, "[ADJ]", Some("0"), "AdjGrad");
    // Compound route: POS comes from the verbal part.
    f.bridge(ADJ_START, ADJ_VERB_COMPOUND);

    f.bridge("AdjGrad", NOUN_INFL);
    f.entry("AdjGrad", "@D.Grad.no@{Cmp}", Some(">Gتر"), NOUN_INFL);
    f.entry("AdjGrad", "@D.Grad.no@{Sup}", Some(">Gترین"), NOUN_INFL);

    // Exceptional adjectives skip the definiteness group and izafe.
    f.entry(ADJ_EXC_START, "@P.NoD.on@@P.NoIz.on@", None, "NIsh");

    // Numerals: ordinals are stem-adjacent; the plural of powers of ten is
    // licensed by the Pow flag on the stem.
    f.entry(NUM_START, "[NUM]", Some("0"), "NumOrd");
    f.bridge("NumOrd", NOUN_INFL);
    f.entry("NumOrd", "{Ord}", Some(">Oەم"), NOUN_INFL);
    f.entry("NumOrd", "{OrdN}", Some(">Oەمین"), NOUN_INFL);
    // Bracketed non-standard ordinal allomorphs with h.
    f.entry("NumOrd", "@P.NS.yes@{Ord}", Some(">Hهەم"), NOUN_INFL);
    f.entry("NumOrd", "@P.NS.yes@{OrdN}", Some(">Hهەمین"), NOUN_INFL);
    f.entry("NumOrd", "@P.NS.yes@{OrdN}", Some(">Hمین"), NOUN_INFL);
    f.entry("NumOrd", "@R.Pw.yes@{Plur}", Some(">Oان"), "NIsh");

    // Verbal compounds from adjectives: optional comparative, optional
    // negation, then a kirdin/bûn form, then optional postverb.
    f.bridge(ADJ_VERB_COMPOUND, "AdjVC2");
    f.entry(ADJ_VERB_COMPOUND, "@D.Grad.no@@P.Cm.cmp@", Some("تر"), "AdjVC2");
    f.entry(ADJ_VERB_COMPOUND, "@D.Grad.no@@P.Cm.sup@", Some("ترین"), "AdjVC2");
    f.bridge("AdjVC2", "AdjVCV");
    f.entry("AdjVC2", "@P.Ng.yes@", Some("نە"), "AdjVCV");
    // bûn: intransitive infinitive only.
    f.entry("AdjVCV", "@P.Nom.inf@بوون[NOUN]", Some("بوون"), "AdjVCTailInf");
    // kirdin: transitive infinitive, passive infinitive, past participle
    // from the passive stem, agent noun from the present stem.
    f.entry("AdjVCV", "@P.Nom.inf@کردن[NOUN]", Some("کردن"), "AdjVCTailInf");
    f.entry("AdjVCV", "@P.Nom.inf@@P.Ps.yes@کردن[NOUN]", Some("کران"), "AdjVCTailInf");
    f.entry("AdjVCV", "@P.Nom.pp@@P.Ps.yes@کردن[ADJ]", Some("کراو"), "AdjVCTailNom");
    f.entry("AdjVCV", "@P.Nom.ag@کردن[ADJ]", Some("کەر"), "AdjVCTailNom");
    f.bridge("AdjVCTailInf", "NomTags");
    f.entry("AdjVCTailInf", "@P.PV.ewe@", Some(">Vەوە"), "NomTags");
    f.bridge("AdjVCTailNom", "NomTags");

    f
}
