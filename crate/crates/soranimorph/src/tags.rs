//! The closed, versioned morphological tag schema.
//!
//! Part-of-speech tags use the `[..]` form, features the `{..}` form.
//! Output feature order is fixed by this schema regardless of the order the
//! morphs appear in the word.

pub const SCHEMA_VERSION: u32 = 1;

/// Part-of-speech tags.
pub const POS_TAGS: &[&str] = &[
    "[NOUN]",
    "[PROPN:PER]",
    "[PROPN:LOC]",
    "[PROPN:ORG]",
    "[PROPN:DATE]",
    "[PROPN:MISC]",
    "[ADJ]",
    "[NUM]",
    "[PRON:PERS]",
    "[PRON:DEM]",
    "[PRON:REFL]",
    "[PRON:RECP]",
    "[PRON:INT]",
    "[PRON:IND]",
    "[VERB]",
    "[ADV]",
    "[PREP]",
    "[CONJ]",
    "[INTJ]",
    "[PART]",
    "[UNIT]",
    "[TITLE]",
    "[CONTR]",
];

/// Feature tags in canonical output order. The order follows the surface
/// slot order of the grammar so a canonical lexical string spells tags in
/// path order.
pub const FEATURE_TAGS: &[&str] = &[
    "{Cmp}",
    "{Sup}",
    "{Ord}",
    "{OrdN}",
    "{Def}",
    "{Indef}",
    "{Dem}",
    "{Plur}",
    "{Clitic=îş}",
    "{Poss1S}",
    "{Poss2S}",
    "{Poss3S}",
    "{Poss1P}",
    "{Poss2P}",
    "{Poss3P}",
    "{Arg1S}",
    "{Arg2S}",
    "{Arg3S}",
    "{Arg1P}",
    "{Arg2P}",
    "{Arg3P}",
    "{Izafe}",
    "{DefIzafe}",
    "{Circ=da}",
    "{Circ=ewe}",
    "{Cop1S}",
    "{Cop2S}",
    "{Cop3S}",
    "{Cop1P}",
    "{Cop2P}",
    "{Cop3P}",
    "{Pres}",
    "{PastSimple}",
    "{Imperf}",
    "{PrPerf}",
    "{PsPerf}",
    "{Ind}",
    "{Subj}",
    "{Imp}",
    "{Pos}",
    "{Neg}",
    "{Subj1S}",
    "{Subj2S}",
    "{Subj3S}",
    "{Subj1P}",
    "{Subj2P}",
    "{Subj3P}",
    "{Obj1S}",
    "{Obj2S}",
    "{Obj3S}",
    "{Obj1P}",
    "{Obj2P}",
    "{Obj3P}",
    "{Preverb=heł}",
    "{Preverb=da}",
    "{Preverb=řa}",
    "{Preverb=der}",
    "{Preverb=řo}",
    "{Preverb=wer}",
    "{Preverb=ser}",
    "{Postverb=ewe}",
    "{Postverb=e}",
    "{Pass}",
    "{Caus}",
    "{Inf}",
    "{PastPart}",
    "{Agent}",
    "{JoinedPrep}",
    "{JoinedW}",
    "{NonStd}",
];

pub fn is_pos(tag: &str) -> bool {
    POS_TAGS.contains(&tag)
}

pub fn is_feature(tag: &str) -> bool {
    FEATURE_TAGS.contains(&tag)
}

/// Position in the canonical feature order.
pub fn feature_index(tag: &str) -> Option<usize> {
    FEATURE_TAGS.iter().position(|t| *t == tag)
}

/// Sorts features into schema order, keeping duplicates adjacent.
pub fn sort_features(feats: &mut [String]) {
    feats.sort_by_key(|f| feature_index(f).unwrap_or(usize::MAX));
}
