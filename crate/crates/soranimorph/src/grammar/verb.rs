//! Verb morphotactics: the shared finite scaffolding (prefixes, displaced
//! clitics, preverbs, suffix chains per tense pattern), per-verb generated
//! stem entries routed by flag diacritics, irregular paradigms, and the
//! non-finite patterns (infinitives, past participles, agent nouns,
//! compounds).
//!
//! Word-formation patterns follow the flag-diacritic approach: stems and
//! affixes set and test features (prefix kind, aspect, auxiliary, persons,
//! preverb, valence) so each verb's stems appear once while illegal paths
//! are pruned at lookup time.

use super::vocab::{person_class, Frag, CLITIC_SURFACES, PERSONS, PREVERBS};
use crate::ingest::{resolve_stems, PersonRestriction, Transitivity, VerbEntry};

pub const VERB_FINITE: &str = "VFinite";
pub const VERB_NOMINAL: &str = "VNom";

/// Lowercase person ids used as flag values.
fn pid(person: &str) -> String {
    person.to_lowercase()
}

/// Builds all verb lexicons for the given database.
pub fn build_verb_networks(verbs: &[VerbEntry]) -> Frag {
    let mut f = Frag::new();
    finite_scaffold(&mut f);
    nominal_scaffold(&mut f);
    super::nominal_tag_chain(&mut f);
    for entry in verbs {
        if entry.nonverbal.is_some() {
            emit_compound(&mut f, entry);
        } else {
            emit_simple_verb(&mut f, entry);
        }
    }
    f
}

// ---------------------------------------------------------------------------
// Shared finite scaffolding
// ---------------------------------------------------------------------------

fn clitic_entries(f: &mut Frag, lexicon: &str, first: bool, cont: &str) {
    // `first = true` adds the leftmost-host gate.
    let gate = if first { "@D.Hst.done@" } else { "" };
    for (i, person) in PERSONS.iter().enumerate() {
        let p = pid(person);
        f.entry(
            lexicon,
            &format!("{gate}@P.Cl.{p}@{}", if first { "@P.Hst.done@" } else { "" }),
            Some(CLITIC_SURFACES[i]),
            cont,
        );
    }
}

/// Same-person-class restriction: the person suffix may not repeat the
/// class of the clitic (or post-stem agent) already seen.
fn class_gate(person: &str, with_agent: bool) -> String {
    let mut out = String::new();
    match person_class(person) {
        "1" => {
            out.push_str("@D.Cl.1s@@D.Cl.1p@");
            if with_agent {
                out.push_str("@D.Ag.1s@@D.Ag.1p@");
            }
        }
        "2" => {
            out.push_str("@D.Cl.2s@@D.Cl.2p@");
            if with_agent {
                out.push_str("@D.Ag.2s@@D.Ag.2p@");
            }
        }
        _ => {}
    }
    out
}

fn finite_scaffold(f: &mut Frag) {
    // Preverb slot (position -3); a preverb is the leftmost clitic host.
    f.bridge(VERB_FINITE, "VPfx2");
    for (id, surface) in PREVERBS {
        f.entry(VERB_FINITE, &format!("@P.Pv.{id}@"), Some(surface), "VPvC");
    }
    f.bridge("VPvC", "VPfx2");
    f.entry("VPvC", "@P.Ish.yes@@P.Hst.done@", Some(">Sیش"), "VPvC2");
    clitic_entries(f, "VPvC", true, "VPfx2");
    f.bridge("VPvC2", "VPfx2");
    clitic_entries(f, "VPvC2", false, "VPfx2");

    // Negation / mood prefixes (position -2); hosts clitics when leftmost.
    f.entry("VPfx2", "@P.Pfx.none@", None, "VPre1");
    for (value, surface) in
        [("de", "دە"), ("na", "نا"), ("bi", "ب"), ("ne", "نە"), ("me", "مە")]
    {
        f.entry("VPfx2", &format!("@P.Pfx.{value}@"), Some(surface), "VHost2");
    }
    f.bridge("VHost2", "VPre1");
    f.entry("VHost2", "@D.Pfx.bi@@D.Hst.done@@P.Ish.yes@@P.Hst.done@", Some(">Sیش"), "VHost2b");
    f.entry("VHost2", "@R.Pfx.bi@@D.Hst.done@@P.Ish.yes@@P.Hst.done@", Some("ش"), "VHost2b");
    clitic_entries(f, "VHost2", true, "VPre1");
    f.bridge("VHost2b", "VPre1");
    clitic_entries(f, "VHost2b", false, "VPre1");

    // Imperfective marker (position -1); only with no -2 prefix or after ne-.
    f.bridge("VPre1", "VStems");
    f.entry(
        "VPre1",
        "@U.As.imperf@@D.Pfx.de@@D.Pfx.na@@D.Pfx.bi@@D.Pfx.me@",
        Some("دە"),
        "VHost1",
    );
    f.bridge("VHost1", "VStems");
    f.entry("VHost1", "@D.Hst.done@@P.Ish.yes@@P.Hst.done@", Some(">Sیش"), "VHost1b");
    clitic_entries(f, "VHost1", true, "VStems");
    f.bridge("VHost1b", "VStems");
    clitic_entries(f, "VHost1b", false, "VStems");

    past_chains(f);
    present_chains(f);
    past_tags(f);
    present_tags(f);
}

/// Auxiliary + person + aye + postverb chains for past stems.
fn past_chains(f: &mut Frag) {
    // Intransitive: auxiliary slot.
    f.bridge("ViPastA", "ViPers4");
    f.entry("ViPastA", "@P.Ax.ib@@D.Pfx.bi@@D.As.imperf@", Some("ب"), "ViPers4");
    f.entry("ViPastA", "@P.Ax.u@@D.Pfx.bi@@D.As.imperf@", Some(">Uوو"), "ViPers5");
    f.entry("ViPastA", "@P.Ax.ibet@@D.Pfx.bi@@D.As.imperf@", Some("بێت"), "ViPers4");
    f.entry("ViPastA", "@P.Ax.ibu@@D.As.imperf@", Some("بوو"), "ViPers4");
    // Non-standard fusion of perfect -uwete(we) to -ote(we).
    f.entry(
        "ViPastA",
        "@P.Ax.u@@D.Pfx.bi@@D.As.imperf@@P.Su.3s@@P.NS.yes@@P.PV.e@",
        Some("ۆتە"),
        "VTagsPast",
    );
    f.entry(
        "ViPastA",
        "@P.Ax.u@@D.Pfx.bi@@D.As.imperf@@P.Su.3s@@P.NS.yes@@P.PV.ewe@",
        Some("ۆتەوە"),
        "VTagsPast",
    );
    // Subject persons, set 4 (third singular unmarked). Non-third persons
    // honor the third-only subject restriction.
    let set4: &[(&str, &str, &str)] = &[
        ("1s", "م", "@D.SP.3@"),
        ("2s", "یت", "@D.SP.3@"),
        ("3s", "", ""),
        ("1p", "ین", "@D.SP.3@"),
        ("2p", "ن", "@D.SP.3@"),
        ("3p", "ن", ""),
    ];
    for (p, surface, gate) in set4 {
        f.entry("ViPers4", &format!("{gate}@P.Su.{p}@"), Some(surface), "VAye");
    }
    // Word-final non-standard 2S drops the stop and closes the word.
    f.entry("ViPers4", "@D.SP.3@@P.Su.2s@@P.NS.yes@", Some("ی"), "VTagsPast");
    // Present perfect indicative persons (third singular -e).
    let set5: &[(&str, &str, &str)] = &[
        ("1s", "م", "@D.SP.3@"),
        ("2s", "یت", "@D.SP.3@"),
        ("3s", ">Cە", ""),
        ("1p", "ین", "@D.SP.3@"),
        ("2p", "ن", "@D.SP.3@"),
        ("3p", "ن", ""),
    ];
    for (p, surface, gate) in set5 {
        f.entry("ViPers5", &format!("{gate}@P.Su.{p}@"), Some(surface), "VPostPast");
    }

    // Transitive: same auxiliary slot, then agent and object slots.
    f.bridge("VtPastA", "VtAg");
    f.entry("VtPastA", "@P.Ax.ib@@D.Pfx.bi@@D.As.imperf@", Some("ب"), "VtAg");
    f.entry("VtPastA", "@P.Ax.u@@D.Pfx.bi@@D.As.imperf@", Some(">Uوو"), "VtAg");
    f.entry("VtPastA", "@P.Ax.ibet@@D.Pfx.bi@@D.As.imperf@", Some("بێت"), "VtAg");
    f.entry("VtPastA", "@P.Ax.ibu@@D.As.imperf@", Some("بوو"), "VtAg");
    // Agent after the stem only when no prefix hosted it; a third-singular
    // agent swaps to the far side of the object. The adverbial clitic may
    // sit here too when nothing earlier hosted it.
    f.entry("VtAg", "@D.Cl@@D.Ish.yes@@P.Ish.yes@", Some(">Sیش"), "VtAgB");
    f.bridge("VtAg", "VtObj");
    for (i, person) in PERSONS.iter().enumerate() {
        if *person == "3S" {
            continue;
        }
        let p = pid(person);
        f.entry("VtAg", &format!("@D.Cl@@P.Ag.{p}@"), Some(CLITIC_SURFACES[i]), "VtObj");
    }
    f.entry("VtAg", "@D.Cl@@P.Sw.yes@", None, "VtObjSwap");
    for (i, person) in PERSONS.iter().enumerate() {
        if *person == "3S" {
            continue;
        }
        let p = pid(person);
        f.entry("VtAgB", &format!("@P.Ag.{p}@"), Some(CLITIC_SURFACES[i]), "VtObj");
    }
    f.entry("VtAgB", "@P.Sw.yes@", None, "VtObjSwap");
    object_entries(f, "VtObj", "VAye");
    object_entries(f, "VtObjSwap", "VtAg3");
    f.entry("VtAg3", "@P.Ag.3s@", Some("ی"), "VAye");

    // Subjunctive aye and the past postverbs.
    f.entry("VAye", "@D.Pfx.bi@", None, "VPostPast");
    f.entry("VAye", "@P.Ay.yes@@R.Pfx.bi@@D.Ax@", Some(">Yایە"), "VPostPast");
    f.entry("VAye", "@P.Ay.yes@@R.Pfx.ne@@D.Ax@@D.As.imperf@", Some(">Yایە"), "VPostPast");
    f.entry("VAye", "@P.Ay.yes@@R.Ax.ibu@@D.Pfx.bi@", Some(">Yایە"), "VPostPast");
    f.entry("VPostPast", "@D.Ew.req@", None, "VTagsPast");
    f.entry("VPostPast", "@P.PV.ewe@", Some(">Vەوە"), "VTagsPast");
    f.entry("VPostPast", "@R.PvE.yes@@D.Ax.u@@P.PV.e@", Some(">Vێ"), "VTagsPast");
    f.entry("VPostPast", "@R.PvE.yes@@R.Ax.u@@P.PV.e@", Some(">Vە"), "VTagsPast");
}

/// Object suffixes of transitive past verbs. The unmarked third singular is
/// always available; the overt third singular î matches the perfective
/// paradigms. Person-class flags enforce the same-person restrictions and
/// the per-verb object-person limits.
fn object_entries(f: &mut Frag, lexicon: &str, cont: &str) {
    let objs: &[(&str, &str)] = &[
        ("1S", "م"),
        ("2S", "یت"),
        ("3S", "ی"),
        ("1P", "ین"),
        ("2P", "ن"),
        ("3P", "ن"),
    ];
    f.entry(lexicon, "@D.OP.no@@D.Ax.u@@P.Ob.3s@", None, cont);
    f.entry(lexicon, "@R.OP.no@@D.Ax.u@", None, cont);
    for (person, surface) in objs {
        let p = pid(person);
        let third = person_class(person) == "3";
        let op3 = if third && person.starts_with('3') && *person == "3S" { "" } else { "@D.OP.3@" };
        let gates = format!("{}{op3}@D.OP.no@", class_gate(person, true));
        f.entry(lexicon, &format!("{gates}@P.Ob.{p}@"), Some(surface), cont);
    }
    // Overt third-singular -e in the present perfect.
    f.entry(lexicon, "@R.Ax.u@@D.OP.no@@P.Ob.3s@", Some(">Cە"), cont);
}

/// Person suffixes of present/imperative stems and the present postverbs.
fn present_chains(f: &mut Frag) {
    let set3: &[(&str, &str)] = &[
        ("1S", "م"),
        ("2S", "یت"),
        ("3S", ">3ێت"),
        ("1P", "ین"),
        ("2P", "ن"),
        ("3P", "ن"),
    ];
    for (person, surface) in set3 {
        let p = pid(person);
        let mut gate = class_gate(person, false);
        if person_class(person) != "3" {
            gate.push_str("@D.SP.3@");
        }
        f.entry("VPresSfx", &format!("@D.Pfx.me@{gate}@P.Su.{p}@"), Some(surface), "VPostPres");
    }
    // Non-standard word-final 3S without the stop.
    f.entry("VPresSfx", "@D.Pfx.me@@P.Su.3s@@P.NS.yes@", Some(">3ێ"), "VTagsPres");
    // Imperative persons; positive imperative needs bi- or a dropped bi-
    // with a preverb, negative takes me-.
    for gate in ["@R.Pfx.bi@", "@R.Pfx.me@", "@R.Pfx.drop@"] {
        f.entry(
            "VPresSfx",
            &format!("{gate}@D.Cl.2s@@D.Cl.2p@@P.Md.imp@@P.Su.2s@"),
            Some(">Mە"),
            "VPostPres",
        );
        f.entry(
            "VPresSfx",
            &format!("{gate}@D.Cl.2s@@D.Cl.2p@@P.Md.imp@@P.Su.2p@"),
            Some(">Gن"),
            "VPostPres",
        );
    }
    f.entry("VPostPres", "@D.Ew.req@", None, "VTagsPres");
    f.entry("VPostPres", "@P.PV.ewe@", Some(">Vەوە"), "VTagsPres");
    f.entry("VPostPres", "@R.PvE.yes@@P.PV.e@", Some(">Vە"), "VTagsPres");
}

/// Schema-ordered tag emitters shared by both verb tag chains.
fn common_verb_tags(f: &mut Frag, from: &str, prefix: &str) {
    // subject
    let subj = format!("{prefix}Subj");
    let obj = format!("{prefix}Obj");
    let pv = format!("{prefix}Pv");
    let post = format!("{prefix}Post");
    let vc = format!("{prefix}Vc");
    let ns = format!("{prefix}Ns");
    for person in PERSONS {
        let p = pid(person);
        f.entry(from, &format!("@R.Su.{p}@@D.Rol.flip@{{Subj{person}}}"), Some("0"), &subj);
        f.entry(from, &format!("@R.Cl.{p}@@R.Rol.flip@{{Subj{person}}}"), Some("0"), &subj);
        // transitive past: the agent comes from the pre-stem clitic or the
        // post-stem slot
        f.entry(from, &format!("@R.Cl.{p}@@R.Tn.past@{{Subj{person}}}"), Some("0"), &subj);
        f.entry(from, &format!("@R.Ag.{p}@{{Subj{person}}}"), Some("0"), &subj);
    }
    f.entry(from, "@D.Su@@D.Cl@@D.Ag@", None, &subj);
    f.entry(from, "@R.Rol.flip@@D.Cl@", None, &subj);
    // displaced agent: suffixless transitive past
    f.entry(from, "@R.Tn.past@@D.Cl@@D.Ag@@D.Su@", None, &subj);
    for person in PERSONS {
        let p = pid(person);
        f.entry(&subj, &format!("@R.Ob.{p}@{{Obj{person}}}"), Some("0"), &obj);
        f.entry(
            &subj,
            &format!("@R.Cl.{p}@@D.Rol.flip@@D.Tn.past@{{Obj{person}}}"),
            Some("0"),
            &obj,
        );
        f.entry(&subj, &format!("@R.Su.{p}@@R.Rol.flip@{{Obj{person}}}"), Some("0"), &obj);
    }
    f.entry(&subj, "@D.Ob@@D.Cl@", None, &obj);
    f.entry(&subj, "@D.Ob@@R.Tn.past@", None, &obj);
    for (id, _) in PREVERBS {
        f.entry(&obj, &format!("@R.Pv.{id}@{{Preverb={id}}}"), Some("0"), &pv);
    }
    f.entry(&obj, "@D.Pv@", None, &pv);
    f.entry(&pv, "@R.PV.ewe@{Postverb=ewe}", Some("0"), &post);
    f.entry(&pv, "@R.PV.e@{Postverb=e}", Some("0"), &post);
    f.entry(&pv, "@D.PV@", None, &post);
    f.entry(&post, "@R.Ps.yes@{Pass}", Some("0"), &vc);
    f.entry(&post, "@D.Ps.yes@", None, &vc);
    f.entry(&vc, "@R.Cs.yes@{Caus}", Some("0"), &ns);
    f.entry(&vc, "@D.Cs.yes@", None, &ns);
    f.bridge(&ns, "TagJW");
}

fn past_tags(f: &mut Frag) {
    // clitic îş
    f.entry("VTagsPast", "@R.Ish.yes@{Clitic=îş}", Some("0"), "VTPa1");
    f.entry("VTagsPast", "@D.Ish.yes@", None, "VTPa1");
    // tense
    f.entry("VTPa1", "@D.As.imperf@@D.Ax@@D.Ay.yes@{PastSimple}", Some("0"), "VTPa2");
    f.entry("VTPa1", "@R.Ax.ib@@D.Ay.yes@{PastSimple}", Some("0"), "VTPa2");
    f.entry("VTPa1", "@R.As.imperf@{Imperf}", Some("0"), "VTPa2");
    f.entry("VTPa1", "@R.Ay.yes@@D.Ax@{Imperf}", Some("0"), "VTPa2");
    f.entry("VTPa1", "@R.Ax.u@{PrPerf}", Some("0"), "VTPa2");
    f.entry("VTPa1", "@R.Ax.ibet@{PrPerf}", Some("0"), "VTPa2");
    f.entry("VTPa1", "@R.Ax.ibu@@D.Ay.yes@{PsPerf}", Some("0"), "VTPa2");
    f.entry("VTPa1", "@R.Ax.ibu@@R.Ay.yes@{PsPerf}", Some("0"), "VTPa2");
    // mood
    f.entry("VTPa2", "@D.Pfx.bi@@D.Ax.ib@@D.Ax.ibet@@D.Ay.yes@{Ind}", Some("0"), "VTPa3");
    f.entry("VTPa2", "@R.Pfx.bi@{Subj}", Some("0"), "VTPa3");
    f.entry("VTPa2", "@D.Pfx.bi@@R.Ax.ib@{Subj}", Some("0"), "VTPa3");
    f.entry("VTPa2", "@D.Pfx.bi@@R.Ax.ibet@{Subj}", Some("0"), "VTPa3");
    f.entry("VTPa2", "@D.Pfx.bi@@D.Ax.ib@@D.Ax.ibet@@R.Ay.yes@{Subj}", Some("0"), "VTPa3");
    // polarity
    f.entry("VTPa3", "@D.Pfx.ne@{Pos}", Some("0"), "VTPa4");
    f.entry("VTPa3", "@R.Pfx.ne@{Neg}", Some("0"), "VTPa4");
    common_verb_tags(f, "VTPa4", "VTPa");
}

fn present_tags(f: &mut Frag) {
    f.entry("VTagsPres", "@R.Ish.yes@{Clitic=îş}", Some("0"), "VTPr1");
    f.entry("VTagsPres", "@D.Ish.yes@", None, "VTPr1");
    f.entry("VTPr1", "@D.Md.imp@{Pres}", Some("0"), "VTPr2");
    f.entry("VTPr1", "@R.Md.imp@", None, "VTPr2");
    f.entry("VTPr2", "@R.Pfx.de@{Ind}", Some("0"), "VTPr3");
    f.entry("VTPr2", "@R.Pfx.na@{Ind}", Some("0"), "VTPr3");
    f.entry("VTPr2", "@R.Pfx.bi@@D.Md.imp@{Subj}", Some("0"), "VTPr3");
    f.entry("VTPr2", "@R.Pfx.ne@{Subj}", Some("0"), "VTPr3");
    f.entry("VTPr2", "@R.Pfx.drop@@D.Md.imp@{Subj}", Some("0"), "VTPr3");
    f.entry("VTPr2", "@R.Md.imp@{Imp}", Some("0"), "VTPr3");
    f.entry("VTPr3", "@R.Pfx.de@{Pos}", Some("0"), "VTPr4");
    f.entry("VTPr3", "@R.Pfx.bi@{Pos}", Some("0"), "VTPr4");
    f.entry("VTPr3", "@R.Pfx.drop@{Pos}", Some("0"), "VTPr4");
    f.entry("VTPr3", "@R.Pfx.na@{Neg}", Some("0"), "VTPr4");
    f.entry("VTPr3", "@R.Pfx.ne@{Neg}", Some("0"), "VTPr4");
    f.entry("VTPr3", "@R.Pfx.me@{Neg}", Some("0"), "VTPr4");
    common_verb_tags(f, "VTPr4", "VTPr");
}

// ---------------------------------------------------------------------------
// Per-verb finite entries
// ---------------------------------------------------------------------------

/// Flags every stem entry of this verb carries: preverb valence, postverb
/// valence, person restrictions.
fn valence_flags(entry: &VerbEntry) -> String {
    let mut flags = String::new();
    for (id, _) in PREVERBS {
        if !entry.preverbs.iter().any(|p| p == id) {
            flags.push_str(&format!("@D.Pv.{id}@"));
        }
    }
    if !entry.bare_allowed {
        flags.push_str("@R.Pv@");
    }
    if entry.requires_ewe {
        flags.push_str("@P.Ew.req@");
    }
    if entry.postverb_e {
        flags.push_str("@P.PvE.yes@");
    }
    flags
}

fn restriction_flags(obj: PersonRestriction, subj: PersonRestriction) -> String {
    let mut flags = String::new();
    match obj {
        PersonRestriction::ThirdOnly => flags.push_str("@P.OP.3@"),
        PersonRestriction::None => flags.push_str("@P.OP.no@"),
        PersonRestriction::Any => {}
    }
    if subj == PersonRestriction::ThirdOnly {
        flags.push_str("@P.SP.3@");
    }
    flags
}

/// Gate applied to intransitive subject suffixes of restricted verbs lives
/// on the person entries; stems only set SP/OP. Subject restrictions for
/// vi/passive paths are enforced by requiring non-third persons to check
/// the SP flag, which is wired into the person entries via the stems'
/// continuation: vi stems with SP restrictions route to a gated copy.
const PAST_PFX_GATE: &str = "@D.Pfx.de@@D.Pfx.na@@D.Pfx.me@";
const PRES_PFX_GATE: &str = "@R.Pfx@@D.Pfx.none@";

fn emit_simple_verb(f: &mut Frag, entry: &VerbEntry) {
    match entry.special.as_deref() {
        Some("hebun") => {
            emit_hebun(f, entry);
            return;
        }
        Some("hatin") => emit_hatin_specials(f, entry),
        Some("wistin") => emit_wistin_specials(f, entry),
        Some("helstan") => {
            emit_helstan(f, entry);
            return;
        }
        Some("cho") => emit_cho_specials(f, entry),
        _ => {}
    }

    let stems = resolve_stems(entry);
    let lemma = &entry.lemma;
    let val = valence_flags(entry);
    let restr = restriction_flags(entry.object_person, entry.subject_person);
    let transitive = matches!(entry.transitivity, Transitivity::Vt | Transitivity::Onomatopoeic);

    // Finite past.
    let past_cont = if transitive { "VtPastA" } else { "ViPastA" };
    let vi_extra = if transitive { "" } else { "@D.Cl@" };
    for ps in &stems.past {
        if entry.special.as_deref() == Some("helhatin") && ps.is_empty() {
            continue;
        }
        f.entry(
            "VStems",
            &format!("{PAST_PFX_GATE}{val}{restr}{vi_extra}@U.Tn.past@{lemma}[VERB]"),
            Some(ps),
            past_cont,
        );
    }
    // Finite present (and imperative), unless an irregular paradigm
    // replaces it.
    let skip_pres = matches!(entry.special.as_deref(), Some("hatin"));
    if !skip_pres {
        let obj_none_extra = if entry.object_person == PersonRestriction::None && transitive {
            "@D.Cl@"
        } else {
            ""
        };
        let flip = if entry.special.as_deref() == Some("wistin") {
            "@R.Cl@@P.Rol.flip@"
        } else {
            ""
        };
        for prs in &stems.present {
            f.entry(
                "VStems",
                &format!(
                    "{PRES_PFX_GATE}{val}{restr}{vi_extra}{obj_none_extra}{flip}@U.Tn.pres@{lemma}[VERB]"
                ),
                Some(prs),
                "VPresSfx",
            );
            // bi-drop: subjunctive/imperative positive with a preverb.
            f.entry(
                "VStems",
                &format!(
                    "@R.Pfx.none@@R.Pv@@P.Pfx.drop@{val}{restr}{vi_extra}{obj_none_extra}{flip}@U.Tn.pres@{lemma}[VERB]"
                ),
                Some(prs),
                "VPresSfx",
            );
        }
    }
    // Passive: conjugates intransitively; inherits a third-only subject
    // when the active object was third-only.
    let pass_subj = if entry.object_person == PersonRestriction::ThirdOnly
        || entry.subject_person == PersonRestriction::ThirdOnly
    {
        "@P.SP.3@"
    } else {
        ""
    };
    for (ppast, ppres) in &stems.passive {
        f.entry(
            "VStems",
            &format!("{PAST_PFX_GATE}{val}{pass_subj}@D.Cl@@P.Ps.yes@@U.Tn.past@{lemma}[VERB]"),
            Some(ppast),
            "ViPastA",
        );
        f.entry(
            "VStems",
            &format!("{PRES_PFX_GATE}{val}{pass_subj}@D.Cl@@P.Ps.yes@@U.Tn.pres@{lemma}[VERB]"),
            Some(ppres),
            "VPresSfx",
        );
    }
    // Causative: transitive.
    for (cpast, cpres) in &stems.causative {
        f.entry(
            "VStems",
            &format!("{PAST_PFX_GATE}{val}@P.Cs.yes@@U.Tn.past@{lemma}[VERB]"),
            Some(cpast),
            "VtPastA",
        );
        f.entry(
            "VStems",
            &format!("{PRES_PFX_GATE}{val}@P.Cs.yes@@U.Tn.pres@{lemma}[VERB]"),
            Some(cpres),
            "VPresSfx",
        );
    }
    for (cppast, cppres) in &stems.causative_passive {
        f.entry(
            "VStems",
            &format!(
                "{PAST_PFX_GATE}{val}@D.Cl@@P.Cs.yes@@P.Ps.yes@@U.Tn.past@{lemma}[VERB]"
            ),
            Some(cppast),
            "ViPastA",
        );
        f.entry(
            "VStems",
            &format!(
                "{PRES_PFX_GATE}{val}@D.Cl@@P.Cs.yes@@P.Ps.yes@@U.Tn.pres@{lemma}[VERB]"
            ),
            Some(cppres),
            "VPresSfx",
        );
    }
    // Table 22 non-standard contractions for h- or hamza-initial present
    // stems: the prefix fuses with the stem onset.
    if !skip_pres {
        for prs in &stems.present {
            if let Some(rest) = contractable_rest(prs) {
                for (pfx, base) in
                    [("de", "دێ"), ("bi", "بێ"), ("na", "نایە"), ("ne", "نەیە"), ("me", "مەیە")]
                {
                    f.entry(
                        "VStems",
                        &format!(
                            "@R.Pfx.none@@P.Pfx.{pfx}@@P.NS.yes@{val}{restr}{vi_extra}@U.Tn.pres@{lemma}[VERB]"
                        ),
                        Some(&format!("{base}{rest}")),
                        "VPresSfx",
                    );
                }
            }
        }
    }

    emit_nominal_forms(f, entry, &stems);
}

/// For stems beginning هێ or ئێ, the part after the onset.
fn contractable_rest(present_stem: &str) -> Option<String> {
    let chars: Vec<char> = present_stem.chars().collect();
    if chars.len() >= 2 && (chars[0] == 'ه' || chars[0] == 'ئ') && chars[1] == 'ێ' {
        Some(chars[2..].iter().collect())
    } else {
        None
    }
}

// ---------------------------------------------------------------------------
// Irregular paradigms
// ---------------------------------------------------------------------------

/// hatin: suppletive present/imperative bases (Table-like paradigm around
/// the bare vowel stem). The third singular takes a plain ت.
fn emit_hatin_specials(f: &mut Frag, entry: &VerbEntry) {
    let lemma = &entry.lemma;
    let val = valence_flags(entry);
    for (pfx, base, ns) in [
        ("de", "دێ", ""),
        ("bi", "بێ", ""),
        ("na", "نایە", ""),
        ("ne", "نەیە", ""),
    ] {
        f.entry(
            "VStems",
            &format!("@R.Pfx.none@@P.Pfx.{pfx}@{ns}{val}@D.Cl@@U.Tn.pres@{lemma}[VERB]"),
            Some(base),
            "HatinSfx",
        );
    }
    let set: &[(&str, &str)] = &[
        ("1s", "م"),
        ("2s", "یت"),
        ("3s", "ت"),
        ("1p", "ین"),
        ("2p", "ن"),
        ("3p", "ن"),
    ];
    for (p, surface) in set {
        f.entry("HatinSfx", &format!("@P.Su.{p}@"), Some(surface), "VPostPres");
    }
    // Irregular imperative, from the wer- base.
    for (form, person) in [("وەرە", "2s"), ("وەرن", "2p")] {
        f.entry(
            "VStems",
            &format!(
                "@R.Pfx.none@@P.Pfx.drop@@P.Md.imp@@P.Su.{person}@{val}@D.Cl@@U.Tn.pres@{lemma}[VERB]"
            ),
            Some(form),
            "VPostPres",
        );
    }
    for (form, person) in [("مەیەر", "2s"), ("مەیەن", "2p")] {
        f.entry(
            "VStems",
            &format!(
                "@R.Pfx.none@@P.Pfx.me@@P.Md.imp@@P.Su.{person}@{val}@D.Cl@@U.Tn.pres@{lemma}[VERB]"
            ),
            Some(form),
            "VPostPres",
        );
    }
    // Fused heł-past: ran away.
    f.entry(
        "VStems",
        &format!("{PAST_PFX_GATE}@D.Pv@@P.Pv.heł@@D.Cl@@U.Tn.past@{lemma}[VERB]"),
        Some("هەڵات"),
        "ViPastA",
    );
}

/// wîstin: in the present the clitic marks the subject; with the subject
/// displaced the prefix fuses with the stem.
fn emit_wistin_specials(f: &mut Frag, entry: &VerbEntry) {
    let lemma = &entry.lemma;
    let val = valence_flags(entry);
    for (pfx, base) in [("de", "دەوێ"), ("na", "ناوێ")] {
        f.entry(
            "VStems",
            &format!(
                "@R.Pfx.none@@P.Pfx.{pfx}@@D.Cl@@P.Rol.flip@{val}@U.Tn.pres@{lemma}[VERB]"
            ),
            Some(base),
            "VPresSfx",
        );
    }
}

/// çûn: irregular 2S imperative biço.
fn emit_cho_specials(f: &mut Frag, entry: &VerbEntry) {
    let lemma = &entry.lemma;
    let val = valence_flags(entry);
    f.entry(
        "VStems",
        &format!(
            "@R.Pfx.none@@P.Pfx.bi@@P.Md.imp@@P.Su.2s@{val}@D.Cl@@U.Tn.pres@{lemma}[VERB]"
        ),
        Some("بچۆ"),
        "VPostPres",
    );
}

/// heł-stan: the past fuses to hesta-, the imperative to hest-.
fn emit_helstan(f: &mut Frag, entry: &VerbEntry) {
    let lemma = &entry.lemma;
    f.entry(
        "VStems",
        &format!("{PAST_PFX_GATE}@D.Pv@@P.Pv.heł@@D.Cl@@U.Tn.past@{lemma}[VERB]"),
        Some("هەستا"),
        "ViPastA",
    );
    // Present: regular preverbed conjugation of the st- stem.
    for prs in &entry.present_stems {
        f.entry(
            "VStems",
            &format!("{PRES_PFX_GATE}@R.Pv.heł@@D.Cl@@U.Tn.pres@{lemma}[VERB]"),
            Some(prs),
            "VPresSfx",
        );
    }
    // Imperative fuses: hest-in 'get up!'.
    for (person, surface) in [("2s", "هەستە"), ("2p", "هەستن")] {
        f.entry(
            "VStems",
            &format!(
                "@R.Pfx.none@@P.Pfx.drop@@D.Pv@@P.Pv.heł@@P.Md.imp@@P.Su.{person}@@D.Cl@@U.Tn.pres@{lemma}[VERB]"
            ),
            Some(surface),
            "VPostPres",
        );
    }
    // Infinitive heł-stan.
    f.entry(
        "VInfVi",
        &format!("@P.Nom.inf@@R.Pv.heł@{lemma}[NOUN]"),
        Some("ستان"),
        "VInfTail",
    );
}

/// hebûn: fully enumerated existential and possessive paradigms.
fn emit_hebun(f: &mut Frag, entry: &VerbEntry) {
    let lemma = &entry.lemma;
    let mut form = |lower: &str, tags: &str| {
        f.entry("VStems", &format!("@R.Pfx.none@{lemma}[VERB]{tags}"), Some(lower), "TagJW");
    };
    // To be / to exist.
    let set_pres: &[(&str, &str)] =
        &[("1S", "م"), ("2S", "یت"), ("3S", ">Eە"), ("1P", "ین"), ("2P", "ن"), ("3P", "ن")];
    for (person, sfx) in set_pres {
        form(&format!("هە{sfx}"), &format!("{{Pres}}{{Ind}}{{Pos}}{{Subj{person}}}"));
        form(&format!("نی{sfx}"), &format!("{{Pres}}{{Ind}}{{Neg}}{{Subj{person}}}"));
    }
    let set_subj: &[(&str, &str)] =
        &[("1S", "م"), ("2S", "یت"), ("3S", "ێت"), ("1P", "ین"), ("2P", "ن"), ("3P", "ن")];
    for (person, sfx) in set_subj {
        form(&format!("هەب{sfx}"), &format!("{{Pres}}{{Subj}}{{Pos}}{{Subj{person}}}"));
        form(&format!("نەب{sfx}"), &format!("{{Pres}}{{Subj}}{{Neg}}{{Subj{person}}}"));
    }
    let set4: &[(&str, &str)] =
        &[("1S", "م"), ("2S", "یت"), ("3S", ""), ("1P", "ین"), ("2P", "ن"), ("3P", "ن")];
    for (person, sfx) in set4 {
        form(&format!("هەبوو{sfx}"), &format!("{{PastSimple}}{{Ind}}{{Pos}}{{Subj{person}}}"));
        form(&format!("نەبوو{sfx}"), &format!("{{PastSimple}}{{Ind}}{{Neg}}{{Subj{person}}}"));
        form(
            &format!("هەبوو{sfx}>Yایە"),
            &format!("{{PastSimple}}{{Subj}}{{Pos}}{{Subj{person}}}"),
        );
        form(
            &format!("هەبووبێت{sfx}"),
            &format!("{{PrPerf}}{{Subj}}{{Pos}}{{Subj{person}}}"),
        );
    }
    form("هەبووە", "{PrPerf}{Ind}{Pos}{Subj3S}");
    form("نەبووە", "{PrPerf}{Ind}{Neg}{Subj3S}");

    // To have: agent clitic inside; objects third-singular -e, unmarked,
    // or plural -in; third-singular agents swap after the object.
    for (i, agent) in PERSONS.iter().enumerate() {
        let cl = CLITIC_SURFACES[i];
        if *agent == "3S" {
            continue;
        }
        for (obj, osfx) in [("3S", ">Eە"), ("3S", ""), ("3P", "ن")] {
            form(
                &format!("هە{cl}{osfx}"),
                &format!("{{Pres}}{{Ind}}{{Pos}}{{Subj{agent}}}{{Obj{obj}}}"),
            );
            form(
                &format!("نی{cl}{osfx}"),
                &format!("{{Pres}}{{Ind}}{{Neg}}{{Subj{agent}}}{{Obj{obj}}}"),
            );
        }
        form(&format!("هە{cl}بێت"), &format!("{{Pres}}{{Subj}}{{Pos}}{{Subj{agent}}}{{Obj3S}}"));
        form(
            &format!("هە{cl}بوو"),
            &format!("{{PastSimple}}{{Ind}}{{Pos}}{{Subj{agent}}}{{Obj3S}}"),
        );
        form(
            &format!("هە{cl}بوو>Yایە"),
            &format!("{{PastSimple}}{{Subj}}{{Pos}}{{Subj{agent}}}{{Obj3S}}"),
        );
        form(
            &format!("هە{cl}بووە"),
            &format!("{{PrPerf}}{{Ind}}{{Pos}}{{Subj{agent}}}{{Obj3S}}"),
        );
        form(
            &format!("هە{cl}بووبێت"),
            &format!("{{PrPerf}}{{Subj}}{{Pos}}{{Subj{agent}}}{{Obj3S}}"),
        );
    }
    // Third-singular agent paradigms with the swap and epentheses.
    let swap: &[(&str, &str)] = &[
        ("1S", "هەمی"),
        ("2S", "هەیتی"),
        ("3S", "هە>Eەتی"),
        ("1P", "هەینی"),
        ("2P", "هەنی"),
        ("3P", "هەنی"),
    ];
    for (obj, lower) in swap {
        form(lower, &format!("{{Pres}}{{Ind}}{{Pos}}{{Subj3S}}{{Obj{obj}}}"));
    }
    let _ = entry;
}

// ---------------------------------------------------------------------------
// Non-finite patterns
// ---------------------------------------------------------------------------

fn nominal_scaffold(f: &mut Frag) {
    f.bridge(VERB_NOMINAL, "VInfStart");
    f.bridge(VERB_NOMINAL, "VPpStart");
    f.entry(VERB_NOMINAL, "خۆ", None, "XoTargets");
    f.bridge(VERB_NOMINAL, "CmpStems");

    f.bridge("VInfStart", "VInfNeg");
    for (id, surface) in PREVERBS {
        f.entry("VInfStart", &format!("@P.Pv.{id}@"), Some(surface), "VInfNeg");
    }
    f.bridge("VInfNeg", "VInfStems");
    f.entry("VInfNeg", "@P.Ng.yes@", Some("نە"), "VInfStems");
    f.bridge("VInfStems", "VInfVi");
    f.bridge("VInfStems", "VInfVt");
    f.entry("VInfTail", "@D.Ew.req@", None, "NomTags");
    f.entry("VInfTail", "@P.PV.ewe@", Some(">Vەوە"), "NomTags");

    f.bridge("VPpStart", "VPpNeg");
    for (id, surface) in PREVERBS {
        f.entry("VPpStart", &format!("@P.Pv.{id}@"), Some(surface), "VPpNeg");
    }
    f.bridge("VPpNeg", "VPpStems");
    f.entry("VPpNeg", "@P.Ng.yes@", Some("نە"), "VPpStems");
    f.bridge("VPpTail", "NomTags");
    f.entry("VPpTail", "@P.Cm.cmp@", Some("تر"), "NomTags");
    f.entry("VPpTail", "@P.Cm.sup@", Some("ترین"), "NomTags");

    // xo- compounds: transitive infinitives and adjective compounds.
    f.bridge("XoTargets", "VInfVt");
    f.bridge("XoTargets", "XoAdj");
}

fn emit_nominal_forms(f: &mut Frag, entry: &VerbEntry, stems: &crate::ingest::VerbStems) {
    let lemma = &entry.lemma;
    let val = valence_flags(entry);
    let transitive = matches!(entry.transitivity, Transitivity::Vt);
    let inf_lex = if transitive { "VInfVt" } else { "VInfVi" };
    let ewe = if entry.requires_ewe { "@P.Ew.req@" } else { "" };

    for ps in &stems.past {
        f.entry(
            inf_lex,
            &format!("@P.Nom.inf@{val}{ewe}{lemma}[NOUN]"),
            Some(&format!("{ps}ن")),
            "VInfTail",
        );
    }
    for (ppast, _) in &stems.passive {
        f.entry(
            "VInfVi",
            &format!("@P.Nom.inf@@P.Ps.yes@{val}{lemma}[NOUN]"),
            Some(&format!("{ppast}ن")),
            "VInfTail",
        );
    }
    for (cpast, _) in &stems.causative {
        f.entry(
            "VInfVt",
            &format!("@P.Nom.inf@@P.Cs.yes@{val}{lemma}[NOUN]"),
            Some(&format!("{cpast}ن")),
            "VInfTail",
        );
    }
    for (cppast, _) in &stems.causative_passive {
        f.entry(
            "VInfVi",
            &format!("@P.Nom.inf@@P.Ps.yes@@P.Cs.yes@{val}{lemma}[NOUN]"),
            Some(&format!("{cppast}ن")),
            "VInfTail",
        );
    }

    // Free past participles: intransitives and passives only.
    if !transitive && entry.transitivity != Transitivity::Onomatopoeic {
        for ps in &stems.past {
            f.entry(
                "VPpStems",
                &format!("@P.Nom.pp@{val}{lemma}[ADJ]"),
                Some(&format!("{ps}>Uوو")),
                "VPpTail",
            );
        }
    }
    for (ppast, _) in &stems.passive {
        f.entry(
            "VPpStems",
            &format!("@P.Nom.pp@@P.Ps.yes@{val}{lemma}[ADJ]"),
            Some(&format!("{ppast}>Uوو")),
            "VPpTail",
        );
    }
}

/// Agent-noun surface from a present stem.
fn agent_surface(present_stem: &str) -> String {
    let last = present_stem.chars().last();
    match last {
        Some('ە') | Some('ۆ') => format!("{present_stem}ر"),
        _ => present_stem.to_string(),
    }
}

fn emit_compound(f: &mut Frag, entry: &VerbEntry) {
    let nv = entry.nonverbal.clone().unwrap_or_default();
    let stems = resolve_stems(entry);
    let lemma = format!("{nv}{}", entry.lemma);
    let verbal_vt = matches!(entry.transitivity, Transitivity::Vt);
    let compound_vt = entry
        .compound_transitivity
        .map(|t| matches!(t, Transitivity::Vt))
        .unwrap_or(verbal_vt);
    let key = format!("Cmp{}", entry.line);
    let neg = format!("{key}Neg");
    let verb = format!("{key}V");

    f.entry("CmpStems", "", Some(&nv), &neg);
    f.bridge(&neg, &verb);
    f.entry(&neg, "@P.Ng.yes@", Some("نە"), &verb);

    // Infinitives.
    for ps in &stems.past {
        f.entry(
            &verb,
            &format!("@P.Nom.inf@{lemma}[NOUN]"),
            Some(&format!("{ps}ن")),
            "VInfTail",
        );
    }
    for (ppast, _) in &stems.passive {
        f.entry(
            &verb,
            &format!("@P.Nom.inf@@P.Ps.yes@{lemma}[NOUN]"),
            Some(&format!("{ppast}ن")),
            "VInfTail",
        );
    }
    for (cpast, _) in &stems.causative {
        f.entry(
            &verb,
            &format!("@P.Nom.inf@@P.Cs.yes@{lemma}[NOUN]"),
            Some(&format!("{cpast}ن")),
            "VInfTail",
        );
    }

    // Past participles: from the passive stem when both the verbal part and
    // the compound are transitive, otherwise from the past stem.
    if compound_vt && verbal_vt {
        for (ppast, _) in &stems.passive {
            f.entry(
                &verb,
                &format!("@P.Nom.pp@@P.Ps.yes@{lemma}[ADJ]"),
                Some(&format!("{ppast}>Uوو")),
                "VPpTail",
            );
        }
    } else {
        for ps in &stems.past {
            f.entry(
                &verb,
                &format!("@P.Nom.pp@{lemma}[ADJ]"),
                Some(&format!("{ps}>Uوو")),
                "VPpTail",
            );
        }
    }

    // Agent nouns: from the present stem for transitive verbal parts, from
    // the causative present stem for intransitive ones.
    if verbal_vt {
        for prs in &stems.present {
            f.entry(
                &verb,
                &format!("@P.Nom.ag@{lemma}[ADJ]"),
                Some(&agent_surface(prs)),
                "VPpTail",
            );
        }
    } else {
        for (_, cpres) in &stems.causative {
            f.entry(
                &verb,
                &format!("@P.Nom.ag@{lemma}[ADJ]"),
                Some(cpres),
                "VPpTail",
            );
        }
    }
}

/// The xo- targets include every adjective, emitted by the stem section
/// into this lexicon, which continues into the adjective-compound chain.
pub const XO_ADJ_LEXICON: &str = "XoAdj";
