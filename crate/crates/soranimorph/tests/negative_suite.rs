//! Negative suite: starred ill-formed words must receive zero analyses.

mod common;

/// (romanized-or-script form, what rules it out)
const STARRED: &[(&str, &str)] = &[
    ("wintir", "non-gradable adjective with comparative"),
    ("demanřwanîn", "object clitic on a prepositional-object verb"),
    ("xwardû", "free past participle of a plain transitive"),
    ("demnasim", "first-person subject and object together"),
    ("detannasît", "second-person subject and object together"),
    ("xomman", "reflexive with matching first-person clitics"),
    ("xottan", "reflexive with matching second-person clitics"),
    ("xoyyan", "reflexive with matching third-person clitics"),
    ("yektirim", "reciprocal with a singular clitic"),
    ("demangutin", "non-third object on gutin"),
    ("dezanrayn", "non-third subject on the passive of zanîn"),
    ("werzanîn", "disallowed preverb"),
    ("şardin", "compulsory -ewe missing"),
    ("wasîn", "bound stem without its preverb"),
    ("kewtimê", "directional postverb on a verb without that valence"),
];

#[test]
fn starred_forms_have_zero_analyses() {
    let h = common::handle();
    let mut failures = Vec::new();
    for (form, why) in STARRED {
        let script = common::to_script(form);
        let analyses = h.analyze(&script);
        if !analyses.is_empty() {
            failures.push(format!(
                "{form} ({script}) [{why}] wrongly analyzed: {:?}",
                analyses.iter().map(|a| a.to_line(&script)).collect::<Vec<_>>()
            ));
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn positive_controls_for_the_starred_families() {
    // Each restriction has a nearby well-formed form that must analyze,
    // so the zero results above come from the gates, not from gaps.
    let h = common::handle();
    for form in [
        "berztir",      // gradable comparative
        "demanřwanî",   // agent clitic without an object marker
        "pengxwardû",   // compound past participle
        "demnasît",     // first-person object, second-person subject
        "xotman",       // reflexive with distinct person classes
        "yektirman",    // reciprocal with a plural clitic
        "hełwasîn",     // the bound stem with its preverb
        "şardinewe",    // the compulsory -ewe present
        "geyştimê",     // the directional postverb where licensed
    ] {
        let script = common::to_script(form);
        assert!(
            !h.analyze(&script).is_empty(),
            "control form {form} ({script}) unexpectedly has no analyses"
        );
    }
}
