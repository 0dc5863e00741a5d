//! Shared vocabulary of the grammar sources: boundary symbols, person
//! tables, and the fragment builder that accumulates lexicon sections.

use std::collections::BTreeSet;

/// Morpheme-boundary symbols on the morphophonemic tape; all realize as
/// zero on the surface. Rule contexts anchor on them.
pub const BOUNDARIES: &[&str] = &[
    ">K", // definite eke/ekan
    ">X", // indefinite êk
    ">A", // plural an
    ">E", // e that glides after vowels (demonstrative, copula 3S)
    ">I", // definite-izafe e (drops after vowels)
    ">W", // nominal circumposition ewe
    ">V", // verbal postverb ewe / e
    ">S", // adverbial clitic îş
    ">U", // û of past participle / present perfect
    ">O", // ordinal em / emîn
    ">H", // non-standard ordinal hem / hemîn
    ">M", // imperative person suffix
    ">3", // present 3SG êt
    ">Y", // subjunctive aye
    ">C", // perfect-final e (epenthesis host before postverbs)
    ">G", // generic juncture, no rules fire
];

/// Person ids in schema order.
pub const PERSONS: &[&str] = &["1S", "2S", "3S", "1P", "2P", "3P"];

/// Pronominal clitic surfaces (possessive / argument / past-transitive
/// subject set), per person.
pub const CLITIC_SURFACES: &[&str] = &["م", "ت", "ی", "مان", "تان", "یان"];

/// Copula surfaces per person; 3S is the >E-bounded e.
pub const COPULA_SURFACES: &[&str] = &["م", "یت", ">Eە", "ین", "ن", "ن"];

/// Subject suffixes of present verbs; 3S is the >3-bounded êt.
pub const PRESENT_SUBJECT_SURFACES: &[&str] = &["م", "یت", ">3ێت", "ین", "ن", "ن"];

/// Subject suffixes of intransitive past / object suffixes of transitive
/// past; 3S is unmarked.
pub const PAST_PERSON_SURFACES: &[&str] = &["م", "یت", "", "ین", "ن", "ن"];

/// Person class (1/2/3) of a person id, for the same-person restrictions.
pub fn person_class(person: &str) -> &'static str {
    match &person[..1] {
        "1" => "1",
        "2" => "2",
        _ => "3",
    }
}

/// Preverbs: (id used in flags/tags, surface).
pub const PREVERBS: &[(&str, &str)] = &[
    ("heł", "هەڵ"),
    ("da", "دا"),
    ("řa", "ڕا"),
    ("der", "دەر"),
    ("řo", "ڕۆ"),
    ("wer", "وەر"),
    ("ser", "سەر"),
];

/// Accumulates lexicon sections and their multichar declarations.
#[derive(Debug, Default)]
pub struct Frag {
    pub multichars: BTreeSet<String>,
    lexicons: Vec<(String, Vec<String>)>,
}

impl Frag {
    pub fn new() -> Frag {
        Frag::default()
    }

    fn scan_declarables(&mut self, s: &str) {
        let chars: Vec<char> = s.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            match chars[i] {
                '[' | '{' | '@' => {
                    let close = match chars[i] {
                        '[' => ']',
                        '{' => '}',
                        _ => '@',
                    };
                    let mut j = i + 1;
                    while j < chars.len() && chars[j] != close {
                        j += 1;
                    }
                    if j < chars.len() {
                        let token: String = chars[i..=j].iter().collect();
                        self.multichars.insert(token);
                        i = j + 1;
                        continue;
                    }
                    i += 1;
                }
                '>' if i + 1 < chars.len() => {
                    let token: String = chars[i..=i + 1].iter().collect();
                    self.multichars.insert(token);
                    i += 2;
                }
                _ => i += 1,
            }
        }
    }

    fn lexicon_mut(&mut self, name: &str) -> &mut Vec<String> {
        if let Some(pos) = self.lexicons.iter().position(|(n, _)| n == name) {
            return &mut self.lexicons[pos].1;
        }
        self.lexicons.push((name.to_string(), Vec::new()));
        &mut self.lexicons.last_mut().unwrap().1
    }

    /// Adds `upper:lower continuation ;`. Empty upper and lower make a pure
    /// continuation entry; an empty side is spelled `0`.
    pub fn entry(&mut self, lexicon: &str, upper: &str, lower: Option<&str>, cont: &str) {
        self.scan_declarables(upper);
        if let Some(l) = lower {
            self.scan_declarables(l);
        }
        let field = match lower {
            None if upper.is_empty() => String::new(),
            None => format!("{upper} "),
            Some(l) => {
                let u = if upper.is_empty() { "0" } else { upper };
                let low = if l.is_empty() { "0" } else { l };
                format!("{u}:{low} ")
            }
        };
        let line = format!("  {field}{cont} ;");
        self.lexicon_mut(lexicon).push(line);
    }

    /// Pure continuation bridge.
    pub fn bridge(&mut self, lexicon: &str, cont: &str) {
        self.entry(lexicon, "", None, cont);
    }

    /// Merges another fragment after this one.
    pub fn merge(&mut self, other: Frag) {
        self.multichars.extend(other.multichars);
        for (name, lines) in other.lexicons {
            self.lexicon_mut(&name).extend(lines);
        }
    }

    /// Renders the complete lexicon source document.
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str("Multichar_Symbols\n");
        for m in &self.multichars {
            out.push_str("  ");
            out.push_str(m);
            out.push('\n');
        }
        for (name, lines) in &self.lexicons {
            out.push_str("\nLEXICON ");
            out.push_str(name);
            out.push('\n');
            for line in lines {
                out.push_str(line);
                out.push('\n');
            }
        }
        out
    }

    pub fn has_lexicon(&self, name: &str) -> bool {
        self.lexicons.iter().any(|(n, _)| n == name)
    }
}
