//! Typed symbols and the interned symbol table shared by all transducers.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

/// Flag diacritic operator, one per letter of the `@OP.Feature.Value@` form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FlagOp {
    /// `@U.F.V@` unify: succeeds iff F is unset or already V, and sets V.
    Unify,
    /// `@R.F.V@` require: succeeds iff F = V. `@R.F@` requires F to be set.
    Require,
    /// `@D.F.V@` disallow: succeeds iff F != V. `@D.F@` requires F unset.
    Disallow,
    /// `@P.F.V@` positive set: always succeeds, sets V.
    Positive,
    /// `@C.F@` clear: always succeeds, unsets F.
    Clear,
    /// `@N.F.V@` negative set: binds "not V".
    Negative,
}

impl FlagOp {
    pub fn letter(self) -> char {
        match self {
            FlagOp::Unify => 'U',
            FlagOp::Require => 'R',
            FlagOp::Disallow => 'D',
            FlagOp::Positive => 'P',
            FlagOp::Clear => 'C',
            FlagOp::Negative => 'N',
        }
    }

    fn from_letter(c: char) -> Option<FlagOp> {
        Some(match c {
            'U' => FlagOp::Unify,
            'R' => FlagOp::Require,
            'D' => FlagOp::Disallow,
            'P' => FlagOp::Positive,
            'C' => FlagOp::Clear,
            'N' => FlagOp::Negative,
            _ => return None,
        })
    }
}

/// A parsed flag diacritic such as `@U.Word.vi@`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Flag {
    pub op: FlagOp,
    pub feature: String,
    pub value: Option<String>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FlagParseError {
    #[error("not a flag diacritic: {0}")]
    NotAFlag(String),
    #[error("unknown flag operator in {0}")]
    UnknownOp(String),
    #[error("malformed flag diacritic: {0}")]
    Malformed(String),
}

impl Flag {
    /// Parses the exact `@OP.Feature.Value@` / `@OP.Feature@` form.
    /// Round-trips byte-identically through [`Flag::to_string`].
    pub fn parse(text: &str) -> Result<Flag, FlagParseError> {
        let inner = text
            .strip_prefix('@')
            .and_then(|t| t.strip_suffix('@'))
            .ok_or_else(|| FlagParseError::NotAFlag(text.to_string()))?;
        let mut parts = inner.split('.');
        let op_part = parts.next().unwrap_or("");
        let mut chars = op_part.chars();
        let (op_char, rest) = (chars.next(), chars.next());
        if rest.is_some() || op_char.is_none() {
            return Err(FlagParseError::Malformed(text.to_string()));
        }
        let op = FlagOp::from_letter(op_char.unwrap())
            .ok_or_else(|| FlagParseError::UnknownOp(text.to_string()))?;
        let feature = parts
            .next()
            .filter(|f| !f.is_empty())
            .ok_or_else(|| FlagParseError::Malformed(text.to_string()))?
            .to_string();
        let value = parts.next().map(|v| v.to_string());
        if parts.next().is_some() || value.as_deref() == Some("") {
            return Err(FlagParseError::Malformed(text.to_string()));
        }
        match op {
            FlagOp::Clear if value.is_some() => {
                return Err(FlagParseError::Malformed(text.to_string()))
            }
            FlagOp::Unify | FlagOp::Positive | FlagOp::Negative if value.is_none() => {
                return Err(FlagParseError::Malformed(text.to_string()))
            }
            _ => {}
        }
        Ok(Flag { op, feature, value })
    }
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            Some(v) => write!(f, "@{}.{}.{}@", self.op.letter(), self.feature, v),
            None => write!(f, "@{}.{}@", self.op.letter(), self.feature),
        }
    }
}

/// The typed alphabet element. `Zero` is a kept pair-alignment placeholder,
/// distinct from `Epsilon` which never appears in two-level pair strings.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Epsilon,
    Zero,
    Other,
    /// One user-perceived character.
    Grapheme(String),
    /// Multichar token such as `[NOUN]`, `{1SG}` or a boundary marker.
    Tag(String),
    Flag(Flag),
}

impl Symbol {
    pub fn grapheme(c: char) -> Symbol {
        Symbol::Grapheme(c.to_string())
    }

    pub fn tag(t: &str) -> Symbol {
        Symbol::Tag(t.to_string())
    }

    pub fn is_flag(&self) -> bool {
        matches!(self, Symbol::Flag(_))
    }

    /// Rank used for the canonical symbol ordering.
    fn kind_rank(&self) -> u8 {
        match self {
            Symbol::Epsilon => 0,
            Symbol::Zero => 1,
            Symbol::Other => 2,
            Symbol::Grapheme(_) => 3,
            Symbol::Tag(_) => 4,
            Symbol::Flag(_) => 5,
        }
    }

    /// Canonical total order: by kind, then by textual form.
    pub fn canonical_cmp(&self, other: &Symbol) -> std::cmp::Ordering {
        self.kind_rank()
            .cmp(&other.kind_rank())
            .then_with(|| self.display_text().cmp(&other.display_text()))
    }

    pub fn display_text(&self) -> String {
        match self {
            Symbol::Epsilon => "<eps>".to_string(),
            Symbol::Zero => "0".to_string(),
            Symbol::Other => "<other>".to_string(),
            Symbol::Grapheme(s) | Symbol::Tag(s) => s.clone(),
            Symbol::Flag(fl) => fl.to_string(),
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_text())
    }
}

/// Compact id into a [`SymbolTable`]. Ids 0..=2 are reserved for
/// epsilon, zero and the OTHER placeholder in every table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymId(pub u32);

pub const EPSILON: SymId = SymId(0);
pub const ZERO: SymId = SymId(1);
pub const OTHER: SymId = SymId(2);

/// Grammar-global interning table.
#[derive(Debug, Clone, Default)]
pub struct SymbolTable {
    syms: Vec<Symbol>,
    index: HashMap<Symbol, SymId>,
}

impl SymbolTable {
    pub fn new() -> SymbolTable {
        let mut t = SymbolTable { syms: Vec::new(), index: HashMap::new() };
        t.intern(Symbol::Epsilon);
        t.intern(Symbol::Zero);
        t.intern(Symbol::Other);
        t
    }

    pub fn intern(&mut self, sym: Symbol) -> SymId {
        if let Some(&id) = self.index.get(&sym) {
            return id;
        }
        let id = SymId(self.syms.len() as u32);
        self.syms.push(sym.clone());
        self.index.insert(sym, id);
        id
    }

    pub fn get(&self, id: SymId) -> &Symbol {
        &self.syms[id.0 as usize]
    }

    pub fn lookup(&self, sym: &Symbol) -> Option<SymId> {
        self.index.get(sym).copied()
    }

    pub fn len(&self) -> usize {
        self.syms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (SymId, &Symbol)> {
        self.syms.iter().enumerate().map(|(i, s)| (SymId(i as u32), s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flag_round_trip_is_byte_identical() {
        for text in ["@U.Word.vi@", "@R.PreVerb.wer@", "@C.Obj@", "@D.Grad.no@", "@N.X.y@"] {
            let f = Flag::parse(text).unwrap();
            assert_eq!(f.to_string(), text);
        }
    }

    #[test]
    fn flag_rejects_malformed() {
        assert!(Flag::parse("@Q.F.V@").is_err());
        assert!(Flag::parse("@U.F@").is_err());
        assert!(Flag::parse("@C.F.V@").is_err());
        assert!(Flag::parse("U.F.V").is_err());
        assert!(Flag::parse("@U..x@").is_err());
        assert!(Flag::parse("@U.F.V.W@").is_err());
    }

    #[test]
    fn table_reserves_special_ids() {
        let t = SymbolTable::new();
        assert_eq!(t.lookup(&Symbol::Epsilon), Some(EPSILON));
        assert_eq!(t.lookup(&Symbol::Zero), Some(ZERO));
        assert_eq!(t.lookup(&Symbol::Other), Some(OTHER));
    }

    #[test]
    fn interning_is_idempotent() {
        let mut t = SymbolTable::new();
        let a = t.intern(Symbol::grapheme('a'));
        let b = t.intern(Symbol::grapheme('a'));
        assert_eq!(a, b);
        assert_eq!(t.get(a), &Symbol::grapheme('a'));
    }
}
