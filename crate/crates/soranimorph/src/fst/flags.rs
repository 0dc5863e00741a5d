//! Flag-diacritic evaluation. A `FlagEnv` is per-traversal state: applying a
//! flag either yields a new environment or rejects the path; the input
//! environment is never mutated.

use std::collections::BTreeMap;

use super::symbol::{Flag, FlagOp};

/// A feature binding. `Neg` records a negative setting that `R` rejects and
/// `D` accepts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Binding {
    Pos(String),
    Neg(String),
}

/// Immutable map from feature to binding; absent means unset.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FlagEnv {
    bindings: BTreeMap<String, Binding>,
}

impl FlagEnv {
    pub fn new() -> FlagEnv {
        FlagEnv::default()
    }

    pub fn get(&self, feature: &str) -> Option<&Binding> {
        self.bindings.get(feature)
    }

    /// Pure application: `Some(env')` on success, `None` when the path must
    /// be rejected.
    pub fn apply(&self, flag: &Flag) -> Option<FlagEnv> {
        let cur = self.bindings.get(&flag.feature);
        let val = flag.value.as_deref();
        match flag.op {
            FlagOp::Unify => {
                let v = val.expect("unify flags carry a value");
                match cur {
                    None => Some(self.with(flag.feature.clone(), Binding::Pos(v.to_string()))),
                    Some(Binding::Pos(w)) if w == v => Some(self.clone()),
                    Some(Binding::Pos(_)) => None,
                    // A negative binding is compatible with any other value.
                    Some(Binding::Neg(w)) if w != v => {
                        Some(self.with(flag.feature.clone(), Binding::Pos(v.to_string())))
                    }
                    Some(Binding::Neg(_)) => None,
                }
            }
            FlagOp::Require => match (cur, val) {
                (Some(Binding::Pos(w)), Some(v)) if w == v => Some(self.clone()),
                (Some(_), None) => Some(self.clone()),
                _ => None,
            },
            FlagOp::Disallow => match (cur, val) {
                (Some(Binding::Pos(w)), Some(v)) if w == v => None,
                (Some(_), None) => None,
                (None, None) => Some(self.clone()),
                _ => Some(self.clone()),
            },
            FlagOp::Positive => {
                let v = val.expect("positive flags carry a value");
                Some(self.with(flag.feature.clone(), Binding::Pos(v.to_string())))
            }
            FlagOp::Clear => {
                let mut next = self.clone();
                next.bindings.remove(&flag.feature);
                Some(next)
            }
            FlagOp::Negative => {
                let v = val.expect("negative flags carry a value");
                Some(self.with(flag.feature.clone(), Binding::Neg(v.to_string())))
            }
        }
    }

    fn with(&self, feature: String, binding: Binding) -> FlagEnv {
        let mut next = self.clone();
        next.bindings.insert(feature, binding);
        next
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fst::symbol::Flag;

    fn f(s: &str) -> Flag {
        Flag::parse(s).unwrap()
    }

    #[test]
    fn unify_sets_then_requires_same_value() {
        let env = FlagEnv::new();
        let env = env.apply(&f("@U.W.vi@")).unwrap();
        assert!(env.apply(&f("@U.W.vi@")).is_some());
        assert!(env.apply(&f("@U.W.vt@")).is_none());
    }

    #[test]
    fn require_matches_exact_value_only() {
        let env = FlagEnv::new().apply(&f("@P.W.vi@")).unwrap();
        assert!(env.apply(&f("@R.W.vi@")).is_some());
        assert!(env.apply(&f("@R.W.vt@")).is_none());
        assert!(FlagEnv::new().apply(&f("@R.W.vi@")).is_none());
        // Valueless require: feature must be set.
        assert!(env.apply(&f("@R.W@")).is_some());
        assert!(FlagEnv::new().apply(&f("@R.W@")).is_none());
    }

    #[test]
    fn disallow_rejects_matching_value_including_set() {
        let env = FlagEnv::new().apply(&f("@P.W.vi@")).unwrap();
        assert!(env.apply(&f("@D.W.vi@")).is_none());
        assert!(env.apply(&f("@D.W.vt@")).is_some());
        assert!(FlagEnv::new().apply(&f("@D.W.vi@")).is_some());
        // Valueless disallow: feature must be unset.
        assert!(env.apply(&f("@D.W@")).is_none());
        assert!(FlagEnv::new().apply(&f("@D.W@")).is_some());
    }

    #[test]
    fn clear_unsets() {
        let env = FlagEnv::new().apply(&f("@P.W.vi@")).unwrap();
        let env = env.apply(&f("@C.W@")).unwrap();
        assert!(env.apply(&f("@R.W.vi@")).is_none());
        assert!(env.apply(&f("@D.W.vi@")).is_some());
    }

    #[test]
    fn negative_binding_rejected_by_require_accepted_by_disallow() {
        let env = FlagEnv::new().apply(&f("@N.W.vi@")).unwrap();
        assert!(env.apply(&f("@R.W.vi@")).is_none());
        assert!(env.apply(&f("@D.W.vi@")).is_some());
        // Unify against an incompatible negative binding fails...
        assert!(env.apply(&f("@U.W.vi@")).is_none());
        // ...but succeeds for a different value.
        assert!(env.apply(&f("@U.W.vt@")).is_some());
    }

    #[test]
    fn apply_never_mutates_input() {
        let env = FlagEnv::new();
        let _ = env.apply(&f("@P.W.vi@")).unwrap();
        assert_eq!(env, FlagEnv::new());
    }
}
