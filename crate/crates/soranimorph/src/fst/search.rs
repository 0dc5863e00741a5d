//! Bidirectional lookup and path enumeration with flag-diacritic filtering.
//!
//! A path is flag-valid iff applying its flags left to right from an empty
//! environment never rejects. Flags and zero placeholders do not appear in
//! returned strings. Results are ordered lexicographically by symbol text.
//!
//! The traversal memoizes per (state, position, flag environment)
//! configuration, so shared suffixes are expanded once; configuration
//! cycles that consume no input are cut, which truncates the infinitely
//! many outputs a pathological zero-consuming loop would yield.

use std::collections::HashMap;
use std::rc::Rc;

use super::flags::FlagEnv;
use super::symbol::{SymId, Symbol, EPSILON, ZERO};
use super::transducer::{StateId, Transducer};

/// Which tape is consumed during the search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tape {
    Input,
    Output,
}

fn is_skippable(id: SymId, t: &Transducer) -> bool {
    id == EPSILON || id == ZERO || t.table().get(id).is_flag()
}

/// Returns every lexical-side string pairing with `surface`.
pub fn lookup(t: &Transducer, surface: &[Symbol]) -> Vec<Vec<Symbol>> {
    apply(t, surface, Tape::Output)
}

/// Returns every surface-side string pairing with `lexical`.
pub fn lookdown(t: &Transducer, lexical: &[Symbol]) -> Vec<Vec<Symbol>> {
    apply(t, lexical, Tape::Input)
}

type EnvId = u32;
type Config = (StateId, u32, EnvId);
/// Pair sequences from a configuration to acceptance.
type Suffixes = Rc<Vec<Rc<PairSeq>>>;

/// A cons-list of label pairs, shared across results.
#[derive(Debug)]
enum PairSeq {
    Nil,
    Cons((SymId, SymId), Rc<PairSeq>),
}

fn collect(seq: &PairSeq, out: &mut Vec<(SymId, SymId)>) {
    let mut cur = seq;
    while let PairSeq::Cons(pair, rest) = cur {
        out.push(*pair);
        cur = rest;
    }
}

/// Interned flag environments with a cached transition relation, so the
/// hot path hashes small integers instead of whole environments.
struct EnvArena {
    envs: Vec<FlagEnv>,
    ids: HashMap<FlagEnv, EnvId>,
    trans: HashMap<(EnvId, SymId), Option<EnvId>>,
}

impl EnvArena {
    fn new() -> EnvArena {
        let mut arena =
            EnvArena { envs: Vec::new(), ids: HashMap::new(), trans: HashMap::new() };
        arena.intern(FlagEnv::new());
        arena
    }

    fn intern(&mut self, env: FlagEnv) -> EnvId {
        if let Some(&id) = self.ids.get(&env) {
            return id;
        }
        let id = self.envs.len() as EnvId;
        self.envs.push(env.clone());
        self.ids.insert(env, id);
        id
    }

    fn apply(&mut self, env: EnvId, flag_sym: SymId, t: &Transducer) -> Option<EnvId> {
        if let Some(&cached) = self.trans.get(&(env, flag_sym)) {
            return cached;
        }
        let flag = match t.table().get(flag_sym) {
            Symbol::Flag(f) => f.clone(),
            _ => unreachable!("apply called on a non-flag symbol"),
        };
        let result = self.envs[env as usize].apply(&flag).map(|e| self.intern(e));
        self.trans.insert((env, flag_sym), result);
        result
    }
}

struct Search<'a> {
    t: &'a Transducer,
    ids: Vec<SymId>,
    consumed: Tape,
    envs: EnvArena,
    memo: HashMap<Config, Suffixes>,
    on_path: Vec<Config>,
}

impl<'a> Search<'a> {
    /// All pair-label suffixes from this configuration to a final state
    /// with the input exhausted.
    fn run(&mut self, state: StateId, pos: u32, env: EnvId) -> Suffixes {
        let key = (state, pos, env);
        if let Some(hit) = self.memo.get(&key) {
            return Rc::clone(hit);
        }
        if self.on_path.contains(&key) {
            // Non-consuming configuration cycle: cut it. Not memoized, so
            // other routes into this configuration still expand.
            return Rc::new(Vec::new());
        }
        self.on_path.push(key);
        let mut out: Vec<Rc<PairSeq>> = Vec::new();
        if pos as usize == self.ids.len() && self.t.is_final(state) {
            out.push(Rc::new(PairSeq::Nil));
        }
        let arcs = self.t.arcs_from(state).to_vec();
        for arc in arcs {
            let consume_id = match self.consumed {
                Tape::Output => arc.output,
                Tape::Input => arc.input,
            };
            let flag_sym = if self.t.table().get(arc.input).is_flag() {
                Some(arc.input)
            } else if self.t.table().get(arc.output).is_flag() {
                Some(arc.output)
            } else {
                None
            };
            let next_env = match flag_sym {
                Some(fs) => match self.envs.apply(env, fs, self.t) {
                    Some(e) => e,
                    None => continue,
                },
                None => env,
            };
            let next_pos = if is_skippable(consume_id, self.t) {
                pos
            } else if (pos as usize) < self.ids.len() && consume_id == self.ids[pos as usize] {
                pos + 1
            } else {
                continue;
            };
            let tails = self.run(arc.target, next_pos, next_env);
            for tail in tails.iter() {
                out.push(Rc::new(PairSeq::Cons((arc.input, arc.output), Rc::clone(tail))));
            }
        }
        self.on_path.pop();
        let out = Rc::new(out);
        self.memo.insert(key, Rc::clone(&out));
        out
    }
}

fn raw_paths(t: &Transducer, tape_str: &[Symbol], consumed: Tape) -> Vec<Vec<(SymId, SymId)>> {
    let ids: Option<Vec<SymId>> = tape_str.iter().map(|s| t.table().lookup(s)).collect();
    let ids = match ids {
        Some(ids) => ids,
        None => return Vec::new(),
    };
    let mut search = Search {
        t,
        ids,
        consumed,
        envs: EnvArena::new(),
        memo: HashMap::new(),
        on_path: Vec::new(),
    };
    let suffixes = search.run(t.start(), 0, 0);
    suffixes
        .iter()
        .map(|seq| {
            let mut pairs = Vec::new();
            collect(seq, &mut pairs);
            pairs
        })
        .collect()
}

fn apply(t: &Transducer, tape_str: &[Symbol], consumed: Tape) -> Vec<Vec<Symbol>> {
    let raw = raw_paths(t, tape_str, consumed);
    let mut results: Vec<Vec<Symbol>> = raw
        .into_iter()
        .map(|pairs| {
            pairs
                .into_iter()
                .map(|(i, o)| match consumed {
                    Tape::Output => i,
                    Tape::Input => o,
                })
                .filter(|&id| !is_skippable(id, t))
                .map(|id| t.table().get(id).clone())
                .collect()
        })
        .collect();
    results.sort_by(|a, b| cmp_seq(a, b));
    results.dedup();
    results
}

fn cmp_seq(a: &[Symbol], b: &[Symbol]) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        let ord = x.canonical_cmp(y);
        if ord != std::cmp::Ordering::Equal {
            return ord;
        }
    }
    a.len().cmp(&b.len())
}

/// Full label sequences of the flag-valid paths matching `surface` on the
/// output tape, epsilon-like symbols included. Deterministically ordered.
pub fn lookup_paths(t: &Transducer, surface: &[Symbol]) -> Vec<Vec<(Symbol, Symbol)>> {
    let raw = raw_paths(t, surface, Tape::Output);
    let mut out: Vec<Vec<(Symbol, Symbol)>> = raw
        .into_iter()
        .map(|seq| {
            seq.into_iter()
                .map(|(i, o)| (t.table().get(i).clone(), t.table().get(o).clone()))
                .collect()
        })
        .collect();
    out.sort_by(|a, b| {
        let flat = |v: &Vec<(Symbol, Symbol)>| -> Vec<Symbol> {
            v.iter().flat_map(|(i, o)| [i.clone(), o.clone()]).collect()
        };
        cmp_seq(&flat(a), &flat(b))
    });
    out.dedup();
    out
}

/// A complete enumeration entry: cleaned (lexical, surface) strings.
pub type PathPair = (Vec<Symbol>, Vec<Symbol>);

/// Breadth-first enumeration of the flag-valid relation, shortest paths
/// first, deterministic. `truncated` is set when `limit` pairs were reached
/// or the expansion budget ran out before the frontier emptied.
pub struct Enumeration {
    pub pairs: Vec<PathPair>,
    pub truncated: bool,
}

pub fn enumerate_paths(t: &Transducer, limit: usize) -> Enumeration {
    let mut pairs: Vec<PathPair> = Vec::new();
    let mut truncated = false;
    let budget: usize = std::cmp::max(2_000_000, limit.saturating_mul(64));
    let mut spent: usize = 0;
    let mut frontier: Vec<(StateId, FlagEnv, Vec<SymId>, Vec<SymId>)> =
        vec![(t.start(), FlagEnv::new(), Vec::new(), Vec::new())];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (state, env, lex, surf) in frontier {
            if t.is_final(state) {
                if pairs.len() >= limit {
                    truncated = true;
                    return Enumeration { pairs, truncated };
                }
                pairs.push((clean(t, &lex), clean(t, &surf)));
            }
            for arc in t.arcs_from(state) {
                spent += 1;
                if spent > budget {
                    return Enumeration { pairs, truncated: true };
                }
                let next_env = match (t.table().get(arc.input), t.table().get(arc.output)) {
                    (Symbol::Flag(f), _) | (_, Symbol::Flag(f)) => match env.apply(f) {
                        Some(e) => e,
                        None => continue,
                    },
                    _ => env.clone(),
                };
                let mut l = lex.clone();
                let mut s = surf.clone();
                l.push(arc.input);
                s.push(arc.output);
                next.push((arc.target, next_env, l, s));
            }
        }
        frontier = next;
    }
    Enumeration { pairs, truncated }
}

fn clean(t: &Transducer, ids: &[SymId]) -> Vec<Symbol> {
    ids.iter()
        .filter(|&&id| !is_skippable(id, t))
        .map(|&id| t.table().get(id).clone())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fst::symbol::Symbol;
    use crate::fst::transducer::Transducer;

    fn g(c: char) -> Symbol {
        Symbol::grapheme(c)
    }

    #[test]
    fn identity_lookup_returns_itself() {
        let t = Transducer::identity(&[g('a'), g('b')]);
        let got = lookup(&t, &[g('a'), g('b')]);
        assert_eq!(got, vec![vec![g('a'), g('b')]]);
        let got = lookdown(&t, &[g('a'), g('b')]);
        assert_eq!(got, vec![vec![g('a'), g('b')]]);
    }

    #[test]
    fn single_arc_enumeration() {
        let t = Transducer::linear(&[(g('a'), g('b'))]);
        let e = enumerate_paths(&t, 10);
        assert!(!e.truncated);
        assert_eq!(e.pairs, vec![(vec![g('a')], vec![g('b')])]);
    }

    #[test]
    fn empty_transducer_enumerates_nothing() {
        let t = Transducer::empty();
        let e = enumerate_paths(&t, 10);
        assert!(e.pairs.is_empty());
        assert!(!e.truncated);
    }

    #[test]
    fn unknown_symbol_gives_empty_result() {
        let t = Transducer::identity(&[g('a')]);
        assert!(lookup(&t, &[g('z')]).is_empty());
    }
}
