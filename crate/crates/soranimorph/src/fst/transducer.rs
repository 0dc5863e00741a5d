//! The immutable transducer representation and its canonical form.
//!
//! Every constructor funnels through [`Transducer::from_parts`], which trims
//! unreachable and dead states, renumbers the rest in breadth-first order
//! from the start state, and sorts arcs. Two machines describing the same
//! relation built the same way therefore serialize identically.

use std::collections::VecDeque;
use std::sync::Arc as StdArc;

use super::symbol::{SymId, Symbol, SymbolTable, EPSILON};

pub type StateId = u32;

/// A single transition: input-tape symbol, output-tape symbol, target state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arc {
    pub input: SymId,
    pub output: SymId,
    pub target: StateId,
}

/// Immutable finite-state transducer over a shared symbol table.
#[derive(Debug, Clone)]
pub struct Transducer {
    table: StdArc<SymbolTable>,
    start: StateId,
    finals: Vec<bool>,
    /// Outgoing arcs per state, in canonical sorted order.
    arcs: Vec<Vec<Arc>>,
}

/// Mutable construction surface; freeze with [`Builder::finish`].
#[derive(Debug)]
pub struct Builder {
    pub table: SymbolTable,
    start: StateId,
    finals: Vec<bool>,
    arcs: Vec<Vec<Arc>>,
}

impl Builder {
    pub fn new() -> Builder {
        Builder::with_table(SymbolTable::new())
    }

    pub fn with_table(table: SymbolTable) -> Builder {
        Builder { table, start: 0, finals: Vec::new(), arcs: Vec::new() }
    }

    pub fn add_state(&mut self) -> StateId {
        self.finals.push(false);
        self.arcs.push(Vec::new());
        (self.finals.len() - 1) as StateId
    }

    pub fn set_start(&mut self, s: StateId) {
        self.start = s;
    }

    pub fn set_final(&mut self, s: StateId) {
        self.finals[s as usize] = true;
    }

    pub fn sym(&mut self, s: Symbol) -> SymId {
        self.table.intern(s)
    }

    pub fn add_arc(&mut self, from: StateId, input: SymId, output: SymId, target: StateId) {
        self.arcs[from as usize].push(Arc { input, output, target });
    }

    pub fn finish(self) -> Transducer {
        Transducer::from_parts(self.table, self.start, self.finals, self.arcs)
    }

    pub(crate) fn clear_final(&mut self, s: StateId) {
        self.finals[s as usize] = false;
    }
}

impl Default for Builder {
    fn default() -> Self {
        Builder::new()
    }
}

impl Transducer {
    /// Builds the canonical form: trim, BFS-renumber from start, sort arcs.
    pub fn from_parts(
        table: SymbolTable,
        start: StateId,
        finals: Vec<bool>,
        arcs: Vec<Vec<Arc>>,
    ) -> Transducer {
        let table = StdArc::new(table);
        let n = finals.len();
        if n == 0 {
            return Transducer::empty_with(table);
        }
        // Keep only states on some start -> final path.
        let reachable = forward_reachable(start, &arcs);
        let productive = backward_productive(&finals, &arcs);
        let alive: Vec<bool> =
            (0..n).map(|i| reachable[i] && productive[i]).collect();
        if !alive[start as usize] {
            return Transducer::empty_with(table);
        }

        // Deterministic arc order inside each state before renumbering: sort
        // by canonical symbol order, then by the target's own BFS discovery
        // order (established below).
        let sort_key = |id: SymId, table: &SymbolTable| -> (u8, String) {
            let sym = table.get(id);
            (
                match sym {
                    Symbol::Epsilon => 0,
                    Symbol::Zero => 1,
                    Symbol::Other => 2,
                    Symbol::Grapheme(_) => 3,
                    Symbol::Tag(_) => 4,
                    Symbol::Flag(_) => 5,
                },
                sym.display_text(),
            )
        };

        // BFS renumbering with arcs visited in canonical label order so the
        // numbering itself is canonical.
        let mut order: Vec<Option<StateId>> = vec![None; n];
        let mut bfs: Vec<StateId> = Vec::new();
        let mut queue = VecDeque::new();
        order[start as usize] = Some(0);
        bfs.push(start);
        queue.push_back(start);
        while let Some(s) = queue.pop_front() {
            let mut outgoing: Vec<&Arc> = arcs[s as usize]
                .iter()
                .filter(|a| alive[a.target as usize])
                .collect();
            outgoing.sort_by(|a, b| {
                sort_key(a.input, &table)
                    .cmp(&sort_key(b.input, &table))
                    .then_with(|| sort_key(a.output, &table).cmp(&sort_key(b.output, &table)))
                    .then_with(|| a.target.cmp(&b.target))
            });
            for a in outgoing {
                if order[a.target as usize].is_none() {
                    order[a.target as usize] = Some(bfs.len() as StateId);
                    bfs.push(a.target);
                    queue.push_back(a.target);
                }
            }
        }

        let m = bfs.len();
        let mut new_finals = vec![false; m];
        let mut new_arcs: Vec<Vec<Arc>> = vec![Vec::new(); m];
        for (new_id, &old_id) in bfs.iter().enumerate() {
            new_finals[new_id] = finals[old_id as usize];
            let mut out: Vec<Arc> = arcs[old_id as usize]
                .iter()
                .filter(|a| alive[a.target as usize])
                .map(|a| Arc {
                    input: a.input,
                    output: a.output,
                    target: order[a.target as usize].unwrap(),
                })
                .collect();
            out.sort_by(|a, b| {
                sort_key(a.input, &table)
                    .cmp(&sort_key(b.input, &table))
                    .then_with(|| sort_key(a.output, &table).cmp(&sort_key(b.output, &table)))
                    .then_with(|| a.target.cmp(&b.target))
            });
            out.dedup();
            new_arcs[new_id] = out;
        }

        Transducer { table, start: 0, finals: new_finals, arcs: new_arcs }
    }

    fn empty_with(table: StdArc<SymbolTable>) -> Transducer {
        Transducer { table, start: 0, finals: vec![false], arcs: vec![Vec::new()] }
    }

    /// The machine accepting nothing.
    pub fn empty() -> Transducer {
        Transducer::empty_with(StdArc::new(SymbolTable::new()))
    }

    /// Identity transducer over the given symbols (one state, self loops).
    pub fn identity(symbols: &[Symbol]) -> Transducer {
        let mut b = Builder::new();
        let s = b.add_state();
        b.set_start(s);
        b.set_final(s);
        for sym in symbols {
            let id = b.sym(sym.clone());
            b.add_arc(s, id, id, s);
        }
        b.finish()
    }

    /// Single-path transducer for a (lexical, surface) pair sequence.
    pub fn linear(pairs: &[(Symbol, Symbol)]) -> Transducer {
        let mut b = Builder::new();
        let mut cur = b.add_state();
        b.set_start(cur);
        for (i, o) in pairs {
            let next = b.add_state();
            let iid = b.sym(i.clone());
            let oid = b.sym(o.clone());
            b.add_arc(cur, iid, oid, next);
            cur = next;
        }
        b.set_final(cur);
        b.finish()
    }

    pub fn table(&self) -> &SymbolTable {
        &self.table
    }

    pub fn table_arc(&self) -> StdArc<SymbolTable> {
        StdArc::clone(&self.table)
    }

    pub fn start(&self) -> StateId {
        self.start
    }

    pub fn num_states(&self) -> usize {
        self.finals.len()
    }

    pub fn num_arcs(&self) -> usize {
        self.arcs.iter().map(|a| a.len()).sum()
    }

    pub fn is_final(&self, s: StateId) -> bool {
        self.finals[s as usize]
    }

    pub fn arcs_from(&self, s: StateId) -> &[Arc] {
        &self.arcs[s as usize]
    }

    /// True when no string pair is accepted.
    pub fn is_empty_language(&self) -> bool {
        self.num_states() == 1 && !self.finals[0] && self.arcs[0].is_empty()
    }

    /// The set of symbols appearing on arcs (the working alphabet), sorted
    /// canonically. Epsilon is excluded.
    pub fn alphabet(&self) -> Vec<Symbol> {
        let mut seen: Vec<Symbol> = Vec::new();
        for state_arcs in &self.arcs {
            for a in state_arcs {
                for id in [a.input, a.output] {
                    if id == EPSILON {
                        continue;
                    }
                    let sym = self.table.get(id).clone();
                    if !seen.contains(&sym) {
                        seen.push(sym);
                    }
                }
            }
        }
        seen.sort_by(|a, b| a.canonical_cmp(b));
        seen
    }

    /// Rebuilds this machine on a fresh table containing only used symbols,
    /// interned in canonical order. Serialization uses this.
    pub fn compact(&self) -> Transducer {
        let mut table = SymbolTable::new();
        for sym in self.alphabet() {
            table.intern(sym);
        }
        let remap = |id: SymId, out: &mut SymbolTable| out.intern(self.table.get(id).clone());
        let mut arcs: Vec<Vec<Arc>> = Vec::with_capacity(self.num_states());
        for state_arcs in &self.arcs {
            arcs.push(
                state_arcs
                    .iter()
                    .map(|a| Arc {
                        input: remap(a.input, &mut table),
                        output: remap(a.output, &mut table),
                        target: a.target,
                    })
                    .collect(),
            );
        }
        Transducer::from_parts(table, self.start, self.finals.clone(), arcs)
    }

}

fn forward_reachable(start: StateId, arcs: &[Vec<Arc>]) -> Vec<bool> {
    let mut seen = vec![false; arcs.len()];
    let mut stack = vec![start];
    seen[start as usize] = true;
    while let Some(s) = stack.pop() {
        for a in &arcs[s as usize] {
            if !seen[a.target as usize] {
                seen[a.target as usize] = true;
                stack.push(a.target);
            }
        }
    }
    seen
}

fn backward_productive(finals: &[bool], arcs: &[Vec<Arc>]) -> Vec<bool> {
    let n = finals.len();
    let mut rev: Vec<Vec<StateId>> = vec![Vec::new(); n];
    for (s, state_arcs) in arcs.iter().enumerate() {
        for a in state_arcs {
            rev[a.target as usize].push(s as StateId);
        }
    }
    let mut seen = vec![false; n];
    let mut stack: Vec<StateId> = (0..n as StateId).filter(|&s| finals[s as usize]).collect();
    for &s in &stack {
        seen[s as usize] = true;
    }
    while let Some(s) = stack.pop() {
        for &p in &rev[s as usize] {
            if !seen[p as usize] {
                seen[p as usize] = true;
                stack.push(p);
            }
        }
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fst::symbol::Symbol;

    #[test]
    fn canonical_form_trims_dead_states() {
        let mut b = Builder::new();
        let s0 = b.add_state();
        let s1 = b.add_state();
        let dead = b.add_state();
        b.set_start(s0);
        b.set_final(s1);
        let a = b.sym(Symbol::grapheme('a'));
        b.add_arc(s0, a, a, s1);
        b.add_arc(s0, a, a, dead); // dead end
        let t = b.finish();
        assert_eq!(t.num_states(), 2);
        assert_eq!(t.num_arcs(), 1);
    }

    #[test]
    fn same_relation_same_build_is_identical() {
        let build = || {
            let mut b = Builder::new();
            let s0 = b.add_state();
            let s1 = b.add_state();
            b.set_start(s0);
            b.set_final(s1);
            let a = b.sym(Symbol::grapheme('a'));
            let c = b.sym(Symbol::grapheme('b'));
            b.add_arc(s0, a, c, s1);
            b.add_arc(s1, c, a, s0);
            b.finish()
        };
        let t1 = build();
        let t2 = build();
        assert_eq!(t1.num_states(), t2.num_states());
        for s in 0..t1.num_states() as StateId {
            assert_eq!(t1.arcs_from(s), t2.arcs_from(s));
            assert_eq!(t1.is_final(s), t2.is_final(s));
        }
    }

    #[test]
    fn empty_language_detected() {
        let mut b = Builder::new();
        let s0 = b.add_state();
        b.set_start(s0);
        let t = b.finish();
        assert!(t.is_empty_language());
    }
}
