//! Brute-force oracles shared by the engine test suite and the acceptance
//! gate: an independent path enumerator over raw machine graphs, random
//! machine generators, and a deterministic PRNG.

use std::collections::BTreeSet;

use soranimorph::fst::{Builder, StateId, Symbol, Transducer, EPSILON, ZERO};

/// Deterministic xorshift64* generator so failures are reproducible.
pub struct Rng(pub u64);

impl Rng {
    pub fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.0 = x;
        x.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }
    pub fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }
    pub fn chance(&mut self, percent: u64) -> bool {
        self.next() % 100 < percent
    }
}

pub type Rel = BTreeSet<(String, String)>;

/// Independent oracle: depth-first walk of the raw graph collecting string
/// pairs. `max_len` bounds the consumed length on either tape so cyclic
/// machines terminate.
pub fn oracle_relation(t: &Transducer, max_len: usize) -> Rel {
    fn sym_text(s: &Symbol) -> String {
        match s {
            Symbol::Grapheme(g) => g.clone(),
            Symbol::Tag(t) => t.clone(),
            _ => String::new(),
        }
    }
    fn walk(
        t: &Transducer,
        state: StateId,
        inp: &mut String,
        outp: &mut String,
        max_len: usize,
        steps: usize,
        acc: &mut Rel,
    ) {
        if t.is_final(state) {
            acc.insert((inp.clone(), outp.clone()));
        }
        if steps > 4 * max_len + 8 {
            return;
        }
        for arc in t.arcs_from(state) {
            let is = sym_text(t.table().get(arc.input));
            let os = sym_text(t.table().get(arc.output));
            if inp.chars().count() + is.chars().count() > max_len
                || outp.chars().count() + os.chars().count() > max_len
            {
                continue;
            }
            inp.push_str(&is);
            outp.push_str(&os);
            walk(t, arc.target, inp, outp, max_len, steps + 1, acc);
            for _ in 0..is.chars().count() {
                inp.pop();
            }
            for _ in 0..os.chars().count() {
                outp.pop();
            }
        }
    }
    let mut out = Rel::new();
    let mut i = String::new();
    let mut o = String::new();
    walk(t, t.start(), &mut i, &mut o, max_len, 0, &mut out);
    out
}

/// Random acyclic transducer over `alpha` with occasional epsilon arcs.
pub fn random_acyclic(rng: &mut Rng, alpha: &[char], with_eps: bool) -> Transducer {
    let n = 3 + rng.below(4);
    let mut b = Builder::new();
    let states: Vec<StateId> = (0..n).map(|_| b.add_state()).collect();
    b.set_start(states[0]);
    b.set_final(states[n - 1]);
    if rng.chance(30) {
        b.set_final(states[rng.below(n)]);
    }
    let arcs = n + rng.below(2 * n);
    for _ in 0..arcs {
        let from = rng.below(n - 1);
        let to = from + 1 + rng.below(n - from - 1);
        let pick = |rng: &mut Rng, b: &mut Builder| {
            if with_eps && rng.chance(15) {
                EPSILON
            } else {
                b.sym(Symbol::grapheme(alpha[rng.below(alpha.len())]))
            }
        };
        let i = pick(rng, &mut b);
        let o = pick(rng, &mut b);
        b.add_arc(states[from], i, o, states[to]);
    }
    b.finish()
}

/// Random pair automaton over a fixed feasible-pair alphabet (no one-sided
/// epsilons; may be cyclic).
pub fn random_pair_automaton(rng: &mut Rng, pairs: &[(char, char)]) -> Transducer {
    let n = 2 + rng.below(4);
    let mut b = Builder::new();
    let states: Vec<StateId> = (0..n).map(|_| b.add_state()).collect();
    b.set_start(states[0]);
    for s in &states {
        if rng.chance(40) {
            b.set_final(*s);
        }
    }
    b.set_final(states[n - 1]);
    let arcs = n + rng.below(3 * n);
    for _ in 0..arcs {
        let from = rng.below(n);
        let to = rng.below(n);
        let (pi, po) = pairs[rng.below(pairs.len())];
        let i = b.sym(Symbol::grapheme(pi));
        let o = b.sym(Symbol::grapheme(po));
        b.add_arc(states[from], i, o, states[to]);
    }
    b.finish()
}

/// Independent acceptance test for a pair string: direct nondeterministic
/// simulation over (input, output) labels.
pub fn accepts_pairs(t: &Transducer, w: &[(char, char)]) -> bool {
    let mut states: BTreeSet<StateId> = BTreeSet::new();
    states.insert(t.start());
    for &(i, o) in w {
        let mut next = BTreeSet::new();
        for &s in &states {
            for arc in t.arcs_from(s) {
                if t.table().get(arc.input) == &Symbol::grapheme(i)
                    && t.table().get(arc.output) == &Symbol::grapheme(o)
                {
                    next.insert(arc.target);
                }
            }
        }
        states = next;
        if states.is_empty() {
            return false;
        }
    }
    states.iter().any(|&s| t.is_final(s))
}

pub fn all_pair_strings(pairs: &[(char, char)], max_len: usize) -> Vec<Vec<(char, char)>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for &p in pairs {
                let mut w2 = w.clone();
                w2.push(p);
                next.push(w2);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Random flagged transducer: a couple of flag features over small value
/// sets, mixed with grapheme arcs.
pub fn random_flagged(rng: &mut Rng) -> Transducer {
    let n = 3 + rng.below(4);
    let mut b = Builder::new();
    let states: Vec<StateId> = (0..n).map(|_| b.add_state()).collect();
    b.set_start(states[0]);
    b.set_final(states[n - 1]);
    let ops = ["U", "R", "D", "P"];
    let feats = ["F", "G"];
    let vals = ["x", "y"];
    let arcs = n + rng.below(2 * n);
    for _ in 0..arcs {
        let from = rng.below(n - 1);
        let to = from + 1 + rng.below(n - from - 1);
        if rng.chance(40) {
            let text = format!(
                "@{}.{}.{}@",
                ops[rng.below(ops.len())],
                feats[rng.below(feats.len())],
                vals[rng.below(vals.len())]
            );
            let f = soranimorph::fst::Flag::parse(&text).unwrap();
            let id = b.sym(Symbol::Flag(f));
            b.add_arc(states[from], id, id, states[to]);
        } else {
            let c = ['a', 'b'][rng.below(2)];
            let i = b.sym(Symbol::grapheme(c));
            let o = if rng.chance(20) { ZERO } else { i };
            b.add_arc(states[from], i, o, states[to]);
        }
    }
    b.finish()
}

pub fn all_strings(alpha: &[char], max_len: usize) -> Vec<Vec<Symbol>> {
    let mut out: Vec<Vec<Symbol>> = vec![Vec::new()];
    let mut layer: Vec<Vec<Symbol>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for &c in alpha {
                let mut w2 = w.clone();
                w2.push(Symbol::grapheme(c));
                next.push(w2);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

pub fn join(a: &Rel, b: &Rel) -> Rel {
    let mut out = Rel::new();
    for (x, y) in a {
        for (y2, z) in b {
            if y == y2 {
                out.insert((x.clone(), z.clone()));
            }
        }
    }
    out
}
