//! Construction algebra over transducers: union, concatenation, closure,
//! reversal, composition, pair-automaton intersection, minimization and
//! flag elimination.

use std::collections::{HashMap, VecDeque};

use thiserror::Error;

use super::flags::FlagEnv;
use super::symbol::{Flag, SymId, Symbol, EPSILON};
use super::transducer::{Builder, StateId, Transducer};

#[derive(Debug, Error)]
pub enum FstError {
    #[error("intersection requires pair automata: state {state} has a one-sided epsilon arc")]
    OneSidedEpsilon { state: StateId },
    #[error("flag state space exceeds the configured bound of {bound} states")]
    RunawayFlagSpace { bound: usize },
}

/// Copies `t` into builder `b`, returning the state-id offset.
fn import(b: &mut Builder, t: &Transducer) -> Vec<StateId> {
    let mut map = Vec::with_capacity(t.num_states());
    for _ in 0..t.num_states() {
        map.push(b.add_state());
    }
    for s in 0..t.num_states() as StateId {
        for a in t.arcs_from(s) {
            let i = b.table.intern(t.table().get(a.input).clone());
            let o = b.table.intern(t.table().get(a.output).clone());
            b.add_arc(map[s as usize], i, o, map[a.target as usize]);
        }
        if t.is_final(s) {
            b.set_final(map[s as usize]);
        }
    }
    map
}

/// Union of relations.
pub fn union(a: &Transducer, b: &Transducer) -> Transducer {
    let mut bld = Builder::new();
    let start = bld.add_state();
    bld.set_start(start);
    let ma = import(&mut bld, a);
    let mb = import(&mut bld, b);
    bld.add_arc(start, EPSILON, EPSILON, ma[a.start() as usize]);
    bld.add_arc(start, EPSILON, EPSILON, mb[b.start() as usize]);
    bld.finish()
}

/// Concatenation of relations.
pub fn concat(a: &Transducer, b: &Transducer) -> Transducer {
    let mut bld = Builder::new();
    let start = bld.add_state();
    bld.set_start(start);
    let ma = import(&mut bld, a);
    let mb = import(&mut bld, b);
    bld.add_arc(start, EPSILON, EPSILON, ma[a.start() as usize]);
    for s in 0..a.num_states() as StateId {
        if a.is_final(s) {
            bld.clear_final(ma[s as usize]);
            bld.add_arc(ma[s as usize], EPSILON, EPSILON, mb[b.start() as usize]);
        }
    }
    bld.finish()
}

/// Kleene star of a relation.
pub fn closure(a: &Transducer) -> Transducer {
    let mut bld = Builder::new();
    let start = bld.add_state();
    bld.set_start(start);
    bld.set_final(start);
    let ma = import(&mut bld, a);
    bld.add_arc(start, EPSILON, EPSILON, ma[a.start() as usize]);
    for s in 0..a.num_states() as StateId {
        if a.is_final(s) {
            bld.add_arc(ma[s as usize], EPSILON, EPSILON, start);
        }
    }
    bld.finish()
}

/// Reverses the relation (strings read right to left).
pub fn reverse(a: &Transducer) -> Transducer {
    let mut bld = Builder::new();
    let start = bld.add_state();
    bld.set_start(start);
    let map: Vec<StateId> = (0..a.num_states()).map(|_| bld.add_state()).collect();
    for s in 0..a.num_states() as StateId {
        for arc in a.arcs_from(s) {
            let i = bld.table.intern(a.table().get(arc.input).clone());
            let o = bld.table.intern(a.table().get(arc.output).clone());
            bld.add_arc(map[arc.target as usize], i, o, map[s as usize]);
        }
        if a.is_final(s) {
            bld.add_arc(start, EPSILON, EPSILON, map[s as usize]);
        }
    }
    bld.set_final(map[a.start() as usize]);
    bld.finish()
}

/// True when the symbol passes through composition without consuming a
/// symbol on the joined tape.
fn is_transparent(sym: &Symbol) -> bool {
    matches!(sym, Symbol::Epsilon | Symbol::Zero | Symbol::Flag(_))
}

/// Composition of relations: `relation = {(x, z) : exists y, (x,y) in a and
/// (y,z) in b}`. Epsilon-like symbols (epsilon, zero, flags) on the joined
/// tape pass through without advancing the other machine; flags are carried
/// into the result so flag-aware lookup still filters paths.
pub fn compose(a: &Transducer, b: &Transducer) -> Transducer {
    let mut bld = Builder::new();
    let mut id_map: HashMap<(StateId, StateId), StateId> = HashMap::new();
    let mut queue = VecDeque::new();
    let start_pair = (a.start(), b.start());
    let start = bld.add_state();
    bld.set_start(start);
    id_map.insert(start_pair, start);
    queue.push_back(start_pair);

    while let Some((pa, pb)) = queue.pop_front() {
        let cur = id_map[&(pa, pb)];
        if a.is_final(pa) && b.is_final(pb) {
            bld.set_final(cur);
        }
        let push = |bld: &mut Builder,
                        id_map: &mut HashMap<(StateId, StateId), StateId>,
                        queue: &mut VecDeque<(StateId, StateId)>,
                        na: StateId,
                        nb: StateId|
         -> StateId {
            *id_map.entry((na, nb)).or_insert_with(|| {
                queue.push_back((na, nb));
                bld.add_state()
            })
        };
        // a-arcs whose output does not reach b.
        for arc in a.arcs_from(pa) {
            let out_sym = a.table().get(arc.output).clone();
            if is_transparent(&out_sym) {
                let i = bld.table.intern(a.table().get(arc.input).clone());
                let o = bld.table.intern(out_sym);
                let tgt = push(&mut bld, &mut id_map, &mut queue, arc.target, pb);
                bld.add_arc(cur, i, o, tgt);
            }
        }
        // b-arcs whose input does not consume from a.
        for arc in b.arcs_from(pb) {
            let in_sym = b.table().get(arc.input).clone();
            if is_transparent(&in_sym) {
                let i = bld.table.intern(in_sym);
                let o = bld.table.intern(b.table().get(arc.output).clone());
                let tgt = push(&mut bld, &mut id_map, &mut queue, pa, arc.target);
                bld.add_arc(cur, i, o, tgt);
            }
        }
        // Matched moves.
        for aa in a.arcs_from(pa) {
            let mid = a.table().get(aa.output).clone();
            if is_transparent(&mid) {
                continue;
            }
            for ba in b.arcs_from(pb) {
                if b.table().get(ba.input) != &mid {
                    continue;
                }
                let i = bld.table.intern(a.table().get(aa.input).clone());
                let o = bld.table.intern(b.table().get(ba.output).clone());
                let tgt = push(&mut bld, &mut id_map, &mut queue, aa.target, ba.target);
                bld.add_arc(cur, i, o, tgt);
            }
        }
    }
    bld.finish()
}

/// Intersection of pair-symbol automata: accepted pair strings are
/// `L(a) & L(b)`. Inputs must carry no one-sided epsilon arcs (zero is the
/// alignment placeholder in two-level pair strings).
pub fn intersect(a: &Transducer, b: &Transducer) -> Result<Transducer, FstError> {
    for t in [a, b] {
        for s in 0..t.num_states() as StateId {
            for arc in t.arcs_from(s) {
                let one_eps = (arc.input == EPSILON) ^ (arc.output == EPSILON);
                if one_eps {
                    return Err(FstError::OneSidedEpsilon { state: s });
                }
            }
        }
    }
    let mut bld = Builder::new();
    let mut id_map: HashMap<(StateId, StateId), StateId> = HashMap::new();
    let mut queue = VecDeque::new();
    let start = bld.add_state();
    bld.set_start(start);
    id_map.insert((a.start(), b.start()), start);
    queue.push_back((a.start(), b.start()));
    while let Some((pa, pb)) = queue.pop_front() {
        let cur = id_map[&(pa, pb)];
        if a.is_final(pa) && b.is_final(pb) {
            bld.set_final(cur);
        }
        for aa in a.arcs_from(pa) {
            let (ia, oa) = (a.table().get(aa.input).clone(), a.table().get(aa.output).clone());
            for ba in b.arcs_from(pb) {
                if b.table().get(ba.input) == &ia && b.table().get(ba.output) == &oa {
                    let i = bld.table.intern(ia.clone());
                    let o = bld.table.intern(oa.clone());
                    let tgt = *id_map.entry((aa.target, ba.target)).or_insert_with(|| {
                        queue.push_back((aa.target, ba.target));
                        bld.add_state()
                    });
                    bld.add_arc(cur, i, o, tgt);
                }
            }
        }
    }
    Ok(bld.finish())
}

/// Merges bisimulation-equivalent states. For deterministic epsilon-free
/// machines this yields the unique minimal automaton, so canonically
/// serialized minimal machines of equal languages are byte-identical.
pub fn minimize(t: &Transducer) -> Transducer {
    let n = t.num_states();
    if n == 0 {
        return t.clone();
    }
    // Initial partition: final vs non-final.
    let mut block: Vec<u32> = (0..n).map(|s| t.is_final(s as StateId) as u32).collect();
    loop {
        // Signature: (block, sorted arcs as (input, output, target block)).
        let mut sigs: HashMap<(u32, Vec<(SymId, SymId, u32)>), u32> = HashMap::new();
        let mut next_block = vec![0u32; n];
        let mut changed = false;
        let mut sig_ids: Vec<(u32, Vec<(SymId, SymId, u32)>)> = Vec::new();
        for s in 0..n {
            let mut outs: Vec<(SymId, SymId, u32)> = t
                .arcs_from(s as StateId)
                .iter()
                .map(|a| (a.input, a.output, block[a.target as usize]))
                .collect();
            outs.sort();
            outs.dedup();
            let key = (block[s], outs);
            let id = match sigs.get(&key) {
                Some(&id) => id,
                None => {
                    let id = sig_ids.len() as u32;
                    sigs.insert(key.clone(), id);
                    sig_ids.push(key);
                    id
                }
            };
            next_block[s] = id;
        }
        for s in 0..n {
            if next_block[s] != block[s] {
                changed = true;
            }
        }
        block = next_block;
        if !changed {
            break;
        }
    }
    // Collapse blocks.
    let mut bld = Builder::new();
    let num_blocks = block.iter().copied().max().unwrap_or(0) as usize + 1;
    let states: Vec<StateId> = (0..num_blocks).map(|_| bld.add_state()).collect();
    bld.set_start(states[block[t.start() as usize] as usize]);
    let mut emitted: Vec<Vec<(SymId, SymId, StateId)>> = vec![Vec::new(); num_blocks];
    for s in 0..n {
        let bs = block[s] as usize;
        if t.is_final(s as StateId) {
            bld.set_final(states[bs]);
        }
        for a in t.arcs_from(s as StateId) {
            let i = bld.table.intern(t.table().get(a.input).clone());
            let o = bld.table.intern(t.table().get(a.output).clone());
            let tgt = states[block[a.target as usize] as usize];
            if !emitted[bs].contains(&(i, o, tgt)) {
                emitted[bs].push((i, o, tgt));
                bld.add_arc(states[bs], i, o, tgt);
            }
        }
    }
    bld.finish()
}

/// Expands flag diacritics into the state space: the result is flag-free and
/// accepts exactly the flag-valid relation of `t`. Fails when the product
/// of reachable (state, flag environment) pairs exceeds `max_states`.
pub fn eliminate_flags(t: &Transducer, max_states: usize) -> Result<Transducer, FstError> {
    let mut bld = Builder::new();
    let mut id_map: HashMap<(StateId, FlagEnv), StateId> = HashMap::new();
    let mut queue: VecDeque<(StateId, FlagEnv)> = VecDeque::new();
    let start_key = (t.start(), FlagEnv::new());
    let start = bld.add_state();
    bld.set_start(start);
    id_map.insert(start_key.clone(), start);
    queue.push_back(start_key);
    while let Some((s, env)) = queue.pop_front() {
        let cur = id_map[&(s, env.clone())];
        if t.is_final(s) {
            bld.set_final(cur);
        }
        for a in t.arcs_from(s) {
            let in_sym = t.table().get(a.input).clone();
            let (next_env, i, o) = match &in_sym {
                Symbol::Flag(f) => match env.apply(f) {
                    Some(e) => (e, EPSILON, EPSILON),
                    None => continue,
                },
                _ => (
                    env.clone(),
                    bld.table.intern(in_sym.clone()),
                    bld.table.intern(t.table().get(a.output).clone()),
                ),
            };
            let key = (a.target, next_env);
            let tgt = match id_map.get(&key) {
                Some(&tgt) => tgt,
                None => {
                    if id_map.len() >= max_states {
                        return Err(FstError::RunawayFlagSpace { bound: max_states });
                    }
                    let tgt = bld.add_state();
                    id_map.insert(key.clone(), tgt);
                    queue.push_back(key);
                    tgt
                }
            };
            bld.add_arc(cur, i, o, tgt);
        }
    }
    Ok(bld.finish())
}

/// Replaces zero placeholders with epsilon on both tapes; used once the
/// final analyzer transducer is assembled and pair alignment is no longer
/// needed.
pub fn strip_zero(t: &Transducer) -> Transducer {
    let mut bld = Builder::new();
    let map: Vec<StateId> = (0..t.num_states()).map(|_| bld.add_state()).collect();
    bld.set_start(map[t.start() as usize]);
    for s in 0..t.num_states() as StateId {
        if t.is_final(s) {
            bld.set_final(map[s as usize]);
        }
        for a in t.arcs_from(s) {
            let zap = |sym: &Symbol, bld: &mut Builder| -> SymId {
                match sym {
                    Symbol::Zero => EPSILON,
                    other => bld.table.intern(other.clone()),
                }
            };
            let i = zap(t.table().get(a.input), &mut bld);
            let o = zap(t.table().get(a.output), &mut bld);
            bld.add_arc(map[s as usize], i, o, map[a.target as usize]);
        }
    }
    bld.finish()
}

/// Collects every flag symbol used in `t`.
pub fn flags_of(t: &Transducer) -> Vec<Flag> {
    let mut out: Vec<Flag> = Vec::new();
    for sym in t.alphabet() {
        if let Symbol::Flag(f) = sym {
            if !out.contains(&f) {
                out.push(f);
            }
        }
    }
    out
}

/// Deep equality of two machines in canonical form.
pub fn structurally_equal(a: &Transducer, b: &Transducer) -> bool {
    if a.num_states() != b.num_states() {
        return false;
    }
    for s in 0..a.num_states() as StateId {
        if a.is_final(s) != b.is_final(s) {
            return false;
        }
        let aa = a.arcs_from(s);
        let ba = b.arcs_from(s);
        if aa.len() != ba.len() {
            return false;
        }
        for (x, y) in aa.iter().zip(ba.iter()) {
            if x.target != y.target
                || a.table().get(x.input) != b.table().get(y.input)
                || a.table().get(x.output) != b.table().get(y.output)
            {
                return false;
            }
        }
    }
    true
}
