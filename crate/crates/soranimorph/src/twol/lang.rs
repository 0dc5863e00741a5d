//! Regular-language machinery over a dense pair alphabet, used by the rule
//! compiler: Thompson NFAs for the context regexes, subset construction for
//! complementation, products for intersection and union, Moore minimization.

/// Dense index into the feasible-pair alphabet.
pub type PairId = usize;

/// Thompson-style NFA. State 0 is the start; `finals` marks accepting
/// states; transitions carry either a set of pair ids or epsilon.
#[derive(Debug, Clone)]
pub struct Nfa {
    pub n_states: usize,
    pub start: usize,
    pub finals: Vec<bool>,
    /// (from, pair, to); `None` pair = epsilon.
    pub edges: Vec<(usize, Option<PairId>, usize)>,
}

impl Nfa {
    pub fn empty_string() -> Nfa {
        Nfa { n_states: 1, start: 0, finals: vec![true], edges: vec![] }
    }

    pub fn nothing() -> Nfa {
        Nfa { n_states: 1, start: 0, finals: vec![false], edges: vec![] }
    }

    pub fn symbols(pairs: &[PairId]) -> Nfa {
        let mut edges = Vec::new();
        for &p in pairs {
            edges.push((0, Some(p), 1));
        }
        Nfa { n_states: 2, start: 0, finals: vec![false, true], edges }
    }

    /// Any single pair from the whole alphabet.
    pub fn any(n_pairs: usize) -> Nfa {
        Nfa::symbols(&(0..n_pairs).collect::<Vec<_>>())
    }

    /// Sigma-star over the whole alphabet.
    pub fn universe(n_pairs: usize) -> Nfa {
        let edges = (0..n_pairs).map(|p| (0, Some(p), 0)).collect();
        Nfa { n_states: 1, start: 0, finals: vec![true], edges }
    }

    fn shift(&self, by: usize) -> Vec<(usize, Option<PairId>, usize)> {
        self.edges.iter().map(|&(f, p, t)| (f + by, p, t + by)).collect()
    }

    pub fn concat(&self, other: &Nfa) -> Nfa {
        let off = self.n_states;
        let mut edges = self.edges.clone();
        edges.extend(other.shift(off));
        for (s, &f) in self.finals.iter().enumerate() {
            if f {
                edges.push((s, None, other.start + off));
            }
        }
        let mut finals = vec![false; self.n_states + other.n_states];
        for (s, &f) in other.finals.iter().enumerate() {
            if f {
                finals[s + off] = true;
            }
        }
        Nfa { n_states: self.n_states + other.n_states, start: self.start, finals, edges }
    }

    pub fn union(&self, other: &Nfa) -> Nfa {
        let off_a = 1;
        let off_b = 1 + self.n_states;
        let n = 1 + self.n_states + other.n_states;
        let mut edges: Vec<(usize, Option<PairId>, usize)> = Vec::new();
        edges.push((0, None, self.start + off_a));
        edges.push((0, None, other.start + off_b));
        edges.extend(self.edges.iter().map(|&(f, p, t)| (f + off_a, p, t + off_a)));
        edges.extend(other.edges.iter().map(|&(f, p, t)| (f + off_b, p, t + off_b)));
        let mut finals = vec![false; n];
        for (s, &f) in self.finals.iter().enumerate() {
            if f {
                finals[s + off_a] = true;
            }
        }
        for (s, &f) in other.finals.iter().enumerate() {
            if f {
                finals[s + off_b] = true;
            }
        }
        Nfa { n_states: n, start: 0, finals, edges }
    }

    pub fn star(&self) -> Nfa {
        let off = 1;
        let n = 1 + self.n_states;
        let mut edges: Vec<(usize, Option<PairId>, usize)> = Vec::new();
        edges.push((0, None, self.start + off));
        edges.extend(self.edges.iter().map(|&(f, p, t)| (f + off, p, t + off)));
        let mut finals = vec![false; n];
        finals[0] = true;
        for (s, &f) in self.finals.iter().enumerate() {
            if f {
                finals[s + off] = true;
                edges.push((s + off, None, 0));
            }
        }
        Nfa { n_states: n, start: 0, finals, edges }
    }

    pub fn plus(&self) -> Nfa {
        self.concat(&self.star())
    }

    pub fn optional(&self) -> Nfa {
        self.union(&Nfa::empty_string())
    }

    fn eps_closure(&self, set: &mut Vec<bool>) {
        let mut changed = true;
        while changed {
            changed = false;
            for &(f, p, t) in &self.edges {
                if p.is_none() && set[f] && !set[t] {
                    set[t] = true;
                    changed = true;
                }
            }
        }
    }

    /// Direct NFA simulation; the brute-force oracle uses this so the
    /// acceptance path is independent of subset construction.
    pub fn accepts(&self, word: &[PairId]) -> bool {
        let mut cur = vec![false; self.n_states];
        cur[self.start] = true;
        self.eps_closure(&mut cur);
        for &sym in word {
            let mut next = vec![false; self.n_states];
            for &(f, p, t) in &self.edges {
                if p == Some(sym) && cur[f] {
                    next[t] = true;
                }
            }
            self.eps_closure(&mut next);
            cur = next;
        }
        cur.iter().zip(self.finals.iter()).any(|(&c, &f)| c && f)
    }
}

/// Partial DFA: missing transitions reject.
#[derive(Debug, Clone)]
pub struct Dfa {
    pub n_pairs: usize,
    pub start: usize,
    pub finals: Vec<bool>,
    /// trans[state][pair] = Some(target)
    pub trans: Vec<Vec<Option<usize>>>,
}

impl Dfa {
    pub fn accepts(&self, word: &[PairId]) -> bool {
        let mut s = self.start;
        for &p in word {
            match self.trans[s][p] {
                Some(t) => s = t,
                None => return false,
            }
        }
        self.finals[s]
    }

    /// Language is empty or contains only the empty string.
    pub fn at_most_epsilon(&self) -> bool {
        // Any reachable final state via a nonempty path falsifies this.
        let mut seen = vec![false; self.finals.len()];
        let mut stack = vec![(self.start, false)];
        while let Some((s, moved)) = stack.pop() {
            if moved && self.finals[s] {
                return false;
            }
            if moved && seen[s] {
                continue;
            }
            if moved {
                seen[s] = true;
            }
            for p in 0..self.n_pairs {
                if let Some(t) = self.trans[s][p] {
                    if !moved || !seen[t] {
                        stack.push((t, true));
                    }
                }
            }
        }
        true
    }
}

pub fn determinize(nfa: &Nfa, n_pairs: usize) -> Dfa {
    use std::collections::HashMap;
    let mut start_set = vec![false; nfa.n_states];
    start_set[nfa.start] = true;
    nfa.eps_closure(&mut start_set);
    let key = |set: &[bool]| -> Vec<usize> {
        set.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect()
    };
    let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut sets: Vec<Vec<bool>> = Vec::new();
    ids.insert(key(&start_set), 0);
    sets.push(start_set);
    let mut trans: Vec<Vec<Option<usize>>> = Vec::new();
    let mut finals: Vec<bool> = Vec::new();
    let mut i = 0;
    while i < sets.len() {
        let cur = sets[i].clone();
        finals.push(cur.iter().zip(nfa.finals.iter()).any(|(&c, &f)| c && f));
        let mut row: Vec<Option<usize>> = vec![None; n_pairs];
        for (p, slot) in row.iter_mut().enumerate() {
            let mut next = vec![false; nfa.n_states];
            let mut nonempty = false;
            for &(f, sym, t) in &nfa.edges {
                if sym == Some(p) && cur[f] {
                    next[t] = true;
                    nonempty = true;
                }
            }
            if nonempty {
                nfa.eps_closure(&mut next);
                let k = key(&next);
                let id = *ids.entry(k).or_insert_with(|| {
                    sets.push(next.clone());
                    sets.len() - 1
                });
                *slot = Some(id);
            }
        }
        trans.push(row);
        i += 1;
    }
    Dfa { n_pairs, start: 0, finals, trans }
}

/// Complement over the full pair alphabet (completes with a sink first).
pub fn complement(dfa: &Dfa) -> Dfa {
    let mut d = dfa.clone();
    let sink = d.finals.len();
    let mut need_sink = false;
    for row in &mut d.trans {
        for slot in row.iter_mut() {
            if slot.is_none() {
                *slot = Some(sink);
                need_sink = true;
            }
        }
    }
    if need_sink {
        d.finals.push(false);
        d.trans.push(vec![Some(sink); d.n_pairs]);
    }
    for f in &mut d.finals {
        *f = !*f;
    }
    d
}

pub fn dfa_intersect(a: &Dfa, b: &Dfa) -> Dfa {
    use std::collections::HashMap;
    assert_eq!(a.n_pairs, b.n_pairs);
    let mut ids: HashMap<(usize, usize), usize> = HashMap::new();
    let mut order: Vec<(usize, usize)> = Vec::new();
    ids.insert((a.start, b.start), 0);
    order.push((a.start, b.start));
    let mut trans: Vec<Vec<Option<usize>>> = Vec::new();
    let mut finals: Vec<bool> = Vec::new();
    let mut i = 0;
    while i < order.len() {
        let (pa, pb) = order[i];
        finals.push(a.finals[pa] && b.finals[pb]);
        let mut row = vec![None; a.n_pairs];
        for (p, slot) in row.iter_mut().enumerate() {
            if let (Some(ta), Some(tb)) = (a.trans[pa][p], b.trans[pb][p]) {
                let id = *ids.entry((ta, tb)).or_insert_with(|| {
                    order.push((ta, tb));
                    order.len() - 1
                });
                *slot = Some(id);
            }
        }
        trans.push(row);
        i += 1;
    }
    Dfa { n_pairs: a.n_pairs, start: 0, finals, trans }
}

/// Trims dead states and merges equivalent ones (Moore refinement); the
/// result is the unique minimal partial DFA of the language.
pub fn dfa_minimize(d: &Dfa) -> Dfa {
    let n = d.finals.len();
    // Productive states: can reach a final state.
    let mut productive = d.finals.clone();
    let mut changed = true;
    while changed {
        changed = false;
        for s in 0..n {
            if productive[s] {
                continue;
            }
            for p in 0..d.n_pairs {
                if let Some(t) = d.trans[s][p] {
                    if productive[t] {
                        productive[s] = true;
                        changed = true;
                        break;
                    }
                }
            }
        }
    }
    if !productive[d.start] {
        return Dfa {
            n_pairs: d.n_pairs,
            start: 0,
            finals: vec![false],
            trans: vec![vec![None; d.n_pairs]],
        };
    }
    // Moore partition refinement over productive states.
    let mut block: Vec<usize> = (0..n).map(|s| d.finals[s] as usize).collect();
    loop {
        use std::collections::HashMap;
        let mut sig_ids: HashMap<(usize, Vec<Option<usize>>), usize> = HashMap::new();
        let mut next_block = vec![0usize; n];
        for s in 0..n {
            if !productive[s] {
                continue;
            }
            let sig: Vec<Option<usize>> = (0..d.n_pairs)
                .map(|p| {
                    d.trans[s][p].and_then(|t| if productive[t] { Some(block[t]) } else { None })
                })
                .collect();
            let key = (block[s], sig);
            let len = sig_ids.len();
            let id = *sig_ids.entry(key).or_insert(len);
            next_block[s] = id;
        }
        if next_block == block {
            break;
        }
        block = next_block;
    }
    let n_blocks = block
        .iter()
        .enumerate()
        .filter(|(s, _)| productive[*s])
        .map(|(_, &b)| b + 1)
        .max()
        .unwrap_or(1);
    let mut finals = vec![false; n_blocks];
    let mut trans = vec![vec![None; d.n_pairs]; n_blocks];
    for s in 0..n {
        if !productive[s] {
            continue;
        }
        let b = block[s];
        finals[b] = d.finals[s];
        for p in 0..d.n_pairs {
            if let Some(t) = d.trans[s][p] {
                if productive[t] {
                    trans[b][p] = Some(block[t]);
                }
            }
        }
    }
    Dfa { n_pairs: d.n_pairs, start: block[d.start], finals, trans }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_words(n_pairs: usize, max_len: usize) -> Vec<Vec<PairId>> {
        let mut out = vec![vec![]];
        let mut layer = vec![vec![]];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &layer {
                for p in 0..n_pairs {
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

    #[test]
    fn determinize_preserves_language() {
        // (0|1)* 0 1
        let n = Nfa::universe(2)
            .concat(&Nfa::symbols(&[0]))
            .concat(&Nfa::symbols(&[1]));
        let d = determinize(&n, 2);
        for w in all_words(2, 6) {
            assert_eq!(n.accepts(&w), d.accepts(&w), "{w:?}");
        }
    }

    #[test]
    fn complement_flips_acceptance() {
        let n = Nfa::symbols(&[0]).plus();
        let d = determinize(&n, 2);
        let c = complement(&d);
        for w in all_words(2, 5) {
            assert_eq!(n.accepts(&w), !c.accepts(&w), "{w:?}");
        }
    }

    #[test]
    fn minimize_keeps_language_and_shrinks() {
        let n = Nfa::universe(3).concat(&Nfa::symbols(&[2])).concat(&Nfa::universe(3));
        let d = determinize(&n, 3);
        let m = dfa_minimize(&d);
        assert!(m.finals.len() <= d.finals.len());
        for w in all_words(3, 5) {
            assert_eq!(d.accepts(&w), m.accepts(&w));
        }
    }

    #[test]
    fn at_most_epsilon_detects_blocked_language() {
        let empty = determinize(&Nfa::nothing(), 2);
        assert!(empty.at_most_epsilon());
        let eps_only = determinize(&Nfa::empty_string(), 2);
        assert!(eps_only.at_most_epsilon());
        let nonempty = determinize(&Nfa::symbols(&[1]), 2);
        assert!(!nonempty.at_most_epsilon());
    }
}
