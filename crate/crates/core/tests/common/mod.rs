//! Test-only oracles and random machine generators.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use phifst::fst::{Arc, Fst, Label, StateId, EPSILON};
use phifst::semiring::{GallicWeight, Semiring, StringWeight, TropicalWeight};
use phifst::transforms::{determinize, minimize, project, rm_epsilon, ProjectSide};
use phifst::{compose, ComposeConfig, Vocabulary};
use rand::seq::SliceRandom;
use rand::Rng;

pub type T = TropicalWeight;
pub type G = GallicWeight;

pub const PHI: Label = 1;
pub const A: Label = 2;
pub const B: Label = 3;
pub const C: Label = 4;

pub fn seeded(seed: u64) -> rand_chacha::ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

// ---------------------------------------------------------------- enumeration

fn eps_closure<W: Semiring>(fst: &Fst<W>, set: BTreeSet<StateId>) -> BTreeSet<StateId> {
    let mut out = set.clone();
    let mut stack: Vec<_> = set.into_iter().collect();
    while let Some(q) = stack.pop() {
        for a in fst.arcs(q) {
            if a.ilabel == EPSILON && out.insert(a.nextstate) {
                stack.push(a.nextstate);
            }
        }
    }
    out
}

/// Strings of length ≤ `max_len` accepted by an acceptor (weights ignored).
pub fn accepted<W: Semiring>(fst: &Fst<W>, max_len: usize) -> BTreeSet<Vec<Label>> {
    assert!(fst.is_acceptor(), "enumeration expects an acceptor");
    let mut lang = BTreeSet::new();
    let Some(start) = fst.start() else {
        return lang;
    };
    let mut frontier = vec![(eps_closure(fst, BTreeSet::from([start])), Vec::new())];
    while let Some((set, s)) = frontier.pop() {
        if set.iter().any(|&q| fst.is_final(q)) {
            lang.insert(s.clone());
        }
        if s.len() == max_len {
            continue;
        }
        let mut moves: BTreeMap<Label, BTreeSet<StateId>> = BTreeMap::new();
        for &q in &set {
            for a in fst.arcs(q).iter().filter(|a| a.ilabel != EPSILON) {
                moves.entry(a.ilabel).or_default().insert(a.nextstate);
            }
        }
        for (l, targets) in moves {
            let mut next = s.clone();
            next.push(l);
            frontier.push((eps_closure(fst, targets), next));
        }
    }
    lang
}

/// Weighted relation of a tropical transducer (non-negative weights)
/// restricted to input and output lengths ≤ `max_len`.
pub fn relation(fst: &Fst<T>, max_len: usize) -> BTreeMap<(Vec<Label>, Vec<Label>), f64> {
    type Config = (StateId, Vec<Label>, Vec<Label>);
    let mut out = BTreeMap::new();
    let Some(start) = fst.start() else { return out };
    let mut dist: BTreeMap<Config, f64> = BTreeMap::new();
    dist.insert((start, Vec::new(), Vec::new()), 0.0);
    let mut work = vec![(start, Vec::new(), Vec::new())];
    while let Some(cfg) = work.pop() {
        let w = dist[&cfg];
        let (q, i, o) = &cfg;
        for a in fst.arcs(*q) {
            let (mut i2, mut o2) = (i.clone(), o.clone());
            if a.ilabel != EPSILON {
                i2.push(a.ilabel);
            }
            if a.olabel != EPSILON {
                o2.push(a.olabel);
            }
            if i2.len() > max_len || o2.len() > max_len {
                continue;
            }
            let nw = w + a.weight.value();
            let next = (a.nextstate, i2, o2);
            if dist.get(&next).is_none_or(|&d| nw < d) {
                dist.insert(next.clone(), nw);
                work.push(next);
            }
        }
    }
    for ((q, i, o), w) in dist {
        if let Some(f) = fst.final_weight(q) {
            let e = out.entry((i, o)).or_insert(f64::INFINITY);
            *e = f64::min(*e, w + f.value());
        }
    }
    out
}

/// Weighted relation of a gallic acceptor: input labels against the
/// concatenated string parts, with the tropical part minimized.
pub fn gallic_relation(fst: &Fst<G>, max_len: usize) -> BTreeMap<(Vec<Label>, Vec<Label>), f64> {
    let mut out = BTreeMap::new();
    let Some(start) = fst.start() else { return out };
    let mut stack = vec![(start, Vec::new(), Vec::new(), 0.0)];
    while let Some((q, i, o, w)) = stack.pop() {
        if let Some(f) = fst.final_weight(q) {
            let mut o2: Vec<Label> = o.clone();
            o2.extend_from_slice(f.string.labels().expect("finite"));
            if o2.len() <= max_len {
                let e = out.entry((i.clone(), o2)).or_insert(f64::INFINITY);
                *e = f64::min(*e, w + f.weight.value());
            }
        }
        for a in fst.arcs(q) {
            let s = a.weight.string.labels().expect("finite");
            assert!(
                a.ilabel != EPSILON || !s.is_empty(),
                "silent arc in relation oracle"
            );
            let mut i2 = i.clone();
            if a.ilabel != EPSILON {
                i2.push(a.ilabel);
            }
            let mut o2 = o.clone();
            o2.extend_from_slice(s);
            if i2.len() <= max_len && o2.len() <= max_len {
                stack.push((a.nextstate, i2, o2, w + a.weight.weight.value()));
            }
        }
    }
    out
}

// ------------------------------------------------------- failure semantics

/// Resolves input `c` at `q` by failure semantics, returning the emitted
/// outputs (φ-hops, chain continuations and the matched arc) and targets.
pub fn resolve(r: &Fst<T>, q: StateId, c: Label) -> Vec<(Vec<Label>, StateId)> {
    let mut outs = Vec::new();
    let mut cur = q;
    let mut steps = 0;
    loop {
        steps += 1;
        assert!(steps < 1000, "failure cycle");
        let direct: Vec<_> = r.arcs(cur).iter().filter(|a| a.ilabel == c).collect();
        if !direct.is_empty() {
            return direct
                .into_iter()
                .map(|a| {
                    let mut o = outs.clone();
                    if a.olabel != EPSILON {
                        o.push(a.olabel);
                    }
                    (o, a.nextstate)
                })
                .collect();
        }
        let fallback = r.arcs(cur).iter().find(|a| a.ilabel == PHI).or_else(|| {
            (cur != q)
                .then(|| r.arcs(cur).iter().find(|a| a.ilabel == EPSILON))
                .flatten()
        });
        match fallback {
            Some(a) => {
                if a.olabel != EPSILON {
                    outs.push(a.olabel);
                }
                cur = a.nextstate;
            }
            None => return Vec::new(),
        }
    }
}

/// End-of-input outputs at `q`: stop at final states, otherwise follow φ and
/// ε arcs.
pub fn resolve_final(r: &Fst<T>, q: StateId) -> Vec<(Vec<Label>, f64)> {
    if let Some(w) = r.final_weight(q) {
        return vec![(Vec::new(), w.value())];
    }
    let mut out = Vec::new();
    for a in r
        .arcs(q)
        .iter()
        .filter(|a| a.ilabel == PHI || a.ilabel == EPSILON)
    {
        for (mut rest, w) in resolve_final(r, a.nextstate) {
            if a.olabel != EPSILON {
                rest.insert(0, a.olabel);
            }
            out.push((rest, w + a.weight.value()));
        }
    }
    out
}

fn add_output_chain(out: &mut Fst<T>, src: StateId, ilabel: Label, outs: &[Label], dst: StateId) {
    if outs.is_empty() {
        out.add_arc(src, Arc::new(ilabel, EPSILON, T::one(), dst))
            .unwrap();
        return;
    }
    let mut cur = src;
    for (k, &o) in outs.iter().enumerate() {
        let next = if k + 1 == outs.len() {
            dst
        } else {
            out.add_state()
        };
        let i = if k == 0 { ilabel } else { EPSILON };
        out.add_arc(cur, Arc::new(i, o, T::one(), next)).unwrap();
        cur = next;
    }
}

/// Replaces failure arcs by the arcs they induce: for every state and input
/// symbol the effective transition (with all outputs spelled out through
/// ε-chains), and effective end-of-input outputs. Assumes unit weights.
pub fn expand_failures(r: &Fst<T>, sigma: &[Label]) -> Fst<T> {
    let mut out = Fst::new();
    out.add_states(r.num_states());
    if let Some(s) = r.start() {
        out.set_start(s).unwrap();
    }
    for q in r.states() {
        for &c in sigma {
            for (outs, target) in resolve(r, q, c) {
                add_output_chain(&mut out, q, c, &outs, target);
            }
        }
        for a in r.arcs(q).iter().filter(|a| a.ilabel == EPSILON) {
            out.add_arc(q, a.clone()).unwrap();
        }
        for (outs, w) in resolve_final(r, q) {
            if outs.is_empty() {
                let cur = out.final_or_zero(q);
                out.set_final(q, cur.plus(&T::new(w))).unwrap();
            } else {
                let f = out.add_state();
                out.set_final(f, T::new(w)).unwrap();
                add_output_chain(&mut out, q, EPSILON, &outs, f);
            }
        }
    }
    out
}

/// Output language of `pattern` through `r`, computed on the expanded machine
/// with ordinary composition.
pub fn expanded_output_language(
    pattern: &Fst<T>,
    r: &Fst<T>,
    sigma: &[Label],
    max_len: usize,
) -> BTreeSet<Vec<Label>> {
    let expanded = expand_failures(r, sigma);
    let composed = compose(pattern, &expanded, ComposeConfig::default()).unwrap();
    let proj = project(&composed, ProjectSide::Output);
    let min = minimize(&determinize(&rm_epsilon(&proj).unwrap()).unwrap()).unwrap();
    accepted(&min, max_len)
}

/// Direct simulation of `r` on a single input string.
pub fn simulate(r: &Fst<T>, input: &[Label]) -> BTreeSet<Vec<Label>> {
    let Some(start) = r.start() else {
        return BTreeSet::new();
    };
    let mut configs: BTreeSet<(StateId, Vec<Label>)> = BTreeSet::from([(start, Vec::new())]);
    for &c in input {
        let mut next = BTreeSet::new();
        for (q, outs) in &configs {
            for (o, t) in resolve(r, *q, c) {
                let mut v = outs.clone();
                v.extend(o);
                next.insert((t, v));
            }
        }
        configs = next;
    }
    let mut result = BTreeSet::new();
    for (q, outs) in configs {
        for (o, _) in resolve_final(r, q) {
            let mut v = outs.clone();
            v.extend(o);
            result.insert(v);
        }
    }
    result
}

// ---------------------------------------------------------------- generators

/// Random unweighted acceptor over `labels` with up to `max_states` states.
pub fn random_acceptor(
    rng: &mut impl Rng,
    max_states: usize,
    labels: &[Label],
    acyclic: bool,
) -> Fst<T> {
    let n = rng.gen_range(1..=max_states);
    let mut f = Fst::new();
    f.add_states(n);
    f.set_start(0).unwrap();
    for q in 0..n {
        if rng.gen_bool(0.35) || q == n - 1 {
            f.set_final(q, T::one()).unwrap();
        }
        for &l in labels {
            let k = if rng.gen_bool(0.2) {
                2
            } else {
                rng.gen_range(0..=1)
            };
            for _ in 0..k {
                let target = if acyclic {
                    if q + 1 >= n {
                        continue;
                    }
                    rng.gen_range(q + 1..n)
                } else {
                    rng.gen_range(0..n)
                };
                f.add_arc(q, Arc::new(l, l, T::one(), target)).unwrap();
            }
        }
    }
    f
}

/// Random transducer with failure arcs. Failure arcs point to lower-numbered
/// states (so there are no failure cycles) and may emit up to two symbols,
/// the second through an ε-chain state.
pub fn random_phi_transducer(
    rng: &mut impl Rng,
    sigma: &[Label],
    outputs: &[Label],
    deterministic: bool,
) -> Fst<T> {
    let n = rng.gen_range(1..=4);
    let mut f = Fst::new();
    f.add_states(n);
    f.set_start(0).unwrap();
    let pick_out = |rng: &mut dyn rand::RngCore| -> Label {
        if rng.gen_bool(0.25) {
            EPSILON
        } else {
            *outputs.choose(rng).unwrap()
        }
    };
    for q in 0..n {
        if rng.gen_bool(if q == 0 { 0.6 } else { 0.4 }) {
            f.set_final(q, T::one()).unwrap();
        }
        for &c in sigma {
            if rng.gen_bool(0.5) {
                let o = pick_out(rng);
                f.add_arc(q, Arc::new(c, o, T::one(), rng.gen_range(0..n)))
                    .unwrap();
                if !deterministic && rng.gen_bool(0.15) {
                    let o = pick_out(rng);
                    f.add_arc(q, Arc::new(c, o, T::one(), rng.gen_range(0..n)))
                        .unwrap();
                }
            }
        }
        if q > 0 && rng.gen_bool(0.75) {
            let target = rng.gen_range(0..q);
            match rng.gen_range(0..3) {
                0 => f
                    .add_arc(q, Arc::new(PHI, EPSILON, T::one(), target))
                    .unwrap(),
                1 => {
                    let o = *outputs.choose(rng).unwrap();
                    f.add_arc(q, Arc::new(PHI, o, T::one(), target)).unwrap()
                }
                _ => {
                    let chain = f.add_state();
                    let (o1, o2) = (*outputs.choose(rng).unwrap(), *outputs.choose(rng).unwrap());
                    f.add_arc(q, Arc::new(PHI, o1, T::one(), chain)).unwrap();
                    f.add_arc(chain, Arc::new(EPSILON, o2, T::one(), target))
                        .unwrap();
                }
            }
        }
    }
    f
}

/// Random weighted transducer without ε:ε arcs.
pub fn random_transducer(rng: &mut impl Rng, max_states: usize) -> Fst<T> {
    let n = rng.gen_range(1..=max_states);
    let mut f = Fst::new();
    f.add_states(n);
    f.set_start(0).unwrap();
    let labels = [EPSILON, A, B];
    for q in 0..n {
        if rng.gen_bool(0.4) {
            f.set_final(q, T::new(rng.gen_range(0..3) as f64)).unwrap();
        }
        for _ in 0..rng.gen_range(0..4) {
            let (i, o) = loop {
                let i = *labels.choose(rng).unwrap();
                let o = *labels.choose(rng).unwrap();
                if i != EPSILON || o != EPSILON {
                    break (i, o);
                }
            };
            let w = T::new(rng.gen_range(0..4) as f64);
            f.add_arc(q, Arc::new(i, o, w, rng.gen_range(0..n)))
                .unwrap();
        }
    }
    f
}

/// Random gallic acceptor whose string weights may have several symbols.
/// ε-input arcs always carry a nonempty string.
pub fn random_gallic(rng: &mut impl Rng, max_states: usize) -> Fst<G> {
    let n = rng.gen_range(1..=max_states);
    let mut f = Fst::new();
    f.add_states(n);
    f.set_start(0).unwrap();
    let string = |rng: &mut dyn rand::RngCore, min: usize| {
        let len = rng.gen_range(min..=3);
        StringWeight::from_labels((0..len).map(|_| *[A, B, C].choose(rng).unwrap()))
    };
    for q in 0..n {
        if rng.gen_bool(0.4) {
            let s = string(rng, 0);
            f.set_final(q, G::new(s, T::new(rng.gen_range(0..3) as f64)))
                .unwrap();
        }
        for _ in 0..rng.gen_range(0..4) {
            let i = *[EPSILON, A, B].choose(rng).unwrap();
            let s = string(rng, usize::from(i == EPSILON));
            let w = G::new(s, T::new(rng.gen_range(0..4) as f64));
            f.add_arc(q, Arc::new(i, i, w, rng.gen_range(0..n)))
                .unwrap();
        }
    }
    f
}

/// Random vocabulary over the first `sigma_size` letters of `abc`: all
/// single characters plus random longer tokens, at most `max_tokens` in all.
pub fn random_vocab(
    rng: &mut impl Rng,
    sigma_size: usize,
    max_tokens: usize,
    max_len: usize,
) -> Vocabulary {
    let sigma: Vec<char> = "abc".chars().take(sigma_size).collect();
    let mut tokens: Vec<String> = sigma.iter().map(|c| c.to_string()).collect();
    let extra = rng.gen_range(0..=max_tokens - sigma_size);
    for _ in 0..extra * 3 {
        if tokens.len() >= sigma_size + extra {
            break;
        }
        let len = rng.gen_range(2..=max_len);
        let t: String = (0..len).map(|_| *sigma.choose(rng).unwrap()).collect();
        if !tokens.contains(&t) {
            tokens.push(t);
        }
    }
    Vocabulary::new(tokens).unwrap()
}

pub fn random_text(rng: &mut impl Rng, vocab: &Vocabulary, max_len: usize) -> String {
    let sigma: Vec<char> = vocab.sigma().iter().copied().collect();
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| *sigma.choose(rng).unwrap()).collect()
}

/// Least-squares fit `y = a + b x`; returns `(a, b, r²)`.
pub fn linear_fit(xs: &[f64], ys: &[f64]) -> (f64, f64, f64) {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let syy: f64 = ys.iter().map(|y| (y - my).powi(2)).sum();
    let b = sxy / sxx;
    let a = my - b * mx;
    let r2 = if syy == 0.0 {
        1.0
    } else {
        sxy * sxy / (sxx * syy)
    };
    (a, b, r2)
}
