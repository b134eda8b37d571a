use std::collections::{BTreeMap, HashMap};

use super::connect;
use crate::error::{Error, Result};
use crate::fst::{Arc, Fst, Label, StateId, EPSILON};
use crate::semiring::Semiring;

fn check_unweighted_eps_free<W: Semiring>(fst: &Fst<W>) -> Result<()> {
    fst.check_acceptor()?;
    if let Some(w) = fst.first_weighted() {
        return Err(Error::Weighted(w.to_string()));
    }
    for q in fst.states() {
        if fst.arcs(q).iter().any(|a| a.ilabel == EPSILON) {
            return Err(Error::HasEpsilon(q));
        }
    }
    Ok(())
}

/// Subset construction from an arbitrary set of initial states.
fn subsets<W: Semiring>(fst: &Fst<W>, mut initial: Vec<StateId>, finals: &[bool]) -> Fst<W> {
    let mut out = Fst::new();
    initial.sort_unstable();
    initial.dedup();
    if initial.is_empty() {
        return out;
    }
    let mut ids: HashMap<Vec<StateId>, StateId> = HashMap::new();
    let mut queue = vec![initial.clone()];
    ids.insert(initial, out.add_state());
    out.set_start(0).expect("state exists");
    while let Some(set) = queue.pop() {
        let src = ids[&set];
        if set.iter().any(|&q| finals[q]) {
            out.set_final(src, W::one()).expect("state exists");
        }
        let mut moves: BTreeMap<Label, Vec<StateId>> = BTreeMap::new();
        for &q in &set {
            for a in fst.arcs(q) {
                moves.entry(a.ilabel).or_default().push(a.nextstate);
            }
        }
        for (label, mut target) in moves {
            target.sort_unstable();
            target.dedup();
            let dst = match ids.get(&target) {
                Some(&d) => d,
                None => {
                    let d = out.add_state();
                    ids.insert(target.clone(), d);
                    queue.push(target);
                    d
                }
            };
            out.add_arc(src, Arc::new(label, label, W::one(), dst))
                .expect("states exist");
        }
    }
    out
}

/// Determinizes an ε-free, unweighted acceptor by subset construction.
pub fn determinize<W: Semiring>(fst: &Fst<W>) -> Result<Fst<W>> {
    check_unweighted_eps_free(fst)?;
    let finals: Vec<bool> = fst.states().map(|q| fst.is_final(q)).collect();
    Ok(subsets(fst, fst.start().into_iter().collect(), &finals))
}

/// At most one arc per input label at every state, and no ε-arcs.
pub fn is_deterministic<W: Semiring>(fst: &Fst<W>) -> bool {
    first_nondeterministic(fst).is_none()
}

fn first_nondeterministic<W: Semiring>(fst: &Fst<W>) -> Option<StateId> {
    fst.states().find(|&q| {
        let mut labels: Vec<Label> = fst.arcs(q).iter().map(|a| a.ilabel).collect();
        labels.sort_unstable();
        labels.contains(&EPSILON) || labels.windows(2).any(|w| w[0] == w[1])
    })
}

/// Reverses an acceptor's arcs. A fresh start state 0 has ε-arcs to the old
/// final states (weighted by their final weights); the old start becomes
/// final with weight one.
pub fn reverse<W: Semiring>(fst: &Fst<W>) -> Fst<W> {
    let mut out = Fst::new();
    let Some(start) = fst.start() else {
        return out;
    };
    out.add_states(fst.num_states() + 1);
    out.set_start(0).expect("state exists");
    out.set_final(start + 1, W::one()).expect("state exists");
    for q in fst.states() {
        if let Some(w) = fst.final_weight(q) {
            out.add_arc(0, Arc::new(EPSILON, EPSILON, w.clone(), q + 1))
                .expect("states exist");
        }
        for a in fst.arcs(q) {
            out.add_arc(
                a.nextstate + 1,
                Arc::new(a.ilabel, a.olabel, a.weight.clone(), q + 1),
            )
            .expect("states exist");
        }
    }
    out
}

/// Reverses and determinizes in one step, using the old final states as the
/// initial subset.
fn reverse_determinize<W: Semiring>(fst: &Fst<W>) -> Fst<W> {
    let mut rev = Fst::<W>::new();
    rev.add_states(fst.num_states());
    for q in fst.states() {
        for a in fst.arcs(q) {
            rev.add_arc(a.nextstate, Arc::new(a.ilabel, a.olabel, W::one(), q))
                .expect("states exist");
        }
    }
    let initial = fst.states().filter(|&q| fst.is_final(q)).collect();
    let mut finals = vec![false; fst.num_states()];
    if let Some(s) = fst.start() {
        finals[s] = true;
    }
    subsets(&rev, initial, &finals)
}

/// Minimal deterministic acceptor for the language of a deterministic,
/// ε-free, unweighted acceptor (Brzozowski's double reversal). Trimmed.
pub fn minimize<W: Semiring>(fst: &Fst<W>) -> Result<Fst<W>> {
    check_unweighted_eps_free(fst)?;
    if let Some(q) = first_nondeterministic(fst) {
        return Err(Error::NonDeterministic(q));
    }
    let trimmed = connect(fst);
    Ok(connect(&reverse_determinize(&reverse_determinize(
        &trimmed,
    ))))
}
