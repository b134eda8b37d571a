use std::collections::HashMap;

use super::connect;
use crate::error::{Error, Result};
use crate::fst::{Arc, Fst, Label, StateId, EPSILON};
use crate::semiring::Semiring;

fn eps_reachable<W: Semiring>(fst: &Fst<W>, from: StateId, to: StateId) -> bool {
    let mut seen = vec![false; fst.num_states()];
    let mut stack = vec![from];
    seen[from] = true;
    while let Some(q) = stack.pop() {
        if q == to {
            return true;
        }
        for a in fst.arcs(q).iter().filter(|a| a.ilabel == EPSILON) {
            if !seen[a.nextstate] {
                seen[a.nextstate] = true;
                stack.push(a.nextstate);
            }
        }
    }
    false
}

/// ε-closure of `q`: every state reachable through ε-arcs with the `⊕` of
/// the path weights.
fn closure<W: Semiring>(fst: &Fst<W>, q: StateId) -> Vec<(StateId, W)> {
    let mut dist: HashMap<StateId, W> = HashMap::from([(q, W::one())]);
    let mut order = vec![q];
    let mut queue = vec![q];
    while let Some(p) = queue.pop() {
        let dp = dist[&p].clone();
        for a in fst.arcs(p).iter().filter(|a| a.ilabel == EPSILON) {
            let cand = dp.times(&a.weight);
            let updated = match dist.get(&a.nextstate) {
                None => {
                    order.push(a.nextstate);
                    cand
                }
                Some(old) => {
                    let sum = old.plus(&cand);
                    if sum == *old {
                        continue;
                    }
                    sum
                }
            };
            dist.insert(a.nextstate, updated);
            queue.push(a.nextstate);
        }
    }
    order
        .into_iter()
        .map(|s| (s, dist.remove(&s).expect("visited")))
        .collect()
}

/// Removes ε-arcs from an acceptor, folding closure weights into the
/// successor arcs and final weights. The result is trimmed.
pub fn rm_epsilon<W: Semiring>(fst: &Fst<W>) -> Result<Fst<W>> {
    fst.check_acceptor()?;
    for q in fst.states() {
        for a in fst.arcs(q) {
            if a.ilabel == EPSILON && !a.weight.is_one() && eps_reachable(fst, a.nextstate, q) {
                return Err(Error::WeightedEpsilonCycle(q));
            }
        }
    }

    let mut out = Fst::new();
    out.add_states(fst.num_states());
    if let Some(s) = fst.start() {
        out.set_start(s)?;
    }
    for q in fst.states() {
        let mut final_w = W::zero();
        // (label, target) -> index into `arcs`; parallel arcs are merged with ⊕
        let mut index: HashMap<(Label, StateId), usize> = HashMap::new();
        let mut arcs: Vec<Arc<W>> = Vec::new();
        for (p, w) in closure(fst, q) {
            if let Some(f) = fst.final_weight(p) {
                final_w = final_w.plus(&w.times(f));
            }
            for a in fst.arcs(p).iter().filter(|a| a.ilabel != EPSILON) {
                let aw = w.times(&a.weight);
                match index.get(&(a.ilabel, a.nextstate)) {
                    Some(&i) => arcs[i].weight = arcs[i].weight.plus(&aw),
                    None => {
                        index.insert((a.ilabel, a.nextstate), arcs.len());
                        arcs.push(Arc::new(a.ilabel, a.olabel, aw, a.nextstate));
                    }
                }
            }
        }
        for a in arcs {
            if !a.weight.is_zero() {
                out.add_arc(q, a)?;
            }
        }
        out.set_final(q, final_w)?;
    }
    Ok(connect(&out))
}
