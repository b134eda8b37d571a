use crate::fst::{Arc, Fst, StateId};
use crate::semiring::Semiring;

/// Keeps only states that are both accessible and coaccessible, preserving
/// their relative order. A machine with an empty language becomes empty.
pub fn connect<W: Semiring>(fst: &Fst<W>) -> Fst<W> {
    let n = fst.num_states();
    let Some(start) = fst.start() else {
        return Fst::new();
    };

    let mut access = vec![false; n];
    let mut stack = vec![start];
    access[start] = true;
    let mut preds: Vec<Vec<StateId>> = vec![Vec::new(); n];
    while let Some(q) = stack.pop() {
        for a in fst.arcs(q) {
            preds[a.nextstate].push(q);
            if !access[a.nextstate] {
                access[a.nextstate] = true;
                stack.push(a.nextstate);
            }
        }
    }

    let mut coaccess = vec![false; n];
    let mut stack: Vec<StateId> = fst
        .states()
        .filter(|&q| access[q] && fst.is_final(q))
        .collect();
    for &q in &stack {
        coaccess[q] = true;
    }
    while let Some(q) = stack.pop() {
        for &p in &preds[q] {
            if !coaccess[p] {
                coaccess[p] = true;
                stack.push(p);
            }
        }
    }

    if !coaccess[start] {
        return Fst::new();
    }
    let mut map = vec![None; n];
    let mut out = Fst::new();
    for q in fst.states().filter(|&q| access[q] && coaccess[q]) {
        map[q] = Some(out.add_state());
    }
    for q in fst.states() {
        let Some(nq) = map[q] else { continue };
        if let Some(w) = fst.final_weight(q) {
            out.set_final(nq, w.clone()).expect("state exists");
        }
        for a in fst.arcs(q) {
            if let Some(t) = map[a.nextstate] {
                out.add_arc(nq, Arc::new(a.ilabel, a.olabel, a.weight.clone(), t))
                    .expect("state exists");
            }
        }
    }
    out.set_start(map[start].expect("start is kept"))
        .expect("state exists");
    out
}
