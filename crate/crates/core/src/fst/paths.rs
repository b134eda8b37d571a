use std::collections::BTreeSet;

use super::{Fst, Label, StateId, EPSILON};
use crate::error::{Error, Result};
use crate::semiring::Semiring;

/// The set of output-label sequences of an acyclic machine, ignoring weights.
pub fn finite_language<W: Semiring>(fst: &Fst<W>) -> Result<BTreeSet<Vec<Label>>> {
    let mut out = BTreeSet::new();
    let Some(start) = fst.start() else {
        return Ok(out);
    };
    // (state, next arc index, output so far); `on_path` detects cycles.
    let mut on_path = vec![false; fst.num_states()];
    let mut stack: Vec<(StateId, usize, Vec<Label>)> = vec![(start, 0, Vec::new())];
    on_path[start] = true;
    if fst.is_final(start) {
        out.insert(Vec::new());
    }
    while let Some((q, i, prefix)) = stack.last_mut() {
        let q = *q;
        if let Some(arc) = fst.arcs(q).get(*i) {
            *i += 1;
            if on_path[arc.nextstate] {
                return Err(Error::Cyclic);
            }
            let mut next = prefix.clone();
            if arc.olabel != EPSILON {
                next.push(arc.olabel);
            }
            if fst.is_final(arc.nextstate) {
                out.insert(next.clone());
            }
            on_path[arc.nextstate] = true;
            stack.push((arc.nextstate, 0, next));
        } else {
            on_path[q] = false;
            stack.pop();
        }
    }
    Ok(out)
}

/// Output labels along the only accepting path of `fst`.
pub fn unique_path<W: Semiring>(fst: &Fst<W>) -> Result<Vec<Label>> {
    let Some(mut q) = fst.start() else {
        return Err(Error::NotSinglePath(0));
    };
    let mut seen = vec![false; fst.num_states()];
    let mut labels = Vec::new();
    loop {
        if seen[q] {
            return Err(Error::Cyclic);
        }
        seen[q] = true;
        match (fst.is_final(q), fst.arcs(q)) {
            (true, []) => return Ok(labels),
            (false, [arc]) => {
                if arc.olabel != EPSILON {
                    labels.push(arc.olabel);
                }
                q = arc.nextstate;
            }
            (false, []) => return Err(Error::NotSinglePath(0)),
            _ => return Err(Error::NotSinglePath(finite_language(fst)?.len())),
        }
    }
}
