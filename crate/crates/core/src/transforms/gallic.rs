use crate::error::{Error, Result};
use crate::fst::{Arc, Fst, EPSILON};
use crate::semiring::{GallicWeight, Semiring, StringWeight, TropicalWeight};

/// Moves each output label into the string part of a gallic weight:
/// `(i, o, w)` becomes `(i, i, (o, w))`, with `ε` giving the empty string.
pub fn to_gallic(fst: &Fst<TropicalWeight>) -> Fst<GallicWeight> {
    let mut out = Fst::new();
    out.add_states(fst.num_states());
    for q in fst.states() {
        for a in fst.arcs(q) {
            let w = GallicWeight::new(StringWeight::from_label(a.olabel), a.weight);
            out.add_arc(q, Arc::new(a.ilabel, a.ilabel, w, a.nextstate))
                .expect("same state set");
        }
        if let Some(&w) = fst.final_weight(q) {
            out.set_final(q, GallicWeight::new(StringWeight::one(), w))
                .expect("same state set");
        }
    }
    if let Some(s) = fst.start() {
        out.set_start(s).expect("same state set");
    }
    out
}

fn single_label(s: &StringWeight) -> Result<Option<u32>> {
    match s.labels() {
        None => Err(Error::InfiniteString),
        Some([]) => Ok(None),
        Some([l]) => Ok(Some(*l)),
        Some(more) => Err(Error::NeedsFactoring(more.len())),
    }
}

/// Inverse of [`to_gallic`] for factored machines. A final weight with a
/// one-symbol string becomes an `ε:s` arc into a fresh final state.
pub fn from_gallic(fst: &Fst<GallicWeight>) -> Result<Fst<TropicalWeight>> {
    let mut out = Fst::new();
    out.add_states(fst.num_states());
    for q in fst.states() {
        for a in fst.arcs(q) {
            if a.ilabel != a.olabel {
                return Err(Error::NotAcceptor(q));
            }
            let olabel = single_label(&a.weight.string)?.unwrap_or(EPSILON);
            out.add_arc(q, Arc::new(a.ilabel, olabel, a.weight.weight, a.nextstate))?;
        }
        if let Some(w) = fst.final_weight(q) {
            match single_label(&w.string)? {
                None => out.set_final(q, w.weight)?,
                Some(l) => {
                    let f = out.add_state();
                    out.set_final(f, TropicalWeight::one())?;
                    out.add_arc(q, Arc::new(EPSILON, l, w.weight, f))?;
                }
            }
        }
    }
    if let Some(s) = fst.start() {
        out.set_start(s)?;
    }
    Ok(out)
}
