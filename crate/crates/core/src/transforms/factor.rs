use crate::fst::{Arc, Fst, StateId, EPSILON};
use crate::semiring::{GallicWeight, Semiring, StringWeight, TropicalWeight};

fn piece(label: u32, weight: TropicalWeight) -> GallicWeight {
    GallicWeight::new(StringWeight::Finite(vec![label]), weight)
}

/// Splits every multi-symbol string weight into a chain of one-symbol arcs.
///
/// The first arc of a chain keeps the input label and the whole tropical
/// weight; continuation arcs are `ε:ε` with tropical one. A multi-symbol
/// final weight becomes a chain ending in a fresh final state.
pub fn factor_weights(fst: &Fst<GallicWeight>) -> Fst<GallicWeight> {
    let mut out = Fst::new();
    out.add_states(fst.num_states());
    if let Some(s) = fst.start() {
        out.set_start(s).expect("same state set");
    }

    // Adds a chain for `labels` (at least two) from `src` into `dst`.
    let chain = |out: &mut Fst<GallicWeight>,
                 src: StateId,
                 ilabel: u32,
                 labels: &[u32],
                 weight: TropicalWeight,
                 dst: StateId| {
        let mut cur = src;
        for (k, &l) in labels.iter().enumerate() {
            let next = if k + 1 == labels.len() {
                dst
            } else {
                out.add_state()
            };
            let arc = if k == 0 {
                Arc::new(ilabel, ilabel, piece(l, weight), next)
            } else {
                Arc::new(EPSILON, EPSILON, piece(l, TropicalWeight::one()), next)
            };
            out.add_arc(cur, arc).expect("states exist");
            cur = next;
        }
    };

    for q in fst.states() {
        for a in fst.arcs(q) {
            match a.weight.string.labels() {
                Some(labels) if labels.len() > 1 => {
                    chain(&mut out, q, a.ilabel, labels, a.weight.weight, a.nextstate)
                }
                _ => {
                    out.add_arc(q, a.clone()).expect("states exist");
                }
            }
        }
        if let Some(w) = fst.final_weight(q) {
            match w.string.labels() {
                Some(labels) if labels.len() > 1 => {
                    let f = out.add_state();
                    out.set_final(f, GallicWeight::one()).expect("state exists");
                    chain(&mut out, q, EPSILON, labels, w.weight, f);
                }
                _ => out.set_final(q, w.clone()).expect("state exists"),
            }
        }
    }
    out
}
