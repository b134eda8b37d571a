//! AT&T-style text format.
//!
//! ```text
//! src<TAB>dst<TAB>isym<TAB>osym[<TAB>weight]
//! state[<TAB>weight]
//! ```
//!
//! The source state of the first line is the start state and an omitted
//! weight means one. Reading accepts any whitespace as a separator.

use std::fmt::Write as _;

use super::{Arc, Fst, StateId, SymbolTable};
use crate::error::{Error, Result};
use crate::semiring::Semiring;

/// Parses a machine, interning symbols that `syms` does not know yet.
pub fn read_text<W: Semiring>(input: &str, syms: &mut SymbolTable) -> Result<Fst<W>> {
    enum Entry<W> {
        Arc(StateId, Arc<W>),
        Final(StateId, W),
    }

    let mut entries = Vec::new();
    let mut max_state = None::<StateId>;
    let mut start = None;

    for (idx, raw) in input.lines().enumerate() {
        let line = idx + 1;
        let fields: Vec<&str> = raw.split_whitespace().collect();
        if fields.is_empty() {
            continue;
        }
        let err = |msg: String| Error::Parse { line, msg };
        let state = |s: &str| {
            s.parse::<StateId>()
                .map_err(|_| err(format!("invalid state id {s:?}")))
        };
        let weight = |s: &str| s.parse::<W>().map_err(|e| err(e.to_string()));

        let src = state(fields[0])?;
        let entry = match fields.len() {
            1 => Entry::Final(src, W::one()),
            2 => Entry::Final(src, weight(fields[1])?),
            4 | 5 => {
                let dst = state(fields[1])?;
                let ilabel = syms.add_symbol(fields[2]);
                let olabel = syms.add_symbol(fields[3]);
                let w = match fields.get(4) {
                    Some(f) => weight(f)?,
                    None => W::one(),
                };
                max_state = max_state.max(Some(dst));
                Entry::Arc(src, Arc::new(ilabel, olabel, w, dst))
            }
            n => return Err(err(format!("expected 1, 2, 4 or 5 fields, found {n}"))),
        };
        max_state = max_state.max(Some(src));
        start.get_or_insert(src);
        entries.push(entry);
    }

    let mut fst = Fst::new();
    if let Some(max) = max_state {
        fst.add_states(max + 1);
    }
    if let Some(s) = start {
        fst.set_start(s)?;
    }
    for entry in entries {
        match entry {
            Entry::Arc(src, arc) => fst.add_arc(src, arc)?,
            Entry::Final(q, w) => fst.set_final(q, w)?,
        }
    }
    Ok(fst)
}

/// Prints a machine, start state first, then the remaining states in order.
/// Weights equal to one are omitted. A start state with no arcs and no final
/// weight is written as a final line with weight zero so that it stays the
/// start state when read back.
pub fn write_text<W: Semiring>(fst: &Fst<W>, syms: &SymbolTable) -> Result<String> {
    let mut out = String::new();
    let Some(start) = fst.start() else {
        return Ok(out);
    };
    if fst.num_arcs(start) == 0 && !fst.is_final(start) {
        let _ = writeln!(out, "{start}\t{}", W::zero());
    }
    let order = std::iter::once(start).chain(fst.states().filter(|&q| q != start));
    for q in order {
        for arc in fst.arcs(q) {
            let isym = syms.symbol_or_err(arc.ilabel)?;
            let osym = syms.symbol_or_err(arc.olabel)?;
            let _ = write!(out, "{q}\t{}\t{isym}\t{osym}", arc.nextstate);
            if !arc.weight.is_one() {
                let _ = write!(out, "\t{}", arc.weight);
            }
            out.push('\n');
        }
        if let Some(w) = fst.final_weight(q) {
            let _ = write!(out, "{q}");
            if !w.is_one() {
                let _ = write!(out, "\t{w}");
            }
            out.push('\n');
        }
    }
    Ok(out)
}
