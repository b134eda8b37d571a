use std::fmt::Write as _;

use super::{Fst, Label, SymbolTable};
use crate::semiring::Semiring;

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn sym(syms: &SymbolTable, l: Label) -> String {
    syms.symbol(l).map_or_else(|| l.to_string(), str::to_string)
}

/// Renders a Graphviz digraph. Final states are double circles, the start
/// state is bold, and weights other than one are shown in `[brackets]`.
pub fn to_dot<W: Semiring>(fst: &Fst<W>, syms: &SymbolTable) -> String {
    let mut out = String::from("digraph FST {\n  rankdir = LR;\n  node [shape = circle];\n");
    for q in fst.states() {
        let mut label = q.to_string();
        let mut attrs = Vec::new();
        if let Some(w) = fst.final_weight(q) {
            attrs.push("shape = doublecircle".to_string());
            if !w.is_one() {
                let _ = write!(label, "/[{}]", w.render(syms));
            }
        }
        if fst.start() == Some(q) {
            attrs.push("style = bold".to_string());
        }
        attrs.insert(0, format!("label = \"{}\"", escape(&label)));
        let _ = writeln!(out, "  {q} [{}];", attrs.join(", "));
    }
    for q in fst.states() {
        for arc in fst.arcs(q) {
            let mut label = if arc.ilabel == arc.olabel {
                sym(syms, arc.ilabel)
            } else {
                format!("{}:{}", sym(syms, arc.ilabel), sym(syms, arc.olabel))
            };
            if !arc.weight.is_one() {
                let _ = write!(label, "/[{}]", arc.weight.render(syms));
            }
            let _ = writeln!(
                out,
                "  {q} -> {} [label = \"{}\"];",
                arc.nextstate,
                escape(&label)
            );
        }
    }
    out.push_str("}\n");
    out
}
