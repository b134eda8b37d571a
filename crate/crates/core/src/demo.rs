//! Small reference machines and self-checking demonstrations.
//!
//! Each demonstration builds its inputs from scratch, runs one of the
//! composition methods, and compares the observed output language with the
//! known answer.

use std::collections::BTreeSet;

use crate::compose::{compose, ComposeConfig};
use crate::error::Result;
use crate::fst::{finite_language, Arc, Fst, Label, SymbolTable};
use crate::maxmatch::{greedy_reference_tokenize, Tokenizer, Vocabulary};
use crate::phi_transduce::{naive_phi_compose, phi_compose, phi_transduce, StageDump};
use crate::semiring::{Semiring, TropicalWeight};
use crate::transforms::{connect, determinize, minimize};

type T = TropicalWeight;

/// `<epsilon>`, `<phi>`, `a`, `b`, `c`.
pub fn abc_symbols() -> SymbolTable {
    let mut syms = SymbolTable::with_phi();
    for s in ["a", "b", "c"] {
        syms.add_symbol(s);
    }
    syms
}

fn label(syms: &SymbolTable, s: &str) -> Label {
    syms.find(s)
        .unwrap_or_else(|| panic!("demo table lacks {s:?}"))
}

/// Two states accepting exactly `a`.
pub fn single_symbol_acceptor(syms: &SymbolTable) -> Fst<T> {
    Fst::linear_from_labels(&[label(syms, "a")])
}

/// `0 -φ-> 1 -a-> 2`: accepts any single symbol that falls back to `a`.
pub fn phi_fallback_acceptor(syms: &SymbolTable) -> Fst<T> {
    three_state(syms, ("<phi>", "<phi>"), ("a", "a"))
}

/// `0 -φ:c-> 1 -a:b-> 2`: rewrites `a` as `c b`.
pub fn phi_rewrite_transducer(syms: &SymbolTable) -> Fst<T> {
    three_state(syms, ("<phi>", "c"), ("a", "b"))
}

fn three_state(syms: &SymbolTable, first: (&str, &str), second: (&str, &str)) -> Fst<T> {
    let mut f = Fst::new();
    f.add_states(3);
    f.set_start(0).expect("state exists");
    f.set_final(2, T::one()).expect("state exists");
    f.add_arc(
        0,
        Arc::new(label(syms, first.0), label(syms, first.1), T::one(), 1),
    )
    .expect("states exist");
    f.add_arc(
        1,
        Arc::new(label(syms, second.0), label(syms, second.1), T::one(), 2),
    )
    .expect("states exist");
    f
}

/// The vocabulary `{a, b, ab, aaaba}` and input used by the tokenizer walkthrough.
pub const WALKTHROUGH_VOCAB: [&str; 4] = ["a", "b", "ab", "aaaba"];
pub const WALKTHROUGH_INPUT: &str = "aaab";

/// Renders a set of label sequences as `{[x][y], [z]}`.
pub fn render_language(lang: &BTreeSet<Vec<Label>>, syms: &SymbolTable) -> Result<String> {
    let items = lang
        .iter()
        .map(|s| syms.bracketed(s))
        .collect::<Result<Vec<_>>>()?;
    Ok(format!("{{{}}}", items.join(", ")))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Demo {
    /// φ-composition of two automata.
    Automata,
    /// φ-composition of an automaton with a transducer, done naively.
    TransducerNaive,
    /// The same transduction through the gallic semiring.
    TransducerCorrect,
    /// MaxMatch tokenization walkthrough.
    Tokenizer,
}

#[derive(Clone, Debug)]
pub struct DemoReport {
    pub observed: String,
    pub expected: String,
    pub notes: Vec<String>,
    pub passed: bool,
    /// Stage dumps, for demonstrations that run the full pipeline.
    pub stages: Vec<StageDump>,
}

fn language_report(out: &Fst<T>, syms: &SymbolTable, expected: &str) -> Result<DemoReport> {
    let observed = render_language(&finite_language(out)?, syms)?;
    Ok(DemoReport {
        passed: observed == expected,
        observed,
        expected: expected.to_string(),
        notes: Vec::new(),
        stages: Vec::new(),
    })
}

pub fn run(demo: Demo) -> Result<DemoReport> {
    let syms = abc_symbols();
    let phi = label(&syms, "<phi>");
    let pattern = single_symbol_acceptor(&syms);
    match demo {
        Demo::Automata => {
            let composed = compose(
                &pattern,
                &phi_fallback_acceptor(&syms),
                ComposeConfig::with_phi(phi),
            )?;
            let det = minimize(&determinize(&composed)?)?;
            language_report(&det, &syms, "{[a]}")
        }
        Demo::TransducerNaive => {
            let out = naive_phi_compose(&pattern, &phi_rewrite_transducer(&syms), phi)?;
            let mut report = language_report(&out, &syms, "{[b]}")?;
            report.notes.push(
                "the output c of the failure arc is dropped; the correct answer is {[c][b]}".into(),
            );
            Ok(report)
        }
        Demo::TransducerCorrect => {
            let out = phi_compose(&pattern, &phi_rewrite_transducer(&syms), &syms, phi)?;
            language_report(&out, &syms, "{[c][b]}")
        }
        Demo::Tokenizer => tokenizer_walkthrough(),
    }
}

fn tokenizer_walkthrough() -> Result<DemoReport> {
    let vocab = Vocabulary::new(WALKTHROUGH_VOCAB)?;
    let expected_tokens = greedy_reference_tokenize(WALKTHROUGH_INPUT, &vocab)?;
    let tok = Tokenizer::new(vocab)?;
    let syms = tok.symbols();
    let pattern = tok.pattern(WALKTHROUGH_INPUT)?;
    let run = phi_transduce(&pattern, tok.transducer(), syms, tok.phi())?;

    let expected_labels: Vec<Label> = expected_tokens
        .iter()
        .map(|t| syms.get(t))
        .collect::<Result<_>>()?;
    let expected = render_language(&BTreeSet::from([expected_labels]), syms)?;
    let mut report = language_report(&run.det, syms, &expected)?;

    let single_path = run.det.num_states() == expected_tokens.len() + 1
        && run.det.total_arcs() == expected_tokens.len();
    report.notes.push(format!(
        "final machine: {} states, {} arcs{}",
        run.det.num_states(),
        run.det.total_arcs(),
        if single_path { " (single path)" } else { "" }
    ));
    let mut all_trim = true;
    for (name, states, arcs) in run.stage_sizes() {
        let trim = match name {
            "pattern_gal" => is_trim(&run.pattern_gal),
            "transducer_gal" => is_trim(&run.transducer_gal),
            "composed_gal" => is_trim(&run.composed_gal),
            "factored" => is_trim(&run.factored),
            "pattern_erased" => is_trim(&run.pattern_erased),
            "converted_back" => is_trim(&run.converted_back),
            "composed_proj" => is_trim(&run.composed_proj),
            "composed_proj_rm_eps" => is_trim(&run.composed_proj_rm_eps),
            _ => is_trim(&run.det),
        };
        all_trim &= trim;
        report.notes.push(format!(
            "{name}: {states} states, {arcs} arcs{}",
            if trim { "" } else { " (NOT trim)" }
        ));
    }
    report.stages = run.dumps(syms)?;
    report.passed &= single_path && all_trim && report.stages.len() == 9;
    Ok(report)
}

/// Whether every state lies on some start-to-final path.
pub fn is_trim<W: Semiring>(fst: &Fst<W>) -> bool {
    connect(fst) == *fst
}
