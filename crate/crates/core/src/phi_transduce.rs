//! Failure-transition transduction through the gallic semiring.
//!
//! Plain φ-matching accumulates weights along failure chains but drops their
//! output labels. The pipeline here moves every output label into a gallic
//! string weight, composes with φ-matching so the strings accumulate along
//! the chains, and then turns the strings back into arcs:
//!
//! 1. `pattern_erased`: pattern ∘ output eraser, so every left weight has an
//!    empty string part and commutes with everything.
//! 2. `pattern_gal`, `transducer_gal`: both operands mapped to gallic weights.
//! 3. `composed_gal`: composition with φ-matching on the transducer.
//! 4. `factored`: multi-symbol string weights split into one-symbol arcs.
//! 5. `converted_back`: string weights moved back to output labels.
//! 6. `composed_proj`: projection onto the outputs.
//! 7. `composed_proj_rm_eps`, `det`: ε-removal, determinization and
//!    minimization.
//!
//! Every stage is materialized.

use log::debug;

use crate::compose::{compose, compose_with_stats, ComposeConfig, ComposeStats};
use crate::error::Result;
use crate::fst::{to_dot, write_text, Arc, Fst, Label, SymbolTable, EPSILON};
use crate::semiring::{GallicWeight, Semiring, TropicalWeight};
use crate::transforms::{
    determinize, factor_weights, from_gallic, minimize, project, rm_epsilon, to_gallic, ProjectSide,
};

type T = TropicalWeight;
type G = GallicWeight;

/// Single final state with a `v:ε` self-loop for every symbol `v` of `syms`
/// other than `ε` and `phi`.
pub fn build_output_eraser(syms: &SymbolTable, phi: Option<Label>) -> Fst<T> {
    let mut fst = Fst::new();
    let q = fst.add_state();
    fst.set_start(q).expect("state exists");
    fst.set_final(q, T::one()).expect("state exists");
    for l in syms.consuming_labels(phi) {
        fst.add_arc(q, Arc::new(l, EPSILON, T::one(), q))
            .expect("state exists");
    }
    fst
}

/// All intermediate machines of one transduction.
#[derive(Clone, Debug)]
pub struct PhiTransduction {
    pub pattern_erased: Fst<T>,
    pub pattern_gal: Fst<G>,
    pub transducer_gal: Fst<G>,
    pub composed_gal: Fst<G>,
    pub factored: Fst<G>,
    pub converted_back: Fst<T>,
    pub composed_proj: Fst<T>,
    pub composed_proj_rm_eps: Fst<T>,
    /// The minimized output acceptor.
    pub det: Fst<T>,
    pub compose_stats: ComposeStats,
}

/// Text and drawing of one pipeline stage.
#[derive(Clone, Debug)]
pub struct StageDump {
    pub name: &'static str,
    pub states: usize,
    pub arcs: usize,
    pub text: String,
    pub dot: String,
}

impl StageDump {
    fn new<W: Semiring>(name: &'static str, fst: &Fst<W>, syms: &SymbolTable) -> Result<Self> {
        Ok(StageDump {
            name,
            states: fst.num_states(),
            arcs: fst.total_arcs(),
            text: write_text(fst, syms)?,
            dot: to_dot(fst, syms),
        })
    }

    /// `stage_<k>_<name>` file stem, with `k` counted from 1.
    pub fn file_stem(&self, index: usize) -> String {
        format!("stage_{}_{}", index + 1, self.name)
    }
}

impl PhiTransduction {
    /// Stage dumps in pipeline order.
    pub fn dumps(&self, syms: &SymbolTable) -> Result<Vec<StageDump>> {
        Ok(vec![
            StageDump::new("pattern_erased", &self.pattern_erased, syms)?,
            StageDump::new("pattern_gal", &self.pattern_gal, syms)?,
            StageDump::new("transducer_gal", &self.transducer_gal, syms)?,
            StageDump::new("composed_gal", &self.composed_gal, syms)?,
            StageDump::new("factored", &self.factored, syms)?,
            StageDump::new("converted_back", &self.converted_back, syms)?,
            StageDump::new("composed_proj", &self.composed_proj, syms)?,
            StageDump::new("composed_proj_rm_eps", &self.composed_proj_rm_eps, syms)?,
            StageDump::new("det", &self.det, syms)?,
        ])
    }

    /// `(name, states, arcs)` per stage.
    pub fn stage_sizes(&self) -> Vec<(&'static str, usize, usize)> {
        fn size<W: Semiring>(n: &'static str, f: &Fst<W>) -> (&'static str, usize, usize) {
            (n, f.num_states(), f.total_arcs())
        }
        vec![
            size("pattern_erased", &self.pattern_erased),
            size("pattern_gal", &self.pattern_gal),
            size("transducer_gal", &self.transducer_gal),
            size("composed_gal", &self.composed_gal),
            size("factored", &self.factored),
            size("converted_back", &self.converted_back),
            size("composed_proj", &self.composed_proj),
            size("composed_proj_rm_eps", &self.composed_proj_rm_eps),
            size("det", &self.det),
        ]
    }
}

/// Runs the full pipeline and keeps every stage.
pub fn phi_transduce(
    pattern: &Fst<T>,
    transducer: &Fst<T>,
    syms: &SymbolTable,
    phi: Label,
) -> Result<PhiTransduction> {
    pattern.check_acceptor()?;
    let eraser = build_output_eraser(syms, Some(phi));
    let pattern_erased = compose(pattern, &eraser, ComposeConfig::default())?;
    let pattern_gal = to_gallic(&pattern_erased);
    let transducer_gal = to_gallic(transducer);
    let cfg = ComposeConfig::with_phi(phi).allow_noncommute();
    let (composed_gal, compose_stats) = compose_with_stats(&pattern_gal, &transducer_gal, cfg)?;
    let factored = factor_weights(&composed_gal);
    let converted_back = from_gallic(&factored)?;
    let composed_proj = project(&converted_back, ProjectSide::Output);
    let composed_proj_rm_eps = rm_epsilon(&composed_proj)?;
    let det = minimize(&determinize(&composed_proj_rm_eps)?)?;

    let result = PhiTransduction {
        pattern_erased,
        pattern_gal,
        transducer_gal,
        composed_gal,
        factored,
        converted_back,
        composed_proj,
        composed_proj_rm_eps,
        det,
        compose_stats,
    };
    for (name, states, arcs) in result.stage_sizes() {
        debug!("{name}: {states} states, {arcs} arcs");
    }
    debug!("gallic composition: {:?}", result.compose_stats);
    Ok(result)
}

/// Failure transduction of the language of `pattern` by `transducer`.
/// Returns the minimal acceptor of output sequences; an input with no
/// accepting path gives the empty machine.
pub fn phi_compose(
    pattern: &Fst<T>,
    transducer: &Fst<T>,
    syms: &SymbolTable,
    phi: Label,
) -> Result<Fst<T>> {
    phi_transduce(pattern, transducer, syms, phi).map(|t| t.det)
}

/// Composes directly in the tropical semiring with φ-matching, projects to
/// the outputs, then determinizes and minimizes.
///
/// This is the tempting but wrong approach: the matcher carries only the
/// weights of φ-arcs it traverses, so their output labels are lost. For the
/// pattern `a` and the transducer `0 -φ:c-> 1 -a:b-> 2` it yields `{b}`
/// rather than `{c b}`. Kept as a regression reference.
pub fn naive_phi_compose(pattern: &Fst<T>, transducer: &Fst<T>, phi: Label) -> Result<Fst<T>> {
    let composed = compose(pattern, transducer, ComposeConfig::with_phi(phi))?;
    let proj = project(&composed, ProjectSide::Output);
    minimize(&determinize(&rm_epsilon(&proj)?)?)
}
