//! Mutable-vector FST representation, symbol tables, text I/O and drawing.

mod dot;
mod paths;
mod symbols;
mod text;

pub use dot::to_dot;
pub use paths::{finite_language, unique_path};
pub use symbols::{SymbolTable, EPSILON_SYMBOL, PHI_SYMBOL};
pub use text::{read_text, write_text};

use crate::error::{Error, Result};
use crate::semiring::Semiring;

pub type Label = u32;
pub type StateId = usize;

/// The reserved empty label.
pub const EPSILON: Label = 0;

#[derive(Clone, Debug, PartialEq)]
pub struct Arc<W> {
    pub ilabel: Label,
    pub olabel: Label,
    pub weight: W,
    pub nextstate: StateId,
}

impl<W> Arc<W> {
    pub fn new(ilabel: Label, olabel: Label, weight: W, nextstate: StateId) -> Self {
        Arc {
            ilabel,
            olabel,
            weight,
            nextstate,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
struct State<W> {
    arcs: Vec<Arc<W>>,
    final_weight: Option<W>,
}

impl<W> Default for State<W> {
    fn default() -> Self {
        State {
            arcs: Vec::new(),
            final_weight: None,
        }
    }
}

/// A weighted transducer with states `0..n`. Arcs are kept in insertion
/// order. Non-final states have no stored final weight; zero is never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct Fst<W> {
    states: Vec<State<W>>,
    start: Option<StateId>,
}

impl<W: Semiring> Default for Fst<W> {
    fn default() -> Self {
        Self::new()
    }
}

impl<W: Semiring> Fst<W> {
    pub fn new() -> Self {
        Fst {
            states: Vec::new(),
            start: None,
        }
    }

    pub fn add_state(&mut self) -> StateId {
        self.states.push(State::default());
        self.states.len() - 1
    }

    pub fn add_states(&mut self, n: usize) {
        self.states
            .resize_with(self.states.len() + n, State::default);
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn num_arcs(&self, state: StateId) -> usize {
        self.states[state].arcs.len()
    }

    pub fn total_arcs(&self) -> usize {
        self.states.iter().map(|s| s.arcs.len()).sum()
    }

    pub fn states(&self) -> std::ops::Range<StateId> {
        0..self.states.len()
    }

    pub fn start(&self) -> Option<StateId> {
        self.start
    }

    pub fn set_start(&mut self, state: StateId) -> Result<()> {
        self.check(state)?;
        self.start = Some(state);
        Ok(())
    }

    /// Sets the final weight; a zero weight makes the state non-final.
    pub fn set_final(&mut self, state: StateId, weight: W) -> Result<()> {
        self.check(state)?;
        self.states[state].final_weight = if weight.is_zero() { None } else { Some(weight) };
        Ok(())
    }

    pub fn final_weight(&self, state: StateId) -> Option<&W> {
        self.states[state].final_weight.as_ref()
    }

    /// Final weight, with zero for non-final states.
    pub fn final_or_zero(&self, state: StateId) -> W {
        self.final_weight(state).cloned().unwrap_or_else(W::zero)
    }

    pub fn is_final(&self, state: StateId) -> bool {
        self.states[state].final_weight.is_some()
    }

    pub fn add_arc(&mut self, state: StateId, arc: Arc<W>) -> Result<()> {
        self.check(state)?;
        self.check(arc.nextstate)?;
        self.states[state].arcs.push(arc);
        Ok(())
    }

    pub fn arcs(&self, state: StateId) -> &[Arc<W>] {
        &self.states[state].arcs
    }

    pub fn delete_arcs(&mut self, state: StateId) {
        self.states[state].arcs.clear();
    }

    pub fn is_acceptor(&self) -> bool {
        self.states
            .iter()
            .all(|s| s.arcs.iter().all(|a| a.ilabel == a.olabel))
    }

    pub(crate) fn check_acceptor(&self) -> Result<()> {
        for q in self.states() {
            if self.arcs(q).iter().any(|a| a.ilabel != a.olabel) {
                return Err(Error::NotAcceptor(q));
            }
        }
        Ok(())
    }

    /// Whether all arc and final weights equal one.
    pub fn is_unweighted(&self) -> bool {
        self.first_weighted().is_none()
    }

    pub(crate) fn first_weighted(&self) -> Option<&W> {
        self.states.iter().find_map(|s| {
            s.arcs
                .iter()
                .map(|a| &a.weight)
                .chain(s.final_weight.as_ref())
                .find(|w| !w.is_one())
        })
    }

    /// Applies `f` to every arc in place.
    pub fn map_arcs_in_place(&mut self, mut f: impl FnMut(&mut Arc<W>)) {
        for s in &mut self.states {
            s.arcs.iter_mut().for_each(&mut f);
        }
    }

    fn check(&self, state: StateId) -> Result<()> {
        if state < self.states.len() {
            Ok(())
        } else {
            Err(Error::InvalidState(state))
        }
    }

    /// A chain acceptor of `symbols`: `|symbols| + 1` states, the last one final.
    pub fn linear_acceptor<S: AsRef<str>>(symbols: &[S], syms: &SymbolTable) -> Result<Self> {
        let labels = symbols
            .iter()
            .map(|s| syms.get(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::linear_from_labels(&labels))
    }

    pub fn linear_from_labels(labels: &[Label]) -> Self {
        let mut fst = Fst::new();
        fst.add_states(labels.len() + 1);
        fst.start = Some(0);
        for (i, &l) in labels.iter().enumerate() {
            fst.states[i].arcs.push(Arc::new(l, l, W::one(), i + 1));
        }
        fst.states[labels.len()].final_weight = Some(W::one());
        fst
    }
}
