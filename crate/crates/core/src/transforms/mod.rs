//! Whole-machine transformations used by the transduction pipeline.

mod connect;
mod determinize;
mod factor;
mod gallic;
mod rm_epsilon;

pub use connect::connect;
pub use determinize::{determinize, is_deterministic, minimize, reverse};
pub use factor::factor_weights;
pub use gallic::{from_gallic, to_gallic};
pub use rm_epsilon::rm_epsilon;

use crate::fst::Fst;
use crate::semiring::Semiring;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProjectSide {
    Input,
    Output,
}

/// Copies the chosen side's label onto both sides of every arc.
pub fn project<W: Semiring>(fst: &Fst<W>, side: ProjectSide) -> Fst<W> {
    let mut out = fst.clone();
    out.map_arcs_in_place(|a| match side {
        ProjectSide::Input => a.olabel = a.ilabel,
        ProjectSide::Output => a.ilabel = a.olabel,
    });
    out
}
