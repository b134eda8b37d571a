use thiserror::Error;

use crate::fst::{Label, StateId};

/// Errors raised by machine construction, I/O and the algorithms.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("state {0} does not exist")]
    InvalidState(StateId),

    #[error("unknown symbol {0:?}")]
    UnknownSymbol(String),

    #[error("label {0} has no symbol")]
    UnknownLabel(Label),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("cannot parse weight {0:?}")]
    WeightParse(String),

    #[error("composition over a non-commutative semiring requires allow_noncommute")]
    NonCommutative,

    #[error("failure-transition cycle through state {0}")]
    PhiCycle(StateId),

    #[error("state {0} has more than one failure transition")]
    MultiplePhiArcs(StateId),

    #[error("state {0} is reached through a failure chain but has several epsilon continuations")]
    AmbiguousFailureContinuation(StateId),

    #[error("string weight has {0} symbols; factor weights before mapping back from the gallic semiring")]
    NeedsFactoring(usize),

    #[error("infinite string weight cannot be mapped to labels")]
    InfiniteString,

    #[error("expected an acceptor, but an arc at state {0} has different input and output labels")]
    NotAcceptor(StateId),

    #[error("epsilon cycle through state {0} carries a non-trivial weight")]
    WeightedEpsilonCycle(StateId),

    #[error("operation supports only unweighted machines, found weight {0}")]
    Weighted(String),

    #[error("machine has epsilon arcs at state {0}")]
    HasEpsilon(StateId),

    #[error("machine is not deterministic at state {0}")]
    NonDeterministic(StateId),

    #[error("machine is cyclic; its language is not finite")]
    Cyclic,

    #[error("expected exactly one accepting path, found {0}")]
    NotSinglePath(usize),

    #[error("duplicate token {0:?}")]
    DuplicateToken(String),

    #[error("empty token")]
    EmptyToken,

    #[error("token {0:?} collides with a reserved symbol")]
    ReservedToken(String),

    #[error("character {0:?} is used by a token but is not itself a token")]
    MissingCharToken(char),

    #[error("character {0:?} is outside the vocabulary alphabet")]
    OutsideAlphabet(char),
}

pub type Result<T> = std::result::Result<T, Error>;
