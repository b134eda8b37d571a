//! Weighted finite-state transducers with failure (φ) transitions.
//!
//! The crate provides a small eager FST toolkit (tropical, string and gallic
//! semirings, composition with φ-matching, ε-removal, determinization,
//! minimization) and uses it to implement failure transductions correctly by
//! routing output labels through gallic weights. On top of that sits a
//! MaxMatch tokenizer compiled from a vocabulary trie.

pub mod compose;
pub mod demo;
pub mod error;
pub mod fst;
pub mod maxmatch;
pub mod phi_transduce;
pub mod semiring;
pub mod transforms;

pub use compose::{compose, phi_final_weight, phi_lookup, ComposeConfig, ComposeStats, PhiMatch};
pub use error::{Error, Result};
pub use fst::{Arc, Fst, Label, StateId, SymbolTable, EPSILON};
pub use maxmatch::{greedy_reference_tokenize, Tokenizer, Vocabulary};
pub use phi_transduce::{build_output_eraser, naive_phi_compose, phi_compose, phi_transduce};
pub use semiring::{GallicWeight, Semiring, StringWeight, TropicalWeight};
