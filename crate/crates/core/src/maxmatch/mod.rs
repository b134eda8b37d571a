//! MaxMatch (WordPiece-style greedy longest-match) tokenization.
//!
//! The vocabulary trie is compiled into a failure transducer in the manner of
//! an Aho-Corasick automaton: walking the trie consumes characters silently,
//! and a φ-arc at a node outputs the tokens that must be committed when the
//! next character cannot extend the current match. Tokenizing a string, or a
//! whole language given as an automaton, is then a failure transduction.

mod trie;
mod vocab;

pub use trie::{MaxMatchTrie, NodeId, TrieNode};
pub use vocab::Vocabulary;

use crate::compose::ComposeStats;
use crate::error::{Error, Result};
use crate::fst::{unique_path, Fst, Label, SymbolTable};
use crate::phi_transduce::{phi_compose, phi_transduce};
use crate::semiring::TropicalWeight;

/// A compiled MaxMatch tokenizer.
#[derive(Clone, Debug)]
pub struct Tokenizer {
    vocab: Vocabulary,
    trie: MaxMatchTrie,
    syms: SymbolTable,
    transducer: Fst<TropicalWeight>,
    phi: Label,
}

impl Tokenizer {
    pub fn new(vocab: Vocabulary) -> Result<Self> {
        let trie = MaxMatchTrie::build(&vocab);
        let syms = vocab.symbol_table();
        let transducer = trie.compile(&syms)?;
        let phi = syms.phi().expect("vocabulary tables include <phi>");
        Ok(Tokenizer {
            vocab,
            trie,
            syms,
            transducer,
            phi,
        })
    }

    pub fn vocab(&self) -> &Vocabulary {
        &self.vocab
    }

    pub fn trie(&self) -> &MaxMatchTrie {
        &self.trie
    }

    pub fn symbols(&self) -> &SymbolTable {
        &self.syms
    }

    pub fn transducer(&self) -> &Fst<TropicalWeight> {
        &self.transducer
    }

    pub fn phi(&self) -> Label {
        self.phi
    }

    /// Linear acceptor of the characters of `text`.
    pub fn pattern(&self, text: &str) -> Result<Fst<TropicalWeight>> {
        let labels = text
            .chars()
            .map(|c| {
                self.syms
                    .find(&c.to_string())
                    .ok_or(Error::OutsideAlphabet(c))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Fst::linear_from_labels(&labels))
    }

    pub fn tokenize(&self, text: &str) -> Result<Vec<String>> {
        self.tokenize_with_stats(text).map(|(t, _)| t)
    }

    /// Tokenizes and also reports the composition work.
    pub fn tokenize_with_stats(&self, text: &str) -> Result<(Vec<String>, ComposeStats)> {
        let pattern = self.pattern(text)?;
        let run = phi_transduce(&pattern, &self.transducer, &self.syms, self.phi)?;
        let tokens = unique_path(&run.det)?
            .into_iter()
            .map(|l| self.syms.symbol_or_err(l).map(str::to_string))
            .collect::<Result<_>>()?;
        Ok((tokens, run.compose_stats))
    }

    /// Tokenizes every string of `pattern`, an acceptor over the labels of
    /// [`Tokenizer::symbols`]. The result accepts exactly the greedy
    /// tokenization of each string.
    pub fn tokenize_language(&self, pattern: &Fst<TropicalWeight>) -> Result<Fst<TropicalWeight>> {
        phi_compose(pattern, &self.transducer, &self.syms, self.phi)
    }
}

/// Tokenizes `text` with a freshly compiled tokenizer for `vocab`.
pub fn tokenize(text: &str, vocab: &Vocabulary) -> Result<Vec<String>> {
    Tokenizer::new(vocab.clone())?.tokenize(text)
}

/// Tokenizes the language of `pattern`; see [`Tokenizer::tokenize_language`].
pub fn tokenize_language(
    pattern: &Fst<TropicalWeight>,
    vocab: &Vocabulary,
) -> Result<Fst<TropicalWeight>> {
    Tokenizer::new(vocab.clone())?.tokenize_language(pattern)
}

/// Straightforward greedy tokenizer: repeatedly strips the longest token
/// that prefixes the remaining text.
pub fn greedy_reference_tokenize(text: &str, vocab: &Vocabulary) -> Result<Vec<String>> {
    if let Some(c) = text.chars().find(|c| !vocab.sigma().contains(c)) {
        return Err(Error::OutsideAlphabet(c));
    }
    let mut rest = text;
    let mut out = Vec::new();
    while !rest.is_empty() {
        let cut = rest
            .char_indices()
            .map(|(i, c)| i + c.len_utf8())
            .filter(|&end| vocab.contains(&rest[..end]))
            .max()
            .expect("single characters are tokens");
        out.push(rest[..cut].to_string());
        rest = &rest[cut..];
    }
    Ok(out)
}

/// Renders tokens as `[t1] [t2] ...`.
pub fn render_tokens<S: AsRef<str>>(tokens: &[S]) -> String {
    tokens
        .iter()
        .map(|t| format!("[{}]", t.as_ref()))
        .collect::<Vec<_>>()
        .join(" ")
}
