use std::collections::HashMap;

use super::{Label, EPSILON};
use crate::error::{Error, Result};

pub const EPSILON_SYMBOL: &str = "<epsilon>";
pub const PHI_SYMBOL: &str = "<phi>";

/// Bijection between symbol strings and labels. Label 0 is always `<epsilon>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolTable {
    symbols: Vec<String>,
    ids: HashMap<String, Label>,
}

impl Default for SymbolTable {
    fn default() -> Self {
        Self::new()
    }
}

impl SymbolTable {
    /// A table holding only `<epsilon>`.
    pub fn new() -> Self {
        let mut table = SymbolTable {
            symbols: Vec::new(),
            ids: HashMap::new(),
        };
        table.add_symbol(EPSILON_SYMBOL);
        table
    }

    /// A table holding `<epsilon>` (0) and `<phi>` (1).
    pub fn with_phi() -> Self {
        let mut table = Self::new();
        table.add_symbol(PHI_SYMBOL);
        table
    }

    /// Returns the label of `symbol`, interning it if needed.
    pub fn add_symbol(&mut self, symbol: &str) -> Label {
        if let Some(&id) = self.ids.get(symbol) {
            return id;
        }
        let id = self.symbols.len() as Label;
        self.symbols.push(symbol.to_string());
        self.ids.insert(symbol.to_string(), id);
        id
    }

    pub fn find(&self, symbol: &str) -> Option<Label> {
        self.ids.get(symbol).copied()
    }

    pub fn get(&self, symbol: &str) -> Result<Label> {
        self.find(symbol)
            .ok_or_else(|| Error::UnknownSymbol(symbol.to_string()))
    }

    pub fn symbol(&self, label: Label) -> Option<&str> {
        self.symbols.get(label as usize).map(String::as_str)
    }

    pub fn symbol_or_err(&self, label: Label) -> Result<&str> {
        self.symbol(label).ok_or(Error::UnknownLabel(label))
    }

    /// The label of `<phi>`, if present.
    pub fn phi(&self) -> Option<Label> {
        self.find(PHI_SYMBOL)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// `(label, symbol)` pairs in label order, including `<epsilon>`.
    pub fn iter(&self) -> impl Iterator<Item = (Label, &str)> {
        self.symbols
            .iter()
            .enumerate()
            .map(|(i, s)| (i as Label, s.as_str()))
    }

    /// Labels that are neither `ε` nor the given failure label.
    pub fn consuming_labels(&self, phi: Option<Label>) -> impl Iterator<Item = Label> + '_ {
        (0..self.symbols.len() as Label).filter(move |&l| l != EPSILON && Some(l) != phi)
    }

    /// Renders a label sequence as `[x][y]...`.
    pub fn bracketed(&self, labels: &[Label]) -> Result<String> {
        labels
            .iter()
            .map(|&l| self.symbol_or_err(l).map(|s| format!("[{s}]")))
            .collect()
    }
}
