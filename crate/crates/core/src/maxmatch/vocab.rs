use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::fst::{SymbolTable, EPSILON_SYMBOL, PHI_SYMBOL};

/// A token vocabulary whose alphabet is contained in it: every character used
/// by some token is itself a token.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vocabulary {
    tokens: Vec<String>,
    set: HashSet<String>,
    sigma: BTreeSet<char>,
}

impl Vocabulary {
    pub fn new<I, S>(tokens: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut v = Vocabulary {
            tokens: Vec::new(),
            set: HashSet::new(),
            sigma: BTreeSet::new(),
        };
        for t in tokens {
            let t = t.into();
            if t.is_empty() {
                return Err(Error::EmptyToken);
            }
            if t == EPSILON_SYMBOL || t == PHI_SYMBOL {
                return Err(Error::ReservedToken(t));
            }
            if !v.set.insert(t.clone()) {
                return Err(Error::DuplicateToken(t));
            }
            v.sigma.extend(t.chars());
            v.tokens.push(t);
        }
        let mut buf = [0u8; 4];
        if let Some(&c) = v
            .sigma
            .iter()
            .find(|c| !v.set.contains(&*c.encode_utf8(&mut buf)))
        {
            return Err(Error::MissingCharToken(c));
        }
        Ok(v)
    }

    /// Parses one token per line. Blank lines and lines starting with `#`
    /// are skipped.
    pub fn load(text: &str) -> Result<Self> {
        Self::new(
            text.lines()
                .map(|l| l.strip_suffix('\r').unwrap_or(l))
                .filter(|l| !l.is_empty() && !l.starts_with('#')),
        )
    }

    /// Tokens in insertion order.
    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn sigma(&self) -> &BTreeSet<char> {
        &self.sigma
    }

    pub fn contains(&self, token: &str) -> bool {
        self.set.contains(token)
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// `<epsilon>`, `<phi>`, the characters in order, then the multi-character
    /// tokens in insertion order. A character and the one-character token
    /// share a label.
    pub fn symbol_table(&self) -> SymbolTable {
        let mut syms = SymbolTable::with_phi();
        for c in &self.sigma {
            syms.add_symbol(&c.to_string());
        }
        for t in &self.tokens {
            syms.add_symbol(t);
        }
        syms
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loads_lines_and_derives_alphabet() {
        let v = Vocabulary::load("a\nb\nab\naaaba\n").unwrap();
        assert_eq!(v.len(), 4);
        assert_eq!(v.sigma().iter().collect::<String>(), "ab");
        assert!(v.contains("aaaba"));
        let syms = v.symbol_table();
        assert_eq!(syms.find("a"), Some(2));
        assert_eq!(syms.find("b"), Some(3));
        assert_eq!(syms.find("ab"), Some(4));
        assert_eq!(syms.len(), 6);
    }

    #[test]
    fn comments_and_crlf() {
        let v = Vocabulary::load("# vocabulary\r\nbike\r\ns\r\nb\r\ni\r\nk\r\ne\r\n").unwrap();
        assert_eq!(v.tokens(), &["bike", "s", "b", "i", "k", "e"]);
    }

    #[test]
    fn rejects_missing_character_tokens() {
        assert_eq!(Vocabulary::load("ab"), Err(Error::MissingCharToken('a')));
        assert_eq!(Vocabulary::load("a\nab"), Err(Error::MissingCharToken('b')));
    }

    #[test]
    fn rejects_duplicates_and_reserved() {
        assert_eq!(
            Vocabulary::load("a\na"),
            Err(Error::DuplicateToken("a".into()))
        );
        assert!(matches!(
            Vocabulary::new(["<phi>"]),
            Err(Error::ReservedToken(_))
        ));
        assert_eq!(Vocabulary::new([""]), Err(Error::EmptyToken));
    }
}
