use std::collections::{BTreeMap, BTreeSet};

use super::Vocabulary;
use crate::error::Result;
use crate::fst::{Arc, Fst, SymbolTable, EPSILON};
use crate::semiring::{Semiring, TropicalWeight};

pub type NodeId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrieNode {
    /// The string spelled from the root.
    pub prefix: String,
    pub children: BTreeMap<char, NodeId>,
    pub is_token: bool,
    /// Tokens emitted when matching fails at this node.
    pub pops: Vec<String>,
    /// Node to resume from after popping; `None` only for the root.
    pub fail: Option<NodeId>,
}

/// Prefix trie of a vocabulary with MaxMatch failure links.
///
/// For a node `s`, `pops` is the shortest sequence of greedy longest-token
/// prefixes of `s` whose removal leaves a string that is again a node;
/// `fail` is that node. Nodes are numbered breadth first with the root at 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxMatchTrie {
    nodes: Vec<TrieNode>,
}

impl MaxMatchTrie {
    pub fn build(vocab: &Vocabulary) -> Self {
        let mut prefixes: BTreeSet<(usize, String)> = BTreeSet::from([(0, String::new())]);
        for t in vocab.tokens() {
            for (i, _) in t.char_indices().skip(1) {
                prefixes.insert((t[..i].chars().count(), t[..i].to_string()));
            }
            prefixes.insert((t.chars().count(), t.clone()));
        }
        let mut nodes: Vec<TrieNode> = prefixes
            .into_iter()
            .map(|(_, prefix)| TrieNode {
                is_token: vocab.contains(&prefix),
                prefix,
                children: BTreeMap::new(),
                pops: Vec::new(),
                fail: None,
            })
            .collect();
        let index: BTreeMap<String, NodeId> = nodes
            .iter()
            .enumerate()
            .map(|(i, n)| (n.prefix.clone(), i))
            .collect();
        for id in 1..nodes.len() {
            let mut chars = nodes[id].prefix.chars();
            let last = chars.next_back().expect("non-root node");
            let parent = index[chars.as_str()];
            nodes[parent].children.insert(last, id);
        }

        let mut trie = MaxMatchTrie { nodes };
        for id in 1..trie.nodes.len() {
            let (pops, fail) = trie.failure(id);
            trie.nodes[id].pops = pops;
            trie.nodes[id].fail = Some(fail);
        }
        trie
    }

    fn failure(&self, id: NodeId) -> (Vec<String>, NodeId) {
        let mut rest = self.nodes[id].prefix.as_str();
        let mut pops = Vec::new();
        loop {
            let len = self
                .longest_token_prefix(rest)
                .expect("every character is a token");
            pops.push(rest[..len].to_string());
            rest = &rest[len..];
            if let Some(node) = self.find(rest) {
                return (pops, node);
            }
        }
    }

    /// Byte length of the longest token that prefixes `s`.
    fn longest_token_prefix(&self, s: &str) -> Option<usize> {
        let mut node = self.root();
        let mut best = None;
        for (i, c) in s.char_indices() {
            match self.nodes[node].children.get(&c) {
                Some(&next) => node = next,
                None => break,
            }
            if self.nodes[node].is_token {
                best = Some(i + c.len_utf8());
            }
        }
        best
    }

    pub fn root(&self) -> NodeId {
        0
    }

    pub fn nodes(&self) -> &[TrieNode] {
        &self.nodes
    }

    pub fn node(&self, id: NodeId) -> &TrieNode {
        &self.nodes[id]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// The node spelling `s`, if any.
    pub fn find(&self, s: &str) -> Option<NodeId> {
        s.chars()
            .try_fold(self.root(), |n, c| self.nodes[n].children.get(&c).copied())
    }

    /// Compiles the failure transducer.
    ///
    /// State `i` is node `i`. Child edges become `c:ε` arcs. A non-root node
    /// with pops `t1..tk` gets a `φ:t1` arc followed by `ε:t2 .. ε:tk`
    /// through fresh chain states, ending at its failure node. The root is
    /// the start and the only final state.
    pub fn compile(&self, syms: &SymbolTable) -> Result<Fst<TropicalWeight>> {
        let one = TropicalWeight::one;
        let phi = syms.get(crate::fst::PHI_SYMBOL)?;
        let mut fst = Fst::new();
        fst.add_states(self.nodes.len());
        fst.set_start(self.root())?;
        fst.set_final(self.root(), one())?;
        for (id, node) in self.nodes.iter().enumerate() {
            for (c, &child) in &node.children {
                let l = syms.get(&c.to_string())?;
                fst.add_arc(id, Arc::new(l, EPSILON, one(), child))?;
            }
        }
        for (id, node) in self.nodes.iter().enumerate() {
            let Some(fail) = node.fail else { continue };
            let mut cur = id;
            for (k, tok) in node.pops.iter().enumerate() {
                let next = if k + 1 == node.pops.len() {
                    fail
                } else {
                    fst.add_state()
                };
                let ilabel = if k == 0 { phi } else { EPSILON };
                fst.add_arc(cur, Arc::new(ilabel, syms.get(tok)?, one(), next))?;
                cur = next;
            }
        }
        Ok(fst)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compose::phi_lookup;

    fn trie(tokens: &[&str]) -> MaxMatchTrie {
        MaxMatchTrie::build(&Vocabulary::new(tokens.iter().copied()).unwrap())
    }

    fn failure_of<'a>(t: &'a MaxMatchTrie, s: &str) -> (Vec<&'a str>, &'a str) {
        let n = t.node(t.find(s).unwrap());
        let fail = t.node(n.fail.unwrap());
        (
            n.pops.iter().map(String::as_str).collect(),
            fail.prefix.as_str(),
        )
    }

    #[test]
    fn nodes_are_prefixes_in_breadth_first_order() {
        let t = trie(&["a", "b", "ab", "aaaba"]);
        let prefixes: Vec<_> = t.nodes().iter().map(|n| n.prefix.as_str()).collect();
        assert_eq!(
            prefixes,
            vec!["", "a", "b", "aa", "ab", "aaa", "aaab", "aaaba"]
        );
        assert!(t.node(t.find("ab").unwrap()).is_token);
        assert!(!t.node(t.find("aaa").unwrap()).is_token);
        assert_eq!(t.node(0).fail, None);
    }

    #[test]
    fn failure_links_and_pops() {
        let t = trie(&["a", "b", "ab", "aaaba"]);
        assert_eq!(failure_of(&t, "a"), (vec!["a"], ""));
        assert_eq!(failure_of(&t, "aa"), (vec!["a"], "a"));
        assert_eq!(failure_of(&t, "aaa"), (vec!["a"], "aa"));
        assert_eq!(failure_of(&t, "aaab"), (vec!["a", "a"], "ab"));
        assert_eq!(failure_of(&t, "aaaba"), (vec!["aaaba"], ""));
        assert_eq!(failure_of(&t, "ab"), (vec!["ab"], ""));
    }

    #[test]
    fn compiled_multi_pop_is_phi_then_epsilon() {
        let v = Vocabulary::new(["a", "b", "ab", "aaaba"]).unwrap();
        let t = MaxMatchTrie::build(&v);
        let syms = v.symbol_table();
        let fst = t.compile(&syms).unwrap();
        let (a, phi) = (syms.get("a").unwrap(), syms.phi().unwrap());
        let aaab = t.find("aaab").unwrap();
        let phi_arcs: Vec<_> = fst.arcs(aaab).iter().filter(|x| x.ilabel == phi).collect();
        assert_eq!(phi_arcs.len(), 1);
        assert_eq!(phi_arcs[0].olabel, a);
        let chain = phi_arcs[0].nextstate;
        assert!(chain >= t.len());
        assert_eq!(
            fst.arcs(chain),
            &[Arc::new(
                EPSILON,
                a,
                TropicalWeight::one(),
                t.find("ab").unwrap()
            )]
        );
        assert_eq!(fst.start(), Some(0));
        assert!(fst.states().all(|q| fst.is_final(q) == (q == 0)));
    }

    #[test]
    fn single_character_vocabulary_is_flat() {
        let v = Vocabulary::new(["a", "b", "c"]).unwrap();
        let t = MaxMatchTrie::build(&v);
        assert_eq!(t.len(), 4);
        for id in 1..4 {
            let n = t.node(id);
            assert!(n.children.is_empty());
            assert_eq!(n.pops, vec![n.prefix.clone()]);
            assert_eq!(n.fail, Some(0));
        }
    }

    #[test]
    fn compiled_transducer_has_no_failure_cycles() {
        let v = Vocabulary::new(["a", "b", "c", "ab", "abc", "bca", "cab", "aaaba"]).unwrap();
        let syms = v.symbol_table();
        let fst = MaxMatchTrie::build(&v).compile(&syms).unwrap();
        let phi = syms.phi().unwrap();
        for q in fst.states() {
            for l in syms.consuming_labels(Some(phi)) {
                assert!(phi_lookup(&fst, q, l, phi).is_ok());
            }
        }
    }
}
