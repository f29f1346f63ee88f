//! Context tree shapes: suffix-closed sets of contexts.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::alphabet::Symbol;
use crate::context::Context;
use crate::error::{AgctError, Result};

/// A suffix-closed set of contexts containing the root.
///
/// The terminal node of a past `x` is the deepest consecutive suffix of `x`
/// found in the tree: membership is checked suffix by suffix and the walk
/// stops at the first miss, so for incomplete trees a deeper matching node
/// does not count if an intermediate suffix is absent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeShape {
    alphabet_size: usize,
    nodes: BTreeSet<Context>,
}

impl TreeShape {
    /// The one-node tree `{e}`.
    pub fn root_only(alphabet_size: usize) -> Self {
        let mut nodes = BTreeSet::new();
        nodes.insert(Context::root());
        TreeShape {
            alphabet_size,
            nodes,
        }
    }

    /// Build from a node set, checking suffix-closure. The root is inserted
    /// if missing.
    pub fn new(alphabet_size: usize, nodes: impl IntoIterator<Item = Context>) -> Result<Self> {
        let mut set: BTreeSet<Context> = nodes.into_iter().collect();
        set.insert(Context::root());
        for node in &set {
            if let Some(parent) = node.parent() {
                if !set.contains(&parent) {
                    return Err(AgctError::BadDistribution(format!(
                        "node set not suffix-closed: {node} present, parent {parent} missing"
                    )));
                }
            }
            if node.symbols().iter().any(|&s| s as usize >= alphabet_size) {
                return Err(AgctError::SymbolOutOfRange {
                    index: node.symbols().iter().map(|&s| s as usize).max().unwrap(),
                    size: alphabet_size,
                });
            }
        }
        Ok(TreeShape {
            alphabet_size,
            nodes: set,
        })
    }

    /// The complete tree containing every context of length <= depth.
    pub fn full(alphabet_size: usize, depth: usize) -> Self {
        let mut nodes = BTreeSet::new();
        nodes.insert(Context::root());
        let mut frontier = vec![Context::root()];
        for _ in 0..depth {
            let mut next = Vec::new();
            for w in frontier {
                for s in 0..alphabet_size {
                    let child = w.extend_older(s as Symbol);
                    nodes.insert(child.clone());
                    next.push(child);
                }
            }
            frontier = next;
        }
        TreeShape {
            alphabet_size,
            nodes,
        }
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn contains(&self, w: &Context) -> bool {
        self.nodes.contains(w)
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false // always contains the root
    }

    pub fn iter(&self) -> impl Iterator<Item = &Context> {
        self.nodes.iter()
    }

    pub fn height(&self) -> usize {
        self.nodes.iter().map(Context::len).max().unwrap_or(0)
    }

    pub fn children_present(&self, w: &Context) -> usize {
        (0..self.alphabet_size)
            .filter(|&s| self.contains(&w.extend_older(s as Symbol)))
            .count()
    }

    pub fn is_leaf(&self, w: &Context) -> bool {
        self.children_present(w) == 0
    }

    pub fn leaves(&self) -> Vec<Context> {
        self.nodes
            .iter()
            .filter(|w| self.is_leaf(w))
            .cloned()
            .collect()
    }

    /// Every non-leaf has exactly `|A|` children.
    pub fn is_complete(&self) -> bool {
        self.nodes.iter().all(|w| {
            let c = self.children_present(w);
            c == 0 || c == self.alphabet_size
        })
    }

    /// Walk the deepest consecutive suffix of `past` (newest symbol last).
    ///
    /// Errors with [`AgctError::InsufficientHistory`] when the whole past is
    /// consumed at a node that still has children in the tree: the next,
    /// older symbol would be needed to decide whether the walk continues.
    pub fn terminal_node(&self, past: &[Symbol]) -> Result<Context> {
        let mut node = Context::root();
        loop {
            let depth = node.len();
            if depth == past.len() {
                if self.children_present(&node) > 0 {
                    return Err(AgctError::InsufficientHistory);
                }
                return Ok(node);
            }
            let older = past[past.len() - 1 - depth];
            let child = node.extend_older(older);
            if self.nodes.contains(&child) {
                node = child;
            } else {
                return Ok(node);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(bits: &[u8]) -> Context {
        Context::new(bits.to_vec())
    }

    #[test]
    fn rejects_non_suffix_closed() {
        // {e, 00} without 0
        assert!(TreeShape::new(2, vec![ctx(&[0, 0])]).is_err());
    }

    #[test]
    fn walk_finds_deepest_consecutive_suffix() {
        let t = TreeShape::new(2, vec![ctx(&[0]), ctx(&[1]), ctx(&[0, 0]), ctx(&[1, 0])]).unwrap();
        // past ends ...,1,0
        assert_eq!(t.terminal_node(&[1, 0]).unwrap(), ctx(&[1, 0]));
    }

    #[test]
    fn incomplete_tree_walk_stops_at_first_miss() {
        // {e,0,1,00}: past ...0010 -> "0", past ...0000 -> "00"
        let t = TreeShape::new(2, vec![ctx(&[0]), ctx(&[1]), ctx(&[0, 0])]).unwrap();
        assert_eq!(t.terminal_node(&[0, 0, 1, 0]).unwrap(), ctx(&[0]));
        assert_eq!(t.terminal_node(&[0, 0, 0, 0]).unwrap(), ctx(&[0, 0]));
    }

    #[test]
    fn root_tree_accepts_any_past() {
        let t = TreeShape::root_only(2);
        assert_eq!(t.terminal_node(&[]).unwrap(), Context::root());
        assert_eq!(t.terminal_node(&[1, 0, 1]).unwrap(), Context::root());
    }

    #[test]
    fn short_past_with_deeper_nodes_is_an_error() {
        let t = TreeShape::new(2, vec![ctx(&[0]), ctx(&[1]), ctx(&[0, 0]), ctx(&[1, 0])]).unwrap();
        assert!(matches!(
            t.terminal_node(&[0]),
            Err(AgctError::InsufficientHistory)
        ));
    }

    #[test]
    fn completeness_check() {
        let full = TreeShape::full(2, 2);
        assert!(full.is_complete());
        assert_eq!(full.len(), 7);
        let t = TreeShape::new(2, vec![ctx(&[0]), ctx(&[1]), ctx(&[0, 0])]).unwrap();
        assert!(!t.is_complete());
    }
}
