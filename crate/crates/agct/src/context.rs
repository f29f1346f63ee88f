//! Context strings: the recent past of a categorical process.
//!
//! A context `w = w_{-|w|} ... w_{-1}` is stored oldest-first, so the newest
//! symbol is the last element. `w` is a suffix of `w'` when the past that `w`
//! describes is a coarsening of the past `w'` describes; on the oldest-first
//! representation that is exactly `w'.ends_with(w)`. The parent of a context
//! drops its oldest symbol.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::alphabet::{Alphabet, Symbol};

/// A finite context over some alphabet, oldest symbol first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Context(Vec<Symbol>);

impl Context {
    /// The empty context (the tree root).
    pub fn root() -> Self {
        Context(Vec::new())
    }

    /// Build from symbols listed oldest-first.
    pub fn new(symbols: impl Into<Vec<Symbol>>) -> Self {
        Context(symbols.into())
    }

    /// Parse a context from concatenated single-character tokens, e.g. "010".
    /// Only usable when every alphabet token is one character.
    pub fn parse(s: &str, alphabet: &Alphabet) -> Option<Self> {
        let mut out = Vec::with_capacity(s.len());
        for ch in s.chars() {
            out.push(alphabet.index_of(&ch.to_string())?);
        }
        Some(Context(out))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    /// Newest symbol, i.e. `w_{-1}`.
    pub fn newest(&self) -> Option<Symbol> {
        self.0.last().copied()
    }

    /// Oldest symbol, i.e. `w_{-|w|}`.
    pub fn oldest(&self) -> Option<Symbol> {
        self.0.first().copied()
    }

    /// Drop the oldest symbol. `None` for the root.
    pub fn parent(&self) -> Option<Self> {
        if self.0.is_empty() {
            None
        } else {
            Some(Context(self.0[1..].to_vec()))
        }
    }

    /// Prepend an older symbol, producing a child context.
    pub fn extend_older(&self, s: Symbol) -> Self {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(s);
        v.extend_from_slice(&self.0);
        Context(v)
    }

    /// Suffix order: `self ⪯ other` iff `self` is a suffix of `other`.
    pub fn is_suffix_of(&self, other: &Context) -> bool {
        other.0.ends_with(&self.0)
    }

    /// Render using the alphabet's tokens. Single-character tokens are
    /// concatenated, longer tokens are space-separated; the root prints "e".
    pub fn display(&self, alphabet: &Alphabet) -> String {
        if self.0.is_empty() {
            return "e".to_string();
        }
        let single = alphabet.tokens().iter().all(|t| t.chars().count() == 1);
        let sep = if single { "" } else { " " };
        self.0
            .iter()
            .map(|&s| alphabet.token(s))
            .collect::<Vec<_>>()
            .join(sep)
    }
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        for s in &self.0 {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}
