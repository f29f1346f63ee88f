//! Finite alphabets of categorical symbols.
//!
//! Symbols are stored as their index into the alphabet; the token strings
//! only matter at the I/O boundary (corpus files, reports, DOT output).

use serde::{Deserialize, Serialize};

use crate::error::{AgctError, Result};

/// Index of a symbol within its [`Alphabet`].
pub type Symbol = u8;

/// An ordered finite alphabet with at least two distinct symbols.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Alphabet {
    tokens: Vec<String>,
}

impl Alphabet {
    /// Build an alphabet from symbol tokens. Tokens must be distinct and
    /// there must be at least two of them.
    pub fn new<S: Into<String>>(tokens: impl IntoIterator<Item = S>) -> Result<Self> {
        let tokens: Vec<String> = tokens.into_iter().map(Into::into).collect();
        if tokens.len() < 2 {
            return Err(AgctError::AlphabetTooSmall(tokens.len()));
        }
        if tokens.len() > u8::MAX as usize {
            return Err(AgctError::AlphabetTooSmall(tokens.len()));
        }
        for (i, t) in tokens.iter().enumerate() {
            if tokens[..i].contains(t) {
                return Err(AgctError::DuplicateSymbol(t.clone()));
            }
        }
        Ok(Self { tokens })
    }

    /// Binary alphabet with tokens "0" and "1".
    pub fn binary() -> Self {
        Self::new(["0", "1"]).expect("binary alphabet is valid")
    }

    /// Alphabet `0..k` with decimal tokens.
    pub fn indexed(k: usize) -> Result<Self> {
        Self::new((0..k).map(|i| i.to_string()))
    }

    pub fn size(&self) -> usize {
        self.tokens.len()
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn token(&self, s: Symbol) -> &str {
        &self.tokens[s as usize]
    }

    /// Look up a token, returning its symbol index.
    pub fn index_of(&self, token: &str) -> Option<Symbol> {
        self.tokens.iter().position(|t| t == token).map(|i| i as u8)
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        (0..self.size()).map(|i| i as Symbol)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_singleton_and_duplicates() {
        assert!(Alphabet::new(["a"]).is_err());
        assert!(Alphabet::new(["a", "b", "a"]).is_err());
    }

    #[test]
    fn indexes_tokens() {
        let a = Alphabet::new(["0", "1", "2"]).unwrap();
        assert_eq!(a.size(), 3);
        assert_eq!(a.index_of("2"), Some(2));
        assert_eq!(a.index_of("x"), None);
        assert_eq!(a.token(1), "1");
    }
}
