use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::{Error, Result};

/// A named basis element of the underlying vector space.
///
/// Ordered lexicographically by name; cloning is a reference-count bump.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Generator(Arc<str>);

impl Generator {
    pub fn new(name: &str) -> Result<Self> {
        if is_identifier(name) {
            Ok(Generator(Arc::from(name)))
        } else {
            Err(Error::InvalidGenerator(name.to_string()))
        }
    }

    pub fn name(&self) -> &str {
        &self.0
    }

    pub fn is_single_char(&self) -> bool {
        self.0.len() == 1
    }
}

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::str::FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Generator::new(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_names() {
        assert!(Generator::new("a").is_ok());
        assert!(Generator::new("_x1").is_ok());
        assert!(Generator::new("Beta_2").is_ok());
        assert_eq!(Generator::new(""), Err(Error::InvalidGenerator(String::new())));
        assert!(Generator::new("1a").is_err());
        assert!(Generator::new("a-b").is_err());
    }

    #[test]
    fn ordered_by_name() {
        let a = Generator::new("a").unwrap();
        let b = Generator::new("b").unwrap();
        let ab = Generator::new("ab").unwrap();
        assert!(a < ab && ab < b);
        assert_eq!(a, Generator::new("a").unwrap());
    }
}
