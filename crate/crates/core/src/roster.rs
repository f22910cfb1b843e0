use alloc::string::String;
use alloc::vec::Vec;

use crate::committee::Committee;
use crate::error::Error;

/// Ordered, duplicate-free list of candidate names.
///
/// Index `i` is the candidate's position in the roster; it is the order used
/// for ballot vectors and for the canonical committee order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateRoster {
    names: Vec<String>,
}

impl CandidateRoster {
    pub fn new<I, S>(names: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut out: Vec<String> = Vec::new();
        for name in names {
            let name = name.into();
            if !is_valid_name(&name) {
                return Err(Error::InvalidName(name));
            }
            if out.contains(&name) {
                return Err(Error::DuplicateCandidate(name));
            }
            out.push(name);
        }
        if out.is_empty() {
            return Err(Error::EmptyRoster);
        }
        Ok(CandidateRoster { names: out })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, index: usize) -> Option<&str> {
        self.names.get(index).map(String::as_str)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Member names of `committee`, in canonical order.
    pub fn committee_names<'a>(&'a self, committee: &Committee) -> Vec<&'a str> {
        committee
            .members()
            .iter()
            .map(|&i| self.names[i].as_str())
            .collect()
    }
}

/// Names are free-form UTF-8 except for the characters the compact text
/// format reserves.
pub fn is_valid_name(name: &str) -> bool {
    !name.is_empty()
        && !name.starts_with(['+', '-'])
        && !name.chars().any(|c| c.is_whitespace() || c == ':')
}
