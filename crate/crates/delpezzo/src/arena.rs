//! Variable arenas: the ordered list of variable names a polynomial lives over.

use std::fmt;
use std::sync::Arc;

use crate::error::Error;

/// An ordered list of variable names. Cheap to clone; two polynomials may
/// only be combined when their arenas agree.
#[derive(Clone)]
pub struct Arena {
    inner: Arc<Vec<String>>,
}

impl Arena {
    pub fn new<S: Into<String>>(names: Vec<S>) -> Self {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        debug_assert!(names.iter().all(|n| !n.is_empty()));
        Arena {
            inner: Arc::new(names),
        }
    }

    pub fn from_names(names: &[&str]) -> Self {
        Arena::new(names.to_vec())
    }

    pub fn len(&self) -> usize {
        self.inner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.inner
    }

    pub fn name(&self, i: usize) -> &str {
        &self.inner[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.inner.iter().position(|n| n == name)
    }

    /// All names are single characters, so products may be written by
    /// juxtaposition (`ce` means `c*e`).
    pub fn single_letter(&self) -> bool {
        self.inner.iter().all(|n| n.chars().count() == 1)
    }

    pub fn same_as(&self, other: &Arena) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner == other.inner
    }

    pub fn check_same(&self, other: &Arena) -> Result<(), Error> {
        if self.same_as(other) {
            Ok(())
        } else {
            Err(Error::ArenaMismatch(format!(
                "[{}] vs [{}]",
                self.inner.join(","),
                other.inner.join(",")
            )))
        }
    }
}

impl fmt::Debug for Arena {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Arena[{}]", self.inner.join(","))
    }
}

impl PartialEq for Arena {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for Arena {}
