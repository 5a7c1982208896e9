//! The `.bho` workspace language: semigroups, algebras, linear families and
//! Rota-Baxter families in one text file.
//!
//! ```text
//! semigroup C2 {
//!   elements g0 g1;
//!   table { g0*g0=g0; g0*g1=g1; g1*g0=g1; g1*g1=g0; }
//!   commutative;
//! }
//! algebra A : lie over C2 dim 2 {
//!   product bracket {
//!     (g0,g0): e1*e2 = e2;
//!   }
//!   map p { g0: [[1,0],[0,1]]; g1: [[1,0],[0,1]]; }
//! }
//! ```

mod lexer;
mod parser;
mod serialize;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{AlgebraInstance, LinearFamily, RotaBaxterFamily};
use crate::semigroup::SemigroupTable;

pub use parser::parse_workspace;
pub use serialize::{serialize_workspace, HEADER};

/// A syntax error at a 1-based source position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub expected: String,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: expected {}, found {}", self.line, self.column, self.expected, self.found)
    }
}

impl std::error::Error for ParseError {}

/// A well-formed file that names something undefined or inconsistent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ResolutionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ResolutionError {}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WorkspaceError {
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),
    #[error("resolution error at {0}")]
    Resolution(#[from] ResolutionError),
    #[error("name `{0}` is already taken in its namespace")]
    DuplicateName(String),
    #[error("semigroup `{0}` conflicts with an existing semigroup of that name")]
    SemigroupConflict(String),
    #[error("no {namespace} named `{name}`")]
    Missing { namespace: &'static str, name: String },
}

/// Named objects, one namespace per sort. Every algebra and family refers
/// to a semigroup stored under its own name.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Workspace {
    pub semigroups: BTreeMap<String, Arc<SemigroupTable>>,
    pub algebras: BTreeMap<String, AlgebraInstance>,
    pub linear: BTreeMap<String, LinearFamily>,
    pub rota_baxter: BTreeMap<String, RotaBaxterFamily>,
}

impl Workspace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_empty(&self) -> bool {
        self.semigroups.is_empty() && self.algebras.is_empty() && self.linear.is_empty() && self.rota_baxter.is_empty()
    }

    /// Registers the semigroup under its own name; re-adding an equal table
    /// is a no-op. Returns the stored handle.
    pub fn add_semigroup(&mut self, t: Arc<SemigroupTable>) -> Result<Arc<SemigroupTable>, WorkspaceError> {
        match self.semigroups.get(t.name()) {
            Some(existing) if **existing == *t => Ok(existing.clone()),
            Some(_) => Err(WorkspaceError::SemigroupConflict(t.name().into())),
            None => {
                self.semigroups.insert(t.name().into(), t.clone());
                Ok(t)
            }
        }
    }

    pub fn add_algebra(&mut self, name: &str, a: AlgebraInstance) -> Result<(), WorkspaceError> {
        if self.algebras.contains_key(name) {
            return Err(WorkspaceError::DuplicateName(name.into()));
        }
        self.add_semigroup(a.omega().clone())?;
        self.algebras.insert(name.into(), a);
        Ok(())
    }

    pub fn add_linear(&mut self, name: &str, f: LinearFamily) -> Result<(), WorkspaceError> {
        if self.linear.contains_key(name) {
            return Err(WorkspaceError::DuplicateName(name.into()));
        }
        self.add_semigroup(f.omega().clone())?;
        self.linear.insert(name.into(), f);
        Ok(())
    }

    pub fn add_rota_baxter(&mut self, name: &str, r: RotaBaxterFamily) -> Result<(), WorkspaceError> {
        if self.rota_baxter.contains_key(name) {
            return Err(WorkspaceError::DuplicateName(name.into()));
        }
        self.add_semigroup(r.maps.omega().clone())?;
        self.rota_baxter.insert(name.into(), r);
        Ok(())
    }

    pub fn algebra(&self, name: &str) -> Result<&AlgebraInstance, WorkspaceError> {
        self.algebras.get(name).ok_or_else(|| WorkspaceError::Missing {
            namespace: "algebra",
            name: name.into(),
        })
    }

    pub fn linear_family(&self, name: &str) -> Result<&LinearFamily, WorkspaceError> {
        self.linear.get(name).ok_or_else(|| WorkspaceError::Missing {
            namespace: "linear family",
            name: name.into(),
        })
    }

    pub fn rb_family(&self, name: &str) -> Result<&RotaBaxterFamily, WorkspaceError> {
        self.rota_baxter.get(name).ok_or_else(|| WorkspaceError::Missing {
            namespace: "rota_baxter family",
            name: name.into(),
        })
    }
}
