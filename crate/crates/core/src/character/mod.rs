//! Class functions, character tables, and the representation-ring equalizers
//! behind the Artin and Brauer restriction theorems.

mod class_function;
mod equalizer;
mod table;

pub use class_function::{
    conjugate, frobenius_check, induce, mackey_check, perm_character, restrict, ClassDomain, ClassFunction,
};
pub use equalizer::{
    equalizer_lattice, verify_artin_restriction, verify_brauer_restriction, ArtinRestrictionReport,
    BrauerRestrictionReport, EqualizerLattice,
};
pub use table::{load_character_table, CharacterTable, TableFile, TableLibrary};

use serde::Serialize;
use thiserror::Error;

use crate::artin::ArtinError;
use crate::brauer::BrauerError;

/// Character-layer failures. Serializes as `{"error": <kind>, ...}`.
#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
#[serde(tag = "error")]
pub enum CharacterError {
    #[error("line {line}: {detail}")]
    MalformedEntry { line: usize, detail: String },
    #[error("rows {i} and {j} violate row orthogonality")]
    OrthogonalityFailure { i: usize, j: usize },
    #[error("columns {i} and {j} violate column orthogonality")]
    ColumnOrthogonalityFailure { i: usize, j: usize },
    #[error("sum of squared degrees is {actual}, group order is {expected}")]
    DegreeSumMismatch { expected: String, actual: String },
    #[error("first row is not the trivial character")]
    FirstRowNotTrivial,
    #[error("table {table} does not fit the group: {detail}")]
    TableMismatch { table: String, detail: String },
    #[error("no character table for subgroup of order {order} ({signature})")]
    MissingTable { order: usize, signature: String },
    #[error("expected {expected} values, got {actual}")]
    Dimension { expected: usize, actual: usize },
    #[error("value has conductor {actual}, expected {expected}")]
    Conductor { expected: u32, actual: u32 },
    #[error("not a subgroup of the target domain")]
    NotSubgroup,
    #[error("class function is not a virtual character")]
    NotVirtual,
    #[error("family is empty")]
    EmptyFamily,
    #[error("{map} differs from {scale} times the identity at column {column}: {witness:?}")]
    CompositeMismatch { map: String, scale: String, column: usize, witness: Vec<String> },
    #[error("restriction is not an isomorphism; elementary divisors {divisors:?}, ranks {source_rank} vs {target_rank}")]
    NotIsomorphism { divisors: Vec<String>, source_rank: usize, target_rank: usize },
    #[error("i/o: {0}")]
    Io(String),
    #[error("{0}")]
    Upstream(String),
}

impl CharacterError {
    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("error serializes");
        if let Some(obj) = v.as_object_mut() {
            obj.insert("message".into(), self.to_string().into());
        }
        v
    }
}

impl From<ArtinError> for CharacterError {
    fn from(e: ArtinError) -> Self {
        CharacterError::Upstream(e.to_string())
    }
}

impl From<BrauerError> for CharacterError {
    fn from(e: BrauerError) -> Self {
        CharacterError::Upstream(e.to_string())
    }
}
