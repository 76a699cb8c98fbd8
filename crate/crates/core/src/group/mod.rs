//! Finite permutation groups, their subgroup lattices up to conjugacy, and
//! the subgroup classifications used by the induction engines.

mod classify;
mod double_coset;
mod finite;
mod lattice;
mod parse;
mod perm;

pub use classify::{is_n_hyper, min_generators, min_generators_abelian, p_perfect_core};
pub use double_coset::{double_cosets, DoubleCoset, DoubleCosetDecomposition};
pub use finite::{element_class_labels, Group, Subgroup, DEFAULT_ORDER_CAP};
pub use lattice::{SubgroupClass, SubgroupLattice};
pub use parse::{builtin, parse_cycles, parse_group, BUILTIN_NAMES};
pub use perm::Perm;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("malformed cycle on line {line}: {detail}")]
    MalformedCycle { line: usize, detail: String },
    #[error("group order exceeds the cap of {cap} elements")]
    OrderCapExceeded { cap: usize },
    #[error("unknown builtin group {0:?}")]
    UnknownBuiltin(String),
    #[error("subgroup is not abelian")]
    NotAbelian,
}

/// Bound on the number of generators: a count or unbounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GenBound {
    Finite(u32),
    Infinite,
}

impl GenBound {
    pub fn admits(self, count: usize) -> bool {
        match self {
            GenBound::Finite(n) => count <= n as usize,
            GenBound::Infinite => true,
        }
    }
}

impl fmt::Display for GenBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenBound::Finite(n) => write!(f, "{n}"),
            GenBound::Infinite => write!(f, "inf"),
        }
    }
}

impl FromStr for GenBound {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "inf" | "infinity" | "∞" => Ok(GenBound::Infinite),
            t => t.parse().map(GenBound::Finite).map_err(|_| format!("expected a count or 'inf', got {s:?}")),
        }
    }
}

impl Serialize for GenBound {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            GenBound::Finite(n) => s.serialize_u32(*n),
            GenBound::Infinite => s.serialize_str("inf"),
        }
    }
}
