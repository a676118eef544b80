//! Finite permutation group engine: exact permutation arithmetic, group
//! words and verbal subgroups, the structural toolkit (Sylow subgroups,
//! cores, Fitting series, towers, radicals), and executable checks for the
//! coprime-order nilpotency criterion on desk-scale groups.

pub mod arith;
pub mod catalog;
pub mod criterion;
pub mod error;
pub mod group;
pub mod perm;
pub mod structure;
pub mod words;

pub use error::{Error, Result};
pub use group::{PermGroup, Subgroup, DEFAULT_CAP};
pub use perm::{commutator, parse_cycles, Perm};
pub use words::{SimpleCommutatorSpec, Word, WordExpr, DEFAULT_BUDGET};
