//! Exact Euler-characteristic-type invariants of fundamental groups of finite
//! graphs of groups with finite edge groups.
//!
//! Values are exact [`Rational`]s throughout. The [`oracle`] module holds
//! brute-force finite-group computations that check the closed forms.

pub mod calculus;
pub mod cli;
pub mod decompose;
pub mod descriptor;
pub mod error;
pub mod gogfile;
pub mod graph;
pub mod oracle;
pub mod rational;
pub mod verify;

pub use calculus::{InvariantReport, Value};
pub use decompose::FreeProductDecomposition;
pub use descriptor::{base_invariants, GroupDescriptor, InvariantRecord, Norm};
pub use error::{Error, Result};
pub use graph::{EdgeRec, GraphOfGroups, ValidationReport};
pub use rational::Rational;
