//! Completely regular codes in Cayley graphs of elementary abelian groups
//! over GF(2) and GF(3).

#![allow(clippy::needless_range_loop)]

pub mod constructions;
pub mod cr;
pub mod enumerate;
pub mod error;
pub mod feasibility;
pub mod fixtures;
pub mod gf;
pub mod graph;
pub mod search;

pub use cr::{Code, CodeFile, IntersectionArray, Partition, QuotientMatrix};
pub use enumerate::{canonical_form, enumerate_graphs, ProjectivePointSet};
pub use error::{Error, Result};
pub use gf::{CheckMatrix, FieldOrder, Word, WordSpace, DEFAULT_BUDGET};
pub use graph::{ConnectingSet, Graph, Spectrum, SrgParams};
