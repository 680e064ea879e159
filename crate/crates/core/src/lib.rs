//! Parity signed graphs.
//!
//! A bijective labeling `f: V -> {1..n}` signs every edge `+` when its endpoints
//! carry labels of equal parity and `-` otherwise. Since the signs only depend
//! on which vertices receive odd labels, every question about labelings is
//! answered here over the much smaller space of balanced bipartitions: the odd
//! class always has exactly `ceil(n/2)` vertices.
//!
//! The crate is organized in four layers:
//!
//! * [`graph`]: the graph model, standard families, graph6 codec and
//!   isomorphism-free enumeration of small connected graphs;
//! * [`parity`]: labelings, induced signs, homogeneity, Harary balance and the
//!   realizability decision procedure;
//! * [`rna`]: exact and heuristic minimum negative-edge counts (the rna and
//!   adhika numbers), the full spectrum of achievable counts, closed forms and
//!   explicit labelings for the standard families;
//! * [`verify`]: desk-scale checks of the known results about these numbers and
//!   a scanner for graphs whose negative-edge count never varies.

pub mod error;
pub mod graph;
pub mod parity;
pub mod rna;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{FamilySpec, Graph};
pub use parity::{Bipartition, Homogeneity, Labeling, Sign, SignedGraph};
pub use rna::{Method, RnaResult, SpectrumReport, DEFAULT_EXACT_LIMIT};
