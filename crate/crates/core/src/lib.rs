//! Permutation graphs of small order: inversion graphs, blow-ups, the
//! classification of connected cubic permutation graphs as boxcar graphs,
//! and their exact enumeration.
//!
//! Vertices are `0..n` in the API and `1..=n` in every text format.

pub mod blowup;
pub mod boxcar;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod permutation;

pub use blowup::{BlowupPart, BlowupSpec};
pub use boxcar::{BoxcarSequence, CubicClassification};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use permutation::{Permutation, RealizerCertificate};
