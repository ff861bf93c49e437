//! Adjacency labeling for power-law graphs.
//!
//! The thin/fat scheme assigns short identifiers to high-degree ("fat")
//! vertices and stores, per vertex, either its neighbor list (thin) or its
//! adjacency to the fat vertices (fat). The crate also provides the
//! power-law family constants and membership checks, threshold sweeps, and
//! graph generators used to evaluate the scheme.

pub mod bits;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod labeling;
pub mod powerlaw;
pub mod realize;

pub use bits::BitString;
pub use error::{Error, Result};
pub use graph::{is_induced_subgraph, DegreeHistogram, DegreeSequence, Graph};
pub use labeling::{decode, encode, LabelSet, Mode, SchemeParams};
pub use powerlaw::{constants, fit_alpha_mle, MembershipReport, PowerLawConstants};
