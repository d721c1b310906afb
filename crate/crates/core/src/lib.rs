//! Maximal independent set enumeration and the Moon-Moser extremal bound.
//!
//! An n-vertex graph has at most
//! 3^(n/3) (times a small residue-dependent constant) maximal independent
//! sets, and the disjoint unions of triangles attain that ceiling. This
//! crate makes the whole story executable:
//!
//! * [`graph`] — immutable bitset graphs on up to 64 vertices and the
//!   classic families (complete, path, cycle, Moon-Moser).
//! * [`bound`] — the extremal count [`bound::mis_bound`], its exact
//!   integer inequalities, and the maximum-product-partition cross-check.
//! * [`enumerate`] — three independent enumerators (subset oracle,
//!   minimum-degree branching, Bron-Kerbosch pivoting) sharing one
//!   result contract with instrumentation.
//! * [`verify`] — exhaustive sweeps over every labeled graph at small
//!   orders, an extremal census up to isomorphism, and seeded spot
//!   checks.
//! * [`format`] — bit-exact graph6 and a human-friendly edge-list codec.

pub mod bound;
pub mod enumerate;
pub mod format;
pub mod graph;
pub mod verify;

pub use bound::{mis_bound, BoundError};
pub use enumerate::{count_mis, EnumAlgorithm, EnumError, EnumStats, MisReport};
pub use format::{decode_graph6, encode_graph6, FormatError};
pub use graph::{Graph, GraphError, VertexSet, MAX_VERTICES};
pub use verify::{BoundCertificate, SweepOptions, VerifyError};
