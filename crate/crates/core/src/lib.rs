//! Hereditary hypergraphs: minimum covers, criticality, and the factor-critical
//! structure of connected critical instances.
//!
//! A hereditary hypergraph is stored by its generator antichain (the
//! inclusion-maximal hyperedges); every nonempty subset of a generator is a
//! hyperedge. Vertex sets are 64-bit masks, so every structure here has at
//! most [`MAX_VERTICES`] vertices.
//!
//! The crate is `no_std` and only needs `alloc`.
#![cfg_attr(not(any(test, feature = "std")), no_std)]

extern crate alloc;

pub mod cover;
pub mod critical;
mod error;
pub mod families;
pub mod fixtures;
pub mod graph;
pub mod hypergraph;
pub mod matching;
pub mod universe;
mod vertex_set;

pub use cover::{
    enumerate_min_covers, has_singleton_free_min_cover, min_cover, mu, rho, rho_after_each_deletion,
    rho_closure_invariance_check, Cover, CoverEnumeration, CoverStats, DEFAULT_ENUMERATION_LIMIT,
};
pub use critical::{
    check_corollary_concrete, check_corollary_gallai, classify_critical, critical_core, is_critical, structured_cover,
    ConcreteWitness, CriticalCore, CriticalityReport, GallaiCorollaryReport, NotApplicable, TheoremClassification,
    TheoremViolation,
};
pub use error::Error;
pub use graph::{Adjacency, Digraph, Graph, WeightedGraph};
pub use hypergraph::{ExplicitHypergraph, HereditaryHypergraph};
pub use matching::{
    is_factor_critical, max_matching, verify_gallai_lemma, FactorCriticalCertificate, LemmaHypothesisFailure,
    LemmaReport, Matching,
};
pub use vertex_set::{VertexSet, MAX_VERTICES};

pub type Result<T, E = Error> = core::result::Result<T, E>;
