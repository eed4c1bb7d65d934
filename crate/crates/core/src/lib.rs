//! Sparse digraph generation and comparison.
//!
//! The crate provides two generators for sparse, un-looped, unweighted
//! digraphs:
//!
//! * [`generators::sdg`] builds a graph on a fixed node set by inserting edges
//!   one at a time, mixing uniform and preferential node selection.
//! * [`generators::sedge`] grows an existing graph by a batch of new nodes and
//!   edges, routing each edge between the old and new node sets.
//!
//! A directed scale-free baseline ([`generators::bollobas_generate`]) is
//! included for comparison. The [`metrics`] module measures how close two
//! graphs are (Kolmogorov-Smirnov distance on degree CDFs, mean squared
//! distance of sorted degree sequences, adjacency spectra) and carries the
//! closed-form degree-law exponents of the generator. [`tuning`] runs the
//! grid-search parameter fit.

pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod metrics;
pub mod rng;
pub mod stats;
pub mod tuning;

pub use error::{Error, Result};
pub use generators::{
    bollobas_generate, bollobas_grow, sample_node, sdg, sdg_default_params, sedge, sedge_default_params,
    BollobasParams, SampleMode, SdgParams, SedgeParams,
};
pub use graph::{DegreeKind, DegreeSequence, Digraph, Insertion, NodeId};
pub use metrics::{
    compare, compare_restricted, fit_powerlaw_exponent, fit_shifted_powerlaw_exponent, ks_statistic, msd_sorted,
    restrict_to_new_nodes, spectrum, theoretical_exponents, DegreeCdf, MetricsReport, TheoreticalExponents,
};
pub use rng::RandomStream;
pub use stats::{graph_stats, GraphStats};
