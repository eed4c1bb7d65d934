use std::ops::Range;

use log::warn;

use super::params::{SdgParams, SedgeParams};
use super::sampling::{Growth, RejectionBudget};
use crate::error::{Error, Result};
use crate::graph::{Digraph, NodeId};
use crate::rng::RandomStream;

/// Above this many edges per node the degree-law analysis no longer applies.
const SPARSE_RATIO: usize = 10;

fn check_capacity(nodes: usize, edges: usize) -> Result<()> {
    let capacity = Digraph::capacity(nodes);
    if edges > capacity {
        return Err(Error::Capacity { nodes, edges, capacity });
    }
    Ok(())
}

fn warn_outside_regime(nodes: usize, edges: usize, e2: f64) {
    if edges > SPARSE_RATIO * nodes {
        warn!("{edges} edges on {nodes} nodes is outside the sparse regime (E > {SPARSE_RATIO} N)");
    }
    if edges > 0 && e2 >= nodes as f64 / edges as f64 {
        warn!(
            "e2 = {e2} is not below N/E = {:.4}; the in-degree-zero pool may run dry",
            nodes as f64 / edges as f64
        );
    }
}

/// Static sparse digraph generator.
///
/// Starts from `n_nodes` isolated nodes and inserts `n_edges` edges one at a
/// time. For each edge the source is drawn uniformly with probability `e1`,
/// otherwise proportionally to out-degree; the target is drawn uniformly
/// among in-degree-zero nodes with probability `e2`, otherwise proportionally
/// to in-degree. Preferential draws fall back to uniform while every degree is
/// zero, and an empty in-degree-zero pool falls back to in-degree preference.
pub fn sdg(n_nodes: usize, n_edges: usize, params: SdgParams, rng: &mut RandomStream) -> Result<Digraph> {
    params.validate()?;
    check_capacity(n_nodes, n_edges)?;
    warn_outside_regime(n_nodes, n_edges, params.e2);

    let mut growth = Growth::new(Digraph::with_capacity(n_nodes, n_edges));
    let all = 0..n_nodes;
    let mut budget = RejectionBudget::for_insertions(n_edges);
    for t in 1..=n_edges {
        loop {
            let src = growth.pick_source(&all, params.e1, rng);
            let dst = growth.pick_target(&all, params.e2, rng);
            if growth.insert(src, dst)?.is_added() {
                break;
            }
            budget.reject(t)?;
        }
    }
    Ok(growth.into_graph())
}

/// Evolving generator: grows `current` by `n_new_nodes` nodes and
/// `n_new_edges` edges.
///
/// Each edge is routed with probability `alpha` from any node into a new
/// node, with probability `beta` from a new node to any node, and otherwise
/// between any two nodes; inside each route the endpoints follow the same
/// `e1`/`e2` rules as [`sdg`]. New nodes get ids `current.node_count()..`.
/// With no new nodes the two routes that need them are folded into the
/// any-to-any route.
pub fn sedge(
    current: &Digraph,
    n_new_nodes: usize,
    n_new_edges: usize,
    params: SedgeParams,
    rng: &mut RandomStream,
) -> Result<Digraph> {
    params.validate()?;
    let mut graph = Digraph::with_capacity(0, current.edge_count() + n_new_edges);
    graph.add_nodes(current.node_count());
    for &(s, d) in current.edges() {
        graph.add_edge(s, d)?;
    }
    let fresh = graph.add_nodes(n_new_nodes);
    let total_nodes = graph.node_count();
    let total_edges = graph.edge_count() + n_new_edges;
    check_capacity(total_nodes, total_edges)?;
    warn_outside_regime(total_nodes, total_edges, params.e2);

    let all = 0..total_nodes;
    let mut growth = Growth::new(graph);
    let mut budget = RejectionBudget::for_insertions(n_new_edges);
    for t in 1..=n_new_edges {
        loop {
            let (sources, targets) = route(&params, &all, &fresh, rng);
            let src = growth.pick_source(sources, params.e1, rng);
            let dst = growth.pick_target(targets, params.e2, rng);
            if growth.insert(src, dst)?.is_added() {
                break;
            }
            budget.reject(t)?;
        }
    }
    Ok(growth.into_graph())
}

fn route<'a>(
    params: &SedgeParams,
    all: &'a Range<NodeId>,
    fresh: &'a Range<NodeId>,
    rng: &mut RandomStream,
) -> (&'a Range<NodeId>, &'a Range<NodeId>) {
    if fresh.is_empty() {
        return (all, all);
    }
    let u = rng.unit();
    if u < params.alpha {
        (all, fresh)
    } else if u < params.alpha + params.beta {
        (fresh, all)
    } else {
        (all, all)
    }
}
