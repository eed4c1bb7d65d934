//! Structural summary of a graph: sizes, edges-per-node and diameter.
//!
//! Diameter is measured on the undirected projection of the largest weakly
//! connected component (ties go to the component holding the smallest node
//! id). When the graph is not weakly connected the overall diameter is
//! reported as absent and the component value is kept separately.

use std::collections::VecDeque;

use num_rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;

use crate::graph::{Digraph, NodeId};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphStats {
    pub node_count: usize,
    pub edge_count: usize,
    #[serde(serialize_with = "ratio_as_f64")]
    pub edges_per_node: Ratio<usize>,
    /// `None` when the graph is not weakly connected.
    pub diameter: Option<usize>,
    pub largest_component_diameter: usize,
    pub largest_component_size: usize,
    pub weakly_connected: bool,
}

fn ratio_as_f64<S: serde::Serializer>(r: &Ratio<usize>, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(*r.numer() as f64 / *r.denom() as f64)
}

/// Structural statistics of `g`. `g` must have at least one node.
pub fn graph_stats(g: &Digraph) -> GraphStats {
    let n = g.node_count();
    assert!(n >= 1, "graph_stats needs at least one node");
    let adj = undirected_adjacency(g);
    let components = weak_components(&adj);
    let largest = components
        .iter()
        .max_by(|a, b| a.len().cmp(&b.len()).then(b[0].cmp(&a[0])))
        .expect("at least one component");
    let largest_component_diameter = largest.par_iter().map(|&s| eccentricity(&adj, s)).max().unwrap_or(0);
    let weakly_connected = components.len() == 1;
    GraphStats {
        node_count: n,
        edge_count: g.edge_count(),
        edges_per_node: Ratio::new(g.edge_count(), n),
        diameter: weakly_connected.then_some(largest_component_diameter),
        largest_component_diameter,
        largest_component_size: largest.len(),
        weakly_connected,
    }
}

fn undirected_adjacency(g: &Digraph) -> Vec<Vec<NodeId>> {
    let mut adj = vec![Vec::new(); g.node_count()];
    for &(s, d) in g.edges() {
        adj[s].push(d);
        adj[d].push(s);
    }
    adj
}

/// Components as sorted node lists, ordered by smallest member.
fn weak_components(adj: &[Vec<NodeId>]) -> Vec<Vec<NodeId>> {
    let mut seen = vec![false; adj.len()];
    let mut out = Vec::new();
    for start in 0..adj.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    comp.push(v);
                    stack.push(v);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

fn eccentricity(adj: &[Vec<NodeId>], source: NodeId) -> usize {
    let mut dist = vec![usize::MAX; adj.len()];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    let mut far = 0;
    while let Some(u) = queue.pop_front() {
        let du = dist[u];
        far = far.max(du);
        for &v in &adj[u] {
            if dist[v] == usize::MAX {
                dist[v] = du + 1;
                queue.push_back(v);
            }
        }
    }
    far
}
