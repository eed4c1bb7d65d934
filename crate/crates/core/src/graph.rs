use std::collections::HashSet;
use std::fmt;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type NodeId = usize;

/// Which endpoint a degree counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DegreeKind {
    In,
    Out,
}

impl fmt::Display for DegreeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegreeKind::In => f.write_str("in"),
            DegreeKind::Out => f.write_str("out"),
        }
    }
}

/// Outcome of [`Digraph::add_edge`]. Rejections are not errors: generators
/// propose self-loops and duplicates routinely and resample.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Insertion {
    Added,
    SelfLoop,
    Duplicate,
}

impl Insertion {
    pub fn is_added(self) -> bool {
        self == Insertion::Added
    }
}

/// A simple directed graph on nodes `0..node_count`.
///
/// No self-loops and no parallel edges. The node count is stored separately
/// from the edges so isolated nodes survive. Edges keep their insertion order,
/// which is also the order they are written out in.
#[derive(Clone, Default)]
pub struct Digraph {
    node_count: usize,
    edges: Vec<(NodeId, NodeId)>,
    index: HashSet<(NodeId, NodeId)>,
    in_deg: Vec<usize>,
    out_deg: Vec<usize>,
}

impl Digraph {
    /// `node_count` isolated nodes.
    pub fn new(node_count: usize) -> Self {
        Digraph {
            node_count,
            edges: Vec::new(),
            index: HashSet::new(),
            in_deg: vec![0; node_count],
            out_deg: vec![0; node_count],
        }
    }

    pub fn with_capacity(node_count: usize, edges: usize) -> Self {
        Digraph {
            edges: Vec::with_capacity(edges),
            index: HashSet::with_capacity(edges),
            ..Digraph::new(node_count)
        }
    }

    /// Builds a graph from an edge list, failing on the first self-loop,
    /// duplicate or out-of-range endpoint.
    pub fn from_edges<I>(node_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (NodeId, NodeId)>,
    {
        let mut g = Digraph::new(node_count);
        for (src, dst) in edges {
            match g.add_edge(src, dst)? {
                Insertion::Added => {}
                Insertion::SelfLoop => return Err(Error::InvalidParams(format!("self-loop on node {src}"))),
                Insertion::Duplicate => return Err(Error::InvalidParams(format!("duplicate edge ({src}, {dst})"))),
            }
        }
        Ok(g)
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in insertion order.
    pub fn edges(&self) -> &[(NodeId, NodeId)] {
        &self.edges
    }

    pub fn contains_edge(&self, src: NodeId, dst: NodeId) -> bool {
        self.index.contains(&(src, dst))
    }

    fn check_node(&self, node: NodeId) -> Result<()> {
        if node < self.node_count {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange {
                node,
                node_count: self.node_count,
            })
        }
    }

    /// Inserts `src -> dst` unless it is a self-loop or already present.
    pub fn add_edge(&mut self, src: NodeId, dst: NodeId) -> Result<Insertion> {
        self.check_node(src)?;
        self.check_node(dst)?;
        if src == dst {
            return Ok(Insertion::SelfLoop);
        }
        if !self.index.insert((src, dst)) {
            return Ok(Insertion::Duplicate);
        }
        self.edges.push((src, dst));
        self.out_deg[src] += 1;
        self.in_deg[dst] += 1;
        Ok(Insertion::Added)
    }

    /// Appends `count` isolated nodes and returns their id range.
    pub fn add_nodes(&mut self, count: usize) -> Range<NodeId> {
        let start = self.node_count;
        self.node_count += count;
        self.in_deg.resize(self.node_count, 0);
        self.out_deg.resize(self.node_count, 0);
        start..self.node_count
    }

    pub fn in_degree(&self, node: NodeId) -> usize {
        self.in_deg[node]
    }

    pub fn out_degree(&self, node: NodeId) -> usize {
        self.out_deg[node]
    }

    pub fn degrees(&self, kind: DegreeKind) -> &[usize] {
        match kind {
            DegreeKind::In => &self.in_deg,
            DegreeKind::Out => &self.out_deg,
        }
    }

    pub fn degree_sequence(&self, kind: DegreeKind) -> DegreeSequence {
        DegreeSequence::new(kind, self.degrees(kind).to_vec())
    }

    /// Maximum number of edges a simple digraph on `n` nodes can hold.
    pub fn capacity(n: usize) -> usize {
        n.saturating_mul(n.saturating_sub(1))
    }

    /// Edges per node, `E / N`.
    pub fn density_ratio(&self) -> f64 {
        if self.node_count == 0 {
            0.0
        } else {
            self.edges.len() as f64 / self.node_count as f64
        }
    }
}

impl PartialEq for Digraph {
    /// Equal node counts and equal edge sets; insertion order is ignored.
    fn eq(&self, other: &Self) -> bool {
        self.node_count == other.node_count
            && self.edges.len() == other.edges.len()
            && self.edges.iter().all(|e| other.index.contains(e))
    }
}

impl Eq for Digraph {}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Digraph")
            .field("node_count", &self.node_count)
            .field("edges", &self.edges)
            .finish()
    }
}

/// Per-node degrees in node-index order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSequence {
    pub kind: DegreeKind,
    pub values: Vec<usize>,
}

impl DegreeSequence {
    pub fn new(kind: DegreeKind, values: Vec<usize>) -> Self {
        DegreeSequence { kind, values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn total(&self) -> usize {
        self.values.iter().sum()
    }

    pub fn sorted(&self) -> Vec<usize> {
        let mut v = self.values.clone();
        v.sort_unstable();
        v
    }
}
