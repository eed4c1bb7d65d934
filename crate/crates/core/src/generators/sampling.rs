//! Node selection rules.
//!
//! [`sample_node`] works on an arbitrary candidate list in linear time. The
//! generators use [`Growth`], which keeps Fenwick trees over in-degree,
//! out-degree and the in-degree-zero indicator so that every rule runs in
//! `O(log n)` over a contiguous id range.

use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{DegreeKind, Digraph, Insertion, NodeId};
use crate::rng::RandomStream;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SampleMode {
    Uniform,
    PreferentialIn,
    PreferentialOut,
    /// Uniform among candidates with in-degree zero; falls back to
    /// [`SampleMode::PreferentialIn`] when there are none.
    UniformInDegreeZero,
}

/// Draws one node from `candidates` under `mode`.
///
/// Preferential modes pick node `i` with probability `deg(i) / sum(deg)` over
/// the candidates and fall back to uniform when that sum is zero.
pub fn sample_node(g: &Digraph, candidates: &[NodeId], mode: SampleMode, rng: &mut RandomStream) -> Result<NodeId> {
    if candidates.is_empty() {
        return Err(Error::EmptyCandidates);
    }
    if let Some(&bad) = candidates.iter().find(|&&c| c >= g.node_count()) {
        return Err(Error::NodeOutOfRange {
            node: bad,
            node_count: g.node_count(),
        });
    }
    let pick = match mode {
        SampleMode::Uniform => candidates[rng.index(candidates.len())],
        SampleMode::PreferentialIn => preferential(g, candidates, DegreeKind::In, rng),
        SampleMode::PreferentialOut => preferential(g, candidates, DegreeKind::Out, rng),
        SampleMode::UniformInDegreeZero => {
            let zeros: Vec<NodeId> = candidates.iter().copied().filter(|&c| g.in_degree(c) == 0).collect();
            if zeros.is_empty() {
                preferential(g, candidates, DegreeKind::In, rng)
            } else {
                zeros[rng.index(zeros.len())]
            }
        }
    };
    Ok(pick)
}

fn preferential(g: &Digraph, candidates: &[NodeId], kind: DegreeKind, rng: &mut RandomStream) -> NodeId {
    let deg = g.degrees(kind);
    let total: u64 = candidates.iter().map(|&c| deg[c] as u64).sum();
    if total == 0 {
        return candidates[rng.index(candidates.len())];
    }
    let mut target = rng.below(total);
    for &c in candidates {
        let w = deg[c] as u64;
        if target < w {
            return c;
        }
        target -= w;
    }
    unreachable!("target below total weight")
}

/// Fenwick tree over nonnegative integer weights.
#[derive(Debug, Clone)]
pub(crate) struct WeightTree {
    tree: Vec<u64>,
}

impl WeightTree {
    pub(crate) fn from_weights<I: IntoIterator<Item = u64>>(weights: I) -> Self {
        let mut tree = vec![0u64];
        tree.extend(weights);
        let n = tree.len() - 1;
        for i in 1..=n {
            let parent = i + (i & i.wrapping_neg());
            if parent <= n {
                tree[parent] += tree[i];
            }
        }
        WeightTree { tree }
    }

    fn len(&self) -> usize {
        self.tree.len() - 1
    }

    pub(crate) fn add(&mut self, index: usize, delta: u64) {
        let mut i = index + 1;
        while i < self.tree.len() {
            self.tree[i] += delta;
            i += i & i.wrapping_neg();
        }
    }

    pub(crate) fn sub(&mut self, index: usize, delta: u64) {
        let mut i = index + 1;
        while i < self.tree.len() {
            self.tree[i] -= delta;
            i += i & i.wrapping_neg();
        }
    }

    /// Sum of weights `[0, end)`.
    pub(crate) fn prefix(&self, end: usize) -> u64 {
        let mut i = end;
        let mut sum = 0;
        while i > 0 {
            sum += self.tree[i];
            i &= i - 1;
        }
        sum
    }

    pub(crate) fn range_sum(&self, range: &Range<usize>) -> u64 {
        self.prefix(range.end) - self.prefix(range.start)
    }

    /// Smallest index whose inclusive prefix sum exceeds `target`.
    pub(crate) fn find(&self, mut target: u64) -> usize {
        let n = self.len();
        let mut pos = 0;
        let mut step = if n == 0 {
            0
        } else {
            1 << (usize::BITS - 1 - n.leading_zeros())
        };
        while step > 0 {
            let next = pos + step;
            if next <= n && self.tree[next] <= target {
                pos = next;
                target -= self.tree[next];
            }
            step >>= 1;
        }
        pos
    }

    /// Weighted draw within `range`; `None` when the range carries no weight.
    pub(crate) fn sample(&self, range: &Range<usize>, rng: &mut RandomStream) -> Option<usize> {
        let total = self.range_sum(range);
        if total == 0 {
            return None;
        }
        let offset = rng.below(total);
        Some(self.find(self.prefix(range.start) + offset))
    }
}

/// A graph under construction together with the sampling indexes the
/// generators need.
pub(crate) struct Growth {
    graph: Digraph,
    in_weight: WeightTree,
    out_weight: WeightTree,
    in_zero: WeightTree,
}

impl Growth {
    pub(crate) fn new(graph: Digraph) -> Self {
        let in_weight = WeightTree::from_weights(graph.degrees(DegreeKind::In).iter().map(|&d| d as u64));
        let out_weight = WeightTree::from_weights(graph.degrees(DegreeKind::Out).iter().map(|&d| d as u64));
        let in_zero = WeightTree::from_weights(graph.degrees(DegreeKind::In).iter().map(|&d| u64::from(d == 0)));
        Growth {
            graph,
            in_weight,
            out_weight,
            in_zero,
        }
    }

    pub(crate) fn into_graph(self) -> Digraph {
        self.graph
    }

    fn uniform(range: &Range<NodeId>, rng: &mut RandomStream) -> NodeId {
        range.start + rng.index(range.len())
    }

    /// Edge source: uniform with probability `e1`, else by out-degree.
    pub(crate) fn pick_source(&self, range: &Range<NodeId>, e1: f64, rng: &mut RandomStream) -> NodeId {
        if rng.chance(e1) {
            return Self::uniform(range, rng);
        }
        self.out_weight
            .sample(range, rng)
            .unwrap_or_else(|| Self::uniform(range, rng))
    }

    /// Edge target: uniform over in-degree-zero nodes with probability `e2`,
    /// else by in-degree.
    pub(crate) fn pick_target(&self, range: &Range<NodeId>, e2: f64, rng: &mut RandomStream) -> NodeId {
        if rng.chance(e2) {
            if let Some(n) = self.in_zero.sample(range, rng) {
                return n;
            }
        }
        self.in_weight
            .sample(range, rng)
            .unwrap_or_else(|| Self::uniform(range, rng))
    }

    pub(crate) fn insert(&mut self, src: NodeId, dst: NodeId) -> Result<Insertion> {
        let outcome = self.graph.add_edge(src, dst)?;
        if outcome.is_added() {
            self.out_weight.add(src, 1);
            if self.graph.in_degree(dst) == 1 {
                self.in_zero.sub(dst, 1);
            }
            self.in_weight.add(dst, 1);
        }
        Ok(outcome)
    }
}

/// Counts rejected proposals against a run-wide allowance.
pub(crate) struct RejectionBudget {
    allowed: usize,
    used: usize,
}

impl RejectionBudget {
    /// 100 rejections per requested insertion, pooled over the run.
    pub(crate) fn for_insertions(insertions: usize) -> Self {
        RejectionBudget {
            allowed: insertions.saturating_mul(100),
            used: 0,
        }
    }

    pub(crate) fn reject(&mut self, iteration: usize) -> Result<()> {
        self.used += 1;
        if self.used > self.allowed {
            return Err(Error::ResamplingCap {
                iteration,
                rejections: self.used - 1,
            });
        }
        Ok(())
    }
}
