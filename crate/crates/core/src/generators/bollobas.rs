use super::params::BollobasParams;
use super::sampling::RejectionBudget;
use crate::error::{Error, Result};
use crate::graph::{Digraph, NodeId};
use crate::rng::RandomStream;

/// Grows a directed scale-free graph from a single isolated node until it has
/// `target_edges` edges. The node count is whatever the growth produces.
pub fn bollobas_generate(target_edges: usize, params: BollobasParams, rng: &mut RandomStream) -> Result<Digraph> {
    if target_edges == 0 {
        return Err(Error::InvalidParams("target_edges must be at least 1".into()));
    }
    bollobas_grow(Digraph::new(1), target_edges, params, rng)
}

/// Same as [`bollobas_generate`] but starting from `seed`, which must have
/// at least one node and no more than `target_edges` edges.
pub fn bollobas_grow(
    seed: Digraph,
    target_edges: usize,
    params: BollobasParams,
    rng: &mut RandomStream,
) -> Result<Digraph> {
    params.validate()?;
    if seed.node_count() == 0 {
        return Err(Error::InvalidParams("seed graph has no nodes".into()));
    }
    if seed.edge_count() > target_edges {
        return Err(Error::InvalidParams(format!(
            "seed graph already has {} edges, target is {target_edges}",
            seed.edge_count()
        )));
    }
    let mut g = seed;
    let start_edges = g.edge_count();
    let mut budget = RejectionBudget::for_insertions(target_edges - start_edges);
    while g.edge_count() < target_edges {
        let t = g.edge_count() - start_edges + 1;
        let u = rng.unit();
        if u < params.alpha {
            let dst = pick(&g, End::Target, params.delta_in, rng);
            let src = g.add_nodes(1).start;
            g.add_edge(src, dst)?;
        } else if u < params.alpha + params.beta {
            let src = pick(&g, End::Source, params.delta_out, rng);
            let dst = pick(&g, End::Target, params.delta_in, rng);
            if !g.add_edge(src, dst)?.is_added() {
                budget.reject(t)?;
            }
        } else {
            let src = pick(&g, End::Source, params.delta_out, rng);
            let dst = g.add_nodes(1).start;
            g.add_edge(src, dst)?;
        }
    }
    Ok(g)
}

#[derive(Clone, Copy)]
enum End {
    Source,
    Target,
}

/// Node with probability proportional to `degree + delta`, where degree is
/// out-degree for sources and in-degree for targets. The mixture is split
/// into "endpoint of a uniformly chosen edge" (weight `E`) and "uniform node"
/// (weight `delta * N`). Uniform when both weights vanish.
fn pick(g: &Digraph, end: End, delta: f64, rng: &mut RandomStream) -> NodeId {
    let edges = g.edge_count() as f64;
    let smooth = delta * g.node_count() as f64;
    let total = edges + smooth;
    let via_edge = total > 0.0 && rng.chance(edges / total);
    if via_edge {
        let (s, d) = g.edges()[rng.index(g.edge_count())];
        match end {
            End::Source => s,
            End::Target => d,
        }
    } else {
        rng.index(g.node_count())
    }
}
