//! Adjacency spectra.
//!
//! Ordering nodes by strongly connected component (in topological order of
//! the condensation) makes the 0/1 adjacency matrix block upper triangular,
//! so its eigenvalues are the union of the eigenvalues of the diagonal
//! blocks. Singleton components contribute an exact zero (there are no
//! self-loops); only nontrivial components go through a dense real Schur
//! decomposition. Besides saving work this keeps nilpotent parts exactly
//! zero, which a dense solver on the whole matrix would smear into a ring of
//! radius `eps^(1/k)`.

use nalgebra::linalg::Schur;
use nalgebra::DMatrix;
use num_complex::Complex64;
use petgraph::algo::kosaraju_scc;
use petgraph::graph::{DiGraph, NodeIndex};

use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::rng::RandomStream;

/// All eigenvalues of the adjacency matrix, grouped by component.
pub fn eigenvalues(g: &Digraph) -> Result<Vec<Complex64>> {
    let mut pg: DiGraph<(), ()> = DiGraph::with_capacity(g.node_count(), g.edge_count());
    for _ in 0..g.node_count() {
        pg.add_node(());
    }
    for &(s, d) in g.edges() {
        pg.add_edge(NodeIndex::new(s), NodeIndex::new(d), ());
    }

    let mut local = vec![usize::MAX; g.node_count()];
    let mut out = Vec::with_capacity(g.node_count());
    for comp in kosaraju_scc(&pg) {
        if comp.len() == 1 {
            out.push(Complex64::new(0.0, 0.0));
            continue;
        }
        for (i, n) in comp.iter().enumerate() {
            local[n.index()] = i;
        }
        let k = comp.len();
        let mut block = DMatrix::<f64>::zeros(k, k);
        for n in &comp {
            for m in pg.neighbors(*n) {
                let j = local[m.index()];
                if j != usize::MAX {
                    block[(local[n.index()], j)] = 1.0;
                }
            }
        }
        for n in &comp {
            local[n.index()] = usize::MAX;
        }
        out.extend(block_eigenvalues(block)?);
    }
    Ok(out)
}

fn block_eigenvalues(block: DMatrix<f64>) -> Result<Vec<Complex64>> {
    let k = block.nrows();
    let schur = |m: DMatrix<f64>| Schur::try_new(m, f64::EPSILON, 1000 * k);
    if let Some(s) = schur(block.clone()) {
        return Ok(s.complex_eigenvalues().iter().copied().collect());
    }
    // Shifted QR stalls on permutation-like blocks such as long cycles. An
    // orthogonal similarity keeps the eigenvalues and breaks that structure.
    let mut rng = RandomStream::new(0);
    let q = DMatrix::<f64>::from_fn(k, k, |_, _| rng.unit() - 0.5).qr().q();
    let rotated = q.transpose() * block * &q;
    let s = schur(rotated).ok_or(Error::EigenSolver(k))?;
    Ok(s.complex_eigenvalues().iter().copied().collect())
}

/// Eigenvalue magnitudes sorted descending; one entry per node.
pub fn spectrum(g: &Digraph) -> Result<Vec<f64>> {
    let mut mags: Vec<f64> = eigenvalues(g)?.iter().map(|z| z.norm()).collect();
    mags.sort_by(|a, b| b.total_cmp(a));
    Ok(mags)
}

/// Mean absolute difference of two descending magnitude lists, the shorter
/// one padded with zeros.
pub fn spectral_distance(a: &[f64], b: &[f64]) -> f64 {
    let len = a.len().max(b.len());
    if len == 0 {
        return 0.0;
    }
    let at = |v: &[f64], i: usize| v.get(i).copied().unwrap_or(0.0);
    (0..len).map(|i| (at(a, i) - at(b, i)).abs()).sum::<f64>() / len as f64
}
