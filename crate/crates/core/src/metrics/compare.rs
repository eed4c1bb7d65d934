use serde::{Deserialize, Serialize};

use super::{ks_statistic, msd_sorted, spectral_distance, spectrum};
use crate::error::{Error, Result};
use crate::graph::{DegreeKind, DegreeSequence, Digraph, NodeId};

/// Degree-distribution distances between a reference graph and a candidate.
///
/// Serializes as a flat object; the MSD fields are `null` when the node
/// counts differ.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MetricsReport {
    pub ks_in: f64,
    pub ks_out: f64,
    pub msd_in: Option<f64>,
    pub msd_out: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spectral_gap: Option<f64>,
}

impl MetricsReport {
    fn from_sequences(
        ref_in: &DegreeSequence,
        ref_out: &DegreeSequence,
        cand_in: &DegreeSequence,
        cand_out: &DegreeSequence,
    ) -> Result<Self> {
        Ok(MetricsReport {
            ks_in: ks_statistic(ref_in, cand_in)?,
            ks_out: ks_statistic(ref_out, cand_out)?,
            msd_in: msd_sorted(ref_in, cand_in)?,
            msd_out: msd_sorted(ref_out, cand_out)?,
            spectral_gap: None,
        })
    }

    /// Adds the mean absolute gap between the two sorted spectra.
    pub fn with_spectra(mut self, reference: &Digraph, candidate: &Digraph) -> Result<Self> {
        self.spectral_gap = Some(spectral_distance(&spectrum(reference)?, &spectrum(candidate)?));
        Ok(self)
    }

    pub fn ks_max(&self) -> f64 {
        self.ks_in.max(self.ks_out)
    }

    pub fn msd_max(&self) -> Option<f64> {
        Some(self.msd_in?.max(self.msd_out?))
    }
}

/// Compares the full in- and out-degree distributions of two graphs. Both
/// graphs need at least one node.
pub fn compare(reference: &Digraph, candidate: &Digraph) -> MetricsReport {
    MetricsReport::from_sequences(
        &reference.degree_sequence(DegreeKind::In),
        &reference.degree_sequence(DegreeKind::Out),
        &candidate.degree_sequence(DegreeKind::In),
        &candidate.degree_sequence(DegreeKind::Out),
    )
    .expect("kinds match and graphs are nonempty")
}

/// Like [`compare`] but restricted to a node subset of each graph (typically
/// the nodes added by an evolution step). Degrees still count every edge.
pub fn compare_restricted(
    reference: &Digraph,
    reference_nodes: &[NodeId],
    candidate: &Digraph,
    candidate_nodes: &[NodeId],
) -> Result<MetricsReport> {
    MetricsReport::from_sequences(
        &restrict_to_new_nodes(reference, reference_nodes, DegreeKind::In)?,
        &restrict_to_new_nodes(reference, reference_nodes, DegreeKind::Out)?,
        &restrict_to_new_nodes(candidate, candidate_nodes, DegreeKind::In)?,
        &restrict_to_new_nodes(candidate, candidate_nodes, DegreeKind::Out)?,
    )
}

/// Degrees of the listed nodes, in list order, counted in the whole graph.
pub fn restrict_to_new_nodes(g: &Digraph, nodes: &[NodeId], kind: DegreeKind) -> Result<DegreeSequence> {
    let deg = g.degrees(kind);
    let values = nodes
        .iter()
        .map(|&n| {
            deg.get(n).copied().ok_or(Error::NodeOutOfRange {
                node: n,
                node_count: g.node_count(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DegreeSequence::new(kind, values))
}
