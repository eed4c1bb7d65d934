//! Grid-search parameter fitting and replicate statistics.
//!
//! Every grid point is scored on the same seed set (`base_seed + i` for
//! replicate `i`), so differences between points are not seed noise. Points
//! are enumerated in lexicographic order of their parameter tuple and the
//! first minimum wins, which makes tie-breaking deterministic. Points where
//! the generator cannot produce a simple graph (resampling cap, capacity) are
//! kept in the table as infeasible rather than aborting the search.
//!
//! Grids:
//! * static generator: `e1, e2` on `{0, step, ..., 1}`, `e2 < N/E`;
//! * evolving generator: `alpha, beta, e1, e2` with `alpha + beta <= 1` and
//!   `e2 < N/E` of the grown graph;
//! * scale-free baseline: `alpha, gamma` with `beta = 1 - alpha - gamma`, and
//!   `delta_in = delta_out` in `{0, 0.5, 1, 2}`.

use std::ops::Range;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generators::{
    bollobas_generate, sdg, sdg_default_params, sedge, sedge_default_params, BollobasParams, SdgParams, SedgeParams,
};
use crate::graph::{Digraph, NodeId};
use crate::metrics::{compare, compare_restricted, MetricsReport};
use crate::rng::RandomStream;

pub const DEFAULT_GRID_STEP: f64 = 0.05;
pub const DEFAULT_TUNING_REPLICATES: usize = 20;
pub const DEFAULT_REPORT_RUNS: usize = 100;
pub const BOLLOBAS_DELTAS: [f64; 4] = [0.0, 0.5, 1.0, 2.0];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    Sdg,
    Sedge,
    Bollobas,
}

impl Model {
    /// MSD needs equal node counts, which the scale-free baseline cannot
    /// guarantee, so it is scored on KS instead.
    pub fn default_objective(self) -> Objective {
        match self {
            Model::Sdg | Model::Sedge => Objective::MinimaxMsd,
            Model::Bollobas => Objective::KsMax,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Objective {
    /// max(MSD_in, MSD_out)
    MinimaxMsd,
    /// max(KS_in, KS_out)
    KsMax,
}

impl Objective {
    pub fn score(self, report: &MetricsReport) -> Result<f64> {
        match self {
            Objective::KsMax => Ok(report.ks_max()),
            Objective::MinimaxMsd => report
                .msd_max()
                .ok_or_else(|| Error::Tuning("MSD is unavailable for graphs of different sizes; use ks_max".into())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TuneSpec {
    pub model: Model,
    pub grid_step: f64,
    pub replicates: usize,
    pub objective: Objective,
    pub base_seed: u64,
}

impl TuneSpec {
    pub fn new(model: Model) -> Self {
        TuneSpec {
            model,
            grid_step: DEFAULT_GRID_STEP,
            replicates: DEFAULT_TUNING_REPLICATES,
            objective: model.default_objective(),
            base_seed: 0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.grid_step > 0.0 && self.grid_step <= 1.0) {
            return Err(Error::Tuning(format!("grid step {} is not in (0, 1]", self.grid_step)));
        }
        if self.replicates == 0 {
            return Err(Error::Tuning("at least one replicate is required".into()));
        }
        if self.model == Model::Bollobas && self.objective == Objective::MinimaxMsd {
            return Err(Error::Tuning(
                "the bollobas model does not preserve the node count, so MSD is unavailable; use the ks_max objective"
                    .into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "lowercase")]
pub enum ModelParams {
    Sdg(SdgParams),
    Sedge(SedgeParams),
    Bollobas(BollobasParams),
}

impl ModelParams {
    pub fn model(&self) -> Model {
        match self {
            ModelParams::Sdg(_) => Model::Sdg,
            ModelParams::Sedge(_) => Model::Sedge,
            ModelParams::Bollobas(_) => Model::Bollobas,
        }
    }

    /// Parameter values in grid order.
    pub fn coordinates(&self) -> Vec<f64> {
        match *self {
            ModelParams::Sdg(p) => vec![p.e1, p.e2],
            ModelParams::Sedge(p) => vec![p.alpha, p.beta, p.e1, p.e2],
            ModelParams::Bollobas(p) => vec![p.alpha, p.gamma, p.delta_in],
        }
    }

    pub fn coordinate_names(model: Model) -> &'static [&'static str] {
        match model {
            Model::Sdg => &["e1", "e2"],
            Model::Sedge => &["alpha", "beta", "e1", "e2"],
            Model::Bollobas => &["alpha", "gamma", "delta"],
        }
    }
}

/// A real version pair: `evolved` grew out of `base`, and `new_nodes` are the
/// ids in `evolved` that did not exist in `base`.
#[derive(Debug, Clone)]
pub struct EvolutionCase {
    pub base: Digraph,
    pub evolved: Digraph,
    pub new_nodes: Vec<NodeId>,
}

impl EvolutionCase {
    pub fn new(base: Digraph, evolved: Digraph, new_nodes: Vec<NodeId>) -> Result<Self> {
        if evolved.node_count() <= base.node_count() {
            return Err(Error::Tuning(format!(
                "second version has {} nodes, not more than the first ({})",
                evolved.node_count(),
                base.node_count()
            )));
        }
        if evolved.edge_count() < base.edge_count() {
            return Err(Error::Tuning(format!(
                "second version has fewer edges ({}) than the first ({})",
                evolved.edge_count(),
                base.edge_count()
            )));
        }
        if new_nodes.is_empty() {
            return Err(Error::Tuning("the new-node list is empty".into()));
        }
        if let Some(&bad) = new_nodes.iter().find(|&&n| n >= evolved.node_count()) {
            return Err(Error::NodeOutOfRange {
                node: bad,
                node_count: evolved.node_count(),
            });
        }
        Ok(EvolutionCase {
            base,
            evolved,
            new_nodes,
        })
    }

    pub fn new_node_count(&self) -> usize {
        self.evolved.node_count() - self.base.node_count()
    }

    pub fn new_edge_count(&self) -> usize {
        self.evolved.edge_count() - self.base.edge_count()
    }
}

/// What a generator is fitted against.
#[derive(Debug, Clone)]
pub enum TuneTarget {
    Static(Digraph),
    Evolution(EvolutionCase),
}

impl TuneTarget {
    /// Node and edge count of the graph the generator has to match.
    pub fn final_size(&self) -> (usize, usize) {
        let g = match self {
            TuneTarget::Static(g) => g,
            TuneTarget::Evolution(c) => &c.evolved,
        };
        (g.node_count(), g.edge_count())
    }
}

/// Untuned parameters. The baseline has no published defaults; it uses a
/// common directed scale-free configuration.
pub fn default_params(model: Model, target: &TuneTarget) -> ModelParams {
    let (n, e) = target.final_size();
    match model {
        Model::Sdg => ModelParams::Sdg(sdg_default_params(n, e)),
        Model::Sedge => ModelParams::Sedge(sedge_default_params(n, e)),
        Model::Bollobas => ModelParams::Bollobas(BollobasParams {
            alpha: 0.41,
            beta: 0.54,
            gamma: 0.05,
            delta_in: 0.2,
            delta_out: 0.0,
        }),
    }
}

/// Generates one candidate for `target` and measures it.
pub fn evaluate(target: &TuneTarget, params: &ModelParams, seed: u64) -> Result<MetricsReport> {
    let mut rng = RandomStream::new(seed);
    match (target, params) {
        (TuneTarget::Static(reference), ModelParams::Sdg(p)) => {
            let g = sdg(reference.node_count(), reference.edge_count(), *p, &mut rng)?;
            Ok(compare(reference, &g))
        }
        (TuneTarget::Static(reference), ModelParams::Bollobas(p)) => {
            let g = bollobas_generate(reference.edge_count(), *p, &mut rng)?;
            Ok(compare(reference, &g))
        }
        (TuneTarget::Evolution(case), ModelParams::Sedge(p)) => {
            let g = sedge(&case.base, case.new_node_count(), case.new_edge_count(), *p, &mut rng)?;
            let fresh: Vec<NodeId> = appended_nodes(&case.base, &g).collect();
            compare_restricted(&case.evolved, &case.new_nodes, &g, &fresh)
        }
        (TuneTarget::Static(_), ModelParams::Sedge(_)) => Err(Error::Tuning(
            "the evolving generator needs a base graph and a new-node list".into(),
        )),
        (TuneTarget::Evolution(_), _) => Err(Error::Tuning(
            "evolution targets are only supported by the sedge model".into(),
        )),
    }
}

/// `replicates` independent evaluations at fixed parameters, seeds
/// `base_seed + i`, in replicate order.
pub fn run_replicates(
    target: &TuneTarget,
    params: &ModelParams,
    replicates: usize,
    base_seed: u64,
) -> Result<Vec<MetricsReport>> {
    (0..replicates as u64)
        .into_par_iter()
        .map(|i| evaluate(target, params, base_seed.wrapping_add(i)))
        .collect()
}

/// `{0, step, 2 step, ...} ∩ [0, 1]`. When `1/step` is (numerically) an
/// integer `K` the points are computed as `i / K` so that 1 is hit exactly.
pub fn grid_values(step: f64) -> Vec<f64> {
    let k = (1.0 / step).round();
    if (k * step - 1.0).abs() < 1e-9 {
        let k = k as usize;
        (0..=k).map(|i| i as f64 / k as f64).collect()
    } else {
        (0..)
            .map(|i| i as f64 * step)
            .take_while(|&v| v <= 1.0 + 1e-12)
            .map(|v| v.min(1.0))
            .collect()
    }
}

/// Every grid point for `model`, in lexicographic order.
pub fn grid(model: Model, target: &TuneTarget, step: f64) -> Vec<ModelParams> {
    let values = grid_values(step);
    let (n, e) = target.final_size();
    let e2_cap = if e == 0 { f64::INFINITY } else { n as f64 / e as f64 };
    let e2_values: Vec<f64> = values.iter().copied().filter(|&v| v < e2_cap).collect();
    let mut out = Vec::new();
    match model {
        Model::Sdg => {
            for &e1 in &values {
                for &e2 in &e2_values {
                    out.push(ModelParams::Sdg(SdgParams { e1, e2 }));
                }
            }
        }
        Model::Sedge => {
            for &alpha in &values {
                for &beta in values.iter().filter(|&&b| alpha + b <= 1.0 + 1e-9) {
                    for &e1 in &values {
                        for &e2 in &e2_values {
                            out.push(ModelParams::Sedge(SedgeParams {
                                alpha,
                                beta: beta.min(1.0 - alpha),
                                e1,
                                e2,
                            }));
                        }
                    }
                }
            }
        }
        Model::Bollobas => {
            for &alpha in &values {
                for &gamma in values.iter().filter(|&&g| alpha + g <= 1.0 + 1e-9) {
                    let gamma = gamma.min(1.0 - alpha);
                    let beta = (1.0 - alpha - gamma).max(0.0);
                    for delta in BOLLOBAS_DELTAS {
                        out.push(ModelParams::Bollobas(BollobasParams {
                            alpha,
                            beta,
                            gamma,
                            delta_in: delta,
                            delta_out: delta,
                        }));
                    }
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridScore {
    pub params: ModelParams,
    /// Mean objective over replicates; `None` when the point is infeasible.
    pub score: Option<f64>,
    pub std: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TuneResult {
    pub spec: TuneSpec,
    pub best_params: ModelParams,
    pub best_score: f64,
    /// Standard deviation of the objective over replicates at the optimum.
    pub replicate_std: f64,
    pub score_table: Vec<GridScore>,
}

/// Exhaustive grid search.
pub fn tune(target: &TuneTarget, spec: &TuneSpec) -> Result<TuneResult> {
    spec.validate()?;
    let points = grid(spec.model, target, spec.grid_step);
    tune_points(target, spec, points)
}

/// Grid search over an explicit list of points, which must all belong to
/// `spec.model`. The first point with the lowest mean score wins.
pub fn tune_points(target: &TuneTarget, spec: &TuneSpec, points: Vec<ModelParams>) -> Result<TuneResult> {
    spec.validate()?;
    if points.is_empty() {
        return Err(Error::Tuning("the parameter grid is empty".into()));
    }
    if let Some(p) = points.iter().find(|p| p.model() != spec.model) {
        return Err(Error::Tuning(format!(
            "grid point {p:?} does not belong to {:?}",
            spec.model
        )));
    }
    let score_table = points
        .into_par_iter()
        .map(|params| score_point(target, spec, params))
        .collect::<Result<Vec<_>>>()?;

    let mut best: Option<&GridScore> = None;
    for row in &score_table {
        if let Some(s) = row.score {
            if best.is_none_or(|b| s < b.score.expect("best is feasible")) {
                best = Some(row);
            }
        }
    }
    let best = best.ok_or_else(|| Error::Tuning("no grid point produced a valid graph".into()))?;
    Ok(TuneResult {
        spec: *spec,
        best_params: best.params,
        best_score: best.score.expect("feasible"),
        replicate_std: best.std.expect("feasible"),
        score_table: score_table.clone(),
    })
}

fn score_point(target: &TuneTarget, spec: &TuneSpec, params: ModelParams) -> Result<GridScore> {
    let mut scores = Vec::with_capacity(spec.replicates);
    for i in 0..spec.replicates as u64 {
        match evaluate(target, &params, spec.base_seed.wrapping_add(i)) {
            Ok(report) => scores.push(spec.objective.score(&report)?),
            Err(e) if e.is_generation_limit() => {
                return Ok(GridScore {
                    params,
                    score: None,
                    std: None,
                })
            }
            Err(e) => return Err(e),
        }
    }
    let s = Summary::of(&scores);
    Ok(GridScore {
        params,
        score: Some(s.mean),
        std: Some(s.std),
    })
}

/// Mean and sample standard deviation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub mean: f64,
    pub std: f64,
}

impl Summary {
    /// Standard deviation uses the `n - 1` denominator and is 0 for a
    /// single value. `values` must be nonempty.
    pub fn of(values: &[f64]) -> Self {
        assert!(!values.is_empty(), "summary of an empty sample");
        let n = values.len() as f64;
        let mean = values.iter().sum::<f64>() / n;
        if values.len() < 2 {
            return Summary { mean, std: 0.0 };
        }
        let ss: f64 = values.iter().map(|v| (v - mean).powi(2)).sum();
        Summary {
            mean,
            std: (ss / (n - 1.0)).sqrt(),
        }
    }
}

/// Spread of each metric across replicates at fixed parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StabilityReport {
    pub replicates: usize,
    pub ks_in: Summary,
    pub ks_out: Summary,
    pub msd_in: Option<Summary>,
    pub msd_out: Option<Summary>,
}

pub fn stability_report(
    target: &TuneTarget,
    params: &ModelParams,
    replicates: usize,
    base_seed: u64,
) -> Result<StabilityReport> {
    if replicates < 2 {
        return Err(Error::Tuning("stability needs at least two replicates".into()));
    }
    let reports = run_replicates(target, params, replicates, base_seed)?;
    Ok(summarize(&reports))
}

pub fn summarize(reports: &[MetricsReport]) -> StabilityReport {
    let column = |f: fn(&MetricsReport) -> Option<f64>| -> Option<Summary> {
        let v: Option<Vec<f64>> = reports.iter().map(f).collect();
        v.map(|v| Summary::of(&v))
    };
    StabilityReport {
        replicates: reports.len(),
        ks_in: column(|r| Some(r.ks_in)).expect("ks always present"),
        ks_out: column(|r| Some(r.ks_out)).expect("ks always present"),
        msd_in: column(|r| r.msd_in),
        msd_out: column(|r| r.msd_out),
    }
}

/// Index range of the nodes an evolution run appends.
pub fn appended_nodes(base: &Digraph, grown: &Digraph) -> Range<NodeId> {
    base.node_count()..grown.node_count()
}
