//! Corpus-level reports.
//!
//! A manifest is a JSON list. Static entries name one graph,
//! `{"name": "ant", "graph": "ant.edges"}`; evolution entries name a pair of
//! versions and the ids of the second version's new nodes,
//! `{"name": "wicket", "first": "a.edges", "second": "b.edges", "new_nodes": "b.new"}`.
//! With `"named": true` the files use node names instead of ids, and a pair
//! without `new_nodes` takes the names missing from the first version as new.
//! Relative paths resolve against the manifest's directory.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use log::info;
use sdgen::io::{new_node_ids, read_edge_list, read_named_edge_list, read_node_list};
use sdgen::tuning::{self, EvolutionCase, Model, StabilityReport, TuneSpec, TuneTarget};
use sdgen::Digraph;
use serde::Deserialize;

use crate::args::{Mode, ReportArgs};
use crate::error::CliError;
use crate::output::{emit, opt_sig6};

const METRICS: [&str; 4] = ["ks_in", "ks_out", "msd_in", "msd_out"];

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum Entry {
    Static(StaticEntry),
    Pair(PairEntry),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct StaticEntry {
    name: String,
    graph: PathBuf,
    #[serde(default)]
    named: bool,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct PairEntry {
    name: String,
    first: PathBuf,
    second: PathBuf,
    new_nodes: Option<PathBuf>,
    #[serde(default)]
    named: bool,
}

struct Loaded {
    name: String,
    target: TuneTarget,
}

pub fn report(args: ReportArgs) -> Result<(), CliError> {
    if args.runs == 0 {
        return Err(CliError::Usage("--runs must be positive".into()));
    }
    let model = match args.mode {
        Mode::Static => Model::Sdg,
        Mode::Evolution => Model::Sedge,
    };
    let spec = TuneSpec {
        model,
        grid_step: args.grid_step,
        replicates: args.replicates,
        objective: model.default_objective(),
        base_seed: args.seed,
    };
    if args.tuned {
        spec.validate()?;
    }
    let entries = load_manifest(&args.manifest, args.mode)?;
    let defaults = args.defaults || !args.tuned;

    let mut out = header(defaults, args.tuned);
    for entry in &entries {
        info!("report: {}", entry.name);
        let default_row = if defaults {
            let params = tuning::default_params(model, &entry.target);
            Some(averaged(&entry.target, &params, args.runs, args.seed)?)
        } else {
            None
        };
        let tuned_row = if args.tuned {
            let best = tuning::tune(&entry.target, &spec)?.best_params;
            info!("{}: tuned to {best:?}", entry.name);
            Some(averaged(&entry.target, &best, args.runs, args.seed)?)
        } else {
            None
        };
        out.push_str(&csv_field(&entry.name));
        for row in [default_row, tuned_row].iter().flatten() {
            for v in means(row) {
                let _ = write!(out, ",{}", opt_sig6(v));
            }
        }
        if let (Some(d), Some(t)) = (default_row, tuned_row) {
            for (a, b) in means(&d).into_iter().zip(means(&t)) {
                let _ = write!(out, ",{}", opt_sig6(a.zip(b).map(|(a, b)| a / b)));
            }
        }
        out.push('\n');
    }
    emit(args.output.as_deref(), &out)?;
    Ok(())
}

fn header(defaults: bool, tuned: bool) -> String {
    let mut cols = vec!["name".to_string()];
    let prefixes: &[&str] = match (defaults, tuned) {
        (true, true) => &["default_", "tuned_", "ratio_"],
        _ => &[""],
    };
    for p in prefixes {
        cols.extend(METRICS.iter().map(|m| format!("{p}{m}")));
    }
    cols.join(",") + "\n"
}

fn averaged(
    target: &TuneTarget,
    params: &tuning::ModelParams,
    runs: usize,
    seed: u64,
) -> Result<StabilityReport, CliError> {
    let reports = tuning::run_replicates(target, params, runs, seed)?;
    Ok(tuning::summarize(&reports))
}

fn means(r: &StabilityReport) -> [Option<f64>; 4] {
    [
        Some(r.ks_in.mean),
        Some(r.ks_out.mean),
        r.msd_in.map(|s| s.mean),
        r.msd_out.map(|s| s.mean),
    ]
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Reads and checks every entry, reporting all problems at once.
fn load_manifest(path: &Path, mode: Mode) -> Result<Vec<Loaded>, CliError> {
    let text = std::fs::read_to_string(path)?;
    let raw: Vec<serde_json::Value> =
        serde_json::from_str(&text).map_err(|e| CliError::Manifest(vec![format!("{}: {e}", path.display())]))?;
    let dir = path.parent().unwrap_or(Path::new("."));
    let mut problems = Vec::new();
    let mut loaded = Vec::new();
    for (i, value) in raw.into_iter().enumerate() {
        let entry = match serde_json::from_value::<Entry>(value) {
            Ok(e) => e,
            Err(_) => {
                problems.push(format!(
                    "entry {i}: expected {{name, graph}} or {{name, first, second, new_nodes}}"
                ));
                continue;
            }
        };
        match load_entry(entry, dir, mode) {
            Ok(l) => loaded.push(l),
            Err(mut errs) => {
                for e in &mut errs {
                    *e = format!("entry {i}: {e}");
                }
                problems.extend(errs);
            }
        }
    }
    if problems.is_empty() {
        Ok(loaded)
    } else {
        Err(CliError::Manifest(problems))
    }
}

fn load_entry(entry: Entry, dir: &Path, mode: Mode) -> Result<Loaded, Vec<String>> {
    match (entry, mode) {
        (Entry::Static(e), Mode::Static) => {
            let g = load(&dir.join(&e.graph), e.named).map_err(|m| vec![m])?;
            Ok(Loaded {
                name: e.name,
                target: TuneTarget::Static(g.0),
            })
        }
        (Entry::Pair(e), Mode::Evolution) => {
            let first = load(&dir.join(&e.first), e.named);
            let second = load(&dir.join(&e.second), e.named);
            let listed = e.new_nodes.as_ref().map(|p| {
                let p = dir.join(p);
                read_node_list(&p).map_err(|err| format!("{}: {err}", p.display()))
            });
            let mut errs = Vec::new();
            for r in [first.as_ref().err(), second.as_ref().err()].into_iter().flatten() {
                errs.push(r.clone());
            }
            if let Some(Err(m)) = &listed {
                errs.push(m.clone());
            }
            if !errs.is_empty() {
                return Err(errs);
            }
            let (base, first_names) = first.expect("checked");
            let (evolved, second_names) = second.expect("checked");
            let new_nodes = match (listed, first_names, second_names) {
                (Some(ids), _, _) => ids.expect("checked"),
                (None, Some(a), Some(b)) => new_node_ids(&a, &b),
                (None, _, _) => return Err(vec!["new_nodes is required unless the files are named".into()]),
            };
            let case = EvolutionCase::new(base, evolved, new_nodes).map_err(|err| vec![err.to_string()])?;
            Ok(Loaded {
                name: e.name,
                target: TuneTarget::Evolution(case),
            })
        }
        (Entry::Static(e), Mode::Evolution) => Err(vec![format!("{}: evolution mode needs a version pair", e.name)]),
        (Entry::Pair(e), Mode::Static) => Err(vec![format!("{}: static mode needs a single graph", e.name)]),
    }
}

type Graph = (Digraph, Option<sdgen::io::NameTable>);

fn load(path: &Path, named: bool) -> Result<Graph, String> {
    let r = if named {
        read_named_edge_list(path).map(|(g, t)| (g, Some(t)))
    } else {
        read_edge_list(path).map(|g| (g, None))
    };
    r.map_err(|e| format!("{}: {e}", path.display()))
}
