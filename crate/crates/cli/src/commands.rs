use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use log::info;
use sdgen::io::{read_edge_list, read_node_list, write_edge_list, write_node_list};
use sdgen::tuning::{self, EvolutionCase, Model, ModelParams, TuneResult, TuneSpec, TuneTarget};
use sdgen::{
    compare, compare_restricted, graph_stats, sdg, sdg_default_params, sedge, sedge_default_params, spectrum, Digraph,
    RandomStream, SdgParams, SedgeParams,
};

use crate::args::{CompareArgs, EvolveArgs, GenerateArgs, SpectrumArgs, TuneArgs};
use crate::error::{in_file, CliError};
use crate::output::{emit, json, opt_sig6, sig6};

pub fn load_graph(path: &Path) -> Result<Digraph, CliError> {
    in_file(path, read_edge_list(path))
}

pub fn load_nodes(path: &Path) -> Result<Vec<usize>, CliError> {
    in_file(path, read_node_list(path))
}

pub fn generate(args: GenerateArgs) -> Result<(), CliError> {
    let defaults = sdg_default_params(args.nodes, args.edges);
    let params = SdgParams::new(args.e1.unwrap_or(defaults.e1), args.e2.unwrap_or(defaults.e2))?;
    info!(
        "sdg on {} nodes, {} edges, {params:?}, seed {}",
        args.nodes, args.edges, args.seed
    );
    let g = sdg(args.nodes, args.edges, params, &mut RandomStream::new(args.seed))?;
    write_edge_list(&g, &args.output)?;
    emit(args.stats.as_deref(), &json(&graph_stats(&g)))?;
    Ok(())
}

pub fn evolve(args: EvolveArgs) -> Result<(), CliError> {
    let base = load_graph(&args.base)?;
    let n = base.node_count() + args.new_nodes;
    let e = base.edge_count() + args.new_edges;
    let d = sedge_default_params(n, e);
    let params = SedgeParams::new(
        args.alpha.unwrap_or(d.alpha),
        args.beta.unwrap_or(d.beta),
        args.e1.unwrap_or(d.e1),
        args.e2.unwrap_or(d.e2),
    )?;
    info!(
        "sedge +{} nodes, +{} edges, {params:?}, seed {}",
        args.new_nodes, args.new_edges, args.seed
    );
    let g = sedge(
        &base,
        args.new_nodes,
        args.new_edges,
        params,
        &mut RandomStream::new(args.seed),
    )?;
    write_edge_list(&g, &args.output)?;
    let fresh: Vec<usize> = tuning::appended_nodes(&base, &g).collect();
    let list = args.new_node_list.unwrap_or_else(|| with_suffix(&args.output, ".new"));
    write_node_list(&fresh, list)?;
    Ok(())
}

fn with_suffix(path: &Path, suffix: &str) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

pub fn compare_cmd(args: CompareArgs) -> Result<(), CliError> {
    let reference = load_graph(&args.reference)?;
    let candidate = load_graph(&args.candidate)?;
    let mut report = match &args.new_nodes {
        None => compare(&reference, &candidate),
        Some(path) => {
            let ref_nodes = load_nodes(path)?;
            let cand_nodes = match &args.candidate_new_nodes {
                Some(p) => load_nodes(p)?,
                None => ref_nodes.clone(),
            };
            compare_restricted(&reference, &ref_nodes, &candidate, &cand_nodes)?
        }
    };
    if args.spectral {
        report = report.with_spectra(&reference, &candidate)?;
    }
    emit(args.output.as_deref(), &json(&report))?;
    Ok(())
}

pub fn tune_cmd(args: TuneArgs) -> Result<(), CliError> {
    let model = Model::from(args.model);
    let reference = load_graph(&args.reference)?;
    let target = match (model, &args.base, &args.new_nodes) {
        (Model::Sedge, Some(base), Some(nodes)) => {
            let case = EvolutionCase::new(load_graph(base)?, reference, load_nodes(nodes)?)?;
            TuneTarget::Evolution(case)
        }
        (Model::Sedge, _, _) => {
            return Err(CliError::Usage("--model sedge needs --base and --new-nodes".into()));
        }
        (_, None, None) => TuneTarget::Static(reference),
        _ => {
            return Err(CliError::Usage(
                "--base and --new-nodes only apply to --model sedge".into(),
            ));
        }
    };
    let spec = TuneSpec {
        model,
        grid_step: args.grid_step,
        replicates: args.replicates,
        objective: args.objective.map_or(model.default_objective(), Into::into),
        base_seed: args.seed,
    };
    let result = tuning::tune(&target, &spec)?;
    if let Some(path) = &args.dump_grid {
        std::fs::write(path, grid_csv(&result))?;
    }
    emit(args.output.as_deref(), &json(&result))?;
    Ok(())
}

/// Score table as CSV; infeasible points have empty score cells.
pub fn grid_csv(result: &TuneResult) -> String {
    let mut out = ModelParams::coordinate_names(result.spec.model).join(",");
    out.push_str(",score,std\n");
    for row in &result.score_table {
        for c in row.params.coordinates() {
            let _ = write!(out, "{},", sig6(c));
        }
        let _ = writeln!(out, "{},{}", opt_sig6(row.score), opt_sig6(row.std));
    }
    out
}

pub fn spectrum_cmd(args: SpectrumArgs) -> Result<(), CliError> {
    let g = load_graph(&args.input)?;
    let mut out = String::from("magnitude\n");
    for m in spectrum(&g)? {
        let _ = writeln!(out, "{}", sig6(m));
    }
    emit(args.output.as_deref(), &out)?;
    Ok(())
}
