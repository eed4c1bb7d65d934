use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sdgen::tuning::{Model, Objective, DEFAULT_GRID_STEP, DEFAULT_REPORT_RUNS, DEFAULT_TUNING_REPLICATES};

#[derive(Debug, Parser)]
#[command(name = "sdgen", version, about = "Sparse digraph generation, comparison and tuning")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a static sparse digraph
    Generate(GenerateArgs),
    /// Grow an existing graph by new nodes and edges
    Evolve(EvolveArgs),
    /// Compare a candidate graph against a reference
    Compare(CompareArgs),
    /// Grid-search generator parameters against a reference
    Tune(TuneArgs),
    /// Averaged metrics for every graph of a corpus manifest
    Report(ReportArgs),
    /// Adjacency eigenvalue magnitudes in descending order
    Spectrum(SpectrumArgs),
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long)]
    pub nodes: usize,
    #[arg(long)]
    pub edges: usize,
    /// Probability of a uniform source draw
    #[arg(long)]
    pub e1: Option<f64>,
    /// Probability of targeting an in-degree-zero node
    #[arg(long)]
    pub e2: Option<f64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Edge-list output
    #[arg(short, long)]
    pub output: PathBuf,
    /// Graph statistics JSON (stdout when omitted)
    #[arg(long)]
    pub stats: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EvolveArgs {
    #[arg(long)]
    pub base: PathBuf,
    #[arg(long)]
    pub new_nodes: usize,
    #[arg(long)]
    pub new_edges: usize,
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long)]
    pub beta: Option<f64>,
    #[arg(long)]
    pub e1: Option<f64>,
    #[arg(long)]
    pub e2: Option<f64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Edge-list output
    #[arg(short, long)]
    pub output: PathBuf,
    /// Where to write the ids of the added nodes (default: <output>.new)
    #[arg(long)]
    pub new_node_list: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[arg(long)]
    pub reference: PathBuf,
    #[arg(long)]
    pub candidate: PathBuf,
    /// Restrict the reference metrics to these node ids
    #[arg(long)]
    pub new_nodes: Option<PathBuf>,
    /// Node ids of the candidate to compare against (default: same as --new-nodes)
    #[arg(long, requires = "new_nodes")]
    pub candidate_new_nodes: Option<PathBuf>,
    /// Also report the mean gap between sorted eigenvalue magnitudes
    #[arg(long)]
    pub spectral: bool,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModelArg {
    Sdg,
    Sedge,
    Bollobas,
}

impl From<ModelArg> for Model {
    fn from(m: ModelArg) -> Model {
        match m {
            ModelArg::Sdg => Model::Sdg,
            ModelArg::Sedge => Model::Sedge,
            ModelArg::Bollobas => Model::Bollobas,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ObjectiveArg {
    MinimaxMsd,
    KsMax,
}

impl From<ObjectiveArg> for Objective {
    fn from(o: ObjectiveArg) -> Objective {
        match o {
            ObjectiveArg::MinimaxMsd => Objective::MinimaxMsd,
            ObjectiveArg::KsMax => Objective::KsMax,
        }
    }
}

#[derive(Debug, Args)]
pub struct TuneArgs {
    /// Reference graph (the second version for sedge)
    #[arg(long)]
    pub reference: PathBuf,
    #[arg(long, value_enum)]
    pub model: ModelArg,
    #[arg(long, default_value_t = DEFAULT_GRID_STEP)]
    pub grid_step: f64,
    #[arg(long, default_value_t = DEFAULT_TUNING_REPLICATES)]
    pub replicates: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Defaults to minimax-msd, or ks-max for bollobas
    #[arg(long, value_enum)]
    pub objective: Option<ObjectiveArg>,
    /// First version of the graph (sedge only)
    #[arg(long)]
    pub base: Option<PathBuf>,
    /// Ids of the reference nodes absent from the base (sedge only)
    #[arg(long)]
    pub new_nodes: Option<PathBuf>,
    /// Write the full score table as CSV
    #[arg(long)]
    pub dump_grid: Option<PathBuf>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Static,
    Evolution,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    #[arg(long)]
    pub manifest: PathBuf,
    #[arg(long, value_enum, default_value_t = Mode::Static)]
    pub mode: Mode,
    /// Generated graphs averaged per entry
    #[arg(long, default_value_t = DEFAULT_REPORT_RUNS)]
    pub runs: usize,
    /// Evaluate at tuned parameters
    #[arg(long)]
    pub tuned: bool,
    /// Evaluate at default parameters (implied when --tuned is absent)
    #[arg(long)]
    pub defaults: bool,
    #[arg(long, default_value_t = DEFAULT_GRID_STEP)]
    pub grid_step: f64,
    /// Replicates per grid point while tuning
    #[arg(long, default_value_t = DEFAULT_TUNING_REPLICATES)]
    pub replicates: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}
