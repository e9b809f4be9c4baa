//! Command-line interface: argument definitions and command dispatch.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use tailtau_core::copula::{
    sample_asym_logistic, sample_husler_reiss, sample_sem, sample_sym_logistic,
    AsymLogisticParams, HuslerReissParams, RngStream, SemConfig, SemDirection,
};
use tailtau_core::sample::{PairedSample, ThresholdSpec};
use tailtau_core::tail::{chi_hat, tail_tau_pair, ChiEstimate};
use tailtau_core::theory::{
    chi_limit_mc, dirichlet_curve, hr_chi_closed, hr_tau_closed, husler_reiss_curve,
    tau_limit_mc, DirichletExtremalSampler,
};

use crate::error::{Error, Result};
use crate::experiments::{
    run_causality, run_directionality, run_grid, CausalExpConfig, GridConfig, ScaleProfile,
};
use crate::hydro::{
    analyze_all_pairs, assemble_stations, group_summary, load_discharge, load_relations,
    load_station_metadata, HydroConfig,
};
use crate::meta::RunMetadata;
use crate::table;

#[derive(Debug, Parser)]
#[command(
    name = "tailtau",
    version,
    about = "Directional tail Kendall's tau: estimation, simulation, limit theory, experiments, and river-network analysis"
)]
pub struct Cli {
    /// Configuration file with key=value lines; keys are long option names.
    /// Explicit flags win over the file, the file wins over defaults.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    /// Worker threads (0 = all cores). Results are identical for any value.
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Estimate the directional tail coefficients of a two-column CSV
    Estimate(EstimateArgs),
    /// Draw a seeded sample from one of the generative models
    Simulate(SimulateCmd),
    /// Limiting coefficients: closed forms and extremal-function Monte Carlo
    Theory(TheoryCmd),
    /// The simulation studies (parameter grid, directionality, causality)
    Experiment(ExperimentCmd),
    /// Pairwise analysis of river gauging stations
    Hydro(HydroArgs),
}

#[derive(Debug, Args)]
pub struct EstimateArgs {
    /// Two-column numeric CSV (a non-numeric first row is taken as header);
    /// empty fields are treated as missing and dropped pairwise
    #[arg(long, value_name = "FILE")]
    pub input: PathBuf,

    /// Probability level; q=0 degenerates to the classical coefficient
    #[arg(long, default_value_t = 0.98)]
    pub q: f64,

    /// Also write the result as a one-row CSV (plus a metadata sidecar)
    #[arg(long, value_name = "FILE")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SimulateCmd {
    #[command(subcommand)]
    pub model: SimulateModel,
}

#[derive(Debug, Args)]
pub struct SimCommon {
    /// Number of observations
    #[arg(long, default_value_t = 1000)]
    pub n: usize,

    /// RNG seed
    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// RNG stream id (distinct streams are independent)
    #[arg(long, default_value_t = 0)]
    pub stream: u64,

    /// Output CSV for the sampled pairs
    #[arg(long, value_name = "FILE")]
    pub output: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum SimulateModel {
    /// Asymmetric logistic copula on standard Fréchet margins
    AsymLogistic {
        /// Dependence knob 1/alpha in (0, 1]
        #[arg(long)]
        inv_alpha: f64,
        #[arg(long)]
        beta1: f64,
        #[arg(long)]
        beta2: f64,
        #[command(flatten)]
        common: SimCommon,
    },
    /// Symmetric logistic copula on standard Fréchet margins
    SymLogistic {
        #[arg(long)]
        inv_alpha: f64,
        #[command(flatten)]
        common: SimCommon,
    },
    /// Bivariate Hüsler–Reiss distribution on standard Fréchet margins
    HuslerReiss {
        #[arg(long)]
        gamma: f64,
        #[command(flatten)]
        common: SimCommon,
    },
    /// Linear SEM with Student-t noise
    Sem {
        #[arg(long, value_enum, default_value_t = DirectionArg::Independent)]
        direction: DirectionArg,
        #[arg(long, default_value_t = 0.3)]
        beta: f64,
        #[arg(long, default_value_t = 3.0)]
        dof: f64,
        /// Add an unobserved confounder to both variables
        #[arg(long)]
        confounded: bool,
        /// Confounder loading applied to both variables
        #[arg(long, default_value_t = 0.3)]
        loading: f64,
        #[command(flatten)]
        common: SimCommon,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DirectionArg {
    Independent,
    XToY,
    YToX,
}

impl From<DirectionArg> for SemDirection {
    fn from(d: DirectionArg) -> Self {
        match d {
            DirectionArg::Independent => SemDirection::Independent,
            DirectionArg::XToY => SemDirection::XToY,
            DirectionArg::YToX => SemDirection::YToX,
        }
    }
}

#[derive(Debug, Args)]
pub struct TheoryCmd {
    #[command(subcommand)]
    pub family: TheoryFamily,
}

#[derive(Debug, Subcommand)]
pub enum TheoryFamily {
    /// Hüsler–Reiss limits (closed forms)
    Hr {
        /// Print tau and chi for this gamma
        #[arg(long)]
        gamma: Option<f64>,
        /// Comma-separated gamma grid: writes a dependence-curve CSV
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        grid: Option<Vec<f64>>,
        /// Curve output file (required with --grid)
        #[arg(long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Extremal Dirichlet limits (Monte Carlo over extremal functions)
    Dirichlet {
        #[arg(long)]
        alpha1: f64,
        /// Print both directions for this alpha2
        #[arg(long)]
        alpha2: Option<f64>,
        /// Comma-separated alpha2 grid: writes a dependence-curve CSV
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        alpha2_grid: Option<Vec<f64>>,
        /// Monte Carlo pairs per value
        #[arg(long, default_value_t = 1_000_000)]
        n_mc: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Curve output file (required with --alpha2-grid)
        #[arg(long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct ExperimentCmd {
    #[command(subcommand)]
    pub kind: ExperimentKind,
}

#[derive(Debug, Subcommand)]
pub enum ExperimentKind {
    /// Median tail coefficients over the asymmetric-logistic parameter grid
    Grid(GridArgs),
    /// Flow-ordered view of the same grid (downstream = smaller beta)
    Direction(GridArgs),
    /// The six causal SEM scenarios
    Causal(CausalArgs),
}

#[derive(Debug, Args)]
pub struct GridArgs {
    /// desk (100 repetitions) or paper (1000 repetitions)
    #[arg(long, default_value = "desk")]
    pub profile: ScaleProfile,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Override the profile's repetition count
    #[arg(long)]
    pub reps: Option<usize>,

    /// Override the per-repetition sample size
    #[arg(long)]
    pub n: Option<usize>,

    /// Override the probability level
    #[arg(long)]
    pub q: Option<f64>,

    /// Output directory; files are named by the configuration hash
    #[arg(long, value_name = "DIR")]
    pub out_dir: PathBuf,
}

#[derive(Debug, Args)]
pub struct CausalArgs {
    #[arg(long, default_value = "desk")]
    pub profile: ScaleProfile,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    #[arg(long)]
    pub reps: Option<usize>,

    #[arg(long)]
    pub n: Option<usize>,

    #[arg(long)]
    pub q: Option<f64>,

    /// Causal coefficient of the SEM
    #[arg(long)]
    pub beta: Option<f64>,

    /// Student-t degrees of freedom of the noise
    #[arg(long)]
    pub dof: Option<f64>,

    /// Confounder loading in the confounded scenarios
    #[arg(long)]
    pub loading: Option<f64>,

    #[arg(long, value_name = "DIR")]
    pub out_dir: PathBuf,
}

#[derive(Debug, Args)]
pub struct HydroArgs {
    /// Discharge CSV (station_id,date,flow_m3s) or a directory of such files
    #[arg(long, value_name = "PATH")]
    pub discharge: PathBuf,

    /// Station metadata CSV (station_id,basin_id,name)
    #[arg(long, value_name = "FILE")]
    pub stations: PathBuf,

    /// Pairwise relation CSV (station_a,station_b,relation)
    #[arg(long, value_name = "FILE")]
    pub relations: PathBuf,

    #[arg(long, default_value_t = 0.98)]
    pub q: f64,

    /// Minimum common observation days per pair
    #[arg(long, default_value_t = 1095)]
    pub min_overlap: usize,

    #[arg(long, value_name = "DIR")]
    pub out_dir: PathBuf,
}

/// Executes a parsed command line.
pub fn run(cli: Cli) -> Result<()> {
    if cli.threads > 0 {
        // ignore the error if a pool already exists (tests call run() twice)
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global();
    }
    match cli.command {
        Command::Estimate(args) => run_estimate(args),
        Command::Simulate(cmd) => run_simulate(cmd.model),
        Command::Theory(cmd) => run_theory(cmd.family),
        Command::Experiment(cmd) => run_experiment(cmd.kind),
        Command::Hydro(args) => run_hydro(args),
    }
}

// ---------------------------------------------------------------------------
// estimate
// ---------------------------------------------------------------------------

fn read_two_column_csv(path: &Path) -> Result<(Vec<f64>, Vec<f64>)> {
    let file = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(file);
    let mut x = Vec::new();
    let mut y = Vec::new();
    for (i, record) in rdr.records().enumerate() {
        let record = record.map_err(|e| Error::format(path, format!("unreadable row: {e}")))?;
        if record.len() < 2 {
            return Err(Error::format(path, format!("row {}: need two columns", i + 1)));
        }
        let parse = |field: &str| -> Option<f64> {
            if field.is_empty() {
                Some(f64::NAN)
            } else {
                field.parse().ok()
            }
        };
        match (parse(&record[0]), parse(&record[1])) {
            (Some(a), Some(b)) => {
                x.push(a);
                y.push(b);
            }
            _ if i == 0 => {} // header row
            _ => {
                return Err(Error::format(
                    path,
                    format!("row {}: non-numeric values", i + 1),
                ))
            }
        }
    }
    Ok((x, y))
}

fn run_estimate(args: EstimateArgs) -> Result<()> {
    let (x, y) = read_two_column_csv(&args.input)?;
    let complete = PairedSample::pairwise_complete(&x, &y)?;
    let sample = complete.sample;
    let spec = ThresholdSpec::from_q(args.q, sample.len())?;
    let pair = tail_tau_pair(&sample, &spec)?;
    let chi: Option<ChiEstimate> = if args.q > 0.0 {
        Some(chi_hat(&sample, args.q)?)
    } else {
        None
    };

    println!("n={}", sample.len());
    println!("dropped_rows={}", complete.dropped_rows);
    println!("q={}", pair.q);
    println!("k={}", pair.k);
    println!("tau_xy={}", pair.tau_xy);
    println!("tau_yx={}", pair.tau_yx);
    println!("asymmetry={}", pair.asymmetry);
    println!("max_tau={}", pair.max_tau);
    match &chi {
        Some(c) => {
            println!("chi={}", c.chi);
            println!("joint_exceedances={}", c.joint_exceedances);
        }
        None => println!("chi=NA"),
    }

    if let Some(output) = &args.output {
        table::write_estimate_csv(output, &pair, chi.as_ref())?;
        let mut meta = RunMetadata::new("estimate");
        meta.set("input", args.input.display());
        meta.set("q", args.q);
        meta.write(&meta_path(output))?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

fn run_simulate(model: SimulateModel) -> Result<()> {
    let (sample, common, mut meta) = match model {
        SimulateModel::AsymLogistic {
            inv_alpha,
            beta1,
            beta2,
            common,
        } => {
            let params = AsymLogisticParams::new(inv_alpha, beta1, beta2)?;
            let stream = RngStream::with_stream(common.seed, common.stream);
            let sample = sample_asym_logistic(&params, common.n, &stream)?;
            let mut meta = RunMetadata::new("simulate asym-logistic");
            meta.set("inv_alpha", inv_alpha);
            meta.set("beta1", beta1);
            meta.set("beta2", beta2);
            (sample, common, meta)
        }
        SimulateModel::SymLogistic { inv_alpha, common } => {
            let stream = RngStream::with_stream(common.seed, common.stream);
            let sample = sample_sym_logistic(inv_alpha, common.n, &stream)?;
            let mut meta = RunMetadata::new("simulate sym-logistic");
            meta.set("inv_alpha", inv_alpha);
            (sample, common, meta)
        }
        SimulateModel::HuslerReiss { gamma, common } => {
            let params = HuslerReissParams::new(gamma)?;
            let stream = RngStream::with_stream(common.seed, common.stream);
            let sample = sample_husler_reiss(&params, common.n, &stream)?;
            let mut meta = RunMetadata::new("simulate husler-reiss");
            meta.set("gamma", gamma);
            (sample, common, meta)
        }
        SimulateModel::Sem {
            direction,
            beta,
            dof,
            confounded,
            loading,
            common,
        } => {
            let mut config = SemConfig::new(direction.into(), beta)?.with_noise_dof(dof)?;
            if confounded {
                config = config.with_confounder(loading)?;
            }
            let stream = RngStream::with_stream(common.seed, common.stream);
            let sample = sample_sem(&config, common.n, &stream)?;
            let mut meta = RunMetadata::new("simulate sem");
            meta.set("direction", format!("{direction:?}"));
            meta.set("beta", beta);
            meta.set("dof", dof);
            meta.set("confounded", confounded);
            meta.set("loading", loading);
            (sample, common, meta)
        }
    };
    meta.set("n", common.n);
    meta.set("seed", common.seed);
    meta.set("stream", common.stream);
    table::write_samples_csv(&common.output, &sample)?;
    meta.write(&meta_path(&common.output))?;
    println!("wrote {} rows to {}", sample.len(), common.output.display());
    Ok(())
}

// ---------------------------------------------------------------------------
// theory
// ---------------------------------------------------------------------------

fn run_theory(family: TheoryFamily) -> Result<()> {
    match family {
        TheoryFamily::Hr { gamma, grid, output } => {
            if let Some(g) = gamma {
                println!(
                    "gamma={g} tau={} chi={}",
                    hr_tau_closed(g)?,
                    hr_chi_closed(g)?
                );
            }
            if let Some(grid) = grid {
                let output = output.ok_or_else(|| {
                    Error::Config("--grid needs --output for the curve file".into())
                })?;
                let curve = husler_reiss_curve(&grid)?;
                table::write_curve_csv(&output, &curve)?;
                let mut meta = RunMetadata::new("theory hr");
                meta.set("grid", join_floats(&grid));
                meta.write(&meta_path(&output))?;
                println!("wrote {} grid points to {}", curve.rows.len(), output.display());
            } else if gamma.is_none() {
                return Err(Error::Config("need --gamma or --grid".into()));
            }
            Ok(())
        }
        TheoryFamily::Dirichlet {
            alpha1,
            alpha2,
            alpha2_grid,
            n_mc,
            seed,
            output,
        } => {
            if let Some(a2) = alpha2 {
                let mut rng = RngStream::new(seed).rng();
                let fwd = DirichletExtremalSampler::forward(alpha1, a2)?;
                let rev = DirichletExtremalSampler::reverse(alpha1, a2)?;
                let txy = tau_limit_mc(&fwd, n_mc, &mut rng)?;
                let tyx = tau_limit_mc(&rev, n_mc, &mut rng)?;
                let chi = chi_limit_mc(&fwd, n_mc, &mut rng)?;
                println!(
                    "alpha1={alpha1} alpha2={a2} tau_xy={} se_xy={} tau_yx={} se_yx={} chi={}",
                    txy.value, txy.std_error, tyx.value, tyx.std_error, chi.value
                );
            }
            if let Some(grid) = alpha2_grid {
                let output = output.ok_or_else(|| {
                    Error::Config("--alpha2-grid needs --output for the curve file".into())
                })?;
                let curve = dirichlet_curve(alpha1, &grid, n_mc, &RngStream::new(seed))?;
                table::write_curve_csv(&output, &curve)?;
                let mut meta = RunMetadata::new("theory dirichlet");
                meta.set("alpha1", alpha1);
                meta.set("alpha2_grid", join_floats(&grid));
                meta.set("n_mc", n_mc);
                meta.set("seed", seed);
                meta.write(&meta_path(&output))?;
                println!("wrote {} grid points to {}", curve.rows.len(), output.display());
            } else if alpha2.is_none() {
                return Err(Error::Config("need --alpha2 or --alpha2-grid".into()));
            }
            Ok(())
        }
    }
}

// ---------------------------------------------------------------------------
// experiment
// ---------------------------------------------------------------------------

fn grid_config(args: &GridArgs) -> GridConfig {
    let mut config = GridConfig::with_profile(args.profile, args.seed);
    if let Some(reps) = args.reps {
        config.n_reps = reps;
    }
    if let Some(n) = args.n {
        config.n_per_sample = n;
    }
    if let Some(q) = args.q {
        config.q = q;
    }
    config
}

fn grid_meta(command: &str, config: &GridConfig) -> RunMetadata {
    let mut meta = RunMetadata::new(command);
    meta.set("seed", config.seed);
    meta.set("n", config.n_per_sample);
    meta.set("reps", config.n_reps);
    meta.set("q", config.q);
    meta.set("beta_grid", join_floats(&config.beta_grid));
    meta.set("inv_alpha_grid", join_floats(&config.inv_alpha_grid));
    meta
}

fn run_experiment(kind: ExperimentKind) -> Result<()> {
    match kind {
        ExperimentKind::Grid(args) => {
            let config = grid_config(&args);
            let meta = grid_meta("experiment grid", &config);
            let rows = run_grid(&config)?;
            let base = args.out_dir.join(format!("grid_{}", meta.digest()));
            let csv_path = base.with_extension("csv");
            table::write_grid_csv(&csv_path, &rows)?;
            meta.write(&base.with_extension("meta.txt"))?;
            println!("wrote {} rows to {}", rows.len(), csv_path.display());
            Ok(())
        }
        ExperimentKind::Direction(args) => {
            let config = grid_config(&args);
            let meta = grid_meta("experiment direction", &config);
            let rows = run_directionality(&config)?;
            let base = args.out_dir.join(format!("direction_{}", meta.digest()));
            let csv_path = base.with_extension("csv");
            table::write_direction_csv(&csv_path, &rows)?;
            meta.write(&base.with_extension("meta.txt"))?;
            println!("wrote {} rows to {}", rows.len(), csv_path.display());
            Ok(())
        }
        ExperimentKind::Causal(args) => {
            let mut config = CausalExpConfig::with_profile(args.profile, args.seed);
            if let Some(reps) = args.reps {
                config.n_reps = reps;
            }
            if let Some(n) = args.n {
                config.n_per_sample = n;
            }
            if let Some(q) = args.q {
                config.q = q;
            }
            if let Some(beta) = args.beta {
                config.beta = beta;
            }
            if let Some(dof) = args.dof {
                config.noise_dof = dof;
            }
            if let Some(loading) = args.loading {
                config.confounder_loading = loading;
            }
            let mut meta = RunMetadata::new("experiment causal");
            meta.set("seed", config.seed);
            meta.set("n", config.n_per_sample);
            meta.set("reps", config.n_reps);
            meta.set("q", config.q);
            meta.set("beta", config.beta);
            meta.set("dof", config.noise_dof);
            meta.set("loading", config.confounder_loading);
            let rows = run_causality(&config)?;
            let base = args.out_dir.join(format!("causal_{}", meta.digest()));
            let csv_path = base.with_extension("csv");
            table::write_causal_csv(&csv_path, &rows)?;
            meta.write(&base.with_extension("meta.txt"))?;
            println!("wrote {} rows to {}", rows.len(), csv_path.display());
            Ok(())
        }
    }
}

// ---------------------------------------------------------------------------
// hydro
// ---------------------------------------------------------------------------

fn run_hydro(args: HydroArgs) -> Result<()> {
    let discharge = load_discharge(&args.discharge)?;
    let metadata = load_station_metadata(&args.stations)?;
    let relations = load_relations(&args.relations)?;
    let (stations, join_warnings) = assemble_stations(&discharge, &metadata)?;
    for w in discharge.warnings.iter().chain(&join_warnings) {
        eprintln!("warning: {w}");
    }

    let config = HydroConfig {
        q: args.q,
        min_overlap_days: args.min_overlap,
        ..HydroConfig::default()
    };
    let outcome = analyze_all_pairs(&stations, &relations, &config)?;

    let mut meta = RunMetadata::new("hydro");
    meta.set("discharge", args.discharge.display());
    meta.set("stations", args.stations.display());
    meta.set("relations", args.relations.display());
    meta.set("q", args.q);
    meta.set("min_overlap", args.min_overlap);
    let digest = meta.digest();

    let pairs_path = args.out_dir.join(format!("pairs_{digest}.csv"));
    table::write_hydro_pairs_csv(&pairs_path, &outcome)?;
    table::write_hydro_failures_csv(&args.out_dir.join(format!("failures_{digest}.csv")), &outcome)?;
    if !outcome.results.is_empty() {
        let summary = group_summary(&outcome.results)?;
        table::write_hydro_summary_csvs(
            &args.out_dir.join(format!("scatter_{digest}.csv")),
            &args.out_dir.join(format!("group_medians_{digest}.csv")),
            &args.out_dir.join(format!("connected_ordered_{digest}.csv")),
            &summary,
        )?;
    }
    meta.write(&args.out_dir.join(format!("hydro_{digest}.meta.txt")))?;

    println!(
        "stations={} pairs_analyzed={} pairs_failed={}",
        stations.len(),
        outcome.results.len(),
        outcome.failures.len()
    );
    println!("wrote {}", pairs_path.display());
    Ok(())
}

fn meta_path(output: &Path) -> PathBuf {
    let mut name = output.file_name().unwrap_or_default().to_os_string();
    name.push(".meta.txt");
    output.with_file_name(name)
}

fn join_floats(values: &[f64]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}
