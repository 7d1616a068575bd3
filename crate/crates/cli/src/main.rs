use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use ldw_scsa::benchmarks::{list_functions, BenchmarkFunction, Formulation, FunctionId, DEFAULT_DIMENSION};
use ldw_scsa::harness::export::{comparison_text, convergence_csv, results_csv, results_text, to_json, write_file};
use ldw_scsa::harness::presets::{convergence_config, run_table3, table1_config, table3_config};
use ldw_scsa::harness::{
    classify_zero, convergence_traces, run_experiment_with, ConvergenceSeries, Execution, ExperimentConfig,
    DEFAULT_ZERO_THRESHOLD,
};
use ldw_scsa::optimizers::{run, Algorithm, OptimizerConfig, RunResult, DEFAULT_SEED};
use ldw_scsa::weight::WeightInit;
use ldw_scsa::Error;

/// LDW-SCSA, SCA and PSO on the thirteen classical benchmark functions.
#[derive(Debug, Parser)]
#[command(name = "ldw-scsa", version)]
struct Cli {
    /// Maximum number of runs executed in parallel (default: all cores).
    #[arg(long, global = true, value_name = "N", value_parser = clap::value_parser!(u16).range(1..))]
    jobs: Option<u16>,

    /// Report format on stdout. File outputs are always CSV.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the benchmark registry.
    List {
        #[arg(long, default_value_t = DEFAULT_DIMENSION)]
        dim: usize,
        #[command(flatten)]
        forms: FormsArg,
    },
    /// One seeded optimization run.
    Run(RunArgs),
    /// Run the grid described by a TOML config file.
    Experiment {
        #[arg(long, value_name = "PATH")]
        config: PathBuf,
        /// Overrides `master_seed` from the file.
        #[arg(long)]
        seed: Option<SeedArg>,
        /// Overrides `output.results` from the file.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// LDW-SCSA with 10..60 particles, 500 iterations, 10 runs.
    Table1 {
        /// Function ids; repeat or comma-separate. Default: all.
        #[arg(long = "fn", value_name = "ID", value_delimiter = ',')]
        functions: Vec<String>,
        #[command(flatten)]
        common: ProtocolArgs,
    },
    /// LDW-SCSA, SCA and PSO at 40 particles, compared with published means.
    Table3 {
        #[command(flatten)]
        common: ProtocolArgs,
    },
    /// Best-so-far traces (one seeded run per algorithm) as CSV.
    Convergence {
        /// Default: the figure set f1,f3,f4,f7,f9,f11,f12.
        #[arg(long = "fn", value_name = "ID", value_delimiter = ',')]
        functions: Vec<String>,
        /// Default: ldw_scsa,sca.
        #[arg(long = "algo", value_name = "NAME", value_delimiter = ',')]
        algorithms: Vec<String>,
        #[arg(long, default_value_t = 30)]
        particles: usize,
        #[arg(long, default_value_t = 500)]
        iters: usize,
        #[arg(long, default_value_t = DEFAULT_DIMENSION)]
        dim: usize,
        #[arg(long, default_value = "1")]
        seed: SeedArg,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        #[command(flatten)]
        forms: FormsArg,
    },
}

#[derive(Debug, Args)]
struct RunArgs {
    #[arg(long)]
    algo: String,
    #[arg(long = "fn", value_name = "ID")]
    function: String,
    #[arg(long, default_value_t = 40)]
    particles: usize,
    #[arg(long, default_value_t = 500)]
    iters: usize,
    #[arg(long, default_value_t = DEFAULT_DIMENSION)]
    dim: usize,
    /// A non-negative integer, or `random`.
    #[arg(long, default_value = "1")]
    seed: SeedArg,
    /// Stop once the best fitness reaches this value.
    #[arg(long)]
    target: Option<f64>,
    #[arg(long, value_enum, default_value_t = WeightInitArg::Pseudocode)]
    weight_init: WeightInitArg,
    /// Write the convergence trace CSV here.
    #[arg(long, value_name = "PATH")]
    trace: Option<PathBuf>,
    #[command(flatten)]
    forms: FormsArg,
}

#[derive(Debug, Args)]
struct ProtocolArgs {
    #[arg(long, default_value = "1")]
    seed: SeedArg,
    #[arg(long, default_value_t = 10)]
    runs: usize,
    /// Write the results CSV here.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Fill the wall_seconds column (makes the CSV non-reproducible).
    #[arg(long)]
    timing: bool,
    #[command(flatten)]
    forms: FormsArg,
}

#[derive(Debug, Args)]
struct FormsArg {
    /// Use the formulas exactly as printed (f7, f8, f10, f11, f12 differ).
    #[arg(long)]
    literal_forms: bool,
}

impl FormsArg {
    fn formulation(&self) -> Formulation {
        if self.literal_forms {
            Formulation::Literal
        } else {
            Formulation::Standard
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WeightInitArg {
    Pseudocode,
    Eps,
}

impl From<WeightInitArg> for WeightInit {
    fn from(w: WeightInitArg) -> Self {
        match w {
            WeightInitArg::Pseudocode => WeightInit::Pseudocode,
            WeightInitArg::Eps => WeightInit::Eps,
        }
    }
}

#[derive(Debug, Clone, Copy)]
enum SeedArg {
    Fixed(u64),
    Random,
}

impl std::str::FromStr for SeedArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("random") {
            return Ok(Self::Random);
        }
        s.parse()
            .map(Self::Fixed)
            .map_err(|_| format!("expected a non-negative integer or `random`, got `{s}`"))
    }
}

impl SeedArg {
    fn resolve(self) -> u64 {
        match self {
            Self::Fixed(s) => s,
            Self::Random => {
                use std::hash::BuildHasher;
                let nanos = std::time::SystemTime::now()
                    .duration_since(std::time::UNIX_EPOCH)
                    .map(|d| d.as_nanos())
                    .unwrap_or_default();
                std::collections::hash_map::RandomState::new().hash_one(nanos)
            }
        }
    }
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::UnknownFunction(_) => 3,
        Error::UnknownAlgorithm(_) => 4,
        Error::Write { .. } => 5,
        Error::Read { .. } | Error::ConfigParse(_) => 6,
        Error::SettingsMismatch(_) => 7,
        _ => 1,
    }
}

fn parse_functions(ids: &[String]) -> Result<Vec<FunctionId>, Error> {
    ids.iter().map(|s| s.parse()).collect()
}

fn parse_algorithms(names: &[String]) -> Result<Vec<Algorithm>, Error> {
    names.iter().map(|s| s.parse()).collect()
}

/// Creates an empty file up front so an unwritable path fails before any
/// optimization work is done.
fn probe_writable(path: Option<&Path>) -> Result<(), Error> {
    match path {
        Some(p) => write_file(p, ""),
        None => Ok(()),
    }
}

fn print_json(value: &serde_json::Value) -> Result<(), Error> {
    println!("{}", to_json(value)?);
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.jobs {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n as usize).build() {
            Ok(pool) => pool.install(|| dispatch(&cli)),
            Err(e) => Err(Error::InvalidConfig(format!("cannot start {n} worker threads: {e}"))),
        },
        None => dispatch(&cli),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn dispatch(cli: &Cli) -> Result<(), Error> {
    let exec = Execution::default();
    match &cli.command {
        Command::List { dim, forms } => cmd_list(*dim, forms.formulation(), cli.format),
        Command::Run(args) => cmd_run(args, cli.format),
        Command::Experiment { config, seed, out } => {
            let mut cfg = ExperimentConfig::from_file(config)?;
            if let Some(seed) = seed {
                cfg.master_seed = seed.resolve();
            }
            if let Some(out) = out {
                cfg.output.results = Some(out.clone());
            }
            cmd_experiment(&cfg, exec, cli.format)
        }
        Command::Table1 { functions, common } => {
            let functions = if functions.is_empty() {
                FunctionId::ALL.to_vec()
            } else {
                parse_functions(functions)?
            };
            let cfg = protocol(table1_config(functions, DEFAULT_SEED), common);
            cmd_experiment(&cfg, exec, cli.format)
        }
        Command::Table3 { common } => cmd_table3(&protocol(table3_config(DEFAULT_SEED), common), exec, cli.format),
        Command::Convergence {
            functions,
            algorithms,
            particles,
            iters,
            dim,
            seed,
            out,
            forms,
        } => {
            let mut cfg = convergence_config(seed.resolve());
            if !functions.is_empty() {
                cfg.functions = parse_functions(functions)?;
            }
            if !algorithms.is_empty() {
                cfg.algorithms = parse_algorithms(algorithms)?;
            }
            cfg.particles = *particles;
            cfg.iterations = *iters;
            cfg.dimension = *dim;
            cfg.formulation = forms.formulation();
            probe_writable(out.as_deref())?;
            let series = convergence_traces(&cfg, exec)?;
            emit_convergence(&series, cfg.seed, out.as_deref(), cli.format)
        }
    }
}

fn protocol(mut cfg: ExperimentConfig, common: &ProtocolArgs) -> ExperimentConfig {
    cfg.master_seed = common.seed.resolve();
    cfg.runs = common.runs;
    cfg.record_timing = common.timing;
    cfg.formulation = common.forms.formulation();
    cfg.output.results = common.out.clone();
    cfg
}

fn cmd_list(dim: usize, formulation: Formulation, format: Format) -> Result<(), Error> {
    let functions = list_functions(dim, formulation)?;
    if format == Format::Json {
        let rows: Vec<_> = functions
            .iter()
            .map(|f| {
                let (lower, upper) = f.bounds();
                json!({
                    "id": f.id,
                    "name": f.id.name(),
                    "modality": f.modality(),
                    "lower": lower,
                    "upper": upper,
                    "dimension": f.dimension,
                    "optimum_value": f.optimum_value(),
                })
            })
            .collect();
        return print_json(&json!(rows));
    }
    for f in &functions {
        let (lower, upper) = f.bounds();
        let optimum = f.optimum_value().map_or("unknown".to_string(), |v| format!("{v}"));
        println!(
            "{:<4} {:<26} {:<10} [{lower}, {upper}]^{}  min {optimum}",
            f.id.to_string(),
            f.id.name(),
            f.modality().to_string(),
            f.dimension,
        );
    }
    Ok(())
}

fn cmd_run(args: &RunArgs, format: Format) -> Result<(), Error> {
    let algorithm: Algorithm = args.algo.parse()?;
    let id: FunctionId = args.function.parse()?;
    let function = BenchmarkFunction::with_formulation(id, args.dim, args.forms.formulation())?;
    let mut cfg = OptimizerConfig::for_function(algorithm, &function);
    cfg.particles = args.particles;
    cfg.max_iterations = args.iters;
    cfg.seed = args.seed.resolve();
    cfg.target_fitness = args.target;
    cfg.weight_init = args.weight_init.into();
    probe_writable(args.trace.as_deref())?;

    let result = run(&cfg, &function)?;
    if let Some(path) = &args.trace {
        write_file(path, &convergence_csv(&[trace_series(&result)])?)?;
    }
    let classified = classify_zero(result.best_fitness, DEFAULT_ZERO_THRESHOLD);
    if format == Format::Json {
        return print_json(&json!({
            "algorithm": algorithm,
            "function": id,
            "particles": cfg.particles,
            "iterations": result.iterations,
            "dimension": cfg.dimension,
            "seed": cfg.seed,
            "best_fitness": result.best_fitness,
            "best_fitness_classified": classified,
            "evaluations": result.evaluations,
            "best_position": result.best_position,
        }));
    }
    println!("algorithm    {}", algorithm.as_str());
    println!("function     {id} ({}, n={})", id.name(), cfg.dimension);
    println!("particles    {}", cfg.particles);
    println!("iterations   {}", result.iterations);
    println!("seed         {}", cfg.seed);
    println!("evaluations  {}", result.evaluations);
    println!("best         {:e}", result.best_fitness);
    println!("best (<1e-16 as 0)  {classified:e}");
    Ok(())
}

fn trace_series(result: &RunResult) -> ConvergenceSeries {
    ConvergenceSeries {
        function: result.function.id,
        algorithm: result.algorithm,
        seed: result.seed,
        points: result.trace.iter().map(|r| (r.iteration, r.best_fitness)).collect(),
    }
}

fn cmd_experiment(cfg: &ExperimentConfig, exec: Execution, format: Format) -> Result<(), Error> {
    cfg.validate()?;
    probe_writable(cfg.output.results.as_deref())?;
    probe_writable(cfg.output.json.as_deref())?;
    let report = run_experiment_with(cfg, exec)?;
    if let Some(path) = &cfg.output.results {
        write_file(path, &results_csv(&report.cells)?)?;
    }
    if let Some(path) = &cfg.output.json {
        write_file(path, &to_json(&report)?)?;
    }
    match format {
        Format::Json => println!("{}", to_json(&report)?),
        Format::Text => {
            println!(
                "master seed {} (run i uses seed {} + i)",
                report.master_seed, report.master_seed
            );
            print!("{}", results_text(&report.cells));
        }
    }
    Ok(())
}

fn cmd_table3(cfg: &ExperimentConfig, exec: Execution, format: Format) -> Result<(), Error> {
    probe_writable(cfg.output.results.as_deref())?;
    let report = run_table3(cfg, exec)?;
    if let Some(path) = &cfg.output.results {
        write_file(path, &results_csv(&report.experiment.cells)?)?;
    }
    match format {
        Format::Json => println!("{}", to_json(&report)?),
        Format::Text => {
            println!(
                "master seed {} (run i uses seed {} + i)",
                report.experiment.master_seed, report.experiment.master_seed
            );
            print!("{}", results_text(&report.experiment.cells));
            println!();
            print!("{}", comparison_text(&report.comparison));
        }
    }
    Ok(())
}

fn emit_convergence(series: &[ConvergenceSeries], seed: u64, out: Option<&Path>, format: Format) -> Result<(), Error> {
    let csv = convergence_csv(series)?;
    if let Some(path) = out {
        write_file(path, &csv)?;
    }
    match format {
        Format::Json => print_json(&json!({ "seed": seed, "series": series })),
        Format::Text => {
            println!("seed {seed}");
            if out.is_none() {
                print!("{csv}");
            } else {
                for s in series {
                    let last = s.points.last().map_or(f64::NAN, |p| p.1);
                    println!("{} {:<9} final best {last:e}", s.function, s.algorithm.as_str());
                }
            }
            Ok(())
        }
    }
}
