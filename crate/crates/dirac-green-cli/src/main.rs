//! Batch front end for the relativistic radial Green's-function library:
//! evaluate closed-form Green's matrices on grids, run the verification
//! suites, scan bound-state pole ladders and drive the ODE oracle.
//!
//! Exit codes are a stable contract: 0 ok, 1 verification failure,
//! 2 invalid input, 3 pole proximity.

mod configfile;
mod emit;

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use dirac_green::coulomb::{self, CoulombModel};
use dirac_green::kinematics::{Component, GreenMatrix, Kinematics};
use dirac_green::oracle::{assemble_green, integrate_solution, wronskian, Boundary, ProblemSpec};
use dirac_green::oscillator::{self, OscillatorModel};
use dirac_green::verify::{self, Corruption, Suite, SuiteConfig};
use dirac_green::Error as GreenError;

use emit::Format;

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_BAD_INPUT: u8 = 2;
const EXIT_POLE: u8 = 3;

/// Default Compton scale for Coulomb runs: the fine-structure constant.
const ALPHA: f64 = 0.0072973525693;

#[derive(Parser)]
#[command(
    name = "dirac-green",
    about = "Relativistic two-point Green's functions of the Dirac oscillator and Dirac-Coulomb problems",
    version
)]
struct CliArgs {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the closed-form Green's matrix on a radial grid
    Eval(EvalArgs),
    /// Evaluate the ODE-oracle Green's matrix on a radial grid
    Oracle(OracleArgs),
    /// Locate bound-state poles by root-finding on the reciprocal gamma prefactor
    Spectrum(SpectrumArgs),
    /// Run the named verification suites over the benchmark set
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Problem {
    Oscillator,
    Coulomb,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Spacing {
    Log,
    Linear,
}

#[derive(Args)]
struct ModelArgs {
    /// Which radial problem to evaluate
    #[arg(long, value_enum)]
    problem: Problem,
    /// Spin-orbit quantum number (nonzero integer)
    #[arg(long, allow_hyphen_values = true)]
    kappa: i32,
    /// Compton scale; defaults to the fine-structure constant for Coulomb
    #[arg(long = "lambda-bar")]
    lambda_bar: Option<f64>,
    /// Relativistic energy in units of mc^2
    #[arg(long, allow_hyphen_values = true)]
    epsilon: Option<f64>,
    /// Nonrelativistic energy; sets epsilon = 1 + lambda_bar^2 E
    #[arg(long, allow_hyphen_values = true, conflicts_with = "epsilon")]
    energy: Option<f64>,
    /// Oscillator frequency (oscillator runs)
    #[arg(long)]
    omega: Option<f64>,
    /// Spinor charge; negative values are attractive (coulomb runs)
    #[arg(long = "Z", allow_hyphen_values = true)]
    z: Option<f64>,
}

#[derive(Args)]
struct GridArgs {
    #[arg(long = "r-min", default_value_t = 0.2)]
    r_min: f64,
    #[arg(long = "r-max", default_value_t = 2.0)]
    r_max: f64,
    /// Number of r points
    #[arg(long, default_value_t = 9)]
    count: usize,
    #[arg(long, value_enum, default_value_t = Spacing::Log)]
    spacing: Spacing,
    /// Comma-separated list of r' values
    #[arg(long = "r-prime")]
    r_prime: Option<String>,
    /// Evaluate all (r, r') grid pairs instead of an r' list
    #[arg(long, conflicts_with = "r_prime")]
    matrix: bool,
}

#[derive(Args)]
struct EvalArgs {
    #[command(flatten)]
    model: ModelArgs,
    #[command(flatten)]
    grid: GridArgs,
    /// Off-diagonal combination weight (must differ from 1/2)
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    xi: f64,
    #[arg(long, default_value = "csv")]
    format: Format,
    /// key=value file overriding the flags above
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OriginExponent {
    /// Larger indicial root (square-integrable channel)
    Larger,
    /// Smaller indicial root (boundary-condition sweep)
    Smaller,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    model: ModelArgs,
    #[command(flatten)]
    grid: GridArgs,
    /// Integration grid resolution
    #[arg(long, default_value_t = 4000)]
    points: usize,
    /// Origin exponent of the regular solution
    #[arg(long = "origin-exponent", value_enum, default_value_t = OriginExponent::Larger)]
    origin_exponent: OriginExponent,
    #[arg(long, default_value = "csv")]
    format: Format,
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct SpectrumArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Highest ladder index to locate
    #[arg(long = "n-max", default_value_t = 5)]
    n_max: usize,
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteName {
    Ode,
    Jump,
    Oracle,
    Limits,
    Identities,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    /// Line-delimited JSON records followed by the summary table
    Full,
    Ndjson,
    Table,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which suite to run
    #[arg(value_enum)]
    suite: SuiteName,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Sample count for the identity suite
    #[arg(long, default_value_t = 200)]
    samples: usize,
    /// Oracle grid resolution
    #[arg(long = "grid-points", default_value_t = 6000)]
    grid_points: usize,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    xi: f64,
    /// Test hook: detune the closed forms and prove the checks catch it
    #[arg(long, value_enum)]
    corrupt: Option<CorruptionArg>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Full)]
    format: ReportFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CorruptionArg {
    WrongIndex,
    WrongPrefactor,
}

fn main() -> ExitCode {
    let cli = CliArgs::parse();
    match cli.command {
        Command::Eval(args) => run_eval(args),
        Command::Oracle(args) => run_oracle(args),
        Command::Spectrum(args) => run_spectrum(args),
        Command::Verify(args) => run_verify(args),
    }
}

fn bad_input(reason: &str) -> ExitCode {
    eprintln!("error=invalid_parameter reason=\"{reason}\"");
    ExitCode::from(EXIT_BAD_INPUT)
}

fn map_green_error(err: &GreenError) -> ExitCode {
    match err {
        GreenError::Pole {
            argument,
            nearest_n,
            what,
        } => {
            eprintln!(
                "error=pole_proximity quantity=\"{what}\" argument={argument} nearest_n={nearest_n}"
            );
            ExitCode::from(EXIT_POLE)
        }
        other => bad_input(&other.to_string()),
    }
}

/// A fully resolved model plus its provenance echo.
enum Model {
    Oscillator(OscillatorModel),
    Coulomb(CoulombModel),
}

impl Model {
    fn problem(&self) -> ProblemSpec {
        match self {
            Model::Oscillator(m) => ProblemSpec::oscillator(m.kin, m.omega).expect("validated"),
            Model::Coulomb(m) => ProblemSpec::coulomb(m.kin, m.z).expect("validated"),
        }
    }

    fn matrix(&self, xi: f64, r: f64, rp: f64) -> dirac_green::Result<GreenMatrix> {
        match self {
            Model::Oscillator(m) => oscillator::green_matrix(m, xi, r, rp),
            Model::Coulomb(m) => coulomb::green_matrix(m, xi, r, rp),
        }
    }
}

fn apply_model_config(args: &mut ModelArgs, map: &BTreeMap<String, String>) -> Result<(), String> {
    configfile::parse_i32(map, "kappa", &mut args.kappa)?;
    configfile::parse_opt_f64(map, "lambda-bar", &mut args.lambda_bar)?;
    configfile::parse_opt_f64(map, "epsilon", &mut args.epsilon)?;
    configfile::parse_opt_f64(map, "energy", &mut args.energy)?;
    configfile::parse_opt_f64(map, "omega", &mut args.omega)?;
    configfile::parse_opt_f64(map, "Z", &mut args.z)?;
    if args.epsilon.is_some() && args.energy.is_some() {
        return Err("give either epsilon or energy, not both".into());
    }
    if let Some(p) = map.get("problem") {
        args.problem = match p.as_str() {
            "oscillator" => Problem::Oscillator,
            "coulomb" => Problem::Coulomb,
            other => return Err(format!("config key problem: unknown value {other:?}")),
        };
    }
    Ok(())
}

fn apply_grid_config(args: &mut GridArgs, map: &BTreeMap<String, String>) -> Result<(), String> {
    configfile::parse_f64(map, "r-min", &mut args.r_min)?;
    configfile::parse_f64(map, "r-max", &mut args.r_max)?;
    configfile::parse_usize(map, "count", &mut args.count)?;
    if let Some(s) = map.get("spacing") {
        args.spacing = match s.as_str() {
            "log" => Spacing::Log,
            "linear" => Spacing::Linear,
            other => return Err(format!("config key spacing: unknown value {other:?}")),
        };
    }
    if let Some(rp) = map.get("r-prime") {
        args.r_prime = Some(rp.clone());
        args.matrix = false;
    }
    if let Some(m) = map.get("matrix") {
        args.matrix = m == "true" || m == "1";
    }
    Ok(())
}

/// Resolves kinematics + coupling or reports why it cannot.
fn build_model(args: &ModelArgs) -> Result<(Model, BTreeMap<String, String>), ExitCode> {
    let lambda_bar = match (args.lambda_bar, args.problem) {
        (Some(l), _) => l,
        (None, Problem::Coulomb) => ALPHA,
        (None, Problem::Oscillator) => {
            return Err(bad_input(
                "field=lambda-bar oscillator runs require --lambda-bar",
            ))
        }
    };
    let epsilon = match (args.epsilon, args.energy) {
        (Some(e), _) => e,
        (None, Some(en)) => 1.0 + lambda_bar * lambda_bar * en,
        (None, None) => return Err(bad_input("field=epsilon give --epsilon or --energy")),
    };
    let kin = match Kinematics::new(lambda_bar, epsilon, args.kappa) {
        Ok(k) => k,
        Err(e) => return Err(map_green_error(&e)),
    };

    let mut echo = BTreeMap::new();
    echo.insert("lambda_bar".into(), lambda_bar.to_string());
    echo.insert("epsilon".into(), epsilon.to_string());
    echo.insert("kappa".into(), args.kappa.to_string());

    match args.problem {
        Problem::Oscillator => {
            let Some(omega) = args.omega else {
                return Err(bad_input("field=omega oscillator runs require --omega"));
            };
            echo.insert("problem".into(), "oscillator".into());
            echo.insert("omega".into(), omega.to_string());
            match OscillatorModel::new(kin, omega) {
                Ok(model) => Ok((Model::Oscillator(model), echo)),
                Err(e) => Err(map_green_error(&e)),
            }
        }
        Problem::Coulomb => {
            let Some(z) = args.z else {
                return Err(bad_input("field=Z coulomb runs require --Z"));
            };
            echo.insert("problem".into(), "coulomb".into());
            echo.insert("Z".into(), z.to_string());
            match CoulombModel::new(kin, z) {
                Ok(model) => Ok((Model::Coulomb(model), echo)),
                Err(e) => Err(map_green_error(&e)),
            }
        }
    }
}

fn grid_values(args: &GridArgs) -> Result<Vec<f64>, ExitCode> {
    if !(args.r_min > 0.0) || args.r_max < args.r_min {
        return Err(bad_input("field=r-min/r-max need 0 < r-min <= r-max"));
    }
    if args.count < 1 {
        return Err(bad_input("field=count need at least one grid point"));
    }
    if args.count > 1 && args.r_max == args.r_min {
        return Err(bad_input("field=count a degenerate grid needs count = 1"));
    }
    let n = args.count;
    Ok((0..n)
        .map(|i| {
            let t = if n == 1 {
                0.0
            } else {
                i as f64 / (n - 1) as f64
            };
            match args.spacing {
                Spacing::Log => args.r_min * (args.r_max / args.r_min).powf(t),
                Spacing::Linear => args.r_min + (args.r_max - args.r_min) * t,
            }
        })
        .collect())
}

fn point_pairs(args: &GridArgs) -> Result<Vec<(f64, f64)>, ExitCode> {
    let rs = grid_values(args)?;
    let rps: Vec<f64> = if args.matrix {
        rs.clone()
    } else {
        let Some(list) = &args.r_prime else {
            return Err(bad_input("field=r-prime give --r-prime or --matrix"));
        };
        let mut parsed = Vec::new();
        for item in list.split(',') {
            match item.trim().parse::<f64>() {
                Ok(v) if v > 0.0 => parsed.push(v),
                _ => return Err(bad_input(&format!("field=r-prime bad value {item:?}"))),
            }
        }
        parsed
    };
    let mut pairs = Vec::with_capacity(rs.len() * rps.len());
    for &r in &rs {
        for &rp in &rps {
            pairs.push((r, rp));
        }
    }
    Ok(pairs)
}

/// Evaluates pairs in parallel; output order is deterministic (sorted by
/// r, then r') regardless of scheduling.
fn evaluate_parallel<F>(pairs: &[(f64, f64)], eval: F) -> Result<Vec<GreenMatrix>, GreenError>
where
    F: Fn(f64, f64) -> dirac_green::Result<GreenMatrix> + Sync,
{
    let threads = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
        .min(pairs.len().max(1));
    let chunk = pairs.len().div_ceil(threads);
    let mut rows: Vec<dirac_green::Result<GreenMatrix>> = Vec::new();
    std::thread::scope(|scope| {
        let handles: Vec<_> = pairs
            .chunks(chunk.max(1))
            .map(|slice| {
                scope.spawn(|| slice.iter().map(|&(r, rp)| eval(r, rp)).collect::<Vec<_>>())
            })
            .collect();
        for h in handles {
            rows.extend(h.join().expect("evaluation thread panicked"));
        }
    });
    let mut out = Vec::with_capacity(rows.len());
    for row in rows {
        out.push(row?);
    }
    out.sort_by(|a, b| {
        (a.r, a.r_prime)
            .partial_cmp(&(b.r, b.r_prime))
            .expect("finite radii")
    });
    Ok(out)
}

fn run_eval(mut args: EvalArgs) -> ExitCode {
    if let Some(path) = &args.config {
        let map = match configfile::load(path) {
            Ok(m) => m,
            Err(e) => return bad_input(&e),
        };
        if let Err(e) = apply_model_config(&mut args.model, &map)
            .and_then(|()| apply_grid_config(&mut args.grid, &map))
            .and_then(|()| configfile::parse_f64(&map, "xi", &mut args.xi))
        {
            return bad_input(&e);
        }
    }
    let (model, mut echo) = match build_model(&args.model) {
        Ok(m) => m,
        Err(code) => return code,
    };
    if (args.xi - 0.5).abs() < 1e-12 {
        return bad_input("field=xi the off-diagonal forms require xi != 1/2");
    }
    echo.insert("xi".into(), args.xi.to_string());
    let pairs = match point_pairs(&args.grid) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let rows = match evaluate_parallel(&pairs, |r, rp| model.matrix(args.xi, r, rp)) {
        Ok(rows) => rows,
        Err(e) => return map_green_error(&e),
    };
    let mut stdout = std::io::stdout().lock();
    if emit::emit_matrix_rows(&rows, args.format, &echo, &mut stdout).is_err() {
        return ExitCode::from(EXIT_BAD_INPUT);
    }
    ExitCode::SUCCESS
}

fn run_oracle(mut args: OracleArgs) -> ExitCode {
    if let Some(path) = &args.config {
        let map = match configfile::load(path) {
            Ok(m) => m,
            Err(e) => return bad_input(&e),
        };
        if let Err(e) = apply_model_config(&mut args.model, &map)
            .and_then(|()| apply_grid_config(&mut args.grid, &map))
            .and_then(|()| configfile::parse_usize(&map, "points", &mut args.points))
        {
            return bad_input(&e);
        }
    }
    let (model, mut echo) = match build_model(&args.model) {
        Ok(m) => m,
        Err(code) => return code,
    };
    let problem = model.problem();
    let grid = problem.default_grid(args.points.max(64));
    let exponent = match args.origin_exponent {
        OriginExponent::Larger => None,
        OriginExponent::Smaller => {
            let (_, smaller) = dirac_green::oracle::indicial_exponents(&problem, Component::Plus);
            Some(smaller)
        }
    };
    echo.insert("points".into(), grid.len().to_string());
    echo.insert(
        "origin_exponent".into(),
        format!("{:?}", args.origin_exponent).to_lowercase(),
    );

    let regular = match integrate_solution(
        &problem,
        Component::Plus,
        &grid,
        Boundary::RegularOrigin { exponent },
    ) {
        Ok(s) => s,
        Err(e) => return map_green_error(&e),
    };
    let irregular =
        match integrate_solution(&problem, Component::Plus, &grid, Boundary::DecayingInfinity) {
            Ok(s) => s,
            Err(e) => return map_green_error(&e),
        };
    let w = match wronskian(&regular, &irregular, problem.kin.lambda_bar) {
        Ok(w) => w,
        Err(e) => return map_green_error(&e),
    };
    echo.insert("wronskian_rel_std".into(), w.relative_std.to_string());

    let pairs = match point_pairs(&args.grid) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let mut rows = Vec::with_capacity(pairs.len());
    for &(r, rp) in &pairs {
        match assemble_green(&regular, &irregular, w.value, r, rp) {
            Ok(g) => rows.push(g),
            Err(e) => return map_green_error(&e),
        }
    }
    rows.sort_by(|a, b| {
        (a.r, a.r_prime)
            .partial_cmp(&(b.r, b.r_prime))
            .expect("finite radii")
    });
    let mut stdout = std::io::stdout().lock();
    if emit::emit_matrix_rows(&rows, args.format, &echo, &mut stdout).is_err() {
        return ExitCode::from(EXIT_BAD_INPUT);
    }
    ExitCode::SUCCESS
}

fn run_spectrum(mut args: SpectrumArgs) -> ExitCode {
    if let Some(path) = &args.config {
        let map = match configfile::load(path) {
            Ok(m) => m,
            Err(e) => return bad_input(&e),
        };
        if let Err(e) = apply_model_config(&mut args.model, &map) {
            return bad_input(&e);
        }
    }
    // the pole scan needs only the kinematics template, not epsilon
    let lambda_bar = match (args.model.lambda_bar, args.model.problem) {
        (Some(l), _) => l,
        (None, Problem::Coulomb) => ALPHA,
        (None, Problem::Oscillator) => {
            return bad_input("field=lambda-bar oscillator runs require --lambda-bar")
        }
    };
    if args.model.kappa == 0 {
        return bad_input("field=kappa must be a nonzero integer");
    }

    match args.model.problem {
        Problem::Oscillator => {
            let Some(omega) = args.model.omega else {
                return bad_input("field=omega oscillator runs require --omega");
            };
            match oscillator::oscillator_bound_energies(
                lambda_bar,
                args.model.kappa,
                omega,
                args.n_max,
            ) {
                Ok(ladder) => {
                    println!("n,epsilon,residual");
                    for be in ladder {
                        println!("{},{},{}", be.n, be.epsilon, be.residual);
                    }
                    ExitCode::SUCCESS
                }
                Err(e) => map_green_error(&e),
            }
        }
        Problem::Coulomb => {
            let Some(z) = args.model.z else {
                return bad_input("field=Z coulomb runs require --Z");
            };
            match coulomb::coulomb_bound_energies(lambda_bar, args.model.kappa, z, args.n_max) {
                Ok(spectrum) => {
                    println!("n,epsilon,residual,exploratory");
                    for be in &spectrum.entries {
                        println!(
                            "{},{},{},{}",
                            be.n, be.epsilon, be.residual, spectrum.exploratory
                        );
                    }
                    if spectrum.entries.is_empty() {
                        eprintln!(
                            "note=no_poles reason=\"repulsive coupling: the gamma prefactor has no zeros for epsilon in (0, 1)\""
                        );
                    }
                    if spectrum.exploratory {
                        eprintln!(
                            "note=exploratory reason=\"kappa < 0 ladder; its origin behavior is non-square-integrable (see verify oracle adjudication)\""
                        );
                    }
                    ExitCode::SUCCESS
                }
                Err(e) => map_green_error(&e),
            }
        }
    }
}

fn run_verify(args: VerifyArgs) -> ExitCode {
    let suite = match args.suite {
        SuiteName::Ode => Suite::Ode,
        SuiteName::Jump => Suite::Jump,
        SuiteName::Oracle => Suite::Oracle,
        SuiteName::Limits => Suite::Limits,
        SuiteName::Identities => Suite::Identities,
        SuiteName::All => Suite::All,
    };
    let config = SuiteConfig {
        grid_points: args.grid_points,
        identity_samples: args.samples,
        seed: args.seed,
        xi: args.xi,
        corruption: args.corrupt.map(|c| match c {
            CorruptionArg::WrongIndex => Corruption::WrongIndex,
            CorruptionArg::WrongPrefactor => Corruption::WrongPrefactor,
        }),
    };
    let reports = match verify::run_suite(suite, &config) {
        Ok(r) => r,
        Err(e) => return map_green_error(&e),
    };

    if matches!(args.format, ReportFormat::Full | ReportFormat::Ndjson) {
        for report in &reports {
            println!(
                "{}",
                serde_json::to_string(report).expect("serializable report")
            );
        }
    }
    if matches!(args.format, ReportFormat::Full | ReportFormat::Table) {
        if args.format == ReportFormat::Full {
            println!();
        }
        for report in &reports {
            println!("{}", report.summary_line());
        }
        let failed = reports.iter().filter(|r| !r.pass).count();
        println!(
            "suite={:?} reports={} failed={failed}",
            args.suite,
            reports.len()
        );
    }
    if reports.iter().all(|r| r.pass) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VERIFY_FAILED)
    }
}
