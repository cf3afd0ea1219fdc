//! `imspe-kit`: evaluate, optimise, scan and validate IMSPE designs.
//!
//! Exit codes: 0 ok, 2 usage or invalid input, 3 coincident points,
//! 4 ill-conditioned solve or quadrature failure, 5 validation breach.

mod output;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use imspe_core::cluster::{expansion_gauss, st_term};
use imspe_core::imspe::{build_matrices, Design};
use imspe_core::optimize::{
    default_h_sequence, discontinuity_probe, log_grid, optimize_n1, optimize_n2, scan_surface,
    sweep_theta, Axis, Constraint, GridSpec, InversionScenario, OptimizeSettings, OptimumReport,
    PairMode, Precision, ScanCell,
};
use imspe_core::oracle::QuadratureSettings;
use imspe_core::validate::{run_validation, FULL_SAMPLES, QUICK_SAMPLES};
use imspe_core::{Dd, Family, ImspeError, KernelSpec, Point};

use output::{num, Csv, Json};

#[derive(Parser, Debug)]
#[command(name = "imspe-kit", version, about = "IMSPE of Gaussian-process designs on [-1, 1]^d")]
struct Cli {
    /// Worker threads for scans, sweeps and validation (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Arith {
    F64,
    Dd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ScanMode {
    /// Grid axes are the design coordinates.
    None,
    /// One axis x1; design (x1, -x1).
    Symmetric,
    /// Axes are a free point x; design is the fixed points, x and -x.
    Inversion,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// IMSPE of one design.
    Eval {
        #[arg(long)]
        kernel: Family,
        /// One value per dimension, comma-separated.
        #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
        theta: Vec<f64>,
        /// Flattened coordinates, d per point.
        #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
        points: Vec<f64>,
        #[arg(long, value_enum, default_value = "f64")]
        precision: Arith,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Optimal design of one or two points in one dimension.
    Optimize {
        #[arg(long)]
        kernel: Family,
        #[arg(long)]
        theta: f64,
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Restrict two points to x2 = -x1.
        #[arg(long)]
        symmetric: bool,
        #[arg(long, default_value_t = 1e-8)]
        tol_x: f64,
        #[arg(long, default_value_t = 15)]
        multistart: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Optimal designs over a log-spaced θ grid.
    Sweep {
        #[arg(long)]
        kernel: Family,
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// `lo:hi:Nlog`, inclusive endpoints.
        #[arg(long, value_parser = theta_grid)]
        theta_grid: ThetaGrid,
        #[arg(long, default_value_t = 1e-8)]
        tol_x: f64,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// IMSPE over a product grid.
    Scan {
        #[arg(long)]
        kernel: Family,
        #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
        theta: Vec<f64>,
        /// Comma-separated axes `lo:hi:count`.
        #[arg(long, allow_hyphen_values = true, value_parser = grid_spec)]
        grid: GridSpec,
        #[arg(long, value_enum, default_value = "none")]
        constraint: ScanMode,
        /// Fixed points for the inversion constraint, flattened.
        #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
        fixed: Option<Vec<f64>>,
        #[arg(long, value_enum, default_value = "f64")]
        precision: Arith,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Small-separation coefficients of a Gaussian-kernel pair.
    Expand {
        #[arg(long)]
        theta: f64,
        #[arg(long, allow_hyphen_values = true)]
        xt: f64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Directional limits of the four-point inversion example.
    Probe {
        #[arg(long, allow_hyphen_values = true, value_delimiter = ',', default_value = "0,0")]
        center: Vec<f64>,
        /// Unit vectors separated by `;`.
        #[arg(long, allow_hyphen_values = true, value_delimiter = ';', value_parser = float_list, default_value = "1,0;0,1")]
        directions: Vec<Vec<f64>>,
        /// Decreasing steps, comma-separated.
        #[arg(long, value_delimiter = ',')]
        h: Option<Vec<f64>>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Closed forms against quadrature; exits 5 on any breach.
    Validate {
        /// 64 samples instead of 512.
        #[arg(long)]
        quick: bool,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn float_list(s: &str) -> Result<Vec<f64>, String> {
    s.split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|e| format!("'{t}': {e}")))
        .collect()
}

#[derive(Clone, Debug)]
struct ThetaGrid(Vec<f64>);

fn theta_grid(s: &str) -> Result<ThetaGrid, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let [lo, hi, n] = parts.as_slice() else {
        return Err(format!("expected lo:hi:Nlog, got '{s}'"));
    };
    let n = n
        .strip_suffix("log")
        .ok_or_else(|| format!("grid count must end in 'log', got '{n}'"))?;
    let lo: f64 = lo.parse().map_err(|e| format!("'{lo}': {e}"))?;
    let hi: f64 = hi.parse().map_err(|e| format!("'{hi}': {e}"))?;
    let n: usize = n.parse().map_err(|e| format!("'{n}': {e}"))?;
    log_grid(lo, hi, n).map(ThetaGrid).map_err(|e| e.to_string())
}

fn grid_spec(s: &str) -> Result<GridSpec, String> {
    let axes = s
        .split(',')
        .map(|a| {
            let parts: Vec<&str> = a.split(':').collect();
            let [lo, hi, n] = parts.as_slice() else {
                return Err(format!("expected lo:hi:count, got '{a}'"));
            };
            let lo: f64 = lo.parse().map_err(|e| format!("'{lo}': {e}"))?;
            let hi: f64 = hi.parse().map_err(|e| format!("'{hi}': {e}"))?;
            let n: usize = n.parse().map_err(|e| format!("'{n}': {e}"))?;
            Axis::new(lo, hi, n).map_err(|e| e.to_string())
        })
        .collect::<Result<Vec<_>, _>>()?;
    GridSpec::new(axes).map_err(|e| e.to_string())
}

enum Failure {
    Core(ImspeError),
    Io(String),
    Breach(String),
}

impl From<ImspeError> for Failure {
    fn from(e: ImspeError) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Core(ImspeError::InvalidArgument(_) | ImspeError::DimensionMismatch { .. }) => 2,
            Failure::Core(ImspeError::CoincidentPoints { .. } | ImspeError::TwinPoint { .. }) => 3,
            Failure::Core(ImspeError::IllConditioned { .. } | ImspeError::QuadratureFailure { .. }) => 4,
            Failure::Io(_) => 2,
            Failure::Breach(_) => 5,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Core(e) => e.to_string(),
            Failure::Io(m) | Failure::Breach(m) => m.clone(),
        }
    }
}

fn emit(text: &str, output: &Option<PathBuf>) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn points_json(design: &Design) -> Json {
    Json::Arr(design.points().iter().map(|p| Json::nums(p.coords())).collect())
}

fn cmd_eval(
    kernel: Family,
    theta: Vec<f64>,
    points: Vec<f64>,
    precision: Arith,
    format: Format,
    output: &Option<PathBuf>,
) -> Result<(), Failure> {
    let spec = KernelSpec::new(kernel, theta.clone())?;
    let design = Design::relaxed_from_flat(spec.dim(), &points)?;
    let (imspe, condition) = match precision {
        Arith::F64 => {
            let m = build_matrices::<f64>(&spec, &design)?;
            (m.imspe, m.condition)
        }
        Arith::Dd => {
            let m = build_matrices::<Dd>(&spec, &design)?;
            (m.imspe.hi() + m.imspe.lo(), m.condition)
        }
    };
    let text = match format {
        Format::Json => Json::Obj(vec![
            ("imspe", Json::Num(imspe)),
            ("n", Json::Int(design.n() as i64)),
            ("d", Json::Int(design.d() as i64)),
            ("kernel", Json::str(kernel.name())),
            ("theta", Json::nums(&theta)),
            ("points", points_json(&design)),
            ("condition_estimate", Json::Num(condition)),
        ])
        .render(),
        Format::Csv => {
            let mut c = Csv::default();
            c.row(["imspe", "n", "d", "kernel", "condition_estimate"]);
            c.row([
                num(imspe),
                design.n().to_string(),
                design.d().to_string(),
                kernel.name().to_string(),
                num(condition),
            ]);
            c.finish()
        }
    };
    emit(&text, output)
}

fn report_fields(r: &OptimumReport) -> Vec<(&'static str, Json)> {
    vec![
        ("design", points_json(&r.design)),
        ("imspe", Json::Num(r.imspe_value)),
        ("converged", Json::Bool(r.converged)),
        ("gradient", Json::nums(&r.gradient)),
        ("gradient_norm", Json::Num(r.gradient_norm())),
        ("hessian_eigenvalues", Json::nums(&r.hessian_eigenvalues)),
        ("second_order_positive", Json::Bool(r.second_order_positive)),
        ("boundary_distance", Json::Num(r.boundary_distance)),
        ("symmetric", r.symmetric.map_or(Json::Null, Json::Bool)),
        ("evaluations", Json::Int(r.evaluations as i64)),
    ]
}

const REPORT_HEADER: [&str; 9] = [
    "x1",
    "x2",
    "imspe",
    "converged",
    "gradient_norm",
    "min_hessian_eigenvalue",
    "boundary_distance",
    "symmetric",
    "evaluations",
];

fn report_row(r: &OptimumReport) -> Vec<String> {
    let coords: Vec<f64> = r.design.points().iter().map(|p| p.coords()[0]).collect();
    vec![
        num(coords[0]),
        coords.get(1).map_or(String::new(), |&x| num(x)),
        num(r.imspe_value),
        r.converged.to_string(),
        num(r.gradient_norm()),
        num(r.hessian_eigenvalues[0]),
        num(r.boundary_distance),
        r.symmetric.map_or(String::new(), |s| s.to_string()),
        r.evaluations.to_string(),
    ]
}

fn settings(tol_x: f64, multistart: usize) -> OptimizeSettings {
    OptimizeSettings {
        tol_x,
        multistart,
        ..Default::default()
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_optimize(
    kernel: Family,
    theta: f64,
    n: usize,
    symmetric: bool,
    tol_x: f64,
    multistart: usize,
    format: Format,
    output: &Option<PathBuf>,
) -> Result<(), Failure> {
    let s = settings(tol_x, multistart);
    let mode = if symmetric { PairMode::Symmetric } else { PairMode::Free };
    let r = match n {
        1 => optimize_n1(kernel, theta, &s)?,
        2 => optimize_n2(kernel, theta, mode, &s)?,
        _ => return Err(ImspeError::InvalidArgument(format!("n must be 1 or 2, got {n}")).into()),
    };
    let text = match format {
        Format::Json => {
            let mut fields = vec![
                ("kernel", Json::str(kernel.name())),
                ("theta", Json::Num(theta)),
                ("n", Json::Int(n as i64)),
                ("mode", Json::str(if symmetric { "symmetric" } else { "free" })),
            ];
            fields.extend(report_fields(&r));
            Json::Obj(fields).render()
        }
        Format::Csv => {
            let mut c = Csv::default();
            c.row(REPORT_HEADER);
            c.row(report_row(&r));
            c.finish()
        }
    };
    emit(&text, output)
}

fn cmd_sweep(
    kernel: Family,
    n: usize,
    grid: Vec<f64>,
    tol_x: f64,
    format: Format,
    output: &Option<PathBuf>,
) -> Result<(), Failure> {
    let sweep = sweep_theta(kernel, n, &grid, &settings(tol_x, 15))?;
    let text = match format {
        Format::Json => {
            let rows = sweep
                .rows
                .iter()
                .map(|row| {
                    let mut fields = vec![("theta", Json::Num(row.theta))];
                    match &row.outcome {
                        Ok(r) => fields.extend(report_fields(r)),
                        Err(e) => fields.push(("error", Json::str(e.to_string()))),
                    }
                    Json::Obj(fields)
                })
                .collect();
            let envelope = sweep.envelope.map_or(Json::Null, |(lo, hi)| {
                Json::Obj(vec![("x1_min", Json::Num(lo)), ("x1_max", Json::Num(hi))])
            });
            Json::Obj(vec![
                ("kernel", Json::str(kernel.name())),
                ("n", Json::Int(n as i64)),
                ("rows", Json::Arr(rows)),
                ("envelope", envelope),
            ])
            .render()
        }
        Format::Csv => {
            let mut c = Csv::default();
            c.row(["kind", "theta"].into_iter().chain(REPORT_HEADER));
            for row in &sweep.rows {
                match &row.outcome {
                    Ok(r) => c.row(["optimum".to_string(), num(row.theta)].into_iter().chain(report_row(r))),
                    Err(e) => c.row(["failed".to_string(), num(row.theta), format!("\"{e}\"")]),
                }
            }
            if let Some((lo, hi)) = sweep.envelope {
                c.row(["envelope".to_string(), String::new(), num(lo), num(hi)]);
            }
            c.finish()
        }
    };
    emit(&text, output)
}

fn scan_columns(constraint: &Constraint, d: usize, axes: usize) -> Vec<String> {
    let name = |point: usize, k: usize| {
        if d == 1 {
            format!("x{point}")
        } else {
            format!("x{point}_{}", k + 1)
        }
    };
    match constraint {
        Constraint::None => (0..axes).map(|a| name(a / d + 1, a % d)).collect(),
        Constraint::SymmetricPair => vec!["x1".to_string()],
        Constraint::InversionPairWithFixed(fixed) => (0..d).map(|k| name(fixed.len() + 1, k)).collect(),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_scan(
    kernel: Family,
    theta: Vec<f64>,
    grid: GridSpec,
    mode: ScanMode,
    fixed: Option<Vec<f64>>,
    precision: Arith,
    format: Format,
    output: &Option<PathBuf>,
) -> Result<(), Failure> {
    let spec = KernelSpec::new(kernel, theta.clone())?;
    let d = spec.dim();
    let constraint = match mode {
        ScanMode::None => Constraint::None,
        ScanMode::Symmetric => Constraint::SymmetricPair,
        ScanMode::Inversion => {
            let flat = fixed.unwrap_or_default();
            let pts = Design::relaxed_from_flat(d, &flat)
                .map(|des| des.points().to_vec())
                .or_else(|e| if flat.is_empty() { Ok(Vec::<Point>::new()) } else { Err(e) })?;
            Constraint::InversionPairWithFixed(pts)
        }
    };
    let precision = match precision {
        Arith::F64 => Precision::F64,
        Arith::Dd => Precision::DoubleDouble,
    };
    let table = scan_surface(&spec, &grid, &constraint, precision)?;
    let columns = scan_columns(&constraint, d, grid.axes.len());
    let text = match format {
        Format::Csv => {
            let mut c = Csv::default();
            c.comment("imspe-kit scan v1");
            c.row(columns.iter().map(String::as_str).chain(["imspe"]));
            for (g, cell) in &table.rows {
                let value = match cell {
                    ScanCell::Value(v) => num(*v),
                    ScanCell::Singular => "singular".to_string(),
                };
                c.row(g.iter().map(|&x| num(x)).chain([value]));
            }
            c.finish()
        }
        Format::Json => {
            let rows = table
                .rows
                .iter()
                .map(|(g, cell)| {
                    let mut items: Vec<Json> = g.iter().map(|&x| Json::Num(x)).collect();
                    items.push(match cell {
                        ScanCell::Value(v) => Json::Num(*v),
                        ScanCell::Singular => Json::str("singular"),
                    });
                    Json::Arr(items)
                })
                .collect();
            Json::Obj(vec![
                ("format", Json::str("imspe-kit scan v1")),
                ("kernel", Json::str(kernel.name())),
                ("theta", Json::nums(&theta)),
                ("columns", Json::Arr(columns.iter().map(|c| Json::str(c.clone())).chain([Json::str("imspe")]).collect())),
                ("rows", Json::Arr(rows)),
            ])
            .render()
        }
    };
    emit(&text, output)
}

fn cmd_expand(theta: f64, xt: f64, format: Format, output: &Option<PathBuf>) -> Result<(), Failure> {
    let series = expansion_gauss::<f64>(xt, theta)?;
    let st = st_term::<f64>(theta)?;
    let text = match format {
        Format::Json => Json::Obj(vec![
            ("theta", Json::Num(theta)),
            ("x_t", Json::Num(xt)),
            ("c0", Json::Num(series.c0)),
            ("c2", Json::Num(series.c2)),
            ("st_term", Json::Num(st)),
            ("remainder", Json::str("O(theta^2 delta^4)")),
        ])
        .render(),
        Format::Csv => {
            let mut c = Csv::default();
            c.row(["theta", "x_t", "c0", "c2", "st_term"]);
            c.row([num(theta), num(xt), num(series.c0), num(series.c2), num(st)]);
            c.finish()
        }
    };
    emit(&text, output)
}

fn cmd_probe(
    center: Vec<f64>,
    directions: Vec<Vec<f64>>,
    h: Option<Vec<f64>>,
    format: Format,
    output: &Option<PathBuf>,
) -> Result<(), Failure> {
    let scenario = InversionScenario::four_point_example();
    let h = h.unwrap_or_else(default_h_sequence);
    let report = discontinuity_probe(&scenario, &center, &directions, &h)?;
    let opt = |v: Option<f64>| v.map_or(Json::str("singular"), Json::Num);
    let text = match format {
        Format::Json => {
            let dirs = report
                .directions
                .iter()
                .map(|p| {
                    Json::Obj(vec![
                        ("direction", Json::nums(&p.direction)),
                        ("values", Json::Arr(p.values.iter().map(|&v| opt(v)).collect())),
                        ("limit", opt(p.limit)),
                        ("residual", opt(p.residual)),
                    ])
                })
                .collect();
            Json::Obj(vec![
                ("center", Json::nums(&report.center)),
                ("h", Json::nums(&report.h)),
                ("directions", Json::Arr(dirs)),
                ("max_gap", Json::Num(report.max_gap)),
                ("max_residual", Json::Num(report.max_residual)),
                ("discontinuous", Json::Bool(report.discontinuous)),
            ])
            .render()
        }
        Format::Csv => {
            let cell = |v: Option<f64>| v.map_or("singular".to_string(), num);
            let mut c = Csv::default();
            c.row(["direction", "h", "imspe"]);
            for p in &report.directions {
                let dir: Vec<String> = p.direction.iter().map(|&x| num(x)).collect();
                for (&s, &v) in h.iter().zip(&p.values) {
                    c.row([dir.join(" "), num(s), cell(v)]);
                }
            }
            c.comment(&format!(
                "max_gap {} max_residual {} discontinuous {}",
                num(report.max_gap),
                num(report.max_residual),
                report.discontinuous
            ));
            c.finish()
        }
    };
    emit(&text, output)
}

fn cmd_validate(
    quick: bool,
    samples: Option<usize>,
    format: Option<Format>,
    output: &Option<PathBuf>,
) -> Result<(), Failure> {
    let n = samples.unwrap_or(if quick { QUICK_SAMPLES } else { FULL_SAMPLES });
    let report = run_validation(n, &QuadratureSettings::default())?;
    let status = |ok: bool| if ok { "ok" } else { "BREACH" };
    let text = match format {
        None => {
            let mut t = format!(
                "{:<26} {:>7} {:>24} {:>24} {:>8}  {}\n",
                "form", "samples", "worst_abs", "worst_rel", "breaches", "status"
            );
            for c in &report.cases {
                t.push_str(&format!(
                    "{:<26} {:>7} {:>24} {:>24} {:>8}  {}\n",
                    c.name,
                    c.samples,
                    num(c.worst_abs),
                    num(c.worst_rel),
                    c.breaches,
                    status(c.passed())
                ));
            }
            t
        }
        Some(Format::Csv) => {
            let mut c = Csv::default();
            c.row(["form", "samples", "worst_abs", "worst_rel", "breaches", "status"]);
            for s in &report.cases {
                c.row([
                    s.name.clone(),
                    s.samples.to_string(),
                    num(s.worst_abs),
                    num(s.worst_rel),
                    s.breaches.to_string(),
                    status(s.passed()).to_string(),
                ]);
            }
            c.finish()
        }
        Some(Format::Json) => {
            let cases = report
                .cases
                .iter()
                .map(|s| {
                    Json::Obj(vec![
                        ("form", Json::str(s.name.clone())),
                        ("samples", Json::Int(s.samples as i64)),
                        ("worst_abs", Json::Num(s.worst_abs)),
                        ("worst_rel", Json::Num(s.worst_rel)),
                        ("worst_args", Json::nums(&s.worst_args)),
                        ("breaches", Json::Int(s.breaches as i64)),
                    ])
                })
                .collect();
            Json::Obj(vec![("passed", Json::Bool(report.passed())), ("cases", Json::Arr(cases))]).render()
        }
    };
    emit(&text, output)?;
    if report.passed() {
        Ok(())
    } else {
        let bad: Vec<&str> = report.cases.iter().filter(|c| !c.passed()).map(|c| c.name.as_str()).collect();
        Err(Failure::Breach(format!("tolerance breached by {}", bad.join(", "))))
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::Io(e.to_string()))?;
    }
    match cli.command {
        Command::Eval { kernel, theta, points, precision, format, output } => {
            cmd_eval(kernel, theta, points, precision, format, &output)
        }
        Command::Optimize { kernel, theta, n, symmetric, tol_x, multistart, format, output } => {
            cmd_optimize(kernel, theta, n, symmetric, tol_x, multistart, format, &output)
        }
        Command::Sweep { kernel, n, theta_grid, tol_x, format, output } => {
            cmd_sweep(kernel, n, theta_grid.0, tol_x, format, &output)
        }
        Command::Scan { kernel, theta, grid, constraint, fixed, precision, format, output } => {
            cmd_scan(kernel, theta, grid, constraint, fixed, precision, format, &output)
        }
        Command::Expand { theta, xt, format, output } => cmd_expand(theta, xt, format, &output),
        Command::Probe { center, directions, h, format, output } => {
            cmd_probe(center, directions, h, format, &output)
        }
        Command::Validate { quick, samples, format, output } => cmd_validate(quick, samples, format, &output),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
