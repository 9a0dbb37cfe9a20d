use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use schubert_core::quantum::SeidelFrame;
use schubert_core::sweep::DEFAULT_SEED;
use schubert_core::{
    gamma_fp, join, quantum_product, seidel_degree, sweep, verify_case, Error, Grassmannian,
    JoinOutcome, ParabolicSet, Partition, Permutation, SweepConfig, SweepMode, SweepReport,
    VerificationReport,
};
use serde::Serialize;

/// Schubert calculus on type-A Grassmannians: quantum products, Seidel
/// degrees, curve-neighborhood fixed points, joins, and verification sweeps.
///
/// Exit status: 0 on success, 1 if a verification found a counterexample,
/// 2 on invalid arguments.
#[derive(Parser, Debug)]
#[command(name = "schubert", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the curve-neighborhood identity for one case or a whole sweep.
    Verify(VerifyArgs),
    /// Quantum product of two Schubert classes in Gr(k, n).
    Product(ProductArgs),
    /// Minimal q-degree of the Seidel product w^root ⋆ σ_λ.
    Degree(DegreeArgs),
    /// Fixed points of the degree-d two-pointed curve neighborhood.
    Neighborhood(NeighborhoodArgs),
    /// Join of the two minimal representatives of u in the intersected quotient.
    Join(JoinArgs),
}

#[derive(Args, Debug)]
struct GrArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
}

impl GrArgs {
    fn grassmannian(&self) -> Result<Grassmannian, Error> {
        Grassmannian::new(self.k, self.n)
    }
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Sweep every case with 2 <= n <= N_MAX.
    #[arg(long, conflicts_with_all = ["n", "k", "root", "u"])]
    n_max: Option<usize>,
    #[arg(long, value_enum, default_value_t = ModeArg::Exhaustive)]
    mode: ModeArg,
    /// Number of cases drawn in sampled mode.
    #[arg(long, default_value_t = 1000)]
    sample_size: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Worker threads (defaults to all cores).
    #[arg(long)]
    jobs: Option<usize>,

    #[arg(long, requires_all = ["k", "root", "u"])]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    /// Seidel root i in 0..n; 0 is the identity.
    #[arg(long)]
    root: Option<usize>,
    /// Permutation in one-line notation, e.g. 1,3,2,4.
    #[arg(long)]
    u: Option<String>,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Sampled,
}

#[derive(Args, Debug)]
struct ProductArgs {
    #[command(flatten)]
    gr: GrArgs,
    #[arg(long, alias = "lambda", allow_hyphen_values = true)]
    lhs: String,
    #[arg(long, alias = "mu", allow_hyphen_values = true)]
    rhs: String,
}

#[derive(Args, Debug)]
struct DegreeArgs {
    #[command(flatten)]
    gr: GrArgs,
    #[arg(long)]
    lambda: String,
    #[arg(long)]
    root: usize,
}

#[derive(Args, Debug)]
struct NeighborhoodArgs {
    #[command(flatten)]
    gr: GrArgs,
    #[arg(long)]
    d: usize,
    /// Partition of the B-stable variety ("" for the empty partition).
    #[arg(long)]
    lambda_b: String,
    /// Partition of the opposite variety.
    #[arg(long)]
    mu: String,
}

#[derive(Args, Debug)]
struct JoinArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    u: String,
    /// Roots of the first parabolic set, e.g. 2,3.
    #[arg(long, alias = "dy")]
    parabolic_y: String,
    #[arg(long, alias = "dz")]
    parabolic_z: String,
}

/// A successful run; `failed` selects exit status 1.
struct Rendered {
    output: String,
    failed: bool,
}

impl Rendered {
    fn ok(output: String) -> Self {
        Rendered {
            output,
            failed: false,
        }
    }
}

#[derive(Debug)]
enum CliError {
    Core(Error),
    Usage(String),
    Output(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Usage(m) | CliError::Output(m) => f.write_str(m),
        }
    }
}

fn json<T: Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(value)
        .map(|s| s + "\n")
        .map_err(|e| CliError::Output(e.to_string()))
}

fn csv<T: Serialize>(rows: impl IntoIterator<Item = T>) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row)
            .map_err(|e| CliError::Output(e.to_string()))?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| CliError::Output(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Output(e.to_string()))
}

fn parse_perm(n: usize, s: &str) -> Result<Permutation, Error> {
    let p: Permutation = s.parse()?;
    if p.rank() != n {
        return Err(Error::RankMismatch {
            left: p.rank(),
            right: n,
        });
    }
    Ok(p)
}

fn parse_box_partition(gr: Grassmannian, s: &str) -> Result<Partition, Error> {
    let p: Partition = s.parse()?;
    gr.check_partition(&p)?;
    Ok(p)
}

// ---- verify ---------------------------------------------------------------

#[derive(Serialize)]
struct CaseRow<'a> {
    n: usize,
    k: usize,
    i: usize,
    u: &'a Permutation,
    beta: Option<usize>,
    dualized: bool,
    d: usize,
    pass: bool,
    fp_equality: bool,
    g_chain_containment: Option<bool>,
    v_match: Option<bool>,
    length_identity: Option<bool>,
    product_single_term: bool,
}

impl<'a> From<&'a VerificationReport> for CaseRow<'a> {
    fn from(r: &'a VerificationReport) -> Self {
        CaseRow {
            n: r.n,
            k: r.k,
            i: r.i,
            u: &r.u,
            beta: r.beta,
            dualized: r.dualized,
            d: r.d,
            pass: r.pass,
            fp_equality: r.checks.fp_equality,
            g_chain_containment: r.checks.g_chain_containment,
            v_match: r.checks.v_match,
            length_identity: r.checks.length_identity,
            product_single_term: r.checks.product_single_term,
        }
    }
}

fn fmt_opt(v: Option<bool>) -> String {
    v.map_or_else(|| "n/a".to_string(), |b| b.to_string())
}

fn fmt_points<'a>(pts: impl IntoIterator<Item = &'a schubert_core::SubsetPoint>) -> String {
    let items: Vec<String> = pts.into_iter().map(|s| format!("{{{s}}}")).collect();
    items.join(" ")
}

fn case_text(r: &VerificationReport) -> String {
    let mut out = format!(
        "case n={} k={} i={} u={}: {}\n",
        r.n,
        r.k,
        r.i,
        r.u,
        if r.pass { "PASS" } else { "FAIL" }
    );
    let beta = r.beta.map_or_else(|| "-".to_string(), |b| b.to_string());
    out += &format!(
        "  beta={beta} dualized={} d={} lambda=({}) target=({})\n",
        r.dualized, r.d, r.lambda, r.target_partition
    );
    out += &format!(
        "  fp_equality={} g_chain_containment={} v_match={} length_identity={} product_single_term={}\n",
        r.checks.fp_equality,
        fmt_opt(r.checks.g_chain_containment),
        fmt_opt(r.checks.v_match),
        fmt_opt(r.checks.length_identity),
        r.checks.product_single_term
    );
    if let Some(detail) = &r.counterexample_detail {
        out += &format!("  gamma:  {}\n", fmt_points(&r.gamma_fp));
        out += &format!("  target: {}\n", fmt_points(&r.target_fp));
        out += &format!(
            "  missing from gamma: {}\n",
            fmt_points(&detail.missing_from_gamma)
        );
        out += &format!(
            "  extra in gamma:     {}\n",
            fmt_points(&detail.extra_in_gamma)
        );
        for note in &detail.notes {
            out += &format!("  note: {note}\n");
        }
    }
    out
}

fn sweep_text(r: &SweepReport) -> String {
    let mut out = format!("sweep n_max={} mode={}", r.n_max, r.mode);
    if let (Some(size), Some(seed)) = (r.sample_size, r.seed) {
        out += &format!(" sample_size={size} seed={seed}");
    }
    out += &format!(": {}/{} pass\n", r.passed, r.total);
    for rank in &r.by_rank {
        out += &format!("  n={}: {}/{}\n", rank.n, rank.passed, rank.total);
    }
    for case in r.counterexamples() {
        out += &case_text(case);
    }
    out
}

fn cmd_verify(args: &VerifyArgs, format: Format) -> Result<Rendered, CliError> {
    if let Some(n_max) = args.n_max {
        let mode = match args.mode {
            ModeArg::Exhaustive => SweepMode::Exhaustive,
            ModeArg::Sampled => SweepMode::Sampled,
        };
        let config = SweepConfig {
            n_max,
            mode,
            sample_size: args.sample_size,
            seed: args.seed,
            jobs: args.jobs,
        };
        if args.jobs == Some(0) {
            return Err(CliError::Usage("--jobs must be at least 1".into()));
        }
        let report = sweep(&config)?;
        let output = match format {
            Format::Text => sweep_text(&report),
            Format::Json => json(&report)?,
            Format::Csv => csv(report.cases.iter().map(CaseRow::from))?,
        };
        return Ok(Rendered {
            output,
            failed: !report.pass,
        });
    }

    let (Some(n), Some(k), Some(root), Some(u)) = (args.n, args.k, args.root, &args.u) else {
        return Err(CliError::Usage(
            "verify needs either --n-max or all of --n, --k, --root, --u".into(),
        ));
    };
    let gr = Grassmannian::new(k, n)?;
    let u = parse_perm(n, u)?;
    let report = verify_case(gr, root, &u)?;
    let output = match format {
        Format::Text => case_text(&report),
        Format::Json => json(&report)?,
        Format::Csv => csv([CaseRow::from(&report)])?,
    };
    Ok(Rendered {
        output,
        failed: !report.pass,
    })
}

// ---- product / degree / neighborhood --------------------------------------

fn cmd_product(args: &ProductArgs, format: Format) -> Result<Rendered, CliError> {
    let gr = args.gr.grassmannian()?;
    let lhs = parse_box_partition(gr, &args.lhs)?;
    let rhs = parse_box_partition(gr, &args.rhs)?;
    let product = quantum_product(&lhs, &rhs, gr)?;
    let output = match format {
        Format::Text => format!("{product}\n"),
        Format::Json => json(&product)?,
        Format::Csv => csv(product.terms())?,
    };
    Ok(Rendered::ok(output))
}

#[derive(Serialize)]
struct DegreeRow {
    n: usize,
    k: usize,
    lambda: Partition,
    root: usize,
    beta: Option<usize>,
    dualized: bool,
    d: usize,
}

fn cmd_degree(args: &DegreeArgs, format: Format) -> Result<Rendered, CliError> {
    let gr = args.gr.grassmannian()?;
    let lambda = parse_box_partition(gr, &args.lambda)?;
    let frame = SeidelFrame::new(gr, args.root)?;
    let d = match &frame {
        None => 0,
        Some(f) => seidel_degree(&f.to_working(&lambda), f.beta, f.working)?,
    };
    let row = DegreeRow {
        n: gr.n(),
        k: gr.k(),
        lambda,
        root: args.root,
        beta: frame.map(|f| f.beta),
        dualized: frame.is_some_and(|f| f.dualized),
        d,
    };
    let output = match format {
        Format::Text => format!("{d}\n"),
        Format::Json => json(&row)?,
        Format::Csv => csv([row])?,
    };
    Ok(Rendered::ok(output))
}

#[derive(Serialize)]
struct NeighborhoodReport {
    n: usize,
    k: usize,
    d: usize,
    lambda_b: Partition,
    mu: Partition,
    points: Vec<schubert_core::SubsetPoint>,
}

#[derive(Serialize)]
struct PointRow {
    subset: schubert_core::SubsetPoint,
}

fn cmd_neighborhood(args: &NeighborhoodArgs, format: Format) -> Result<Rendered, CliError> {
    let gr = args.gr.grassmannian()?;
    let lambda_b = parse_box_partition(gr, &args.lambda_b)?;
    let mu = parse_box_partition(gr, &args.mu)?;
    let points: Vec<_> = gamma_fp(&lambda_b, &mu, args.d, gr)?.into_iter().collect();
    let output = match format {
        Format::Text => points.iter().map(|p| format!("{p}\n")).collect(),
        Format::Csv => csv(points.iter().map(|&subset| PointRow { subset }))?,
        Format::Json => json(&NeighborhoodReport {
            n: gr.n(),
            k: gr.k(),
            d: args.d,
            lambda_b,
            mu,
            points,
        })?,
    };
    Ok(Rendered::ok(output))
}

// ---- join -----------------------------------------------------------------

#[derive(Serialize)]
struct JoinReport {
    n: usize,
    u: Permutation,
    parabolic_y: String,
    parabolic_z: String,
    parabolic_x: String,
    u_y: Permutation,
    u_z: Permutation,
    join: Option<Permutation>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    minimal_upper_bounds: Vec<Permutation>,
}

#[derive(Serialize)]
struct JoinRow<'a> {
    u_y: &'a Permutation,
    u_z: &'a Permutation,
    parabolic_x: String,
    join: String,
}

fn cmd_join(args: &JoinArgs, format: Format) -> Result<Rendered, CliError> {
    let n = args.n;
    if !(1..=schubert_core::MAX_RANK).contains(&n) {
        return Err(Error::RankOutOfRange(n).into());
    }
    let u = parse_perm(n, &args.u)?;
    let dy = ParabolicSet::parse(n, &args.parabolic_y)?;
    let dz = ParabolicSet::parse(n, &args.parabolic_z)?;
    let dx = dy.intersection(&dz)?;
    let (u_y, u_z) = (u.min_coset_rep(&dy), u.min_coset_rep(&dz));
    let outcome = join(&u_y, &u_z, &dx)?;
    let output = match format {
        Format::Text => format!("{outcome}\n"),
        Format::Csv => csv([JoinRow {
            u_y: &u_y,
            u_z: &u_z,
            parabolic_x: dx.to_string(),
            join: outcome.to_string(),
        }])?,
        Format::Json => {
            let (join, minimal_upper_bounds) = match outcome {
                JoinOutcome::Join(x) => (Some(x), Vec::new()),
                JoinOutcome::NoJoin {
                    minimal_upper_bounds,
                } => (None, minimal_upper_bounds),
            };
            json(&JoinReport {
                n,
                u,
                parabolic_y: dy.to_string(),
                parabolic_z: dz.to_string(),
                parabolic_x: dx.to_string(),
                u_y,
                u_z,
                join,
                minimal_upper_bounds,
            })?
        }
    };
    Ok(Rendered::ok(output))
}

fn run(cli: &Cli) -> Result<Rendered, CliError> {
    match &cli.command {
        Command::Verify(a) => cmd_verify(a, cli.format),
        Command::Product(a) => cmd_product(a, cli.format),
        Command::Degree(a) => cmd_degree(a, cli.format),
        Command::Neighborhood(a) => cmd_neighborhood(a, cli.format),
        Command::Join(a) => cmd_join(a, cli.format),
    }
}

fn exit_status(result: &Result<Rendered, CliError>) -> u8 {
    match result {
        Ok(r) if r.failed => 1,
        Ok(_) => 0,
        Err(_) => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli);
    match &result {
        Ok(rendered) => {
            let mut stdout = io::stdout().lock();
            if stdout
                .write_all(rendered.output.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(2);
            }
        }
        Err(e) => eprintln!("error: {e}"),
    }
    ExitCode::from(exit_status(&result))
}
