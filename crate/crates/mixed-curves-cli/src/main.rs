//! Command-line front end. All computation lives in the library; this
//! binary only parses flags, dispatches, and formats. Same argv and seed
//! give byte-identical output.

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use mixed_curves::{
    find_p1_zeros_with_oracle, infer_weights, invariant_report, markdown_table, plan_embedding,
    sample_smoothness, verify_homogeneity, verify_link_count, verify_monodromy_flow,
    verify_wirtinger, zeta_function, FamilyError, FamilyKind, FamilyParams, FamilySpec,
    HomogeneityClass, InvariantError, InvariantReport, MixedPolynomial, PlanStatus, VerifyConfig,
    VerifyError, VerifyOutcome, WeightError, WeightSystem,
};

#[derive(Parser)]
#[command(
    name = "mixed-curves",
    version,
    about = "Mixed polar homogeneous curve families: construction, invariants, planning, numerical verification"
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Print a family member in canonical text form with its weight system
    Construct(MemberArgs),
    /// Invariant report for one family member
    Invariants(MemberArgs),
    /// Plan family parameters realizing a genus and polar degree
    Plan(PlanArgs),
    /// Run one numerical verification suite
    Verify(VerifyArgs),
    /// Invariant table over a parameter grid
    Table(TableArgs),
    /// Zeta function of the fibration, from chi or from a family member
    Zeta(ZetaArgs),
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Markdown,
    Json,
}

#[derive(Args)]
struct FamilyFlags {
    /// Family kind: base, join, twisted, degree-one, remark11
    #[arg(long, default_value = "twisted", value_parser = parse_kind)]
    family: FamilyKind,
    /// Polar degree parameter
    #[arg(long, default_value_t = 1)]
    q: i64,
    /// Radial extension parameter
    #[arg(long, default_value_t = 1)]
    r: i64,
    /// Mixing parameter, 0 <= j <= r
    #[arg(long, default_value_t = 0)]
    j: i64,
    /// Generic constant, as re,im
    #[arg(long, default_value = "2,0", value_parser = parse_complex)]
    alpha: Complex64,
    /// Generic constant, as re,im
    #[arg(long, default_value = "3,0", value_parser = parse_complex)]
    beta: Complex64,
}

impl FamilyFlags {
    fn spec(&self) -> FamilySpec {
        FamilySpec {
            kind: self.family,
            params: FamilyParams::new(self.q, self.r, self.j).with_constants(self.alpha, self.beta),
        }
    }
}

#[derive(Args)]
struct MemberArgs {
    #[command(flatten)]
    member: FamilyFlags,
    #[arg(long, value_enum, default_value_t = Format::Markdown)]
    format: Format,
}

#[derive(Args)]
struct PlanArgs {
    /// Requested genus
    #[arg(long)]
    genus: i64,
    /// Requested polar (embedding) degree
    #[arg(long)]
    degree: i64,
    #[arg(long, value_enum, default_value_t = Format::Markdown)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    /// Scaling identity under the weighted circle action
    Homogeneity,
    /// Analytic derivatives against finite differences
    Wirtinger,
    /// Curve point count on the projective line vs the closed form
    Link,
    /// Flow identity of the fibration monodromy
    Monodromy,
    /// Random plane-slice sampling of the chart for rank-deficient points
    Smoothness,
    /// Locate and print the projective-line zero set
    Zeros,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    #[command(flatten)]
    member: FamilyFlags,
    /// JSON file with VerifyConfig fields; explicit flags take precedence
    #[arg(long)]
    config: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    search_radius: Option<f64>,
    #[arg(long)]
    grid: Option<usize>,
    #[arg(long)]
    cluster_eps: Option<f64>,
    #[arg(long, value_enum, default_value_t = Format::Markdown)]
    format: Format,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, default_value = "twisted", value_parser = parse_kind)]
    family: FamilyKind,
    #[arg(long, default_value_t = 3)]
    qmax: i64,
    #[arg(long, default_value_t = 3)]
    rmax: i64,
    #[arg(long, default_value = "2,0", value_parser = parse_complex)]
    alpha: Complex64,
    #[arg(long, default_value = "3,0", value_parser = parse_complex)]
    beta: Complex64,
    #[arg(long, value_enum, default_value_t = Format::Markdown)]
    format: Format,
}

#[derive(Args)]
struct ZetaArgs {
    /// Fiber Euler characteristic; when present, --degree is the divisor
    #[arg(long)]
    chi: Option<i64>,
    /// Polar degree used with --chi
    #[arg(long, default_value_t = 1)]
    degree: i64,
    #[command(flatten)]
    member: FamilyFlags,
    #[arg(long, value_enum, default_value_t = Format::Markdown)]
    format: Format,
}

fn parse_kind(s: &str) -> Result<FamilyKind, String> {
    FamilyKind::from_str(s).map_err(|e| e.to_string())
}

fn parse_complex(s: &str) -> Result<Complex64, String> {
    let parts: Vec<&str> = s.split(',').collect();
    let num = |p: &str| -> Result<f64, String> {
        let x: f64 = p
            .trim()
            .parse()
            .map_err(|_| format!("bad number in complex constant: {p:?}"))?;
        if x.is_finite() {
            Ok(x)
        } else {
            Err(format!("complex constant must be finite, got {p:?}"))
        }
    };
    match parts.as_slice() {
        [re] => Ok(Complex64::new(num(re)?, 0.0)),
        [re, im] => Ok(Complex64::new(num(re)?, num(im)?)),
        _ => Err(format!("expected re or re,im, got {s:?}")),
    }
}

/// Usage-level problem: exit 2 with a one-line diagnostic on stderr.
struct Usage(String);

macro_rules! usage_from {
    ($($err:ty),*) => {$(
        impl From<$err> for Usage {
            fn from(e: $err) -> Self {
                Usage(e.to_string())
            }
        }
    )*};
}

usage_from!(FamilyError, InvariantError, WeightError);

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Usage> {
    match cli.verb {
        Verb::Construct(a) => construct(a),
        Verb::Invariants(a) => invariants(a),
        Verb::Plan(a) => plan(a),
        Verb::Verify(a) => verify(a),
        Verb::Table(a) => table(a),
        Verb::Zeta(a) => zeta(a),
    }
}

fn member_weights(f: &MixedPolynomial) -> Result<WeightSystem, Usage> {
    match infer_weights(f)? {
        HomogeneityClass::StronglyPolar(ws) => Ok(ws),
        other => Err(Usage(format!(
            "family member is not strongly polar homogeneous: {other:?}"
        ))),
    }
}

fn construct(a: MemberArgs) -> Result<u8, Usage> {
    let spec = a.member.spec();
    let f = spec.build()?;
    let ws = member_weights(&f)?;
    match a.format {
        Format::Json => {
            let out = serde_json::json!({
                "family": spec,
                "n_vars": f.n_vars(),
                "polynomial": f.to_string(),
                "weights": ws,
            });
            println!("{out}");
        }
        Format::Markdown => {
            println!("{f}");
            println!(
                "weights: Q={:?} d={} P={:?} q={}",
                ws.radial(),
                ws.radial_degree(),
                ws.polar(),
                ws.polar_degree()
            );
        }
    }
    Ok(0)
}

fn invariants(a: MemberArgs) -> Result<u8, Usage> {
    let spec = a.member.spec();
    let report = invariant_report(spec.kind, &spec.params)?;
    match a.format {
        Format::Json => println!("{}", serde_json::to_string(&report).expect("serializable")),
        Format::Markdown => print!("{}", markdown_table(std::slice::from_ref(&report))),
    }
    Ok(0)
}

fn plan(a: PlanArgs) -> Result<u8, Usage> {
    if a.genus < 0 {
        return Err(Usage(format!("genus must be nonnegative, got {}", a.genus)));
    }
    if a.degree < 1 {
        return Err(Usage(format!("degree must be positive, got {}", a.degree)));
    }
    let plan = plan_embedding(a.genus, a.degree);
    match a.format {
        Format::Json => println!("{}", serde_json::to_string(&plan).expect("serializable")),
        Format::Markdown => {
            let status = match plan.status {
                PlanStatus::Twisted => "Twisted",
                PlanStatus::Join => "Join",
                PlanStatus::Unknown => "Unknown",
            };
            println!("status: {status}");
            if let Some(p) = &plan.params {
                println!("q={} r={} j={}", p.q, p.r, p.j);
            }
            println!("notes: {}", plan.notes);
        }
    }
    Ok(0)
}

/// Layered configuration: defaults, then the optional JSON file, then
/// explicit flags.
fn build_config(a: &VerifyArgs) -> Result<VerifyConfig, Usage> {
    let mut cfg = match &a.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Usage(format!("cannot read config {path:?}: {e}")))?;
            serde_json::from_str(&text).map_err(|e| Usage(format!("bad config {path:?}: {e}")))?
        }
        None => VerifyConfig::default(),
    };
    if let Some(v) = a.seed {
        cfg.seed = v;
    }
    if let Some(v) = a.trials {
        cfg.trials = v;
    }
    if let Some(v) = a.tol {
        cfg.tol = v;
    }
    if let Some(v) = a.search_radius {
        cfg.search_radius = v;
    }
    if let Some(v) = a.grid {
        cfg.grid = v;
    }
    if let Some(v) = a.cluster_eps {
        cfg.cluster_eps = v;
    }
    cfg.validate().map_err(|e| Usage(e.to_string()))?;
    Ok(cfg)
}

/// Suites that cannot run at all exit 2; suites that ran but could not
/// certify (degenerate root, inconclusive sampling) exit 1.
fn classify(e: VerifyError) -> (u8, Usage) {
    match e {
        VerifyError::BadConfig(_)
        | VerifyError::WrongArity { .. }
        | VerifyError::NotStronglyPolar(_)
        | VerifyError::DegenerateChart
        | VerifyError::Poly(_)
        | VerifyError::Weights(_)
        | VerifyError::Family(_) => (2, Usage(e.to_string())),
        VerifyError::DegenerateRoot { .. }
        | VerifyError::SearchExhausted { .. }
        | VerifyError::NoPointsFound { .. } => (1, Usage(e.to_string())),
    }
}

fn verify(a: VerifyArgs) -> Result<u8, Usage> {
    let cfg = build_config(&a)?;
    let spec = a.member.spec();
    let outcome: Result<VerifyOutcome, VerifyError> = match a.suite {
        Suite::Homogeneity => spec.build().map_err(VerifyError::from).and_then(|f| {
            let ws = member_weights(&f).map_err(|u| VerifyError::BadConfig(u.0))?;
            verify_homogeneity(&f, &ws, &cfg)
        }),
        Suite::Wirtinger => spec
            .build()
            .map_err(VerifyError::from)
            .and_then(|f| verify_wirtinger(&f, &cfg)),
        Suite::Link => verify_link_count(&spec.params, &cfg),
        Suite::Monodromy => spec.build().map_err(VerifyError::from).and_then(|f| {
            let ws = member_weights(&f).map_err(|u| VerifyError::BadConfig(u.0))?;
            verify_monodromy_flow(&f, &ws, &cfg)
        }),
        Suite::Smoothness => spec
            .build()
            .map_err(VerifyError::from)
            .and_then(|f| sample_smoothness(&f, &cfg)),
        Suite::Zeros => return zeros(&spec, &cfg, a.format),
    };
    let outcome = match outcome {
        Ok(o) => o,
        Err(e) => {
            let (code, usage) = classify(e);
            if code == 2 {
                return Err(usage);
            }
            eprintln!("error: {}", usage.0);
            return Ok(1);
        }
    };
    match a.format {
        Format::Json => println!("{}", serde_json::to_string(&outcome).expect("serializable")),
        Format::Markdown => println!(
            "{}: {}",
            if outcome.passed { "pass" } else { "FAIL" },
            outcome.details
        ),
    }
    Ok(u8::from(!outcome.passed))
}

fn zeros(spec: &FamilySpec, cfg: &VerifyConfig, format: Format) -> Result<u8, Usage> {
    let f = spec.build()?;
    let oracle = spec.chart_roots().transpose()?;
    let result = find_p1_zeros_with_oracle(&f, cfg, oracle.as_deref());
    let zs = match result {
        Ok(zs) => zs,
        Err(e) => {
            let (code, usage) = classify(e);
            if code == 2 {
                return Err(usage);
            }
            eprintln!("error: {}", usage.0);
            return Ok(1);
        }
    };
    match format {
        Format::Json => println!("{}", serde_json::to_string(&zs).expect("serializable")),
        Format::Markdown => {
            for (w, res) in zs.affine_roots.iter().zip(&zs.residuals) {
                println!("root: ({}, {})  residual {res:.3e}", w.re, w.im);
            }
            println!(
                "infinity: {}  total: {}",
                if zs.infinity_is_root { "yes" } else { "no" },
                zs.count()
            );
        }
    }
    Ok(0)
}

fn grid_reports(a: &TableArgs) -> Result<Vec<InvariantReport>, Usage> {
    let mut reports = Vec::new();
    let mut push = |q: i64, r: i64, j: i64| -> Result<(), Usage> {
        let p = FamilyParams::new(q, r, j).with_constants(a.alpha, a.beta);
        reports.push(invariant_report(a.family, &p)?);
        Ok(())
    };
    match a.family {
        FamilyKind::BaseH | FamilyKind::JoinC => {
            for q in 1..=a.qmax {
                for r in 0..=a.rmax {
                    for j in 0..=r {
                        push(q, r, j)?;
                    }
                }
            }
        }
        FamilyKind::TwistedS => {
            for q in 1..=a.qmax {
                for r in 1..=a.rmax {
                    for j in 0..=r {
                        push(q, r, j)?;
                    }
                }
            }
        }
        FamilyKind::DegreeOneF => {
            for r in 1..=a.rmax {
                push(1, r, 0)?;
            }
        }
        FamilyKind::Remark11H => {
            for r in 1..=a.rmax {
                push(1, r, 0)?;
            }
        }
    }
    Ok(reports)
}

fn table(a: TableArgs) -> Result<u8, Usage> {
    if a.qmax < 1 || a.rmax < 0 {
        return Err(Usage("need qmax >= 1 and rmax >= 0".into()));
    }
    let reports = grid_reports(&a)?;
    match a.format {
        Format::Json => println!("{}", serde_json::to_string(&reports).expect("serializable")),
        Format::Markdown => print!("{}", markdown_table(&reports)),
    }
    Ok(0)
}

fn zeta(a: ZetaArgs) -> Result<u8, Usage> {
    let (chi, q, zeta) = match a.chi {
        Some(chi) => {
            let z = zeta_function(chi, a.degree)?;
            (chi, a.degree, z)
        }
        None => {
            let spec = a.member.spec();
            let report = invariant_report(spec.kind, &spec.params)?;
            (report.chi_fiber, report.embedding_degree, report.zeta)
        }
    };
    match a.format {
        Format::Json => {
            let out = serde_json::json!({
                "chi_F": chi,
                "q": q,
                "zeta": zeta.to_string(),
            });
            println!("{out}");
        }
        Format::Markdown => println!("{zeta}"),
    }
    Ok(0)
}
