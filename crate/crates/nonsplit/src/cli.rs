//! The `nonsplit` command line.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use nonsplit_core::admissible::{
    generate_extremal_with, verify_admissible, AdmissiblePolynomial, CertifiedPolynomial,
    SolveMethod, DEFAULT_DEGREE_CAP,
};
use nonsplit_core::bounds::{BaseFieldParams, BoundConfig, ImpliedConstants};
use nonsplit_core::exponent::{maximize_a, ExponentResult};
use nonsplit_core::numfield::{
    compare_bound_with, IntPolynomial, SplitOracle, SplitReport, Variant, DEFAULT_PRIME_CAP,
};
use nonsplit_core::real::Precision;
use nonsplit_core::ExactRational;
use rayon::prelude::*;

use crate::json::{CertificateJson, ExponentJson, PolynomialJson, SplitReportJson};
use crate::parse::parse_polynomial;
use crate::{figure, report, table};

/// Default `n` grid for `table`.
pub const TABLE_GRID: [u64; 18] = [
    2, 3, 4, 5, 6, 7, 8, 9, 10, 20, 50, 100, 200, 500, 1000, 2000, 5000, 10000,
];

#[derive(Debug, Parser)]
#[command(
    name = "nonsplit",
    version,
    about = "Extremal admissible polynomials, the exponent A(n, P) and least non-split primes"
)]
pub struct Cli {
    /// Output format; `svg` applies only to `figure`.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Working precision of the exponent computation, in bits.
    #[arg(
        long,
        global = true,
        env = "NONSPLIT_PRECISION_BITS",
        default_value_t = 256,
        value_parser = clap::value_parser!(u32).range(64..)
    )]
    pub precision_bits: u32,

    /// Write output to this file instead of stdout (`figure`: the SVG path).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Lp,
    Square,
    Both,
}

impl From<MethodArg> for SolveMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Lp => SolveMethod::Lp,
            MethodArg::Square => SolveMethod::Square,
            MethodArg::Both => SolveMethod::Both,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    /// Least prime not splitting completely; ramified primes count.
    Any,
    /// Least unramified prime not splitting completely.
    Unramified,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Any => Variant::AnyNonSplit,
            VariantArg::Unramified => Variant::UnramifiedNonSplit,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate the extremal admissible polynomial P_d with its certificate.
    Poly(PolyArgs),
    /// Check admissibility of a given polynomial.
    Verify(VerifyArgs),
    /// Compute A(n, P_d) and its maximizer.
    Exponent(ExponentArgs),
    /// Tabulate 4A(n, P_d) and the maximizer over n and d.
    Table(TableArgs),
    /// Plot 4A(n, P_1) and 4A(n, P_100) as SVG with a CSV of the data.
    Figure(FigureArgs),
    /// Report the explicit constants and exponents for a base field.
    Bound(BoundArgs),
    /// Find the least non-split prime of K = Q[x]/(f) and compare with the bound.
    Field(FieldArgs),
}

#[derive(Debug, Args)]
pub struct PolyArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub degree: u32,
    #[arg(long, value_enum, default_value_t = MethodArg::Both)]
    pub method: MethodArg,
    #[arg(long, default_value_t = DEFAULT_DEGREE_CAP)]
    pub degree_cap: usize,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("input").required(true).args(["coeffs", "json"])))]
pub struct VerifyArgs {
    /// Coefficients a_1, a_2, ... as comma-separated rationals, e.g. "1,3/2".
    #[arg(long)]
    pub coeffs: Option<String>,
    /// A polynomial in the JSON form written by `poly --format json`.
    #[arg(long)]
    pub json: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ExponentArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
    pub n: u64,
    #[arg(long, default_value_t = 100)]
    pub degree: usize,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, value_delimiter = ',', default_values_t = table::DEFAULT_DEGREES)]
    pub degrees: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_values_t = TABLE_GRID,
          value_parser = clap::value_parser!(u64).range(2..))]
    pub n: Vec<u64>,
}

#[derive(Debug, Args)]
pub struct FigureArgs {
    #[arg(long, default_value_t = 2)]
    pub n_min: u64,
    #[arg(long, default_value_t = 100)]
    pub n_max: u64,
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    /// Degree of the base field F.
    #[arg(long = "nF", default_value_t = 1)]
    pub n_f: u32,
    /// Absolute discriminant of F.
    #[arg(long = "DF", default_value_t = 1.0)]
    pub d_f: f64,
    /// F is not reached from Q by a tower of normal extensions.
    #[arg(long)]
    pub not_normal: bool,
    /// Relative degree n = [K:F].
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
    pub n: u64,
    #[arg(long, default_value_t = 100)]
    pub degree: usize,
    #[arg(long, default_value_t = 0.01)]
    pub eps: f64,
    #[arg(long, default_value_t = 0.25)]
    pub eta: f64,
    /// The unspecified absolute constant in B_F (non-rigorous).
    #[arg(long, default_value_t = 0.5)]
    pub c1: f64,
    /// Implied constant of the n_F (log D_F)^2 term in log C_F (non-rigorous).
    #[arg(long, default_value_t = 1.0)]
    pub implied_log_disc: f64,
    /// Implied constant of the B_F term in log C_F (non-rigorous).
    #[arg(long, default_value_t = 1.0)]
    pub implied_siegel: f64,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("input").required(true).args(["poly", "batch"])))]
pub struct FieldArgs {
    /// A monic integer polynomial such as "x^3 - x - 1".
    #[arg(long)]
    pub poly: Option<String>,
    /// File with one polynomial per line; blank lines and '#' comments skipped.
    #[arg(long)]
    pub batch: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = VariantArg::Unramified)]
    pub variant: VariantArg,
    /// Degree d of the weight polynomial P_d used in the bound.
    #[arg(long, default_value_t = 100)]
    pub degree: usize,
    #[arg(long, default_value_t = 0.01)]
    pub eps: f64,
    /// Largest prime scanned.
    #[arg(long, env = "NONSPLIT_PRIME_CAP", default_value_t = DEFAULT_PRIME_CAP)]
    pub cap: u64,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] nonsplit_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_consistency_failure() => 2,
            _ => 1,
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.to_owned(),
        source,
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = stderr.write_all(text.as_bytes());
                    1
                }
            };
        }
    };
    match execute(&cli, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, CliError> {
    if cli.format == Format::Svg && !matches!(cli.command, Command::Figure(_)) {
        return Err(usage("--format svg is only valid for the figure command"));
    }
    let prec = Precision::bits(cli.precision_bits as usize);
    let body = match &cli.command {
        Command::Poly(a) => cmd_poly(a, cli.format, stderr)?,
        Command::Verify(a) => cmd_verify(a, cli.format)?,
        Command::Exponent(a) => cmd_exponent(a, cli.format, prec)?,
        Command::Table(a) => cmd_table(a, cli.format, prec)?,
        Command::Figure(a) => cmd_figure(a, cli.format, cli.out.as_deref(), prec)?,
        Command::Bound(a) => cmd_bound(a, cli.format, prec)?,
        Command::Field(a) => {
            let (body, code) = cmd_field(a, cli.format, prec, stderr)?;
            emit(&body, cli.out.as_deref(), stdout)?;
            return Ok(code);
        }
    };
    let out = match cli.command {
        Command::Figure(_) => None,
        _ => cli.out.as_deref(),
    };
    emit(&body, out, stdout)?;
    Ok(0)
}

fn emit(body: &str, out: Option<&Path>, stdout: &mut dyn Write) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, body).map_err(io_err(path)),
        None => stdout
            .write_all(body.as_bytes())
            .map_err(io_err(Path::new("<stdout>"))),
    }
}

fn finish_csv(w: csv::Writer<Vec<u8>>) -> Result<String, csv::Error> {
    let bytes = w.into_inner().map_err(|e| csv::Error::from(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn json_line(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn extremal(degree: usize, method: SolveMethod, cap: usize) -> Result<CertifiedPolynomial, CliError> {
    generate_extremal_with(degree, method, cap).map_err(|e| match e {
        nonsplit_core::Error::DegreeOutOfRange { .. } => usage(e.to_string()),
        other => other.into(),
    })
}

fn polynomial_text(p: &AdmissiblePolynomial) -> String {
    p.coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let k = i + 1;
            let x = if k == 1 { "x".to_owned() } else { format!("x^{k}") };
            if c == &ExactRational::from_integer(1.into()) {
                x
            } else {
                format!("{c} {x}")
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn certificate_text(c: &CertificateJson) -> String {
    match &c.witness {
        Some(w) if w.den == "1" => format!("{} ({}), witness u0 = {}", c.verdict, c.method, w.num),
        Some(w) => format!("{} ({}), witness u0 = {}/{}", c.verdict, c.method, w.num, w.den),
        None => format!("{} ({})", c.verdict, c.method),
    }
}

fn cmd_poly(a: &PolyArgs, format: Format, stderr: &mut dyn Write) -> Result<String, CliError> {
    let d = a.degree as usize;
    let c = extremal(d, a.method.into(), a.degree_cap)?;
    let cert = CertificateJson::from(&c.certificate);
    let p = &c.polynomial;
    Ok(match format {
        Format::Json => {
            let _ = writeln!(stderr, "certificate: {}", certificate_text(&cert));
            let mut s = serde_json::to_string(&PolynomialJson::from(p)).expect("serializable");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["k", "num", "den"])?;
            for (i, q) in p.coeffs().iter().enumerate() {
                w.write_record([(i + 1).to_string(), q.numer().to_string(), q.denom().to_string()])?;
            }
            let _ = writeln!(stderr, "certificate: {}", certificate_text(&cert));
            finish_csv(w)?
        }
        _ => {
            let mut s = format!("P_{d}(x) = {}\nP_{d}(1) = {}\n", polynomial_text(p), p.value_at_one());
            for (i, q) in p.coeffs().iter().enumerate() {
                s.push_str(&format!("a_{} = {q}\n", i + 1));
            }
            s.push_str(&format!("certificate: {}\n", certificate_text(&cert)));
            s
        }
    })
}

fn parse_rationals(src: &str) -> Result<Vec<ExactRational>, CliError> {
    src.split(',')
        .map(|t| {
            let t = t.trim();
            let q: ExactRational = t.parse().map_err(|_| usage(format!("bad coefficient {t:?}")))?;
            Ok(q)
        })
        .collect()
}

fn cmd_verify(a: &VerifyArgs, format: Format) -> Result<String, CliError> {
    let p = match (&a.coeffs, &a.json) {
        (Some(c), _) => AdmissiblePolynomial::new(parse_rationals(c)?).map_err(|e| usage(e.to_string()))?,
        (None, Some(path)) => {
            let text = fs::read_to_string(path).map_err(io_err(path))?;
            let pj: PolynomialJson = serde_json::from_str(&text)
                .map_err(|e| usage(format!("{}: {e}", path.display())))?;
            AdmissiblePolynomial::try_from(&pj).map_err(|e| usage(format!("{}: {e}", path.display())))?
        }
        (None, None) => unreachable!("clap requires one input"),
    };
    let cert = CertificateJson::from(&verify_admissible(&p)?);
    Ok(match format {
        Format::Json => json_line(&cert),
        _ => format!("{}\n", certificate_text(&cert)),
    })
}

fn exponent_csv(results: &[&ExponentResult]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in results {
        w.serialize(ExponentJson::from(*r))?;
    }
    Ok(finish_csv(w)?)
}

fn cmd_exponent(a: &ExponentArgs, format: Format, prec: Precision) -> Result<String, CliError> {
    let c = extremal(a.degree, SolveMethod::Both, DEFAULT_DEGREE_CAP)?;
    let r = maximize_a(a.n, &c.polynomial, prec)?;
    let j = ExponentJson::from(&r);
    Ok(match format {
        Format::Json => json_line(&j),
        Format::Csv => exponent_csv(&[&r])?,
        _ => format!(
            "n = {}, P = P_{}\n4A = {}\nA = {}\nlambda = {}\n",
            j.n, j.degree, j.four_a, j.a, j.lambda
        ),
    })
}

fn cmd_table(a: &TableArgs, format: Format, prec: Precision) -> Result<String, CliError> {
    if a.degrees.is_empty() || a.n.is_empty() {
        return Err(usage("--degrees and --n must be non-empty"));
    }
    for &d in &a.degrees {
        if d == 0 || d > DEFAULT_DEGREE_CAP {
            return Err(usage(format!("degree {d} outside 1..={DEFAULT_DEGREE_CAP}")));
        }
    }
    let t = table::compute(&a.degrees, &a.n, prec)?;
    Ok(match format {
        Format::Json => json_line(&t.to_json()),
        Format::Csv => t.to_csv()?,
        _ => t.to_text(),
    })
}

fn cmd_figure(
    a: &FigureArgs,
    format: Format,
    out: Option<&Path>,
    prec: Precision,
) -> Result<String, CliError> {
    if a.n_min < 2 || a.n_min >= a.n_max {
        return Err(usage("figure needs 2 <= n-min < n-max"));
    }
    let svg_path = out.unwrap_or(Path::new("figure1.svg")).to_owned();
    let csv_path = svg_path.with_extension("csv");
    let data = figure::compute(a.n_min, a.n_max, prec)?;
    let csv = data.to_csv()?;
    fs::write(&svg_path, data.to_svg()).map_err(io_err(&svg_path))?;
    fs::write(&csv_path, &csv).map_err(io_err(&csv_path))?;
    Ok(match format {
        Format::Json => json_line(&serde_json::json!({
            "svg": svg_path,
            "csv": csv_path,
            "points": data.points(),
        })),
        Format::Csv => csv,
        _ => format!("wrote {} and {}\n", svg_path.display(), csv_path.display()),
    })
}

fn cmd_bound(a: &BoundArgs, format: Format, prec: Precision) -> Result<String, CliError> {
    let base = BaseFieldParams::with_discriminant(a.n_f, a.d_f, !a.not_normal)
        .map_err(|e| usage(e.to_string()))?;
    let cfg = BoundConfig {
        epsilon: a.eps,
        eta: a.eta,
        c1: a.c1,
        implied: ImpliedConstants {
            field_log_disc: a.implied_log_disc,
            siegel: a.implied_siegel,
        },
    };
    cfg.validate().map_err(|e| usage(e.to_string()))?;
    let c = extremal(a.degree, SolveMethod::Both, DEFAULT_DEGREE_CAP)?;
    let r = report::bound_report(&base, a.d_f, a.n, &c.polynomial, &cfg, prec)?;
    Ok(match format {
        Format::Json => json_line(&r.to_json()),
        Format::Csv => return Err(usage("bound supports text and json output")),
        _ => r.to_text(),
    })
}

/// One scanned polynomial: the report, or the cap when no prime was found.
type FieldOutcome = Result<SplitReport, u64>;

fn scan(
    oracle: &SplitOracle,
    exponent: &ExponentResult,
    a: &FieldArgs,
) -> Result<FieldOutcome, CliError> {
    match compare_bound_with(oracle, exponent, a.eps, a.variant.into(), a.cap) {
        Ok(r) => Ok(Ok(r)),
        Err(nonsplit_core::Error::NotFound { cap }) => Ok(Err(cap)),
        Err(e @ nonsplit_core::Error::InvalidParameter { .. }) => Err(usage(e.to_string())),
        Err(e) => Err(e.into()),
    }
}

fn field_row(poly: &IntPolynomial, disc: &num_bigint::BigInt, variant: Variant, o: &FieldOutcome) -> [String; 7] {
    match o {
        Ok(r) => [
            poly.to_string(),
            poly.degree().to_string(),
            disc.to_string(),
            variant.as_str().to_owned(),
            r.least_prime.to_string(),
            r.bound.as_ref().map_or(String::new(), |b| format!("{:.6}", b.log_bound)),
            r.flags.join("; "),
        ],
        Err(cap) => [
            poly.to_string(),
            poly.degree().to_string(),
            disc.to_string(),
            variant.as_str().to_owned(),
            "not-found".to_owned(),
            String::new(),
            format!("no qualifying prime up to {cap}"),
        ],
    }
}

fn field_json(oracle: &SplitOracle, variant: Variant, o: &FieldOutcome) -> SplitReportJson {
    match o {
        Ok(r) => SplitReportJson::from(r),
        Err(cap) => SplitReportJson {
            polynomial: oracle.polynomial().to_string(),
            degree: oracle.polynomial().degree(),
            disc_f: oracle.discriminant().to_string(),
            variant: variant.as_str().into(),
            least_prime: None,
            prime_cap: *cap,
            flags: vec![format!("no qualifying prime up to {cap}")],
            bound: None,
        },
    }
}

fn field_csv(rows: &[[String; 7]]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "polynomial",
        "degree",
        "disc_f",
        "variant",
        "least_prime",
        "log_bound",
        "flags",
    ])?;
    for r in rows {
        w.write_record(r)?;
    }
    Ok(finish_csv(w)?)
}

fn cmd_field(
    a: &FieldArgs,
    format: Format,
    prec: Precision,
    stderr: &mut dyn Write,
) -> Result<(String, i32), CliError> {
    if !(a.eps >= 0.0) {
        return Err(usage("--eps must be nonnegative"));
    }
    let weight = extremal(a.degree, SolveMethod::Both, DEFAULT_DEGREE_CAP)?.polynomial;
    let variant: Variant = a.variant.into();

    let polys: Vec<(String, IntPolynomial)> = match (&a.poly, &a.batch) {
        (Some(src), _) => vec![(src.clone(), parse_polynomial(src).map_err(|e| usage(format!("--poly: {e}")))?)],
        (None, Some(path)) => {
            let text = fs::read_to_string(path).map_err(io_err(path))?;
            let mut v = Vec::new();
            for (i, line) in text.lines().enumerate() {
                let line = line.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                let p = parse_polynomial(line)
                    .map_err(|e| usage(format!("{}:{}: {e}", path.display(), i + 1)))?;
                v.push((format!("{}:{}", path.display(), i + 1), p));
            }
            v
        }
        (None, None) => unreachable!("clap requires one input"),
    };
    let oracles = polys
        .into_iter()
        .map(|(label, p)| SplitOracle::new(p).map_err(|e| usage(format!("{label}: {e}"))))
        .collect::<Result<Vec<_>, _>>()?;

    // A(n, P_d) once per distinct n.
    let ns: Vec<u64> = oracles
        .iter()
        .map(|o| o.polynomial().degree() as u64)
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    let exponents: BTreeMap<u64, ExponentResult> = ns
        .into_par_iter()
        .map(|n| maximize_a(n, &weight, prec).map(|r| (n, r)))
        .collect::<Result<_, _>>()?;

    let outcomes = oracles
        .par_iter()
        .map(|o| scan(o, &exponents[&(o.polynomial().degree() as u64)], a))
        .collect::<Result<Vec<_>, _>>()?;

    if a.batch.is_none() {
        let (o, outcome) = (&oracles[0], &outcomes[0]);
        let code = i32::from(outcome.is_err());
        if let Err(cap) = outcome {
            let _ = writeln!(stderr, "error: no qualifying prime up to {cap}");
        }
        let body = match format {
            Format::Json => json_line(&field_json(o, variant, outcome)),
            Format::Csv => field_csv(&[field_row(o.polynomial(), o.discriminant(), variant, outcome)])?,
            _ => field_text(o, variant, outcome),
        };
        return Ok((body, code));
    }

    let body = match format {
        Format::Json => json_line(
            &oracles
                .iter()
                .zip(&outcomes)
                .map(|(o, r)| field_json(o, variant, r))
                .collect::<Vec<_>>(),
        ),
        _ => field_csv(
            &oracles
                .iter()
                .zip(&outcomes)
                .map(|(o, r)| field_row(o.polynomial(), o.discriminant(), variant, r))
                .collect::<Vec<_>>(),
        )?,
    };
    Ok((body, 0))
}

fn field_text(o: &SplitOracle, variant: Variant, outcome: &FieldOutcome) -> String {
    let mut s = format!(
        "f = {}\ndisc(f) = {}\nvariant: {}\n",
        o.polynomial(),
        o.discriminant(),
        variant.as_str()
    );
    match outcome {
        Ok(r) => {
            s.push_str(&format!("least prime: {}\n", r.least_prime));
            if let Some(b) = &r.bound {
                s.push_str(&format!(
                    "bound: exponent {:.6} with P_{} (4A = {:.6}), log bound {:.6}, least prime {} the bound (implied constants ignored)\n",
                    b.exponent,
                    b.weight_degree,
                    b.four_a,
                    b.log_bound,
                    if b.within_bound { "within" } else { "exceeds" }
                ));
            }
            for f in &r.flags {
                s.push_str(&format!("flag: {f}\n"));
            }
        }
        Err(cap) => s.push_str(&format!("least prime: not found up to {cap}\n")),
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn clap_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn rationals() {
        let q = parse_rationals("1, 3/2").unwrap();
        assert_eq!(q[1], ExactRational::new(3.into(), 2.into()));
        assert!(parse_rationals("1,x").is_err());
    }

    #[test]
    fn polynomial_rendering() {
        let p = AdmissiblePolynomial::new(parse_rationals("1,1,2/3").unwrap()).unwrap();
        assert_eq!(polynomial_text(&p), "x + x^2 + 2/3 x^3");
    }
}
