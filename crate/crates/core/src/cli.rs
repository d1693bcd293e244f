//! Command-line frontend: verification, parameter search, regime
//! classification and gap tables, with machine-readable output.
//!
//! Exit codes: 0 proven/success, 1 refuted, 2 undecided or search budget
//! exhausted, 64 usage or domain errors.

use crate::error::Error;
use crate::functions::{arcsin, gap, FamilyParams, ReducedParam};
use crate::lambda::classify;
use crate::optimizer::{find_bounds, max_gap};
use crate::verifier::{
    verify, Certificate, Claim, ClaimEval, ClaimTarget, Relation, Verdict, VerifierConfig,
    EQUALITY_TOL,
};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::io::Write;
use std::path::PathBuf;

pub const EXIT_PROVEN: u8 = 0;
pub const EXIT_REFUTED: u8 = 1;
pub const EXIT_UNDECIDED: u8 = 2;
pub const EXIT_USAGE: u8 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Human,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RelationArg {
    Ge,
    Le,
}

impl From<RelationArg> for Relation {
    fn from(r: RelationArg) -> Self {
        match r {
            RelationArg::Ge => Relation::Ge,
            RelationArg::Le => Relation::Le,
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "asincert",
    about = "Certified two-sided bounds on arcsine from the family a*x/(b + sqrt(1 - x^2))",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "human")]
    format: Format,
    /// Decimal digits for csv/human output (1..=17); json always prints
    /// shortest round-trip floats.
    #[arg(long, global = true, default_value_t = 12)]
    precision: usize,
    /// Write output to a file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Certify the sign of phi_{a,b} - asin on a subinterval of [0, 1].
    Verify(VerifyArgs),
    /// Search for the extremal parameters b1 and b2.
    FindBounds(FindBoundsArgs),
    /// Tabulate x, f_b, asin and their gap on a uniform grid.
    GapTable(GapTableArgs),
    /// Classify a parameter into its derivative-sign regime.
    Classify(ClassifyArgs),
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Numerator coefficient; defaults to b + 1 (the tangent subfamily).
    #[arg(long, allow_negative_numbers = true)]
    a: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    b: f64,
    /// Claimed sign of the gap: ge for `>= 0`, le for `<= 0`.
    #[arg(long, value_enum)]
    relation: RelationArg,
    /// Claim domain as `lo,hi` inside [0, 1].
    #[arg(long, default_value = "0,1")]
    domain: String,
    /// Equality points: `auto`, `none`, or a comma-separated list.
    #[arg(long, default_value = "auto")]
    equality: String,
    #[arg(long, default_value_t = 40)]
    max_depth: u32,
}

#[derive(Args, Debug)]
struct FindBoundsArgs {
    /// Bisection tolerance for both parameter searches.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
}

#[derive(Args, Debug)]
struct GapTableArgs {
    #[arg(long, allow_negative_numbers = true)]
    b: f64,
    /// Number of uniformly spaced rows on [0, 1].
    #[arg(long, default_value_t = 101)]
    n: usize,
}

#[derive(Args, Debug)]
struct ClassifyArgs {
    #[arg(long, allow_negative_numbers = true)]
    b: f64,
}

struct Output {
    format: Format,
    precision: usize,
    out: Option<PathBuf>,
}

impl Output {
    fn emit(&self, content: String) -> Result<(), Error> {
        match &self.out {
            Some(path) => std::fs::write(path, content)
                .map_err(|e| Error::InvalidConfig(format!("cannot write {}: {e}", path.display()))),
            None => {
                let mut stdout = std::io::stdout().lock();
                stdout
                    .write_all(content.as_bytes())
                    .map_err(|e| Error::InvalidConfig(format!("cannot write output: {e}")))
            }
        }
    }

    fn float(&self, v: f64) -> String {
        format_float(v, self.precision)
    }
}

/// Shortest round-trip formatting at precision 17, scientific with the
/// requested significant digits below.
pub fn format_float(v: f64, precision: usize) -> String {
    if precision >= 17 {
        format!("{v}")
    } else {
        format!("{:.*e}", precision.saturating_sub(1), v)
    }
}

fn usage_error(msg: String) -> Error {
    Error::InvalidConfig(msg)
}

fn parse_domain(s: &str) -> Result<[f64; 2], Error> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(usage_error(format!("domain `{s}` must be `lo,hi`")));
    }
    let lo: f64 = parts[0]
        .trim()
        .parse()
        .map_err(|_| usage_error(format!("bad domain bound `{}`", parts[0])))?;
    let hi: f64 = parts[1]
        .trim()
        .parse()
        .map_err(|_| usage_error(format!("bad domain bound `{}`", parts[1])))?;
    Ok([lo, hi])
}

fn resolve_equality(
    spec: &str,
    target: &ClaimTarget,
    domain: [f64; 2],
) -> Result<Vec<f64>, Error> {
    match spec {
        "none" => Ok(Vec::new()),
        "auto" => {
            let eval = ClaimEval::new(target);
            let mut eq = Vec::new();
            for e in domain {
                if eval.gap_scalar(e)?.abs() <= EQUALITY_TOL {
                    eq.push(e);
                }
            }
            Ok(eq)
        }
        list => list
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<f64>()
                    .map_err(|_| usage_error(format!("bad equality point `{p}`")))
            })
            .collect(),
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Undecided { .. } => EXIT_UNDECIDED,
        _ => EXIT_USAGE,
    }
}

/// Parses arguments and dispatches; returns the process exit code.
pub fn main_from_env() -> u8 {
    match Cli::try_parse() {
        Ok(cli) => run(cli),
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            code
        }
    }
}

pub fn run(cli: Cli) -> u8 {
    let output = Output {
        format: cli.format,
        precision: cli.precision,
        out: cli.out.clone(),
    };
    if !(1..=17).contains(&output.precision) {
        eprintln!("error: precision {} is outside 1..=17", output.precision);
        return EXIT_USAGE;
    }
    let result = match cli.command {
        Command::Verify(args) => cmd_verify(&args, &output),
        Command::FindBounds(args) => cmd_find_bounds(&args, &output),
        Command::GapTable(args) => cmd_gap_table(&args, &output),
        Command::Classify(args) => cmd_classify(&args, &output),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

fn cmd_verify(args: &VerifyArgs, output: &Output) -> Result<u8, Error> {
    let target = match args.a {
        Some(a) => ClaimTarget::Family(FamilyParams::new(a, args.b)?),
        None => ClaimTarget::Reduced(ReducedParam::new(args.b)?),
    };
    let domain = parse_domain(&args.domain)?;
    let equality = resolve_equality(&args.equality, &target, domain)?;
    let claim = Claim::new(target, args.relation.into(), domain, equality)?;
    let cfg = VerifierConfig {
        max_depth: args.max_depth,
        ..VerifierConfig::default()
    };
    let cert = verify(&claim, &cfg)?;
    output.emit(render_certificate(&cert, output))?;
    Ok(match cert.verdict {
        Verdict::Proven => EXIT_PROVEN,
        Verdict::Refuted => EXIT_REFUTED,
        Verdict::Undecided => EXIT_UNDECIDED,
    })
}

fn render_certificate(cert: &Certificate, output: &Output) -> String {
    match output.format {
        Format::Json => cert.to_json(),
        Format::Csv => {
            let mut s = String::from("verdict,lo,hi,kind,enclosure_lo,enclosure_hi\n");
            for n in &cert.nodes {
                s.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    cert.verdict,
                    output.float(n.lo),
                    output.float(n.hi),
                    n.kind,
                    output.float(n.enclosure_lo),
                    output.float(n.enclosure_hi)
                ));
            }
            s
        }
        Format::Human => {
            let rel = match cert.claim.relation {
                Relation::Ge => ">= 0",
                Relation::Le => "<= 0",
            };
            let member = match (cert.claim.a2, cert.claim.b2) {
                (Some(a2), Some(b2)) => format!(
                    "phi({}, {}) - phi({}, {})",
                    output.float(cert.claim.a),
                    output.float(cert.claim.b),
                    output.float(a2),
                    output.float(b2)
                ),
                _ => format!(
                    "phi({}, {}) - asin",
                    output.float(cert.claim.a),
                    output.float(cert.claim.b)
                ),
            };
            let eq: Vec<String> = cert
                .claim
                .equality_set
                .iter()
                .map(|e| output.float(*e))
                .collect();
            let mut s = format!(
                "verdict: {}\nclaim: {member} {rel} on [{}, {}], equality at {{{}}}\n\
                 nodes: {} (max depth {})\n",
                cert.verdict,
                output.float(cert.claim.domain[0]),
                output.float(cert.claim.domain[1]),
                eq.join(", "),
                cert.stats.nodes,
                cert.stats.depth
            );
            if cert.verdict != Verdict::Proven {
                for n in &cert.nodes {
                    s.push_str(&format!(
                        "  {} node [{}, {}] enclosure [{}, {}]\n",
                        n.kind,
                        output.float(n.lo),
                        output.float(n.hi),
                        output.float(n.enclosure_lo),
                        output.float(n.enclosure_hi)
                    ));
                }
            }
            s
        }
    }
}

fn cmd_find_bounds(args: &FindBoundsArgs, output: &Output) -> Result<u8, Error> {
    let report = find_bounds(args.tol)?;
    let content = match output.format {
        Format::Json => {
            serde_json::to_string_pretty(&report).expect("report serialization cannot fail")
        }
        Format::Csv => format!(
            "b1,b2,b1_closed_form,agreement\n{},{},{},{}\n",
            output.float(report.b1),
            output.float(report.b2),
            output.float(report.b1_closed_form),
            output.float(report.agreement)
        ),
        Format::Human => format!(
            "b1 (least upper bound parameter):   {}\n\
             b2 (greatest lower bound parameter): {}\n\
             b1 closed form 2/(pi - 2):           {}\n\
             agreement |b1 - closed form|:        {}\n",
            output.float(report.b1),
            output.float(report.b2),
            output.float(report.b1_closed_form),
            output.float(report.agreement)
        ),
    };
    output.emit(content)?;
    Ok(0)
}

fn cmd_gap_table(args: &GapTableArgs, output: &Output) -> Result<u8, Error> {
    if args.n < 2 {
        return Err(usage_error(format!("n = {} but at least 2 rows are required", args.n)));
    }
    let b = ReducedParam::new(args.b)?;
    let mut rows = Vec::with_capacity(args.n);
    for i in 0..args.n {
        let x = if i + 1 == args.n {
            1.0
        } else {
            i as f64 / (args.n - 1) as f64
        };
        // the x = 1 row goes through the closed endpoint form inside gap()
        rows.push((x, b.eval(x)?, arcsin(x)?, gap(b, x)?));
    }
    let content = match output.format {
        Format::Json => {
            let items: Vec<serde_json::Value> = rows
                .iter()
                .map(|(x, f, a, g)| {
                    serde_json::json!({ "x": x, "f_b": f, "asin": a, "gap": g })
                })
                .collect();
            serde_json::to_string_pretty(&serde_json::json!({ "b": args.b, "rows": items }))
                .expect("table serialization cannot fail")
        }
        Format::Csv => {
            let mut s = String::from("x,f_b,asin,gap\n");
            for (x, f, a, g) in &rows {
                s.push_str(&format!(
                    "{},{},{},{}\n",
                    output.float(*x),
                    output.float(*f),
                    output.float(*a),
                    output.float(*g)
                ));
            }
            s
        }
        Format::Human => {
            let mut s = format!(
                "{:>24} {:>24} {:>24} {:>24}\n",
                "x", "f_b", "asin", "gap"
            );
            for (x, f, a, g) in &rows {
                s.push_str(&format!(
                    "{:>24} {:>24} {:>24} {:>24}\n",
                    output.float(*x),
                    output.float(*f),
                    output.float(*a),
                    output.float(*g)
                ));
            }
            s
        }
    };
    output.emit(content)?;
    Ok(0)
}

fn cmd_classify(args: &ClassifyArgs, output: &Output) -> Result<u8, Error> {
    let c = classify(args.b)?;
    let report = max_gap(ReducedParam::new(args.b)?)?;
    let content = match output.format {
        Format::Json => serde_json::to_string_pretty(&serde_json::json!({
            "b": c.b,
            "regime": c.tag,
            "golden_ratio": c.thresholds.golden_ratio,
            "b1": c.thresholds.b1,
            "b2": c.thresholds.b2,
            "critical_point": c.critical_point,
            "endpoint_gap": c.endpoint_gap,
            "max_gap": report.max_gap,
            "argmax_x": report.argmax_x,
        }))
        .expect("classification serialization cannot fail"),
        Format::Csv => format!(
            "b,regime,golden_ratio,b1,b2,critical_point,endpoint_gap\n{},{},{},{},{},{},{}\n",
            output.float(c.b),
            c.tag,
            output.float(c.thresholds.golden_ratio),
            output.float(c.thresholds.b1),
            output.float(c.thresholds.b2),
            c.critical_point
                .map(|d| output.float(d))
                .unwrap_or_default(),
            output.float(c.endpoint_gap)
        ),
        Format::Human => {
            let d = c
                .critical_point
                .map(|d| output.float(d))
                .unwrap_or_else(|| "undefined".into());
            format!(
                "b:              {}\nregime:         {}\n\
                 thresholds:     golden ratio {}, b1 {}, b2 {}\n\
                 critical point: {d}\nendpoint gap:   {}\n",
                output.float(c.b),
                c.tag,
                output.float(c.thresholds.golden_ratio),
                output.float(c.thresholds.b1),
                output.float(c.thresholds.b2),
                output.float(c.endpoint_gap)
            )
        }
    };
    output.emit(content)?;
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_formatting_round_trips_at_full_precision() {
        let v = 0.013289073486973547;
        assert_eq!(format_float(v, 17).parse::<f64>().unwrap(), v);
        // 12 significant digits: relative error at most 10^(1-12)
        let s = format_float(v, 12);
        let back: f64 = s.parse().unwrap();
        assert!((back - v).abs() <= 1e-11 * v.abs());
    }

    #[test]
    fn domain_and_equality_parsing() {
        assert_eq!(parse_domain("0,1").unwrap(), [0.0, 1.0]);
        assert_eq!(parse_domain(" 0.25 , 0.75 ").unwrap(), [0.25, 0.75]);
        assert!(parse_domain("0").is_err());
        assert!(parse_domain("a,b").is_err());

        let target = ClaimTarget::Reduced(ReducedParam::new(2.0).unwrap());
        assert_eq!(
            resolve_equality("none", &target, [0.0, 1.0]).unwrap(),
            Vec::<f64>::new()
        );
        // h_2(0) = 0, h_2(1) < 0: auto keeps only the origin
        assert_eq!(
            resolve_equality("auto", &target, [0.0, 1.0]).unwrap(),
            vec![0.0]
        );
        assert_eq!(
            resolve_equality("0,0.5", &target, [0.0, 1.0]).unwrap(),
            vec![0.0, 0.5]
        );
        assert!(resolve_equality("x", &target, [0.0, 1.0]).is_err());
    }

    #[test]
    fn endpoint_gap_consistency_in_table_rows() {
        // the table's x = 1 row must match the closed form exactly
        let b = ReducedParam::new(1.8).unwrap();
        assert_eq!(gap(b, 1.0).unwrap(), crate::functions::endpoint_gap(b));
    }
}
