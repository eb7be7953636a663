//! Command-line front end: argument parsing, dispatch and rendering.
//!
//! [`run`] never prints; it returns the exit code together with the text for
//! stdout and stderr so that tests can drive it in-process.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use gordian::adjacency::{
    cbar_trivial_bracket, cbar_upper_bound, check_algebraic_adjacency_sufficient,
    check_gordian_adjacency, compare_notions, gordian_distance_bounds, index2_candidate_scan,
    Provenance,
};
use gordian::angle::fraction_string;
use gordian::braid::cert::{verify_certificate_with_limits, VerifyLimits};
use gordian::braid::{generate_prop21_certificate, Certificate};
use gordian::signature::{
    classical_signature, is_regular, lt_signature, signature_defect, signature_profile,
};
use gordian::{Angle, TorusKnot};

const MAX_SCAN_M: u64 = 2000;
const MAX_SCAN_U: u64 = 500;
const MAX_DEPTH: u32 = 8;

#[derive(Debug, Parser)]
#[command(
    name = "gordian",
    version,
    about = "Torus-knot signatures, Gordian adjacency and crossing-change certificates"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum NotionArg {
    Gordian,
    Algebraic,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Levine-Tristram signature of T(p,q) at ω = e^{2πiθ}.
    Sig {
        p: i64,
        q: i64,
        /// Angle as a reduced fraction a/b in (0,1).
        #[arg(long, default_value = "1/2")]
        theta: String,
    },
    /// Piecewise-constant signature function of T(p,q) on (0,1).
    Profile { p: i64, q: i64 },
    /// Unknotting number of T(p,q).
    Unknot { p: i64, q: i64 },
    /// Decide whether T(p,q) is adjacent to T(r,s).
    Adjacent {
        p: i64,
        q: i64,
        r: i64,
        s: i64,
        #[arg(long, value_enum, default_value = "gordian")]
        notion: NotionArg,
        /// Search depth for algebraic rule chains.
        #[arg(long, default_value_t = 4)]
        depth: u32,
    },
    /// Lower and upper bounds on the Gordian distance.
    Distance {
        p: i64,
        q: i64,
        r: i64,
        s: i64,
        /// Largest unknotting number of a common neighbor to try.
        #[arg(long, default_value_t = 10)]
        budget: u64,
    },
    /// Upper bound on the limsup ratio c̄(a,b).
    Cbar { a: i64, b: i64 },
    /// Generate a crossing-change certificate.
    Certify {
        #[command(subcommand)]
        family: CertifyFamily,
    },
    /// Replay and check a certificate file.
    Verify { file: PathBuf },
    /// Truth table of T(2,n) against T(3,m).
    ScanIndex23 {
        #[arg(long)]
        max_m: u64,
        /// Largest odd n; defaults to 2·max-m + 1.
        #[arg(long)]
        max_n: Option<u64>,
    },
    /// Torus knots with u(T) = σ(T)/2.
    ScanDefect {
        #[arg(long)]
        max_u: u64,
    },
    /// Gordian verdict against algebraic derivability.
    CompareNotions {
        p: i64,
        q: i64,
        r: i64,
        s: i64,
        #[arg(long, default_value_t = 4)]
        depth: u32,
    },
}

#[derive(Debug, Subcommand)]
enum CertifyFamily {
    /// T(2,2k+1) to T(3,⌊3k/2+1⌋).
    Prop21 {
        k: u64,
        /// Output file; stdout when absent.
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Exit status for rejected input.
pub const EXIT_INVALID_INPUT: i32 = 1;
/// Exit status for a certificate that does not verify.
pub const EXIT_VERIFICATION_FAILED: i32 = 2;

struct Failure {
    code: i32,
    message: String,
    /// Report still worth printing, e.g. a failed verification.
    stdout: String,
}

fn invalid(message: impl std::fmt::Display) -> Failure {
    Failure {
        code: EXIT_INVALID_INPUT,
        message: message.to_string(),
        stdout: String::new(),
    }
}

fn with_newline(mut s: String) -> String {
    if !s.is_empty() && !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

type CmdResult = Result<String, Failure>;

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let line = text
                    .lines()
                    .find(|l| !l.trim().is_empty())
                    .unwrap_or("error: invalid arguments");
                Outcome {
                    code: EXIT_INVALID_INPUT,
                    stdout: String::new(),
                    stderr: format!("{line}\n"),
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match dispatch(&cli) {
        Ok(stdout) => Outcome {
            code: 0,
            stdout: with_newline(stdout),
            stderr: String::new(),
        },
        Err(f) => Outcome {
            code: f.code,
            stdout: with_newline(f.stdout),
            stderr: format!("error: {}\n", f.message),
        },
    }
}

fn knot(p: i64, q: i64) -> Result<TorusKnot, Failure> {
    TorusKnot::new(p, q).map_err(invalid)
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn dispatch(cli: &Cli) -> CmdResult {
    let json = cli.json;
    match &cli.command {
        Command::Sig { p, q, theta } => sig(knot(*p, *q)?, theta, json),
        Command::Profile { p, q } => profile(knot(*p, *q)?, json),
        Command::Unknot { p, q } => unknot(knot(*p, *q)?, json),
        Command::Adjacent {
            p,
            q,
            r,
            s,
            notion,
            depth,
        } => adjacent(
            knot(*p, *q)?,
            knot(*r, *s)?,
            *notion,
            check_depth(*depth)?,
            json,
        ),
        Command::Distance { p, q, r, s, budget } => {
            distance(knot(*p, *q)?, knot(*r, *s)?, *budget, json)
        }
        Command::Cbar { a, b } => cbar(*a, *b, json),
        Command::Certify {
            family: CertifyFamily::Prop21 { k, output },
        } => certify(*k, output.as_ref(), json),
        Command::Verify { file } => verify(file, json),
        Command::ScanIndex23 { max_m, max_n } => {
            scan_index23(*max_m, max_n.unwrap_or(2 * max_m + 1), json)
        }
        Command::ScanDefect { max_u } => scan_defect(*max_u, json),
        Command::CompareNotions { p, q, r, s, depth } => {
            notions(knot(*p, *q)?, knot(*r, *s)?, check_depth(*depth)?, json)
        }
    }
}

fn check_depth(depth: u32) -> Result<u32, Failure> {
    if depth > MAX_DEPTH {
        return Err(invalid(format!(
            "depth {depth} exceeds the limit {MAX_DEPTH}"
        )));
    }
    Ok(depth)
}

fn sig(k: TorusKnot, theta: &str, json: bool) -> CmdResult {
    let angle: Angle = theta.parse().map_err(invalid)?;
    let value = lt_signature(k, angle);
    let regular = is_regular(k, angle);
    if json {
        return Ok(to_json(&json!({
            "knot": k,
            "theta": angle.to_string(),
            "signature": value,
            "regular": regular,
        })));
    }
    let mut out = value.to_string();
    if !regular {
        out.push_str("  (θ is a root of the Alexander polynomial)");
    }
    Ok(out)
}

fn profile(k: TorusKnot, json: bool) -> CmdResult {
    let prof = signature_profile(k);
    if json {
        return Ok(to_json(&prof));
    }
    let mut out = format!(
        "{k}: {} intervals, max {}\n",
        prof.values.len(),
        prof.max_value()
    );
    let ends: Vec<String> = std::iter::once("0".to_string())
        .chain(prof.breakpoints.iter().map(fraction_string))
        .chain(std::iter::once("1".to_string()))
        .collect();
    let width = ends.iter().map(String::len).max().unwrap_or(1);
    for (i, v) in prof.values.iter().enumerate() {
        writeln!(
            out,
            "({:>width$}, {:>width$})  {v:>4}",
            ends[i],
            ends[i + 1]
        )
        .unwrap();
    }
    Ok(out)
}

fn unknot(k: TorusKnot, json: bool) -> CmdResult {
    let u = k.unknotting_number();
    if json {
        return Ok(to_json(&json!({ "knot": k, "unknotting_number": u })));
    }
    Ok(u.to_string())
}

fn describe(p: &Provenance) -> String {
    match p {
        Provenance::Trivial { reason } => reason.clone(),
        Provenance::ParameterDomination => "parameter domination".into(),
        Provenance::IndexTwoThree { n, m } => format!("3·{n} <= 4·{m} + 1"),
        Provenance::IndexTwoThreeNegative { n, m } => format!("3·{n} > 4·{m} + 1"),
        Provenance::Certificate { reference } => format!("certificate {reference}"),
        Provenance::UObstruction { u1, u2 } => format!("unknotting numbers {u1} >= {u2}"),
        Provenance::SignatureObstruction { witness } => format!(
            "signature at θ = {}: {} > {}",
            fraction_string(&witness.theta),
            witness.sigma1,
            witness.sigma2
        ),
        Provenance::DistanceObstruction {
            lower_bound,
            u_difference,
        } => format!(
            "distance at least {lower_bound} exceeds the unknotting-number gap {u_difference}"
        ),
        Provenance::NoRule => "no rule applies".into(),
    }
}

fn status_word(s: gordian::adjacency::AdjacencyStatus) -> &'static str {
    use gordian::adjacency::AdjacencyStatus::*;
    match s {
        Adjacent => "adjacent",
        NotAdjacent => "not adjacent",
        Undetermined => "undetermined",
    }
}

fn adjacent(a: TorusKnot, b: TorusKnot, notion: NotionArg, depth: u32, json: bool) -> CmdResult {
    match notion {
        NotionArg::Gordian => {
            let v = check_gordian_adjacency(a, b);
            if json {
                return Ok(to_json(&v));
            }
            let mut out = format!(
                "{a} <=g {b}: {} ({})",
                status_word(v.status),
                describe(&v.provenance)
            );
            if let Some(note) = &v.annotation {
                write!(out, "\nnote: {note}").unwrap();
            }
            Ok(out)
        }
        NotionArg::Algebraic => {
            let d = check_algebraic_adjacency_sufficient(a, b, depth);
            if json {
                return Ok(to_json(&d));
            }
            let verdict = if d.derivable {
                "derivable"
            } else {
                "not derived"
            };
            let mut out = format!("{a} <=a {b}: {verdict} within depth {depth}");
            for step in &d.chain {
                write!(
                    out,
                    "\n  {} -> {} ({})",
                    step.from,
                    step.to,
                    rule_name(step.rule)
                )
                .unwrap();
            }
            write!(out, "\nassumption: {}", d.assumption).unwrap();
            Ok(out)
        }
    }
}

fn rule_name(r: gordian::adjacency::AlgebraicRule) -> &'static str {
    match r {
        gordian::adjacency::AlgebraicRule::ParameterDomination => "parameter domination",
        gordian::adjacency::AlgebraicRule::StrandExchange => "strand exchange",
    }
}

fn distance(a: TorusKnot, b: TorusKnot, budget: u64, json: bool) -> CmdResult {
    if budget > MAX_SCAN_U {
        return Err(invalid(format!(
            "budget {budget} exceeds the limit {MAX_SCAN_U}"
        )));
    }
    let d = gordian_distance_bounds(a, b, budget);
    if json {
        return Ok(to_json(&d));
    }
    let mut out = format!("d({a}, {b})\n");
    writeln!(
        out,
        "lower {}  (unknotting gap {}, signature bound {})",
        d.lower.value, d.lower.u_difference, d.lower.signature_bound
    )
    .unwrap();
    write!(
        out,
        "upper {}  (common neighbor {})",
        d.upper.value, d.upper.common_neighbor
    )
    .unwrap();
    Ok(out)
}

fn cbar(a: i64, b: i64, json: bool) -> CmdResult {
    let bound = cbar_upper_bound(a, b).map_err(invalid)?;
    let (lo, hi) = cbar_trivial_bracket(a, b).map_err(invalid)?;
    if json {
        return Ok(to_json(&json!({
            "a": a,
            "b": b,
            "upper_bound": fraction_string(&bound),
            "trivial_lower": fraction_string(&lo),
            "trivial_upper": fraction_string(&hi),
        })));
    }
    Ok(fraction_string(&bound))
}

fn certify(k: u64, output: Option<&PathBuf>, json: bool) -> CmdResult {
    let cert = generate_prop21_certificate(k).map_err(invalid)?;
    let text = cert.to_json_pretty();
    let Some(path) = output else {
        return Ok(text);
    };
    std::fs::write(path, format!("{text}\n"))
        .map_err(|e| invalid(format!("{}: {e}", path.display())))?;
    let m = (3 * k + 2) / 2;
    if json {
        return Ok(to_json(&json!({
            "file": path.display().to_string(),
            "from": format!("T(2,{})", 2 * k + 1),
            "to": format!("T(3,{m})"),
            "steps": cert.steps.len(),
            "crossing_changes": cert.crossing_changes,
        })));
    }
    Ok(format!(
        "wrote {}: T(2,{}) to T(3,{m}), {} steps, {} crossing changes",
        path.display(),
        2 * k + 1,
        cert.steps.len(),
        cert.crossing_changes
    ))
}

fn verify(file: &PathBuf, json: bool) -> CmdResult {
    let limits = VerifyLimits::default();
    let meta = std::fs::metadata(file).map_err(|e| invalid(format!("{}: {e}", file.display())))?;
    if meta.len() > 16 * 1024 * 1024 {
        return Err(invalid(format!("{}: file too large", file.display())));
    }
    let text =
        std::fs::read_to_string(file).map_err(|e| invalid(format!("{}: {e}", file.display())))?;
    let cert = Certificate::from_json_str(&text).map_err(invalid)?;
    let report = verify_certificate_with_limits(&cert, &limits);
    let closure = |k: Option<TorusKnot>| k.map_or("unrecognized".to_string(), |k| k.to_string());
    let body = if json {
        to_json(&report)
    } else {
        let mut out = format!(
            "{}: {} to {}, {} crossing changes ({} negative to positive, {} positive to negative)",
            if report.valid { "valid" } else { "INVALID" },
            closure(report.initial_closure),
            closure(report.final_closure),
            report.crossing_changes,
            report.negative_to_positive,
            report.positive_to_negative
        );
        if let Some(f) = &report.failure {
            match f.step {
                Some(i) => write!(out, "\nstep {i}: {}", f.reason).unwrap(),
                None => write!(out, "\n{}", f.reason).unwrap(),
            }
        }
        out
    };
    if report.valid {
        Ok(body)
    } else {
        let message = match report.failure.as_ref().and_then(|f| f.step) {
            Some(i) => format!("certificate does not verify (step {i})"),
            None => "certificate does not verify".to_string(),
        };
        Err(Failure {
            code: EXIT_VERIFICATION_FAILED,
            message,
            stdout: body,
        })
    }
}

#[derive(Serialize)]
struct Index23Row {
    n: u64,
    m: u64,
    adjacent: bool,
    criterion: bool,
    provenance: Provenance,
}

fn scan_index23(max_m: u64, max_n: u64, json: bool) -> CmdResult {
    if max_m > MAX_SCAN_M || max_n > 2 * MAX_SCAN_M + 1 {
        return Err(invalid(format!(
            "scan range exceeds the limit m <= {MAX_SCAN_M}"
        )));
    }
    let mut rows = Vec::new();
    for m in (1..=max_m).filter(|m| m % 3 != 0) {
        for n in (1..=max_n).step_by(2) {
            let v = check_gordian_adjacency(knot(2, n as i64)?, knot(3, m as i64)?);
            rows.push(Index23Row {
                n,
                m,
                adjacent: v.is_adjacent(),
                criterion: 3 * n <= 4 * m + 1,
                provenance: v.provenance,
            });
        }
    }
    if json {
        return Ok(to_json(&rows));
    }
    let mut out = String::from("   n    m  adjacent  rule\n");
    for r in &rows {
        writeln!(
            out,
            "{:>4} {:>4}  {:<8}  {}",
            r.n,
            r.m,
            if r.adjacent { "yes" } else { "no" },
            describe(&r.provenance)
        )
        .unwrap();
    }
    Ok(out)
}

fn scan_defect(max_u: u64, json: bool) -> CmdResult {
    if max_u > MAX_SCAN_U {
        return Err(invalid(format!(
            "max-u {max_u} exceeds the limit {MAX_SCAN_U}"
        )));
    }
    let knots = index2_candidate_scan(max_u);
    if json {
        let rows: Vec<_> = knots
            .iter()
            .map(|k| {
                json!({
                    "knot": k,
                    "unknotting_number": k.unknotting_number(),
                    "signature": classical_signature(*k),
                    "defect": signature_defect(*k),
                })
            })
            .collect();
        return Ok(to_json(&rows));
    }
    let mut out = String::from("knot        u  signature\n");
    for k in &knots {
        writeln!(
            out,
            "{:<10} {:>2}  {:>9}",
            k.to_string(),
            k.unknotting_number(),
            classical_signature(*k)
        )
        .unwrap();
    }
    Ok(out)
}

fn notions(a: TorusKnot, b: TorusKnot, depth: u32, json: bool) -> CmdResult {
    let c = compare_notions(a, b, depth);
    if json {
        return Ok(to_json(&c));
    }
    Ok(format!(
        "gordian:   {} ({})\nalgebraic: {}\ndiverge:   {}",
        status_word(c.gordian.status),
        describe(&c.gordian.provenance),
        if c.algebraic.derivable {
            "derivable"
        } else {
            "not derived"
        },
        if c.diverge { "yes" } else { "no" }
    ))
}
