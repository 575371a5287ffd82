//! Command-line front end. One verb per library operation.
//!
//! Exit codes: 0 success, 1 domain error (the library's message on stderr),
//! 2 parse or usage error.

use std::io::Write;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use intdiff::action::{self, AnalysisReport};
use intdiff::bquot::{self, B1Element};
use intdiff::centralizer;
use intdiff::exactmath::XPoly;
use intdiff::lang::{parse, parse_xpoly};
use intdiff::opcore::json::{poly_json, to_json};
use intdiff::units;
use intdiff::{Error, Operator};

#[derive(Parser, Debug)]
#[command(name = "intdiff", about = "Exact arithmetic with polynomial integro-differential operators")]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Window override for analyze, solve, centralizer and commutant.
    #[arg(long, global = true)]
    window: Option<usize>,
    /// Sample count for linvset.
    #[arg(long, global = true, default_value_t = 2)]
    count: usize,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Canonical form of an operator.
    Canon { #[arg(allow_hyphen_values = true)] a: Expr },
    Add { #[arg(allow_hyphen_values = true)] a: Expr, #[arg(allow_hyphen_values = true)] b: Expr },
    Mul { #[arg(allow_hyphen_values = true)] a: Expr, #[arg(allow_hyphen_values = true)] b: Expr },
    Star { #[arg(allow_hyphen_values = true)] a: Expr },
    /// Image of a polynomial in x.
    Apply { #[arg(allow_hyphen_values = true)] a: Expr, #[arg(allow_hyphen_values = true)] p: Expr },
    /// Finite section with the given number of columns.
    Truncate { #[arg(allow_hyphen_values = true)] a: Expr, cols: usize },
    Index { #[arg(allow_hyphen_values = true)] a: Expr },
    Analyze { #[arg(allow_hyphen_values = true)] a: Expr },
    Classify { #[arg(allow_hyphen_values = true)] a: Expr },
    Solve { #[arg(allow_hyphen_values = true)] a: Expr, #[arg(allow_hyphen_values = true)] p: Expr },
    /// Preimage under an operator bijective on Q[x].
    Invapply { #[arg(allow_hyphen_values = true)] a: Expr, #[arg(allow_hyphen_values = true)] p: Expr },
    Leftinv { #[arg(allow_hyphen_values = true)] a: Expr },
    Rightinv { #[arg(allow_hyphen_values = true)] a: Expr },
    /// Several left inverses (see --count).
    Linvset { #[arg(allow_hyphen_values = true)] a: Expr },
    Det { #[arg(allow_hyphen_values = true)] a: Expr },
    Unitinv { #[arg(allow_hyphen_values = true)] a: Expr },
    Kappa { #[arg(allow_hyphen_values = true)] u: Expr, n: usize },
    Regularity { #[arg(allow_hyphen_values = true)] a: Expr },
    Commutes { #[arg(allow_hyphen_values = true)] a: Expr, #[arg(allow_hyphen_values = true)] b: Expr },
    Centralizer { #[arg(allow_hyphen_values = true)] a: Expr },
    /// Commutant inside F up to the window (default 4).
    Commutant { #[arg(allow_hyphen_values = true)] a: Expr },
    /// Image in the quotient by F.
    Project { #[arg(allow_hyphen_values = true)] a: Expr },
    B1mul { #[arg(allow_hyphen_values = true)] a: Expr, #[arg(allow_hyphen_values = true)] b: Expr },
    Isnormal { #[arg(allow_hyphen_values = true)] b: Expr },
    Normalize { #[arg(allow_hyphen_values = true)] b: Expr },
    Trace { #[arg(allow_hyphen_values = true)] a: Expr },
    Degf { #[arg(allow_hyphen_values = true)] a: Expr },
}

/// A positional expression; hyphen-leading values such as `-D` are allowed.
#[derive(Clone, Debug)]
struct Expr(String);

impl std::str::FromStr for Expr {
    type Err = std::convert::Infallible;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(Expr(s.to_string()))
    }
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_parse() {
            Failure::Usage(e.to_string())
        } else {
            Failure::Domain(e.to_string())
        }
    }
}

type Outcome = Result<(String, Value), Failure>;

fn op(e: &Expr) -> Result<Operator, Failure> {
    Ok(parse(&e.0)?)
}

fn poly(e: &Expr) -> Result<XPoly, Failure> {
    Ok(parse_xpoly(&e.0)?)
}

fn b1(e: &Expr) -> Result<B1Element, Failure> {
    Ok(bquot::parse_b1(&e.0)?)
}

fn operator_out(a: &Operator) -> Outcome {
    let mut v = to_json(a);
    v["text"] = json!(a.to_string());
    Ok((a.to_string(), v))
}

fn b1_out(b: &B1Element) -> Outcome {
    let mut v = b.to_json();
    v["text"] = json!(b.to_string());
    Ok((b.to_string(), v))
}

fn poly_set(ps: &[XPoly]) -> String {
    let items: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
    format!("{{{}}}", items.join(", "))
}

fn report_text(r: &AnalysisReport) -> String {
    format!(
        "index: {}\nkernel: {}\ncokernel: {}\ninjective: {}\nsurjective: {}\nbijective: {}\nwindow: {}",
        r.index,
        poly_set(&r.kernel_basis),
        poly_set(&r.cokernel_basis),
        r.injective,
        r.surjective,
        r.bijective,
        r.window_used
    )
}

fn flags_text(pairs: &[(&str, bool)]) -> String {
    pairs.iter().map(|(k, v)| format!("{k}: {v}")).collect::<Vec<_>>().join("\n")
}

fn witness_out(w: Option<units::OneSidedWitness>) -> Outcome {
    match w {
        None => Ok(("none".into(), Value::Null)),
        Some(w) => Ok((
            format!("n: {}\nunit factor: {}\ninverse: {}", w.n, w.unit_factor, w.inverse),
            w.to_json(),
        )),
    }
}

fn scalar_out(c: &intdiff::Q) -> Outcome {
    Ok((c.to_string(), json!(c.to_string())))
}

fn execute(cli: &Cli) -> Outcome {
    let window = cli.window;
    match &cli.verb {
        Verb::Canon { a } => operator_out(&op(a)?),
        Verb::Add { a, b } => operator_out(&(&op(a)? + &op(b)?)),
        Verb::Mul { a, b } => operator_out(&op(a)?.mul(&op(b)?)),
        Verb::Star { a } => operator_out(&op(a)?.star()),
        Verb::Apply { a, p } => {
            let q = action::apply(&op(a)?, &poly(p)?);
            Ok((q.to_string(), serde_json::to_value(poly_json(&q)).unwrap()))
        }
        Verb::Truncate { a, cols } => {
            let t = action::truncation(&op(a)?, *cols);
            Ok((t.to_string().trim_end().to_string(), t.to_json()))
        }
        Verb::Index { a } => {
            let i = action::index(&op(a)?)?;
            Ok((i.to_string(), json!(i)))
        }
        Verb::Analyze { a } => {
            let r = action::analyze_window(&op(a)?, window)?;
            Ok((report_text(&r), r.to_json()))
        }
        Verb::Classify { a } => {
            let c = action::classify_structural(&op(a)?)?;
            let text = flags_text(&[("injective", c.injective), ("surjective", c.surjective), ("bijective", c.bijective)]);
            Ok((text, serde_json::to_value(c).unwrap()))
        }
        Verb::Solve { a, p } => {
            let s = action::solve_window(&op(a)?, &poly(p)?, window)?;
            let particular = s.particular.as_ref().map_or("none".to_string(), |q| q.to_string());
            Ok((format!("particular: {particular}\nhomogeneous: {}", poly_set(&s.homogeneous_basis)), s.to_json()))
        }
        Verb::Invapply { a, p } => {
            let q = action::apply_inverse(&op(a)?, &poly(p)?)?;
            Ok((q.to_string(), serde_json::to_value(poly_json(&q)).unwrap()))
        }
        Verb::Leftinv { a } => witness_out(units::left_inverse(&op(a)?)?),
        Verb::Rightinv { a } => witness_out(units::right_inverse(&op(a)?)?),
        Verb::Linvset { a } => {
            let items = units::left_inverse_set_sample(&op(a)?, cli.count)?;
            let text = items.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("\n");
            let values: Vec<Value> = items
                .iter()
                .map(|v| {
                    let mut j = to_json(v);
                    j["text"] = json!(v.to_string());
                    j
                })
                .collect();
            Ok((text, Value::Array(values)))
        }
        Verb::Det { a } => scalar_out(&units::det_kf(&op(a)?)?),
        Verb::Unitinv { a } => operator_out(&units::unit_inverse(&op(a)?)?),
        Verb::Kappa { u, n } => operator_out(&units::kappa_shift(&op(u)?, *n)?),
        Verb::Regularity { a } => {
            let r = units::regularity(&op(a)?)?;
            let text =
                flags_text(&[("left_regular", r.left_regular), ("right_regular", r.right_regular), ("regular", r.regular)]);
            Ok((text, serde_json::to_value(r).unwrap()))
        }
        Verb::Commutes { a, b } => {
            let c = centralizer::commutes(&op(a)?, &op(b)?);
            Ok((c.to_string(), json!(c)))
        }
        Verb::Centralizer { a } => {
            let c = centralizer::centralizer(&op(a)?, window.unwrap_or(6))?;
            Ok((c.to_string(), c.to_json()))
        }
        Verb::Commutant { a } => {
            let n = window.unwrap_or(4);
            let basis = centralizer::commutant_in_f(&op(a)?, n);
            let mut lines: Vec<String> = basis.iter().map(|b| b.to_string()).collect();
            lines.push(format!("dimension: {} (within window {n})", basis.len()));
            let values: Vec<Value> = basis.iter().map(to_json).collect();
            Ok((lines.join("\n"), json!({ "window": n, "dimension": basis.len(), "basis": values })))
        }
        Verb::Project { a } => b1_out(&bquot::project(&op(a)?)),
        Verb::B1mul { a, b } => b1_out(&bquot::b1_mul(&b1(a)?, &b1(b)?)),
        Verb::Isnormal { b } => {
            let n = bquot::is_normal(&b1(b)?)?;
            Ok((n.to_string(), json!(n)))
        }
        Verb::Normalize { b } => {
            let n = bquot::normalize(&b1(b)?)?;
            Ok((format!("alpha: {}\nbeta: {}\nnormal: {}", n.alpha, n.beta, n.normal), n.to_json()))
        }
        Verb::Trace { a } => scalar_out(&op(a)?.trace_f()?),
        Verb::Degf { a } => {
            let d = op(a)?.deg_f();
            Ok((d.to_string(), json!(d)))
        }
    }
}

/// Run with `args` excluding the program name.
pub fn run<S: AsRef<str>>(args: &[S], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let argv = std::iter::once("intdiff").chain(args.iter().map(|s| s.as_ref()));
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match execute(&cli) {
        Ok((text, value)) => {
            let body = if cli.json { serde_json::to_string_pretty(&value).unwrap() } else { text };
            let _ = writeln!(out, "{body}");
            0
        }
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
        Err(Failure::Domain(m)) => {
            let _ = writeln!(err, "error: {m}");
            1
        }
    }
}
