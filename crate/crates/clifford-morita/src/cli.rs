//! Command-line interface: calc, classify, table, verify.

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::algebra::{clifford_complex, clifford_real};
use crate::blade::Signature;
use crate::classify::{
    complex_basic_class, oracle_classify_complex, oracle_classify_real, real_basic_class,
    realize_complex, realize_real,
};
use crate::error::{Error, Result};
use crate::grothendieck::{emit_table, grothendieck_complex, grothendieck_real, Format};
use crate::modules::Twist;
use crate::morita::{DEFAULT_SEED, DEFAULT_TRIALS};
use crate::parser::{eval_expr, parse_expr, print_expr};
use crate::verify::{run_checks, CheckStatus};

#[derive(Parser)]
#[command(
    name = "clifford-morita",
    version,
    about = "Exact graded Morita theory for real and complex Clifford superalgebras"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate a Clifford algebra expression to canonical form.
    Calc {
        /// Scalar field: real (ℚ) or complex (ℚ(𝕚)).
        #[arg(long, default_value = "real")]
        field: String,
        /// Generators squaring to +1.
        #[arg(short, default_value_t = 0)]
        p: usize,
        /// Generators squaring to −1.
        #[arg(short, default_value_t = 0)]
        q: usize,
        /// Generators squaring to 0 (real field only).
        #[arg(short, default_value_t = 0)]
        r: usize,
        #[arg(long, default_value = "text")]
        format: String,
        /// Expression, e.g. "(e1*e2+1)*(e1*e2-1)".
        expr: String,
    },
    /// Graded Morita class of R_{p,q,r} or C_{p,q}.
    Classify {
        #[arg(long, default_value = "real")]
        field: String,
        #[arg(short, default_value_t = 0)]
        p: usize,
        #[arg(short, default_value_t = 0)]
        q: usize,
        #[arg(short, default_value_t = 0)]
        r: usize,
        /// Twist functor: sigma or pi.
        #[arg(long, default_value = "sigma")]
        functor: String,
        /// Cross-check with the brute-force reduction oracle (dim ≤ 256).
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Emit a Theorem-5 table: real-basic, real-k, complex-basic, complex-k.
    Table {
        kind: String,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Run named verification checks re-proving the paper's lemmas.
    Verify {
        /// all, dc, dd, dddd, hh, d8, complex-dd, modules, tensor-law.
        #[arg(long, default_value = "all")]
        check: String,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        #[arg(long, default_value = "text")]
        format: String,
    },
}

fn parse_twist(s: &str) -> Result<Twist> {
    match s {
        "sigma" => Ok(Twist::Sigma),
        "pi" => Ok(Twist::Pi),
        other => Err(Error::UnknownCheck(format!("unknown functor: {other}"))),
    }
}

fn cmd_calc(
    field: &str,
    p: usize,
    q: usize,
    r: usize,
    format: Format,
    expr: &str,
) -> Result<String> {
    match field {
        "real" => {
            let sig = Signature::real(p, q, r)?;
            let a = clifford_real(p, q, r)?;
            let ast = parse_expr(expr, &sig, false)?;
            let value = eval_expr(&ast, &a)?;
            let rendered = a.format_element(&value);
            Ok(match format {
                Format::Json => serde_json::to_string_pretty(&json!({
                    "field": "real",
                    "signature": [p, q, r],
                    "expr": expr,
                    "printed": print_expr(&ast),
                    "value": rendered,
                }))
                .unwrap(),
                _ => rendered,
            })
        }
        "complex" => {
            if r != 0 {
                return Err(Error::Scope(
                    "complex signatures are C_{p,q}; -r is not applicable".to_string(),
                ));
            }
            let sig = Signature::complex(p, q)?;
            let a = clifford_complex(p, q)?;
            let ast = parse_expr(expr, &sig, true)?;
            let value = eval_expr(&ast, &a)?;
            let rendered = a.format_element(&value);
            Ok(match format {
                Format::Json => serde_json::to_string_pretty(&json!({
                    "field": "complex",
                    "signature": [p, q],
                    "expr": expr,
                    "printed": print_expr(&ast),
                    "value": rendered,
                }))
                .unwrap(),
                _ => rendered,
            })
        }
        other => Err(Error::Scope(format!("unknown field: {other}"))),
    }
}

fn cmd_classify(
    field: &str,
    p: usize,
    q: usize,
    r: usize,
    twist: Twist,
    oracle: bool,
    seed: u64,
    trials: usize,
    format: Format,
) -> Result<String> {
    let mut doc = json!({
        "field": field,
        "functor": twist.to_string(),
    });
    let mut lines = Vec::new();
    match field {
        "real" => {
            let class = real_basic_class(p, q, r, twist);
            let realized = realize_real(&class);
            doc["signature"] = json!([p, q, r]);
            doc["class"] = json!(class.to_string());
            doc["realized_graded_dims"] = json!(realized.graded_dims());
            lines.push(format!("R({p},{q},{r})  [{twist}]"));
            lines.push(format!("class: {class}"));
            lines.push(format!(
                "realized dims: {:?} (dim {})",
                realized.graded_dims(),
                realized.dim()
            ));
            if r == 0 {
                let g = grothendieck_real(p, q);
                doc["v"] = json!(g.v);
                doc["irr"] = json!(g.irr_labels);
                doc["k_rank"] = json!(g.group_rank);
                lines.push(format!(
                    "v = {}, Irr = {{{}}}, K = Z^{}",
                    g.v,
                    g.irr_labels.join(", "),
                    g.group_rank
                ));
            }
            if oracle {
                let (oc, unconfirmed) = oracle_classify_real(p, q, r, twist, seed, trials)?;
                let agree = oc == class;
                doc["oracle_class"] = json!(oc.to_string());
                doc["oracle_agrees"] = json!(agree);
                doc["oracle_unconfirmed"] = json!(unconfirmed);
                lines.push(format!(
                    "oracle: {oc} ({}{})",
                    if agree { "agrees" } else { "DISAGREES" },
                    if unconfirmed { ", unconfirmed leaf" } else { "" }
                ));
                if !agree {
                    return Err(Error::Scope(format!(
                        "oracle {oc} disagrees with class arithmetic {class}"
                    )));
                }
            }
        }
        "complex" => {
            if r != 0 {
                return Err(Error::Scope(
                    "complex signatures are C_{p,q}; -r is not applicable".to_string(),
                ));
            }
            let class = complex_basic_class(p, q);
            let realized = realize_complex(&class);
            doc["signature"] = json!([p, q]);
            doc["class"] = json!(class.to_string());
            doc["realized_graded_dims"] = json!(realized.graded_dims());
            lines.push(format!("C({p},{q})  [{twist}]"));
            lines.push(format!("class: {class}"));
            lines.push(format!(
                "realized dims: {:?} (dim {})",
                realized.graded_dims(),
                realized.dim()
            ));
            if q == 0 {
                let g = grothendieck_complex(p);
                doc["v"] = json!(g.v);
                doc["irr"] = json!(g.irr_labels);
                doc["k_rank"] = json!(g.group_rank);
                lines.push(format!(
                    "v = {}, Irr = {{{}}}, K = Z^{}",
                    g.v,
                    g.irr_labels.join(", "),
                    g.group_rank
                ));
            }
            if oracle {
                let (oc, unconfirmed) = oracle_classify_complex(p, q, twist, seed, trials)?;
                let agree = oc == class;
                doc["oracle_class"] = json!(oc.to_string());
                doc["oracle_agrees"] = json!(agree);
                doc["oracle_unconfirmed"] = json!(unconfirmed);
                lines.push(format!(
                    "oracle: {oc} ({}{})",
                    if agree { "agrees" } else { "DISAGREES" },
                    if unconfirmed { ", unconfirmed leaf" } else { "" }
                ));
                if !agree {
                    return Err(Error::Scope(format!(
                        "oracle {oc} disagrees with class arithmetic {class}"
                    )));
                }
            }
        }
        other => return Err(Error::Scope(format!("unknown field: {other}"))),
    }
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(&doc).unwrap(),
        _ => lines.join("\n"),
    })
}

fn cmd_verify(check: &str, seed: u64, trials: usize, format: Format) -> Result<(String, bool)> {
    let reports = run_checks(check, seed, trials)?;
    let all_pass = reports.iter().all(|r| r.status == CheckStatus::Pass);
    let out = match format {
        Format::Json => serde_json::to_string_pretty(&reports).unwrap(),
        _ => {
            let mut lines = Vec::new();
            for r in &reports {
                let status = match r.status {
                    CheckStatus::Pass => "PASS",
                    CheckStatus::Fail => "FAIL",
                    CheckStatus::Undetermined => "UNDETERMINED",
                };
                lines.push(format!("[{status}] {} ({} ms)", r.name, r.millis));
                for w in &r.witnesses {
                    lines.push(format!("    {w}"));
                }
            }
            lines.join("\n")
        }
    };
    Ok((out, all_pass))
}

fn dispatch(cli: Cli) -> Result<(String, i32)> {
    match cli.cmd {
        Cmd::Calc {
            field,
            p,
            q,
            r,
            format,
            expr,
        } => {
            let fmt = Format::parse(&format)?;
            Ok((cmd_calc(&field, p, q, r, fmt, &expr)?, 0))
        }
        Cmd::Classify {
            field,
            p,
            q,
            r,
            functor,
            oracle,
            seed,
            trials,
            format,
        } => {
            let fmt = Format::parse(&format)?;
            let twist = parse_twist(&functor)?;
            Ok((
                cmd_classify(&field, p, q, r, twist, oracle, seed, trials, fmt)?,
                0,
            ))
        }
        Cmd::Table { kind, format } => {
            let fmt = Format::parse(&format)?;
            Ok((emit_table(&kind, fmt)?, 0))
        }
        Cmd::Verify {
            check,
            seed,
            trials,
            format,
        } => {
            let fmt = Format::parse(&format)?;
            let (out, all_pass) = cmd_verify(&check, seed, trials, fmt)?;
            Ok((out, if all_pass { 0 } else { 1 }))
        }
    }
}

/// Run the CLI programmatically (without the binary name), capturing output.
pub fn run_str(args: &[&str]) -> Result<(String, i32)> {
    let mut full = vec!["clifford-morita"];
    full.extend_from_slice(args);
    let cli = Cli::try_parse_from(&full).map_err(|e| Error::Scope(e.to_string()))?;
    dispatch(cli)
}

/// Entry point; returns the process exit code (0 pass, 1 failure, 2 usage).
pub fn run() -> i32 {
    run_from(std::env::args_os())
}

fn run_from<I>(args: I) -> i32
where
    I: IntoIterator,
    I::Item: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // --help/--version are successful exits.
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok((out, code)) => {
            println!("{out}");
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
