//! Command-line front end: structure-code checks, self-dual subcode search,
//! stabilizer reports, fusion and module queries, McKay-Thompson series, and
//! the scripted length-48 demo.
//!
//! Exit codes: 0 = pass/success, 1 = check failed (witness printed),
//! 2 = usage or parse error, 3 = resource budget exceeded.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use framecode::gf2::{format_code_file, parse_code_file};
use framecode::modules::{fuse, ModuleLabel, ModuleSum};
use framecode::moonshine;
use framecode::qseries::{format_exponent, mckay_thompson, DEFAULT_TRUNC, UNIT};
use framecode::selfdual::find_self_dual_subcode_wrt;
use framecode::stabilizer::{describe_stabilizer, order_of_lift};
use framecode::structcheck::{is_f_admissible, is_f_admissible_via_dual, validate_structure_codes};
use framecode::{Budgets, Codeword, Error, LinearCode};

#[derive(Parser)]
#[command(name = "framecode", version, about = "Binary-code combinatorics of framed vertex operator algebras")]
struct Cli {
    /// Emit machine-readable JSON on stdout instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a structure-code pair (C, D) clause by clause.
    CheckPair {
        c_file: PathBuf,
        d_file: PathBuf,
    },
    /// Check F-admissibility of C by both the clause route and the
    /// triply-even-dual route; the routes must agree.
    CheckAdmissible { c_file: PathBuf },
    /// Search for a self-dual (optionally doubly even) subcode of C_beta
    /// with support exactly beta.
    SelfdualSubcode {
        c_file: PathBuf,
        #[command(flatten)]
        beta: BetaArg,
        /// Require all weights divisible by four.
        #[arg(long)]
        doubly_even: bool,
    },
    /// Report the pointwise frame stabilizer data of a pair (C, D).
    Stabilizer {
        c_file: PathBuf,
        d_file: PathBuf,
        /// Also classify the lift order of this word (bit string).
        #[arg(long)]
        xi: Option<String>,
    },
    /// Fuse two module labels over the same code.
    Fusion {
        c_file: PathBuf,
        /// First label, beta-hex:gamma-hex.
        #[arg(long)]
        m1: String,
        /// Second label, beta-hex:gamma-hex.
        #[arg(long)]
        m2: String,
    },
    /// Top weight, top-level dimension, dual label, and flags of a module.
    ModuleInfo {
        c_file: PathBuf,
        /// Label, beta-hex:gamma-hex.
        #[arg(long)]
        label: String,
    },
    /// McKay-Thompson series of the order-4 lift attached to (D, xi).
    MtSeries {
        d_file: PathBuf,
        /// xi as a bit string of the code length.
        #[arg(long)]
        xi: String,
        /// Truncation as a power of q (exact through q^T).
        #[arg(long, default_value_t = 8)]
        trunc: i64,
    },
    /// Run the scripted length-48 moonshine-frame pipeline.
    MoonshineDemo {
        /// Truncation as a power of q for the series step.
        #[arg(long, default_value_t = 8)]
        trunc: i64,
    },
}

#[derive(Args)]
struct BetaArg {
    /// beta as a bit string of the code length.
    #[arg(long)]
    beta: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Parse(_) => ExitCode::from(2),
                Error::Enumeration { .. } | Error::SearchBudget { .. } => ExitCode::from(3),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn load_code(path: &PathBuf) -> Result<LinearCode, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    let (code, info) = parse_code_file(&text)?;
    if info.declared_k != info.true_rank {
        eprintln!(
            "note: {} declares {} rows but has rank {}",
            path.display(),
            info.declared_k,
            info.true_rank
        );
    }
    Ok(code)
}

fn parse_word(len: usize, bits: &str) -> Result<Codeword, Error> {
    let w = Codeword::from_bits(bits)?;
    if w.len() != len {
        return Err(Error::Parse(format!(
            "bit string has length {}, code has length {len}",
            w.len()
        )));
    }
    Ok(w)
}

fn parse_label(code: &LinearCode, s: &str) -> Result<ModuleLabel, Error> {
    let (b, g) = s
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("label {s:?} is not beta-hex:gamma-hex")))?;
    let beta = Codeword::from_hex(code.len(), b)?;
    let gamma = Codeword::from_hex(code.len(), g)?;
    ModuleLabel::new(code, &beta, &gamma)
}

fn label_string(m: &ModuleLabel, file: &PathBuf) -> String {
    format!(
        "{}:{}@{}",
        m.beta().to_hex(),
        m.gamma().to_hex(),
        file.display()
    )
}

fn sum_json(s: &ModuleSum, file: &PathBuf) -> serde_json::Value {
    json!(s
        .terms
        .iter()
        .map(|(m, mult)| json!({ "label": label_string(m, file), "multiplicity": mult }))
        .collect::<Vec<_>>())
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    let budgets = Budgets::default();
    match &cli.command {
        Command::CheckPair { c_file, d_file } => {
            let c = load_code(c_file)?;
            let d = load_code(d_file)?;
            let report = validate_structure_codes(&c, &d, &budgets)?;
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "pass": report.pass(),
                        "clauses": report.clauses.iter().map(|cl| json!({
                            "name": cl.name,
                            "pass": cl.pass,
                            "witness": cl.witness.as_ref().map(|w| w.to_string()),
                        })).collect::<Vec<_>>(),
                    }))
                    .unwrap()
                );
            } else {
                for cl in &report.clauses {
                    let mark = if cl.pass { "PASS" } else { "FAIL" };
                    match &cl.witness {
                        Some(w) => println!("{mark} {} (witness {w})", cl.name),
                        None => println!("{mark} {}", cl.name),
                    }
                }
            }
            Ok(exit_check(report.pass()))
        }
        Command::CheckAdmissible { c_file } => {
            let c = load_code(c_file)?;
            let report = is_f_admissible(&c, &budgets)?;
            let via_dual = is_f_admissible_via_dual(&c, &budgets)?;
            if report.pass() != via_dual {
                return Err(Error::Internal(format!(
                    "admissibility routes disagree: clauses say {}, dual route says {via_dual}",
                    report.pass()
                )));
            }
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "pass": report.pass(),
                        "via_dual": via_dual,
                        "clauses": report.clauses.iter().map(|cl| json!({
                            "name": cl.name,
                            "pass": cl.pass,
                            "witness": cl.witness.as_ref().map(|w| w.to_string()),
                        })).collect::<Vec<_>>(),
                    }))
                    .unwrap()
                );
            } else {
                for cl in &report.clauses {
                    let mark = if cl.pass { "PASS" } else { "FAIL" };
                    match &cl.witness {
                        Some(w) => println!("{mark} {} (witness {w})", cl.name),
                        None => println!("{mark} {}", cl.name),
                    }
                }
                println!("triply-even-dual route agrees: {via_dual}");
            }
            Ok(exit_check(report.pass()))
        }
        Command::SelfdualSubcode {
            c_file,
            beta,
            doubly_even,
        } => {
            let c = load_code(c_file)?;
            let beta = parse_word(c.len(), &beta.beta)?;
            match find_self_dual_subcode_wrt(&c, &beta, *doubly_even, &budgets)? {
                Some(h) => {
                    if cli.json {
                        println!(
                            "{}",
                            serde_json::to_string_pretty(&json!({
                                "found": true,
                                "dim": h.dim(),
                                "generators": h.basis().iter().map(|b| b.to_string()).collect::<Vec<_>>(),
                            }))
                            .unwrap()
                        );
                    } else {
                        print!("{}", format_code_file(&h, None));
                    }
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    if cli.json {
                        println!("{}", serde_json::to_string_pretty(&json!({ "found": false })).unwrap());
                    } else {
                        println!("none");
                    }
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Stabilizer { c_file, d_file, xi } => {
            let c = load_code(c_file)?;
            let d = load_code(d_file)?;
            let desc = describe_stabilizer(&c, &d)?;
            let xi_order = xi
                .as_ref()
                .map(|s| {
                    let w = parse_word(c.len(), s)?;
                    order_of_lift(&c, &d, &w)
                })
                .transpose()?;
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "dim_p": desc.p.dim(),
                        "tau_rank": desc.tau_rank,
                        "sigma_rank": desc.sigma_rank,
                        "group_order_exp": desc.group_order_exp,
                        "generators": desc.generators.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                        "generator_orders": desc.generator_orders,
                        "commutator_matrix": desc.commutator_matrix,
                        "xi_order": xi_order,
                    }))
                    .unwrap()
                );
            } else {
                println!("dim P = {}", desc.p.dim());
                println!("tau rank = {}", desc.tau_rank);
                println!("sigma rank = {}", desc.sigma_rank);
                println!("group order = 2^{}", desc.group_order_exp);
                for (g, o) in desc.generators.iter().zip(&desc.generator_orders) {
                    println!("generator {g} order {o}");
                }
                for row in &desc.commutator_matrix {
                    println!(
                        "commutator {}",
                        row.iter().map(|b| b.to_string()).collect::<String>()
                    );
                }
                if let Some(o) = xi_order {
                    println!("order_of_lift(xi) = {o}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Fusion { c_file, m1, m2 } => {
            let c = load_code(c_file)?;
            let m1 = parse_label(&c, m1)?;
            let m2 = parse_label(&c, m2)?;
            let sum = fuse(&m1, &m2, &budgets)?;
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({ "sum": sum_json(&sum, c_file) })).unwrap()
                );
            } else {
                for (m, mult) in &sum.terms {
                    println!("{} x{}", label_string(m, c_file), mult);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::ModuleInfo { c_file, label } => {
            let c = load_code(c_file)?;
            let m = parse_label(&c, label)?;
            let tw = m.top_weight(&budgets)?;
            let td = m.top_level_dimension(&budgets)?;
            let dual = m.dual(&budgets)?;
            let self_dual = m.is_self_dual(&budgets)?;
            let simple_current = m.is_simple_current(&budgets)?;
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "label": label_string(&m, c_file),
                        "top_weight": tw.to_string(),
                        "top_level_dimension": td,
                        "dual": label_string(&dual, c_file),
                        "self_dual": self_dual,
                        "simple_current": simple_current,
                    }))
                    .unwrap()
                );
            } else {
                println!("label {}", label_string(&m, c_file));
                println!("top weight = {tw}");
                println!("top level dimension = {td}");
                println!("dual = {}", label_string(&dual, c_file));
                println!("self-dual: {self_dual}");
                println!("simple current: {simple_current}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::MtSeries { d_file, xi, trunc } => {
            let d = load_code(d_file)?;
            let xi = parse_word(d.len(), xi)?;
            let t = trunc
                .checked_mul(UNIT)
                .filter(|&t| t > 0)
                .ok_or_else(|| Error::Parse(format!("bad truncation {trunc}")))?;
            let w_d = d.weight_enumerator(&budgets)?;
            let dxi = d.sum_codes(&LinearCode::from_generators(d.len(), [xi.clone()])?)?;
            if dxi.dim() != d.dim() + 1 {
                return Err(Error::Precondition("xi already lies in D".into()));
            }
            let w_dxi = dxi.weight_enumerator(&budgets)?;
            let series = mckay_thompson(&w_d, &w_dxi, t)?;
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "trunc_48ths": t,
                        "terms": series.terms().iter().map(|(e, c)| json!({
                            "exponent": format_exponent(*e),
                            "coefficient": c.to_string(),
                        })).collect::<Vec<_>>(),
                    }))
                    .unwrap()
                );
            } else {
                for line in series.lines() {
                    println!("{line}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::MoonshineDemo { trunc } => {
            let t = trunc
                .checked_mul(UNIT)
                .filter(|&t| t > 0)
                .unwrap_or(DEFAULT_TRUNC);
            let report = moonshine::run_demo(t, &budgets)?;
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "pass": report.pass(),
                        "steps": report.steps.iter().map(|s| json!({
                            "number": s.number,
                            "title": s.title,
                            "pass": s.pass,
                            "detail": s.detail,
                        })).collect::<Vec<_>>(),
                    }))
                    .unwrap()
                );
            } else {
                for s in &report.steps {
                    let mark = if s.pass { "PASS" } else { "FAIL" };
                    println!("{mark} [{:2}] {} — {}", s.number, s.title, s.detail);
                }
            }
            Ok(exit_check(report.pass()))
        }
    }
}

fn exit_check(pass: bool) -> ExitCode {
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
