//! Command-line surface: apply operators, embed staircases, print descent
//! vectors, report orbit structures, and verify cyclic-sieving claims.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage/parse error,
//! 3 resource limit exceeded.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use syt::csp::{
    canonical_csp_polynomial, comaj, csp_shifts, cycle_structure, is_csp_polynomial, maj,
    q_hook_length, statistic_generating_function, verify_cyclotomic_product, ActionOp,
    CycleStructure,
};
use syt::descent::extended_descent;
use syt::dynamics::{apply_power, dual_evacuate, dual_promote, evacuate, promote, PowerOp};
use syt::embedding::{embed, embed_wide};
use syt::shape::parse_shape;
use syt::tableau::{parse_tableau_any, serialize_tableau, tableau_to_json, Tableau};
use syt::verify;
use syt::Error;

#[derive(Parser)]
#[command(name = "syt", about = "Standard Young tableaux: promotion, evacuation, embeddings, descent vectors, cyclic sieving", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ApplyOp {
    Promote,
    #[value(name = "dual-promote")]
    DualPromote,
    Evacuate,
    #[value(name = "dual-evacuate")]
    DualEvacuate,
    Transpose,
}

#[derive(Clone, Copy, ValueEnum)]
enum CliActionOp {
    Promote,
    Evacuate,
    #[value(name = "dual-evacuate")]
    DualEvacuate,
}

impl From<CliActionOp> for ActionOp {
    fn from(op: CliActionOp) -> ActionOp {
        match op {
            CliActionOp::Promote => ActionOp::Promote,
            CliActionOp::Evacuate => ActionOp::Evacuate,
            CliActionOp::DualEvacuate => ActionOp::DualEvacuate,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum StatName {
    Maj,
    Comaj,
    Qhook,
}

#[derive(Subcommand)]
enum Command {
    /// Apply an operator (optionally a signed power) to a tableau.
    Apply {
        #[arg(long, value_enum)]
        op: ApplyOp,
        /// Signed iteration count; negative means the inverse operator.
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        power: i64,
        /// Tableau in text format ("1 2/3 4") or JSON.
        #[arg(long)]
        tableau: String,
        /// Also print the sliding path (promote/dual-promote only).
        #[arg(long)]
        show_path: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Embed a staircase tableau into a rectangle.
    Embed {
        /// Use the wide (k+1)^k target instead of the tall k^(k+1).
        #[arg(long)]
        wide: bool,
        #[arg(long)]
        tableau: String,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Print the extended descent vector of a rectangular or staircase tableau.
    Desc {
        #[arg(long)]
        tableau: String,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Orbit structure of an operator acting on all tableaux of a shape.
    Orbits {
        /// Shape: "3,2,1", rectangle sugar "3^4", or staircase sugar "sc:4".
        #[arg(long)]
        shape: String,
        #[arg(long, value_enum)]
        op: CliActionOp,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Verify cyclotomic certificates or report statistic-based candidates.
    Csp {
        #[arg(long)]
        shape: String,
        #[arg(long, value_enum)]
        op: CliActionOp,
        /// Statistic to report on: maj, comaj, or the q-hook polynomial.
        #[arg(long, value_enum)]
        stat: Option<StatName>,
        /// Cyclotomic factor list, e.g. "2,4^2,6,8,12".
        #[arg(long)]
        factors: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Run the full property suite and print a pass/fail table.
    Verify {
        #[arg(long, default_value_t = 10)]
        max_cells: usize,
        /// Include the long-running sc_5 certificate (~20 s).
        #[arg(long)]
        include_k5: bool,
        /// Also re-run every worked example as a golden check.
        #[arg(long)]
        worked_examples: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::EnumerationLimit { .. } | Error::Overflow => 3,
        _ => 2,
    }
}

/// Parse "2,4^2,6,8,12" into (index, exponent) pairs.
fn parse_factors(text: &str) -> Result<Vec<(usize, usize)>, Error> {
    text.split(',')
        .map(|f| {
            let f = f.trim();
            let (d, e) = match f.split_once('^') {
                Some((d, e)) => (d, e),
                None => (f, "1"),
            };
            let d: usize = d
                .parse()
                .map_err(|_| Error::MalformedShape(format!("bad cyclotomic index {d:?}")))?;
            let e: usize = e
                .parse()
                .map_err(|_| Error::MalformedShape(format!("bad exponent {e:?}")))?;
            if d == 0 {
                return Err(Error::MalformedShape("cyclotomic index must be >= 1".into()));
            }
            Ok((d, e))
        })
        .collect()
}

fn cycle_structure_json(cs: &CycleStructure) -> serde_json::Value {
    let cycles: serde_json::Map<String, serde_json::Value> = cs
        .multiplicities
        .iter()
        .map(|(c, m)| (c.to_string(), json!(m)))
        .collect();
    json!({ "N": cs.order, "cycles": cycles, "empirical": cs.empirical })
}

fn run() -> Result<u8, Error> {
    let cli = Cli::parse();
    match cli.command {
        Command::Apply {
            op,
            power,
            tableau,
            show_path,
            format,
        } => {
            let t = parse_tableau_any(&tableau)?;
            let mut paths = Vec::new();
            let result = match op {
                ApplyOp::Promote | ApplyOp::DualPromote => {
                    let pop = if matches!(op, ApplyOp::Promote) {
                        PowerOp::Promote
                    } else {
                        PowerOp::DualPromote
                    };
                    if show_path && power == 1 {
                        let (out, path) = match pop {
                            PowerOp::Promote => promote(&t),
                            PowerOp::DualPromote => dual_promote(&t),
                        };
                        paths.push(path);
                        out
                    } else {
                        apply_power(&t, pop, power)
                    }
                }
                ApplyOp::Evacuate => iterate_involution(&t, power, evacuate),
                ApplyOp::DualEvacuate => iterate_involution(&t, power, dual_evacuate),
                ApplyOp::Transpose => iterate_involution(&t, power, Tableau::transpose),
            };
            match format {
                OutputFormat::Text => {
                    println!("{}", serialize_tableau(&result));
                    for p in &paths {
                        println!("path: {p}");
                    }
                }
                OutputFormat::Json => {
                    let mut obj = json!({ "tableau": tableau_to_json(&result) });
                    if let Some(p) = paths.first() {
                        obj["path"] = json!(p.cells());
                    }
                    println!("{obj}");
                }
            }
            Ok(0)
        }
        Command::Embed {
            wide,
            tableau,
            format,
        } => {
            let t = parse_tableau_any(&tableau)?;
            let r = if wide { embed_wide(&t)? } else { embed(&t)? };
            match format {
                OutputFormat::Text => println!("{}", serialize_tableau(&r)),
                OutputFormat::Json => println!("{}", json!({ "tableau": tableau_to_json(&r) })),
            }
            Ok(0)
        }
        Command::Desc { tableau, format } => {
            let t = parse_tableau_any(&tableau)?;
            let v = extended_descent(&t)?;
            match format {
                OutputFormat::Text => {
                    println!("{v}");
                    let dots: Vec<String> = v.dots().iter().map(|d| d.to_string()).collect();
                    println!("dots: {{{}}}", dots.join(","));
                    println!("period: {}", v.period());
                }
                OutputFormat::Json => {
                    println!(
                        "{}",
                        json!({
                            "vector": v.to_string(),
                            "dots": v.dots().iter().collect::<Vec<_>>(),
                            "length": v.length(),
                            "period": v.period(),
                        })
                    );
                }
            }
            Ok(0)
        }
        Command::Orbits { shape, op, format } => {
            let shape = parse_shape(&shape)?;
            let cs = cycle_structure(&shape, op.into())?;
            match format {
                OutputFormat::Text => {
                    println!("N: {}{}", cs.order, if cs.empirical { " (empirical)" } else { "" });
                    println!("total: {}", cs.total());
                    for (c, m) in &cs.multiplicities {
                        println!("cycles of size {c}: {m}");
                    }
                }
                OutputFormat::Json => println!("{}", cycle_structure_json(&cs)),
            }
            Ok(0)
        }
        Command::Csp {
            shape,
            op,
            stat,
            factors,
            format,
        } => {
            let shape = parse_shape(&shape)?;
            let op: ActionOp = op.into();
            if let Some(factors) = factors {
                let factors = parse_factors(&factors)?;
                let ok = verify_cyclotomic_product(&factors, &shape, op)?;
                match format {
                    OutputFormat::Text => {
                        println!("{}", if ok { "CSP polynomial: yes" } else { "CSP polynomial: no" })
                    }
                    OutputFormat::Json => println!("{}", json!({ "csp": ok })),
                }
                return Ok(if ok { 0 } else { 1 });
            }
            let cs = cycle_structure(&shape, op)?;
            let canonical = canonical_csp_polynomial(&cs)?;
            let (raw, reduced) = match stat {
                Some(StatName::Maj) | None => {
                    statistic_generating_function(&shape, maj, cs.order)?
                }
                Some(StatName::Comaj) => statistic_generating_function(&shape, comaj, cs.order)?,
                Some(StatName::Qhook) => {
                    let p = q_hook_length(&shape)?;
                    let r = p.reduce_mod_qn(cs.order)?;
                    (p, r)
                }
            };
            let direct = is_csp_polynomial(&reduced, &cs)?;
            let shifts = csp_shifts(&reduced, &cs)?;
            match format {
                OutputFormat::Text => {
                    println!("generating function: {raw}");
                    println!("canonical: coefficients {:?} (mod q^{} - 1)", canonical.coeffs(), cs.order);
                    println!("is CSP polynomial: {}", if direct { "yes" } else { "no" });
                    if shifts.is_empty() {
                        println!("certifying shifts: none");
                    } else {
                        let s: Vec<String> = shifts.iter().map(|s| s.to_string()).collect();
                        println!("certifying shifts: {}", s.join(","));
                    }
                }
                OutputFormat::Json => println!(
                    "{}",
                    json!({
                        "generating_function": raw.coeffs(),
                        "canonical": canonical.coeffs(),
                        "N": cs.order,
                        "csp": direct,
                        "shifts": shifts,
                    })
                ),
            }
            Ok(0)
        }
        Command::Verify {
            max_cells,
            include_k5,
            worked_examples,
            format,
        } => {
            let checks = verify::run_all(max_cells, include_k5, worked_examples)?;
            let failed = checks.iter().filter(|c| !c.pass).count();
            match format {
                OutputFormat::Text => {
                    for c in &checks {
                        println!("{} {}", if c.pass { "PASS" } else { "FAIL" }, c.name);
                    }
                    println!("{} checks, {} failed", checks.len(), failed);
                }
                OutputFormat::Json => {
                    let rows: Vec<serde_json::Value> = checks
                        .iter()
                        .map(|c| json!({ "name": c.name, "pass": c.pass }))
                        .collect();
                    println!("{}", json!({ "checks": rows, "failed": failed }));
                }
            }
            Ok(if failed == 0 { 0 } else { 1 })
        }
    }
}

fn iterate_involution(t: &Tableau, power: i64, f: impl Fn(&Tableau) -> Tableau) -> Tableau {
    // involutions: only the parity of the exponent matters
    if power.rem_euclid(2) == 1 {
        f(t)
    } else {
        t.clone()
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
