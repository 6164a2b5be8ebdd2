use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fractal_forest::algebra::WeightTriple;
use fractal_forest::graph::{build, census, to_dot, Family};
use fractal_forest::matrix_tree::SchurMapVariant;
use fractal_forest::report::{
    bundle_report, counts_report, gf_report, gf_report_all, stats_report, GfMethod, GfRequest,
};
use fractal_forest::stats::StatModel;
use fractal_forest::verify::{parse_levels, run_verify, VerifyConfig};
use fractal_forest::{Error, Label};
use serde::Serialize;

const DEFAULT_SEED: u64 = 20240917;

#[derive(Parser)]
#[command(name = "fractal-forest", version, about = "Spanning trees and forests on Sierpinski and Hanoi graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Dot,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a graph and print its census (or DOT).
    Generate {
        #[arg(long)]
        family: String,
        #[arg(long)]
        level: u32,
        #[arg(long)]
        include_loops: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Spanning-tree generating function by one or all methods.
    Gf {
        #[arg(long)]
        family: String,
        #[arg(long)]
        level: u32,
        /// Three exact rationals, e.g. `1 3/7 2`.
        #[arg(long, num_args = 3, value_names = ["A", "B", "C"], default_values = ["1", "1", "1"], allow_hyphen_values = true)]
        weights: Vec<String>,
        #[arg(long, default_value = "evaluated")]
        mode: String,
        /// recursion | closed | cofactor | schur | oracle | all
        #[arg(long, default_value = "recursion")]
        method: String,
        #[arg(long, default_value = "corrected")]
        schur_map: String,
        /// Fail instead of falling back to the cofactor when decimation hits D = 0.
        #[arg(long)]
        no_fallback: bool,
        /// Report every component of the bundle instead of T alone.
        #[arg(long, conflicts_with = "counts")]
        bundle: bool,
        /// Unweighted (tau, s, q) with cross-checks (hanoi, sierpinski-rot).
        #[arg(long)]
        counts: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Cross-method consistency over a level range; exits 1 on any mismatch.
    Verify {
        /// Repeatable; all families when absent.
        #[arg(long)]
        family: Vec<String>,
        #[arg(long, default_value = "1..3")]
        levels: String,
        #[arg(long, default_value_t = 10)]
        trials: usize,
        #[arg(long, env = "FRACTAL_FOREST_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value = "corrected")]
        schur_map: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Mean and variance of a label count in a uniform spanning tree.
    Stats {
        #[arg(long, default_value = "rotational")]
        model: String,
        #[arg(long)]
        level: u32,
        #[arg(long, default_value = "c")]
        label: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

enum Failure {
    Lib(Error),
    Usage(String),
    Mismatch,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InvalidLevel(_) | Error::Parse(_) | Error::Domain(_) => 2,
        Error::Capability(_) => 3,
        Error::DecimationSingular { .. } => 4,
        Error::Disconnected | Error::PatternMismatch(_) => 1,
    }
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize") + "\n"
}

fn csv_rows(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("csv write");
    for r in rows {
        w.write_record(r).expect("csv write");
    }
    String::from_utf8(w.into_inner().expect("csv flush")).expect("utf8")
}

fn no_dot(what: &str) -> Failure {
    Failure::Usage(format!("dot output is only available for generate, not {what}"))
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.cmd {
        Cmd::Generate { family, level, include_loops, format } => {
            let g = build(family.parse()?, level, include_loops)?;
            let c = census(&g);
            Ok(match format {
                Format::Json => json(&c),
                Format::Dot => to_dot(&g),
                Format::Csv => {
                    let mut row = vec![c.family.clone(), c.level.to_string(), c.vertices.to_string(), c.edges.to_string(), c.loops.to_string()];
                    row.extend(["a", "b", "c"].map(|l| c.label_counts.get(l).copied().unwrap_or(0).to_string()));
                    csv_rows(&["family", "level", "vertices", "edges", "loops", "a", "b", "c"], &[row])
                }
                Format::Text => format!(
                    "{} level {}: {} vertices, {} edges, {} loops, labels {:?}, connected {}\n",
                    c.family, c.level, c.vertices, c.edges, c.loops, c.label_counts, c.connected
                ),
            })
        }
        Cmd::Gf { family, level, weights, mode, method, schur_map, no_fallback, bundle, counts, format } => {
            let family: Family = family.parse()?;
            let mut req = GfRequest::new(family, level, WeightTriple::parse(&weights[0], &weights[1], &weights[2])?);
            req.mode = mode.parse()?;
            req.schur_map = schur_map.parse()?;
            req.allow_fallback = !no_fallback;
            if counts {
                let m: GfMethod = if method == "all" { GfMethod::Closed } else { method.parse()? };
                let r = counts_report(family, level, m)?;
                let bad = r.cross_checks.iter().any(|c| !c.passed);
                let out = match format {
                    Format::Json => json(&r),
                    Format::Csv => csv_rows(
                        &["family", "n", "tau", "s", "q", "method"],
                        &[vec![family.to_string(), level.to_string(), r.counts.tau.to_string(), r.counts.s.to_string(), r.counts.q.to_string(), m.name().into()]],
                    ),
                    Format::Text => format!("tau = {}\ns = {}\nq = {}\n", r.counts.tau, r.counts.s, r.counts.q),
                    Format::Dot => return Err(no_dot("gf")),
                };
                return if bad { print_then_mismatch(out) } else { Ok(out) };
            }
            if bundle {
                let r = bundle_report(&req)?;
                return Ok(match format {
                    Format::Json => json(&r),
                    Format::Csv => csv_rows(&["component", "value"], &r.components.iter().map(|(k, v)| vec![k.clone(), v.clone()]).collect::<Vec<_>>()),
                    Format::Text => r.components.iter().map(|(k, v)| format!("{k} = {v}\n")).collect(),
                    Format::Dot => return Err(no_dot("gf")),
                });
            }
            let r = if method == "all" { gf_report_all(&req)? } else { gf_report(&req, method.parse()?)? };
            let out = match format {
                Format::Json => json(&r),
                Format::Csv => csv_rows(
                    &["method", "value", "skipped"],
                    &r.results
                        .iter()
                        .map(|m| vec![m.method.name().into(), m.value.clone().unwrap_or_default(), m.skipped.clone().unwrap_or_default()])
                        .collect::<Vec<_>>(),
                ),
                Format::Text => {
                    let mut s = String::new();
                    for m in &r.results {
                        match (&m.value, &m.skipped) {
                            (Some(v), _) => s += &format!("{:<10} {v}\n", m.method.name()),
                            (None, Some(why)) => s += &format!("{:<10} skipped: {why}\n", m.method.name()),
                            _ => {}
                        }
                    }
                    if let Some(a) = r.agreement {
                        s += &format!("agreement  {a}\n");
                    }
                    s
                }
                Format::Dot => return Err(no_dot("gf")),
            };
            if r.agreement == Some(false) {
                return print_then_mismatch(out);
            }
            Ok(out)
        }
        Cmd::Verify { family, levels, trials, seed, schur_map, format } => {
            let families = if family.is_empty() {
                Family::ALL.to_vec()
            } else {
                family.iter().map(|f| f.parse()).collect::<Result<Vec<Family>, _>>()?
            };
            let schur_map: SchurMapVariant = schur_map.parse()?;
            let cfg = VerifyConfig { families, levels: parse_levels(&levels)?, trials, seed, schur_map };
            let r = run_verify(&cfg)?;
            let out = match format {
                Format::Json => json(&r),
                Format::Csv => csv_rows(
                    &["family", "level", "check", "passed", "methods", "detail"],
                    &r.checks
                        .iter()
                        .map(|c| {
                            vec![
                                c.family.to_string(),
                                c.level.map(|l| l.to_string()).unwrap_or_default(),
                                c.name.clone(),
                                c.passed.to_string(),
                                c.methods.join(" "),
                                c.detail.clone().unwrap_or_default(),
                            ]
                        })
                        .collect::<Vec<_>>(),
                ),
                Format::Text => {
                    let failed: Vec<_> = r.checks.iter().filter(|c| !c.passed).collect();
                    let mut s = format!("{} checks, {} failed\n", r.checks.len(), failed.len());
                    for c in failed {
                        s += &format!("FAIL {} n={:?} {}: {:?} {:?}\n", c.family, c.level, c.name, c.detail, c.mismatches);
                    }
                    s
                }
                Format::Dot => return Err(no_dot("verify")),
            };
            if r.passed {
                Ok(out)
            } else {
                print_then_mismatch(out)
            }
        }
        Cmd::Stats { model, level, label, format } => {
            let model: StatModel = model.parse()?;
            let label: Label = label.parse()?;
            let r = stats_report(model, level, label)?;
            let gap = r.normality_gap.map(|g| g.to_string()).unwrap_or_default();
            Ok(match format {
                Format::Json => json(&r),
                Format::Csv => csv_rows(
                    &["model", "n", "label", "mean", "variance", "normality_gap"],
                    &[vec![model.name().into(), level.to_string(), label.to_string(), r.mean.clone(), r.variance.clone(), gap]],
                ),
                Format::Text => format!("mean {}\nvariance {}\nnormality_gap {gap}\n", r.mean, r.variance),
                Format::Dot => return Err(no_dot("stats")),
            })
        }
    }
}

fn print_then_mismatch(out: String) -> Result<String, Failure> {
    print!("{out}");
    Err(Failure::Mismatch)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut so = std::io::stdout().lock();
            let _ = so.write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(Failure::Mismatch) => {
            eprintln!("error: verification mismatch");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
