//! The `socle` binary: permutation-group utilities, witness and
//! beautiful-subset searches, and the pinned case catalog.
//!
//! Group arguments accept `Sym:n` / `Alt:n` shorthands or a path to a file
//! containing either JSON or text. JSON forms: a plain group
//! `{degree, generators: [[images]]}` (0-based), an action spec
//! `{parent, action: {type, ...}}`, or a classical spec
//! `{family, n, q, action: {dim, class}}`. The text form is a degree on the
//! first line followed by one 1-based disjoint-cycle generator per line.
//!
//! Exit codes: 0 expected verdict reproduced (or utility success), 1 verdict
//! contradicts expectation, 2 inconclusive (budget), 3 input error.

use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use socle::action::{coset_action, k_subset_action, restrict, uniform_partition_action};
use socle::backtrack::setwise_stabilizer;
use socle::beautiful::{orbit_beautiful_search, PoolSpec};
use socle::binary::{exhaustive_binary_check, witness_search, BinaryVerdict, SearchStrategy};
use socle::catalog::{self, Report};
use socle::classical::{build_group, enumerate_subspaces, subspace_action, Family, SubspaceClass,
    SUBSPACE_BUDGET};
use socle::group::{GroupJson, ENUMERATION_GUARD};
use socle::{Permutation, PermutationGroup};

/// Approximate backtrack nodes explored per millisecond, used to translate
/// `--budget-ms` into the node budgets the search APIs take.
const NODES_PER_MS: u64 = 100_000;

#[derive(Parser)]
#[command(name = "socle", version, about = "Non-binary witnesses and beautiful subsets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Rayon worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the orbit of a point.
    Orbit {
        /// Group spec: Sym:n, Alt:n, or a file path.
        group: String,
        /// 0-based point.
        point: u32,
    },
    /// Print the group order.
    Order { group: String },
    /// Print the set-wise stabilizer of a point set.
    Stab {
        group: String,
        /// 0-based points of the set.
        points: Vec<u32>,
    },
    /// Exhaustively scan for a non-binary witness up to a length bound.
    CheckBinary {
        group: String,
        /// Maximum tuple length (default: degree capped at 6).
        #[arg(long)]
        max_len: Option<usize>,
        /// Wall-clock budget, translated into backtrack nodes.
        #[arg(long)]
        budget_ms: Option<u64>,
    },
    /// Search for a length-3 non-binary witness.
    FindWitness {
        group: String,
        #[arg(long)]
        budget_ms: Option<u64>,
    },
    /// Search for a beautiful subset via seeded subgroup orbits.
    FindBeautiful {
        group: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        budget_ms: Option<u64>,
    },
    /// Run one catalog case and compare against its expected verdict.
    VerifyCase { id: String },
    /// Run every catalog case whose id contains the filter.
    RunAll {
        #[arg(long, default_value = "")]
        filter: String,
    },
    /// List the catalog cases and the out-of-desk-scale annotations.
    ListCatalog,
}

struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

fn budget_nodes(budget_ms: Option<u64>) -> u64 {
    budget_ms.map_or(u64::MAX, |ms| ms.saturating_mul(NODES_PER_MS))
}

// ---- Group loading ----

fn load_group(spec: &str) -> Result<PermutationGroup, InputError> {
    if let Some(n) = spec.strip_prefix("Sym:") {
        return Ok(PermutationGroup::symmetric(n.parse::<usize>()?));
    }
    if let Some(n) = spec.strip_prefix("Alt:") {
        return Ok(PermutationGroup::alternating(n.parse::<usize>()?));
    }
    let text = fs::read_to_string(spec)
        .map_err(|e| InputError(format!("cannot read group file {spec}: {e}")))?;
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        let v: Value = serde_json::from_str(trimmed)?;
        group_from_value(&v)
    } else {
        group_from_text(&text)
    }
}

fn group_from_text(text: &str) -> Result<PermutationGroup, InputError> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let degree: usize = lines
        .next()
        .ok_or_else(|| InputError("empty group file".to_string()))?
        .trim()
        .parse()?;
    let cycles: Vec<&str> = lines.map(str::trim).collect();
    Ok(PermutationGroup::from_cycle_strings(degree, &cycles)?)
}

fn group_from_value(v: &Value) -> Result<PermutationGroup, InputError> {
    if v.get("generators").is_some() {
        let gj: GroupJson = serde_json::from_value(v.clone())?;
        return Ok(PermutationGroup::from_json(&gj)?);
    }
    if v.get("family").is_some() {
        return classical_group(v);
    }
    if v.get("parent").is_some() {
        return action_group(v);
    }
    Err(InputError(
        "unrecognized group JSON: expected {degree, generators}, {parent, action} or \
         {family, n, q, action}"
            .to_string(),
    ))
}

fn classical_group(v: &Value) -> Result<PermutationGroup, InputError> {
    let family = match v["family"].as_str() {
        Some("SL") => Family::Linear,
        Some("SU") => Family::Unitary,
        Some("Sp") => Family::Symplectic,
        Some("O") => Family::OrthogonalOdd,
        Some("O+") => Family::OrthogonalPlus,
        Some("O-") => Family::OrthogonalMinus,
        other => return Err(InputError(format!("unknown family {other:?}"))),
    };
    let n = v["n"].as_u64().ok_or_else(|| InputError("missing n".into()))? as usize;
    let q = v["q"].as_u64().ok_or_else(|| InputError("missing q".into()))? as u32;
    let action = &v["action"];
    let dim = action["dim"]
        .as_u64()
        .ok_or_else(|| InputError("missing action.dim".into()))? as usize;
    let class = match action["class"].as_str() {
        Some("all") | None => SubspaceClass::All,
        Some("totally-isotropic") => SubspaceClass::TotallyIsotropic,
        Some("nondegenerate") => SubspaceClass::Nondegenerate,
        Some("nondegenerate-plus") => SubspaceClass::NondegeneratePlus,
        Some("nondegenerate-minus") => SubspaceClass::NondegenerateMinus,
        Some(other) => return Err(InputError(format!("unknown subspace class {other}"))),
    };
    let spec = build_group(family, n, q)?;
    let vg = spec.vector_group();
    let labels = enumerate_subspaces(&spec.space, dim, class, SUBSPACE_BUDGET)?;
    Ok(subspace_action(&spec, &vg, labels).group)
}

fn action_group(v: &Value) -> Result<PermutationGroup, InputError> {
    let parent = match &v["parent"] {
        Value::String(s) => load_group(s)?,
        obj @ Value::Object(_) => group_from_value(obj)?,
        _ => return Err(InputError("parent must be a spec string or group JSON".into())),
    };
    let action = &v["action"];
    match action["type"].as_str() {
        Some("natural") | None => Ok(parent),
        Some("k-subsets") => {
            let k = action["k"].as_u64().ok_or_else(|| InputError("missing action.k".into()))?;
            Ok(k_subset_action(&parent, k as usize)?.group)
        }
        Some("partitions") => {
            let k = action["k"].as_u64().ok_or_else(|| InputError("missing action.k".into()))?;
            Ok(uniform_partition_action(&parent, k as usize)?.group)
        }
        Some("cosets") => {
            let sub = match &action["subgroup"] {
                Value::String(s) => load_group(s)?,
                obj @ Value::Object(_) => group_from_value(obj)?,
                _ => return Err(InputError("cosets need action.subgroup".into())),
            };
            Ok(coset_action(&parent, &sub, ENUMERATION_GUARD)?.group)
        }
        Some("restrict") => {
            let lambda: Vec<u32> = action["lambda"]
                .as_array()
                .ok_or_else(|| InputError("restrict needs action.lambda".into()))?
                .iter()
                .map(|x| x.as_u64().map(|v| v as u32))
                .collect::<Option<_>>()
                .ok_or_else(|| InputError("lambda must be points".into()))?;
            Ok(restrict(&parent, &lambda)?.induced)
        }
        Some(other) => Err(InputError(format!("unknown action type {other}"))),
    }
}

// ---- Output helpers ----

/// Prints a line, ignoring broken-pipe errors from a closed stdout.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout(), $($arg)*);
    }};
}

fn perm_json(p: &Permutation) -> Value {
    json!({"cycles": p.to_cycle_string(), "images": p.images()})
}

fn print_value(format: Format, v: &Value, text: impl FnOnce() -> String) {
    match format {
        Format::Json => out!("{}", serde_json::to_string_pretty(v).expect("json")),
        Format::Text => out!("{}", text()),
    }
}

fn group_summary(g: &PermutationGroup) -> Value {
    json!({
        "degree": g.degree(),
        "order": g.order() as u64,
        "generators": g.generators().iter().map(perm_json).collect::<Vec<_>>(),
    })
}

fn print_report(format: Format, report: &Report) {
    match format {
        Format::Json => out!(
            "{}",
            serde_json::to_string_pretty(&report.to_json()).expect("json")
        ),
        Format::Text => out!("{}", report.render_text()),
    }
}

fn report_code(reports: &[Report]) -> u8 {
    if reports.iter().all(|r| r.matched) {
        0
    } else if reports
        .iter()
        .all(|r| r.matched || r.verdict.is_inconclusive())
    {
        2
    } else {
        1
    }
}

// ---- Subcommand bodies ----

fn run(cli: Cli) -> Result<u8, InputError> {
    if let Some(threads) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| InputError(e.to_string()))?;
    }
    let format = cli.format;
    match cli.command {
        Command::Orbit { group, point } => {
            let g = load_group(&group)?;
            if point as usize >= g.degree() {
                return Err(InputError(format!(
                    "point {point} outside the degree-{} domain",
                    g.degree()
                )));
            }
            let orbit = g.orbit(point)?;
            print_value(format, &json!({"point": point, "orbit": orbit}), || {
                format!(
                    "orbit of {point}: {{{}}} (size {})",
                    orbit.iter().map(u32::to_string).collect::<Vec<_>>().join(" "),
                    orbit.len()
                )
            });
            Ok(0)
        }
        Command::Order { group } => {
            let g = load_group(&group)?;
            print_value(format, &group_summary(&g), || {
                format!("degree {}, order {}", g.degree(), g.order())
            });
            Ok(0)
        }
        Command::Stab { group, points } => {
            let g = load_group(&group)?;
            if points.iter().any(|&p| p as usize >= g.degree()) {
                return Err(InputError("a point lies outside the domain".into()));
            }
            let stab = setwise_stabilizer(&g, &points);
            print_value(format, &json!({"set": points, "stabilizer": group_summary(&stab)}), || {
                let gens: Vec<String> =
                    stab.generators().iter().map(|p| p.to_cycle_string()).collect();
                format!("set-wise stabilizer: order {}, generators {}", stab.order(), gens.join(" "))
            });
            Ok(0)
        }
        Command::CheckBinary { group, max_len, budget_ms } => {
            let g = load_group(&group)?;
            let max_len = max_len.unwrap_or_else(|| g.degree().min(6));
            match exhaustive_binary_check(&g, max_len, budget_nodes(budget_ms), true)? {
                BinaryVerdict::BinaryUpTo(l) => {
                    print_value(format, &json!({"verdict": "binary-up-to", "length": l}), || {
                        format!("binary up to length {l}")
                    });
                    Ok(0)
                }
                BinaryVerdict::Witness(cert) => {
                    print_value(
                        format,
                        &json!({"verdict": "witness", "length": cert.tuple_i.len(),
                                "certificate": cert.to_json()}),
                        || format!("non-binary witness of length {}", cert.tuple_i.len()),
                    );
                    Ok(0)
                }
                BinaryVerdict::BudgetExhausted { nodes } => {
                    print_value(format, &json!({"verdict": "inconclusive", "nodes": nodes}), || {
                        format!("inconclusive after {nodes} nodes")
                    });
                    Ok(2)
                }
            }
        }
        Command::FindWitness { group, budget_ms } => {
            let g = load_group(&group)?;
            match witness_search(&g, SearchStrategy::Auto, budget_nodes(budget_ms))? {
                Some(cert) => {
                    print_value(
                        format,
                        &json!({"witness": cert.to_json()}),
                        || format!("witness: {:?} vs {:?}", cert.tuple_i, cert.tuple_j),
                    );
                    Ok(0)
                }
                None => {
                    print_value(format, &json!({"witness": null}), || {
                        "no length-3 witness (complete scan)".to_string()
                    });
                    Ok(0)
                }
            }
        }
        Command::FindBeautiful { group, seed, budget_ms } => {
            let g = load_group(&group)?;
            let budget = budget_ms.map_or(10_000, |ms| ms.saturating_mul(NODES_PER_MS / 1000));
            match orbit_beautiful_search(&g, &PoolSpec::default(), seed, budget) {
                Ok(Some(cert)) => {
                    print_value(format, &json!({"beautiful": cert.to_json(None)}), || {
                        format!(
                            "beautiful subset of size {} (induced order {})",
                            cert.lambda.len(),
                            cert.induced_order
                        )
                    });
                    Ok(0)
                }
                Ok(None) => {
                    print_value(format, &json!({"beautiful": null}), || {
                        "no beautiful subset found by the seeded search".to_string()
                    });
                    Ok(0)
                }
                Err(e) if e.to_string().contains("budget") => {
                    print_value(format, &json!({"verdict": "inconclusive", "error": e.to_string()}),
                        || format!("inconclusive: {e}"));
                    Ok(2)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::VerifyCase { id } => {
            let report = catalog::verify_case(&id).map_err(|e| InputError(e.to_string()))?;
            print_report(format, &report);
            Ok(report_code(std::slice::from_ref(&report)))
        }
        Command::RunAll { filter } => {
            let reports = catalog::run_all(&filter);
            if reports.is_empty() {
                return Err(InputError(format!("no catalog case matches filter {filter:?}")));
            }
            match format {
                Format::Json => {
                    let (matched, mismatched, inconclusive) = catalog::summarize(&reports);
                    let v = json!({
                        "summary": {"matched": matched, "mismatched": mismatched,
                                    "inconclusive": inconclusive},
                        "reports": reports.iter().map(Report::to_json).collect::<Vec<_>>(),
                    });
                    out!("{}", serde_json::to_string_pretty(&v).expect("json"));
                }
                Format::Text => {
                    for r in &reports {
                        out!("{}", r.render_text());
                    }
                    let (matched, mismatched, inconclusive) = catalog::summarize(&reports);
                    out!(
                        "{} matched, {} mismatched, {} inconclusive",
                        matched, mismatched, inconclusive
                    );
                }
            }
            Ok(report_code(&reports))
        }
        Command::ListCatalog => {
            let cases = catalog::cases();
            match format {
                Format::Json => {
                    let v = json!({
                        "cases": cases.iter().map(|c| json!({
                            "id": c.id,
                            "expected": c.expected,
                            "seed": c.seed,
                            "claim": c.claim,
                        })).collect::<Vec<_>>(),
                        "annotations": catalog::annotations().iter().map(|a| json!({
                            "topic": a.topic, "reason": a.reason,
                        })).collect::<Vec<_>>(),
                    });
                    out!("{}", serde_json::to_string_pretty(&v).expect("json"));
                }
                Format::Text => {
                    for c in cases {
                        out!("{:<55} {:?}", c.id, c.expected);
                    }
                    out!("\nout-of-desk-scale annotations:");
                    for a in catalog::annotations() {
                        out!("- {}: {}", a.topic, a.reason);
                    }
                }
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
