//! `modrep` command-line front end. All computation lives in the library.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use modrep::an::{classify_tensor, make_label, ClassificationOutcome, Sign};
use modrep::branching::{classify_nodes_with, is_js, Orientation};
use modrep::js::enumerate_js;
use modrep::mullineux::{mullineux_with, ResidueChoice};
use modrep::partition::{enumerate_partitions, parse_partition, Partition, PrimeParam};
use modrep::verify::{run_all, CheckId, LemmaReport, RunOptions, VerifyConfig};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "modrep",
    version,
    about = "Partition combinatorics for modular representations"
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Characteristic, an odd prime.
    #[arg(long, short, global = true, default_value_t = 5)]
    p: u32,
    /// Print JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    /// Signature orientation (unstable, for calibration experiments only).
    #[arg(long, global = true, value_enum, default_value_t = OrientationArg::Auto)]
    orientation: OrientationArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrientationArg {
    Auto,
    TopDown,
    BottomUp,
}

impl OrientationArg {
    fn resolve(self) -> Orientation {
        match self {
            OrientationArg::Auto => Orientation::CALIBRATED,
            OrientationArg::TopDown => Orientation::TopDown,
            OrientationArg::BottomUp => Orientation::BottomUp,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Mullineux image of a p-regular partition.
    Mull { partition: String },
    /// Addable, removable, normal and conormal nodes by residue.
    Nodes { partition: String },
    /// JS-partitions of n.
    Js {
        #[arg(long)]
        n: usize,
        /// Only Mullineux-fixed ones.
        #[arg(long)]
        fixed_only: bool,
    },
    /// Decide whether a tensor product of two A_n-modules is irreducible (p = 5).
    Classify {
        /// A Mullineux-fixed partition naming a split module; pair each with --sign.
        #[arg(long)]
        split: Vec<String>,
        #[arg(long, allow_hyphen_values = true)]
        sign: Vec<Sign>,
        /// A partition naming a non-split module.
        #[arg(long)]
        nonsplit: Vec<String>,
    },
    /// Partitions of n, p-regular unless --all is given.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        all: bool,
    },
    /// Run the lemma verification harness.
    Verify {
        /// Cap every sweep at this n.
        #[arg(long)]
        max_n: Option<usize>,
        /// Restrict to these checks.
        #[arg(long = "check")]
        checks: Vec<CheckId>,
    },
    /// Summary of everything known about one partition.
    Report { partition: String },
}

type Outcome = Result<ExitCode, String>;

fn partition(text: &str) -> Result<Partition, String> {
    parse_partition(text).map_err(|e| format!("`{text}`: {e}"))
}

fn emit(json: bool, value: serde_json::Value, plain: impl FnOnce() -> String) {
    if json {
        println!("{value}");
    } else {
        println!("{}", plain());
    }
}

fn lines(items: &[Partition]) -> String {
    items
        .iter()
        .map(|l| l.to_string())
        .collect::<Vec<_>>()
        .join("\n")
}

fn run(cli: Cli) -> Outcome {
    let Common {
        p,
        json,
        orientation,
    } = cli.common;
    let p = PrimeParam::new(p).map_err(|e| e.to_string())?;
    let orientation = orientation.resolve();
    let err = |e: modrep::Error| e.to_string();

    match cli.command {
        Command::Mull { partition: text } => {
            let lambda = partition(&text)?;
            let result =
                mullineux_with(&lambda, p, orientation, ResidueChoice::Smallest).map_err(err)?;
            emit(
                json,
                json!({ "input": lambda, "p": p, "image": result.image, "trace": result.trace }),
                || result.image.to_string(),
            );
        }
        Command::Nodes { partition: text } => {
            let lambda = partition(&text)?;
            let c = classify_nodes_with(&lambda, p, orientation);
            emit(json, serde_json::to_value(&c).unwrap(), || {
                let show = |nodes: &[modrep::Node]| {
                    nodes
                        .iter()
                        .map(|n| n.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                };
                (0..p.get() as usize)
                    .map(|i| {
                        format!(
                            "residue {i}: ε={} φ={} addable [{}] removable [{}] normal [{}] conormal [{}]",
                            c.epsilon[i],
                            c.phi[i],
                            show(&c.addable[i]),
                            show(&c.removable[i]),
                            show(&c.normal[i]),
                            show(&c.conormal[i])
                        )
                    })
                    .collect::<Vec<_>>()
                    .join("\n")
            });
        }
        Command::Js { n, fixed_only } => {
            let found = enumerate_js(n, p, fixed_only).map_err(err)?;
            emit(json, json!(found), || lines(&found));
        }
        Command::Classify {
            split,
            sign,
            nonsplit,
        } => {
            if split.len() != sign.len() {
                return Err(format!(
                    "{} --split but {} --sign; give one sign per split label",
                    split.len(),
                    sign.len()
                ));
            }
            let mut labels = Vec::new();
            for (text, s) in split.iter().zip(&sign) {
                labels.push(make_label(&partition(text)?, Some(*s), p).map_err(err)?);
            }
            for text in &nonsplit {
                labels.push(make_label(&partition(text)?, None, p).map_err(err)?);
            }
            let [d1, d2] = labels.as_slice() else {
                return Err(format!(
                    "classify takes exactly two labels, got {}",
                    labels.len()
                ));
            };
            let outcome = classify_tensor(d1, d2).map_err(err)?;
            emit(
                json,
                serde_json::to_value(&outcome).unwrap(),
                || match &outcome {
                    ClassificationOutcome::Irreducible { nu } => {
                        format!("{d1} ⊗ {d2}: irreducible, ν = {nu}")
                    }
                    ClassificationOutcome::NotIrreducible { reason } => {
                        format!("{d1} ⊗ {d2}: not irreducible ({reason})")
                    }
                },
            );
        }
        Command::Enumerate { n, all } => {
            let found: Vec<Partition> = enumerate_partitions(n, p, !all).collect();
            emit(json, json!(found), || lines(&found));
        }
        Command::Verify { max_n, checks } => {
            let config = VerifyConfig {
                max_n,
                checks: if checks.is_empty() {
                    CheckId::ALL.to_vec()
                } else {
                    checks
                },
                options: RunOptions {
                    orientation,
                    ..RunOptions::default()
                },
            };
            let outcome = run_all(&config).map_err(err)?;
            for report in &outcome.reports {
                if json {
                    println!("{}", report.to_json_line());
                } else {
                    print_report(report);
                }
            }
            if outcome.aborted {
                eprintln!("calibration gate failed; remaining checks skipped");
            }
            return Ok(ExitCode::from(outcome.exit_code() as u8));
        }
        Command::Report { partition: text } => {
            let lambda = partition(&text)?;
            report(&lambda, p, orientation, json)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_report(report: &LemmaReport) {
    println!(
        "{} {}: {} instances, n {}..={}, p {:?}, {} ms",
        report.id,
        if report.pass { "PASS" } else { "FAIL" },
        report.instances,
        report.n_min,
        report.n_max,
        report.primes,
        report.elapsed_ms
    );
    for (key, count) in &report.observations {
        println!("  {key}: {count}");
    }
    for c in &report.counterexamples {
        println!(
            "  n={} p={} {:?}: {} (expected {})",
            c.n, c.p, c.inputs, c.observed, c.expected
        );
    }
    if report.truncated > 0 {
        println!("  ... {} more", report.truncated);
    }
}

fn report(
    lambda: &Partition,
    p: PrimeParam,
    orientation: Orientation,
    json: bool,
) -> Result<(), String> {
    let c = classify_nodes_with(lambda, p, orientation);
    let regular = lambda.is_p_regular(p);
    let js = (regular && !lambda.is_empty())
        .then(|| is_js(lambda, p))
        .transpose()
        .map_err(|e| e.to_string())?;
    let image = regular
        .then(|| mullineux_with(lambda, p, orientation, ResidueChoice::Smallest))
        .transpose()
        .map_err(|e| e.to_string())?
        .map(|r| r.image);
    let fixed = image.as_ref().map(|m| m == lambda);
    let dim = lambda.specht_dimension().map_err(|e| e.to_string())?;
    let content = lambda.residue_content(p).counts;
    let value = json!({
        "partition": lambda,
        "p": p,
        "size": lambda.size(),
        "height": lambda.height(),
        "p_regular": regular,
        "content": content,
        "epsilon": c.epsilon,
        "phi": c.phi,
        "js": js,
        "mullineux": image,
        "mullineux_fixed": fixed,
        "specht_dimension": dim.to_string(),
    });
    let opt = |v: Option<String>| v.unwrap_or_else(|| "n/a (p-singular)".into());
    emit(json, value, || {
        [
            format!("partition: {lambda}"),
            format!("p: {p}"),
            format!("size: {}", lambda.size()),
            format!("height: {}", lambda.height()),
            format!("p-regular: {regular}"),
            format!("content: {content:?}"),
            format!("epsilon: {:?}", c.epsilon),
            format!("phi: {:?}", c.phi),
            format!("JS: {}", opt(js.map(|b| b.to_string()))),
            format!(
                "Mullineux image: {}",
                opt(image.as_ref().map(|m| m.to_string()))
            ),
            format!("Mullineux-fixed: {}", opt(fixed.map(|b| b.to_string()))),
            format!("Specht dimension: {dim}"),
        ]
        .join("\n")
    });
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
