//! The `shellab` binary. Data goes to stdout, diagnostics to stderr, and the
//! exit code mirrors the certificate answer: 0 yes, 1 no, 2 undecided,
//! 3 errors.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;

use shellab::classes::{classify, ClassReport};
use shellab::complex::DropReport;
use shellab::gamma::CodimGraph;
use shellab::hassign::{
    decide_shellable_by_assignment_budgeted, decide_strongly_shellable_by_assignment_budgeted,
};
use shellab::ideal::{facet_ideal, find_linear_quotient_order_budgeted};
use shellab::poset::decide_strongly_shellable_poset;
use shellab::shelling::{
    find_shelling_order_budgeted, find_strong_shelling_order_budgeted, is_shelling_order,
    is_strong_shelling_order, FacetOrder,
};
use shellab::{Budget, SimplicialComplex, Stats};

use shellab_cli::cert::{Answer, Certificate};
use shellab_cli::io::{
    gamma_dot, parse_complex, parse_poset, serialize_complex, ComplexFile,
};
use shellab_cli::FormatError;

#[derive(Parser)]
#[command(name = "shellab", version, about = "Strong shellability toolkit")]
struct Cli {
    /// Search node budget (default: $SHELLAB_MAX_NODES, else unlimited).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    max_nodes: Option<u64>,
    /// Worker threads for the parallel engines.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    threads: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify a facet order (the file's line order, or --order indices).
    CheckOrder {
        /// Check the strong conditions instead of plain shellability.
        #[arg(long)]
        strong: bool,
        /// Comma-separated indices into the canonical facet list.
        #[arg(long)]
        order: Option<String>,
        file: PathBuf,
    },
    /// Search for a shelling order and emit a certificate.
    Search {
        #[arg(long)]
        strong: bool,
        file: PathBuf,
    },
    /// Codimension-one graph report; optionally export DOT.
    Gamma {
        /// Write DOT here; `-` prints the DOT instead of the report.
        #[arg(long)]
        dot: Option<String>,
        file: PathBuf,
    },
    /// Membership report for the eight complex classes.
    Classify { file: PathBuf },
    /// Decide shellability by h-assignment removal.
    HDecide {
        #[arg(long)]
        strong: bool,
        file: PathBuf,
    },
    /// Print the facet ideal; optionally certify a linear-quotient order.
    Ideal {
        #[arg(long)]
        linear_quotients: bool,
        file: PathBuf,
    },
    /// Decide strong shellability of a poset's order complex.
    Poset {
        /// Print the order complex as a complex file instead of deciding.
        #[arg(long)]
        emit_complex: bool,
        file: PathBuf,
    },
    /// Expand vertices into fibers of the given sizes and print the result.
    Expand {
        /// Comma-separated fiber sizes, one per ambient vertex.
        #[arg(long, value_delimiter = ',', required = true)]
        by: Vec<usize>,
        file: PathBuf,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{path}: {source}")]
    File {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Format {
        path: String,
        #[source]
        source: FormatError,
    },
    #[error(transparent)]
    Lib(#[from] shellab::Error),
    #[error("{0}")]
    Usage(String),
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 3,
            };
            let _ = err.print();
            std::process::exit(code);
        }
    };
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(3);
        }
    }
}

fn run(cli: Cli) -> Result<i32, CliError> {
    configure_threads(cli.threads)?;
    let budget = resolve_budget(cli.max_nodes)?;
    match cli.command {
        Command::CheckOrder { strong, order, file } => check_order(strong, order, &file),
        Command::Search { strong, file } => search(strong, &file, budget),
        Command::Gamma { dot, file } => gamma(dot, &file),
        Command::Classify { file } => run_classify(&file, budget),
        Command::HDecide { strong, file } => h_decide(strong, &file, budget),
        Command::Ideal { linear_quotients, file } => ideal(linear_quotients, &file, budget),
        Command::Poset { emit_complex, file } => poset(emit_complex, &file, budget),
        Command::Expand { by, file } => expand(&by, &file),
    }
}

#[cfg(feature = "parallel")]
fn configure_threads(threads: Option<u64>) -> Result<(), CliError> {
    if let Some(t) = threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t as usize)
            .build_global()
            .map_err(|e| CliError::Usage(format!("cannot configure thread pool: {e}")))?;
    }
    Ok(())
}

#[cfg(not(feature = "parallel"))]
fn configure_threads(threads: Option<u64>) -> Result<(), CliError> {
    if threads.is_some() {
        eprintln!("warning: built without the parallel feature; --threads has no effect");
    }
    Ok(())
}

fn resolve_budget(flag: Option<u64>) -> Result<Budget, CliError> {
    if let Some(max_nodes) = flag {
        return Ok(Budget::new(max_nodes));
    }
    match std::env::var("SHELLAB_MAX_NODES") {
        Ok(value) => {
            let max_nodes: u64 = value.parse().map_err(|_| {
                CliError::Usage(format!("SHELLAB_MAX_NODES must be a positive integer, got `{value}`"))
            })?;
            if max_nodes == 0 {
                return Err(CliError::Usage("SHELLAB_MAX_NODES must be positive".into()));
            }
            Ok(Budget::new(max_nodes))
        }
        Err(std::env::VarError::NotPresent) => Ok(Budget::UNLIMITED),
        Err(err) => Err(CliError::Usage(format!("SHELLAB_MAX_NODES: {err}"))),
    }
}

fn read_file(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|source| CliError::File { path: path.display().to_string(), source })
}

fn format_err(path: &PathBuf, source: FormatError) -> CliError {
    CliError::Format { path: path.display().to_string(), source }
}

fn report_drops(report: &DropReport) {
    for face in &report.duplicates {
        eprintln!("note: duplicate facet {:?} ignored", face.to_vec());
    }
    for face in &report.dropped {
        eprintln!("note: face {:?} absorbed by a larger facet", face.to_vec());
    }
}

/// Parses the file and canonicalizes, echoing drop notes to stderr.
fn load_complex(path: &PathBuf) -> Result<(ComplexFile, SimplicialComplex), CliError> {
    let file = parse_complex(&read_file(path)?).map_err(|e| format_err(path, e))?;
    let (complex, report) = file.complex().map_err(|e| format_err(path, e))?;
    report_drops(&report);
    Ok((file, complex))
}

fn emit(certificate: &Certificate) -> i32 {
    println!("{}", certificate.to_json());
    certificate.answer.exit_code()
}

fn check_order(strong: bool, order: Option<String>, path: &PathBuf) -> Result<i32, CliError> {
    let (file, complex) = load_complex(path)?;
    let order = match order {
        Some(arg) => {
            let indices = arg
                .split(',')
                .map(|tok| {
                    tok.trim().parse::<usize>().map_err(|_| {
                        CliError::Usage(format!("--order: invalid facet index `{tok}`"))
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            FacetOrder::new(indices)?
        }
        None => file.listing_order(&complex).map_err(|e| format_err(path, e))?,
    };
    let started = Instant::now();
    let (question, valid) = if strong {
        ("strong-shelling-order", is_strong_shelling_order(&complex, &order)?)
    } else {
        ("shelling-order", is_shelling_order(&complex, &order)?)
    };
    let cert = Certificate::new(
        question,
        &complex,
        Answer::from_bool(valid),
        Some(&order),
        None,
        Stats::default(),
        started.elapsed().as_millis() as u64,
    );
    Ok(emit(&cert))
}

fn search(strong: bool, path: &PathBuf, budget: Budget) -> Result<i32, CliError> {
    let (_, complex) = load_complex(path)?;
    let started = Instant::now();
    let (question, decision, stats) = if strong {
        let (d, s) = find_strong_shelling_order_budgeted(&complex, budget)?;
        ("strong-shelling-order", d, s)
    } else {
        let (d, s) = find_shelling_order_budgeted(&complex, budget)?;
        ("shelling-order", d, s)
    };
    let cert = Certificate::new(
        question,
        &complex,
        Answer::from_decision(&decision),
        decision.witness().as_ref(),
        None,
        stats,
        started.elapsed().as_millis() as u64,
    );
    Ok(emit(&cert))
}

#[derive(Serialize)]
struct GammaReport {
    question: &'static str,
    answer: Answer,
    connected: bool,
    girth: usize,
    diameter: Option<usize>,
    facets: Vec<Vec<usize>>,
}

fn gamma(dot: Option<String>, path: &PathBuf) -> Result<i32, CliError> {
    let (_, complex) = load_complex(path)?;
    let graph = CodimGraph::from_complex(&complex)?;
    let harmonious = shellab::gamma::is_harmonious(&complex)?;
    if let Some(target) = dot {
        let rendered = gamma_dot(&complex, &graph);
        if target == "-" {
            print!("{rendered}");
            return Ok(Answer::from_bool(harmonious).exit_code());
        }
        std::fs::write(&target, rendered)
            .map_err(|source| CliError::File { path: target.clone(), source })?;
    }
    let metrics = graph.metrics();
    let report = GammaReport {
        question: "harmonious",
        answer: Answer::from_bool(harmonious),
        connected: metrics.connected,
        girth: metrics.girth,
        diameter: metrics.diameter,
        facets: complex.facets().iter().map(|f| f.to_vec()).collect(),
    };
    println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    Ok(report.answer.exit_code())
}

fn class_json(report: &ClassReport) -> serde_json::Value {
    serde_json::json!({
        "matroid": report.matroid,
        "shifted": report.shifted,
        "weakly_matroid": report.weakly_matroid,
        "vertex_decomposable": report.vertex_decomposable,
        "hereditary_shellable": report.hereditary_shellable,
        "hereditarily_strongly_shellable": report.hereditarily_strongly_shellable,
        "strongly_shellable": report.strongly_shellable,
        "shellable": report.shellable,
    })
}

fn run_classify(path: &PathBuf, budget: Budget) -> Result<i32, CliError> {
    let (_, complex) = load_complex(path)?;
    let report = classify(&complex, budget)?;
    println!(
        "{}",
        serde_json::to_string_pretty(&class_json(&report)).expect("report serializes")
    );
    Ok(0)
}

fn h_decide(strong: bool, path: &PathBuf, budget: Budget) -> Result<i32, CliError> {
    let (_, complex) = load_complex(path)?;
    let started = Instant::now();
    let (question, decision, stats) = if strong {
        let (d, s) = decide_strongly_shellable_by_assignment_budgeted(&complex, budget)?;
        ("strongly-shellable-by-assignment", d, s)
    } else {
        let (d, s) = decide_shellable_by_assignment_budgeted(&complex, budget)?;
        ("shellable-by-assignment", d, s)
    };
    let answer = Answer::from_decision(&decision);
    let witness = decision.witness();
    let cert = Certificate::new(
        question,
        &complex,
        answer,
        witness.as_ref().map(|w| &w.order),
        witness.as_ref().map(|w| w.assignment.labels()),
        stats,
        started.elapsed().as_millis() as u64,
    );
    Ok(emit(&cert))
}

fn ideal(linear_quotients: bool, path: &PathBuf, budget: Budget) -> Result<i32, CliError> {
    let (_, complex) = load_complex(path)?;
    let ideal = facet_ideal(&complex);
    if !linear_quotients {
        let listing = serde_json::json!({
            "n_vars": ideal.n_vars(),
            "generators": ideal.generators().iter().map(ToString::to_string).collect::<Vec<_>>(),
        });
        println!("{}", serde_json::to_string_pretty(&listing).expect("listing serializes"));
        return Ok(0);
    }
    let started = Instant::now();
    let (decision, stats) = find_linear_quotient_order_budgeted(&ideal, budget)?;
    let cert = Certificate::new(
        "linear-quotients",
        &complex,
        Answer::from_decision(&decision),
        decision.witness().as_ref(),
        None,
        stats,
        started.elapsed().as_millis() as u64,
    );
    Ok(emit(&cert))
}

fn poset(emit_complex: bool, path: &PathBuf, budget: Budget) -> Result<i32, CliError> {
    let poset = parse_poset(&read_file(path)?).map_err(|e| format_err(path, e))?;
    if emit_complex {
        print!("{}", serialize_complex(&poset.order_complex()));
        return Ok(0);
    }
    let started = Instant::now();
    let (decision, stats) = decide_strongly_shellable_poset(&poset, budget)?;
    let cert = Certificate::new(
        "poset-strongly-shellable",
        &poset.order_complex(),
        Answer::from_decision(&decision),
        decision.witness().as_ref(),
        None,
        stats,
        started.elapsed().as_millis() as u64,
    );
    Ok(emit(&cert))
}

fn expand(by: &[usize], path: &PathBuf) -> Result<i32, CliError> {
    let (_, complex) = load_complex(path)?;
    let expanded = complex.expansion(by)?;
    print!("{}", serialize_complex(&expanded));
    Ok(0)
}
