//! The `pgx` command line: descriptor parsing, commands, and exit codes.
//!
//! Exit codes: 0 success, 1 a well-formed negative answer (a failed
//! verification), 2 usage, parse, construction or capacity errors.

pub mod descriptor;
pub mod element;

use std::collections::BTreeSet;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use pgx_core::spectra::{graphs_equal, mu, prime_graph, spectrum};
use pgx_core::structure::{self, Check, Status};
use pgx_core::{FrobeniusWitness, Group, PrimeGraph, VerificationReport};
use serde::Serialize;
use thiserror::Error;

pub use descriptor::{parse_descriptor, Descriptor, ParseError, ParseErrorKind};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Core(#[from] pgx_core::Error),
    #[error("{0}")]
    Usage(String),
}

/// What a command printed and the exit code it asks for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: 0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyKind {
    Frobenius,
    #[value(name = "2frobenius")]
    TwoFrobenius,
    Theorem,
}

/// Witness overrides for `verify`, as generator lists.
#[derive(Clone, Debug, Default)]
pub struct WitnessArgs {
    pub kernel: Option<String>,
    pub complement: Option<String>,
    /// `"H generators;K generators"`.
    pub series: Option<String>,
}

#[derive(Debug, Parser)]
#[command(name = "pgx", version, about = "Prime graphs of finite groups")]
struct Cli {
    /// Enumeration cap in elements.
    #[arg(long, global = true)]
    cap: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Element orders and their divisibility maxima.
    Spectrum { descriptor: String },
    /// The prime graph.
    Graph {
        descriptor: String,
        #[arg(long, value_enum, default_value = "json")]
        format: GraphFormat,
    },
    /// Labeled comparison of two prime graphs.
    Compare { left: String, right: String },
    /// Verify a Frobenius or 2-Frobenius structure, or classify.
    Verify {
        #[arg(value_enum)]
        kind: VerifyKind,
        descriptor: String,
        #[arg(long)]
        kernel: Option<String>,
        #[arg(long)]
        complement: Option<String>,
        #[arg(long)]
        series: Option<String>,
    },
}

fn build(text: &str, cap: Option<usize>) -> Result<Arc<Group>, CliError> {
    let d = parse_descriptor(text)?;
    let g = d.build()?;
    if let Some(cap) = cap {
        g.set_cap(cap);
    }
    Ok(g)
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn cmd_spectrum(descriptor: &str, cap: Option<usize>) -> Result<Outcome, CliError> {
    #[derive(Serialize)]
    struct Doc<'a> {
        order: u64,
        element_orders: &'a BTreeSet<u64>,
        mu: &'a BTreeSet<u64>,
    }
    let g = build(descriptor, cap)?;
    let s = spectrum(&g)?;
    let m = mu(&s);
    Ok(Outcome::ok(json(&Doc {
        order: s.source_order(),
        element_orders: s.orders(),
        mu: m.maxima(),
    })))
}

pub fn render_dot(graph: &PrimeGraph) -> String {
    if graph.vertices().is_empty() {
        return "graph G { }\n".into();
    }
    let mut out = String::from("graph G {\n");
    for v in graph.vertices() {
        out.push_str(&format!("  {v};\n"));
    }
    for (p, q) in graph.edges() {
        out.push_str(&format!("  {p} -- {q};\n"));
    }
    out.push_str("}\n");
    out
}

pub fn cmd_graph(
    descriptor: &str,
    format: GraphFormat,
    cap: Option<usize>,
) -> Result<Outcome, CliError> {
    let g = build(descriptor, cap)?;
    let graph = prime_graph(&spectrum(&g)?);
    Ok(Outcome::ok(match format {
        GraphFormat::Json => json(&graph),
        GraphFormat::Dot => render_dot(&graph),
    }))
}

/// Exit 0 when the labeled graphs coincide, 1 otherwise.
pub fn cmd_compare(left: &str, right: &str, cap: Option<usize>) -> Result<Outcome, CliError> {
    #[derive(Serialize)]
    struct Side<'a> {
        descriptor: String,
        #[serde(flatten)]
        graph: &'a PrimeGraph,
    }
    #[derive(Serialize)]
    struct Doc<'a> {
        equal: bool,
        left: Side<'a>,
        right: Side<'a>,
        vertex_difference: Vec<u64>,
        edge_difference: Vec<(u64, u64)>,
    }
    let dl = parse_descriptor(left)?;
    let dr = parse_descriptor(right)?;
    let gl = build(left, cap)?;
    let gr = build(right, cap)?;
    let a = prime_graph(&spectrum(&gl)?);
    let b = prime_graph(&spectrum(&gr)?);
    let equal = graphs_equal(&a, &b);
    let doc = Doc {
        equal,
        vertex_difference: a
            .vertices()
            .symmetric_difference(b.vertices())
            .copied()
            .collect(),
        edge_difference: a.edges().symmetric_difference(b.edges()).copied().collect(),
        left: Side {
            descriptor: dl.to_string(),
            graph: &a,
        },
        right: Side {
            descriptor: dr.to_string(),
            graph: &b,
        },
    };
    Ok(Outcome {
        stdout: json(&doc),
        stderr: String::new(),
        code: if equal { 0 } else { 1 },
    })
}

fn missing(subject: &str, what: &str) -> VerificationReport {
    let mut r = VerificationReport::new(subject);
    r.push(Check {
        name: "witness".into(),
        status: Status::Fail,
        detail: format!("no {what} supplied and none found"),
        witnesses: Vec::new(),
    });
    r
}

fn frobenius_report(g: &Arc<Group>, w: &WitnessArgs) -> Result<VerificationReport, CliError> {
    let witness = match (&w.kernel, &w.complement) {
        (Some(k), Some(c)) => Some(FrobeniusWitness {
            kernel: element::parse_subgroup(g, "K", k).map_err(CliError::Usage)?,
            complement: element::parse_subgroup(g, "C", c).map_err(CliError::Usage)?,
        }),
        (None, None) => match structure::natural_witness(g)? {
            Some(w) => Some(w),
            None => match structure::find_frobenius_structure(g) {
                Ok(found) => found,
                Err(pgx_core::Error::Precondition(_)) => None,
                Err(e) => return Err(e.into()),
            },
        },
        _ => {
            return Err(CliError::Usage(
                "--kernel and --complement go together".into(),
            ))
        }
    };
    Ok(match witness {
        Some(w) => structure::verify_frobenius(g, &w)?,
        None => missing(g.name(), "Frobenius witness"),
    })
}

fn two_frobenius_report(g: &Arc<Group>, w: &WitnessArgs) -> Result<VerificationReport, CliError> {
    let series = match &w.series {
        Some(text) => {
            let parts = element::split_top(text, ';');
            let [h, k] = parts[..] else {
                return Err(CliError::Usage(
                    "--series takes \"H generators;K generators\"".into(),
                ));
            };
            Some((
                element::parse_subgroup(g, "H", h).map_err(CliError::Usage)?,
                element::parse_subgroup(g, "K", k).map_err(CliError::Usage)?,
            ))
        }
        None => match structure::natural_series(g)? {
            Some(s) => Some(s),
            None => structure::find_2frobenius_structure(g)?,
        },
    };
    Ok(match series {
        Some((h, k)) => structure::verify_2frobenius(g, &h, &k)?,
        None => missing(g.name(), "2-Frobenius series"),
    })
}

/// Exit 0 when every check passed (for `theorem`: a case matched), 1 otherwise.
pub fn cmd_verify(
    kind: VerifyKind,
    descriptor: &str,
    witness: &WitnessArgs,
    cap: Option<usize>,
) -> Result<Outcome, CliError> {
    #[derive(Serialize)]
    struct Doc<'a> {
        kind: &'a str,
        #[serde(skip_serializing_if = "Option::is_none")]
        case: Option<String>,
        #[serde(flatten)]
        report: &'a VerificationReport,
    }
    let g = build(descriptor, cap)?;
    let (name, case, report) = match kind {
        VerifyKind::Frobenius => ("frobenius", None, frobenius_report(&g, witness)?),
        VerifyKind::TwoFrobenius => ("2frobenius", None, two_frobenius_report(&g, witness)?),
        VerifyKind::Theorem => {
            let (case, report) = structure::classify(&g)?;
            ("theorem", Some(case), report)
        }
    };
    let ok = match case {
        Some(c) => c != structure::TheoremCase::NoMatch,
        None => report.passed(),
    };
    Ok(Outcome {
        stdout: json(&Doc {
            kind: name,
            case: case.map(|c| c.to_string()),
            report: &report,
        }),
        stderr: String::new(),
        code: if ok { 0 } else { 1 },
    })
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            };
        }
    };
    let result = match &cli.command {
        Command::Spectrum { descriptor } => cmd_spectrum(descriptor, cli.cap),
        Command::Graph { descriptor, format } => cmd_graph(descriptor, *format, cli.cap),
        Command::Compare { left, right } => cmd_compare(left, right, cli.cap),
        Command::Verify {
            kind,
            descriptor,
            kernel,
            complement,
            series,
        } => {
            let w = WitnessArgs {
                kernel: kernel.clone(),
                complement: complement.clone(),
                series: series.clone(),
            };
            cmd_verify(*kind, descriptor, &w, cli.cap)
        }
    };
    result.unwrap_or_else(|e| Outcome {
        stdout: String::new(),
        stderr: format!("pgx: {e}\n"),
        code: 2,
    })
}
