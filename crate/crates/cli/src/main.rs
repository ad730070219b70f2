use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use log::info;
use serde::Serialize;

use zdgraph::{
    all_ideals, gamma_ideal, generate_ideal, is_prime, is_radical, parse_ring_spec, run_catalogue,
    Catalogue, FaultInjection, FiniteRing, PairAnalysis, RingSpec, VerifyConfig,
    DEFAULT_ENUMERATION_CAP, DEFAULT_MAX_ORDER,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Dot,
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(
    name = "zdgraph",
    version,
    about = "Ideal-based zero-divisor graphs of finite commutative rings"
)]
struct Cli {
    /// Output format (defaults: dot for `graph`, json for `verify`, text otherwise).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write the artifact here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Largest ring order that may be constructed.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ORDER)]
    max_order: usize,
    /// Largest ring order whose ideals may be enumerated.
    #[arg(long, global = true, default_value_t = DEFAULT_ENUMERATION_CAP)]
    max_ideal_order: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Describe a ring: order, zero-divisors, nilpotents, reducedness, regularity.
    Ring { spec: String },
    /// List every ideal with its generators and radical/prime flags.
    Ideals { spec: String },
    /// Export Γ_I(R); with no --ideal this is Γ(R).
    Graph {
        spec: String,
        /// Comma-separated generator element indices.
        #[arg(long, value_delimiter = ',')]
        ideal: Vec<usize>,
    },
    /// Evaluate every graph- and ring-side property for one (R, I) pair.
    Check {
        spec: String,
        #[arg(long, value_delimiter = ',')]
        ideal: Vec<usize>,
    },
    /// Run all theorem checks over a catalogue; exit status 1 on any failure.
    Verify {
        /// `default` or a path to a TOML catalogue file.
        #[arg(long, default_value = "default")]
        catalogue: String,
        /// Worker threads (defaults to available processors).
        #[arg(long)]
        jobs: Option<usize>,
        /// Single-threaded deterministic mode.
        #[arg(long)]
        seedless: bool,
        /// Corrupt every Γ_I(R) before checking (test hook).
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

struct Output {
    text: String,
    failed: bool,
}

impl From<String> for Output {
    fn from(text: String) -> Self {
        Output {
            text,
            failed: false,
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn"))
        .target(env_logger::Target::Stderr)
        .init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if let Err(e) = emit(&cli, &out.text) {
                eprintln!("error: {e:#}");
                return ExitCode::from(2);
            }
            if out.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn emit(cli: &Cli, text: &str) -> Result<()> {
    match &cli.out {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Ring { spec } => cmd_ring(cli, spec).map(Output::from),
        Command::Ideals { spec } => cmd_ideals(cli, spec).map(Output::from),
        Command::Graph { spec, ideal } => cmd_graph(cli, spec, ideal).map(Output::from),
        Command::Check { spec, ideal } => cmd_check(cli, spec, ideal).map(Output::from),
        Command::Verify {
            catalogue,
            jobs,
            seedless,
            inject_fault,
        } => cmd_verify(cli, catalogue, *jobs, *seedless, *inject_fault),
    }
}

fn build_ring(cli: &Cli, spec: &str) -> Result<FiniteRing> {
    let parsed: RingSpec =
        parse_ring_spec(spec).with_context(|| format!("invalid ring spec `{spec}`"))?;
    Ok(parsed.build(cli.max_order)?)
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn text_only(cli: &Cli, command: &str) -> Result<Format> {
    match cli.format.unwrap_or(Format::Text) {
        Format::Dot => bail!("`{command}` has no dot output"),
        f => Ok(f),
    }
}

#[derive(Serialize)]
struct RingSummary<'a> {
    spec: &'a str,
    order: usize,
    zero_divisor_count: usize,
    nilpotent_count: usize,
    unit_count: usize,
    reduced: bool,
    von_neumann_regular: bool,
    elements: &'a [String],
}

fn cmd_ring(cli: &Cli, spec: &str) -> Result<String> {
    let format = text_only(cli, "ring")?;
    let ring = build_ring(cli, spec)?;
    let summary = RingSummary {
        spec: ring.spec(),
        order: ring.order(),
        zero_divisor_count: ring.zero_divisors().len(),
        nilpotent_count: ring.nilpotents().len(),
        unit_count: ring.units().len(),
        reduced: ring.is_reduced(),
        von_neumann_regular: ring.is_von_neumann_regular(),
        elements: ring.names(),
    };
    Ok(match format {
        Format::Json => json(&summary),
        _ => format!(
            "ring: {}\norder: {}\nzero-divisors: {}\nnilpotents: {}\nunits: {}\nreduced: {}\nvon Neumann regular: {}\nelements: {}\n",
            summary.spec,
            summary.order,
            summary.zero_divisor_count,
            summary.nilpotent_count,
            summary.unit_count,
            summary.reduced,
            summary.von_neumann_regular,
            summary.elements.join(" "),
        ),
    })
}

#[derive(Serialize)]
struct IdealSummary {
    size: usize,
    generators: Vec<usize>,
    members: Vec<usize>,
    radical: bool,
    prime: bool,
}

fn cmd_ideals(cli: &Cli, spec: &str) -> Result<String> {
    let format = text_only(cli, "ideals")?;
    let ring = build_ring(cli, spec)?;
    let ideals = all_ideals(&ring, cli.max_ideal_order)?
        .into_iter()
        .map(|i| {
            Ok(IdealSummary {
                size: i.len(),
                radical: is_radical(&ring, &i)?,
                prime: is_prime(&ring, &i),
                generators: i.generators().to_vec(),
                members: i.members().members().to_vec(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(match format {
        Format::Json => json(&ideals),
        _ => {
            let mut out = format!("ring: {} ({} ideals)\n", ring.spec(), ideals.len());
            for i in &ideals {
                let gens: Vec<String> = i
                    .generators
                    .iter()
                    .map(|g| ring.name(*g).to_string())
                    .collect();
                out.push_str(&format!(
                    "size {:>4}  ({})  radical={} prime={}\n",
                    i.size,
                    gens.join(","),
                    i.radical,
                    i.prime
                ));
            }
            out
        }
    })
}

fn cmd_graph(cli: &Cli, spec: &str, gens: &[usize]) -> Result<String> {
    let ring = build_ring(cli, spec)?;
    let ideal = generate_ideal(&ring, gens)?;
    let graph = gamma_ideal(&ring, &ideal)?;
    Ok(match cli.format.unwrap_or(Format::Dot) {
        Format::Dot => graph.to_dot(),
        Format::Json => graph.to_json(),
        Format::Text => {
            let mut out = format!(
                "{}: {} vertices, {} edges\n",
                graph.name(),
                graph.vertex_count(),
                graph.edge_count()
            );
            for (a, b) in graph.edges() {
                out.push_str(&format!("{} -- {}\n", graph.label(a), graph.label(b)));
            }
            out
        }
    })
}

fn cmd_check(cli: &Cli, spec: &str, gens: &[usize]) -> Result<String> {
    let format = text_only(cli, "check")?;
    let ring = build_ring(cli, spec)?;
    let ideal = generate_ideal(&ring, gens)?;
    let analysis = PairAnalysis::new(&ring, ideal)?;
    let verdict = analysis.verdict();
    Ok(match format {
        Format::Json => json(&verdict),
        _ => {
            let shape = match verdict.gi_complete_n {
                Some(n) => format!("K^{n}"),
                None => "not complete".to_string(),
            };
            let case = match verdict.classification_case {
                Some(c) => format!("case ({c})"),
                None => "none".to_string(),
            };
            format!(
                "ring: {}\nideal: {:?} (generators {:?})\nradical: {}\nprime: {}\nR/I: order {}, |Z(R/I)| = {}{}\nΓ(R/I): {} vertices, complemented {}, uniquely complemented {}\nΓ_I(R): {} vertices, {} edges, {}\nΓ_I(R) complemented: {}\nΓ_I(R) uniquely complemented: {}\nT(R/I) von Neumann regular: {}\nclassification: {}\n",
                verdict.ring_spec,
                verdict.ideal_members,
                verdict.ideal_generators,
                verdict.ideal_is_radical,
                verdict.ideal_is_prime,
                verdict.quotient_order,
                verdict.quotient_z_count,
                verdict
                    .quotient_label
                    .as_deref()
                    .map(|l| format!(" (≅ {l})"))
                    .unwrap_or_default(),
                verdict.quotient_vertex_count,
                verdict.quotient_graph_complemented,
                verdict.quotient_graph_uniquely_complemented,
                verdict.gi_vertex_count,
                verdict.gi_edge_count,
                shape,
                verdict.gi_complemented,
                verdict.gi_uniquely_complemented,
                verdict.quotient_vnr,
                case,
            )
        }
    })
}

fn cmd_verify(
    cli: &Cli,
    catalogue: &str,
    jobs: Option<usize>,
    seedless: bool,
    inject_fault: bool,
) -> Result<Output> {
    let catalogue = if catalogue == "default" {
        Catalogue::default_catalogue()
    } else {
        Catalogue::load(std::path::Path::new(catalogue))?
    };
    if jobs == Some(0) {
        bail!("--jobs must be positive");
    }
    let config = VerifyConfig {
        max_order: cli.max_order,
        enumeration_cap: cli.max_ideal_order,
        jobs: if seedless { Some(1) } else { jobs },
        fault: if inject_fault {
            FaultInjection::DropEdge
        } else {
            FaultInjection::None
        },
    };
    info!("verifying catalogue: {}", catalogue.description);
    let report = run_catalogue(&catalogue, &config)?;
    for c in &report.checks {
        eprintln!(
            "{:<28} applicable {:>5}/{:<5} failures {:>4}{}",
            c.check_name,
            c.pairs_applicable,
            c.pairs_tested,
            c.failure_count,
            if c.low_coverage {
                "  (low coverage)"
            } else {
                ""
            }
        );
    }
    let text = match cli.format.unwrap_or(Format::Json) {
        Format::Json => report.to_json(),
        Format::Text => {
            let mut out = format!(
                "catalogue: {}\nrings: {}  pairs: {}  skipped: {}\n",
                report.catalogue,
                report.rings_tested,
                report.pairs_tested,
                report.skipped.len()
            );
            for c in &report.checks {
                out.push_str(&format!(
                    "{} {} (applicable {}, failures {})\n",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.check_name,
                    c.pairs_applicable,
                    c.failure_count
                ));
                for f in &c.failures {
                    out.push_str(&format!(
                        "    {} I={:?}: {} {:?}\n",
                        f.ring_spec, f.ideal_members, f.detail, f.witness
                    ));
                }
            }
            out.push_str(&format!("failures_total: {}\n", report.failures_total));
            out
        }
        Format::Dot => bail!("`verify` has no dot output"),
    };
    Ok(Output {
        text,
        failed: report.failures_total > 0,
    })
}
