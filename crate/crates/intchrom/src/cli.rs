use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use intchrom_core::{
    cycles::enumerate_simple_cycles,
    evaluate::{chi_int_star, chi_via_orientations, orientation_score},
    oracle,
    orientation::{enumerate_acyclic, longest_path},
    product::{build_product, check_lemma3, chi_int_k, derive_interleaved_coloring},
    ser, AcyclicOrientation, Digraph, Graph, KTupleColoring, Limits, Rational,
};
use thiserror::Error;

use crate::{
    format::{self, Format},
    gen,
    report::*,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_CAP: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "intchrom",
    version,
    about = "Exact interleaved multichromatic numbers via acyclic orientations"
)]
struct Cli {
    /// Print a single JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest edge count for exhaustive orientation scans.
    #[arg(long, global = true, default_value_t = Limits::DEFAULT.max_edges)]
    cap_edges: usize,
    /// Largest number of simple cycles to enumerate.
    #[arg(long, global = true, default_value_t = Limits::DEFAULT.max_cycles)]
    cap_cycles: usize,
    /// Seed for `gen`.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Input graph format; detected from the file when omitted.
    #[arg(long, global = true, value_enum)]
    format: Option<FormatArg>,
    /// Include wall-clock timing in `analyze` output.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Dimacs,
    Edgelist,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Dimacs => Format::Dimacs,
            FormatArg::Edgelist => Format::EdgeList,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Interleaved multichromatic number with witnesses, plus the chromatic number.
    Analyze { file: String },
    /// Chromatic number as the shortest longest path over acyclic orientations.
    Chi { file: String },
    /// Interleaved k-chromatic number through layered orientations of G^k.
    ChiIntK {
        file: String,
        #[arg(long)]
        k: usize,
        /// Also print the interleaved coloring derived from the witness.
        #[arg(long)]
        coloring: bool,
    },
    /// Acyclic orientations: count (default) or list.
    Orientations {
        file: String,
        #[arg(long, conflicts_with = "list")]
        count: bool,
        #[arg(long)]
        list: bool,
    },
    /// Simple cycles: count, or list in canonical form.
    Cycles {
        file: String,
        #[arg(long)]
        list: bool,
    },
    /// The lexicographic product G^k as an edge list.
    Product {
        file: String,
        #[arg(long)]
        k: usize,
    },
    /// Scheduling-by-edge-reversal run and its measured concurrency.
    Ser {
        file: String,
        /// Initial orientation as `u>v` pairs; defaults to lower-to-higher ids.
        #[arg(long, conflicts_with = "best")]
        orientation: Option<String>,
        /// Start from the witness orientation of `analyze`.
        #[arg(long)]
        best: bool,
        #[arg(long)]
        max_steps: Option<usize>,
        /// Dump every visited state.
        #[arg(long)]
        trace: bool,
    },
    /// Brute-force reference computations.
    Oracle {
        #[command(subcommand)]
        which: OracleCommand,
    },
    /// Check the morphology of longest paths in layered orientations of G^k.
    #[command(name = "lemma3-check")]
    Lemma3Check {
        file: String,
        #[arg(long)]
        k: usize,
        /// Check only this orientation instead of all acyclic ones.
        #[arg(long)]
        orientation: Option<String>,
    },
    /// Random graph generation.
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        /// Output format.
        #[arg(long, value_enum, default_value = "dimacs")]
        out: FormatArg,
    },
}

#[derive(Debug, Subcommand)]
enum OracleCommand {
    /// Least palette of a k-tuple coloring by backtracking.
    ChiK {
        file: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        interleaved: bool,
        /// Also print the coloring found.
        #[arg(long)]
        coloring: bool,
    },
    /// Chromatic number by backtracking.
    Chromatic { file: String },
    /// Simple cycles by permuting node subsets.
    Cycles {
        file: String,
        #[arg(long)]
        list: bool,
    },
    /// Acyclic orientation count by directed DFS.
    AcyclicCount { file: String },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GenKind {
    Gnp,
    Forest,
    Connected,
    Cyclic,
    Cycle,
    Complete,
    Path,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Cap(String),
}

impl From<intchrom_core::Error> for CliError {
    fn from(e: intchrom_core::Error) -> Self {
        if e.is_cap_exceeded() {
            CliError::Cap(e.to_string())
        } else {
            CliError::Input(e.to_string())
        }
    }
}

impl From<format::OrientationError> for CliError {
    fn from(e: format::OrientationError) -> Self {
        CliError::Input(format!("orientation: {e}"))
    }
}

/// Exit code and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the command line on `args` (program name first). A file argument of
/// `-` reads `stdin`.
pub fn run_cli<I, S>(args: I, stdin: Option<&str>) -> CliOutput
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                CliOutput {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                CliOutput {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match execute(&cli, stdin) {
        Ok(stdout) => CliOutput {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        },
        Err(CliError::Input(msg)) => CliOutput {
            code: EXIT_INPUT,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(CliError::Cap(msg)) => CliOutput {
            code: EXIT_CAP,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}

impl Cli {
    fn limits(&self) -> Limits {
        Limits {
            max_edges: self.cap_edges,
            max_cycles: self.cap_cycles,
            ..Limits::DEFAULT
        }
    }

    fn load(&self, path: &str, stdin: Option<&str>) -> Result<Graph, CliError> {
        let text = if path == "-" {
            stdin
                .ok_or_else(|| CliError::Input("no standard input available".into()))?
                .to_string()
        } else {
            std::fs::read_to_string(path)
                .map_err(|e| CliError::Input(format!("cannot read {path}: {e}")))?
        };
        let format = match self.format {
            Some(f) => f.into(),
            None if path.ends_with(".col") || path.ends_with(".dimacs") => Format::Dimacs,
            None => format::detect_format(&text),
        };
        format::parse_graph(&text, format).map_err(|e| CliError::Input(format!("{path}: {e}")))
    }
}

fn arcs(g: &Graph, o: &AcyclicOrientation) -> Vec<String> {
    format::orientation_arcs(g, o)
}

fn coloring_report(c: &KTupleColoring) -> ColoringReport {
    ColoringReport {
        k: c.k(),
        palette: c.palette(),
        interleaved: c.is_interleaved(),
        colors: (0..c.node_count()).map(|v| c.colors(v).to_vec()).collect(),
        text: format::write_coloring(c),
    }
}

fn execute(cli: &Cli, stdin: Option<&str>) -> Result<String, CliError> {
    let limits = cli.limits();
    let json = cli.json;
    let out = match &cli.command {
        Command::Analyze { file } => {
            let g = cli.load(file, stdin)?;
            let start = Instant::now();
            let w = chi_int_star(&g, &limits)?;
            let (chi, chi_o) = chi_via_orientations(&g, &limits)?;
            let elapsed = start.elapsed();
            AnalyzeReport {
                chi_int_star: w.value.to_string(),
                suggested_k: w.suggested_k,
                chi,
                forest: w.is_forest(),
                nodes: g.node_count(),
                edges: g.edge_count(),
                orientation: arcs(&g, &w.orientation),
                critical_cycle: w.critical_cycle.as_ref().map(format::write_cycle),
                chi_orientation: arcs(&g, &chi_o),
                orientations_scanned: w.orientations_scanned,
                cycles: w.cycle_count,
                timing_ms: cli.timing.then_some(elapsed.as_secs_f64() * 1e3),
            }
            .render(json)
        }
        Command::Chi { file } => {
            let g = cli.load(file, stdin)?;
            let (chi, o) = chi_via_orientations(&g, &limits)?;
            let (_, path) = longest_path(&Digraph::from_orientation(&g, &o))?;
            ChiReport {
                chi,
                orientation: arcs(&g, &o),
                longest_path: path.nodes().to_vec(),
            }
            .render(json)
        }
        Command::ChiIntK { file, k, coloring } => {
            let g = cli.load(file, stdin)?;
            let (value, lo) = chi_int_k(&g, *k, &limits)?;
            let coloring = if *coloring {
                let c = derive_interleaved_coloring(&g, lo.base_orientation(), *k, &limits)?;
                Some(coloring_report(&c))
            } else {
                None
            };
            ChiIntKReport {
                k: *k,
                chi_int_k: value,
                ratio: Rational::new(value as u64, *k as u64).to_string(),
                orientation: arcs(&g, lo.base_orientation()),
                coloring,
            }
            .render(json)
        }
        Command::Orientations { file, list, .. } => {
            let g = cli.load(file, stdin)?;
            let all = enumerate_acyclic(&g, limits.max_edges)?;
            if *list {
                let listed: Vec<_> = all.map(|o| arcs(&g, &o)).collect();
                OrientationsReport {
                    count: listed.len(),
                    orientations: Some(listed),
                }
            } else {
                OrientationsReport {
                    count: all.count(),
                    orientations: None,
                }
            }
            .render(json)
        }
        Command::Cycles { file, list } => {
            let g = cli.load(file, stdin)?;
            let cycles = enumerate_simple_cycles(&g, limits.max_cycles)?;
            CyclesReport {
                count: cycles.len(),
                cycles: list.then(|| cycles.iter().map(format::write_cycle).collect()),
            }
            .render(json)
        }
        Command::Product { file, k } => {
            let g = cli.load(file, stdin)?;
            let p = build_product(&g, *k, &limits)?;
            let text = format!(
                "# lexicographic product G^{k}: node i*{k}+(layer-1) is copy `layer` of base node i\n{}",
                format::to_edgelist(p.graph())
            );
            ProductReport {
                k: *k,
                nodes: p.graph().node_count(),
                edges: p.graph().edge_count(),
                edge_list: p.graph().edges().to_vec(),
                text,
            }
            .render(json)
        }
        Command::Ser {
            file,
            orientation,
            best,
            max_steps,
            trace,
        } => {
            let g = cli.load(file, stdin)?;
            let initial = match (orientation, best) {
                (Some(spec), _) => format::parse_orientation(&g, spec)?,
                (None, true) => chi_int_star(&g, &limits)?.orientation,
                (None, false) => AcyclicOrientation::increasing(&g),
            };
            let steps = max_steps.unwrap_or_else(|| ser::default_max_steps(&g));
            let run = ser::run(&g, &initial, steps)?;
            let (concurrency, note) = match ser::concurrency(&run) {
                Ok(c) => (Some(c.to_string()), None),
                Err(e) => (None, Some(format!("no concurrency value: {e}"))),
            };
            let cycle_formula = if g.is_forest() {
                None
            } else {
                let cycles = enumerate_simple_cycles(&g, limits.max_cycles)?;
                let (score, _) = orientation_score(&g, &initial, &cycles)?;
                Some(score.recip().to_string())
            };
            SerReport {
                initial: arcs(&g, &initial),
                tail_length: run.tail_start,
                period: run.period,
                ops_per_node: run.ops_per_node.clone(),
                rate: run.uniform_rate(),
                concurrency,
                cycle_formula,
                note,
                trace: trace.then(|| run.states.iter().map(|s| arcs(&g, s)).collect()),
            }
            .render(json)
        }
        Command::Oracle { which } => oracle_command(cli, which, stdin)?.render(json),
        Command::Lemma3Check {
            file,
            k,
            orientation,
        } => {
            let g = cli.load(file, stdin)?;
            let orientations = match orientation {
                Some(spec) => vec![format::parse_orientation(&g, spec)?],
                None => enumerate_acyclic(&g, limits.max_edges)?.collect(),
            };
            let mut report = Lemma3CheckReport {
                k: *k,
                passed: true,
                orientations_checked: 0,
                paths_checked: 0,
                violations: Vec::new(),
            };
            for o in &orientations {
                let r = check_lemma3(&g, o, *k, &limits)?;
                report.orientations_checked += 1;
                report.paths_checked += r.paths_checked;
                report.passed &= r.passed();
                for v in r.violations {
                    report.violations.push(format!(
                        "orientation [{}] path {}: ({},{})->({},{}) {:?}",
                        arcs(&g, o).join(" "),
                        v.path_index,
                        v.from.0,
                        v.from.1,
                        v.to.0,
                        v.to.1,
                        v.kind
                    ));
                }
            }
            report.render(json)
        }
        Command::Gen { kind, n, p, out } => {
            let mut rng = gen::rng(cli.seed);
            let g = match kind {
                GenKind::Gnp => gen::gnp(*n, *p, &mut rng),
                GenKind::Forest if *n >= 2 => gen::forest(*n, &mut rng),
                GenKind::Connected => gen::connected(*n, *p, &mut rng),
                GenKind::Cyclic if *n >= 3 => gen::connected_cyclic(*n, *p, &mut rng),
                GenKind::Cycle if *n >= 3 => Graph::cycle(*n),
                GenKind::Complete if *n >= 1 => Graph::complete(*n),
                GenKind::Path if *n >= 1 => Graph::path(*n),
                _ => {
                    return Err(CliError::Input(format!(
                        "n = {n} is too small for {kind:?}"
                    )))
                }
            };
            GraphReport {
                nodes: g.node_count(),
                edges: g.edges().to_vec(),
                text: format::write_graph(&g, (*out).into()),
            }
            .render(json)
        }
    };
    Ok(out)
}

fn oracle_command(
    cli: &Cli,
    which: &OracleCommand,
    stdin: Option<&str>,
) -> Result<OracleReport, CliError> {
    Ok(match which {
        OracleCommand::ChiK {
            file,
            k,
            interleaved,
            coloring,
        } => {
            let g = cli.load(file, stdin)?;
            let c = oracle::brute_k_coloring(&g, *k, *interleaved)?;
            OracleReport {
                oracle: "chi-k",
                value: c.palette() as u64,
                cycles: None,
                coloring: coloring.then(|| coloring_report(&c)),
            }
        }
        OracleCommand::Chromatic { file } => {
            let g = cli.load(file, stdin)?;
            OracleReport {
                oracle: "chromatic",
                value: oracle::brute_chromatic(&g)? as u64,
                cycles: None,
                coloring: None,
            }
        }
        OracleCommand::Cycles { file, list } => {
            let g = cli.load(file, stdin)?;
            let cycles = oracle::brute_cycles(&g)?;
            OracleReport {
                oracle: "cycles",
                value: cycles.len() as u64,
                cycles: list.then(|| cycles.iter().map(format::write_cycle).collect()),
                coloring: None,
            }
        }
        OracleCommand::AcyclicCount { file } => {
            let g = cli.load(file, stdin)?;
            OracleReport {
                oracle: "acyclic-count",
                value: oracle::brute_acyclic_count(&g)?,
                cycles: None,
                coloring: None,
            }
        }
    })
}
