//! Argument handling for the `tesscover` binary. [`run`] takes the argument
//! vector and a reader for standard input and returns the exit code with
//! everything that should go to stdout and stderr, so the whole command
//! surface can be tested in-process.
//!
//! Exit codes: 0 on success, 1 when the answer is negative (a `--k` decision
//! fails, a cover is invalid, a check fails), 2 on usage, input and timeout
//! errors.

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use tesscover::cliques::clique_graph;
use tesscover::coloring::{chromatic_index, chromatic_number};
use tesscover::cover::{
    bounds, decide_k_tessellable_with, greedy_cover, tessellation_number_with,
    upper_bound_via_clique_coloring, CoverResult, Method, SolveOptions,
};
use tesscover::enumerate::{
    enumerate_all_tessellations, enumerate_tessellations_restricted, DEFAULT_CAP,
};
use tesscover::error::SolveError;
use tesscover::families::{Family, FamilySpec};
use tesscover::formats::{
    cover_docs, detect_input, export_annotated, parse_edge_list, parse_graph6, parse_json_document,
    to_edge_list, to_graph6, ExportKind, GraphDoc, InputKind, TessellationDoc,
};
use tesscover::graph::Graph;
use tesscover::par::Execution;
use tesscover::tessellation::{is_valid_cover, TessellationCover};
use tesscover::verify::{
    out_of_scope_rows, parse_sweep_spec, render_reports, render_sweep, run_all_checks, run_check,
    sweep_with, Envelope, RowStatus, Status, SweepOptions, SweepRow, VerificationReport,
};

/// Largest `k` accepted by the exact decision without `--greedy`/`--upper`.
pub const MAX_DECISION_K: usize = 8;

#[derive(Debug, Parser)]
#[command(
    name = "tesscover",
    version,
    about = "Minimum tessellation covers of graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a member of a graph family
    Gen(GenArgs),
    /// List the maximal cliques
    Cliques(AnalysisArgs),
    /// Build the clique graph K(G)
    Cliquegraph(AnalysisArgs),
    /// Chromatic number of G or chromatic index of G
    Chroma(ChromaArgs),
    /// Stream tessellations, one JSON object per line
    Tessellations(TessellationArgs),
    /// Compute a tessellation cover
    Cover(CoverArgs),
    /// Run the built-in checks and optional family sweeps
    Verify(VerifyArgs),
    /// Tabulate T(G) against chi(K(G)) over family ranges
    Sweep(SweepArgs),
    /// Render a graph, and its cover if the input has one
    Export(ExportArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Auto,
    Graph6,
    Edgelist,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
    Dot,
    Graph6,
    Edgelist,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Input file; standard input when absent or `-`
    pub input: Option<PathBuf>,
    /// Input format; `auto` tells JSON, edge lists and graph6 apart
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    pub input_format: InputFormat,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// wheel, windmill, e3n, star, complete, cycle, path, petersen, edgeless
    #[arg(long)]
    pub family: Family,
    /// Size parameter (rim size, n of E_{3,n}, leaves, blades or vertices)
    #[arg(long, default_value_t = 0)]
    pub n: usize,
    /// Windmill clique size
    #[arg(long, default_value_t = 3)]
    pub blade: usize,
    #[arg(long, value_enum, default_value_t = OutputFormat::Graph6)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct AnalysisArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct ChromaArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Chromatic number (the default)
    #[arg(long, conflicts_with = "edge")]
    pub vertex: bool,
    /// Chromatic index
    #[arg(long)]
    pub edge: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct TessellationArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Stop after this many tessellations
    #[arg(long, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
    /// Every tessellation, not only those containing a maximal clique
    #[arg(long)]
    pub all: bool,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("method").args(["exact", "greedy", "upper"]).multiple(false))]
pub struct CoverArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Exact minimum cover (the default)
    #[arg(long)]
    pub exact: bool,
    /// Greedy set cover over tessellations containing a maximal clique
    #[arg(long)]
    pub greedy: bool,
    /// The cover built from an optimal coloring of K(G)
    #[arg(long)]
    pub upper: bool,
    /// Decide whether at most K tessellations suffice
    #[arg(long, conflicts_with_all = ["greedy", "upper"])]
    pub k: Option<usize>,
    /// Sequential search; the output is then byte-for-byte reproducible
    #[arg(long)]
    pub canonical: bool,
    /// Wall-clock limit for the exact search, in seconds
    #[arg(long)]
    pub timeout: Option<f64>,
    /// Accepted for compatibility; every solver is deterministic and ignores it
    #[arg(long)]
    pub seed: Option<u64>,
    /// Solve graphs outside the exact-solver envelope anyway
    #[arg(long)]
    pub force: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Run only this check (repeatable), e.g. w6, e3n-3, windmill-5-3
    #[arg(long)]
    pub check: Vec<String>,
    /// Add a sweep over `family:range` (repeatable), e.g. wheel:3..8
    #[arg(long)]
    pub sweep: Vec<String>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// `family:range` specs, e.g. wheel:3..8 e3n:2..4 windmill/4:2..5
    #[arg(required = true)]
    pub specs: Vec<String>,
    /// Per-row time limit in seconds
    #[arg(long, default_value_t = 60.0)]
    pub timeout: f64,
    /// Sequential execution
    #[arg(long)]
    pub canonical: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("kind").args(["dot", "json"]).required(true))]
pub struct ExportArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long)]
    pub dot: bool,
    #[arg(long)]
    pub json: bool,
}

/// Result of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: line(message.into()),
        }
    }
}

fn line(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn to_json<T: Serialize>(value: &T) -> String {
    line(serde_json::to_string(value).expect("output types serialize"))
}

/// Parses `args` (including the program name) and runs the command.
/// `stdin` is read only by commands that take a graph and no input file.
pub fn run<I, S>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome::ok(text)
                }
                _ => Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    execute(cli.command, stdin)
}

pub fn execute(command: Command, stdin: &mut dyn Read) -> Outcome {
    let result = match command {
        Command::Gen(a) => gen(a),
        Command::Cliques(a) => read(&a.input, stdin).map(|doc| cliques(&doc.graph, a.format)),
        Command::Cliquegraph(a) => {
            read(&a.input, stdin).and_then(|doc| cliquegraph(&doc.graph, a.format))
        }
        Command::Chroma(a) => read(&a.input, stdin).and_then(|doc| chroma(&doc.graph, &a)),
        Command::Tessellations(a) => read(&a.input, stdin).map(|doc| tessellations(&doc.graph, &a)),
        Command::Cover(a) => read(&a.input, stdin).and_then(|doc| cover(&doc.graph, &a)),
        Command::Verify(a) => verify(&a),
        Command::Sweep(a) => sweep(&a),
        Command::Export(a) => read(&a.input, stdin).map(|doc| export(&doc, &a)),
    };
    result.unwrap_or_else(|o| o)
}

/// Help text for the whole command, as printed by `--help`.
pub fn help() -> String {
    Cli::command().render_long_help().to_string()
}

struct Input {
    graph: Graph,
    cover: Option<TessellationCover>,
}

fn read(args: &InputArgs, stdin: &mut dyn Read) -> Result<Input, Outcome> {
    let mut text = String::new();
    let source = match &args.input {
        Some(p) if p.as_os_str() != "-" => {
            text = std::fs::read_to_string(p)
                .map_err(|e| Outcome::usage(format!("cannot read {}: {e}", p.display())))?;
            p.display().to_string()
        }
        _ => {
            stdin
                .read_to_string(&mut text)
                .map_err(|e| Outcome::usage(format!("cannot read standard input: {e}")))?;
            "standard input".to_string()
        }
    };
    let kind = match args.input_format {
        InputFormat::Auto => detect_input(&text),
        InputFormat::Graph6 => InputKind::Graph6,
        InputFormat::Edgelist => InputKind::EdgeList,
        InputFormat::Json => InputKind::Json,
    };
    let parsed = match kind {
        InputKind::Graph6 => parse_graph6(text.trim()).map(|g| (g, None)),
        InputKind::EdgeList => parse_edge_list(&text).map(|g| (g, None)),
        InputKind::Json => parse_json_document(&text),
    };
    parsed
        .map(|(graph, cover)| Input { graph, cover })
        .map_err(|e| Outcome::usage(format!("malformed graph on {source}: {e}")))
}

fn render_graph(g: &Graph, format: OutputFormat) -> Result<String, Outcome> {
    Ok(match format {
        OutputFormat::Graph6 => line(to_graph6(g)),
        OutputFormat::Edgelist | OutputFormat::Text => to_edge_list(g),
        OutputFormat::Json => to_json(&GraphDoc::new(g, None)),
        OutputFormat::Dot => {
            export_annotated(g, None, ExportKind::Dot).expect("no cover to validate")
        }
    })
}

fn gen(a: GenArgs) -> Result<Outcome, Outcome> {
    let spec = FamilySpec {
        family: a.family,
        n: a.n,
        blade: a.blade,
    };
    let spec = if a.family == Family::Petersen {
        FamilySpec::petersen()
    } else {
        spec
    };
    let g = spec.generate().map_err(|e| Outcome::usage(e.to_string()))?;
    render_graph(&g, a.format).map(Outcome::ok)
}

fn cliques(g: &Graph, format: OutputFormat) -> Outcome {
    let cliques = tesscover::cliques::maximal_cliques(g);
    Outcome::ok(match format {
        OutputFormat::Text => cliques
            .iter()
            .map(|c| {
                line(
                    c.vertices()
                        .iter()
                        .map(usize::to_string)
                        .collect::<Vec<_>>()
                        .join(" "),
                )
            })
            .collect(),
        _ => to_json(&json!({ "count": cliques.len(), "cliques": cliques })),
    })
}

fn cliquegraph(g: &Graph, format: OutputFormat) -> Result<Outcome, Outcome> {
    let k = clique_graph(g).map_err(|e| Outcome::usage(e.to_string()))?;
    Ok(Outcome::ok(match format {
        OutputFormat::Json => to_json(&json!({
            "cliques": k.cliques,
            "n": k.base.n(),
            "edges": GraphDoc::new(&k.base, None).edges,
        })),
        other => render_graph(&k.base, other)?,
    }))
}

fn chroma(g: &Graph, a: &ChromaArgs) -> Result<Outcome, Outcome> {
    let text = a.format == OutputFormat::Text;
    Ok(Outcome::ok(if a.edge {
        let (chi, coloring) = chromatic_index(g).map_err(|e| Outcome::usage(e.to_string()))?;
        if text {
            let mut s = format!("chromatic index {chi}\n");
            for ((u, v), c) in &coloring.edges {
                let _ = writeln!(s, "{u} {v} {c}");
            }
            s
        } else {
            let edges: Vec<_> = coloring
                .edges
                .iter()
                .map(|&((u, v), c)| [u, v, c])
                .collect();
            to_json(&json!({ "chromatic_index": chi, "coloring": edges }))
        }
    } else {
        let (chi, coloring) = chromatic_number(g);
        if text {
            let mut s = format!("chromatic number {chi}\n");
            for (v, c) in coloring.assignment.iter().enumerate() {
                let _ = writeln!(s, "{v} {c}");
            }
            s
        } else {
            to_json(&json!({ "chromatic_number": chi, "coloring": coloring.assignment }))
        }
    }))
}

fn tessellations(g: &Graph, a: &TessellationArgs) -> Outcome {
    let mut out = String::new();
    let (count, truncated) = if a.all {
        let e = enumerate_all_tessellations(g, a.cap);
        for t in &e.items {
            out.push_str(&to_json(&TessellationDoc::from_tessellation(t)));
        }
        (e.items.len(), e.truncated)
    } else {
        let mut stream = enumerate_tessellations_restricted(g, Some(a.cap));
        for t in stream.by_ref() {
            out.push_str(&to_json(&TessellationDoc::from_tessellation(&t)));
        }
        (stream.emitted(), stream.truncated())
    };
    let stderr = if truncated {
        format!(
            "warning: stopped after {count} tessellations (--cap {}); the list is incomplete\n",
            a.cap
        )
    } else {
        String::new()
    };
    Outcome {
        code: 0,
        stdout: out,
        stderr,
    }
}

#[derive(Serialize)]
struct BoundsDoc {
    lower: usize,
    upper: usize,
    lower_reason: tesscover::cover::LowerReason,
}

#[derive(Serialize)]
struct CoverDoc {
    n: usize,
    edges: Vec<[usize; 2]>,
    t_number: usize,
    method: Method,
    witness: Vec<TessellationDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bounds: Option<BoundsDoc>,
}

fn cover_output(g: &Graph, r: &CoverResult, format: OutputFormat) -> Result<String, Outcome> {
    let b = bounds(g).ok().map(|b| BoundsDoc {
        lower: b.lower,
        upper: b.upper,
        lower_reason: b.lower_reason,
    });
    Ok(match format {
        OutputFormat::Json => to_json(&CoverDoc {
            n: g.n(),
            edges: GraphDoc::new(g, None).edges,
            t_number: r.t_number,
            method: r.method,
            witness: cover_docs(&r.witness),
            bounds: b,
        }),
        OutputFormat::Text => {
            let method = serde_json::to_value(r.method).expect("methods serialize");
            let mut s = format!(
                "T = {} ({})\n",
                r.t_number,
                method.as_str().unwrap_or_default()
            );
            if let Some(b) = b {
                let _ = writeln!(s, "bounds {} <= T <= {}", b.lower, b.upper);
            }
            for (i, t) in r.witness.tessellations.iter().enumerate() {
                let _ = writeln!(s, "T{i} {t}");
            }
            s
        }
        OutputFormat::Dot => {
            export_annotated(g, Some(&r.witness), ExportKind::Dot).map_err(|d| Outcome {
                code: 1,
                stdout: String::new(),
                stderr: line(format!("invalid cover: {d}")),
            })?
        }
        OutputFormat::Graph6 | OutputFormat::Edgelist => {
            return Err(Outcome::usage("cover output must be json, text or dot"));
        }
    })
}

fn timeout_outcome(lower: usize, upper: usize) -> Outcome {
    Outcome {
        code: 2,
        stdout: to_json(&json!({ "timeout": true, "lower": lower, "upper": upper })),
        stderr: format!("timed out: {lower} <= T <= {upper}\n"),
    }
}

fn cover(g: &Graph, a: &CoverArgs) -> Result<Outcome, Outcome> {
    let exact = !(a.greedy || a.upper);
    if exact && !a.force {
        let env = Envelope::default();
        if !env.contains(g) {
            return Err(Outcome::usage(format!(
                "graph with n = {}, m = {} is outside the exact-solver envelope (n <= {}, m <= {}); use --greedy, --upper or --force",
                g.n(),
                g.edge_count(),
                env.max_vertices,
                env.max_edges
            )));
        }
        if a.k.is_some_and(|k| k > MAX_DECISION_K) {
            return Err(Outcome::usage(format!(
                "--k above {MAX_DECISION_K} is outside the envelope; use --force"
            )));
        }
    }
    let mut opts = if a.canonical {
        SolveOptions::canonical()
    } else {
        SolveOptions::default()
    };
    if let Some(secs) = a.timeout {
        let limit = Duration::try_from_secs_f64(secs)
            .map_err(|_| Outcome::usage(format!("--timeout {secs} is not a valid duration")))?;
        opts = opts.with_timeout(limit);
    }

    if let Some(k) = a.k {
        return match decide_k_tessellable_with(g, k, &opts) {
            Ok(Some(witness)) => {
                let r = CoverResult {
                    t_number: witness.len(),
                    witness,
                    method: Method::Exact,
                };
                let mut out = Outcome::ok(cover_output(g, &r, a.format)?);
                out.stderr = format!("{k}-tessellable\n");
                Ok(out)
            }
            Ok(None) => Ok(Outcome {
                code: 1,
                stdout: match a.format {
                    OutputFormat::Json => to_json(&json!({ "k": k, "tessellable": false })),
                    _ => format!("not {k}-tessellable\n"),
                },
                stderr: format!("not {k}-tessellable\n"),
            }),
            Err(SolveError::DecisionTimeout { k }) => Err(Outcome {
                code: 2,
                stdout: String::new(),
                stderr: format!("timed out deciding whether {k} tessellations suffice\n"),
            }),
            Err(e) => Err(Outcome::usage(e.to_string())),
        };
    }

    let result = if a.greedy {
        greedy_cover(g)
    } else if a.upper {
        upper_bound_via_clique_coloring(g)
            .map(|c| CoverResult {
                t_number: c.len(),
                witness: c,
                method: Method::UpperBoundConstruction,
            })
            .map_err(SolveError::from)
    } else {
        tessellation_number_with(g, &opts)
    };
    match result {
        Ok(r) => {
            if let Err(d) = is_valid_cover(g, &r.witness) {
                return Ok(Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: line(format!("invalid cover: {d}")),
                });
            }
            cover_output(g, &r, a.format).map(Outcome::ok)
        }
        Err(SolveError::Timeout { lower, upper }) => Err(timeout_outcome(lower, upper)),
        Err(e) => Err(Outcome::usage(e.to_string())),
    }
}

fn parse_specs(specs: &[String]) -> Result<Vec<FamilySpec>, Outcome> {
    let mut out = Vec::new();
    for s in specs {
        out.extend(parse_sweep_spec(s).map_err(|e| Outcome::usage(format!("--sweep {s}: {e}")))?);
    }
    Ok(out)
}

fn sweep_rows(
    specs: &[FamilySpec],
    timeout: f64,
    exec: Execution,
) -> Result<Vec<SweepRow>, Outcome> {
    let limit = Duration::try_from_secs_f64(timeout)
        .map_err(|_| Outcome::usage(format!("--timeout {timeout} is not a valid duration")))?;
    let opts = SweepOptions {
        execution: exec,
        row_timeout: Some(limit),
        ..SweepOptions::default()
    };
    let mut rows = sweep_with(specs, &opts);
    rows.extend(out_of_scope_rows());
    Ok(rows)
}

fn verify(a: &VerifyArgs) -> Result<Outcome, Outcome> {
    let reports: Vec<VerificationReport> = if a.check.is_empty() {
        run_all_checks(Execution::Parallel)
    } else {
        let mut ids = a.check.clone();
        ids.sort();
        ids.dedup();
        let mut out = Vec::new();
        for id in &ids {
            match run_check(id) {
                None => return Err(Outcome::usage(format!("unknown check `{id}`"))),
                Some(Err(e)) => return Err(Outcome::usage(format!("check {id}: {e}"))),
                Some(Ok(r)) => out.push(r),
            }
        }
        out
    };
    let specs = parse_specs(&a.sweep)?;
    let rows = if specs.is_empty() {
        Vec::new()
    } else {
        sweep_rows(&specs, 60.0, Execution::Parallel)?
    };
    let failed = reports.iter().any(|r| r.status != Status::Pass)
        || rows.iter().any(|r| r.status == RowStatus::Fail);
    let stdout = match a.format {
        OutputFormat::Json => to_json(&json!({ "checks": reports, "sweep": rows })),
        _ => {
            let mut s = render_reports(&reports);
            if !rows.is_empty() {
                s.push('\n');
                s.push_str(&render_sweep(&rows));
            }
            s
        }
    };
    let passed = reports.iter().filter(|r| r.status == Status::Pass).count();
    Ok(Outcome {
        code: i32::from(failed),
        stdout,
        stderr: format!("{passed}/{} checks passed\n", reports.len()),
    })
}

fn sweep(a: &SweepArgs) -> Result<Outcome, Outcome> {
    let specs = parse_specs(&a.specs)?;
    let exec = if a.canonical {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    let rows = sweep_rows(&specs, a.timeout, exec)?;
    let failed = rows.iter().any(|r| r.status == RowStatus::Fail);
    Ok(Outcome {
        code: i32::from(failed),
        stdout: match a.format {
            OutputFormat::Json => to_json(&rows),
            _ => render_sweep(&rows),
        },
        stderr: String::new(),
    })
}

fn export(doc: &Input, a: &ExportArgs) -> Outcome {
    let kind = if a.dot {
        ExportKind::Dot
    } else {
        ExportKind::Json
    };
    match export_annotated(&doc.graph, doc.cover.as_ref(), kind) {
        Ok(s) => Outcome::ok(line(s)),
        Err(d) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: line(format!("invalid cover: {d}")),
        },
    }
}
