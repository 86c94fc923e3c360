//! `tempspan` command-line front end.
//!
//! Exit codes: 0 positive verdict or successful generation, 1 negative
//! verdict, 2 usage or input error, 3 size guard refusal.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use tempspan::reductions::{
    sat_to_tst_gadget, setcover_to_kbs_gadget, verify_kbs_reduction, verify_tst_reduction,
    CnfFormula, GadgetMeta, SetCoverInstance,
};
use tempspan::*;

pub const EXIT_POSITIVE: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(
    name = "tempspan",
    version,
    about = "Reachability, bi-spanners and spanning trees in temporal graphs"
)]
struct Cli {
    #[command(flatten)]
    opts: Options,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Options {
    /// Journeys use strictly increasing labels
    #[arg(long, global = true, conflicts_with = "non_strict")]
    strict: bool,
    /// Journeys use non-decreasing labels (default)
    #[arg(long, global = true)]
    non_strict: bool,
    /// Write the result here instead of standard output
    #[arg(short = 'o', long = "output", global = true, value_name = "PATH")]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Vertex limit for spanning-tree enumeration
    #[arg(long, global = true, value_name = "INT")]
    max_n: Option<usize>,
    /// Non-critical edge limit for minimum bi-spanner search
    #[arg(long, global = true, value_name = "INT")]
    max_edges: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Jsonl,
    Dot,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report whether the graph is simple, proper and happy
    Classify { input: PathBuf },
    /// Temporal connectivity
    Connected { input: PathBuf },
    /// Vertices every journey can be routed through
    Pivots { input: PathBuf },
    /// Dominance-pruned triplet sets and one bi-path per vertex
    Bipaths { source: Vertex, input: PathBuf },
    /// Bidirectional temporal connectivity
    Biconnected { input: PathBuf },
    /// Union of one bi-path per ordered pair
    Bispanner { input: PathBuf },
    /// Temporally connected spanning tree (exact)
    Tst { input: PathBuf },
    /// Minimum-size bi-spanner (exact)
    MinBispanner {
        input: PathBuf,
        /// Positive verdict only if a bi-spanner with at most this many edges exists
        #[arg(short = 'k', value_name = "INT")]
        k: Option<usize>,
    },
    /// Edges whose removal breaks bidirectional connectivity
    CriticalEdges { input: PathBuf },
    /// SAT (DIMACS CNF) to temporal spanning tree gadget
    GenSatGadget {
        input: PathBuf,
        /// Sidecar path; defaults to `<output>.meta` when -o is given
        #[arg(long, value_name = "PATH")]
        meta: Option<PathBuf>,
    },
    /// Set cover to k-bi-spanner gadget
    GenSetcoverGadget {
        input: PathBuf,
        #[arg(long, value_name = "PATH")]
        meta: Option<PathBuf>,
    },
    /// Brute-force both sides of the SAT reduction
    VerifySatReduction { input: PathBuf },
    /// Brute-force both sides of the set cover reduction
    VerifySetcoverReduction { input: PathBuf },
    /// Graphviz export
    Dot {
        input: PathBuf,
        /// Gadget sidecar supplying vertex names
        #[arg(long, value_name = "PATH")]
        meta: Option<PathBuf>,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("{}: {source}", path.display())]
    Input { path: PathBuf, source: Error },
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Input {
                source: Error::SizeGuard { .. },
                ..
            }
            | CliError::Core(Error::SizeGuard { .. }) => EXIT_GUARD,
            _ => EXIT_USAGE,
        }
    }
}

/// Rendered result: the text to emit and whether the verdict is positive.
struct Report {
    body: String,
    positive: bool,
}

impl Report {
    fn new(body: String, positive: bool) -> Self {
        Report { body, positive }
    }
}

/// Parses `args` (including the program name) and runs one subcommand.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_POSITIVE
            };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(&cli) {
        Ok(report) => {
            if let Err(e) = emit(cli.opts.output.as_deref(), stdout, &report.body) {
                let _ = writeln!(stderr, "tempspan: {e}");
                return e.exit_code();
            }
            if report.positive {
                EXIT_POSITIVE
            } else {
                EXIT_NEGATIVE
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "tempspan: {e}");
            e.exit_code()
        }
    }
}

fn emit(path: Option<&Path>, stdout: &mut dyn Write, body: &str) -> CliResult<()> {
    match path {
        Some(p) => write_file(p, body),
        None => stdout
            .write_all(body.as_bytes())
            .map_err(|source| CliError::Io {
                path: PathBuf::from("<stdout>"),
                source,
            }),
    }
}

fn write_file(path: &Path, body: &str) -> CliResult<()> {
    fs::write(path, body).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn read_input(path: &Path) -> CliResult<String> {
    let io_err = |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    };
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(io_err)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(io_err)
    }
}

fn parse_with<T>(path: &Path, parse: impl FnOnce(&str) -> Result<T>) -> CliResult<T> {
    let text = read_input(path)?;
    parse(&text).map_err(|source| CliError::Input {
        path: path.to_path_buf(),
        source,
    })
}

fn load_graph(path: &Path) -> CliResult<TemporalGraph> {
    parse_with(path, parse_temporal_graph)
}

impl Options {
    fn setting(&self) -> Setting {
        if self.strict {
            Setting::Strict
        } else {
            Setting::NonStrict
        }
    }

    fn limits(&self) -> SearchLimits {
        let mut l = SearchLimits::default();
        if let Some(n) = self.max_n {
            l.max_vertices = n;
        }
        if let Some(m) = self.max_edges {
            l.max_edges = m;
        }
        l
    }

    fn no_dot(&self, command: &str) -> CliResult<()> {
        if self.format == Format::Dot {
            Err(CliError::Usage(format!(
                "`{command}` has no dot output; use text or jsonl"
            )))
        } else {
            Ok(())
        }
    }
}

fn execute(cli: &Cli) -> CliResult<Report> {
    let opts = &cli.opts;
    let setting = opts.setting();
    match &cli.command {
        Command::Classify { input } => {
            opts.no_dot("classify")?;
            classify(&load_graph(input)?, opts.format)
        }
        Command::Connected { input } => {
            opts.no_dot("connected")?;
            connected(&load_graph(input)?, setting, opts.format)
        }
        Command::Pivots { input } => {
            opts.no_dot("pivots")?;
            pivots(&load_graph(input)?, setting, opts.format)
        }
        Command::Bipaths { source, input } => {
            opts.no_dot("bipaths")?;
            bipaths(&load_graph(input)?, *source, setting, opts.format)
        }
        Command::Biconnected { input } => {
            opts.no_dot("biconnected")?;
            biconnected(&load_graph(input)?, setting, opts.format)
        }
        Command::Bispanner { input } => bispanner(&load_graph(input)?, setting, opts.format),
        Command::Tst { input } => tst(&load_graph(input)?, setting, &opts.limits(), opts.format),
        Command::MinBispanner { input, k } => min_bispanner(
            &load_graph(input)?,
            setting,
            &opts.limits(),
            *k,
            opts.format,
        ),
        Command::CriticalEdges { input } => {
            opts.no_dot("critical-edges")?;
            critical_edges(&load_graph(input)?, setting, opts.format)
        }
        Command::GenSatGadget { input, meta } => {
            let phi = parse_with(input, CnfFormula::parse_dimacs)?;
            let (g, m) = sat_to_tst_gadget(&phi);
            let header = format!(
                "sat-to-tst gadget: {} variables, {} clauses",
                phi.nvars(),
                phi.clauses().len()
            );
            gadget(opts, meta.as_deref(), &g, &m, &header)
        }
        Command::GenSetcoverGadget { input, meta } => {
            let inst = parse_with(input, SetCoverInstance::parse)?;
            let (g, m) = setcover_to_kbs_gadget(&inst);
            let header = format!(
                "setcover-to-kbs gadget: universe {}, {} subsets",
                inst.universe(),
                inst.subsets().len()
            );
            gadget(opts, meta.as_deref(), &g, &m, &header)
        }
        Command::VerifySatReduction { input } => {
            opts.no_dot("verify-sat-reduction")?;
            let phi = parse_with(input, CnfFormula::parse_dimacs)?;
            let r = verify_tst_reduction(&phi, &opts.limits())?;
            let body = match opts.format {
                Format::Jsonl => json_line(json!({
                    "satisfiable": r.satisfiable,
                    "tree_strict": r.tree_strict,
                    "tree_non_strict": r.tree_non_strict,
                    "holds": r.holds(),
                })),
                _ => format!(
                    "satisfiable: {}\ntree (strict): {}\ntree (non-strict): {}\nholds: {}\n",
                    r.satisfiable,
                    r.tree_strict,
                    r.tree_non_strict,
                    r.holds()
                ),
            };
            Ok(Report::new(body, r.holds()))
        }
        Command::VerifySetcoverReduction { input } => {
            opts.no_dot("verify-setcover-reduction")?;
            let inst = parse_with(input, SetCoverInstance::parse)?;
            let r = verify_kbs_reduction(&inst, &opts.limits())?;
            let body = match opts.format {
                Format::Jsonl => json_line(json!({
                    "min_cover": r.min_cover,
                    "min_bispanner": r.min_bispanner,
                    "expected": r.expected,
                    "holds": r.holds(),
                })),
                _ => format!(
                    "min cover: {}\nmin bispanner: {}\nexpected: {}\nholds: {}\n",
                    r.min_cover,
                    r.min_bispanner
                        .map_or("none".to_string(), |s| s.to_string()),
                    r.expected,
                    r.holds()
                ),
            };
            Ok(Report::new(body, r.holds()))
        }
        Command::Dot { input, meta } => {
            let g = load_graph(input)?;
            let body = match meta {
                Some(p) => {
                    let m = parse_with(p, GadgetMeta::parse_sidecar)?;
                    if m.names.len() != g.n() {
                        return Err(CliError::Usage(format!(
                            "{} names {} vertices, graph has {}",
                            p.display(),
                            m.names.len(),
                            g.n()
                        )));
                    }
                    to_dot_named(&g, |v| m.name(v).to_string())
                }
                None => to_dot(&g),
            };
            Ok(Report::new(body, true))
        }
    }
}

fn json_line(v: Value) -> String {
    let mut s = v.to_string();
    s.push('\n');
    s
}

fn edges_json(g: &TemporalGraph) -> Value {
    Value::Array(g.edges().map(|(e, ls)| json!([e.u, e.v, ls])).collect())
}

/// A graph result in the requested format. Text keeps the `.tg` format
/// (the header is a comment); DOT uses a `//` comment.
fn render_graph(g: &TemporalGraph, format: Format, header: &str, extra: Value) -> String {
    match format {
        Format::Text => format!("# {header}\n{}", serialize_temporal_graph(g)),
        Format::Dot => format!("// {header}\n{}", to_dot(g)),
        Format::Jsonl => {
            let mut v = extra;
            v["n"] = json!(g.n());
            v["edges"] = edges_json(g);
            json_line(v)
        }
    }
}

fn negative(format: Format, message: &str, extra: Value) -> String {
    match format {
        Format::Text => format!("{message}\n"),
        Format::Dot => format!("// {message}\n"),
        Format::Jsonl => json_line(extra),
    }
}

fn classify(g: &TemporalGraph, format: Format) -> CliResult<Report> {
    let c = g.classify();
    let body = match format {
        Format::Jsonl => json_line(json!({
            "vertices": g.n(),
            "edges": g.edge_count(),
            "lifetime": g.lifetime(),
            "simple": c.simple,
            "proper": c.proper,
            "happy": c.happy,
        })),
        _ => format!(
            "vertices: {}\nedges: {}\nlifetime: {}\nsimple: {}\nproper: {}\nhappy: {}\n",
            g.n(),
            g.edge_count(),
            g.lifetime(),
            c.simple,
            c.proper,
            c.happy
        ),
    };
    Ok(Report::new(body, true))
}

/// First ordered pair `(s, v)` with no journey from `s` to `v`.
fn unreached_pair(g: &TemporalGraph, setting: Setting) -> Option<(Vertex, Vertex)> {
    (0..g.n()).find_map(|s| {
        let map = earliest_arrival(g, s, setting).expect("source in range");
        (0..g.n())
            .find(|&v| !map.get(v).is_reachable())
            .map(|v| (s, v))
    })
}

fn connected(g: &TemporalGraph, setting: Setting, format: Format) -> CliResult<Report> {
    let missing = unreached_pair(g, setting);
    let body = match (format, missing) {
        (Format::Jsonl, m) => json_line(json!({ "connected": m.is_none(), "unreached": m })),
        (_, None) => "temporally connected\n".to_string(),
        (_, Some((s, v))) => format!("not temporally connected: no journey from {s} to {v}\n"),
    };
    Ok(Report::new(body, missing.is_none()))
}

fn pivots(g: &TemporalGraph, setting: Setting, format: Format) -> CliResult<Report> {
    let ps = find_pivots(g, setting);
    let mut body = String::new();
    for p in &ps {
        match format {
            Format::Jsonl => {
                body.push_str(&json_line(json!({ "vertex": p.vertex, "time": p.time })))
            }
            _ => body.push_str(&format!("pivot {} at time {}\n", p.vertex, p.time)),
        }
    }
    if ps.is_empty() && format == Format::Text {
        body.push_str("no pivot\n");
    }
    Ok(Report::new(body, !ps.is_empty()))
}

fn time_json(t: Time) -> Value {
    match t {
        Time::At(l) => json!(l),
        _ => Value::Null,
    }
}

fn labels_text(ls: &[Label]) -> String {
    ls.iter()
        .map(Label::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn bipaths(
    g: &TemporalGraph,
    source: Vertex,
    setting: Setting,
    format: Format,
) -> CliResult<Report> {
    let run = compute_bipaths(g, source, setting)?;
    let mut body = String::new();
    for v in 0..g.n() {
        let set = run.set(v);
        let path = run.reconstruct(v);
        match format {
            Format::Jsonl => {
                let triplets: Vec<Value> = set
                    .iter()
                    .map(|t| {
                        let via = match t.via {
                            Via::Source => Value::Null,
                            Via::Vertex(u) => json!(u),
                        };
                        json!({ "via": via, "arrive": time_json(t.arrive), "depart": time_json(t.depart) })
                    })
                    .collect();
                let bipath = path.map(|p| {
                    json!({ "vertices": p.vertices, "forward": p.forward, "backward": p.backward })
                });
                body.push_str(&json_line(
                    json!({ "vertex": v, "triplets": triplets, "bipath": bipath }),
                ));
            }
            _ => {
                let ts: Vec<String> = set.iter().map(Triplet::to_string).collect();
                body.push_str(&format!("{v}: {}\n", ts.join(" ")));
                if let Some(p) = path.filter(|p| !p.is_empty()) {
                    let vs: Vec<String> = p.vertices.iter().map(Vertex::to_string).collect();
                    body.push_str(&format!(
                        "  path {}; forward {}; backward {}\n",
                        vs.join(" "),
                        labels_text(&p.forward),
                        labels_text(&p.backward)
                    ));
                }
            }
        }
    }
    Ok(Report::new(body, run.reaches_all()))
}

/// First ordered pair without a bi-path.
fn pair_without_bipath(g: &TemporalGraph, setting: Setting) -> Option<(Vertex, Vertex)> {
    (0..g.n()).find_map(|s| {
        let run = compute_bipaths(g, s, setting).expect("source in range");
        (0..g.n()).find(|&v| !run.reaches(v)).map(|v| (s, v))
    })
}

fn biconnected(g: &TemporalGraph, setting: Setting, format: Format) -> CliResult<Report> {
    let missing = pair_without_bipath(g, setting);
    let body = match (format, missing) {
        (Format::Jsonl, m) => json_line(json!({ "biconnected": m.is_none(), "missing": m })),
        (_, None) => "bidirectionally connected\n".to_string(),
        (_, Some((s, v))) => {
            format!("not bidirectionally connected: no bi-path between {s} and {v}\n")
        }
    };
    Ok(Report::new(body, missing.is_none()))
}

const NOT_BICONNECTED: &str = "not bidirectionally connected";

fn bispanner(g: &TemporalGraph, setting: Setting, format: Format) -> CliResult<Report> {
    Ok(match build_bispanner(g, setting) {
        Some(sp) => {
            let header = format!(
                "bi-spanner: {} of {} edges",
                sp.edge_count(),
                g.edge_count()
            );
            Report::new(
                render_graph(&sp, format, &header, json!({ "bispanner": true })),
                true,
            )
        }
        None => Report::new(
            negative(format, NOT_BICONNECTED, json!({ "bispanner": false })),
            false,
        ),
    })
}

fn tst(
    g: &TemporalGraph,
    setting: Setting,
    limits: &SearchLimits,
    format: Format,
) -> CliResult<Report> {
    let result = if g.classify().simple {
        tst_simple(g, setting)?
    } else {
        tst_bruteforce(g, setting, limits)?
    };
    Ok(match result {
        SpanningTreeResult::Exists(tree) => Report::new(
            render_graph(&tree, format, "Exists", json!({ "verdict": "Exists" })),
            true,
        ),
        SpanningTreeResult::NotExists => Report::new(
            negative(format, "NotExists", json!({ "verdict": "NotExists" })),
            false,
        ),
        SpanningTreeResult::NeverForSimpleStrict => Report::new(
            negative(
                format,
                "NotExists (simple graph, strict journeys, more than two vertices)",
                json!({ "verdict": "NotExists", "reason": "simple-strict" }),
            ),
            false,
        ),
    })
}

fn min_bispanner(
    g: &TemporalGraph,
    setting: Setting,
    limits: &SearchLimits,
    k: Option<usize>,
    format: Format,
) -> CliResult<Report> {
    let Some(best) = min_bispanner_bruteforce(g, setting, limits)? else {
        return Ok(Report::new(
            negative(format, NOT_BICONNECTED, json!({ "size": null })),
            false,
        ));
    };
    if let Some(k) = k.filter(|&k| best.size > k) {
        let msg = format!(
            "no bi-spanner with at most {k} edges (minimum is {})",
            best.size
        );
        return Ok(Report::new(
            negative(format, &msg, json!({ "size": best.size, "k": k })),
            false,
        ));
    }
    let header = format!("minimum bi-spanner: {} edges", best.size);
    Ok(Report::new(
        render_graph(
            &best.subgraph,
            format,
            &header,
            json!({ "size": best.size }),
        ),
        true,
    ))
}

fn critical_edges(g: &TemporalGraph, setting: Setting, format: Format) -> CliResult<Report> {
    if !is_bidirectionally_connected(g, setting) {
        return Ok(Report::new(
            negative(format, NOT_BICONNECTED, json!({ "critical": null })),
            false,
        ));
    }
    let crit = critical_bispanner_edges(g, setting)?;
    let body = match format {
        Format::Jsonl => json_line(json!({
            "critical": crit.iter().map(|e| [e.u, e.v]).collect::<Vec<_>>(),
            "edges": g.edge_count(),
        })),
        _ => {
            let mut s = format!(
                "# {} of {} edges are critical\n",
                crit.len(),
                g.edge_count()
            );
            for e in &crit {
                s.push_str(&format!("{} {}\n", e.u, e.v));
            }
            s
        }
    };
    Ok(Report::new(body, true))
}

fn gadget(
    opts: &Options,
    meta_path: Option<&Path>,
    g: &TemporalGraph,
    meta: &GadgetMeta,
    header: &str,
) -> CliResult<Report> {
    let sidecar = meta_path.map(Path::to_path_buf).or_else(|| {
        opts.output.as_ref().map(|o| {
            let mut p = o.clone().into_os_string();
            p.push(".meta");
            PathBuf::from(p)
        })
    });
    if let Some(p) = sidecar {
        write_file(&p, &meta.to_sidecar())?;
    }
    let body = match opts.format {
        Format::Dot => format!(
            "// {header}\n{}",
            to_dot_named(g, |v| meta.name(v).to_string())
        ),
        f => render_graph(
            g,
            f,
            header,
            json!({ "kind": meta.kind.as_str(), "names": meta.names }),
        ),
    };
    Ok(Report::new(body, true))
}
