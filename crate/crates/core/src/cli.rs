//! Command-line front end. [`run`] takes explicit streams so it can be
//! driven from tests; the binary only forwards the process handles.
//!
//! Exit status: 0 on success, 1 for usage or input errors, 2 when an
//! internal consistency check fails.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::bench::{bench_size, spread};
use crate::claims::{check_claims, ClaimStatus};
use crate::digraph::{NodeId, OrientedGraph};
use crate::dnsa::{dense_report, verify_dnsa_with};
use crate::error::GraphError;
use crate::generate::{gen_cycle, gen_random_oriented, gen_tournament, Fixture};
use crate::io::json::fixture_document;
use crate::io::{audit_labels, from_json, to_dot, to_json, ParsedGraph};
use crate::layering::{build_layering, min_out_degree_node, ArcClass, RootedLayering, TieBreak};
use crate::seymour::{seymour_oracle, square_equivalence_check};
use crate::triangles::{classify_triangle, enumerate_seymour_diamonds, enumerate_transitive_triangles, triangle_census};

#[derive(Debug, Parser)]
#[command(name = "glover", version, about = "Layering and degree-doubling analysis for oriented graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Input {
    /// Built-in graph: nbr0ex, furtherex, irrint, cycle5 or backtri.
    #[arg(long, conflicts_with = "input")]
    fixture: Option<String>,
    /// JSON graph document; `-` or no input flag reads stdin.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct Rooting {
    /// Root node; defaults to a minimum out-degree node.
    #[arg(long)]
    root: Option<u32>,
    #[arg(long, value_enum, default_value_t = TieBreakArg::LowestId)]
    tie_break: TieBreakArg,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TieBreakArg {
    LowestId,
    HighestInDegree,
}

impl From<TieBreakArg> for TieBreak {
    fn from(t: TieBreakArg) -> Self {
        match t {
            TieBreakArg::LowestId => TieBreak::LowestId,
            TieBreakArg::HighestInDegree => TieBreak::HighestInDegree,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Table,
    Json,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
enum LayeringFormat {
    #[default]
    Table,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    Random,
    Tournament,
    Cycle,
    Fixture,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Seymour oracle, layer sizes and DNSP summary.
    Analyze {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        rooting: Rooting,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Layers, back arcs and arc classes.
    Layering {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        rooting: Rooting,
        #[arg(long, value_enum, default_value_t)]
        format: LayeringFormat,
    },
    /// Transitive-triangle census against the layering.
    Triangles {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        rooting: Rooting,
        /// Also list every triangle with its type.
        #[arg(long)]
        list: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run the DNSA and compare the marked node with the oracle.
    Dnsa {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        rooting: Rooting,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Evaluate every structural claim on the graph.
    Claims {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        rooting: Rooting,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Generate a graph and print it as a JSON document.
    Gen {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        p: Option<f64>,
        /// Defaults to $GLOVER_SEED, then 0.
        #[arg(long)]
        seed: Option<u64>,
        /// Fixture name for `--kind fixture`.
        #[arg(long)]
        name: Option<String>,
    },
    /// Split the layers into A, a buffer layer and B.
    Split {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        rooting: Rooting,
        #[arg(long)]
        boundary: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Time layering + DNSA on sparse random graphs of several sizes.
    Bench {
        #[arg(long, value_delimiter = ',', default_values_t = [10_000usize, 100_000])]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 10.0)]
        avg_degree: f64,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 3)]
        repeats: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Parse, re-emit and re-parse a document; optionally audit its labels.
    Roundtrip {
        #[command(flatten)]
        input: Input,
        /// Compare declared neighborhood labels with recomputed layers.
        #[arg(long)]
        audit: bool,
        /// Root for the audit; defaults to the node declared as R_0.
        #[arg(long)]
        root: Option<u32>,
        /// Print the canonical document instead of the report.
        #[arg(long)]
        emit: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Debug)]
enum CliError {
    Input(String),
    Internal(String),
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Internal(format!("i/o: {e}"))
    }
}

type CliResult<T> = Result<T, CliError>;

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = stderr.write_all(text.as_bytes());
                    1
                }
            };
        }
    };
    match dispatch(cli.command, stdin, stdout) {
        Ok(()) => 0,
        Err(CliError::Input(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            1
        }
        Err(CliError::Internal(msg)) => {
            let _ = writeln!(stderr, "internal error: {msg}");
            2
        }
    }
}

fn load(input: &Input, stdin: &mut dyn Read) -> CliResult<ParsedGraph> {
    let text = match (&input.fixture, &input.input) {
        (Some(name), _) => fixture_document(name.parse::<Fixture>()?),
        (None, Some(path)) if path.as_os_str() != "-" => std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?,
        _ => {
            let mut buf = String::new();
            stdin.read_to_string(&mut buf).map_err(|e| CliError::Input(format!("cannot read stdin: {e}")))?;
            buf
        }
    };
    from_json(&text).map_err(|e| CliError::Input(e.to_string()))
}

fn resolve_root(g: &OrientedGraph, rooting: &Rooting) -> CliResult<NodeId> {
    match rooting.root {
        Some(r) => {
            g.check_node(NodeId(r))?;
            Ok(NodeId(r))
        }
        None => Ok(min_out_degree_node(g, rooting.tie_break.into())?),
    }
}

fn layered<'g>(g: &'g OrientedGraph, root: NodeId) -> CliResult<RootedLayering<'g>> {
    let l = build_layering(g, root)?;
    l.validate().map_err(CliError::Internal)?;
    Ok(l)
}

fn env_seed() -> CliResult<u64> {
    match std::env::var("GLOVER_SEED") {
        Ok(s) => s.trim().parse().map_err(|_| CliError::Input(format!("GLOVER_SEED `{s}` is not a u64"))),
        Err(_) => Ok(0),
    }
}

fn emit_json(out: &mut dyn Write, value: &impl Serialize) -> CliResult<()> {
    // Going through Value sorts object keys.
    let value = serde_json::to_value(value).map_err(|e| CliError::Internal(e.to_string()))?;
    let text = serde_json::to_string_pretty(&value).map_err(|e| CliError::Internal(e.to_string()))?;
    writeln!(out, "{text}")?;
    Ok(())
}

fn node_list(nodes: impl IntoIterator<Item = NodeId>) -> String {
    let parts: Vec<String> = nodes.into_iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

fn dispatch(command: Command, stdin: &mut dyn Read, out: &mut dyn Write) -> CliResult<()> {
    match command {
        Command::Analyze { input, rooting, format } => analyze(&load(&input, stdin)?.graph, &rooting, format, out),
        Command::Layering { input, rooting, format } => layering(&load(&input, stdin)?.graph, &rooting, format, out),
        Command::Triangles { input, rooting, list, format } => {
            triangles(&load(&input, stdin)?.graph, &rooting, list, format, out)
        }
        Command::Dnsa { input, rooting, format } => dnsa(&load(&input, stdin)?.graph, &rooting, format, out),
        Command::Claims { input, rooting, format } => claims(&load(&input, stdin)?.graph, &rooting, format, out),
        Command::Gen { kind, n, p, seed, name } => gen(kind, n, p, seed, name, out),
        Command::Split { input, rooting, boundary, format } => {
            split(&load(&input, stdin)?.graph, &rooting, boundary, format, out)
        }
        Command::Bench { sizes, avg_degree, seed, repeats, format } => {
            bench(&sizes, avg_degree, seed, repeats, format, out)
        }
        Command::Roundtrip { input, audit, root, emit, format } => {
            roundtrip(load(&input, stdin)?, audit, root, emit, format, out)
        }
    }
}

fn analyze(g: &OrientedGraph, rooting: &Rooting, format: Format, out: &mut dyn Write) -> CliResult<()> {
    let root = resolve_root(g, rooting)?;
    let l = layered(g, root)?;
    let report = seymour_oracle(g);
    let sizes = l.layer_size_sequence();
    let equivalence = square_equivalence_check(g);
    if !equivalence {
        return Err(CliError::Internal("square-graph and oracle Seymour sets differ".into()));
    }
    let dnsp: Vec<NodeId> = report.dnsp_nodes().collect();
    if format == Format::Json {
        return emit_json(
            out,
            &json!({
                "nodes": g.node_count(),
                "arcs": g.arc_count(),
                "min_out_degree": g.min_out_degree(),
                "root": root,
                "seymour_set": report.seymour_set,
                "seymour_count": report.seymour_set.len(),
                "dnsp_nodes": dnsp,
                "dnsp_count": dnsp.len(),
                "records": report.records,
                "layer_sizes": sizes,
                "square_equivalence": equivalence,
                "density": dense_report(&l, g),
            }),
        );
    }
    let mut s = String::new();
    let _ = writeln!(s, "nodes {}  arcs {}  min out-degree {}", g.node_count(), g.arc_count(), g.min_out_degree().unwrap_or(0));
    let _ = writeln!(s, "seymour vertices ({}): {}", report.seymour_set.len(), node_list(report.seymour_set.iter()));
    let _ = writeln!(s, "dnsp nodes ({}): {}", dnsp.len(), node_list(dnsp.iter().copied()));
    let _ = writeln!(s, "root {root}  layer sizes {:?}", sizes.sizes);
    for b in &sizes.bounds {
        let _ = writeln!(s, "  |R_{}| = {} <= {}  {}", b.layer, b.size, b.bound, if b.pass { "pass" } else { "FAIL" });
    }
    let _ = writeln!(s, "square-graph equivalence: {}", if equivalence { "ok" } else { "MISMATCH" });
    let _ = writeln!(s, "{:>6} {:>6} {:>6} {:>8}", "node", "|N+|", "|N++|", "seymour");
    for r in &report.records {
        let _ = writeln!(s, "{:>6} {:>6} {:>6} {:>8}", r.node, r.first_size, r.second_size, if r.is_seymour { "yes" } else { "no" });
    }
    out.write_all(s.as_bytes())?;
    Ok(())
}

fn layering(g: &OrientedGraph, rooting: &Rooting, format: LayeringFormat, out: &mut dyn Write) -> CliResult<()> {
    let root = resolve_root(g, rooting)?;
    let l = layered(g, root)?;
    match format {
        LayeringFormat::Dot => out.write_all(to_dot(g, Some(&l)).as_bytes())?,
        LayeringFormat::Json => emit_json(out, &json!({"layering": l.summary(), "layer_sizes": l.layer_size_sequence()}))?,
        LayeringFormat::Table => {
            let mut s = String::new();
            let _ = writeln!(s, "root {root}");
            for (i, layer) in l.layers().iter().enumerate() {
                let _ = writeln!(s, "R_{i}: {}", node_list(layer.iter().copied()));
            }
            let _ = writeln!(s, "unreachable: {}", node_list(l.unreachable().iter().copied()));
            let _ = writeln!(s, "back arcs: {}", l.back_arcs().len());
            for b in l.back_arcs() {
                let _ = writeln!(s, "  {} -> {} (delta {})", b.tail, b.head, b.delta);
            }
            for class in [ArcClass::Forward, ArcClass::Lateral, ArcClass::Back, ArcClass::FromUnreachable] {
                let n = g.arcs().filter(|&(u, v)| l.arc_class_unchecked(u, v) == class).count();
                let _ = writeln!(s, "{class} arcs: {n}");
            }
            out.write_all(s.as_bytes())?;
        }
    }
    Ok(())
}

fn triangles(g: &OrientedGraph, rooting: &Rooting, list: bool, format: Format, out: &mut dyn Write) -> CliResult<()> {
    let root = resolve_root(g, rooting)?;
    let l = layered(g, root)?;
    let census = triangle_census(g, &l);
    let diamonds = enumerate_seymour_diamonds(g).len();
    let listing: Vec<(crate::triangles::TransitiveTriangle, String)> = if list {
        enumerate_transitive_triangles(g)
            .into_iter()
            .map(|t| {
                let label = match classify_triangle(&l, t) {
                    Ok(ty) => ty.name().to_string(),
                    Err(GraphError::UnreachableNode(_)) => "unreachable".to_string(),
                    Err(_) => "unclassifiable".to_string(),
                };
                (t, label)
            })
            .collect()
    } else {
        Vec::new()
    };
    if format == Format::Json {
        let triangles: Vec<_> = listing.iter().map(|(t, ty)| json!({"x": t.x, "y": t.y, "z": t.z, "type": ty})).collect();
        let mut value = json!({"root": root, "census": census, "diamonds": diamonds});
        if list {
            value["triangles"] = json!(triangles);
        }
        return emit_json(out, &value);
    }
    let mut s = String::new();
    let _ = writeln!(s, "root {root}  transitive triangles {}  diamonds {diamonds}", census.total);
    for (ty, n) in &census.counts {
        let _ = writeln!(s, "  {:<18} {n}", ty.name());
    }
    let _ = writeln!(s, "  {:<18} {}", "unclassifiable", census.unclassifiable);
    let _ = writeln!(s, "  {:<18} {}", "unreachable", census.unreachable);
    for (t, ty) in &listing {
        let _ = writeln!(s, "({}, {}, {}) {ty}", t.x, t.y, t.z);
    }
    out.write_all(s.as_bytes())?;
    Ok(())
}

fn dnsa(g: &OrientedGraph, rooting: &Rooting, format: Format, out: &mut dyn Write) -> CliResult<()> {
    let root = rooting.root.map(NodeId);
    let record = verify_dnsa_with(g, root, rooting.tie_break.into())?;
    if format == Format::Json {
        return emit_json(out, &record);
    }
    let mut s = String::new();
    let _ = writeln!(s, "root {}", record.root);
    let _ = writeln!(s, "halt {}", record.halt_reason.as_str());
    match record.marked_node {
        Some(m) => {
            let (first, second) = record.marked_sizes.unwrap_or_default();
            let _ = writeln!(s, "marked {m}  |N+| {first}  |N++| {second}");
        }
        None => {
            let _ = writeln!(s, "marked none");
        }
    }
    let _ = writeln!(s, "evidence {}", serde_json::to_string(&record.result.evidence).unwrap_or_default());
    let _ = writeln!(s, "path {}", record.result.path_from_root.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" -> "));
    let verdict = match record.oracle_confirms {
        Some(true) => "confirmed",
        Some(false) => "REFUTED",
        None => "not applicable",
    };
    let _ = writeln!(s, "oracle {verdict}  seymour set {}", node_list(record.oracle_seymour_set.iter()));
    out.write_all(s.as_bytes())?;
    Ok(())
}

fn claims(g: &OrientedGraph, rooting: &Rooting, format: Format, out: &mut dyn Write) -> CliResult<()> {
    let root = resolve_root(g, rooting)?;
    let report = check_claims(g, Some(root))?;
    if format == Format::Json {
        return emit_json(out, &report);
    }
    let mut s = String::new();
    let _ = writeln!(s, "root {root}");
    let _ = writeln!(s, "{:<12} {:>7} {:>10}  {:<14} witness", "claim", "premise", "conclusion", "status");
    for r in &report.records {
        let status = match r.status {
            ClaimStatus::Holds => "holds",
            ClaimStatus::Violated => "VIOLATED",
            ClaimStatus::NotApplicable => "not-applicable",
        };
        let witness = r.witnesses.first().map(|w| w.detail.as_str()).unwrap_or("");
        let _ = writeln!(s, "{:<12} {:>7} {:>10}  {:<14} {witness}", r.claim.name(), r.premise_holds, r.conclusion_holds, status);
    }
    out.write_all(s.as_bytes())?;
    Ok(())
}

fn gen(
    kind: KindArg,
    n: Option<usize>,
    p: Option<f64>,
    seed: Option<u64>,
    name: Option<String>,
    out: &mut dyn Write,
) -> CliResult<()> {
    let seed = match seed {
        Some(s) => s,
        None => env_seed()?,
    };
    let need_n = || n.ok_or_else(|| CliError::Input("--n is required for this kind".into()));
    let g = match kind {
        KindArg::Random => {
            let p = p.ok_or_else(|| CliError::Input("--p is required for --kind random".into()))?;
            if !(0.0..=1.0).contains(&p) {
                return Err(CliError::Input(format!("--p {p} is outside [0, 1]")));
            }
            gen_random_oriented(need_n()?, p, seed)
        }
        KindArg::Tournament => gen_tournament(need_n()?, seed),
        KindArg::Cycle => gen_cycle(need_n()?)?,
        KindArg::Fixture => {
            let name = name.ok_or_else(|| CliError::Input("--name is required for --kind fixture".into()))?;
            name.parse::<Fixture>()?.graph()
        }
    };
    writeln!(out, "{}", to_json(&g, None))?;
    Ok(())
}

fn split(g: &OrientedGraph, rooting: &Rooting, boundary: usize, format: Format, out: &mut dyn Write) -> CliResult<()> {
    let root = resolve_root(g, rooting)?;
    let l = layered(g, root)?;
    let split = l.split_layers(boundary)?;
    if format == Format::Json {
        return emit_json(out, &split);
    }
    let mut s = String::new();
    let _ = writeln!(s, "root {root}  boundary {boundary}");
    let _ = writeln!(s, "A: {}", node_list(split.group_a.iter()));
    let _ = writeln!(s, "buffer: {}", node_list(split.buffer.iter()));
    let _ = writeln!(s, "B: {}", node_list(split.group_b.iter()));
    let crossing: Vec<String> = split.crossing.iter().map(|(u, v)| format!("{u}->{v}")).collect();
    let _ = writeln!(s, "crossing ({}): {}", split.interference, crossing.join(", "));
    out.write_all(s.as_bytes())?;
    Ok(())
}

fn bench(sizes: &[usize], avg_degree: f64, seed: Option<u64>, repeats: usize, format: Format, out: &mut dyn Write) -> CliResult<()> {
    let seed = match seed {
        Some(s) => s,
        None => env_seed()?,
    };
    let rows: Vec<_> = sizes.iter().filter_map(|&n| bench_size(n, avg_degree, seed, repeats)).collect();
    let ratio = if rows.is_empty() { 1.0 } else { spread(&rows) };
    if format == Format::Json {
        return emit_json(out, &json!({"rows": rows, "spread": ratio}));
    }
    let mut s = String::new();
    let _ = writeln!(s, "{:>10} {:>10} {:>7} {:>12} {:>10}  halt", "n", "m", "layers", "best_ms", "ns/elem");
    for r in &rows {
        let _ = writeln!(
            s,
            "{:>10} {:>10} {:>7} {:>12.3} {:>10.2}  {}",
            r.n,
            r.m,
            r.layers,
            r.best_ns as f64 / 1e6,
            r.ns_per_element,
            r.halt_reason.as_str()
        );
    }
    let _ = writeln!(s, "spread (max/min ns per element): {ratio:.2}");
    out.write_all(s.as_bytes())?;
    Ok(())
}

fn roundtrip(parsed: ParsedGraph, audit: bool, root: Option<u32>, emit: bool, format: Format, out: &mut dyn Write) -> CliResult<()> {
    let g = &parsed.graph;
    let first = to_json(g, None);
    let again = from_json(&first).map_err(|e| CliError::Internal(format!("canonical document fails to parse: {e}")))?;
    if &again.graph != g {
        return Err(CliError::Internal("re-parsed graph differs from the input graph".into()));
    }
    let second = to_json(&again.graph, None);
    if first != second {
        return Err(CliError::Internal("re-emitted document is not byte-identical".into()));
    }
    if emit {
        writeln!(out, "{first}")?;
        return Ok(());
    }
    let mismatches = if audit {
        let declared_root = parsed.declared_labels.iter().find(|(_, l)| l.as_str() == "R_0").map(|(&v, _)| v);
        let root = match root.map(NodeId).or(declared_root) {
            Some(r) => r,
            None => min_out_degree_node(g, TieBreak::LowestId)?,
        };
        let l = layered(g, root)?;
        Some((root, audit_labels(&parsed.declared_labels, &l)))
    } else {
        None
    };
    if format == Format::Json {
        let mut value = json!({"nodes": g.node_count(), "arcs": g.arc_count(), "byte_identical": true});
        if let Some((root, m)) = &mismatches {
            value["audit"] = json!({"root": root, "declared": parsed.declared_labels.len(), "mismatches": m});
        }
        return emit_json(out, &value);
    }
    let mut s = String::new();
    let _ = writeln!(s, "nodes {}  arcs {}  round trip ok", g.node_count(), g.arc_count());
    if let Some((root, m)) = &mismatches {
        let _ = writeln!(s, "audit root {root}: {} of {} declared labels differ", m.len(), parsed.declared_labels.len());
        for x in m {
            let _ = writeln!(s, "  node {}: declared {}, computed {}", x.node, x.declared, x.computed);
        }
    }
    out.write_all(s.as_bytes())?;
    Ok(())
}
