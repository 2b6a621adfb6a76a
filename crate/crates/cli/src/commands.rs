//! Command implementations. Each writes its primary result to `--out` or
//! the supplied writer; builds, maps and streams write their artifact to
//! `--out` and print a JSON summary.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;
use teachrep::experiments::{boolean_summary_with, summarize, DomainSummary, ProtocolSet, BOOLEAN_ROWS};
use teachrep::format::{
    parse_graph, parse_partition, parse_teacher_map, write_graph_to, write_partition, write_teacher_map,
};
use teachrep::graph::{twin_classes, ConceptPartition, OrderedConsistencyGraph};
use teachrep::map::TeacherMap;
use teachrep::p3::{
    program_bits, streaming_teach, P3Witness, PipelineReport, Program, StreamConfig, StreamProtocol, StreamReport,
    DEFAULT_MAX_BITS,
};
use teachrep::teachers::{eager, greedy_by_witness, optimal1, optimal2, TeachError};
use teachrep::{compare_greedy_eager, concepts_taught, conjecture_search};

use crate::error::{usage, CliError, Result};
use crate::source::{parse_source, BuildOptions};
use crate::{Cli, Command, GlobalOpts, Protocol, StreamProtocolArg, Table};

/// Runs `cli`, writing results that are not redirected by `--out` to
/// `stdout`.
pub fn run(cli: &Cli, stdout: &mut dyn Write) -> Result<()> {
    let g = &cli.global;
    match &cli.command {
        Command::Build {
            domain,
            spec,
            partition,
        } => build(g, domain, spec.as_deref(), partition.as_deref(), stdout),
        Command::Teach {
            graph,
            protocol,
            partition,
        } => teach(g, graph, *protocol, partition.as_deref(), stdout),
        Command::Metrics {
            graph,
            partition,
            domain,
            spec,
        } => metrics(g, graph, partition.as_deref(), domain.as_deref(), spec, stdout),
        Command::Compare {
            graph,
            partition,
            domain,
        } => compare(g, graph, partition.as_deref(), domain.as_deref(), stdout),
        Command::Figure2 { map, graph } => figure2(g, map, graph, stdout),
        Command::Conjecture { k, n, q } => conjecture(g, *k, *n, *q, stdout),
        Command::Stream { protocol, max_bits } => stream(g, *protocol, *max_bits, stdout),
        Command::Tables { table, no_small_p3 } => tables(g, *table, !no_small_p3, stdout),
    }
}

// ---------------------------------------------------------------- I/O helpers

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

fn write_file(path: &Path, f: impl FnOnce(&mut BufWriter<File>) -> io::Result<()>) -> Result<()> {
    let file = File::create(path).map_err(|e| CliError::io(path, e))?;
    let mut w = BufWriter::new(file);
    f(&mut w).and_then(|_| w.flush()).map_err(|e| CliError::io(path, e))
}

fn stdout_err(e: io::Error) -> CliError {
    CliError::io(Path::new("<stdout>"), e)
}

/// Writes `text` to `--out` if given, else to `stdout`.
fn emit(g: &GlobalOpts, text: &str, stdout: &mut dyn Write) -> Result<()> {
    match &g.out {
        Some(path) => write_file(path, |w| w.write_all(text.as_bytes())),
        None => stdout.write_all(text.as_bytes()).map_err(stdout_err),
    }
}

fn print_json(value: &impl Serialize, stdout: &mut dyn Write) -> Result<()> {
    let line = serde_json::to_string(value).expect("serializable summary");
    writeln!(stdout, "{line}").map_err(stdout_err)
}

fn load_graph(path: &Path) -> Result<OrderedConsistencyGraph> {
    parse_graph(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load_partition(path: Option<&Path>, g: &OrderedConsistencyGraph) -> Result<ConceptPartition> {
    let Some(path) = path else {
        return Ok(twin_classes(g));
    };
    let p = parse_partition(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    if p.num_reps() != g.num_reps() {
        return Err(usage(format!(
            "{}: partition covers {} representations, graph has {}",
            path.display(),
            p.num_reps(),
            g.num_reps()
        )));
    }
    Ok(p)
}

fn csv_text<T: Serialize>(rows: &[T]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).expect("flat CSV row");
    }
    String::from_utf8(w.into_inner().expect("in-memory CSV")).expect("UTF-8 CSV")
}

fn frac(x: f64) -> String {
    format!("{x:.4}")
}

fn file_stem(path: &Path) -> String {
    path.file_stem()
        .map_or_else(|| "graph".to_string(), |s| s.to_string_lossy().into_owned())
}

// ---------------------------------------------------------------- build

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct BuildSummary<'a> {
    domain: &'a str,
    witness_spec: &'a str,
    num_reps: usize,
    num_witnesses: usize,
    num_edges: usize,
    /// Twin classes of representations (|R|/|W| proxy for concepts).
    num_classes: usize,
    /// Classes of the written partition: truth tables for DNF domains.
    num_concepts: usize,
    witness_tiebreak: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pipeline: Option<PipelineReport>,
    out: String,
}

fn build(
    g: &GlobalOpts,
    domain: &str,
    spec: Option<&str>,
    partition: Option<&Path>,
    stdout: &mut dyn Write,
) -> Result<()> {
    let source = parse_source(domain, spec)?;
    let out = g
        .out
        .as_deref()
        .ok_or_else(|| usage("build writes a graph file: pass --out <path>"))?;
    let built = source.build(BuildOptions {
        seed: g.seed,
        step_limit: g.step_limit,
        program_cap: g.program_cap,
        tie: g.witness_tiebreak,
    })?;
    write_file(out, |w| write_graph_to(&built.graph, w))?;
    if let Some(path) = partition {
        let text = write_partition(&built.partition);
        write_file(path, |w| w.write_all(text.as_bytes()))?;
    }
    print_json(
        &BuildSummary {
            domain: &built.domain,
            witness_spec: &built.witness_spec,
            num_reps: built.graph.num_reps(),
            num_witnesses: built.graph.num_wits(),
            num_edges: built.graph.num_edges(),
            num_classes: twin_classes(&built.graph).num_classes(),
            num_concepts: built.partition.num_classes(),
            witness_tiebreak: g.witness_tiebreak.name(),
            pipeline: built.pipeline,
            out: out.display().to_string(),
        },
        stdout,
    )
}

// ---------------------------------------------------------------- teach

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct TeachStats {
    protocol: &'static str,
    status: &'static str,
    partition: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    reps_taught: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    concepts_taught: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_witness_size: Option<u32>,
    /// 1-based position in the witness order, as in the paper.
    #[serde(skip_serializing_if = "Option::is_none")]
    max_witness_index: Option<u32>,
    /// Optimal-2: reps taught is a lower bound on what it can teach.
    reps_lower_bound: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    k_star: Option<u32>,
    /// Optimal-1 failure: size of the best matching found.
    #[serde(skip_serializing_if = "Option::is_none")]
    max_matching: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    num_reps: Option<usize>,
}

impl TeachStats {
    fn from_map(
        protocol: &'static str,
        partition: &'static str,
        g: &OrderedConsistencyGraph,
        p: &ConceptPartition,
        m: &TeacherMap,
    ) -> Self {
        TeachStats {
            protocol,
            status: "ok",
            partition,
            reps_taught: Some(m.len()),
            concepts_taught: Some(concepts_taught(m, p)),
            max_witness_size: m.max_witness_size(g),
            max_witness_index: m.max_witness_index().map(|i| i + 1),
            reps_lower_bound: false,
            k_star: None,
            max_matching: None,
            num_reps: None,
        }
    }
}

fn teach(
    g: &GlobalOpts,
    graph: &Path,
    protocol: Protocol,
    partition: Option<&Path>,
    stdout: &mut dyn Write,
) -> Result<()> {
    let graph = load_graph(graph)?;
    let part_name = if partition.is_some() { "file" } else { "twin-classes" };
    let p = load_partition(partition, &graph)?;
    let (map, stats) = match protocol {
        Protocol::Eager => {
            let m = eager(&graph);
            let s = TeachStats::from_map("eager", part_name, &graph, &p, &m);
            (Some(m), s)
        }
        Protocol::Greedy => {
            let m = greedy_by_witness(&graph);
            let s = TeachStats::from_map("greedy", part_name, &graph, &p, &m);
            (Some(m), s)
        }
        Protocol::Optimal1 => match optimal1(&graph) {
            Ok(o) => {
                let mut s = TeachStats::from_map("optimal1", part_name, &graph, &p, &o.map);
                s.k_star = Some(o.max_size);
                (Some(o.map), s)
            }
            Err(TeachError::NoSaturatingMatching { num_reps, best }) => (
                None,
                TeachStats {
                    protocol: "optimal1",
                    status: "noSaturatingMatching",
                    partition: part_name,
                    reps_taught: None,
                    concepts_taught: None,
                    max_witness_size: None,
                    max_witness_index: None,
                    reps_lower_bound: false,
                    k_star: None,
                    max_matching: Some(best),
                    num_reps: Some(num_reps),
                },
            ),
        },
        Protocol::Optimal2 => {
            let o = optimal2(&graph, &p);
            let mut s = TeachStats::from_map("optimal2", part_name, &graph, &p, &o.map);
            s.concepts_taught = Some(o.concepts_covered);
            s.reps_lower_bound = true;
            (Some(o.map), s)
        }
    };
    if let (Some(out), Some(map)) = (&g.out, &map) {
        let text = write_teacher_map(map);
        write_file(out, |w| w.write_all(text.as_bytes()))?;
    }
    print_json(&stats, stdout)
}

// ---------------------------------------------------------------- metrics / compare

fn metrics(
    g: &GlobalOpts,
    graph_path: &Path,
    partition: Option<&Path>,
    domain: Option<&str>,
    spec: &str,
    stdout: &mut dyn Write,
) -> Result<()> {
    let graph = load_graph(graph_path)?;
    let p = load_partition(partition, &graph)?;
    if graph.num_wits() == 0 || p.num_classes() == 0 {
        return Err(usage("metrics need at least one witness and one representation"));
    }
    let name = domain.map_or_else(|| file_stem(graph_path), str::to_string);
    let s = summarize(
        &name,
        spec,
        &graph,
        &p,
        ProtocolSet {
            optimal1: false,
            optimal2: false,
        },
    );
    emit(g, &format!("{}\n{}\n", DomainSummary::CSV_HEADER, s.csv_row()), stdout)
}

#[derive(Serialize)]
struct CompareRow {
    domain: String,
    common_concepts: usize,
    index_lower: usize,
    size_smaller: usize,
    pct_index_lower: String,
    pct_size_smaller: String,
}

fn compare(
    g: &GlobalOpts,
    graph_path: &Path,
    partition: Option<&Path>,
    domain: Option<&str>,
    stdout: &mut dyn Write,
) -> Result<()> {
    let graph = load_graph(graph_path)?;
    let p = load_partition(partition, &graph)?;
    let c = compare_greedy_eager(&graph, &p, &eager(&graph), &greedy_by_witness(&graph));
    let row = CompareRow {
        domain: domain.map_or_else(|| file_stem(graph_path), str::to_string),
        common_concepts: c.common_concepts,
        index_lower: c.index_lower,
        size_smaller: c.size_smaller,
        pct_index_lower: frac(c.pct_index_lower),
        pct_size_smaller: frac(c.pct_size_smaller),
    };
    emit(g, &csv_text(&[row]), stdout)
}

// ---------------------------------------------------------------- figure 2

#[derive(Serialize)]
struct Figure2Row {
    program_bits: u32,
    witness_bits: u32,
    count: usize,
}

/// Aggregated (program bits, Elias witness bits) points of a P3 map.
pub fn figure2_points(graph: &OrderedConsistencyGraph, map: &TeacherMap) -> Result<BTreeMap<(u32, u32), usize>> {
    let mut points = BTreeMap::new();
    for (r, w) in map.pairs() {
        let prog = &graph.rep(r).payload;
        let program: Program = prog
            .parse()
            .map_err(|e| usage(format!("representation {r} (`{prog}`) is not a P3 program: {e}")))?;
        let wit = &graph.wit(w).payload;
        let witness: P3Witness = wit
            .parse()
            .map_err(|e| usage(format!("witness {w} (`{wit}`) is not a P3 witness: {e}")))?;
        *points
            .entry((program_bits(program.len()), witness.elias_bits()))
            .or_insert(0) += 1;
    }
    Ok(points)
}

fn figure2(g: &GlobalOpts, map_path: &Path, graph_path: &Path, stdout: &mut dyn Write) -> Result<()> {
    let graph = load_graph(graph_path)?;
    let map = parse_teacher_map(&read(map_path)?, graph.num_reps())
        .map_err(|e| usage(format!("{}: {e}", map_path.display())))?;
    map.validate(&graph)
        .map_err(|e| usage(format!("{}: {e}", map_path.display())))?;
    let rows: Vec<Figure2Row> = figure2_points(&graph, &map)?
        .into_iter()
        .map(|((program_bits, witness_bits), count)| Figure2Row {
            program_bits,
            witness_bits,
            count,
        })
        .collect();
    let text = if rows.is_empty() {
        "program_bits,witness_bits,count\n".to_string()
    } else {
        csv_text(&rows)
    };
    emit(g, &text, stdout)
}

// ---------------------------------------------------------------- conjecture / stream

fn conjecture(g: &GlobalOpts, k: usize, n: usize, q: usize, stdout: &mut dyn Write) -> Result<()> {
    let v = conjecture_search(k, n, q).map_err(|e| usage(e.to_string()))?;
    let line = serde_json::to_string(&v).expect("serializable verdict");
    emit(g, &format!("{line}\n"), stdout)
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct StreamSummary {
    config: StreamConfig,
    report: StreamReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    out: Option<String>,
}

fn stream(g: &GlobalOpts, protocol: StreamProtocolArg, max_bits: u32, stdout: &mut dyn Write) -> Result<()> {
    if g.program_cap == 0 || g.step_limit == 0 {
        return Err(usage("--program-cap and --step-limit must be positive"));
    }
    let cfg = StreamConfig {
        witness_max_bits: max_bits,
        program_search_cap: g.program_cap,
        step_limit: g.step_limit,
    };
    let protocol = match protocol {
        StreamProtocolArg::Eager => StreamProtocol::Eager,
        StreamProtocolArg::Greedy => StreamProtocol::Greedy,
    };
    let res = streaming_teach(protocol, cfg);
    if let Some(out) = &g.out {
        let text = write_teacher_map(&res.map);
        write_file(out, |w| w.write_all(text.as_bytes()))?;
    }
    print_json(
        &StreamSummary {
            config: cfg,
            report: res.report,
            out: g.out.as_ref().map(|p| p.display().to_string()),
        },
        stdout,
    )
}

// ---------------------------------------------------------------- tables

#[derive(Serialize)]
struct Table1Row<'a> {
    domain: &'a str,
    witness_spec: &'a str,
    num_reps: usize,
    num_concepts: usize,
    num_witnesses: usize,
    num_edges: usize,
    redundancy: String,
    redundancy_spread: String,
}

#[derive(Serialize)]
struct Table2Row<'a> {
    domain: &'a str,
    witness_spec: &'a str,
    algorithm: &'a str,
    reps_taught: usize,
    concepts_taught: usize,
    max_witness_size: Option<u32>,
    max_witness_index: Option<u32>,
    reps_lower_bound: bool,
}

#[derive(Serialize)]
struct Table3Row<'a> {
    domain: &'a str,
    witness_spec: &'a str,
    common_concepts: usize,
    index_lower: usize,
    size_smaller: usize,
    pct_index_lower: String,
    pct_size_smaller: String,
}

/// Summaries of the five DNF rows and, optionally, small-P3, in the
/// paper's row order regardless of worker count.
pub fn table_summaries(g: &GlobalOpts, small_p3: bool) -> Result<Vec<DomainSummary>> {
    let mut rows: Vec<DomainSummary> = BOOLEAN_ROWS
        .par_iter()
        .map(|&(v, s)| boolean_summary_with(v, s, g.witness_tiebreak).1)
        .collect();
    if small_p3 {
        let built = parse_source("small-p3", None)?.build(BuildOptions {
            seed: g.seed,
            step_limit: g.step_limit,
            program_cap: g.program_cap,
            tie: g.witness_tiebreak,
        })?;
        rows.push(summarize(
            "small-p3",
            &format!("bits{DEFAULT_MAX_BITS}"),
            &built.graph,
            &built.partition,
            ProtocolSet {
                optimal1: false,
                optimal2: true,
            },
        ));
    }
    Ok(rows)
}

fn tables(g: &GlobalOpts, table: Table, small_p3: bool, stdout: &mut dyn Write) -> Result<()> {
    let rows = table_summaries(g, small_p3)?;
    let text = match table {
        Table::One => csv_text(
            &rows
                .iter()
                .map(|s| Table1Row {
                    domain: &s.domain,
                    witness_spec: &s.witness_spec,
                    num_reps: s.num_reps,
                    num_concepts: s.num_concepts,
                    num_witnesses: s.num_witnesses,
                    num_edges: s.num_edges,
                    redundancy: frac(s.redundancy),
                    redundancy_spread: frac(s.redundancy_spread),
                })
                .collect::<Vec<_>>(),
        ),
        Table::Two => csv_text(
            &rows
                .iter()
                .flat_map(|s| {
                    s.protocols.iter().map(move |p| Table2Row {
                        domain: &s.domain,
                        witness_spec: &s.witness_spec,
                        algorithm: p.algorithm,
                        reps_taught: p.reps_taught,
                        concepts_taught: p.concepts_taught,
                        max_witness_size: p.max_witness_size,
                        max_witness_index: p.max_witness_index,
                        reps_lower_bound: p.reps_lower_bound,
                    })
                })
                .collect::<Vec<_>>(),
        ),
        Table::Three => csv_text(
            &rows
                .iter()
                .map(|s| Table3Row {
                    domain: &s.domain,
                    witness_spec: &s.witness_spec,
                    common_concepts: s.comparison.common_concepts,
                    index_lower: s.comparison.index_lower,
                    size_smaller: s.comparison.size_smaller,
                    pct_index_lower: frac(s.comparison.pct_index_lower),
                    pct_size_smaller: frac(s.comparison.pct_size_smaller),
                })
                .collect::<Vec<_>>(),
        ),
        Table::Metrics => {
            let mut text = format!("{}\n", DomainSummary::CSV_HEADER);
            for s in &rows {
                text.push_str(&s.csv_row());
                text.push('\n');
            }
            text
        }
    };
    emit(g, &text, stdout)
}
