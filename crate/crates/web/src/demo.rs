//! JSON-producing entry points behind the wasm exports.

use serde::Serialize;
use teachrep::boolean::{
    build_domain_with, enumerate_witnesses_with, BoolWitness, DnfRep, Variant, WitnessSpec, WitnessTieBreak,
};
use teachrep::conjecture_search;
use teachrep::constructions::{figure1_graph, random_graph, separation_instance};
use teachrep::experiments::{boolean_summary_with, summarize, DomainSummary, ProtocolSet};
use teachrep::format::parse_graph;
use teachrep::graph::{twin_classes, OrderedConsistencyGraph};
use teachrep::map::TeacherMap;
use teachrep::p3::{Machine, Program};
use teachrep::teachers::{eager, greedy_by_witness, optimal1, optimal2};

fn to_json(v: &impl Serialize) -> String {
    serde_json::to_string(v).expect("serializable demo output")
}

// ---------------------------------------------------------------- P3

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct TraceState {
    step: u64,
    pc: usize,
    /// Instruction about to run, `None` once halted.
    instruction: Option<char>,
    head: i64,
    /// Position of the first character of `tape`.
    tape_start: i64,
    tape: String,
    output: String,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct RunReport {
    program: String,
    input: String,
    halted: bool,
    output: String,
    steps: u64,
    step_limit: u64,
    trace: Vec<TraceState>,
    trace_truncated: bool,
}

fn snapshot(m: &Machine<'_>, code: &[u8]) -> TraceState {
    let (start, cells) = m.tape();
    TraceState {
        step: m.steps,
        pc: m.pc,
        instruction: code.get(m.pc).map(|&b| b as char),
        head: m.head(),
        tape_start: start,
        tape: cells.iter().map(|c| c.symbol()).collect(),
        output: m.output.clone(),
    }
}

pub fn p3_run(program: &str, input: &str, step_limit: u64, trace_limit: usize) -> Result<String, String> {
    let p: Program = program.parse().map_err(|e| format!("program: {e}"))?;
    if let Some(c) = input.chars().find(|c| *c != '0' && *c != '1') {
        return Err(format!("input: `{c}` is not a bit"));
    }
    let mut m = Machine::new(&p, input);
    let mut trace = vec![snapshot(&m, p.code())];
    while m.steps < step_limit && m.step() {
        if trace.len() < trace_limit {
            trace.push(snapshot(&m, p.code()));
        }
    }
    let truncated = (m.steps as usize + 1) > trace.len();
    Ok(to_json(&RunReport {
        program: p.to_string(),
        input: input.to_string(),
        halted: m.halted(),
        output: m.output.clone(),
        steps: m.steps,
        step_limit,
        trace,
        trace_truncated: truncated,
    }))
}

// ---------------------------------------------------------------- graphs

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct VertexOut {
    size: u32,
    label: String,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct MapOut {
    protocol: &'static str,
    /// `(rep, witness)` pairs.
    pairs: Vec<(u32, u32)>,
    max_witness_size: Option<u32>,
    /// 1-based, as in the paper.
    max_witness_index: Option<u32>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct GraphReport {
    reps: Vec<VertexOut>,
    wits: Vec<VertexOut>,
    /// Per witness, consistent reps ascending.
    adjacency: Vec<Vec<u32>>,
    /// Twin class id per rep.
    classes: Vec<u32>,
    maps: Vec<MapOut>,
    /// Why Optimal-1 has no map, if it has none.
    optimal1_error: Option<String>,
    redundancy: f64,
    redundancy_spread: f64,
    summary: DomainSummary,
}

fn map_out(protocol: &'static str, g: &OrderedConsistencyGraph, m: &TeacherMap) -> MapOut {
    MapOut {
        protocol,
        pairs: m.pairs().collect(),
        max_witness_size: m.max_witness_size(g),
        max_witness_index: m.max_witness_index().map(|i| i + 1),
    }
}

fn graph_report(name: &str, g: &OrderedConsistencyGraph) -> String {
    let p = twin_classes(g);
    let mut maps = vec![
        map_out("eager", g, &eager(g)),
        map_out("greedy", g, &greedy_by_witness(g)),
    ];
    let optimal1_error = match optimal1(g) {
        Ok(o) => {
            maps.push(map_out("optimal1", g, &o.map));
            None
        }
        Err(e) => Some(e.to_string()),
    };
    maps.push(map_out("optimal2", g, &optimal2(g, &p).map));
    let summary = summarize(name, "-", g, &p, ProtocolSet::ALL);
    let vertices = |vs: &[teachrep::Vertex]| {
        vs.iter()
            .map(|v| VertexOut {
                size: v.size,
                label: v.payload.clone(),
            })
            .collect()
    };
    to_json(&GraphReport {
        reps: vertices(g.reps()),
        wits: vertices(g.wits()),
        adjacency: g.adjacency().to_vec(),
        classes: (0..g.num_reps() as u32).map(|r| p.class_of(r)).collect(),
        maps,
        optimal1_error,
        redundancy: summary.redundancy,
        redundancy_spread: summary.redundancy_spread,
        summary,
    })
}

/// Graphs beyond this many edges are not sent to the page.
const MAX_DEMO_EDGES: usize = 200_000;

fn fixture(name: &str, seed: u64) -> Result<OrderedConsistencyGraph, String> {
    let parts: Vec<&str> = name.split(':').collect();
    let num = |s: &str| s.parse::<usize>().map_err(|_| format!("bad number `{s}` in `{name}`"));
    let g = match parts.as_slice() {
        ["figure1"] => figure1_graph(),
        ["separation", s, t, k] => separation_instance(num(s)?, num(t)?, num(k)?).map_err(|e| e.to_string())?,
        ["random", r, w, p] => {
            let p: f64 = p.parse().map_err(|_| format!("bad probability `{p}`"))?;
            let (r, w) = (num(r)?, num(w)?);
            if r * w > MAX_DEMO_EDGES {
                return Err(format!("random graph too large for the demo ({r} x {w})"));
            }
            random_graph(seed, r, w, p)
        }
        _ => {
            return Err(format!(
                "unknown fixture `{name}` (figure1, separation:s:t:k, random:R:W:p)"
            ))
        }
    };
    if g.num_edges() > MAX_DEMO_EDGES {
        return Err(format!(
            "graph has {} edges; the demo shows at most {MAX_DEMO_EDGES}",
            g.num_edges()
        ));
    }
    Ok(g)
}

pub fn teach_fixture(name: &str, seed: u64) -> Result<String, String> {
    Ok(graph_report(name, &fixture(name, seed)?))
}

pub fn teach_ocg(text: &str) -> Result<String, String> {
    let g = parse_graph(text).map_err(|e| e.to_string())?;
    if g.num_edges() > MAX_DEMO_EDGES {
        return Err(format!(
            "graph has {} edges; the demo shows at most {MAX_DEMO_EDGES}",
            g.num_edges()
        ));
    }
    Ok(graph_report("ocg", &g))
}

// ---------------------------------------------------------------- DNF

pub fn dnf_summary(variant: &str, spec: &str, tiebreak: &str) -> Result<String, String> {
    let v: Variant = variant.parse()?;
    let s: WitnessSpec = spec.parse()?;
    let tie: WitnessTieBreak = tiebreak.parse()?;
    Ok(to_json(&boolean_summary_with(v, s, tie).1))
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Taught {
    protocol: &'static str,
    rep: String,
    witness: String,
    witness_size: u32,
    /// 1-based.
    witness_index: u32,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct FormulaReport {
    formula: String,
    size: u32,
    /// `f(000) … f(111)`, input bits `abc`.
    truth_table: String,
    consistent_witnesses: usize,
    /// Position of the formula in the 3-term DNF order, 1-based, if it is
    /// a 3-term DNF representation.
    three_term_index: Option<usize>,
    /// How Eager and Greedy teach this formula's concept in 3-term DNF
    /// with at most five examples.
    taught: Vec<Taught>,
}

pub fn dnf_formula(formula: &str) -> Result<String, String> {
    let rep: DnfRep = formula.parse().map_err(|e| format!("formula: {e}"))?;
    let tt = rep.truth_table();
    let spec = WitnessSpec::MaxCard(5);
    let wits: Vec<BoolWitness> = enumerate_witnesses_with(spec, WitnessTieBreak::default());
    let consistent = wits.iter().filter(|w| rep.consistent(w)).count();
    let d = build_domain_with(Variant::ThreeTerm, spec, WitnessTieBreak::default());
    let rendered = rep.to_string();
    let index = (0..d.graph.num_reps() as u32).find(|&r| d.graph.rep(r).payload == rendered);
    let mut taught = Vec::new();
    for (protocol, m) in [("eager", eager(&d.graph)), ("greedy", greedy_by_witness(&d.graph))] {
        // The earliest rep of this concept that the protocol teaches.
        let hit = m.pairs().find(|&(r, _)| d.truth_tables[r as usize] == tt);
        if let Some((r, w)) = hit {
            taught.push(Taught {
                protocol,
                rep: d.graph.rep(r).payload.clone(),
                witness: d.graph.wit(w).payload.clone(),
                witness_size: d.graph.wit(w).size,
                witness_index: w + 1,
            });
        }
    }
    Ok(to_json(&FormulaReport {
        formula: rendered,
        size: rep.size(),
        truth_table: (0..8).map(|i| if tt >> i & 1 == 1 { '1' } else { '0' }).collect(),
        consistent_witnesses: consistent,
        three_term_index: index.map(|r| r as usize + 1),
        taught,
    }))
}

// ---------------------------------------------------------------- conjecture

pub fn conjecture(k: usize, n: usize, q: usize) -> Result<String, String> {
    conjecture_search(k, n, q)
        .map(|v| to_json(&v))
        .map_err(|e| e.to_string())
}
