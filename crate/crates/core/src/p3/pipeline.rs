//! The filtered small program graph and capped streaming protocols over the
//! unbounded program stream.

use std::collections::HashMap;

use serde::Serialize;

use super::enumerate::ProgramStream;
use super::machine::Program;
use super::witness::{enumerate_p3_witnesses, P3Witness};
use crate::graph::{twin_classes, OrderedConsistencyGraph, Vertex};
use crate::map::TeacherMap;

pub const DEFAULT_STEP_LIMIT: u64 = 400;
pub const DEFAULT_PROGRAM_CAP: usize = 10_000;
pub const DEFAULT_MAX_BITS: u32 = 4;

/// True iff `program` halts on every input of `w` with exactly the paired
/// output.
pub fn p3_consistent(program: &Program, w: &P3Witness, step_limit: u64) -> bool {
    w.pairs().iter().all(|(i, o)| {
        let out = program.run(i, step_limit);
        out.halted && out.output == *o
    })
}

/// Interns the inputs used by a witness list and the outputs observed on
/// them, so consistency reduces to comparing small integers.
struct IoTable {
    inputs: Vec<String>,
    /// Per witness, `(input id, output)` pairs.
    wanted: Vec<Vec<(u32, String)>>,
}

impl IoTable {
    fn new(witnesses: &[P3Witness]) -> Self {
        let mut inputs = Vec::new();
        let mut input_id = HashMap::new();
        let wanted = witnesses
            .iter()
            .map(|w| {
                w.pairs()
                    .iter()
                    .map(|(i, o)| {
                        let id = *input_id.entry(i.clone()).or_insert_with(|| {
                            inputs.push(i.clone());
                            inputs.len() as u32 - 1
                        });
                        (id, o.clone())
                    })
                    .collect()
            })
            .collect();
        IoTable { inputs, wanted }
    }

    /// Output per input id, `None` if the program did not halt.
    fn behaviour(&self, p: &Program, step_limit: u64) -> Vec<Option<String>> {
        self.inputs
            .iter()
            .map(|i| {
                let out = p.run(i, step_limit);
                out.halted.then_some(out.output)
            })
            .collect()
    }

    fn consistent(&self, behaviour: &[Option<String>], w: usize) -> bool {
        self.wanted[w]
            .iter()
            .all(|(i, o)| behaviour[*i as usize].as_deref() == Some(o.as_str()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PipelineConfig {
    pub program_cap: usize,
    pub max_bits: u32,
    pub step_limit: u64,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            program_cap: DEFAULT_PROGRAM_CAP,
            max_bits: DEFAULT_MAX_BITS,
            step_limit: DEFAULT_STEP_LIMIT,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PipelineReport {
    pub programs_in: usize,
    pub witnesses_in: usize,
    pub programs_kept: usize,
    pub witnesses_kept: usize,
    pub twin_classes: usize,
}

/// Consistency graph of the first `program_cap` programs against every
/// witness of at most `max_bits` bits, with isolated vertices removed on
/// both sides.
pub fn small_p3_pipeline(cfg: PipelineConfig) -> (OrderedConsistencyGraph, PipelineReport) {
    let programs: Vec<Program> = ProgramStream::new().take(cfg.program_cap).collect();
    let witnesses = enumerate_p3_witnesses(cfg.max_bits);
    let full = program_graph(&programs, &witnesses, cfg.step_limit);
    let graph = full.without_isolated();
    let report = PipelineReport {
        programs_in: programs.len(),
        witnesses_in: witnesses.len(),
        programs_kept: graph.num_reps(),
        witnesses_kept: graph.num_wits(),
        twin_classes: twin_classes(&graph).num_classes(),
    };
    (graph, report)
}

/// Unfiltered consistency graph between explicit program and witness lists.
/// Programs must be in shortlex order and witnesses in size order.
pub fn program_graph(programs: &[Program], witnesses: &[P3Witness], step_limit: u64) -> OrderedConsistencyGraph {
    let table = IoTable::new(witnesses);
    let row = |p: &Program| -> Vec<u32> {
        let b = table.behaviour(p, step_limit);
        (0..witnesses.len())
            .filter(|&w| table.consistent(&b, w))
            .map(|w| w as u32)
            .collect()
    };
    #[cfg(feature = "parallel")]
    let by_program: Vec<Vec<u32>> = {
        use rayon::prelude::*;
        programs.par_iter().map(row).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let by_program: Vec<Vec<u32>> = programs.iter().map(row).collect();

    let mut adjacency = vec![Vec::new(); witnesses.len()];
    for (r, ws) in by_program.iter().enumerate() {
        for &w in ws {
            adjacency[w as usize].push(r as u32);
        }
    }
    let reps = programs
        .iter()
        .map(|p| Vertex::new(p.len() as u32, p.to_string()))
        .collect();
    let wits = witnesses.iter().map(|w| Vertex::new(w.bits(), w.to_string())).collect();
    OrderedConsistencyGraph::new(reps, wits, adjacency).expect("ordered inputs")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StreamProtocol {
    Eager,
    Greedy,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct StreamConfig {
    pub witness_max_bits: u32,
    /// Programs beyond this many are never considered.
    pub program_search_cap: usize,
    pub step_limit: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct StreamReport {
    pub protocol: StreamProtocol,
    pub witnesses: usize,
    pub reps_taught: usize,
    /// Witnesses for which no suitable program exists below the cap.
    pub abandoned: Vec<u32>,
    /// Eager only: witnesses whose earliest program was already taught.
    pub skipped: Vec<u32>,
    /// Number of distinct programs whose behaviour was computed.
    pub programs_evaluated: usize,
    pub max_witness_bits: u32,
    pub max_program_index: Option<u32>,
}

#[derive(Clone, Debug)]
pub struct StreamResult {
    /// Indexed by position in the program stream.
    pub map: TeacherMap,
    pub programs: Vec<Program>,
    pub witnesses: Vec<P3Witness>,
    pub report: StreamReport,
}

/// Eager or Greedy over the program stream, without materialising the
/// consistency graph. Program behaviour is computed lazily and cached.
pub fn streaming_teach(protocol: StreamProtocol, cfg: StreamConfig) -> StreamResult {
    let witnesses = enumerate_p3_witnesses(cfg.witness_max_bits);
    let table = IoTable::new(&witnesses);
    let programs: Vec<Program> = ProgramStream::new().take(cfg.program_search_cap).collect();
    let mut behaviour: Vec<Option<Vec<Option<String>>>> = vec![None; programs.len()];
    let mut evaluated = 0usize;
    let mut map = TeacherMap::new(programs.len());
    let mut abandoned = Vec::new();
    let mut skipped = Vec::new();

    for w in 0..witnesses.len() {
        let mut found = None;
        for r in 0..programs.len() {
            if protocol == StreamProtocol::Greedy && map.is_assigned(r as u32) {
                continue;
            }
            let b = behaviour[r].get_or_insert_with(|| {
                evaluated += 1;
                table.behaviour(&programs[r], cfg.step_limit)
            });
            if table.consistent(b, w) {
                found = Some(r as u32);
                break;
            }
        }
        match found {
            None => abandoned.push(w as u32),
            Some(r) if map.is_assigned(r) => skipped.push(w as u32),
            Some(r) => map.assign(r, w as u32),
        }
    }
    let max_witness_bits = map
        .pairs()
        .map(|(_, w)| witnesses[w as usize].bits())
        .max()
        .unwrap_or(0);
    let report = StreamReport {
        protocol,
        witnesses: witnesses.len(),
        reps_taught: map.len(),
        abandoned,
        skipped,
        programs_evaluated: evaluated,
        max_witness_bits,
        max_program_index: map.pairs().map(|(r, _)| r).max(),
    };
    StreamResult {
        map,
        programs,
        witnesses,
        report,
    }
}

/// Three bits per instruction.
pub fn program_bits(program_len: usize) -> u32 {
    3 * program_len as u32
}
