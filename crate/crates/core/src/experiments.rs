//! End-to-end runs of every protocol and metric on one domain, as reported
//! in the paper's Tables 1–3.

use serde::Serialize;

use crate::boolean::{build_domain_with, BooleanDomain, Variant, WitnessSpec, WitnessTieBreak};
use crate::graph::{ConceptPartition, OrderedConsistencyGraph};
use crate::map::TeacherMap;
use crate::metrics::{compare_greedy_eager, redundancy, redundancy_spread, ComparisonStats};
use crate::teachers::{concepts_taught, eager, greedy_by_witness, optimal1, optimal2};

/// One protocol's row of Table 2.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ProtocolRow {
    pub algorithm: &'static str,
    pub reps_taught: usize,
    pub concepts_taught: usize,
    pub max_witness_size: Option<u32>,
    /// 1-based, as in the paper.
    pub max_witness_index: Option<u32>,
    /// Optimal-2 only: reps taught is a lower bound.
    pub reps_lower_bound: bool,
}

impl ProtocolRow {
    fn from_map(algorithm: &'static str, g: &OrderedConsistencyGraph, p: &ConceptPartition, m: &TeacherMap) -> Self {
        ProtocolRow {
            algorithm,
            reps_taught: m.len(),
            concepts_taught: concepts_taught(m, p),
            max_witness_size: m.max_witness_size(g),
            max_witness_index: m.max_witness_index().map(|i| i + 1),
            reps_lower_bound: false,
        }
    }
}

/// Tables 1–3 for one graph and partition.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DomainSummary {
    pub domain: String,
    pub witness_spec: String,
    pub num_reps: usize,
    pub num_concepts: usize,
    pub num_witnesses: usize,
    pub num_edges: usize,
    pub redundancy: f64,
    pub redundancy_spread: f64,
    pub protocols: Vec<ProtocolRow>,
    pub comparison: ComparisonStats,
}

impl DomainSummary {
    pub fn protocol(&self, name: &str) -> Option<&ProtocolRow> {
        self.protocols.iter().find(|r| r.algorithm == name)
    }

    pub const CSV_HEADER: &'static str =
        "domain,witness_spec,redundancy,redundancy_spread,pct_index_lower,pct_size_smaller";

    /// Metrics CSV row; fractions with four decimals.
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{:.4},{:.4},{:.4},{:.4}",
            self.domain,
            self.witness_spec,
            self.redundancy,
            self.redundancy_spread,
            self.comparison.pct_index_lower,
            self.comparison.pct_size_smaller
        )
    }
}

/// Which protocols to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProtocolSet {
    pub optimal1: bool,
    pub optimal2: bool,
}

impl ProtocolSet {
    pub const ALL: ProtocolSet = ProtocolSet {
        optimal1: true,
        optimal2: true,
    };

    /// The paper's choice: Optimal-1 when every concept is a singleton or
    /// the domain is small, Optimal-2 for the permutation languages.
    pub fn for_variant(v: Variant) -> Self {
        match v {
            Variant::Full3Dnf | Variant::ThreeTerm => ProtocolSet {
                optimal1: true,
                optimal2: true,
            },
            Variant::ThreeTermPerm | Variant::ThreeTermPermDup => ProtocolSet {
                optimal1: false,
                optimal2: true,
            },
        }
    }
}

pub fn summarize(
    domain: &str,
    witness_spec: &str,
    g: &OrderedConsistencyGraph,
    p: &ConceptPartition,
    which: ProtocolSet,
) -> DomainSummary {
    let e = eager(g);
    let gr = greedy_by_witness(g);
    let mut protocols = vec![
        ProtocolRow::from_map("eager", g, p, &e),
        ProtocolRow::from_map("greedy", g, p, &gr),
    ];
    if which.optimal1 {
        if let Ok(o1) = optimal1(g) {
            protocols.push(ProtocolRow::from_map("optimal1", g, p, &o1.map));
        }
    }
    if which.optimal2 {
        let o2 = optimal2(g, p);
        let mut row = ProtocolRow::from_map("optimal2", g, p, &o2.map);
        row.concepts_taught = o2.concepts_covered;
        row.reps_lower_bound = true;
        protocols.push(row);
    }
    DomainSummary {
        domain: domain.to_string(),
        witness_spec: witness_spec.to_string(),
        num_reps: g.num_reps(),
        num_concepts: p.num_classes(),
        num_witnesses: g.num_wits(),
        num_edges: g.num_edges(),
        redundancy: redundancy(p).unwrap_or(0.0),
        redundancy_spread: redundancy_spread(g, p).unwrap_or(0.0),
        protocols,
        comparison: compare_greedy_eager(g, p, &e, &gr),
    }
}

/// Builds a DNF domain and summarizes it under the truth-table partition.
pub fn boolean_summary(variant: Variant, spec: WitnessSpec) -> (BooleanDomain, DomainSummary) {
    boolean_summary_with(variant, spec, WitnessTieBreak::default())
}

pub fn boolean_summary_with(
    variant: Variant,
    spec: WitnessSpec,
    tie: WitnessTieBreak,
) -> (BooleanDomain, DomainSummary) {
    let d = build_domain_with(variant, spec, tie);
    let p = d.semantic_partition();
    let s = summarize(
        variant.name(),
        &spec.name(),
        &d.graph,
        &p,
        ProtocolSet::for_variant(variant),
    );
    (d, s)
}

/// The five boolean rows of Tables 1–3.
pub const BOOLEAN_ROWS: [(Variant, WitnessSpec); 5] = [
    (Variant::Full3Dnf, WitnessSpec::MaxCard(5)),
    (Variant::ThreeTerm, WitnessSpec::MaxCard(5)),
    (Variant::ThreeTermPerm, WitnessSpec::MaxCard(5)),
    (Variant::ThreeTermPerm, WitnessSpec::ExactCard(5)),
    (Variant::ThreeTermPermDup, WitnessSpec::MaxCard(5)),
];
