//! Ordered consistency graphs and teaching protocols for redundant
//! representation languages.
//!
//! A graph pairs ordered representations (programs, formulas) with
//! size-sorted witnesses; a teacher maps representations to witnesses
//! injectively and a learner inverts the map. The crate implements the
//! Eager, Greedy, Optimal-1 and Optimal-2 teachers, the redundancy metrics,
//! the 3-variable DNF domains and the P3 program domain.

pub mod boolean;
pub mod coding;
pub mod constructions;
pub mod experiments;
pub mod format;
pub mod graph;
pub mod map;
pub mod matching;
pub mod metrics;
pub mod p3;
pub mod teachers;

pub use graph::{
    twin_classes, ConceptPartition, GraphParts, OrderedConsistencyGraph, PartitionError, Vertex, Violation,
};
pub use map::{invert, LearnerMap, MapViolation, TeacherMap};
pub use metrics::{
    compare_greedy_eager, conjecture_search, redundancy, redundancy_spread, ComparisonStats, ConjectureVerdict,
    MetricsError,
};
pub use teachers::{
    concepts_taught, eager, greedy_by_representation, greedy_by_witness, optimal1, optimal2, Optimal1, Optimal2,
    TeachError,
};
