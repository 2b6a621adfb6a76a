//! Ordered consistency graphs.
//!
//! A graph joins representations (left side) to the witnesses they are
//! consistent with (right side). Both sides carry a total order given by
//! their position, and a size that must be non-decreasing along that order.
//! Adjacency is stored per witness because every protocol scans witnesses
//! in the outer loop.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

/// One vertex of either side: its size and an opaque textual payload.
///
/// The payload is the domain's canonical rendering (a formula, a program,
/// a witness example set). The graph never interprets it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub size: u32,
    pub payload: String,
}

impl Vertex {
    pub fn new(size: u32, payload: impl Into<String>) -> Self {
        Vertex {
            size,
            payload: payload.into(),
        }
    }
}

/// Unvalidated graph data, as read from a file or produced by a builder.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GraphParts {
    pub reps: Vec<Vertex>,
    pub wits: Vec<Vertex>,
    /// `adjacency[w]` lists the representations consistent with witness `w`.
    pub adjacency: Vec<Vec<u32>>,
}

/// First invariant violated by a [`GraphParts`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    RepOrderNotSizeSorted { index: usize },
    WitnessOrderNotSizeSorted { index: usize },
    AdjacencyLengthMismatch { expected: usize, found: usize },
    AdjacencyNotAscending { witness: usize, position: usize },
    AdjacencyOutOfRange { witness: usize, rep: u32 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::RepOrderNotSizeSorted { index } => {
                write!(f, "representation order not size-sorted at index {index}")
            }
            Violation::WitnessOrderNotSizeSorted { index } => {
                write!(f, "witness order not size-sorted at index {index}")
            }
            Violation::AdjacencyLengthMismatch { expected, found } => {
                write!(f, "adjacency has {found} rows, expected one per witness ({expected})")
            }
            Violation::AdjacencyNotAscending { witness, position } => write!(
                f,
                "adjacency of witness {witness} not strictly ascending at position {position}"
            ),
            Violation::AdjacencyOutOfRange { witness, rep } => {
                write!(f, "adjacency of witness {witness} names unknown representation {rep}")
            }
        }
    }
}

impl std::error::Error for Violation {}

/// Checks every structural invariant and reports the first one violated.
pub fn validate_graph(parts: &GraphParts) -> Result<(), Violation> {
    if let Some(i) = first_descent(&parts.reps) {
        return Err(Violation::RepOrderNotSizeSorted { index: i });
    }
    if let Some(i) = first_descent(&parts.wits) {
        return Err(Violation::WitnessOrderNotSizeSorted { index: i });
    }
    if parts.adjacency.len() != parts.wits.len() {
        return Err(Violation::AdjacencyLengthMismatch {
            expected: parts.wits.len(),
            found: parts.adjacency.len(),
        });
    }
    let num_reps = parts.reps.len();
    for (w, row) in parts.adjacency.iter().enumerate() {
        for (pos, &r) in row.iter().enumerate() {
            if r as usize >= num_reps {
                return Err(Violation::AdjacencyOutOfRange { witness: w, rep: r });
            }
            if pos > 0 && row[pos - 1] >= r {
                return Err(Violation::AdjacencyNotAscending {
                    witness: w,
                    position: pos,
                });
            }
        }
    }
    Ok(())
}

fn first_descent(vs: &[Vertex]) -> Option<usize> {
    vs.windows(2).position(|p| p[0].size > p[1].size).map(|i| i + 1)
}

/// A validated, immutable ordered consistency graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedConsistencyGraph {
    parts: GraphParts,
}

impl TryFrom<GraphParts> for OrderedConsistencyGraph {
    type Error = Violation;

    fn try_from(parts: GraphParts) -> Result<Self, Violation> {
        validate_graph(&parts)?;
        Ok(OrderedConsistencyGraph { parts })
    }
}

impl OrderedConsistencyGraph {
    pub fn new(reps: Vec<Vertex>, wits: Vec<Vertex>, adjacency: Vec<Vec<u32>>) -> Result<Self, Violation> {
        GraphParts { reps, wits, adjacency }.try_into()
    }

    pub fn num_reps(&self) -> usize {
        self.parts.reps.len()
    }

    pub fn num_wits(&self) -> usize {
        self.parts.wits.len()
    }

    pub fn num_edges(&self) -> usize {
        self.parts.adjacency.iter().map(Vec::len).sum()
    }

    pub fn reps(&self) -> &[Vertex] {
        &self.parts.reps
    }

    pub fn wits(&self) -> &[Vertex] {
        &self.parts.wits
    }

    pub fn rep(&self, r: u32) -> &Vertex {
        &self.parts.reps[r as usize]
    }

    pub fn wit(&self, w: u32) -> &Vertex {
        &self.parts.wits[w as usize]
    }

    /// Representations consistent with witness `w`, ascending.
    pub fn consistent_reps(&self, w: u32) -> &[u32] {
        &self.parts.adjacency[w as usize]
    }

    pub fn adjacency(&self) -> &[Vec<u32>] {
        &self.parts.adjacency
    }

    pub fn has_edge(&self, r: u32, w: u32) -> bool {
        self.consistent_reps(w).binary_search(&r).is_ok()
    }

    /// Builds the transposed index: for every representation, its consistent
    /// witnesses in ascending order.
    pub fn rep_adjacency(&self) -> Vec<Vec<u32>> {
        let mut out = vec![Vec::new(); self.num_reps()];
        for (w, row) in self.parts.adjacency.iter().enumerate() {
            for &r in row {
                out[r as usize].push(w as u32);
            }
        }
        out
    }

    /// Re-checks the invariants. Always `Ok` for a constructed graph.
    pub fn validate(&self) -> Result<(), Violation> {
        validate_graph(&self.parts)
    }

    pub fn parts(&self) -> &GraphParts {
        &self.parts
    }

    pub fn into_parts(self) -> GraphParts {
        self.parts
    }

    /// Induced subgraph on all representations and the witnesses of size at
    /// most `max_size`.
    pub fn restrict_by_size(&self, max_size: u32) -> OrderedConsistencyGraph {
        let keep = self.witness_prefix_len(max_size);
        OrderedConsistencyGraph {
            parts: GraphParts {
                reps: self.parts.reps.clone(),
                wits: self.parts.wits[..keep].to_vec(),
                adjacency: self.parts.adjacency[..keep].to_vec(),
            },
        }
    }

    /// Number of leading witnesses whose size is at most `max_size`.
    /// Witnesses are size-sorted, so they form a prefix.
    pub fn witness_prefix_len(&self, max_size: u32) -> usize {
        self.parts.wits.partition_point(|v| v.size <= max_size)
    }

    /// Distinct witness sizes in ascending order.
    pub fn distinct_witness_sizes(&self) -> Vec<u32> {
        let mut sizes: Vec<u32> = self.parts.wits.iter().map(|v| v.size).collect();
        sizes.dedup();
        sizes
    }

    /// Drops every isolated vertex on both sides and renumbers, keeping order.
    pub fn without_isolated(&self) -> OrderedConsistencyGraph {
        let mut rep_used = vec![false; self.num_reps()];
        for row in &self.parts.adjacency {
            for &r in row {
                rep_used[r as usize] = true;
            }
        }
        let mut renumber = vec![u32::MAX; self.num_reps()];
        let mut reps = Vec::new();
        for (r, v) in self.parts.reps.iter().enumerate() {
            if rep_used[r] {
                renumber[r] = reps.len() as u32;
                reps.push(v.clone());
            }
        }
        let mut wits = Vec::new();
        let mut adjacency = Vec::new();
        for (v, row) in self.parts.wits.iter().zip(&self.parts.adjacency) {
            if !row.is_empty() {
                wits.push(v.clone());
                adjacency.push(row.iter().map(|&r| renumber[r as usize]).collect());
            }
        }
        OrderedConsistencyGraph {
            parts: GraphParts { reps, wits, adjacency },
        }
    }
}

/// Partition of the representations into concept classes.
///
/// Every class is identified by its smallest representation index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConceptPartition {
    class_of: Vec<u32>,
    blocks: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum PartitionError {
    #[error("representation {0} appears in more than one block")]
    Overlap(u32),
    #[error("representation {0} is not covered by any block")]
    Uncovered(u32),
    #[error("representation {0} is out of range")]
    OutOfRange(u32),
    #[error("empty block")]
    EmptyBlock,
}

impl ConceptPartition {
    /// Groups representations by an arbitrary key; representations with equal
    /// keys share a class.
    pub fn from_keys<K, I>(keys: I) -> Self
    where
        K: Eq + std::hash::Hash,
        I: IntoIterator<Item = K>,
    {
        let mut block_of_key: HashMap<K, usize> = HashMap::new();
        let mut blocks: Vec<Vec<u32>> = Vec::new();
        let mut class_of = Vec::new();
        for (r, key) in keys.into_iter().enumerate() {
            let b = *block_of_key.entry(key).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            blocks[b].push(r as u32);
            class_of.push(b);
        }
        let class_of = class_of.into_iter().map(|b| blocks[b][0]).collect();
        ConceptPartition { class_of, blocks }
    }

    /// Builds a partition from explicit blocks over `num_reps` representations.
    pub fn from_blocks(num_reps: usize, blocks: Vec<Vec<u32>>) -> Result<Self, PartitionError> {
        let mut class_of = vec![u32::MAX; num_reps];
        let mut blocks: Vec<Vec<u32>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        for b in &blocks {
            let Some(&id) = b.first() else {
                return Err(PartitionError::EmptyBlock);
            };
            for w in b.windows(2) {
                if w[0] == w[1] {
                    return Err(PartitionError::Overlap(w[0]));
                }
            }
            for &r in b {
                let slot = class_of.get_mut(r as usize).ok_or(PartitionError::OutOfRange(r))?;
                if *slot != u32::MAX {
                    return Err(PartitionError::Overlap(r));
                }
                *slot = id;
            }
        }
        if let Some(r) = class_of.iter().position(|&c| c == u32::MAX) {
            return Err(PartitionError::Uncovered(r as u32));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(ConceptPartition { class_of, blocks })
    }

    /// Class identifier of representation `r`.
    pub fn class_of(&self, r: u32) -> u32 {
        self.class_of[r as usize]
    }

    /// Blocks in ascending order of their identifiers.
    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn num_classes(&self) -> usize {
        self.blocks.len()
    }

    pub fn num_reps(&self) -> usize {
        self.class_of.len()
    }

    /// Dense index of every class (position in [`Self::blocks`]) per rep.
    pub fn dense_labels(&self) -> Vec<u32> {
        let mut dense = vec![0u32; self.class_of.len()];
        for (i, b) in self.blocks.iter().enumerate() {
            for &r in b {
                dense[r as usize] = i as u32;
            }
        }
        dense
    }
}

/// Groups representations whose sets of consistent witnesses are identical.
pub fn twin_classes(g: &OrderedConsistencyGraph) -> ConceptPartition {
    ConceptPartition::from_keys(g.rep_adjacency())
}
