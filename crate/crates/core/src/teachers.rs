//! Eager, Greedy, Optimal-1 and Optimal-2 teaching protocols.

use serde::Serialize;

use crate::graph::{ConceptPartition, OrderedConsistencyGraph};
use crate::map::TeacherMap;
use crate::matching::{max_matching, max_matching_below};

/// Vertices a protocol scanned but did not use.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DropReport {
    pub dropped_witnesses: Vec<u32>,
    pub dropped_reps: Vec<u32>,
}

/// Eager: every witness goes to its earliest consistent representation, and
/// is skipped if that representation is already taught.
pub fn eager(g: &OrderedConsistencyGraph) -> TeacherMap {
    eager_with_report(g).0
}

pub fn eager_with_report(g: &OrderedConsistencyGraph) -> (TeacherMap, DropReport) {
    let mut map = TeacherMap::new(g.num_reps());
    let mut report = DropReport::default();
    for w in 0..g.num_wits() as u32 {
        match g.consistent_reps(w).first() {
            Some(&r) if !map.is_assigned(r) => map.assign(r, w),
            _ => report.dropped_witnesses.push(w),
        }
    }
    (map, report)
}

/// Greedy with the witness order outermost: every witness goes to the
/// earliest consistent representation not yet taught.
pub fn greedy_by_witness(g: &OrderedConsistencyGraph) -> TeacherMap {
    greedy_with_report(g).0
}

pub fn greedy_with_report(g: &OrderedConsistencyGraph) -> (TeacherMap, DropReport) {
    let mut map = TeacherMap::new(g.num_reps());
    let mut report = DropReport::default();
    for w in 0..g.num_wits() as u32 {
        match g.consistent_reps(w).iter().find(|&&r| !map.is_assigned(r)) {
            Some(&r) => map.assign(r, w),
            None => report.dropped_witnesses.push(w),
        }
    }
    (map, report)
}

/// Greedy with the representation order outermost: every representation
/// takes its earliest consistent witness not yet used.
pub fn greedy_by_representation(g: &OrderedConsistencyGraph) -> TeacherMap {
    let mut map = TeacherMap::new(g.num_reps());
    let mut used = vec![false; g.num_wits()];
    for (r, wits) in g.rep_adjacency().iter().enumerate() {
        if let Some(&w) = wits.iter().find(|&&w| !used[w as usize]) {
            used[w as usize] = true;
            map.assign(r as u32, w);
        }
    }
    map
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum TeachError {
    #[error("no matching covers all {num_reps} representations (best covers {best})")]
    NoSaturatingMatching { num_reps: usize, best: usize },
}

/// Result of Optimal-1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Optimal1 {
    /// Smallest witness size bound admitting a saturating matching.
    pub max_size: u32,
    pub map: TeacherMap,
}

/// Optimal-1: the smallest `k` such that the witnesses of size at most `k`
/// admit a matching covering every representation, found by binary search
/// over the distinct witness sizes.
pub fn optimal1(g: &OrderedConsistencyGraph) -> Result<Optimal1, TeachError> {
    let rep_adj = g.rep_adjacency();
    let n = g.num_reps();
    if n == 0 {
        return Ok(Optimal1 {
            max_size: 0,
            map: TeacherMap::new(0),
        });
    }
    let sizes = g.distinct_witness_sizes();
    let matching_at = |i: usize| {
        let limit = g.witness_prefix_len(sizes[i]);
        max_matching_below(&rep_adj, g.num_wits(), limit as u32)
    };
    let full = match sizes.len() {
        0 => None,
        _ => Some(matching_at(sizes.len() - 1)),
    };
    match &full {
        Some(m) if m.saturates_left() => {}
        _ => {
            return Err(TeachError::NoSaturatingMatching {
                num_reps: n,
                best: full.map_or(0, |m| m.size()),
            })
        }
    }
    // invariant: sizes[hi] saturates, sizes[lo - 1] (if any) does not
    let (mut lo, mut hi) = (0usize, sizes.len() - 1);
    let mut best = full.unwrap();
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        let m = matching_at(mid);
        if m.saturates_left() {
            hi = mid;
            best = m;
        } else {
            lo = mid + 1;
        }
    }
    Ok(Optimal1 {
        max_size: sizes[hi],
        map: TeacherMap::from_pairs(n, best.pairs()),
    })
}

/// Result of Optimal-2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Optimal2 {
    pub map: TeacherMap,
    /// Exact maximum number of concepts any matching can cover.
    pub concepts_covered: usize,
    /// Representations covered by `map`; a lower bound on the optimum.
    pub reps_covered: usize,
}

impl Optimal2 {
    /// `reps_covered` is only ever a lower bound.
    pub const REPS_LOWER_BOUND: bool = true;
}

/// Optimal-2: a maximum matching between concepts and witnesses fixes the
/// number of concepts covered; each matched concept is then instantiated by
/// its earliest representation consistent with the matched witness, and the
/// map is greedily extended over the remaining representations and
/// witnesses.
pub fn optimal2(g: &OrderedConsistencyGraph, p: &ConceptPartition) -> Optimal2 {
    let dense = p.dense_labels();
    let mut concept_adj: Vec<Vec<u32>> = vec![Vec::new(); p.num_classes()];
    for w in 0..g.num_wits() as u32 {
        for &r in g.consistent_reps(w) {
            let adj = &mut concept_adj[dense[r as usize] as usize];
            if adj.last() != Some(&w) {
                adj.push(w);
            }
        }
    }
    let m = max_matching(&concept_adj, g.num_wits());
    let concepts_covered = m.size();

    let mut map = TeacherMap::new(g.num_reps());
    let mut used = vec![false; g.num_wits()];
    for (c, w) in m.pairs() {
        let r = g
            .consistent_reps(w)
            .iter()
            .copied()
            .find(|&r| dense[r as usize] == c)
            .expect("matched concept has a consistent representation");
        map.assign(r, w);
        used[w as usize] = true;
    }
    for w in 0..g.num_wits() as u32 {
        if used[w as usize] {
            continue;
        }
        if let Some(&r) = g.consistent_reps(w).iter().find(|&&r| !map.is_assigned(r)) {
            map.assign(r, w);
            used[w as usize] = true;
        }
    }
    let reps_covered = map.len();
    Optimal2 {
        map,
        concepts_covered,
        reps_covered,
    }
}

/// Number of distinct concepts among the taught representations.
pub fn concepts_taught(map: &TeacherMap, p: &ConceptPartition) -> usize {
    let mut seen: Vec<u32> = map.pairs().map(|(r, _)| p.class_of(r)).collect();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::figure1_graph;
    use crate::graph::{twin_classes, Vertex};

    fn pairs(m: &TeacherMap) -> Vec<(u32, u32)> {
        m.pairs().collect()
    }

    fn graph(num_reps: usize, adjacency: Vec<Vec<u32>>) -> OrderedConsistencyGraph {
        let wits = (0..adjacency.len()).map(|i| Vertex::new(i as u32, "")).collect();
        let reps = (0..num_reps).map(|_| Vertex::new(1, "")).collect();
        OrderedConsistencyGraph::new(reps, wits, adjacency).unwrap()
    }

    #[test]
    fn figure1_eager() {
        let g = figure1_graph();
        let m = eager(&g);
        assert_eq!(pairs(&m), vec![(0, 0), (1, 5), (2, 3), (3, 4)]);
        assert_eq!(m.max_witness_size(&g), Some(6));
        let l = m.invert();
        assert_eq!(l.into_iter().collect::<Vec<_>>(), vec![(0, 0), (3, 2), (4, 3), (5, 1)]);
    }

    #[test]
    fn figure1_greedy() {
        let g = figure1_graph();
        let m = greedy_by_witness(&g);
        assert_eq!(pairs(&m), vec![(0, 0), (1, 1), (2, 3), (3, 4)]);
        assert_eq!(m.max_witness_size(&g), Some(5));
        assert_eq!(greedy_by_representation(&g), m);
    }

    #[test]
    fn figure1_optimal1() {
        let g = figure1_graph();
        let o = optimal1(&g).unwrap();
        assert_eq!(o.max_size, 4);
        assert_eq!(o.map.len(), 4);
        assert_eq!(o.map.max_witness_size(&g), Some(4));
        o.map.validate(&g).unwrap();
    }

    #[test]
    fn one_rep_all_witnesses() {
        let g = graph(1, vec![vec![0]; 4]);
        assert_eq!(pairs(&eager(&g)), vec![(0, 0)]);
        assert_eq!(pairs(&greedy_by_witness(&g)), vec![(0, 0)]);
    }

    #[test]
    fn all_reps_on_first_witness_only() {
        let g = graph(3, vec![vec![0, 1, 2], vec![], vec![]]);
        assert_eq!(greedy_by_witness(&g).len(), 1);
        assert!(matches!(
            optimal1(&g),
            Err(TeachError::NoSaturatingMatching { num_reps: 3, best: 1 })
        ));
    }

    #[test]
    fn single_pair() {
        let g = graph(1, vec![vec![0]]);
        assert_eq!(pairs(&greedy_by_representation(&g)), vec![(0, 0)]);
    }

    #[test]
    fn greedy_report_lists_drops() {
        let (_, rep) = greedy_with_report(&graph(1, vec![vec![0], vec![0], vec![]]));
        assert_eq!(rep.dropped_witnesses, vec![1, 2]);
        let (_, rep) = eager_with_report(&figure1_graph());
        assert_eq!(rep.dropped_witnesses, vec![1, 2]);
    }

    #[test]
    fn optimal2_one_concept_three_reps() {
        let g = graph(3, vec![vec![0, 1, 2], vec![0, 1, 2]]);
        let p = twin_classes(&g);
        assert_eq!(p.num_classes(), 1);
        let o = optimal2(&g, &p);
        assert_eq!((o.concepts_covered, o.reps_covered), (1, 2));
        o.map.validate(&g).unwrap();
    }

    #[test]
    fn optimal2_on_figure1_covers_all() {
        let g = figure1_graph();
        let o = optimal2(&g, &twin_classes(&g));
        assert_eq!((o.concepts_covered, o.reps_covered), (4, 4));
    }

    #[test]
    fn empty_graph() {
        let g = graph(0, vec![]);
        assert!(eager(&g).is_empty());
        assert_eq!(optimal1(&g).unwrap().max_size, 0);
    }
}
