//! Redundancy measures, the Greedy-versus-Eager comparison, and the
//! projection-count oracle for binary matrices.

use serde::Serialize;

use crate::graph::{ConceptPartition, OrderedConsistencyGraph};
use crate::map::TeacherMap;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum MetricsError {
    #[error("partition has no classes")]
    EmptyPartition,
    #[error("graph has no witnesses")]
    EmptyWitnessSet,
    #[error("instance too large for exhaustive search: k*n = {0} > 20")]
    InstanceTooLarge(usize),
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
}

/// One minus the mean, over concepts, of the reciprocal class size.
pub fn redundancy(p: &ConceptPartition) -> Result<f64, MetricsError> {
    if p.num_classes() == 0 {
        return Err(MetricsError::EmptyPartition);
    }
    let uniqueness: f64 = p.blocks().iter().map(|b| 1.0 / b.len() as f64).sum();
    Ok(1.0 - uniqueness / p.num_classes() as f64)
}

/// Mean, over witnesses `w_i` (1-based `i`), of the number of distinct
/// concepts among the first `i` representations consistent with `w_i`.
/// Witnesses with fewer than `i` consistent representations contribute all
/// of them.
pub fn redundancy_spread(g: &OrderedConsistencyGraph, p: &ConceptPartition) -> Result<f64, MetricsError> {
    if g.num_wits() == 0 {
        return Err(MetricsError::EmptyWitnessSet);
    }
    let dense = p.dense_labels();
    let mut stamp = vec![u32::MAX; p.num_classes()];
    let mut total = 0u64;
    for w in 0..g.num_wits() {
        let prefix = g.consistent_reps(w as u32);
        let prefix = &prefix[..prefix.len().min(w + 1)];
        for &r in prefix {
            let c = dense[r as usize] as usize;
            if stamp[c] != w as u32 {
                stamp[c] = w as u32;
                total += 1;
            }
        }
    }
    Ok(total as f64 / g.num_wits() as f64)
}

/// How often Greedy teaches a concept with an earlier or smaller witness
/// than Eager does.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ComparisonStats {
    pub common_concepts: usize,
    pub index_lower: usize,
    pub size_smaller: usize,
    pub pct_index_lower: f64,
    pub pct_size_smaller: f64,
}

/// Compares, for every concept Eager teaches, Eager's witness against the
/// witness Greedy assigns to the same representation.
pub fn compare_greedy_eager(
    g: &OrderedConsistencyGraph,
    p: &ConceptPartition,
    eager_map: &TeacherMap,
    greedy_map: &TeacherMap,
) -> ComparisonStats {
    let mut seen = std::collections::HashSet::new();
    let (mut common, mut index_lower, mut size_smaller) = (0usize, 0usize, 0usize);
    for (r, we) in eager_map.pairs() {
        if !seen.insert(p.class_of(r)) {
            continue;
        }
        let Some(wg) = greedy_map.witness_of(r) else {
            continue;
        };
        common += 1;
        if wg < we {
            index_lower += 1;
        }
        if g.wit(wg).size < g.wit(we).size {
            size_smaller += 1;
        }
    }
    let frac = |n: usize| if common == 0 { 0.0 } else { n as f64 / common as f64 };
    ComparisonStats {
        common_concepts: common,
        index_lower,
        size_smaller,
        pct_index_lower: frac(index_lower),
        pct_size_smaller: frac(size_smaller),
    }
}

/// Binary matrix with `width` columns; row `i` is the low `width` bits of
/// `rows[i]`, column 0 being the most significant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryMatrix {
    pub width: usize,
    pub rows: Vec<u32>,
}

impl BinaryMatrix {
    pub fn new(width: usize, rows: Vec<u32>) -> Self {
        assert!(width <= 31, "at most 31 columns");
        BinaryMatrix { width, rows }
    }

    /// Rows `0, 1, …, k-1` written in binary over `width` columns.
    pub fn binary_count(k: usize, width: usize) -> Self {
        BinaryMatrix::new(width, (0..k as u32).collect())
    }

    pub fn from_bit_strings(rows: &[&str]) -> Self {
        let width = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| u32::from_str_radix(r, 2).expect("binary row"))
            .collect();
        BinaryMatrix::new(width, rows)
    }
}

/// Every `q`-subset of `width` columns, as bit masks, in ascending order.
fn column_subsets(width: usize, q: usize) -> Vec<u32> {
    (0u32..1 << width).filter(|m| m.count_ones() as usize == q).collect()
}

fn projection_sum(rows: &[u32], masks: &[u32], scratch: &mut Vec<u32>) -> u64 {
    let mut total = 0u64;
    for &mask in masks {
        scratch.clear();
        scratch.extend(rows.iter().map(|r| r & mask));
        scratch.sort_unstable();
        scratch.dedup();
        total += scratch.len() as u64;
    }
    total
}

/// Sum, over all `q`-subsets of columns, of the number of distinct rows of
/// the projection onto those columns.
pub fn projection_distinct_rows(m: &BinaryMatrix, q: usize) -> u64 {
    if q > m.width {
        return 0;
    }
    projection_sum(&m.rows, &column_subsets(m.width, q), &mut Vec::new())
}

/// Outcome of an exhaustive search for the row set minimising
/// [`projection_distinct_rows`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ConjectureVerdict {
    pub k: usize,
    pub n: usize,
    pub q: usize,
    pub best_value: u64,
    pub binary_count_value: u64,
    pub binary_count_is_optimal: bool,
    /// Minimising row sets that contain the all-zero row, rows ascending.
    pub minimizers: Vec<Vec<u32>>,
    pub subsets_examined: u64,
}

/// Exhaustive minimum of the projection count over all sets of `k` distinct
/// rows of width `n`.
///
/// XOR-ing every row with a fixed vector permutes the values inside each
/// column, which leaves every projection count unchanged, so only row sets
/// containing the zero row need to be examined. Guarded by `k * n <= 20`.
pub fn conjecture_search(k: usize, n: usize, q: usize) -> Result<ConjectureVerdict, MetricsError> {
    if k * n > 20 {
        return Err(MetricsError::InstanceTooLarge(k * n));
    }
    if q > n || k == 0 || (n < usize::BITS as usize && k > 1usize << n) {
        return Err(MetricsError::InvalidInstance(format!(
            "need 1 <= k <= 2^n and q <= n (k={k}, n={n}, q={q})"
        )));
    }
    let masks = column_subsets(n, q);
    let universe = 1u32 << n;
    let mut scratch = Vec::new();
    let mut rows = vec![0u32; k];
    let mut best = u64::MAX;
    let mut minimizers = Vec::new();
    let mut examined = 0u64;
    // rows[0] = 0; rows[1..] range over increasing (k-1)-subsets of 1..universe
    let rest = k - 1;
    let mut idx: Vec<u32> = (1..=rest as u32).collect();
    loop {
        rows[1..].copy_from_slice(&idx);
        examined += 1;
        let v = projection_sum(&rows, &masks, &mut scratch);
        match v.cmp(&best) {
            std::cmp::Ordering::Less => {
                best = v;
                minimizers.clear();
                minimizers.push(rows.clone());
            }
            std::cmp::Ordering::Equal => minimizers.push(rows.clone()),
            std::cmp::Ordering::Greater => {}
        }
        if !next_combination(&mut idx, universe) {
            break;
        }
    }
    let binary_count_value = projection_sum(&(0..k as u32).collect::<Vec<_>>(), &masks, &mut scratch);
    Ok(ConjectureVerdict {
        k,
        n,
        q,
        best_value: best,
        binary_count_value,
        binary_count_is_optimal: binary_count_value == best,
        minimizers,
        subsets_examined: examined,
    })
}

/// Advances an ascending combination drawn from `1..end`.
fn next_combination(idx: &mut [u32], end: u32) -> bool {
    let len = idx.len();
    for i in (0..len).rev() {
        let max_here = end - (len - i) as u32;
        if idx[i] < max_here {
            idx[i] += 1;
            for j in i + 1..len {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{twin_classes, Vertex};

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-12
    }

    #[test]
    fn redundancy_of_singletons_is_zero() {
        let p = ConceptPartition::from_keys(0..5);
        assert_eq!(redundancy(&p), Ok(0.0));
    }

    #[test]
    fn redundancy_two_one() {
        let p = ConceptPartition::from_keys([0, 0, 1]);
        assert!(close(redundancy(&p).unwrap(), 0.25));
    }

    #[test]
    fn redundancy_empty() {
        let p = ConceptPartition::from_keys(std::iter::empty::<u8>());
        assert_eq!(redundancy(&p), Err(MetricsError::EmptyPartition));
    }

    #[test]
    fn spread_single_witness() {
        let reps = vec![Vertex::new(1, ""); 3];
        let g = OrderedConsistencyGraph::new(reps.clone(), vec![Vertex::new(1, "")], vec![vec![1, 2]]).unwrap();
        assert_eq!(redundancy_spread(&g, &twin_classes(&g)), Ok(1.0));
        let g = OrderedConsistencyGraph::new(reps, vec![Vertex::new(1, "")], vec![vec![]]).unwrap();
        assert_eq!(redundancy_spread(&g, &twin_classes(&g)), Ok(0.0));
    }

    #[test]
    fn spread_counts_prefixes() {
        // w1 sees first 1 rep, w2 first 2, w3 first 3 (only 2 exist there)
        let reps = vec![Vertex::new(1, ""); 4];
        let wits = vec![Vertex::new(1, ""); 3];
        let g = OrderedConsistencyGraph::new(reps, wits, vec![vec![0, 1, 2], vec![0, 1, 3], vec![2, 3]]).unwrap();
        let p = ConceptPartition::from_keys([0, 0, 1, 2]);
        // 1 + |{0}| (reps 0,1 same class) + |{1,2}| = 1 + 1 + 2
        assert!(close(redundancy_spread(&g, &p).unwrap(), 4.0 / 3.0));
    }

    #[test]
    fn spread_needs_witnesses() {
        let g = OrderedConsistencyGraph::new(vec![], vec![], vec![]).unwrap();
        assert_eq!(
            redundancy_spread(&g, &twin_classes(&g)),
            Err(MetricsError::EmptyWitnessSet)
        );
    }

    #[test]
    fn identical_maps_compare_to_zero() {
        let g = crate::constructions::figure1_graph();
        let m = crate::teachers::eager(&g);
        let s = compare_greedy_eager(&g, &twin_classes(&g), &m, &m);
        assert_eq!(s.common_concepts, 4);
        assert_eq!((s.pct_index_lower, s.pct_size_smaller), (0.0, 0.0));
    }

    #[test]
    fn figure1_greedy_beats_eager_once() {
        let g = crate::constructions::figure1_graph();
        let e = crate::teachers::eager(&g);
        let gr = crate::teachers::greedy_by_witness(&g);
        let s = compare_greedy_eager(&g, &twin_classes(&g), &e, &gr);
        // c2: w2 instead of w6
        assert_eq!((s.index_lower, s.size_smaller), (1, 1));
        assert!(close(s.pct_index_lower, 0.25));
    }

    #[test]
    fn projection_examples() {
        let m = BinaryMatrix::from_bit_strings(&["00", "01", "10", "11"]);
        assert_eq!(projection_distinct_rows(&m, 1), 4);
        assert_eq!(projection_distinct_rows(&m, 0), 1);
        assert_eq!(projection_distinct_rows(&m, 2), 4);
        let m = BinaryMatrix::from_bit_strings(&["0110", "1011", "0001"]);
        assert_eq!(projection_distinct_rows(&m, 0), 1);
        assert_eq!(projection_distinct_rows(&m, 4), 3);
    }

    #[test]
    fn combinations_enumerated() {
        let mut idx = vec![1, 2];
        let mut all = vec![idx.clone()];
        while next_combination(&mut idx, 5) {
            all.push(idx.clone());
        }
        assert_eq!(all.len(), 6);
        assert_eq!(all.last().unwrap(), &vec![3, 4]);
    }

    #[test]
    fn search_guards() {
        assert_eq!(
            conjecture_search(5, 5, 2).unwrap_err(),
            MetricsError::InstanceTooLarge(25)
        );
        assert!(conjecture_search(5, 2, 1).is_err());
        assert!(conjecture_search(2, 2, 3).is_err());
    }

    #[test]
    fn full_row_set_is_trivially_optimal() {
        let v = conjecture_search(4, 2, 1).unwrap();
        assert_eq!(v.subsets_examined, 1);
        assert!(v.binary_count_is_optimal);
        assert_eq!(v.best_value, 4);
    }
}
