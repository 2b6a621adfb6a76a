//! The projection-count oracle checked against a naive brute force that
//! enumerates every row set (no symmetry reduction) and projects rows as
//! strings.

use std::collections::HashSet;

use teachrep::metrics::{conjecture_search, projection_distinct_rows, BinaryMatrix, MetricsError};

fn naive_projection(rows: &[String], q: usize) -> u64 {
    let n = rows.first().map_or(0, |r| r.len());
    let mut total = 0;
    for cols in 0u32..1 << n {
        if cols.count_ones() as usize != q {
            continue;
        }
        let distinct: HashSet<String> = rows
            .iter()
            .map(|r| {
                r.chars()
                    .enumerate()
                    .filter(|(i, _)| cols >> i & 1 == 1)
                    .map(|(_, c)| c)
                    .collect()
            })
            .collect();
        total += distinct.len() as u64;
    }
    total
}

/// (best value, binary-count value) over all k-subsets of {0,1}^n.
fn naive_search(k: usize, n: usize, q: usize) -> (u64, u64) {
    let all: Vec<String> = (0..1u32 << n).map(|v| format!("{v:0n$b}")).collect();
    let mut best = u64::MAX;
    for set in 0u64..1 << (1 << n) {
        if set.count_ones() as usize != k {
            continue;
        }
        let rows: Vec<String> = (0..all.len())
            .filter(|i| set >> i & 1 == 1)
            .map(|i| all[i].clone())
            .collect();
        best = best.min(naive_projection(&rows, q));
    }
    let binary: Vec<String> = all[..k].to_vec();
    (best, naive_projection(&binary, q))
}

#[test]
fn spec_examples() {
    let m = BinaryMatrix::from_bit_strings(&["00", "01", "10", "11"]);
    assert_eq!(projection_distinct_rows(&m, 1), 4);
    assert_eq!(projection_distinct_rows(&m, 0), 1);
    assert_eq!(projection_distinct_rows(&m, 2), 4);
    let v = conjecture_search(2, 2, 1).unwrap();
    assert!(v.binary_count_is_optimal);
    let v = conjecture_search(4, 2, 1).unwrap();
    assert_eq!(v.subsets_examined, 1);
    assert!(v.binary_count_is_optimal);
}

/// Frozen by exhaustion (and re-derived here by the naive route).
#[test]
fn k4_n3_q2_fixture() {
    let v = conjecture_search(4, 3, 2).unwrap();
    assert_eq!(
        (v.best_value, v.binary_count_value, v.binary_count_is_optimal),
        (8, 8, true)
    );
    assert_eq!(naive_search(4, 3, 2), (8, 8));
    assert!(v.minimizers.contains(&vec![0, 1, 2, 3]));
}

#[test]
fn matches_naive_search_on_small_instances() {
    for n in 1..=4 {
        for k in 1..=(1usize << n).min(20 / n) {
            for q in 0..=n {
                let v = conjecture_search(k, n, q).unwrap();
                let (best, binary) = naive_search(k, n, q);
                assert_eq!(
                    (v.best_value, v.binary_count_value),
                    (best, binary),
                    "k={k} n={n} q={q}"
                );
                assert_eq!(v.binary_count_is_optimal, best == binary);
                for m in &v.minimizers {
                    assert_eq!(m.len(), k);
                    assert_eq!(projection_distinct_rows(&BinaryMatrix::new(n, m.clone()), q), best);
                }
            }
        }
    }
}

#[test]
fn guard_and_domain_errors() {
    assert_eq!(conjecture_search(3, 7, 1), Err(MetricsError::InstanceTooLarge(21)));
    assert!(matches!(
        conjecture_search(5, 2, 1),
        Err(MetricsError::InvalidInstance(_))
    ));
    assert!(matches!(
        conjecture_search(2, 2, 3),
        Err(MetricsError::InvalidInstance(_))
    ));
    assert!(matches!(
        conjecture_search(0, 2, 1),
        Err(MetricsError::InvalidInstance(_))
    ));
}
