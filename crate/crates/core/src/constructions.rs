//! Small hand-built graphs: the four-concept example where all protocols
//! differ, the copy construction that levels Eager and Greedy, the family
//! separating Greedy from Optimal-1, and seeded random graphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{twin_classes, OrderedConsistencyGraph, Vertex};

fn build(reps: Vec<Vertex>, wits: Vec<Vertex>, adj: Vec<Vec<u32>>) -> OrderedConsistencyGraph {
    OrderedConsistencyGraph::new(reps, wits, adj).expect("construction yields a valid graph")
}

/// Four concepts `c1..c4` and six witnesses `w1..w6`, witness `wi` of size
/// `i`. Eager needs size 6, Greedy size 5, Optimal-1 size 4.
pub fn figure1_graph() -> OrderedConsistencyGraph {
    let reps = (1..=4).map(|i| Vertex::new(i, format!("c{i}"))).collect();
    let wits = (1..=6).map(|i| Vertex::new(i, format!("w{i}"))).collect();
    // c1~{w1,w2,w3}, c2~{w2,w3,w6}, c3~{w1,w4,w6}, c4~{w2,w4,w5}
    let adj = vec![vec![0, 2], vec![0, 1, 3], vec![0, 1], vec![2, 3], vec![3], vec![1, 2]];
    build(reps, wits, adj)
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ConstructionError {
    #[error("representations {0} and {1} are twins; every concept must have one representation")]
    NotSingletonClasses(u32, u32),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

/// Number of witnesses for which each representation is the earliest
/// consistent one.
pub fn earliest_counts(g: &OrderedConsistencyGraph) -> Vec<usize> {
    let mut f = vec![0usize; g.num_reps()];
    for w in 0..g.num_wits() as u32 {
        if let Some(&r) = g.consistent_reps(w).first() {
            f[r as usize] += 1;
        }
    }
    f
}

/// Inserts `f_r - 1` copies of every representation `r` right after it,
/// where `f_r` is the number of witnesses whose earliest neighbour is `r`.
/// Fewer than `|W|` copies are added in total.
pub fn concentrate(g: &OrderedConsistencyGraph) -> Result<OrderedConsistencyGraph, ConstructionError> {
    let classes = twin_classes(g);
    if let Some(b) = classes.blocks().iter().find(|b| b.len() > 1) {
        return Err(ConstructionError::NotSingletonClasses(b[0], b[1]));
    }
    let f = earliest_counts(g);
    // first new index of every original rep
    let mut start = Vec::with_capacity(g.num_reps());
    let mut reps = Vec::new();
    for (r, v) in g.reps().iter().enumerate() {
        start.push(reps.len() as u32);
        for _ in 0..f[r].max(1) {
            reps.push(v.clone());
        }
    }
    let adj = g
        .adjacency()
        .iter()
        .map(|row| {
            row.iter()
                .flat_map(|&r| {
                    let s = start[r as usize];
                    s..s + f[r as usize].max(1) as u32
                })
                .collect()
        })
        .collect();
    Ok(build(reps, g.wits().to_vec(), adj))
}

/// Witness sizes `ceil(i / per_size)` for 1-based `i`: at most `per_size`
/// witnesses share any size.
fn bounded_sizes(count: usize, per_size: usize) -> Vec<u32> {
    (1..=count).map(|i| i.div_ceil(per_size) as u32).collect()
}

/// Greedy-vs-Optimal separation family: `k` concepts and `s*t + k`
/// witnesses, at most `s` per size. `c1 ~ {w1, w2}`, `c2 ~ {w1, w_{st+k}}`,
/// and `ci ~ {wi, …, w_{i+st}}` for `3 <= i <= k`. Greedy reaches the last
/// witness, Optimal-1 stops at `w_k`, a size gap of at least `t`.
pub fn separation_instance(s: usize, t: usize, k: usize) -> Result<OrderedConsistencyGraph, ConstructionError> {
    if s < 1 || t < 1 || k < 3 {
        return Err(ConstructionError::InvalidParameters(format!(
            "need s >= 1, t >= 1, k >= 3 (got s={s}, t={t}, k={k})"
        )));
    }
    let num_wits = s * t + k;
    let reps = (1..=k).map(|i| Vertex::new(1, format!("c{i}"))).collect();
    let wits = bounded_sizes(num_wits, s)
        .into_iter()
        .enumerate()
        .map(|(i, size)| Vertex::new(size, format!("w{}", i + 1)))
        .collect();
    // by concept, 1-based witness numbers
    let mut by_rep: Vec<Vec<usize>> = vec![vec![1, 2], vec![1, num_wits]];
    for i in 3..=k {
        by_rep.push((i..=i + s * t).collect());
    }
    let mut adj = vec![Vec::new(); num_wits];
    for (r, ws) in by_rep.iter().enumerate() {
        for &w in ws {
            adj[w - 1].push(r as u32);
        }
    }
    Ok(build(reps, wits, adj))
}

/// Seeded random graph; every rep–witness pair is an edge with probability
/// `edge_prob`. Sizes are non-decreasing with frequent ties.
pub fn random_graph(seed: u64, num_reps: usize, num_wits: usize, edge_prob: f64) -> OrderedConsistencyGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = edge_prob.clamp(0.0, 1.0);
    let sizes = |n: usize, rng: &mut ChaCha8Rng| {
        let mut s = 1u32;
        (0..n)
            .map(|_| {
                s += rng.gen_range(0..2);
                s
            })
            .collect::<Vec<_>>()
    };
    let reps = sizes(num_reps, &mut rng)
        .into_iter()
        .enumerate()
        .map(|(i, s)| Vertex::new(s, format!("r{i}")))
        .collect();
    let wits = sizes(num_wits, &mut rng)
        .into_iter()
        .enumerate()
        .map(|(i, s)| Vertex::new(s, format!("w{i}")))
        .collect();
    let adj = (0..num_wits)
        .map(|_| (0..num_reps as u32).filter(|_| rng.gen_bool(p)).collect())
        .collect();
    build(reps, wits, adj)
}

/// Random graph whose representations all have distinct neighbourhoods.
/// Twins are removed by keeping only the first member of each twin class.
pub fn random_singleton_graph(seed: u64, num_reps: usize, num_wits: usize, edge_prob: f64) -> OrderedConsistencyGraph {
    let g = random_graph(seed, num_reps, num_wits, edge_prob);
    let classes = twin_classes(&g);
    let keep: Vec<u32> = classes.blocks().iter().map(|b| b[0]).collect();
    let mut renumber = vec![u32::MAX; g.num_reps()];
    for (i, &r) in keep.iter().enumerate() {
        renumber[r as usize] = i as u32;
    }
    let reps = keep.iter().map(|&r| g.rep(r).clone()).collect();
    let adj = g
        .adjacency()
        .iter()
        .map(|row| {
            row.iter()
                .map(|&r| renumber[r as usize])
                .filter(|&r| r != u32::MAX)
                .collect()
        })
        .collect();
    build(reps, g.wits().to_vec(), adj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::teachers::{eager, greedy_by_witness, optimal1};

    #[test]
    fn figure1_max_sizes() {
        let g = figure1_graph();
        assert_eq!(eager(&g).max_witness_size(&g), Some(6));
        assert_eq!(greedy_by_witness(&g).max_witness_size(&g), Some(5));
        assert_eq!(optimal1(&g).unwrap().max_size, 4);
    }

    #[test]
    fn figure1_concentrated() {
        let g = figure1_graph();
        assert_eq!(earliest_counts(&g), vec![3, 1, 1, 1]);
        let h = concentrate(&g).unwrap();
        assert_eq!(h.num_reps(), 6);
        assert!(h.num_reps() - g.num_reps() < g.num_wits());
        assert_eq!(h.reps()[1], g.reps()[0]);
        assert_eq!(h.reps()[2], g.reps()[0]);
    }

    #[test]
    fn concentrate_without_copies() {
        // every rep earliest for exactly one witness
        let g = OrderedConsistencyGraph::new(
            vec![Vertex::new(1, "a"), Vertex::new(1, "b")],
            vec![Vertex::new(1, "x"), Vertex::new(1, "y")],
            vec![vec![0], vec![1]],
        )
        .unwrap();
        assert_eq!(concentrate(&g).unwrap(), g);
    }

    #[test]
    fn concentrate_rejects_twins() {
        let g = OrderedConsistencyGraph::new(
            vec![Vertex::new(1, "a"), Vertex::new(1, "b")],
            vec![Vertex::new(1, "x")],
            vec![vec![0, 1]],
        )
        .unwrap();
        assert_eq!(concentrate(&g), Err(ConstructionError::NotSingletonClasses(0, 1)));
    }

    #[test]
    fn minimal_separation() {
        let g = separation_instance(1, 1, 3).unwrap();
        assert_eq!((g.num_reps(), g.num_wits()), (3, 4));
        let greedy = greedy_by_witness(&g);
        assert_eq!(greedy.max_witness_index(), Some(3));
        let opt = optimal1(&g).unwrap();
        assert_eq!(opt.map.max_witness_index(), Some(2));
        let gap = greedy.max_witness_size(&g).unwrap() - opt.max_size;
        assert!(gap >= 1);
    }

    #[test]
    fn separation_rejects_small_k() {
        assert!(separation_instance(1, 1, 2).is_err());
    }

    #[test]
    fn random_graph_extremes() {
        assert_eq!(random_graph(3, 5, 6, 0.4), random_graph(3, 5, 6, 0.4));
        let full = random_graph(1, 4, 5, 1.0);
        assert!(full.adjacency().iter().all(|row| row == &[0, 1, 2, 3]));
        let none = random_graph(1, 4, 5, 0.0);
        assert_eq!(none.num_edges(), 0);
        assert!(eager(&none).is_empty());
        assert!(greedy_by_witness(&none).is_empty());
    }

    #[test]
    fn singleton_graph_has_no_twins() {
        for seed in 0..20 {
            let g = random_singleton_graph(seed, 8, 6, 0.4);
            assert!(twin_classes(&g).blocks().iter().all(|b| b.len() == 1));
        }
    }
}
