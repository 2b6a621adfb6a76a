//! Structural invariants of graphs, maps, metrics and the interpreter.

use std::collections::HashSet;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use teachrep::boolean::{build_domain, Variant, WitnessSpec};
use teachrep::constructions::random_graph;
use teachrep::graph::ConceptPartition;
use teachrep::matching::max_matching;
use teachrep::metrics::{projection_distinct_rows, BinaryMatrix};
use teachrep::p3::{enumerate_programs, Program};
use teachrep::teachers::{eager, greedy_by_witness, optimal1, optimal2, TeachError};
use teachrep::{compare_greedy_eager, concepts_taught, redundancy, redundancy_spread, twin_classes};

fn graph() -> impl Strategy<Value = teachrep::OrderedConsistencyGraph> {
    (any::<u64>(), 0usize..25, 0usize..25, 0.0f64..1.0).prop_map(|(seed, nr, nw, p)| random_graph(seed, nr, nw, p))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn restrict_by_size_composes(g in graph(), a in 0u32..30, b in 0u32..30) {
        let once = g.restrict_by_size(a.min(b));
        let twice = g.restrict_by_size(a).restrict_by_size(b);
        prop_assert_eq!(&once, &twice);
        prop_assert!(once.wits().iter().all(|w| w.size <= a.min(b)));
        prop_assert_eq!(once.num_wits(), g.witness_prefix_len(a.min(b)));
        prop_assert!(once.validate().is_ok());
    }

    #[test]
    fn twin_classes_are_exact(g in graph()) {
        let p = twin_classes(&g);
        let rows = g.rep_adjacency();
        for a in 0..g.num_reps() as u32 {
            for b in 0..g.num_reps() as u32 {
                prop_assert_eq!(p.class_of(a) == p.class_of(b), rows[a as usize] == rows[b as usize]);
            }
        }
        for (id, block) in p.blocks().iter().enumerate() {
            prop_assert!(block.windows(2).all(|w| w[0] < w[1]));
            prop_assert_eq!(p.class_of(block[0]), block[0]);
            if id > 0 {
                prop_assert!(p.blocks()[id - 1][0] < block[0]);
            }
        }
    }

    #[test]
    fn protocol_maps_are_valid(g in graph()) {
        let p = twin_classes(&g);
        let e = eager(&g);
        let gr = greedy_by_witness(&g);
        e.validate(&g).unwrap();
        gr.validate(&g).unwrap();
        prop_assert!(gr.len() >= e.len());
        // Eager teaches each concept at most once.
        prop_assert_eq!(concepts_taught(&e, &p), e.len());
        let o2 = optimal2(&g, &p);
        o2.map.validate(&g).unwrap();
        prop_assert!(o2.concepts_covered >= concepts_taught(&gr, &p));
        prop_assert_eq!(o2.concepts_covered, concepts_taught(&o2.map, &p));
        let stats = compare_greedy_eager(&g, &p, &e, &gr);
        prop_assert!(stats.pct_size_smaller <= stats.pct_index_lower);
        prop_assert!(stats.common_concepts <= e.len());
    }

    #[test]
    fn optimal1_is_tight(g in graph()) {
        match optimal1(&g) {
            Ok(o) => {
                o.map.validate(&g).unwrap();
                prop_assert_eq!(o.map.len(), g.num_reps());
                prop_assert!(o.map.max_witness_size(&g).unwrap_or(0) <= o.max_size);
                let below: Vec<u32> = g.distinct_witness_sizes().into_iter().filter(|&s| s < o.max_size).collect();
                if let Some(&prev) = below.last() {
                    let h = g.restrict_by_size(prev);
                    let m = max_matching(&h.rep_adjacency(), h.num_wits());
                    prop_assert!(!m.saturates_left());
                }
            }
            Err(TeachError::NoSaturatingMatching { num_reps, best }) => {
                prop_assert!(best < num_reps);
                prop_assert_eq!(max_matching(&g.rep_adjacency(), g.num_wits()).size(), best);
            }
        }
    }

    #[test]
    fn spread_bounds(g in graph()) {
        let p = twin_classes(&g);
        if g.num_wits() > 0 && g.num_reps() > 0 {
            let s = redundancy_spread(&g, &p).unwrap();
            prop_assert!(s <= p.num_classes() as f64);
            let capped: f64 = (0..g.num_wits())
                .map(|w| g.consistent_reps(w as u32).len().min(w + 1) as f64)
                .sum::<f64>() / g.num_wits() as f64;
            prop_assert!(s <= capped + 1e-12);
        }
    }

    /// The spec states redundancy never decreases when two blocks merge.
    /// That fails in general (see `merging_large_blocks_can_lower_redundancy`);
    /// it holds whenever one of the merged blocks is a singleton.
    #[test]
    fn redundancy_grows_when_a_singleton_merges(keys in prop::collection::vec(0u8..8, 1..40), target in 0u8..8) {
        let p = ConceptPartition::from_keys(keys.iter().copied());
        prop_assert_eq!(redundancy(&p).unwrap() == 0.0, p.blocks().iter().all(|b| b.len() == 1));
        if let Some(single) = p.blocks().iter().find(|b| b.len() == 1) {
            let lone = keys[single[0] as usize];
            prop_assume!(lone != target && keys.contains(&target));
            let merged = ConceptPartition::from_keys(keys.iter().map(|&k| if k == lone { target } else { k }));
            prop_assert!(redundancy(&merged).unwrap() >= redundancy(&p).unwrap() - 1e-12);
        }
    }

    #[test]
    fn projection_invariant_under_permutations(
        rows in prop::collection::btree_set(0u32..64, 1..10),
        q in 0usize..=6,
        perm_seed in any::<u64>(),
    ) {
        let rows: Vec<u32> = rows.into_iter().collect();
        let m = BinaryMatrix::new(6, rows.clone());
        let mut rng = ChaCha8Rng::seed_from_u64(perm_seed);
        let mut cols: Vec<usize> = (0..6).collect();
        for i in (1..6).rev() {
            cols.swap(i, rng.gen_range(0..=i));
        }
        let mut permuted: Vec<u32> = rows
            .iter()
            .map(|&r| (0..6).fold(0u32, |acc, c| acc | ((r >> cols[c]) & 1) << c))
            .collect();
        permuted.reverse();
        prop_assert_eq!(
            projection_distinct_rows(&m, q),
            projection_distinct_rows(&BinaryMatrix::new(6, permuted), q)
        );
    }
}

#[test]
fn merging_large_blocks_can_lower_redundancy() {
    let before = ConceptPartition::from_keys([3, 3, 0, 0, 1, 0, 2]);
    let after = ConceptPartition::from_keys([0, 0, 0, 0, 1, 0, 2]);
    let (r0, r1) = (redundancy(&before).unwrap(), redundancy(&after).unwrap());
    assert!((r0 - (1.0 - (0.5 + 1.0 / 3.0 + 2.0) / 4.0)).abs() < 1e-12);
    assert!((r1 - (1.0 - 2.2 / 3.0)).abs() < 1e-12);
    assert!(r1 < r0);
}

#[test]
fn semantic_partition_refines_twins() {
    for (v, s) in [
        (Variant::Full3Dnf, WitnessSpec::MaxCard(5)),
        (Variant::ThreeTerm, WitnessSpec::MaxCard(5)),
        (Variant::ThreeTerm, WitnessSpec::ExactCard(2)),
        (Variant::ThreeTermPerm, WitnessSpec::ExactCard(5)),
    ] {
        let d = build_domain(v, s);
        let sem = d.semantic_partition();
        let twins = twin_classes(&d.graph);
        for b in sem.blocks() {
            assert!(b.iter().all(|&r| twins.class_of(r) == twins.class_of(b[0])));
        }
        if s == WitnessSpec::MaxCard(5) {
            assert_eq!(sem, twins, "{v:?}");
        }
    }
}

/// Random balanced programs drawn from the first few thousand in order,
/// plus random bit-string inputs.
fn samples(n: usize) -> Vec<(Program, String)> {
    let programs = enumerate_programs(20_000);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    (0..n)
        .map(|_| {
            let p = programs[rng.gen_range(0..programs.len())].clone();
            let len = rng.gen_range(0..8);
            let x: String = (0..len).map(|_| if rng.gen_bool(0.5) { '1' } else { '0' }).collect();
            (p, x)
        })
        .collect()
}

#[test]
fn interpreter_is_deterministic() {
    for (p, x) in samples(1000) {
        assert_eq!(p.run(&x, 300), p.run(&x, 300), "{p} on {x:?}");
    }
}

#[test]
fn halting_is_monotone_in_the_step_limit() {
    let mut halted = 0;
    for (p, x) in samples(1000) {
        let short = p.run(&x, 60);
        let long = p.run(&x, 400);
        assert!(short.steps <= 60 && long.steps <= 400);
        if short.halted {
            halted += 1;
            assert_eq!(short, long, "{p} on {x:?}");
        } else {
            // output only grows
            assert!(long.output.starts_with(&short.output), "{p} on {x:?}");
        }
    }
    assert!(halted > 100);
}

#[test]
fn programs_are_unique_and_balanced() {
    let ps = enumerate_programs(5000);
    let set: HashSet<&str> = ps.iter().map(|p| p.as_str()).collect();
    assert_eq!(set.len(), ps.len());
    assert!(ps.iter().all(|p| p.as_str().parse::<Program>().is_ok()));
}
