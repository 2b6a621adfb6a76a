//! Runs the small-P3 pipeline and prints its Tables 1–3 rows.
use teachrep::experiments::{summarize, ProtocolSet};
use teachrep::p3::{small_p3_pipeline, PipelineConfig};
use teachrep::twin_classes;

fn main() {
    let mut cfg = PipelineConfig::default();
    if let Some(cap) = std::env::args().nth(1) {
        cfg.program_cap = cap.parse().unwrap();
    }
    let t = std::time::Instant::now();
    let (g, report) = small_p3_pipeline(cfg);
    println!("{report:?} in {:.1}s", t.elapsed().as_secs_f64());
    let p = twin_classes(&g);
    let s = summarize(
        "small-p3",
        "bits4",
        &g,
        &p,
        ProtocolSet {
            optimal1: false,
            optimal2: true,
        },
    );
    println!(
        "red {:.3} spread {:.3} T3 {}/{} of {}",
        s.redundancy,
        s.redundancy_spread,
        s.comparison.index_lower,
        s.comparison.size_smaller,
        s.comparison.common_concepts
    );
    for p in &s.protocols {
        println!(
            "   {:9} reps {:6} concepts {:4} maxsize {:?} maxidx {:?}",
            p.algorithm, p.reps_taught, p.concepts_taught, p.max_witness_size, p.max_witness_index
        );
    }
}
