//! Prints the boolean rows of Tables 1–3 as compact lines.
//!
//! `cargo run --release --example tables [asc|desc]` selects the witness
//! tie-break.
use teachrep::boolean::WitnessTieBreak;
use teachrep::experiments::{boolean_summary_with, BOOLEAN_ROWS};

fn main() {
    let tie: WitnessTieBreak = std::env::args()
        .nth(1)
        .map(|a| a.parse().expect("tie-break is asc or desc"))
        .unwrap_or_default();
    for (v, s) in BOOLEAN_ROWS {
        let (_, sum) = boolean_summary_with(v, s, tie);
        println!(
            "{} {} red {:.4} spread {:.3} T3 {}/{} of {} ({:.2}/{:.2})",
            sum.domain,
            sum.witness_spec,
            sum.redundancy,
            sum.redundancy_spread,
            sum.comparison.index_lower,
            sum.comparison.size_smaller,
            sum.comparison.common_concepts,
            100.0 * sum.comparison.pct_index_lower,
            100.0 * sum.comparison.pct_size_smaller
        );
        for p in &sum.protocols {
            println!(
                "   {:9} reps {:6} concepts {:4} maxsize {:?} maxidx {:?}",
                p.algorithm, p.reps_taught, p.concepts_taught, p.max_witness_size, p.max_witness_index
            );
        }
    }
}
