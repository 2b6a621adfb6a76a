//! Graph sources named on the command line: DNF domains, the small-P3
//! pipeline, and the hand-built fixtures.

use teachrep::boolean::{build_domain_with, Variant, WitnessSpec, WitnessTieBreak};
use teachrep::constructions::{figure1_graph, random_graph, random_singleton_graph, separation_instance};
use teachrep::graph::{twin_classes, ConceptPartition, OrderedConsistencyGraph};
use teachrep::p3::{small_p3_pipeline, PipelineConfig, PipelineReport, DEFAULT_MAX_BITS};

use crate::error::{usage, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum Fixture {
    Figure1,
    Separation { s: usize, t: usize, k: usize },
    Random { reps: usize, wits: usize, p: f64 },
    RandomSingleton { reps: usize, wits: usize, p: f64 },
}

#[derive(Clone, Debug, PartialEq)]
pub enum Source {
    Boolean(Variant, WitnessSpec),
    SmallP3 { max_bits: u32 },
    Fixture(Fixture),
}

fn field<T: std::str::FromStr>(text: &str, what: &str, domain: &str) -> Result<T> {
    text.parse()
        .map_err(|_| usage(format!("bad {what} `{text}` in `{domain}`")))
}

fn parse_fixture(domain: &str, rest: &str) -> Result<Fixture> {
    let parts: Vec<&str> = rest.split(':').collect();
    let random = |parts: &[&str]| -> Result<(usize, usize, f64)> {
        match parts {
            [r, w, p] => Ok((
                field(r, "rep count", domain)?,
                field(w, "witness count", domain)?,
                field(p, "edge probability", domain)?,
            )),
            _ => Err(usage(format!("`{domain}`: expected <reps>:<wits>:<p>"))),
        }
    };
    match parts[0] {
        "figure1" if parts.len() == 1 => Ok(Fixture::Figure1),
        "separation" => match &parts[1..] {
            [s, t, k] => Ok(Fixture::Separation {
                s: field(s, "s", domain)?,
                t: field(t, "t", domain)?,
                k: field(k, "k", domain)?,
            }),
            _ => Err(usage(format!("`{domain}`: expected separation:<s>:<t>:<k>"))),
        },
        "random" => random(&parts[1..]).map(|(reps, wits, p)| Fixture::Random { reps, wits, p }),
        "random-singleton" => random(&parts[1..]).map(|(reps, wits, p)| Fixture::RandomSingleton { reps, wits, p }),
        _ => Err(usage(format!(
            "unknown fixture `{domain}` (figure1, separation:s:t:k, random:R:W:p, random-singleton:R:W:p)"
        ))),
    }
}

/// Parses `domain` and the optional witness spec.
pub fn parse_source(domain: &str, spec: Option<&str>) -> Result<Source> {
    if let Some(rest) = domain.strip_prefix("fixture:") {
        if spec.is_some() {
            return Err(usage("fixtures take no witness spec"));
        }
        return parse_fixture(domain, rest).map(Source::Fixture);
    }
    if domain == "small-p3" {
        let max_bits = match spec {
            None => DEFAULT_MAX_BITS,
            Some(s) => s
                .strip_prefix("bits")
                .and_then(|n| n.parse().ok())
                .ok_or_else(|| usage(format!("small-p3 takes a bits<N> witness spec, not `{s}`")))?,
        };
        return Ok(Source::SmallP3 { max_bits });
    }
    let variant: Variant = domain.parse().map_err(|e: String| {
        usage(format!(
            "{e}; domains: 3dnf, 3term, 3term-perm, 3term-perm-dup, small-p3, fixture:<name>"
        ))
    })?;
    let spec = match spec {
        None => WitnessSpec::MaxCard(5),
        Some(s) => s.parse().map_err(|e: String| usage(format!("{e} (max<N> or eq<N>)")))?,
    };
    match spec {
        WitnessSpec::MaxCard(n) | WitnessSpec::ExactCard(n) if (1..=8).contains(&n) => {
            Ok(Source::Boolean(variant, spec))
        }
        _ => Err(usage("DNF witness cardinality must be between 1 and 8")),
    }
}

/// Settings that influence how a source is built.
#[derive(Clone, Copy, Debug)]
pub struct BuildOptions {
    pub seed: u64,
    pub step_limit: u64,
    pub program_cap: usize,
    pub tie: WitnessTieBreak,
}

pub struct Built {
    pub domain: String,
    pub witness_spec: String,
    pub graph: OrderedConsistencyGraph,
    /// Truth-table partition for DNF domains, twin classes otherwise.
    pub partition: ConceptPartition,
    pub pipeline: Option<PipelineReport>,
}

impl Source {
    pub fn build(&self, opts: BuildOptions) -> Result<Built> {
        let (domain, witness_spec, graph, partition, pipeline) = match self {
            Source::Boolean(v, s) => {
                let d = build_domain_with(*v, *s, opts.tie);
                let p = d.semantic_partition();
                (v.name().to_string(), s.name(), d.graph, Some(p), None)
            }
            Source::SmallP3 { max_bits } => {
                let (g, report) = small_p3_pipeline(PipelineConfig {
                    program_cap: opts.program_cap,
                    max_bits: *max_bits,
                    step_limit: opts.step_limit,
                });
                ("small-p3".to_string(), format!("bits{max_bits}"), g, None, Some(report))
            }
            Source::Fixture(f) => {
                let g = match *f {
                    Fixture::Figure1 => figure1_graph(),
                    Fixture::Separation { s, t, k } => {
                        separation_instance(s, t, k).map_err(|e| usage(e.to_string()))?
                    }
                    Fixture::Random { reps, wits, p } => random_graph(opts.seed, reps, wits, p),
                    Fixture::RandomSingleton { reps, wits, p } => random_singleton_graph(opts.seed, reps, wits, p),
                };
                let name = match f {
                    Fixture::Figure1 => "fixture:figure1".to_string(),
                    Fixture::Separation { s, t, k } => format!("fixture:separation:{s}:{t}:{k}"),
                    Fixture::Random { reps, wits, p } => format!("fixture:random:{reps}:{wits}:{p}"),
                    Fixture::RandomSingleton { reps, wits, p } => {
                        format!("fixture:random-singleton:{reps}:{wits}:{p}")
                    }
                };
                (name, "-".to_string(), g, None, None)
            }
        };
        let partition = partition.unwrap_or_else(|| twin_classes(&graph));
        Ok(Built {
            domain,
            witness_spec,
            graph,
            partition,
            pipeline,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_domains() {
        assert_eq!(
            parse_source("3term", None).unwrap(),
            Source::Boolean(Variant::ThreeTerm, WitnessSpec::MaxCard(5))
        );
        assert_eq!(
            parse_source("3term-perm", Some("eq5")).unwrap(),
            Source::Boolean(Variant::ThreeTermPerm, WitnessSpec::ExactCard(5))
        );
        assert_eq!(
            parse_source("small-p3", Some("bits3")).unwrap(),
            Source::SmallP3 { max_bits: 3 }
        );
        assert_eq!(
            parse_source("fixture:separation:1:2:3", None).unwrap(),
            Source::Fixture(Fixture::Separation { s: 1, t: 2, k: 3 })
        );
        assert_eq!(
            parse_source("fixture:random:5:6:0.5", None).unwrap(),
            Source::Fixture(Fixture::Random {
                reps: 5,
                wits: 6,
                p: 0.5
            })
        );
    }

    #[test]
    fn rejects_bad_domains() {
        for (d, s) in [
            ("4dnf", None),
            ("3dnf", Some("bits4")),
            ("3dnf", Some("max9")),
            ("small-p3", Some("max5")),
            ("fixture:figure2", None),
            ("fixture:figure1", Some("max5")),
            ("fixture:separation:1:2", None),
            ("fixture:random:a:2:0.5", None),
        ] {
            let e = parse_source(d, s).unwrap_err();
            assert_eq!(e.exit_code(), 2, "{d} {s:?}");
        }
    }
}
