//! End-to-end runs of the `teachrep` binary, one per command example in the
//! specification, plus exit codes and determinism.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use teachrep::format::{parse_graph, parse_teacher_map};

struct Dir(tempfile::TempDir);

impl Dir {
    fn new() -> Self {
        Dir(tempfile::tempdir().unwrap())
    }

    fn path(&self, name: &str) -> PathBuf {
        self.0.path().join(name)
    }

    fn write(&self, name: &str, text: &str) -> PathBuf {
        let p = self.path(name);
        std::fs::write(&p, text).unwrap();
        p
    }
}

fn teachrep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_teachrep"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn ok(args: &[&str]) -> String {
    let out = teachrep(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let text = ok(args);
    assert_eq!(text.lines().count(), 1, "summaries are single-line JSON");
    serde_json::from_str(&text).unwrap()
}

fn code(args: &[&str]) -> i32 {
    teachrep(args).status.code().unwrap()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

/// Column `name` of the only data row of a CSV text.
fn csv_field(text: &str, name: &str) -> String {
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert!(lines.next().is_none());
    row[header.iter().position(|h| *h == name).unwrap()].to_string()
}

fn build(dir: &Dir, name: &str, args: &[&str]) -> (PathBuf, Value) {
    let out = dir.path(name);
    let mut full = vec!["build"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", s(&out)]);
    let summary = json(&full);
    (out, summary)
}

#[test]
fn figure1_build_and_teach() {
    let d = Dir::new();
    let (g, summary) = build(&d, "f1.ocg", &["fixture:figure1"]);
    assert_eq!(
        (summary["numReps"].as_u64(), summary["numWitnesses"].as_u64()),
        (Some(4), Some(6))
    );
    let graph = parse_graph(&std::fs::read_to_string(&g).unwrap()).unwrap();
    for (protocol, size, pairs) in [
        ("eager", 6, "TMAP v1 4\nT 0 0\nT 1 5\nT 2 3\nT 3 4\n"),
        ("greedy", 5, "TMAP v1 4\nT 0 0\nT 1 1\nT 2 3\nT 3 4\n"),
        ("optimal1", 4, ""),
    ] {
        let map = d.path(&format!("{protocol}.tmap"));
        let stats = json(&["teach", s(&g), protocol, "--out", s(&map)]);
        assert_eq!(stats["maxWitnessSize"], size, "{protocol}");
        assert_eq!(stats["repsTaught"], 4);
        let text = std::fs::read_to_string(&map).unwrap();
        if !pairs.is_empty() {
            assert_eq!(text, pairs);
        }
        // Emitted maps round-trip and re-validate.
        parse_teacher_map(&text, 4).unwrap().validate(&graph).unwrap();
    }
}

#[test]
fn build_dnf_domains() {
    let d = Dir::new();
    let (_, dnf) = build(&d, "3dnf.ocg", &["3dnf", "max5"]);
    assert_eq!(
        (dnf["numReps"].as_u64(), dnf["numConcepts"].as_u64()),
        (Some(256), Some(256))
    );
    let (g, term) = build(&d, "3term.ocg", &["3term", "max5"]);
    assert_eq!(
        (term["numReps"].as_u64(), term["numWitnesses"].as_u64()),
        (Some(2952), Some(3488))
    );

    let greedy = json(&["teach", s(&g), "greedy"]);
    assert_eq!(
        (greedy["repsTaught"].as_u64(), greedy["conceptsTaught"].as_u64()),
        (Some(2895), Some(246))
    );
    let o1 = json(&["teach", s(&g), "optimal1"]);
    assert_eq!(
        (o1["repsTaught"].as_u64(), o1["maxWitnessSize"].as_u64()),
        (Some(2952), Some(28))
    );
    let dnf_g = d.path("3dnf.ocg");
    let eager = json(&["teach", s(&dnf_g), "eager"]);
    assert_eq!(
        (eager["repsTaught"].as_u64(), eager["maxWitnessSize"].as_u64()),
        (Some(219), Some(30))
    );

    let m = ok(&["metrics", s(&g), "--spec", "max5"]);
    assert!(m.starts_with("domain,witness_spec,redundancy,redundancy_spread,pct_index_lower,pct_size_smaller\n"));
    let red: f64 = csv_field(&m, "redundancy").parse().unwrap();
    assert!((red - 0.727).abs() <= 0.001);
    assert_eq!(csv_field(&ok(&["metrics", s(&dnf_g)]), "redundancy"), "0.0000");

    let c = ok(&["compare", s(&g)]);
    let idx: f64 = csv_field(&c, "pct_index_lower").parse().unwrap();
    let size: f64 = csv_field(&c, "pct_size_smaller").parse().unwrap();
    assert!((idx - 0.9765).abs() <= 0.02 && (size - 0.9706).abs() <= 0.02);
}

#[test]
fn partition_file_overrides_twin_classes() {
    let d = Dir::new();
    let part = d.path("eq5.part");
    let (g, _) = build(&d, "eq5.ocg", &["3term-perm", "eq5", "--partition", s(&part)]);
    let c = ok(&["compare", s(&g), "--partition", s(&part)]);
    let idx: f64 = csv_field(&c, "pct_index_lower").parse().unwrap();
    let size: f64 = csv_field(&c, "pct_size_smaller").parse().unwrap();
    assert!((idx - 0.40).abs() <= 0.02, "{idx}");
    assert!((size - 0.30).abs() <= 0.02, "{size}");
    let o2 = json(&["teach", s(&g), "optimal2", "--partition", s(&part)]);
    assert_eq!(o2["conceptsTaught"], 246);
    assert_eq!(o2["repsLowerBound"], true);
    assert_eq!(o2["partition"], "file");

    // A partition over a different number of representations is rejected.
    let wrong = d.write("wrong.part", "PART v1 2 1\nB 0 1\n");
    assert_eq!(code(&["teach", s(&g), "greedy", "--partition", s(&wrong)]), 2);
}

#[test]
fn degenerate_graph_compares_to_zero() {
    let d = Dir::new();
    let g = d.write("one.ocg", "OCG v1 1 1\nR 0 1 r\nW 0 1 w\nE 0 0\n");
    let c = ok(&["compare", s(&g)]);
    assert_eq!(csv_field(&c, "pct_index_lower"), "0.0000");
    assert_eq!(csv_field(&c, "pct_size_smaller"), "0.0000");
}

#[test]
fn optimal1_failure_is_structured() {
    let d = Dir::new();
    let g = d.write("star.ocg", "OCG v1 2 1\nR 0 1 a\nR 1 1 b\nW 0 1 w\nE 0 0 1\n");
    let v = json(&["teach", s(&g), "optimal1"]);
    assert_eq!(v["status"], "noSaturatingMatching");
    assert_eq!((v["maxMatching"].as_u64(), v["numReps"].as_u64()), (Some(1), Some(2)));
}

#[test]
fn figure2_encoding() {
    let d = Dir::new();
    let g = d.write(
        "p3.ocg",
        "OCG v1 2 2\nR 0 0\nR 1 10 >[o>]<[<]>o\nW 0 0 >\nW 1 10 10010>00101\nE 0 0\nE 1 1\n",
    );
    let m = d.write("p3.tmap", "TMAP v1 2\nT 0 0\nT 1 1\n");
    let text = ok(&["figure2", s(&m), s(&g)]);
    // gamma(1) twice for (ε,ε); 11 instructions at 3 bits; 2*gamma(6) + 10.
    assert_eq!(text, "program_bits,witness_bits,count\n0,2,1\n33,20,1\n");

    let ten = d.write("ten.ocg", "OCG v1 1 1\nR 0 10 ++++++++++\nW 0 0 >\nE 0 0\n");
    let m1 = d.write("one.tmap", "TMAP v1 1\nT 0 0\n");
    assert!(ok(&["figure2", s(&m1), s(&ten)]).contains("\n30,2,1\n"));

    // DNF payloads are not P3.
    let f1 = d.write("f1.tmap", "TMAP v1 1\nT 0 0\n");
    let (f1g, _) = build(&d, "f1.ocg", &["fixture:figure1"]);
    assert_eq!(code(&["figure2", s(&f1), s(&f1g)]), 2);
}

#[test]
fn small_p3_greedy_figure2_export() {
    let d = Dir::new();
    let (g, summary) = build(&d, "sp3.ocg", &["small-p3", "--program-cap", "2000"]);
    assert_eq!(summary["pipeline"]["programs_in"], 2000);
    let map = d.path("g.tmap");
    let stats = json(&["teach", s(&g), "greedy", "--out", s(&map)]);
    let text = ok(&["figure2", s(&map), s(&g)]);
    let total: u64 = text
        .lines()
        .skip(1)
        .map(|l| l.rsplit(',').next().unwrap().parse::<u64>().unwrap())
        .sum();
    assert_eq!(Some(total), stats["repsTaught"].as_u64());
}

#[test]
fn conjecture_command() {
    let v = json(&["conjecture", "2", "2", "1"]);
    assert_eq!(v["binaryCountIsOptimal"], true);
    let v = json(&["conjecture", "4", "3", "2"]);
    assert_eq!(
        (v["bestValue"].as_u64(), v["binaryCountValue"].as_u64()),
        (Some(8), Some(8))
    );
    assert_eq!(code(&["conjecture", "3", "7", "1"]), 2);
}

#[test]
fn stream_command() {
    let d = Dir::new();
    let map = d.path("s.tmap");
    let v = json(&[
        "stream",
        "greedy",
        "--max-bits",
        "2",
        "--program-cap",
        "300",
        "--out",
        s(&map),
    ]);
    let report = &v["report"];
    assert_eq!(report["protocol"], "greedy");
    assert!(report["skipped"].as_array().unwrap().is_empty());
    let taught = report["repsTaught"].as_u64().unwrap() as usize;
    let abandoned = report["abandoned"].as_array().unwrap().len();
    assert_eq!(taught + abandoned, report["witnesses"].as_u64().unwrap() as usize);
    let m = parse_teacher_map(&std::fs::read_to_string(&map).unwrap(), 300).unwrap();
    assert_eq!(m.len(), taught);
}

#[test]
fn exit_codes() {
    let d = Dir::new();
    let out = d.path("x.ocg");
    assert_eq!(code(&["build", "4dnf", "--out", s(&out)]), 2);
    assert_eq!(code(&["build", "3dnf", "bits4", "--out", s(&out)]), 2);
    assert_eq!(code(&["build", "3dnf"]), 2, "missing --out");
    assert_eq!(
        code(&["build", "fixture:figure1", "--out", "/nonexistent/dir/g.ocg"]),
        3
    );
    assert_eq!(code(&["teach", s(&d.path("missing.ocg")), "eager"]), 3);
    let bad = d.write("bad.ocg", "OCG v1 1 1\nR 0 1 a\n");
    assert_eq!(code(&["teach", s(&bad), "eager"]), 2);
    assert_eq!(code(&["metrics", s(&bad)]), 2);
    assert_eq!(code(&["teach", s(&bad), "nonsense"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["--help"]), 0);
}

#[test]
fn outputs_are_deterministic_across_thread_counts() {
    let d = Dir::new();
    let a = d.path("a.ocg");
    let b = d.path("b.ocg");
    let args = |p: &Path, threads: &'static str| {
        vec![
            "build".to_string(),
            "small-p3".into(),
            "--program-cap".into(),
            "1500".into(),
            "--threads".into(),
            threads.into(),
            "--out".into(),
            s(p).to_string(),
        ]
    };
    let run = |v: Vec<String>| ok(&v.iter().map(String::as_str).collect::<Vec<_>>());
    assert_eq!(
        run(args(&a, "1")).replace(s(&a), ""),
        run(args(&b, "4")).replace(s(&b), "")
    );
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());

    let r1 = build(&d, "r1.ocg", &["fixture:random:20:30:0.3", "--seed", "7"]).0;
    let r2 = build(&d, "r2.ocg", &["fixture:random:20:30:0.3", "--seed", "7"]).0;
    let r3 = build(&d, "r3.ocg", &["fixture:random:20:30:0.3", "--seed", "8"]).0;
    assert_eq!(std::fs::read(&r1).unwrap(), std::fs::read(&r2).unwrap());
    assert_ne!(std::fs::read(&r1).unwrap(), std::fs::read(&r3).unwrap());
}

#[test]
fn tables_command() {
    let d = Dir::new();
    let out = d.path("t3.csv");
    assert!(ok(&["tables", "3", "--no-small-p3", "--out", s(&out)]).is_empty());
    let text = std::fs::read_to_string(&out).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "domain,witness_spec,common_concepts,index_lower,size_smaller,pct_index_lower,pct_size_smaller"
    );
    assert_eq!(lines.len(), 6);
    assert_eq!(lines[1], "3dnf,max5,219,208,206,0.9498,0.9406");
}
