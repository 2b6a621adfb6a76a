//! Text formats for graphs, teacher maps and partitions.
//!
//! ```text
//! OCG v1 <numReps> <numWits>
//! R <index> <size> <payload>      one per representation
//! W <index> <size> <payload>      one per witness
//! E <witIndex> <r1> <r2> ...      one per witness, ascending reps
//!
//! TMAP v1 <count>
//! T <repIndex> <witIndex>         ascending repIndex
//!
//! PART v1 <numReps> <numBlocks>
//! B <r1> <r2> ...                 ascending, blocks by smallest member
//! ```

use std::fmt::Write as _;
use std::io;

use crate::graph::{ConceptPartition, GraphParts, OrderedConsistencyGraph, Vertex};
use crate::map::TeacherMap;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError {
        line,
        message: message.into(),
    }
}

pub fn write_graph(g: &OrderedConsistencyGraph) -> String {
    let mut out = Vec::with_capacity(16 * (g.num_reps() + g.num_wits()) + 8 * g.num_edges());
    write_graph_to(g, &mut out).expect("writing to memory");
    String::from_utf8(out).expect("payloads are UTF-8")
}

/// Streams the `OCG v1` text of `g` into `out`, for graphs too large to
/// render into one string.
pub fn write_graph_to(g: &OrderedConsistencyGraph, out: &mut impl io::Write) -> io::Result<()> {
    writeln!(out, "OCG v1 {} {}", g.num_reps(), g.num_wits())?;
    let mut vertex = |tag: char, i: usize, v: &Vertex| {
        if v.payload.is_empty() {
            writeln!(out, "{tag} {i} {}", v.size)
        } else {
            writeln!(out, "{tag} {i} {} {}", v.size, v.payload)
        }
    };
    for (i, v) in g.reps().iter().enumerate() {
        vertex('R', i, v)?;
    }
    for (i, v) in g.wits().iter().enumerate() {
        vertex('W', i, v)?;
    }
    for (w, row) in g.adjacency().iter().enumerate() {
        write!(out, "E {w}")?;
        for r in row {
            write!(out, " {r}")?;
        }
        out.write_all(b"\n")?;
    }
    Ok(())
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            inner: text.lines().enumerate(),
            last: 0,
        }
    }

    fn next(&mut self) -> Result<(usize, &'a str), FormatError> {
        match self.inner.next() {
            Some((i, l)) => {
                self.last = i + 1;
                Ok((i + 1, l))
            }
            None => Err(err(self.last + 1, "unexpected end of input")),
        }
    }

    fn finish(mut self) -> Result<(), FormatError> {
        match self.inner.find(|(_, l)| !l.trim().is_empty()) {
            Some((i, _)) => Err(err(i + 1, "trailing content")),
            None => Ok(()),
        }
    }
}

fn num<T: std::str::FromStr>(line: usize, tok: Option<&str>, what: &str) -> Result<T, FormatError> {
    tok.ok_or_else(|| err(line, format!("missing {what}")))?
        .parse()
        .map_err(|_| err(line, format!("bad {what}")))
}

fn header<'a>(line: usize, text: &'a str, magic: &str) -> Result<std::str::SplitAsciiWhitespace<'a>, FormatError> {
    let mut toks = text.split_ascii_whitespace();
    if toks.next() != Some(magic) || toks.next() != Some("v1") {
        return Err(err(line, format!("expected `{magic} v1` header")));
    }
    Ok(toks)
}

fn parse_vertex(line: usize, text: &str, tag: &str, expected: usize) -> Result<Vertex, FormatError> {
    let mut parts = text.splitn(4, ' ');
    if parts.next() != Some(tag) {
        return Err(err(line, format!("expected `{tag}` line")));
    }
    let index: usize = num(line, parts.next(), "index")?;
    if index != expected {
        return Err(err(line, format!("index {index}, expected {expected}")));
    }
    let size = num(line, parts.next(), "size")?;
    let payload = parts.next().unwrap_or("").to_string();
    Ok(Vertex { size, payload })
}

/// Parses and validates an `OCG v1` graph.
pub fn parse_graph(text: &str) -> Result<OrderedConsistencyGraph, FormatError> {
    let mut lines = Lines::new(text);
    let (ln, head) = lines.next()?;
    let mut toks = header(ln, head, "OCG")?;
    let num_reps: usize = num(ln, toks.next(), "representation count")?;
    let num_wits: usize = num(ln, toks.next(), "witness count")?;
    let mut parts = GraphParts::default();
    for i in 0..num_reps {
        let (ln, l) = lines.next()?;
        parts.reps.push(parse_vertex(ln, l, "R", i)?);
    }
    for i in 0..num_wits {
        let (ln, l) = lines.next()?;
        parts.wits.push(parse_vertex(ln, l, "W", i)?);
    }
    for w in 0..num_wits {
        let (ln, l) = lines.next()?;
        let mut toks = l.split_ascii_whitespace();
        if toks.next() != Some("E") {
            return Err(err(ln, "expected `E` line"));
        }
        let index: usize = num(ln, toks.next(), "witness index")?;
        if index != w {
            return Err(err(ln, format!("witness index {index}, expected {w}")));
        }
        let row = toks
            .map(|t| t.parse::<u32>().map_err(|_| err(ln, "bad representation index")))
            .collect::<Result<Vec<_>, _>>()?;
        parts.adjacency.push(row);
    }
    lines.finish()?;
    OrderedConsistencyGraph::try_from(parts).map_err(|v| err(0, v.to_string()))
}

pub fn write_teacher_map(map: &TeacherMap) -> String {
    let mut out = format!("TMAP v1 {}\n", map.len());
    for (r, w) in map.pairs() {
        writeln!(out, "T {r} {w}").unwrap();
    }
    out
}

/// Parses a teacher map over `num_reps` representations.
pub fn parse_teacher_map(text: &str, num_reps: usize) -> Result<TeacherMap, FormatError> {
    let mut lines = Lines::new(text);
    let (ln, head) = lines.next()?;
    let count: usize = num(ln, header(ln, head, "TMAP")?.next(), "pair count")?;
    let mut map = TeacherMap::new(num_reps);
    let mut prev: Option<u32> = None;
    for _ in 0..count {
        let (ln, l) = lines.next()?;
        let mut toks = l.split_ascii_whitespace();
        if toks.next() != Some("T") {
            return Err(err(ln, "expected `T` line"));
        }
        let r: u32 = num(ln, toks.next(), "representation index")?;
        let w: u32 = num(ln, toks.next(), "witness index")?;
        if prev.is_some_and(|p| p >= r) {
            return Err(err(ln, "pairs not sorted by representation"));
        }
        if r as usize >= num_reps {
            return Err(err(ln, "representation index out of range"));
        }
        prev = Some(r);
        map.assign(r, w);
    }
    lines.finish()?;
    map.check_injective().map_err(|e| err(0, e.to_string()))?;
    Ok(map)
}

pub fn write_partition(p: &ConceptPartition) -> String {
    let mut out = format!("PART v1 {} {}\n", p.num_reps(), p.num_classes());
    for b in p.blocks() {
        out.push('B');
        for r in b {
            write!(out, " {r}").unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn parse_partition(text: &str) -> Result<ConceptPartition, FormatError> {
    let mut lines = Lines::new(text);
    let (ln, head) = lines.next()?;
    let mut toks = header(ln, head, "PART")?;
    let num_reps: usize = num(ln, toks.next(), "representation count")?;
    let num_blocks: usize = num(ln, toks.next(), "block count")?;
    let mut blocks = Vec::with_capacity(num_blocks);
    for _ in 0..num_blocks {
        let (ln, l) = lines.next()?;
        let mut toks = l.split_ascii_whitespace();
        if toks.next() != Some("B") {
            return Err(err(ln, "expected `B` line"));
        }
        blocks.push(
            toks.map(|t| t.parse::<u32>().map_err(|_| err(ln, "bad representation index")))
                .collect::<Result<Vec<_>, _>>()?,
        );
    }
    lines.finish()?;
    ConceptPartition::from_blocks(num_reps, blocks).map_err(|e| err(0, e.to_string()))
}
