//! Three-variable DNF representation languages and partial truth-table
//! witnesses.
//!
//! Witnesses are sets of labelled examples `(input, label)` over the eight
//! assignments to `a, b, c`. Both labels occur; a witness never lists the
//! same input twice. A witness of `k` examples has size `4k` plus the number
//! of 1-bits in its inputs.
//!
//! Representations are ordered by size, then by number of terms, then
//! lexicographically on the symbol sequence with ranks `a < b < c < ¬ < ∨`
//! (conjunction is implicit).

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::graph::{ConceptPartition, OrderedConsistencyGraph, Vertex};

pub const NUM_VARS: usize = 3;
pub const NUM_INPUTS: usize = 1 << NUM_VARS;

const VAR_NAMES: [char; NUM_VARS] = ['a', 'b', 'c'];
const RANK_NEG: u8 = 3;
const RANK_OR: u8 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    /// 0, 1, 2 for `a`, `b`, `c`.
    pub var: u8,
    pub negated: bool,
}

impl Literal {
    pub fn new(var: u8, negated: bool) -> Self {
        Literal { var, negated }
    }

    fn eval(self, input: u8) -> bool {
        let bit = (input >> (NUM_VARS as u8 - 1 - self.var)) & 1 == 1;
        bit != self.negated
    }
}

/// Conjunction of literals over distinct variables. In the ordered-term
/// languages the literal order is significant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub literals: Vec<Literal>,
}

impl Term {
    pub fn new(literals: Vec<Literal>) -> Self {
        Term { literals }
    }

    pub fn eval(&self, input: u8) -> bool {
        self.literals.iter().all(|l| l.eval(input))
    }

    fn push_key(&self, key: &mut Vec<u8>) {
        for l in &self.literals {
            if l.negated {
                key.push(RANK_NEG);
            }
            key.push(l.var);
        }
    }

    fn key(&self) -> Vec<u8> {
        let mut k = Vec::with_capacity(6);
        self.push_key(&mut k);
        k
    }

    /// The minterm of assignment `input`.
    pub fn minterm(input: u8) -> Self {
        Term::new(
            (0..NUM_VARS as u8)
                .map(|v| Literal::new(v, (input >> (NUM_VARS as u8 - 1 - v)) & 1 == 0))
                .collect(),
        )
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.literals.iter().enumerate() {
            if i > 0 {
                f.write_str("&")?;
            }
            if l.negated {
                f.write_str("~")?;
            }
            write!(f, "{}", VAR_NAMES[l.var as usize])?;
        }
        Ok(())
    }
}

/// The four representation languages.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// One representation per Boolean function: the disjunction of its
    /// minterms.
    Full3Dnf,
    /// Up to three distinct terms, literals in `a, b, c` order.
    ThreeTerm,
    /// Up to three distinct terms, any literal order within a term.
    ThreeTermPerm,
    /// As [`Variant::ThreeTermPerm`], every representation listed twice.
    ThreeTermPermDup,
}

impl Variant {
    pub const ALL: [Variant; 4] = [
        Variant::Full3Dnf,
        Variant::ThreeTerm,
        Variant::ThreeTermPerm,
        Variant::ThreeTermPermDup,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Full3Dnf => "3dnf",
            Variant::ThreeTerm => "3term",
            Variant::ThreeTermPerm => "3term-perm",
            Variant::ThreeTermPermDup => "3term-perm-dup",
        }
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Variant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| format!("unknown DNF language `{s}`"))
    }
}

/// A disjunction of terms. No terms denotes the constant False.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DnfRep {
    pub terms: Vec<Term>,
}

impl DnfRep {
    pub fn new(terms: Vec<Term>) -> Self {
        DnfRep { terms }
    }

    pub fn falsum() -> Self {
        DnfRep { terms: Vec::new() }
    }

    pub fn eval(&self, input: u8) -> bool {
        self.terms.iter().any(|t| t.eval(input))
    }

    /// Literals, plus negations, plus disjunction symbols.
    pub fn size(&self) -> u32 {
        let lits: usize = self.terms.iter().map(|t| t.literals.len()).sum();
        let negs: usize = self
            .terms
            .iter()
            .flat_map(|t| &t.literals)
            .filter(|l| l.negated)
            .count();
        (lits + negs + self.terms.len().saturating_sub(1)) as u32
    }

    /// Bit `i` is the value on assignment `i = v_a v_b v_c` (`a` most
    /// significant).
    pub fn truth_table(&self) -> u8 {
        (0..NUM_INPUTS as u8).fold(0, |acc, i| acc | ((self.eval(i) as u8) << i))
    }

    /// Symbol ranks used for the lexicographic tie-break.
    pub fn order_key(&self) -> Vec<u8> {
        let mut key = Vec::with_capacity(16);
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                key.push(RANK_OR);
            }
            t.push_key(&mut key);
        }
        key
    }

    pub fn consistent(&self, w: &BoolWitness) -> bool {
        w.examples.iter().all(|&(x, b)| self.eval(x) == b)
    }
}

impl fmt::Display for DnfRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("F");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("unexpected character `{0}`")]
    UnexpectedChar(char),
    #[error("empty term")]
    EmptyTerm,
    #[error("variable `{0}` repeated in a term")]
    RepeatedVariable(char),
    #[error("bad example `{0}`")]
    BadExample(String),
}

impl FromStr for DnfRep {
    type Err = ParseError;

    /// Parses the `a&~b|c` rendering; `F` (or nothing) is False.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() || s == "F" {
            return Ok(DnfRep::falsum());
        }
        let mut terms = Vec::new();
        for part in s.split('|') {
            let mut lits = Vec::new();
            for lit in part.split('&') {
                let (negated, name) = match lit.strip_prefix('~') {
                    Some(rest) => (true, rest),
                    None => (false, lit),
                };
                let mut chars = name.chars();
                let (Some(c), None) = (chars.next(), chars.next()) else {
                    return Err(match name.chars().find(|c| !VAR_NAMES.contains(c)) {
                        Some(c) => ParseError::UnexpectedChar(c),
                        None => ParseError::EmptyTerm,
                    });
                };
                let var = VAR_NAMES
                    .iter()
                    .position(|&v| v == c)
                    .ok_or(ParseError::UnexpectedChar(c))? as u8;
                if lits.iter().any(|l: &Literal| l.var == var) {
                    return Err(ParseError::RepeatedVariable(c));
                }
                lits.push(Literal::new(var, negated));
            }
            terms.push(Term::new(lits));
        }
        Ok(DnfRep::new(terms))
    }
}

/// Composite order on representations: size, number of terms, symbol key.
pub fn compare_reps(a: &DnfRep, b: &DnfRep) -> Ordering {
    a.size()
        .cmp(&b.size())
        .then(a.terms.len().cmp(&b.terms.len()))
        .then_with(|| a.order_key().cmp(&b.order_key()))
}

fn permutations(items: &[Literal]) -> Vec<Vec<Literal>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// All terms over one to three distinct variables, sorted by symbol key.
/// With `ordered`, every literal order of a term is a distinct term.
pub fn all_terms(ordered: bool) -> Vec<Term> {
    let mut terms = Vec::new();
    for vars in 1u8..1 << NUM_VARS {
        let chosen: Vec<u8> = (0..NUM_VARS as u8).filter(|v| vars >> v & 1 == 1).collect();
        for negs in 0u8..1 << chosen.len() {
            let lits: Vec<Literal> = chosen
                .iter()
                .enumerate()
                .map(|(i, &v)| Literal::new(v, negs >> i & 1 == 1))
                .collect();
            if ordered {
                terms.extend(permutations(&lits).into_iter().map(Term::new));
            } else {
                terms.push(Term::new(lits));
            }
        }
    }
    terms.sort_by_key(Term::key);
    terms
}

/// Every representation of `variant`, in representation order.
pub fn enumerate_reps(variant: Variant) -> Vec<DnfRep> {
    let mut reps = match variant {
        Variant::Full3Dnf => (0..=u8::MAX)
            .map(|tt| {
                DnfRep::new(
                    (0..NUM_INPUTS as u8)
                        .filter(|i| tt >> i & 1 == 1)
                        .map(Term::minterm)
                        .collect(),
                )
            })
            .map(canonical_term_order)
            .collect(),
        Variant::ThreeTerm => up_to_three_terms(&all_terms(false)),
        Variant::ThreeTermPerm | Variant::ThreeTermPermDup => up_to_three_terms(&all_terms(true)),
    };
    sort_reps(&mut reps);
    if variant == Variant::ThreeTermPermDup {
        reps = reps.into_iter().flat_map(|r| [r.clone(), r]).collect();
    }
    reps
}

fn canonical_term_order(mut r: DnfRep) -> DnfRep {
    r.terms.sort_by_key(Term::key);
    r
}

/// Sets of at most three distinct terms, each rendered in term order.
fn up_to_three_terms(terms: &[Term]) -> Vec<DnfRep> {
    let n = terms.len();
    let mut reps = vec![DnfRep::falsum()];
    for i in 0..n {
        reps.push(DnfRep::new(vec![terms[i].clone()]));
        for j in i + 1..n {
            reps.push(DnfRep::new(vec![terms[i].clone(), terms[j].clone()]));
            for k in j + 1..n {
                reps.push(DnfRep::new(vec![terms[i].clone(), terms[j].clone(), terms[k].clone()]));
            }
        }
    }
    reps
}

fn sort_reps(reps: &mut [DnfRep]) {
    let mut keyed: Vec<(u32, usize, Vec<u8>, DnfRep)> = reps
        .iter()
        .map(|r| (r.size(), r.terms.len(), r.order_key(), r.clone()))
        .collect();
    keyed.sort_unstable_by(|a, b| (a.0, a.1, &a.2).cmp(&(b.0, b.1, &b.2)));
    for (slot, (_, _, _, r)) in reps.iter_mut().zip(keyed) {
        *slot = r;
    }
}

/// A self-congruent set of labelled examples, sorted by input.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoolWitness {
    pub examples: Vec<(u8, bool)>,
}

impl BoolWitness {
    /// Sorts the examples; `None` if an input appears twice.
    pub fn new(mut examples: Vec<(u8, bool)>) -> Option<Self> {
        examples.sort_unstable();
        if examples.windows(2).any(|p| p[0].0 == p[1].0) {
            return None;
        }
        Some(BoolWitness { examples })
    }

    /// Four bits per example plus the 1-bits of the inputs.
    pub fn size(&self) -> u32 {
        self.examples.iter().map(|&(x, _)| 4 + x.count_ones()).sum()
    }

    /// Truth tables consistent with every example, as a 256-entry mask.
    pub fn consistent_tables(&self) -> [bool; 256] {
        let mut care = 0u8;
        let mut want = 0u8;
        for &(x, b) in &self.examples {
            care |= 1 << x;
            want |= (b as u8) << x;
        }
        let mut mask = [false; 256];
        for (tt, m) in mask.iter_mut().enumerate() {
            *m = (tt as u8 & care) == want;
        }
        mask
    }
}

impl fmt::Display for BoolWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &(x, b)) in self.examples.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{x:03b}:{}", b as u8)?;
        }
        Ok(())
    }
}

impl FromStr for BoolWitness {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let bad = || ParseError::BadExample(s.to_string());
        let examples = s
            .split(';')
            .map(|ex| {
                let (x, b) = ex.split_once(':').ok_or_else(bad)?;
                if x.len() != NUM_VARS {
                    return Err(bad());
                }
                let x = u8::from_str_radix(x, 2).map_err(|_| bad())?;
                let b = match b {
                    "0" => false,
                    "1" => true,
                    _ => return Err(bad()),
                };
                Ok((x, b))
            })
            .collect::<Result<Vec<_>, _>>()?;
        BoolWitness::new(examples).ok_or_else(bad)
    }
}

/// Which example-set cardinalities form the witness set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessSpec {
    /// One to `n` examples.
    MaxCard(usize),
    /// Exactly `n` examples.
    ExactCard(usize),
}

impl WitnessSpec {
    fn admits(self, card: usize) -> bool {
        match self {
            WitnessSpec::MaxCard(n) => (1..=n).contains(&card),
            WitnessSpec::ExactCard(n) => card == n,
        }
    }

    pub fn name(self) -> String {
        match self {
            WitnessSpec::MaxCard(n) => format!("max{n}"),
            WitnessSpec::ExactCard(n) => format!("eq{n}"),
        }
    }
}

impl FromStr for WitnessSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |n: &str| n.parse::<usize>().map_err(|e| e.to_string());
        if let Some(n) = s.strip_prefix("max") {
            Ok(WitnessSpec::MaxCard(parse(n)?))
        } else if let Some(n) = s.strip_prefix("eq") {
            Ok(WitnessSpec::ExactCard(parse(n)?))
        } else {
            Err(format!("unknown witness spec `{s}`"))
        }
    }
}

/// How witnesses of equal size are ordered, by their canonical rendering.
///
/// The paper leaves this open. `Descending` is the default because it
/// reproduces the exact Table 2 cell "Greedy teaches 2,895 reps" and the
/// Table 3 row for `3term-perm eq5`; `Ascending` reproduces the paper's
/// witness-index columns (3,488 / 3,466 / 3,481) instead. The decisions
/// ledger lists every cell under both orders.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum WitnessTieBreak {
    Ascending,
    #[default]
    Descending,
}

impl WitnessTieBreak {
    pub fn name(self) -> &'static str {
        match self {
            WitnessTieBreak::Ascending => "asc",
            WitnessTieBreak::Descending => "desc",
        }
    }
}

impl FromStr for WitnessTieBreak {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "asc" => Ok(WitnessTieBreak::Ascending),
            "desc" => Ok(WitnessTieBreak::Descending),
            _ => Err(format!("unknown witness tie-break `{s}` (asc|desc)")),
        }
    }
}

/// All witnesses admitted by `spec`, ordered by size and then by rendering
/// under the default tie-break.
pub fn enumerate_witnesses(spec: WitnessSpec) -> Vec<BoolWitness> {
    enumerate_witnesses_with(spec, WitnessTieBreak::default())
}

pub fn enumerate_witnesses_with(spec: WitnessSpec, tie: WitnessTieBreak) -> Vec<BoolWitness> {
    let mut out = Vec::new();
    for inputs in 1u16..1 << NUM_INPUTS {
        let xs: Vec<u8> = (0..NUM_INPUTS as u8).filter(|x| inputs >> x & 1 == 1).collect();
        if !spec.admits(xs.len()) {
            continue;
        }
        for labels in 0u16..1 << xs.len() {
            let ex = xs.iter().enumerate().map(|(i, &x)| (x, labels >> i & 1 == 1)).collect();
            out.push(BoolWitness::new(ex).expect("distinct inputs"));
        }
    }
    let mut keyed: Vec<(u32, String, BoolWitness)> = out.into_iter().map(|w| (w.size(), w.to_string(), w)).collect();
    keyed.sort_unstable_by(|a, b| {
        a.0.cmp(&b.0).then_with(|| match tie {
            WitnessTieBreak::Ascending => a.1.cmp(&b.1),
            WitnessTieBreak::Descending => b.1.cmp(&a.1),
        })
    });
    keyed.into_iter().map(|(_, _, w)| w).collect()
}

/// One built DNF domain: the graph plus the semantic partition by truth
/// table.
pub struct BooleanDomain {
    pub variant: Variant,
    pub spec: WitnessSpec,
    pub graph: OrderedConsistencyGraph,
    pub truth_tables: Vec<u8>,
}

impl BooleanDomain {
    pub fn semantic_partition(&self) -> ConceptPartition {
        ConceptPartition::from_keys(self.truth_tables.iter().copied())
    }
}

/// Enumerates both sides and fills the adjacency. Consistency depends only
/// on the truth table, so each witness is checked against the 256 tables
/// once and then matched against every representation's table.
pub fn build_domain(variant: Variant, spec: WitnessSpec) -> BooleanDomain {
    build_domain_with(variant, spec, WitnessTieBreak::default())
}

pub fn build_domain_with(variant: Variant, spec: WitnessSpec, tie: WitnessTieBreak) -> BooleanDomain {
    let reps = enumerate_reps(variant);
    let wits = enumerate_witnesses_with(spec, tie);
    let truth_tables: Vec<u8> = reps.iter().map(DnfRep::truth_table).collect();
    let row = |w: &BoolWitness| -> Vec<u32> {
        let mask = w.consistent_tables();
        truth_tables
            .iter()
            .enumerate()
            .filter(|(_, &tt)| mask[tt as usize])
            .map(|(r, _)| r as u32)
            .collect()
    };
    #[cfg(feature = "parallel")]
    let adjacency: Vec<Vec<u32>> = {
        use rayon::prelude::*;
        wits.par_iter().map(row).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let adjacency: Vec<Vec<u32>> = wits.iter().map(row).collect();

    let rep_vs = reps.iter().map(|r| Vertex::new(r.size(), r.to_string())).collect();
    let wit_vs = wits.iter().map(|w| Vertex::new(w.size(), w.to_string())).collect();
    let graph = OrderedConsistencyGraph::new(rep_vs, wit_vs, adjacency).expect("enumeration is size-sorted");
    BooleanDomain {
        variant,
        spec,
        graph,
        truth_tables,
    }
}

pub fn build_graph(variant: Variant, spec: WitnessSpec) -> OrderedConsistencyGraph {
    build_domain(variant, spec).graph
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rep(s: &str) -> DnfRep {
        s.parse().unwrap()
    }

    #[test]
    fn sizes() {
        assert_eq!(rep("a&b&c|a&b&~c").size(), 8);
        assert_eq!(DnfRep::falsum().size(), 0);
        assert_eq!(rep("~a").size(), 2);
    }

    #[test]
    fn render_and_parse() {
        let r = rep("a&b&~c|a&b&c");
        assert_eq!(r.to_string(), "a&b&~c|a&b&c");
        assert_eq!(DnfRep::falsum().to_string(), "F");
        assert_eq!(rep("F"), DnfRep::falsum());
        assert_eq!("a&a".parse::<DnfRep>(), Err(ParseError::RepeatedVariable('a')));
        assert_eq!("a&d".parse::<DnfRep>(), Err(ParseError::UnexpectedChar('d')));
        assert_eq!("a|".parse::<DnfRep>(), Err(ParseError::EmptyTerm));
    }

    #[test]
    fn witness_size() {
        let w: BoolWitness = "001:1".parse().unwrap();
        assert_eq!(w.size(), 5);
        let w: BoolWitness = "000:0".parse().unwrap();
        assert_eq!(w.size(), 4);
        assert!("001:1;001:0".parse::<BoolWitness>().is_err());
    }

    #[test]
    fn consistency() {
        let neg: BoolWitness = "101:0".parse().unwrap();
        let pos: BoolWitness = "101:1".parse().unwrap();
        assert!(DnfRep::falsum().consistent(&neg));
        assert!(!DnfRep::falsum().consistent(&pos));
        let w: BoolWitness = "110:1;111:0".parse().unwrap();
        assert!(rep("a&b&~c").consistent(&w));
    }

    #[test]
    fn tables() {
        assert_eq!(DnfRep::falsum().truth_table(), 0);
        // a is the most significant bit: a alone is true on 100..111
        assert_eq!(rep("a").truth_table(), 0b1111_0000);
        assert_eq!(rep("~c").truth_table(), 0b0101_0101);
    }

    #[test]
    fn term_counts() {
        assert_eq!(all_terms(false).len(), 26);
        assert_eq!(all_terms(true).len(), 78);
    }

    #[test]
    fn witness_counts_by_cardinality() {
        assert_eq!(enumerate_witnesses(WitnessSpec::ExactCard(1)).len(), 16);
        assert_eq!(enumerate_witnesses(WitnessSpec::ExactCard(2)).len(), 112);
        assert_eq!(enumerate_witnesses(WitnessSpec::ExactCard(5)).len(), 1792);
        let all = enumerate_witnesses(WitnessSpec::MaxCard(5));
        assert_eq!(all.len(), 3488);
        assert_eq!(all.iter().map(BoolWitness::size).max(), Some(30));
        assert!(all.windows(2).all(|p| p[0].size() <= p[1].size()));
    }

    #[test]
    fn rep_counts() {
        assert_eq!(enumerate_reps(Variant::Full3Dnf).len(), 256);
        assert_eq!(enumerate_reps(Variant::ThreeTerm).len(), 2952);
    }

    #[test]
    fn full_dnf_is_one_rep_per_table() {
        let reps = enumerate_reps(Variant::Full3Dnf);
        let mut tts: Vec<u8> = reps.iter().map(DnfRep::truth_table).collect();
        tts.sort_unstable();
        tts.dedup();
        assert_eq!(tts.len(), 256);
        assert_eq!(reps[0], DnfRep::falsum());
    }

    #[test]
    fn rep_order_strictly_increasing() {
        for v in [Variant::Full3Dnf, Variant::ThreeTerm] {
            let reps = enumerate_reps(v);
            assert!(reps.windows(2).all(|p| compare_reps(&p[0], &p[1]) == Ordering::Less));
        }
    }

    #[test]
    fn fast_fill_matches_direct_check() {
        let d = build_domain(Variant::ThreeTerm, WitnessSpec::ExactCard(2));
        let reps = enumerate_reps(Variant::ThreeTerm);
        let wits = enumerate_witnesses(WitnessSpec::ExactCard(2));
        for (w, wit) in wits.iter().enumerate() {
            let direct: Vec<u32> = reps
                .iter()
                .enumerate()
                .filter(|(_, r)| r.consistent(wit))
                .map(|(i, _)| i as u32)
                .collect();
            assert_eq!(d.graph.consistent_reps(w as u32), &direct[..]);
        }
    }
}
