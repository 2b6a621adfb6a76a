//! Input/output witnesses for programs.

use std::fmt;
use std::str::FromStr;

use crate::coding::gamma_len;

/// A self-congruent set of `(input, output)` bit-string pairs, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct P3Witness {
    pairs: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum WitnessError {
    #[error("input `{0}` has two different outputs")]
    SelfIncongruent(String),
    #[error("`{0}` is not a bit string")]
    NotBits(String),
    #[error("malformed pair `{0}`")]
    Malformed(String),
}

fn is_bits(s: &str) -> bool {
    s.bytes().all(|b| b == b'0' || b == b'1')
}

impl P3Witness {
    /// Sorts and deduplicates the pairs; rejects two outputs for one input.
    pub fn new(mut pairs: Vec<(String, String)>) -> Result<Self, WitnessError> {
        for (i, o) in &pairs {
            for s in [i, o] {
                if !is_bits(s) {
                    return Err(WitnessError::NotBits(s.clone()));
                }
            }
        }
        pairs.sort();
        pairs.dedup();
        if let Some(p) = pairs.windows(2).find(|p| p[0].0 == p[1].0) {
            return Err(WitnessError::SelfIncongruent(p[0].0.clone()));
        }
        Ok(P3Witness { pairs })
    }

    pub fn pairs(&self) -> &[(String, String)] {
        &self.pairs
    }

    /// Total length of all inputs and outputs.
    pub fn bits(&self) -> u32 {
        self.pairs.iter().map(|(i, o)| (i.len() + o.len()) as u32).sum()
    }

    /// Self-delimiting size: every string is preceded by the Elias-gamma
    /// code of its length plus one.
    pub fn elias_bits(&self) -> u32 {
        self.pairs
            .iter()
            .map(|(i, o)| {
                gamma_len(i.len() as u64 + 1) + i.len() as u32 + gamma_len(o.len() as u64 + 1) + o.len() as u32
            })
            .sum()
    }
}

impl fmt::Display for P3Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, (i, o)) in self.pairs.iter().enumerate() {
            if n > 0 {
                f.write_str(";")?;
            }
            write!(f, "{i}>{o}")?;
        }
        Ok(())
    }
}

impl FromStr for P3Witness {
    type Err = WitnessError;

    fn from_str(s: &str) -> Result<Self, WitnessError> {
        let pairs = s
            .split(';')
            .map(|p| {
                p.split_once('>')
                    .map(|(i, o)| (i.to_string(), o.to_string()))
                    .ok_or_else(|| WitnessError::Malformed(p.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        P3Witness::new(pairs)
    }
}

/// All bit strings of length at most `max_len`, shortest first.
pub fn bit_strings_up_to(max_len: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    for len in 1..=max_len {
        for v in 0u64..1 << len {
            out.push(format!("{v:0len$b}"));
        }
    }
    out
}

/// Every non-empty self-congruent witness of at most `max_bits` bits,
/// ordered by size and then by rendering.
pub fn enumerate_p3_witnesses(max_bits: u32) -> Vec<P3Witness> {
    let strings = bit_strings_up_to(max_bits as usize);
    let mut pairs: Vec<(String, String)> = Vec::new();
    for i in &strings {
        for o in &strings {
            if i.len() + o.len() <= max_bits as usize {
                pairs.push((i.clone(), o.clone()));
            }
        }
    }
    pairs.sort();

    fn extend(
        pairs: &[(String, String)],
        from: usize,
        budget: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<P3Witness>,
    ) {
        for k in from..pairs.len() {
            let (i, o) = &pairs[k];
            let cost = i.len() + o.len();
            if cost > budget {
                continue;
            }
            if let Some(&last) = chosen.last() {
                if pairs[last].0 == *i {
                    continue;
                }
            }
            chosen.push(k);
            out.push(P3Witness {
                pairs: chosen.iter().map(|&c| pairs[c].clone()).collect(),
            });
            extend(pairs, k + 1, budget - cost, chosen, out);
            chosen.pop();
        }
    }

    let mut out = Vec::new();
    extend(&pairs, 0, max_bits as usize, &mut Vec::new(), &mut out);
    let mut keyed: Vec<(u32, String, P3Witness)> = out.into_iter().map(|w| (w.bits(), w.to_string(), w)).collect();
    keyed.sort_unstable_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    keyed.into_iter().map(|(_, _, w)| w).collect()
}
