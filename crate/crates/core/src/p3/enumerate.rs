//! Shortlex enumeration of bracket-balanced programs.

use super::machine::{Program, ALPHABET};

/// Infinite stream of balanced programs in length-lexicographic order over
/// `< > + - [ ] o`, starting with the shortest non-empty program.
#[derive(Clone, Debug)]
pub struct ProgramStream {
    digits: Vec<u8>,
}

impl Default for ProgramStream {
    fn default() -> Self {
        ProgramStream::new()
    }
}

impl ProgramStream {
    pub fn new() -> Self {
        ProgramStream { digits: Vec::new() }
    }

    /// Advances the odometer to the next string, balanced or not.
    fn advance(&mut self) {
        for d in self.digits.iter_mut().rev() {
            *d += 1;
            if (*d as usize) < ALPHABET.len() {
                return;
            }
            *d = 0;
        }
        self.digits.insert(0, 0);
    }

    fn balanced(&self) -> bool {
        let mut depth = 0i32;
        for &d in &self.digits {
            match ALPHABET[d as usize] {
                b'[' => depth += 1,
                b']' => {
                    depth -= 1;
                    if depth < 0 {
                        return false;
                    }
                }
                _ => {}
            }
        }
        depth == 0
    }
}

impl Iterator for ProgramStream {
    type Item = Program;

    fn next(&mut self) -> Option<Program> {
        loop {
            self.advance();
            if self.balanced() {
                let code: Vec<u8> = self.digits.iter().map(|&d| ALPHABET[d as usize]).collect();
                return Some(Program::from_bytes(&code).expect("balanced"));
            }
        }
    }
}

/// The first `cap` balanced programs.
pub fn enumerate_programs(cap: usize) -> Vec<Program> {
    ProgramStream::new().take(cap).collect()
}

/// Shortlex comparison under the instruction order.
pub fn shortlex_cmp(a: &[u8], b: &[u8]) -> std::cmp::Ordering {
    let rank = |c: &u8| ALPHABET.iter().position(|x| x == c);
    a.len()
        .cmp(&b.len())
        .then_with(|| a.iter().map(rank).cmp(b.iter().map(rank)))
}
