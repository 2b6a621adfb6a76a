//! Step-limited interpreter.
//!
//! The tape is unbounded in both directions and every cell holds blank, `0`
//! or `1`. The input is written from cell 0 rightwards and the head starts
//! on cell 0. `+` cycles a cell blank → 0 → 1 → blank and `-` cycles the
//! other way. `[` jumps past its matching `]` when the current cell is
//! blank; `]` always jumps back to its `[`. `o` appends the current cell to
//! the output unless it is blank. Every executed instruction is one step.

use std::fmt;
use std::str::FromStr;

/// Instruction alphabet in enumeration order.
pub const ALPHABET: [u8; 7] = *b"<>+-[]o";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cell {
    Blank,
    Zero,
    One,
}

impl Cell {
    fn inc(self) -> Cell {
        match self {
            Cell::Blank => Cell::Zero,
            Cell::Zero => Cell::One,
            Cell::One => Cell::Blank,
        }
    }

    fn dec(self) -> Cell {
        match self {
            Cell::Blank => Cell::One,
            Cell::Zero => Cell::Blank,
            Cell::One => Cell::Zero,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Cell::Blank => 'B',
            Cell::Zero => '0',
            Cell::One => '1',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ProgramError {
    #[error("`{0}` is not an instruction")]
    UnknownInstruction(char),
    #[error("unbalanced brackets")]
    Unbalanced,
}

/// A bracket-balanced instruction string with its jump table.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Program {
    code: Vec<u8>,
    jump: Vec<u32>,
}

impl Program {
    pub fn from_bytes(code: &[u8]) -> Result<Self, ProgramError> {
        let mut jump = vec![0u32; code.len()];
        let mut open = Vec::new();
        for (i, &c) in code.iter().enumerate() {
            match c {
                b'[' => open.push(i),
                b']' => {
                    let j = open.pop().ok_or(ProgramError::Unbalanced)?;
                    jump[i] = j as u32;
                    jump[j] = i as u32;
                }
                c if ALPHABET.contains(&c) => {}
                c => return Err(ProgramError::UnknownInstruction(c as char)),
            }
        }
        if !open.is_empty() {
            return Err(ProgramError::Unbalanced);
        }
        Ok(Program {
            code: code.to_vec(),
            jump,
        })
    }

    pub fn len(&self) -> usize {
        self.code.len()
    }

    pub fn is_empty(&self) -> bool {
        self.code.is_empty()
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.code).expect("ASCII instructions")
    }

    pub fn code(&self) -> &[u8] {
        &self.code
    }

    pub fn run(&self, input: &str, step_limit: u64) -> RunOutcome {
        let mut m = Machine::new(self, input);
        m.run(step_limit);
        RunOutcome {
            halted: m.halted(),
            steps: m.steps,
            output: m.output,
        }
    }
}

impl FromStr for Program {
    type Err = ProgramError;

    fn from_str(s: &str) -> Result<Self, ProgramError> {
        Program::from_bytes(s.as_bytes())
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Debug for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Program({:?})", self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOutcome {
    pub output: String,
    /// `false` when the step limit was reached first.
    pub halted: bool,
    pub steps: u64,
}

/// Runs `program` on `input`; see [`Program::run`].
pub fn run(program: &Program, input: &str, step_limit: u64) -> RunOutcome {
    program.run(input, step_limit)
}

/// Interpreter state for one run.
#[derive(Clone, Debug)]
pub struct Machine<'p> {
    program: &'p Program,
    /// Visited cells; `tape[origin]` is position 0.
    tape: Vec<Cell>,
    origin: usize,
    head: i64,
    pub pc: usize,
    pub output: String,
    pub steps: u64,
}

impl<'p> Machine<'p> {
    pub fn new(program: &'p Program, input: &str) -> Self {
        let mut tape: Vec<Cell> = input
            .bytes()
            .map(|b| if b == b'1' { Cell::One } else { Cell::Zero })
            .collect();
        if tape.is_empty() {
            tape.push(Cell::Blank);
        }
        Machine {
            program,
            tape,
            origin: 0,
            head: 0,
            pc: 0,
            output: String::new(),
            steps: 0,
        }
    }

    pub fn halted(&self) -> bool {
        self.pc >= self.program.code.len()
    }

    pub fn head(&self) -> i64 {
        self.head
    }

    /// Tape contents between the leftmost and rightmost visited cells, with
    /// the position of the leftmost one.
    pub fn tape(&self) -> (i64, &[Cell]) {
        (-(self.origin as i64), &self.tape)
    }

    fn cell_index(&mut self) -> usize {
        let pos = self.head + self.origin as i64;
        if pos < 0 {
            let grow = (-pos) as usize;
            let mut fresh = vec![Cell::Blank; grow];
            fresh.extend_from_slice(&self.tape);
            self.tape = fresh;
            self.origin += grow;
            return 0;
        }
        let pos = pos as usize;
        if pos >= self.tape.len() {
            self.tape.resize(pos + 1, Cell::Blank);
        }
        pos
    }

    pub fn current(&mut self) -> Cell {
        let i = self.cell_index();
        self.tape[i]
    }

    /// Executes one instruction. Returns `false` if already halted.
    pub fn step(&mut self) -> bool {
        let Some(&op) = self.program.code.get(self.pc) else {
            return false;
        };
        self.steps += 1;
        match op {
            b'<' => self.head -= 1,
            b'>' => self.head += 1,
            b'+' => {
                let i = self.cell_index();
                self.tape[i] = self.tape[i].inc();
            }
            b'-' => {
                let i = self.cell_index();
                self.tape[i] = self.tape[i].dec();
            }
            b'[' => {
                if self.current() == Cell::Blank {
                    self.pc = self.program.jump[self.pc] as usize;
                }
            }
            b']' => {
                self.pc = self.program.jump[self.pc] as usize;
                return true;
            }
            b'o' => match self.current() {
                Cell::Zero => self.output.push('0'),
                Cell::One => self.output.push('1'),
                Cell::Blank => {}
            },
            _ => unreachable!("validated program"),
        }
        self.pc += 1;
        true
    }

    /// Steps until halting or until `step_limit` instructions have run.
    pub fn run(&mut self, step_limit: u64) {
        while self.steps < step_limit && self.step() {}
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Program {
        s.parse().unwrap()
    }

    #[test]
    fn left_shift_anchor() {
        let out = p(">[o>]<[<]>o").run("10010", 400);
        assert_eq!(out.output, "00101");
        assert!(out.halted);
    }

    #[test]
    fn empty_program_halts_silently() {
        for x in ["", "0", "1101"] {
            let out = p("").run(x, 10);
            assert_eq!((out.output.as_str(), out.halted, out.steps), ("", true, 0));
        }
    }

    #[test]
    fn unconditional_loop_never_halts() {
        // `+` turns blank or 0 into a non-blank cell, so `[]` spins
        for x in ["", "0", "01"] {
            for limit in [3, 50, 400] {
                assert!(!p("+[]").run(x, limit).halted);
            }
        }
        // but 1 wraps to blank and the loop is skipped
        assert!(p("+[]").run("1", 400).halted);
    }

    #[test]
    fn cell_cycle() {
        // blank -> 0 -> 1, then output
        assert_eq!(p("++o").run("", 10).output, "1");
        assert_eq!(p("-o").run("", 10).output, "1");
        assert_eq!(p("-o").run("0", 10).output, "");
        assert_eq!(p("<o>o").run("1", 10).output, "1");
    }

    #[test]
    fn output_on_blank_is_skipped() {
        assert_eq!(p("o>o>o").run("10", 10).output, "10");
    }

    #[test]
    fn step_accounting() {
        let out = p("[]").run("", 10);
        assert_eq!(out.steps, 1);
        let out = p("o").run("0", 1);
        assert!(out.halted);
        assert!(!p("oo").run("0", 1).halted);
    }

    #[test]
    fn rejects_bad_programs() {
        assert_eq!("][".parse::<Program>(), Err(ProgramError::Unbalanced));
        assert_eq!("[".parse::<Program>(), Err(ProgramError::Unbalanced));
        assert_eq!("x".parse::<Program>(), Err(ProgramError::UnknownInstruction('x')));
    }
}
