//! The seven-instruction tape language: interpreter, program and witness
//! enumeration, and the graph pipelines built on them.

mod enumerate;
mod machine;
mod pipeline;
mod witness;

pub use enumerate::{enumerate_programs, shortlex_cmp, ProgramStream};
pub use machine::{run, Cell, Machine, Program, ProgramError, RunOutcome, ALPHABET};
pub use pipeline::{
    p3_consistent, program_bits, program_graph, small_p3_pipeline, streaming_teach, PipelineConfig, PipelineReport,
    StreamConfig, StreamProtocol, StreamReport, StreamResult, DEFAULT_MAX_BITS, DEFAULT_PROGRAM_CAP,
    DEFAULT_STEP_LIMIT,
};
pub use witness::{bit_strings_up_to, enumerate_p3_witnesses, P3Witness, WitnessError};
