//! Library side of the `artemis` command: DIMACS I/O, instance
//! generators, oracle verification of runs and the scaling benchmark.

pub mod bench;
pub mod dimacs;
pub mod generate;
pub mod report;
pub mod trace;
pub mod verify;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    /// The graph is outside class A or the engine refused it.
    pub const NOT_IN_CLASS: i32 = 1;
    pub const PARSE: i32 = 2;
    pub const BUDGET: i32 = 3;
}
