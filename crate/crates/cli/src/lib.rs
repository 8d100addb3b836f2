//! Library surface of the `vdw` command-line tool: sweep builders, table
//! and figure rendering, and the verification suite. The binary in
//! `main.rs` is a thin argument-parsing layer over these.

pub mod error;
pub mod selfcheck;
pub mod svg;
pub mod sweeps;
pub mod table;
