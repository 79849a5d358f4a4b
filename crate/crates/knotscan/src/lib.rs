//! Scans knot tables for amphicheirality obstructions read off the Conway
//! polynomial.

pub mod parse;
pub mod report;
pub mod selftest;
pub mod table;

pub use parse::{parse_alexander, parse_conway, parse_polynomial, InputError, SyntaxError, Variable};
pub use report::{analyze, ObstructionReport};
pub use table::{load_table, read_table, Format, KnotRecord, Table, TableError};
