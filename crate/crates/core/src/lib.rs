//! Bootstrap percolation on grid graphs.
//!
//! The crate provides a closure engine for the r-neighbour and modified
//! bootstrap processes, lower bounds and certificates for the size of
//! percolating sets, explicit optimal constructions in two and three
//! dimensions, and exact search for small instances.

pub mod board;
pub mod bounds;
pub mod construct2d;
pub mod construct3d;
mod error;
pub mod search;
pub mod verify;

pub use board::{closure, percolates, step, Board, BoardKind, CellSet, Rule};
pub use error::{Error, Result};
