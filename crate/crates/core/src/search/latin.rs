//! Optimal sets of the modified process on `[n]^3`.
//!
//! A percolating set of size `n^2` meets every axis-parallel line exactly
//! once, so it is the graph `{(i, j, L[i][j])}` of a Latin square `L`. The
//! squares are generated row by row and filtered by simulation.

use super::{Budget, Meter, Outcome};
use crate::board::{Board, Propagator, Rule};
use crate::error::{Error, Result};
use std::ops::ControlFlow;

struct Squares {
    n: usize,
    grid: Vec<usize>,
    row_used: Vec<u32>,
    col_used: Vec<u32>,
}

impl Squares {
    fn new(n: usize) -> Squares {
        Squares {
            n,
            grid: vec![0; n * n],
            row_used: vec![0; n],
            col_used: vec![0; n],
        }
    }

    /// Fills cells from `pos` on in row-major order, symbols in increasing
    /// order, calling `visit` on every completed square.
    fn fill(
        &mut self,
        pos: usize,
        meter: &mut Meter,
        visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if !meter.tick() {
            return ControlFlow::Break(());
        }
        let n = self.n;
        if pos == n * n {
            return visit(&self.grid);
        }
        let (i, j) = (pos / n, pos % n);
        let free = !(self.row_used[i] | self.col_used[j]) & ((1u32 << n) - 1);
        let mut bits = free;
        while bits != 0 {
            let s = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            self.grid[pos] = s;
            self.row_used[i] |= 1 << s;
            self.col_used[j] |= 1 << s;
            let flow = self.fill(pos + 1, meter, visit);
            self.row_used[i] &= !(1 << s);
            self.col_used[j] &= !(1 << s);
            flow?;
        }
        ControlFlow::Continue(())
    }
}

fn for_each_optimal(
    n: usize,
    budget: Budget,
    mut visit: impl FnMut(&Board, &[usize]) -> ControlFlow<()>,
) -> Result<Outcome<()>> {
    if n == 0 || n > 16 {
        return Err(Error::InvalidParameters(format!(
            "order must be between 1 and 16, got {n}"
        )));
    }
    let board = Board::open_grid(&[n, n, n])?;
    let mut engine = Propagator::new(&board, Rule::Modified)?;
    let mut seeds = board.empty_set();
    let mut meter = Meter::new(budget);
    let mut squares = Squares::new(n);
    let _ = squares.fill(0, &mut meter, &mut |grid| {
        seeds.clear();
        seeds.extend(grid.iter().enumerate().map(|(p, &s)| p * n + s));
        if engine.percolates(&seeds) {
            visit(&board, grid)
        } else {
            ControlFlow::Continue(())
        }
    });
    Ok(Outcome {
        value: (),
        exact: !meter.exhausted,
        nodes: meter.nodes,
    })
}

/// Number of percolating sets of size `n^2` for the modified process on
/// `[n]^3`, without symmetry reduction.
pub fn count_modified_optimal(n: usize, budget: Budget) -> Result<Outcome<u64>> {
    let mut count = 0u64;
    let done = for_each_optimal(n, budget, |_, _| {
        count += 1;
        ControlFlow::Continue(())
    })?;
    Ok(Outcome {
        value: count,
        exact: done.exact,
        nodes: done.nodes,
    })
}

/// The lexicographically first optimal set of the modified process on
/// `[n]^3`, as cells `(i, j, L[i][j])`.
pub fn modified_latin_cube(n: usize) -> Option<Vec<[usize; 3]>> {
    let mut first = None;
    for_each_optimal(n, Budget::unlimited(), |_, grid| {
        first = Some(
            grid.iter()
                .enumerate()
                .map(|(p, &s)| [p / n + 1, p % n + 1, s + 1])
                .collect(),
        );
        ControlFlow::Break(())
    })
    .ok()?;
    first
}
