//! Optimal percolating sets for the 3-neighbour process on three dimensional
//! boxes: folded planar constructions, a catalog of small sporadic sets, the
//! block assembly driven by modified-process templates, and a planner that
//! combines them.

mod assemble;
mod catalog;
mod embedding;
mod families;
mod planner;

pub use assemble::{add3, recursive_assemble};
pub use catalog::{appendix_catalog, catalog_names};
pub use embedding::{apply_embedding, LocalEmbedding};
pub use families::{
    folds_up_to, perfect_2_3, perfect_2_bc, perfect_3_3, perfect_3_4, perfect_3_6, perfect_3_odd, Fold,
};
pub use planner::{build_optimal, is_covered, torus_set};

use crate::board::{Board, CellSet};
use crate::error::Result;

/// A seed set together with the board it lives on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub board: Board,
    pub seeds: CellSet,
}

impl Construction {
    pub fn len(&self) -> usize {
        self.seeds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seeds.is_empty()
    }

    pub fn cells(&self) -> Vec<Vec<usize>> {
        self.board.coords_in(&self.seeds)
    }
}

/// Lightweight cell list in a 3D box, used while assembling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Block {
    pub dims: [usize; 3],
    pub cells: Vec<[usize; 3]>,
}

impl Block {
    pub fn new(dims: [usize; 3]) -> Block {
        Block {
            dims,
            cells: Vec::new(),
        }
    }

    pub fn from_set(board: &Board, set: &CellSet) -> Block {
        let d = board.dims();
        Block {
            dims: [d[0], d[1], d[2]],
            cells: set
                .iter()
                .map(|v| {
                    let c = board.coords_of(v);
                    [c[0], c[1], c[2]]
                })
                .collect(),
        }
    }

    /// Reorders the axes: axis `i` of the result is axis `perm[i]` of `self`.
    pub fn permuted(&self, perm: [usize; 3]) -> Block {
        Block {
            dims: perm.map(|p| self.dims[p]),
            cells: self.cells.iter().map(|c| perm.map(|p| c[p])).collect(),
        }
    }

    /// Reorders the axes so the box becomes `dims`, which must be a
    /// rearrangement of the current box.
    pub fn oriented(self, dims: [usize; 3]) -> Block {
        if self.dims == dims {
            return self;
        }
        let perm = PERMUTATIONS
            .iter()
            .copied()
            .find(|p| p.map(|i| self.dims[i]) == dims)
            .unwrap_or_else(|| panic!("{:?} is not a rearrangement of {:?}", dims, self.dims));
        self.permuted(perm)
    }

    pub fn paste(&mut self, other: &Block, offset: [usize; 3]) {
        self.cells.extend(
            other
                .cells
                .iter()
                .map(|c| [c[0] + offset[0], c[1] + offset[1], c[2] + offset[2]]),
        );
    }

    pub fn into_construction(self) -> Result<Construction> {
        let board = Board::open_grid(&self.dims)?;
        let seeds = board.set_from_coords(&self.cells)?;
        Ok(Construction { board, seeds })
    }
}

pub(crate) const PERMUTATIONS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
