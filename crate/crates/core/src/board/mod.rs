//! Boards (open grids, tori, masked planar grids), cell sets and the
//! bootstrap processes that run on them.
//!
//! Cells are addressed externally by 1-indexed coordinates and internally by
//! their row-major index over the full box `[a1] x ... x [ad]`, so index order
//! is lexicographic order of coordinates.

mod cellset;
mod json;
mod process;
mod transform;

pub use cellset::CellSet;
pub use json::{from_json, to_json, CellSetDoc};
pub use process::{closure, percolates, step, Propagator, Rule};
pub use transform::{permute_axes, reflect, rotate2d};

use crate::error::{Error, Result};
use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BoardKind {
    #[serde(rename = "open-grid")]
    OpenGrid,
    #[serde(rename = "torus")]
    Torus,
    #[serde(rename = "masked-2d")]
    Masked2d,
}

impl BoardKind {
    pub fn name(self) -> &'static str {
        match self {
            BoardKind::OpenGrid => "open-grid",
            BoardKind::Torus => "torus",
            BoardKind::Masked2d => "masked-2d",
        }
    }
}

/// An immutable graph on a box of cells with precomputed adjacency.
#[derive(Debug, Clone)]
pub struct Board {
    kind: BoardKind,
    dims: Vec<usize>,
    strides: Vec<usize>,
    present: FixedBitSet,
    cell_count: usize,
    offsets: Vec<u32>,
    adjacent: Vec<u32>,
    axes: Vec<u8>,
}

impl PartialEq for Board {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.dims == other.dims && self.present == other.present
    }
}

impl Eq for Board {}

impl Board {
    /// The grid graph `[a1] x ... x [ad]`.
    pub fn open_grid(dims: &[usize]) -> Result<Board> {
        check_dims(dims)?;
        let space: usize = dims.iter().product();
        let mut present = FixedBitSet::with_capacity(space);
        present.insert_range(..);
        Ok(Self::build(BoardKind::OpenGrid, dims, present))
    }

    /// The torus on `[a1] x ... x [ad]`, `d <= 3`. An axis wraps only when its
    /// length is at least 3, so the graph stays simple.
    pub fn torus(dims: &[usize]) -> Result<Board> {
        check_dims(dims)?;
        if dims.len() > 3 {
            return Err(Error::InvalidBoard("tori are supported up to dimension 3".into()));
        }
        let space: usize = dims.iter().product();
        let mut present = FixedBitSet::with_capacity(space);
        present.insert_range(..);
        Ok(Self::build(BoardKind::Torus, dims, present))
    }

    /// The subgraph of `[rows] x [cols]` induced by the retained cells.
    pub fn masked(rows: usize, cols: usize, retained: &[[usize; 2]]) -> Result<Board> {
        check_dims(&[rows, cols])?;
        let mut present = FixedBitSet::with_capacity(rows * cols);
        for &[i, j] in retained {
            if i == 0 || j == 0 || i > rows || j > cols {
                return Err(Error::InvalidCell(vec![i, j]));
            }
            present.insert((i - 1) * cols + (j - 1));
        }
        Ok(Self::build(BoardKind::Masked2d, &[rows, cols], present))
    }

    fn build(kind: BoardKind, dims: &[usize], present: FixedBitSet) -> Board {
        let d = dims.len();
        let mut strides = vec![1; d];
        for i in (0..d.saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * dims[i + 1];
        }
        let space = present.len();
        let mut offsets = Vec::with_capacity(space + 1);
        let mut adjacent = Vec::new();
        let mut axes = Vec::new();
        offsets.push(0u32);
        let mut coords = vec![0usize; d];
        for idx in 0..space {
            if present.contains(idx) {
                decode(idx, dims, &mut coords);
                for axis in 0..d {
                    let len = dims[axis];
                    let x = coords[axis];
                    let mut push = |y: usize| {
                        let n = idx + y * strides[axis] - x * strides[axis];
                        if present.contains(n) {
                            adjacent.push(n as u32);
                            axes.push(axis as u8);
                        }
                    };
                    match kind {
                        BoardKind::Torus if len >= 3 => {
                            push((x + len - 1) % len);
                            push((x + 1) % len);
                        }
                        BoardKind::Torus if len == 2 => push(1 - x),
                        _ => {
                            if x > 0 {
                                push(x - 1);
                            }
                            if x + 1 < len {
                                push(x + 1);
                            }
                        }
                    }
                }
            }
            offsets.push(adjacent.len() as u32);
        }
        let cell_count = present.count_ones(..);
        Board {
            kind,
            dims: dims.to_vec(),
            strides,
            present,
            cell_count,
            offsets,
            adjacent,
            axes,
        }
    }

    pub fn kind(&self) -> BoardKind {
        self.kind
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dimension(&self) -> usize {
        self.dims.len()
    }

    /// Size of the index space, i.e. the volume of the bounding box.
    pub fn index_space(&self) -> usize {
        self.present.len()
    }

    /// Number of vertices of the graph.
    pub fn cell_count(&self) -> usize {
        self.cell_count
    }

    pub fn edge_count(&self) -> usize {
        self.adjacent.len() / 2
    }

    pub fn contains_index(&self, idx: usize) -> bool {
        self.present.contains(idx)
    }

    /// Iterates over the indices of all vertices in lexicographic order.
    pub fn cells(&self) -> impl Iterator<Item = usize> + '_ {
        self.present.ones()
    }

    /// Index of the cell with the given 1-indexed coordinates.
    pub fn index_of(&self, coords: &[usize]) -> Result<usize> {
        if coords.len() != self.dims.len() {
            return Err(Error::InvalidCell(coords.to_vec()));
        }
        let mut idx = 0;
        for ((&c, &len), &stride) in coords.iter().zip(&self.dims).zip(&self.strides) {
            if c == 0 || c > len {
                return Err(Error::InvalidCell(coords.to_vec()));
            }
            idx += (c - 1) * stride;
        }
        if !self.present.contains(idx) {
            return Err(Error::InvalidCell(coords.to_vec()));
        }
        Ok(idx)
    }

    /// 1-indexed coordinates of the cell with the given index.
    pub fn coords_of(&self, idx: usize) -> Vec<usize> {
        let mut coords = vec![0; self.dims.len()];
        decode(idx, &self.dims, &mut coords);
        coords.iter_mut().for_each(|c| *c += 1);
        coords
    }

    /// Neighbour indices of a vertex, grouped by axis.
    pub fn neighbors_of(&self, idx: usize) -> &[u32] {
        &self.adjacent[self.offsets[idx] as usize..self.offsets[idx + 1] as usize]
    }

    /// The axis along which each entry of [`Board::neighbors_of`] lies.
    pub fn neighbor_axes(&self, idx: usize) -> &[u8] {
        &self.axes[self.offsets[idx] as usize..self.offsets[idx + 1] as usize]
    }

    pub fn degree(&self, idx: usize) -> usize {
        (self.offsets[idx + 1] - self.offsets[idx]) as usize
    }

    pub fn max_degree(&self) -> usize {
        self.cells().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Neighbours of a cell given by coordinates, in lexicographic order.
    pub fn neighbors(&self, coords: &[usize]) -> Result<Vec<Vec<usize>>> {
        let idx = self.index_of(coords)?;
        let mut ns: Vec<usize> = self.neighbors_of(idx).iter().map(|&n| n as usize).collect();
        ns.sort_unstable();
        Ok(ns.into_iter().map(|n| self.coords_of(n)).collect())
    }

    pub fn empty_set(&self) -> CellSet {
        CellSet::with_capacity(self.index_space())
    }

    pub fn full_set(&self) -> CellSet {
        CellSet::from_bits(self.present.clone())
    }

    /// Builds a cell set from coordinates, rejecting cells off the board.
    pub fn set_from_coords<I, C>(&self, cells: I) -> Result<CellSet>
    where
        I: IntoIterator<Item = C>,
        C: AsRef<[usize]>,
    {
        let mut set = self.empty_set();
        for c in cells {
            set.insert(self.index_of(c.as_ref())?);
        }
        Ok(set)
    }

    /// Coordinates of the members of a set in lexicographic order.
    pub fn coords_in(&self, set: &CellSet) -> Vec<Vec<usize>> {
        set.iter().map(|i| self.coords_of(i)).collect()
    }

    /// Number of edges with both ends in `set`.
    pub fn induced_edges(&self, set: &CellSet) -> usize {
        set.iter()
            .map(|v| {
                self.neighbors_of(v)
                    .iter()
                    .filter(|&&u| set.contains(u as usize))
                    .count()
            })
            .sum::<usize>()
            / 2
    }

    pub(crate) fn check_set(&self, set: &CellSet) -> Result<()> {
        if set.capacity() != self.index_space() {
            return Err(Error::InvalidParameters(format!(
                "cell set sized for {} cells used on a board of {}",
                set.capacity(),
                self.index_space()
            )));
        }
        if !set.bits().is_subset(&self.present) {
            let stray = set.iter().find(|&i| !self.present.contains(i)).unwrap_or(0);
            return Err(Error::InvalidCell(self.coords_of(stray)));
        }
        Ok(())
    }
}

fn check_dims(dims: &[usize]) -> Result<()> {
    if dims.is_empty() {
        return Err(Error::InvalidBoard("a board needs at least one axis".into()));
    }
    if dims.contains(&0) {
        return Err(Error::InvalidBoard(format!(
            "side lengths must be positive, got {dims:?}"
        )));
    }
    let volume = dims
        .iter()
        .try_fold(1usize, |acc, &a| acc.checked_mul(a))
        .filter(|&v| v < u32::MAX as usize);
    if volume.is_none() {
        return Err(Error::InvalidBoard(format!("board {dims:?} is too large")));
    }
    Ok(())
}

fn decode(mut idx: usize, dims: &[usize], out: &mut [usize]) {
    for axis in (0..dims.len()).rev() {
        out[axis] = idx % dims[axis];
        idx /= dims[axis];
    }
}
