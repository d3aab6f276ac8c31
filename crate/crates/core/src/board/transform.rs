//! Symmetries of full grids applied to cell sets.

use super::{Board, BoardKind, CellSet};
use crate::error::{Error, Result};

fn full_grid(board: &Board, op: &str) -> Result<()> {
    if board.kind() == BoardKind::Masked2d {
        return Err(Error::InvalidParameters(format!("{op} is defined on full grids only")));
    }
    Ok(())
}

/// Mirrors a set along one axis: coordinate `x` becomes `a + 1 - x`.
pub fn reflect(board: &Board, set: &CellSet, axis: usize) -> Result<CellSet> {
    full_grid(board, "reflection")?;
    board.check_set(set)?;
    if axis >= board.dimension() {
        return Err(Error::InvalidParameters(format!("axis {axis} out of range")));
    }
    let len = board.dims()[axis];
    let mut out = board.empty_set();
    for v in set.iter() {
        let mut c = board.coords_of(v);
        c[axis] = len + 1 - c[axis];
        out.insert(board.index_of(&c)?);
    }
    Ok(out)
}

/// Reorders axes: axis `i` of the result is axis `perm[i]` of the input.
pub fn permute_axes(board: &Board, set: &CellSet, perm: &[usize]) -> Result<(Board, CellSet)> {
    full_grid(board, "axis permutation")?;
    board.check_set(set)?;
    let d = board.dimension();
    let mut seen = vec![false; d];
    if perm.len() != d || perm.iter().any(|&p| p >= d || std::mem::replace(&mut seen[p], true)) {
        return Err(Error::InvalidParameters(format!(
            "{perm:?} is not a permutation of {d} axes"
        )));
    }
    let dims: Vec<usize> = perm.iter().map(|&p| board.dims()[p]).collect();
    let target = match board.kind() {
        BoardKind::Torus => Board::torus(&dims)?,
        _ => Board::open_grid(&dims)?,
    };
    let mut out = target.empty_set();
    for v in set.iter() {
        let c = board.coords_of(v);
        let moved: Vec<usize> = perm.iter().map(|&p| c[p]).collect();
        out.insert(target.index_of(&moved)?);
    }
    Ok((target, out))
}

/// Quarter turn of a planar set: `(i, j)` in `[a1] x [a2]` goes to
/// `(j, a1 + 1 - i)` in `[a2] x [a1]`.
pub fn rotate2d(board: &Board, set: &CellSet) -> Result<(Board, CellSet)> {
    if board.dimension() != 2 {
        return Err(Error::InvalidParameters("rotation needs a planar board".into()));
    }
    let (swapped_board, swapped) = permute_axes(board, set, &[1, 0])?;
    let turned = reflect(&swapped_board, &swapped, 1)?;
    Ok((swapped_board, turned))
}
