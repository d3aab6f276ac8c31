//! Block assembly: a percolating set of the modified process on `[n]^d`
//! chooses which boxes of a product partition receive their own percolating
//! set.

use super::families::perfect_3_3_block;
use super::{Block, Construction};
use crate::board::{percolates, Board, BoardKind, Rule};
use crate::bounds::perimeter_lower_bound;
use crate::error::{Error, Result};

/// Places `blocks[k]` in the box of the partition indexed by `template[k]`.
/// Row `i` of `splits` lists the interval lengths along axis `i`. The
/// template must percolate under the modified process on `[n]^d` and each
/// block must percolate under the `d`-neighbour process in its box.
pub fn recursive_assemble(
    template: &[Vec<usize>],
    splits: &[Vec<usize>],
    blocks: &[Construction],
) -> Result<Construction> {
    let d = splits.len();
    let n = splits.first().map_or(0, Vec::len);
    if d == 0 || n == 0 || splits.iter().any(|row| row.len() != n || row.contains(&0)) {
        return Err(Error::InvalidParameters(
            "splits must be a d x n matrix of positive integers".into(),
        ));
    }
    if template.len() != blocks.len() {
        return Err(Error::InvalidParameters(format!(
            "{} template cells but {} blocks",
            template.len(),
            blocks.len()
        )));
    }
    let cube = Board::open_grid(&vec![n; d])?;
    let template_set = cube.set_from_coords(template)?;
    if template_set.len() != template.len() {
        return Err(Error::InvalidParameters("template cells repeat".into()));
    }
    if !percolates(&cube, Rule::Modified, &template_set)? {
        return Err(Error::VerificationFailed(
            "template does not percolate under the modified process".into(),
        ));
    }
    let starts: Vec<Vec<usize>> = splits
        .iter()
        .map(|row| {
            row.iter()
                .scan(0, |acc, &len| {
                    let start = *acc;
                    *acc += len;
                    Some(start)
                })
                .collect()
        })
        .collect();
    let dims: Vec<usize> = splits.iter().map(|row| row.iter().sum()).collect();
    let board = Board::open_grid(&dims)?;
    let mut seeds = board.empty_set();
    let mut expected = 0;
    for (x, block) in template.iter().zip(blocks) {
        let want: Vec<usize> = (0..d).map(|i| splits[i][x[i] - 1]).collect();
        if block.board.kind() != BoardKind::OpenGrid || block.board.dims() != want.as_slice() {
            return Err(Error::InvalidParameters(format!(
                "block for {x:?} has dims {:?}, expected {want:?}",
                block.board.dims()
            )));
        }
        if !percolates(&block.board, Rule::Threshold(d as u32), &block.seeds)? {
            return Err(Error::VerificationFailed(format!("block for {x:?} does not percolate")));
        }
        for c in block.cells() {
            let shifted: Vec<usize> = (0..d).map(|i| c[i] + starts[i][x[i] - 1]).collect();
            seeds.insert(board.index_of(&shifted)?);
        }
        expected += block.len();
    }
    debug_assert_eq!(seeds.len(), expected);
    Ok(Construction { board, seeds })
}

/// The `[2]^3` template with the row `i` of `splits` giving `(p_i, q_i)`:
/// boxes `(p1,p2,p3)`, `(p1,q2,q3)`, `(q1,p2,q3)`, `(q1,q2,p3)` in that order.
pub(crate) fn assemble2(splits: [[usize; 2]; 3], blocks: [&Block; 4]) -> Block {
    let [[p1, q1], [p2, q2], [p3, q3]] = splits;
    let mut out = Block::new([p1 + q1, p2 + q2, p3 + q3]);
    let offsets = [[0, 0, 0], [0, p2, p3], [p1, 0, p3], [p1, p2, 0]];
    let want = [[p1, p2, p3], [p1, q2, q3], [q1, p2, q3], [q1, q2, p3]];
    for k in 0..4 {
        debug_assert_eq!(blocks[k].dims, want[k]);
        out.paste(blocks[k], offsets[k]);
    }
    out
}

/// Grows an optimal set on `[a1] x [a2] x [a3]` to one on
/// `[a1+3] x [a2+3] x [a3+3]` using perfect `(a, 3, 3)` blocks.
pub fn add3(base: &Construction) -> Result<Construction> {
    let dims = base.board.dims();
    if base.board.kind() != BoardKind::OpenGrid || dims.len() != 3 || dims.contains(&2) {
        return Err(Error::InvalidParameters(format!(
            "add3 needs a 3D open grid with no side of length 2, got {dims:?}"
        )));
    }
    let wide: Vec<u64> = dims.iter().map(|&a| a as u64).collect();
    if base.len() as u64 != perimeter_lower_bound(&wide)? {
        return Err(Error::InvalidParameters("add3 needs a set of optimal size".into()));
    }
    if !percolates(&base.board, Rule::Threshold(3), &base.seeds)? {
        return Err(Error::VerificationFailed("base set does not percolate".into()));
    }
    let block = Block::from_set(&base.board, &base.seeds);
    add3_block(&block)?.into_construction()
}

pub(crate) fn add3_block(base: &Block) -> Result<Block> {
    let [a1, a2, a3] = base.dims;
    let b1 = perfect_3_3_block(a1)?.oriented([a1, 3, 3]);
    let b2 = perfect_3_3_block(a2)?.oriented([3, a2, 3]);
    let b3 = perfect_3_3_block(a3)?.oriented([3, 3, a3]);
    Ok(assemble2([[a1, 3], [a2, 3], [a3, 3]], [base, &b1, &b2, &b3]))
}
