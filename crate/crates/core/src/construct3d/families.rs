//! Perfect constructions for thin boxes `(2, b, c)` and `(3, b, c)`, mostly
//! obtained by folding a planar construction into the box.

use super::embedding::LocalEmbedding;
use super::{Block, Construction};
use crate::board::{Board, CellSet};
use crate::construct2d::{cut_corner_patch, fatter_patch, jagged_patch, longer_corner2_patch, purina_patch};
use crate::error::{Error, Result};

fn require(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameters(what()))
    }
}

/// A planar seed set, its folding map and the cells added in the target.
#[derive(Debug, Clone)]
pub struct Fold {
    pub embedding: LocalEmbedding,
    pub seeds: CellSet,
    pub extra: Vec<[usize; 3]>,
}

impl Fold {
    fn new(
        rows: usize,
        cols: usize,
        keep: impl Fn(usize, usize) -> bool,
        target: [usize; 3],
        map: impl Fn(usize, usize) -> [usize; 3],
        seeds: &[[usize; 2]],
        extra: Vec<[usize; 3]>,
    ) -> Result<Fold> {
        let retained: Vec<[usize; 2]> = (1..=rows)
            .flat_map(|i| (1..=cols).map(move |j| [i, j]))
            .filter(|&[i, j]| keep(i, j))
            .collect();
        let source = Board::masked(rows, cols, &retained)?;
        let seeds = source.set_from_coords(seeds)?;
        let embedding = LocalEmbedding::new(source, Board::open_grid(&target)?, map)?;
        Ok(Fold {
            embedding,
            seeds,
            extra,
        })
    }

    pub(crate) fn block(&self) -> Result<Block> {
        let target = self.embedding.target();
        let mut set = self.embedding.apply(&self.seeds)?;
        for c in &self.extra {
            set.insert(target.index_of(c)?);
        }
        Ok(Block::from_set(target, &set))
    }
}

/// Folds a seed set on `[2] x [6k]` shaped graph into `[2] x [6k] x [3]`.
fn fold_2_3_even(k: usize) -> Result<Fold> {
    let n = 6 * k;
    let keep = move |i: usize, c: usize| match i {
        1 => c < n,
        2 => (2..n).contains(&c),
        3 => (4..=n + 1).contains(&c),
        _ => c >= 4,
    };
    let map = move |i: usize, c: usize| match (i, c) {
        (1, 1) => [2, 1, 1],
        (1, _) => [1, c - 1, 1],
        (2, _) => [1, c - 1, 2],
        (3, _) => [2, c - 1, 2],
        (_, c) if c == n + 2 => [1, n, 3],
        _ => [2, c - 1, 3],
    };
    let mut seeds = vec![[1, 1], [1, 3], [2, 2]];
    let tail = [[1, 5], [2, 4], [3, 5], [3, 7], [4, 4], [4, 6], [4, 8]];
    seeds.extend(tail.iter().map(|&[i, c]| [i, c + n - 6]));
    if k >= 2 {
        let block = fatter_patch(n - 7, 4).transpose();
        seeds.extend(block.cells.iter().map(|&[i, c]| [i, c + 3]));
        seeds.push([1, n - 3]);
    }
    Fold::new(4, n + 2, keep, [2, n, 3], map, &seeds, vec![[1, n, 1], [2, 1, 3]])
}

/// Folds into `[3] x [6k+3] x [2]`.
fn fold_2_3_odd(k: usize) -> Result<Fold> {
    let n = 6 * k + 3;
    let keep = move |i: usize, c: usize| match i {
        1 => (3..=n - 2).contains(&c),
        2 | 4 => (2..=n + 1).contains(&c),
        3 => true,
        _ => c == n,
    };
    let map = move |i: usize, c: usize| match (i, c) {
        (1, _) => [1, c - 1, 2],
        (2, _) => [1, c - 1, 1],
        (3, 1) => [2, 1, 2],
        (3, c) if c == n + 2 => [2, n, 2],
        (3, _) => [2, c - 1, 1],
        (4, _) => [3, c - 1, 1],
        _ => [3, n - 1, 2],
    };
    let mut seeds = vec![
        [2, 2],
        [2, n + 1],
        [3, 1],
        [3, n + 2],
        [4, 2],
        [4, n + 1],
        [5, n],
        [1, 3],
    ];
    let block = fatter_patch(n - 4, 4).transpose();
    seeds.extend(block.cells.iter().map(|&[i, c]| [i, c + 3]));
    Fold::new(5, n + 2, keep, [3, n, 2], map, &seeds, Vec::new())
}

/// Perfect set in `[2] x [3] x [a3]`, `a3 = 0 mod 3`, `a3 >= 6`.
pub(crate) fn perfect_2_3_block(a3: usize) -> Result<Block> {
    require(a3 >= 6 && a3 % 3 == 0, || {
        format!("(2,3,a3) needs a3 = 0 mod 3, a3 >= 6, got {a3}")
    })?;
    if a3 % 6 == 0 {
        Ok(fold_2_3_even(a3 / 6)?.block()?.oriented([2, 3, a3]))
    } else {
        Ok(fold_2_3_odd(a3 / 6)?.block()?.oriented([2, 3, a3]))
    }
}

pub fn perfect_2_3(a3: usize) -> Result<Construction> {
    perfect_2_3_block(a3)?.into_construction()
}

/// Folds into `[a2] x [a3] x [2]` with `a2 = 5 mod 6`, `a3 = 2 mod 6`.
fn fold_2_bc_two(a2: usize, a3: usize) -> Result<Fold> {
    let keep = move |i: usize, c: usize| match c {
        1 => i == a2 + 1,
        c if c == a3 + 2 => i + 4 <= a2,
        _ => true,
    };
    let map = move |i: usize, c: usize| {
        if c == 1 {
            return [a2, 1, 1];
        }
        let j = c - 1;
        if i + 4 <= a2 {
            if j <= a3 {
                [i, j, 1]
            } else {
                [i, a3, 2]
            }
        } else if i + 2 <= a2 {
            [i, j, 1]
        } else {
            [i - 1, j, 2]
        }
    };
    let mut seeds: Vec<[usize; 2]> = longer_corner2_patch(a2 + 1, a3 + 1)
        .cells
        .iter()
        .map(|&[i, j]| [i, j + 1])
        .collect();
    seeds.push([a2 + 1, 1]);
    Fold::new(a2 + 1, a3 + 2, keep, [a2, a3, 2], map, &seeds, Vec::new())
}

/// Folds into `[a2] x [a3] x [2]` with `a2 = 0 mod 6`, `a3 = 3 mod 6`.
fn fold_2_bc_zero(a2: usize, a3: usize) -> Result<Fold> {
    let rows = a2 + 1;
    let keep = move |i: usize, j: usize| !((j == 1 && i + 5 >= rows) || (j == 2 && i + 2 >= rows));
    let map = move |i: usize, j: usize| {
        if i < a2 {
            [i, j + 2, 1]
        } else {
            [i - 1, j + 2, 2]
        }
    };
    let seeds = jagged_patch(rows, a3 - 2).cells;
    let mut extra: Vec<[usize; 3]> = (1..=a2 / 2).map(|i| [2 * i - 1, 1, 1]).collect();
    extra.extend((1..a2 / 2).map(|i| [2 * i - 1, 2, 2]));
    extra.extend([[a2, 2, 1], [a2 - 1, 3, 1], [a2 - 2, 1, 2], [a2, 1, 2], [a2, 3, 2]]);
    Fold::new(rows, a3 - 2, keep, [a2, a3, 2], map, &seeds, extra)
}

/// Perfect set in `[2] x [a2] x [a3]` for `a2, a3` of opposite parity, both
/// `2 mod 3` and at least 5, or both `0 mod 3` and at least 6.
pub(crate) fn perfect_2_bc_block(a2: usize, a3: usize) -> Result<Block> {
    require(a2 % 2 != a3 % 2, || {
        format!("(2,a2,a3) needs opposite parity, got ({a2},{a3})")
    })?;
    let (lo, hi) = if a2 % 2 == 1 { (a2, a3) } else { (a3, a2) };
    let fold = match a2 % 3 {
        2 if a3 % 3 == 2 && a2 >= 5 && a3 >= 5 => fold_2_bc_two(lo, hi)?,
        0 if a3 % 3 == 0 && a2 >= 6 && a3 >= 6 => fold_2_bc_zero(hi, lo)?,
        _ => {
            return Err(Error::InvalidParameters(format!(
                "(2,a2,a3) needs a2 = a3 = 2 mod 3 (>= 5) or 0 mod 3 (>= 6), got ({a2},{a3})"
            )))
        }
    };
    Ok(fold.block()?.oriented([2, a2, a3]))
}

pub fn perfect_2_bc(a2: usize, a3: usize) -> Result<Construction> {
    perfect_2_bc_block(a2, a3)?.into_construction()
}

fn explicit_3_3_even(a3: usize) -> Block {
    let mut b = Block::new([3, a3, 3]);
    b.cells.extend([
        [1, 1, 1],
        [3, 1, 1],
        [2, 3, 1],
        [2, 1, 2],
        [1, 2, 2],
        [3, 1, 3],
        [2, 2, 3],
        [3, 3, 3],
    ]);
    for i in 1..=(a3 - 4) / 2 {
        b.cells.extend([
            [1, 2 + 2 * i, 1],
            [2, 2 + 2 * i, 3],
            [2, 3 + 2 * i, 1],
            [3, 3 + 2 * i, 3],
        ]);
    }
    b.cells.extend([[1, a3, 1], [3, a3, 2], [1, a3, 3]]);
    b
}

/// Perfect set in `[3] x [3] x [a3]` for every `a3 != 2`.
pub(crate) fn perfect_3_3_block(a3: usize) -> Result<Block> {
    require(a3 >= 1 && a3 != 2, || {
        format!("(3,3,a3) needs a3 >= 1, a3 != 2, got {a3}")
    })?;
    let block = match a3 {
        1 => {
            let p = purina_patch(2);
            let mut b = Block::new([3, 3, 1]);
            b.cells.extend(p.cells.iter().map(|&[i, j]| [i, j, 1]));
            b
        }
        a if a % 2 == 0 => explicit_3_3_even(a),
        a => return Ok(perfect_3_odd_block(a, 3)?.oriented([3, 3, a])),
    };
    Ok(block.oriented([3, 3, a3]))
}

pub fn perfect_3_3(a3: usize) -> Result<Construction> {
    perfect_3_3_block(a3)?.into_construction()
}

/// Folds into `[4] x [a3] x [3]`; the map sends two seeds to one cell.
fn fold_3_4(a3: usize) -> Result<Fold> {
    let cols = a3 - 1;
    let keep = move |i: usize, c: usize| !matches!((i, c), (1, 1) | (3, 1)) && !(i == 6 && c == cols);
    let map = move |i: usize, c: usize| match (i, c) {
        (1, _) => [1, c - 1, 1],
        (2 | 4, 1) => [2, 1, 2],
        (2, _) => [1, c - 1, 2],
        (3, _) => [1, c - 1, 3],
        (_, 1) => [i - 2, 1, 2],
        _ => [i - 2, c - 1, 3],
    };
    let seeds = fatter_patch(cols, 6).transpose().cells;
    let extra = vec![
        [1, a3, 1],
        [2, a3 - 1, 1],
        [3, a3, 1],
        [4, a3 - 1, 1],
        [4, a3, 2],
        [3, a3, 3],
    ];
    Fold::new(6, cols, keep, [4, a3, 3], map, &seeds, extra)
}

/// Perfect set in `[3] x [4] x [a3]`, `a3 = 3 mod 6`.
pub(crate) fn perfect_3_4_block(a3: usize) -> Result<Block> {
    require(a3 % 6 == 3, || format!("(3,4,a3) needs a3 = 3 mod 6, got {a3}"))?;
    if a3 == 3 {
        return Ok(perfect_3_3_block(4)?.oriented([3, 4, 3]));
    }
    Ok(fold_3_4(a3)?.block()?.oriented([3, 4, a3]))
}

pub fn perfect_3_4(a3: usize) -> Result<Construction> {
    perfect_3_4_block(a3)?.into_construction()
}

fn explicit_3_6_even(a3: usize) -> Block {
    let mut b = Block::new([6, a3, 3]);
    b.cells
        .extend([[2, 1, 1], [4, 1, 1], [6, 1, 1], [1, 1, 2], [3, 1, 2], [6, 1, 3]]);
    for i in 1..=(a3 - 2) / 2 {
        let (e, o) = (2 * i, 2 * i + 1);
        b.cells
            .extend([[1, e, 1], [2, o, 1], [4, e, 2], [3, o, 2], [5, e, 3], [6, o, 3]]);
    }
    b.cells
        .extend([[1, a3, 1], [4, a3, 2], [6, a3, 2], [1, a3, 3], [3, a3, 3], [5, a3, 3]]);
    b
}

fn explicit_3_6_odd(a3: usize) -> Block {
    let mut b = Block::new([6, a3, 3]);
    b.cells
        .extend([[2, 1, 1], [6, 1, 1], [1, 1, 2], [3, 1, 2], [5, 1, 2], [4, 1, 3]]);
    for i in 1..=(a3 - 3) / 2 {
        let (e, o) = (2 * i, 2 * i + 1);
        b.cells
            .extend([[1, e, 1], [2, o, 1], [6, e, 2], [5, o, 2], [3, e, 3], [4, o, 3]]);
    }
    b.cells.extend([
        [2, a3, 1],
        [4, a3, 1],
        [6, a3 - 1, 2],
        [1, a3, 2],
        [5, a3, 2],
        [1, a3 - 1, 3],
        [3, a3 - 1, 3],
        [2, a3, 3],
        [6, a3, 3],
    ]);
    b
}

/// Perfect set in `[3] x [6] x [a3]` for every `a3 >= 2`.
pub(crate) fn perfect_3_6_block(a3: usize) -> Result<Block> {
    require(a3 >= 2, || format!("(3,6,a3) needs a3 >= 2, got {a3}"))?;
    let block = match a3 {
        2 => perfect_2_3_block(6)?,
        3 => perfect_3_3_block(6)?,
        a if a % 2 == 0 => explicit_3_6_even(a),
        a => explicit_3_6_odd(a),
    };
    Ok(block.oriented([3, 6, a3]))
}

pub fn perfect_3_6(a3: usize) -> Result<Construction> {
    perfect_3_6_block(a3)?.into_construction()
}

/// Folds a cut-corner seed set into `[a2] x [a3] x [3]`.
fn fold_3_odd(a2: usize, a3: usize) -> Result<Fold> {
    let keep = move |x: usize, y: usize| x + y <= a2 + a3 && (x, y) != (a2, a3);
    let map = move |x: usize, y: usize| {
        if x < a2 {
            [x, y.min(a3), 1 + y.saturating_sub(a3)]
        } else {
            [a2, y, x - a2 + 1]
        }
    };
    let seeds = cut_corner_patch(a2 + 2, a3 + 2).cells;
    Fold::new(a2 + 2, a3 + 2, keep, [a2, a3, 3], map, &seeds, vec![[a2, a3, 3]])
}

/// Perfect set in `[3] x [a2] x [a3]`, `a2` odd and at least 3, `a3 = 3 mod 6`.
pub(crate) fn perfect_3_odd_block(a2: usize, a3: usize) -> Result<Block> {
    require(a2 >= 3 && a2 % 2 == 1 && a3 % 6 == 3, || {
        format!("(3,a2,a3) needs odd a2 >= 3 and a3 = 3 mod 6, got ({a2},{a3})")
    })?;
    Ok(fold_3_odd(a2, a3)?.block()?.oriented([3, a2, a3]))
}

pub fn perfect_3_odd(a2: usize, a3: usize) -> Result<Construction> {
    perfect_3_odd_block(a2, a3)?.into_construction()
}

/// Every fold the families use for target boxes with sides up to `max`, for
/// checking the embeddings directly.
pub fn folds_up_to(max: usize) -> Vec<Fold> {
    let mut out = Vec::new();
    for k in 1..=max / 6 {
        out.push(fold_2_3_even(k).unwrap());
    }
    for k in 1..=(max - 3) / 6 {
        out.push(fold_2_3_odd(k).unwrap());
    }
    for a2 in (5..=max).step_by(6) {
        for a3 in (8..=max).step_by(6) {
            out.push(fold_2_bc_two(a2, a3).unwrap());
        }
    }
    for a2 in (6..=max).step_by(6) {
        for a3 in (9..=max).step_by(6) {
            out.push(fold_2_bc_zero(a2, a3).unwrap());
        }
    }
    for a3 in (9..=max).step_by(6) {
        out.push(fold_3_4(a3).unwrap());
        for a2 in (3..=max).step_by(2) {
            out.push(fold_3_odd(a2, a3).unwrap());
        }
    }
    out
}
