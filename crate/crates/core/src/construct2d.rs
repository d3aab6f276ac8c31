//! Planar building blocks for the 3-neighbour process.
//!
//! Each generator returns a seed set in `[a1] x [a2]` together with the cells
//! its closure misses. The shapes are later folded into three dimensions.

use crate::board::{Board, CellSet};
use crate::error::{Error, Result};

/// Cells of a planar shape inside a `rows x cols` box, 1-indexed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Patch {
    pub rows: usize,
    pub cols: usize,
    pub cells: Vec<[usize; 2]>,
}

impl Patch {
    fn new(rows: usize, cols: usize) -> Patch {
        Patch {
            rows,
            cols,
            cells: Vec::new(),
        }
    }

    pub fn transpose(mut self) -> Patch {
        std::mem::swap(&mut self.rows, &mut self.cols);
        self.cells.iter_mut().for_each(|c| c.swap(0, 1));
        self
    }

    pub fn flip_rows(mut self) -> Patch {
        let rows = self.rows;
        self.cells.iter_mut().for_each(|c| c[0] = rows + 1 - c[0]);
        self
    }

    pub fn flip_cols(mut self) -> Patch {
        let cols = self.cols;
        self.cells.iter_mut().for_each(|c| c[1] = cols + 1 - c[1]);
        self
    }

    /// Copies `other` into this patch with its top-left cell at
    /// `(1 + row_offset, 1 + col_offset)`.
    fn paste(&mut self, other: &Patch, row_offset: usize, col_offset: usize) {
        debug_assert!(other.rows + row_offset <= self.rows && other.cols + col_offset <= self.cols);
        self.cells
            .extend(other.cells.iter().map(|&[i, j]| [i + row_offset, j + col_offset]));
    }

    fn push(&mut self, i: usize, j: usize) {
        self.cells.push([i, j]);
    }
}

/// A seed set on a planar board and the cells its closure leaves healthy.
#[derive(Debug, Clone)]
pub struct PartialConstruction {
    pub board: Board,
    pub seeds: CellSet,
    pub expected_closure: CellSet,
    pub leftover: Vec<Vec<usize>>,
}

impl PartialConstruction {
    fn assemble(patch: Patch, mut leftover: Vec<[usize; 2]>) -> Result<PartialConstruction> {
        let board = Board::open_grid(&[patch.rows, patch.cols])?;
        let seeds = board.set_from_coords(&patch.cells)?;
        debug_assert_eq!(seeds.len(), patch.cells.len(), "duplicate seed cells");
        leftover.sort_unstable();
        leftover.dedup();
        let mut expected_closure = board.full_set();
        for c in &leftover {
            expected_closure.remove(board.index_of(c)?);
        }
        Ok(PartialConstruction {
            board,
            seeds,
            expected_closure,
            leftover: leftover.iter().map(|c| c.to_vec()).collect(),
        })
    }
}

fn require(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameters(what()))
    }
}

/// Odd vertices of `[2] x [a2]`.
pub(crate) fn skinny_patch(a2: usize) -> Patch {
    let mut p = Patch::new(2, a2);
    for j in 1..=a2 {
        p.push(if j % 2 == 1 { 2 } else { 1 }, j);
    }
    p
}

/// Strips of height 3 stacked on a skinny base; `a1 = 2 mod 3`, `a2` even.
pub(crate) fn fatter_patch(a1: usize, a2: usize) -> Patch {
    if a1 == 2 {
        return skinny_patch(a2);
    }
    let s = if a1 % 2 == 1 { 1 } else { a2 };
    let t = if s == 1 { a2 } else { 1 };
    let mut p = Patch::new(a1, a2);
    p.paste(&fatter_patch(a1 - 3, a2), 0, 0);
    p.push(a1 - 2, t);
    let base = if a1 % 2 == 1 {
        skinny_patch(a2).flip_rows()
    } else {
        skinny_patch(a2)
    };
    p.paste(&base, a1 - 2, 0);
    p
}

pub(crate) fn other_fatter_patch(a1: usize, a2: usize) -> Patch {
    let mut p = Patch::new(a1, a2);
    p.paste(&fatter_patch(a1, a2 - 3), 0, 0);
    p.paste(&skinny_patch(a1).transpose().flip_cols(), 0, a2 - 2);
    p.push(a1, a2 - 2);
    p
}

pub(crate) fn longer_corner_patch(a1: usize, a2: usize) -> Patch {
    let mut p = Patch::new(a1, a2);
    if a1 == 6 {
        p.paste(&fatter_patch(a2 - 1, 6).transpose(), 0, 0);
        p.push(1, a2);
    } else {
        p.paste(&fatter_patch(a1 - 7, a2), 0, 0);
        p.push(a1 - 6, 1);
        p.paste(&longer_corner_patch(6, a2), a1 - 6, 0);
    }
    p
}

pub(crate) fn longer_corner2_patch(a1: usize, a2: usize) -> Patch {
    let mut p = Patch::new(a1, a2);
    p.paste(&skinny_patch(a1).transpose().flip_rows(), 0, 0);
    p.push(1, 3);
    p.paste(&longer_corner_patch(a1, a2 - 3), 0, 3);
    p
}

pub(crate) fn jagged_patch(a1: usize, a2: usize) -> Patch {
    let mut p = Patch::new(a1, a2);
    p.paste(&other_fatter_patch(a1 - 5, a2).flip_rows(), 0, 0);
    p.paste(&fatter_patch(a2 - 2, 4).transpose(), a1 - 4, 2);
    p.push(a1 - 3, 2);
    p.push(a1 - 4, a2);
    p
}

pub(crate) fn cut_corner_patch(a1: usize, a2: usize) -> Patch {
    let mut p = Patch::new(a1, a2);
    p.paste(&fatter_patch(a2, a1 - 3).transpose().flip_rows(), 0, 0);
    p.push(a1 - 2, 1);
    p.paste(&skinny_patch(a2 - 3), a1 - 2, 0);
    p
}

pub(crate) fn purina_patch(k: u32) -> Patch {
    if k == 1 {
        let mut p = Patch::new(1, 1);
        p.push(1, 1);
        return p;
    }
    let n = (1usize << k) - 1;
    let half = (1usize << (k - 1)) - 1;
    let quarter = purina_patch(k - 1);
    let mut p = Patch::new(n, n);
    for (dr, dc) in [(0, 0), (0, half + 1), (half + 1, 0), (half + 1, half + 1)] {
        p.paste(&quarter, dr, dc);
    }
    p.push(half + 1, half + 1);
    p
}

/// Odd vertices of `[2] x [a2]`; the closure misses `(1, 1)` and `(s, a2)`
/// with `s = 2 - a2 mod 2`.
pub fn skinny(a2: usize) -> Result<PartialConstruction> {
    require(a2 >= 2, || format!("skinny needs a2 >= 2, got {a2}"))?;
    let s = if a2 % 2 == 1 { 1 } else { 2 };
    PartialConstruction::assemble(skinny_patch(a2), vec![[1, 1], [s, a2]])
}

/// `a1 = 2 mod 3`, `a2` even; the closure misses `(1, 1)` and `(a1, s)` with
/// `s = 1` for odd `a1` and `s = a2` otherwise.
pub fn fatter(a1: usize, a2: usize) -> Result<PartialConstruction> {
    require(a1 >= 2 && a1 % 3 == 2 && a2 >= 2 && a2 % 2 == 0, || {
        format!("fatter needs a1 = 2 mod 3 and a2 >= 2 even, got ({a1}, {a2})")
    })?;
    let s = if a1 % 2 == 1 { 1 } else { a2 };
    PartialConstruction::assemble(fatter_patch(a1, a2), vec![[1, 1], [a1, s]])
}

/// `a1 = 2 mod 6`, `a2 >= 5` odd; the closure misses `(1, 1)` and `(1, a2)`.
pub fn other_fatter(a1: usize, a2: usize) -> Result<PartialConstruction> {
    require(a1 % 6 == 2 && a2 >= 5 && a2 % 2 == 1, || {
        format!("other_fatter needs a1 = 2 mod 6 and a2 >= 5 odd, got ({a1}, {a2})")
    })?;
    PartialConstruction::assemble(other_fatter_patch(a1, a2), vec![[1, 1], [1, a2]])
}

fn last_column_five(a1: usize, a2: usize) -> impl Iterator<Item = [usize; 2]> {
    (a1 - 4..=a1).map(move |i| [i, a2])
}

/// `a1 = a2 = 0 mod 6`; the closure misses `(1, 1)` and the last five cells
/// of column `a2`.
pub fn longer_corner(a1: usize, a2: usize) -> Result<PartialConstruction> {
    require(a1 >= 6 && a2 >= 6 && a1 % 6 == 0 && a2 % 6 == 0, || {
        format!("longer_corner needs a1, a2 positive multiples of 6, got ({a1}, {a2})")
    })?;
    let leftover = std::iter::once([1, 1]).chain(last_column_five(a1, a2)).collect();
    PartialConstruction::assemble(longer_corner_patch(a1, a2), leftover)
}

/// `a1 = 0 mod 6`, `a2 = 3 mod 6`, `a2 >= 9`; the closure misses `(a1, 1)` and
/// the last five cells of column `a2`.
pub fn longer_corner2(a1: usize, a2: usize) -> Result<PartialConstruction> {
    require(a1 >= 6 && a1 % 6 == 0 && a2 >= 9 && a2 % 6 == 3, || {
        format!("longer_corner2 needs a1 = 0 mod 6 and a2 >= 9, a2 = 3 mod 6, got ({a1}, {a2})")
    })?;
    let leftover = std::iter::once([a1, 1]).chain(last_column_five(a1, a2)).collect();
    PartialConstruction::assemble(longer_corner2_patch(a1, a2), leftover)
}

/// `a1 = a2 = 1 mod 6`, both at least 7; the closure misses six cells of the
/// first column and three of the second, at the bottom.
pub fn jagged(a1: usize, a2: usize) -> Result<PartialConstruction> {
    require(a1 >= 7 && a2 >= 7 && a1 % 6 == 1 && a2 % 6 == 1, || {
        format!("jagged needs a1, a2 >= 7 with a1 = a2 = 1 mod 6, got ({a1}, {a2})")
    })?;
    let leftover = (a1 - 5..=a1)
        .map(|i| [i, 1])
        .chain((a1 - 2..=a1).map(|i| [i, 2]))
        .collect();
    PartialConstruction::assemble(jagged_patch(a1, a2), leftover)
}

/// `a1 >= 5` odd, `a2 = 5 mod 6`; the closure misses the staircase
/// `x + y >= a1 + a2 - 3` and `(a1 - 2, a2 - 2)`.
pub fn cut_corner(a1: usize, a2: usize) -> Result<PartialConstruction> {
    require(a1 >= 5 && a1 % 2 == 1 && a2 >= 5 && a2 % 6 == 5, || {
        format!("cut_corner needs a1 >= 5 odd and a2 = 5 mod 6, got ({a1}, {a2})")
    })?;
    let mut leftover = vec![[a1 - 2, a2 - 2]];
    for x in a1 - 3..=a1 {
        for y in a2 - 3..=a2 {
            if x + y >= a1 + a2 - 3 {
                leftover.push([x, y]);
            }
        }
    }
    PartialConstruction::assemble(cut_corner_patch(a1, a2), leftover)
}

/// Optimal percolating set of the `(2^k - 1) x (2^k - 1)` grid: four copies
/// of the previous level around the centre cell.
pub fn purina(k: u32) -> Result<PartialConstruction> {
    require((1..=15).contains(&k), || format!("purina needs 1 <= k <= 15, got {k}"))?;
    PartialConstruction::assemble(purina_patch(k), Vec::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::{closure, percolates, Rule};

    const R3: Rule = Rule::Threshold(3);

    fn check(pc: &PartialConstruction, size: usize) {
        assert_eq!(pc.seeds.len(), size, "size on {:?}", pc.board.dims());
        let cl = closure(&pc.board, R3, &pc.seeds).unwrap();
        assert!(cl == pc.expected_closure, "closure on {:?}", pc.board.dims());
    }

    #[test]
    fn skinny_examples() {
        let s = skinny(2).unwrap();
        assert_eq!(s.board.coords_in(&s.seeds), vec![vec![1, 2], vec![2, 1]]);
        assert_eq!(s.leftover, vec![vec![1, 1], vec![2, 2]]);
        assert_eq!(skinny(3).unwrap().leftover, vec![vec![1, 1], vec![1, 3]]);
        check(&skinny(5).unwrap(), 5);
        assert!(skinny(1).is_err());
    }

    #[test]
    fn small_cases() {
        let f = fatter(5, 4).unwrap();
        check(&f, 9);
        assert_eq!(f.leftover, vec![vec![1, 1], vec![5, 1]]);
        check(&fatter(2, 4).unwrap(), 4);
        let f = fatter(8, 10).unwrap();
        check(&f, 32);
        assert_eq!(f.leftover, vec![vec![1, 1], vec![8, 10]]);
        check(&other_fatter(2, 5).unwrap(), 5);
        check(&other_fatter(8, 5).unwrap(), 17);
        check(&other_fatter(2, 7).unwrap(), 7);
        check(&longer_corner(6, 12).unwrap(), 28);
        check(&longer_corner(12, 12).unwrap(), 54);
        check(&longer_corner(6, 6).unwrap(), 14);
        check(&longer_corner2(6, 9).unwrap(), 21);
        check(&longer_corner2(12, 9).unwrap(), 41);
        check(&longer_corner2(6, 15).unwrap(), 35);
        check(&jagged(7, 13).unwrap(), 34);
        check(&jagged(7, 7).unwrap(), 18);
        check(&jagged(13, 7).unwrap(), 34);
        let c = cut_corner(7, 11).unwrap();
        check(&c, 28);
        assert_eq!(c.leftover.len(), 11);
        check(&cut_corner(5, 5).unwrap(), 8);
        check(&cut_corner(9, 11).unwrap(), 36);
    }

    #[test]
    fn purina_examples() {
        let p = purina(1).unwrap();
        assert_eq!(p.board.coords_in(&p.seeds), vec![vec![1, 1]]);
        let p = purina(2).unwrap();
        assert_eq!(
            p.board.coords_in(&p.seeds),
            vec![vec![1, 1], vec![1, 3], vec![2, 2], vec![3, 1], vec![3, 3]]
        );
        let p = purina(3).unwrap();
        assert_eq!(p.seeds.len(), 21);
        assert!(percolates(&p.board, R3, &p.seeds).unwrap());
        let p = purina(4).unwrap();
        assert_eq!(p.seeds.len(), (15 * 15 + 30) / 3);
        assert!(percolates(&p.board, R3, &p.seeds).unwrap());
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(fatter(4, 4).is_err());
        assert!(fatter(5, 3).is_err());
        assert!(other_fatter(8, 6).is_err());
        assert!(longer_corner(6, 9).is_err());
        assert!(longer_corner2(6, 3).is_err());
        assert!(jagged(7, 1).is_err());
        assert!(cut_corner(6, 5).is_err());
        assert!(purina(0).is_err());
    }

    #[test]
    fn sweep_up_to_forty() {
        let n = 40;
        for a2 in 2..=n {
            let s = skinny(a2).unwrap();
            check(&s, a2);
        }
        for a1 in 2..=n {
            for a2 in 2..=n {
                if let Ok(pc) = fatter(a1, a2) {
                    check(&pc, (a1 * a2 + a1 + a2 - 2) / 3);
                }
                if let Ok(pc) = other_fatter(a1, a2) {
                    check(&pc, (a1 * a2 + a1 + a2 - 2) / 3);
                }
                if let Ok(pc) = longer_corner(a1, a2) {
                    check(&pc, (a1 * a2 + a1 + a2 - 6) / 3);
                }
                if let Ok(pc) = longer_corner2(a1, a2) {
                    check(&pc, (a1 * a2 + a1 + a2 - 6) / 3);
                }
                if let Ok(pc) = jagged(a1, a2) {
                    check(&pc, (a1 * a2 + a1 + a2 - 9) / 3);
                }
                if let Ok(pc) = cut_corner(a1, a2) {
                    check(&pc, (a1 * a2 + a1 + a2 - 11) / 3);
                }
            }
        }
    }

    #[test]
    fn only_purina_percolates() {
        let samples = [
            skinny(6).unwrap(),
            fatter(11, 8).unwrap(),
            other_fatter(14, 9).unwrap(),
            longer_corner(18, 12).unwrap(),
            longer_corner2(12, 15).unwrap(),
            jagged(13, 13).unwrap(),
            cut_corner(11, 17).unwrap(),
        ];
        for pc in samples {
            assert!(!percolates(&pc.board, R3, &pc.seeds).unwrap());
        }
    }
}
