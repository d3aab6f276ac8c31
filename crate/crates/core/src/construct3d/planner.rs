//! Chooses a construction for each box and builds it.
//!
//! Boxes are resolved in sorted order `a <= b <= c`; the requested axis order
//! is restored at the end. Every step either uses a direct family, a stored
//! set, or splits the box into four sub-boxes resolved recursively.

use super::assemble::assemble2;
use super::catalog::{catalog_block, entry_for};
use super::families::{
    perfect_2_3_block, perfect_2_bc_block, perfect_3_3_block, perfect_3_4_block, perfect_3_6_block, perfect_3_odd_block,
};
use super::{Block, Construction};
use crate::board::Board;
use crate::construct2d::purina_patch;
use crate::error::{Error, Result};
use crate::search::modified_latin_cube;
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

type Split = [[usize; 2]; 3];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Step {
    Single,
    Purina(u32),
    Catalog(&'static str),
    Cube(usize),
    TwoThree,
    TwoBc,
    ThreeThree,
    ThreeFour,
    ThreeSix,
    ThreeOdd,
    Split(Split),
}

fn bound(t: [usize; 3]) -> usize {
    (t[0] * t[1] + t[0] * t[2] + t[1] * t[2]).div_ceil(3)
}

fn class(t: [usize; 3]) -> usize {
    (t[0] * t[1] + t[0] * t[2] + t[1] * t[2]) % 3
}

fn sorted(mut t: [usize; 3]) -> [usize; 3] {
    t.sort_unstable();
    t
}

fn split_parts(s: Split) -> [[usize; 3]; 4] {
    let [[p1, q1], [p2, q2], [p3, q3]] = s;
    [[p1, p2, p3], [p1, q2, q3], [q1, p2, q3], [q1, q2, p3]]
}

/// Rows `(p, x - p)` for each axis.
fn split(t: [usize; 3], p: [usize; 3]) -> Split {
    [0, 1, 2].map(|i| [p[i], t[i] - p[i]])
}

fn plans() -> &'static Mutex<HashMap<[usize; 3], Option<Step>>> {
    static PLANS: OnceLock<Mutex<HashMap<[usize; 3], Option<Step>>>> = OnceLock::new();
    PLANS.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The step used for a sorted box, or `None` if no construction of optimal
/// size is known.
fn resolve(t: [usize; 3]) -> Option<Step> {
    if let Some(&hit) = plans().lock().unwrap().get(&t) {
        return hit;
    }
    let mut steps = candidates(t).into_iter();
    let step = if class(t) == 0 && t[0] >= 5 {
        steps.chain(generic_splits(t)).find(|&s| valid(t, s))
    } else {
        steps.find(|&s| valid(t, s))
    };
    plans().lock().unwrap().insert(t, step);
    step
}

fn valid(t: [usize; 3], step: Step) -> bool {
    match step {
        Step::Split(s) => {
            if s.iter().flatten().any(|&x| x == 0) {
                return false;
            }
            let parts = split_parts(s);
            parts.iter().map(|&p| bound(p)).sum::<usize>() == bound(t)
                && parts.iter().all(|&p| resolve(sorted(p)).is_some())
        }
        _ => true,
    }
}

fn candidates(t: [usize; 3]) -> Vec<Step> {
    let [a, b, c] = t;
    let mut out = Vec::new();
    if let Some(name) = entry_for(t) {
        out.push(Step::Catalog(name));
    }
    if a == 1 {
        if b == 1 && c == 1 {
            out.push(Step::Single);
        } else if b == c && (b + 1).is_power_of_two() {
            out.push(Step::Purina((b + 1).trailing_zeros()));
        }
        return out;
    }
    if a == 2 {
        if t == [2, 2, 2] {
            out.push(Step::Split([[1, 1]; 3]));
        }
        if b == 3 && c % 3 == 0 && c >= 6 {
            out.push(Step::TwoThree);
        }
        let opposite = b % 2 != c % 2;
        if opposite && ((b % 3 == 2 && c % 3 == 2 && b >= 5) || (b % 3 == 0 && c % 3 == 0 && b >= 6)) {
            out.push(Step::TwoBc);
        }
        if t == [2, 6, 6] {
            out.push(Step::Split([[1, 1], [3, 3], [3, 3]]));
        }
    }
    if a == 3 {
        if b == 3 {
            out.push(Step::ThreeThree);
        }
        if b == 4 && c % 6 == 3 {
            out.push(Step::ThreeFour);
        }
        if b == 6 || c == 6 {
            out.push(Step::ThreeSix);
        }
        if (b % 2 == 1 && c % 6 == 3) || (c % 2 == 1 && b % 6 == 3) {
            out.push(Step::ThreeOdd);
        }
    }
    match t {
        [4, 4, 7] => out.push(Step::Split([[2, 2], [2, 2], [2, 5]])),
        [5, 5, 5] => out.push(Step::Cube(5)),
        [6, 7, 7] => out.push(Step::Split([[3, 3], [3, 4], [3, 4]])),
        _ => {}
    }
    if class(t) == 0 && a >= 5 {
        match a {
            5 => out.extend(thickness5(t)),
            6 => out.extend(thickness6(t)),
            7 => out.extend(thickness7(t)),
            _ => out.push(Step::Split([[a - 3, 3], [b - 3, 3], [c - 3, 3]])),
        }
    }
    if a >= 11 {
        let residue = |x: usize| [6, 7, 5][x % 3];
        out.push(Step::Split(split(t, t.map(residue))));
    }
    if a >= 4 && a != 5 && b != 5 && c != 5 {
        out.push(Step::Split([[a - 3, 3], [b - 3, 3], [c - 3, 3]]));
    }
    out
}

fn thickness5([_, b, c]: [usize; 3]) -> Vec<Step> {
    let t = [5, b, c];
    let mut out = Vec::new();
    if b % 3 == 0 {
        if t == [5, 6, 6] {
            out.push(Step::Split([[1, 4], [3, 3], [3, 3]]));
        } else if b >= 9 && b % 2 != c % 2 {
            out.push(Step::Split(split(t, [2, 6, 6])));
        } else if (b >= 9 && b % 2 == c % 2) || (b == 6 && c >= 12) {
            out.push(Step::Split(split(t, [2, 3, 6])));
        }
    } else if b == 5 {
        if c >= 11 {
            out.push(Step::Split(split(t, [2, 2, 5])));
        }
    } else if (b % 2 != c % 2) || (b == 8 && c == 8) {
        out.push(Step::Split(split(t, [2, 2, 2])));
    } else if c >= 11 {
        out.push(Step::Split(split(t, [2, 2, 5])));
    }
    out
}

fn thickness6([_, b, c]: [usize; 3]) -> Vec<Step> {
    let t = [6, b, c];
    if b == 7 || c == 7 {
        let (seven, x) = if b == 7 { (1, c) } else { (2, b) };
        let mut p = [3, 3, 3];
        p[3 - seven] = if x % 2 == 0 { 3 } else { 6 };
        let mut s = split(t, p);
        s[seven] = [3, 4];
        return vec![Step::Split(s)];
    }
    let p = match (b % 2, c % 2) {
        (0, 0) => [3, 3, 3],
        (0, 1) => [3, 3, 6],
        (1, 0) => [3, 6, 3],
        _ => [3, 6, 6],
    };
    vec![Step::Split(split(t, p))]
}

fn thickness7([_, b, c]: [usize; 3]) -> Vec<Step> {
    let t = [7, b, c];
    let step = if b % 3 == 0 {
        Step::Split(split(t, [5, 3, 3]))
    } else if b == 7 && c % 6 == 1 {
        Step::Split(split(t, [4, 4, 4]))
    } else if b == 7 {
        Step::Split(split(t, [4, 4, 7]))
    } else if t == [7, 10, 10] {
        Step::Split([[2, 5], [5, 5], [5, 5]])
    } else if b % 2 != c % 2 {
        Step::Split(split(t, [2, 5, 5]))
    } else {
        Step::Split(split(t, [2, 5, 8]))
    };
    vec![step]
}

/// Every split whose four parts add up to the bound.
fn generic_splits(t: [usize; 3]) -> impl Iterator<Item = Step> {
    (1..t[0])
        .flat_map(move |p1| (1..t[1]).flat_map(move |p2| (1..t[2]).map(move |p3| split(t, [p1, p2, p3]))))
        .filter(move |&s| split_parts(s).iter().map(|&p| bound(p)).sum::<usize>() == bound(t))
        .map(Step::Split)
}

/// Builds the set for a sorted box.
fn build_sorted(t: [usize; 3]) -> Result<Block> {
    let step = resolve(t).ok_or_else(|| Error::NotApplicable(format!("no construction for {t:?}")))?;
    let [_, b, c] = t;
    let block = match step {
        Step::Single => {
            let mut blk = Block::new([1, 1, 1]);
            blk.cells.push([1, 1, 1]);
            blk
        }
        Step::Purina(k) => {
            let p = purina_patch(k);
            let mut blk = Block::new([1, p.rows, p.cols]);
            blk.cells.extend(p.cells.iter().map(|&[i, j]| [1, i, j]));
            blk
        }
        Step::Catalog(name) => catalog_block(name)?,
        Step::Cube(n) => {
            let cells = modified_latin_cube(n)
                .ok_or_else(|| Error::NotApplicable(format!("no modified template for n = {n}")))?;
            Block { dims: [n; 3], cells }
        }
        Step::TwoThree => perfect_2_3_block(c)?,
        Step::TwoBc => perfect_2_bc_block(b, c)?,
        Step::ThreeThree => perfect_3_3_block(c)?,
        Step::ThreeFour => perfect_3_4_block(c)?,
        Step::ThreeSix => perfect_3_6_block(if b == 6 { c } else { b })?,
        Step::ThreeOdd => {
            if b % 2 == 1 && c % 6 == 3 {
                perfect_3_odd_block(b, c)?
            } else {
                perfect_3_odd_block(c, b)?
            }
        }
        Step::Split(s) => {
            let parts = split_parts(s);
            let blocks: Vec<Block> = parts.iter().map(|&p| build_any(p)).collect::<Result<_>>()?;
            assemble2(s, [&blocks[0], &blocks[1], &blocks[2], &blocks[3]])
        }
    };
    debug_assert_eq!(block.cells.len(), bound(t), "{t:?} via {step:?}");
    Ok(block.oriented(t))
}

fn build_any(t: [usize; 3]) -> Result<Block> {
    Ok(build_sorted(sorted(t))?.oriented(t))
}

/// Whether an optimal set is constructed for the box (in any axis order).
pub fn is_covered(t: [usize; 3]) -> bool {
    !t.contains(&0) && resolve(sorted(t)).is_some()
}

/// A percolating set of size `ceil((a1 a2 + a1 a3 + a2 a3) / 3)` for the
/// 3-neighbour process on `[a1] x [a2] x [a3]`, when one is constructed.
pub fn build_optimal(a1: usize, a2: usize, a3: usize) -> Option<Construction> {
    let t = [a1, a2, a3];
    if !is_covered(t) {
        return None;
    }
    build_any(t).and_then(Block::into_construction).ok()
}

/// A percolating set on the torus `T(a1, a2, a3)`, all sides at least 12:
/// an optimal set for the box one smaller in each direction plus two cells.
pub fn torus_set(a1: usize, a2: usize, a3: usize) -> Result<Construction> {
    if a1 < 12 || a2 < 12 || a3 < 12 {
        return Err(Error::InvalidParameters(format!(
            "torus construction needs every side at least 12, got ({a1},{a2},{a3})"
        )));
    }
    let mut block = build_any([a1 - 1, a2 - 1, a3 - 1])?;
    block.cells.push([a1, 1, 1]);
    block.cells.push([a1, a2, a3]);
    let board = Board::torus(&[a1, a2, a3])?;
    let seeds = board.set_from_coords(&block.cells)?;
    Ok(Construction { board, seeds })
}
