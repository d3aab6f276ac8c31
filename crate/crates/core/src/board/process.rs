use super::{Board, BoardKind, CellSet};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Infection rule of a bootstrap process.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "rule", content = "r")]
pub enum Rule {
    /// A healthy cell becomes infected once it has at least `r` infected
    /// neighbours.
    Threshold(u32),
    /// A healthy cell becomes infected once it has an infected neighbour along
    /// every axis.
    Modified,
}

impl Rule {
    pub(crate) fn check(self, board: &Board) -> Result<()> {
        match self {
            Rule::Threshold(0) => Err(Error::UnsupportedRule("threshold must be at least 1".into())),
            Rule::Threshold(_) => Ok(()),
            Rule::Modified if board.kind() == BoardKind::Masked2d => Err(Error::UnsupportedRule(
                "the modified process is defined on full grids only".into(),
            )),
            Rule::Modified if board.dimension() > 32 => Err(Error::UnsupportedRule(
                "the modified process supports at most 32 axes".into(),
            )),
            Rule::Modified => Ok(()),
        }
    }

    /// Whether a vertex can ever become infected from outside the seed set.
    pub fn can_be_infected(self, board: &Board, v: usize) -> bool {
        match self {
            Rule::Threshold(r) => board.degree(v) >= r as usize,
            Rule::Modified => {
                let mask = board.neighbor_axes(v).iter().fold(0u32, |m, &a| m | (1 << a));
                mask == full_mask(board.dimension())
            }
        }
    }
}

fn full_mask(d: usize) -> u32 {
    if d >= 32 {
        u32::MAX
    } else {
        (1u32 << d) - 1
    }
}

/// Reusable closure engine: worklist propagation with a residual counter
/// (threshold rule) or an axis mask (modified rule) per cell.
#[derive(Debug, Clone)]
pub struct Propagator<'b> {
    board: &'b Board,
    rule: Rule,
    state: Vec<u32>,
    infected: CellSet,
    queue: Vec<u32>,
}

impl<'b> Propagator<'b> {
    pub fn new(board: &'b Board, rule: Rule) -> Result<Self> {
        rule.check(board)?;
        Ok(Propagator {
            board,
            rule,
            state: vec![0; board.index_space()],
            infected: board.empty_set(),
            queue: Vec::new(),
        })
    }

    pub fn board(&self) -> &'b Board {
        self.board
    }

    pub fn rule(&self) -> Rule {
        self.rule
    }

    /// Runs the process from `seeds` to its fixed point. The seeds must be
    /// cells of the board.
    pub fn run(&mut self, seeds: &CellSet) -> &CellSet {
        self.state.iter_mut().for_each(|s| *s = 0);
        self.infected.clone_from(seeds);
        self.queue.clear();
        self.queue.extend(seeds.iter().map(|v| v as u32));
        let board = self.board;
        match self.rule {
            Rule::Threshold(r) => {
                while let Some(v) = self.queue.pop() {
                    for &u in board.neighbors_of(v as usize) {
                        let u_idx = u as usize;
                        if self.infected.contains(u_idx) {
                            continue;
                        }
                        self.state[u_idx] += 1;
                        if self.state[u_idx] >= r {
                            self.infected.insert(u_idx);
                            self.queue.push(u);
                        }
                    }
                }
            }
            Rule::Modified => {
                let full = full_mask(board.dimension());
                while let Some(v) = self.queue.pop() {
                    let v = v as usize;
                    for (&u, &axis) in board.neighbors_of(v).iter().zip(board.neighbor_axes(v)) {
                        let u_idx = u as usize;
                        if self.infected.contains(u_idx) {
                            continue;
                        }
                        self.state[u_idx] |= 1 << axis;
                        if self.state[u_idx] == full {
                            self.infected.insert(u_idx);
                            self.queue.push(u);
                        }
                    }
                }
            }
        }
        &self.infected
    }

    /// Runs the process and reports whether every cell ends up infected.
    pub fn percolates(&mut self, seeds: &CellSet) -> bool {
        let total = self.board.cell_count();
        self.run(seeds).len() == total
    }

    /// The last computed closure.
    pub fn infected(&self) -> &CellSet {
        &self.infected
    }
}

/// The closure `<A>`: the least superset of `seeds` closed under the rule.
pub fn closure(board: &Board, rule: Rule, seeds: &CellSet) -> Result<CellSet> {
    board.check_set(seeds)?;
    let mut engine = Propagator::new(board, rule)?;
    Ok(engine.run(seeds).clone())
}

pub fn percolates(board: &Board, rule: Rule, seeds: &CellSet) -> Result<bool> {
    Ok(closure(board, rule, seeds)?.len() == board.cell_count())
}

/// One synchronous round: every healthy cell meeting the rule becomes infected.
pub fn step(board: &Board, rule: Rule, set: &CellSet) -> Result<CellSet> {
    board.check_set(set)?;
    rule.check(board)?;
    let mut next = set.clone();
    for v in board.cells() {
        if set.contains(v) {
            continue;
        }
        let hit = board
            .neighbors_of(v)
            .iter()
            .zip(board.neighbor_axes(v))
            .filter(|(&u, _)| set.contains(u as usize));
        let fires = match rule {
            Rule::Threshold(r) => hit.count() >= r as usize,
            Rule::Modified => hit.fold(0u32, |m, (_, &a)| m | (1 << a)) == full_mask(board.dimension()),
        };
        if fires {
            next.insert(v);
        }
    }
    Ok(next)
}
