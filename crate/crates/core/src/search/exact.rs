//! Depth-first search over seed sets in index order.
//!
//! Every cell that can never be infected is seeded up front. Each remaining
//! cell is either added or excluded; an exclusion is kept only if the closure
//! of everything not yet excluded still covers the board. Threshold rules
//! also bound the number of edges inside the seed set, and on boards of
//! maximum degree at most `r + 1` the excluded cells must keep forming trees
//! with at most one cell of degree `r` each.

use super::symmetry::orbit_minima;
use super::{Budget, Meter, Outcome};
use crate::board::{Board, CellSet, Propagator, Rule};
use crate::error::Result;
use std::ops::ControlFlow;

/// Union-find over cells with undo, tracking the number of degree-`r` cells
/// per component.
struct Forest {
    parent: Vec<u32>,
    size: Vec<u32>,
    at_threshold: Vec<u32>,
    history: Vec<(u32, u32)>,
}

impl Forest {
    fn new(n: usize) -> Forest {
        Forest {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
            at_threshold: vec![0; n],
            history: Vec::new(),
        }
    }

    fn find(&self, mut v: u32) -> u32 {
        while self.parent[v as usize] != v {
            v = self.parent[v as usize];
        }
        v
    }

    fn union(&mut self, a: u32, b: u32) {
        let (big, small) = if self.size[a as usize] >= self.size[b as usize] {
            (a, b)
        } else {
            (b, a)
        };
        self.parent[small as usize] = big;
        self.size[big as usize] += self.size[small as usize];
        self.at_threshold[big as usize] += self.at_threshold[small as usize];
        self.history.push((small, big));
    }

    fn undo_to(&mut self, mark: usize) {
        while self.history.len() > mark {
            let (small, big) = self.history.pop().unwrap();
            self.parent[small as usize] = small;
            self.size[big as usize] -= self.size[small as usize];
            self.at_threshold[big as usize] -= self.at_threshold[small as usize];
        }
    }
}

struct Dfs<'b, 'f> {
    board: &'b Board,
    k: usize,
    order: Vec<usize>,
    engine: Propagator<'b>,
    chosen: CellSet,
    available: CellSet,
    threshold: Option<usize>,
    forest: Option<Forest>,
    max_inner_edges: usize,
    inner_edges: usize,
    orbit_min: Option<Vec<bool>>,
    meter: Meter,
    visit: &'f mut dyn FnMut(&CellSet) -> ControlFlow<()>,
}

impl Dfs<'_, '_> {
    fn go(&mut self, pos: usize, free_chosen: bool) -> ControlFlow<()> {
        if !self.meter.tick() {
            return ControlFlow::Break(());
        }
        if self.chosen.len() == self.k {
            if self.engine.percolates(&self.chosen) {
                return (self.visit)(&self.chosen);
            }
            return ControlFlow::Continue(());
        }
        if self.chosen.len() + (self.order.len() - pos) < self.k {
            return ControlFlow::Continue(());
        }
        let v = self.order[pos];
        let allowed = free_chosen || self.orbit_min.as_ref().is_none_or(|m| m[v]);
        if allowed {
            let added = self
                .board
                .neighbors_of(v)
                .iter()
                .filter(|&&u| self.chosen.contains(u as usize))
                .count();
            if self.inner_edges + added <= self.max_inner_edges {
                self.chosen.insert(v);
                self.inner_edges += added;
                let flow = self.go(pos + 1, true);
                self.inner_edges -= added;
                self.chosen.remove(v);
                flow?;
            }
        }
        self.available.remove(v);
        let mark = self.forest.as_ref().map_or(0, |f| f.history.len());
        let mut flow = ControlFlow::Continue(());
        if self.exclude_keeps_forest(v) && self.engine.percolates(&self.available) {
            flow = self.go(pos + 1, free_chosen);
        }
        if let Some(f) = self.forest.as_mut() {
            f.undo_to(mark);
        }
        self.available.insert(v);
        flow
    }

    /// Joins `v` to its excluded neighbours; false if that closes a cycle or
    /// puts two degree-`r` cells in one component.
    fn exclude_keeps_forest(&mut self, v: usize) -> bool {
        let (Some(forest), Some(r)) = (self.forest.as_mut(), self.threshold) else {
            return true;
        };
        let mut roots: Vec<u32> = Vec::with_capacity(4);
        let mut count = u32::from(self.board.degree(v) == r);
        for &u in self.board.neighbors_of(v) {
            if self.available.contains(u as usize) {
                continue;
            }
            let root = forest.find(u);
            if roots.contains(&root) {
                return false;
            }
            roots.push(root);
            count += forest.at_threshold[root as usize];
        }
        if count > 1 {
            return false;
        }
        forest.at_threshold[v] = u32::from(self.board.degree(v) == r);
        for root in roots {
            let rv = forest.find(v as u32);
            forest.union(rv, root);
        }
        true
    }
}

fn forced_cells(board: &Board, rule: Rule) -> CellSet {
    let mut forced = board.empty_set();
    forced.extend(board.cells().filter(|&v| !rule.can_be_infected(board, v)));
    forced
}

/// Runs the search for seed sets of exactly `k` cells, calling `visit` on
/// every percolating one found. With `break_symmetry` only sets whose least
/// freely chosen cell is minimal in its orbit are visited.
fn search(
    board: &Board,
    rule: Rule,
    k: usize,
    budget: Budget,
    break_symmetry: bool,
    visit: &mut dyn FnMut(&CellSet) -> ControlFlow<()>,
) -> Result<(bool, u64)> {
    let engine = Propagator::new(board, rule)?;
    let forced = forced_cells(board, rule);
    let mut meter = Meter::new(budget);
    if forced.len() > k || k > board.cell_count() {
        meter.tick();
        return Ok((true, meter.nodes));
    }
    let threshold = match rule {
        Rule::Threshold(r) => Some(r as usize),
        Rule::Modified => None,
    };
    let max_inner_edges = match threshold {
        Some(r) => {
            let spare = board.edge_count() as i64 - (r as i64) * (board.cell_count() as i64 - k as i64);
            if spare < 0 {
                meter.tick();
                return Ok((true, meter.nodes));
            }
            spare as usize
        }
        None => usize::MAX,
    };
    let forest = match threshold {
        Some(r) if board.max_degree() <= r + 1 => Some(Forest::new(board.index_space())),
        _ => None,
    };
    let order: Vec<usize> = board.cells().filter(|&v| !forced.contains(v)).collect();
    let inner_edges = board.induced_edges(&forced);
    let mut dfs = Dfs {
        board,
        k,
        order,
        engine,
        available: board.full_set(),
        chosen: forced,
        threshold,
        forest,
        max_inner_edges,
        inner_edges,
        orbit_min: break_symmetry.then(|| orbit_minima(board)),
        meter,
        visit,
    };
    if dfs.inner_edges <= dfs.max_inner_edges && dfs.engine.percolates(&dfs.available) {
        let _ = dfs.go(0, false);
    }
    Ok((!dfs.meter.exhausted, dfs.meter.nodes))
}

/// A percolating set of exactly `k` cells, if one exists. Since supersets of
/// percolating sets percolate, `None` (when exact) also rules out every
/// smaller size.
pub fn exists_percolating_of_size(
    board: &Board,
    rule: Rule,
    k: usize,
    budget: Budget,
) -> Result<Outcome<Option<CellSet>>> {
    let mut found = None;
    let (exact, nodes) = search(board, rule, k, budget, true, &mut |s| {
        found = Some(s.clone());
        ControlFlow::Break(())
    })?;
    let exact = exact || found.is_some();
    Ok(Outcome {
        value: found,
        exact,
        nodes,
    })
}

/// Result of a minimum search: `lower <= m <= upper`, with a witness of size
/// `upper`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Minimum {
    pub lower: usize,
    pub upper: usize,
    pub witness: CellSet,
}

/// The smallest size of a percolating set, by iterative deepening from the
/// edge-counting bound. If the budget runs out the full board is returned as
/// the witness and `lower` is the largest size not yet ruled out.
pub fn min_percolating(board: &Board, rule: Rule, budget: Budget) -> Result<Outcome<Minimum>> {
    rule.check(board)?;
    let forced = forced_cells(board, rule).len();
    let edge_bound = match rule {
        Rule::Threshold(r) => {
            let r = r as usize;
            board.cell_count().saturating_sub(board.edge_count() / r)
        }
        Rule::Modified => 1,
    };
    let mut k = forced.max(edge_bound).max(1).min(board.cell_count());
    let mut nodes = 0;
    let mut meter_budget = budget;
    let start = std::time::Instant::now();
    loop {
        let step = exists_percolating_of_size(board, rule, k, meter_budget)?;
        nodes += step.nodes;
        match step.value {
            Some(witness) => {
                return Ok(Outcome {
                    value: Minimum {
                        lower: k,
                        upper: k,
                        witness,
                    },
                    exact: true,
                    nodes,
                })
            }
            None if !step.exact || k == board.cell_count() => {
                let witness = board.full_set();
                return Ok(Outcome {
                    value: Minimum {
                        lower: k,
                        upper: board.cell_count(),
                        witness,
                    },
                    exact: false,
                    nodes,
                });
            }
            None => k += 1,
        }
        if let Some(m) = budget.max_nodes {
            meter_budget.max_nodes = Some(m.saturating_sub(nodes));
        }
        if let Some(t) = budget.max_time {
            meter_budget.max_time = Some(t.saturating_sub(start.elapsed()));
        }
    }
}

/// Calls `visit` on every percolating set of exactly `k` cells, in
/// lexicographic order of their index lists. Returns whether the enumeration
/// finished within the budget (a `Break` from `visit` also counts as
/// finished).
pub fn for_each_percolating(
    board: &Board,
    rule: Rule,
    k: usize,
    budget: Budget,
    mut visit: impl FnMut(&CellSet) -> ControlFlow<()>,
) -> Result<Outcome<()>> {
    let (exact, nodes) = search(board, rule, k, budget, false, &mut visit)?;
    Ok(Outcome {
        value: (),
        exact,
        nodes,
    })
}

/// Every percolating set of exactly `k` cells.
pub fn enumerate_percolating(board: &Board, rule: Rule, k: usize, budget: Budget) -> Result<Outcome<Vec<CellSet>>> {
    let mut all = Vec::new();
    let done = for_each_percolating(board, rule, k, budget, |s| {
        all.push(s.clone());
        ControlFlow::Continue(())
    })?;
    Ok(Outcome {
        value: all,
        exact: done.exact,
        nodes: done.nodes,
    })
}
