//! Structural percolation certificates and claim verification.

use crate::board::{closure, Board, BoardKind, CellSet, Rule};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Why a set fails the forest criterion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Witness {
    /// A vertex of degree below the threshold that is not seeded.
    DeficientVertex { cell: Vec<usize> },
    /// A cycle of healthy vertices, in traversal order.
    Cycle { cells: Vec<Vec<usize>> },
    /// Two vertices of degree exactly the threshold in one healthy component.
    TwoThresholdVertices { cells: [Vec<usize>; 2] },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub percolates: bool,
    pub witness: Option<Witness>,
}

/// Decides percolation without simulating, on graphs of maximum degree at most
/// `r + 1`: the set percolates iff it contains every vertex of degree below `r`
/// and every component of its complement is a tree with at most one vertex of
/// degree `r`.
pub fn forest_certificate(board: &Board, r: u32, seeds: &CellSet) -> Result<Certificate> {
    board.check_set(seeds)?;
    if r == 0 {
        return Err(Error::InvalidParameters("threshold must be at least 1".into()));
    }
    let r = r as usize;
    if board.max_degree() > r + 1 {
        return Err(Error::NotApplicable(format!(
            "maximum degree {} exceeds r + 1 = {}",
            board.max_degree(),
            r + 1
        )));
    }
    let fail = |w| {
        Ok(Certificate {
            percolates: false,
            witness: Some(w),
        })
    };
    if let Some(v) = board.cells().find(|&v| !seeds.contains(v) && board.degree(v) < r) {
        return fail(Witness::DeficientVertex {
            cell: board.coords_of(v),
        });
    }
    let mut seen = seeds.clone();
    for start in board.cells() {
        if seen.contains(start) {
            continue;
        }
        let component = collect_component(board, seeds, start, &mut seen);
        let vertices = component.len();
        let edge_ends: usize = component
            .iter()
            .map(|&v| healthy_neighbours(board, seeds, v).count())
            .sum();
        if edge_ends / 2 >= vertices {
            let cycle = find_cycle(board, seeds, start).expect("component with a cycle");
            return fail(Witness::Cycle {
                cells: cycle.into_iter().map(|v| board.coords_of(v)).collect(),
            });
        }
        let mut at_threshold: Vec<usize> = component.into_iter().filter(|&v| board.degree(v) == r).collect();
        if at_threshold.len() >= 2 {
            at_threshold.sort_unstable();
            return fail(Witness::TwoThresholdVertices {
                cells: [board.coords_of(at_threshold[0]), board.coords_of(at_threshold[1])],
            });
        }
    }
    Ok(Certificate {
        percolates: true,
        witness: None,
    })
}

fn healthy_neighbours<'a>(board: &'a Board, seeds: &'a CellSet, v: usize) -> impl Iterator<Item = usize> + 'a {
    board
        .neighbors_of(v)
        .iter()
        .map(|&u| u as usize)
        .filter(move |&u| !seeds.contains(u))
}

fn collect_component(board: &Board, blocked: &CellSet, start: usize, seen: &mut CellSet) -> Vec<usize> {
    let mut out = vec![start];
    seen.insert(start);
    let mut head = 0;
    while head < out.len() {
        let v = out[head];
        head += 1;
        for u in healthy_neighbours(board, blocked, v) {
            if seen.insert(u) {
                out.push(u);
            }
        }
    }
    out
}

/// Depth-first search from `start` through healthy vertices, visiting
/// neighbours in index order; returns the first cycle closed by a back edge.
fn find_cycle(board: &Board, seeds: &CellSet, start: usize) -> Option<Vec<usize>> {
    let mut position = std::collections::HashMap::new();
    let mut stack: Vec<(usize, Vec<usize>, usize)> = Vec::new();
    let sorted = |v: usize| {
        let mut ns: Vec<usize> = healthy_neighbours(board, seeds, v).collect();
        ns.sort_unstable();
        ns
    };
    let mut visited = board.empty_set();
    visited.insert(start);
    position.insert(start, 0);
    stack.push((start, sorted(start), 0));
    while let Some(top) = stack.last_mut() {
        let (v, ref ns, ref mut next) = *top;
        if *next == ns.len() {
            position.remove(&v);
            stack.pop();
            continue;
        }
        let u = ns[*next];
        *next += 1;
        let parent = stack.len().checked_sub(2).map(|i| stack[i].0);
        if Some(u) == parent {
            continue;
        }
        if let Some(&at) = position.get(&u) {
            return Some(stack[at..].iter().map(|f| f.0).collect());
        }
        if visited.insert(u) {
            position.insert(u, stack.len());
            stack.push((u, sorted(u), 0));
        }
    }
    None
}

/// Whether every path between the two faces in each direction meets `set`.
/// Such a set percolates under the `d`-neighbour process.
pub fn separates_faces(board: &Board, set: &CellSet) -> Result<bool> {
    board.check_set(set)?;
    if board.kind() != BoardKind::OpenGrid {
        return Err(Error::InvalidParameters(
            "face separation is defined on open grids".into(),
        ));
    }
    let d = board.dimension();
    let mut seen = set.clone();
    for start in board.cells() {
        if seen.contains(start) {
            continue;
        }
        let mut low = vec![false; d];
        let mut high = vec![false; d];
        for v in collect_component(board, set, start, &mut seen) {
            let c = board.coords_of(v);
            for axis in 0..d {
                low[axis] |= c[axis] == 1;
                high[axis] |= c[axis] == board.dims()[axis];
            }
        }
        if (0..d).any(|axis| low[axis] && high[axis]) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cells: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub pass: bool,
    pub cardinality: usize,
    pub closure_size: usize,
    pub board_size: usize,
    pub percolates: bool,
    pub checks: Vec<Check>,
}

const MAX_LISTED: usize = 16;

/// Checks a claimed construction: its cardinality, its closure (the full
/// board unless `expected_closure` is given) and, where applicable, agreement
/// between the forest certificate and simulation. Problems are reported, not
/// returned as errors.
pub fn verify_claim(
    board: &Board,
    rule: Rule,
    seeds: &CellSet,
    expected_cardinality: usize,
    expected_closure: Option<&CellSet>,
) -> Report {
    let mut report = Report {
        pass: false,
        cardinality: seeds.len(),
        closure_size: 0,
        board_size: board.cell_count(),
        percolates: false,
        checks: Vec::new(),
    };
    let simulated = match closure(board, rule, seeds) {
        Ok(c) => c,
        Err(e) => {
            report.checks.push(Check {
                name: "input".into(),
                pass: false,
                detail: e.to_string(),
                cells: Vec::new(),
                witness: None,
            });
            return report;
        }
    };
    report.closure_size = simulated.len();
    report.percolates = simulated.len() == board.cell_count();
    report.checks.push(Check {
        name: "cardinality".into(),
        pass: seeds.len() == expected_cardinality,
        detail: format!("|A0| = {}, expected {}", seeds.len(), expected_cardinality),
        cells: Vec::new(),
        witness: None,
    });

    let full = board.full_set();
    let target = expected_closure.unwrap_or(&full);
    let mut missing = target.clone();
    missing.difference_with(&simulated);
    let mut extra = simulated.clone();
    extra.difference_with(target);
    let listed: Vec<Vec<usize>> = missing
        .iter()
        .chain(extra.iter())
        .take(MAX_LISTED)
        .map(|v| board.coords_of(v))
        .collect();
    report.checks.push(Check {
        name: "closure".into(),
        pass: missing.is_empty() && extra.is_empty(),
        detail: format!(
            "closure has {} cells; {} expected cells missing, {} unexpected cells infected",
            simulated.len(),
            missing.len(),
            extra.len()
        ),
        cells: listed,
        witness: None,
    });

    if let Rule::Threshold(r) = rule {
        if board.dimension() == 2 && board.max_degree() <= r as usize + 1 {
            if let Ok(cert) = forest_certificate(board, r, seeds) {
                report.checks.push(Check {
                    name: "forest-certificate".into(),
                    pass: cert.percolates == report.percolates,
                    detail: format!(
                        "certificate says {}, simulation says {}",
                        verdict(cert.percolates),
                        verdict(report.percolates)
                    ),
                    cells: Vec::new(),
                    witness: cert.witness,
                });
            }
        }
    }
    report.pass = report.checks.iter().all(|c| c.pass);
    report
}

fn verdict(p: bool) -> &'static str {
    if p {
        "percolates"
    } else {
        "does not percolate"
    }
}
