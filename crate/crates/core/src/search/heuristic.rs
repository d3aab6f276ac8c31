//! Randomised local search for a percolating set of a given size.

use crate::board::{Board, CellSet, Propagator, Rule};
use crate::error::Result;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Simulated annealing on the size of the closure: each move swaps one seed
/// for a non-seed, preferring non-seeds left healthy by the current closure.
/// Deterministic for a given `seed`. Returns a verified percolating set of
/// exactly `k` cells, or `None` after `max_steps` moves.
pub fn heuristic_search(board: &Board, rule: Rule, k: usize, seed: u64, max_steps: u64) -> Result<Option<CellSet>> {
    let mut engine = Propagator::new(board, rule)?;
    let n = board.cell_count();
    let forced: Vec<usize> = board.cells().filter(|&v| !rule.can_be_infected(board, v)).collect();
    if forced.len() > k || k > n {
        return Ok(None);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let free: Vec<usize> = board.cells().filter(|v| !forced.contains(v)).collect();
    let restart = |rng: &mut ChaCha8Rng| {
        let mut set = board.empty_set();
        set.extend(forced.iter().copied());
        set.extend(free.choose_multiple(rng, k - forced.len()).copied());
        set
    };
    let mut current = restart(&mut rng);
    let mut score = engine.run(&current).len();
    let mut best = score;
    let mut stale = 0u64;
    let temperature0 = 2.0;
    for step in 0..max_steps {
        if score == n {
            return Ok(Some(current));
        }
        if free.is_empty() || k == forced.len() {
            return Ok(None);
        }
        let chosen: Vec<usize> = current.iter().filter(|v| !forced.contains(v)).collect();
        let healthy: Vec<usize> = board.cells().filter(|&v| !engine.infected().contains(v)).collect();
        let Some(&out) = chosen.choose(&mut rng) else {
            return Ok(None);
        };
        let candidate_in = if !healthy.is_empty() && rng.gen_bool(0.7) {
            *healthy.choose(&mut rng).unwrap()
        } else {
            *free.choose(&mut rng).unwrap()
        };
        if current.contains(candidate_in) {
            engine.run(&current);
            continue;
        }
        current.remove(out);
        current.insert(candidate_in);
        let next = engine.run(&current).len();
        let t = temperature0 * (1.0 - step as f64 / max_steps as f64) + 0.05;
        let accept = next >= score || rng.gen_bool(((next as f64 - score as f64) / t).exp().min(1.0));
        if accept {
            score = next;
        } else {
            current.remove(candidate_in);
            current.insert(out);
            engine.run(&current);
        }
        if score > best {
            best = score;
            stale = 0;
        } else {
            stale += 1;
        }
        if stale > 20_000 {
            current = restart(&mut rng);
            score = engine.run(&current).len();
            best = score;
            stale = 0;
        }
    }
    Ok((score == n).then_some(current))
}
