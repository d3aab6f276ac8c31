//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines are never captured. Set `PERCOLATE_ORDER_SIX=1` to
//! also attempt the order-6 modified count.

use percolate::bounds::{known_exact, perimeter_lower_bound, torus_lower_bound, triple_class, KnownCase};
use percolate::construct3d::{appendix_catalog, build_optimal, catalog_names, folds_up_to, torus_set};
use percolate::search::{
    count_modified_optimal, enumerate_percolating, exists_percolating_of_size, min_percolating, Budget,
};
use percolate::verify::forest_certificate;
use percolate::{closure, percolates, Board, CellSet, Rule};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::VecDeque;
use std::io::Write;
use std::time::{Duration, Instant};

type Outcome = Result<String, String>;

fn minimum(dims: &[usize], r: u32) -> Result<usize, String> {
    let board = Board::open_grid(dims).map_err(|e| e.to_string())?;
    let out = min_percolating(&board, Rule::Threshold(r), Budget::unlimited()).map_err(|e| e.to_string())?;
    if !out.exact {
        return Err(format!("search on {dims:?} did not finish"));
    }
    Ok(out.value.upper)
}

fn closed_forms() -> Outcome {
    let mut failures = Vec::new();
    for n in 1..=4 {
        let m = minimum(&[n, n], 2)?;
        if m != n {
            failures.push(format!("m({n},{n};2) = {m}, expected {n}"));
        }
    }
    for a1 in 1..=4usize {
        for a2 in 1..=4usize {
            let want = (a1 - 1 + a2 - 1).div_ceil(2) + 1;
            let m = minimum(&[a1, a2], 2)?;
            if m != want {
                failures.push(format!("m({a1},{a2};2) = {m}, expected {want}"));
            }
        }
    }
    for d in [3usize, 4] {
        let want = (d * (d + 3)).div_ceil(6);
        let m = minimum(&vec![2; d], 3)?;
        if m != want {
            failures.push(format!(
                "m([2]^{d};3) = {m} by search, formula ceil(d(d+3)/6) gives {want}"
            ));
        }
    }
    if failures.is_empty() {
        Ok("all two-neighbour and hypercube values match".into())
    } else {
        Err(failures.join("; "))
    }
}

fn square_grids() -> Outcome {
    let want = [1, 4, 5, 10, 12];
    for (n, &w) in (1..=5usize).zip(&want) {
        let m = minimum(&[n, n], 3)?;
        let (formula, _) = known_exact(&KnownCase::SquareThree { n: n as u64 }).ok_or("no closed form")?;
        if m != w || formula != w as u64 {
            return Err(format!("n = {n}: search {m}, closed form {formula}, expected {w}"));
        }
    }
    Ok(format!("m(n,n;3) = {want:?} for n = 1..5"))
}

fn catalog() -> Outcome {
    let want = [8, 15, 35, 43, 14, 29, 32, 36, 40];
    for (name, w) in catalog_names().zip(want) {
        let c = appendix_catalog(name).map_err(|e| e.to_string())?;
        let dims: Vec<u64> = c.board.dims().iter().map(|&a| a as u64).collect();
        let lb = perimeter_lower_bound(&dims).map_err(|e| e.to_string())?;
        if c.len() != w || lb != w as u64 {
            return Err(format!("{name}: {} cells, bound {lb}, expected {w}", c.len()));
        }
        if !percolates(&c.board, Rule::Threshold(3), &c.seeds).map_err(|e| e.to_string())? {
            return Err(format!("{name} does not percolate"));
        }
    }
    Ok("nine stored sets percolate at the lower bound".into())
}

fn check_box(a: usize, b: usize, c: usize) -> Result<(), String> {
    let con = build_optimal(a, b, c).ok_or_else(|| format!("({a},{b},{c}) not covered"))?;
    let lb = perimeter_lower_bound(&[a as u64, b as u64, c as u64]).map_err(|e| e.to_string())?;
    if con.len() as u64 != lb {
        return Err(format!("({a},{b},{c}): {} cells, bound {lb}", con.len()));
    }
    if !percolates(&con.board, Rule::Threshold(3), &con.seeds).map_err(|e| e.to_string())? {
        return Err(format!("({a},{b},{c}) does not percolate"));
    }
    Ok(())
}

fn sweep(lo: usize, hi: usize, keep: impl Fn(usize, usize, usize) -> bool) -> Outcome {
    let mut count = 0;
    for a in lo..=hi {
        for b in a..=hi {
            for c in b..=hi {
                if keep(a, b, c) {
                    check_box(a, b, c)?;
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} boxes built and verified"))
}

fn modified_counts() -> Outcome {
    let want = [1u64, 2, 12, 256, 2688];
    let start = Instant::now();
    for (n, &w) in (1..=5).zip(&want) {
        let out = count_modified_optimal(n, Budget::unlimited()).map_err(|e| e.to_string())?;
        if !out.exact || out.value != w {
            return Err(format!("n = {n}: {} (exact {}), expected {w}", out.value, out.exact));
        }
        if n == 4 && start.elapsed() > Duration::from_secs(60) {
            return Err("n <= 4 took over a minute".into());
        }
    }
    let mut detail = format!("counts {want:?} for n = 1..5");
    if std::env::var_os("PERCOLATE_ORDER_SIX").is_some() {
        let out = count_modified_optimal(6, Budget::unlimited()).map_err(|e| e.to_string())?;
        detail.push_str(&format!("; n = 6 gives {} (expected 148958)", out.value));
        if out.value != 148958 {
            return Err(detail);
        }
    }
    Ok(detail)
}

fn negative_results() -> Outcome {
    for (dims, k) in [(vec![2, 3, 3], 7), (vec![3, 9], 13)] {
        let board = Board::open_grid(&dims).map_err(|e| e.to_string())?;
        let start = Instant::now();
        let out = exists_percolating_of_size(&board, Rule::Threshold(3), k, Budget::unlimited())
            .map_err(|e| e.to_string())?;
        if !out.exact || out.value.is_some() {
            return Err(format!("{dims:?}: expected no set of size {k}"));
        }
        if start.elapsed() > Duration::from_secs(300) {
            return Err(format!("{dims:?} took over five minutes"));
        }
    }
    Ok("no 7-cell set for (2,3,3), no 13-cell set for 3x9".into())
}

fn torus() -> Outcome {
    let t = torus_set(12, 12, 12).map_err(|e| e.to_string())?;
    let lb = torus_lower_bound(12, 12, 12);
    let ok = percolates(&t.board, Rule::Threshold(3), &t.seeds).map_err(|e| e.to_string())?;
    if !ok || t.len() != 123 || lb != 122 {
        return Err(format!("{} cells, percolates {ok}, lower bound {lb}", t.len()));
    }
    Ok("123 cells percolate on T(12,12,12), lower bound 122".into())
}

fn random_set(board: &Board, rng: &mut ChaCha8Rng, p: f64) -> CellSet {
    let mut s = board.empty_set();
    for v in board.cells() {
        if rng.gen_bool(p) {
            s.insert(v);
        }
    }
    s
}

/// Planar set properties forced on a percolating set of the lower-bound
/// size: independent, only even cells, every even boundary cell present, and
/// each healthy component a tree meeting the boundary exactly once.
fn audit_perfect(n: usize, cells: &[Vec<usize>]) -> Result<(), String> {
    let inside = |i: isize, j: isize| i >= 1 && j >= 1 && i <= n as isize && j <= n as isize;
    let mut seeded = vec![vec![false; n + 1]; n + 1];
    for c in cells {
        seeded[c[0]][c[1]] = true;
    }
    let boundary = |i: usize, j: usize| i == 1 || j == 1 || i == n || j == n;
    let steps = [(0isize, 1isize), (1, 0), (0, -1), (-1, 0)];
    for i in 1..=n {
        for j in 1..=n {
            let even = (i + j) % 2 == 0;
            if seeded[i][j] && !even {
                return Err(format!("odd cell ({i},{j}) is seeded"));
            }
            if even && boundary(i, j) && !seeded[i][j] {
                return Err(format!("even boundary cell ({i},{j}) is missing"));
            }
            let below = i < n && seeded[i + 1][j];
            let right = j < n && seeded[i][j + 1];
            if seeded[i][j] && (below || right) {
                return Err(format!("seeds next to ({i},{j})"));
            }
        }
    }
    let mut seen = vec![vec![false; n + 1]; n + 1];
    for i in 1..=n {
        for j in 1..=n {
            if seeded[i][j] || seen[i][j] {
                continue;
            }
            let (mut vertices, mut degree_sum, mut on_boundary) = (0, 0, 0);
            let mut queue = VecDeque::from([(i, j)]);
            seen[i][j] = true;
            while let Some((x, y)) = queue.pop_front() {
                vertices += 1;
                on_boundary += usize::from(boundary(x, y));
                for (dx, dy) in steps {
                    let (u, w) = (x as isize + dx, y as isize + dy);
                    if !inside(u, w) || seeded[u as usize][w as usize] {
                        continue;
                    }
                    degree_sum += 1;
                    if !seen[u as usize][w as usize] {
                        seen[u as usize][w as usize] = true;
                        queue.push_back((u as usize, w as usize));
                    }
                }
            }
            if degree_sum / 2 != vertices - 1 || on_boundary != 1 {
                return Err(format!(
                    "component at ({i},{j}): {vertices} cells, {} edges, {on_boundary} boundary cells",
                    degree_sum / 2
                ));
            }
        }
    }
    Ok(())
}

fn properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let rules = [
        Rule::Threshold(1),
        Rule::Threshold(2),
        Rule::Threshold(3),
        Rule::Modified,
    ];
    for _ in 0..1000 {
        let dims: Vec<usize> = (0..rng.gen_range(1..4)).map(|_| rng.gen_range(1..7)).collect();
        let board = Board::open_grid(&dims).map_err(|e| e.to_string())?;
        let rule = rules[rng.gen_range(0..rules.len())];
        let small = random_set(&board, &mut rng, 0.25);
        let mut large = small.clone();
        large.union_with(&random_set(&board, &mut rng, 0.15));
        let cs = closure(&board, rule, &small).map_err(|e| e.to_string())?;
        let cl = closure(&board, rule, &large).map_err(|e| e.to_string())?;
        let again = closure(&board, rule, &cs).map_err(|e| e.to_string())?;
        if !small.is_subset(&cs) || !cs.is_subset(&cl) || again != cs {
            return Err(format!("closure operator property fails on {dims:?} under {rule:?}"));
        }
    }
    for _ in 0..1000 {
        let (rows, cols) = (rng.gen_range(1..8), rng.gen_range(1..8));
        let board = if rng.gen_bool(0.5) {
            Board::open_grid(&[rows, cols])
        } else {
            let kept: Vec<[usize; 2]> = (1..=rows)
                .flat_map(|i| (1..=cols).map(move |j| [i, j]))
                .filter(|_| rng.gen_bool(0.8))
                .collect();
            Board::masked(rows, cols, &kept)
        }
        .map_err(|e| e.to_string())?;
        let seeds = random_set(&board, &mut rng, 0.45);
        let cert = forest_certificate(&board, 3, &seeds).map_err(|e| e.to_string())?;
        if cert.percolates != percolates(&board, Rule::Threshold(3), &seeds).map_err(|e| e.to_string())? {
            return Err(format!(
                "certificate disagrees with simulation on {:?}",
                board.coords_in(&seeds)
            ));
        }
    }
    let folds = folds_up_to(30);
    for fold in &folds {
        let e = &fold.embedding;
        let pushed = e
            .apply(&closure(e.source(), Rule::Threshold(3), &fold.seeds).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        let image = e.apply(&fold.seeds).map_err(|e| e.to_string())?;
        let target = closure(e.target(), Rule::Threshold(3), &image).map_err(|e| e.to_string())?;
        if !pushed.is_subset(&target) {
            return Err(format!("embedding into {:?} loses cells", e.target().dims()));
        }
    }
    let mut audited = 0;
    for (n, k) in [(3, 5), (7, 21)] {
        let board = Board::open_grid(&[n, n]).map_err(|e| e.to_string())?;
        let sets =
            enumerate_percolating(&board, Rule::Threshold(3), k, Budget::unlimited()).map_err(|e| e.to_string())?;
        if !sets.exact || sets.value.is_empty() {
            return Err(format!("enumeration on {n}x{n} incomplete or empty"));
        }
        for s in &sets.value {
            audit_perfect(n, &board.coords_in(s)).map_err(|e| format!("{n}x{n}: {e}"))?;
            audited += 1;
        }
    }
    Ok(format!(
        "2000 random instances, {} embeddings, {audited} perfect planar sets audited",
        folds.len()
    ))
}

struct Criterion {
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn main() {
    let minute = Duration::from_secs(60);
    let criteria = [
        Criterion {
            name: "closed forms for small grids",
            limit: Duration::from_secs(30),
            run: closed_forms,
        },
        Criterion {
            name: "square grids under the 3-neighbour process",
            limit: 10 * minute,
            run: square_grids,
        },
        Criterion {
            name: "stored sporadic sets",
            limit: Duration::from_secs(1),
            run: catalog,
        },
        Criterion {
            name: "class 0 boxes with sides 5..20",
            limit: 2 * minute,
            run: || sweep(5, 20, |a, b, c| triple_class(a as u64, b as u64, c as u64) == 0),
        },
        Criterion {
            name: "all boxes with sides 11..16",
            limit: 2 * minute,
            run: || sweep(11, 16, |_, _, _| true),
        },
        Criterion {
            name: "modified-process counts",
            limit: 30 * minute,
            run: modified_counts,
        },
        Criterion {
            name: "boxes without perfect sets",
            limit: 10 * minute,
            run: negative_results,
        },
        Criterion {
            name: "torus T(12,12,12)",
            limit: Duration::from_secs(5),
            run: torus,
        },
        Criterion {
            name: "property suites",
            limit: 10 * minute,
            run: properties,
        },
    ];
    let mut failed = 0;
    let mut err = std::io::stderr();
    for (i, c) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = (c.run)();
        let took = start.elapsed();
        let (pass, detail) = match outcome {
            Ok(d) if took <= c.limit => (true, d),
            Ok(d) => (false, format!("{d}, but took longer than {:?}", c.limit)),
            Err(e) => (false, e),
        };
        failed += usize::from(!pass);
        writeln!(
            err,
            "{} criterion {} ({}) in {:.2?}: {detail}",
            if pass { "PASS" } else { "FAIL" },
            i + 1,
            c.name,
            took
        )
        .unwrap();
    }
    writeln!(err, "{} of {} criteria passed", criteria.len() - failed, criteria.len()).unwrap();
    if failed > 0 {
        std::process::exit(1);
    }
}
