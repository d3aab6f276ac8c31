//! `percolate`: build, verify, bound and search percolating sets from the
//! command line.
//!
//! Exit status is 0 on success, 1 when a verification fails or no set is
//! available, and 2 for usage errors and malformed input.

mod render;

use clap::{Args, Parser, Subcommand, ValueEnum};
use percolate::board::{from_json, CellSetDoc};
use percolate::bounds::triple_report;
use percolate::construct2d::{self, PartialConstruction};
use percolate::construct3d::{build_optimal, torus_set, Construction};
use percolate::search::{
    count_modified_optimal, enumerate_percolating, exists_percolating_of_size, heuristic_search, min_percolating,
    Budget,
};
use percolate::verify::verify_claim;
use percolate::{Board, CellSet, Rule};
use serde::Serialize;
use std::io::Read;
use std::process::ExitCode;
use std::time::Duration;

#[derive(Parser)]
#[command(
    name = "percolate",
    version,
    about = "Minimum percolating sets for bootstrap percolation on grids"
)]
struct Cli {
    /// Output format. Commands that produce a cell set default to json so
    /// their output can be piped into `verify` or `render`; the rest default
    /// to text.
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Lower bound, class and status of a three dimensional box.
    Bound { a1: u64, a2: u64, a3: u64 },
    /// A planar building block: skinny, fatter, other-fatter, longer-corner,
    /// longer-corner2, jagged, cut-corner, or purina (one argument, k).
    Build2d {
        #[arg(value_enum)]
        shape: Shape,
        a1: usize,
        a2: Option<usize>,
    },
    /// An optimal percolating set for the 3-neighbour process on a box.
    Build3d { a1: usize, a2: usize, a3: usize },
    /// A percolating set for the 3-neighbour process on a torus, sides >= 12.
    Torus { a1: usize, a2: usize, a3: usize },
    /// Checks that a cell-set document percolates.
    Verify {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        rule: RuleArgs,
        /// Expected number of seeds; defaults to the size of the set.
        #[arg(long)]
        expect: Option<usize>,
    },
    /// Exact or heuristic search on an open grid.
    Search {
        #[arg(value_enum)]
        mode: Mode,
        /// Side lengths of the grid (for count-modified, the single order n).
        #[arg(required = true)]
        dims: Vec<usize>,
        #[command(flatten)]
        rule: RuleArgs,
        /// Seed-set size for exists, enumerate and heuristic.
        #[arg(long, short)]
        k: Option<usize>,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Random seed for the heuristic.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Step limit for the heuristic.
        #[arg(long, default_value_t = 1_000_000)]
        steps: u64,
    },
    /// Number of optimal percolating sets of the modified process on [n]^3.
    CountModified {
        n: usize,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Draws a cell-set document.
    Render {
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Shape {
    Skinny,
    Fatter,
    OtherFatter,
    LongerCorner,
    LongerCorner2,
    Jagged,
    CutCorner,
    Purina,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Min,
    Exists,
    CountModified,
    Enumerate,
    Heuristic,
}

#[derive(Args)]
struct Input {
    /// Read the document from standard input.
    #[arg(long, conflicts_with = "file")]
    stdin: bool,
    /// Path of a cell-set document.
    file: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct RuleArgs {
    /// Infection threshold of the r-neighbour process.
    #[arg(long, short, default_value_t = 3)]
    r: u32,
    /// Use the modified process instead.
    #[arg(long)]
    modified: bool,
}

impl RuleArgs {
    fn rule(&self) -> Rule {
        if self.modified {
            Rule::Modified
        } else {
            Rule::Threshold(self.r)
        }
    }
}

#[derive(Args)]
struct BudgetArgs {
    #[arg(long)]
    budget_nodes: Option<u64>,
    #[arg(long)]
    budget_seconds: Option<f64>,
}

impl BudgetArgs {
    fn budget(&self) -> Result<Budget, Failure> {
        let max_time = match self.budget_seconds {
            Some(s) => {
                Some(Duration::try_from_secs_f64(s).map_err(|e| Failure::usage(format!("--budget-seconds: {e}")))?)
            }
            None => None,
        };
        Ok(Budget {
            max_nodes: self.budget_nodes,
            max_time,
        })
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn failed(message: impl Into<String>) -> Failure {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<percolate::Error> for Failure {
    fn from(e: percolate::Error) -> Failure {
        match e {
            percolate::Error::NotApplicable(_) | percolate::Error::VerificationFailed(_) => {
                Failure::failed(e.to_string())
            }
            _ => Failure::usage(e.to_string()),
        }
    }
}

/// What a command prints, plus whether it counts as a failure.
struct Output {
    json: serde_json::Value,
    text: String,
    ok: bool,
}

impl Output {
    fn new(json: impl Serialize, text: impl Into<String>) -> Output {
        Output {
            json: serde_json::to_value(json).expect("output serializes"),
            text: text.into(),
            ok: true,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let produces_set = matches!(
        cli.command,
        Command::Build2d { .. } | Command::Build3d { .. } | Command::Torus { .. }
    );
    let format = cli
        .format
        .unwrap_or(if produces_set { Format::Json } else { Format::Text });
    match run(&cli.command) {
        Ok(out) => {
            match format {
                Format::Json => println!("{}", out.json),
                Format::Text => print!("{}", out.text),
            }
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: &Command) -> Result<Output, Failure> {
    match command {
        Command::Bound { a1, a2, a3 } => {
            let report = triple_report(*a1, *a2, *a3)?;
            let status = serde_json::to_value(report.status).expect("status serializes");
            let mut text = format!(
                "({a1}, {a2}, {a3}): class {}, lower bound {}, status {}\n",
                report.class,
                report.perimeter_lb,
                status.as_str().unwrap_or_default()
            );
            if let (Some(v), Some(p)) = (report.value, report.provenance) {
                let p = serde_json::to_value(p).expect("provenance serializes");
                text.push_str(&format!("value {v} ({})\n", p.as_str().unwrap_or_default()));
            }
            Ok(Output::new(report, text))
        }
        Command::Build2d { shape, a1, a2 } => {
            let pc = build2d(*shape, *a1, *a2)?;
            set_output(&pc.board, &pc.seeds, Some(&pc.leftover))
        }
        Command::Build3d { a1, a2, a3 } => {
            let c = build_optimal(*a1, *a2, *a3)
                .ok_or_else(|| Failure::failed(format!("no optimal construction known for ({a1}, {a2}, {a3})")))?;
            construction_output(&c)
        }
        Command::Torus { a1, a2, a3 } => construction_output(&torus_set(*a1, *a2, *a3)?),
        Command::Verify { input, rule, expect } => {
            let (board, seeds) = read_doc(input)?;
            let report = verify_claim(&board, rule.rule(), &seeds, expect.unwrap_or(seeds.len()), None);
            let mut text = format!(
                "{} cells, closure {}/{}, {}\n",
                report.cardinality,
                report.closure_size,
                report.board_size,
                if report.percolates {
                    "percolates"
                } else {
                    "does not percolate"
                }
            );
            for check in &report.checks {
                text.push_str(&format!(
                    "{} {}: {}\n",
                    if check.pass { "PASS" } else { "FAIL" },
                    check.name,
                    check.detail
                ));
            }
            let ok = report.pass;
            Ok(Output {
                ok,
                ..Output::new(report, text)
            })
        }
        Command::Search {
            mode,
            dims,
            rule,
            k,
            budget,
            seed,
            steps,
        } => search(*mode, dims, rule.rule(), *k, budget.budget()?, *seed, *steps),
        Command::CountModified { n, budget } => count_modified(*n, budget.budget()?),
        Command::Render { input } => {
            let (board, seeds) = read_doc(input)?;
            let text = render::render(&board, &seeds).map_err(Failure::usage)?;
            Ok(Output::new(serde_json::json!({ "render": text }), text))
        }
    }
}

fn build2d(shape: Shape, a1: usize, a2: Option<usize>) -> Result<PartialConstruction, Failure> {
    let one = |f: fn(usize) -> percolate::Result<PartialConstruction>| match a2 {
        None => Ok(f(a1)?),
        Some(_) => Err(Failure::usage("this shape takes one argument")),
    };
    let two = |f: fn(usize, usize) -> percolate::Result<PartialConstruction>| match a2 {
        Some(b) => Ok(f(a1, b)?),
        None => Err(Failure::usage("this shape takes two arguments")),
    };
    match shape {
        Shape::Skinny => one(construct2d::skinny),
        Shape::Purina => match a2 {
            None => Ok(construct2d::purina(
                u32::try_from(a1).map_err(|_| Failure::usage("k is too large"))?,
            )?),
            Some(_) => Err(Failure::usage("purina takes one argument")),
        },
        Shape::Fatter => two(construct2d::fatter),
        Shape::OtherFatter => two(construct2d::other_fatter),
        Shape::LongerCorner => two(construct2d::longer_corner),
        Shape::LongerCorner2 => two(construct2d::longer_corner2),
        Shape::Jagged => two(construct2d::jagged),
        Shape::CutCorner => two(construct2d::cut_corner),
    }
}

#[derive(Serialize)]
struct SetDoc {
    #[serde(flatten)]
    doc: CellSetDoc,
    size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    leftover: Option<Vec<Vec<usize>>>,
}

fn set_output(board: &Board, seeds: &CellSet, leftover: Option<&Vec<Vec<usize>>>) -> Result<Output, Failure> {
    let doc = CellSetDoc::new(board, seeds)?;
    let mut text = format!("{} cells on {} {:?}\n", seeds.len(), board.kind().name(), board.dims());
    if let Some(left) = leftover.filter(|l| !l.is_empty()) {
        text.push_str(&format!("closure misses {left:?}\n"));
    }
    text.push_str(&render::render(board, seeds).unwrap_or_default());
    let json = SetDoc {
        doc,
        size: seeds.len(),
        leftover: leftover.cloned(),
    };
    Ok(Output::new(json, text))
}

fn construction_output(c: &Construction) -> Result<Output, Failure> {
    set_output(&c.board, &c.seeds, None)
}

fn read_doc(input: &Input) -> Result<(Board, CellSet), Failure> {
    let text = match (&input.file, input.stdin) {
        (Some(path), false) => {
            std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?
        }
        (None, true) => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::usage(format!("stdin: {e}")))?;
            s
        }
        _ => return Err(Failure::usage("give a file or --stdin")),
    };
    Ok(from_json(&text)?)
}

#[derive(Serialize)]
struct SearchResult {
    mode: &'static str,
    dims: Vec<usize>,
    exact: bool,
    nodes: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lower: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    upper: Option<usize>,
    sets: Vec<Vec<Vec<usize>>>,
}

fn search(
    mode: Mode,
    dims: &[usize],
    rule: Rule,
    k: Option<usize>,
    budget: Budget,
    seed: u64,
    steps: u64,
) -> Result<Output, Failure> {
    if mode == Mode::CountModified {
        return match dims {
            &[n] => count_modified(n, budget),
            _ => Err(Failure::usage("count-modified takes a single order n")),
        };
    }
    let board = Board::open_grid(dims)?;
    let need_k = || k.ok_or_else(|| Failure::usage("this mode needs --k"));
    let mut result = SearchResult {
        mode: "",
        dims: dims.to_vec(),
        exact: true,
        nodes: 0,
        value: None,
        lower: None,
        upper: None,
        sets: Vec::new(),
    };
    let text = match mode {
        Mode::Min => {
            let out = min_percolating(&board, rule, budget)?;
            result.mode = "min";
            result.exact = out.exact;
            result.nodes = out.nodes;
            result.lower = Some(out.value.lower);
            result.upper = Some(out.value.upper);
            result.sets.push(board.coords_in(&out.value.witness));
            if out.exact {
                format!(
                    "minimum {}\n{}",
                    out.value.upper,
                    render::render(&board, &out.value.witness).unwrap_or_default()
                )
            } else {
                format!(
                    "budget exhausted: {} <= minimum <= {}\n",
                    out.value.lower, out.value.upper
                )
            }
        }
        Mode::Exists => {
            let k = need_k()?;
            let out = exists_percolating_of_size(&board, rule, k, budget)?;
            result.mode = "exists";
            result.exact = out.exact;
            result.nodes = out.nodes;
            match out.value {
                Some(set) => {
                    result.sets.push(board.coords_in(&set));
                    format!(
                        "found a set of {k} cells\n{}",
                        render::render(&board, &set).unwrap_or_default()
                    )
                }
                None if out.exact => format!("no percolating set of {k} cells\n"),
                None => "budget exhausted before a set was found\n".to_string(),
            }
        }
        Mode::Enumerate => {
            let k = need_k()?;
            let out = enumerate_percolating(&board, rule, k, budget)?;
            result.mode = "enumerate";
            result.exact = out.exact;
            result.nodes = out.nodes;
            result.value = Some(out.value.len() as u64);
            result.sets = out.value.iter().map(|s| board.coords_in(s)).collect();
            format!(
                "{} percolating sets of {k} cells{}\n",
                out.value.len(),
                if out.exact {
                    ""
                } else {
                    " (budget exhausted, incomplete)"
                }
            )
        }
        Mode::Heuristic => {
            let k = need_k()?;
            result.mode = "heuristic";
            result.exact = false;
            match heuristic_search(&board, rule, k, seed, steps)? {
                Some(set) => {
                    result.sets.push(board.coords_in(&set));
                    format!(
                        "found a set of {k} cells\n{}",
                        render::render(&board, &set).unwrap_or_default()
                    )
                }
                None => format!("no set of {k} cells found in {steps} steps\n"),
            }
        }
        Mode::CountModified => unreachable!(),
    };
    Ok(Output::new(result, text))
}

fn count_modified(n: usize, budget: Budget) -> Result<Output, Failure> {
    let out = count_modified_optimal(n, budget)?;
    let text = if out.exact {
        format!("{}\n", out.value)
    } else {
        format!("at least {} (budget exhausted)\n", out.value)
    };
    Ok(Output::new(out, text))
}
