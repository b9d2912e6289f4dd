use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};

use mmds_core::checker::{is_feasible, max_membership};
use mmds_core::criteria::{run, SweepConfig, CRITERIA};
use mmds_core::graph::io::{
    parse_graph, parse_intervals, parse_solution, serialize_graph, serialize_solution,
};
use mmds_core::interval::{greedy_dominating, interval_graph, solution_ids};
use mmds_core::registry::{ReductionRegistry, SolveContext, SolverRegistry};
use mmds_core::twdp::{parse_td, serialize_td, validate_decomposition};
use mmds_core::{Graph, Instance};

#[derive(Parser)]
#[command(
    name = "mmds",
    version,
    about = "Minimum membership dominating set toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a dominating set with max membership <= k exists.
    Solve {
        #[arg(long, default_value = "brute")]
        algo: String,
        #[arg(short)]
        k: usize,
        graph: PathBuf,
        /// Tree decomposition (PACE .td) for the twdp solver.
        #[arg(long)]
        td: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Smallest k admitting a solution, with a witness.
    Minimize {
        #[arg(long, default_value = "brute")]
        algo: String,
        graph: PathBuf,
        #[arg(long)]
        td: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Check a candidate solution.
    Verify {
        #[arg(short)]
        k: usize,
        #[arg(long)]
        solution: PathBuf,
        graph: PathBuf,
    },
    /// Greedy dominating set of an interval family.
    IntervalGreedy { intervals: PathBuf },
    /// Build a reduced instance from a source instance.
    Generate {
        /// One of pp1in3sat, mcc, mis-split, sat3.
        reduction: String,
        input: PathBuf,
        #[arg(short)]
        k: Option<usize>,
        /// Write the graph here instead of stdout.
        #[arg(short, long)]
        out: Option<PathBuf>,
        #[arg(long)]
        emit_td: Option<PathBuf>,
        #[arg(long)]
        emit_witness: Option<PathBuf>,
        #[arg(long)]
        labels: Option<PathBuf>,
    },
    /// Validate a tree (or path) decomposition.
    CheckTd {
        graph: PathBuf,
        td: PathBuf,
        #[arg(long)]
        path: bool,
    },
    /// Run the acceptance sweeps.
    Bench {
        #[arg(long, default_value_t = SweepConfig::default().seed)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Run only these criteria.
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
    },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}

fn load_graph(path: &Path) -> Result<Graph> {
    parse_graph(&read(path)?).with_context(|| format!("{}", path.display()))
}

fn context(jobs: usize, td: Option<&Path>) -> Result<SolveContext> {
    let decomposition = match td {
        Some(p) => Some(parse_td(&read(p)?).with_context(|| format!("{}", p.display()))?),
        None => None,
    };
    Ok(SolveContext {
        jobs: jobs.max(1),
        decomposition,
        ..SolveContext::default()
    })
}

fn execute(cli: Cli) -> Result<(String, ExitCode)> {
    let mut out = String::new();
    let mut code = ExitCode::SUCCESS;
    match cli.command {
        Command::Solve {
            algo,
            k,
            graph,
            td,
            jobs,
        } => {
            let solvers = SolverRegistry::default();
            let solver = solvers.get(&algo)?;
            let inst = Instance::new(load_graph(&graph)?, k)?;
            match solver.solve(&inst, &context(jobs, td.as_deref())?)? {
                Some(s) => {
                    out.push_str("FEASIBLE\n");
                    out.push_str(&serialize_solution(&s));
                }
                None => out.push_str("INFEASIBLE\n"),
            }
        }
        Command::Minimize {
            algo,
            graph,
            td,
            jobs,
        } => {
            let solvers = SolverRegistry::default();
            let solver = solvers.get(&algo)?;
            let g = load_graph(&graph)?;
            let ctx = context(jobs, td.as_deref())?;
            let upper = g.max_degree() + 1;
            let mut found = None;
            for k in 1..=upper {
                if let Some(s) = solver.solve(&Instance::new(g.clone(), k)?, &ctx)? {
                    found = Some((k, s));
                    break;
                }
            }
            let Some((k, s)) = found else {
                bail!("no solution found for any k up to {upper}");
            };
            let _ = writeln!(out, "k* {k}");
            out.push_str(&serialize_solution(&s));
        }
        Command::Verify { k, solution, graph } => {
            let g = load_graph(&graph)?;
            let s = parse_solution(&read(&solution)?, &g)
                .with_context(|| format!("{}", solution.display()))?;
            let _ = writeln!(out, "{}", is_feasible(&Instance::new(g, k)?, &s));
        }
        Command::IntervalGreedy { intervals } => {
            let iv = parse_intervals(&read(&intervals)?)
                .with_context(|| format!("{}", intervals.display()))?;
            let s = greedy_dominating(&iv)?;
            for id in solution_ids(&iv, &s) {
                let _ = writeln!(out, "{id}");
            }
            let _ = writeln!(
                out,
                "max membership {}",
                max_membership(&interval_graph(&iv), &s)
            );
        }
        Command::Generate {
            reduction,
            input,
            k,
            out: target,
            emit_td,
            emit_witness,
            labels,
        } => {
            let reductions = ReductionRegistry::default();
            let r = reductions.get(&reduction)?;
            let gen = r.generate(&read(&input)?, k, emit_witness.is_some())?;
            let graph_text = serialize_graph(&gen.output.instance.graph);
            match &target {
                Some(p) => write(p, &graph_text)?,
                None => out.push_str(&graph_text),
            }
            if let Some(p) = emit_td {
                let td = match gen.decomposition {
                    Some(td) => td,
                    None => mmds_core::twdp::build_tree_decomposition(&gen.output.instance.graph),
                };
                write(&p, &serialize_td(&td, gen.output.instance.graph.n()))?;
            }
            if let Some(p) = emit_witness {
                match &gen.witness {
                    Some(s) => write(&p, &serialize_solution(s))?,
                    None => bail!("source instance has no solution; no witness to emit"),
                }
            }
            if let Some(p) = labels {
                write(&p, &gen.output.labels_text())?;
            }
            eprintln!(
                "k {}  n {}  m {}",
                gen.output.instance.k,
                gen.output.instance.graph.n(),
                gen.output.instance.graph.m()
            );
        }
        Command::CheckTd { graph, td, path } => {
            let g = load_graph(&graph)?;
            let td = parse_td(&read(&td)?).with_context(|| format!("{}", td.display()))?;
            let _ = writeln!(out, "{}", validate_decomposition(&g, &td, path));
        }
        Command::Bench { seed, jobs, only } => {
            let cfg = SweepConfig { seed, jobs };
            for &id in &only {
                if !CRITERIA.iter().any(|&(c, _)| c == id) {
                    bail!("no criterion {id}");
                }
            }
            let mut failed = 0;
            for &(id, _) in CRITERIA
                .iter()
                .filter(|(id, _)| only.is_empty() || only.contains(id))
            {
                let r = run(id, &cfg);
                failed += usize::from(!r.passed());
                let _ = writeln!(out, "{r}");
            }
            let _ = writeln!(
                out,
                "{}",
                if failed == 0 {
                    "all criteria passed".to_string()
                } else {
                    format!("{failed} criteria failed")
                }
            );
            if failed > 0 {
                code = ExitCode::from(1);
            }
        }
    }
    Ok((out, code))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let text = e.render().to_string();
            eprintln!("{}", text.lines().next().unwrap_or("usage error"));
            return ExitCode::from(2);
        }
    };
    match execute(cli) {
        Ok((text, code)) => {
            print!("{text}");
            code
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
