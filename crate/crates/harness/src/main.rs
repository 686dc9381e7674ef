use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};

use harness::bench::{self, summarize, to_csv};
use harness::gen::generate;
use harness::report::SolutionReport;
use harness::verify::{verify, VerifyParams};
use mostpoints::geom::{format_points, parse_points};
use mostpoints::solve;

#[derive(Parser)]
#[command(
    name = "mostpoints",
    version,
    about = "Cover the most points with m unit disks"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a point file exactly.
    Solve {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        m: usize,
        /// Print the solution as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Compare pair counts of the enumeration baseline and the neighborhood solver.
    Bench {
        /// Comma-separated `n:side` pairs.
        #[arg(long)]
        config: String,
        #[arg(long, default_value_t = 2)]
        m: usize,
        /// Comma-separated seeds.
        #[arg(long)]
        seeds: String,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        json_out: Option<PathBuf>,
    },
    /// Check the solver against full enumeration on random small instances.
    Verify {
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        m_max: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Stop after this many seconds, reporting the trials run so far.
        #[arg(long)]
        time_budget_secs: Option<u64>,
    },
    /// Write a uniform random instance as a point file.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        side: f64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
}

const EXIT_USAGE: u8 = 1;
const EXIT_VERIFY: u8 = 2;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.cmd) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(cmd: Command) -> anyhow::Result<ExitCode> {
    match cmd {
        Command::Solve { input, m, json } => {
            let text = fs::read_to_string(&input)
                .with_context(|| format!("reading {}", input.display()))?;
            let pts =
                parse_points(&text).with_context(|| format!("parsing {}", input.display()))?;
            if pts.is_empty() {
                bail!("{} contains no points", input.display());
            }
            let sol = solve(&pts, m)?;
            let report = SolutionReport::from(&sol);
            if json {
                println!("{}", report.to_json()?);
            } else {
                println!(
                    "covered {} of {} points with {} disks (rho = {})",
                    report.covered,
                    pts.len(),
                    m,
                    report.rho
                );
                for d in &report.disks {
                    println!("  disk ({:.6}, {:.6})", d.cx, d.cy);
                }
                for t in &report.traces {
                    println!(
                        "  i={} greedy={} exact={} neighborhood={} combos={} -> {}",
                        t.i,
                        t.greedy_gain,
                        t.exact_value,
                        t.neighborhood_size,
                        t.combos_evaluated,
                        if t.chose_greedy { "greedy" } else { "exact" }
                    );
                }
            }
        }
        Command::Bench {
            config,
            m,
            seeds,
            out,
            json_out,
        } => {
            let configs = bench::parse_configs(&config)?;
            let seeds = bench::parse_seeds(&seeds)?;
            if m >= 3 {
                eprintln!(
                    "warning: the baseline enumerates all {m}-subsets of candidate disks; \
                     this grows like n^{} and may not finish for large n",
                    2 * m
                );
            }
            let records = bench::bench(&configs, m, &seeds)?;
            fs::write(&out, to_csv(&records)?)
                .with_context(|| format!("writing {}", out.display()))?;
            if let Some(path) = json_out {
                fs::write(&path, serde_json::to_string_pretty(&records)?)
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            println!("n\tside\tseeds\tmedian_rho\tmedian_pairs_baseline\tmedian_pairs_ours\tratio");
            for s in summarize(&records) {
                println!(
                    "{}\t{}\t{}\t{}\t{}\t{}\t{:.1}",
                    s.n,
                    s.side,
                    s.seeds,
                    s.median_rho,
                    s.median_pairs_baseline,
                    s.median_pairs_ours,
                    s.ratio()
                );
            }
        }
        Command::Verify {
            trials,
            n_max,
            m_max,
            seed,
            time_budget_secs,
        } => {
            let report = verify(&VerifyParams {
                trials,
                n_max,
                m_max,
                seed,
                time_budget: time_budget_secs.map(Duration::from_secs),
            })?;
            for f in &report.failures {
                eprintln!("FAIL {f}");
            }
            println!(
                "verify: {} passed, {} failed, {} of {} trials run{}",
                report.passed,
                report.failures.len(),
                report.trials_run,
                report.trials_requested,
                if report.timed_out {
                    " (time budget hit)"
                } else {
                    ""
                }
            );
            if !report.ok() {
                return Ok(ExitCode::from(EXIT_VERIFY));
            }
        }
        Command::Gen { n, side, seed, out } => {
            let inst = generate(n, side, seed)?;
            let header = format!("# uniform n={n} side={side} seed={seed}\n");
            fs::write(&out, header + &format_points(&inst.points))
                .with_context(|| format!("writing {}", out.display()))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}
