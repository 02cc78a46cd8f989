use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ncverify_core::catalog::{build_with_budget, AlgebraId};
use ncverify_core::checks::{run_checks, select, Context, RunReport, Status};
use ncverify_core::membership::{
    growth_table, solve_membership, MembershipProblem, MembershipStatus,
};
use ncverify_core::ncpoly::DEFAULT_STEP_BUDGET;
use ncverify_core::tower::{build_s_tilde, build_s_tilde_v, build_t, build_t_tilde, Tower};
use ncverify_core::Error;
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "ncverify",
    version,
    about = "Exact identity checks for the algebra D and its relatives"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct RunOpts {
    /// Write the JSON report to FILE.
    #[arg(long, value_name = "FILE")]
    json: Option<PathBuf>,
    /// Number of worker threads.
    #[arg(long, default_value_t = default_jobs())]
    jobs: usize,
    /// Print details for passing checks too.
    #[arg(long, short)]
    verbose: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Run every check.
    All(RunOpts),
    /// Run the checks matching an id, id prefix or glob such as `weyl-*`.
    Check {
        filter: String,
        #[command(flatten)]
        opts: RunOpts,
    },
    /// List the registered checks.
    List,
    /// Print the normal form of an expression.
    Nf {
        /// D, D_LX, D_LU, J, OG, H, SL2, or a tower: T, S~, S~[v], T~.
        #[arg(long, default_value = "D")]
        algebra: String,
        expr: String,
    },
    /// Look for right cofactors with target = sum of n_i h_i.
    Member {
        #[arg(long, default_value = "D")]
        algebra: String,
        /// Comma-separated ideal generators.
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 2)]
        bound: u32,
        #[arg(long)]
        json: bool,
    },
    /// Count PBW monomials of D by total degree.
    Growth {
        #[arg(long, default_value_t = 12)]
        max: u64,
        #[arg(long)]
        json: bool,
    },
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn step_budget() -> Result<u64, String> {
    match std::env::var("NCVERIFY_STEP_BUDGET") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| format!("NCVERIFY_STEP_BUDGET must be a positive integer, got `{v}`")),
        Err(_) => Ok(DEFAULT_STEP_BUDGET),
    }
}

enum Failure {
    Usage(String),
    Checks,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn tower(name: &str) -> Option<Tower> {
    match name {
        "T" => Some(build_t()),
        "S~" | "S_tilde" => Some(build_s_tilde()),
        "S~[v]" | "S_tilde_v" => Some(build_s_tilde_v()),
        "T~" | "T_tilde" => Some(build_t_tilde()),
        _ => None,
    }
}

fn print_report(report: &RunReport, verbose: bool) {
    for c in &report.checks {
        let tag = match c.status {
            Status::Pass => "PASS  ",
            Status::Fail => "FAIL  ",
            Status::Report => "REPORT",
        };
        println!("{tag} {:<24} {:>7} ms  {}", c.id, c.wall_time_ms, c.claim);
        if verbose || c.status != Status::Pass {
            for d in &c.details {
                println!("         {d}");
            }
        }
    }
    println!("convention elected: {}", report.convention_elected.value);
    let count = |s| report.checks.iter().filter(|c| c.status == s).count();
    println!(
        "{} checks: {} pass, {} fail, {} report",
        report.checks.len(),
        count(Status::Pass),
        count(Status::Fail),
        count(Status::Report)
    );
}

fn run(filter: &str, opts: &RunOpts) -> Result<(), Failure> {
    if select(filter).is_empty() {
        return Err(Failure::Usage(format!("no check matches `{filter}`")));
    }
    // A catalog that cannot be built is a failed verification, not a usage error.
    let ctx = match Context::new(step_budget().map_err(Failure::Usage)?) {
        Ok(ctx) => ctx,
        Err(e) => {
            eprintln!("error: {e}");
            return Err(Failure::Checks);
        }
    };
    let report = run_checks(&ctx, filter, opts.jobs);
    print_report(&report, opts.verbose);
    if let Some(path) = &opts.json {
        std::fs::write(path, report.to_json())
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
    }
    if report.failed() > 0 {
        Err(Failure::Checks)
    } else {
        Ok(())
    }
}

fn execute(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::All(opts) => run("all", &opts),
        Command::Check { filter, opts } => run(&filter, &opts),
        Command::List => {
            for d in select("all") {
                println!("{:<24} {}", d.id, d.claim);
            }
            Ok(())
        }
        Command::Nf { algebra, expr } => {
            if let Some(t) = tower(&algebra) {
                let e = t.parse(&expr)?;
                println!("{}", t.render(&e));
                return Ok(());
            }
            let id: AlgebraId = algebra.parse()?;
            let entry = build_with_budget(id, step_budget().map_err(Failure::Usage)?)?;
            let p = entry.parse(&expr)?;
            println!("{}", entry.display(&p));
            Ok(())
        }
        Command::Member {
            algebra,
            ideal,
            target,
            bound,
            json,
        } => {
            let id: AlgebraId = algebra.parse()?;
            let entry = build_with_budget(id, step_budget().map_err(Failure::Usage)?)?;
            let gens = ideal
                .split(',')
                .map(|g| entry.parse(g.trim()))
                .collect::<Result<Vec<_>, _>>()?;
            let problem = MembershipProblem {
                target: entry.parse(&target)?,
                normal: vec![true; gens.len()],
                ideal_generators: gens,
                cofactor_degree_bound: bound,
            };
            let r = solve_membership(&problem, &entry.presentation)?;
            let names: Vec<&str> = ideal.split(',').map(str::trim).collect();
            match &r.status {
                MembershipStatus::Witness(h) => {
                    let cof: Vec<String> = h.iter().map(|c| entry.display(c)).collect();
                    if json {
                        let rows: Vec<_> = names
                            .iter()
                            .zip(&cof)
                            .map(|(n, c)| json!({"generator": n, "cofactor": c}))
                            .collect();
                        let out = json!({
                            "status": "witness",
                            "bound": bound,
                            "unknowns": r.unknowns,
                            "rank": r.rank,
                            "cofactors": rows,
                        });
                        println!("{}", serde_json::to_string_pretty(&out).expect("json"));
                    } else {
                        println!("witness at bound {bound}:");
                        for (n, c) in names.iter().zip(&cof) {
                            println!("  {n} * ({c})");
                        }
                    }
                }
                MembershipStatus::NoWitnessAtBound(b) => {
                    if json {
                        let out = json!({
                            "status": "no_witness_at_bound",
                            "bound": b,
                            "unknowns": r.unknowns,
                            "equations": r.equations,
                            "rank": r.rank,
                        });
                        println!("{}", serde_json::to_string_pretty(&out).expect("json"));
                    } else {
                        println!(
                            "no witness at bound {b} (inconclusive): {} unknowns, {} equations, rank {}",
                            r.unknowns, r.equations, r.rank
                        );
                    }
                }
            }
            Ok(())
        }
        Command::Growth { max, json } => {
            let rows = growth_table(max);
            if json {
                let out: Vec<_> = rows
                    .iter()
                    .map(|r| {
                        json!({
                            "n": r.n,
                            "monomial_count": r.monomial_count,
                            "expected_count": r.expected_count,
                            "log_ratio": r.log_ratio,
                        })
                    })
                    .collect();
                println!("{}", serde_json::to_string_pretty(&out).expect("json"));
            } else {
                println!(
                    "{:>4} {:>14} {:>14} {:>10}",
                    "n", "count", "closed form", "log ratio"
                );
                for r in &rows {
                    let lr = r.log_ratio.map_or("-".to_string(), |v| format!("{v:.4}"));
                    println!(
                        "{:>4} {:>14} {:>14} {:>10}",
                        r.n, r.monomial_count, r.expected_count, lr
                    );
                }
            }
            if rows.iter().any(|r| r.monomial_count != r.expected_count) {
                return Err(Failure::Checks);
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let worker = std::thread::Builder::new()
        .stack_size(64 << 20)
        .spawn(move || execute(cli))
        .expect("spawn worker");
    match worker.join().expect("worker thread") {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
