//! Command-line front end: sequence tables, weighted tiling counts with an
//! internal oracle cross-check, identity verification with JSON/CSV/text
//! reports, periods, and the representation solver.
//!
//! Exit codes: 0 success, 1 verification failure or oracle mismatch,
//! 2 usage error.

use clap::{Args, Parser, Subcommand};
use gibtile_core::identities::{self, GridBounds, RunConfig, VerificationReport};
use gibtile_core::number_theory;
use gibtile_core::sequence::{f_comb, fib, gib, lucas, GibonacciParams, Int};
use gibtile_core::tiling::{
    self, count_tilings, enumerate_tilings, enumeration_weight_sum, render_board, render_tiling,
    Board,
};
use std::process::ExitCode;

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "gibtile",
    version,
    about = "Exact Gibonacci sequences, weighted domino tilings and identity verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print exact sequence values, one per line
    Seq(SeqArgs),
    /// Weighted tiling counts of the board families
    Tilings {
        #[command(subcommand)]
        action: TilingsCommand,
    },
    /// Verify identities over a parameter grid
    Verify(VerifyArgs),
    /// Periods of sequences modulo m
    Period(PeriodArgs),
    /// Solve a*f(n-2) + b*f(n-1) = t
    Represent(RepresentArgs),
    /// List the errata entries with their witnesses
    Errata,
}

#[derive(Args)]
struct SeqArgs {
    /// Sequence kind: fib, f, lucas, gib, gib-swapped
    #[arg(value_parser = ["fib", "f", "lucas", "gib", "gib-swapped"])]
    kind: String,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    from: i64,
    #[arg(long, default_value_t = 10, allow_hyphen_values = true)]
    to: i64,
    /// G_0 (required for gib and gib-swapped)
    #[arg(long, allow_hyphen_values = true)]
    g0: Option<String>,
    /// G_1 (required for gib and gib-swapped)
    #[arg(long, allow_hyphen_values = true)]
    g1: Option<String>,
    /// Emit CSV (n,value) records with a header row
    #[arg(long)]
    csv: bool,
}

#[derive(Subcommand)]
enum TilingsCommand {
    /// Exact weighted count of one board
    Count(TilingsArgs),
}

#[derive(Args)]
struct TilingsArgs {
    /// Board family: plain, lucas, gib, gib-case1, double, mixed, h, h-general, l
    #[arg(
        long,
        value_parser = ["plain", "lucas", "gib", "gib-case1", "double", "mixed", "h", "h-general", "l"]
    )]
    board: String,
    #[arg(long)]
    n: i64,
    /// Row count for h-general
    #[arg(long)]
    m: Option<i64>,
    #[arg(long)]
    g0: Option<String>,
    #[arg(long)]
    g1: Option<String>,
    /// List every tiling with its weight
    #[arg(long)]
    enumerate: bool,
    /// Print ASCII art of the board (and of each tiling with --enumerate)
    #[arg(long)]
    render: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Verify every registry entry
    #[arg(long, conflicts_with = "id")]
    all: bool,
    /// Verify a single identity by id
    #[arg(long)]
    id: Option<String>,
    /// Emit the report as JSON
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    /// Emit the report as CSV
    #[arg(long)]
    csv: bool,
    /// Seed for the random parameter pairs of the desk grid
    #[arg(long, default_value_t = 7)]
    seed: u64,
    #[arg(long, default_value_t = 20)]
    nmax: i64,
    #[arg(long, default_value_t = 20)]
    mmax: i64,
    /// Restrict the grid to a single parameter pair (needs --g1)
    #[arg(long, allow_hyphen_values = true)]
    g0: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    g1: Option<String>,
    /// Verify the uncorrected printed form of an errata entry
    #[arg(long)]
    printed_form: bool,
    /// List the errata entries instead of verifying
    #[arg(long)]
    errata: bool,
}

#[derive(Args)]
struct PeriodArgs {
    /// Modulus
    #[arg(long = "mod")]
    modulus: Option<String>,
    /// G_0 of a specific sequence (with --g1: sequence-specific period)
    #[arg(long, allow_hyphen_values = true)]
    g0: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    g1: Option<String>,
    /// Print a CSV table of universal periods for all moduli up to --max-mod
    #[arg(long)]
    table: bool,
    #[arg(long, default_value_t = 50)]
    max_mod: u64,
}

#[derive(Args)]
struct RepresentArgs {
    #[arg(long)]
    t: String,
    /// How many members of the n=1 family to list explicitly
    #[arg(long, default_value_t = 5)]
    a_cap: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Seq(args) => cmd_seq(args),
        Command::Tilings { action: TilingsCommand::Count(args) } => cmd_tilings(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Period(args) => cmd_period(args),
        Command::Represent(args) => cmd_represent(args),
        Command::Errata => cmd_errata(),
    }
}

fn parse_int(label: &str, value: &str) -> Result<Int, String> {
    value.parse::<Int>().map_err(|_| format!("{label}: not an integer: {value}"))
}

fn parse_params(g0: &Option<String>, g1: &Option<String>) -> Result<GibonacciParams, String> {
    match (g0, g1) {
        (Some(a), Some(b)) => {
            Ok(GibonacciParams { g0: parse_int("--g0", a)?, g1: parse_int("--g1", b)? })
        }
        _ => Err("this invocation needs both --g0 and --g1".to_string()),
    }
}

// --- seq ---------------------------------------------------------------

fn cmd_seq(args: SeqArgs) -> Result<ExitCode, String> {
    if args.from > args.to {
        return Err(format!("--from {} exceeds --to {}", args.from, args.to));
    }
    let eval: Box<dyn Fn(i64) -> Result<Int, _>> = match args.kind.as_str() {
        "fib" => Box::new(fib),
        "f" => Box::new(f_comb),
        "lucas" => Box::new(lucas),
        "gib" | "gib-swapped" => {
            let mut p = parse_params(&args.g0, &args.g1)?;
            if args.kind == "gib-swapped" {
                p = p.swapped();
            }
            Box::new(move |n| gib(&p, n))
        }
        _ => unreachable!("kind restricted by the parser"),
    };
    if args.csv {
        println!("n,value");
    }
    for n in args.from..=args.to {
        let value = eval(n).map_err(|e| e.to_string())?;
        if args.csv {
            println!("{n},{value}");
        } else {
            println!("{value}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

// --- tilings -----------------------------------------------------------

fn build_board(args: &TilingsArgs) -> Result<Board, String> {
    let n = args.n;
    let board = match args.board.as_str() {
        "plain" => tiling::plain_board(n),
        "lucas" => tiling::lucas_board(n),
        "h" => tiling::h_board(n),
        "h-general" => {
            let m = args.m.ok_or("--board h-general needs --m")?;
            tiling::h_board_general(n, m)
        }
        kind => {
            let p = parse_params(&args.g0, &args.g1)?;
            match kind {
                "gib" => tiling::gib_board(n, &p),
                "gib-case1" => tiling::gib_board_case1(n, &p),
                "double" => tiling::double_marked_board(n, &p),
                "mixed" => tiling::mixed_board(n, &p),
                "l" => tiling::l_board(n, &p),
                _ => unreachable!("board restricted by the parser"),
            }
        }
    };
    board.map_err(|e| e.to_string())
}

fn cmd_tilings(args: TilingsArgs) -> Result<ExitCode, String> {
    let board = build_board(&args)?;
    let count = count_tilings(&board).map_err(|e| e.to_string())?;

    // internal oracle cross-check on small boards
    if board.region.len() <= 40 {
        let enumerated = enumeration_weight_sum(&board).map_err(|e| e.to_string())?;
        if enumerated != count {
            eprintln!(
                "oracle cross-check failed: count {count} but enumeration weight sum {enumerated}"
            );
            return Ok(ExitCode::from(EXIT_FAILURE));
        }
    }

    if args.render {
        print!("{}", render_board(&board));
    }
    println!("{count}");
    if args.enumerate {
        let tilings = enumerate_tilings(&board).map_err(|e| e.to_string())?;
        for (i, t) in tilings.iter().enumerate() {
            let dominoes: Vec<String> = t
                .dominoes()
                .iter()
                .map(|d| {
                    let (a, b) = d.cells();
                    format!("({},{})-({},{})", a.row, a.col, b.row, b.col)
                })
                .collect();
            println!("tiling {} weight {}: {}", i + 1, t.weight(), dominoes.join(" "));
            if args.render {
                print!("{}", render_tiling(&board, t));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

// --- verify ------------------------------------------------------------

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, String> {
    if args.errata {
        return cmd_errata();
    }
    let mut cfg = RunConfig::desk(args.seed);
    cfg.bounds = GridBounds { nmax: args.nmax, mmax: args.mmax };
    if args.g0.is_some() || args.g1.is_some() {
        cfg.params = vec![parse_params(&args.g0, &args.g1)?];
    }

    let descriptors = if args.all {
        identities::registry()
    } else if let Some(id) = &args.id {
        vec![identities::find(id).ok_or_else(|| format!("unknown identity id: {id}"))?]
    } else {
        return Err("verify needs --all or --id <ID>".to_string());
    };

    if args.printed_form && args.id.is_none() {
        return Err("--printed-form needs --id <ID>".to_string());
    }

    let reports: Vec<VerificationReport> = descriptors
        .iter()
        .map(|d| {
            if args.printed_form {
                identities::verify_printed(d, &cfg)
            } else {
                identities::verify(d, &cfg)
            }
        })
        .collect();

    if args.json {
        println!("{}", serde_json::to_string_pretty(&reports).map_err(|e| e.to_string())?);
    } else if args.csv {
        print_reports_csv(&reports);
    } else {
        print_reports_text(&reports);
    }

    if reports.iter().all(|r| r.passed()) {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(EXIT_FAILURE))
    }
}

fn print_reports_text(reports: &[VerificationReport]) {
    for r in reports {
        let status = if r.passed() { "pass" } else { "FAIL" };
        let errata = if r.errata_applied { " [errata applied]" } else { "" };
        println!("{:<4} {} points={}{}", r.id, status, r.points, errata);
        if let Some(cex) = &r.counterexample {
            let assignment: Vec<String> =
                cex.assignment.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let equation = if cex.equation.is_empty() {
                String::new()
            } else {
                format!(" [{}]", cex.equation)
            };
            println!(
                "     counterexample{}: {} -> lhs {} vs rhs {}",
                equation,
                assignment.join(", "),
                cex.lhs,
                cex.rhs
            );
        }
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    println!("{} identities checked, {} failed", reports.len(), failed);
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn print_reports_csv(reports: &[VerificationReport]) {
    println!("id,anchor,points,status,errata_applied,counterexample");
    for r in reports {
        let status = if r.passed() { "pass" } else { "fail" };
        let cex = r
            .counterexample
            .as_ref()
            .map(|c| {
                let assignment: Vec<String> =
                    c.assignment.iter().map(|(k, v)| format!("{k}={v}")).collect();
                format!("{}; lhs={}; rhs={}", assignment.join(" "), c.lhs, c.rhs)
            })
            .unwrap_or_default();
        println!(
            "{},{},{},{},{},{}",
            csv_field(&r.id),
            csv_field(&r.anchor),
            r.points,
            status,
            r.errata_applied,
            csv_field(&cex)
        );
    }
}

// --- period ------------------------------------------------------------

fn cmd_period(args: PeriodArgs) -> Result<ExitCode, String> {
    if args.table {
        println!("modulus,period");
        for (m, period) in number_theory::period_table(args.max_mod) {
            println!("{m},{period}");
        }
        return Ok(ExitCode::SUCCESS);
    }
    let modulus = parse_int(
        "--mod",
        args.modulus.as_deref().ok_or("period needs --mod <M> or --table")?,
    )?;
    let result = match (&args.g0, &args.g1) {
        (None, None) => number_theory::universal_period(&modulus),
        _ => {
            let p = parse_params(&args.g0, &args.g1)?;
            number_theory::sequence_period(&p, &modulus)
        }
    }
    .map_err(|e| e.to_string())?;
    println!("{}", result.period);
    Ok(ExitCode::SUCCESS)
}

// --- represent -----------------------------------------------------------

fn cmd_represent(args: RepresentArgs) -> Result<ExitCode, String> {
    let t = parse_int("--t", &args.t)?;
    let report = number_theory::represent(&t, args.a_cap).map_err(|e| e.to_string())?;
    println!(
        "family: n=1, b={}, a free (listing a=1..{})",
        report.family_b, args.a_cap
    );
    for s in &report.family_examples {
        println!("a={} b={} n={}", s.a, s.b, s.n);
    }
    for s in &report.solutions {
        println!("a={} b={} n={}", s.a, s.b, s.n);
    }
    Ok(ExitCode::SUCCESS)
}

// --- errata --------------------------------------------------------------

fn cmd_errata() -> Result<ExitCode, String> {
    for desc in identities::registry() {
        let Some(errata) = &desc.errata else { continue };
        let wpt = errata.witness_point();
        let printed = &errata.printed[0];
        let lhs = (printed.lhs)(&wpt);
        let rhs = (printed.rhs)(&wpt);
        println!("{}: {}", desc.id, desc.title);
        println!("  note: {}", errata.note);
        let (g0, g1) = errata.witness_params;
        let mut witness = vec![format!("g0={g0}"), format!("g1={g1}")];
        for var in desc.vars {
            witness.push(match var {
                identities::Var::N => format!("n={}", errata.witness.n),
                identities::Var::M => format!("m={}", errata.witness.m),
                identities::Var::Split => format!("N={}", errata.witness.split),
                identities::Var::P => format!("p={}", errata.witness.p),
                identities::Var::R => format!("r={}", errata.witness.r),
            });
        }
        println!("  witness: {}", witness.join(" "));
        println!("  printed form at witness: lhs {lhs} vs rhs {rhs}");
    }
    Ok(ExitCode::SUCCESS)
}
