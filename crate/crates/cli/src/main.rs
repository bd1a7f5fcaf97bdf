//! Batch front-end: code reports and exports, verification suites, series
//! exports, and the assignment search.
//!
//! Exit codes: 0 success, 1 check failure, 2 usage error, 3 search budget
//! exhausted with nothing found.

mod report;
mod suites;

use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use frame48::catalog::{hamming8, moonshine_c, moonshine_d, reed_muller};
use frame48::defaults;
use frame48::modules::ModuleSystem;
use frame48::search::{assignment_search, SearchConfig};
use frame48::series::*;
use frame48::weights::WeightDistribution;
use frame48::LinearCode;

use report::{ReportConfig, VerificationReport};

/// Environment variable overriding the default truncation order.
const ORDER_ENV: &str = "FRAME48_ORDER";

#[derive(Parser)]
#[command(name = "frame48", version, about = "Exact frame-code, module and q-series toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report the frame-code facts or export codes to files.
    Codes {
        #[command(subcommand)]
        action: CodesAction,
    },
    /// Run verification suites and report pass/fail per check.
    Verify(VerifyArgs),
    /// Print a named q-expansion with exact coefficients.
    Series(SeriesArgs),
    /// Run the additive gamma-assignment search.
    Search(SearchArgs),
}

#[derive(Subcommand)]
enum CodesAction {
    /// Print dimensions, enumerators and structural facts.
    Report {
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Write a code to a file in the shared ASCII format.
    Export {
        /// Which code to export.
        #[arg(long, value_enum)]
        code: CodeName,
        /// Output path.
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CodeName {
    D,
    C,
    Hamming8,
    Rm13,
    Rm24,
    Rm35,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite to run.
    #[arg(long, default_value = "all")]
    suite: String,
    /// Series truncation order (integer powers of q), at most 60.
    #[arg(long)]
    order: Option<i64>,
    /// Comma-separated evaluation grid in (0, 0.99].
    #[arg(long, value_delimiter = ',')]
    grid: Option<Vec<f64>>,
    /// Write the JSON report here.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Run sub-suites on threads (deterministic merged output).
    #[arg(long)]
    parallel: bool,
}

#[derive(Args)]
struct SeriesArgs {
    /// One of: J, eta, theta_d24, ising0, ising_half, ising_sixteenth,
    /// mc_character.
    name: String,
    /// Truncation order (integer powers of q), at most 60.
    #[arg(long)]
    order: Option<i64>,
    /// Output format.
    #[arg(long, value_enum, default_value = "csv")]
    format: SeriesFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesFormat {
    Json,
    Csv,
}

#[derive(Args)]
struct SearchArgs {
    /// Order through which the total character must match J (at most 8).
    #[arg(long, default_value_t = defaults::SEARCH_MAX_ORDER)]
    max_order: i64,
    /// Wall-clock budget in seconds.
    #[arg(long, default_value_t = defaults::SEARCH_BUDGET_SECS)]
    budget: u64,
    /// Write the JSON search report here.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Store at most this many assignments (all are counted regardless).
    #[arg(long, default_value_t = 1000)]
    limit: usize,
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(CliError::Usage(e)) => {
            eprintln!("usage error: {e}");
            2
        }
        Err(CliError::Failed(e)) => {
            eprintln!("error: {e}");
            1
        }
    };
    std::process::exit(code);
}

/// Usage errors exit with 2, everything else that fails with 1.
enum CliError {
    Usage(String),
    Failed(String),
}

impl From<frame48::Error> for CliError {
    fn from(e: frame48::Error) -> Self {
        match e {
            frame48::Error::Input(m) => CliError::Usage(m),
            other => CliError::Failed(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Failed(e.to_string())
    }
}


fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Codes { action } => match action {
            CodesAction::Report { json } => codes_report(json),
            CodesAction::Export { code, out } => codes_export(code, &out),
        },
        Command::Verify(args) => verify(args),
        Command::Series(args) => series_cmd(args),
        Command::Search(args) => search_cmd(args),
    }
}

fn codes_report(json: bool) -> Result<i32, CliError> {
    let d = moonshine_d();
    let c = moonshine_c();
    let wd = WeightDistribution::of_code(&d).map_err(CliError::from)?;
    let wc = wd.macwilliams(7).map_err(CliError::from)?;
    let facts = serde_json::json!({
        "dim_D": d.dim(),
        "dim_C": c.dim(),
        "length": d.length(),
        "weight_enumerator_D": wd.support().map(|(w, n)| (w, n.to_string())).collect::<Vec<_>>(),
        "min_weight_C": wc.min_nonzero_weight(),
        "weight4_count_C": wc.count(4).to_string(),
        "D_subcode_of_C": d.is_subcode_of(&c),
        "C_even": c.is_even(),
        "C_generated_by_weight4": frame48::structure::generated_by_weight4(&c),
    });
    if json {
        println!("{}", serde_json::to_string_pretty(&facts).expect("serializable"));
    } else {
        println!("frame codes of length 48");
        println!("  dim D = {}   dim C = {}", d.dim(), c.dim());
        print!("  weight enumerator of D:");
        for (w, n) in wd.support() {
            print!(" {n}@{w}");
        }
        println!();
        println!("  min nonzero weight of C: {:?}", wc.min_nonzero_weight());
        println!("  weight-4 words of C: {}", wc.count(4));
        println!("  D ⊆ C: {}", d.is_subcode_of(&c));
        println!("  C even: {}", c.is_even());
        println!(
            "  C generated by weight-4 words: {}",
            frame48::structure::generated_by_weight4(&c)
        );
    }
    Ok(0)
}

fn codes_export(code: CodeName, out: &std::path::Path) -> Result<i32, CliError> {
    let code: LinearCode = match code {
        CodeName::D => moonshine_d(),
        CodeName::C => moonshine_c(),
        CodeName::Hamming8 => hamming8(),
        CodeName::Rm13 => reed_muller(1, 3).map_err(CliError::from)?,
        CodeName::Rm24 => reed_muller(2, 4).map_err(CliError::from)?,
        CodeName::Rm35 => reed_muller(3, 5).map_err(CliError::from)?,
    };
    let mut buf = Vec::new();
    code.write_ascii(&mut buf).map_err(CliError::from)?;
    fs::write(out, buf).map_err(|e| CliError::Failed(format!("cannot write {}: {e}", out.display())))?;
    println!("wrote [{},{}] code to {}", code.length(), code.dim(), out.display());
    Ok(0)
}

fn verify(args: VerifyArgs) -> Result<i32, CliError> {
    let order = resolve_order(args.order)?;
    let grid = args.grid.unwrap_or_else(|| defaults::INEQUALITY_GRID.to_vec());
    for &q in &grid {
        if !(q > 0.0 && q <= frame48::realeval::Q_MAX) {
            return Err(CliError::Usage(format!("grid point {q} outside (0, 0.99]")));
        }
    }
    let selected: Vec<String> = if args.suite == "all" {
        suites::suite_names().iter().map(|s| s.to_string()).collect()
    } else if suites::suite_names().contains(&args.suite.as_str()) {
        vec![args.suite.clone()]
    } else {
        return Err(CliError::Usage(format!(
            "unknown suite {:?}; valid: all, {}",
            args.suite,
            suites::suite_names().join(", ")
        )));
    };

    let checks = if args.parallel && selected.len() > 1 {
        // Sub-suites on threads, merged in fixed suite order.
        std::thread::scope(|scope| {
            let handles: Vec<_> = selected
                .iter()
                .map(|name| {
                    let grid = grid.clone();
                    let name = name.clone();
                    scope.spawn(move || suites::run_suite(&name, order, &grid).unwrap())
                })
                .collect();
            handles.into_iter().flat_map(|h| h.join().unwrap()).collect::<Vec<_>>()
        })
    } else {
        selected
            .iter()
            .flat_map(|name| suites::run_suite(name, order, &grid).unwrap())
            .collect()
    };

    let report = VerificationReport::new(
        ReportConfig { suite: args.suite, order, grid, parallel: args.parallel },
        checks,
    );
    print!("{}", report.render_text());
    if let Some(path) = args.json {
        let rendered = serde_json::to_string_pretty(&report).expect("serializable");
        fs::write(&path, rendered).map_err(|e| CliError::Failed(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(if report.passed() { 0 } else { 1 })
}

fn resolve_order(explicit: Option<i64>) -> Result<i64, CliError> {
    let order = match explicit {
        Some(o) => o,
        None => match std::env::var(ORDER_ENV) {
            Ok(v) => v
                .parse::<i64>()
                .map_err(|_| CliError::Usage(format!("{ORDER_ENV} must be an integer, got {v:?}")))?,
            Err(_) => defaults::DEFAULT_ORDER,
        },
    };
    if !(1..=60).contains(&order) {
        return Err(CliError::Usage(format!("order must lie in 1..=60, got {order}")));
    }
    Ok(order)
}

fn series_cmd(args: SeriesArgs) -> Result<i32, CliError> {
    let order = resolve_order(args.order)?;
    let series = match args.name.as_str() {
        "J" => j_function(order).map_err(CliError::from)?,
        "eta" => eta(order),
        "theta_d24" => theta_d24plus(order),
        "ising0" => ising_char(IsingWeight::Zero, order),
        "ising_half" => ising_char(IsingWeight::Half, order),
        "ising_sixteenth" => ising_char(IsingWeight::Sixteenth, order),
        "mc_character" => {
            let dist = WeightDistribution::of_code(&moonshine_d())
                .and_then(|w| w.macwilliams(7))
                .map_err(CliError::from)?;
            code_voa_character(&dist, order).map_err(CliError::from)?
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown series {other:?}; valid: J, eta, theta_d24, ising0, ising_half, \
                 ising_sixteenth, mc_character"
            )))
        }
    };
    match args.format {
        SeriesFormat::Csv => print!("{}", series.to_csv()),
        SeriesFormat::Json => {
            println!("{}", serde_json::to_string_pretty(&series.to_json()).expect("serializable"))
        }
    }
    Ok(0)
}

fn search_cmd(args: SearchArgs) -> Result<i32, CliError> {
    if !(0..=8).contains(&args.max_order) {
        return Err(CliError::Usage(format!("max-order must lie in 0..=8, got {}", args.max_order)));
    }
    let sys = ModuleSystem::moonshine();
    let config = SearchConfig {
        max_order: args.max_order,
        budget: Duration::from_secs(args.budget),
        store_limit: args.limit,
    };
    let report = assignment_search(&sys, &config).map_err(CliError::from)?;
    println!(
        "assignment search: {} found ({} stored), complete: {}, nodes: {}",
        report.total_found,
        report.assignments.len(),
        report.complete,
        report.nodes_visited
    );
    if let Some(ob) = &report.obstruction {
        println!("no additive assignment exists; unsatisfiability certificate:");
        match ob {
            frame48::search::Obstruction::EmptySector { tau_word } => {
                println!("  tau-word {tau_word} admits no gamma class at all");
            }
            frame48::search::Obstruction::ParityCertificate { terms } => {
                for t in terms {
                    println!(
                        "  <phi({}), {}> must be {}",
                        t.tau_word, t.check_word, t.required_parity
                    );
                }
                println!(
                    "  the functionals cancel for every additive assignment, \
                     but the required parities sum to 1 (mod 2)"
                );
            }
        }
    }
    if let Some(path) = &args.json {
        let mut buf = Vec::new();
        serde_json::to_writer_pretty(&mut buf, &report).expect("serializable");
        buf.push(b'\n');
        let mut file =
            fs::File::create(path).map_err(|e| CliError::Failed(format!("cannot write {}: {e}", path.display())))?;
        file.write_all(&buf).map_err(CliError::from)?;
    }
    if report.total_found >= 1 {
        Ok(0)
    } else if !report.complete {
        Ok(3)
    } else {
        Ok(1)
    }
}
