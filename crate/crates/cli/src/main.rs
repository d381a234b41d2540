use std::process::ExitCode;

use clap::{Parser, Subcommand};
use eulerian_cli::suites::Suite;
use eulerian_cli::{
    cmd_map, cmd_poly, cmd_series, cmd_stat, cmd_tables, cmd_verify, Format, MapName, PolyFamily,
    PolyMethod, SeriesName, Table, VerifyConfig,
};
use eulerian_core::Budget;

/// Eulerian polynomials, permutation statistics and their identities.
#[derive(Parser)]
#[command(name = "eulerian", version)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[arg(long, global = true)]
    verbose: bool,
    /// Largest n for exhaustive enumeration.
    #[arg(long, global = true)]
    max_n: Option<usize>,
    /// Truncation order for series.
    #[arg(long, global = true)]
    order: Option<usize>,
    /// Largest n for scans over all n^n maps.
    #[arg(long, global = true)]
    fn_scan_max: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Eulerian coefficient tables or the Euler numbers.
    Tables {
        #[arg(value_enum)]
        which: Table,
        /// Only this r (Eulerian tables).
        #[arg(long)]
        r: Option<usize>,
    },
    /// Print statistics of a permutation, e.g. E, D', ΔE, d'E, Δ²E, z, s, eps.
    Stat {
        perm: String,
        /// Comma-separated statistic names.
        #[arg(long, value_delimiter = ',')]
        stats: Vec<String>,
    },
    /// Apply a bijection to a permutation.
    Map {
        #[arg(value_enum)]
        map: MapName,
        perm: String,
        /// Rotation power for `zeta`.
        #[arg(long, default_value_t = 1)]
        r: usize,
    },
    /// Compute a generating polynomial.
    Poly {
        #[arg(value_enum)]
        family: PolyFamily,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        r: usize,
        #[arg(long, value_enum)]
        method: Option<PolyMethod>,
    },
    /// Print the coefficients n!·[u^n] of a generating series.
    Series {
        #[arg(value_enum)]
        name: SeriesName,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let defaults = VerifyConfig::default();
    let config = VerifyConfig {
        max_n: cli.max_n.unwrap_or(defaults.max_n),
        order: cli.order.unwrap_or(defaults.order),
        fn_scan_max: cli.fn_scan_max.unwrap_or(defaults.fn_scan_max),
    };
    let budget = Budget {
        max_n: config.max_n,
        fn_scan_max: config.fn_scan_max,
        ..Budget::default()
    };
    let output = match cli.command {
        Command::Tables { which, r } => {
            let max_n = cli.max_n.unwrap_or(match which {
                Table::Eulerian => 8,
                Table::EulerNumbers => 14,
            });
            cmd_tables(which, r, max_n, cli.format)
        }
        Command::Stat { perm, stats } => cmd_stat(&perm, &stats, cli.format),
        Command::Map { map, perm, r } => cmd_map(map, &perm, r, cli.verbose, cli.format),
        Command::Poly {
            family,
            n,
            r,
            method,
        } => cmd_poly(family, n, r, method, &budget, cli.format),
        Command::Series { name } => cmd_series(name, config.order, cli.format),
        Command::Verify { suite } => {
            let report = cmd_verify(suite, &config, cli.verbose);
            return match report.render(cli.format, cli.verbose) {
                Ok(text) => {
                    print!("{text}");
                    if report.passed() {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(1)
                    }
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
            };
        }
    };
    match output {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
