use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};

use goursat::render::{self, CountQuery, OutputFormat};
use goursat::{counting, oracle, subgroups, Error, GoursatTuple, TypeKey};

const EXIT_USAGE: u8 = 2;
const EXIT_MISMATCH: u8 = 3;
const FIGURE_MAX_M: u64 = 40;
const FIGURE_MAX_N: u64 = 60;

/// Subgroups of Z_m x Z_n: counts, tables, enumeration, pictures and
/// brute-force verification.
#[derive(Parser)]
#[command(name = "goursat", version)]
struct Cli {
    /// Output format: plain, json or csv.
    #[arg(long, global = true, default_value = "plain")]
    format: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count subgroups, optionally restricted by order, type or cyclicity.
    #[command(group(ArgGroup::new("filter").args(["order", "type_", "cyclic"])))]
    Count {
        m: u64,
        n: u64,
        /// Only subgroups of this order.
        #[arg(long)]
        order: Option<u64>,
        /// Only subgroups isomorphic to Z_A x Z_B, given as `A,B`.
        #[arg(long = "type", value_name = "A,B")]
        type_: Option<String>,
        /// Only cyclic subgroups.
        #[arg(long)]
        cyclic: bool,
    },
    /// Full table of counts by order and isomorphism type.
    Table { m: u64, n: u64 },
    /// One record per subgroup, in tuple order.
    Enumerate {
        m: u64,
        n: u64,
        /// Stop after this many records.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Lattice-point picture of the subgroup with tuple (a,b,c,d,ell).
    Figure {
        m: u64,
        n: u64,
        a: u64,
        b: u64,
        c: u64,
        d: u64,
        ell: u64,
    },
    /// Cross-check closed forms and tuple enumeration against brute force.
    #[command(group(ArgGroup::new("target").args(["m", "range"]).required(true)))]
    Verify {
        #[arg(requires = "n")]
        m: Option<u64>,
        n: Option<u64>,
        /// Check every 1 <= m <= M_MAX, 1 <= n <= N_MAX.
        #[arg(long, num_args = 2, value_names = ["M_MAX", "N_MAX"])]
        range: Option<Vec<u64>>,
        /// Largest m*n the brute-force enumeration accepts.
        #[arg(long, default_value_t = oracle::DEFAULT_BOUND)]
        bound: u64,
    },
}

enum Failure {
    Usage(String),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn parse_type(spec: &str) -> Result<TypeKey, Failure> {
    let bad = || Failure::Usage(format!("--type expects `A,B`, got `{spec}`"));
    let (a, b) = spec.split_once(',').ok_or_else(bad)?;
    let a = a.trim().parse().map_err(|_| bad())?;
    let b = b.trim().parse().map_err(|_| bad())?;
    Ok(TypeKey::new(a, b)?)
}

fn run(cli: Cli) -> Result<String, Failure> {
    let format = cli.format;
    match cli.command {
        Command::Count {
            m,
            n,
            order,
            type_,
            cyclic,
        } => {
            let query = match (order, type_, cyclic) {
                (Some(delta), _, _) => CountQuery::Order(delta),
                (_, Some(spec), _) => CountQuery::Type(parse_type(&spec)?),
                (_, _, true) => CountQuery::Cyclic,
                _ => CountQuery::Total,
            };
            let count = match query {
                CountQuery::Total => counting::count_total(m, n)?,
                CountQuery::Order(delta) => counting::count_by_order(m, n, delta)?,
                CountQuery::Type(key) => counting::count_by_type(m, n, key)?,
                CountQuery::Cyclic => counting::count_cyclic(m, n)?,
            };
            Ok(render::render_count(m, n, query, count, format))
        }
        Command::Table { m, n } => {
            let table = counting::build_table(m, n)?;
            Ok(render::render_table(&table, format))
        }
        Command::Enumerate { m, n, limit } => {
            let records = subgroups::enumerate_tuples(m, n)?
                .take(limit.unwrap_or(usize::MAX))
                .map(|t| subgroups::describe(m, n, t))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(render::render_descriptors(m, n, &records, format))
        }
        Command::Figure {
            m,
            n,
            a,
            b,
            c,
            d,
            ell,
        } => {
            let t = GoursatTuple::new(a, b, c, d, ell);
            let set = subgroups::materialize(m, n, t)?;
            if format == OutputFormat::Plain && (m > FIGURE_MAX_M || n > FIGURE_MAX_N) {
                return Err(Failure::Usage(format!(
                    "figure is limited to m <= {FIGURE_MAX_M} and n <= {FIGURE_MAX_N}"
                )));
            }
            Ok(render::render_figure(&set, t, format))
        }
        Command::Verify {
            m,
            n,
            range,
            bound,
        } => {
            let pairs: Vec<(u64, u64)> = match (m, n, range) {
                (Some(m), Some(n), _) => vec![(m, n)],
                (_, _, Some(r)) => (1..=r[0])
                    .flat_map(|m| (1..=r[1]).map(move |n| (m, n)))
                    .collect(),
                _ => return Err(Failure::Usage("verify needs `M N` or `--range`".into())),
            };
            let reports = pairs
                .into_iter()
                .map(|(m, n)| oracle::cross_check_bounded(m, n, bound))
                .collect::<Result<Vec<_>, _>>()?;
            let text = render::render_reports(&reports, format);
            if reports.iter().all(|r| r.is_ok()) {
                Ok(text)
            } else {
                Err(Failure::Mismatch(text))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Mismatch(text)) => {
            print!("{text}");
            ExitCode::from(EXIT_MISMATCH)
        }
    }
}
