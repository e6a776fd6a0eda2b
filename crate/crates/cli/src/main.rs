use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use liekoszul::cache::default_cache_dir;
use liekoszul::{run, Command, CliError, OutputFormat, RunConfig};
use liekoszul_core::Family;

#[derive(Parser, Debug)]
#[command(name = "liekoszul", version, about = "Koszulity checks for invariant subalgebras of simple Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// Lie family: A, B, C, D, E, F or G.
    #[arg(long, global = true)]
    family: Option<String>,
    #[arg(long, global = true)]
    rank: Option<usize>,
    /// Weight: "1,0,2" or an expression such as "2*theta-alpha2".
    #[arg(long, global = true, allow_hyphen_values = true)]
    xi: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    lambda: Option<String>,
    /// Lower end of an interval [mu, lambda].
    #[arg(long, global = true, allow_hyphen_values = true)]
    mu: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Character cache (default: $LIEKOSZUL_CACHE_DIR, then ~/.cache/liekoszul).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    #[arg(long, global = true)]
    no_cache: bool,
    /// Largest level of mu tried by `attain`.
    #[arg(long, global = true, default_value_t = 6)]
    search_bound: usize,
    /// Truncation depth for `quiver`.
    #[arg(long, global = true, default_value_t = 4, allow_hyphen_values = true)]
    depth: i64,
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,
    /// Random trials for the support inequality in `psi`.
    #[arg(long, global = true, default_value_t = 1000)]
    trials: usize,
    /// Number of lambda_Psi translates visited by `grow`.
    #[arg(long, global = true, default_value_t = 3)]
    steps: usize,
    #[arg(long, global = true, default_value_t = liekoszul_core::charlib::DEFAULT_MAX_SYM_DEGREE)]
    max_sym_degree: usize,
    #[arg(long, global = true, default_value_t = liekoszul_core::rootsys::DEFAULT_RANK_LIMIT)]
    rank_limit: usize,
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum Cmd {
    /// Root system data.
    Roots,
    /// The set Psi(xi) and a seeded check of the support inequality.
    Psi,
    /// Weights below lambda (or in [mu, lambda]) with their distances.
    Poset,
    /// Hilbert matrices of the symmetric and exterior invariant algebras and the Ext matrix.
    Hilbert,
    /// Koszulity, duality and global dimension on one slice.
    KoszulCheck,
    Gldim,
    /// Search for mu realizing Ext in degree |Psi|.
    Attain,
    /// The mesh quiver and its Hom dimensions.
    Quiver,
    /// Repeat koszul-check over lambda, lambda + lambda_Psi, ...
    Grow,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum Format {
    Json,
    Csv,
    Pretty,
}

fn config(cli: Cli) -> Result<RunConfig, CliError> {
    let command = match cli.command {
        Cmd::Roots => Command::Roots,
        Cmd::Psi => Command::Psi,
        Cmd::Poset => Command::Poset,
        Cmd::Hilbert => Command::Hilbert,
        Cmd::KoszulCheck => Command::KoszulCheck,
        Cmd::Gldim => Command::Gldim,
        Cmd::Attain => Command::Attain,
        Cmd::Quiver => Command::Quiver,
        Cmd::Grow => Command::Grow,
    };
    let mut cfg = RunConfig::new(command);
    cfg.family = cli
        .family
        .map(|f| f.parse::<Family>())
        .transpose()
        .map_err(|e| CliError::Validation(e.to_string()))?;
    cfg.rank = cli.rank;
    cfg.xi = cli.xi;
    cfg.lambda = cli.lambda;
    cfg.mu = cli.mu;
    cfg.format = match cli.format {
        Format::Json => OutputFormat::Json,
        Format::Csv => OutputFormat::Csv,
        Format::Pretty => OutputFormat::Pretty,
    };
    cfg.cache_dir = if cli.no_cache { None } else { default_cache_dir(cli.cache_dir) };
    cfg.search_bound = cli.search_bound;
    cfg.depth = cli.depth;
    cfg.seed = cli.seed;
    cfg.trials = cli.trials;
    cfg.grow_steps = cli.steps;
    cfg.max_sym_degree = cli.max_sym_degree;
    cfg.rank_limit = cli.rank_limit;
    Ok(cfg)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            // --help / --version
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let err = CliError::Validation(e.kind().to_string());
            eprint!("{e}");
            print!("{}", err.to_json());
            return ExitCode::from(err.exit_code() as u8);
        }
    };
    let out = match config(cli) {
        Ok(cfg) => run(&cfg),
        Err(e) => liekoszul::RunOutput {
            code: e.exit_code(),
            stdout: e.to_json(),
        },
    };
    print!("{}", out.stdout);
    ExitCode::from(out.code as u8)
}
