//! Run configuration and the weight-expression syntax accepted on the
//! command line.

use std::path::PathBuf;

use liekoszul_core::{Family, RootSystem, Weight};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Roots,
    Psi,
    Poset,
    Hilbert,
    KoszulCheck,
    Gldim,
    Attain,
    Quiver,
    Grow,
}

impl Command {
    pub fn as_str(self) -> &'static str {
        match self {
            Command::Roots => "roots",
            Command::Psi => "psi",
            Command::Poset => "poset",
            Command::Hilbert => "hilbert",
            Command::KoszulCheck => "koszul-check",
            Command::Gldim => "gldim",
            Command::Attain => "attain",
            Command::Quiver => "quiver",
            Command::Grow => "grow",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
    Pretty,
}

impl OutputFormat {
    pub fn as_str(self) -> &'static str {
        match self {
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
            OutputFormat::Pretty => "pretty",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub family: Option<Family>,
    pub rank: Option<usize>,
    /// Weight expressions, resolved once the root system is known.
    pub xi: Option<String>,
    pub lambda: Option<String>,
    pub mu: Option<String>,
    pub format: OutputFormat,
    /// `None` disables the on-disk cache.
    pub cache_dir: Option<PathBuf>,
    pub search_bound: usize,
    pub depth: i64,
    pub seed: u64,
    pub trials: usize,
    pub grow_steps: usize,
    pub max_sym_degree: usize,
    pub rank_limit: usize,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            family: None,
            rank: None,
            xi: None,
            lambda: None,
            mu: None,
            format: OutputFormat::Json,
            cache_dir: None,
            search_bound: 6,
            depth: 4,
            seed: 7,
            trials: 1000,
            grow_steps: 3,
            max_sym_degree: liekoszul_core::charlib::DEFAULT_MAX_SYM_DEGREE,
            rank_limit: liekoszul_core::rootsys::DEFAULT_RANK_LIMIT,
        }
    }

    /// Rank given explicitly, or implied by an exceptional family.
    pub fn resolved_rank(&self) -> Result<usize, CliError> {
        match (self.rank, self.family) {
            (Some(r), _) => Ok(r),
            (None, Some(Family::F)) => Ok(4),
            (None, Some(Family::G)) => Ok(2),
            (None, Some(f)) => Err(CliError::Validation(format!("--rank is required for family {f}"))),
            (None, None) => Err(CliError::Validation("--family is required".into())),
        }
    }
}

/// Parses a weight in fundamental coordinates.
///
/// Accepts a comma-separated coordinate list (`1,0,2`) or a signed sum of
/// terms `[k*]atom` with atoms `theta`, `rho`, `alphaN`, `omegaN` and `0`
/// (`2*theta-alpha2`).
pub fn parse_weight(expr: &str, rs: &RootSystem) -> Result<Weight, CliError> {
    let expr = expr.trim();
    let invalid = |why: &str| CliError::Validation(format!("bad weight '{expr}': {why}"));
    if expr.is_empty() {
        return Err(invalid("empty"));
    }
    let w = if expr.chars().any(|c| c.is_ascii_alphabetic()) {
        parse_symbolic(expr, rs).map_err(|e| invalid(&e))?
    } else {
        let coords = expr
            .split(',')
            .map(|s| s.trim().parse::<i64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| invalid(&e.to_string()))?;
        Weight::new(coords)
    };
    if w.rank() != rs.rank() {
        return Err(invalid(&format!("{} coordinates for rank {}", w.rank(), rs.rank())));
    }
    Ok(w)
}

fn parse_symbolic(expr: &str, rs: &RootSystem) -> Result<Weight, String> {
    let s: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
    let mut total = Weight::zero(rs.rank());
    let mut rest = s.as_str();
    let mut first = true;
    while !rest.is_empty() {
        let sign = match rest.as_bytes()[0] {
            b'+' => {
                rest = &rest[1..];
                1
            }
            b'-' => {
                rest = &rest[1..];
                -1
            }
            _ if first => 1,
            _ => return Err(format!("expected '+' or '-' before '{rest}'")),
        };
        first = false;
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let term = &rest[..end];
        rest = &rest[end..];
        let (k, atom) = match term.split_once('*') {
            Some((k, a)) => (k.parse::<i64>().map_err(|_| format!("bad coefficient '{k}'"))?, a),
            None => (1, term),
        };
        total = &total + &atom_value(atom, rs)?.scaled(sign * k);
    }
    Ok(total)
}

fn atom_value(atom: &str, rs: &RootSystem) -> Result<Weight, String> {
    let index = |name: &str, digits: &str| -> Result<usize, String> {
        let i: usize = digits.parse().map_err(|_| format!("bad index in '{name}'"))?;
        if i == 0 || i > rs.rank() {
            return Err(format!("'{name}' out of range for rank {}", rs.rank()));
        }
        Ok(i)
    };
    match atom {
        "theta" => Ok(rs.theta().clone()),
        "rho" => Ok(rs.rho().clone()),
        "0" => Ok(Weight::zero(rs.rank())),
        _ => {
            if let Some(d) = atom.strip_prefix("alpha") {
                Ok(rs.simple_root(index(atom, d)?).clone())
            } else if let Some(d) = atom.strip_prefix("omega") {
                Ok(Weight::fundamental(rs.rank(), index(atom, d)?))
            } else {
                Err(format!("unknown term '{atom}'"))
            }
        }
    }
}
