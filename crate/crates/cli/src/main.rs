use std::fmt::Write as _;
use std::io::{self, Write as _};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde::Serialize;

use flc_core::census;
use flc_core::formula;
use flc_core::gf::GfKind;
use flc_core::lattice::filter_lattice;
use flc_core::verify::{self, CENSUS_MAX, FORMULA_MAX};
use flc_core::{make_sfence, Error, Family, IntPoly, Poset};

const DOT_MAX: usize = 14;
const GF_MAX_TERMS: usize = 64;

#[derive(Parser)]
#[command(
    name = "flc",
    version,
    about = "Fibonacci-like cubes: tables, diagrams and checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print polynomial coefficients for a range of n.
    Table {
        family: Family,
        from: usize,
        to: usize,
        method: Method,
        format: Format,
        /// Use this poset instead of the S-fence; row n is its first n elements.
        #[arg(long)]
        poset_file: Option<PathBuf>,
    },
    /// Run every cross-check up to max_n.
    Verify { max_n: usize },
    /// Print the Hasse diagram of the filter lattice as DOT.
    Dot {
        n: usize,
        #[arg(long)]
        poset_file: Option<PathBuf>,
    },
    /// Print the first terms of a generating function.
    Gf { family: GfKind, terms: usize },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Census,
    Recurrence,
    Closed,
    Gf,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

enum Failure {
    Usage(String),
    Capacity(String),
    Verification,
    Other(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Capacity { .. } => Failure::Capacity(e.to_string()),
            Error::Domain { .. }
            | Error::Range { .. }
            | Error::Parse { .. }
            | Error::InvalidPoset(_)
            | Error::UnknownElement(_) => Failure::Usage(e.to_string()),
            _ => Failure::Other(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Other(e.to_string())
    }
}

type CliResult<T = ()> = Result<T, Failure>;

#[derive(Serialize)]
struct JsonRow {
    n: usize,
    coeffs: Vec<u64>,
}

fn load_poset(path: &PathBuf) -> CliResult<Poset> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok(text.parse()?)
}

/// The poset whose filter lattice is row `n`.
fn row_poset(file: Option<&Poset>, n: usize) -> CliResult<Poset> {
    match file {
        None => Ok(make_sfence(n)),
        Some(p) if n <= p.len() => Ok(p.prefix(n)),
        Some(p) => Err(Failure::Usage(format!(
            "n = {n} exceeds the {} elements of the poset file",
            p.len()
        ))),
    }
}

fn table_rows(
    family: Family,
    from: usize,
    to: usize,
    method: Method,
    file: Option<&Poset>,
) -> CliResult<Vec<IntPoly>> {
    if from > to {
        return Err(Failure::Usage(format!("empty range {from}..{to}")));
    }
    if file.is_some() && method != Method::Census {
        return Err(Failure::Usage(
            "a poset file supports the census method only".into(),
        ));
    }
    if family == Family::Outdegree && method != Method::Census {
        return Err(Failure::Usage(
            "outdegree has no recurrence, closed form or generating function; use census".into(),
        ));
    }
    let limit = if method == Method::Census {
        CENSUS_MAX
    } else {
        FORMULA_MAX
    };
    if to > limit {
        return Err(Failure::Usage(format!(
            "n = {to} is above the limit {limit} for this method"
        )));
    }
    match method {
        Method::Census => (from..=to)
            .map(|n| Ok(census::census_poly(&row_poset(file, n)?, family)?))
            .collect(),
        Method::Closed => (from..=to)
            .map(|n| Ok(formula::closed_poly(family, n)?))
            .collect(),
        Method::Recurrence => {
            let rows = formula::poly_rec_seq(family, to).expect("outdegree handled above");
            Ok(rows[from..].to_vec())
        }
        Method::Gf => {
            let kind: GfKind = family.name().parse().map_err(Failure::Usage)?;
            Ok(kind.series().expand(to + 1)?.split_off(from))
        }
    }
}

fn coeffs_u64(n: usize, p: &IntPoly) -> CliResult<Vec<u64>> {
    if p.is_zero() {
        return Ok(vec![0]);
    }
    p.coeffs()
        .iter()
        .map(|c| {
            c.to_u64().ok_or_else(|| {
                Failure::Other(format!("coefficient {c} at n = {n} does not fit u64"))
            })
        })
        .collect()
}

fn render_table(from: usize, rows: &[IntPoly], format: Format) -> CliResult<String> {
    let mut out = String::new();
    match format {
        Format::Csv => {
            out.push_str("n,k,coefficient\n");
            for (i, p) in rows.iter().enumerate() {
                let n = from + i;
                if p.is_zero() {
                    writeln!(out, "{n},0,0").unwrap();
                }
                for (k, c) in p.coeffs().iter().enumerate() {
                    writeln!(out, "{n},{k},{c}").unwrap();
                }
            }
        }
        Format::Json => {
            let json: Vec<JsonRow> = rows
                .iter()
                .enumerate()
                .map(|(i, p)| {
                    Ok(JsonRow {
                        n: from + i,
                        coeffs: coeffs_u64(from + i, p)?,
                    })
                })
                .collect::<CliResult<_>>()?;
            out = serde_json::to_string(&json).map_err(|e| Failure::Other(e.to_string()))?;
            out.push('\n');
        }
    }
    Ok(out)
}

fn render_gf(kind: GfKind, terms: usize) -> CliResult<String> {
    if terms > GF_MAX_TERMS {
        return Err(Failure::Usage(format!("at most {GF_MAX_TERMS} terms")));
    }
    let mut out = String::new();
    for (n, p) in kind.series().expand(terms)?.iter().enumerate() {
        let coeffs: Vec<String> = if p.is_zero() {
            vec!["0".into()]
        } else {
            p.coeffs().iter().map(ToString::to_string).collect()
        };
        writeln!(out, "{n}: {}", coeffs.join(" ")).unwrap();
    }
    Ok(out)
}

fn run(cli: Cli) -> CliResult {
    let mut stdout = io::stdout().lock();
    match cli.command {
        Command::Table {
            family,
            from,
            to,
            method,
            format,
            poset_file,
        } => {
            let file = poset_file.as_ref().map(load_poset).transpose()?;
            let rows = table_rows(family, from, to, method, file.as_ref())?;
            stdout.write_all(render_table(from, &rows, format)?.as_bytes())?;
        }
        Command::Verify { max_n } => {
            let report = verify::verify(max_n)?;
            write!(stdout, "{report}")?;
            if !report.is_success() {
                return Err(Failure::Verification);
            }
        }
        Command::Dot { n, poset_file } => {
            if n > DOT_MAX {
                return Err(Failure::Capacity(format!("dot supports n <= {DOT_MAX}")));
            }
            let file = poset_file.as_ref().map(load_poset).transpose()?;
            let lattice = filter_lattice(&row_poset(file.as_ref(), n)?)?;
            let name = if file.is_some() {
                format!("F{n}")
            } else {
                format!("Phi{n}")
            };
            stdout.write_all(lattice.to_dot(&name).as_bytes())?;
        }
        Command::Gf { family, terms } => {
            stdout.write_all(render_gf(family, terms)?.as_bytes())?;
        }
    }
    stdout.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Other(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Capacity(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_rows() {
        let rows = table_rows(Family::Rank, 0, 3, Method::Census, None)
            .ok()
            .unwrap();
        let csv = render_table(0, &rows, Format::Csv).ok().unwrap();
        assert!(csv.starts_with("n,k,coefficient\n0,0,1\n1,0,1\n1,1,1\n"));
        assert!(csv.ends_with("3,3,1\n"));
    }

    #[test]
    fn json_rows() {
        let rows = table_rows(Family::MaxCube, 7, 7, Method::Closed, None)
            .ok()
            .unwrap();
        let json = render_table(7, &rows, Format::Json).ok().unwrap();
        assert_eq!(json, "[{\"n\":7,\"coeffs\":[0,0,2,5]}]\n");
    }

    #[test]
    fn gf_lines() {
        assert_eq!(
            render_gf(GfKind::Indegree, 3).ok().unwrap(),
            "0: 1\n1: 1 1\n2: 1 2\n"
        );
        assert_eq!(render_gf(GfKind::Rank, 1).ok().unwrap(), "0: 1\n");
        assert!(render_gf(GfKind::Rank, 65).is_err());
    }

    #[test]
    fn outdegree_is_census_only() {
        assert!(matches!(
            table_rows(Family::Outdegree, 0, 3, Method::Gf, None),
            Err(Failure::Usage(_))
        ));
        assert!(table_rows(Family::Outdegree, 0, 3, Method::Census, None).is_ok());
    }

    #[test]
    fn closed_refuses_small_n() {
        for family in [Family::MaxCube, Family::Degree, Family::Indegree] {
            assert!(matches!(
                table_rows(family, 2, 4, Method::Closed, None),
                Err(Failure::Usage(_))
            ));
        }
    }

    #[test]
    fn gf_kind_covers_table_families() {
        for family in Family::ALL {
            if family != Family::Outdegree {
                assert!(family.name().parse::<GfKind>().is_ok());
            }
        }
    }
}
