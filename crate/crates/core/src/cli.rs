//! The `spaceform` command line: parsing, dispatch and formatting only.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::builders::{build_tuple_with_limit, count_by_order, enumerate_tuples, SpaceFormTuple, SpaceFormType};
use crate::error::{Error, Result};
use crate::group::{is_isomorphic, Group, DEFAULT_MAX_ORDER};
use crate::recognition::{classify_with, invariants_equal, ClassifyOptions, Rejection};
use crate::reps::{dump_matrices, free_representation, prime_generated_core, verify_free, CoreShape, DEFAULT_TOL};
use crate::wolf::{build_wolf_ii, duplication_report, WolfTypeIIParams};

/// Environment variable overriding the hard cap on group orders.
pub const MAX_ORDER_ENV: &str = "SPACEFORM_MAX_ORDER";

#[derive(Parser, Debug)]
#[command(name = "spaceform", version, about = "Finite groups acting freely on spheres")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Lines,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List every tuple of order at most N, one per line, sorted.
    Enumerate {
        #[arg(long)]
        max_order: u64,
        #[arg(long = "type", value_parser = parse_type)]
        kind: Option<SpaceFormType>,
    },
    /// Build the group of a tuple and write its Cayley table.
    Build {
        #[arg(long)]
        tuple: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify a Cayley table file.
    Classify {
        #[arg(long = "in")]
        input: PathBuf,
        /// Rebuild from the tuple and confirm isomorphism.
        #[arg(long)]
        paranoid: bool,
        /// Skip the involution, pq and Sylow tests.
        #[arg(long)]
        structure_only: bool,
    },
    /// Decide whether two Cayley tables are isomorphic.
    Iso { first: PathBuf, second: PathBuf },
    /// Certify the free representation of a tuple's group.
    Rep {
        #[arg(long)]
        tuple: String,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        /// Also print every matrix.
        #[arg(long)]
        dump: bool,
    },
    /// Number of tuples of each order up to N.
    Count {
        #[arg(long)]
        max_order: u64,
        #[arg(long, value_enum, default_value_t = Format::Lines)]
        format: Format,
    },
    /// Build a group from Wolf's type II presentation parameters.
    #[command(allow_negative_numbers = true)]
    Wolf2 {
        #[arg(required_unless_present = "duplication", num_args = 5, value_names = ["M", "N", "R", "K", "L"])]
        params: Vec<i64>,
        /// Compare against a Cayley table file.
        #[arg(long)]
        iso: Option<PathBuf>,
        /// Report on the six presentations of (3 × 5) : Q8.
        #[arg(long, conflicts_with = "params")]
        duplication: bool,
    },
}

fn parse_type(s: &str) -> std::result::Result<SpaceFormType, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// The hard cap on group orders: [`DEFAULT_MAX_ORDER`] unless overridden
/// by `SPACEFORM_MAX_ORDER`.
pub fn hard_cap() -> Result<usize> {
    match std::env::var(MAX_ORDER_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| Error::BadParameter(format!("{MAX_ORDER_ENV}={v:?} is not a positive integer"))),
        Err(_) => Ok(DEFAULT_MAX_ORDER),
    }
}

fn check_cap(n: u64) -> Result<()> {
    let cap = hard_cap()?;
    if n > cap as u64 {
        return Err(Error::TooLarge { order: n as usize, cap });
    }
    Ok(())
}

fn read_group(path: &Path) -> Result<Group> {
    let text =
        fs::read_to_string(path).map_err(|e| Error::BadParameter(format!("cannot read {}: {e}", path.display())))?;
    let g = Group::parse_table(&text)?;
    check_cap(g.order() as u64)?;
    Ok(g)
}

fn io_err(e: std::io::Error) -> Error {
    Error::BadParameter(format!("write failed: {e}"))
}

fn reject_line(r: &Rejection) -> String {
    format!("REJECT {}: {r}", r.reason.code())
}

/// Prints a value rounded to 6 decimals, without negative zero.
fn fixed6(x: f64) -> String {
    let s = format!("{:.6}", x);
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        "0.000000".into()
    } else {
        s
    }
}

/// Runs the command line and returns the process exit code: 0 on success,
/// 1 on a domain error or negative answer, 2 on a usage error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return if code == 0 { 0 } else { 2 };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}: {e}", e.name());
            1
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Enumerate { max_order, kind } => {
            check_cap(max_order)?;
            for t in enumerate_tuples(max_order).iter().filter(|t| kind.is_none_or(|k| t.kind == k)) {
                writeln!(out, "{t}").map_err(io_err)?;
            }
            Ok(0)
        }
        Command::Build { tuple, out: path } => {
            let t: SpaceFormTuple = tuple.parse()?;
            let s = build_tuple_with_limit(&t, hard_cap()?)?;
            let text = s.group.to_table_text();
            match path {
                Some(p) => fs::write(&p, text).map_err(io_err)?,
                None => out.write_all(text.as_bytes()).map_err(io_err)?,
            }
            Ok(0)
        }
        Command::Classify { input, paranoid, structure_only } => {
            let g = read_group(&input)?;
            let opts = ClassifyOptions { paranoid, check_necessary: !structure_only };
            match classify_with(&g, opts) {
                Ok(c) => {
                    writeln!(out, "{}", c.tuple).map_err(io_err)?;
                    Ok(0)
                }
                Err(r) => {
                    writeln!(out, "{}", reject_line(&r)).map_err(io_err)?;
                    Ok(1)
                }
            }
        }
        Command::Iso { first, second } => {
            let (g, h) = (read_group(&first)?, read_group(&second)?);
            let opts = ClassifyOptions::default();
            let iso = match (classify_with(&g, opts), classify_with(&h, opts)) {
                (Ok(a), Ok(b)) => invariants_equal(&a.tuple, &b.tuple),
                _ => is_isomorphic(&g, &h)?.is_some(),
            };
            writeln!(out, "{}", if iso { "ISOMORPHIC" } else { "NOT ISOMORPHIC" }).map_err(io_err)?;
            Ok(if iso { 0 } else { 1 })
        }
        Command::Rep { tuple, tol, dump } => {
            if !(tol > 0.0) {
                return Err(Error::BadParameter(format!("tolerance {tol} must be positive")));
            }
            let t: SpaceFormTuple = tuple.parse()?;
            let s = build_tuple_with_limit(&t, hard_cap()?)?;
            let core = prime_generated_core(&s)?;
            let rep = free_representation(&s, tol)?;
            let cert = verify_free(&rep);
            let shape = match &core.shape {
                CoreShape::Cyclic { order, .. } => format!("cyclic of order {order}"),
                CoreShape::BinaryTimesCyclic { kind, cyclic, .. } => {
                    format!("{kind:?} x cyclic of order {}", cyclic.order())
                }
            };
            writeln!(out, "tuple {t}").map_err(io_err)?;
            writeln!(out, "order {}", s.group.order()).map_err(io_err)?;
            writeln!(out, "core {shape}, index {}", s.group.order() / core.subgroup.order()).map_err(io_err)?;
            writeln!(out, "dimension {}", rep.dim).map_err(io_err)?;
            for class in s.group.conjugacy_classes() {
                let x = class[0];
                writeln!(
                    out,
                    "class rep={x} size={} order={} fixed_trace={}",
                    class.len(),
                    s.group.element_order(x),
                    fixed6(cert.traces[x])
                )
                .map_err(io_err)?;
            }
            writeln!(out, "max_fixed_trace {:e}", cert.max_fixed_trace.abs()).map_err(io_err)?;
            writeln!(out, "verdict {}", cert.verdict.as_str()).map_err(io_err)?;
            if dump {
                out.write_all(dump_matrices(&rep).as_bytes()).map_err(io_err)?;
            }
            Ok(0)
        }
        Command::Count { max_order, format } => {
            check_cap(max_order)?;
            let counts = count_by_order(max_order);
            match format {
                Format::Lines => {
                    let parts: Vec<String> = counts.iter().map(|(n, c)| format!("{n}:{c}")).collect();
                    writeln!(out, "{}", parts.join(" ")).map_err(io_err)?;
                }
                Format::Csv => {
                    writeln!(out, "order,count").map_err(io_err)?;
                    for (n, c) in counts {
                        writeln!(out, "{n},{c}").map_err(io_err)?;
                    }
                }
            }
            Ok(0)
        }
        Command::Wolf2 { duplication: true, .. } => {
            let report = duplication_report()?;
            writeln!(out, "{report}").map_err(io_err)?;
            Ok(if report.shared_tuple().is_some() && report.isomorphic_pairs() == 15 { 0 } else { 1 })
        }
        Command::Wolf2 { params, iso, .. } => {
            let [m, n, r, k, l] = params[..] else {
                return Err(Error::BadParameter("expected five parameters".into()));
            };
            if m <= 0 || n <= 0 {
                return Err(Error::BadParameter("m and n must be positive".into()));
            }
            check_cap(2 * m as u64 * n as u64)?;
            let p = WolfTypeIIParams::new(m as u64, n as u64, r, k, l)?;
            let g = build_wolf_ii(&p)?;
            writeln!(out, "order {}", g.order()).map_err(io_err)?;
            let mut code = match classify_with(&g, ClassifyOptions::default()) {
                Ok(c) => {
                    writeln!(out, "{}", c.tuple).map_err(io_err)?;
                    0
                }
                Err(rej) => {
                    writeln!(out, "{}", reject_line(&rej)).map_err(io_err)?;
                    1
                }
            };
            if let Some(path) = iso {
                let h = read_group(&path)?;
                let same = is_isomorphic(&g, &h)?.is_some();
                writeln!(out, "{}", if same { "ISOMORPHIC" } else { "NOT ISOMORPHIC" }).map_err(io_err)?;
                if !same {
                    code = 1;
                }
            }
            Ok(code)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("spaceform").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn count_lines_and_csv() {
        assert_eq!(run_str(&["count", "--max-order", "8"]).1, "1:1 2:1 3:1 4:1 5:1 6:1 7:1 8:2\n");
        let (code, out, _) = run_str(&["count", "--max-order", "3", "--format", "csv"]);
        assert_eq!((code, out.as_str()), (0, "order,count\n1,1\n2,1\n3,1\n"));
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_str(&["frobnicate"]).0, 2);
        assert_eq!(run_str(&["count"]).0, 2);
    }

    #[test]
    fn domain_errors_exit_1() {
        let (code, _, err) = run_str(&["build", "--tuple", "TYPE=I;g=6;a=3;Gbar=[1,2];b=1;t=2"]);
        assert_eq!(code, 1);
        assert!(err.starts_with("error: InvalidTuple:"), "{err}");
        let (code, _, err) = run_str(&["enumerate", "--max-order", "100000"]);
        assert_eq!(code, 1);
        assert!(err.starts_with("error: TooLarge:"), "{err}");
    }

    #[test]
    fn enumerate_filter() {
        let (_, out, _) = run_str(&["enumerate", "--max-order", "24", "--type", "III"]);
        assert_eq!(out, "TYPE=III;g=24;a=1;Gbar=[];b=1;theta=3\n");
    }

    #[test]
    fn wolf_negative_parameters() {
        let (code, out, _) = run_str(&["wolf2", "15", "4", "-1", "-1", "4"]);
        assert_eq!(code, 0);
        assert_eq!(out, "order 120\nTYPE=II;g=120;a=15;Gbar=[1,4,11,14];b=1;t=8\n");
    }

    #[test]
    fn rep_report() {
        let (code, out, _) = run_str(&["rep", "--tuple", "TYPE=I;g=12;a=3;Gbar=[1,2];b=1;t=4"]);
        assert_eq!(code, 0);
        assert!(out.contains("dimension 4\n"));
        assert!(out.ends_with("verdict free\n"));
    }

    #[test]
    fn fixed6_has_no_negative_zero() {
        assert_eq!(fixed6(-1e-17), "0.000000");
        assert_eq!(fixed6(2.0), "2.000000");
    }
}
