//! Command-line front end. [`run`] does all the work so it can be driven
//! from tests; the binary only forwards `argv` and the standard streams.
//!
//! Exit codes: `0` success, `1` usage or input error, `2` a verification
//! failure.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use crate::bar_tableaux::enumerate_tableaux;
use crate::characters::character;
use crate::error::Error;
use crate::partitions::{OddPartition, Partition, SkewShape, StrictPartition};
use crate::qfunctions::{q_function, Route};
use crate::srank::{min_bars_bruteforce, minimal_tableau, place_zeros, srank_skew, BRUTE_FORCE_BOUND};
use crate::verify::{conjecture_level, skew_level, LevelReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "schurq", version, about = "Schur Q-functions, spin characters and sranks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Power-sum expansion of Q_λ or Q_{λ/μ}
    Qfun {
        /// Shape such as `5,3,1` or `4,3/3`
        shape: Option<String>,
        /// Skew shape, as an alternative to the positional argument
        #[arg(long, conflicts_with = "shape")]
        skew: Option<String>,
        /// morris, recur, pf or strips (default: morris, or pf for skew shapes)
        #[arg(long)]
        route: Option<Route>,
        /// Print the terms as JSON
        #[arg(long)]
        json: bool,
    },
    /// srank of a strict or skew shifted shape
    Srank {
        shape: String,
        /// Print the zero placement and a bar tableau with the fewest bars
        #[arg(long)]
        witness: bool,
        /// Compare with the brute-force minimum number of bars
        #[arg(long)]
        check: bool,
        /// Largest |λ| accepted by --witness and --check
        #[arg(long, default_value_t = BRUTE_FORCE_BOUND)]
        bound: usize,
    },
    /// Spin character value ⟨λ⟩(π)
    Character { lambda: String, pi: String },
    /// Bar tableaux of shape λ (or λ/μ) whose label k bar has size π_k
    Tableaux { shape: String, pi: String },
    /// Verification sweeps
    Verify {
        #[arg(value_enum)]
        sweep: Sweep,
        #[arg(long)]
        max_n: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Sweep {
    /// lowest degree of Q_λ equals srank(λ)
    Conjecture,
    /// route equality, srank oracle and lower bound on skew shapes
    Skew,
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

/// Runs the command line `args` (including the program name), writing
/// results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{rendered}");
                EXIT_OK
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Qfun {
            shape,
            skew,
            route,
            json,
        } => {
            let text = shape.or(skew).ok_or_else(|| usage("qfun needs a shape"))?;
            qfun(&text, route, json, out)
        }
        Command::Srank {
            shape,
            witness,
            check,
            bound,
        } => srank(&shape, witness, check, bound, out),
        Command::Character { lambda, pi } => {
            let lam: StrictPartition = lambda.parse()?;
            let pi = parse_odd(&pi)?;
            writeln!(out, "{}", character(&lam, &pi)?)?;
            Ok(())
        }
        Command::Tableaux { shape, pi } => tableaux(&shape, &pi, out),
        Command::Verify { sweep, max_n } => verify(sweep, max_n, out),
    }
}

fn parse_odd(text: &str) -> Result<OddPartition, Failure> {
    let parts = parse_composition(text)?;
    Ok(OddPartition::new(Partition::from_unsorted(parts).parts().to_vec())?)
}

fn parse_composition(text: &str) -> Result<Vec<usize>, Failure> {
    let text = text.trim().trim_start_matches('(').trim_end_matches(')');
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|tok| {
            let tok = tok.trim();
            match tok.parse::<i64>() {
                Ok(v) if v > 0 => Ok(v as usize),
                Ok(v) => Err(Error::NonPositivePart(v).into()),
                Err(_) => Err(Error::BadToken(tok.to_string()).into()),
            }
        })
        .collect()
}

fn qfun(text: &str, route: Option<Route>, json: bool, out: &mut dyn Write) -> Result<(), Failure> {
    let shape: SkewShape = text.parse()?;
    let route = route.unwrap_or(if shape.is_straight() {
        Route::Morris
    } else {
        Route::Pf
    });
    let q = q_function(&shape, route)
        .ok_or_else(|| usage(format!("route {route} only handles straight shapes")))?;
    if json {
        writeln!(out, "{}", q.to_json())?;
    } else {
        writeln!(out, "{q}")?;
    }
    Ok(())
}

fn srank(
    text: &str,
    witness: bool,
    check: bool,
    bound: usize,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let shape: SkewShape = text.parse()?;
    let value = srank_skew(&shape)?;
    writeln!(out, "{value}")?;
    if witness {
        let config = place_zeros(&shape)?;
        writeln!(out, "zeros:")?;
        writeln!(out, "{config}")?;
        match minimal_tableau(&shape, bound)? {
            Some(t) => {
                writeln!(out, "tableau with {} bars:", t.num_bars())?;
                writeln!(out, "{}", t.filling())?;
            }
            None => writeln!(out, "no bar tableau")?,
        }
    }
    if check {
        let min = min_bars_bruteforce(&shape, bound)?;
        match min {
            Some(m) if m == value => writeln!(out, "check: ok")?,
            Some(m) => {
                writeln!(out, "check: minimum bars {m}")?;
                return Err(Failure {
                    code: EXIT_VERIFY,
                    message: format!("srank {value} differs from minimum bars {m}"),
                });
            }
            None => {
                return Err(Failure {
                    code: EXIT_VERIFY,
                    message: "no bar tableau exists".into(),
                })
            }
        }
    }
    Ok(())
}

fn tableaux(text: &str, pi: &str, out: &mut dyn Write) -> Result<(), Failure> {
    let shape: SkewShape = text.parse()?;
    let type_vector = parse_composition(pi)?;
    if let Some(&r) = type_vector.iter().find(|&&r| r % 2 == 0) {
        return Err(Error::EvenPart(r).into());
    }
    let all = enumerate_tableaux(shape.outer(), shape.inner(), &type_vector)?;
    let mut total = 0i64;
    for (k, t) in all.iter().enumerate() {
        let w = t.weight();
        total += w;
        writeln!(out, "T{}: weight {w}", k + 1)?;
        writeln!(out, "{}", t.filling())?;
    }
    writeln!(out, "{} tableaux, weight sum {total}", all.len())?;
    Ok(())
}

fn verify(sweep: Sweep, max_n: usize, out: &mut dyn Write) -> Result<(), Failure> {
    let mut reports: Vec<LevelReport> = Vec::new();
    for n in 1..=max_n {
        let r = match sweep {
            Sweep::Conjecture => conjecture_level(n),
            Sweep::Skew => skew_level(n),
        };
        writeln!(
            out,
            "n={n}: {} shapes, {} violations",
            r.shapes,
            r.violations.len()
        )?;
        for v in &r.violations {
            writeln!(out, "  {v}")?;
        }
        reports.push(r);
    }

    let mut names: Vec<&'static str> = Vec::new();
    for r in &reports {
        for (c, _) in &r.checks {
            if !names.contains(c) {
                names.push(c);
            }
        }
    }
    writeln!(out)?;
    writeln!(out, "{:<26} {:>8} {:>10}", "check", "shapes", "violations")?;
    for name in &names {
        let ran: usize = reports
            .iter()
            .flat_map(|r| r.checks.iter())
            .filter(|(c, _)| c == name)
            .map(|(_, k)| k)
            .sum();
        let failed = reports
            .iter()
            .flat_map(|r| r.violations.iter())
            .filter(|v| v.check == *name)
            .count();
        writeln!(out, "{name:<26} {ran:>8} {failed:>10}")?;
    }
    let failed: usize = reports.iter().map(|r| r.violations.len()).sum();
    if failed == 0 {
        writeln!(out, "all checks passed")?;
        Ok(())
    } else {
        Err(Failure {
            code: EXIT_VERIFY,
            message: format!("{failed} violations"),
        })
    }
}
