//! The `curve-forge` command line: argument grammar, dispatch, and exit
//! codes.
//!
//! Exit codes: 0 affirmative, 1 negative verdict, 2 input error, 3
//! inconclusive, 4 contradiction with a theorem (a bug).

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;

mod commands;
pub mod input;
pub mod report;

pub use report::{CommandResult, Status};

#[derive(Debug, Parser)]
#[command(name = "curve-forge", version, about = "Exact computations on plane algebraic curves over Q")]
pub struct Cli {
    /// Emit one JSON object instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Height bound for rational point searches.
    #[arg(long, global = true, value_name = "H")]
    pub height_bound: Option<u64>,
    /// Largest curve degree the singular-point search accepts.
    #[arg(long, global = true, env = "CURVE_FORGE_DEGREE_CAP", value_name = "D")]
    pub degree_cap: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// All singular points of a curve.
    Singular {
        #[arg(allow_hyphen_values = true)]
        curve: String,
    },
    /// Genus by the double-point formula.
    Genus {
        #[arg(allow_hyphen_values = true)]
        curve: String,
    },
    /// Nonsingularity evidence, or a singular point.
    Smooth {
        #[arg(allow_hyphen_values = true)]
        curve: String,
    },
    /// Rational parametrizations.
    #[command(subcommand)]
    Param(ParamCommand),
    /// Implicit equation of x = x(t), y = y(t).
    Implicitize {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    /// Checks F(f, g, h) = 0 identically.
    Verify(CurveAndMap),
    /// Jacobian-minor witness for a parametrization.
    Kapferer(CurveAndMap),
    /// Non-parametrizability certificate for a smooth curve of degree >= 3.
    Certificate {
        #[arg(allow_hyphen_values = true)]
        curve: String,
    },
    /// Signed area integral of y dx, in absolute value.
    #[command(allow_negative_numbers = true)]
    Area {
        #[arg(long, allow_hyphen_values = true)]
        map: String,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// (m² − n², 2mn, m² + n²).
    #[command(allow_negative_numbers = true)]
    Pythagorean { m: BigInt, n: BigInt },
    /// max deg ≤ deg rad(ABC) − 1 for coprime A + B + C = 0.
    #[command(allow_negative_numbers = true)]
    Mason {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
    /// Classifies a candidate solution of xⁿ + yⁿ = zⁿ.
    #[command(allow_negative_numbers = true)]
    Fermatpoly {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
        #[arg(allow_hyphen_values = true)]
        z: String,
        n: u32,
    },
    /// Degree obstruction for X² − D·Y² = 1.
    Pell {
        #[arg(allow_hyphen_values = true)]
        d: String,
        /// "X;Y" to verify.
        #[arg(long, allow_hyphen_values = true)]
        solution: Option<String>,
    },
    /// Smooth solution of b1·m⁴ + a·m²n² + b2·n⁴ = e² mod p.
    #[command(allow_negative_numbers = true)]
    Local {
        b1: i64,
        a: i64,
        b2: i64,
        p: u64,
        #[arg(long, default_value_t = curve_forge::diophantine::DEFAULT_PRIME_CAP)]
        prime_cap: u64,
        /// Recount by an independent route and compare.
        #[arg(long)]
        cross_check: bool,
    },
}

#[derive(Debug, Args)]
pub struct CurveAndMap {
    #[arg(allow_hyphen_values = true)]
    pub curve: String,
    /// "x;y" in t, or "f;g;h" in u, v.
    #[arg(long, allow_hyphen_values = true)]
    pub map: String,
}

#[derive(Debug, Subcommand)]
pub enum ParamCommand {
    /// Conic through a given point.
    Conic {
        #[arg(allow_hyphen_values = true)]
        curve: String,
        #[arg(long)]
        point: String,
    },
    /// Curves F_n + F_{n-1} = 0 with a point of multiplicity n − 1 at the origin.
    Split {
        #[arg(allow_hyphen_values = true)]
        curve: String,
    },
    /// Quartic with three rational double points.
    Quartic3 {
        #[arg(allow_hyphen_values = true)]
        curve: String,
        /// "P1;P2;P3"; found automatically when omitted.
        #[arg(long)]
        nodes: Option<String>,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Singular { .. } => "singular",
            Command::Genus { .. } => "genus",
            Command::Smooth { .. } => "smooth",
            Command::Param(ParamCommand::Conic { .. }) => "param conic",
            Command::Param(ParamCommand::Split { .. }) => "param split",
            Command::Param(ParamCommand::Quartic3 { .. }) => "param quartic3",
            Command::Implicitize { .. } => "implicitize",
            Command::Verify(_) => "verify",
            Command::Kapferer(_) => "kapferer",
            Command::Certificate { .. } => "certificate",
            Command::Area { .. } => "area",
            Command::Pythagorean { .. } => "pythagorean",
            Command::Mason { .. } => "mason",
            Command::Fermatpoly { .. } => "fermatpoly",
            Command::Pell { .. } => "pell",
            Command::Local { .. } => "local",
        }
    }
}

/// Everything a process would emit.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: Status::InputError as i32, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    let name = cli.command.name();
    match commands::dispatch(&cli) {
        Ok(r) => Outcome {
            code: r.status as i32,
            stdout: if cli.json { r.to_json() + "\n" } else { r.to_text() },
            stderr: String::new(),
        },
        Err(e) => {
            let status = Status::from(e.class());
            if cli.json {
                let mut r = CommandResult::new(name, "error", status);
                r.put("class", format!("{:?}", e.class()).to_lowercase()).put("message", e.to_string());
                Outcome { code: status as i32, stdout: r.to_json() + "\n", stderr: String::new() }
            } else {
                Outcome { code: status as i32, stdout: String::new(), stderr: format!("error: {e}\n") }
            }
        }
    }
}
