mod commands;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use bernoulli_kdv::Error;

pub const DEFAULT_REL_TOL: f64 = 1e-10;
pub const DEFAULT_BELL_TOL: f64 = 1e-10;
/// Largest index accepted by the exact routes.
pub const MAX_EXACT_N: usize = 400;

#[derive(Parser, Debug)]
#[command(
    name = "bernkdv",
    version,
    about = "Bernoulli numbers from tangent polynomials, Faulhaber sums, KdV conserved densities and elliptic functions",
    after_help = "Default tolerances: exact routes compare with equality; \
quadrature relative tolerance 1e-10 (truncation 30, 120 panels x 20 Gauss nodes, 53-bit floats); \
bell doubling tolerance 1e-10.\n\
Exit status: 0 on success, 1 when a check fails or a computation errors, 2 on usage errors."
)]
pub struct Cli {
    /// Emit one JSON report document instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Include wall-clock time in the output (makes output nondeterministic).
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct QuadArgs {
    /// Integrate over [-X, X].
    #[arg(long, default_value_t = 30.0)]
    pub truncation: f64,
    /// Number of panels (even).
    #[arg(long, default_value_t = 120)]
    pub panels: usize,
    /// Gauss-Legendre nodes per panel.
    #[arg(long, default_value_t = 20)]
    pub nodes: usize,
    /// Working precision in bits: 53 or 24.
    #[arg(long, default_value_t = 53)]
    pub precision_bits: u32,
    /// Relative tolerance.
    #[arg(long, default_value_t = DEFAULT_REL_TOL)]
    pub tolerance: f64,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Route {
    Oracle,
    Tangent,
    Quadrature,
    Kdv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Tangent generating function identity, coefficient by coefficient.
    Lemma1,
    /// Bernoulli numbers from integrals of tangent polynomials.
    Lemma2,
    /// Conserved densities at the soliton against Faulhaber polynomials.
    Eq1,
    /// Integral of T_n against its value at zero.
    Eq12,
    /// Lambda-squared Faulhaber coefficient against the Bernoulli number.
    Alpha2,
    /// Integration-by-parts reduction of the sech^2 derivative integrals.
    Parts,
    /// Laurent coefficients of the Weierstrass function satisfy its ODE.
    Ode14,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute B_n by one or more routes.
    Bernoulli {
        n: usize,
        /// Comma-separated routes.
        #[arg(long, value_delimiter = ',', default_value = "oracle")]
        route: Vec<Route>,
        #[command(flatten)]
        quad: QuadArgs,
    },
    /// Tangent polynomial T_n.
    Tangent { n: usize },
    /// Faulhaber polynomial F_m in lambda.
    Faulhaber { m: usize },
    /// Canonical conserved density P_m of the KdV equation.
    KdvDensity { m: usize },
    /// Run a verification suite.
    Verify {
        suite: Suite,
        #[arg(long)]
        max_m: Option<usize>,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        order: Option<usize>,
    },
    /// Bernoulli-Hurwitz numbers BH_{2k+2} from the Laurent expansion.
    Bh {
        /// Number of Laurent coefficients.
        k: usize,
        /// Rational g2 (p/q); prints polynomials in g2, g3 when omitted.
        #[arg(long, allow_hyphen_values = true)]
        g2: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        g3: Option<String>,
    },
    /// Elliptic Bernoulli integral on a rectangular lattice.
    Bell {
        m: usize,
        /// Real half-period.
        #[arg(long, default_value_t = 1.0)]
        omega1: f64,
        /// Imaginary part of the second half-period.
        #[arg(long, default_value_t = 1.0)]
        omega2_im: f64,
        /// Fixed trapezoid node count; doubles until converged when omitted.
        #[arg(long)]
        nodes: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_BELL_TOL)]
        tolerance: f64,
    },
    /// Quadrature accuracy table for B_2, B_4, ..., B_{2 max_m}.
    Report {
        #[arg(long, default_value_t = 10)]
        max_m: usize,
        #[command(flatten)]
        quad: QuadArgs,
    },
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Compute(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidArgument(_)
            | Error::OutOfLemmaRange(_)
            | Error::OutsideEllipticRange(_)
            | Error::Parse(_)
            | Error::DegenerateLattice(_) => CliError::Usage(e.to_string()),
            other => CliError::Compute(other),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let start = Instant::now();
    match commands::run(&cli.command, argv) {
        Ok(report) => {
            let elapsed = cli.timing.then(|| start.elapsed().as_secs_f64());
            if cli.json {
                println!("{}", report.to_json(elapsed));
            } else {
                print!("{}", report.to_text(elapsed));
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Compute(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
