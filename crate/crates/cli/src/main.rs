//! Command-line surface for the superalgebra workbench.
//!
//! Exit codes: 0 when the checked property holds (or the computation
//! succeeded for report-only commands), 1 when a checked property fails,
//! 2 on usage or parse errors.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;
mod input;
mod output;

#[derive(Parser)]
#[command(name = "superlie", version, about = "Exact workbench for graded Lie superalgebras")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
pub struct AlgebraSource {
    /// Built-in algebra: witt, virasoro, thv-centerless, ns2-centerless, ns2-central
    #[arg(long, conflicts_with = "spec")]
    preset: Option<String>,
    /// Path to an algebra definition file
    #[arg(long)]
    spec: Option<String>,
}

#[derive(Args, Clone)]
pub struct WindowArgs {
    /// Domain bound: constraints quantify over |degree| <= domain
    #[arg(long, allow_hyphen_values = true)]
    domain: String,
    /// Codomain bound: value components satisfy |degree| <= codomain
    #[arg(long, allow_hyphen_values = true)]
    codomain: String,
    /// Core bound: quotients and comparisons are taken on |degree| <= core
    #[arg(long, allow_hyphen_values = true)]
    core: String,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the superalgebra axioms on a degree window
    CheckAlgebra {
        #[command(flatten)]
        source: AlgebraSource,
        /// Degree bound for the basis pairs and triples checked
        #[arg(long)]
        window: String,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Evaluate the classical Yang-Baxter expression c(r)
    Cybe {
        #[command(flatten)]
        source: AlgebraSource,
        /// r-matrix: a file path or an inline tensor literal
        #[arg(long)]
        r: String,
        /// Also scan basis actions on c(r) up to this degree bound
        #[arg(long)]
        mybe: Option<String>,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Apply the coboundary cobracket of r to an element
    Delta {
        #[command(flatten)]
        source: AlgebraSource,
        #[arg(long)]
        r: String,
        /// The element the cobracket is applied to
        #[arg(long)]
        x: String,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Run every superbialgebra check on a window and report a verdict
    VerifyBialgebra {
        #[command(flatten)]
        source: AlgebraSource,
        #[arg(long)]
        r: String,
        /// Degree bound for the basis scans
        #[arg(long)]
        window: String,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Solve for homogeneous derivations and report the quotient by inner ones
    H1 {
        #[command(flatten)]
        source: AlgebraSource,
        /// Coefficient module: adjoint, tensor2, or block:X.Y with X,Y in {even, g+, g-}
        #[arg(long)]
        coeff: String,
        /// Homogeneity degree (integer or half-integer like 1/2)
        #[arg(long, allow_hyphen_values = true)]
        degree: String,
        #[command(flatten)]
        window: WindowArgs,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Compute the space annihilated by every in-window basis action
    Invariants {
        #[command(flatten)]
        source: AlgebraSource,
        #[arg(long)]
        coeff: String,
        #[arg(long, allow_hyphen_values = true)]
        domain: String,
        #[arg(long, allow_hyphen_values = true)]
        codomain: String,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Compare the skew-closure space with the skew subspace on the core
    SkewClosure {
        #[command(flatten)]
        source: AlgebraSource,
        #[command(flatten)]
        window: WindowArgs,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Parse a definition or element and print its canonical form
    Parse {
        #[command(flatten)]
        source: AlgebraSource,
        /// Element literal to validate against the algebra
        #[arg(long)]
        element: Option<String>,
        #[arg(long, default_value = "text")]
        format: String,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // keep clap's help/version on stdout with success, usage errors at 2
            let code = err.exit_code();
            let _ = err.print();
            return if code == 0 { ExitCode::SUCCESS } else { ExitCode::from(2) };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::CheckAlgebra { source, window, format } => {
            commands::check_algebra(&source, &window, &format)
        }
        Command::Cybe { source, r, mybe, format } => commands::cybe(&source, &r, mybe.as_deref(), &format),
        Command::Delta { source, r, x, format } => commands::delta(&source, &r, &x, &format),
        Command::VerifyBialgebra { source, r, window, format } => {
            commands::verify_bialgebra(&source, &r, &window, &format)
        }
        Command::H1 { source, coeff, degree, window, format } => {
            commands::h1(&source, &coeff, &degree, &window, &format)
        }
        Command::Invariants { source, coeff, domain, codomain, format } => {
            commands::invariants(&source, &coeff, &domain, &codomain, &format)
        }
        Command::SkewClosure { source, window, format } => {
            commands::skew_closure(&source, &window, &format)
        }
        Command::Parse { source, element, format } => commands::parse(&source, element.as_deref(), &format),
    }
}
