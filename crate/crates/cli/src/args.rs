use clap::{Parser, Subcommand, ValueEnum};

use wicket_core::braid::FamilyKind;
use wicket_core::linalg::DEFAULT_TOL;
use wicket_core::presentation::DEFAULT_MAX_GENUS;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Pseudo-Anosov braids, train-track matrices and handlebody presentations.
#[derive(Debug, Parser)]
#[command(name = "wicket", version)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Width of the certified bracket around each root.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL, value_parser = parse_tol)]
    pub tol: f64,

    #[command(subcommand)]
    pub command: Command,
}

fn parse_tol(s: &str) -> Result<f64, String> {
    let t: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if t.is_finite() && t > 0.0 {
        Ok(t)
    } else {
        Err("tolerance must be a positive finite number".into())
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dilatation and normalized entropy of the braid on the given strands.
    Dilatation {
        #[arg(long)]
        strands: usize,
    },
    /// The limiting constant and its closed form.
    Kappa,
    /// Dilatation table for n = 0..=max-n, headed by w6.
    Table {
        #[arg(long, default_value_t = 15)]
        max_n: usize,
    },
    /// Normalized entropy against the limit 4 log kappa.
    Convergence {
        #[arg(long, default_value_t = 200)]
        max_n: usize,
        /// Report a single family member instead of a series.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Incidence matrix of the train-track map (w6 when --n is absent).
    Matrix {
        #[arg(long)]
        n: Option<usize>,
    },
    /// Characteristic polynomial and primitivity of the incidence matrix.
    Charpoly {
        #[arg(long)]
        n: Option<usize>,
    },
    /// Check characteristic polynomial and primitivity for n = 0..=max-n.
    Validate {
        #[arg(long, default_value_t = 10)]
        max_n: usize,
    },
    /// Singularity prong data of the invariant foliation.
    Prongs {
        #[arg(long)]
        n: Option<usize>,
    },
    /// Braid word utilities.
    #[command(subcommand)]
    Braid(BraidCommand),
    /// Presentation of the handlebody group of the given genus.
    Presentation {
        #[arg(long)]
        genus: usize,
    },
    /// Abelianization of the handlebody group.
    Abelianization {
        #[arg(long)]
        genus: usize,
    },
    /// Check each relation as a braid identity.
    Relations {
        #[arg(long)]
        genus: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_GENUS)]
        max_genus: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum BraidCommand {
    /// Induced permutation in cycle notation.
    Perm {
        #[arg(long)]
        strands: usize,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Exponent sum.
    Expsum {
        #[arg(long)]
        strands: usize,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Whether the pairing {1,2},{3,4},… is preserved.
    Pairing {
        #[arg(long)]
        strands: usize,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Number of components of the closure.
    Closure {
        #[arg(long)]
        strands: usize,
        #[arg(allow_hyphen_values = true)]
        word: String,
        /// Double every strand before closing.
        #[arg(long)]
        underline: bool,
    },
    /// Equality in the braid group.
    Equal {
        #[arg(long)]
        strands: usize,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// A member of one of the pseudo-Anosov families.
    Family {
        #[arg(long)]
        kind: FamilyKind,
        #[arg(long, default_value_t = 0)]
        n: usize,
    },
}
