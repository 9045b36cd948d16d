use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "quatfiber",
    version,
    about = "Exact audits of quaternionic reflection groups W_n(Γ, Δ) and Kleinian zero fibers"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Write the JSON report to this path.
    #[arg(long, global = true, value_name = "PATH")]
    pub json: Option<PathBuf>,

    /// Largest group order to enumerate (overrides ZF_CAP).
    #[arg(long, global = true, value_name = "INT")]
    pub cap: Option<u128>,
}

#[derive(Debug, Args, Clone)]
pub struct WreathArgs {
    /// cyclic:L, bd:N, bt, bo or bi
    #[arg(long)]
    pub gamma: String,
    /// whole, comm, cyc2 or gens:i,j,...
    #[arg(long, default_value = "whole")]
    pub delta: String,
    #[arg(long, default_value_t = 1)]
    pub n: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the catalogue groups.
    Catalog,
    /// Reflections, hyperplanes and g, h, k for W_n(Γ, Δ).
    Numerology(WreathArgs),
    /// The four hyperplane identities for W_n(Γ, Δ).
    Appendix(WreathArgs),
    /// McKay graph, affine type, δ, φ and the admissible root.
    Mckay {
        #[arg(long)]
        gamma: String,
        #[arg(long)]
        delta: Option<String>,
        /// Write the graph in Graphviz format.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
    },
    /// Reduced Groebner basis and degree of the zero fiber of C^2/Γ.
    Zerofiber {
        #[arg(long)]
        gamma: String,
    },
    /// Recheck the invariant-theory identities behind each Groebner basis.
    Audit {
        /// Only this group (default: every catalogue group).
        #[arg(long)]
        gamma: Option<String>,
    },
    /// The (g+1)^n lower bound and its semi-invariant counts.
    Lowerbound(WreathArgs),
    /// Both semi-invariant dimension tables.
    Tables {
        #[arg(long, default_value_t = 2)]
        n_min: usize,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
    },
    /// Run the acceptance suite.
    Selftest,
}
