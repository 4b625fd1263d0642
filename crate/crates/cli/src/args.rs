use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "necklace-kit", version, about = "Necklace Lie algebras, noncommutative forms and quiver-variety strata")]
pub struct Cli {
    /// Write the structured report as JSON to this path.
    #[arg(long, global = true, value_name = "PATH")]
    pub json: Option<PathBuf>,

    /// Worker threads for parallel enumeration (results do not depend on it).
    #[arg(long, global = true, default_value_t = 1, value_name = "N")]
    pub threads: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Builtin {
    Calogero,
    A1Tilde,
    OneLoop,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct QuiverSource {
    /// Quiver description file (`vertices: k` / `arrows: label source target, …`).
    #[arg(long, value_name = "FILE")]
    pub quiver: Option<PathBuf>,

    /// Use a built-in example quiver instead of a file.
    #[arg(long, value_enum)]
    pub example: Option<Builtin>,
}

#[derive(Debug, Args)]
pub struct CapArgs {
    /// Largest allowed entry of a search box.
    #[arg(long, default_value_t = 12)]
    pub max_entry: i64,

    /// Largest allowed number of lattice points or enumerated candidates.
    #[arg(long, default_value_t = 1_000_000)]
    pub max_candidates: u64,
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    /// Largest form degree any computation may touch.
    #[arg(long, default_value_t = 3)]
    pub max_degree: usize,

    /// Largest total path length any computation may touch.
    #[arg(long, default_value_t = 6)]
    pub max_length: usize,
}

#[derive(Debug, Args)]
pub struct Target {
    /// Dimension vector, comma separated (e.g. `1,2`).
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: String,

    /// Weight λ, comma-separated rationals (e.g. `-2,1` or `-1/2,1/4`).
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the Euler and Tits forms and the double quiver.
    Info {
        #[command(flatten)]
        source: QuiverSource,
    },
    /// Enumerate positive roots in a box.
    Roots {
        #[command(flatten)]
        source: QuiverSource,
        /// Upper corner of the box, e.g. `2,3`.
        #[arg(long = "box")]
        bound: String,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Decide α ∈ S_λ and α ∈ Σ_λ with witnesses.
    Sigma {
        #[command(flatten)]
        source: QuiverSource,
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Full analysis of (α, λ): roots, Σ_λ, coadjoint verdict, types, slices.
    Classify {
        #[command(flatten)]
        source: QuiverSource,
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Kontsevich bracket of two necklaces of the double quiver.
    Bracket {
        #[command(flatten)]
        source: QuiverSource,
        /// First necklace, as a closed path like `x x` or `a b a*`.
        #[arg(long)]
        w1: String,
        /// Second necklace.
        #[arg(long)]
        w2: String,
    },
    /// Graded homology dimensions of the relative de Rham complex.
    Derham {
        #[command(flatten)]
        source: QuiverSource,
        /// Tabulate degrees 0..=N.
        #[arg(long, default_value_t = 3, value_name = "N")]
        degrees: usize,
        /// Tabulate path lengths 0..=L.
        #[arg(long, default_value_t = 4, value_name = "L")]
        lengths: usize,
        #[command(flatten)]
        bounds: BoundArgs,
    },
    /// Dimensions and homology of the Karoubi quotients dR^n.
    Karoubi {
        #[command(flatten)]
        source: QuiverSource,
        /// Tabulate degrees 0..=N.
        #[arg(long, default_value_t = 2, value_name = "N")]
        degrees: usize,
        /// Tabulate path lengths 0..=L.
        #[arg(long, default_value_t = 4, value_name = "L")]
        lengths: usize,
        #[command(flatten)]
        bounds: BoundArgs,
    },
    /// Solve μ(V) = λ numerically for a range of seeds.
    Moment {
        #[command(flatten)]
        source: QuiverSource,
        #[command(flatten)]
        target: Target,
        /// Number of seeds.
        #[arg(long, default_value_t = 10)]
        seeds: u64,
        /// First seed.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long, default_value_t = 200)]
        max_iter: usize,
        #[arg(long, default_value_t = 1e-7)]
        svd_tol: f64,
    },
}
