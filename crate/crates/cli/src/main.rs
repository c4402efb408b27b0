//! `surfgroups`: command-line front end for the exact group engines.

mod commands;
mod output;

use std::path::PathBuf;

use clap::{Parser, Subcommand};

use commands::{Builtin, GroupArg, OrientArg};

#[derive(Parser)]
#[command(
    name = "surfgroups",
    version,
    about = "Exact computations in Klein bottle and torus braid groups"
)]
struct Cli {
    /// Emit a versioned JSON envelope instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normal form of a word.
    Nf {
        #[arg(long, value_enum)]
        group: GroupArg,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        /// Comma-separated generators for `--group free`; inferred from the word otherwise.
        #[arg(long)]
        alphabet: Option<String>,
    },
    /// Product of two words.
    Mul {
        #[arg(long, value_enum)]
        group: GroupArg,
        #[arg(long, allow_hyphen_values = true)]
        left: String,
        #[arg(long, allow_hyphen_values = true)]
        right: String,
        #[arg(long)]
        alphabet: Option<String>,
    },
    /// Inverse of a word.
    Inv {
        #[arg(long, value_enum)]
        group: GroupArg,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        alphabet: Option<String>,
    },
    /// Check that generator images respect every relator.
    HomCheck {
        /// A shipped homomorphism.
        #[arg(long, value_enum)]
        builtin: Option<Builtin>,
        /// Presentation file: {"alphabet": [...], "relators": [...]}.
        #[arg(long)]
        presentation: Option<PathBuf>,
        #[arg(long, value_enum)]
        target: Option<GroupArg>,
        /// Generator images as `gen=word;gen=word`.
        #[arg(long, allow_hyphen_values = true)]
        images: Option<String>,
        /// Target alphabet for `--target free`.
        #[arg(long)]
        alphabet: Option<String>,
    },
    /// Image of a Klein bottle word (in `al`, `be`) in B2(T).
    Phi1 {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Certify that phi1 is injective on |r|, |s| <= radius.
    Ball {
        #[arg(long)]
        radius: u32,
        #[arg(long, default_value_t = surfgroups::embeddings::DEFAULT_MAX_RADIUS)]
        max_radius: u32,
        /// Run on one thread.
        #[arg(long)]
        sequential: bool,
    },
    /// Mapping classes of the Klein bottle and their lifts to the torus.
    Mcgk {
        /// Print the table for E1..E4 (the default).
        #[arg(long)]
        table: bool,
        /// Image of `al` for a single endomorphism.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "table")]
        alpha: Option<String>,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "table")]
        beta: Option<String>,
    },
    /// Lift a configuration on the Klein bottle to the torus.
    Lift {
        /// `u,v;u,v;...` with rational coordinates in [0,1/2) x [0,1).
        #[arg(long, allow_hyphen_values = true)]
        points: String,
    },
    /// Smith normal form of an integer matrix.
    Snf {
        /// JSON file holding an array of integer rows.
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        /// Also print the unimodular U, V with U*A*V = D
        transforms: bool,
    },
    /// Coinvariant quotient of the fibre group abelianisation.
    Nab {
        #[arg(long, value_enum)]
        surface: OrientArg,
        #[arg(short = 'g')]
        genus: u32,
        #[arg(short = 'k')]
        punctures: u32,
    },
    /// Tabulated cd / vcd of braid and mapping class groups.
    Dims {
        /// orientable|S, nonorientable|N, sphere, torus, projective-plane, klein-bottle.
        #[arg(long)]
        surface: String,
        #[arg(short = 'g')]
        genus: Option<u32>,
        #[arg(short = 'k')]
        punctures: u32,
        /// braid, pure-braid, mcg or pmcg.
        #[arg(long)]
        group: String,
        /// cd or vcd.
        #[arg(long)]
        quantity: String,
    },
    /// Verify every shipped presentation and the phi1 relator.
    VerifyPresentations {
        /// Also run this many random consistency samples.
        #[arg(long, default_value_t = 0)]
        fuzz: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() {
    let cli = Cli::parse();
    let (name, outcome) = match &cli.command {
        Command::Nf {
            group,
            word,
            alphabet,
        } => ("nf", commands::nf(*group, alphabet.as_deref(), word)),
        Command::Mul {
            group,
            left,
            right,
            alphabet,
        } => (
            "mul",
            commands::mul(*group, alphabet.as_deref(), left, right),
        ),
        Command::Inv {
            group,
            word,
            alphabet,
        } => ("inv", commands::inv(*group, alphabet.as_deref(), word)),
        Command::HomCheck {
            builtin,
            presentation,
            target,
            images,
            alphabet,
        } => (
            "hom-check",
            commands::hom_check(
                *builtin,
                presentation.as_deref(),
                *target,
                images.as_deref(),
                alphabet.as_deref(),
            ),
        ),
        Command::Phi1 { word } => ("phi1", commands::phi1_cmd(word)),
        Command::Ball {
            radius,
            max_radius,
            sequential,
        } => ("ball", commands::ball(*radius, *max_radius, *sequential)),
        Command::Mcgk { alpha, beta, .. } => {
            ("mcgk", commands::mcgk(alpha.as_deref(), beta.as_deref()))
        }
        Command::Lift { points } => ("lift", commands::lift(points)),
        Command::Snf { matrix, transforms } => ("snf", commands::snf(matrix, *transforms)),
        Command::Nab {
            surface,
            genus,
            punctures,
        } => ("nab", commands::nab(*surface, *genus, *punctures)),
        Command::Dims {
            surface,
            genus,
            punctures,
            group,
            quantity,
        } => (
            "dims",
            commands::dims(surface, *genus, *punctures, group, quantity),
        ),
        Command::VerifyPresentations { fuzz, seed } => (
            "verify-presentations",
            commands::verify_presentations(*fuzz, *seed),
        ),
    };
    std::process::exit(output::emit(name, cli.json, outcome));
}
