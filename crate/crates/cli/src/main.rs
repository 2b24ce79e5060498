//! `kitaev`: command-line front end to the lattice-model library.

mod commands;
mod inputs;
mod output;

use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use commands::protect::{ComputeArgs, ExcisionArgs};
use output::Output;

const DEFAULT_SEED: u64 = 2024;

#[derive(Parser)]
#[command(name = "kitaev", version, about = "Exact computations for Kitaev lattice models over Hopf algebras")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
    /// Seed for every randomised step; the same seed reproduces the same output.
    #[arg(long, default_value_t = DEFAULT_SEED, global = true)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Ribbon graphs: invariants, reduction to standard form, connected sums.
    #[command(subcommand)]
    Graph(GraphCmd),
    /// Hopf algebras: axioms, pairs in involution, integrals.
    #[command(subcommand)]
    Hopf(HopfCmd),
    /// Extended spaces: structure checks and transport along moves.
    #[command(subcommand)]
    Lattice(LatticeCmd),
    /// Protected spaces and the checks built on them.
    #[command(subcommand)]
    Protect(ProtectCmd),
    /// Runs the acceptance criteria, one line each.
    Acceptance {
        /// Run only these criteria (1 to 11).
        #[arg(long, value_delimiter = ',')]
        only: Vec<usize>,
    },
}

#[derive(Subcommand)]
enum GraphCmd {
    /// Genus, boundary components and cell counts. GRAPH is `std:g,a` or a JSON file.
    Info { graph: String },
    /// Reduces to the standard graph and prints the move word.
    Reduce {
        graph: String,
        /// Apply this many seeded random moves first.
        #[arg(long, default_value_t = 0)]
        scramble: usize,
    },
    /// Connected sum of two graphs.
    Sum { first: String, second: String },
}

#[derive(Subcommand)]
enum HopfCmd {
    /// Checks the Hopf algebra axioms. HOPF is `builtin:NAME` or a JSON file.
    Check { hopf: String },
    /// Lists the pairs in involution with their indices.
    Pairs { hopf: String },
    /// Left integral, distinguished group-like and character, semisimplicity.
    Integrals { hopf: String },
}

#[derive(clap::Args)]
struct SpaceArgs {
    /// `builtin:NAME` or a Hopf algebra JSON file.
    #[arg(long)]
    hopf: String,
    /// Index into `hopf pairs`.
    #[arg(long, default_value_t = 0)]
    pair: usize,
    /// `std:g,a` or a graph JSON file.
    #[arg(long)]
    graph: String,
}

#[derive(Subcommand)]
enum LatticeCmd {
    /// Interchange, Yetter–Drinfeld and move checks on the extended space.
    Verify {
        #[command(flatten)]
        space: SpaceArgs,
    },
    /// Transports along a move word and checks the intertwining property.
    Move {
        #[command(flatten)]
        space: SpaceArgs,
        /// JSON list of moves, inline or as a file.
        #[arg(long)]
        word: String,
    },
}

#[derive(Subcommand)]
enum ProtectCmd {
    /// Dimension of the protected space, with the cotensor and tensor stages.
    Compute {
        #[command(flatten)]
        space: SpaceArgs,
        /// `unit-U`, `trivial`, `one-dim:g,chi` or a module-comodule JSON file.
        #[arg(long, default_value = "trivial")]
        coeff: String,
        /// Take all cilia at once instead of one at a time.
        #[arg(long)]
        one_shot: bool,
    },
    /// Protected dimensions for every one-dimensional coefficient, inflated from the
    /// quotient when the algebra is a Taft algebra.
    Table {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long)]
        quotient: Option<String>,
    },
    /// Closed-surface dimension for a group algebra from the group alone.
    OracleGroup {
        /// `Zn`, `S3` or a Hopf selector.
        #[arg(long)]
        group: String,
        #[arg(long)]
        genus: usize,
        /// Central group element by label.
        #[arg(long, default_value = "e")]
        p: String,
        /// `triv` or a character index.
        #[arg(long, default_value = "triv")]
        chi: String,
    },
    /// The excision sequence for a connected sum.
    Excision {
        #[arg(long)]
        hopf: String,
        #[arg(long, default_value_t = 0)]
        pair: usize,
        #[arg(long)]
        gamma: String,
        #[arg(long, default_value = "trivial")]
        x: String,
        #[arg(long)]
        delta: String,
        #[arg(long, default_value = "trivial")]
        y: String,
    },
    /// Reduces the distinguished-cilium structure from a Taft algebra to its group quotient.
    ReduceBosonisation {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long)]
        quotient: Option<String>,
    },
}

fn dispatch(command: &Command, seed: u64) -> Result<(&'static str, Output)> {
    use commands::*;
    Ok(match command {
        Command::Graph(GraphCmd::Info { graph }) => ("graph info", graph::info(graph)?),
        Command::Graph(GraphCmd::Reduce { graph, scramble }) => ("graph reduce", graph::reduce(graph, *scramble, seed)?),
        Command::Graph(GraphCmd::Sum { first, second }) => ("graph sum", graph::sum(first, second)?),
        Command::Hopf(HopfCmd::Check { hopf }) => ("hopf check", hopf::check(hopf)?),
        Command::Hopf(HopfCmd::Pairs { hopf }) => ("hopf pairs", hopf::pairs(hopf)?),
        Command::Hopf(HopfCmd::Integrals { hopf }) => ("hopf integrals", hopf::integrals(hopf)?),
        Command::Lattice(LatticeCmd::Verify { space: s }) => ("lattice verify", lattice::verify(&s.hopf, s.pair, &s.graph)?),
        Command::Lattice(LatticeCmd::Move { space: s, word }) => {
            ("lattice move", lattice::apply_move(&s.hopf, s.pair, &s.graph, word)?)
        }
        Command::Protect(ProtectCmd::Compute { space: s, coeff, one_shot }) => (
            "protect compute",
            protect::compute(ComputeArgs {
                hopf: &s.hopf,
                pair: s.pair,
                graph: &s.graph,
                coeff,
                one_shot: *one_shot,
            })?,
        ),
        Command::Protect(ProtectCmd::Table { space: s, quotient }) => {
            ("protect table", protect::table_cmd(&s.hopf, s.pair, &s.graph, quotient.as_deref())?)
        }
        Command::Protect(ProtectCmd::OracleGroup { group, genus, p, chi }) => {
            ("protect oracle-group", protect::oracle(group, *genus, p, chi)?)
        }
        Command::Protect(ProtectCmd::Excision { hopf, pair, gamma, x, delta, y }) => (
            "protect excision",
            protect::excision(ExcisionArgs {
                hopf,
                pair: *pair,
                gamma,
                x,
                delta,
                y,
            })?,
        ),
        Command::Protect(ProtectCmd::ReduceBosonisation { space: s, quotient }) => (
            "protect reduce-bosonisation",
            protect::reduce_bosonisation(&s.hopf, s.pair, &s.graph, quotient.as_deref())?,
        ),
        Command::Acceptance { only } => ("acceptance", acceptance::run(seed, only)?),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (name, out) = match dispatch(&cli.command, cli.seed) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    match cli.format {
        Format::Json => {
            let doc = json!({ "command": name, "seed": cli.seed, "ok": out.ok, "result": out.json });
            println!("{}", serde_json::to_string_pretty(&doc).expect("JSON values serialise"));
        }
        Format::Table => print!("seed: {}\n{}", cli.seed, out.table),
    }
    if out.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
