mod commands;
mod resource;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hlink::Error;

#[derive(Parser)]
#[command(
    name = "hlink",
    version,
    about = "Quandle families and colouring invariants of links, spatial graphs and handlebody-links"
)]
struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Maximum number of worker threads.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProfileArg {
    Quandle,
    Rack,
    Kei,
    Group,
}

#[derive(Subcommand)]
pub enum Command {
    /// Check a table against the axioms of a profile.
    CheckTable {
        file: String,
        #[arg(long, value_enum, default_value_t = ProfileArg::Quandle)]
        profile: ProfileArg,
    },
    /// Check a system or axet file against a family definition.
    CheckSystem {
        file: String,
        /// g_family, gsf_family, q_family, fw_system, trivalent_compatible,
        /// associative_composition or n_compatible:3,4
        #[arg(long)]
        kind: String,
    },
    /// Build the associated quandle of a system.
    Associated {
        file: String,
        /// Write the table here instead of stdout.
        #[arg(short, long)]
        output: Option<String>,
    },
    /// List the good involutions of a quandle table.
    Involutions { file: String },
    /// Count colourings of a diagram by a system.
    Color {
        diagram: String,
        system: String,
        #[arg(long, default_value = "all")]
        mode: String,
    },
    /// Compare colouring counts before and after random moves.
    Fuzz {
        system: String,
        /// links, trivalent, handlebody or n_valent
        #[arg(long)]
        scope: String,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma-separated subset of r1,r2,tr1,tr2,sr,rotate.
        #[arg(long, value_delimiter = ',')]
        moves: Option<Vec<String>>,
        /// Run even if the system fails the scope's axioms.
        #[arg(long)]
        unchecked: bool,
        /// Largest number of random crossings per diagram.
        #[arg(long, default_value_t = 4)]
        crossings: usize,
    },
    /// Write the Wirtinger presentation of a diagram.
    Wirtinger {
        diagram: String,
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Count homomorphisms from a presented group into a finite group.
    Homs { presentation: String, group: String },
    /// Summarise the constituent links of a trivalent graph diagram.
    Kauffman {
        diagram: String,
        /// linking or colour:SYSTEM
        #[arg(long, default_value = "linking")]
        invariant: String,
    },
    /// List or print bundled diagrams and systems.
    Fixtures {
        #[command(subcommand)]
        action: FixturesAction,
    },
}

#[derive(Subcommand)]
pub enum FixturesAction {
    List,
    Show { name: String },
}

/// Parse and usage problems exit with 2, everything else with 1.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. }
        | Error::UnknownResource(_)
        | Error::Io(_)
        | Error::InvalidDiagram(_)
        | Error::InvalidTable(_)
        | Error::NotPermutation(_) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match commands::run(&cli.command) {
        Ok(outcome) => {
            match cli.format {
                Format::Text => print!("{}", outcome.text),
                Format::Json => println!("{}", serde_json::to_string_pretty(&outcome.json).expect("json")),
            }
            ExitCode::from(if outcome.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            if let Error::Precondition { report: Some(r), .. } = &e {
                eprint!("{r}");
            }
            ExitCode::from(exit_code(&e))
        }
    }
}
