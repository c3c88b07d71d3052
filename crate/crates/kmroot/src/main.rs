use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use kmroot::commands::{self, CliError, Emit, Output, RenderFormat};
use kmroot::verify::Options;

/// Exact computations with simply laced Kac-Moody root systems.
#[derive(Debug, Parser)]
#[command(name = "kmroot", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify the GCM in a file as finite, affine, or indefinite.
    Classify { path: PathBuf },
    /// Name the catalog diagram isomorphic to a GCM file or catalog entry.
    Identify { diagram: String },
    /// List the connected simply laced hyperbolic diagrams of one rank.
    Enumerate {
        #[arg(long)]
        rank: usize,
        #[arg(long, value_enum, default_value_t = Emit::Text)]
        emit: Emit,
    },
    /// Print the positive real roots up to a height, one per line.
    Roots {
        #[arg(long)]
        host: String,
        #[arg(long)]
        height: u32,
    },
    /// Realize a hyperbolic diagram as a root subdiagram of E10.
    Embed {
        #[arg(long)]
        target: String,
        /// Also print every intermediate embedding.
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value_t = Emit::Text)]
        emit: Emit,
    },
    /// Extend an embedding by orthogonal real roots.
    Orthogonal {
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = kmroot_core::orth::DEFAULT_BOUND)]
        bound: u32,
    },
    /// Run every verification check; exit 0 iff all pass.
    VerifyPaper {
        #[arg(long)]
        json: bool,
        /// Include wall times (makes output non-reproducible).
        #[arg(long)]
        timings: bool,
    },
    /// Draw a catalog diagram or GCM file.
    Render {
        diagram: String,
        #[arg(long, value_enum, default_value_t = RenderFormat::Ascii)]
        format: RenderFormat,
    },
}

fn run(cli: Cli) -> Result<Output, CliError> {
    match cli.command {
        Command::Classify { path } => commands::cmd_classify(&path),
        Command::Identify { diagram } => commands::cmd_identify(&diagram),
        Command::Enumerate { rank, emit } => commands::cmd_enumerate(rank, emit),
        Command::Roots { host, height } => commands::cmd_roots(&host, height),
        Command::Embed { target, trace, emit } => commands::cmd_embed(&target, trace, emit),
        Command::Orthogonal { target, bound } => commands::cmd_orthogonal(&target, bound),
        Command::VerifyPaper { json, timings } => {
            Ok(commands::cmd_verify_paper(json, &Options { timings, ..Options::default() }))
        }
        Command::Render { diagram, format } => commands::cmd_render(&diagram, format),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
