use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use sun_systems::cli::{self, CommandOutput};
use sun_systems::lemmas::LemmaArgs;

/// Build and check 3-sun decompositions of complete graphs.
#[derive(Parser)]
#[command(name = "sunsys", version)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a certificate for a 3-sun system of order M.
    Generate { m: u32 },
    /// Embed a system of order N into one of order M.
    Embed {
        n: u32,
        m: u32,
        /// Certificate of the system to embed (built when omitted).
        #[arg(long)]
        base: Option<PathBuf>,
    },
    /// Check a certificate file.
    Verify { file: PathBuf },
    /// Print least embedding orders and residues for n <= N_MAX.
    Table { n_max: u32 },
    /// Run one block generator over Z_U and print its certificate.
    Lemma {
        name: String,
        u: u32,
        /// Differences, comma separated.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        d: Vec<i64>,
        #[arg(long, default_value_t = 0)]
        s: u32,
        #[arg(long, default_value_t = 0)]
        alpha: u32,
        #[arg(long)]
        skip_first: bool,
    },
}

fn read(path: &PathBuf) -> Result<String, CommandOutput> {
    std::fs::read_to_string(path).map_err(|e| CommandOutput {
        code: cli::EXIT_INVALID,
        stdout: String::new(),
        stderr: format!("error: {}: {e}\n", path.display()),
    })
}

fn run(command: Command) -> CommandOutput {
    match command {
        Command::Generate { m } => cli::generate(m),
        Command::Embed { n, m, base } => match base.as_ref().map(read).transpose() {
            Ok(text) => cli::embed(n, m, text.as_deref()),
            Err(out) => out,
        },
        Command::Verify { file } => match read(&file) {
            Ok(text) => cli::verify(&text),
            Err(out) => CommandOutput {
                code: cli::EXIT_VERIFY,
                ..out
            },
        },
        Command::Table { n_max } => cli::table(n_max),
        Command::Lemma {
            name,
            u,
            d,
            s,
            alpha,
            skip_first,
        } => cli::lemma(
            &name,
            u,
            &LemmaArgs {
                differences: d,
                s,
                alpha,
                skip_first,
            },
        ),
    }
}

fn main() -> ExitCode {
    let out = run(Args::parse().command);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    ExitCode::from(out.code as u8)
}
