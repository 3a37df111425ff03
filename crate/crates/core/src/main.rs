use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use iquantum::adjoint::Outcome;
use iquantum::cli::{self, parse_config, parse_show_args, RunConfig, ShowKind};
use iquantum::uq::QuantumGroup;
use iquantum::Error;

#[derive(Parser)]
#[command(
    name = "iquantum",
    version,
    about = "Exact verification of identities in iquantum groups"
)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the cases of a configuration file and write a JSON-lines report.
    Verify {
        #[arg(long)]
        config: PathBuf,
        /// `all` or comma-separated catalog ids; replaces the config's list.
        #[arg(long)]
        cases: Option<String>,
        /// Worker threads (0 = one per core).
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Print one element in normal form, e.g. `show idiv i=1 n=3 parity=0`.
    Show {
        kind: Kind,
        /// `key=value` arguments.
        args: Vec<String>,
        /// Take the datum and parameters from this file.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Named datum when no config is given.
        #[arg(long = "type", default_value = "A2")]
        datum: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Idiv,
    Tcomp,
    Serre,
}

fn load(path: &PathBuf) -> Result<RunConfig, Error> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_config(&text)
}

fn verify(config: PathBuf, cases: Option<String>, jobs: usize) -> Result<bool, Error> {
    let mut config = load(&config)?;
    if let Some(list) = cases {
        config.select_cases(&list)?;
    }
    let summary = cli::run(&config, jobs)?;
    match &config.output {
        Some(path) => {
            let mut f = fs::File::create(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            summary.write_to(&mut f)?;
        }
        None => summary.write_to(&mut io::stdout().lock())?,
    }
    eprintln!(
        "{} cases: {} verified, {} refuted, {} errors",
        summary.reports.len(),
        summary.count(Outcome::Verified),
        summary.count(Outcome::Refuted),
        summary.count(Outcome::Error)
    );
    Ok(summary.all_verified())
}

fn show(kind: Kind, words: Vec<String>, config: Option<PathBuf>, datum: String) -> Result<(), Error> {
    let config = match config {
        Some(p) => load(&p)?,
        None => RunConfig::for_type(&datum)?,
    };
    let qg = QuantumGroup::new(config.datum, config.params, config.degree_cap)?;
    let kind = match kind {
        Kind::Idiv => ShowKind::Idiv,
        Kind::Tcomp => ShowKind::Tcomp,
        Kind::Serre => ShowKind::Serre,
    };
    let text = cli::show(&qg, kind, &parse_show_args(&words)?)?;
    writeln!(io::stdout(), "{text}").map_err(|e| Error::Io(e.to_string()))
}

fn main() -> ExitCode {
    let args = Args::parse();
    let result = match args.command {
        Command::Verify { config, cases, jobs } => verify(config, cases, jobs),
        Command::Show {
            kind,
            args,
            config,
            datum,
        } => show(kind, args, config, datum).map(|_| true),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
