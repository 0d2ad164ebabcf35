//! `polyimage`: JSON reports on stdout, CSV tables via `--out` or
//! `--format csv`, a human summary on stderr.
//!
//! Exit status: 0 success, 1 verification failure, 2 invalid input,
//! 3 resource cap.

mod args;
mod commands;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command, Format};
use commands::Output;
use report::{envelope, modulus, CliError, RunConfig};

fn config(cli: &Cli) -> RunConfig {
    let c = &cli.common;
    let (command, suite) = match &cli.command {
        Command::Image => ("image", None),
        Command::Correlate => ("correlate", None),
        Command::Spacings => ("spacings", None),
        Command::Critical => ("critical", None),
        Command::Nk => ("nk", None),
        Command::Verify { suite } => ("verify", Some(suite.clone())),
    };
    RunConfig {
        command: command.to_string(),
        suite,
        poly: commands::parse_poly(c).ok().map(|f| f.to_string()),
        modulus: commands::parse_modulus(c).ok().map(|m| modulus(&m)),
        prime: c.prime,
        k: c.k,
        offsets: c.offsets.clone(),
        window: c.window.clone(),
        bins: c.bins,
        cap_bits: c.cap_bits,
        lattice_cap: c.lattice_cap,
        threshold: c.threshold,
        seed: c.seed,
        format: c.format,
        out: c.out.as_ref().map(|p| p.display().to_string()),
    }
}

fn dispatch(cli: &Cli) -> Result<Output, CliError> {
    let c = &cli.common;
    match &cli.command {
        Command::Image => commands::image(c),
        Command::Correlate => commands::correlate(c),
        Command::Spacings => commands::spacing(c),
        Command::Critical => commands::critical(c),
        Command::Nk => commands::nk(c),
        Command::Verify { suite } => commands::verify(c, suite),
    }
}

fn run(cli: &Cli) -> Result<bool, CliError> {
    if let Some(n) = cli.common.workers {
        if n == 0 {
            return Err(CliError::Invalid("--workers must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Invalid(e.to_string()))?;
    }
    let output = dispatch(cli)?;
    let report = envelope(&config(cli), output.result);
    let json = serde_json::to_string_pretty(&report).expect("report serializes");
    let csv = output.table.as_ref().map(|t| t.to_csv()).transpose()?;
    if let Some(path) = &cli.common.out {
        let body = csv.clone().unwrap_or_else(|| json.clone() + "\n");
        std::fs::write(path, body)?;
    }
    let mut stdout = std::io::stdout().lock();
    match cli.common.format {
        Format::Json => writeln!(stdout, "{json}")?,
        Format::Csv => {
            let table = csv.ok_or_else(|| CliError::Invalid("this command has no CSV table".into()))?;
            write!(stdout, "{table}")?;
        }
    }
    eprintln!("{}", output.summary);
    Ok(output.passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("polyimage: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
