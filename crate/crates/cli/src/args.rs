use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use polyimage::composite::DEFAULT_CAP_BITS;
use polyimage::stats::{DEFAULT_BINS, DEFAULT_LATTICE_CAP};
use polyimage::verify::{ANOMALY_THRESHOLD, DEFAULT_SEED};
use serde::Serialize;

/// Images of integer polynomials modulo primes and square-free moduli:
/// correlations, spacings, critical values and verification suites.
#[derive(Debug, Parser)]
#[command(name = "polyimage", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Size of the image, mean spacing and per-prime statistics.
    Image,
    /// The k-level correlation R_k over a box window.
    Correlate,
    /// Normalized gaps: KS distance, gap frequencies, histogram.
    Spacings,
    /// Critical-value polynomial and obstruction sets.
    Critical,
    /// N_k for one offset vector.
    Nk,
    /// Run a verification suite; exits 1 if any check fails.
    Verify {
        #[arg(value_parser = ["identities", "wan", "multiplicativity", "davenport", "anomaly", "poisson", "correlation", "c0"])]
        suite: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Debug, Args)]
pub struct Common {
    /// Polynomial in x with integer coefficients, e.g. "x^4-2x^2".
    #[arg(long, global = true)]
    pub poly: Option<String>,
    /// Square-free modulus as an integer.
    #[arg(long, global = true, conflicts_with = "primes")]
    pub modulus: Option<String>,
    /// Square-free modulus as a comma-separated list of primes.
    #[arg(long, global = true)]
    pub primes: Option<String>,
    /// Single prime for `critical` and `verify anomaly`.
    #[arg(long, global = true)]
    pub prime: Option<u64>,
    /// Correlation order.
    #[arg(long, global = true)]
    pub k: Option<usize>,
    /// Offsets h_1,...,h_{k-1}.
    #[arg(long, global = true, value_delimiter = ',', allow_hyphen_values = true)]
    pub offsets: Option<Vec<i64>>,
    /// Box window a:b[,a:b...], each interval half-open (a, b].
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub window: Option<String>,
    #[arg(long, global = true, default_value_t = DEFAULT_BINS)]
    pub bins: usize,
    /// Largest modulus enumerated explicitly, in bits.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP_BITS)]
    pub cap_bits: u64,
    /// Largest number of lattice points summed by `correlate`.
    #[arg(long, global = true, default_value_t = DEFAULT_LATTICE_CAP)]
    pub lattice_cap: u64,
    /// Anomaly threshold c, in units of sqrt(p).
    #[arg(long, global = true, default_value_t = ANOMALY_THRESHOLD)]
    pub threshold: f64,
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Also write the CSV table here.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}
