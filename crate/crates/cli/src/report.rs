use std::fmt;

use num_traits::ToPrimitive;
use polyimage::composite::{CompositeError, ModulusError, SquareFreeModulus};
use polyimage::num::{BigRational, BigUint, Ratio};
use polyimage::oracle::OracleError;
use polyimage::polyarith::PolyError;
use polyimage::primeimage::ImageError;
use polyimage::stats::StatsError;
use polyimage::verify::{rational_string, round_sig, VerifyError};
use serde::Serialize;
use serde_json::{json, Value};

/// Failure classes, each with its own exit status.
#[derive(Debug)]
pub enum CliError {
    Invalid(String),
    Cap(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::Cap(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Invalid(m) => write!(f, "invalid input: {m}"),
            CliError::Cap(m) => write!(f, "resource cap: {m}"),
        }
    }
}

impl From<PolyError> for CliError {
    fn from(e: PolyError) -> Self {
        match e {
            PolyError::ScanTooLarge => CliError::Cap(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<ImageError> for CliError {
    fn from(e: ImageError) -> Self {
        match e {
            ImageError::Poly(p) => p.into(),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<CompositeError> for CliError {
    fn from(e: CompositeError) -> Self {
        match e {
            CompositeError::Image(i) => i.into(),
            CompositeError::CapExceeded { .. } => CliError::Cap(e.to_string()),
        }
    }
}

impl From<StatsError> for CliError {
    fn from(e: StatsError) -> Self {
        match e {
            StatsError::Composite(c) => c.into(),
            StatsError::LatticeCap { .. } => CliError::Cap(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<ModulusError> for CliError {
    fn from(e: ModulusError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Poly(e) => e.into(),
            VerifyError::Image(e) => e.into(),
            VerifyError::Composite(e) => e.into(),
            VerifyError::Stats(e) => e.into(),
            VerifyError::Oracle(e) => e.into(),
            VerifyError::Modulus(e) => e.into(),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Invalid(e.to_string())
    }
}

/// A float at 12 significant digits; non-finite values become `null`.
pub fn float(x: f64) -> Value {
    if x.is_finite() {
        json!(round_sig(x))
    } else {
        Value::Null
    }
}

/// Rounded float rendering for CSV cells.
pub fn float_cell(x: f64) -> String {
    round_sig(x).to_string()
}

pub fn rational(r: &BigRational) -> Value {
    json!({ "exact": rational_string(r), "float": float(r.to_f64().unwrap_or(f64::NAN)) })
}

pub fn ratio(r: &Ratio<u64>) -> Value {
    json!({
        "exact": format!("{}/{}", r.numer(), r.denom()),
        "float": float(r.to_f64().unwrap_or(f64::NAN)),
    })
}

/// A JSON number when it fits in 64 bits, a decimal string otherwise.
pub fn big(n: &BigUint) -> Value {
    match n.to_u64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

pub fn modulus(m: &SquareFreeModulus) -> Value {
    json!({ "q": big(m.q()), "primes": m.primes() })
}

/// The resolved invocation, embedded in every report. Worker count is left
/// out so reports do not depend on it.
#[derive(Debug, Serialize)]
pub struct RunConfig {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub suite: Option<String>,
    pub poly: Option<String>,
    pub modulus: Option<Value>,
    pub prime: Option<u64>,
    pub k: Option<usize>,
    pub offsets: Option<Vec<i64>>,
    pub window: Option<String>,
    pub bins: usize,
    pub cap_bits: u64,
    pub lattice_cap: u64,
    pub threshold: f64,
    pub seed: u64,
    pub format: crate::args::Format,
    pub out: Option<String>,
}

pub fn envelope(config: &RunConfig, result: Value) -> Value {
    json!({
        "tool": "polyimage",
        "version": env!("CARGO_PKG_VERSION"),
        "config": config,
        "result": result,
    })
}

/// A CSV table: header plus rows of already-rendered cells.
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn to_csv(&self) -> Result<String, CliError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.header)?;
        for row in &self.rows {
            w.write_record(row)?;
        }
        let bytes = w.into_inner().map_err(|e| CliError::Invalid(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::from(ModulusError::NotSquareFree(12)).exit_code(), 2);
        assert_eq!(CliError::from(StatsError::LatticeCap { cap: 1 }).exit_code(), 3);
        assert_eq!(CliError::from(StatsError::Degenerate).exit_code(), 2);
    }

    #[test]
    fn rendering() {
        assert_eq!(float(1.0 / 3.0), json!(0.333333333333));
        assert_eq!(float(f64::NAN), Value::Null);
        assert_eq!(ratio(&Ratio::new(105, 24))["exact"], json!("35/8"));
        let table = Table {
            header: vec!["a", "b"],
            rows: vec![vec!["1".into(), "2".into()]],
        };
        assert_eq!(table.to_csv().unwrap(), "a,b\n1,2\n");
    }
}
