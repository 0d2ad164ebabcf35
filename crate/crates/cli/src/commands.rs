use num_traits::ToPrimitive;
use polyimage::composite::{CompositeImage, SquareFreeModulus};
use polyimage::num::{BigInt, BigRational};
use polyimage::polyarith::{
    critical_value_poly, critical_value_poly_mod, rtilde_infinity, rtilde_mod_p_or_rational,
    IntPoly,
};
use polyimage::stats::{
    adjacent_correlation, gap_frequency, ks_exponential, r_k_correlation, spacings,
    CorrelationWindow, DEFAULT_HIST_MAX,
};
use polyimage::verify::{anomaly_at, rational_string, Outcome, Suite};
use serde_json::{json, Value};

use crate::args::Common;
use crate::report::{big, float, float_cell, modulus, ratio, rational, CliError, Table};

/// What a command produced: the JSON result, an optional CSV table, a
/// one-line human summary, and whether verification held.
pub struct Output {
    pub result: Value,
    pub table: Option<Table>,
    pub summary: String,
    pub passed: bool,
}

impl Output {
    fn ok(result: Value, table: Option<Table>, summary: String) -> Self {
        Output {
            result,
            table,
            summary,
            passed: true,
        }
    }
}

pub fn parse_poly(args: &Common) -> Result<IntPoly, CliError> {
    let text = args
        .poly
        .as_deref()
        .ok_or_else(|| CliError::Invalid("--poly is required".into()))?;
    text.parse()
        .map_err(|e| CliError::Invalid(format!("--poly {text:?}: {e}")))
}

pub fn parse_modulus(args: &Common) -> Result<SquareFreeModulus, CliError> {
    match (&args.modulus, &args.primes) {
        (Some(q), None) => Ok(q.parse()?),
        (None, Some(list)) => Ok(list.parse()?),
        _ => Err(CliError::Invalid("give --modulus or --primes".into())),
    }
}

fn window_for(args: &Common) -> Result<CorrelationWindow, CliError> {
    let window = match &args.window {
        Some(text) => text.parse::<CorrelationWindow>()?,
        None => CorrelationWindow::cube(args.k.unwrap_or(2).saturating_sub(1).max(1), 1)?,
    };
    if let Some(k) = args.k {
        if k != window.k() {
            return Err(CliError::Invalid(format!(
                "--k {k} needs a window of dimension {}, got {}",
                k.saturating_sub(1),
                window.dimension()
            )));
        }
    }
    Ok(window)
}

pub fn image(args: &Common) -> Result<Output, CliError> {
    let f = parse_poly(args)?;
    let m = parse_modulus(args)?;
    let stats = CompositeImage::new(&f, &m)?.stats();
    let per_prime: Vec<Value> = stats
        .per_prime
        .iter()
        .map(|s| {
            json!({
                "p": s.p,
                "omega_size": s.omega_size,
                "s_p": ratio(&s.s_p),
                "is_permutation": s.is_permutation,
                "wan_ok": s.wan_ok,
            })
        })
        .collect();
    let rows = stats
        .per_prime
        .iter()
        .map(|s| {
            vec![
                s.p.to_string(),
                s.omega_size.to_string(),
                format!("{}/{}", s.s_p.numer(), s.s_p.denom()),
                s.is_permutation.to_string(),
                s.wan_ok.to_string(),
            ]
        })
        .collect();
    let summary = format!(
        "{f} mod {m}: |Ω_q| = {}, s_q = {}",
        stats.omega_q_size,
        rational_string(&stats.s_q)
    );
    let result = json!({
        "q": big(m.q()),
        "primes": m.primes(),
        "omega_size": big(&stats.omega_q_size),
        "s_q": rational(&stats.s_q),
        "q1": modulus(&stats.q1_reduced),
        "per_prime": per_prime,
    });
    let table = Table {
        header: vec!["p", "omega_size", "s_p", "is_permutation", "wan_ok"],
        rows,
    };
    Ok(Output::ok(result, Some(table), summary))
}

pub fn correlate(args: &Common) -> Result<Output, CliError> {
    let f = parse_poly(args)?;
    let m = parse_modulus(args)?;
    let window = window_for(args)?;
    let r = r_k_correlation(&f, &m, &window, args.lattice_cap)?;
    let summary = format!(
        "R_{}({window}) = {} ≈ {} (vol {}, {} lattice points)",
        r.k,
        rational_string(&r.value),
        polyimage::verify::round_sig(r.value_f64()),
        rational_string(&r.volume),
        r.lattice_points
    );
    let result = json!({
        "k": r.k,
        "window": window.to_string(),
        "q": big(r.reduced_from.q()),
        "q1": modulus(&r.modulus),
        "s_q": rational(&r.s_q),
        "omega_size": big(&r.omega_size),
        "r_k": rational(&r.value),
        "volume": rational(&r.volume),
        "deviation": rational(&r.deviation),
        "lattice_points": r.lattice_points,
        "excluded_points": r.excluded_points,
    });
    Ok(Output::ok(result, None, summary))
}

pub fn spacing(args: &Common) -> Result<Output, CliError> {
    let f = parse_poly(args)?;
    let m = parse_modulus(args)?;
    if args.bins == 0 {
        return Err(CliError::Invalid("--bins must be positive".into()));
    }
    let series = spacings(&f, &m, args.cap_bits)?;
    let ks = ks_exponential(&series);
    let corr = adjacent_correlation(&series);
    let freqs: Vec<Value> = (1..=10u64)
        .map(|h| {
            json!({
                "h": h,
                "frequency": ratio(&gap_frequency(&series, h)),
                "reference": float(0.5f64.powi(h as i32)),
            })
        })
        .collect();
    let hist = series.histogram(0.0, DEFAULT_HIST_MAX, args.bins);
    let rows: Vec<Vec<String>> = hist
        .rows()
        .iter()
        .map(|r| {
            vec![
                float_cell(r.bin_left),
                float_cell(r.bin_right),
                r.count.to_string(),
                float_cell(r.density),
                float_cell(r.exp_reference),
            ]
        })
        .collect();
    let hist_json: Vec<Value> = hist
        .rows()
        .iter()
        .map(|r| {
            json!({
                "bin_left": float(r.bin_left),
                "bin_right": float(r.bin_right),
                "count": r.count,
                "density": float(r.density),
                "exp_reference": float(r.exp_reference),
            })
        })
        .collect();
    let summary = format!(
        "{f} mod {}: {} gaps, KS = {}, adjacent correlation = {}",
        series.modulus(),
        series.len(),
        polyimage::verify::round_sig(ks.statistic),
        polyimage::verify::round_sig(corr)
    );
    let result = json!({
        "q": big(series.reduced_from().q()),
        "q1": modulus(series.modulus()),
        "element_count": series.element_count(),
        "s_q": ratio(&series.mean_spacing()),
        "ks": { "statistic": float(ks.statistic), "n": ks.n },
        "adjacent_correlation": float(corr),
        "gap_frequencies": freqs,
        "histogram": { "bins": hist_json, "overflow": hist.overflow, "total": hist.total },
    });
    let table = Table {
        header: vec!["bin_left", "bin_right", "count", "density", "exp_reference"],
        rows,
    };
    Ok(Output::ok(result, Some(table), summary))
}

pub fn critical(args: &Common) -> Result<Output, CliError> {
    let f = parse_poly(args)?;
    if f.degree().unwrap_or(0) < 2 {
        return Err(CliError::Invalid(format!("{f} has degree < 2: no critical values")));
    }
    let c = critical_value_poly(&f)?;
    let r_inf = rtilde_infinity(&f)?;
    let mut summary = format!("{f}: R̃_∞ = {:?}", r_inf.elements());
    let mut result = json!({
        "poly": f.to_string(),
        "critical_value_poly": {
            "display": c.to_string(),
            "coefficients": c.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>(),
        },
        "rtilde_infinity": r_inf.elements(),
    });
    if let Some(p) = args.prime {
        let cp = critical_value_poly_mod(&f, p);
        let rp = rtilde_mod_p_or_rational(&f, p)?;
        summary.push_str(&format!(", R̃_{p} = {:?}", rp.elements()));
        result["prime"] = json!(p);
        result["critical_value_poly_mod_p"] = match cp {
            Ok(cp) => json!(cp.coeffs()),
            Err(_) => Value::Null,
        };
        result["rtilde_p"] = json!(rp.elements());
        result["rtilde_p_approximate"] = json!(rp.is_approximate());
    }
    Ok(Output::ok(result, None, summary))
}

pub fn nk(args: &Common) -> Result<Output, CliError> {
    let f = parse_poly(args)?;
    let m = parse_modulus(args)?;
    let offsets = args
        .offsets
        .clone()
        .ok_or_else(|| CliError::Invalid("--offsets is required".into()))?;
    let k = offsets.len() + 1;
    if args.k.is_some_and(|given| given != k) {
        return Err(CliError::Invalid(format!(
            "--k {} does not match {} offsets",
            args.k.unwrap(),
            offsets.len()
        )));
    }
    let image = CompositeImage::new(&f, &m)?;
    let count = image.n_k(&offsets);
    let omega = BigInt::from(image.omega_size());
    let q = BigInt::from(m.q().clone());
    // q / s_q^k = |Ω|^k / q^{k-1}
    let predicted = BigRational::new(
        num_traits::pow(omega, k),
        num_traits::pow(q, k - 1),
    );
    let per_prime: Vec<(u64, u64)> = image
        .masks()
        .map(|mask| (mask.p(), polyimage::primeimage::n_k_prime(mask, &offsets)))
        .collect();
    let summary = format!(
        "N_{k}({offsets:?}) mod {m} = {count} (independence predicts {})",
        polyimage::verify::round_sig(predicted.to_f64().unwrap_or(f64::NAN))
    );
    let result = json!({
        "k": k,
        "offsets": offsets,
        "q": big(m.q()),
        "primes": m.primes(),
        "n_k": big(&count),
        "predicted": rational(&predicted),
        "per_prime": per_prime.iter().map(|&(p, n)| json!({ "p": p, "n_k": n })).collect::<Vec<_>>(),
    });
    let table = Table {
        header: vec!["p", "n_k"],
        rows: per_prime
            .iter()
            .map(|&(p, n)| vec![p.to_string(), n.to_string()])
            .collect(),
    };
    Ok(Output::ok(result, Some(table), summary))
}

pub fn verify(args: &Common, suite: &str) -> Result<Output, CliError> {
    let suite: Suite = suite.parse().map_err(CliError::Invalid)?;
    let outcomes: Vec<Outcome> = if suite == Suite::Anomaly && (args.poly.is_some() || args.prime.is_some()) {
        let f = match &args.poly {
            Some(_) => parse_poly(args)?,
            None => "x^4-2x^2".parse().expect("literal parses"),
        };
        let p = args
            .prime
            .ok_or_else(|| CliError::Invalid("verify anomaly with --poly needs --prime".into()))?;
        vec![anomaly_at(&f, p, args.threshold)?]
    } else {
        suite.run(args.seed)?
    };
    let passed = outcomes.iter().all(|o| o.passed);
    let summary = outcomes
        .iter()
        .map(|o| {
            format!(
                "{} {} ({}): {}",
                if o.passed { "PASS" } else { "FAIL" },
                o.id,
                o.title,
                o.summary()
            )
        })
        .collect::<Vec<_>>()
        .join("\n");
    let result = json!({
        "suite": suite.name(),
        "passed": passed,
        "outcomes": outcomes,
    });
    Ok(Output {
        result,
        table: None,
        summary,
        passed,
    })
}
