//! Brute-force references. Everything here loops over `ℤ/mℤ` straight from
//! the definitions and shares no code with the fast paths it checks.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::polyarith::{rtilde_mod_p, IntPoly, PolyError};

/// Largest modulus the oracles accept.
pub const ORACLE_MAX_MODULUS: u64 = 1_000_000;

/// Largest prime accepted by [`resultant_cross_check`].
pub const CROSS_CHECK_MAX_PRIME: u64 = 200;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("oracle modulus must lie in [1, {ORACLE_MAX_MODULUS}], got {0}")]
    ModulusOutOfRange(u64),
    #[error("cross-check needs a prime p with deg f < p <= {CROSS_CHECK_MAX_PRIME}, got {0}")]
    BadPrime(u64),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Outcome of comparing a fast computation with its oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub description: String,
    pub expected: String,
    pub actual: String,
    pub matched: bool,
}

fn check_modulus(m: u64) -> Result<(), OracleError> {
    if m == 0 || m > ORACLE_MAX_MODULUS {
        return Err(OracleError::ModulusOutOfRange(m));
    }
    Ok(())
}

fn coefficients_mod(f: &IntPoly, m: u64) -> Vec<u64> {
    let m = BigInt::from(m);
    f.coeffs()
        .iter()
        .map(|c| c.mod_floor(&m).to_u64().expect("reduced"))
        .collect()
}

/// `f(x) mod m` by summing `c_i x^i` term by term.
fn value_at(coeffs: &[u64], x: u64, m: u64) -> u64 {
    let mut total = 0u128;
    let mut power = 1u128 % m as u128;
    for &c in coeffs {
        total = (total + c as u128 * power) % m as u128;
        power = power * x as u128 % m as u128;
    }
    total as u64
}

fn membership(f: &IntPoly, m: u64) -> Vec<bool> {
    let coeffs = coefficients_mod(f, m);
    let mut hit = vec![false; m as usize];
    for x in 0..m {
        hit[value_at(&coeffs, x, m) as usize] = true;
    }
    hit
}

/// `{f(x) mod m : 0 <= x < m}`, sorted.
pub fn naive_image_mod_m(f: &IntPoly, m: u64) -> Result<Vec<u64>, OracleError> {
    check_modulus(m)?;
    Ok(membership(f, m)
        .iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .map(|(t, _)| t as u64)
        .collect())
}

/// `|{t ∈ Ω_m : t + h_i ∈ Ω_m for all i}|` by direct membership tests.
pub fn naive_nk_mod_m(f: &IntPoly, m: u64, offsets: &[i64]) -> Result<u64, OracleError> {
    check_modulus(m)?;
    let hit = membership(f, m);
    let mut count = 0;
    for t in 0..m as i64 {
        if hit[t as usize]
            && offsets
                .iter()
                .all(|&h| hit[(t + h).rem_euclid(m as i64) as usize])
        {
            count += 1;
        }
    }
    Ok(count)
}

/// Ordered pairs `(t, t')` of image elements with `t' - t ≡ d (mod m)` for
/// some `1 <= d <= max_distance`, by a double loop over the sorted image.
pub fn naive_pair_count(f: &IntPoly, m: u64, max_distance: u64) -> Result<u64, OracleError> {
    let image = naive_image_mod_m(f, m)?;
    let mut count = 0;
    for &a in &image {
        for &b in &image {
            let d = (b + m - a) % m;
            count += (1..=max_distance).filter(|r| r % m == d).count() as u64;
        }
    }
    Ok(count)
}

/// `R_k(X, m)` for a box `X = ∏ (a_i, b_i]`, straight from the definition:
/// every integer vector in `s X` with nonzero distinct coordinates, each
/// `N_k` counted by [`naive_nk_mod_m`].
pub fn naive_r_k(
    f: &IntPoly,
    m: u64,
    intervals: &[(BigRational, BigRational)],
) -> Result<BigRational, OracleError> {
    let image = naive_image_mod_m(f, m)?;
    let s = BigRational::new(BigInt::from(m), BigInt::from(image.len()));
    let mut axes = Vec::new();
    for (a, b) in intervals {
        let lo = (&s * a).floor().to_integer().to_i64().expect("small") + 1;
        let hi = (&s * b).floor().to_integer().to_i64().expect("small");
        axes.push((lo..=hi).collect::<Vec<i64>>());
    }
    let mut points: Vec<Vec<i64>> = vec![Vec::new()];
    for axis in &axes {
        points = points
            .into_iter()
            .flat_map(|p| {
                axis.iter().map(move |&x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    let mut total = BigInt::zero();
    for h in points {
        let distinct: BTreeSet<i64> = h.iter().copied().collect();
        if distinct.len() < h.len() || distinct.contains(&0) {
            continue;
        }
        total += naive_nk_mod_m(f, m, &h)?;
    }
    Ok(BigRational::new(total, BigInt::from(image.len())))
}

/// Compare `R̃_p` from resultants with differences of values at critical
/// points found by scanning `𝔽_p`. Critical points in extension fields are
/// visible only to the resultant, so the check is containment.
pub fn resultant_cross_check(f: &IntPoly, p: u64) -> Result<OracleReport, OracleError> {
    let deg = f.degree().unwrap_or(0) as u64;
    if p > CROSS_CHECK_MAX_PRIME || p <= deg || !(2..p).all(|d| p % d != 0) {
        return Err(OracleError::BadPrime(p));
    }
    let coeffs = coefficients_mod(f, p);
    // f'(x) = Σ i c_i x^{i-1}
    let derivative: Vec<u64> = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| (i as u64 % p) * c % p)
        .collect();
    let critical_values: BTreeSet<u64> = (0..p)
        .filter(|&x| value_at(&derivative, x, p) == 0)
        .map(|x| value_at(&coeffs, x, p))
        .collect();
    let brute: BTreeSet<i64> = critical_values
        .iter()
        .flat_map(|&a| critical_values.iter().map(move |&b| ((a + p - b) % p) as i64))
        .collect();
    let fast = rtilde_mod_p(f, p)?;
    let fast_set: BTreeSet<i64> = fast.elements().iter().map(|&h| h.rem_euclid(p as i64)).collect();
    let extension_only = fast_set.len() - brute.intersection(&fast_set).count();
    Ok(OracleReport {
        description: format!(
            "R̃_{p} from resultants contains the differences of 𝔽_{p}-rational critical values \
             ({extension_only} element(s) come from critical points outside 𝔽_{p} or are absent)"
        ),
        expected: format!("{brute:?}"),
        actual: format!("{fast_set:?}"),
        matched: brute.is_subset(&fast_set),
    })
}
