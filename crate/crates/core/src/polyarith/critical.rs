//! Critical values of `f` and the difference sets that obstruct the generic
//! k-level asymptotic.
//!
//! The critical values are never materialized as algebraic numbers. They are
//! carried as the roots of `C(y) = Res_x(f'(x), y - f(x))`, and a shift `r`
//! is an obstruction exactly when `C(y)` and `C(y + r)` share a root, which
//! a gcd detects.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::fp::FpPoly;
use super::int::IntPoly;
use super::resultant::{resultant_x_fp, resultant_x_int};
use super::PolyError;
use crate::arith::is_prime;

/// Largest `2B` (twice the Cauchy bound of `C`) the integer-difference scan
/// will walk.
pub const MAX_DIFFERENCE_SCAN: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ObstructionKind {
    /// Integer differences of critical values over the algebraic closure of ℚ.
    Infinity,
    /// Differences of critical values mod `p` that land in 𝔽_p.
    ModP(u64),
}

/// A sorted set of shifts `r` for which two translates of the critical-value
/// set can collide.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionSet {
    kind: ObstructionKind,
    elements: Vec<i64>,
    approximate: bool,
}

impl ObstructionSet {
    fn new(kind: ObstructionKind, mut elements: Vec<i64>, approximate: bool) -> Self {
        elements.sort_unstable();
        elements.dedup();
        ObstructionSet {
            kind,
            elements,
            approximate,
        }
    }

    pub fn kind(&self) -> ObstructionKind {
        self.kind
    }

    pub fn elements(&self) -> &[i64] {
        &self.elements
    }

    /// Set when the set came from enumerating 𝔽_p-rational critical points
    /// only (wild primes), so collisions over proper extensions are missed.
    pub fn is_approximate(&self) -> bool {
        self.approximate
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    fn normalize(&self, r: i64) -> i64 {
        match self.kind {
            ObstructionKind::Infinity => r,
            ObstructionKind::ModP(p) => r.rem_euclid(p as i64),
        }
    }

    /// Membership of `r`, reduced modulo `p` for the mod-p kind.
    pub fn contains(&self, r: i64) -> bool {
        self.elements.binary_search(&self.normalize(r)).is_ok()
    }

    /// True iff `R, R - h_1, ..., R - h_{k-1}` are pairwise disjoint, i.e. no
    /// difference `h_i - h_j` (with `h_0 = 0`) is an obstruction.
    pub fn translates_disjoint(&self, offsets: &[i64]) -> bool {
        let hs: Vec<i64> = std::iter::once(0)
            .chain(offsets.iter().map(|&h| self.normalize(h)))
            .collect();
        for (i, &a) in hs.iter().enumerate() {
            for &b in &hs[i + 1..] {
                if self.contains(a - b) {
                    return false;
                }
            }
        }
        true
    }

    /// True iff `h_1 ≠ 0` and `(R ∪ R - h_1), R - h_2, ..., R - h_{k-1}` are
    /// pairwise disjoint.
    pub fn merged_translates_disjoint(&self, offsets: &[i64]) -> bool {
        let Some((&h1, rest)) = offsets.split_first() else {
            return false;
        };
        let h1 = self.normalize(h1);
        if h1 == 0 {
            return false;
        }
        let rest: Vec<i64> = rest.iter().map(|&h| self.normalize(h)).collect();
        for (i, &hj) in rest.iter().enumerate() {
            if self.contains(hj) || self.contains(h1 - hj) {
                return false;
            }
            if rest[i + 1..].iter().any(|&hl| self.contains(hj - hl)) {
                return false;
            }
        }
        true
    }
}

fn y_minus_f<P, F>(coeffs: &[P], constant: F, lift: impl Fn(&P) -> F, add_y: impl Fn(&F) -> F) -> Vec<F> {
    let mut b: Vec<F> = coeffs.iter().map(lift).collect();
    if b.is_empty() {
        b.push(constant);
    }
    b[0] = add_y(&b[0]);
    b
}

/// `C(y) = Res_x(f'(x), y - f(x))` over ℤ, content removed and leading
/// coefficient positive. Its complex roots are the critical values of `f`.
pub fn critical_value_poly(f: &IntPoly) -> Result<IntPoly, PolyError> {
    let degree = f.degree().unwrap_or(0);
    if degree < 2 {
        return Err(PolyError::Degenerate { degree });
    }
    let b = y_minus_f(
        f.coeffs(),
        IntPoly::zero(),
        |c| IntPoly::constant(-c),
        |c| c + &IntPoly::x(),
    );
    Ok(resultant_x_int(&f.derivative(), &b)?.primitive())
}

fn check_prime(p: u64) -> Result<(), PolyError> {
    if p >= super::fp::MAX_PRIME || !is_prime(p) {
        return Err(PolyError::NotPrime(p));
    }
    Ok(())
}

/// `C_p(y) = Res_x(f'(x), y - f(x))` over 𝔽_p with `f` reduced mod `p`,
/// made monic. A constant result means `f mod p` has no critical points.
pub fn critical_value_poly_mod(f: &IntPoly, p: u64) -> Result<FpPoly, PolyError> {
    check_prime(p)?;
    let fp = f.reduce_mod(p);
    match fp.degree() {
        None | Some(0) => return Err(PolyError::Degenerate { degree: 0 }),
        _ => {}
    }
    let d = fp.derivative();
    if d.is_zero() {
        return Err(PolyError::WildCase { p });
    }
    let b = y_minus_f(
        fp.coeffs(),
        FpPoly::zero(p),
        |&c| FpPoly::constant(p, (p - c) % p),
        |c| c.add(&FpPoly::new(p, vec![0, 1])).unwrap(),
    );
    Ok(resultant_x_fp(&d, &b)?.monic())
}

/// Whether the asymptotic predictions apply at `p`: they assume `p > deg f`
/// and odd `p`. Elsewhere everything is still computed, just flagged.
pub fn is_supported_prime(f: &IntPoly, p: u64) -> bool {
    p != 2 && p as usize > f.degree().unwrap_or(0)
}

/// Integers `r` such that `r = α - β` for critical values `α, β` of `f`.
pub fn rtilde_infinity(f: &IntPoly) -> Result<ObstructionSet, PolyError> {
    let c = critical_value_poly(f)?;
    let bound = c.cauchy_root_bound().expect("nonzero C");
    let span = (bound * 2u32)
        .to_u64()
        .filter(|&s| s <= MAX_DIFFERENCE_SCAN)
        .ok_or(PolyError::ScanTooLarge)?;
    let mut elements = Vec::new();
    for r in 0..=span {
        let shifted = c.taylor_shift(&BigInt::from(r));
        if c.rational_gcd_degree(&shifted).unwrap_or(0) > 0 {
            elements.push(r as i64);
            if r != 0 {
                elements.push(-(r as i64));
            }
        }
    }
    Ok(ObstructionSet::new(ObstructionKind::Infinity, elements, false))
}

/// Residues `h` with `gcd(C_p(y), C_p(y + h))` nonconstant, i.e. `R_p` meets
/// `R_p + h` over the algebraic closure of 𝔽_p. Wild primes (`f' ≡ 0`) are
/// an error; see [`rtilde_mod_p_or_rational`].
pub fn rtilde_mod_p(f: &IntPoly, p: u64) -> Result<ObstructionSet, PolyError> {
    let c = critical_value_poly_mod(f, p)?;
    let kind = ObstructionKind::ModP(p);
    if c.degree().unwrap_or(0) == 0 {
        return Ok(ObstructionSet::new(kind, Vec::new(), false));
    }
    let elements = (0..p)
        .filter(|&h| {
            let g = super::fp::fp_gcd(&c, &c.shift(h)).expect("same modulus");
            g.degree().unwrap_or(0) > 0
        })
        .map(|h| h as i64)
        .collect();
    Ok(ObstructionSet::new(kind, elements, false))
}

/// Like [`rtilde_mod_p`], but at wild primes falls back to differences of
/// values at 𝔽_p-rational critical points, flagged approximate.
pub fn rtilde_mod_p_or_rational(f: &IntPoly, p: u64) -> Result<ObstructionSet, PolyError> {
    match rtilde_mod_p(f, p) {
        Err(PolyError::WildCase { .. }) => Ok(rational_differences(f, p)),
        other => other,
    }
}

fn rational_differences(f: &IntPoly, p: u64) -> ObstructionSet {
    let fp = f.reduce_mod(p);
    let d = fp.derivative();
    let values: Vec<u64> = (0..p).filter(|&a| d.eval(a) == 0).map(|a| fp.eval(a)).collect();
    let mut elements = Vec::new();
    for &a in &values {
        for &b in &values {
            elements.push(((a + p - b) % p) as i64);
        }
    }
    ObstructionSet::new(ObstructionKind::ModP(p), elements, true)
}

/// Hypothesis of the mod-p k-level asymptotic: the translates
/// `R_p, R_p - h_1, ..., R_p - h_{k-1}` are pairwise disjoint.
pub fn theorem1_hypothesis(f: &IntPoly, p: u64, offsets: &[i64]) -> Result<bool, PolyError> {
    Ok(rtilde_mod_p(f, p)?.translates_disjoint(offsets))
}

/// Hypothesis of the weaker upper bound: `h_1 ≢ 0` and the blocks
/// `(R_p ∪ R_p - h_1), R_p - h_2, ...` are pairwise disjoint.
pub fn prop1_hypothesis(f: &IntPoly, p: u64, offsets: &[i64]) -> Result<bool, PolyError> {
    if offsets.is_empty() {
        return Ok(false);
    }
    Ok(rtilde_mod_p(f, p)?.merged_translates_disjoint(offsets))
}
