use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::fp::FpPoly;

/// A univariate polynomial with arbitrary-precision integer coefficients,
/// stored in ascending degree order.
///
/// The zero polynomial has an empty coefficient list; every other value has a
/// nonzero leading coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::from_i64s(&[0, 1])
    }

    pub fn monomial(c: impl Into<BigInt>, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c.into();
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn reduce_mod(&self, p: u64) -> FpPoly {
        let m = BigInt::from(p);
        FpPoly::new(
            p,
            self.coeffs
                .iter()
                .map(|c| c.mod_floor(&m).to_u64().expect("residue fits in u64"))
                .collect(),
        )
    }

    /// Gcd of the coefficients, nonnegative. Zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Content removed and leading coefficient made positive.
    pub fn primitive(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut g = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            g = -g;
        }
        IntPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Returns `self(y + r)`, computed by repeated synthetic division.
    pub fn taylor_shift(&self, r: &BigInt) -> IntPoly {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = &c[j + 1] * r;
                c[j] += t;
            }
        }
        IntPoly::new(c)
    }

    /// `self^e` by repeated squaring.
    pub fn pow(&self, mut e: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::constant(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Pseudo-remainder: `lc(d)^(deg self - deg d + 1) * self mod d`.
    pub fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        let dd = d.degree().expect("pseudo-division by zero polynomial");
        let lc = d.leading().unwrap().clone();
        let mut r = self.clone();
        let mut steps = match self.degree() {
            Some(n) if n >= dd => n - dd + 1,
            _ => return r,
        };
        while let Some(n) = r.degree() {
            if n < dd {
                break;
            }
            let top = r.leading().unwrap().clone();
            let mut next: Vec<BigInt> = r.coeffs.iter().map(|c| c * &lc).collect();
            for (i, c) in d.coeffs.iter().enumerate() {
                next[n - dd + i] -= &top * c;
            }
            r = IntPoly::new(next);
            steps -= 1;
        }
        let fix = num_traits::pow(lc, steps);
        r.scale(&fix)
    }

    /// Exact quotient `self / d` if `d` divides `self` over the integers.
    pub fn exact_div(&self, d: &IntPoly) -> Option<IntPoly> {
        let dd = d.degree()?;
        let lc = d.leading().unwrap();
        let mut r = self.clone();
        let Some(n) = r.degree() else {
            return Some(IntPoly::zero());
        };
        if n < dd {
            return None;
        }
        let mut q = vec![BigInt::zero(); n - dd + 1];
        while let Some(m) = r.degree() {
            if m < dd {
                return None;
            }
            let (c, rem) = r.leading().unwrap().div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            let mut next = r.coeffs.clone();
            for (i, dc) in d.coeffs.iter().enumerate() {
                next[m - dd + i] -= &c * dc;
            }
            q[m - dd] = c;
            r = IntPoly::new(next);
        }
        Some(IntPoly::new(q))
    }

    /// Degree of the gcd of `self` and `other` over the rationals, computed
    /// with a primitive pseudo-remainder sequence. `None` if both are zero.
    pub fn rational_gcd_degree(&self, other: &IntPoly) -> Option<usize> {
        let (mut a, mut b) = (self.primitive(), other.primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        a.degree()
    }

    /// Cauchy's bound: every complex root `z` satisfies `|z| < 1 + max |a_i / a_n|`.
    /// Returned rounded up to an integer.
    pub fn cauchy_root_bound(&self) -> Option<BigInt> {
        let n = self.degree()?;
        let lc = self.coeffs[n].abs();
        let max = self.coeffs[..n]
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_default();
        Some(BigInt::one() + max.div_ceil(&lc))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            if !mag.is_one() || i == 0 {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derivative_of_quartic() {
        let f = IntPoly::from_i64s(&[0, 0, -2, 0, 1]);
        assert_eq!(f.derivative(), IntPoly::from_i64s(&[0, -4, 0, 4]));
        assert!(IntPoly::from_i64s(&[5]).derivative().is_zero());
    }

    #[test]
    fn display_roundtrips_common_shapes() {
        assert_eq!(IntPoly::from_i64s(&[0, 0, -2, 0, 1]).to_string(), "x^4 - 2x^2");
        assert_eq!(IntPoly::from_i64s(&[-1, 1]).to_string(), "x - 1");
        assert_eq!(IntPoly::from_i64s(&[1, 0, -3]).to_string(), "-3x^2 + 1");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    #[test]
    fn taylor_shift_matches_composition() {
        let f = IntPoly::from_i64s(&[3, -1, 0, 2]);
        let r = BigInt::from(-4);
        let shifted = f.taylor_shift(&r);
        for y in -5..5 {
            let y = BigInt::from(y);
            assert_eq!(shifted.eval(&y), f.eval(&(&y + &r)));
        }
    }

    #[test]
    fn exact_division() {
        let a = IntPoly::from_i64s(&[1, 1]);
        let b = IntPoly::from_i64s(&[-2, 3]);
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&a), Some(b.clone()));
        assert_eq!(IntPoly::from_i64s(&[1, 0, 1]).exact_div(&a), None);
        assert_eq!(IntPoly::from_i64s(&[1, 2]).exact_div(&IntPoly::from_i64s(&[0, 2])), None);
    }

    #[test]
    fn rational_gcd_degree_detects_shared_factor() {
        let a = &IntPoly::from_i64s(&[1, 2]) * &IntPoly::from_i64s(&[5, 0, 1]);
        let b = &IntPoly::from_i64s(&[1, 2]) * &IntPoly::from_i64s(&[-7, 3]);
        assert_eq!(a.rational_gcd_degree(&b), Some(1));
        let c = IntPoly::from_i64s(&[3, 1]);
        assert_eq!(a.rational_gcd_degree(&c), Some(0));
    }

    #[test]
    fn pseudo_remainder_identity() {
        let a = IntPoly::from_i64s(&[1, -3, 0, 5, 2]);
        let d = IntPoly::from_i64s(&[2, 0, 3]);
        let r = a.pseudo_rem(&d);
        // lc(d)^3 * a - r must be divisible by d
        let lhs = &a.scale(&BigInt::from(27)) - &r;
        assert!(lhs.exact_div(&d).is_some());
        assert!(r.degree() < d.degree());
    }
}
