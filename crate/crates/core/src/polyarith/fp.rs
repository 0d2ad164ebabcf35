use std::fmt;

use super::PolyError;

/// Largest modulus accepted for 𝔽_p arithmetic; keeps every product of two
/// residues inside a `u64`.
pub const MAX_PRIME: u64 = 1 << 31;

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

#[inline]
pub(crate) fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub(crate) fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue modulo a prime.
pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

/// A polynomial over 𝔽_p with coefficients reduced into `[0, p)`, ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl FpPoly {
    /// Coefficients are reduced modulo `p` and trailing zeros dropped.
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        assert!((2..=MAX_PRIME).contains(&p), "modulus {p} out of range");
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % p).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { p, coeffs }
    }

    pub fn from_i64s(p: u64, coeffs: &[i64]) -> Self {
        Self::new(
            p,
            coeffs
                .iter()
                .map(|&c| c.rem_euclid(p as i64) as u64)
                .collect(),
        )
    }

    pub fn zero(p: u64) -> Self {
        Self::new(p, Vec::new())
    }

    pub fn constant(p: u64, c: u64) -> Self {
        Self::new(p, vec![c])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<u64> {
        self.coeffs.last().copied()
    }

    fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let x = x % self.p;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| add_mod(mul_mod(acc, x, self.p), c, self.p))
    }

    pub fn derivative(&self) -> FpPoly {
        let p = self.p;
        FpPoly::new(
            p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mul_mod(c, i as u64 % p, p))
                .collect(),
        )
    }

    /// Scaled so the leading coefficient is 1; zero stays zero.
    pub fn monic(&self) -> FpPoly {
        match self.leading() {
            None => self.clone(),
            Some(lc) => self.scale(inv_mod(lc, self.p)),
        }
    }

    pub fn scale(&self, c: u64) -> FpPoly {
        let p = self.p;
        FpPoly::new(p, self.coeffs.iter().map(|&a| mul_mod(a, c % p, p)).collect())
    }

    fn check(&self, other: &FpPoly) -> Result<(), PolyError> {
        if self.p != other.p {
            return Err(PolyError::ModulusMismatch {
                left: self.p,
                right: other.p,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &FpPoly) -> Result<FpPoly, PolyError> {
        self.check(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        Ok(FpPoly::new(
            self.p,
            (0..n)
                .map(|i| add_mod(self.coeff(i), other.coeff(i), self.p))
                .collect(),
        ))
    }

    pub fn sub(&self, other: &FpPoly) -> Result<FpPoly, PolyError> {
        self.check(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        Ok(FpPoly::new(
            self.p,
            (0..n)
                .map(|i| sub_mod(self.coeff(i), other.coeff(i), self.p))
                .collect(),
        ))
    }

    pub fn mul(&self, other: &FpPoly) -> Result<FpPoly, PolyError> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(FpPoly::zero(self.p));
        }
        let p = self.p;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = add_mod(out[i + j], mul_mod(a, b, p), p);
            }
        }
        Ok(FpPoly::new(p, out))
    }

    /// Euclidean division: `(q, r)` with `self = q * d + r`, `deg r < deg d`.
    pub fn div_rem(&self, d: &FpPoly) -> Result<(FpPoly, FpPoly), PolyError> {
        self.check(d)?;
        let dd = d.degree().ok_or(PolyError::ZeroPolynomial)?;
        let p = self.p;
        let inv = inv_mod(d.leading().unwrap(), p);
        let mut r = self.coeffs.clone();
        let n = match self.degree() {
            Some(n) if n >= dd => n,
            _ => return Ok((FpPoly::zero(p), self.clone())),
        };
        let mut q = vec![0u64; n - dd + 1];
        for top in (dd..=n).rev() {
            let c = mul_mod(r[top], inv, p);
            if c == 0 {
                continue;
            }
            q[top - dd] = c;
            for (i, &dc) in d.coeffs.iter().enumerate() {
                let j = top - dd + i;
                r[j] = sub_mod(r[j], mul_mod(c, dc, p), p);
            }
        }
        r.truncate(dd);
        Ok((FpPoly::new(p, q), FpPoly::new(p, r)))
    }

    /// `self(y + h)`.
    pub fn shift(&self, h: u64) -> FpPoly {
        let p = self.p;
        let h = h % p;
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                c[j] = add_mod(c[j], mul_mod(c[j + 1], h, p), p);
            }
        }
        FpPoly::new(p, c)
    }

    /// The polynomial of degree `< points.len()` through the given
    /// `(x, y)` pairs; the `x` values must be distinct modulo `p`.
    pub fn interpolate(p: u64, points: &[(u64, u64)]) -> FpPoly {
        // Newton divided differences.
        let n = points.len();
        let xs: Vec<u64> = points.iter().map(|&(x, _)| x % p).collect();
        let mut dd: Vec<u64> = points.iter().map(|&(_, y)| y % p).collect();
        for level in 1..n {
            for i in (level..n).rev() {
                let num = sub_mod(dd[i], dd[i - 1], p);
                let den = sub_mod(xs[i], xs[i - level], p);
                dd[i] = mul_mod(num, inv_mod(den, p), p);
            }
        }
        let mut acc = FpPoly::zero(p);
        for i in (0..n).rev() {
            // acc = acc * (y - x_i) + dd[i]
            let lin = FpPoly::new(p, vec![sub_mod(0, xs[i], p), 1]);
            acc = acc.mul(&lin).unwrap().add(&FpPoly::constant(p, dd[i])).unwrap();
        }
        acc
    }
}

/// Monic gcd of two polynomials over the same 𝔽_p. `gcd(0, 0) = 0`.
pub fn fp_gcd(a: &FpPoly, b: &FpPoly) -> Result<FpPoly, PolyError> {
    a.check(b)?;
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b)?;
        a = b;
        b = r;
    }
    Ok(a.monic())
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0 (mod {})", self.p);
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if c != 1 || i == 0 {
                write!(f, "{c}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("y")?,
                _ => write!(f, "y^{i}")?,
            }
        }
        write!(f, " (mod {})", self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64, c: &[i64]) -> FpPoly {
        FpPoly::from_i64s(p, c)
    }

    #[test]
    fn derivative_mod_p() {
        assert_eq!(fp(7, &[0, 0, 1]).derivative(), fp(7, &[0, 2]));
        // x^7 has zero derivative mod 7
        assert!(fp(7, &[0, 0, 0, 0, 0, 0, 0, 1]).derivative().is_zero());
    }

    #[test]
    fn gcd_shared_root() {
        // y(y+1)^2 and (y+1)(y+2)^2 share only y+1
        let y = fp(7, &[0, 1]);
        let y1 = fp(7, &[1, 1]);
        let y2 = fp(7, &[2, 1]);
        let a = y.mul(&y1).unwrap().mul(&y1).unwrap();
        let b = y1.mul(&y2).unwrap().mul(&y2).unwrap();
        assert_eq!(fp_gcd(&a, &b).unwrap(), y1);
    }

    #[test]
    fn gcd_with_zero_is_monic_input() {
        let a = fp(7, &[3, 0, 2]);
        assert_eq!(fp_gcd(&a, &FpPoly::zero(7)).unwrap(), a.monic());
        assert_eq!(a.monic().leading(), Some(1));
    }

    #[test]
    fn gcd_of_distinct_linears_is_one() {
        assert_eq!(
            fp_gcd(&fp(7, &[0, 1]), &fp(7, &[3, 1])).unwrap(),
            FpPoly::constant(7, 1)
        );
    }

    #[test]
    fn modulus_mismatch_is_an_error() {
        assert!(matches!(
            fp_gcd(&fp(7, &[1, 1]), &fp(11, &[1, 1])),
            Err(PolyError::ModulusMismatch { left: 7, right: 11 })
        ));
    }

    #[test]
    fn div_rem_identity() {
        let a = fp(13, &[5, 0, 7, 1, 3, 9]);
        let d = fp(13, &[2, 11, 4]);
        let (q, r) = a.div_rem(&d).unwrap();
        assert_eq!(q.mul(&d).unwrap().add(&r).unwrap(), a);
        assert!(r.degree() < d.degree());
    }

    #[test]
    fn shift_and_interpolate() {
        let a = fp(101, &[3, 0, 5, 7]);
        let s = a.shift(40);
        for y in 0..101 {
            assert_eq!(s.eval(y), a.eval(y + 40));
        }
        let pts: Vec<(u64, u64)> = (0..4).map(|x| (x, a.eval(x))).collect();
        assert_eq!(FpPoly::interpolate(101, &pts), a);
    }
}
