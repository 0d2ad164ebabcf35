//! Resultants of univariate polynomials whose coefficients live in an exact
//! domain (ℤ, ℤ[y], 𝔽_p[y]) plus a Euclidean fast path over 𝔽_p.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::fp::{mul_mod, pow_mod, sub_mod, FpPoly};
use super::int::IntPoly;
use super::PolyError;

/// An integral domain with exact division, enough for the subresultant PRS.
pub trait Domain: Clone + PartialEq {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn add_elem(&self, other: &Self) -> Self;
    fn sub_elem(&self, other: &Self) -> Self;
    fn mul_elem(&self, other: &Self) -> Self;
    fn neg_elem(&self) -> Self;
    /// `self / other`; the caller guarantees divisibility.
    fn div_exact(&self, other: &Self) -> Self;

    fn pow_elem(&self, e: usize) -> Self {
        let mut acc = self.one_like();
        for _ in 0..e {
            acc = acc.mul_elem(self);
        }
        acc
    }
}

impl Domain for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_elem(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_elem(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_elem(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_elem(&self) -> Self {
        -self
    }
    fn div_exact(&self, o: &Self) -> Self {
        let (q, r) = self.div_rem(o);
        debug_assert!(r.is_zero(), "inexact division in subresultant PRS");
        q
    }
}

impl Domain for IntPoly {
    fn zero_like(&self) -> Self {
        IntPoly::zero()
    }
    fn one_like(&self) -> Self {
        IntPoly::constant(1)
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_elem(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_elem(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_elem(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_elem(&self) -> Self {
        -self
    }
    fn div_exact(&self, o: &Self) -> Self {
        self.exact_div(o)
            .expect("inexact division in subresultant PRS over Z[y]")
    }
}

impl Domain for FpPoly {
    fn zero_like(&self) -> Self {
        FpPoly::zero(self.modulus())
    }
    fn one_like(&self) -> Self {
        FpPoly::constant(self.modulus(), 1)
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_elem(&self, o: &Self) -> Self {
        self.add(o).unwrap()
    }
    fn sub_elem(&self, o: &Self) -> Self {
        self.sub(o).unwrap()
    }
    fn mul_elem(&self, o: &Self) -> Self {
        self.mul(o).unwrap()
    }
    fn neg_elem(&self) -> Self {
        self.zero_like().sub(self).unwrap()
    }
    fn div_exact(&self, o: &Self) -> Self {
        let (q, r) = self.div_rem(o).unwrap();
        debug_assert!(r.is_zero(), "inexact division in subresultant PRS over F_p[y]");
        q
    }
}

fn trim<R: Domain>(v: &mut Vec<R>) {
    while v.last().is_some_and(Domain::is_zero_elem) {
        v.pop();
    }
}

fn pseudo_rem<R: Domain>(a: &[R], b: &[R]) -> Vec<R> {
    let db = b.len() - 1;
    let lc = &b[db];
    let mut r = a.to_vec();
    let mut steps = a.len() - b.len() + 1;
    while r.len() > db {
        let top = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        let mut next: Vec<R> = r.iter().map(|c| c.mul_elem(lc)).collect();
        for (i, c) in b.iter().enumerate() {
            next[shift + i] = next[shift + i].sub_elem(&top.mul_elem(c));
        }
        trim(&mut next);
        r = next;
        steps -= 1;
    }
    let fix = lc.pow_elem(steps);
    r.iter().map(|c| c.mul_elem(&fix)).collect()
}

/// Resultant of two polynomials given as ascending coefficient slices with
/// nonzero leading terms, via the subresultant polynomial remainder sequence.
/// Returns zero if either input is empty.
pub fn subresultant<R: Domain>(a: &[R], b: &[R]) -> Option<R> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    trim(&mut a);
    trim(&mut b);
    let sample = a.first().or(b.first())?.clone();
    if a.is_empty() || b.is_empty() {
        return Some(sample.zero_like());
    }
    let mut negate = false;
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
        if (a.len() - 1) % 2 == 1 && (b.len() - 1) % 2 == 1 {
            negate = true;
        }
    }
    let sign = |x: R, negate: bool| if negate { x.neg_elem() } else { x };
    if b.len() == 1 {
        return Some(sign(b[0].pow_elem(a.len() - 1), negate));
    }
    let mut g = sample.one_like();
    let mut h = sample.one_like();
    loop {
        let (da, db) = (a.len() - 1, b.len() - 1);
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let r = pseudo_rem(&a, &b);
        let div = g.mul_elem(&h.pow_elem(delta));
        a = b;
        b = r.iter().map(|c| c.div_exact(&div)).collect();
        g = a.last().unwrap().clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            d => g.pow_elem(d).div_exact(&h.pow_elem(d - 1)),
        };
        if b.is_empty() {
            return Some(sample.zero_like());
        }
        if b.len() == 1 {
            break;
        }
    }
    let da = a.len() - 1;
    let res = b[0].pow_elem(da).div_exact(&h.pow_elem(da - 1));
    Some(sign(res, negate))
}

/// Resultant of two integer polynomials.
pub fn resultant_int(a: &IntPoly, b: &IntPoly) -> BigInt {
    subresultant(a.coeffs(), b.coeffs()).unwrap_or_default()
}

/// Resultant of two polynomials over 𝔽_p by the Euclidean algorithm.
pub fn resultant_fp(a: &FpPoly, b: &FpPoly) -> Result<u64, PolyError> {
    if a.modulus() != b.modulus() {
        return Err(PolyError::ModulusMismatch {
            left: a.modulus(),
            right: b.modulus(),
        });
    }
    let p = a.modulus();
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut acc = 1u64;
    loop {
        let (Some(m), Some(n)) = (a.degree(), b.degree()) else {
            return Ok(0);
        };
        if n == 0 {
            return Ok(mul_mod(acc, pow_mod(b.leading().unwrap(), m as u64, p), p));
        }
        if m == 0 {
            return Ok(mul_mod(acc, pow_mod(a.leading().unwrap(), n as u64, p), p));
        }
        // Res(a, b) = (-1)^{mn} Res(b, a) = (-1)^{mn} lc(b)^{m - deg r} Res(b, r)
        let (_, r) = a.div_rem(&b)?;
        let Some(dr) = r.degree() else {
            return Ok(0);
        };
        if (m * n) % 2 == 1 {
            acc = sub_mod(0, acc, p);
        }
        acc = mul_mod(acc, pow_mod(b.leading().unwrap(), (m - dr) as u64, p), p);
        a = b;
        b = r;
    }
}

/// `Res_x(a, b)` where `a ∈ ℤ[x]` and `b ∈ ℤ[y][x]` is given by its
/// x-coefficients (ascending), each a polynomial in `y`.
pub fn resultant_x_int(a: &IntPoly, b: &[IntPoly]) -> Result<IntPoly, PolyError> {
    if a.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let a_lifted: Vec<IntPoly> = a.coeffs().iter().map(|c| IntPoly::constant(c.clone())).collect();
    Ok(subresultant(&a_lifted, b).unwrap_or_default())
}

/// `Res_x(a, b)` over 𝔽_p where `b ∈ 𝔽_p[y][x]`, by evaluating `y` at
/// enough points and interpolating. Falls back to the subresultant PRS over
/// 𝔽_p[y] when `p` is too small to supply distinct evaluation points.
pub fn resultant_x_fp(a: &FpPoly, b: &[FpPoly]) -> Result<FpPoly, PolyError> {
    let p = a.modulus();
    if let Some(bad) = b.iter().find(|c| c.modulus() != p) {
        return Err(PolyError::ModulusMismatch {
            left: p,
            right: bad.modulus(),
        });
    }
    let m = a.degree().ok_or(PolyError::ZeroPolynomial)?;
    let mut b = b.to_vec();
    while b.last().is_some_and(FpPoly::is_zero) {
        b.pop();
    }
    if b.is_empty() {
        return Ok(FpPoly::zero(p));
    }
    let n = b.len() - 1;
    let e = b.iter().filter_map(FpPoly::degree).max().unwrap_or(0);
    let bound = m * e;
    if (bound as u64) >= p {
        let a_lifted: Vec<FpPoly> = a.coeffs().iter().map(|&c| FpPoly::constant(p, c)).collect();
        return Ok(subresultant(&a_lifted, &b).unwrap());
    }
    let lc_a = a.leading().unwrap();
    let points: Vec<(u64, u64)> = (0..=bound as u64)
        .map(|y| {
            let spec = FpPoly::new(p, b.iter().map(|c| c.eval(y)).collect());
            let value = match spec.degree() {
                None => 0,
                Some(actual) => {
                    // formal x-degree of b is n; a degree drop at this y multiplies
                    // the formal resultant by lc(a)^(n - actual)
                    let r = resultant_fp(a, &spec).expect("same modulus");
                    mul_mod(r, pow_mod(lc_a, (n - actual) as u64, p), p)
                }
            };
            (y, value)
        })
        .collect();
    Ok(FpPoly::interpolate(p, &points))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    /// Sylvester-matrix determinant by fraction-free Bareiss elimination;
    /// a second route to the integer resultant.
    fn sylvester_det(a: &IntPoly, b: &IntPoly) -> BigInt {
        let (m, n) = (a.degree().unwrap(), b.degree().unwrap());
        let size = m + n;
        if size == 0 {
            return BigInt::one();
        }
        let mut mat = vec![vec![BigInt::zero(); size]; size];
        for row in 0..n {
            for (j, c) in a.coeffs().iter().rev().enumerate() {
                mat[row][row + j] = c.clone();
            }
        }
        for row in 0..m {
            for (j, c) in b.coeffs().iter().rev().enumerate() {
                mat[n + row][row + j] = c.clone();
            }
        }
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..size - 1 {
            if mat[k][k].is_zero() {
                let Some(swap) = (k + 1..size).find(|&r| !mat[r][k].is_zero()) else {
                    return BigInt::zero();
                };
                mat.swap(k, swap);
                sign = -sign;
            }
            for i in k + 1..size {
                for j in k + 1..size {
                    let v = &mat[i][j] * &mat[k][k] - &mat[i][k] * &mat[k][j];
                    mat[i][j] = v / &prev;
                }
            }
            prev = mat[k][k].clone();
        }
        sign * &mat[size - 1][size - 1]
    }

    #[test]
    fn product_formula_small_case() {
        // a = (x-1)(x-2), b = x-3: Res = (1-3)(2-3) = 2
        let a = ip(&[2, -3, 1]);
        let b = ip(&[-3, 1]);
        assert_eq!(resultant_int(&a, &b), BigInt::from(2));
        assert_eq!(resultant_int(&b, &a), BigInt::from(2));
        assert_eq!(resultant_int(&a, &ip(&[5])), BigInt::from(25));
    }

    #[test]
    fn subresultant_matches_sylvester_determinant() {
        let polys = [
            ip(&[1, 0, 3, -2]),
            ip(&[0, -4, 0, 4]),
            ip(&[7, 1]),
            ip(&[2, 2, 1, 0, 5, -1]),
            ip(&[-1, 0, 0, 0, 0, 0, 2]),
            ip(&[3, -3, 1, 1]),
        ];
        for a in &polys {
            for b in &polys {
                assert_eq!(resultant_int(a, b), sylvester_det(a, b), "{a} / {b}");
            }
        }
    }

    #[test]
    fn euclid_over_fp_matches_integer_route() {
        let polys = [
            ip(&[1, 0, 3, -2]),
            ip(&[0, -4, 0, 4]),
            ip(&[2, 2, 1, 0, 5, -1]),
            ip(&[3, -3, 1, 1]),
        ];
        for p in [7u64, 11, 101] {
            for a in &polys {
                for b in &polys {
                    let exact = resultant_int(a, b);
                    let expected = exact.mod_floor(&BigInt::from(p));
                    let got = resultant_fp(&a.reduce_mod(p), &b.reduce_mod(p)).unwrap();
                    assert_eq!(BigInt::from(got), expected);
                }
            }
        }
    }

    fn y_minus(f: &IntPoly) -> Vec<IntPoly> {
        let mut b: Vec<IntPoly> = f.coeffs().iter().map(|c| IntPoly::constant(-c)).collect();
        b[0] = &b[0] + &IntPoly::x();
        b
    }

    #[test]
    fn critical_resultants_over_z() {
        // Res_x(2x, y - x^2) = c*y
        let r = resultant_x_int(&ip(&[0, 2]), &y_minus(&ip(&[0, 0, 1]))).unwrap();
        assert_eq!(r.primitive(), ip(&[0, 1]));
        // Res_x(3x^2, y - x^3) = c*y^2
        let r = resultant_x_int(&ip(&[0, 0, 3]), &y_minus(&ip(&[0, 0, 0, 1]))).unwrap();
        assert_eq!(r.primitive(), ip(&[0, 0, 1]));
        // Res_x(4x^3 - 4x, y - x^4 + 2x^2) = c*y(y+1)^2
        let f = ip(&[0, 0, -2, 0, 1]);
        let r = resultant_x_int(&f.derivative(), &y_minus(&f)).unwrap();
        assert_eq!(r.primitive(), ip(&[0, 1, 2, 1]));
    }

    #[test]
    fn evaluation_interpolation_agrees_with_prs_over_fp() {
        let f = ip(&[1, -3, 0, 2, 5]);
        for p in [3u64, 5, 7, 13, 101] {
            let a = f.derivative().reduce_mod(p);
            let b: Vec<FpPoly> = y_minus(&f).iter().map(|c| c.reduce_mod(p)).collect();
            let lifted: Vec<FpPoly> = a.coeffs().iter().map(|&c| FpPoly::constant(p, c)).collect();
            let prs = subresultant(&lifted, &b).unwrap();
            assert_eq!(resultant_x_fp(&a, &b).unwrap(), prs, "p = {p}");
        }
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert!(matches!(
            resultant_x_int(&IntPoly::zero(), &[ip(&[1])]),
            Err(PolyError::ZeroPolynomial)
        ));
        assert!(matches!(
            resultant_x_fp(&FpPoly::zero(7), &[FpPoly::constant(7, 1)]),
            Err(PolyError::ZeroPolynomial)
        ));
    }
}
