use std::collections::BTreeSet;

use polyimage::arith::primes_up_to;
use polyimage::oracle::resultant_cross_check;
use polyimage::polyarith::{
    critical_value_poly, critical_value_poly_mod, fp_gcd, is_supported_prime, resultant_fp,
    rtilde_infinity, rtilde_mod_p, FpPoly, IntPoly,
};
use polyimage::verify::corpus;
use proptest::prelude::*;

const SMALL_PRIMES: [u64; 10] = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31];

fn int_poly(max_degree: usize) -> impl Strategy<Value = IntPoly> {
    (2..=max_degree)
        .prop_flat_map(|d| (prop::collection::vec(-9i64..=9, d), 1i64..=4))
        .prop_map(|(mut lower, lead)| {
            lower.push(lead);
            IntPoly::from_i64s(&lower)
        })
}

fn fp_poly(p: u64) -> impl Strategy<Value = FpPoly> {
    prop::collection::vec(0..p, 2..7).prop_map(move |c| FpPoly::new(p, c))
}

fn rational_critical_values(f: &IntPoly, p: u64) -> BTreeSet<u64> {
    let fp = f.reduce_mod(p);
    let d = fp.derivative();
    (0..p).filter(|&a| d.eval(a) == 0).map(|a| fp.eval(a)).collect()
}

fn roots_in_fp(c: &FpPoly) -> BTreeSet<u64> {
    (0..c.modulus()).filter(|&y| c.eval(y) == 0).collect()
}

#[test]
fn resultants_agree_with_brute_force_for_corpus() {
    for entry in corpus().iter().filter(|e| e.poly.degree() > Some(1)) {
        for p in primes_up_to(200) {
            if !is_supported_prime(&entry.poly, p) {
                continue;
            }
            let report = resultant_cross_check(&entry.poly, p).unwrap();
            assert!(report.matched, "{} at {p}: {report:?}", entry.text);
        }
    }
}

#[test]
fn rational_critical_points_give_exact_root_sets() {
    // every critical point of these is an integer
    for text in ["x^2", "x^3 - 3x", "x^4 - 2x^2"] {
        let f: IntPoly = text.parse().unwrap();
        for p in primes_up_to(200).into_iter().filter(|&p| is_supported_prime(&f, p)) {
            let c = critical_value_poly_mod(&f, p).unwrap();
            assert_eq!(roots_in_fp(&c), rational_critical_values(&f, p), "{text} at {p}");
        }
    }
}

proptest! {
    #[test]
    fn resultant_vanishes_iff_common_factor(
        (a, b) in prop::sample::select(&SMALL_PRIMES[..]).prop_flat_map(|p| (fp_poly(p), fp_poly(p)))
    ) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let r = resultant_fp(&a, &b).unwrap();
        let g = fp_gcd(&a, &b).unwrap();
        prop_assert_eq!(r == 0, g.degree().unwrap_or(0) > 0);
    }

    #[test]
    fn obstruction_sets_are_symmetric_and_contain_zero(
        f in int_poly(5),
        p in prop::sample::select(&SMALL_PRIMES[..]),
    ) {
        prop_assume!(is_supported_prime(&f, p));
        let Ok(set) = rtilde_mod_p(&f, p) else { return Ok(()) };
        let c = critical_value_poly_mod(&f, p).unwrap();
        if c.degree().unwrap_or(0) > 0 {
            prop_assert!(set.contains(0));
        }
        for &r in set.elements() {
            prop_assert!(set.contains((p as i64 - r) % p as i64));
        }
    }

    #[test]
    fn integer_obstructions_survive_reduction(
        f in int_poly(4),
        p in prop::sample::select(&SMALL_PRIMES[..]),
    ) {
        prop_assume!(is_supported_prime(&f, p));
        let c = critical_value_poly(&f).unwrap();
        let Ok(cp) = critical_value_poly_mod(&f, p) else { return Ok(()) };
        // only where C_p is C mod p up to a scalar and no root escapes to infinity
        let reduced = c.reduce_mod(p);
        prop_assume!(reduced.degree() == c.degree() && reduced.monic() == cp);
        let at_p = rtilde_mod_p(&f, p).unwrap();
        for &r in rtilde_infinity(&f).unwrap().elements() {
            prop_assert!(at_p.contains(r), "r = {r}");
        }
    }

    #[test]
    fn critical_values_mod_p_are_roots(
        f in int_poly(5),
        p in prop::sample::select(&SMALL_PRIMES[..]),
    ) {
        prop_assume!(is_supported_prime(&f, p));
        let Ok(c) = critical_value_poly_mod(&f, p) else { return Ok(()) };
        let roots = roots_in_fp(&c);
        for v in rational_critical_values(&f, p) {
            prop_assert!(roots.contains(&v));
        }
    }

    #[test]
    fn display_parses_back(f in int_poly(6)) {
        let again: IntPoly = f.to_string().parse().unwrap();
        prop_assert_eq!(again, f);
    }
}
