use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use polyimage::arith::primes_between;
use polyimage::composite::{SquareFreeModulus, DEFAULT_CAP_BITS};
use polyimage::oracle::{naive_pair_count, naive_r_k};
use polyimage::polyarith::IntPoly;
use polyimage::primeimage::anomaly_scan;
use polyimage::stats::{
    gap_frequency, ks_exponential, r_k_correlation, spacings, CorrelationWindow, StatsError,
    DEFAULT_LATTICE_CAP,
};
use polyimage::verify::{corpus, ANOMALY_THRESHOLD};
use proptest::prelude::*;

const MODULI: [u64; 7] = [7, 15, 21, 105, 1155, 15015, 2_431];

fn modulus(q: u64) -> SquareFreeModulus {
    SquareFreeModulus::from_integer(q).unwrap()
}

fn nonlinear_poly() -> impl Strategy<Value = IntPoly> {
    (prop::collection::vec(-20i64..=20, 2..5), 1i64..=3).prop_map(|(mut c, lead)| {
        c.push(lead);
        IntPoly::from_i64s(&c)
    })
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[test]
fn pair_correlation_counts_close_pairs() {
    for entry in corpus() {
        for q in [105u64, 1155, 15015] {
            let window = CorrelationWindow::cube(1, 3).unwrap();
            let r = match r_k_correlation(&entry.poly, &modulus(q), &window, DEFAULT_LATTICE_CAP) {
                Ok(r) => r,
                Err(StatsError::Degenerate) => continue,
                Err(e) => panic!("{e}"),
            };
            // on q itself: |Ω_q| R_2 = pairs at distance <= 3 s_q (reduction leaves R_2 as is)
            let image = polyimage::oracle::naive_image_mod_m(&entry.poly, q).unwrap();
            let s = BigRational::new(BigInt::from(q), BigInt::from(image.len()));
            let reach = (s * rat(3, 1)).floor().to_integer();
            let pairs = naive_pair_count(&entry.poly, q, reach.try_into().unwrap()).unwrap();
            let expected = BigRational::new(BigInt::from(pairs), BigInt::from(image.len()));
            assert_eq!(r.value, expected, "{} mod {q}", entry.text);
        }
    }
}

#[test]
fn triple_correlation_matches_direct_sum() {
    for entry in corpus().iter().filter(|e| e.poly.degree() > Some(1)) {
        let intervals = vec![(rat(-1, 1), rat(2, 1)), (rat(0, 1), rat(3, 2))];
        let window = CorrelationWindow::new(intervals.clone()).unwrap();
        let q = 105;
        let fast = match r_k_correlation(&entry.poly, &modulus(q), &window, DEFAULT_LATTICE_CAP) {
            Ok(r) => r.value,
            Err(StatsError::Degenerate) => continue,
            Err(e) => panic!("{e}"),
        };
        assert_eq!(fast, naive_r_k(&entry.poly, q, &intervals).unwrap(), "{}", entry.text);
    }
}

#[test]
fn morse_entries_raise_no_spurious_anomalies() {
    for entry in corpus().iter().filter(|e| e.morse) {
        for p in primes_between(1000, 1100).into_iter().chain([2003, 4001, 7001]) {
            let scan = anomaly_scan(&entry.poly, p, ANOMALY_THRESHOLD).unwrap();
            assert!(
                scan.hits.iter().all(|a| a.in_rtilde),
                "{} at {p}: {:?}",
                entry.text,
                scan.hits
            );
        }
    }
}

#[test]
fn ks_for_squares_mod_a_prime_is_reported() {
    let s = spacings(&"x^2".parse().unwrap(), &modulus(1009), DEFAULT_CAP_BITS).unwrap();
    let ks = ks_exponential(&s);
    assert_eq!(ks.n, 505);
    assert!(ks.statistic > 0.0 && ks.statistic < 1.0);
}

proptest! {
    #[test]
    fn spacing_sums_are_exact(f in nonlinear_poly(), q in prop::sample::select(&MODULI[..])) {
        let s = match spacings(&f, &modulus(q), DEFAULT_CAP_BITS) {
            Ok(s) => s,
            Err(StatsError::Degenerate | StatsError::TooFewPoints { .. }) => return Ok(()),
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        };
        prop_assert_eq!(s.raw_gaps().iter().sum::<u64>(), s.q());
        prop_assert_eq!(s.len() as u64, s.element_count());
        prop_assert_eq!(
            s.normalized_sum(),
            BigRational::from_integer(BigInt::from(s.element_count()))
        );
        let total: Ratio<u64> = (1..=s.q()).map(|h| gap_frequency(&s, h)).sum();
        prop_assert_eq!(total, Ratio::from_integer(1));
    }

    #[test]
    fn correlation_grows_with_the_window(
        f in nonlinear_poly(),
        q in prop::sample::select(&MODULI[1..6]),
        a in 0i64..4,
        len in 1i64..6,
        grow in 0i64..4,
    ) {
        let inner = CorrelationWindow::new(vec![(rat(a, 2), rat(a + len, 2))]).unwrap();
        let outer = CorrelationWindow::new(vec![(rat(a - grow, 2), rat(a + len + grow, 2))]).unwrap();
        let m = modulus(q);
        match (
            r_k_correlation(&f, &m, &inner, DEFAULT_LATTICE_CAP),
            r_k_correlation(&f, &m, &outer, DEFAULT_LATTICE_CAP),
        ) {
            (Ok(r_in), Ok(r_out)) => prop_assert!(r_in.value <= r_out.value),
            (Err(StatsError::Degenerate), Err(StatsError::Degenerate)) => {}
            (x, y) => return Err(TestCaseError::fail(format!("{x:?} / {y:?}"))),
        }
    }
}
