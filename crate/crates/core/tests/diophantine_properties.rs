use curve_forge::diophantine::{local_solvability, mason_check, pell_bound_check, LocalConfig, LocalOutcome, SmoothWitness};
use curve_forge::poly::UniPoly;
use curve_forge::scalar::Rat;
use proptest::prelude::*;

fn uni(max_deg: usize) -> impl Strategy<Value = UniPoly<Rat>> {
    prop::collection::vec(-5i64..=5, 1..=max_deg + 1).prop_map(|cs| UniPoly::from_i64s(&cs))
}

/// `deg rad(p)` as `deg p − deg gcd(p, p')`.
fn radical_degree_oracle(p: &UniPoly<Rat>) -> usize {
    let d = p.degree().unwrap();
    d - p.gcd(&p.derivative()).degree().unwrap_or(0)
}

/// Valid triples: coprime, summing to zero, not all constant. Half are
/// built from high powers so the inequality is close to tight.
fn mason_triple() -> impl Strategy<Value = [UniPoly<Rat>; 3]> {
    let dense = (uni(5), uni(5)).prop_map(|(a, b)| (a, b));
    let powers = (uni(2), 1u32..=4, uni(2), 1u32..=4)
        .prop_map(|(p, i, q, j)| (p.pow(i), -&q.pow(j)));
    prop_oneof![dense, powers]
        .prop_map(|(a, b)| {
            let c = -&(&a + &b);
            [a, b, c]
        })
        .prop_filter("valid triple", |[a, b, c]| {
            !a.is_zero()
                && !b.is_zero()
                && !c.is_zero()
                && a.gcd(b).is_constant()
                && !(a.is_constant() && b.is_constant() && c.is_constant())
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn mason_holds_on_valid_triples([a, b, c] in mason_triple()) {
        let report = mason_check(&a, &b, &c).unwrap();
        let abc = &(&a * &b) * &c;
        prop_assert_eq!(report.radical_degree, radical_degree_oracle(&abc));
        let top = [&a, &b, &c].iter().map(|p| p.degree().unwrap()).max().unwrap();
        prop_assert_eq!(report.slack, report.radical_degree as i64 - 1 - top as i64);
        prop_assert!(report.slack >= 0 && report.holds);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn pell_solutions_from_squares(x in uni(3)) {
        // D = X^2 - 1 has the solution (X, 1)
        prop_assume!(!x.is_constant());
        let d = &(&x * &x) - &UniPoly::one();
        let report = pell_bound_check(&d, Some((x.clone(), UniPoly::one()))).unwrap();
        prop_assert!(report.possible);
        prop_assert_eq!(report.distinct_roots, radical_degree_oracle(&d));
        prop_assert!(report.degree as i64 <= report.bound);
    }

    #[test]
    fn pell_perfect_powers_are_impossible(c in uni(1), k in 1u32..=4) {
        // D = L^(2k) for a linear L has one distinct root, bound 0
        prop_assume!(c.degree() == Some(1));
        let report = pell_bound_check(&c.pow(2 * k), None).unwrap();
        prop_assert!(!report.possible);
        prop_assert_eq!(report.bound, 0);
    }
}

const TRIPLES: [(i64, i64, i64); 20] = [
    (1, 1, 1),
    (2, 1, 3),
    (1, 3, -1),
    (-1, 1, 2),
    (3, 5, 7),
    (1, -1, 1),
    (2, 3, -5),
    (5, 2, 1),
    (-3, 4, 2),
    (7, -2, 3),
    (1, 6, 11),
    (-2, -5, 3),
    (4, 1, -6),
    (9, 7, 2),
    (1, 10, -3),
    (-7, 3, -1),
    (6, -11, 2),
    (13, 1, 5),
    (2, 9, 17),
    (-5, 12, -13),
];

fn odd_primes_below(n: u64) -> Vec<u64> {
    (3..n).step_by(2).filter(|&p| (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)).collect()
}

fn condition(b1: i64, a: i64, b2: i64, p: u64) -> bool {
    let v = 2 * a as i128 * b1 as i128 * b2 as i128 * (a as i128 * a as i128 - 4 * b1 as i128 * b2 as i128);
    v.rem_euclid(p as i128) != 0
}

#[test]
fn local_certificates_under_the_condition() {
    let cfg = LocalConfig { cross_check: true, ..LocalConfig::default() };
    let mut issued = 0;
    for (b1, a, b2) in TRIPLES {
        for p in odd_primes_below(100) {
            if !condition(b1, a, b2, p) {
                continue;
            }
            let cert = match local_solvability(b1, a, b2, p, &cfg).unwrap() {
                LocalOutcome::Certificate(c) => c,
                other => panic!("({b1}, {a}, {b2}) mod {p}: {other:?}"),
            };
            assert!(cert.recheck(), "{cert:?}");
            assert!(cert.condition_holds);
            // the congruence and the witness, from scratch
            let (m, n, e, pp) = (cert.m as i128, cert.n as i128, cert.e as i128, p as i128);
            let lhs = b1 as i128 * m.pow(4) + a as i128 * m * m * n * n + b2 as i128 * n.pow(4);
            assert_eq!((lhs - e * e).rem_euclid(pp), 0);
            let nonzero = |v: i128| v.rem_euclid(pp) != 0;
            match cert.witness {
                SmoothWitness::E(_) => assert!(nonzero(2 * e)),
                SmoothWitness::M(_) => assert!(nonzero(4 * b1 as i128 * m.pow(3) + 2 * a as i128 * m * n * n)),
                SmoothWitness::N(_) => assert!(nonzero(2 * a as i128 * m * m * n + 4 * b2 as i128 * n.pow(3))),
            }
            issued += 1;
        }
    }
    assert!(issued > 300, "{issued}");
}
