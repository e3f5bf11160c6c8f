use curve_forge::parse::{parse_poly, render_poly, ExprSource};
use curve_forge::poly::bivariate::gcd2;
use curve_forge::poly::factor::{kronecker_factor, squarefree_decomposition};
use curve_forge::poly::{KroneckerConfig, Mono, TriPoly, UniPoly, X, Y, Z};
use curve_forge::resultant::resultant_uni;
use curve_forge::scalar::{int, rat, Rat};
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = Rat> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn tri(max_exp: u32, terms: usize) -> impl Strategy<Value = TriPoly<Rat>> {
    prop::collection::vec(((0..=max_exp, 0..=max_exp, 0..=max_exp), small_rat()), 0..terms)
        .prop_map(|ts| TriPoly::from_terms(ts.into_iter().map(|((a, b, c), k)| (Mono([a, b, c]), k))))
}

fn form(deg: u32) -> impl Strategy<Value = TriPoly<Rat>> {
    prop::collection::vec(((0..=deg), (0..=deg), small_rat()), 1..6).prop_map(move |ts| {
        TriPoly::from_terms(
            ts.into_iter()
                .filter(|(a, b, _)| a + b <= deg)
                .map(|(a, b, k)| (Mono([a, b, deg - a - b]), k)),
        )
    })
}

fn uni(max_deg: usize) -> impl Strategy<Value = UniPoly<Rat>> {
    prop::collection::vec(-6i64..=6, 1..=max_deg + 1).prop_map(|cs| UniPoly::from_i64s(&cs))
}

fn nonzero_uni(max_deg: usize) -> impl Strategy<Value = UniPoly<Rat>> {
    uni(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn render_parse_round_trip(a in tri(4, 6)) {
        let vars = ["X", "Y", "Z"];
        let text = render_poly(&a, &vars);
        let back = parse_poly(&ExprSource::from(text.as_str()), &vars).unwrap();
        prop_assert_eq!(back, a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in tri(3, 5), b in tri(3, 5), c in tri(3, 5)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn euler_identity(f in form(4)) {
        prop_assume!(!f.is_zero());
        let d = f.total_degree().unwrap() as i64;
        let lhs = [X, Y, Z]
            .iter()
            .fold(TriPoly::zero(), |acc, &v| &acc + &(&TriPoly::var(v) * &f.partial(v)));
        prop_assert_eq!(lhs, f.scale(&int(d)));
    }

    #[test]
    fn exact_division_inverts_product(a in tri(2, 4), b in tri(2, 4)) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
    }

    #[test]
    fn parser_never_panics(s in "[XYZ0-9+*^()/ =-]{0,24}") {
        let _ = parse_poly(&ExprSource::from(s.as_str()), &["X", "Y", "Z"]);
    }

    #[test]
    fn uni_gcd_divides_both(a in nonzero_uni(5), b in nonzero_uni(5), c in nonzero_uni(3)) {
        let (ac, bc) = (&a * &c, &b * &c);
        let g = ac.gcd(&bc);
        prop_assert!(g.divides(&ac) && g.divides(&bc));
        prop_assert!(c.divides(&g));
    }

    #[test]
    fn radical_is_squarefree(a in nonzero_uni(4), b in nonzero_uni(3)) {
        let p = &(&a * &a) * &b;
        let r = p.radical().unwrap();
        prop_assert!(r.gcd(&r.derivative()).is_constant());
        prop_assert!(r.divides(&p));
        for (s, _) in squarefree_decomposition(&p) {
            prop_assert!(s.divides(&r));
        }
    }

    #[test]
    fn kronecker_reassembles(a in nonzero_uni(4), b in nonzero_uni(3)) {
        let p = &a * &b;
        let fact = kronecker_factor(&p, &KroneckerConfig::default()).unwrap();
        prop_assert_eq!(fact.expand(), p);
        for (f, _) in &fact.factors {
            prop_assert!(f.lc() == int(1));
        }
    }

    #[test]
    fn resultant_swap_sign(a in nonzero_uni(4), b in nonzero_uni(4)) {
        prop_assume!(!a.is_constant() && !b.is_constant());
        let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
        let sign = if da * db % 2 == 0 { int(1) } else { int(-1) };
        prop_assert_eq!(resultant_uni(&a, &b).unwrap(), sign * resultant_uni(&b, &a).unwrap());
    }

    #[test]
    fn resultant_multiplicative(a in nonzero_uni(3), b in nonzero_uni(3), c in nonzero_uni(3)) {
        prop_assume!(!a.is_constant() && !b.is_constant() && !c.is_constant());
        let lhs = resultant_uni(&(&a * &b), &c).unwrap();
        let rhs = resultant_uni(&a, &c).unwrap() * resultant_uni(&b, &c).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn resultant_vanishes_on_common_root(a in nonzero_uni(3), b in nonzero_uni(3), r in -5i64..=5) {
        let lin = UniPoly::from_i64s(&[-r, 1]);
        prop_assert_eq!(resultant_uni(&(&a * &lin), &(&b * &lin)).unwrap(), int(0));
    }

    #[test]
    fn bivariate_gcd_finds_shared_factor(a in tri(2, 3), b in tri(2, 3), c in tri(2, 3)) {
        let flat = |p: TriPoly<Rat>| p.set_var(Z, &int(1));
        let (a, b, c) = (flat(a), flat(b), flat(c));
        prop_assume!(!a.is_zero() && !b.is_zero() && !c.is_zero());
        let g = gcd2(&(&a * &c), &(&b * &c));
        prop_assert!((&a * &c).div_exact(&g).is_some());
        prop_assert!(g.div_exact(&c.primitive()).is_some() || c.is_constant());
    }
}
