use proptest::prelude::*;

use super::*;

fn ring(p: u32, vars: &[&str]) -> Ring {
    PolyRing::new(p, vars, TermOrder::GrevLex).unwrap()
}

fn poly_strategy(r: Ring, max_terms: usize, max_exp: u32) -> impl Strategy<Value = Polynomial> {
    let n = r.nvars();
    let p = r.modulus();
    proptest::collection::vec((proptest::collection::vec(0..=max_exp, n), 0..p), 0..=max_terms)
        .prop_map(move |ts| Polynomial::from_terms(&r, ts.into_iter().map(|(e, c)| (Monomial::new(e), c))))
}

#[test]
fn freshman_dream_f2() {
    let r = ring(2, &["x", "y"]);
    let f = parse("(x+y)^2", &r).unwrap();
    assert_eq!(f, parse("x^2 + y^2", &r).unwrap());
}

#[test]
fn times_zero() {
    let r = ring(3, &["x", "y"]);
    let f = parse("x^3 + 2*x*y + 1", &r).unwrap();
    assert!((&f * &Polynomial::zero(&r)).is_zero());
}

#[test]
fn cross_terms_cancel_mod_3() {
    let r = ring(3, &["x", "y"]);
    let a = parse("x+2*y", &r).unwrap();
    let b = parse("x+y", &r).unwrap();
    assert_eq!(&a * &b, parse("x^2 + 2*y^2", &r).unwrap());
}

#[test]
fn mismatched_rings() {
    let r1 = ring(2, &["x", "y"]);
    let r2 = ring(2, &["x", "z"]);
    let a = Polynomial::var(&r1, 0);
    let b = Polynomial::var(&r2, 0);
    assert!(matches!(a.checked_add(&b), Err(crate::Error::RingMismatch(_))));
    assert!(matches!(a.checked_mul(&b), Err(crate::Error::RingMismatch(_))));
}

#[test]
fn derivative_in_char_p() {
    let r = ring(2, &["x", "y", "z"]);
    assert!(parse("x^2", &r).unwrap().derivative(0).is_zero());
    let f = parse("z^2+x^3+y^2*z", &r).unwrap();
    assert_eq!(f.derivative(0), parse("x^2", &r).unwrap());
    assert!(f.derivative(1).is_zero());
    assert_eq!(f.derivative(2), parse("y^2", &r).unwrap());
}

#[test]
fn substitution() {
    let r = ring(5, &["x", "y"]);
    let f = parse("x^2*y + x + 3", &r).unwrap();
    let g = f.substitute(0, &parse("y+1", &r).unwrap()).unwrap();
    assert_eq!(g, parse("(y+1)^2*y + y + 4", &r).unwrap());
    assert_eq!(f.specialize(1, 2), parse("2*x^2 + x + 3", &r).unwrap());
}

#[test]
fn remap_between_rings() {
    let r = ring(2, &["x", "y", "z"]);
    let s = ring(2, &["T", "x", "y", "z"]);
    let f = parse("x*y + z^2", &r).unwrap();
    let g = f.remap_by_name(&s).unwrap();
    assert_eq!(g, parse("x*y + z^2", &s).unwrap());
    let back = parse("x + T", &s).unwrap().remap_by_name(&r);
    assert!(back.is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn format_parse_roundtrip(f in poly_strategy(ring(5, &["x", "y", "z"]), 8, 6)) {
        let r = f.ring().clone();
        let g = parse(&f.to_string(), &r).unwrap();
        prop_assert_eq!(&g, &f);
        prop_assert_eq!(g.to_string(), f.to_string());
    }

    #[test]
    fn ring_axioms(
        f in poly_strategy(ring(3, &["x", "y", "z"]), 5, 3),
        g in poly_strategy(ring(3, &["x", "y", "z"]), 5, 3),
        h in poly_strategy(ring(3, &["x", "y", "z"]), 5, 3),
    ) {
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert!((&f - &f).is_zero());
    }

    #[test]
    fn qsplit_reassembles(e in proptest::collection::vec(0u32..1000, 1..6), q in 1u32..20) {
        let m = Monomial::new(e);
        let (quot, rem) = qsplit(&m, q);
        prop_assert!(rem.exponents().iter().all(|&r| r < q));
        prop_assert_eq!(quot.checked_pow(q).unwrap().mul(&rem), m);
    }

    #[test]
    fn frobenius_is_additive(
        p in prop_oneof![Just(2u32), Just(3u32), Just(5u32)],
        seed in any::<u64>(),
    ) {
        use rand::{Rng, SeedableRng};
        let r = ring(p, &["x", "y", "z"]);
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let mut random = || {
            Polynomial::from_terms(&r, (0..4).map(|_| {
                (Monomial::new((0..3).map(|_| rng.gen_range(0..3)).collect()), rng.gen_range(0..p))
            }))
        };
        let (f, g) = (random(), random());
        prop_assert_eq!((&f + &g).pow(p), &f.pow(p) + &g.pow(p));
    }
}
