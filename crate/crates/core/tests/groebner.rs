use fblow_core::blowup::{singular_locus, Chart};
use fblow_core::ffpoly::{Monomial, PolyRing, Polynomial, Ring, TermOrder};
use fblow_core::groebner::{buchberger, dimension, eliminate, irredundant, IdealGens};
use fblow_core::modpres::QuotientRing;
use fblow_core::{Budget, Config};
use proptest::prelude::*;

fn ring(p: u32) -> Ring {
    PolyRing::new(p, &["x", "y", "z"], TermOrder::GrevLex).unwrap()
}

fn poly(r: &Ring, terms: &[(u32, u32, u32, u32)]) -> Polynomial {
    Polynomial::from_terms(r, terms.iter().map(|&(a, b, c, k)| (Monomial::new(vec![a, b, c]), k)))
}

fn term() -> impl Strategy<Value = (u32, u32, u32, u32)> {
    (0..3u32, 0..3u32, 0..3u32, 1..5u32)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(30))]

    #[test]
    fn irredundant_generates_the_same_ideal(
        gens in prop::collection::vec(prop::collection::vec(term(), 1..4), 1..4),
        mults in prop::collection::vec(prop::collection::vec(term(), 1..3), 2),
    ) {
        let r = ring(5);
        let b = Budget::default();
        let mut all: Vec<Polynomial> = gens.iter().map(|g| poly(&r, g)).collect();
        // redundant combinations of the first generator
        for m in &mults {
            all.push(&poly(&r, m) * &all[0]);
        }
        let full = IdealGens::new(&r, all).unwrap();
        let thin = irredundant(&full, &b).unwrap();
        prop_assert!(thin.gens().len() <= gens.len());
        prop_assert_eq!(buchberger(&thin, &b).unwrap(), buchberger(&full, &b).unwrap());
    }
}

#[test]
fn twisted_cubic_by_elimination() {
    // (s, s^2, s^3) cuts out y - x^2, z - x y
    let r = PolyRing::new(2, &["s", "x", "y", "z"], TermOrder::GrevLex).unwrap();
    let graph = IdealGens::parse(&r, &["x+s", "y+s^2", "z+s^3"]).unwrap();
    let image = eliminate(&graph, &[0], &Budget::default()).unwrap();
    let gb = buchberger(&image, &Budget::default()).unwrap();
    let want = IdealGens::parse(gb.ring(), &["y+x^2", "z+x*y", "x*z+y^2"]).unwrap();
    assert_eq!(gb, buchberger(&want, &Budget::default()).unwrap());
    assert_eq!(dimension(&image, &Budget::default()).unwrap(), 1);
}

#[test]
fn singular_locus_ignores_redundant_relations() {
    let cfg = Config::default();
    let lean = QuotientRing::parse(3, &["x", "y", "z"], &["z^2-x*y"]).unwrap();
    let padded = QuotientRing::parse(3, &["x", "y", "z"], &["z^2-x*y", "x*z^2-x^2*y", "z^4-x^2*y^2"]).unwrap();
    let locus = |q| {
        let (dim, sing) = singular_locus(Chart::from_ring(q).ring.relations(), &cfg).unwrap();
        (dim, buchberger(&sing, &cfg.budget).unwrap())
    };
    let (d1, s1) = locus(&lean);
    let (d2, s2) = locus(&padded);
    assert_eq!((d1, d2), (2, 2));
    assert_eq!(s1, s2);
    assert_eq!(dimension(&s1.to_ideal(), &cfg.budget).unwrap(), 0);
}
