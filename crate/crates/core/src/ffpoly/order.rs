use std::cmp::Ordering;

use super::monomial::{grevlex_cmp, lex_cmp, Monomial};

/// Monomial orders. Variables are ordered `x_0 > x_1 > ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum TermOrder {
    Lex,
    #[default]
    GrevLex,
    /// Lexicographic on the first `k` variables, ties broken by grevlex on the rest.
    /// Any ideal element whose leading term avoids the first block lies in the
    /// subring of the remaining variables.
    BlockElim(usize),
    /// Grevlex on the first `k` variables, ties broken lexicographically on the rest.
    /// With the trailing variables standing for basis vectors of a free module this
    /// is a term-over-position order.
    Product(usize),
}

impl TermOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        match *self {
            TermOrder::Lex => lex_cmp(ea, eb),
            TermOrder::GrevLex => match a.degree().cmp(&b.degree()) {
                Ordering::Equal => grevlex_cmp(ea, eb),
                o => o,
            },
            TermOrder::BlockElim(k) => {
                let k = k.min(ea.len());
                lex_cmp(&ea[..k], &eb[..k]).then_with(|| grevlex_cmp(&ea[k..], &eb[k..]))
            }
            TermOrder::Product(k) => {
                let k = k.min(ea.len());
                grevlex_cmp(&ea[..k], &eb[..k]).then_with(|| lex_cmp(&ea[k..], &eb[k..]))
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            TermOrder::Lex => "lex".into(),
            TermOrder::GrevLex => "grevlex".into(),
            TermOrder::BlockElim(k) => format!("elim({k})"),
            TermOrder::Product(k) => format!("product({k})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mono(n: usize) -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..5, n).prop_map(Monomial::new)
    }

    fn orders() -> impl Strategy<Value = TermOrder> {
        prop_oneof![
            Just(TermOrder::Lex),
            Just(TermOrder::GrevLex),
            (0usize..5).prop_map(TermOrder::BlockElim),
            (0usize..5).prop_map(TermOrder::Product),
        ]
    }

    proptest! {
        #[test]
        fn is_a_monomial_order(o in orders(), a in mono(4), b in mono(4), c in mono(4)) {
            // total
            prop_assert_eq!(o.cmp(&a, &b) == Ordering::Equal, a == b);
            prop_assert_eq!(o.cmp(&a, &b), o.cmp(&b, &a).reverse());
            // multiplicative
            prop_assert_eq!(o.cmp(&a, &b), o.cmp(&a.mul(&c), &b.mul(&c)));
            // 1 is minimal
            prop_assert_ne!(o.cmp(&Monomial::one(4), &a), Ordering::Greater);
            // transitive
            if o.cmp(&a, &b) == Ordering::Less && o.cmp(&b, &c) == Ordering::Less {
                prop_assert_eq!(o.cmp(&a, &c), Ordering::Less);
            }
        }
    }

    #[test]
    fn grevlex_tie_break() {
        // x*z < y^2 in grevlex with x > y > z
        let xz = Monomial::new(vec![1, 0, 1]);
        let yy = Monomial::new(vec![0, 2, 0]);
        assert_eq!(TermOrder::GrevLex.cmp(&xz, &yy), Ordering::Less);
        assert_eq!(TermOrder::Lex.cmp(&xz, &yy), Ordering::Greater);
    }

    #[test]
    fn elimination_block_dominates() {
        let t = Monomial::new(vec![1, 0, 0]);
        let big = Monomial::new(vec![0, 9, 9]);
        assert_eq!(TermOrder::BlockElim(1).cmp(&t, &big), Ordering::Greater);
    }
}
