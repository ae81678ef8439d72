//! Exact arithmetic in F_p[x_1..x_n]: field elements, monomials, term orders,
//! sparse polynomials and their text syntax.

mod field;
mod monomial;
mod order;
mod parse;
mod poly;
mod ring;

pub(crate) use field::{add_mod, inv_mod, mul_mod, neg_mod, sub_mod};
pub use field::{is_prime, PrimeFieldElement, MAX_MODULUS};
pub use monomial::Monomial;
pub use order::TermOrder;
pub use parse::parse;
pub use poly::{Polynomial, Term};
pub(crate) use ring::check_same;
pub use ring::{PolyRing, Ring};

/// Componentwise `(m div q, m mod q)`.
pub fn qsplit(m: &Monomial, q: u32) -> (Monomial, Monomial) {
    m.qsplit(q)
}

#[cfg(test)]
mod tests;
