//! Submodules of `R^t` through Gröbner bases over the ambient ring: the free
//! module basis vectors become extra variables under a term-over-position order.

use super::quotient::QRing;
use crate::config::Budget;
use crate::error::{Error, Result};
use crate::ffpoly::{check_same, Monomial, PolyRing, Polynomial, Ring, TermOrder};
use crate::groebner::{groebner_basis, GbOptions, Reducer};

/// Gröbner basis of the submodule generated by given columns and `I * R^t`.
pub struct SubmoduleGB {
    ring: QRing,
    rank: usize,
    encoded: Ring,
    reducer: Reducer,
}

impl SubmoduleGB {
    pub fn new(ring: &QRing, rank: usize, columns: &[Vec<Polynomial>], budget: &Budget) -> Result<Self> {
        let ambient = ring.ambient();
        let mut names: Vec<String> = ambient.vars().to_vec();
        for i in 0..rank {
            let stem = format!("gen_e{i}");
            names.push(stem);
        }
        let encoded = PolyRing::new(ambient.modulus(), &names, TermOrder::Product(ambient.nvars()))?;
        let mut gens = Vec::new();
        for c in columns {
            if c.len() != rank {
                return Err(Error::InvalidArgument("column length differs from module rank".into()));
            }
            gens.push(encode(&encoded, ambient, c)?);
        }
        for g in ring.gb().basis() {
            for i in 0..rank {
                let mut c = vec![Polynomial::zero(ambient); rank];
                c[i] = g.clone();
                gens.push(encode(&encoded, ambient, &c)?);
            }
        }
        let opts = GbOptions {
            position_start: Some(ambient.nvars()),
        };
        let basis = groebner_basis(&encoded, &gens, budget, opts)?;
        Ok(Self {
            ring: ring.clone(),
            rank,
            encoded,
            reducer: Reducer::from_basis(&basis),
        })
    }

    pub fn normal_form(&self, v: &[Polynomial], budget: &Budget) -> Result<Vec<Polynomial>> {
        if v.len() != self.rank {
            return Err(Error::InvalidArgument("vector length differs from module rank".into()));
        }
        let ambient = self.ring.ambient();
        let enc = encode(&self.encoded, ambient, v)?;
        let red = self.reducer.reduce(&enc, budget)?;
        Ok(decode(&red, ambient, self.rank))
    }

    pub fn contains(&self, v: &[Polynomial], budget: &Budget) -> Result<bool> {
        Ok(self.normal_form(v, budget)?.iter().all(Polynomial::is_zero))
    }
}

fn encode(encoded: &Ring, ambient: &Ring, v: &[Polynomial]) -> Result<Polynomial> {
    let n = ambient.nvars();
    let mut terms = Vec::new();
    for (i, entry) in v.iter().enumerate() {
        check_same(ambient, entry.ring())?;
        for (m, c) in entry.terms() {
            let mut exps = m.exponents().to_vec();
            exps.resize(encoded.nvars(), 0);
            exps[n + i] = 1;
            terms.push((Monomial::new(exps), *c));
        }
    }
    Ok(Polynomial::from_terms(encoded, terms))
}

fn decode(p: &Polynomial, ambient: &Ring, rank: usize) -> Vec<Polynomial> {
    let n = ambient.nvars();
    let mut parts: Vec<Vec<(Monomial, u32)>> = vec![Vec::new(); rank];
    for (m, c) in p.terms() {
        let e = m.exponents();
        let pos = (0..rank)
            .find(|&i| e[n + i] > 0)
            .expect("encoded vectors are linear in positions");
        parts[pos].push((Monomial::new(e[..n].to_vec()), *c));
    }
    parts
        .into_iter()
        .map(|ts| Polynomial::from_terms(ambient, ts))
        .collect()
}

/// Normal form of `v` modulo the submodule of `R^t` generated by `basis` (columns)
/// and `I * R^t`. Zero exactly when `v` lies in the submodule.
pub fn module_normal_form(
    ring: &QRing,
    v: &[Polynomial],
    basis: &[Vec<Polynomial>],
    budget: &Budget,
) -> Result<Vec<Polynomial>> {
    SubmoduleGB::new(ring, v.len(), basis, budget)?.normal_form(v, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modpres::QuotientRing;

    fn col(r: &QRing, s: &[&str]) -> Vec<Polynomial> {
        s.iter().map(|t| r.parse_elem(t).unwrap()).collect()
    }

    #[test]
    fn member_reduces_to_zero() {
        let r = QuotientRing::parse(2, &["x", "y"], &[]).unwrap();
        let b = col(&r, &["x", "y"]);
        let nf = module_normal_form(&r, &b, &[b.clone(), col(&r, &["1", "x"])], &Budget::default()).unwrap();
        assert!(nf.iter().all(Polynomial::is_zero));
    }

    #[test]
    fn rank_one_is_ideal_normal_form() {
        let r = QuotientRing::parse(3, &["x", "y"], &["x^2 - y"]).unwrap();
        let f = r.ambient().clone();
        let v = vec![crate::ffpoly::parse("x^3 + y", &f).unwrap()];
        let nf = module_normal_form(&r, &v, &[], &Budget::default()).unwrap();
        assert_eq!(nf[0], r.reduce(&v[0]));
    }

    #[test]
    fn koszul_syzygy() {
        // (y, -x) is in the span of the Koszul syzygy of (x, y); (1, 0) is not
        let r = QuotientRing::parse(3, &["x", "y"], &[]).unwrap();
        let syz = col(&r, &["-y", "x"]);
        let nf = module_normal_form(
            &r,
            &col(&r, &["y", "-x"]),
            std::slice::from_ref(&syz),
            &Budget::default(),
        )
        .unwrap();
        assert!(nf.iter().all(Polynomial::is_zero));
        let nf = module_normal_form(&r, &col(&r, &["y^2", "-x*y + x"]), &[syz], &Budget::default()).unwrap();
        assert!(!nf.iter().all(Polynomial::is_zero));
    }

    #[test]
    fn relations_of_the_quotient_count() {
        // over R = F_2[x,y]/(x*y), (x, 0) * y = 0 lies in the zero submodule
        let r = QuotientRing::parse(2, &["x", "y"], &["x*y"]).unwrap();
        let amb = r.ambient().clone();
        let v = vec![crate::ffpoly::parse("x*y", &amb).unwrap(), Polynomial::zero(&amb)];
        let gb = SubmoduleGB::new(&r, 2, &[], &Budget::default()).unwrap();
        assert!(gb.contains(&v, &Budget::default()).unwrap());
        // two-generator span test: e1*x + e2*y against column (x, y)
        let gb = SubmoduleGB::new(&r, 2, &[col(&r, &["x", "y"])], &Budget::default()).unwrap();
        assert!(gb.contains(&col(&r, &["x^2", "0"]), &Budget::default()).unwrap());
        assert!(!gb.contains(&col(&r, &["x", "0"]), &Budget::default()).unwrap());
    }
}
