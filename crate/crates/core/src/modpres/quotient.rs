use std::fmt;
use std::sync::Arc;

use crate::config::Budget;
use crate::error::{Error, Result};
use crate::ffpoly::{check_same, parse, PolyRing, Polynomial, Ring, TermOrder};
use crate::groebner::{buchberger, IdealGens, ReducedGB, Reducer};

/// `R = S / I` with the reduced Gröbner basis of `I` computed once at construction.
pub struct QuotientRing {
    ambient: Ring,
    relations: IdealGens,
    gb: ReducedGB,
    reducer: Reducer,
}

pub type QRing = Arc<QuotientRing>;

impl fmt::Debug for QuotientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("QuotientRing")
            .field("ambient", &self.ambient)
            .field(
                "relations",
                &self.relations.gens().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            )
            .finish()
    }
}

impl PartialEq for QuotientRing {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.gb == other.gb
    }
}

impl Eq for QuotientRing {}

impl QuotientRing {
    pub fn new(relations: IdealGens, budget: &Budget) -> Result<QRing> {
        let gb = buchberger(&relations, budget)?;
        if gb.is_unit() {
            return Err(Error::InvalidRing("relations generate the unit ideal".into()));
        }
        let reducer = gb.reducer();
        Ok(Arc::new(Self {
            ambient: relations.ring().clone(),
            relations,
            gb,
            reducer,
        }))
    }

    /// The polynomial ring itself, `S / (0)`.
    pub fn polynomial(ambient: &Ring) -> QRing {
        Self::new(IdealGens::zero(ambient), &Budget::default()).expect("zero ideal is proper")
    }

    /// Convenience constructor from text, grevlex order.
    pub fn parse(p: u32, vars: &[&str], relations: &[&str]) -> Result<QRing> {
        let ring = PolyRing::new(p, vars, TermOrder::GrevLex)?;
        let rels = relations.iter().map(|t| parse(t, &ring)).collect::<Result<Vec<_>>>()?;
        Self::new(IdealGens::new(&ring, rels)?, &Budget::default())
    }

    pub fn ambient(&self) -> &Ring {
        &self.ambient
    }

    pub fn relations(&self) -> &IdealGens {
        &self.relations
    }

    pub fn gb(&self) -> &ReducedGB {
        &self.gb
    }

    pub fn modulus(&self) -> u32 {
        self.ambient.modulus()
    }

    pub fn nvars(&self) -> usize {
        self.ambient.nvars()
    }

    /// Normal form modulo the relations.
    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        debug_assert!(check_same(&self.ambient, f.ring()).is_ok());
        if self.gb.is_zero_ideal() {
            return f.clone();
        }
        self.reducer
            .reduce(f, &Budget::default())
            .expect("normal form without deadline")
    }

    pub fn is_zero(&self, f: &Polynomial) -> bool {
        self.reduce(f).is_zero()
    }

    pub fn mul(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        self.reduce(&(a * b))
    }

    pub fn parse_elem(&self, text: &str) -> Result<Polynomial> {
        Ok(self.reduce(&parse(text, &self.ambient)?))
    }
}
