use std::sync::Arc;

use super::field::check_modulus;
use super::order::TermOrder;
use crate::error::{Error, Result};

/// Signature of F_p[x_1..x_n]: modulus, variable names and term order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyRing {
    modulus: u32,
    vars: Vec<String>,
    order: TermOrder,
}

pub type Ring = Arc<PolyRing>;

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolyRing {
    pub fn new<S: AsRef<str>>(modulus: u32, vars: &[S], order: TermOrder) -> Result<Ring> {
        check_modulus(modulus)?;
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in vars.iter().enumerate() {
            if !is_identifier(v) {
                return Err(Error::InvalidRing(format!("`{v}` is not an identifier")));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        Ok(Arc::new(Self { modulus, vars, order }))
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn with_order(&self, order: TermOrder) -> Ring {
        Arc::new(Self {
            modulus: self.modulus,
            vars: self.vars.clone(),
            order,
        })
    }

    pub fn with_vars(&self, vars: Vec<String>, order: TermOrder) -> Result<Ring> {
        PolyRing::new(self.modulus, &vars, order)
    }

    /// A variable name not already used, built from `stem`.
    pub fn fresh_name(&self, stem: &str) -> String {
        if self.var_index(stem).is_none() {
            return stem.to_string();
        }
        (0..)
            .map(|i| format!("{stem}{i}"))
            .find(|n| self.var_index(n).is_none())
            .unwrap()
    }
}

pub(crate) fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

pub(crate) fn check_same(a: &Ring, b: &Ring) -> Result<()> {
    if same_ring(a, b) {
        Ok(())
    } else {
        Err(Error::RingMismatch(format!(
            "F_{}{:?} ({}) vs F_{}{:?} ({})",
            a.modulus,
            a.vars,
            a.order.name(),
            b.modulus,
            b.vars,
            b.order.name()
        )))
    }
}
