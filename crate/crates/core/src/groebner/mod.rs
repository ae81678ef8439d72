//! Gröbner bases over F_p[x_1..x_n] and the ideal operations built on them.

mod buchberger;
mod ideal;

pub(crate) use buchberger::{groebner_basis, GbOptions, Reducer};
pub use ideal::{
    buchberger, dimension, eliminate, irredundant, jacobian, membership, minors, normal_form, radical_membership,
    IdealGens, ReducedGB,
};
