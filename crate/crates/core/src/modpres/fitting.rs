use super::module::{components, PresentedModule};
use super::quotient::QRing;
use super::rmatrix::RMatrix;
use crate::config::Budget;
use crate::error::Result;
use crate::ffpoly::Polynomial;
use crate::groebner::{buchberger, IdealGens, ReducedGB};

/// `Fitt_k(M)`: the ideal of `(t-k)`-minors of a `t`-row presentation, reduced mod `I`.
/// `t-k <= 0` gives the unit ideal; `t-k` beyond the matrix size gives zero.
pub fn fitting_ideal(k: usize, module: &PresentedModule) -> Result<IdealGens> {
    let m = module.matrix();
    let ring = module.ring();
    let amb = ring.ambient();
    let t = m.rows();
    if k >= t {
        return IdealGens::new(amb, vec![Polynomial::one(amb)]);
    }
    let size = t - k;
    if size > m.cols() {
        return Ok(IdealGens::zero(amb));
    }
    let r = ring.clone();
    let minors = m.inner().minors(size, &move |p| r.reduce(&p))?;
    IdealGens::new(amb, dedup(minors))
}

fn dedup(mut v: Vec<Polynomial>) -> Vec<Polynomial> {
    v.retain(|p| !p.is_zero());
    let mut out: Vec<Polynomial> = Vec::with_capacity(v.len());
    for p in v.into_iter().map(|p| p.monic()) {
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

/// Reduced GB of `J + I` in the ambient ring.
pub(crate) fn with_relations(ring: &QRing, j: &IdealGens, budget: &Budget) -> Result<ReducedGB> {
    let full = j.sum(ring.relations())?;
    buchberger(&full, budget)
}

/// `Fitt_0 .. Fitt_t` as reduced GBs with `I` adjoined. Fitting ideals of a
/// block-diagonal matrix combine as `Fitt_k = Σ_{a+b=k} Fitt_a(A) Fitt_b(B)`,
/// so each connected component is handled on its own.
pub(crate) fn fitting_chain(m: &RMatrix, budget: &Budget) -> Result<Vec<ReducedGB>> {
    let ring = m.ring();
    let mut chain: Option<Vec<ReducedGB>> = None;
    for (rows, cols) in components(m) {
        let block = PresentedModule::new(m.submatrix(&rows, &cols));
        let t = block.rows();
        let mut local = Vec::with_capacity(t + 1);
        for k in 0..=t {
            budget.check_time()?;
            local.push(with_relations(ring, &fitting_ideal(k, &block)?, budget)?);
        }
        chain = Some(match chain {
            None => local,
            Some(acc) => combine(ring, &acc, &local, budget)?,
        });
    }
    match chain {
        Some(c) => Ok(c),
        // the zero module: Fitt_0 = (1)
        None => Ok(vec![with_relations(
            ring,
            &IdealGens::new(ring.ambient(), vec![Polynomial::one(ring.ambient())])?,
            budget,
        )?]),
    }
}

fn combine(ring: &QRing, a: &[ReducedGB], b: &[ReducedGB], budget: &Budget) -> Result<Vec<ReducedGB>> {
    let ta = a.len() - 1;
    let tb = b.len() - 1;
    let amb = ring.ambient();
    let mut out = Vec::with_capacity(ta + tb + 1);
    for k in 0..=ta + tb {
        let mut gens: Vec<Polynomial> = Vec::new();
        for i in 0..=ta.min(k) {
            let j = k - i;
            if j > tb {
                continue;
            }
            for f in a[i].basis() {
                for g in b[j].basis() {
                    gens.push(ring.reduce(&(f * g)));
                }
            }
        }
        budget.check_time()?;
        out.push(with_relations(ring, &IdealGens::new(amb, dedup(gens))?, budget)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modpres::QuotientRing;

    fn strs(i: &IdealGens) -> Vec<String> {
        i.gens().iter().map(|g| g.to_string()).collect()
    }

    #[test]
    fn conventions() {
        let r = QuotientRing::parse(2, &["x", "y"], &[]).unwrap();
        let m = PresentedModule::new(RMatrix::parse(&r, &[&["x", "0"], &["0", "y"]]).unwrap());
        assert_eq!(strs(&fitting_ideal(2, &m).unwrap()), vec!["1"]);
        assert_eq!(strs(&fitting_ideal(0, &m).unwrap()), vec!["x*y"]);
        let mut f1 = strs(&fitting_ideal(1, &m).unwrap());
        f1.sort();
        assert_eq!(f1, vec!["x", "y"]);
        // more generators than relations can kill: Fitt_0 of a 3x2 is zero
        let tall = PresentedModule::new(RMatrix::zero(&r, 3, 2));
        assert!(fitting_ideal(0, &tall).unwrap().is_zero());
    }

    #[test]
    fn d41_block_fitting_one() {
        let r = QuotientRing::parse(2, &["x", "y", "z"], &["z^2+x^2*y+x*y^2+x*y*z"]).unwrap();
        let m = PresentedModule::new(RMatrix::parse(&r, &[&["z", "x+y+z"], &["x*y", "z"]]).unwrap());
        let f1 = fitting_ideal(1, &m).unwrap();
        let mut got = strs(&f1);
        got.sort();
        let mut want = vec!["z".to_string(), "x + y + z".to_string(), "x*y".to_string()];
        want.sort();
        assert_eq!(got, want);
        assert!(fitting_ideal(0, &m).unwrap().is_zero());
    }

    #[test]
    fn chain_of_block_diagonal_matches_direct_minors() {
        let r = QuotientRing::parse(3, &["x", "y"], &["x^3 - y^2"]).unwrap();
        let a = RMatrix::parse(&r, &[&["x", "y"], &["y", "x^2"]]).unwrap();
        let b = RMatrix::parse(&r, &[&["x+y", "0", "x"], &["1", "y", "0"]]).unwrap();
        let sum = a.direct_sum(&b).unwrap();
        let budget = Budget::default();
        let chain = fitting_chain(&sum, &budget).unwrap();
        let m = PresentedModule::new(sum);
        for (k, gb) in chain.iter().enumerate() {
            let direct = with_relations(&r, &fitting_ideal(k, &m).unwrap(), &budget).unwrap();
            assert_eq!(gb, &direct, "Fitt_{k}");
        }
    }
}
