use rayon::prelude::*;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::frobenius::pushforward;
use crate::modpres::{
    block_decompose, fitting_ideal, graded_isomorphic, module_rank, signature, InvariantSignature, PresentedModule,
    QRing,
};

use super::chart::{chart, Chart};
use super::rees::{rees, ReesPresentation};
use super::smooth::{kunz_check, smooth_check, SmoothReport};
use super::villamayor::{minimalize, product_ideal, villamayor_ideal, FractionalIdealRep};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Complete,
    /// A budget ran out; the message names the limit.
    Incomplete(String),
}

#[derive(Clone, Debug)]
pub struct BlockSummary {
    pub module: PresentedModule,
    pub rank: usize,
    /// `None` when the signature did not fit in the budget.
    pub signature: Option<InvariantSignature>,
    /// Index of the first block known to be isomorphic to this one.
    pub class: usize,
}

#[derive(Clone, Debug)]
pub struct ChartReport {
    pub index: usize,
    pub chart: Option<Chart>,
    pub smooth: Option<SmoothReport>,
}

/// Everything computed on the way from `R` to the charts of its F-blowup.
/// Later fields stay empty when a budget ran out earlier.
#[derive(Clone, Debug)]
pub struct FBlowupReport {
    pub e: u32,
    pub pushforward: Option<PresentedModule>,
    pub rank: Option<usize>,
    pub blocks: Vec<BlockSummary>,
    pub villamayor: Option<FractionalIdealRep>,
    /// `Fitt_r` of the pushforward, cutting out the locus where it is not free.
    pub nonfree: Option<FractionalIdealRep>,
    /// Whether the non-free locus equals the singular locus of `R`.
    pub kunz: Option<bool>,
    pub rees: Option<ReesPresentation>,
    pub charts: Vec<ChartReport>,
    pub status: Status,
}

impl FBlowupReport {
    fn new(e: u32) -> Self {
        Self {
            e,
            pushforward: None,
            rank: None,
            blocks: Vec::new(),
            villamayor: None,
            nonfree: None,
            kunz: None,
            rees: None,
            charts: Vec::new(),
            status: Status::Complete,
        }
    }

    pub fn is_complete(&self) -> bool {
        self.status == Status::Complete
    }
}

/// Budget errors end the run with a partial report; other errors propagate.
macro_rules! step {
    ($report:ident, $e:expr) => {
        match $e {
            Ok(v) => v,
            Err(err) if err.is_budget() => {
                $report.status = Status::Incomplete(err.to_string());
                return Ok($report);
            }
            Err(err) => return Err(err),
        }
    };
}

fn soft<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(e) if e.is_budget() => Ok(None),
        Err(e) => Err(e),
    }
}

/// Ranks, signatures and isomorphism classes of the blocks of a decomposition.
/// Blocks with equal signatures share a class only when a graded isomorphism
/// is found.
pub fn classify_blocks(blocks: Vec<PresentedModule>, cfg: &Config) -> Result<Vec<BlockSummary>> {
    let mut out: Vec<BlockSummary> = Vec::with_capacity(blocks.len());
    for module in blocks {
        let rank = module_rank(&module, cfg)?;
        let signature = soft(signature(&module, cfg))?;
        let mut class = out.len();
        for (k, prev) in out.iter().enumerate() {
            if prev.class != k || prev.rank != rank || signature.is_none() || prev.signature != signature {
                continue;
            }
            let same = prev.module == module || graded_isomorphic(&prev.module, &module, cfg)? == Some(true);
            if same {
                class = k;
                break;
            }
        }
        out.push(BlockSummary {
            module,
            rank,
            signature,
            class,
        });
    }
    Ok(out)
}

/// `I_M` for `M` the direct sum of the blocks: the product of the Villamayor
/// ideals of one block per isomorphism class. Repeated factors are dropped,
/// which does not change the blowup.
pub fn villamayor_of_blocks(ring: &QRing, blocks: &[BlockSummary], cfg: &Config) -> Result<FractionalIdealRep> {
    let mut parts = Vec::new();
    for (k, b) in blocks.iter().enumerate() {
        if b.class != k || b.module.matrix().is_zero() {
            continue;
        }
        let ideal = villamayor_ideal(&b.module, cfg)?;
        let gens = minimalize(ring, ideal.generators().to_vec(), &cfg.budget)?;
        parts.push(FractionalIdealRep::new(ring, gens)?);
    }
    if parts.is_empty() {
        return FractionalIdealRep::new(ring, vec![crate::ffpoly::Polynomial::one(ring.ambient())]);
    }
    product_ideal(&parts, &cfg.budget)
}

/// `Fitt_r(M) = Π Fitt_{r_i}(M_i)` for torsion-free blocks `M_i` of rank `r_i`,
/// one factor per isomorphism class (radicals ignore repetition).
pub fn nonfree_of_blocks(ring: &QRing, blocks: &[BlockSummary], cfg: &Config) -> Result<FractionalIdealRep> {
    let mut parts = Vec::new();
    for (k, b) in blocks.iter().enumerate() {
        if b.class != k || b.module.matrix().is_zero() {
            continue;
        }
        let fitt = fitting_ideal(b.rank, &b.module)?;
        let gens = minimalize(ring, fitt.into_gens(), &cfg.budget)?;
        parts.push(FractionalIdealRep::new(ring, gens)?);
    }
    if parts.is_empty() {
        return FractionalIdealRep::new(ring, vec![crate::ffpoly::Polynomial::one(ring.ambient())]);
    }
    product_ideal(&parts, &cfg.budget)
}

fn analyse(p: &ReesPresentation, i: usize, cfg: &Config) -> Result<ChartReport> {
    let mut report = ChartReport {
        index: i,
        chart: None,
        smooth: None,
    };
    let Some(c) = soft(chart(p, i, cfg))? else {
        return Ok(report);
    };
    report.smooth = soft(smooth_check(&c, cfg))?;
    report.chart = Some(c);
    Ok(report)
}

/// The F-blowup `FB_e(Spec R)`: the blowup of `R` at `F^e_* R`.
pub fn fblowup(ring: &QRing, e: u32, cfg: &Config) -> Result<FBlowupReport> {
    let mut report = FBlowupReport::new(e);
    let push = step!(report, pushforward(&PresentedModule::free(ring, 1), e, cfg));
    report.pushforward = Some(push.clone());
    report.rank = Some(step!(report, module_rank(&push, cfg)));
    let blocks = step!(report, block_decompose(&push, cfg));
    report.blocks = step!(report, classify_blocks(blocks, cfg));
    let ideal = step!(report, villamayor_of_blocks(ring, &report.blocks, cfg));
    report.villamayor = Some(ideal.clone());
    let nonfree = step!(report, nonfree_of_blocks(ring, &report.blocks, cfg));
    report.kunz = Some(step!(report, kunz_check(ring, &nonfree, cfg)));
    report.nonfree = Some(nonfree);
    let rp = step!(report, rees(&ideal, cfg));
    let n = rp.generators().len();
    let charts: Vec<Result<ChartReport>> = (0..n).into_par_iter().map(|i| analyse(&rp, i, cfg)).collect();
    report.rees = Some(rp);
    for c in charts {
        let c = c?;
        if c.smooth.is_none() && report.is_complete() {
            report.status = Status::Incomplete(Error::BudgetExceeded(format!("chart {}", c.index)).to_string());
        }
        report.charts.push(c);
    }
    Ok(report)
}
