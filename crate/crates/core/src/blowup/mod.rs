//! Blowups at modules. A module `M` of rank `r` is traded for Villamayor's
//! ideal `I_M`; the blowup at `I_M` is described by its Rees algebra, computed
//! by elimination, and inspected chart by chart.

mod chart;
mod driver;
mod rees;
mod smooth;
mod villamayor;

pub use chart::{chart, charts, Chart};
pub use driver::{
    classify_blocks, fblowup, nonfree_of_blocks, villamayor_of_blocks, BlockSummary, ChartReport, FBlowupReport, Status,
};
pub use rees::{rees, ReesPresentation};
pub use smooth::{kunz_check, r1_check, singular_locus, smooth_check, SmoothReport};
pub use villamayor::{minimalize, product_ideal, select_columns, villamayor_ideal, FractionalIdealRep};
