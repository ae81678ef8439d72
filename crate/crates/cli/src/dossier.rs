//! The JSON report written by every subcommand.

use std::collections::BTreeMap;

use fblow_core::blowup::{BlockSummary, Chart, ChartReport, FBlowupReport, ReesPresentation, Status};
use fblow_core::ffpoly::Polynomial;
use fblow_core::modpres::{InvariantSignature, PresentedModule, RMatrix};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::spec::{MatrixSpec, RingSpec};

pub const SCHEMA: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Dossier {
    pub schema: u32,
    pub command: String,
    pub input: RingSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e: Option<u32>,
    pub seed: u64,
    pub status: StatusDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pushforward: Option<ModuleDoc>,
    /// A module read from a file, for `decompose` and `villamayor --module`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module: Option<ModuleDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub villamayor: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nonfree: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kunz: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rees: Option<ReesDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub charts: Vec<ChartDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub comparisons: Vec<ComparisonDoc>,
    /// Catalog checks of the entry, when it has any.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub checks: Option<ChecksDoc>,
    /// Milliseconds per stage; only present when requested.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings: Option<BTreeMap<String, u64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatusDoc {
    pub complete: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl From<&Status> for StatusDoc {
    fn from(s: &Status) -> Self {
        match s {
            Status::Complete => Self::complete(),
            Status::Incomplete(r) => Self::incomplete(r),
        }
    }
}

impl StatusDoc {
    pub fn complete() -> Self {
        Self {
            complete: true,
            reason: None,
        }
    }

    pub fn incomplete(reason: &str) -> Self {
        Self {
            complete: false,
            reason: Some(reason.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    pub shape: [usize; 2],
    pub matrix: MatrixSpec,
    pub blocks: Vec<BlockDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDoc {
    pub shape: [usize; 2],
    pub rank: usize,
    /// Index of the first block isomorphic to this one.
    pub class: usize,
    pub matrix: MatrixSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub signature: Option<SignatureDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureDoc {
    /// SHA-256 of the canonical text of the signature.
    pub hash: String,
    pub rank: usize,
    /// Reduced Gröbner bases of `Fitt_k + I`, `k = 0, 1, ...`.
    pub fitting: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReesDoc {
    pub variables: Vec<String>,
    pub generators: Vec<String>,
    /// Reduced Gröbner basis of the defining ideal `J`.
    pub ideal: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChartDoc {
    pub index: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variables: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relations: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exceptional: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub substitutions: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub smooth: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r1: Option<bool>,
    /// Dimension of the singular locus, `null` when it is empty.
    #[serde(default)]
    pub singular_dim: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonDoc {
    pub blocks: [usize; 2],
    pub same_signature: bool,
    /// `false` when the signatures differ; otherwise the outcome of the graded
    /// isomorphism search, `null` when it was inconclusive.
    pub isomorphic: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChecksDoc {
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
}

impl Dossier {
    pub fn new(command: &str, input: &RingSpec, e: Option<u32>, seed: u64) -> Self {
        Self {
            schema: SCHEMA,
            command: command.to_string(),
            input: input.clone(),
            e,
            seed,
            status: StatusDoc::complete(),
            pushforward: None,
            module: None,
            villamayor: None,
            nonfree: None,
            kunz: None,
            rees: None,
            charts: Vec::new(),
            comparisons: Vec::new(),
            checks: None,
            timings: None,
        }
    }

    pub fn is_complete(&self) -> bool {
        self.status.complete
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("dossier serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn fill_from_report(&mut self, report: &FBlowupReport) {
        self.status = StatusDoc::from(&report.status);
        if let Some(push) = &report.pushforward {
            self.pushforward = Some(module_doc(push, report.rank, &report.blocks));
        }
        self.villamayor = report.villamayor.as_ref().map(|i| strings(i.generators()));
        self.nonfree = report.nonfree.as_ref().map(|i| strings(i.generators()));
        self.kunz = report.kunz;
        self.rees = report.rees.as_ref().map(rees_doc);
        self.charts = report.charts.iter().map(chart_doc).collect();
    }
}

pub fn strings(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

pub fn matrix_spec(m: &RMatrix) -> MatrixSpec {
    m.to_strings()
}

pub fn module_doc(push: &PresentedModule, rank: Option<usize>, blocks: &[BlockSummary]) -> ModuleDoc {
    ModuleDoc {
        rank,
        shape: [push.rows(), push.cols()],
        matrix: matrix_spec(push.matrix()),
        blocks: blocks.iter().map(block_doc).collect(),
    }
}

pub fn block_doc(b: &BlockSummary) -> BlockDoc {
    BlockDoc {
        shape: [b.module.rows(), b.module.cols()],
        rank: b.rank,
        class: b.class,
        matrix: matrix_spec(b.module.matrix()),
        signature: b.signature.as_ref().map(signature_doc),
    }
}

pub fn signature_doc(s: &InvariantSignature) -> SignatureDoc {
    let fitting: Vec<Vec<String>> = s.fitting.iter().map(|gb| strings(gb.basis())).collect();
    let mut h = Sha256::new();
    h.update(format!("rank {}\n", s.rank));
    for (k, gb) in fitting.iter().enumerate() {
        h.update(format!("fitt {k}: {}\n", gb.join("; ")));
    }
    SignatureDoc {
        hash: format!("{:x}", h.finalize()),
        rank: s.rank,
        fitting,
    }
}

pub fn rees_doc(p: &ReesPresentation) -> ReesDoc {
    ReesDoc {
        variables: p.ring().vars().to_vec(),
        generators: strings(p.generators()),
        ideal: strings(p.ideal().basis()),
    }
}

fn chart_fields(doc: &mut ChartDoc, c: &Chart) {
    doc.variables = Some(c.ring.ambient().vars().to_vec());
    doc.relations = Some(strings(c.ring.relations().gens()));
    doc.exceptional = Some(strings(&c.exceptional));
    doc.substitutions = c
        .substitutions
        .iter()
        .map(|(v, p)| [v.clone(), p.to_string()])
        .collect();
}

pub fn chart_doc(r: &ChartReport) -> ChartDoc {
    let mut doc = ChartDoc {
        index: r.index,
        variables: None,
        relations: None,
        exceptional: None,
        substitutions: Vec::new(),
        dim: None,
        smooth: None,
        r1: None,
        singular_dim: None,
    };
    if let Some(c) = &r.chart {
        chart_fields(&mut doc, c);
    }
    if let Some(s) = &r.smooth {
        doc.dim = Some(s.dim);
        doc.smooth = Some(s.smooth);
        doc.r1 = Some(s.r1());
        doc.singular_dim = s.singular_dim;
    }
    doc
}
