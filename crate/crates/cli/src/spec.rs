//! Input documents: rings and matrices as JSON with polynomial strings.

use std::path::Path;

use fblow_core::ffpoly::{parse, PolyRing, Polynomial, TermOrder};
use fblow_core::groebner::IdealGens;
use fblow_core::modpres::{QRing, QuotientRing, RMatrix};
use fblow_core::{Budget, Error};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// `F_p[vars] / (relations)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingSpec {
    #[serde(rename = "char")]
    pub characteristic: u32,
    pub vars: Vec<String>,
    #[serde(default)]
    pub relations: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl RingSpec {
    pub fn new(p: u32, vars: &[&str], relations: &[&str]) -> Self {
        Self {
            characteristic: p,
            vars: vars.iter().map(|s| s.to_string()).collect(),
            relations: relations.iter().map(|s| s.to_string()).collect(),
            name: None,
        }
    }

    pub fn named(mut self, name: &str) -> Self {
        self.name = Some(name.to_string());
        self
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = read(path)?;
        serde_json::from_str(&text).map_err(|e| CliError::Json(format!("{}: {e}", path.display())))
    }

    pub fn build(&self, budget: &Budget) -> Result<QRing, CliError> {
        let ring = PolyRing::new(self.characteristic, &self.vars, TermOrder::GrevLex)?;
        let rels = self
            .relations
            .iter()
            .map(|t| parse(t, &ring))
            .collect::<fblow_core::Result<Vec<_>>>()?;
        Ok(QuotientRing::new(IdealGens::new(&ring, rels)?, budget)?)
    }
}

/// A row-major matrix of polynomial strings.
pub type MatrixSpec = Vec<Vec<String>>;

pub fn load_matrix(path: &Path) -> Result<MatrixSpec, CliError> {
    let text = read(path)?;
    serde_json::from_str(&text).map_err(|e| CliError::Json(format!("{}: {e}", path.display())))
}

pub fn build_matrix(ring: &QRing, rows: &[Vec<String>]) -> Result<RMatrix, CliError> {
    let width = rows.first().map_or(0, |r| r.len());
    if rows.iter().any(|r| r.len() != width) {
        return Err(Error::InvalidArgument("matrix rows have different lengths".into()).into());
    }
    let parsed = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|t| ring.parse_elem(t))
                .collect::<fblow_core::Result<Vec<_>>>()
        })
        .collect::<fblow_core::Result<Vec<_>>>()?;
    Ok(RMatrix::from_rows(ring, parsed)?)
}

/// Comma-separated polynomials, as given to `--ideal`.
pub fn parse_list(ring: &QRing, text: &str) -> Result<Vec<Polynomial>, CliError> {
    let gens = text
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| ring.parse_elem(t))
        .collect::<fblow_core::Result<Vec<_>>>()?;
    if gens.is_empty() {
        return Err(Error::InvalidArgument("empty generator list".into()).into());
    }
    Ok(gens)
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}
