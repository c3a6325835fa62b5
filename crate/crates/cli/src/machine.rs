//! Machine-readable output: one JSON document per invocation, every integer
//! written as a decimal string.

use fdk0::cstar::TorsionCriterion;
use fdk0::intlin::{ScaledInverse, SmithDecomposition};
use fdk0::{AnalysisReport, BigInt, FdHom, IntMatrix};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub type Matrix = Vec<Vec<String>>;

pub fn int(v: &BigInt) -> String {
    v.to_string()
}

pub fn ints(v: &[BigInt]) -> Vec<String> {
    v.iter().map(int).collect()
}

pub fn matrix(m: &IntMatrix) -> Matrix {
    m.to_rows().iter().map(|r| ints(r)).collect()
}

fn bad(what: &str, detail: impl std::fmt::Display) -> CliError {
    CliError::Syntax {
        origin: "machine document".into(),
        message: format!("{what}: {detail}"),
    }
}

pub fn parse_int(s: &str) -> Result<BigInt, CliError> {
    s.parse().map_err(|_| bad("integer", s))
}

pub fn parse_ints(v: &[String]) -> Result<Vec<BigInt>, CliError> {
    v.iter().map(|s| parse_int(s)).collect()
}

pub fn parse_matrix(m: &Matrix) -> Result<IntMatrix, CliError> {
    let rows = m
        .iter()
        .map(|r| parse_ints(r))
        .collect::<Result<Vec<_>, _>>()?;
    IntMatrix::from_rows(rows).map_err(|e| bad("matrix", e))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MachineHom {
    pub name: String,
    pub source: Vec<String>,
    pub target: Vec<String>,
    pub matrix: Matrix,
    pub slack: Vec<String>,
}

impl MachineHom {
    pub fn new(name: &str, h: &FdHom) -> Self {
        let blocks = |b: &[u64]| b.iter().map(u64::to_string).collect();
        Self {
            name: name.to_string(),
            source: blocks(h.source().blocks()),
            target: blocks(h.target().blocks()),
            matrix: matrix(h.matrix()),
            slack: ints(h.slack()),
        }
    }

    pub fn to_hom(&self) -> Result<FdHom, CliError> {
        let blocks = |b: &[String]| {
            b.iter()
                .map(|s| s.parse::<u64>().map_err(|_| bad("block size", s)))
                .collect::<Result<Vec<_>, _>>()
                .and_then(|v| fdk0::FdAlgebra::new(v).map_err(|e| bad("algebra", e)))
        };
        let h = fdk0::make_hom(
            blocks(&self.source)?,
            blocks(&self.target)?,
            parse_matrix(&self.matrix)?,
        )?;
        if ints(h.slack()) != self.slack {
            return Err(bad("slack", "does not match the matrix"));
        }
        Ok(h)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Criterion {
    MinorGcd,
    SmithNormalForm,
}

impl From<TorsionCriterion> for Criterion {
    fn from(c: TorsionCriterion) -> Self {
        match c {
            TorsionCriterion::MinorGcd => Criterion::MinorGcd,
            TorsionCriterion::SmithNormalForm => Criterion::SmithNormalForm,
        }
    }
}

impl From<Criterion> for TorsionCriterion {
    fn from(c: Criterion) -> Self {
        match c {
            Criterion::MinorGcd => TorsionCriterion::MinorGcd,
            Criterion::SmithNormalForm => TorsionCriterion::SmithNormalForm,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MachineReport {
    pub phi_injective: bool,
    pub phi_surjective: bool,
    pub phi_unital: bool,
    pub k0_injective: bool,
    pub k0_surjective: bool,
    pub k0_unital: bool,
    pub rows_unit_pattern: bool,
    pub cokernel_torsion_free: Option<bool>,
    pub torsion_criterion: Option<Criterion>,
    pub minor_gcd: Option<String>,
    pub left_inverse_certificate: Option<Matrix>,
    pub invariant_factors: Vec<String>,
    pub entry_gcd: String,
    pub column_gcds: Vec<String>,
    pub notes: Vec<String>,
}

impl From<&AnalysisReport> for MachineReport {
    fn from(r: &AnalysisReport) -> Self {
        Self {
            phi_injective: r.phi_injective,
            phi_surjective: r.phi_surjective,
            phi_unital: r.phi_unital,
            k0_injective: r.k0_injective,
            k0_surjective: r.k0_surjective,
            k0_unital: r.k0_unital,
            rows_unit_pattern: r.rows_unit_pattern,
            cokernel_torsion_free: r.cokernel_torsion_free,
            torsion_criterion: r.torsion_criterion.map(Into::into),
            minor_gcd: r.minor_gcd.as_ref().map(int),
            left_inverse_certificate: r.left_inverse_certificate.as_ref().map(matrix),
            invariant_factors: ints(&r.invariant_factors),
            entry_gcd: int(&r.entry_gcd),
            column_gcds: ints(&r.column_gcds),
            notes: r.notes.clone(),
        }
    }
}

impl MachineReport {
    pub fn to_report(&self) -> Result<AnalysisReport, CliError> {
        Ok(AnalysisReport {
            phi_injective: self.phi_injective,
            phi_surjective: self.phi_surjective,
            phi_unital: self.phi_unital,
            k0_injective: self.k0_injective,
            k0_surjective: self.k0_surjective,
            k0_unital: self.k0_unital,
            rows_unit_pattern: self.rows_unit_pattern,
            cokernel_torsion_free: self.cokernel_torsion_free,
            torsion_criterion: self.torsion_criterion.map(Into::into),
            minor_gcd: self.minor_gcd.as_deref().map(parse_int).transpose()?,
            left_inverse_certificate: self
                .left_inverse_certificate
                .as_ref()
                .map(parse_matrix)
                .transpose()?,
            invariant_factors: parse_ints(&self.invariant_factors)?,
            entry_gcd: parse_int(&self.entry_gcd)?,
            column_gcds: parse_ints(&self.column_gcds)?,
            notes: self.notes.clone(),
        })
    }
}

/// Output of `analyze` and `compose`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisDocument {
    pub command: String,
    /// Hom names in application order; a single name for `analyze`.
    pub chain: Vec<String>,
    pub hom: MachineHom,
    pub report: MachineReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
}

/// Output of `invert`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InverseDocument {
    pub command: String,
    pub side: Side,
    pub input: Matrix,
    pub d: String,
    pub unit: bool,
    pub degenerate: bool,
    /// `K` with `K E = d I` (left) or `R` with `E R = d I` (right).
    pub inverse: Matrix,
}

impl InverseDocument {
    pub fn new(side: Side, input: &IntMatrix, s: &ScaledInverse) -> Self {
        Self {
            command: "invert".into(),
            side,
            input: matrix(input),
            d: int(&s.d),
            unit: s.is_unit(),
            degenerate: s.degenerate,
            inverse: matrix(&s.matrix),
        }
    }
}

/// Output of `snf`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmithDocument {
    pub command: String,
    pub input: Matrix,
    pub u: Matrix,
    pub d: Matrix,
    pub v: Matrix,
    pub invariant_factors: Vec<String>,
}

impl SmithDocument {
    pub fn new(input: &IntMatrix, s: &SmithDecomposition) -> Self {
        Self {
            command: "snf".into(),
            input: matrix(input),
            u: matrix(&s.u),
            d: matrix(&s.d),
            v: matrix(&s.v),
            invariant_factors: ints(&s.invariant_factors),
        }
    }
}
