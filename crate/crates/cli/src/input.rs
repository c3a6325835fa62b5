//! Reading workspaces and matrices.
//!
//! A workspace is a TOML document:
//!
//! ```toml
//! [algebras]
//! A = [2, 3, 4]
//! B = [5, 4]
//!
//! [homs.phi]
//! source = "A"
//! target = "B"
//! matrix = [[1, 1, 0], [0, 0, 1]]   # one row per target block
//! ```
//!
//! Matrix entries may also be written as decimal strings.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use fdk0::{make_hom, BigInt, FdAlgebra, FdHom, IntMatrix};
use serde::Deserialize;

use crate::error::CliError;

/// An integer written either as a TOML/JSON number or as a decimal string.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum IntLiteral {
    Int(i64),
    Str(String),
}

impl IntLiteral {
    pub fn to_bigint(&self) -> Result<BigInt, String> {
        match self {
            IntLiteral::Int(v) => Ok(BigInt::from(*v)),
            IntLiteral::Str(s) => s
                .trim()
                .parse()
                .map_err(|_| format!("{s:?} is not an integer")),
        }
    }
}

pub fn literal_matrix(rows: &[Vec<IntLiteral>], origin: &str) -> Result<IntMatrix, CliError> {
    let syntax = |message: String| CliError::Syntax {
        origin: origin.to_string(),
        message,
    };
    let rows = rows
        .iter()
        .map(|row| {
            row.iter()
                .map(IntLiteral::to_bigint)
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()
        .map_err(syntax)?;
    IntMatrix::from_rows(rows).map_err(|e| syntax(e.to_string()))
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawWorkspace {
    algebras: BTreeMap<String, Vec<u64>>,
    #[serde(default)]
    homs: BTreeMap<String, RawHom>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawHom {
    source: String,
    target: String,
    matrix: Vec<Vec<IntLiteral>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedHom {
    pub source: String,
    pub target: String,
    pub hom: FdHom,
}

/// Validated workspace: every hom has been checked against its algebras.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WorkspaceFile {
    pub algebras: BTreeMap<String, FdAlgebra>,
    pub homs: BTreeMap<String, NamedHom>,
}

impl WorkspaceFile {
    pub fn hom(&self, name: &str) -> Result<&NamedHom, CliError> {
        self.homs
            .get(name)
            .ok_or_else(|| CliError::UnknownHom(name.to_string()))
    }
}

pub fn parse_workspace(path: &Path) -> Result<WorkspaceFile, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_workspace_str(&text, &path.display().to_string())
}

pub fn parse_workspace_str(text: &str, origin: &str) -> Result<WorkspaceFile, CliError> {
    let raw: RawWorkspace = toml::from_str(text).map_err(|e| CliError::Syntax {
        origin: origin.to_string(),
        message: e.to_string(),
    })?;
    if raw.algebras.is_empty() {
        return Err(CliError::Syntax {
            origin: origin.to_string(),
            message: "the algebras table declares no algebras".into(),
        });
    }

    let mut algebras = BTreeMap::new();
    for (name, blocks) in raw.algebras {
        let algebra = FdAlgebra::new(blocks).map_err(|source| CliError::Algebra {
            name: name.clone(),
            source,
        })?;
        algebras.insert(name, algebra);
    }

    let mut homs = BTreeMap::new();
    for (name, raw_hom) in raw.homs {
        let resolve = |alg: &str| {
            algebras
                .get(alg)
                .cloned()
                .ok_or_else(|| CliError::Unresolved {
                    hom: name.clone(),
                    name: alg.to_string(),
                })
        };
        let source = resolve(&raw_hom.source)?;
        let target = resolve(&raw_hom.target)?;
        let matrix = literal_matrix(&raw_hom.matrix, &format!("{origin}: hom {name:?}"))?;
        let hom = make_hom(source, target, matrix).map_err(|source| CliError::Hom {
            hom: name.clone(),
            source,
        })?;
        homs.insert(
            name,
            NamedHom {
                source: raw_hom.source,
                target: raw_hom.target,
                hom,
            },
        );
    }
    Ok(WorkspaceFile { algebras, homs })
}

/// Parses a matrix given inline or in a file.
///
/// Accepts a JSON array of rows (`[[3,3],[2,0],[0,5]]`), or rows separated by
/// `;` or newlines with entries separated by commas or whitespace
/// (`3 3; 2 0; 0 5`). Lines starting with `#` are ignored.
pub fn parse_matrix(text: &str, origin: &str) -> Result<IntMatrix, CliError> {
    let syntax = |message: String| CliError::Syntax {
        origin: origin.to_string(),
        message,
    };
    let trimmed = text.trim();
    if trimmed.starts_with('[') {
        let rows: Vec<Vec<IntLiteral>> =
            serde_json::from_str(trimmed).map_err(|e| syntax(e.to_string()))?;
        return literal_matrix(&rows, origin);
    }
    let mut rows = Vec::new();
    for line in trimmed.lines().filter(|l| !l.trim_start().starts_with('#')) {
        for row in line.split(';') {
            let entries: Vec<&str> = row
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .collect();
            if entries.is_empty() {
                continue;
            }
            let parsed = entries
                .iter()
                .map(|s| {
                    s.parse::<BigInt>()
                        .map_err(|_| syntax(format!("{s:?} is not an integer")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            rows.push(parsed);
        }
    }
    IntMatrix::from_rows(rows).map_err(|e| syntax(e.to_string()))
}
