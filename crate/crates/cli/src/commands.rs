use std::io::Write;
use std::path::Path;

use clap::ValueEnum;
use fdk0::intlin::{scaled_left_inverse, scaled_right_inverse, smith_normal_form, ScaledInverse};
use fdk0::{analyze, compose, AnalysisReport, BigInt, FdHom, IntMatrix};

use crate::error::{exit, CliError};
use crate::input::parse_workspace;
use crate::machine::{
    AnalysisDocument, InverseDocument, MachineHom, MachineReport, Side, SmithDocument,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InverseSide {
    Left,
    Right,
}

fn write_json<T: serde::Serialize>(out: &mut dyn Write, doc: &T) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, doc).map_err(|e| CliError::Internal(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

fn join(v: &[BigInt]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref()
        .map_or_else(|| "n/a".to_string(), ToString::to_string)
}

fn write_report(
    out: &mut dyn Write,
    name: &str,
    h: &FdHom,
    r: &AnalysisReport,
) -> Result<(), CliError> {
    writeln!(out, "hom {name}: {} -> {}", h.source(), h.target())?;
    writeln!(out, "multiplicity matrix:\n{}", h.matrix())?;
    writeln!(out, "slack: {}", join(h.slack()))?;
    writeln!(out)?;
    for (key, value) in [
        ("phi_injective", r.phi_injective),
        ("phi_surjective", r.phi_surjective),
        ("phi_unital", r.phi_unital),
        ("k0_injective", r.k0_injective),
        ("k0_surjective", r.k0_surjective),
        ("k0_unital", r.k0_unital),
    ] {
        writeln!(out, "{key}: {value}")?;
    }
    let criterion = match r.torsion_criterion {
        Some(fdk0::cstar::TorsionCriterion::MinorGcd) => " (by minor gcd)",
        Some(fdk0::cstar::TorsionCriterion::SmithNormalForm) => " (by smith normal form)",
        None => "",
    };
    writeln!(
        out,
        "cokernel_torsion_free: {}{criterion}",
        opt(&r.cokernel_torsion_free)
    )?;
    writeln!(out, "minor_gcd: {}", opt(&r.minor_gcd))?;
    writeln!(out, "invariant_factors: {}", join(&r.invariant_factors))?;
    writeln!(out, "entry_gcd: {}", r.entry_gcd)?;
    writeln!(out, "column_gcds: {}", join(&r.column_gcds))?;
    if let Some(k) = &r.left_inverse_certificate {
        writeln!(out, "left_inverse_certificate (K * E = I):\n{k}")?;
    }
    writeln!(out, "notes:")?;
    for note in &r.notes {
        writeln!(out, "  - {note}")?;
    }
    Ok(())
}

fn emit_analysis(
    out: &mut dyn Write,
    format: Format,
    chain: Vec<String>,
    name: &str,
    h: &FdHom,
) -> Result<u8, CliError> {
    let report = analyze(h);
    let problems = report.violations(h);
    if !problems.is_empty() {
        return Err(CliError::Internal(problems.join("; ")));
    }
    match format {
        Format::Text => write_report(out, name, h, &report)?,
        Format::Machine => write_json(
            out,
            &AnalysisDocument {
                command: if chain.len() > 1 {
                    "compose"
                } else {
                    "analyze"
                }
                .into(),
                chain,
                hom: MachineHom::new(name, h),
                report: MachineReport::from(&report),
            },
        )?,
    }
    Ok(exit::SUCCESS)
}

pub fn cmd_analyze(
    workspace: &Path,
    hom: &str,
    format: Format,
    out: &mut dyn Write,
) -> Result<u8, CliError> {
    let ws = parse_workspace(workspace)?;
    let named = ws.hom(hom)?;
    emit_analysis(out, format, vec![hom.to_string()], hom, &named.hom)
}

/// Composes the homs in application order: `[f, g, h]` gives `h . g . f`.
pub fn composite(ws: &crate::input::WorkspaceFile, names: &[String]) -> Result<FdHom, CliError> {
    if names.len() < 2 {
        return Err(CliError::Usage(
            "compose needs at least two hom names".into(),
        ));
    }
    let mut acc = ws.hom(&names[0])?.hom.clone();
    for pair in names.windows(2) {
        let next = &ws.hom(&pair[1])?.hom;
        acc = compose(next, &acc).map_err(|source| CliError::Compose {
            inner: pair[0].clone(),
            outer: pair[1].clone(),
            source,
        })?;
    }
    Ok(acc)
}

pub fn cmd_compose(
    workspace: &Path,
    names: &[String],
    format: Format,
    out: &mut dyn Write,
) -> Result<u8, CliError> {
    let ws = parse_workspace(workspace)?;
    let h = composite(&ws, names)?;
    let name = names.iter().rev().cloned().collect::<Vec<_>>().join("∘");
    emit_analysis(out, format, names.to_vec(), &name, &h)
}

pub fn cmd_invert(
    e: &IntMatrix,
    side: InverseSide,
    format: Format,
    out: &mut dyn Write,
) -> Result<u8, CliError> {
    let s: ScaledInverse = match side {
        InverseSide::Left => scaled_left_inverse(e)?,
        InverseSide::Right => scaled_right_inverse(e)?,
    };
    let product = match side {
        InverseSide::Left => &s.matrix * e,
        InverseSide::Right => e * &s.matrix,
    };
    if !product.is_scalar(&s.d) {
        return Err(CliError::Internal(format!(
            "scaled inverse does not give {} * I",
            s.d
        )));
    }

    match format {
        Format::Text => {
            writeln!(out, "d = {}", s.d)?;
            let (name, eq) = match side {
                InverseSide::Left => ("left", "K * E"),
                InverseSide::Right => ("right", "E * R"),
            };
            if s.is_unit() {
                writeln!(out, "{name} inverse ({eq} = I):\n{}", s.matrix)?;
            } else if s.degenerate {
                writeln!(out, "no {name} inverse: E does not have full rank")?;
            } else {
                writeln!(
                    out,
                    "no integer {name} inverse; scaled inverse ({eq} = {} * I):\n{}",
                    s.d, s.matrix
                )?;
            }
        }
        Format::Machine => {
            let side = match side {
                InverseSide::Left => Side::Left,
                InverseSide::Right => Side::Right,
            };
            write_json(out, &InverseDocument::new(side, e, &s))?;
        }
    }
    Ok(if s.is_unit() {
        exit::SUCCESS
    } else {
        exit::NO_UNIT_INVERSE
    })
}

pub fn cmd_snf(e: &IntMatrix, format: Format, out: &mut dyn Write) -> Result<u8, CliError> {
    let s = smith_normal_form(e);
    if !s.verify(e) {
        return Err(CliError::Internal(
            "Smith decomposition failed verification".into(),
        ));
    }
    match format {
        Format::Text => {
            writeln!(out, "U:\n{}", s.u)?;
            writeln!(out, "D = U * E * V:\n{}", s.d)?;
            writeln!(out, "V:\n{}", s.v)?;
            writeln!(out, "invariant factors: {}", join(&s.invariant_factors))?;
        }
        Format::Machine => write_json(out, &SmithDocument::new(e, &s))?,
    }
    Ok(exit::SUCCESS)
}
