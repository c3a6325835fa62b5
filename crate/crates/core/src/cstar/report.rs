use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::algebra::FdHom;
use super::predicates::{
    gcd_profile, is_injective, is_surjective, is_unital, k0_injective, k0_surjective, k0_unital,
    rows_are_unit_patterns, torsion_verdict, TorsionCertificate, TorsionCriterion,
};
use crate::intlin::{minor_gcd, IntMatrix};

/// Every decided property of a homomorphism and of K0 of it, with certificates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisReport {
    pub phi_injective: bool,
    pub phi_surjective: bool,
    pub phi_unital: bool,
    pub k0_injective: bool,
    pub k0_surjective: bool,
    pub k0_unital: bool,
    /// Each row of the multiplicity matrix is a single 1.
    pub rows_unit_pattern: bool,
    pub cokernel_torsion_free: Option<bool>,
    pub torsion_criterion: Option<TorsionCriterion>,
    /// gcd of the full square minors; `None` above the enumeration cap.
    pub minor_gcd: Option<BigInt>,
    pub left_inverse_certificate: Option<IntMatrix>,
    pub invariant_factors: Vec<BigInt>,
    pub entry_gcd: BigInt,
    pub column_gcds: Vec<BigInt>,
    pub notes: Vec<String>,
}

pub fn analyze(h: &FdHom) -> AnalysisReport {
    let e = h.matrix();
    let verdict = torsion_verdict(e);
    let criterion = verdict.criterion();
    let (minor_gcd_value, left_inverse_certificate, invariant_factors) = match verdict.certificate {
        TorsionCertificate::MinorGcd {
            minors,
            left_inverse,
        } => (
            Some(minors.d),
            left_inverse,
            crate::intlin::smith_normal_form(e).invariant_factors,
        ),
        TorsionCertificate::Smith(snf) => (
            minor_gcd(e, false).ok().map(|m| m.d),
            None,
            snf.invariant_factors,
        ),
    };
    let gcds = gcd_profile(e);

    let mut report = AnalysisReport {
        phi_injective: is_injective(h),
        phi_surjective: is_surjective(h),
        phi_unital: is_unital(h),
        k0_injective: k0_injective(h),
        k0_surjective: k0_surjective(h),
        k0_unital: k0_unital(h),
        rows_unit_pattern: rows_are_unit_patterns(e),
        cokernel_torsion_free: Some(verdict.torsion_free),
        torsion_criterion: Some(criterion),
        minor_gcd: minor_gcd_value,
        left_inverse_certificate,
        invariant_factors,
        entry_gcd: gcds.entry_gcd,
        column_gcds: gcds.column_gcds,
        notes: Vec::new(),
    };
    report.notes = implication_notes(&report);

    debug_assert!(
        report.violations(h).is_empty(),
        "inconsistent report: {:?}",
        report.violations(h)
    );
    report
}

fn implication_notes(r: &AnalysisReport) -> Vec<String> {
    let mut notes = Vec::new();
    if r.k0_injective {
        notes.push(
            "K0 injective => phi injective (the source has cancellation and property (SP))".into(),
        );
    } else if r.phi_injective {
        notes.push("phi injective but K0 not: the columns of E are dependent".into());
    }
    if r.phi_surjective {
        notes.push("phi surjective => K0 surjective (the source has real rank zero)".into());
    } else if r.k0_surjective {
        let mut missing = Vec::new();
        if !r.phi_unital {
            missing.push("phi is not unital");
        }
        if !r.rows_unit_pattern {
            missing.push("some row of E is not a single 1");
        }
        notes.push(format!(
            "K0 surjective but phi not: phi surjective <=> K0 surjective and phi unital and every row of E a single 1; here {}",
            missing.join(" and ")
        ));
    }
    notes.push(format!(
        "phi unital <=> K0 unital (cancellation in the target): both {}",
        r.phi_unital
    ));
    match (r.torsion_criterion, r.cokernel_torsion_free) {
        (Some(TorsionCriterion::MinorGcd), Some(tf)) => notes.push(format!(
            "K0 injective, so cokernel torsion-free <=> gcd of full square minors is 1 <=> E has an integer left inverse: {tf}"
        )),
        (Some(TorsionCriterion::SmithNormalForm), Some(tf)) => notes.push(format!(
            "cokernel torsion-free <=> every invariant factor is 1: {tf}"
        )),
        _ => {}
    }
    if r.cokernel_torsion_free == Some(true) && !r.entry_gcd.is_zero() {
        notes.push("torsion-free cokernel => gcd of the entries of E is 1".into());
        if r.k0_injective {
            notes.push("torsion-free cokernel and K0 injective => every column gcd is 1".into());
        }
    }
    notes
}

impl AnalysisReport {
    /// Lists every consistency property of the report that fails for `h`.
    /// Empty for a correct analysis.
    pub fn violations(&self, h: &FdHom) -> Vec<String> {
        let mut out = Vec::new();
        let mut check = |ok: bool, what: &str| {
            if !ok {
                out.push(what.to_string());
            }
        };
        let one = BigInt::one();

        check(
            !self.k0_injective || self.phi_injective,
            "K0 injective but phi not",
        );
        check(
            !self.phi_surjective || self.k0_surjective,
            "phi surjective but K0 not",
        );
        check(
            self.phi_unital == self.k0_unital,
            "phi unital disagrees with K0 unital",
        );
        check(
            self.phi_surjective
                == (self.k0_surjective && self.phi_unital && self.rows_unit_pattern),
            "surjectivity differs from K0 surjective + unital + row pattern",
        );
        check(
            self.left_inverse_certificate.is_some()
                == (self.minor_gcd.as_ref() == Some(&one) && self.k0_injective),
            "left inverse present <=> minor gcd 1 and K0 injective fails",
        );
        if let Some(k) = &self.left_inverse_certificate {
            check(
                k.checked_mul(h.matrix())
                    .map(|p| p.is_identity())
                    .unwrap_or(false),
                "left inverse certificate does not invert E",
            );
        }
        let snf_torsion_free = self.invariant_factors.iter().all(|f| f.is_one());
        check(
            self.cokernel_torsion_free
                .is_none_or(|tf| tf == snf_torsion_free),
            "torsion decision disagrees with the invariant factors",
        );
        if self.k0_injective {
            if let (Some(d), Some(tf)) = (&self.minor_gcd, self.cokernel_torsion_free) {
                check(
                    tf == d.is_one(),
                    "torsion decision disagrees with the minor gcd",
                );
            }
        }
        let e = h.matrix();
        if e.rows() <= e.cols() {
            if let Some(d) = &self.minor_gcd {
                check(
                    self.k0_surjective == d.is_one(),
                    "K0 surjective disagrees with the minor gcd",
                );
            }
        } else {
            check(
                !self.k0_surjective,
                "K0 surjective with fewer source than target blocks",
            );
        }
        if self.cokernel_torsion_free == Some(true) && !self.entry_gcd.is_zero() {
            check(
                self.entry_gcd.is_one(),
                "torsion-free cokernel but entry gcd is not 1",
            );
            if self.k0_injective {
                check(
                    self.column_gcds.iter().all(One::is_one),
                    "torsion-free cokernel with injective K0 but some column gcd is not 1",
                );
            }
        }
        out
    }
}
