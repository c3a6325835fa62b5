//! Finite-dimensional C*-algebras and *-homomorphisms between them, modelled
//! by multiplicity matrices.

mod algebra;
mod predicates;
mod report;

pub use algebra::{compose, make_hom, FdAlgebra, FdHom};
pub use predicates::{
    cokernel_torsion_free, columns_meet_at_most_one_row, columns_span_lattice, is_injective,
    is_surjective, is_unital, k0_injective, k0_surjective, k0_unital, necessary_gcd_conditions,
    row_pattern_span_equivalence, rows_are_unit_patterns, torsion_verdict, GcdConditions,
    TorsionCertificate, TorsionCriterion, TorsionVerdict,
};
pub use report::{analyze, AnalysisReport};
