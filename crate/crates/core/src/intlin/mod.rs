//! Exact integer linear algebra over arbitrary-precision integers.

mod bezout;
mod det;
mod inverse;
mod matrix;
mod minors;
mod snf;

pub use bezout::{combine, gcd_with_bezout, BezoutResult};
pub use det::{adjugate, column_rank, determinant};
pub use inverse::{
    left_inverse, right_inverse, scaled_left_inverse, scaled_left_inverse_with_coefficients,
    scaled_right_inverse, scattered_adjugate, ScaledInverse,
};
pub use matrix::IntMatrix;
pub use minors::{
    full_square_count, full_square_submatrices, minor_gcd, minor_gcd_capped, FullSquareSubmatrices,
    IndexSet, MinorGcdResult, DEFAULT_MINOR_CAP,
};
pub use snf::{smith_normal_form, SmithDecomposition};
