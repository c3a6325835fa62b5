use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A gcd together with coefficients expressing it as a combination of the inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BezoutResult {
    /// Nonnegative; zero only when every input is zero.
    pub g: BigInt,
    pub coefficients: Vec<BigInt>,
}

impl BezoutResult {
    /// Checks `sum(coefficients[i] * values[i]) == g`.
    pub fn verifies(&self, values: &[BigInt]) -> bool {
        self.coefficients.len() == values.len() && combine(&self.coefficients, values) == self.g
    }
}

/// `sum(coefficients[i] * values[i])`
pub fn combine(coefficients: &[BigInt], values: &[BigInt]) -> BigInt {
    coefficients.iter().zip(values).map(|(a, v)| a * v).sum()
}

/// gcd of a non-empty list with Bezout coefficients, by folding the extended
/// Euclidean algorithm from the left.
///
/// After step `i` the running gcd `g` satisfies `g = sum_{t<=i} c_t * v_t`.
/// Folding in `v` with `ext(g, v) = (g', x, y)` rescales all previous
/// coefficients by `x` and sets the new coefficient to `y`.
pub fn gcd_with_bezout(values: &[BigInt]) -> Result<BezoutResult> {
    let (first, rest) = values.split_first().ok_or(Error::EmptyArgument {
        op: "gcd_with_bezout",
    })?;

    let mut g = first.abs();
    let mut coefficients = Vec::with_capacity(values.len());
    coefficients.push(first.signum());

    for v in rest {
        // v already in the ideal generated so far
        if v.is_zero() || (!g.is_zero() && v.is_multiple_of(&g)) {
            coefficients.push(BigInt::zero());
            continue;
        }
        let ext = g.extended_gcd(v);
        let (mut next, mut x, mut y) = (ext.gcd, ext.x, ext.y);
        if next.is_negative() {
            next = -next;
            x = -x;
            y = -y;
        }
        if !x.is_one() {
            for c in coefficients.iter_mut() {
                *c *= &x;
            }
        }
        coefficients.push(y);
        g = next;
    }

    Ok(BezoutResult { g, coefficients })
}
