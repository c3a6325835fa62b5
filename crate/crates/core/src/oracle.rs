//! Brute-force reference implementations for cross-checking [`crate::intlin`]
//! and [`crate::cstar`].
//!
//! Nothing here calls into `intlin`: matrices are unpacked into plain nested
//! vectors and every routine is written for obviousness, not speed.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::intlin::IntMatrix;

pub const MAX_PERMUTATION_SIZE: usize = 8;
pub const MAX_SEARCH_DIM: usize = 4;
pub const MAX_SEARCH_BOX: u32 = 5;
pub const MAX_SEARCH_MULTIPLIER: u32 = 6;

/// Outcome of comparing an implementation against an oracle on one input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub subject: String,
    pub agreed: bool,
    /// Debug rendering of the input, present whenever `agreed` is false.
    pub counterexample: Option<String>,
}

impl OracleReport {
    pub fn check<I: Debug + ?Sized, T: PartialEq + Debug>(
        subject: &str,
        input: &I,
        implementation: T,
        oracle: T,
    ) -> Self {
        let agreed = implementation == oracle;
        Self {
            subject: subject.to_string(),
            agreed,
            counterexample: (!agreed).then(|| {
                format!("{input:?}: implementation {implementation:?}, oracle {oracle:?}")
            }),
        }
    }
}

type Rows = Vec<Vec<BigInt>>;

fn identity(n: usize) -> Rows {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// Determinant as the signed sum over all permutations.
pub fn det_permutation(m: &IntMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::Dimension {
            op: "det_permutation",
            expected: "a square matrix".into(),
            found: format!("{}x{}", m.rows(), m.cols()),
        });
    }
    let n = m.rows();
    if n > MAX_PERMUTATION_SIZE {
        return Err(Error::Guard {
            op: "det_permutation",
            limit: format!("n <= {MAX_PERMUTATION_SIZE}"),
        });
    }
    let rows = m.to_rows();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = BigInt::zero();
    permute(&rows, &mut perm, 0, false, &mut total);
    Ok(total)
}

// Swap-based enumeration: each transposition flips the sign.
fn permute(rows: &Rows, perm: &mut Vec<usize>, depth: usize, odd: bool, total: &mut BigInt) {
    let n = perm.len();
    if depth == n {
        let mut term = BigInt::one();
        for (i, &j) in perm.iter().enumerate() {
            term *= &rows[i][j];
        }
        if odd {
            *total -= term;
        } else {
            *total += term;
        }
        return;
    }
    for i in depth..n {
        perm.swap(depth, i);
        permute(rows, perm, depth + 1, odd ^ (i != depth), total);
        perm.swap(depth, i);
    }
}

/// A diagonal form `d = u * e * v`, without the divisibility chain.
struct Diagonal {
    u: Rows,
    d: Rows,
    v: Rows,
}

/// Replaces rows `a`, `b` by `(x r_a + y r_b, -(q) r_a + p r_b)` where
/// `g = x p + y q` is the gcd of the pivots `p = m[a][c]`, `q = m[b][c]`.
fn combine_rows(m: &mut Rows, a: usize, b: usize, x: &BigInt, y: &BigInt, p: &BigInt, q: &BigInt) {
    for c in 0..m[a].len() {
        let ra = m[a][c].clone();
        let rb = m[b][c].clone();
        m[a][c] = x * &ra + y * &rb;
        m[b][c] = p * &rb - q * &ra;
    }
}

fn transpose(m: &Rows) -> Rows {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len())
        .map(|j| m.iter().map(|r| r[j].clone()).collect())
        .collect()
}

/// Clears column `t` below the diagonal with 2x2 unimodular gcd steps, mirrored into `u`.
fn clear_below(d: &mut Rows, u: &mut Rows, t: usize) {
    for i in t + 1..d.len() {
        if d[i][t].is_zero() {
            continue;
        }
        let a = d[t][t].clone();
        let b = d[i][t].clone();
        if b.is_multiple_of(&a) {
            // keep row t untouched so the pivot row stays clean
            let q = &b / &a;
            for m in [&mut *d, &mut *u] {
                for c in 0..m[i].len() {
                    let delta = &q * &m[t][c];
                    m[i][c] -= delta;
                }
            }
            continue;
        }
        let ext = a.extended_gcd(&b);
        let g = ext.gcd;
        let p = &a / &g;
        let q = &b / &g;
        // det [[x, y], [-q, p]] = x p + y q = 1
        combine_rows(d, t, i, &ext.x, &ext.y, &p, &q);
        combine_rows(u, t, i, &ext.x, &ext.y, &p, &q);
    }
}

fn diagonalize(e: &IntMatrix) -> Diagonal {
    let (l, k) = (e.rows(), e.cols());
    let mut d = e.to_rows();
    let mut u = identity(l);
    // column operations are done as row operations on the transpose
    let mut vt = identity(k);

    for t in 0..l.min(k) {
        // first nonzero entry, scanning column by column
        let found = (t..k)
            .flat_map(|j| (t..l).map(move |i| (i, j)))
            .find(|&(i, j)| !d[i][j].is_zero());
        let Some((pi, pj)) = found else { break };
        d.swap(t, pi);
        u.swap(t, pi);
        for row in d.iter_mut() {
            row.swap(t, pj);
        }
        vt.swap(t, pj);

        loop {
            clear_below(&mut d, &mut u, t);
            let mut dt = transpose(&d);
            clear_below(&mut dt, &mut vt, t);
            d = transpose(&dt);
            if (t + 1..l).all(|i| d[i][t].is_zero()) {
                break;
            }
        }
    }
    Diagonal {
        u,
        d,
        v: transpose(&vt),
    }
}

/// Nonzero diagonal entries brought into a divisibility chain by repeated
/// `(a, b) -> (gcd, lcm)`.
pub fn invariant_factors(e: &IntMatrix) -> Vec<BigInt> {
    let diag = diagonalize(e);
    let mut f: Vec<BigInt> = (0..e.rows().min(e.cols()))
        .map(|i| diag.d[i][i].abs())
        .filter(|x| !x.is_zero())
        .collect();
    for i in 0..f.len() {
        for j in i + 1..f.len() {
            let g = f[i].gcd(&f[j]);
            let l = f[i].lcm(&f[j]);
            f[i] = g;
            f[j] = l;
        }
    }
    f
}

/// The cokernel `Z^rows / im(E)` is torsion-free: every nonzero invariant factor is 1.
pub fn torsion_free_by_snf(e: &IntMatrix) -> bool {
    invariant_factors(e).iter().all(One::is_one)
}

/// `n * y` lies in the image of `E` but `y` does not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionWitness {
    pub y: Vec<BigInt>,
    pub n: u32,
    /// `E * preimage = n * y`.
    pub preimage: Vec<BigInt>,
}

fn mat_vec(m: &Rows, x: &[BigInt]) -> Vec<BigInt> {
    m.iter()
        .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
        .collect()
}

/// Solves `E x = target` over the integers through the diagonal form.
fn preimage(diag: &Diagonal, cols: usize, target: &[BigInt]) -> Option<Vec<BigInt>> {
    let t = mat_vec(&diag.u, target);
    let mut y = vec![BigInt::zero(); cols];
    for (i, ti) in t.iter().enumerate() {
        let di = if i < cols {
            &diag.d[i][i]
        } else {
            &BigInt::zero()
        };
        if di.is_zero() {
            if !ti.is_zero() {
                return None;
            }
        } else {
            let (q, r) = ti.div_rem(di);
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        }
    }
    Some(mat_vec(&diag.v, &y))
}

/// 0, 1, -1, 2, -2, ..., box, -box
fn box_values(bound: u32) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero()];
    for v in 1..=i64::from(bound) {
        out.push(BigInt::from(v));
        out.push(BigInt::from(-v));
    }
    out
}

/// Exhaustive search for a torsion element of the cokernel among vectors with
/// entries in `[-bound, bound]` and multipliers `2..=max_n`.
///
/// Finding a witness proves torsion; finding none proves nothing.
pub fn bounded_torsion_search(
    e: &IntMatrix,
    bound: u32,
    max_n: u32,
) -> Result<Option<TorsionWitness>> {
    if e.rows() > MAX_SEARCH_DIM
        || e.cols() > MAX_SEARCH_DIM
        || bound > MAX_SEARCH_BOX
        || max_n > MAX_SEARCH_MULTIPLIER
    {
        return Err(Error::Guard {
            op: "bounded_torsion_search",
            limit: format!(
                "dimensions <= {MAX_SEARCH_DIM}, box <= {MAX_SEARCH_BOX}, multiplier <= {MAX_SEARCH_MULTIPLIER}"
            ),
        });
    }
    let l = e.rows();
    let diag = diagonalize(e);
    let values = box_values(bound);
    let mut digits = vec![0usize; l];
    let rows = e.to_rows();

    loop {
        let y: Vec<BigInt> = digits.iter().map(|&t| values[t].clone()).collect();
        if !y.iter().all(Zero::is_zero) && preimage(&diag, e.cols(), &y).is_none() {
            for n in 2..=max_n {
                let target: Vec<BigInt> = y.iter().map(|v| v * n).collect();
                if let Some(x) = preimage(&diag, e.cols(), &target) {
                    assert_eq!(mat_vec(&rows, &x), target, "oracle preimage is wrong");
                    return Ok(Some(TorsionWitness { y, n, preimage: x }));
                }
            }
        }
        // odometer, last coordinate fastest
        let mut pos = l;
        loop {
            if pos == 0 {
                return Ok(None);
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < values.len() {
                break;
            }
            digits[pos] = 0;
        }
    }
}
