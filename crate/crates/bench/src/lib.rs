//! Fixed-seed inputs shared by the benchmarks.

use fdk0::{sample, FdHom, IntMatrix};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `count` square matrices of side `n`, entries in `[-9, 9]`.
pub fn squares(n: usize, count: usize) -> Vec<IntMatrix> {
    let mut r = rng(n as u64);
    (0..count)
        .map(|_| sample::matrix(&mut r, n, n, -9, 9))
        .collect()
}

/// Tall `rows x cols` matrices, entries in `[-9, 9]`.
pub fn talls(rows: usize, cols: usize, count: usize) -> Vec<IntMatrix> {
    let mut r = rng((rows * 31 + cols) as u64);
    (0..count)
        .map(|_| sample::matrix(&mut r, rows, cols, -9, 9))
        .collect()
}

pub fn homs(count: usize) -> Vec<FdHom> {
    let mut r = rng(7);
    (0..count).map(|_| sample::hom(&mut r)).collect()
}
