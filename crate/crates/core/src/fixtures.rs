//! Small named configurations used throughout the examples and tests.

use crate::config::VectorConfig;
use crate::exactalg::{PrimeField, Rationals};

fn gf(p: u64) -> PrimeField {
    PrimeField::new(p).expect("prime")
}

/// The seven nonzero vectors of `GF(2)^3` in lexicographic order.
pub fn fano() -> VectorConfig<PrimeField> {
    let rows: Vec<Vec<i64>> = (1..8).map(|v| vec![(v >> 2) & 1, (v >> 1) & 1, v & 1]).collect();
    VectorConfig::from_i64(gf(2), 3, &rows).expect("fano")
}

pub fn isthmus() -> VectorConfig<Rationals> {
    VectorConfig::from_i64(Rationals, 1, &[vec![1]]).expect("isthmus")
}

pub fn single_loop() -> VectorConfig<Rationals> {
    VectorConfig::from_i64(Rationals, 0, &[vec![]]).expect("loop")
}

/// Two parallel nonzero forms on a line.
pub fn u12() -> VectorConfig<Rationals> {
    VectorConfig::from_i64(Rationals, 1, &[vec![1], vec![1]]).expect("u12")
}

/// `e1, e2, e1 + e2` over the rationals.
pub fn u23() -> VectorConfig<Rationals> {
    VectorConfig::from_i64(Rationals, 2, &[vec![1, 0], vec![0, 1], vec![1, 1]]).expect("u23")
}

/// A loop followed by `e1, e2, e1 + e2`.
pub fn with_loop() -> VectorConfig<Rationals> {
    VectorConfig::from_i64(Rationals, 2, &[vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]).expect("loop + u23")
}

/// The standard basis of `Q^n`.
pub fn free(n: usize) -> VectorConfig<Rationals> {
    let rows: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    VectorConfig::from_i64(Rationals, n, &rows).expect("free")
}

pub fn all_loops(n: usize) -> VectorConfig<Rationals> {
    VectorConfig::from_i64(Rationals, 0, &vec![vec![]; n]).expect("loops")
}

/// `n` generic forms in `Q^r`: the moment curve `(1, t, t^2, ..)` at `t = 1..n`.
pub fn uniform(r: usize, n: usize) -> VectorConfig<Rationals> {
    let rows: Vec<Vec<i64>> = (1..=n as i64).map(|t| (0..r as u32).map(|k| t.pow(k)).collect()).collect();
    VectorConfig::from_i64(Rationals, r, &rows).expect("uniform")
}
