//! Test corpora: every small binary configuration up to reordering, and
//! seeded random configurations.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::{AnyConfig, ConfigFile};
use crate::error::Result;
use crate::exactalg::{FieldSpec, Matrix, PrimeField};

/// Range of integer entries drawn for configurations over `Q`.
pub const RATIONAL_ENTRY_BOUND: i64 = 3;

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("successor exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Row-reduced form of the `ell x n` matrix whose columns are `cols`.
fn gf2_rref_key(gf2: PrimeField, ell: usize, cols: &[Vec<i64>]) -> Vec<Vec<u64>> {
    let rows: Vec<Vec<i64>> = (0..ell).map(|r| cols.iter().map(|c| c[r]).collect()).collect();
    Matrix::from_i64(gf2, cols.len(), &rows).rref().0.to_rows()
}

/// One configuration per isomorphism class of sequences of `n` vectors
/// spanning `GF(2)^ell`, up to change of coordinates and reordering, for
/// every `n <= max_n`. Configurations of rank zero (all loops) are included.
pub fn gf2_classes(max_n: usize) -> Vec<ConfigFile> {
    let gf2 = PrimeField::new(2).expect("2 is prime");
    let mut out = Vec::new();
    for n in 0..=max_n {
        for ell in 0..=n {
            let mut seen = BTreeSet::new();
            for pivots in crate::subset::Subset::full(n).combinations(ell) {
                let pivots: Vec<usize> = pivots.iter().collect();
                let free: Vec<(usize, usize)> = (0..ell)
                    .flat_map(|r| (pivots[r] + 1..n).filter(|c| !pivots.contains(c)).map(move |c| (r, c)))
                    .collect();
                for bits in 0u64..1 << free.len() {
                    let mut cols = vec![vec![0i64; ell]; n];
                    for (r, &c) in pivots.iter().enumerate() {
                        cols[c][r] = 1;
                    }
                    for (b, &(r, c)) in free.iter().enumerate() {
                        cols[c][r] = (bits >> b & 1) as i64;
                    }
                    let mut perm: Vec<usize> = (0..n).collect();
                    let mut best: Option<Vec<Vec<u64>>> = None;
                    loop {
                        let permuted: Vec<Vec<i64>> = perm.iter().map(|&i| cols[i].clone()).collect();
                        let key = gf2_rref_key(gf2, ell, &permuted);
                        if best.as_ref().is_none_or(|b| key < *b) {
                            best = Some(key);
                        }
                        if !next_permutation(&mut perm) {
                            break;
                        }
                    }
                    let key = best.expect("at least one permutation");
                    if seen.insert(key.clone()) {
                        let vectors = (0..n).map(|c| (0..ell).map(|r| key[r][c] as i64).collect()).collect();
                        out.push(ConfigFile { field: FieldSpec::Prime { p: 2 }, vectors, ell: Some(ell) });
                    }
                }
            }
        }
    }
    out
}

/// Draws an `n x ell` integer matrix: entries uniform in `0..p` over `GF(p)`,
/// in `-3..=3` over `Q`. Matrices of rank zero are redrawn.
pub fn random_config(rng: &mut impl Rng, field: FieldSpec, n: usize, ell: usize) -> Result<ConfigFile> {
    if n == 0 || ell == 0 {
        return Err(crate::error::Error::RankZero);
    }
    loop {
        let vectors = (0..n)
            .map(|_| {
                (0..ell)
                    .map(|_| match field {
                        FieldSpec::Prime { p } => rng.gen_range(0..p) as i64,
                        FieldSpec::Rationals => rng.gen_range(-RATIONAL_ENTRY_BOUND..=RATIONAL_ENTRY_BOUND),
                    })
                    .collect()
            })
            .collect();
        let file = ConfigFile { field, vectors, ell: Some(ell) };
        if AnyConfig::from_file(&file)?.ell() > 0 {
            return Ok(file);
        }
    }
}

/// `count` configurations with fixed `n` and `ell`, determined by `seed`.
pub fn random_fixed(field: FieldSpec, n: usize, ell: usize, count: usize, seed: u64) -> Result<Vec<ConfigFile>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_config(&mut rng, field, n, ell)).collect()
}

/// `count` configurations with `n` uniform in `1..=max_n` and `ell` uniform in
/// `1..=max_ell`, determined by `seed`.
pub fn random_mixed(field: FieldSpec, max_n: usize, max_ell: usize, count: usize, seed: u64) -> Result<Vec<ConfigFile>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            let ell = rng.gen_range(1..=max_ell);
            random_config(&mut rng, field, n, ell)
        })
        .collect()
}
