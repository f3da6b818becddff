//! Brute-force oracles over GF(p), written without the crate's linear algebra
//! or polynomial code.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::{BTreeMap, HashMap};

pub fn norm(a: i64, p: u64) -> u64 {
    a.rem_euclid(p as i64) as u64
}

fn inv(a: u64, p: u64) -> u64 {
    // Fermat
    let (mut base, mut e, mut acc) = (a % p, p - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = (acc as u128 * base as u128 % p as u128) as u64;
        }
        base = (base as u128 * base as u128 % p as u128) as u64;
        e >>= 1;
    }
    acc
}

/// Rank of a list of vectors mod p by plain elimination.
pub fn rank(p: u64, rows: &[Vec<u64>]) -> usize {
    let mut m: Vec<Vec<u64>> = rows.iter().filter(|r| r.iter().any(|&a| a != 0)).cloned().collect();
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, piv);
        let iv = inv(m[r][c], p);
        for j in 0..cols {
            m[r][j] = (m[r][j] as u128 * iv as u128 % p as u128) as u64;
        }
        for i in 0..m.len() {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..cols {
                    let sub = (f as u128 * m[r][j] as u128 % p as u128) as u64;
                    m[i][j] = (m[i][j] + p - sub) % p;
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// A configuration reduced mod p.
#[derive(Clone, Debug)]
pub struct Oracle {
    pub p: u64,
    pub ell: usize,
    pub forms: Vec<Vec<u64>>,
}

impl Oracle {
    pub fn new(p: u64, ell: usize, vectors: &[Vec<i64>]) -> Self {
        Oracle { p, ell, forms: vectors.iter().map(|v| v.iter().map(|&a| norm(a, p)).collect()).collect() }
    }

    pub fn n(&self) -> usize {
        self.forms.len()
    }

    pub fn rank_of(&self, s: u64) -> usize {
        let rows: Vec<Vec<u64>> = (0..self.n()).filter(|i| s >> i & 1 == 1).map(|i| self.forms[i].clone()).collect();
        rank(self.p, &rows)
    }

    pub fn full(&self) -> u64 {
        (1u64 << self.n()) - 1
    }

    pub fn closure(&self, s: u64) -> u64 {
        let r = self.rank_of(s);
        (0..self.n()).filter(|&e| self.rank_of(s | 1 << e) == r).fold(0, |acc, e| acc | 1 << e)
    }

    pub fn flats(&self) -> Vec<u64> {
        let mut v: Vec<u64> = (0..=self.full()).filter(|&s| self.closure(s) == s).collect();
        v.sort_by_key(|&s| (self.rank_of(s), s));
        v
    }

    pub fn independent_count(&self) -> usize {
        (0..=self.full()).filter(|&s| self.rank_of(s) == s.count_ones() as usize).count()
    }

    /// `sum_S (x-1)^(r(E)-r(S)) (y-1)^(|S|-r(S))`, expanded.
    pub fn tutte(&self) -> BTreeMap<(u32, u32), i64> {
        let re = self.rank_of(self.full());
        let mut shifted: BTreeMap<(u32, u32), i64> = BTreeMap::new();
        for s in 0..=self.full() {
            let r = self.rank_of(s);
            *shifted.entry(((re - r) as u32, (s.count_ones() as usize - r) as u32)).or_default() += 1;
        }
        let mut out: BTreeMap<(u32, u32), i64> = BTreeMap::new();
        for (&(a, b), &c) in &shifted {
            for i in 0..=a {
                for j in 0..=b {
                    let sign = if (a - i + b - j) % 2 == 0 { 1 } else { -1 };
                    *out.entry((i, j)).or_default() += c * sign * binom(a, i) * binom(b, j);
                }
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    /// Coefficients of `chi(λ)` from the Möbius function of the flat lattice.
    pub fn char_poly_mobius(&self) -> Vec<i64> {
        let flats = self.flats();
        let re = self.rank_of(self.full());
        let bottom = flats[0];
        let mut mu: HashMap<u64, i64> = HashMap::new();
        for &x in &flats {
            let v = if x == bottom {
                1
            } else {
                -flats.iter().filter(|&&y| y != x && y & x == y && y & bottom == bottom).map(|y| mu[y]).sum::<i64>()
            };
            mu.insert(x, v);
        }
        let mut c = vec![0i64; re + 1];
        if self.closure(0) != 0 {
            return c;
        }
        for &x in &flats {
            c[re - self.rank_of(x)] += mu[&x];
        }
        c
    }

    fn product(&self, exps: &[u32]) -> HashMap<Vec<u32>, u64> {
        let p = self.p;
        let mut acc: HashMap<Vec<u32>, u64> = HashMap::from([(vec![0; self.ell], 1)]);
        for (i, &e) in exps.iter().enumerate() {
            for _ in 0..e {
                let mut next: HashMap<Vec<u32>, u64> = HashMap::new();
                for (mono, &c) in &acc {
                    for (v, &a) in self.forms[i].iter().enumerate() {
                        if a == 0 {
                            continue;
                        }
                        let mut m2 = mono.clone();
                        m2[v] += 1;
                        let slot = next.entry(m2).or_default();
                        *slot = (*slot + (c as u128 * a as u128 % p as u128) as u64) % p;
                    }
                }
                next.retain(|_, c| *c != 0);
                acc = next;
            }
        }
        acc
    }

    fn span(&self, polys: Vec<HashMap<Vec<u32>, u64>>) -> usize {
        let mut index: HashMap<Vec<u32>, usize> = HashMap::new();
        for poly in &polys {
            for m in poly.keys() {
                let next = index.len();
                index.entry(m.clone()).or_insert(next);
            }
        }
        let rows: Vec<Vec<u64>> = polys
            .iter()
            .map(|poly| {
                let mut row = vec![0; index.len()];
                for (m, &c) in poly {
                    row[index[m]] = c;
                }
                row
            })
            .collect();
        rank(self.p, &rows)
    }

    fn subset_exps(&self, s: u64) -> Vec<u32> {
        (0..self.n()).map(|i| (s >> i & 1) as u32).collect()
    }

    /// `dim P ∩ Sym^d` for each `d`, from all `2^n` products.
    pub fn graded_dims(&self) -> Vec<usize> {
        (0..=self.n())
            .map(|d| {
                let polys = (0..=self.full()).filter(|s| s.count_ones() as usize == d).map(|s| self.product(&self.subset_exps(s))).collect();
                self.span(polys)
            })
            .collect()
    }

    /// `dim` of the span of `α_S` with `E - S = T`, `|T| = k`, `cl(T) = x`.
    pub fn cell(&self, x: u64, k: usize) -> usize {
        let polys = (0..=self.full())
            .filter(|&t| t & !x == 0 && t.count_ones() as usize == k && self.closure(t) == x)
            .map(|t| self.product(&self.subset_exps(self.full() & !t)))
            .collect();
        self.span(polys)
    }

    /// `dim` of the degree-`k` part of the algebra generated by the `1/α_i`,
    /// as the span of `α_E^k / α^a` over `|a| = k`.
    pub fn reciprocal_dim(&self, k: u32) -> usize {
        let n = self.n();
        let mut polys = Vec::new();
        let mut a = vec![0u32; n];
        loop {
            if a.iter().sum::<u32>() == k {
                let exps: Vec<u32> = a.iter().map(|&ai| k - ai).collect();
                polys.push(self.product(&exps));
            }
            let mut i = 0;
            loop {
                if i == n {
                    return self.span(polys);
                }
                a[i] += 1;
                if a[i] <= k {
                    break;
                }
                a[i] = 0;
                i += 1;
            }
        }
    }
}

pub fn binom(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

pub fn fano_vectors() -> Vec<Vec<i64>> {
    (1..8).map(|v| vec![v >> 2 & 1, v >> 1 & 1, v & 1]).collect()
}
