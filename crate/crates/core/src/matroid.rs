//! Matroid data of a configuration, read off a table of ranks of all subsets.

use std::collections::HashMap;

use serde::Serialize;

use crate::config::VectorConfig;
use crate::error::{Error, Result};
use crate::exactalg::{Echelon, Field};
use crate::subset::Subset;

/// Largest ground set for which subsets are enumerated exhaustively.
pub const MAX_ENUMERATION: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ElementStatus {
    Loop,
    Isthmus,
    Ordinary,
}

/// The matroid of a configuration, as a rank table over all `2^n` subsets.
#[derive(Clone, Debug)]
pub struct Matroid {
    n: usize,
    ranks: Vec<u8>,
}

/// Flats together with their ranks, sorted by rank and then lexicographically.
#[derive(Clone, Debug)]
pub struct FlatLattice {
    flats: Vec<(Subset, usize)>,
    index: HashMap<Subset, usize>,
}

impl FlatLattice {
    fn new(mut flats: Vec<(Subset, usize)>) -> Self {
        flats.sort_by(|a, b| a.1.cmp(&b.1).then(a.0.lex_cmp(b.0)));
        let index = flats.iter().enumerate().map(|(i, (x, _))| (*x, i)).collect();
        FlatLattice { flats, index }
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Subset, usize)> + '_ {
        self.flats.iter().copied()
    }

    pub fn contains(&self, x: Subset) -> bool {
        self.index.contains_key(&x)
    }

    pub fn rank(&self, x: Subset) -> Option<usize> {
        self.index.get(&x).map(|&i| self.flats[i].1)
    }

    pub fn of_rank(&self, r: usize) -> impl Iterator<Item = Subset> + '_ {
        self.flats.iter().filter(move |f| f.1 == r).map(|f| f.0)
    }
}

fn fill_ranks<F: Field>(cfg: &VectorConfig<F>, mask: Subset, from: usize, basis: &Echelon<F>, ranks: &mut [u8]) {
    for i in from..cfg.n() {
        let next = mask.with(i);
        let mut grown = basis.clone();
        if grown.insert(cfg.form(i).to_vec()) {
            ranks[next.bits() as usize] = grown.rank() as u8;
            fill_ranks(cfg, next, i + 1, &grown, ranks);
        } else {
            ranks[next.bits() as usize] = basis.rank() as u8;
            fill_ranks(cfg, next, i + 1, basis, ranks);
        }
    }
}

impl Matroid {
    pub fn from_config<F: Field>(cfg: &VectorConfig<F>) -> Result<Self> {
        let n = cfg.n();
        if n > MAX_ENUMERATION {
            return Err(Error::TooLarge { what: "subset enumeration", size: n, cap: MAX_ENUMERATION });
        }
        let mut ranks = vec![0u8; 1 << n];
        fill_ranks(cfg, Subset::EMPTY, 0, &Echelon::new(cfg.field().clone(), cfg.ell()), &mut ranks);
        Ok(Matroid { n, ranks })
    }

    /// Tabulates an arbitrary rank function. No axioms are checked.
    pub fn from_rank_fn(n: usize, rank: impl Fn(Subset) -> usize) -> Result<Self> {
        if n > MAX_ENUMERATION {
            return Err(Error::TooLarge { what: "subset enumeration", size: n, cap: MAX_ENUMERATION });
        }
        let ranks = Subset::full(n).subsets().map(|s| rank(s) as u8).collect();
        Ok(Matroid { n, ranks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ground(&self) -> Subset {
        Subset::full(self.n)
    }

    pub fn rank(&self) -> usize {
        self.rank_of(self.ground())
    }

    pub fn rank_of(&self, s: Subset) -> usize {
        self.ranks[s.bits() as usize] as usize
    }

    pub fn is_independent(&self, s: Subset) -> bool {
        self.rank_of(s) == s.len()
    }

    pub fn closure(&self, s: Subset) -> Subset {
        let r = self.rank_of(s);
        self.ground().iter().filter(|&e| self.rank_of(s.with(e)) == r).collect::<Subset>().union(s)
    }

    pub fn is_flat(&self, x: Subset) -> bool {
        self.closure(x) == x
    }

    pub fn element_status(&self, i: usize) -> ElementStatus {
        let e = self.ground();
        if self.rank_of(Subset::singleton(i)) == 0 {
            ElementStatus::Loop
        } else if self.rank_of(e.without(i)) < self.rank_of(e) {
            ElementStatus::Isthmus
        } else {
            ElementStatus::Ordinary
        }
    }

    pub fn loops(&self) -> Subset {
        self.closure(Subset::EMPTY)
    }

    /// All independent sets, in lexicographic order.
    pub fn independent_sets(&self) -> Vec<Subset> {
        let mut out = Vec::new();
        self.extend_independent(Subset::EMPTY, 0, &mut out);
        out
    }

    fn extend_independent(&self, cur: Subset, from: usize, out: &mut Vec<Subset>) {
        out.push(cur);
        for i in from..self.n {
            let next = cur.with(i);
            if self.is_independent(next) {
                self.extend_independent(next, i + 1, out);
            }
        }
    }

    pub fn bases(&self) -> Vec<Subset> {
        let r = self.rank();
        self.independent_sets().into_iter().filter(|s| s.len() == r).collect()
    }

    /// Every flat, obtained as the closure of an independent set.
    pub fn flats(&self) -> FlatLattice {
        let mut seen: HashMap<Subset, usize> = HashMap::new();
        for i in self.independent_sets() {
            seen.entry(self.closure(i)).or_insert(i.len());
        }
        FlatLattice::new(seen.into_iter().collect())
    }

    /// Minimal dependent sets, in lexicographic order.
    pub fn circuits(&self) -> Vec<Subset> {
        let mut out: Vec<Subset> = self
            .ground()
            .subsets()
            .filter(|&s| {
                let k = s.len();
                k > 0 && self.rank_of(s) + 1 == k && s.iter().all(|c| self.rank_of(s.without(c)) + 1 == k)
            })
            .collect();
        out.sort_by(|a, b| a.lex_cmp(*b));
        out
    }

    /// Complements of the hyperplanes, in lexicographic order.
    pub fn cocircuits(&self) -> Vec<Subset> {
        let r = self.rank();
        if r == 0 {
            return Vec::new();
        }
        let mut out: Vec<Subset> = self.flats().of_rank(r - 1).map(|h| self.ground().difference(h)).collect();
        out.sort_by(|a, b| a.lex_cmp(*b));
        out
    }

    /// The unique circuit in `i + e` for independent `i` and `e` in its
    /// closure, `None` if `i + e` is independent.
    pub fn fundamental_circuit(&self, i: Subset, e: usize) -> Option<Subset> {
        let s = i.with(e);
        if i.contains(e) || self.is_independent(s) {
            return None;
        }
        let c = i.iter().filter(|&f| self.is_independent(s.without(f))).collect::<Subset>();
        Some(c.with(e))
    }

    /// The unique cocircuit inside `E - (b - e)` for a basis `b` and `e` in it.
    pub fn fundamental_cocircuit(&self, b: Subset, e: usize) -> Subset {
        self.ground().difference(self.closure(b.without(e)))
    }

    /// Elements outside `i` that are the least element of the circuit they
    /// close with `i`.
    pub fn external_activity(&self, i: Subset) -> Result<Subset> {
        if !self.is_independent(i) {
            return Err(Error::NotIndependent(i.to_string()));
        }
        Ok(self
            .ground()
            .difference(i)
            .iter()
            .filter(|&e| self.fundamental_circuit(i, e).is_some_and(|c| c.min() == Some(e)))
            .collect())
    }

    /// Elements of the basis `b` that are the least element of their
    /// fundamental cocircuit.
    pub fn internal_activity(&self, b: Subset) -> Result<Subset> {
        if !self.is_independent(b) || b.len() != self.rank() {
            return Err(Error::NotABasis(b.to_string()));
        }
        Ok(b.iter().filter(|&e| self.fundamental_cocircuit(b, e).min() == Some(e)).collect())
    }

    /// Independent sets with no externally active element. A loop is the
    /// least element of its own circuit, so any loop leaves no nbc sets.
    pub fn nbc_sets(&self) -> Vec<Subset> {
        self.independent_sets()
            .into_iter()
            .filter(|&i| self.external_activity(i).map(|ex| ex.is_empty()).unwrap_or(false))
            .collect()
    }

    /// nbc sets whose closure is `x`.
    pub fn nbc_bases_of(&self, x: Subset) -> Vec<Subset> {
        self.nbc_sets().into_iter().filter(|&i| self.closure(i) == x).collect()
    }
}
