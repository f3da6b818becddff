//! Tutte polynomials by deletion-contraction, by the corank-nullity state
//! sum and by basis activities, plus the polynomials derived from them.

use std::collections::HashMap;

use serde::Serialize;

use crate::config::VectorConfig;
use crate::error::{Error, Result};
use crate::exactalg::Field;
use crate::matroid::Matroid;
use crate::poly::{BivariatePoly, UniPoly};
use crate::subset::Subset;

/// Deletion-contraction on the configuration itself.
///
/// Loops and isthmuses of the live sub-configuration are split off as
/// factors `y` and `x`; the smallest remaining element is then deleted (a new
/// live set of the same configuration) and contracted (a fresh child
/// configuration with its own memo table).
pub fn tutte_dc<F: Field>(cfg: &VectorConfig<F>) -> BivariatePoly {
    let mut memo = HashMap::new();
    dc_rec(cfg, cfg.ground(), &mut memo)
}

fn dc_rec<F: Field>(cfg: &VectorConfig<F>, live: Subset, memo: &mut HashMap<Subset, BivariatePoly>) -> BivariatePoly {
    if let Some(p) = memo.get(&live) {
        return p.clone();
    }
    let r = cfg.rank_of(live);
    let (mut loops, mut isthmi) = (0u32, 0u32);
    let mut rest = live;
    for e in live.iter() {
        if cfg.is_loop(e) {
            loops += 1;
            rest = rest.without(e);
        } else if cfg.rank_of(live.without(e)) < r {
            isthmi += 1;
            rest = rest.without(e);
        }
    }
    let factor = BivariatePoly::monomial(1, isthmi, loops);
    let result = match rest.min() {
        None => factor,
        Some(e) => {
            let deleted = dc_rec(cfg, rest.without(e), memo);
            // `e` is the first position of the selected sub-configuration
            let contracted = cfg.select(rest).contract(0).expect("pivot is not a loop");
            factor * (deleted + tutte_dc(&contracted))
        }
    };
    memo.insert(live, result.clone());
    result
}

/// `sum_S (x-1)^(r(E)-r(S)) (y-1)^(|S|-r(S))` over all subsets.
pub fn tutte_corank_nullity(m: &Matroid) -> BivariatePoly {
    let r = m.rank();
    let mut counts: HashMap<(u32, u32), i64> = HashMap::new();
    for s in m.ground().subsets() {
        let rs = m.rank_of(s);
        *counts.entry(((r - rs) as u32, (s.len() - rs) as u32)).or_insert(0) += 1;
    }
    let xm = BivariatePoly::x() - BivariatePoly::one();
    let ym = BivariatePoly::y() - BivariatePoly::one();
    let mut keys: Vec<_> = counts.into_iter().collect();
    keys.sort();
    keys.into_iter()
        .fold(BivariatePoly::zero(), |acc, ((a, b), c)| acc + xm.pow(a) * ym.pow(b) * BivariatePoly::constant(c))
}

/// A basis with its internally and externally active elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BasisActivity {
    pub basis: Subset,
    pub internal: Subset,
    pub external: Subset,
}

pub fn basis_activities(m: &Matroid) -> Vec<BasisActivity> {
    m.bases()
        .into_iter()
        .map(|b| BasisActivity {
            basis: b,
            internal: m.internal_activity(b).expect("basis"),
            external: m.external_activity(b).expect("basis"),
        })
        .collect()
}

/// `sum_B x^|in(B)| y^|ex(B)|` over all bases.
pub fn tutte_activities(m: &Matroid) -> BivariatePoly {
    basis_activities(m).iter().fold(BivariatePoly::zero(), |acc, a| {
        acc + BivariatePoly::monomial(1, a.internal.len() as u32, a.external.len() as u32)
    })
}

/// `T(1 + x, y)` as `sum_I x^(r(E)-r(I)) y^|ex(I)|` over independent sets.
pub fn tutte_shifted_from_independents(m: &Matroid) -> BivariatePoly {
    let r = m.rank();
    m.independent_sets().into_iter().fold(BivariatePoly::zero(), |acc, i| {
        let ex = m.external_activity(i).expect("independent");
        acc + BivariatePoly::monomial(1, (r - i.len()) as u32, ex.len() as u32)
    })
}

/// `(-1)^r T(1 - λ, 0)` as a polynomial in `λ`.
pub fn char_poly_from_tutte(t: &BivariatePoly, rank: usize) -> UniPoly {
    let chi = t.at_y(0).compose(&UniPoly::from_coeffs(vec![1, -1]));
    if rank % 2 == 1 {
        -chi
    } else {
        chi
    }
}

pub fn char_poly<F: Field>(cfg: &VectorConfig<F>) -> UniPoly {
    char_poly_from_tutte(&tutte_dc(cfg), cfg.ell())
}

/// Tutte polynomial of the matroid with every element replaced by `m`
/// parallel copies, from the Tutte polynomial `t` of a rank-`r` matroid:
///
/// `((1 - y^m)/(1 - y))^r * t((xy - x - y + y^m)/(y^m - 1), y^m)`.
///
/// Denominators are cleared with a power of `y^m - 1` and divided back out
/// exactly; a remainder means `(t, r)` was not a valid pair.
pub fn parallel_tutte_formula(t: &BivariatePoly, m: usize, r: usize) -> Result<BivariatePoly> {
    if m == 0 {
        return Err(Error::ZeroMultiplicity);
    }
    let y = BivariatePoly::y();
    let x = BivariatePoly::x();
    let ym = y.pow(m as u32);
    let d = UniPoly::monomial(1, m) - UniPoly::one();
    let d_bi = BivariatePoly::from_y_poly(&d);
    let num_x = &(&(&x * &y) - &x) - &y + ym.clone();
    let g = BivariatePoly::from_y_poly(&(0..m).fold(UniPoly::zero(), |acc, k| acc + UniPoly::monomial(1, k)));
    let e = r.max(t.degree_x().unwrap_or(0) as usize);

    let mut numerator = BivariatePoly::zero();
    for (a, b, c) in t.terms() {
        let term = num_x.pow(a) * d_bi.pow((e - a as usize) as u32) * ym.pow(b) * BivariatePoly::constant(c);
        numerator = numerator + term;
    }
    numerator = numerator * g.pow(r as u32);
    numerator.div_exact_by_y(&d.pow(e as u32))
}

/// `S = (B - I) ∪ J` with `I ⊆ in(B)` and `J ⊆ ex(B)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CrapoTriple {
    pub basis: Subset,
    pub removed: Subset,
    pub added: Subset,
}

fn crapo_from_table(m: &Matroid, table: &[BasisActivity], s: Subset) -> Result<CrapoTriple> {
    let mut found: Option<CrapoTriple> = None;
    for a in table {
        let removed = a.basis.difference(s);
        let added = s.difference(a.basis);
        if !removed.is_subset_of(a.internal) || !added.is_subset_of(a.external) {
            continue;
        }
        if let Some(prev) = found {
            return Err(Error::Inconsistent(format!("{s} decomposes over both {} and {}", prev.basis, a.basis)));
        }
        let ex_smaller = m.external_activity(a.basis.difference(removed))?;
        if ex_smaller != a.external {
            return Err(Error::Inconsistent(format!(
                "ex({}) = {ex_smaller} differs from ex({}) = {}",
                a.basis.difference(removed),
                a.basis,
                a.external
            )));
        }
        found = Some(CrapoTriple { basis: a.basis, removed, added });
    }
    found.ok_or_else(|| Error::Inconsistent(format!("{s} has no decomposition")))
}

/// The unique decomposition of `s` over a basis and its activities.
pub fn crapo_decompose(m: &Matroid, s: Subset) -> Result<CrapoTriple> {
    crapo_from_table(m, &basis_activities(m), s)
}

/// Decomposes every subset of the ground set; fails if any subset has zero or
/// several decompositions.
pub fn crapo_all(m: &Matroid) -> Result<Vec<(Subset, CrapoTriple)>> {
    let table = basis_activities(m);
    m.ground().subsets().map(|s| crapo_from_table(m, &table, s).map(|t| (s, t))).collect()
}

/// `sum_k c_k q^k`.
pub fn substitute(p: &UniPoly, q: &BivariatePoly) -> BivariatePoly {
    p.coeffs()
        .iter()
        .rev()
        .fold(BivariatePoly::zero(), |acc, &c| acc * q + BivariatePoly::constant(c))
}

/// Both sides of `(y-1)^r T(x,y) = sum_X y^|X| χ(M/X; (x-1)(y-1))`, with each
/// `M/X` realized by contracting the configuration.
pub fn coboundary_sides<F: Field>(cfg: &VectorConfig<F>) -> Result<(BivariatePoly, BivariatePoly)> {
    let m = Matroid::from_config(cfg)?;
    let t = tutte_dc(cfg);
    let ym = BivariatePoly::y() - BivariatePoly::one();
    let lhs = ym.pow(m.rank() as u32) * t;
    let lam = (BivariatePoly::x() - BivariatePoly::one()) * ym;
    let mut rhs = BivariatePoly::zero();
    for (x, _) in m.flats().iter() {
        let chi = char_poly(&cfg.contract_set(x));
        rhs = rhs + BivariatePoly::monomial(1, 0, x.len() as u32) * substitute(&chi, &lam);
    }
    Ok((lhs, rhs))
}

/// The Tutte polynomial of the Fano plane as printed in the literature:
/// `(x-1)^3 + 7(x-1)^2 + 14(x-1) + 7(x-1)y + y^4 + 3y^3 + 6y^2 + 10y + 8`.
pub fn fano_reference() -> BivariatePoly {
    let xm = BivariatePoly::x() - BivariatePoly::one();
    let y = BivariatePoly::y();
    let c = BivariatePoly::constant;
    xm.pow(3) + c(7) * xm.pow(2) + c(14) * xm.clone() + c(7) * xm * y.clone() + y.pow(4) + c(3) * y.pow(3)
        + c(6) * y.pow(2)
        + c(10) * y
        + c(8)
}
