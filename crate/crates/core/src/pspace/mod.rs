//! The span `P(Δ)` of all products `α_S`, split into pieces `P(Δ)_{X,k}`
//! spanned by the products whose complementary forms `E - S` have `k`
//! elements and span the flat `X`. Such a piece sits in degree `n - k`.

mod multipoly;

use std::collections::BTreeMap;

use serde::Serialize;

pub use multipoly::{span_dimension, MonomialBasis, MultiPoly};

use crate::config::VectorConfig;
use crate::error::{Error, Result};
use crate::exactalg::{Echelon, Field};
use crate::matroid::Matroid;
use crate::poly::{BivariatePoly, PowerSeries, UniPoly};
use crate::subset::Subset;
use crate::tutte::tutte_dc;

/// Default ground-set cap for a full dimension table.
pub const DEFAULT_CAP: usize = 16;

/// `α_S` expanded as a sparse polynomial.
pub fn product_form<F: Field>(cfg: &VectorConfig<F>, s: Subset) -> MultiPoly<F> {
    s.iter().fold(MultiPoly::one(cfg.field().clone(), cfg.ell()), |acc, i| {
        acc.mul(&MultiPoly::linear(cfg.field().clone(), cfg.form(i)))
    })
}

/// Dense product engine for one configuration.
struct Products<'a, F: Field> {
    cfg: &'a VectorConfig<F>,
    basis: MonomialBasis,
}

impl<'a, F: Field> Products<'a, F> {
    fn new(cfg: &'a VectorConfig<F>) -> Self {
        Products { cfg, basis: MonomialBasis::new(cfg.ell(), cfg.n()) }
    }

    /// Multiplies the dense degree-`d` polynomial `p` by the forms in `s`.
    fn extend(&self, mut p: Vec<F::Elem>, mut d: usize, s: Subset) -> Vec<F::Elem> {
        let f = self.cfg.field();
        for i in s.iter() {
            p = self.basis.times_linear(f, &p, d, self.cfg.form(i));
            d += 1;
        }
        p
    }

    fn product(&self, s: Subset) -> Vec<F::Elem> {
        self.extend(self.basis.dense_one(self.cfg.field()), 0, s)
    }

    /// `dim P(Δ)_{X,k}` for a flat `x` of rank `rank_x`.
    fn cell(&self, x: Subset, rank_x: usize, k: usize) -> usize {
        let cfg = self.cfg;
        let n = cfg.n();
        if k < rank_x || k > x.len() {
            return 0;
        }
        let outside = cfg.ground().difference(x);
        let base = self.product(outside);
        let mut ech = Echelon::new(cfg.field().clone(), self.basis.count(n - k));
        for t in x.combinations(k) {
            let s = x.difference(t);
            if s.iter().any(|i| cfg.is_loop(i)) || cfg.rank_of(t) != rank_x {
                continue;
            }
            ech.insert(self.extend(base.clone(), outside.len(), s));
            if ech.is_full() {
                break;
            }
        }
        ech.rank()
    }
}

/// `dim P(Δ)_{X,k}` for a single cell, without building the whole table.
/// `x` must be a flat of `cfg`.
pub fn cell_dimension<F: Field>(cfg: &VectorConfig<F>, x: Subset, k: usize) -> Result<usize> {
    if !x.is_subset_of(cfg.ground()) || !cfg.is_flat(x) {
        return Err(Error::NotAFlat(x.to_string()));
    }
    Ok(Products::new(cfg).cell(x, cfg.rank_of(x), k))
}

/// Cell dimension for a known flat of known rank, skipping the flat check.
pub(crate) fn cell_dimension_unchecked<F: Field>(cfg: &VectorConfig<F>, x: Subset, rank_x: usize, k: usize) -> usize {
    Products::new(cfg).cell(x, rank_x, k)
}

/// One flat's row of the dimension table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlatRow {
    pub flat: Subset,
    pub rank: usize,
    /// `dims[j]` is the dimension at `k = rank + j`, for `k` up to `|flat|`.
    pub dims: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimTable {
    pub n: usize,
    pub ell: usize,
    pub rows: Vec<FlatRow>,
}

impl DimTable {
    pub fn row(&self, x: Subset) -> Option<&FlatRow> {
        self.rows.iter().find(|r| r.flat == x)
    }

    /// `dim P(Δ)_{X,k}`; zero outside the stored range or for non-flats.
    pub fn dim(&self, x: Subset, k: usize) -> usize {
        self.row(x)
            .and_then(|r| k.checked_sub(r.rank).and_then(|j| r.dims.get(j)))
            .copied()
            .unwrap_or(0)
    }

    /// `(flat, rank, k, dim)` for every stored cell.
    pub fn cells(&self) -> impl Iterator<Item = (Subset, usize, usize, usize)> + '_ {
        self.rows
            .iter()
            .flat_map(|r| r.dims.iter().enumerate().map(move |(j, &d)| (r.flat, r.rank, r.rank + j, d)))
    }

    pub fn total(&self) -> usize {
        self.cells().map(|c| c.3).sum()
    }

    /// Sorted `{k: dim}` maps per flat, for reports.
    pub fn to_records(&self) -> Vec<serde_json::Value> {
        self.rows
            .iter()
            .map(|r| {
                let dims: BTreeMap<String, usize> =
                    r.dims.iter().enumerate().map(|(j, &d)| (format!("{:02}", r.rank + j), d)).collect();
                serde_json::json!({ "flat": r.flat, "rank": r.rank, "dims": dims })
            })
            .collect()
    }
}

pub fn dim_table<F: Field>(cfg: &VectorConfig<F>) -> Result<DimTable> {
    dim_table_with_cap(cfg, DEFAULT_CAP)
}

pub fn dim_table_with_cap<F: Field>(cfg: &VectorConfig<F>, cap: usize) -> Result<DimTable> {
    if cfg.n() > cap {
        return Err(Error::TooLarge { what: "dimension table", size: cfg.n(), cap });
    }
    let m = Matroid::from_config(cfg)?;
    let engine = Products::new(cfg);
    let rows = m
        .flats()
        .iter()
        .map(|(x, r)| FlatRow { flat: x, rank: r, dims: (r..=x.len()).map(|k| engine.cell(x, r, k)).collect() })
        .collect();
    Ok(DimTable { n: cfg.n(), ell: cfg.ell(), rows })
}

/// `sum x^(ell - r(X)) y^(k - r(X)) dim P(Δ)_{X,k}`.
#[allow(non_snake_case)]
pub fn H_polynomial(dt: &DimTable) -> BivariatePoly {
    dt.cells().fold(BivariatePoly::zero(), |acc, (_, r, k, d)| {
        acc + BivariatePoly::monomial(d as i64, (dt.ell - r) as u32, (k - r) as u32)
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MainReport {
    pub holds: bool,
    /// `H(Δ; x, y)` from the dimension table.
    pub lhs: BivariatePoly,
    /// `T(Δ; 1 + x, y)` from deletion-contraction.
    pub rhs: BivariatePoly,
}

/// Compares the dimension generating function with the shifted Tutte
/// polynomial.
pub fn verify_main<F: Field>(cfg: &VectorConfig<F>) -> Result<MainReport> {
    let lhs = H_polynomial(&dim_table(cfg)?);
    let rhs = tutte_dc(cfg).shift_x(1);
    Ok(MainReport { holds: lhs == rhs, lhs, rhs })
}

/// Graded dimensions read off a table: a cell `(X, k)` lands in degree `n - k`.
pub fn hilbert_from_table(dt: &DimTable, keep: impl Fn(Subset, usize, usize) -> bool) -> PowerSeries {
    let mut c = vec![0i64; dt.n + 1];
    for (x, r, k, d) in dt.cells() {
        if keep(x, r, k) {
            c[dt.n - k] += d as i64;
        }
    }
    PowerSeries::from_coeffs(dt.n, &c)
}

/// `t^(n-ell) T(1 + t, 1/t)` with the Laurent part cleared.
pub fn hilbert_from_tutte(t: &BivariatePoly, n: usize, ell: usize) -> Result<UniPoly> {
    let shift = n - ell;
    let one_plus_t = UniPoly::from_coeffs(vec![1, 1]);
    let mut out = UniPoly::zero();
    for (a, b, c) in t.terms() {
        let e = shift.checked_sub(b as usize).ok_or_else(|| {
            Error::Inconsistent(format!("y-degree {b} of the Tutte polynomial exceeds the nullity {shift}"))
        })?;
        out = out + one_plus_t.pow(a) * UniPoly::monomial(c, e);
    }
    Ok(out)
}

fn require_equal(what: &str, direct: &UniPoly, via_tutte: &UniPoly) -> Result<()> {
    if direct == via_tutte {
        Ok(())
    } else {
        Err(Error::Mismatch(format!("{what}: dimensions give {direct}, Tutte substitution gives {via_tutte}")))
    }
}

/// Hilbert series of `P(Δ)`, checked against `t^(n-ell) T(1+t, 1/t)`.
#[allow(non_snake_case)]
pub fn hilbert_P<F: Field>(cfg: &VectorConfig<F>) -> Result<PowerSeries> {
    let dt = dim_table(cfg)?;
    let direct = hilbert_from_table(&dt, |_, _, _| true);
    let via = hilbert_from_tutte(&tutte_dc(cfg), cfg.n(), cfg.ell())?;
    require_equal("Hilb(P)", &direct.to_poly(), &via)?;
    Ok(direct)
}

/// Number of independent sets with closure `x` and `|I ∪ ex(I)| = k`.
pub fn activity_count(m: &Matroid, x: Subset, k: usize) -> usize {
    m.independent_sets()
        .into_iter()
        .filter(|&i| m.closure(i) == x && i.union(m.external_activity(i).expect("independent")).len() == k)
        .count()
}

/// Hilbert series of the piece for the top flat `E`.
///
/// Checks that it equals `t^(n-ell) T(1, 1/t)` and that every cell of the
/// table counts the independent sets `I` with closure `X` and
/// `|I ∪ ex(I)| = k`.
#[allow(non_snake_case)]
pub fn dim_P_top<F: Field>(cfg: &VectorConfig<F>) -> Result<PowerSeries> {
    let dt = dim_table(cfg)?;
    let m = Matroid::from_config(cfg)?;
    let top = m.ground();
    for (x, _, k, d) in dt.cells() {
        let count = activity_count(&m, x, k);
        if count != d {
            return Err(Error::Mismatch(format!("dim P_{{{x},{k}}} = {d} but {count} independent sets with that activity")));
        }
    }
    let direct = hilbert_from_table(&dt, |x, _, _| x == top);
    let t1 = BivariatePoly::from_y_poly(&tutte_dc(cfg).at_x(1));
    let via = hilbert_from_tutte(&t1, cfg.n(), cfg.ell())?;
    require_equal("Hilb(P_E)", &direct.to_poly(), &via)?;
    Ok(direct)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NbcFlat {
    pub flat: Subset,
    pub rank: usize,
    pub dim: usize,
    pub nbc: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NbcReport {
    pub holds: bool,
    pub per_flat: Vec<NbcFlat>,
    /// Hilbert series of the sum of the pieces `P(Δ)_{X, r(X)}`.
    pub series: PowerSeries,
    /// `t^(n-ell) T(1 + t, 0)`.
    pub via_tutte: UniPoly,
}

/// Compares `dim P(Δ)_{X, r(X)}` with the number of nbc sets spanning `X`.
pub fn nbc_dim_check<F: Field>(cfg: &VectorConfig<F>) -> Result<NbcReport> {
    let dt = dim_table(cfg)?;
    let m = Matroid::from_config(cfg)?;
    let nbc = m.nbc_sets();
    let per_flat: Vec<NbcFlat> = dt
        .rows
        .iter()
        .map(|r| NbcFlat {
            flat: r.flat,
            rank: r.rank,
            dim: dt.dim(r.flat, r.rank),
            nbc: nbc.iter().filter(|&&i| m.closure(i) == r.flat).count(),
        })
        .collect();
    let series = hilbert_from_table(&dt, |_, r, k| r == k);
    let t0 = BivariatePoly::from_terms(tutte_dc(cfg).at_y(0).coeffs().iter().enumerate().map(|(a, &c)| (a as u32, 0, c)));
    let via_tutte = hilbert_from_tutte(&t0, cfg.n(), cfg.ell())?;
    let holds = per_flat.iter().all(|f| f.dim == f.nbc) && series.to_poly() == via_tutte;
    Ok(NbcReport { holds, per_flat, series, via_tutte })
}

/// `E - (I ∪ ex(I))` for an independent set `I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ActivityElement {
    pub independent: Subset,
    pub subset: Subset,
}

pub fn activity_basis<F: Field>(cfg: &VectorConfig<F>) -> Result<Vec<ActivityElement>> {
    let m = Matroid::from_config(cfg)?;
    Ok(m.independent_sets()
        .into_iter()
        .map(|i| {
            let ex = m.external_activity(i).expect("independent");
            ActivityElement { independent: i, subset: m.ground().difference(i.union(ex)) }
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ActivityBasisReport {
    pub count: usize,
    pub dim_p: usize,
    pub distinct: bool,
    pub independent: bool,
    pub spans: bool,
}

impl ActivityBasisReport {
    pub fn holds(&self) -> bool {
        self.distinct && self.independent && self.spans && self.count == self.dim_p
    }
}

/// Ground-set cap for checks that expand all `2^n` products.
pub const EXHAUSTIVE_CAP: usize = 16;

/// Checks that the activity products are linearly independent and span
/// `P(Δ)`, where `P(Δ)` is computed from all `2^n` products.
pub fn verify_activity_basis<F: Field>(cfg: &VectorConfig<F>) -> Result<ActivityBasisReport> {
    if cfg.n() > EXHAUSTIVE_CAP {
        return Err(Error::TooLarge { what: "exhaustive product span", size: cfg.n(), cap: EXHAUSTIVE_CAP });
    }
    let elems = activity_basis(cfg)?;
    let engine = Products::new(cfg);
    let n = cfg.n();
    let mut seen = std::collections::HashSet::new();
    let distinct = elems.iter().all(|e| seen.insert(e.subset));
    let mut by_degree: Vec<Echelon<F>> =
        (0..=n).map(|d| Echelon::new(cfg.field().clone(), engine.basis.count(d))).collect();
    let mut independent = true;
    for e in &elems {
        let grew = by_degree[e.subset.len()].insert(engine.product(e.subset));
        independent &= grew;
    }
    let mut spans = true;
    for s in cfg.ground().subsets() {
        if s.iter().any(|i| cfg.is_loop(i)) {
            continue;
        }
        if by_degree[s.len()].insert(engine.product(s)) {
            spans = false;
        }
    }
    let dim_p = by_degree.iter().map(|e| e.rank()).sum();
    Ok(ActivityBasisReport { count: elems.len(), dim_p, distinct, independent, spans })
}

/// `dim(P(Δ) ∩ Sym^d)` for every `d`, from all `2^n` products directly.
pub fn graded_dims_direct<F: Field>(cfg: &VectorConfig<F>) -> Result<Vec<usize>> {
    if cfg.n() > EXHAUSTIVE_CAP {
        return Err(Error::TooLarge { what: "exhaustive product span", size: cfg.n(), cap: EXHAUSTIVE_CAP });
    }
    let engine = Products::new(cfg);
    let mut by_degree: Vec<Echelon<F>> =
        (0..=cfg.n()).map(|d| Echelon::new(cfg.field().clone(), engine.basis.count(d))).collect();
    for s in cfg.ground().subsets() {
        if !by_degree[s.len()].is_full() {
            by_degree[s.len()].insert(engine.product(s));
        }
    }
    Ok(by_degree.iter().map(|e| e.rank()).collect())
}

/// Renumbers positions after removing position `i`.
pub fn drop_position(s: Subset, i: usize) -> Subset {
    s.iter().filter(|&j| j != i).map(|j| if j > i { j - 1 } else { j }).collect()
}

/// Which of the three refined short exact sequences a cell falls under.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ComplexCase {
    /// `i ∉ X`: `P(Δ - α_i)_{X,k} ≅ P(Δ)_{X,k}`.
    Outside,
    /// `i ∈ X`, not an isthmus of `X`: a three-term sequence.
    Ordinary,
    /// `i` an isthmus of `X`: `P(Δ)_{X,k} ≅ P(Δ/α_i)_{X-i,k-1}`.
    Isthmus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplexCell {
    pub element: usize,
    pub flat: Subset,
    pub k: usize,
    pub case: ComplexCase,
    pub dim: usize,
    pub predicted: usize,
}

/// For every ordinary element `i` and every cell `(X, k)`, the dimension
/// predicted from the deletion and contraction tables.
pub fn complex_law_cells<F: Field>(cfg: &VectorConfig<F>) -> Result<Vec<ComplexCell>> {
    let dt = dim_table(cfg)?;
    let m = Matroid::from_config(cfg)?;
    let mut out = Vec::new();
    for i in 0..cfg.n() {
        if m.element_status(i) != crate::matroid::ElementStatus::Ordinary {
            continue;
        }
        let del = dim_table(&cfg.delete(i)?)?;
        let con = dim_table(&cfg.contract(i)?)?;
        for row in &dt.rows {
            let x = row.flat;
            for k in row.rank..=x.len() {
                let xi = drop_position(x, i);
                let (case, predicted) = if !x.contains(i) {
                    (ComplexCase::Outside, del.dim(xi, k))
                } else if m.rank_of(x.without(i)) == row.rank {
                    (ComplexCase::Ordinary, del.dim(xi, k) + k.checked_sub(1).map_or(0, |k1| con.dim(xi, k1)))
                } else {
                    (ComplexCase::Isthmus, k.checked_sub(1).map_or(0, |k1| con.dim(xi, k1)))
                };
                out.push(ComplexCell { element: i + 1, flat: x, k, case, dim: dt.dim(x, k), predicted });
            }
        }
    }
    Ok(out)
}
