//! Dimensions of the algebra `C(Δ)` generated by the reciprocals `1/α_i`.
//!
//! `C(Δ)_{X,k}` is isomorphic to `P(kΔ)_{X,k}` (multiply by `α_E^k`), so every
//! dimension here is computed on the `k`-fold parallel extension.

use serde::Serialize;

use crate::config::VectorConfig;
use crate::error::{Error, Result};
use crate::exactalg::Field;
use crate::matroid::Matroid;
use crate::poly::{BivariatePoly, PowerSeries, UniPoly};
use crate::pspace::cell_dimension_unchecked;
use crate::subset::Subset;
use crate::tutte::{parallel_tutte_formula, tutte_dc};

/// Largest `k * n` for which `dim_C` builds the parallel extension.
pub const PARALLEL_CAP: usize = 24;

fn require_loop_free<F: Field>(cfg: &VectorConfig<F>) -> Result<()> {
    if (0..cfg.n()).any(|i| cfg.is_loop(i)) {
        Err(Error::HasLoops)
    } else {
        Ok(())
    }
}

/// The copies of `x` inside the `k`-fold parallel extension.
fn lift(x: Subset, n: usize, k: usize) -> Subset {
    (0..k).flat_map(|c| x.iter().map(move |i| c * n + i)).collect()
}

/// `dim C(Δ)_{X,k}`, computed as `dim P(kΔ)_{X,k}`.
#[allow(non_snake_case)]
pub fn dim_C<F: Field>(cfg: &VectorConfig<F>, x: Subset, k: usize) -> Result<usize> {
    require_loop_free(cfg)?;
    if !x.is_subset_of(cfg.ground()) || !cfg.is_flat(x) {
        return Err(Error::NotAFlat(x.to_string()));
    }
    let r = cfg.rank_of(x);
    if k == 0 {
        return Ok(usize::from(r == 0));
    }
    if k < r {
        return Ok(0);
    }
    let n = cfg.n();
    if k * n > PARALLEL_CAP {
        return Err(Error::TooLarge { what: "parallel extension for dim_C", size: k * n, cap: PARALLEL_CAP });
    }
    let big = cfg.parallel_extension(k)?;
    Ok(cell_dimension_unchecked(&big, lift(x, n, k), r, k))
}

/// `[y^(k - r(X))] T(kΔ_X; 1, y)`, the same dimension computed from the
/// Tutte polynomial of the restriction to `X`.
#[allow(non_snake_case)]
pub fn dim_C_via_tutte<F: Field>(cfg: &VectorConfig<F>, x: Subset, k: usize) -> Result<usize> {
    require_loop_free(cfg)?;
    let restricted = cfg.restrict_to_flat(x)?;
    let r = cfg.rank_of(x);
    if k == 0 {
        return Ok(usize::from(r == 0));
    }
    if k < r {
        return Ok(0);
    }
    let t = parallel_tutte_formula(&tutte_dc(&restricted), k, r)?;
    Ok(t.at_x(1).coeff(k - r) as usize)
}

/// Both sides of
/// `[y^k] (y(1 - y^k)/(1 - y))^r T(1, y^k) = [y^k] (y/(1 - y))^r T(1, 0)`
/// for a Tutte polynomial `t` of rank `r`.
pub fn multiples_of_k_sides(t: &BivariatePoly, r: usize, k: usize) -> (i64, i64) {
    if k == 0 {
        let base = i64::from(r == 0) * t.eval(1, 0);
        return (base, base);
    }
    let block = (1..=k).fold(UniPoly::zero(), |acc, j| acc + UniPoly::monomial(1, j));
    let t1 = t.at_x(1);
    let t1k = t1.compose(&UniPoly::monomial(1, k));
    let lhs = (block.pow(r as u32) * t1k).coeff(k);
    let rhs = PowerSeries::t_over_one_minus_t_pow(r, k).coeff(k) * t.eval(1, 0);
    (lhs, rhs)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlatSeries {
    pub flat: Subset,
    pub rank: usize,
    pub nbc_bases: usize,
    pub series: PowerSeries,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReciprocalSeries {
    pub order: usize,
    pub per_flat: Vec<FlatSeries>,
    pub total: PowerSeries,
    /// `t^ell T(1/t, 0) / (1 - t)^ell`.
    pub closed_form: PowerSeries,
}

/// Hilbert series of `C(Δ)` through `t^order`, per flat and in total.
pub fn terao_series<F: Field>(cfg: &VectorConfig<F>, order: usize) -> Result<ReciprocalSeries> {
    require_loop_free(cfg)?;
    let m = Matroid::from_config(cfg)?;
    let nbc = m.nbc_sets();
    let per_flat: Vec<FlatSeries> = m
        .flats()
        .iter()
        .map(|(x, r)| {
            let count = nbc.iter().filter(|&&i| i.len() == r && m.closure(i) == x).count();
            FlatSeries {
                flat: x,
                rank: r,
                nbc_bases: count,
                series: PowerSeries::t_over_one_minus_t_pow(r, order).scale(count as i64),
            }
        })
        .collect();
    let total = per_flat.iter().fold(PowerSeries::zero(order), |acc, f| acc.add(&f.series));
    let ell = m.rank();
    let t0 = tutte_dc(cfg).at_y(0);
    let reversed = UniPoly::from_coeffs((0..=ell).map(|a| t0.coeff(ell - a)).collect());
    let closed_form = PowerSeries::from_poly(&reversed, order).mul(&PowerSeries::inverse_one_minus_t_pow(ell, order));
    if total != closed_form {
        return Err(Error::Mismatch(format!(
            "per-flat reciprocal series {:?} differ from the closed form {:?}",
            total.coeffs(),
            closed_form.coeffs()
        )));
    }
    Ok(ReciprocalSeries { order, per_flat, total, closed_form })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TeraoReport {
    pub holds: bool,
    /// `sum_X dim C(Δ)_{X,k}` for `k = 0..=order`.
    pub dims: Vec<i64>,
    pub series: ReciprocalSeries,
    /// `(flat, k)` cells where a check failed.
    pub failures: Vec<String>,
}

/// For every `k <= order`, compares the per-flat dimensions from the
/// parallel extension with the Tutte-coefficient route and with the series.
pub fn verify_terao<F: Field>(cfg: &VectorConfig<F>, order: usize) -> Result<TeraoReport> {
    let series = terao_series(cfg, order)?;
    let mut dims = vec![0i64; order + 1];
    let mut failures = Vec::new();
    for f in &series.per_flat {
        let restricted_t = tutte_dc(&cfg.restrict_to_flat(f.flat)?);
        for (k, slot) in dims.iter_mut().enumerate() {
            let d = dim_C(cfg, f.flat, k)?;
            let via = dim_C_via_tutte(cfg, f.flat, k)?;
            let predicted = f.series.coeff(k);
            if d != via || d as i64 != predicted {
                failures.push(format!("X={} k={k}: dim {d}, via Tutte {via}, series {predicted}", f.flat));
            }
            let (lhs, rhs) = multiples_of_k_sides(&restricted_t, f.rank, k);
            if lhs != rhs {
                failures.push(format!("X={} k={k}: coefficient identity {lhs} != {rhs}", f.flat));
            }
            *slot += d as i64;
        }
    }
    let holds = failures.is_empty() && dims == series.total.coeffs();
    Ok(TeraoReport { holds, dims, series, failures })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn single_form() {
        let cfg = fixtures::isthmus();
        let e = cfg.ground();
        for k in 1..=6 {
            assert_eq!(dim_C(&cfg, e, k).unwrap(), 1);
        }
        assert_eq!(terao_series(&cfg, 5).unwrap().total.coeffs(), &[1, 1, 1, 1, 1, 1]);
        assert!(verify_terao(&cfg, 6).unwrap().holds);
    }

    #[test]
    fn below_rank_is_zero() {
        let fano = fixtures::fano();
        assert_eq!(dim_C(&fano, fano.ground(), 2).unwrap(), 0);
    }

    #[test]
    fn loops_rejected() {
        let cfg = fixtures::with_loop();
        assert!(matches!(dim_C(&cfg, Subset::from_indices([0]), 1), Err(Error::HasLoops)));
        assert!(matches!(terao_series(&cfg, 3), Err(Error::HasLoops)));
    }

    #[test]
    fn fano_series() {
        let fano = fixtures::fano();
        assert_eq!(terao_series(&fano, 4).unwrap().total.coeffs(), &[1, 7, 21, 43, 73]);
        let rank_one: usize = Matroid::from_config(&fano)
            .unwrap()
            .flats()
            .of_rank(1)
            .map(|x| dim_C(&fano, x, 1).unwrap())
            .sum();
        assert_eq!(rank_one, 7);
    }

    #[test]
    fn u23_verifies() {
        let r = verify_terao(&fixtures::u23(), 4).unwrap();
        assert!(r.holds, "{:?}", r.failures);
    }

    #[test]
    fn cap_enforced() {
        let fano = fixtures::fano();
        assert!(matches!(dim_C(&fano, fano.ground(), 4), Err(Error::TooLarge { .. })));
    }
}
