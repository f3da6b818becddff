//! For which degrees `d` the whole of `Sym^d` lies inside `P(Δ)`.

use serde::Serialize;

use crate::config::VectorConfig;
use crate::error::{Error, Result};
use crate::exactalg::Field;
use crate::matroid::Matroid;
use crate::poly::{binomial, PowerSeries, UniPoly};
use crate::pspace::hilbert_P;
use crate::tutte::tutte_dc;

/// `n - |H|` minimized over hyperplanes `H`.
pub fn min_cocircuit_size<F: Field>(cfg: &VectorConfig<F>) -> Result<usize> {
    let m = Matroid::from_config(cfg)?;
    min_cocircuit_of(&m)
}

fn min_cocircuit_of(m: &Matroid) -> Result<usize> {
    let r = m.rank();
    if r == 0 {
        return Err(Error::RankZero);
    }
    let flats = m.flats();
    Ok(flats.of_rank(r - 1).map(|h| m.n() - h.len()).min().expect("a rank-r matroid has hyperplanes"))
}

/// Degrees `d` where the Hilbert coefficient equals `dim Sym^d`.
fn full_degrees(hilb: &PowerSeries, ell: usize) -> Vec<usize> {
    (0..=hilb.order())
        .filter(|&d| hilb.coeff(d) == binomial((ell + d) as i64 - 1, d as i64) || (ell == 0 && d == 0))
        .collect()
}

/// Largest `d` with `Sym^d ⊆ P(Δ)`, by comparing dimensions.
pub fn max_spanned_degree<F: Field>(cfg: &VectorConfig<F>) -> Result<usize> {
    let hilb = hilbert_P(cfg)?;
    Ok(*full_degrees(&hilb, cfg.ell()).last().expect("degree 0 is always full"))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeadingTerm {
    /// Size of a largest proper flat.
    pub x0_size: usize,
    /// Number of flats of that size.
    pub a: usize,
    /// Exponent `n - |X0| + 1`.
    pub degree: usize,
    /// Whether `h = 1 - a t^degree + (higher terms)`.
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HReport {
    pub holds: bool,
    /// `Hilb(P(Δ), t) (1 - t)^ell`.
    pub from_hilbert: UniPoly,
    /// `sum_X t^(n - |X|) (-1)^(ell - r(X)) T(M/X; t, 0)`.
    pub flat_sum: UniPoly,
    /// Reported, not part of `holds`.
    pub leading: Option<LeadingTerm>,
}

/// Checks the flat-sum formula for `Hilb(P(Δ), t) (1 - t)^ell`.
pub fn h_polynomial_check<F: Field>(cfg: &VectorConfig<F>) -> Result<HReport> {
    let m = Matroid::from_config(cfg)?;
    let n = cfg.n();
    let ell = m.rank();
    let hilb = hilbert_P(cfg)?.to_poly();
    let from_hilbert = hilb * UniPoly::from_coeffs(vec![1, -1]).pow(ell as u32);
    let flats = m.flats();
    let mut flat_sum = UniPoly::zero();
    for (x, r) in flats.iter() {
        let t0 = tutte_dc(&cfg.contract_set(x)).at_y(0);
        let sign = if (ell - r) % 2 == 0 { 1 } else { -1 };
        flat_sum = flat_sum + t0 * UniPoly::monomial(sign, n - x.len());
    }
    let leading = flats.iter().filter(|&(x, _)| x != m.ground()).map(|(x, _)| x.len()).max().map(|x0_size| {
        let a = flats.iter().filter(|&(x, _)| x.len() == x0_size).count();
        let degree = n - x0_size + 1;
        let holds = from_hilbert.coeff(0) == 1
            && (1..degree).all(|d| from_hilbert.coeff(d) == 0)
            && from_hilbert.coeff(degree) == -(a as i64);
        LeadingTerm { x0_size, a, degree, holds }
    });
    Ok(HReport { holds: from_hilbert == flat_sum, from_hilbert, flat_sum, leading })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpanningReport {
    pub holds: bool,
    pub max_spanned_degree: usize,
    pub min_cocircuit_size: usize,
    /// Smallest cocircuit from the cocircuit list, as a second computation.
    pub min_cocircuit_listed: usize,
    /// Whether the full degrees form an initial segment `0..=d`.
    pub downward_closed: bool,
    pub hilbert: PowerSeries,
}

pub fn verify_spanning<F: Field>(cfg: &VectorConfig<F>) -> Result<SpanningReport> {
    let m = Matroid::from_config(cfg)?;
    let min_cocircuit_size = min_cocircuit_of(&m)?;
    let min_cocircuit_listed = m.cocircuits().iter().map(|c| c.len()).min().ok_or(Error::RankZero)?;
    let hilbert = hilbert_P(cfg)?;
    let full = full_degrees(&hilbert, cfg.ell());
    let max_spanned_degree = *full.last().expect("degree 0 is always full");
    let downward_closed = full.iter().enumerate().all(|(i, &d)| i == d);
    let holds = max_spanned_degree == min_cocircuit_size && min_cocircuit_listed == min_cocircuit_size && downward_closed;
    Ok(SpanningReport { holds, max_spanned_degree, min_cocircuit_size, min_cocircuit_listed, downward_closed, hilbert })
}
