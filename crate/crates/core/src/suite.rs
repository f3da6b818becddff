//! Runs every identity the crate checks against a single configuration.

use serde::Serialize;

use crate::config::VectorConfig;
use crate::error::{Error, Result};
use crate::exactalg::Field;
use crate::matroid::Matroid;
use crate::pspace::{
    complex_law_cells, dim_P_top, hilbert_P, nbc_dim_check, verify_activity_basis, verify_main,
};
use crate::recip::verify_terao;
use crate::spanning::{h_polynomial_check, verify_spanning};
use crate::tutte::{
    coboundary_sides, crapo_all, parallel_tutte_formula, tutte_activities, tutte_corank_nullity, tutte_dc,
    tutte_shifted_from_independents,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteOptions {
    /// Highest reciprocal degree checked; capped so that `k * n` stays
    /// within the parallel-extension limit.
    pub terao_order: usize,
    /// Multiplicities checked by the parallel-extension formula.
    pub max_multiplicity: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { terao_order: 2, max_multiplicity: 3 }
    }
}

fn check(name: &'static str, outcome: Result<Option<String>>) -> Check {
    match outcome {
        Ok(None) => Check { name, holds: true, detail: None },
        Ok(Some(why)) => Check { name, holds: false, detail: Some(why) },
        Err(e) => Check { name, holds: false, detail: Some(e.to_string()) },
    }
}

fn fail_if(bad: bool, why: impl FnOnce() -> String) -> Option<String> {
    bad.then(why)
}

pub fn run_suite<F: Field>(cfg: &VectorConfig<F>, opts: SuiteOptions) -> Vec<Check> {
    let mut out = Vec::new();
    let m = match Matroid::from_config(cfg) {
        Ok(m) => m,
        Err(e) => return vec![check("matroid", Err(e))],
    };
    let t = tutte_dc(cfg);
    let loop_free = m.loops().is_empty();

    out.push(check("tutte_three_ways", {
        let cn = tutte_corank_nullity(&m);
        let act = tutte_activities(&m);
        Ok(fail_if(cn != t || act != t, || format!("dc {t}, state sum {cn}, activities {act}")))
    }));
    out.push(check("tutte_shifted_from_independents", {
        let s = tutte_shifted_from_independents(&m);
        Ok(fail_if(s != t.shift_x(1), || format!("{s} vs {}", t.shift_x(1))))
    }));
    out.push(check("main_identity", verify_main(cfg).map(|r| fail_if(!r.holds, || format!("H = {}, T(1+x,y) = {}", r.lhs, r.rhs)))));
    out.push(check("hilbert_series", {
        hilbert_P(cfg).map(|h| {
            let total: i64 = h.coeffs().iter().sum();
            let indep = m.independent_sets().len() as i64;
            fail_if(total != indep, || format!("dim P = {total}, independent sets = {indep}"))
        })
    }));
    out.push(check("top_flat_series", dim_P_top(cfg).map(|_| None)));
    out.push(check("nbc_pieces", nbc_dim_check(cfg).map(|r| fail_if(!r.holds, || format!("{:?}", r.per_flat)))));
    out.push(check("activity_basis", verify_activity_basis(cfg).map(|r| fail_if(!r.holds(), || format!("{r:?}")))));
    out.push(check("exact_complex_laws", {
        complex_law_cells(cfg).map(|cells| {
            let bad: Vec<String> = cells
                .iter()
                .filter(|c| c.dim != c.predicted)
                .map(|c| format!("i={} X={} k={}: {} vs {}", c.element, c.flat, c.k, c.dim, c.predicted))
                .collect();
            fail_if(!bad.is_empty(), || bad.join("; "))
        })
    }));
    out.push(check("crapo_bijection", crapo_all(&m).map(|_| None)));
    out.push(check("coboundary", coboundary_sides(cfg).map(|(l, r)| fail_if(l != r, || format!("{l} vs {r}")))));
    out.push(check("h_polynomial", h_polynomial_check(cfg).map(|r| fail_if(!r.holds, || format!("{} vs {}", r.from_hilbert, r.flat_sum)))));
    if m.rank() > 0 {
        out.push(check("spanning", verify_spanning(cfg).map(|r| fail_if(!r.holds, || format!("{r:?}")))));
    }
    out.push(check("parallel_extension", {
        (2..=opts.max_multiplicity)
            .map(|k| {
                let direct = tutte_dc(&cfg.parallel_extension(k)?);
                let formula = parallel_tutte_formula(&t, k, m.rank())?;
                Ok(fail_if(direct != formula, || format!("m={k}: {direct} vs {formula}")))
            })
            .find_map(|r: Result<Option<String>>| r.transpose())
            .transpose()
    }));
    if loop_free && cfg.n() > 0 {
        let order = opts.terao_order.min(crate::recip::PARALLEL_CAP / cfg.n());
        out.push(check("terao_series", verify_terao(cfg, order).map(|r| fail_if(!r.holds, || r.failures.join("; ")))));
    }
    out
}

/// Fails with the names of all failing checks.
pub fn require_all(checks: &[Check]) -> Result<()> {
    let bad: Vec<String> = checks
        .iter()
        .filter(|c| !c.holds)
        .map(|c| format!("{}: {}", c.name, c.detail.as_deref().unwrap_or("")))
        .collect();
    if bad.is_empty() {
        Ok(())
    } else {
        Err(Error::Inconsistent(bad.join("\n")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn fixtures_pass() {
        require_all(&run_suite(&fixtures::fano(), SuiteOptions::default())).unwrap();
        require_all(&run_suite(&fixtures::with_loop(), SuiteOptions::default())).unwrap();
        require_all(&run_suite(&fixtures::isthmus(), SuiteOptions::default())).unwrap();
        require_all(&run_suite(&fixtures::all_loops(2), SuiteOptions::default())).unwrap();
    }
}
