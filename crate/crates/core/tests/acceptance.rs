//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails or exceeds its time bound.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::{fano_vectors, Oracle};
use lintutte::config::{AnyConfig, ConfigFile};
use lintutte::corpus::{gf2_classes, random_fixed, random_mixed};
use lintutte::exactalg::FieldSpec;
use lintutte::fixtures;
use lintutte::pspace::{
    complex_law_cells, dim_table, hilbert_P, hilbert_from_tutte, verify_activity_basis, verify_main, DimTable,
};
use lintutte::recip::{dim_C, terao_series};
use lintutte::spanning::{h_polynomial_check, max_spanned_degree, min_cocircuit_size, verify_spanning};
use lintutte::tutte::{
    coboundary_sides, crapo_all, parallel_tutte_formula, tutte_activities, tutte_corank_nullity, tutte_dc,
};
use lintutte::{with_config, BivariatePoly, Matroid};

type Check = Result<String, String>;
type Criterion<'a> = (&'static str, Option<Duration>, Box<dyn Fn() -> Check + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn oracle_of(file: &ConfigFile) -> Option<Oracle> {
    match file.field {
        FieldSpec::Prime { p } => Some(Oracle::new(p, file.ell.unwrap_or(file.vectors.first().map_or(0, Vec::len)), &file.vectors)),
        FieldSpec::Rationals => None,
    }
}

fn from_map(m: &std::collections::BTreeMap<(u32, u32), i64>) -> BivariatePoly {
    BivariatePoly::from_terms(m.iter().map(|(&(a, b), &c)| (a, b, c)))
}

struct Corpora {
    gf2_5: Vec<ConfigFile>,
    gf2_6: Vec<ConfigFile>,
    random: Vec<ConfigFile>,
    small_random: Vec<ConfigFile>,
}

fn fields() -> [FieldSpec; 3] {
    [FieldSpec::Prime { p: 3 }, FieldSpec::Prime { p: 5 }, FieldSpec::Rationals]
}

impl Corpora {
    fn build() -> Self {
        let mut random = Vec::new();
        let mut small_random = Vec::new();
        for (i, f) in fields().into_iter().enumerate() {
            random.extend(random_mixed(f, 7, 4, 50, 100 + i as u64).expect("corpus"));
            small_random.extend(random_mixed(f, 6, 4, 30, 200 + i as u64).expect("corpus"));
        }
        let gf2_6 = gf2_classes(6);
        let gf2_5 = gf2_6.iter().filter(|c| c.vectors.len() <= 5).cloned().collect();
        Corpora { gf2_5, gf2_6, random, small_random }
    }

    /// The corpus of the main identity: binary classes up to five elements
    /// and the seeded random configurations.
    fn main_corpus(&self) -> impl Iterator<Item = &ConfigFile> {
        self.gf2_5.iter().chain(&self.random)
    }
}

fn fano_tutte() -> Check {
    let fano = fixtures::fano();
    let m = ok(Matroid::from_config(&fano))?;
    let x = BivariatePoly::x() - BivariatePoly::one();
    let y = BivariatePoly::y();
    let c = BivariatePoly::constant;
    let expected = x.pow(3) + c(7) * x.pow(2) + c(14) * x.clone() + c(7) * x * y.clone() + y.pow(4) + c(3) * y.pow(3)
        + c(6) * y.pow(2)
        + c(10) * y
        + c(8);
    let dc = tutte_dc(&fano);
    let ss = tutte_corank_nullity(&m);
    let act = tutte_activities(&m);
    ensure(dc == expected, || format!("deletion-contraction gave {dc}"))?;
    ensure(ss == expected, || format!("state sum gave {ss}"))?;
    ensure(act == expected, || format!("activities gave {act}"))?;
    Ok(format!("T = {expected}"))
}

fn fano_table() -> Check {
    let fano = fixtures::fano();
    let dt = ok(dim_table(&fano))?;
    let oracle = Oracle::new(2, 3, &fano_vectors());
    let e = fano.ground();
    let mut seen = [0usize; 4];
    for row in &dt.rows {
        let expected: Vec<usize> = match row.rank {
            0 => vec![1],
            1 => vec![1],
            2 => vec![2, 1],
            3 => vec![8, 10, 6, 3, 1],
            _ => return Err(format!("unexpected rank {}", row.rank)),
        };
        ensure(row.dims == expected, || format!("flat {} has dims {:?}", row.flat, row.dims))?;
        ensure(row.rank != 3 || row.flat == e, || "rank-3 flat other than E".into())?;
        for (j, &d) in row.dims.iter().enumerate() {
            let o = oracle.cell(row.flat.bits(), row.rank + j);
            ensure(o == d, || format!("oracle gives {o} for ({}, {})", row.flat, row.rank + j))?;
        }
        seen[row.rank] += 1;
    }
    ensure(seen == [1, 7, 7, 1], || format!("flats per rank {seen:?}"))?;
    Ok("16 flats, every cell confirmed by brute force".into())
}

fn main_identity(c: &Corpora) -> Check {
    let r = ok(verify_main(&fixtures::fano()))?;
    ensure(r.holds, || "fails on Fano".into())?;
    let mut count = 1;
    for file in c.main_corpus() {
        let any = ok(AnyConfig::from_file(file))?;
        let (report, t) = with_config!(&any, cfg => (verify_main(cfg), tutte_dc(cfg)));
        let report = ok(report)?;
        ensure(report.holds, || format!("fails on {:?}: H = {}, T(1+x,y) = {}", file.vectors, report.lhs, report.rhs))?;
        if let Some(o) = oracle_of(file) {
            let ot = from_map(&o.tutte());
            ensure(ot == t, || format!("oracle Tutte {ot} vs {t} on {:?}", file.vectors))?;
        }
        count += 1;
    }
    Ok(format!("{count} configurations ({} binary classes, {} random)", c.gf2_5.len(), c.random.len()))
}

fn fano_hilbert() -> Check {
    let fano = fixtures::fano();
    let h = ok(hilbert_P(&fano))?;
    ensure(h.coeffs() == [1, 3, 6, 10, 15, 14, 7, 1], || format!("series {:?}", h.coeffs()))?;
    let via = ok(hilbert_from_tutte(&tutte_dc(&fano), 7, 3))?;
    ensure(via == h.to_poly(), || format!("Tutte substitution gives {via}"))?;
    let oracle = Oracle::new(2, 3, &fano_vectors());
    let graded = oracle.graded_dims();
    ensure(graded.iter().map(|&d| d as i64).eq(h.coeffs().iter().copied()), || format!("brute force {graded:?}"))?;
    let total: i64 = h.coeffs().iter().sum();
    let indep = oracle.independent_count();
    ensure(total == 57 && indep == 57, || format!("sum {total}, independent sets {indep}"))?;
    Ok("1+3t+6t^2+10t^3+15t^4+14t^5+7t^6+t^7, 57 independent sets".into())
}

fn spanning(c: &Corpora) -> Check {
    let fano = fixtures::fano();
    let (a, b) = (ok(max_spanned_degree(&fano))?, ok(min_cocircuit_size(&fano))?);
    ensure(a == 4 && b == 4, || format!("Fano: {a} vs {b}"))?;
    let mut count = 1;
    let mut skipped = 0;
    for file in c.main_corpus() {
        let any = ok(AnyConfig::from_file(file))?;
        if any.ell() == 0 {
            skipped += 1;
            continue;
        }
        let r = ok(with_config!(&any, cfg => verify_spanning(cfg)))?;
        ensure(r.holds, || format!("{r:?} on {:?}", file.vectors))?;
        count += 1;
    }
    Ok(format!("{count} configurations of positive rank ({skipped} of rank zero skipped)"))
}

fn terao() -> Check {
    let fano = fixtures::fano();
    let m = ok(Matroid::from_config(&fano))?;
    let oracle = Oracle::new(2, 3, &fano_vectors());
    let mut dims = Vec::new();
    for k in 0..=3 {
        let mut sum = 0;
        for (x, _) in m.flats().iter() {
            sum += ok(dim_C(&fano, x, k))?;
        }
        let direct = oracle.reciprocal_dim(k as u32);
        ensure(direct == sum, || format!("k={k}: flat sum {sum}, direct span {direct}"))?;
        dims.push(sum as i64);
    }
    ensure(dims == [1, 7, 21, 43], || format!("dims {dims:?}"))?;
    let series = ok(terao_series(&fano, 3))?;
    ensure(series.closed_form.coeffs() == dims.as_slice(), || format!("closed form {:?}", series.closed_form.coeffs()))?;
    Ok("[1, 7, 21, 43] from dimensions, brute force and closed form".into())
}

fn parallel_law() -> Check {
    let mut files = gf2_classes(4);
    for f in [FieldSpec::Prime { p: 3 }, FieldSpec::Rationals] {
        for n in 1..=4 {
            for ell in 1..=n.min(3) {
                files.extend(ok(random_fixed(f, n, ell, 5, 300 + n as u64 * 10 + ell as u64))?);
            }
        }
    }
    let mut count = 0;
    for file in &files {
        let any = ok(AnyConfig::from_file(file))?;
        with_config!(&any, cfg => {
            let t = tutte_dc(cfg);
            let r = cfg.ell();
            for mult in [2, 3] {
                let direct = tutte_dc(&ok(cfg.parallel_extension(mult))?);
                let formula = ok(parallel_tutte_formula(&t, mult, r))?;
                ensure(direct == formula, || format!("m={mult} on {:?}: {direct} vs {formula}", file.vectors))?;
            }
        });
        count += 1;
    }
    for n in 1..=4 {
        for r in 1..=n {
            let cfg = fixtures::uniform(r, n);
            let t = tutte_dc(&cfg);
            for mult in [2, 3] {
                let direct = tutte_dc(&ok(cfg.parallel_extension(mult))?);
                ensure(direct == ok(parallel_tutte_formula(&t, mult, r))?, || format!("U({r},{n}) m={mult}"))?;
            }
            count += 1;
        }
    }
    Ok(format!("{count} configurations with n <= 4, m in {{2, 3}}"))
}

fn activity_and_crapo(c: &Corpora) -> Check {
    let mut count = 0;
    for file in c.main_corpus() {
        let any = ok(AnyConfig::from_file(file))?;
        let r = ok(with_config!(&any, cfg => verify_activity_basis(cfg)))?;
        ensure(r.holds(), || format!("{r:?} on {:?}", file.vectors))?;
        count += 1;
    }
    let mut crapo = 0;
    for file in c.gf2_6.iter().chain(&c.small_random) {
        let any = ok(AnyConfig::from_file(file))?;
        let m = ok(with_config!(&any, cfg => Matroid::from_config(cfg)))?;
        let all = ok(crapo_all(&m))?;
        ensure(all.len() == 1 << m.n(), || "not every subset decomposed".into())?;
        crapo += 1;
    }
    Ok(format!("activity basis on {count} configurations, unique basis-activity decomposition of every subset on {crapo}"))
}

fn complex_laws(c: &Corpora) -> Check {
    let mut cells = 0;
    let mut configs = 0;
    for file in c.gf2_6.iter().chain(&c.small_random) {
        let any = ok(AnyConfig::from_file(file))?;
        let list = ok(with_config!(&any, cfg => complex_law_cells(cfg)))?;
        for cell in &list {
            ensure(cell.dim == cell.predicted, || format!("{cell:?} on {:?}", file.vectors))?;
        }
        cells += list.len();
        configs += 1;
    }
    Ok(format!("{cells} cells on {configs} configurations with n <= 6"))
}

fn coboundary_and_h(c: &Corpora) -> Check {
    let mut leading_ok = 0;
    let mut leading_total = 0;
    for file in &c.gf2_5 {
        let any = ok(AnyConfig::from_file(file))?;
        let (l, r) = ok(with_config!(&any, cfg => coboundary_sides(cfg)))?;
        ensure(l == r, || format!("coboundary {l} vs {r} on {:?}", file.vectors))?;
        let h = ok(with_config!(&any, cfg => h_polynomial_check(cfg)))?;
        ensure(h.holds, || format!("h: {} vs {} on {:?}", h.from_hilbert, h.flat_sum, file.vectors))?;
        if let Some(lead) = h.leading {
            leading_total += 1;
            leading_ok += usize::from(lead.holds);
        }
    }
    Ok(format!(
        "{} binary classes; leading-term shape of h held on {leading_ok} of {leading_total} (reported only)",
        c.gf2_5.len()
    ))
}

fn same_table(a: &DimTable, b: &DimTable) -> bool {
    a == b
}

fn characteristic_independence() -> Check {
    let rational = ok(random_mixed(FieldSpec::Rationals, 7, 4, 50, 400))?;
    let p = 10007;
    for file in &rational {
        let q = ok(AnyConfig::from_file(file))?;
        let modp = ok(AnyConfig::from_file(&ConfigFile { field: FieldSpec::Prime { p }, ..file.clone() }))?;
        let tq = ok(with_config!(&q, cfg => dim_table(cfg)))?;
        let tp = ok(with_config!(&modp, cfg => dim_table(cfg)))?;
        ensure(same_table(&tq, &tp), || format!("tables differ on {:?}", file.vectors))?;
    }
    Ok(format!("{} integer matrices over Q and GF({p})", rational.len()))
}

fn main() {
    let corpora_start = Instant::now();
    let c = Corpora::build();
    println!(
        "corpus: {} binary classes (n <= 6), {} random, built in {:.2}s",
        c.gf2_6.len(),
        c.random.len() + c.small_random.len(),
        corpora_start.elapsed().as_secs_f64()
    );

    let criteria: Vec<Criterion<'_>> = vec![
        ("Fano Tutte polynomial by three algorithms", Some(Duration::from_secs(1)), Box::new(fano_tutte)),
        ("Fano dimension table", Some(Duration::from_secs(10)), Box::new(fano_table)),
        ("H(x,y) = T(1+x,y) on the corpus", Some(Duration::from_secs(120)), Box::new(|| main_identity(&c))),
        ("Fano Hilbert series", None, Box::new(fano_hilbert)),
        ("spanning degree equals smallest cocircuit", None, Box::new(|| spanning(&c))),
        ("Fano reciprocal dimensions", Some(Duration::from_secs(120)), Box::new(terao)),
        ("parallel extension formula", None, Box::new(parallel_law)),
        ("activity basis and subset decomposition", None, Box::new(|| activity_and_crapo(&c))),
        ("deletion-contraction dimension laws", None, Box::new(|| complex_laws(&c))),
        ("coboundary and flat-sum h(t)", None, Box::new(|| coboundary_and_h(&c))),
        ("same tables over Q and GF(p)", None, Box::new(characteristic_independence)),
    ];
    let mut failures = 0;
    for (i, (label, bound, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let elapsed = start.elapsed();
        let outcome = match (outcome, bound) {
            (Ok(_), Some(b)) if elapsed > *b => Err(format!("took {:.2}s, bound {:.0}s", elapsed.as_secs_f64(), b.as_secs_f64())),
            (o, _) => o,
        };
        let bound_text = bound.map_or(String::new(), |b| format!(" / {:.0}s", b.as_secs_f64()));
        match outcome {
            Ok(note) => println!("PASS {:>2} {label} [{:.2}s{bound_text}]: {note}", i + 1, elapsed.as_secs_f64()),
            Err(why) => {
                failures += 1;
                println!("FAIL {:>2} {label} [{:.2}s{bound_text}]: {why}", i + 1, elapsed.as_secs_f64());
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
