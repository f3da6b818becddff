//! The `lintutte` command line.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::config::{AnyConfig, ConfigFile, VectorConfig};
use crate::corpus::random_fixed;
use crate::error::{Error, Result};
use crate::exactalg::{Field, FieldSpec};
use crate::matroid::Matroid;
use crate::poly::BivariatePoly;
use crate::pspace::{self, H_polynomial};
use crate::recip::{verify_terao, terao_series, PARALLEL_CAP};
use crate::spanning::{h_polynomial_check, verify_spanning};
use crate::subset::Subset;
use crate::suite::{run_suite, SuiteOptions};
use crate::tutte::{tutte_activities, tutte_corank_nullity, tutte_dc};
use crate::with_config;

#[derive(Parser, Debug)]
#[command(name = "lintutte", version, about = "Tutte polynomials and products of linear forms")]
pub struct Cli {
    /// Also write the JSON report to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Print the wall time to stderr.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Tutte polynomial by one or all algorithms.
    Tutte {
        config: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Dc)]
        method: Method,
    },
    /// Dimension table of the graded pieces and the H polynomial.
    Decompose {
        config: PathBuf,
        /// Compute a single cell: a flat given as 1-based labels, e.g. `1,2,4`.
        #[arg(long, requires = "k")]
        flat: Option<String>,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Hilbert series of the span of all products.
    Hilbert { config: PathBuf },
    /// Hilbert series of the reciprocal algebra.
    Recip {
        config: PathBuf,
        #[arg(long, default_value_t = 3)]
        trunc: usize,
    },
    /// Largest symmetric power contained in the span of all products.
    Spanning { config: PathBuf },
    /// Runs every identity on seeded random configurations.
    Verify {
        /// `n ell field trials seed`, e.g. `6 3 GF3 50 1`.
        #[arg(long, num_args = 5, value_names = ["N", "ELL", "FIELD", "TRIALS", "SEED"], required = true)]
        random: Vec<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Dc,
    StateSum,
    Activities,
    All,
}

/// The JSON report every subcommand produces.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub input_digest: String,
    pub field: String,
    pub n: usize,
    pub ell: usize,
    pub results: Value,
    pub holds: BTreeMap<String, bool>,
}

impl RunReport {
    pub fn all_hold(&self) -> bool {
        self.holds.values().all(|&h| h)
    }

    /// Pretty JSON with sorted keys.
    pub fn to_json(&self) -> String {
        let v = serde_json::to_value(self).expect("report serializes");
        serde_json::to_string_pretty(&v).expect("value serializes") + "\n"
    }
}

fn poly_json(p: &BivariatePoly) -> Value {
    json!({ "sparse": p.to_sparse_map(), "pretty": p.to_string() })
}

fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn load(path: &Path) -> Result<(AnyConfig, String)> {
    let text = std::fs::read(path)?;
    let file: ConfigFile = serde_json::from_slice(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    Ok((AnyConfig::from_file(&file)?, digest(&text)))
}

fn parse_field(s: &str) -> Result<FieldSpec> {
    let t: String = s.chars().filter(|c| !matches!(c, '(' | ')')).collect();
    let spec = match t.to_ascii_uppercase().as_str() {
        "Q" => FieldSpec::Rationals,
        u => match u.strip_prefix("GF").map(str::parse::<u64>) {
            Some(Ok(p)) => FieldSpec::Prime { p },
            _ => return Err(Error::Parse(format!("unknown field {s:?}; use GF<p> or Q"))),
        },
    };
    spec.validate()
}

fn parse_number(s: &str, what: &str) -> Result<u64> {
    let v = s.rsplit('=').next().unwrap_or(s);
    v.parse().map_err(|_| Error::Parse(format!("{what} must be a non-negative integer, got {s:?}")))
}

fn parse_flat(s: &str) -> Result<Subset> {
    let labels = s
        .split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| p.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad flat {s:?}"))))
        .collect::<Result<Vec<_>>>()?;
    if labels.contains(&0) {
        return Err(Error::Parse("flat labels are 1-based".into()));
    }
    Ok(Subset::from_one_based(&labels))
}

fn tutte_results<F: Field>(cfg: &VectorConfig<F>, method: Method) -> Result<(Value, BTreeMap<String, bool>)> {
    let mut holds = BTreeMap::new();
    let results = match method {
        Method::Dc => json!({ "dc": poly_json(&tutte_dc(cfg)) }),
        Method::StateSum => json!({ "state_sum": poly_json(&tutte_corank_nullity(&Matroid::from_config(cfg)?)) }),
        Method::Activities => json!({ "activities": poly_json(&tutte_activities(&Matroid::from_config(cfg)?)) }),
        Method::All => {
            let m = Matroid::from_config(cfg)?;
            let (dc, ss, act) = (tutte_dc(cfg), tutte_corank_nullity(&m), tutte_activities(&m));
            holds.insert("three_way_equal".into(), dc == ss && ss == act);
            json!({ "dc": poly_json(&dc), "state_sum": poly_json(&ss), "activities": poly_json(&act) })
        }
    };
    Ok((results, holds))
}

fn decompose_results<F: Field>(cfg: &VectorConfig<F>, cell: Option<(Subset, usize)>) -> Result<(Value, BTreeMap<String, bool>)> {
    let mut holds = BTreeMap::new();
    if let Some((x, k)) = cell {
        let d = pspace::cell_dimension(cfg, x, k)?;
        return Ok((json!({ "flat": x, "k": k, "dim": d }), holds));
    }
    let dt = pspace::dim_table(cfg).map_err(|e| match e {
        Error::TooLarge { what, size, cap } => Error::Parse(format!(
            "{what} needs n <= {cap}, got {size}; use --flat and --k for a single cell"
        )),
        other => other,
    })?;
    let h = H_polynomial(&dt);
    let shifted = tutte_dc(cfg).shift_x(1);
    holds.insert("main_identity".into(), h == shifted);
    Ok((json!({ "table": dt.to_records(), "H": poly_json(&h), "T_shifted": poly_json(&shifted) }), holds))
}

fn hilbert_results<F: Field>(cfg: &VectorConfig<F>) -> Result<(Value, BTreeMap<String, bool>)> {
    let mut holds = BTreeMap::new();
    let dt = pspace::dim_table(cfg)?;
    let direct = pspace::hilbert_from_table(&dt, |_, _, _| true);
    let via = pspace::hilbert_from_tutte(&tutte_dc(cfg), cfg.n(), cfg.ell())?;
    let indep = Matroid::from_config(cfg)?.independent_sets().len();
    let total: i64 = direct.coeffs().iter().sum();
    holds.insert("matches_tutte".into(), direct.to_poly() == via);
    holds.insert("total_is_independent_sets".into(), total == indep as i64);
    let top = pspace::dim_P_top(cfg);
    holds.insert("top_flat".into(), top.is_ok());
    let nbc = pspace::nbc_dim_check(cfg)?;
    holds.insert("nbc_pieces".into(), nbc.holds);
    Ok((
        json!({
            "series": direct.coeffs(),
            "via_tutte": via.coeffs(),
            "pretty": direct.to_poly().to_string(),
            "independent_sets": indep,
            "top_flat_series": top.map(|s| s.coeffs().to_vec()).unwrap_or_default(),
            "nbc_series": nbc.series.coeffs(),
        }),
        holds,
    ))
}

fn recip_results<F: Field>(cfg: &VectorConfig<F>, trunc: usize) -> Result<(Value, BTreeMap<String, bool>)> {
    let mut holds = BTreeMap::new();
    let series = terao_series(cfg, trunc)?;
    let checked = trunc.min(PARALLEL_CAP / cfg.n().max(1));
    let report = verify_terao(cfg, checked)?;
    holds.insert("dims_match_series".into(), report.holds);
    let per_flat: Vec<Value> = series
        .per_flat
        .iter()
        .map(|f| json!({ "flat": f.flat, "rank": f.rank, "nbc_bases": f.nbc_bases, "series": f.series.coeffs() }))
        .collect();
    Ok((
        json!({
            "series": series.total.coeffs(),
            "closed_form": series.closed_form.coeffs(),
            "per_flat": per_flat,
            "dims_checked_through": checked,
            "dims": report.dims,
            "failures": report.failures,
        }),
        holds,
    ))
}

fn spanning_results<F: Field>(cfg: &VectorConfig<F>) -> Result<(Value, BTreeMap<String, bool>)> {
    let mut holds = BTreeMap::new();
    let s = verify_spanning(cfg)?;
    let h = h_polynomial_check(cfg)?;
    holds.insert("spanning".into(), s.holds);
    holds.insert("flat_sum".into(), h.holds);
    Ok((
        json!({
            "max_spanned_degree": s.max_spanned_degree,
            "min_cocircuit_size": s.min_cocircuit_size,
            "downward_closed": s.downward_closed,
            "hilbert": s.hilbert.coeffs(),
            "h": h.from_hilbert.coeffs(),
            "h_pretty": h.from_hilbert.to_string(),
            "leading_term": h.leading,
        }),
        holds,
    ))
}

fn verify_results(args: &[String]) -> Result<RunReport> {
    let n = parse_number(&args[0], "n")? as usize;
    let ell = parse_number(&args[1], "ell")? as usize;
    let field = parse_field(&args[2])?;
    let trials = parse_number(&args[3], "trials")? as usize;
    let seed = parse_number(&args[4], "seed")?;
    let corpus = random_fixed(field, n, ell, trials, seed)?;
    let mut holds = BTreeMap::new();
    let mut cases = Vec::new();
    for (i, file) in corpus.iter().enumerate() {
        let any = AnyConfig::from_file(file)?;
        let checks = with_config!(&any, c => run_suite(c, SuiteOptions::default()));
        holds.insert(format!("case_{i:04}"), checks.iter().all(|c| c.holds));
        cases.push(json!({ "index": i, "config": file, "checks": checks }));
    }
    Ok(RunReport {
        command: "verify".into(),
        input_digest: digest(format!("{n} {ell} {field} {trials} {seed}").as_bytes()),
        field: field.to_string(),
        n,
        ell,
        results: json!({ "cases": cases, "trials": trials, "seed": seed }),
        holds,
    })
}

/// Runs one command and returns its report.
pub fn run(cli: &Cli) -> Result<RunReport> {
    let (name, path) = match &cli.command {
        Command::Verify { random } => return verify_results(random),
        Command::Tutte { config, .. } => ("tutte", config),
        Command::Decompose { config, .. } => ("decompose", config),
        Command::Hilbert { config } => ("hilbert", config),
        Command::Recip { config, .. } => ("recip", config),
        Command::Spanning { config } => ("spanning", config),
    };
    let (any, input_digest) = load(path)?;
    let (results, holds) = with_config!(&any, cfg => match &cli.command {
        Command::Tutte { method, .. } => tutte_results(cfg, *method),
        Command::Decompose { flat, k, .. } => {
            let cell = match (flat, k) {
                (Some(f), Some(k)) => Some((parse_flat(f)?, *k)),
                _ => None,
            };
            decompose_results(cfg, cell)
        }
        Command::Hilbert { .. } => hilbert_results(cfg),
        Command::Recip { trunc, .. } => recip_results(cfg, *trunc),
        Command::Spanning { .. } => spanning_results(cfg),
        Command::Verify { .. } => unreachable!("handled above"),
    })?;
    Ok(RunReport {
        command: name.into(),
        input_digest,
        field: any.spec().to_string(),
        n: any.n(),
        ell: any.ell(),
        results,
        holds,
    })
}

/// Parses arguments, runs, prints, and returns the process exit code:
/// 0 if every check holds, 1 if one fails, 2 on an error.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let start = Instant::now();
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let text = report.to_json();
    print!("{text}");
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, &text) {
            eprintln!("error: writing {}: {e}", path.display());
            return 2;
        }
    }
    if cli.timing {
        eprintln!("wall time: {:.3}s", start.elapsed().as_secs_f64());
    }
    if report.all_hold() {
        0
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_names() {
        assert_eq!(parse_field("GF3").unwrap(), FieldSpec::Prime { p: 3 });
        assert_eq!(parse_field("GF(5)").unwrap(), FieldSpec::Prime { p: 5 });
        assert_eq!(parse_field("q").unwrap(), FieldSpec::Rationals);
        assert!(parse_field("GF4").is_err());
        assert_eq!(parse_number("seed=1", "seed").unwrap(), 1);
    }

    #[test]
    fn flats_parse_one_based() {
        assert_eq!(parse_flat("1,3").unwrap(), Subset::from_indices([0, 2]));
        assert!(parse_flat("0").is_err());
    }
}
