//! The crate's results against brute-force computations over GF(p).

mod common;

use common::{fano_vectors, Oracle};
use lintutte::config::{AnyConfig, ConfigFile};
use lintutte::corpus::{gf2_classes, random_mixed};
use lintutte::exactalg::{FieldSpec, PrimeField};
use lintutte::pspace::{dim_table, graded_dims_direct, product_form, span_dimension, MultiPoly};
use lintutte::recip::{dim_C, dim_C_via_tutte, terao_series};
use lintutte::tutte::{char_poly, tutte_dc};
use lintutte::{BivariatePoly, Matroid, Subset, VectorConfig};

fn prime_corpus() -> Vec<(ConfigFile, VectorConfig<PrimeField>)> {
    let mut files = gf2_classes(5);
    files.extend(random_mixed(FieldSpec::Prime { p: 3 }, 6, 3, 25, 11).unwrap());
    files.extend(random_mixed(FieldSpec::Prime { p: 5 }, 6, 4, 25, 12).unwrap());
    files
        .into_iter()
        .map(|f| match AnyConfig::from_file(&f).unwrap() {
            AnyConfig::Prime(c) => (f, c),
            AnyConfig::Rational(_) => unreachable!(),
        })
        .collect()
}

fn oracle(file: &ConfigFile) -> Oracle {
    let FieldSpec::Prime { p } = file.field else { unreachable!() };
    Oracle::new(p, file.ell.unwrap(), &file.vectors)
}

#[test]
fn tutte_matches_state_sum_oracle() {
    for (file, cfg) in prime_corpus() {
        let expected = BivariatePoly::from_terms(oracle(&file).tutte().into_iter().map(|((a, b), c)| (a, b, c)));
        assert_eq!(tutte_dc(&cfg), expected, "{:?}", file.vectors);
    }
}

#[test]
fn char_poly_matches_mobius() {
    for (file, cfg) in prime_corpus() {
        let mobius = oracle(&file).char_poly_mobius();
        let ours = char_poly(&cfg);
        let rank = Matroid::from_config(&cfg).unwrap().rank();
        let padded: Vec<i64> = (0..=rank).map(|k| ours.coeff(k)).collect();
        assert_eq!(padded, mobius, "{:?}", file.vectors);
    }
}

#[test]
fn fano_char_poly() {
    let fano = lintutte::fixtures::fano();
    assert_eq!(char_poly(&fano).coeffs(), &[-8, 14, -7, 1]);
}

#[test]
fn dim_tables_match_brute_force() {
    for (file, cfg) in prime_corpus() {
        let o = oracle(&file);
        let dt = dim_table(&cfg).unwrap();
        let flats: Vec<u64> = dt.rows.iter().map(|r| r.flat.bits()).collect();
        let mut expected = o.flats();
        expected.sort_unstable();
        let mut got = flats.clone();
        got.sort_unstable();
        assert_eq!(got, expected);
        for (x, _, k, d) in dt.cells() {
            assert_eq!(d, o.cell(x.bits(), k), "{:?} X={x} k={k}", file.vectors);
        }
        let direct: Vec<usize> = graded_dims_direct(&cfg).unwrap();
        assert_eq!(direct, o.graded_dims());
        assert_eq!(dt.total(), o.independent_count());
    }
}

#[test]
fn reciprocal_dims_match_brute_force() {
    for (file, cfg) in prime_corpus() {
        if (0..cfg.n()).any(|i| cfg.is_loop(i)) || cfg.n() == 0 || cfg.n() > 5 {
            continue;
        }
        let o = oracle(&file);
        let m = Matroid::from_config(&cfg).unwrap();
        let series = terao_series(&cfg, 3).unwrap();
        for k in 0..=3usize.min(24 / cfg.n()) {
            let mut sum = 0;
            for (x, _) in m.flats().iter() {
                let d = dim_C(&cfg, x, k).unwrap();
                assert_eq!(d, dim_C_via_tutte(&cfg, x, k).unwrap());
                sum += d;
            }
            assert_eq!(sum, o.reciprocal_dim(k as u32), "{:?} k={k}", file.vectors);
            assert_eq!(sum as i64, series.total.coeff(k));
        }
    }
}

#[test]
fn fano_reciprocal_goldens() {
    let o = Oracle::new(2, 3, &fano_vectors());
    let direct: Vec<usize> = (0..=3).map(|k| o.reciprocal_dim(k)).collect();
    assert_eq!(direct, vec![1, 7, 21, 43]);
    let fano = lintutte::fixtures::fano();
    assert_eq!(terao_series(&fano, 4).unwrap().total.coeffs(), &[1, 7, 21, 43, 73]);
}

#[test]
fn product_form_by_hand() {
    let f = PrimeField::new(2).unwrap();
    let cfg = VectorConfig::from_i64(f, 3, &[vec![1, 1, 0], vec![0, 1, 1], vec![0, 0, 1]]).unwrap();
    let p = product_form(&cfg, Subset::from_indices([0, 1]));
    let terms: Vec<(Vec<u32>, u64)> = p.terms().map(|(e, c)| (e.to_vec(), *c)).collect();
    let mut expected = vec![(vec![0, 1, 1], 1), (vec![0, 2, 0], 1), (vec![1, 0, 1], 1), (vec![1, 1, 0], 1)];
    let mut got = terms;
    got.sort();
    expected.sort();
    assert_eq!(got, expected);
    let dup = vec![p.clone(), p.clone(), MultiPoly::zero(f, 3)];
    assert_eq!(span_dimension(&f, 3, &dup, 2).unwrap(), 1);
    assert_eq!(span_dimension(&f, 3, &[MultiPoly::zero(f, 3)], 2).unwrap(), 0);
}

#[test]
fn table_sums_to_all_products_up_to_ten() {
    for file in random_mixed(FieldSpec::Prime { p: 3 }, 10, 4, 12, 21).unwrap() {
        let AnyConfig::Prime(cfg) = AnyConfig::from_file(&file).unwrap() else { unreachable!() };
        let dt = dim_table(&cfg).unwrap();
        let by_degree = lintutte::pspace::hilbert_from_table(&dt, |_, _, _| true);
        let direct = graded_dims_direct(&cfg).unwrap();
        let direct: Vec<i64> = direct.iter().map(|&d| d as i64).collect();
        assert_eq!(by_degree.coeffs(), direct.as_slice(), "{:?}", file.vectors);
        assert_eq!(dt.total(), Matroid::from_config(&cfg).unwrap().independent_sets().len());
    }
}
