use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::exactalg::{Echelon, Field};

/// Sparse polynomial over a field in `nvars` variables.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiPoly<F: Field> {
    field: F,
    nvars: usize,
    terms: BTreeMap<Vec<u32>, F::Elem>,
}

impl<F: Field> MultiPoly<F> {
    pub fn zero(field: F, nvars: usize) -> Self {
        MultiPoly { field, nvars, terms: BTreeMap::new() }
    }

    pub fn one(field: F, nvars: usize) -> Self {
        let mut p = Self::zero(field, nvars);
        let one = p.field.one();
        p.add_term(vec![0; nvars], one);
        p
    }

    /// The linear form `sum_i coeffs[i] x_i`.
    pub fn linear(field: F, coeffs: &[F::Elem]) -> Self {
        let nvars = coeffs.len();
        let mut p = Self::zero(field, nvars);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; nvars];
            e[i] = 1;
            p.add_term(e, c.clone());
        }
        p
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: F::Elem) {
        assert_eq!(exps.len(), self.nvars);
        if self.field.is_zero(&c) {
            return;
        }
        let f = self.field.clone();
        match self.terms.get_mut(&exps) {
            Some(v) => {
                *v = f.add(v, &c);
                if f.is_zero(v) {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &F::Elem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> F::Elem {
        self.terms.get(exps).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// `Some(d)` if every term has total degree `d`; `None` for the zero
    /// polynomial or an inhomogeneous one.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>() as usize);
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    pub fn mul(&self, other: &MultiPoly<F>) -> MultiPoly<F> {
        assert_eq!(self.nvars, other.nvars);
        let f = &self.field;
        let mut out = Self::zero(f.clone(), self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, f.mul(ca, cb));
            }
        }
        out
    }

    pub fn to_string_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| if k == 1 { format!("{var}{i}") } else { format!("{var}{i}^{k}") })
                    .collect();
                let cs = self.field.to_string(c);
                match (mono.is_empty(), self.field.is_one(c)) {
                    (true, _) => cs,
                    (false, true) => mono.join("*"),
                    (false, false) => format!("{cs}*{}", mono.join("*")),
                }
            })
            .collect();
        parts.join(" + ")
    }
}

/// Monomials of each degree in graded lexicographic order, with the tables
/// needed to multiply dense homogeneous polynomials by linear forms.
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    nvars: usize,
    by_degree: Vec<Vec<Vec<u32>>>,
    index: Vec<HashMap<Vec<u32>, usize>>,
    // up[d][i][v]: index in degree d + 1 of (monomial i of degree d) * x_v
    up: Vec<Vec<Vec<usize>>>,
}

fn monomials(nvars: usize, d: u32) -> Vec<Vec<u32>> {
    if nvars == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in monomials(nvars - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

impl MonomialBasis {
    pub fn new(nvars: usize, max_degree: usize) -> Self {
        let by_degree: Vec<Vec<Vec<u32>>> = (0..=max_degree as u32).map(|d| monomials(nvars, d)).collect();
        let index: Vec<HashMap<Vec<u32>, usize>> = by_degree
            .iter()
            .map(|ms| ms.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect())
            .collect();
        let up = (0..max_degree)
            .map(|d| {
                by_degree[d]
                    .iter()
                    .map(|m| {
                        (0..nvars)
                            .map(|v| {
                                let mut e = m.clone();
                                e[v] += 1;
                                index[d + 1][&e]
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        MonomialBasis { nvars, by_degree, index, up }
    }

    pub fn max_degree(&self) -> usize {
        self.by_degree.len() - 1
    }

    pub fn count(&self, d: usize) -> usize {
        self.by_degree[d].len()
    }

    pub fn monomial(&self, d: usize, i: usize) -> &[u32] {
        &self.by_degree[d][i]
    }

    pub fn index_of(&self, exps: &[u32]) -> Option<usize> {
        let d = exps.iter().sum::<u32>() as usize;
        self.index.get(d)?.get(exps).copied()
    }

    /// Multiplies a dense degree-`d` polynomial by a linear form.
    pub fn times_linear<F: Field>(&self, field: &F, p: &[F::Elem], d: usize, form: &[F::Elem]) -> Vec<F::Elem> {
        let mut out = vec![field.zero(); self.count(d + 1)];
        for (i, c) in p.iter().enumerate() {
            if field.is_zero(c) {
                continue;
            }
            for (v, a) in form.iter().enumerate() {
                if !field.is_zero(a) {
                    let j = self.up[d][i][v];
                    out[j] = field.add(&out[j], &field.mul(c, a));
                }
            }
        }
        out
    }

    pub fn dense_one<F: Field>(&self, field: &F) -> Vec<F::Elem> {
        vec![field.one()]
    }

    pub fn to_dense<F: Field>(&self, p: &MultiPoly<F>, d: usize) -> Vec<F::Elem> {
        let mut out = vec![p.field.zero(); self.count(d)];
        for (e, c) in p.terms() {
            out[self.index[d][e]] = c.clone();
        }
        out
    }

    pub fn to_sparse<F: Field>(&self, field: &F, p: &[F::Elem], d: usize) -> MultiPoly<F> {
        let mut out = MultiPoly::zero(field.clone(), self.nvars);
        for (i, c) in p.iter().enumerate() {
            out.add_term(self.by_degree[d][i].clone(), c.clone());
        }
        out
    }
}

/// Dimension of the span of homogeneous polynomials of degree `d`.
pub fn span_dimension<F: Field>(field: &F, nvars: usize, polys: &[MultiPoly<F>], d: usize) -> Result<usize> {
    for p in polys {
        if p.nvars() != nvars {
            return Err(Error::Inconsistent(format!("expected {nvars} variables, found {}", p.nvars())));
        }
        if p.is_zero() {
            continue;
        }
        match p.homogeneous_degree() {
            Some(e) if e == d => {}
            Some(e) => return Err(Error::Inhomogeneous { expected: d, found: e }),
            None => {
                let found = p.terms().map(|(e, _)| e.iter().sum::<u32>() as usize).find(|&e| e != d).unwrap_or(d);
                return Err(Error::Inhomogeneous { expected: d, found });
            }
        }
    }
    let basis = MonomialBasis::new(nvars, d);
    let mut ech = Echelon::new(field.clone(), basis.count(d));
    for p in polys {
        if !p.is_zero() {
            ech.insert(basis.to_dense(p, d));
        }
        if ech.is_full() {
            break;
        }
    }
    Ok(ech.rank())
}
