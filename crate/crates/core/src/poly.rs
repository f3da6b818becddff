//! Integer polynomials in one and two variables, and truncated power series.
//!
//! Coefficients are `i64`; every arithmetic step is overflow-checked and
//! panics rather than wrapping.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::error::{Error, Result};

fn cadd(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("integer coefficient overflow")
}

fn cmul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("integer coefficient overflow")
}

/// `binomial(n, k)` as an exact integer.
pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i64 = 1;
    for i in 0..k {
        acc = cmul(acc, n - i) / (i + 1);
    }
    acc
}

fn write_term(f: &mut fmt::Formatter<'_>, first: bool, c: i64, mono: &str) -> fmt::Result {
    let sign = if c < 0 { "-" } else { "+" };
    if first {
        if c < 0 {
            write!(f, "-")?;
        }
    } else {
        write!(f, " {sign} ")?;
    }
    let a = c.unsigned_abs();
    if mono.is_empty() {
        write!(f, "{a}")
    } else if a == 1 {
        write!(f, "{mono}")
    } else {
        write!(f, "{a}{mono}")
    }
}

fn power_str(var: &str, e: u32) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

/// Sparse polynomial in `x` and `y` with integer coefficients. No zero
/// coefficient is ever stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BivariatePoly {
    terms: BTreeMap<(u32, u32), i64>,
}

impl BivariatePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn x() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn monomial(c: i64, xe: u32, ye: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(xe, ye, c);
        p
    }

    /// Builds from `(x-exponent, y-exponent, coefficient)` triples.
    pub fn from_terms<I: IntoIterator<Item = (u32, u32, i64)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (a, b, c) in it {
            p.add_term(a, b, c);
        }
        p
    }

    pub fn add_term(&mut self, xe: u32, ye: u32, c: i64) {
        if c == 0 {
            return;
        }
        let slot = self.terms.entry((xe, ye)).or_insert(0);
        *slot = cadd(*slot, c);
        if *slot == 0 {
            self.terms.remove(&(xe, ye));
        }
    }

    pub fn coeff(&self, xe: u32, ye: u32) -> i64 {
        self.terms.get(&(xe, ye)).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, i64)> + '_ {
        self.terms.iter().map(|(&(a, b), &c)| (a, b, c))
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.0).max()
    }

    pub fn degree_y(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.1).max()
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes `x -> px`, `y -> py`.
    pub fn compose(&self, px: &BivariatePoly, py: &BivariatePoly) -> Self {
        let dx = self.degree_x().unwrap_or(0);
        let dy = self.degree_y().unwrap_or(0);
        let xp: Vec<_> = std::iter::successors(Some(Self::one()), |p| Some(p * px)).take(dx as usize + 1).collect();
        let yp: Vec<_> = std::iter::successors(Some(Self::one()), |p| Some(p * py)).take(dy as usize + 1).collect();
        let mut out = Self::zero();
        for (a, b, c) in self.terms() {
            out = out + &(&xp[a as usize] * &yp[b as usize]) * &Self::constant(c);
        }
        out
    }

    /// `p(x + 1, y)`, the shift relating the Tutte polynomial to the
    /// corank-nullity generating function.
    pub fn shift_x(&self, by: i64) -> Self {
        self.compose(&(Self::x() + Self::constant(by)), &Self::y())
    }

    pub fn eval(&self, x: i64, y: i64) -> i64 {
        self.terms().fold(0, |acc, (a, b, c)| cadd(acc, cmul(cmul(c, x.pow(a)), y.pow(b))))
    }

    /// Substitutes `y -> value`, leaving a polynomial in `x`.
    pub fn at_y(&self, value: i64) -> UniPoly {
        let mut out = UniPoly::zero();
        for (a, b, c) in self.terms() {
            out = out + UniPoly::monomial(cmul(c, value.pow(b)), a as usize);
        }
        out
    }

    /// Substitutes `x -> value`, leaving a polynomial in `y`.
    pub fn at_x(&self, value: i64) -> UniPoly {
        let mut out = UniPoly::zero();
        for (a, b, c) in self.terms() {
            out = out + UniPoly::monomial(cmul(c, value.pow(a)), b as usize);
        }
        out
    }

    /// Embeds a polynomial in `y`.
    pub fn from_y_poly(p: &UniPoly) -> Self {
        Self::from_terms(p.coeffs().iter().enumerate().map(|(k, &c)| (0, k as u32, c)))
    }

    /// Exact division by a monic polynomial in `y` alone.
    pub fn div_exact_by_y(&self, d: &UniPoly) -> Result<Self> {
        let mut by_x: BTreeMap<u32, UniPoly> = BTreeMap::new();
        for (a, b, c) in self.terms() {
            let e = by_x.entry(a).or_insert_with(UniPoly::zero);
            *e = e.clone() + UniPoly::monomial(c, b as usize);
        }
        let mut out = Self::zero();
        for (a, p) in by_x {
            let (q, r) = p.div_rem_monic(d);
            if !r.is_zero() {
                return Err(Error::NotPolynomial);
            }
            for (k, &c) in q.coeffs().iter().enumerate() {
                out.add_term(a, k as u32, c);
            }
        }
        Ok(out)
    }

    /// Sparse `{"x^a y^b": coeff}` map with sorted keys.
    pub fn to_sparse_map(&self) -> BTreeMap<String, i64> {
        self.terms().map(|(a, b, c)| (format!("x^{a} y^{b}"), c)).collect()
    }
}

impl fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // descending x degree, then descending y degree
        for (i, (&(a, b), &c)) in self.terms.iter().rev().enumerate() {
            let mono = format!("{}{}", power_str("x", a), power_str("y", b));
            let mono = if a > 0 && b > 0 { format!("{}*{}", power_str("x", a), power_str("y", b)) } else { mono };
            write_term(f, i == 0, c, &mono)?;
        }
        Ok(())
    }
}

impl fmt::Debug for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for BivariatePoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_sparse_map().serialize(s)
    }
}

impl Add<&BivariatePoly> for &BivariatePoly {
    type Output = BivariatePoly;
    fn add(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = self.clone();
        for (a, b, c) in rhs.terms() {
            out.add_term(a, b, c);
        }
        out
    }
}

impl Sub<&BivariatePoly> for &BivariatePoly {
    type Output = BivariatePoly;
    fn sub(self, rhs: &BivariatePoly) -> BivariatePoly {
        self + &(-rhs)
    }
}

impl Mul<&BivariatePoly> for &BivariatePoly {
    type Output = BivariatePoly;
    fn mul(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = BivariatePoly::zero();
        for (a, b, c) in self.terms() {
            for (d, e, g) in rhs.terms() {
                out.add_term(a + d, b + e, cmul(c, g));
            }
        }
        out
    }
}

impl Neg for &BivariatePoly {
    type Output = BivariatePoly;
    fn neg(self) -> BivariatePoly {
        BivariatePoly { terms: self.terms.iter().map(|(&k, &c)| (k, -c)).collect() }
    }
}

macro_rules! owned_ops {
    ($t:ty) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                &self + &rhs
            }
        }
        impl Add<&$t> for $t {
            type Output = $t;
            fn add(self, rhs: &$t) -> $t {
                &self + rhs
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                &self - &rhs
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                &self * &rhs
            }
        }
        impl Mul<&$t> for $t {
            type Output = $t;
            fn mul(self, rhs: &$t) -> $t {
                &self * rhs
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
    };
}

owned_ops!(BivariatePoly);
owned_ops!(UniPoly);

/// Dense polynomial in one variable with integer coefficients, trimmed so the
/// last stored coefficient is nonzero.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<i64>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_coeffs(vec![1])
    }

    pub fn var() -> Self {
        Self::monomial(1, 1)
    }

    pub fn monomial(c: i64, k: usize) -> Self {
        let mut v = vec![0; k + 1];
        v[k] = c;
        Self::from_coeffs(v)
    }

    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|&c| c != 0)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, t: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| cadd(cmul(acc, t), c))
    }

    /// `p(q(t))`.
    pub fn compose(&self, q: &UniPoly) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, &c| &acc * q + Self::from_coeffs(vec![c]))
    }

    /// Division with remainder by a monic divisor.
    pub fn div_rem_monic(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        assert_eq!(d.coeffs[dd], 1, "divisor must be monic");
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![0; r.len() - dd];
        for k in (dd..r.len()).rev() {
            let c = r[k];
            if c == 0 {
                continue;
            }
            q[k - dd] = c;
            for (j, &dc) in d.coeffs.iter().enumerate() {
                r[k - dd + j] = cadd(r[k - dd + j], -cmul(c, dc));
            }
        }
        (Self::from_coeffs(q), Self::from_coeffs(r))
    }

    pub fn display_in(&self, var: &str) -> String {
        struct D<'a>(&'a UniPoly, &'a str);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                if self.0.is_zero() {
                    return write!(f, "0");
                }
                let mut first = true;
                for (k, &c) in self.0.coeffs.iter().enumerate().rev() {
                    if c != 0 {
                        write_term(f, first, c, &power_str(self.1, k as u32))?;
                        first = false;
                    }
                }
                Ok(())
            }
        }
        D(self, var).to_string()
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_in("t"))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for UniPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(s)
    }
}

impl Add<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..len).map(|k| cadd(self.coeff(k), rhs.coeff(k))).collect())
    }
}

impl Sub<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl Mul<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut v = vec![0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                v[i + j] = cadd(v[i + j], cmul(a, b));
            }
        }
        UniPoly::from_coeffs(v)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

/// Power series in `t` truncated after `t^order`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PowerSeries {
    order: usize,
    coeffs: Vec<i64>,
}

impl PowerSeries {
    pub fn zero(order: usize) -> Self {
        PowerSeries { order, coeffs: vec![0; order + 1] }
    }

    pub fn from_poly(p: &UniPoly, order: usize) -> Self {
        let mut s = Self::zero(order);
        for k in 0..=order {
            s.coeffs[k] = p.coeff(k);
        }
        s
    }

    pub fn from_coeffs(order: usize, coeffs: &[i64]) -> Self {
        let mut s = Self::zero(order);
        for (k, &c) in coeffs.iter().take(order + 1).enumerate() {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn to_poly(&self) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.clone())
    }

    /// `(1 - t)^(-ell)`, with coefficients `binomial(ell + k - 1, k)`.
    pub fn inverse_one_minus_t_pow(ell: usize, order: usize) -> Self {
        let coeffs: Vec<i64> = (0..=order as i64)
            .map(|k| if ell == 0 { i64::from(k == 0) } else { binomial(ell as i64 + k - 1, k) })
            .collect();
        PowerSeries { order, coeffs }
    }

    /// `(t / (1 - t))^r = sum_{k >= r} binomial(k - 1, r - 1) t^k`.
    pub fn t_over_one_minus_t_pow(r: usize, order: usize) -> Self {
        let coeffs: Vec<i64> = (0..=order as i64)
            .map(|k| if r == 0 { i64::from(k == 0) } else { binomial(k - 1, r as i64 - 1) })
            .collect();
        PowerSeries { order, coeffs }
    }

    pub fn scale(&self, c: i64) -> Self {
        PowerSeries { order: self.order, coeffs: self.coeffs.iter().map(|&a| cmul(a, c)).collect() }
    }

    pub fn add(&self, other: &PowerSeries) -> Self {
        let order = self.order.min(other.order);
        let coeffs = (0..=order).map(|k| cadd(self.coeffs[k], other.coeffs[k])).collect();
        PowerSeries { order, coeffs }
    }

    pub fn mul(&self, other: &PowerSeries) -> Self {
        let order = self.order.min(other.order);
        let mut coeffs = vec![0; order + 1];
        for i in 0..=order {
            for j in 0..=order - i {
                coeffs[i + j] = cadd(coeffs[i + j], cmul(self.coeffs[i], other.coeffs[j]));
            }
        }
        PowerSeries { order, coeffs }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bivariate_arithmetic() {
        let p = BivariatePoly::x() + BivariatePoly::y();
        let sq = p.pow(2);
        assert_eq!(sq, BivariatePoly::from_terms([(2, 0, 1), (1, 1, 2), (0, 2, 1)]));
        assert!((&sq - &sq).is_zero());
        assert_eq!(sq.eval(2, 3), 25);
        assert_eq!(sq.to_string(), "x^2 + 2x*y + y^2");
    }

    #[test]
    fn compose_and_shift() {
        let x = BivariatePoly::x();
        assert_eq!(x.shift_x(1), BivariatePoly::x() + BivariatePoly::one());
        let p = BivariatePoly::from_terms([(2, 1, 3)]);
        let c = p.compose(&BivariatePoly::y(), &BivariatePoly::x());
        assert_eq!(c, BivariatePoly::from_terms([(1, 2, 3)]));
    }

    #[test]
    fn exact_division_in_y() {
        // (x + y)(y^2 - 1)
        let d = UniPoly::from_coeffs(vec![-1, 0, 1]);
        let p = (BivariatePoly::x() + BivariatePoly::y()) * BivariatePoly::from_y_poly(&d);
        assert_eq!(p.div_exact_by_y(&d).unwrap(), BivariatePoly::x() + BivariatePoly::y());
        let bad = &p + &BivariatePoly::one();
        assert!(matches!(bad.div_exact_by_y(&d), Err(Error::NotPolynomial)));
    }

    #[test]
    fn unipoly_ops() {
        let p = UniPoly::from_coeffs(vec![1, 1]);
        assert_eq!(p.pow(3).coeffs(), &[1, 3, 3, 1]);
        assert_eq!(p.compose(&UniPoly::from_coeffs(vec![1, -1])).coeffs(), &[2, -1]);
        assert_eq!(UniPoly::from_coeffs(vec![-8, 14, -7, 1]).display_in("λ"), "λ^3 - 7λ^2 + 14λ - 8");
        let (q, r) = p.pow(2).div_rem_monic(&p);
        assert_eq!((q, r.is_zero()), (p.clone(), true));
    }

    #[test]
    fn series_identities() {
        let g = PowerSeries::inverse_one_minus_t_pow(3, 5);
        assert_eq!(g.coeffs(), &[1, 3, 6, 10, 15, 21]);
        let t = PowerSeries::t_over_one_minus_t_pow(2, 4);
        assert_eq!(t.coeffs(), &[0, 0, 1, 2, 3]);
        let one_minus_t = PowerSeries::from_coeffs(5, &[1, -1]);
        let prod = g.mul(&one_minus_t.mul(&one_minus_t).mul(&one_minus_t));
        assert_eq!(prod.coeffs(), &[1, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 4), 15);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(0, 0), 1);
    }
}
