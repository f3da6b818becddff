use std::fmt;

use super::field::Field;

/// Dense row-major matrix over an exact field.
#[derive(Clone, PartialEq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> Matrix<F> {
    pub fn new(field: F, rows: usize, cols: usize, data: Vec<F::Elem>) -> Self {
        assert_eq!(data.len(), rows * cols, "entries must fill rows x cols");
        Matrix { field, rows, cols, data }
    }

    pub fn zeros(field: F, rows: usize, cols: usize) -> Self {
        let data = vec![field.zero(); rows * cols];
        Matrix { field, rows, cols, data }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = m.field.one();
        }
        m
    }

    /// Builds a matrix from rows; `cols` is needed for the zero-row case.
    pub fn from_rows(field: F, cols: usize, rows: &[Vec<F::Elem>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().cloned());
        }
        Matrix { field, rows: rows.len(), cols, data }
    }

    pub fn from_i64(field: F, cols: usize, rows: &[Vec<i64>]) -> Self {
        let conv: Vec<Vec<F::Elem>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Self::from_rows(field, cols, &conv)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| self.field.is_zero(a))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field.clone(), self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let f = &self.field;
        let mut out = Self::zeros(f.clone(), self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if f.is_zero(a) {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !f.is_zero(b) {
                        let v = f.add(out.get(r, c), &f.mul(a, b));
                        out.set(r, c, v);
                    }
                }
            }
        }
        out
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    /// Reduced row echelon form and the strictly increasing pivot columns.
    pub fn rref(&self) -> (Matrix<F>, Vec<usize>) {
        let f = self.field.clone();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..m.cols {
            if lead == m.rows {
                break;
            }
            let Some(p) = (lead..m.rows).find(|&r| !f.is_zero(m.get(r, c))) else {
                continue;
            };
            m.swap_rows(lead, p);
            let inv = f.inv(m.get(lead, c));
            for j in c..m.cols {
                let v = f.mul(m.get(lead, j), &inv);
                m.set(lead, j, v);
            }
            for r in 0..m.rows {
                if r == lead || f.is_zero(m.get(r, c)) {
                    continue;
                }
                let factor = m.get(r, c).clone();
                for j in c..m.cols {
                    let v = f.sub(m.get(r, j), &f.mul(&factor, m.get(lead, j)));
                    m.set(r, j, v);
                }
            }
            pivots.push(c);
            lead += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.field.clone(), self.cols);
        for r in 0..self.rows {
            e.insert(self.row(r).to_vec());
        }
        e.rank()
    }

    /// Canonical basis of the right null space, one basis vector per column.
    ///
    /// Free columns are taken in increasing order; the basis vector for a free
    /// column has a 1 there, 0 on the other free columns, and back-solved
    /// pivot entries.
    pub fn kernel_basis(&self) -> Matrix<F> {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Matrix::zeros(f.clone(), self.cols, free.len());
        for (j, &fc) in free.iter().enumerate() {
            k.set(fc, j, f.one());
            for (i, &pc) in pivots.iter().enumerate() {
                k.set(pc, j, f.neg(r.get(i, fc)));
            }
        }
        k
    }
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, fmt: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(fmt, "{}x{} over {}", self.rows, self.cols, self.field.spec())?;
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(|a| self.field.to_string(a)).collect();
            writeln!(fmt, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Incrementally built row space in echelon form.
///
/// Rows are kept sorted by leading column with leading entry 1, and every row
/// is zero left of its leading column.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    field: F,
    width: usize,
    rows: Vec<(usize, Vec<F::Elem>)>,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: F, width: usize) -> Self {
        Echelon { field, width, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.width
    }

    /// Reduces `v` against the current rows; the remainder is zero iff `v`
    /// lies in the span.
    pub fn reduce(&self, mut v: Vec<F::Elem>) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.width);
        let f = &self.field;
        for (lead, row) in &self.rows {
            if f.is_zero(&v[*lead]) {
                continue;
            }
            let factor = v[*lead].clone();
            for j in *lead..self.width {
                if !f.is_zero(&row[j]) {
                    v[j] = f.sub(&v[j], &f.mul(&factor, &row[j]));
                }
            }
        }
        v
    }

    pub fn contains(&self, v: Vec<F::Elem>) -> bool {
        let f = &self.field;
        self.reduce(v).iter().all(|a| f.is_zero(a))
    }

    /// Adds `v` to the row space. Returns `true` iff the rank grew.
    pub fn insert(&mut self, v: Vec<F::Elem>) -> bool {
        if self.is_full() {
            return false;
        }
        let f = self.field.clone();
        let mut v = self.reduce(v);
        let Some(lead) = v.iter().position(|a| !f.is_zero(a)) else {
            return false;
        };
        let inv = f.inv(&v[lead]);
        for a in v.iter_mut().skip(lead) {
            *a = f.mul(a, &inv);
        }
        let at = self.rows.partition_point(|(l, _)| *l < lead);
        self.rows.insert(at, (lead, v));
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{PrimeField, Rationals};

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn rref_of_identity_is_identity() {
        let m = Matrix::identity(gf(2), 3);
        let (r, piv) = m.rref();
        assert_eq!(r, m);
        assert_eq!(piv, vec![0, 1, 2]);
    }

    #[test]
    fn rref_of_zero_matrix() {
        let m = Matrix::zeros(gf(2), 2, 3);
        let (r, piv) = m.rref();
        assert_eq!(r, m);
        assert!(piv.is_empty());
    }

    #[test]
    fn rref_duplicate_row() {
        let m = Matrix::from_i64(gf(2), 2, &[vec![1, 1], vec![1, 1]]);
        let (r, piv) = m.rref();
        assert_eq!(r, Matrix::from_i64(gf(2), 2, &[vec![1, 1], vec![0, 0]]));
        assert_eq!(piv, vec![0]);
    }

    #[test]
    fn rref_of_empty_matrix() {
        let m = Matrix::zeros(Rationals, 0, 4);
        let (r, piv) = m.rref();
        assert_eq!(r.rows(), 0);
        assert!(piv.is_empty());
        assert_eq!(m.rank(), 0);
    }

    #[test]
    fn rank_examples() {
        let m = Matrix::from_i64(gf(2), 2, &[vec![1, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(m.rank(), 2);
        let fano: Vec<Vec<i64>> = (1..8).map(|v| vec![(v >> 2) & 1, (v >> 1) & 1, v & 1]).collect();
        assert_eq!(Matrix::from_i64(gf(2), 3, &fano).rank(), 3);
    }

    #[test]
    fn kernel_examples() {
        let m = Matrix::from_i64(Rationals, 3, &[vec![1, 0, 0]]);
        let k = m.kernel_basis();
        assert_eq!(k, Matrix::from_i64(Rationals, 2, &[vec![0, 0], vec![1, 0], vec![0, 1]]));

        let inv = Matrix::from_i64(Rationals, 2, &[vec![2, 1], vec![1, 1]]);
        assert_eq!(inv.kernel_basis().cols(), 0);

        let m = Matrix::from_i64(gf(2), 2, &[vec![1, 1]]);
        assert_eq!(m.kernel_basis(), Matrix::from_i64(gf(2), 1, &[vec![1], vec![1]]));
    }

    #[test]
    fn echelon_tracks_membership() {
        let f = gf(3);
        let mut e = Echelon::new(f, 3);
        assert!(e.insert(vec![0, 1, 2]));
        assert!(e.insert(vec![1, 1, 0]));
        assert!(!e.insert(vec![1, 2, 2]));
        assert!(e.contains(vec![2, 0, 2]));
        assert!(!e.contains(vec![0, 0, 1]));
        assert_eq!(e.rank(), 2);
    }
}
