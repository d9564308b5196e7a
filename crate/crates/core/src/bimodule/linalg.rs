//! Exact rational matrices and row reduction.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::Rational;

/// Sparse vector keyed by coordinate.
pub type SparseVec = BTreeMap<usize, Rational>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size, size);
        for i in 0..size {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        RationalMatrix { rows: rows.len(), cols, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.rows)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RationalMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn add(&self, other: &RationalMatrix) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    /// `self · other`.
    pub fn mul(&self, other: &RationalMatrix) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Kronecker product, `self` indexing the most significant digit.
    pub fn kron(&self, other: &RationalMatrix) -> Self {
        let mut out = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.set(i * other.rows + k, j * other.cols + l, a * other.get(k, l));
                    }
                }
            }
        }
        out
    }

    pub fn row_reduce(&self) -> RowReduction {
        row_reduce(self)
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowReduction {
    pub reduced: RationalMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
    /// Basis of the null space, one vector per free column.
    pub kernel: Vec<Vec<Rational>>,
}

/// Reduced row-echelon form by Gauss–Jordan elimination.
pub fn row_reduce(m: &RationalMatrix) -> RowReduction {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).find(|&i| !a.get(i, c).is_zero()) else { continue };
        for j in 0..a.cols {
            a.data.swap(r * a.cols + j, p * a.cols + j);
        }
        let inv = a.get(r, c).recip();
        for j in 0..a.cols {
            let v = a.get(r, j) * &inv;
            a.set(r, j, v);
        }
        for i in 0..a.rows {
            if i == r || a.get(i, c).is_zero() {
                continue;
            }
            let factor = a.get(i, c).clone();
            for j in 0..a.cols {
                let v = a.get(i, j) - &factor * a.get(r, j);
                a.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..a.cols).filter(|c| !pivots.contains(c)).collect();
    let kernel = free
        .iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); a.cols];
            v[f] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -a.get(row, f).clone();
            }
            v
        })
        .collect();
    RowReduction { rank: pivots.len(), reduced: a, pivots, kernel }
}

/// Incrementally maintained reduced echelon basis of sparse vectors.
#[derive(Debug, Clone, Default)]
pub struct SparseEchelon {
    /// Pivot column → row with coefficient 1 there and 0 in every other pivot column.
    rows: BTreeMap<usize, SparseVec>,
}

impl SparseEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn row(&self, pivot: usize) -> Option<&SparseVec> {
        self.rows.get(&pivot)
    }

    /// Eliminates every pivot coordinate from `v`.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut out = v.clone();
        for (&p, row) in &self.rows {
            if let Some(c) = out.get(&p).cloned() {
                axpy(&mut out, &-c, row);
            }
        }
        out
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let mut w = self.reduce(v);
        let Some((&p, lead)) = w.iter().next() else { return false };
        let inv = lead.recip();
        for x in w.values_mut() {
            *x *= &inv;
        }
        for row in self.rows.values_mut() {
            if let Some(c) = row.get(&p).cloned() {
                axpy(row, &-c, &w);
            }
        }
        self.rows.insert(p, w);
        true
    }
}

/// `y += a · x`, dropping zeros.
pub fn axpy(y: &mut SparseVec, a: &Rational, x: &SparseVec) {
    for (&k, v) in x {
        let entry = y.entry(k).or_insert_with(Rational::zero);
        *entry += a * v;
        if entry.is_zero() {
            y.remove(&k);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn identity_and_zero() {
        let id = RationalMatrix::identity(3).row_reduce();
        assert_eq!(id.rank, 3);
        assert!(id.kernel.is_empty());
        let z = RationalMatrix::zeros(2, 3).row_reduce();
        assert_eq!(z.rank, 0);
        assert_eq!(z.kernel.len(), 3);
    }

    #[test]
    fn kernel_is_exact() {
        let m = RationalMatrix::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let rr = m.row_reduce();
        assert_eq!(rr.rank, 2);
        for k in &rr.kernel {
            let col = RationalMatrix::from_rows(k.iter().map(|x| vec![x.clone()]).collect());
            assert!(m.mul(&col).is_zero());
        }
    }

    #[test]
    fn sparse_matches_dense() {
        let rows = [[1, 2, 0, 1], [0, 1, 1, 0], [1, 3, 1, 1], [2, 0, 0, 5]];
        let mut e = SparseEchelon::new();
        for r in rows {
            let v: SparseVec = r.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, &x)| (i, q(x))).collect();
            e.insert(&v);
        }
        let dense = RationalMatrix::from_i64(&rows.iter().map(|r| &r[..]).collect::<Vec<_>>()).row_reduce();
        assert_eq!(e.rank(), dense.rank);
        assert_eq!(e.pivots().collect::<Vec<_>>(), dense.pivots);
        for (i, p) in dense.pivots.iter().enumerate() {
            let row = e.row(*p).unwrap();
            for c in 0..4 {
                assert_eq!(row.get(&c).cloned().unwrap_or_else(Rational::zero), *dense.reduced.get(i, c));
            }
        }
    }

    #[test]
    fn kron_shape() {
        let a = RationalMatrix::from_i64(&[&[1, 2]]);
        let b = RationalMatrix::identity(2);
        let k = a.kron(&b);
        assert_eq!((k.rows(), k.cols()), (2, 4));
        assert_eq!(*k.get(1, 3), q(2));
    }
}
