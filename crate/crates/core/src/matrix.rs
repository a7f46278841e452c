//! Dense exact matrices and the handful of subspace routines everything else
//! is built from. Subspaces are passed around as matrices whose columns form
//! a basis; pivoting is always "first nonzero entry, top to bottom", so every
//! basis produced here is reproducible.

use std::fmt;

use crate::field::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(
        field: Field,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Builds a `rows x columns.len()` matrix from column vectors.
    pub fn from_columns(field: Field, rows: usize, columns: &[Vec<Scalar>]) -> Matrix {
        Matrix::from_fn(field, rows, columns.len(), |r, c| columns[c][r].clone())
    }

    pub fn from_rows(field: Field, cols: usize, rows: &[Vec<Scalar>]) -> Matrix {
        Matrix::from_fn(field, rows.len(), cols, |r, c| rows[r][c].clone())
    }

    /// A single column vector.
    pub fn column_vector(field: Field, v: &[Scalar]) -> Matrix {
        Matrix::from_fn(field, v.len(), 1, |r, _| v[r].clone())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row(&self, r: usize) -> Vec<Scalar> {
        self.data[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch in product");
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = r * out.cols + c;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = self.field.zero();
                for (c, x) in v.iter().enumerate() {
                    let a = self.get(r, c);
                    if !a.is_zero() && !x.is_zero() {
                        acc = &acc + &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    /// Horizontal concatenation; all parts must have `rows` rows.
    pub fn hstack(field: Field, rows: usize, parts: &[&Matrix]) -> Matrix {
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let mut off = 0;
        for m in parts {
            assert_eq!(m.rows, rows);
            for r in 0..rows {
                for c in 0..m.cols {
                    out.set(r, off + c, m.get(r, c).clone());
                }
            }
            off += m.cols;
        }
        out
    }

    /// Vertical concatenation; all parts must have `cols` columns.
    pub fn vstack(field: Field, cols: usize, parts: &[&Matrix]) -> Matrix {
        let rows = parts.iter().map(|m| m.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for m in parts {
            assert_eq!(m.cols, cols);
            data.extend(m.data.iter().cloned());
        }
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn block_diagonal(field: Field, blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|m| m.rows).sum();
        let cols = blocks.iter().map(|m| m.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let (mut ro, mut co) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    out.set(ro + r, co + c, b.get(r, c).clone());
                }
            }
            ro += b.rows;
            co += b.cols;
        }
        out
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, self.rows, idx.len(), |r, c| self.get(r, idx[c]).clone())
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, idx.len(), self.cols, |r, c| self.get(idx[r], c).clone())
    }

    /// Copy of the sub-block `rows x cols` starting at `(r0, c0)`.
    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(self.field, rows, cols, |r, c| self.get(r0 + r, c0 + c).clone())
    }

    /// Reduced row echelon form together with its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut rows: Vec<Vec<Scalar>> = (0..self.rows).map(|r| self.row(r)).collect();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..self.cols {
            if lead == rows.len() {
                break;
            }
            let Some(p) = (lead..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
                continue;
            };
            rows.swap(lead, p);
            let inv = rows[lead][c].inv();
            if !inv.is_one() {
                for x in rows[lead].iter_mut() {
                    if !x.is_zero() {
                        *x = &*x * &inv;
                    }
                }
            }
            let pivot_row = rows[lead].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r == lead || row[c].is_zero() {
                    continue;
                }
                let factor = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                    if !y.is_zero() {
                        *x = &*x - &(&factor * y);
                    }
                }
            }
            pivots.push(c);
            lead += 1;
        }
        (Matrix::from_rows(self.field, self.cols, &rows), pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space `{x : self * x = 0}` as columns.
    pub fn kernel(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zeros(self.field, self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            out.set(f, k, self.field.one());
            for (row, &pc) in pivots.iter().enumerate() {
                let v = r.get(row, f);
                if !v.is_zero() {
                    out.set(pc, k, -v);
                }
            }
        }
        out
    }

    /// The pivot columns of `self`: a basis of its column space chosen from
    /// its own columns.
    pub fn column_basis(&self) -> Matrix {
        let (_, pivots) = self.rref();
        self.select_columns(&pivots)
    }

    /// Solves `self * X = rhs`, if possible.
    pub fn solve(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, rhs.rows);
        let aug = Matrix::hstack(self.field, self.rows, &[self, rhs]);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(self.field, self.cols, rhs.cols);
        for (row, &pc) in pivots.iter().enumerate() {
            for c in 0..rhs.cols {
                x.set(pc, c, r.get(row, self.cols + c).clone());
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let x = self.solve(&Matrix::identity(self.field, self.rows))?;
        (self.mul(&x) == Matrix::identity(self.field, self.rows)).then_some(x)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Routines on subspaces of `K^n`, each given by a matrix whose columns span it.
pub mod subspace {
    use super::Matrix;
    use crate::field::{Field, Scalar};

    /// A basis (as columns) of the span of the given columns.
    pub fn basis(m: &Matrix) -> Matrix {
        m.column_basis()
    }

    pub fn dim(m: &Matrix) -> usize {
        m.rank()
    }

    /// Canonical form of the span: the nonzero rows of the rref of the transpose.
    /// Two spans are equal iff their canonical forms are equal.
    pub fn canonical(m: &Matrix) -> Matrix {
        let (r, pivots) = m.transpose().rref();
        r.select_rows(&(0..pivots.len()).collect::<Vec<_>>())
    }

    pub fn contains_vector(span: &Matrix, v: &[Scalar]) -> bool {
        let field = span.field();
        span.solve(&Matrix::column_vector(field, v)).is_some()
    }

    /// `a ⊆ b` for spans.
    pub fn is_subspace(a: &Matrix, b: &Matrix) -> bool {
        a.cols() == 0 || b.solve(a).is_some()
    }

    pub fn equal(a: &Matrix, b: &Matrix) -> bool {
        canonical(a) == canonical(b)
    }

    pub fn sum(field: Field, n: usize, a: &Matrix, b: &Matrix) -> Matrix {
        Matrix::hstack(field, n, &[a, b]).column_basis()
    }

    pub fn intersection(field: Field, n: usize, a: &Matrix, b: &Matrix) -> Matrix {
        let a = a.column_basis();
        let b = b.column_basis();
        // a x = b y  <=>  [a | -b] (x, y) = 0
        let stacked = Matrix::hstack(field, n, &[&a, &b.scale(&-field.one())]);
        let ker = stacked.kernel();
        let xs = ker.block(0, 0, a.cols(), ker.cols());
        a.mul(&xs).column_basis()
    }

    /// Standard basis vectors extending the columns of `w` to a basis of `K^n`.
    pub fn complement(field: Field, n: usize, w: &Matrix) -> Matrix {
        let aug = Matrix::hstack(field, n, &[w, &Matrix::identity(field, n)]);
        let (_, pivots) = aug.rref();
        let idx: Vec<usize> = pivots
            .into_iter()
            .filter(|&p| p >= w.cols())
            .map(|p| p - w.cols())
            .collect();
        Matrix::identity(field, n).select_columns(&idx)
    }

    /// For a subspace `w` of `K^n` returns `(section, projection)` describing
    /// `K^n / w`: `projection * w = 0`, `projection * section = I`.
    pub fn quotient(field: Field, n: usize, w: &Matrix) -> (Matrix, Matrix) {
        let w = w.column_basis();
        let c = complement(field, n, &w);
        let full = Matrix::hstack(field, n, &[&w, &c]);
        let inv = full.inverse().expect("basis plus complement is invertible");
        let proj = inv.block(w.cols(), 0, c.cols(), n);
        (c, proj)
    }

    /// Coordinates of the columns of `v` in the basis `basis` (must lie in the span).
    pub fn coordinates(basis: &Matrix, v: &Matrix) -> Matrix {
        basis
            .solve(v)
            .expect("vector lies in the span of the basis")
    }
}
