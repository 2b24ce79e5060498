use std::fmt;

use super::{ExactError, SVec, Scalar, SparseMat};

/// Dense matrix over Q(ζ_N), stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_columns(rows: usize, cols: &[Vec<Scalar>]) -> Self {
        let mut m = Matrix::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
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

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * other.rows + k, j * other.cols + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Reduced row echelon form and pivot columns.
    ///
    /// Pivots are chosen in the leftmost nonzero column, using the first row with a
    /// nonzero entry there, so bases derived from the result are deterministic.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("nonzero pivot");
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let sub = &f * m.get(r, j);
                    if !sub.is_zero() {
                        let v = m.get(i, j) - &sub;
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space; one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(row, free);
            }
            out.push(v);
        }
        debug_assert_eq!(out.len() + pivots.len(), self.cols);
        out
    }

    /// Columns of `self` at the pivot positions; they span the column space.
    pub fn image_basis(&self) -> Vec<Vec<Scalar>> {
        let (_, pivots) = self.rref();
        pivots.iter().map(|&c| self.column(c)).collect()
    }

    /// Some solution of `self · x = b`, if one exists.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(row, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Scalar::one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Some(inv)
    }

    /// Projection onto and section of the quotient `k^dim / span(w)`.
    ///
    /// Quotient coordinates are the non-pivot positions of the reduced basis of `w`.
    /// Returns `(projection, section)` with `projection · section = id`.
    pub fn quotient_basis(w: &[Vec<Scalar>], dim: usize) -> Result<(Matrix, Matrix), ExactError> {
        if w.iter().any(|v| v.len() != dim) {
            return Err(ExactError::Dimension(format!(
                "subspace vectors must have length {dim}"
            )));
        }
        let (r, pivots) = if w.is_empty() {
            (Matrix::zeros(0, dim), Vec::new())
        } else {
            Matrix::from_rows(w.to_vec()).rref()
        };
        if pivots.len() < w.len() {
            return Err(ExactError::NotABasis);
        }
        let free: Vec<usize> = (0..dim).filter(|c| !pivots.contains(c)).collect();
        let q = free.len();
        let mut proj = Matrix::zeros(q, dim);
        let mut sect = Matrix::zeros(dim, q);
        for (k, &f) in free.iter().enumerate() {
            proj.set(k, f, Scalar::one());
            sect.set(f, k, Scalar::one());
        }
        for (row, &pc) in pivots.iter().enumerate() {
            for (k, &f) in free.iter().enumerate() {
                let v = r.get(row, f);
                if !v.is_zero() {
                    proj.set(k, pc, -v);
                }
            }
        }
        Ok((proj, sect))
    }

    pub fn to_sparse(&self) -> SparseMat {
        let cols = (0..self.cols)
            .map(|c| SVec::from_dense(&self.column(c)))
            .collect();
        SparseMat::from_columns(self.rows, cols)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn z3(k: i64) -> Scalar {
        Scalar::zeta_pow(3, k)
    }

    #[test]
    fn identity_has_trivial_kernel() {
        assert!(Matrix::identity(2).kernel_basis().is_empty());
        assert_eq!(Matrix::identity(3).image_basis().len(), 3);
    }

    #[test]
    fn zero_row_has_full_kernel() {
        assert_eq!(Matrix::zeros(1, 2).kernel_basis().len(), 2);
        assert!(Matrix::zeros(3, 3).image_basis().is_empty());
    }

    #[test]
    fn proportional_rows_over_q_zeta3() {
        let a = Matrix::from_rows(vec![vec![q(1), z3(1)], vec![z3(2), q(1)]]);
        // Independent oracle: row2 - ζ²·row1 vanishes, so the rank is one.
        let diff: Vec<Scalar> = (0..2).map(|c| a.get(1, c) - &(&z3(2) * a.get(0, c))).collect();
        assert!(diff.iter().all(Scalar::is_zero));
        let k = a.kernel_basis();
        assert_eq!(k.len(), 1);
        assert!(a.mul_vec(&k[0]).iter().all(Scalar::is_zero));
    }

    #[test]
    fn outer_product_image() {
        let u = vec![q(1), q(2), z3(1)];
        let v = [q(3), q(0), q(-1)];
        let rows: Vec<Vec<Scalar>> = u
            .iter()
            .map(|a| v.iter().map(|b| a * b).collect())
            .collect();
        let m = Matrix::from_rows(rows);
        let img = m.image_basis();
        assert_eq!(img.len(), 1);
        let ratio = &img[0][0] / &u[0];
        for (x, y) in img[0].iter().zip(&u) {
            assert_eq!(x, &(&ratio * y));
        }
    }

    #[test]
    fn quotient_examples() {
        let (p, s) = Matrix::quotient_basis(&[], 3).unwrap();
        assert_eq!(p, Matrix::identity(3));
        assert_eq!(s, Matrix::identity(3));

        let full: Vec<Vec<Scalar>> = (0..3).map(|i| Matrix::identity(3).column(i)).collect();
        let (p, _) = Matrix::quotient_basis(&full, 3).unwrap();
        assert_eq!(p.rows(), 0);

        let w = vec![vec![q(1), q(1), q(0)]];
        let (p, s) = Matrix::quotient_basis(&w, 3).unwrap();
        assert_eq!(p.rows(), 2);
        assert_eq!(p.mul(&s), Matrix::identity(2));
        assert!(p.mul_vec(&w[0]).iter().all(Scalar::is_zero));

        let dep = vec![vec![q(1), q(1), q(0)], vec![q(2), q(2), q(0)]];
        assert_eq!(Matrix::quotient_basis(&dep, 3), Err(ExactError::NotABasis));
    }

    #[test]
    fn solve_and_inverse() {
        let a = Matrix::from_rows(vec![vec![q(2), q(1)], vec![q(1), z3(1)]]);
        let b = vec![q(1), q(0)];
        let x = a.solve(&b).unwrap();
        assert_eq!(a.mul_vec(&x), b);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2));
        let sing = Matrix::from_rows(vec![vec![q(1), q(2)], vec![q(2), q(4)]]);
        assert!(sing.inverse().is_none());
        assert!(sing.solve(&[q(1), q(0)]).is_none());
    }

    fn small_matrix(n: u32) -> impl Strategy<Value = Matrix> {
        (1usize..5, 1usize..6).prop_flat_map(move |(r, c)| {
            proptest::collection::vec((-2i64..=2, 0i64..3), r * c).prop_map(move |entries| {
                let rows = (0..r)
                    .map(|i| {
                        (0..c)
                            .map(|j| {
                                let (a, k) = entries[i * c + j];
                                &Scalar::from_int(a) * &Scalar::zeta_pow(n, k)
                            })
                            .collect()
                    })
                    .collect();
                Matrix::from_rows(rows)
            })
        })
    }

    proptest! {
        #[test]
        fn rank_nullity_over_q(m in small_matrix(1)) {
            let k = m.kernel_basis();
            prop_assert_eq!(k.len() + m.rank(), m.cols());
            for v in &k {
                prop_assert!(m.mul_vec(v).iter().all(Scalar::is_zero));
            }
        }

        #[test]
        fn rank_nullity_over_q_zeta3(m in small_matrix(3)) {
            let k = m.kernel_basis();
            prop_assert_eq!(k.len() + m.rank(), m.cols());
            prop_assert_eq!(m.rank(), m.transpose().rank());
            for v in &k {
                prop_assert!(m.mul_vec(v).iter().all(Scalar::is_zero));
            }
        }

        #[test]
        fn dense_and_sparse_ranks_agree(m in small_matrix(3)) {
            prop_assert_eq!(m.rank(), m.to_sparse().rank());
            prop_assert_eq!(m.kernel_basis().len(), m.to_sparse().kernel().len());
        }
    }
}
