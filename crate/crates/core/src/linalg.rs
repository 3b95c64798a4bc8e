//! Dense matrices over an exact field and Gaussian elimination.

use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Scalar> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let data: Vec<F> = rows.into_iter().flatten().collect();
        assert_eq!(data.len(), r * c, "ragged rows");
        Matrix { rows: r, cols: c, data }
    }

    pub fn from_i64(rows: usize, cols: usize, vals: &[i64]) -> Self {
        assert_eq!(vals.len(), rows * cols);
        Matrix { rows, cols, data: vals.iter().map(|&v| F::from_i64(v)).collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F) {
        self.data[r * self.cols + c] = v;
    }

    pub fn mul(&self, o: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, o.rows);
        let mut out: Matrix<F> = Matrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let v = out.get(i, j).add(&a.mul(o.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, o: &Matrix<F>) -> Matrix<F> {
        let mut m = Matrix::zeros(self.rows + o.rows, self.cols + o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..o.rows {
            for j in 0..o.cols {
                m.set(self.rows + i, self.cols + j, o.get(i, j).clone());
            }
        }
        m
    }

    /// Rank by row reduction; consumes a copy.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.row_reduce()
    }

    /// Reduces in place to reduced row echelon form and returns the rank.
    pub fn row_reduce(&mut self) -> usize {
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let Some(piv) = (rank..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(piv, rank);
            let inv = self.get(rank, col).inv();
            for j in col..self.cols {
                let v = self.get(rank, j).mul(&inv);
                self.set(rank, j, v);
            }
            for r in 0..self.rows {
                if r == rank || self.get(r, col).is_zero() {
                    continue;
                }
                let f = self.get(r, col).clone();
                for j in col..self.cols {
                    let v = self.get(r, j).sub(&f.mul(self.get(rank, j)));
                    self.set(r, j, v);
                }
            }
            rank += 1;
        }
        rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Unique solution of `self · x = b` when the columns are independent.
    /// Returns `None` if the system is inconsistent or underdetermined.
    pub fn solve_unique(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let r = aug.row_reduce();
        let mut x = vec![F::zero(); self.cols];
        let mut pivots = 0;
        for i in 0..r {
            let lead = (0..=self.cols).find(|&j| !aug.get(i, j).is_zero())?;
            if lead == self.cols {
                return None;
            }
            x[lead] = aug.get(i, self.cols).clone();
            pivots += 1;
        }
        (pivots == self.cols).then_some(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Rational, F2};

    #[test]
    fn rank_over_q_and_f2() {
        let m = Matrix::<Rational>::from_i64(3, 3, &[1, 2, 3, 4, 5, 6, 7, 8, 9]);
        assert_eq!(m.rank(), 2);
        let m2 = Matrix::<F2>::from_i64(2, 2, &[1, 1, 1, 1]);
        assert_eq!(m2.rank(), 1);
        let m3 = Matrix::<F2>::from_i64(2, 2, &[1, 1, 1, -1]);
        assert_eq!(m3.rank(), 1);
        assert_eq!(Matrix::<Rational>::from_i64(2, 2, &[1, 1, 1, -1]).rank(), 2);
    }

    #[test]
    fn solve() {
        let m = Matrix::<Rational>::from_i64(3, 2, &[1, 0, 1, 1, 0, 1]);
        let b: Vec<Rational> = [2, 5, 3].iter().map(|&v| Rational::from_i64(v)).collect();
        let x = m.solve_unique(&b).unwrap();
        assert_eq!(x, vec![Rational::from_i64(2), Rational::from_i64(3)]);
        let bad: Vec<Rational> = [2, 5, 4].iter().map(|&v| Rational::from_i64(v)).collect();
        assert!(m.solve_unique(&bad).is_none());
    }
}
