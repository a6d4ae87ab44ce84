use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense row-major matrix. Serializes as a list of rows.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<T>>", into = "Vec<Vec<T>>")]
#[serde(bound(serialize = "T: Clone + Serialize", deserialize = "T: Deserialize<'de>"))]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T> Matrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        if n_rows == 0 || n_cols == 0 {
            return Err(Error::Empty("matrix"));
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != n_cols) {
            return Err(Error::LengthMismatch {
                what: "matrix row",
                expected: n_cols,
                found: bad.len(),
            });
        }
        Ok(Self {
            rows: n_rows,
            cols: n_cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let data = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        Self { rows, cols, data }
    }

    pub fn try_from_fn<E>(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> std::result::Result<T, E>,
    ) -> std::result::Result<Self, E> {
        let data = (0..rows * cols)
            .map(|k| f(k / cols, k % cols))
            .collect::<std::result::Result<_, E>>()?;
        Ok(Self { rows, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> impl Iterator<Item = &T> + '_ {
        self.data.iter().skip(j).step_by(self.cols)
    }

    pub fn iter(&self) -> impl Iterator<Item = &T> + '_ {
        self.data.iter()
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[T]> + '_ {
        self.data.chunks(self.cols)
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn map_indexed<U>(&self, mut f: impl FnMut(usize, usize, &T) -> U) -> Matrix<U> {
        Matrix::from_fn(self.rows, self.cols, |i, j| f(i, j, self.get(i, j)))
    }

    /// Reorders columns so that new column `k` is old column `perm[k]`.
    pub fn permute_columns(&self, perm: &[usize]) -> Matrix<T>
    where
        T: Clone,
    {
        assert_eq!(perm.len(), self.cols);
        Matrix::from_fn(self.rows, self.cols, |i, k| self.get(i, perm[k]).clone())
    }
}

impl<T: Clone> From<Matrix<T>> for Vec<Vec<T>> {
    fn from(m: Matrix<T>) -> Self {
        m.row_iter().map(<[T]>::to_vec).collect()
    }
}

impl<T> TryFrom<Vec<Vec<T>>> for Matrix<T> {
    type Error = Error;
    fn try_from(rows: Vec<Vec<T>>) -> Result<Self> {
        Self::from_rows(rows)
    }
}
