//! Square integer matrices, row-major.

use std::fmt;

/// A square integer matrix. The `0x0` matrix is the Seifert matrix of the
/// unknot and the generalized Seifert matrix of a contractible C-complex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    dim: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn empty() -> Self {
        IntMatrix { dim: 0, data: Vec::new() }
    }

    pub fn zeros(dim: usize) -> Self {
        IntMatrix { dim, data: vec![0; dim * dim] }
    }

    /// Builds a matrix from rows; `None` unless the rows form a square.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Option<Self> {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for row in &rows {
            if row.len() != dim {
                return None;
            }
            data.extend_from_slice(row);
        }
        Some(IntMatrix { dim, data })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.dim + j] = v;
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn has_zero_diagonal(&self) -> bool {
        (0..self.dim).all(|i| self.get(i, i) == 0)
    }

    /// Block-diagonal sum of two matrices.
    pub fn block_diag(&self, other: &IntMatrix) -> IntMatrix {
        let dim = self.dim + other.dim;
        let mut out = IntMatrix::zeros(dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.set(i, j, self.get(i, j));
            }
        }
        for i in 0..other.dim {
            for j in 0..other.dim {
                out.set(self.dim + i, self.dim + j, other.get(i, j));
            }
        }
        out
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j)).collect())
            .collect()
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.dim {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = (0..self.dim).map(|j| self.get(i, j).to_string()).collect();
            write!(f, "{}", row.join(","))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_ragged_rows() {
        assert!(IntMatrix::from_rows(vec![vec![1, 2], vec![3]]).is_none());
        assert!(IntMatrix::from_rows(vec![vec![1, 2]]).is_none());
    }

    #[test]
    fn transpose_and_blocks() {
        let a = IntMatrix::from_rows(vec![vec![-1, 1], vec![0, -1]]).unwrap();
        assert_eq!(a.transpose().rows(), vec![vec![-1, 0], vec![1, -1]]);
        let b = IntMatrix::from_rows(vec![vec![7]]).unwrap();
        let c = a.block_diag(&b);
        assert_eq!(c.dim(), 3);
        assert_eq!(c.get(2, 2), 7);
        assert_eq!(c.get(0, 2), 0);
    }
}
