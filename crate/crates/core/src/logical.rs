//! Logical matrices and vectors in delta-notation.
//!
//! A logical matrix has exactly one 1 per column; the compact form stores
//! only the 1-based row index of each column's 1, written
//! `delta_dim[i_1, i_2, ...]`. Semi-tensor products against logical
//! operands never need dense expansion, so they scale to state spaces far
//! beyond the dense budget.

use crate::error::{Error, Result};
use crate::stp::{swap_columns, DenseMatrix, MAX_DENSE_ENTRIES};

/// A unit column vector `delta_dim^index` (1-based index of the single 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LogicalVector {
    dim: usize,
    index: usize,
}

impl LogicalVector {
    pub fn new(dim: usize, index: usize) -> Result<Self> {
        if index == 0 || index > dim {
            return Err(Error::IndexOutOfRange {
                what: "logical vector index",
                got: index,
                limit: dim,
            });
        }
        Ok(LogicalVector { dim, index })
    }

    /// The vector form of a Boolean value: True = delta_2^1, False = delta_2^2.
    pub fn from_bool(value: bool) -> Self {
        LogicalVector {
            dim: 2,
            index: if value { 1 } else { 2 },
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn index(&self) -> usize {
        self.index
    }

    /// Semi-tensor product of unit vectors, which is their Kronecker
    /// product: `delta_m^i |x| delta_p^j = delta_{mp}^{(i-1)p + j}`.
    pub fn stp(&self, other: &LogicalVector) -> LogicalVector {
        LogicalVector {
            dim: self.dim * other.dim,
            index: (self.index - 1) * other.dim + other.index,
        }
    }

    /// Interprets the vector as a Boolean (dimension must be 2).
    pub fn as_bool(&self) -> Result<bool> {
        if self.dim != 2 {
            return Err(Error::DimMismatch {
                op: "as_bool",
                detail: format!("dimension {} is not 2", self.dim),
            });
        }
        Ok(self.index == 1)
    }

    pub fn to_dense(&self) -> DenseMatrix {
        let mut entries = vec![0; self.dim];
        entries[self.index - 1] = 1;
        DenseMatrix::new(self.dim, 1, entries)
    }
}

/// A logical matrix `delta_dim[i_1, ..., i_k]`: `dim` rows, one column per
/// stored index. Transition matrices are square with `dim = 2^n`; structure
/// matrices of Boolean functions are `2 x 2^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogicalMatrix {
    dim: usize,
    cols: Vec<usize>,
}

impl LogicalMatrix {
    pub fn new(dim: usize, cols: Vec<usize>) -> Result<Self> {
        if cols.is_empty() {
            return Err(Error::DimMismatch {
                op: "logical matrix",
                detail: "no columns".into(),
            });
        }
        for &c in &cols {
            if c == 0 || c > dim {
                return Err(Error::IndexOutOfRange {
                    what: "logical matrix column index",
                    got: c,
                    limit: dim,
                });
            }
        }
        Ok(LogicalMatrix { dim, cols })
    }

    pub fn identity(dim: usize) -> Self {
        LogicalMatrix {
            dim,
            cols: (1..=dim).collect(),
        }
    }

    /// Row count (the subscript in delta-notation).
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    /// The 1-based column indices.
    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    /// The index stored for 1-based column `r`.
    pub fn col(&self, r: usize) -> usize {
        self.cols[r - 1]
    }

    /// For a square matrix of dimension `2^n`, returns `n`.
    pub fn n_vars(&self) -> Result<usize> {
        if self.ncols() == self.dim && self.dim.is_power_of_two() {
            Ok(self.dim.trailing_zeros() as usize)
        } else {
            Err(Error::DimMismatch {
                op: "n_vars",
                detail: format!(
                    "{} x {} is not a square power-of-two logical matrix",
                    self.dim,
                    self.ncols()
                ),
            })
        }
    }

    /// `self |x| v` for a unit vector `v` whose dimension equals the column
    /// count: picks column `v.index` in O(1) instead of multiplying.
    pub fn apply(&self, v: &LogicalVector) -> Result<LogicalVector> {
        if v.dim() != self.ncols() {
            return Err(Error::DimMismatch {
                op: "apply",
                detail: format!(
                    "matrix has {} columns, vector dimension is {}",
                    self.ncols(),
                    v.dim()
                ),
            });
        }
        LogicalVector::new(self.dim, self.cols[v.index() - 1])
    }

    /// `self |x| other` when the column count of `self` equals the row
    /// dimension of `other`; the result is again logical, with column `r`
    /// given by chasing indices.
    pub fn compose(&self, other: &LogicalMatrix) -> Result<LogicalMatrix> {
        if self.ncols() != other.dim() {
            return Err(Error::DimMismatch {
                op: "compose",
                detail: format!(
                    "left has {} columns, right dimension is {}",
                    self.ncols(),
                    other.dim()
                ),
            });
        }
        let cols = other.cols.iter().map(|&c| self.cols[c - 1]).collect();
        LogicalMatrix::new(self.dim, cols)
    }

    pub fn to_dense(&self) -> Result<DenseMatrix> {
        let (rows, cols) = (self.dim, self.ncols());
        if rows.checked_mul(cols).map_or(true, |n| n > MAX_DENSE_ENTRIES) {
            return Err(Error::SizeLimit {
                op: "to_dense",
                detail: format!("result would be {rows} x {cols}"),
            });
        }
        let mut entries = vec![0i64; rows * cols];
        for (c, &r) in self.cols.iter().enumerate() {
            entries[(r - 1) * cols + c] = 1;
        }
        Ok(DenseMatrix::new(rows, cols, entries))
    }

    /// Converts a dense 0/1 matrix with exactly one 1 per column.
    pub fn from_dense(m: &DenseMatrix) -> Result<LogicalMatrix> {
        let mut cols = Vec::with_capacity(m.cols());
        for c in 0..m.cols() {
            let mut index = None;
            for r in 0..m.rows() {
                match m.get(r, c) {
                    0 => {}
                    1 if index.is_none() => index = Some(r + 1),
                    _ => {
                        return Err(Error::DimMismatch {
                            op: "from_dense",
                            detail: format!("column {} is not a unit vector", c + 1),
                        })
                    }
                }
            }
            cols.push(index.ok_or(Error::DimMismatch {
                op: "from_dense",
                detail: format!("column {} is all zero", c + 1),
            })?);
        }
        LogicalMatrix::new(m.rows(), cols)
    }
}

impl std::fmt::Display for LogicalMatrix {
    /// Renders the delta-notation used by the matrix file format,
    /// e.g. `delta 4 [1 2 2 4]`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "delta {} [", self.dim)?;
        for (i, c) in self.cols.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// The structure matrix of negation, `delta_2[2,1]`.
pub fn m_not() -> LogicalMatrix {
    LogicalMatrix::new(2, vec![2, 1]).unwrap()
}

/// The variable-extraction matrix `S_i^n`: a `2 x 2^n` logical matrix whose
/// columns alternate between blocks of 1s and 2s of length `2^(n-i)`.
/// Applied to a stacked state vector it recovers the i-th variable.
pub fn s_matrix(i: usize, n: usize) -> Result<LogicalMatrix> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange {
            what: "extraction matrix index",
            got: i,
            limit: n,
        });
    }
    let block = 1usize << (n - i);
    let cols = (0..1usize << n)
        .map(|c| if (c / block) % 2 == 0 { 1 } else { 2 })
        .collect();
    LogicalMatrix::new(2, cols)
}

/// The swap matrix `W_[m,p]` in logical form.
pub fn swap_logical(m: usize, p: usize) -> LogicalMatrix {
    LogicalMatrix::new(m * p, swap_columns(m, p)).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stp::swap_matrix;

    #[test]
    fn apply_picks_columns() {
        let l = LogicalMatrix::new(4, vec![1, 2, 2, 4]).unwrap();
        let v = l.apply(&LogicalVector::new(4, 4).unwrap()).unwrap();
        assert_eq!(v, LogicalVector::new(4, 4).unwrap());

        let id = LogicalMatrix::identity(4);
        let v2 = LogicalVector::new(4, 2).unwrap();
        assert_eq!(id.apply(&v2).unwrap(), v2);

        let l8 = LogicalMatrix::new(8, vec![5, 2, 6, 2, 5, 2, 6, 4]).unwrap();
        let v = l8.apply(&LogicalVector::new(8, 1).unwrap()).unwrap();
        assert_eq!(v, LogicalVector::new(8, 5).unwrap());
    }

    #[test]
    fn apply_agrees_with_dense_stp_exhaustively() {
        // All logical matrices with up to 3 variables would be 8^8 cases;
        // random coverage plus exhaustive n <= 1 keeps this fast while
        // hitting every column position.
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for n in 1..=3usize {
            let dim = 1 << n;
            for _ in 0..200 {
                let cols: Vec<usize> = (0..dim).map(|_| rng.gen_range(1..=dim)).collect();
                let l = LogicalMatrix::new(dim, cols).unwrap();
                let dense = l.to_dense().unwrap();
                for idx in 1..=dim {
                    let v = LogicalVector::new(dim, idx).unwrap();
                    let fast = l.apply(&v).unwrap();
                    let slow = dense.stp(&v.to_dense()).unwrap();
                    assert_eq!(fast.to_dense(), slow);
                }
            }
        }
    }

    #[test]
    fn compose_agrees_with_dense_product() {
        let s = s_matrix(2, 2).unwrap();
        let l = LogicalMatrix::new(4, vec![1, 2, 2, 4]).unwrap();
        let composed = s.compose(&l).unwrap();
        assert_eq!(composed, LogicalMatrix::new(2, vec![1, 2, 2, 2]).unwrap());
        let dense = s.to_dense().unwrap().stp(&l.to_dense().unwrap()).unwrap();
        assert_eq!(composed.to_dense().unwrap(), dense);
    }

    #[test]
    fn s_matrix_block_patterns() {
        assert_eq!(s_matrix(1, 2).unwrap().cols(), &[1, 1, 2, 2]);
        assert_eq!(s_matrix(2, 2).unwrap().cols(), &[1, 2, 1, 2]);
        assert_eq!(s_matrix(2, 3).unwrap().cols(), &[1, 1, 2, 2, 1, 1, 2, 2]);
        assert!(s_matrix(3, 2).is_err());
        assert!(s_matrix(0, 2).is_err());
    }

    #[test]
    fn swap_logical_matches_dense() {
        for m in 1..=4 {
            for p in 1..=4 {
                assert_eq!(
                    swap_logical(m, p).to_dense().unwrap(),
                    swap_matrix(m, p).unwrap()
                );
            }
        }
    }

    #[test]
    fn vector_stp_stacks() {
        let t = LogicalVector::from_bool(true);
        let f = LogicalVector::from_bool(false);
        assert_eq!(t.stp(&f), LogicalVector::new(4, 2).unwrap());
        assert_eq!(f.stp(&f), LogicalVector::new(4, 4).unwrap());
    }

    #[test]
    fn display_is_delta_notation() {
        let l = LogicalMatrix::new(4, vec![1, 2, 2, 4]).unwrap();
        assert_eq!(l.to_string(), "delta 4 [1 2 2 4]");
    }

    #[test]
    fn rejects_out_of_range_columns() {
        assert!(LogicalMatrix::new(4, vec![1, 5]).is_err());
        assert!(LogicalMatrix::new(4, vec![0]).is_err());
        assert!(LogicalVector::new(4, 5).is_err());
    }
}
