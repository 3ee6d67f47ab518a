//! Exact integer matrices with Kronecker and semi-tensor products.
//!
//! The semi-tensor product (STP) extends the conventional matrix product to
//! arbitrary dimension pairs by Kronecker-padding both factors to the least
//! common multiple of the inner dimensions. On unit column vectors it acts as
//! the Kronecker product, which is what makes it suitable for stacking
//! Boolean state variables into a single vector.

use crate::error::{Error, Result};

/// Hard budget on the number of entries a dense result may have (2^24).
///
/// Keeps dense computations at desk scale (a square 4096 x 4096 matrix is the
/// largest allowed). Logical-form operations avoid dense expansion entirely
/// and are capped separately by node count.
pub const MAX_DENSE_ENTRIES: usize = 1 << 24;

fn gcd(a: usize, b: usize) -> usize {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

fn check_budget(op: &'static str, rows: usize, cols: usize) -> Result<()> {
    match rows.checked_mul(cols) {
        Some(n) if n <= MAX_DENSE_ENTRIES => Ok(()),
        _ => Err(Error::SizeLimit {
            op,
            detail: format!("result would be {rows} x {cols} (> {MAX_DENSE_ENTRIES} entries)"),
        }),
    }
}

/// Dense row-major matrix of signed integers.
///
/// All arithmetic is exact; entries of intermediate results in this crate
/// stay within {-1, 0, 1} scale, but the type supports general integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<i64>,
}

impl DenseMatrix {
    /// Builds a matrix from row-major entries. Panics if the entry count
    /// does not equal `rows * cols` or either dimension is zero.
    pub fn new(rows: usize, cols: usize, entries: Vec<i64>) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        assert_eq!(entries.len(), rows * cols, "entry count must be rows * cols");
        DenseMatrix { rows, cols, entries }
    }

    /// Builds a matrix from a slice of equal-length rows.
    pub fn from_rows(rows: &[&[i64]]) -> Self {
        assert!(!rows.is_empty(), "matrix must have at least one row");
        let cols = rows[0].len();
        assert!(rows.iter().all(|r| r.len() == cols), "rows must have equal length");
        let entries = rows.iter().flat_map(|r| r.iter().copied()).collect();
        DenseMatrix::new(rows.len(), cols, entries)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix::new(rows, cols, vec![0; rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = DenseMatrix::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = 1;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        assert!(r < self.rows && c < self.cols);
        self.entries[r * self.cols + c]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    /// Entry-wise difference. Panics if shapes differ.
    pub fn sub(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a - b)
            .collect();
        DenseMatrix::new(self.rows, self.cols, entries)
    }

    /// Conventional matrix product.
    pub fn matmul(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimMismatch {
                op: "matmul",
                detail: format!(
                    "{} x {} times {} x {}",
                    self.rows, self.cols, other.rows, other.cols
                ),
            });
        }
        check_budget("matmul", self.rows, other.cols)?;
        let mut out = DenseMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.entries[r * self.cols + k];
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    out.entries[r * other.cols + c] += a * other.entries[k * other.cols + c];
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product `self (x) other`.
    pub fn kron(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        check_budget("kron", rows, cols)?;
        let mut out = DenseMatrix::zeros(rows, cols);
        for ar in 0..self.rows {
            for ac in 0..self.cols {
                let a = self.entries[ar * self.cols + ac];
                if a == 0 {
                    continue;
                }
                for br in 0..other.rows {
                    for bc in 0..other.cols {
                        let v = a * other.entries[br * other.cols + bc];
                        out.entries[(ar * other.rows + br) * cols + ac * other.cols + bc] = v;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Semi-tensor product `self |x| other`.
    ///
    /// With `alpha = lcm(self.cols, other.rows)`, this is
    /// `(self (x) I_{alpha/self.cols}) * (other (x) I_{alpha/other.rows})`.
    /// It is total on all dimension pairs and reduces to the conventional
    /// product when the inner dimensions already match.
    pub fn stp(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        let alpha = lcm(self.cols, other.rows);
        let out_rows = self.rows * (alpha / self.cols);
        let out_cols = other.cols * (alpha / other.rows);
        check_budget("stp", out_rows, out_cols)?;
        let left = self.kron(&DenseMatrix::identity(alpha / self.cols))?;
        let right = other.kron(&DenseMatrix::identity(alpha / other.rows))?;
        left.matmul(&right)
    }
}

impl std::fmt::Display for DenseMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Column indices (1-based) of the swap matrix `W_[m,p]`: column
/// `(i-1)p + j` holds the unit vector `e_{(j-1)m + i}`.
pub(crate) fn swap_columns(m: usize, p: usize) -> Vec<usize> {
    let mut cols = Vec::with_capacity(m * p);
    for i in 1..=m {
        for j in 1..=p {
            cols.push((j - 1) * m + i);
        }
    }
    cols
}

/// The `mp x mp` swap matrix `W_[m,p]` satisfying
/// `W_[m,p] (x (x) y) = y (x) x` for all `x` of dimension `m` and `y` of
/// dimension `p`.
pub fn swap_matrix(m: usize, p: usize) -> Result<DenseMatrix> {
    assert!(m >= 1 && p >= 1, "swap matrix dimensions must be positive");
    let dim = m.checked_mul(p).ok_or(Error::SizeLimit {
        op: "swap_matrix",
        detail: format!("{m} * {p} overflows"),
    })?;
    check_budget("swap_matrix", dim, dim)?;
    let mut w = DenseMatrix::zeros(dim, dim);
    for (c, &r) in swap_columns(m, p).iter().enumerate() {
        w.entries[(r - 1) * dim + c] = 1;
    }
    Ok(w)
}
