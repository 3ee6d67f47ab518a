//! Truth tables, minterm canonical forms and structure matrices.
//!
//! Row numbering follows the usual convention: the assignment with row
//! number `k` has variable `x1` as the most significant bit of `k` and `xn`
//! as the least significant, True = 1. The vector encoding of that
//! assignment is `delta_{2^n}^{2^n - k}`, so structure-matrix column `r`
//! corresponds to minterm `2^n - r`.

use crate::error::{Error, Result};
use crate::expr::BoolExpr;
use crate::logical::LogicalMatrix;

/// A Boolean function of `n_vars` variables as a bit per row number.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    n_vars: usize,
    bits: Vec<bool>,
}

impl TruthTable {
    /// Builds a table from explicit bits; `bits.len()` must be `2^n_vars`.
    /// `n_vars = 0` is allowed and describes a constant function.
    pub fn new(n_vars: usize, bits: Vec<bool>) -> Self {
        assert_eq!(bits.len(), 1usize << n_vars, "table must have 2^n bits");
        TruthTable { n_vars, bits }
    }

    /// Tabulates an expression over `x1..x<n_vars>`. Panics if the
    /// expression references a higher variable.
    pub fn from_expr(e: &BoolExpr, n_vars: usize) -> Self {
        assert!(
            e.max_var() <= n_vars,
            "expression references x{} but arity is {}",
            e.max_var(),
            n_vars
        );
        let bits = (0..1usize << n_vars)
            .map(|k| e.eval(&assignment_of(k, n_vars)))
            .collect();
        TruthTable { n_vars, bits }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    /// Value on the assignment with row number `k`.
    pub fn bit(&self, k: usize) -> bool {
        self.bits[k]
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Number of rows, `2^n_vars` (never zero).
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    /// The sorted on-set (rows where the function is true).
    pub fn minterms(&self) -> MintermForm {
        MintermForm {
            n_vars: self.n_vars,
            on_set: (0..self.len()).filter(|&k| self.bits[k]).collect(),
        }
    }

    /// True when the function value never changes under flipping `x<j>`,
    /// checked over all assignments. This is the semantic ground truth the
    /// algebraic redundancy test is validated against.
    pub fn independent_of(&self, j: usize) -> Result<bool> {
        if j == 0 || j > self.n_vars {
            return Err(Error::IndexOutOfRange {
                what: "variable index",
                got: j,
                limit: self.n_vars,
            });
        }
        let flip = 1usize << (self.n_vars - j);
        Ok((0..self.len()).all(|k| self.bits[k] == self.bits[k ^ flip]))
    }

    /// The structure matrix `M_f`: a `2 x 2^n` logical matrix whose column
    /// `r` is `delta_2^1` when `f` is true on the assignment encoded by
    /// vector position `r`, i.e. on minterm `2^n - r`.
    pub fn structure_matrix(&self) -> LogicalMatrix {
        let size = self.len();
        let cols = (1..=size)
            .map(|r| if self.bits[size - r] { 1 } else { 2 })
            .collect();
        LogicalMatrix::new(2, cols).unwrap()
    }

    /// Inverse of [`structure_matrix`](Self::structure_matrix) for `2 x 2^n`
    /// logical matrices.
    pub fn from_structure_matrix(m: &LogicalMatrix) -> Result<TruthTable> {
        if m.dim() != 2 || !m.ncols().is_power_of_two() {
            return Err(Error::DimMismatch {
                op: "from_structure_matrix",
                detail: format!("{} x {} is not a structure matrix", m.dim(), m.ncols()),
            });
        }
        let size = m.ncols();
        let bits = (0..size).map(|k| m.col(size - k) == 1).collect();
        Ok(TruthTable {
            n_vars: size.trailing_zeros() as usize,
            bits,
        })
    }
}

/// The assignment with row number `k`: bit `r` of the result (0-based slot
/// `r-1`) is the value of `x<r>`, `x1` most significant.
pub fn assignment_of(k: usize, n_vars: usize) -> Vec<bool> {
    (1..=n_vars).map(|r| k & (1 << (n_vars - r)) != 0).collect()
}

/// Row number of an assignment (inverse of [`assignment_of`]).
pub fn row_number(assignment: &[bool]) -> usize {
    assignment
        .iter()
        .fold(0, |acc, &b| (acc << 1) | usize::from(b))
}

/// A function given by its sorted, duplicate-free on-set of minterm numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MintermForm {
    n_vars: usize,
    on_set: Vec<usize>,
}

impl MintermForm {
    pub fn new(n_vars: usize, mut on_set: Vec<usize>) -> Result<Self> {
        on_set.sort_unstable();
        on_set.dedup();
        if let Some(&max) = on_set.last() {
            if max >= 1usize << n_vars {
                return Err(Error::IndexOutOfRange {
                    what: "minterm number",
                    got: max,
                    limit: (1usize << n_vars) - 1,
                });
            }
        }
        Ok(MintermForm { n_vars, on_set })
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn on_set(&self) -> &[usize] {
        &self.on_set
    }

    pub fn to_table(&self) -> TruthTable {
        let mut bits = vec![false; 1usize << self.n_vars];
        for &k in &self.on_set {
            bits[k] = true;
        }
        TruthTable {
            n_vars: self.n_vars,
            bits,
        }
    }

    /// The sum-of-minterms expression: one conjunction of all `n` literals
    /// per on-set row, literal `x<r>` negated where bit `r` of the row
    /// number is 0. The empty on-set is constant false, the full on-set
    /// constant true.
    pub fn to_expr(&self) -> BoolExpr {
        if self.on_set.is_empty() {
            return BoolExpr::Const(false);
        }
        if self.on_set.len() == 1usize << self.n_vars {
            return BoolExpr::Const(true);
        }
        let terms: Vec<BoolExpr> = self
            .on_set
            .iter()
            .map(|&k| {
                let literals: Vec<BoolExpr> = assignment_of(k, self.n_vars)
                    .iter()
                    .enumerate()
                    .map(|(slot, &positive)| {
                        let var = BoolExpr::Var(slot + 1);
                        if positive {
                            var
                        } else {
                            BoolExpr::Not(Box::new(var))
                        }
                    })
                    .collect();
                if literals.len() == 1 {
                    literals.into_iter().next().unwrap()
                } else {
                    BoolExpr::And(literals)
                }
            })
            .collect();
        if terms.len() == 1 {
            terms.into_iter().next().unwrap()
        } else {
            BoolExpr::Or(terms)
        }
    }
}
