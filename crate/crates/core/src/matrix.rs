//! Dense integer matrices with exact (arbitrary-precision) arithmetic.
//!
//! Everything downstream — Laplacians, companion powers, Sylvester
//! determinants — runs through this kernel, so determinants are computed
//! fraction-free (Bareiss) and all divisions are exact by construction.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};

/// A rows x cols matrix of arbitrary-precision integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    /// All-zero matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    /// Identity matrix of size n.
    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Build from a closure mapping (row, col) to an entry.
    pub fn from_fn<F: FnMut(usize, usize) -> BigInt>(rows: usize, cols: usize, mut f: F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IntMatrix { rows, cols, data }
    }

    /// Convenience constructor from machine-integer rows; panics on ragged input.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            data.extend(row.iter().map(|&v| BigInt::from(v)));
        }
        IntMatrix { rows: r, cols: c, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> impl Iterator<Item = &BigInt> {
        self.data.iter()
    }

    /// Sum of all entries.
    pub fn entry_sum(&self) -> BigInt {
        self.data.iter().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// Copy with row `r` and column `c` deleted.
    pub fn delete_row_col(&self, r: usize, c: usize) -> IntMatrix {
        assert!(r < self.rows && c < self.cols);
        IntMatrix::from_fn(self.rows - 1, self.cols - 1, |i, j| {
            let si = if i < r { i } else { i + 1 };
            let sj = if j < c { j } else { j + 1 };
            self[(si, sj)].clone()
        })
    }

    /// Matrix product.
    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = &self[(i, l)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(l, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Entrywise difference.
    pub fn sub(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} - {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Exact power by binary exponentiation; `pow(0)` is the identity.
    pub fn pow(&self, e: u64) -> Result<IntMatrix> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut result = IntMatrix::identity(self.rows);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    ///
    /// Intermediate entries are minors of the input, so they stay as small as
    /// the problem allows and every division is exact.
    pub fn det_bareiss(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut m: Vec<Vec<BigInt>> = (0..n)
            .map(|i| self.data[i * n..(i + 1) * n].to_vec())
            .collect();
        let mut sign = 1i8;
        let mut prev = BigInt::one();
        for k in 0..n {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(k, i);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            let (head, tail) = m.split_at_mut(k + 1);
            let pivot_row = &head[k];
            for row in tail.iter_mut() {
                let lead = std::mem::replace(&mut row[k], BigInt::zero());
                if lead.is_zero() {
                    if !prev.is_one() {
                        for j in k + 1..n {
                            let t = &row[j] * &pivot_row[k];
                            row[j] = exact_div(t, &prev, "det_bareiss")?;
                        }
                        continue;
                    }
                    for j in k + 1..n {
                        row[j] = &row[j] * &pivot_row[k];
                    }
                    continue;
                }
                for j in k + 1..n {
                    let t = &row[j] * &pivot_row[k] - &lead * &pivot_row[j];
                    row[j] = exact_div(t, &prev, "det_bareiss")?;
                }
            }
            prev = m[k][k].clone();
        }
        let mut det = m[n - 1][n - 1].clone();
        if sign < 0 {
            det = -det;
        }
        Ok(det)
    }
}

/// Divide `num` by `den`, failing loudly if the division is not exact.
pub(crate) fn exact_div(num: BigInt, den: &BigInt, context: &'static str) -> Result<BigInt> {
    debug_assert!(!den.is_zero());
    let (q, r) = num_integer::Integer::div_rem(&num, den);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::InexactDivision(context))
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Largest absolute value of any entry (zero for empty matrices).
pub fn max_abs_entry(m: &IntMatrix) -> BigInt {
    m.entries()
        .map(|e| e.abs())
        .max()
        .unwrap_or_else(BigInt::zero)
}
