//! Integer matrices with arbitrary-precision entries.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::IntPoly;
use crate::{Error, Result};

/// A dense `rows × cols` matrix over `Z`, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

/// Outcome of a primitivity test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Primitivity {
    pub primitive: bool,
    /// Least `k` with `M^k > 0`, when one exists.
    pub witness: Option<usize>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(d: usize) -> Self {
        let mut m = IntMatrix::zeros(d, d);
        for i in 0..d {
            m.data[i * d + i] = BigInt::one();
        }
        m
    }

    /// From rows of machine integers; all rows must have the same length.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::domain(format!(
                    "row {} has {} entries, expected {cols}",
                    i + 1,
                    r.len()
                )));
            }
            data.extend(r.iter().map(|&x| BigInt::from(x)));
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            data,
        })
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

    /// Side length of a square matrix.
    pub fn dim(&self) -> usize {
        assert!(self.is_square(), "matrix is not square");
        self.rows
    }

    /// Entry at 0-based `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: impl Into<BigInt>) {
        self.data[i * self.cols + j] = v.into();
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: impl Into<BigInt>) {
        self.data[i * self.cols + j] += v.into();
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.data.iter().all(|x| !x.is_negative())
    }

    /// Nonzero entries of each row as `(column, value)`.
    fn sparse_rows(&self) -> Vec<Vec<(usize, BigInt)>> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(j, v)| (j, v.clone()))
                    .collect()
            })
            .collect()
    }

    pub fn mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::domain(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let sparse = rhs.sparse_rows();
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for (k, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, b) in &sparse[k] {
                    out.data[i * rhs.cols + j] += a * b;
                }
            }
        }
        Ok(out)
    }

    /// `det(tI - M)`, by Berkowitz's division-free algorithm.
    pub fn char_poly(&self) -> Result<IntPoly> {
        if !self.is_square() {
            return Err(Error::domain(
                "characteristic polynomial needs a square matrix",
            ));
        }
        let d = self.rows;
        if d == 0 {
            return Ok(IntPoly::one());
        }
        let sparse = self.sparse_rows();
        // Descending coefficients of the trailing principal block.
        let mut p: Vec<BigInt> = vec![BigInt::one(), -self.get(d - 1, d - 1)];
        for i in (0..d - 1).rev() {
            let size = d - i;
            // Toeplitz column: 1, -a, -R C, -R N C, ..., -R N^{size-2} C.
            let mut t = Vec::with_capacity(size + 1);
            t.push(BigInt::one());
            t.push(-self.get(i, i));
            let mut v: Vec<BigInt> = (i + 1..d).map(|r| self.get(r, i).clone()).collect();
            for k in 0..size - 1 {
                let rc: BigInt = sparse[i]
                    .iter()
                    .filter(|(j, _)| *j > i)
                    .map(|(j, a)| a * &v[j - i - 1])
                    .sum();
                t.push(-rc);
                if k + 1 < size - 1 {
                    v = (i + 1..d)
                        .map(|r| {
                            sparse[r]
                                .iter()
                                .filter(|(j, _)| *j > i)
                                .map(|(j, a)| a * &v[j - i - 1])
                                .sum()
                        })
                        .collect();
                }
            }
            let mut next = vec![BigInt::zero(); size + 1];
            for (r, slot) in next.iter_mut().enumerate() {
                for (c, pc) in p.iter().enumerate().take(r + 1) {
                    if !pc.is_zero() && !t[r - c].is_zero() {
                        *slot += &t[r - c] * pc;
                    }
                }
            }
            p = next;
        }
        p.reverse();
        Ok(IntPoly::new(p))
    }

    /// `p(M)` by Horner's rule, exactly.
    pub fn eval_poly(&self, p: &IntPoly) -> Result<IntMatrix> {
        if !self.is_square() {
            return Err(Error::domain("polynomial evaluation needs a square matrix"));
        }
        let d = self.rows;
        let mut acc = IntMatrix::zeros(d, d);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self)?;
            for i in 0..d {
                acc.data[i * d + i] += c;
            }
        }
        Ok(acc)
    }

    /// Whether `char_poly(M)` annihilates `M`, checked exactly.
    pub fn satisfies_cayley_hamilton(&self) -> Result<bool> {
        Ok(self.eval_poly(&self.char_poly()?)?.is_zero())
    }

    /// Primitivity of a nonnegative square matrix: the least `k` with every
    /// entry of `M^k` positive, searched up to Wielandt's bound
    /// `(d-1)^2 + 1`.
    pub fn is_primitive(&self) -> Result<Primitivity> {
        if !self.is_square() || self.rows == 0 {
            return Err(Error::domain("primitivity needs a nonempty square matrix"));
        }
        if !self.is_nonnegative() {
            return Err(Error::domain(
                "primitivity is defined for nonnegative matrices",
            ));
        }
        let d = self.rows;
        let words = d.div_ceil(64);
        let mut base = vec![0u64; d * words];
        for i in 0..d {
            for j in 0..d {
                if !self.get(i, j).is_zero() {
                    base[i * words + j / 64] |= 1 << (j % 64);
                }
            }
        }
        let full_row: Vec<u64> = (0..words)
            .map(|w| {
                let bits = (d - w * 64).min(64);
                if bits == 64 {
                    u64::MAX
                } else {
                    (1u64 << bits) - 1
                }
            })
            .collect();
        let is_full = |m: &[u64]| m.chunks(words).all(|row| row == full_row.as_slice());

        let bound = (d - 1) * (d - 1) + 1;
        let mut seen = HashSet::new();
        let mut cur = base.clone();
        for k in 1..=bound {
            if is_full(&cur) {
                return Ok(Primitivity {
                    primitive: true,
                    witness: Some(k),
                });
            }
            if !seen.insert(cur.clone()) {
                break;
            }
            let mut next = vec![0u64; d * words];
            for i in 0..d {
                for kk in 0..d {
                    if cur[i * words + kk / 64] >> (kk % 64) & 1 == 1 {
                        for w in 0..words {
                            next[i * words + w] |= base[kk * words + w];
                        }
                    }
                }
            }
            cur = next;
        }
        Ok(Primitivity {
            primitive: false,
            witness: None,
        })
    }
}

impl fmt::Display for IntMatrix {
    /// Aligned text grid, one row per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(|x| x.to_string()).collect();
        let width = cells.iter().map(|c| c.len()).max().unwrap_or(1);
        for i in 0..self.rows {
            let line: Vec<String> = (0..self.cols)
                .map(|j| format!("{:>width$}", cells[i * self.cols + j]))
                .collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}
