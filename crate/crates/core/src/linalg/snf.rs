//! Smith normal form over `Z`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

/// Diagonal data of the Smith normal form of an `r × c` matrix, read as a
/// presentation matrix with rows as relations and columns as generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    /// Nonzero diagonal entries `d_1 | d_2 | ⋯`, all positive.
    pub invariant_factors: Vec<BigInt>,
    /// `c - rank`, the rank of the free part of the cokernel.
    pub free_rank: usize,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    /// Invariant factors other than 1.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariant_factors
            .iter()
            .filter(|d| !d.is_one())
            .cloned()
            .collect()
    }
}

/// Smith normal form by repeated minimal-pivot elimination.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let rows = m.rows();
    let cols = m.cols();
    let mut a: Vec<Vec<BigInt>> = m.to_rows();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // Smallest nonzero entry in the trailing block.
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, x) in row.iter().enumerate().skip(t) {
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }

        let mut clean = true;
        for i in t + 1..rows {
            if a[i][t].is_zero() {
                continue;
            }
            let q = a[i][t].div_floor(&a[t][t]);
            let (top, bottom) = a.split_at_mut(i);
            for (x, y) in bottom[0][t..].iter_mut().zip(&top[t][t..]) {
                *x -= &q * y;
            }
            if !a[i][t].is_zero() {
                clean = false;
            }
        }
        for j in t + 1..cols {
            if a[t][j].is_zero() {
                continue;
            }
            let q = a[t][j].div_floor(&a[t][t]);
            for row in a.iter_mut().skip(t) {
                let v = &q * &row[t];
                row[j] -= v;
            }
            if !a[t][j].is_zero() {
                clean = false;
            }
        }
        if !clean {
            continue;
        }
        // Pivot must divide the rest; otherwise fold an offending row in.
        let p = a[t][t].clone();
        let bad = (t + 1..rows).find(|&i| a[i][t + 1..].iter().any(|x| !x.is_multiple_of(&p)));
        if let Some(i) = bad {
            let (top, bottom) = a.split_at_mut(i);
            for (x, y) in top[t][t + 1..].iter_mut().zip(&bottom[0][t + 1..]) {
                *x += y;
            }
            continue;
        }
        diag.push(p.abs());
        t += 1;
    }
    SmithForm {
        free_rank: cols - diag.len(),
        invariant_factors: diag,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn snf(rows: &[&[i64]]) -> SmithForm {
        smith_normal_form(&IntMatrix::from_rows(rows).unwrap())
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn coprime_diagonal() {
        let s = snf(&[&[2, 0], &[0, 3]]);
        assert_eq!(s.invariant_factors, ints(&[1, 6]));
        assert_eq!(s.free_rank, 0);
    }

    #[test]
    fn zero_matrix() {
        let s = smith_normal_form(&IntMatrix::zeros(2, 4));
        assert!(s.invariant_factors.is_empty());
        assert_eq!(s.free_rank, 4);
        let s = smith_normal_form(&IntMatrix::zeros(0, 3));
        assert_eq!(s.free_rank, 3);
    }

    #[test]
    fn textbook_example() {
        let s = snf(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        assert_eq!(s.invariant_factors, ints(&[2, 6, 12]));
        let s = snf(&[&[4, 6], &[6, 4]]);
        assert_eq!(s.invariant_factors, ints(&[2, 10]));
        assert_eq!(s.torsion(), ints(&[2, 10]));
    }

    #[test]
    fn rectangular() {
        let s = snf(&[&[2, 0, 0], &[0, 4, 0]]);
        assert_eq!(s.invariant_factors, ints(&[2, 4]));
        assert_eq!(s.free_rank, 1);
        let s = snf(&[&[1, -1], &[2, -2], &[0, 0]]);
        assert_eq!(s.invariant_factors, ints(&[1]));
        assert_eq!(s.free_rank, 1);
    }
}
