//! Exact rational triangular solves and determinants.
//!
//! Matrices are row-major `Vec<Vec<Coeff>>`. The systems solved here are of
//! the form `x · A = b` (row vector times matrix): row `i` of `A` holds the
//! coordinates of basis element `i`, and `x` holds the sought coefficients.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::symfunc::Coeff;

/// Which side of the diagonal may carry nonzeros.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Triangle {
    /// `A[i][j] = 0` whenever `j < i`.
    Upper,
    /// `A[i][j] = 0` whenever `j > i`.
    Lower,
}

/// Is `a` triangular on the given side?
pub fn is_triangular(a: &[Vec<Coeff>], side: Triangle) -> bool {
    a.iter().enumerate().all(|(i, row)| {
        row.iter().enumerate().all(|(j, c)| match side {
            Triangle::Upper => j >= i || c.is_zero(),
            Triangle::Lower => j <= i || c.is_zero(),
        })
    })
}

/// Solves `x · A = b` for triangular `A` by substitution.
///
/// For `Upper`, column `j` only involves rows `0..=j`, so the unknowns are
/// resolved front to back; `Lower` runs back to front.
pub fn solve_triangular(a: &[Vec<Coeff>], b: &[Coeff], side: Triangle) -> Result<Vec<Coeff>> {
    let n = a.len();
    if b.len() != n || a.iter().any(|row| row.len() != n) {
        return Err(Error::Invariant(format!(
            "triangular solve needs a square system, got {n} rows and {} right-hand entries",
            b.len()
        )));
    }
    let mut x = vec![Coeff::zero(); n];
    let order: Box<dyn Iterator<Item = usize>> = match side {
        Triangle::Upper => Box::new(0..n),
        Triangle::Lower => Box::new((0..n).rev()),
    };
    for j in order {
        let pivot = &a[j][j];
        if pivot.is_zero() {
            return Err(Error::ZeroPivot(format!("index {j}")));
        }
        let mut acc = b[j].clone();
        let others: Box<dyn Iterator<Item = usize>> = match side {
            Triangle::Upper => Box::new(0..j),
            Triangle::Lower => Box::new(j + 1..n),
        };
        for i in others {
            if !a[i][j].is_zero() && !x[i].is_zero() {
                acc -= &x[i] * &a[i][j];
            }
        }
        x[j] = acc / pivot;
    }
    Ok(x)
}

/// Determinant by Gaussian elimination with exact pivots. Makes no use of
/// triangular structure.
pub fn determinant(a: &[Vec<Coeff>]) -> Coeff {
    let n = a.len();
    let mut m: Vec<Vec<Coeff>> = a.to_vec();
    let mut det = Coeff::one();
    for col in 0..n {
        let Some(pivot_row) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Coeff::zero();
        };
        if pivot_row != col {
            m.swap(pivot_row, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det *= &pivot;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &pivot;
            let (upper, lower) = m.split_at_mut(r);
            for (target, source) in lower[0][col..].iter_mut().zip(&upper[col][col..]) {
                *target -= &factor * source;
            }
        }
    }
    det
}
