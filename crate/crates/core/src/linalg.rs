//! Gaussian elimination over `Q(q,t,a)`.

use thiserror::Error;

use crate::exactalg::FieldElem;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("singular system (rank {rank} < {size})")]
    Singular { rank: usize, size: usize },
    #[error("system is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
}

/// Solves the square system `A x = b` exactly, pivoting on the first
/// nonzero entry of each column.
pub fn solve(mut a: Vec<Vec<FieldElem>>, mut b: Vec<FieldElem>) -> Result<Vec<FieldElem>, SolveError> {
    let size = a.len();
    if b.len() != size || a.iter().any(|row| row.len() != size) {
        return Err(SolveError::NotSquare { rows: size, cols: a.first().map_or(0, |r| r.len()) });
    }
    for col in 0..size {
        let Some(p) = (col..size).find(|&r| !a[r][col].is_zero()) else {
            return Err(SolveError::Singular { rank: col, size });
        };
        a.swap(col, p);
        b.swap(col, p);
        let inv = a[col][col].inv().expect("pivot is nonzero");
        for x in &mut a[col][col..size] {
            *x = x.mul_ref(&inv);
        }
        b[col] = b[col].mul_ref(&inv);
        let (pivot_rows, rest) = a.split_at_mut(col + 1);
        let pivot = &pivot_rows[col];
        for (off, row) in rest.iter_mut().enumerate() {
            let f = row[col].clone();
            if f.is_zero() {
                continue;
            }
            for k in col..size {
                if !pivot[k].is_zero() {
                    row[k] = row[k].sub_ref(&f.mul_ref(&pivot[k]));
                }
            }
            let r = col + 1 + off;
            b[r] = b[r].sub_ref(&f.mul_ref(&b[col]));
        }
    }
    // back substitution on the unit upper triangular system
    let mut x = vec![FieldElem::zero(); size];
    for r in (0..size).rev() {
        let mut acc = b[r].clone();
        for k in r + 1..size {
            if !a[r][k].is_zero() {
                acc = acc.sub_ref(&a[r][k].mul_ref(&x[k]));
            }
        }
        x[r] = acc;
    }
    Ok(x)
}
