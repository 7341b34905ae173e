//! Exact Gauss–Jordan elimination over any [`Scalar`] field.

use serde::Serialize;

use super::{Scalar, ScalarError};

/// Solution set of `M x = b`: a particular solution (when consistent) plus a
/// basis of the homogeneous null space.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LinearSolution {
    pub consistent: bool,
    pub particular: Option<Vec<Scalar>>,
    pub nullspace: Vec<Vec<Scalar>>,
    pub rank: usize,
}

struct Rref {
    rows: Vec<Vec<Scalar>>,
    /// pivot column of each of the first `pivots.len()` rows
    pivots: Vec<usize>,
}

/// Reduces the first `ncols` columns of `rows` to reduced row echelon form;
/// any further columns (an augmented right-hand side) are carried along.
fn rref(mut rows: Vec<Vec<Scalar>>, ncols: usize) -> Result<Rref, ScalarError> {
    let nrows = rows.len();
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..ncols {
        if top == nrows {
            break;
        }
        let Some(best) = (top..nrows)
            .filter(|&r| !rows[r][col].is_zero())
            .min_by_key(|&r| rows[r][col].complexity())
        else {
            continue;
        };
        rows.swap(top, best);
        let inv = rows[top][col].try_inv()?;
        let support: Vec<usize> = (col..rows[top].len())
            .filter(|&j| !rows[top][j].is_zero())
            .collect();
        for &j in &support {
            rows[top][j] = rows[top][j].try_mul(&inv)?;
        }
        let pivot_row = rows[top].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == top || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for &j in &support {
                let delta = factor.try_mul(&pivot_row[j])?;
                row[j] = row[j].try_sub(&delta)?;
            }
        }
        pivots.push(col);
        top += 1;
    }
    Ok(Rref { rows, pivots })
}

fn check_shape(matrix: &[Vec<Scalar>]) -> usize {
    let ncols = matrix.first().map_or(0, Vec::len);
    assert!(
        matrix.iter().all(|r| r.len() == ncols),
        "ragged matrix passed to the linear solver"
    );
    ncols
}

fn nullspace_from(rref: &Rref, ncols: usize) -> Vec<Vec<Scalar>> {
    let mut is_pivot = vec![false; ncols];
    for &p in &rref.pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Scalar::zero(); ncols];
        v[free] = Scalar::one();
        for (i, &p) in rref.pivots.iter().enumerate() {
            let e = &rref.rows[i][free];
            if !e.is_zero() {
                v[p] = e.neg_ref();
            }
        }
        basis.push(v);
    }
    basis
}

/// Solves `matrix · x = rhs` exactly.
pub fn solve_linear_system(
    matrix: &[Vec<Scalar>],
    rhs: &[Scalar],
) -> Result<LinearSolution, ScalarError> {
    assert_eq!(matrix.len(), rhs.len(), "rhs length must match row count");
    let ncols = check_shape(matrix);
    let aug: Vec<Vec<Scalar>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let red = rref(aug, ncols)?;
    let rank = red.pivots.len();
    let consistent = red.rows[rank..].iter().all(|r| r[ncols].is_zero());
    let particular = consistent.then(|| {
        let mut x = vec![Scalar::zero(); ncols];
        for (i, &p) in red.pivots.iter().enumerate() {
            x[p] = red.rows[i][ncols].clone();
        }
        x
    });
    Ok(LinearSolution {
        consistent,
        particular,
        nullspace: nullspace_from(&red, ncols),
        rank,
    })
}

/// Basis of `{x : matrix · x = 0}` for a matrix with `ncols` columns.
pub fn nullspace(matrix: &[Vec<Scalar>], ncols: usize) -> Result<Vec<Vec<Scalar>>, ScalarError> {
    if matrix.is_empty() {
        return Ok((0..ncols)
            .map(|i| {
                let mut v = vec![Scalar::zero(); ncols];
                v[i] = Scalar::one();
                v
            })
            .collect());
    }
    assert_eq!(check_shape(matrix), ncols);
    let red = rref(matrix.to_vec(), ncols)?;
    Ok(nullspace_from(&red, ncols))
}

/// Rank of the span of `vectors` (all of equal length).
pub fn rank(vectors: &[Vec<Scalar>]) -> Result<usize, ScalarError> {
    if vectors.is_empty() {
        return Ok(0);
    }
    let ncols = check_shape(vectors);
    Ok(rref(vectors.to_vec(), ncols)?.pivots.len())
}

/// `matrix · x`.
pub fn mat_vec(matrix: &[Vec<Scalar>], x: &[Scalar]) -> Result<Vec<Scalar>, ScalarError> {
    matrix
        .iter()
        .map(|row| {
            row.iter().zip(x).try_fold(Scalar::zero(), |acc, (a, b)| {
                if a.is_zero() || b.is_zero() {
                    Ok(acc)
                } else {
                    acc.try_add(&a.try_mul(b)?)
                }
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::int(n)
    }

    #[test]
    fn identity_system() {
        let m = vec![vec![s(1), s(0)], vec![s(0), s(1)]];
        let sol = solve_linear_system(&m, &[s(1), s(0)]).unwrap();
        assert!(sol.consistent);
        assert_eq!(sol.particular.unwrap(), vec![s(1), s(0)]);
        assert!(sol.nullspace.is_empty());
    }

    #[test]
    fn zero_row_has_full_nullspace() {
        let m = vec![vec![s(0), s(0)]];
        let sol = solve_linear_system(&m, &[s(0)]).unwrap();
        assert!(sol.consistent);
        assert_eq!(sol.nullspace.len(), 2);
    }

    #[test]
    fn inconsistent_system() {
        let m = vec![vec![s(1), s(1)], vec![s(2), s(2)]];
        let sol = solve_linear_system(&m, &[s(1), s(3)]).unwrap();
        assert!(!sol.consistent);
        assert!(sol.particular.is_none());
        assert_eq!(sol.nullspace.len(), 1);
    }

    #[test]
    fn symbolic_determinant_nonzero() {
        let l = Scalar::lambda();
        let m = Scalar::mu();
        let mat = vec![vec![l.clone(), m.clone()], vec![m, l]];
        let sol = solve_linear_system(&mat, &[s(0), s(0)]).unwrap();
        assert!(sol.nullspace.is_empty());
        assert_eq!(sol.rank, 2);
    }

    #[test]
    fn solutions_substitute_back() {
        let l = Scalar::lambda();
        let mat = vec![
            vec![l.clone(), s(1), s(2)],
            vec![s(1), l.clone(), s(0)],
        ];
        let rhs = vec![s(3), Scalar::mu()];
        let sol = solve_linear_system(&mat, &rhs).unwrap();
        let x = sol.particular.unwrap();
        assert_eq!(mat_vec(&mat, &x).unwrap(), rhs);
        for v in &sol.nullspace {
            assert!(mat_vec(&mat, v).unwrap().iter().all(Scalar::is_zero));
        }
    }
}
