//! Exact Gaussian elimination over the rationals.

use num::{One, Zero};

use crate::exactnum::Rational;

/// Dense matrix stored row-major; rows are equations, columns unknowns.
pub type Matrix = Vec<Vec<Rational>>;

/// Reduces `m` in place to reduced row-echelon form and returns the pivot columns.
pub fn rref(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        if !inv.is_one() {
            for x in m[r][c..].iter_mut() {
                *x *= &inv;
            }
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    pivots
}

pub fn rank(m: &Matrix) -> usize {
    let mut a = m.clone();
    rref(&mut a).len()
}

/// Basis of `{x : m x = 0}`, one vector per free column, in column order.
pub fn nullspace(m: &Matrix, cols: usize) -> Vec<Vec<Rational>> {
    let mut a = m.clone();
    let pivots = rref(&mut a);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); cols];
        v[free] = Rational::one();
        for (row, &pc) in a.iter().zip(&pivots) {
            v[pc] = -row[free].clone();
        }
        basis.push(v);
    }
    basis
}

/// One solution of `m x = b` (free variables set to zero), or `None` if inconsistent.
pub fn solve(m: &Matrix, b: &[Rational], cols: usize) -> Option<Vec<Rational>> {
    let mut aug: Matrix = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (row, &pc) in aug.iter().zip(&pivots) {
        x[pc] = row[cols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn mat(rows: &[&[i64]]) -> Matrix {
        rows.iter()
            .map(|r| r.iter().map(|&x| q(x)).collect())
            .collect()
    }

    #[test]
    fn nullspace_of_rank_one() {
        let m = mat(&[&[1, 2, 3], &[2, 4, 6]]);
        let ns = nullspace(&m, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for row in &m {
                let dot: Rational = row.iter().zip(v).map(|(a, b)| a * b).sum();
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = mat(&[&[1, 1], &[1, -1]]);
        assert_eq!(solve(&m, &[q(3), q(1)], 2), Some(vec![q(2), q(1)]));
        let m = mat(&[&[1, 1], &[2, 2]]);
        assert_eq!(solve(&m, &[q(1), q(3)], 2), None);
    }

    #[test]
    fn rank_counts_independent_rows() {
        assert_eq!(rank(&mat(&[&[1, 0], &[0, 0], &[3, 0]])), 1);
        assert_eq!(rank(&mat(&[])), 0);
    }
}
