//! Exact Gaussian elimination over the rationals.

use num_traits::Zero;

use super::rational::Rational;

/// Row-reduces `rows` in place and returns the pivot columns.
fn reduce(rows: &mut [Vec<Rational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(k) = (r..rows.len()).find(|&k| !rows[k][c].is_zero()) else {
            continue;
        };
        rows.swap(r, k);
        let inv = rows[r][c].recip();
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (k, row) in rows.iter_mut().enumerate() {
            if k != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (v, pv) in row.iter_mut().zip(&pivot_row) {
                    *v -= &f * pv;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

/// Rank of a dense rational matrix.
pub fn rank(matrix: &[Vec<Rational>]) -> usize {
    let cols = matrix.first().map_or(0, Vec::len);
    let mut rows = matrix.to_vec();
    reduce(&mut rows, cols).len()
}

/// Solves the square system `A x = b`; `None` when `A` is singular.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.len();
    let mut rows: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, v)| {
            assert_eq!(row.len(), n, "solve needs a square matrix");
            let mut r = row.clone();
            r.push(v.clone());
            r
        })
        .collect();
    let pivots = reduce(&mut rows, n);
    if pivots.len() < n {
        return None;
    }
    Some(rows.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rational::{int, q};

    #[test]
    fn solves_small_system() {
        // x + 2y = 5, 3x - y = 1  →  x = 1, y = 2
        let a = vec![vec![int(1), int(2)], vec![int(3), int(-1)]];
        assert_eq!(solve(&a, &[int(5), int(1)]).unwrap(), vec![int(1), int(2)]);
    }

    #[test]
    fn singular_is_none() {
        let a = vec![vec![int(1), int(2)], vec![q(1, 2), int(1)]];
        assert!(solve(&a, &[int(1), int(1)]).is_none());
        assert_eq!(rank(&a), 1);
    }
}
