use num_traits::Zero;
use rayon::prelude::*;

use super::poly::{Exponent, SparsePoly};
use super::rational::{q, Rational};
use crate::error::{Error, Result};

const ODD_PRIMES: [i64; 16] = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59];

/// Default grid offsets `1/3, 1/5, 1/7, ...`, one per variable.
pub fn default_offsets(nvars: usize) -> Vec<Rational> {
    assert!(nvars <= ODD_PRIMES.len(), "too many variables for default offsets");
    ODD_PRIMES[..nvars].iter().map(|&p| q(1, p)).collect()
}

/// All points of the tensor grid `{k + offset_i : k = 0..points-1}` in row-major order.
pub fn grid_points(points: usize, offsets: &[Rational]) -> Vec<Vec<Rational>> {
    let n = offsets.len();
    let total = points.pow(n as u32);
    (0..total)
        .map(|mut idx| {
            let mut pt = vec![Rational::zero(); n];
            for i in (0..n).rev() {
                let k = idx % points;
                idx /= points;
                pt[i] = Rational::from_integer((k as i64).into()) + &offsets[i];
            }
            pt
        })
        .collect()
}

fn eval_grid<F>(points: usize, offsets: &[Rational], expr: F) -> Result<Vec<Rational>>
where
    F: Fn(&[Rational]) -> Result<Rational> + Sync,
{
    grid_points(points, offsets)
        .into_par_iter()
        .map(|pt| {
            expr(&pt).map_err(|e| match e {
                Error::Pole(_) | Error::ZeroLinearForm => Error::GridPole { point: pt.clone() },
                other => other,
            })
        })
        .collect()
}

/// Certifies that `expr` vanishes identically, given that it is a polynomial
/// of degree `< degree_bound` in each variable once denominators are cleared.
///
/// A nonzero polynomial of per-variable degree `< D` cannot vanish on a full
/// `D × ... × D` tensor grid, so an all-zero grid means the identity holds.
pub fn grid_verify_zero<F>(nvars: usize, degree_bound: usize, offsets: Option<&[Rational]>, expr: F) -> Result<bool>
where
    F: Fn(&[Rational]) -> Result<Rational> + Sync,
{
    let offsets = offsets.map(<[_]>::to_vec).unwrap_or_else(|| default_offsets(nvars));
    if offsets.len() != nvars {
        return Err(Error::Dimension {
            expected: nvars,
            got: offsets.len(),
        });
    }
    let values = eval_grid(degree_bound, &offsets, expr)?;
    Ok(values.iter().all(Zero::is_zero))
}

/// Coefficients `c_0..c_d` of the unique polynomial of degree `≤ d` through the
/// `d+1` points `(z_k, v_k)` (Newton divided differences, then expansion).
pub fn univariate_interpolate(z: &[Rational], v: &[Rational]) -> Vec<Rational> {
    let m = z.len();
    let mut dd = v.to_vec();
    for j in 1..m {
        for k in (j..m).rev() {
            dd[k] = (&dd[k] - &dd[k - 1]) / (&z[k] - &z[k - j]);
        }
    }
    // Horner-style expansion of the Newton form
    let mut coeffs = vec![Rational::zero(); m];
    for k in (0..m).rev() {
        // coeffs <- coeffs * (x - z_k) + dd[k]
        let mut next = vec![Rational::zero(); m];
        for e in 0..m {
            if coeffs[e].is_zero() {
                continue;
            }
            if e + 1 < m {
                next[e + 1] += &coeffs[e];
            }
            next[e] -= &coeffs[e] * &z[k];
        }
        next[0] += &dd[k];
        coeffs = next;
    }
    coeffs
}

/// Reconstructs the polynomial (per-variable degree `< points`) that agrees with
/// `f` on the tensor grid, by exact interpolation one axis at a time.
pub fn interpolate_tensor<F>(nvars: usize, points: usize, offsets: Option<&[Rational]>, f: F) -> Result<SparsePoly>
where
    F: Fn(&[Rational]) -> Result<Rational> + Sync,
{
    let offsets = offsets.map(<[_]>::to_vec).unwrap_or_else(|| default_offsets(nvars));
    let mut vals = eval_grid(points, &offsets, f)?;
    let stride = |axis: usize| points.pow((nvars - 1 - axis) as u32);
    for (axis, off) in offsets.iter().enumerate().take(nvars) {
        let z: Vec<Rational> = (0..points)
            .map(|k| Rational::from_integer((k as i64).into()) + off)
            .collect();
        let s = stride(axis);
        let total = vals.len();
        for base in 0..total {
            // visit each fiber once, from its first element
            if (base / s) % points != 0 {
                continue;
            }
            let fiber: Vec<Rational> = (0..points).map(|k| vals[base + k * s].clone()).collect();
            let c = univariate_interpolate(&z, &fiber);
            for (k, ck) in c.into_iter().enumerate() {
                vals[base + k * s] = ck;
            }
        }
    }
    let mut p = SparsePoly::zero(nvars);
    for (mut idx, c) in vals.into_iter().enumerate() {
        let mut e = Exponent::from_elem(0, nvars);
        for i in (0..nvars).rev() {
            e[i] = (idx % points) as u16;
            idx /= points;
        }
        p.add_term(e, c);
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rational::int;

    #[test]
    fn grid_detects_identity_and_non_identity() {
        let ok = grid_verify_zero(2, 3, None, |x| {
            Ok((&x[0] - &x[1]) * (&x[0] + &x[1]) - (&x[0] * &x[0] - &x[1] * &x[1]))
        })
        .unwrap();
        assert!(ok);
        let bad = grid_verify_zero(2, 2, None, |x| Ok(&x[0] - &x[1])).unwrap();
        assert!(!bad);
    }

    #[test]
    fn grid_pole_is_reported() {
        // 1/(x1 - 1/3) has a pole at the first grid point
        let err = grid_verify_zero(2, 2, None, |x| {
            let d = &x[0] - q(1, 3);
            if d.is_zero() {
                return Err(Error::Pole("x1 = 1/3".into()));
            }
            Ok(d.recip())
        })
        .unwrap_err();
        assert!(matches!(err, Error::GridPole { .. }));
    }

    #[test]
    fn univariate_recovers_cubic() {
        let z: Vec<Rational> = (0..4).map(|k| int(k) + q(1, 3)).collect();
        let v: Vec<Rational> = z.iter().map(|x| x * x * x - int(2) * x + int(7)).collect();
        assert_eq!(univariate_interpolate(&z, &v), vec![int(7), int(-2), int(0), int(1)]);
    }

    #[test]
    fn tensor_interpolation_roundtrip() {
        let x1 = SparsePoly::var(3, 0);
        let x3 = SparsePoly::var(3, 2);
        let p = &(&x1.pow(2) * &x3) - &SparsePoly::var(3, 1).scale(&q(5, 2));
        let p = &p + &SparsePoly::one(3);
        let r = interpolate_tensor(3, 3, None, |x| Ok(p.eval(x))).unwrap();
        assert_eq!(r, p);
        assert_eq!(r.constant_term(), int(1));
    }
}
