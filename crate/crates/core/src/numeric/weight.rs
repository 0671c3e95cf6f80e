//! The orthogonality weights `Δ₊` and `Δ = c₊Δ₊` on `(iℝ)ⁿ`.

use num_complex::Complex64;
use serde::Serialize;

use super::gamma::{is_pole, ln_gamma};
use crate::error::{Error, Result};
use crate::exactpoly::{to_f64, Rational};
use crate::operators::coeffs::negative_finite_roots;
use crate::operators::Params;
use crate::weyl::{classify_orbit, Orbit};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WeightKind {
    /// `Δ₊`, the symmetric weight.
    Plus,
    /// `Δ = c₊Δ₊`.
    Full,
}

/// Floating-point copy of the parameters used by the weights.
#[derive(Clone, Debug)]
pub(crate) struct FloatParams {
    abcd: [f64; 4],
    t: f64,
    t0: f64,
    u0: f64,
    tn: f64,
    un: f64,
}

impl FloatParams {
    pub(crate) fn new(p: &Params) -> Result<Self> {
        p.check_positive()?;
        let f = |r: &Rational| to_f64(r);
        Ok(FloatParams {
            abcd: p.wilson_abcd().map(|v| f(&v)),
            t: f(&p.t),
            t0: f(&p.t0),
            u0: f(&p.u0),
            tn: f(&p.tn),
            un: f(&p.un),
        })
    }
}

/// `−ln Γ(z)`, or `None` where `1/Γ(z)` vanishes.
fn ln_recip_gamma(z: Complex64) -> Result<Option<Complex64>> {
    if is_pole(z) {
        return Ok(None);
    }
    Ok(Some(-ln_gamma(z)?))
}

/// `ln Δ₊(x)`, summed from log-Gamma terms; `None` where `Δ₊` vanishes
/// (a tensor node on `x_j = ±x_k` or `x_j = 0`).
pub(crate) fn ln_delta_plus(x: &[Complex64], fp: &FloatParams) -> Result<Option<Complex64>> {
    let mut acc = Complex64::new(0.0, 0.0);
    for (j, &xj) in x.iter().enumerate() {
        for &xk in &x[j + 1..] {
            for s1 in [1.0, -1.0] {
                for s2 in [1.0, -1.0] {
                    let z = s1 * xj + s2 * xk;
                    let Some(r) = ln_recip_gamma(z)? else { return Ok(None) };
                    acc += ln_gamma(fp.t + z)? + r;
                }
            }
        }
        for s in [1.0, -1.0] {
            for v in fp.abcd {
                acc += ln_gamma(v + s * xj)?;
            }
            let Some(r) = ln_recip_gamma(2.0 * s * xj)? else {
                return Ok(None);
            };
            acc += r;
        }
    }
    Ok(Some(acc))
}

/// `c₊(x) = ∏_{α∈Σ⁻} c_α(x)` in floating point.
pub(crate) fn c_plus_complex(x: &[Complex64], fp: &FloatParams) -> Complex64 {
    let mut acc = Complex64::new(1.0, 0.0);
    for a in negative_finite_roots(x.len()) {
        let ax: Complex64 = a.v.iter().zip(x).map(|(&v, &xi)| v as f64 * xi).sum();
        let num = match classify_orbit(&a).expect("finite root") {
            Orbit::Mid => fp.t + ax,
            Orbit::An => (fp.tn + fp.un + ax / 2.0) * (fp.tn - fp.un + ax / 2.0),
            Orbit::A0 => (fp.t0 + fp.u0 + ax / 2.0) * (fp.t0 - fp.u0 + ax / 2.0),
        };
        acc *= num / ax;
    }
    acc
}

/// `Δ₊(x)` or `Δ(x)`; requires `a, b, c, d, t > 0`.
pub fn weight_eval(x: &[Complex64], kind: WeightKind, params: &Params) -> Result<Complex64> {
    let fp = FloatParams::new(params)?;
    weight_with(x, kind, &fp)
}

pub(crate) fn weight_with(x: &[Complex64], kind: WeightKind, fp: &FloatParams) -> Result<Complex64> {
    let Some(ln) = ln_delta_plus(x, fp).map_err(|e| Error::Degenerate(format!("weight at {x:?}: {e}")))? else {
        return Ok(Complex64::new(0.0, 0.0));
    };
    let plus = ln.exp();
    Ok(match kind {
        WeightKind::Plus => plus,
        WeightKind::Full => c_plus_complex(x, fp) * plus,
    })
}

/// `ln(1/(Γ(iw)Γ(−iw))) = ln(w sinh(πw)/π)`; `None` at `w = 0`.
fn ln_recip_gamma_pair(w: f64) -> Option<f64> {
    let a = w.abs();
    if a == 0.0 {
        return None;
    }
    let pa = std::f64::consts::PI * a;
    // ln sinh(πa) without overflow.
    Some(a.ln() + pa + (-(-2.0 * pa).exp()).ln_1p() - std::f64::consts::LN_2 - std::f64::consts::PI.ln())
}

/// `ln |Γ(v + iy)|² = ln Γ(v+iy)Γ(v−iy)`.
fn ln_gamma_abs2(v: f64, y: f64) -> Result<f64> {
    Ok(2.0 * ln_gamma(Complex64::new(v, y))?.re)
}

/// Single-variable part of `ln Δ₊` at `x_j = iy`; `None` at `y = 0`.
pub(crate) fn ln_delta_axis(y: f64, fp: &FloatParams) -> Result<Option<f64>> {
    let Some(r) = ln_recip_gamma_pair(2.0 * y) else {
        return Ok(None);
    };
    let mut acc = r;
    for v in fp.abcd {
        acc += ln_gamma_abs2(v, y)?;
    }
    Ok(Some(acc))
}

/// Pair part of `ln Δ₊` at `x = (iy₁, iy₂)`; `None` on `y₁ = ±y₂`.
pub(crate) fn ln_delta_pair(y1: f64, y2: f64, fp: &FloatParams) -> Result<Option<f64>> {
    let mut acc = 0.0;
    for w in [y1 + y2, y1 - y2] {
        let Some(r) = ln_recip_gamma_pair(w) else {
            return Ok(None);
        };
        acc += r + ln_gamma_abs2(fp.t, w)?;
    }
    Ok(Some(acc))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iy(v: &[f64]) -> Vec<Complex64> {
        v.iter().map(|&y| Complex64::new(0.0, y)).collect()
    }

    #[test]
    fn plus_is_real_positive() {
        let p = Params::p_star();
        let w = weight_eval(&iy(&[0.1, 0.7]), WeightKind::Plus, &p).unwrap();
        assert!(w.re > 0.0 && w.re.is_finite());
        assert!(w.im.abs() <= 1e-12 * w.re);
    }

    #[test]
    fn plus_is_invariant() {
        let p = Params::p_alt();
        let base = [0.37, -1.21];
        let w = weight_eval(&iy(&base), WeightKind::Plus, &p).unwrap();
        for v in [[-0.37, -1.21], [0.37, 1.21], [-1.21, 0.37], [1.21, -0.37]] {
            let u = weight_eval(&iy(&v), WeightKind::Plus, &p).unwrap();
            assert!((u - w).norm() <= 1e-10 * w.norm());
        }
    }

    #[test]
    fn axis_factorization_matches_direct() {
        let p = Params::p_star();
        let fp = FloatParams::new(&p).unwrap();
        for y in [[0.1, 0.7], [-2.3, 5.9], [11.0, -0.4], [30.5, 29.0]] {
            let direct = ln_delta_plus(&iy(&y), &fp).unwrap().unwrap();
            let split = ln_delta_axis(y[0], &fp).unwrap().unwrap()
                + ln_delta_axis(y[1], &fp).unwrap().unwrap()
                + ln_delta_pair(y[0], y[1], &fp).unwrap().unwrap();
            assert!((direct.re - split).abs() <= 1e-9 * (1.0 + split.abs()), "{y:?}");
        }
        assert!(ln_delta_pair(0.3, -0.3, &fp).unwrap().is_none());
        assert!(ln_delta_axis(0.0, &fp).unwrap().is_none());
    }

    #[test]
    fn rejects_nonpositive_parameters() {
        let mut p = Params::p_star();
        p.un = crate::exactpoly::int(1);
        assert!(weight_eval(&iy(&[0.1, 0.2]), WeightKind::Plus, &p).is_err());
    }
}
