//! Tensor Gauss–Legendre quadrature over `(iℝ)²` with `x = iy` and measure `(2π)⁻² dy`.

use std::f64::consts::PI;
use std::num::NonZeroUsize;

use gauss_quad::GaussLegendre;
use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use super::weight::{c_plus_complex, ln_delta_axis, ln_delta_pair, FloatParams, WeightKind};
use crate::error::{Error, Result};
use crate::exactpoly::{to_f64, SparsePoly};
use crate::operators::Params;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuadratureSpec {
    /// Integrate `y ∈ [−T, T]` on each axis.
    pub truncation: f64,
    pub panels: usize,
    pub nodes_per_panel: usize,
}

impl Default for QuadratureSpec {
    /// `T = 40`, 16 panels of 32 nodes. The integrand decays exponentially in
    /// `|y|`, so truncation at `T = 40` is far below `f64` precision. The panel
    /// count is set by the Gamma poles at distance `t` (and `a, b, c, d`) from
    /// the contour: with 8 panels the doubling estimate already exceeds `1e−4`
    /// relative for small parameters.
    fn default() -> Self {
        QuadratureSpec {
            truncation: 40.0,
            panels: 16,
            nodes_per_panel: 32,
        }
    }
}

impl QuadratureSpec {
    pub fn validate(&self) -> Result<()> {
        if self.truncation.is_nan() || self.truncation < 20.0 {
            return Err(Error::Config(format!(
                "truncation must be ≥ 20, got {}",
                self.truncation
            )));
        }
        if self.panels == 0 || self.nodes_per_panel == 0 || self.panels * self.nodes_per_panel < 200 {
            return Err(Error::Config(format!(
                "need at least 200 nodes per axis, got {} × {}",
                self.panels, self.nodes_per_panel
            )));
        }
        Ok(())
    }

    /// The refined rule used for the error estimate.
    pub fn doubled(&self) -> Self {
        QuadratureSpec {
            nodes_per_panel: 2 * self.nodes_per_panel,
            ..self.clone()
        }
    }

    /// Composite nodes and weights on `[−T, T]`.
    fn axis(&self) -> Vec<(f64, f64)> {
        let rule = GaussLegendre::new(NonZeroUsize::new(self.nodes_per_panel).expect("validated"));
        let width = 2.0 * self.truncation / self.panels as f64;
        let mut out = Vec::with_capacity(self.panels * self.nodes_per_panel);
        for k in 0..self.panels {
            let mid = -self.truncation + (k as f64 + 0.5) * width;
            for (x, w) in rule.iter() {
                out.push((mid + 0.5 * width * x, 0.5 * width * w));
            }
        }
        out
    }
}

/// Sum in a fixed binary tree, independent of thread scheduling.
pub fn pairwise_sum(v: &[Complex64]) -> Complex64 {
    match v.len() {
        0 => Complex64::new(0.0, 0.0),
        1 => v[0],
        n => pairwise_sum(&v[..n / 2]) + pairwise_sum(&v[n / 2..]),
    }
}

/// Weighted nodes of one quadrature rule: `mass_k = Δ(x_k) w_k / (2π)²`.
struct Grid {
    points: Vec<[Complex64; 2]>,
    mass: Vec<Complex64>,
}

impl Grid {
    /// On `(iℝ)²` the weight splits into per-axis factors and a pair factor,
    /// so only the latter is evaluated at every node.
    fn build(spec: &QuadratureSpec, kind: WeightKind, fp: &FloatParams) -> Result<Grid> {
        let axis = spec.axis();
        let m = axis.len();
        let norm = 1.0 / (2.0 * PI).powi(2);
        let single = axis
            .iter()
            .map(|&(y, _)| ln_delta_axis(y, fp))
            .collect::<Result<Vec<_>>>()?;
        let cells: Vec<Result<([Complex64; 2], Complex64)>> = (0..m * m)
            .into_par_iter()
            .map(|idx| {
                let (i, j) = (idx / m, idx % m);
                let ((y1, w1), (y2, w2)) = (axis[i], axis[j]);
                let x = [Complex64::new(0.0, y1), Complex64::new(0.0, y2)];
                let zero = Complex64::new(0.0, 0.0);
                let (Some(a), Some(b), Some(c)) = (single[i], single[j], ln_delta_pair(y1, y2, fp)?) else {
                    // Δ₊ vanishes here, and c₊ has a removable pole.
                    return Ok((x, zero));
                };
                let plus = (a + b + c).exp() * (w1 * w2 * norm);
                let mass = match kind {
                    WeightKind::Plus => Complex64::new(plus, 0.0),
                    WeightKind::Full => c_plus_complex(&x, fp) * plus,
                };
                Ok((x, mass))
            })
            .collect();
        let mut points = Vec::with_capacity(m * m);
        let mut mass = Vec::with_capacity(m * m);
        for c in cells {
            let (x, w) = c?;
            points.push(x);
            mass.push(w);
        }
        Ok(Grid { points, mass })
    }

    fn integrate(&self, h: impl Fn(&[Complex64; 2]) -> Complex64 + Sync) -> Complex64 {
        let terms: Vec<Complex64> = self.points.par_iter().zip(&self.mass).map(|(x, w)| h(x) * w).collect();
        pairwise_sum(&terms)
    }
}

/// A two-variable polynomial with `f64` coefficients.
struct FloatPoly(Vec<(u16, u16, f64)>);

impl FloatPoly {
    fn new(p: &SparsePoly) -> Result<Self> {
        if p.nvars() != 2 {
            return Err(Error::Dimension {
                expected: 2,
                got: p.nvars(),
            });
        }
        Ok(FloatPoly(p.terms().map(|(e, c)| (e[0], e[1], to_f64(c))).collect()))
    }

    fn eval(&self, x: &[Complex64; 2]) -> Complex64 {
        self.0
            .iter()
            .map(|&(a, b, c)| c * x[0].powi(a as i32) * x[1].powi(b as i32))
            .sum()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct QuadResult {
    pub re: f64,
    pub im: f64,
    /// `|I(spec) − I(doubled)|`.
    pub error_estimate: f64,
    /// Set when the error estimate exceeds the requested relative tolerance.
    pub warning: Option<String>,
}

impl QuadResult {
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

/// Prebuilt rules (at `spec` and at the doubled spec) for repeated inner products.
pub struct Quadrature {
    kind: WeightKind,
    base: Grid,
    fine: Grid,
    tolerance: f64,
}

impl Quadrature {
    /// Rules for `n = 2`; `tolerance` is the relative error estimate above which
    /// results carry a warning.
    pub fn new(spec: &QuadratureSpec, kind: WeightKind, params: &Params, tolerance: f64) -> Result<Self> {
        spec.validate()?;
        let fp = FloatParams::new(params)?;
        Ok(Quadrature {
            kind,
            base: Grid::build(spec, kind, &fp)?,
            fine: Grid::build(&spec.doubled(), kind, &fp)?,
            tolerance,
        })
    }

    pub fn kind(&self) -> WeightKind {
        self.kind
    }

    /// `∫ f(x)g(x)Δ(x) dx` over `(iℝ)²`.
    pub fn inner(&self, f: &SparsePoly, g: &SparsePoly) -> Result<QuadResult> {
        let (ff, gg) = (FloatPoly::new(f)?, FloatPoly::new(g)?);
        Ok(self.run(|x| ff.eval(x) * gg.eval(x)))
    }

    /// All pairwise inner products `⟨f_i,f_j⟩`, evaluating each `f_i` on the
    /// nodes once. Entry `[i][j]` is filled for `i ≤ j` only.
    pub fn gram(&self, fs: &[SparsePoly]) -> Result<Vec<Vec<Option<QuadResult>>>> {
        let polys = fs.iter().map(FloatPoly::new).collect::<Result<Vec<_>>>()?;
        let tables = |grid: &Grid| -> Vec<Vec<Complex64>> {
            polys
                .iter()
                .map(|f| grid.points.par_iter().map(|x| f.eval(x)).collect())
                .collect()
        };
        let (tb, tf) = (tables(&self.base), tables(&self.fine));
        let dot = |grid: &Grid, a: &[Complex64], b: &[Complex64]| {
            let terms: Vec<Complex64> = (0..a.len())
                .into_par_iter()
                .map(|k| a[k] * b[k] * grid.mass[k])
                .collect();
            pairwise_sum(&terms)
        };
        let k = fs.len();
        let mut out = vec![vec![None; k]; k];
        for i in 0..k {
            for j in i..k {
                let coarse = dot(&self.base, &tb[i], &tb[j]);
                let fine = dot(&self.fine, &tf[i], &tf[j]);
                out[i][j] = Some(self.result(coarse, fine));
            }
        }
        Ok(out)
    }

    /// `⟨f₁,g₁⟩ − ⟨f₂,g₂⟩` as a single integral, so the error estimate refers
    /// to the difference rather than to either term.
    pub fn inner_difference(
        &self,
        f1: &SparsePoly,
        g1: &SparsePoly,
        f2: &SparsePoly,
        g2: &SparsePoly,
    ) -> Result<QuadResult> {
        let [a, b, c, d] = [f1, g1, f2, g2].map(FloatPoly::new);
        let (a, b, c, d) = (a?, b?, c?, d?);
        Ok(self.run(|x| a.eval(x) * b.eval(x) - c.eval(x) * d.eval(x)))
    }

    fn run(&self, h: impl Fn(&[Complex64; 2]) -> Complex64 + Sync) -> QuadResult {
        self.result(self.base.integrate(&h), self.fine.integrate(&h))
    }

    fn result(&self, coarse: Complex64, fine: Complex64) -> QuadResult {
        let err = (fine - coarse).norm();
        let warning = (err > self.tolerance * fine.norm()).then(|| {
            format!(
                "quadrature error estimate {err:.3e} exceeds {:.1e} relative",
                self.tolerance
            )
        });
        QuadResult {
            re: fine.re,
            im: fine.im,
            error_estimate: err,
            warning,
        }
    }
}

/// One-shot inner product; prefer [`Quadrature`] for several products.
pub fn quad_inner(
    f: &SparsePoly,
    g: &SparsePoly,
    kind: WeightKind,
    spec: &QuadratureSpec,
    params: &Params,
) -> Result<QuadResult> {
    Quadrature::new(spec, kind, params, 1e-8)?.inner(f, g)
}
