//! Complex Gamma function via the Lanczos approximation (g = 7, nine terms).

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

const G: f64 = 7.0;
const COEFFS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

pub(crate) fn is_pole(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}

/// `ln Γ(z)` for `Re z ≥ ½`, any branch.
fn lanczos_ln(z: Complex64) -> Complex64 {
    let z = z - 1.0;
    let mut a = Complex64::new(COEFFS[0], 0.0);
    for (k, &c) in COEFFS.iter().enumerate().skip(1) {
        a += c / (z + k as f64);
    }
    let t = z + G + 0.5;
    0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + a.ln()
}

/// `ln sin(πz)` for `Im z ≥ 0`, written so that large imaginary parts do not overflow:
/// `sin(πz) = i e^{−iπz}(1 − e^{2πiz})/2`.
fn ln_sin_pi_upper(z: Complex64) -> Complex64 {
    let i = Complex64::i();
    let e = (2.0 * PI * i * z).exp();
    -i * PI * z + (1.0 - e).ln() + (i / 2.0).ln()
}

/// `ln Γ(z)` up to a multiple of `2πi` (the exponential is exact).
pub fn ln_gamma(z: Complex64) -> Result<Complex64> {
    if is_pole(z) {
        return Err(Error::Pole(format!("Γ has a pole at {z}")));
    }
    if z.im < 0.0 {
        return Ok(ln_gamma(z.conj())?.conj());
    }
    if z.re >= 0.5 {
        Ok(lanczos_ln(z))
    } else {
        // Γ(z)Γ(1−z) = π / sin(πz)
        Ok(PI.ln() - ln_sin_pi_upper(z) - lanczos_ln(1.0 - z))
    }
}

pub fn complex_gamma(z: Complex64) -> Result<Complex64> {
    Ok(ln_gamma(z)?.exp())
}

/// `ln Γ(x)` for real `x > 0`.
pub fn ln_gamma_real(x: f64) -> Result<f64> {
    if x <= 0.0 {
        return Err(Error::Pole(format!("real log-gamma needs x > 0, got {x}")));
    }
    Ok(ln_gamma(Complex64::new(x, 0.0))?.re)
}
