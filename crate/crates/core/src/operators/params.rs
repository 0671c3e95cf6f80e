use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::{format_rational, half, q, Rational};
use crate::weyl::Orbit;

/// Multiplicity data `(t₀, u₀, t, tₙ, uₙ)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Params {
    pub t0: Rational,
    pub u0: Rational,
    pub t: Rational,
    pub tn: Rational,
    pub un: Rational,
}

impl fmt::Debug for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Params(t0={}, u0={}, t={}, tn={}, un={})",
            self.t0, self.u0, self.t, self.tn, self.un
        )
    }
}

impl Params {
    pub fn new(t0: Rational, u0: Rational, t: Rational, tn: Rational, un: Rational) -> Self {
        Params { t0, u0, t, tn, un }
    }

    /// Default desk set `(7/10, 3/10, 1/2, 4/5, 2/5)`.
    pub fn p_star() -> Self {
        Params::new(q(7, 10), q(3, 10), q(1, 2), q(4, 5), q(2, 5))
    }

    /// Second generic set used for cross-validation.
    pub fn p_alt() -> Self {
        Params::new(q(3, 5), q(1, 7), q(1, 3), q(5, 6), q(1, 4))
    }

    /// `𝐭^σ = (uₙ, u₀, t, tₙ, t₀)`.
    pub fn sigma(&self) -> Self {
        Params::new(
            self.un.clone(),
            self.u0.clone(),
            self.t.clone(),
            self.tn.clone(),
            self.t0.clone(),
        )
    }

    /// Wilson parameters `(a, b, c, d) = (tₙ+uₙ, tₙ−uₙ, t₀+u₀+½, t₀−u₀+½)`.
    pub fn wilson_abcd(&self) -> [Rational; 4] {
        [
            &self.tn + &self.un,
            &self.tn - &self.un,
            &self.t0 + &self.u0 + half(),
            &self.t0 - &self.u0 + half(),
        ]
    }

    /// `(k₀, k₁, kₙ) = (2t₀+2u₀, t, 2tₙ+2uₙ)`.
    pub fn k(&self) -> [Rational; 3] {
        let two = Rational::from_integer(2.into());
        [
            &two * (&self.t0 + &self.u0),
            self.t.clone(),
            &two * (&self.tn + &self.un),
        ]
    }

    /// `χ_i`: `t₀` for `i = 0`, `tₙ` for `i = n`, else 1.
    pub fn chi(&self, i: usize, n: usize) -> Rational {
        match i {
            0 => self.t0.clone(),
            i if i == n => self.tn.clone(),
            _ => Rational::one(),
        }
    }

    /// Multiplicities `(𝐭(α), 𝐭(α∨))` of a long-root orbit.
    pub fn long_pair(&self, orbit: Orbit) -> (Rational, Rational) {
        match orbit {
            Orbit::A0 => (self.t0.clone(), self.u0.clone()),
            Orbit::An => (self.tn.clone(), self.un.clone()),
            Orbit::Mid => panic!("short roots have a single multiplicity"),
        }
    }

    /// `γ₀ = (t₀+tₙ+(n−i)t)_i`.
    pub fn gamma0(&self, n: usize) -> Vec<Rational> {
        (1..=n)
            .map(|i| &self.t0 + &self.tn + Rational::from_integer(((n - i) as i64).into()) * &self.t)
            .collect()
    }

    /// Positivity needed by the weight functions: `a, b, c, d, t > 0`.
    pub fn check_positive(&self) -> Result<()> {
        let [a, b, c, d] = self.wilson_abcd();
        for (name, v) in [("a", &a), ("b", &b), ("c", &c), ("d", &d), ("t", &self.t)] {
            if !v.is_positive() {
                return Err(Error::Precondition(format!(
                    "numeric suites need {name} > 0, got {}",
                    format_rational(v)
                )));
            }
        }
        Ok(())
    }

    pub fn is_t_zero(&self) -> bool {
        self.t.is_zero()
    }
}
