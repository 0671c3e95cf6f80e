//! Leading behaviour of `T_i` on the monomials `x^{φ(λ)}`.

use serde::Serialize;

use super::rep::Representation;
use crate::exactpoly::{int, SparsePoly};
use crate::weyl::{phi, weights_up_to, Weight};

#[derive(Clone, Debug, Serialize)]
pub struct TriangularityFailure {
    pub letter: usize,
    pub lambda: Weight,
    pub residual: String,
}

/// The part of `T_i x^{φ(λ)}` that is not of lower degree, as predicted:
/// `T₀` keeps `x^ν` with coefficient `t₀+λ₁` or raises it to `x^{φ(−λ₁,…)}`,
/// the middle `T_i` permute, and `Tₙ` fixes or flips the last entry. The flag
/// says whether the prediction is exact, with no lower-order terms at all.
fn predicted(rep: &Representation, i: usize, lambda: &[i64]) -> (SparsePoly, bool) {
    let n = rep.n();
    let p = rep.params();
    let mono = |l: &[i64]| SparsePoly::monomial(n, phi(l).into_iter().collect(), int(1));
    let nu = mono(lambda);
    let flipped = |k: usize| {
        let mut l = lambda.to_vec();
        l[k] = -l[k];
        mono(&l)
    };
    match i {
        0 if lambda[0] >= 0 => (nu.scale(&(&p.t0 + int(lambda[0]))), false),
        0 => (&flipped(0) - &nu.scale(&(&p.t0 - int(lambda[0]))), false),
        i if i == n && lambda[n - 1] >= 0 => (nu.scale(&p.tn), true),
        i if i == n => (-(&flipped(n - 1) + &nu.scale(&p.tn)), false),
        i => {
            let mut l = lambda.to_vec();
            l.swap(i - 1, i);
            (mono(&l), false)
        }
    }
}

/// Checks the leading terms of `T_i x^{φ(λ)}` for every `i` and every λ with
/// `Σ|λ_i| ≤ radius`; returns the failures.
pub fn check_t_triangularity(rep: &Representation, radius: i64) -> Vec<TriangularityFailure> {
    let n = rep.n();
    let mut failures = Vec::new();
    for lambda in weights_up_to(n, radius) {
        let exp = phi(&lambda);
        let deg: usize = exp.iter().map(|&e| e as usize).sum();
        let x = SparsePoly::monomial(n, exp.into_iter().collect(), int(1));
        for i in 0..=n {
            let (lead, exact) = predicted(rep, i, &lambda);
            let residual = &rep.apply_t(i, &x) - &lead;
            let ok = if exact {
                residual.is_zero()
            } else {
                residual.total_degree().is_none_or(|d| d < deg)
            };
            if !ok {
                failures.push(TriangularityFailure {
                    letter: i,
                    lambda: lambda.clone(),
                    residual: residual.to_string(),
                });
            }
        }
    }
    failures
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::Params;

    #[test]
    fn leading_terms_match() {
        for n in [2, 3] {
            let rep = Representation::new(n, Params::p_star());
            let f = check_t_triangularity(&rep, 3);
            assert!(f.is_empty(), "{:?}", &f[..f.len().min(3)]);
        }
    }
}
