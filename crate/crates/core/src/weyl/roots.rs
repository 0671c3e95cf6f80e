use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactpoly::Rational;

use super::{is_dominant, Word};

/// The W-orbit of an affine root; each orbit carries its own multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orbit {
    /// Orbit of `a_0` (long roots with odd δ-coefficient).
    A0,
    /// Short roots `±ε_i ± ε_j + cδ`.
    Mid,
    /// Orbit of `a_n` (long roots with even δ-coefficient).
    An,
}

/// The affine root `v + cδ`, i.e. the affine function `x ↦ ⟨v, x⟩ + c`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineRoot {
    pub v: Vec<i64>,
    pub c: i64,
}

impl fmt::Display for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}+{}δ", self.v, self.c)
    }
}

impl AffineRoot {
    pub fn new(v: Vec<i64>, c: i64) -> Self {
        AffineRoot { v, c }
    }

    pub fn neg(&self) -> AffineRoot {
        AffineRoot {
            v: self.v.iter().map(|a| -a).collect(),
            c: -self.c,
        }
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        self.v
            .iter()
            .zip(x)
            .fold(Rational::from_integer(self.c.into()), |acc, (&a, xi)| {
                acc + Rational::from_integer(a.into()) * xi
            })
    }

    pub fn is_long(&self) -> bool {
        self.v.iter().filter(|&&a| a != 0).count() == 1
    }

    /// Positive iff `c > 0`, or `c = 0` and `v` is a positive finite root.
    pub fn is_positive(&self) -> bool {
        self.c > 0 || (self.c == 0 && self.v.iter().find(|&&a| a != 0).is_some_and(|&a| a > 0))
    }

    fn norm2(&self) -> i64 {
        self.v.iter().map(|a| a * a).sum()
    }

    fn dot(&self, other: &AffineRoot) -> i64 {
        self.v.iter().zip(&other.v).map(|(a, b)| a * b).sum()
    }

    /// `s_β(α) = α − ⟨α, β∨⟩β`, pairing through finite parts.
    pub fn reflect_in(&self, beta: &AffineRoot) -> AffineRoot {
        let k = 2 * self.dot(beta) / beta.norm2();
        AffineRoot {
            v: self.v.iter().zip(&beta.v).map(|(a, b)| a - k * b).collect(),
            c: self.c - k * beta.c,
        }
    }

    /// `s_i α` for the simple reflection `s_i`.
    pub fn reflect(&self, i: usize) -> AffineRoot {
        self.reflect_in(&simple_root(i, self.v.len()))
    }

    /// `w α` for a word, rightmost letter first.
    pub fn apply_word(&self, word: &[usize]) -> AffineRoot {
        word.iter().rev().fold(self.clone(), |a, &i| a.reflect(i))
    }
}

/// `a_0 = δ − 2ε₁`, `a_i = ε_i − ε_{i+1}`, `a_n = 2ε_n`.
pub fn simple_root(i: usize, n: usize) -> AffineRoot {
    let mut v = vec![0; n];
    match i {
        0 => {
            v[0] = -2;
            AffineRoot { v, c: 1 }
        }
        i if i == n => {
            v[n - 1] = 2;
            AffineRoot { v, c: 0 }
        }
        i => {
            v[i - 1] = 1;
            v[i] = -1;
            AffineRoot { v, c: 0 }
        }
    }
}

pub fn classify_orbit(alpha: &AffineRoot) -> Result<Orbit> {
    let nz: Vec<i64> = alpha.v.iter().copied().filter(|&a| a != 0).collect();
    match nz.as_slice() {
        [a] if a.abs() == 2 => Ok(if alpha.c.rem_euclid(2) == 1 {
            Orbit::A0
        } else {
            Orbit::An
        }),
        [a, b] if a.abs() == 1 && b.abs() == 1 => Ok(Orbit::Mid),
        _ => Err(Error::RootShape(format!("{alpha}"))),
    }
}

/// `{a_{i₁}, s_{i₁}a_{i₂}, …, s_{i₁}⋯s_{i_{r−1}}a_{i_r}}`, the positive roots
/// made negative by `w⁻¹` for `w = s_{i₁}⋯s_{i_r}`.
pub fn inversion_set(word: &[usize], n: usize) -> Result<Vec<AffineRoot>> {
    let mut out = Vec::with_capacity(word.len());
    let mut seen = HashSet::new();
    for (k, &i) in word.iter().enumerate() {
        let root = simple_root(i, n).apply_word(&word[..k]);
        if !root.is_positive() || !seen.insert(root.clone()) {
            return Err(Error::NotReduced {
                word: word.to_vec(),
                reason: format!("root {root} at position {k} is negative or repeated"),
            });
        }
        out.push(root);
    }
    Ok(out)
}

/// Positive affine roots `α` with `τ(λ)⁻¹α` negative, where
/// `τ(λ)(v + cδ) = v + (c + ⟨λ, v⟩)δ`. Found by scanning finite roots `v` and
/// the bounded range of `c`.
pub fn tau_inversion_set(lambda: &[i64]) -> Result<Vec<AffineRoot>> {
    if !is_dominant(lambda) {
        return Err(Error::Precondition(format!("weight {lambda:?} is not dominant")));
    }
    let n = lambda.len();
    let mut out = Vec::new();
    for v in finite_roots(n) {
        let pair: i64 = v.iter().zip(lambda).map(|(a, b)| a * b).sum();
        for c in -pair.abs()..=pair.abs() {
            let alpha = AffineRoot { v: v.clone(), c };
            let image = AffineRoot {
                v: v.clone(),
                c: c - pair,
            };
            if alpha.is_positive() && !image.is_positive() {
                out.push(alpha);
            }
        }
    }
    out.sort();
    Ok(out)
}

/// All finite roots `±ε_i ± ε_j` and `±2ε_i`.
pub fn finite_roots(n: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for i in 0..n {
        for s in [1, -1] {
            let mut v = vec![0; n];
            v[i] = 2 * s;
            out.push(v);
        }
        for j in i + 1..n {
            for (a, b) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut v = vec![0; n];
                v[i] = a;
                v[j] = b;
                out.push(v);
            }
        }
    }
    out
}

/// Word for `τ(ε_i) = s_i⋯s_{n−1}s_n s_{n−1}⋯s_1 s_0 s_1⋯s_{i−1}` (1-based `i`).
pub fn tau_eps_word(i: usize, n: usize) -> Word {
    let mut w: Word = (i..n).collect();
    w.push(n);
    w.extend((1..n).rev());
    w.push(0);
    w.extend(1..i);
    w
}

/// A reduced word for the element represented by `word`, found by peeling
/// off right descents `s_i` (those with `w(a_i) < 0`) until nothing is left.
pub fn reduce_word(word: &[usize], n: usize) -> Word {
    let mut w = word.to_vec();
    let mut peeled = Word::new();
    while let Some(i) = (0..=n).find(|&i| !simple_root(i, n).apply_word(&w).is_positive()) {
        w.push(i);
        peeled.push(i);
    }
    peeled.reverse();
    peeled
}

/// A reduced word for `τ(λ)` with λ dominant. Each fundamental weight
/// `ε₁+⋯+ε_k` gets a reduced word; translation lengths add along the
/// dominant cone, so the concatenation stays reduced.
pub fn tau_word(lambda: &[i64]) -> Result<Word> {
    if !is_dominant(lambda) {
        return Err(Error::Precondition(format!("weight {lambda:?} is not dominant")));
    }
    let n = lambda.len();
    let mut word = Word::new();
    for k in 1..=n {
        let mult = lambda[k - 1] - lambda.get(k).copied().unwrap_or(0);
        if mult == 0 {
            continue;
        }
        let omega = reduce_word(&(1..=k).flat_map(|i| tau_eps_word(i, n)).collect::<Word>(), n);
        for _ in 0..mult {
            word.extend(&omega);
        }
    }
    Ok(word)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orbits_of_simple_roots() {
        assert_eq!(classify_orbit(&simple_root(0, 2)).unwrap(), Orbit::A0);
        assert_eq!(classify_orbit(&simple_root(1, 2)).unwrap(), Orbit::Mid);
        assert_eq!(classify_orbit(&simple_root(2, 2)).unwrap(), Orbit::An);
        assert!(classify_orbit(&AffineRoot::new(vec![1, 0], 0)).is_err());
    }

    #[test]
    fn small_inversion_sets() {
        assert!(inversion_set(&[], 2).unwrap().is_empty());
        assert_eq!(inversion_set(&[0], 2).unwrap(), vec![AffineRoot::new(vec![-2, 0], 1)]);
        assert_eq!(
            inversion_set(&[0, 1], 2).unwrap(),
            vec![AffineRoot::new(vec![-2, 0], 1), AffineRoot::new(vec![-1, -1], 1)]
        );
        assert!(inversion_set(&[1, 1], 2).is_err());
    }

    #[test]
    fn tau_sets() {
        assert!(tau_inversion_set(&[0, 0]).unwrap().is_empty());
        assert_eq!(tau_inversion_set(&[1, 0]).unwrap().len(), 4);
        assert!(tau_inversion_set(&[0, 1]).is_err());
        assert_eq!(tau_eps_word(1, 2), vec![1, 2, 1, 0]);
        assert_eq!(tau_eps_word(2, 2), vec![2, 1, 0, 1]);
        assert_eq!(reduce_word(&[1, 2, 2, 0], 2), vec![1, 0]);
        assert!(reduce_word(&[1, 1], 2).is_empty());
    }
}
