//! Combinatorics of the affine Weyl group of type C̃ₙ: the φ-labeling of
//! monomials, the dot action, shortest words for `u_λ`, affine roots and
//! their inversion sets.

mod roots;

pub use roots::{
    classify_orbit, finite_roots, inversion_set, reduce_word, simple_root, tau_eps_word, tau_inversion_set, tau_word,
    AffineRoot, Orbit,
};

use std::collections::{HashMap, VecDeque};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::One;

use crate::exactpoly::Rational;

/// A lattice point λ ∈ ℤⁿ.
pub type Weight = Vec<i64>;

/// A word in the simple reflections `s_0..s_n`; the rightmost letter acts first.
pub type Word = Vec<usize>;

fn phi1(m: i64) -> u16 {
    let v = if m >= 0 { 2 * m } else { -2 * m - 1 };
    u16::try_from(v).expect("weight entry too large for an exponent")
}

fn phi1_inv(e: u16) -> i64 {
    let e = e as i64;
    if e % 2 == 0 {
        e / 2
    } else {
        -(e + 1) / 2
    }
}

/// Exponent vector `φ(λ)` labeling the monomial attached to λ.
pub fn phi(lambda: &[i64]) -> Vec<u16> {
    lambda.iter().map(|&m| phi1(m)).collect()
}

pub fn phi_inv(exp: &[u16]) -> Weight {
    exp.iter().map(|&e| phi1_inv(e)).collect()
}

/// `Σ |λ_i|`, the filtration level of `x^{φ(λ)}`.
pub fn abs_sum(lambda: &[i64]) -> i64 {
    lambda.iter().map(|m| m.abs()).sum()
}

pub fn is_dominant(lambda: &[i64]) -> bool {
    lambda.windows(2).all(|w| w[0] >= w[1]) && lambda.last().is_none_or(|&m| m >= 0)
}

/// The dominant representative of `W₀λ`.
pub fn dominant_rep(lambda: &[i64]) -> Weight {
    let mut v: Weight = lambda.iter().map(|m| m.abs()).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// All lattice points with `Σ|λ_i| ≤ radius`, sorted by level and then lexicographically.
pub fn weights_up_to(n: usize, radius: i64) -> Vec<Weight> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for w in &out {
            let used = abs_sum(w);
            for m in -(radius - used)..=(radius - used) {
                let mut v = w.clone();
                v.push(m);
                next.push(v);
            }
        }
        out = next;
    }
    out.sort_by(|a, b| abs_sum(a).cmp(&abs_sum(b)).then_with(|| a.cmp(b)));
    out
}

/// The W₀-orbit of λ (distinct points, sorted).
pub fn finite_orbit(lambda: &[i64]) -> Vec<Weight> {
    let mut out: Vec<Weight> = finite_weyl_group(lambda.len())
        .iter()
        .map(|w| w.apply_int(lambda))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Simple reflection `s_i` in the dot action on integer points.
pub fn dot_letter_int(i: usize, lambda: &[i64]) -> Weight {
    let n = lambda.len();
    let mut v = lambda.to_vec();
    match i {
        0 => v[0] = -v[0] - 1,
        i if i == n => v[n - 1] = -v[n - 1],
        i => v.swap(i - 1, i),
    }
    v
}

/// Simple reflection `s_i` in the dot action on rational points.
pub fn dot_letter(i: usize, x: &[Rational]) -> Vec<Rational> {
    let n = x.len();
    assert!(i <= n, "letter s_{i} out of range for n = {n}");
    let mut v = x.to_vec();
    match i {
        0 => v[0] = -&x[0] - Rational::one(),
        i if i == n => v[n - 1] = -&x[n - 1],
        i => v.swap(i - 1, i),
    }
    v
}

/// Dot action of a word, rightmost letter first.
pub fn dot_apply(word: &[usize], x: &[Rational]) -> Vec<Rational> {
    word.iter().rev().fold(x.to_vec(), |acc, &i| dot_letter(i, &acc))
}

pub fn dot_apply_int(word: &[usize], lambda: &[i64]) -> Weight {
    word.iter()
        .rev()
        .fold(lambda.to_vec(), |acc, &i| dot_letter_int(i, &acc))
}

type DistTable = Arc<HashMap<Weight, usize>>;

fn dist_cache() -> &'static Mutex<HashMap<(usize, i64), DistTable>> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, i64), DistTable>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// BFS distances from 0 under the dot action, restricted to the ball
/// `Σ|λ_i| ≤ radius`. `s_0` changes `Σ|λ_i|` by one and the other letters
/// preserve it, so a shortest path to λ never leaves the ball of radius `Σ|λ_i|`.
pub fn dot_distances(n: usize, radius: i64) -> DistTable {
    if let Some(t) = dist_cache().lock().unwrap().get(&(n, radius)) {
        return t.clone();
    }
    let mut dist: HashMap<Weight, usize> = HashMap::new();
    let start = vec![0i64; n];
    dist.insert(start.clone(), 0);
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        let d = dist[&v];
        for i in 0..=n {
            let w = dot_letter_int(i, &v);
            if abs_sum(&w) <= radius && !dist.contains_key(&w) {
                dist.insert(w.clone(), d + 1);
                queue.push_back(w);
            }
        }
    }
    let table = Arc::new(dist);
    dist_cache().lock().unwrap().insert((n, radius), table.clone());
    table
}

/// Length of `u_λ`, the BFS distance of λ from 0.
pub fn u_length(lambda: &[i64]) -> usize {
    dot_distances(lambda.len(), abs_sum(lambda))[lambda]
}

/// Shortest word `w` with `w·0 = λ`; at each step the smallest letter that
/// lowers the distance is chosen, so the result is deterministic.
pub fn u_lambda_word(lambda: &[i64]) -> Word {
    let n = lambda.len();
    let table = dot_distances(n, abs_sum(lambda));
    let mut word = Word::new();
    let mut cur = lambda.to_vec();
    let mut d = table[&cur];
    while d > 0 {
        let (i, next) = (0..=n)
            .map(|i| (i, dot_letter_int(i, &cur)))
            .find(|(_, w)| table.get(w) == Some(&(d - 1)))
            .expect("BFS table has a predecessor");
        word.push(i);
        cur = next;
        d -= 1;
    }
    word
}

/// Whether `s_i` raises λ, i.e. `l(u_{s_i·λ}) = l(u_λ) + 1`. `None` when `s_i·λ = λ`.
pub fn raises(i: usize, lambda: &[i64]) -> Option<bool> {
    let mu = dot_letter_int(i, lambda);
    if mu == lambda {
        return None;
    }
    Some(u_length(&mu) > u_length(lambda))
}

/// An element of the hyperoctahedral group W₀ acting linearly by
/// `(w x)_{perm[i]} = signs[i] · x_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedPerm {
    pub perm: Vec<usize>,
    pub signs: Vec<i8>,
}

impl SignedPerm {
    pub fn apply<T>(&self, x: &[T]) -> Vec<T>
    where
        T: Clone + std::ops::Neg<Output = T>,
    {
        let mut out = x.to_vec();
        for i in 0..x.len() {
            out[self.perm[i]] = if self.signs[i] < 0 { -x[i].clone() } else { x[i].clone() };
        }
        out
    }

    pub fn apply_int(&self, x: &[i64]) -> Vec<i64> {
        self.apply(x)
    }

    /// Determinant, equal to `(-1)^{l(w)}`.
    pub fn det(&self) -> i64 {
        let n = self.perm.len();
        let mut inversions = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.perm[i] > self.perm[j] {
                    inversions += 1;
                }
            }
        }
        let negs = self.signs.iter().filter(|&&s| s < 0).count();
        if (inversions + negs) % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// All `2ⁿ n!` elements of W₀ in a fixed order.
pub fn finite_weyl_group(n: usize) -> Vec<SignedPerm> {
    let mut perms: Vec<Vec<usize>> = vec![vec![]];
    for k in 0..n {
        let mut next = Vec::new();
        for p in &perms {
            for pos in 0..=k {
                let mut q = p.clone();
                q.insert(pos, k);
                next.push(q);
            }
        }
        perms = next;
    }
    perms.sort();
    let mut out = Vec::new();
    for p in perms {
        for mask in 0..(1u32 << n) {
            let signs = (0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
            out.push(SignedPerm { perm: p.clone(), signs });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{int, q};

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&[0, 0]), vec![0, 0]);
        assert_eq!(phi(&[-1, 2]), vec![1, 4]);
        assert_eq!(phi_inv(&[3, 1]), vec![-2, -1]);
        for e in 0..20u16 {
            assert_eq!(phi(&phi_inv(&[e])), vec![e]);
        }
    }

    #[test]
    fn dot_examples() {
        assert_eq!(dot_apply(&[0], &[int(2), q(3, 2)]), vec![int(-3), q(3, 2)]);
        assert_eq!(dot_apply(&[2], &[q(1, 7), q(2, 9)]), vec![q(1, 7), q(-2, 9)]);
        let x = vec![q(1, 3), q(-5, 2)];
        for i in 0..=2 {
            assert_eq!(dot_apply(&[i, i], &x), x);
        }
    }

    #[test]
    fn u_lambda_examples() {
        assert!(u_lambda_word(&[0, 0]).is_empty());
        assert_eq!(u_lambda_word(&[-1, 0]), vec![0]);
        assert_eq!(u_lambda_word(&[1, 0]), vec![1, 2, 1, 0]);
    }

    #[test]
    fn hyperoctahedral_group() {
        let g = finite_weyl_group(3);
        assert_eq!(g.len(), 48);
        assert_eq!(g.iter().filter(|w| w.det() == 1).count(), 24);
        assert_eq!(finite_orbit(&[1, 0]).len(), 4);
        assert_eq!(finite_orbit(&[1, 1]).len(), 4);
        assert_eq!(finite_orbit(&[2, 1]).len(), 8);
    }

    #[test]
    fn dominance() {
        assert!(is_dominant(&[2, 1, 0]));
        assert!(!is_dominant(&[1, 2]));
        assert!(!is_dominant(&[1, -1]));
        assert_eq!(dominant_rep(&[-1, 2]), vec![2, 1]);
    }
}
