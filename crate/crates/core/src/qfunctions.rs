//! Schur Q-functions in the power-sum basis.
//!
//! Four independent routes are provided for straight shapes:
//!
//! * [`q_morris`]: spin characters weighted by `2^{(ℓ(λ)+ℓ(π)+ε(λ))/2} / z_π`;
//! * [`q_recur`]: the odd/even length expansions down to one and two rows;
//! * [`q_pf`]: the Pfaffian of the matrix `(Q_{(λ_i, λ_j)})`;
//! * strip tableaux, in [`crate::strip_tableaux`].
//!
//! One-row functions `q_k` come from the character route, and two-row
//! functions `Q_{(a,b)}` from the alternating sum of products `q_i q_j`.
//! Skew functions use the block Pfaffian `[[A, B], [−Bᵗ, 0]]`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg};
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::characters::character;
use crate::partitions::{enumerate_odd, parity_stats, SkewShape, StrictPartition};
use crate::ppoly::{PPoly, Rational};
use crate::strip_tableaux::q_skew_strips;

/// A skew-symmetric matrix of even size, storing the strict upper triangle.
#[derive(Clone, Debug, PartialEq)]
pub struct SkewSymMatrix<T> {
    size: usize,
    upper: Vec<Vec<T>>,
}

impl<T: Clone + Zero + Neg<Output = T>> SkewSymMatrix<T> {
    /// The zero matrix. Panics on odd `size`.
    pub fn zeros(size: usize) -> Self {
        assert!(size % 2 == 0, "Pfaffian matrices have even size");
        let upper = (0..size).map(|i| vec![T::zero(); size - i - 1]).collect();
        SkewSymMatrix { size, upper }
    }

    /// Builds the matrix from `entry(i, j)` for `i < j` (0-based).
    pub fn from_fn(size: usize, mut entry: impl FnMut(usize, usize) -> T) -> Self {
        let mut m = Self::zeros(size);
        for i in 0..size {
            for j in i + 1..size {
                m.upper[i][j - i - 1] = entry(i, j);
            }
        }
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Sets `A[i][j] = v` and implicitly `A[j][i] = −v`. Requires `i ≠ j`.
    pub fn set(&mut self, i: usize, j: usize, v: T) {
        assert_ne!(i, j, "diagonal of a skew-symmetric matrix is zero");
        if i < j {
            self.upper[i][j - i - 1] = v;
        } else {
            self.upper[j][i - j - 1] = -v;
        }
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Less => self.upper[i][j - i - 1].clone(),
            Equal => T::zero(),
            Greater => -self.upper[j][i - j - 1].clone(),
        }
    }
}

/// Pfaffian by expansion along the first remaining row.
pub fn pfaffian<T>(m: &SkewSymMatrix<T>) -> T
where
    T: Clone + Zero + One + Neg<Output = T> + Add<Output = T> + Mul<Output = T>,
{
    fn go<T>(m: &SkewSymMatrix<T>, idx: &[usize]) -> T
    where
        T: Clone + Zero + One + Neg<Output = T> + Add<Output = T> + Mul<Output = T>,
    {
        let Some((&first, rest)) = idx.split_first() else {
            return T::one();
        };
        let mut acc = T::zero();
        for (k, &j) in rest.iter().enumerate() {
            let a = m.get(first, j);
            if a.is_zero() {
                continue;
            }
            let minor: Vec<usize> = rest
                .iter()
                .enumerate()
                .filter(|&(t, _)| t != k)
                .map(|(_, &x)| x)
                .collect();
            let term = a * go(m, &minor);
            acc = if k % 2 == 0 { acc + term } else { acc + -term };
        }
        acc
    }
    let idx: Vec<usize> = (0..m.size()).collect();
    go(m, &idx)
}

fn q_cache() -> &'static RwLock<HashMap<usize, PPoly>> {
    static C: OnceLock<RwLock<HashMap<usize, PPoly>>> = OnceLock::new();
    C.get_or_init(Default::default)
}

fn two_cache() -> &'static RwLock<HashMap<(usize, usize), PPoly>> {
    static C: OnceLock<RwLock<HashMap<(usize, usize), PPoly>>> = OnceLock::new();
    C.get_or_init(Default::default)
}

fn recur_cache() -> &'static RwLock<HashMap<Vec<usize>, PPoly>> {
    static C: OnceLock<RwLock<HashMap<Vec<usize>, PPoly>>> = OnceLock::new();
    C.get_or_init(Default::default)
}

fn cached<K, F>(cache: &RwLock<HashMap<K, PPoly>>, key: K, compute: F) -> PPoly
where
    K: std::hash::Hash + Eq,
    F: FnOnce() -> PPoly,
{
    if let Some(v) = cache.read().expect("cache poisoned").get(&key) {
        return v.clone();
    }
    let v = compute();
    cache.write().expect("cache poisoned").insert(key, v.clone());
    v
}

/// `q_k`; zero for negative `k`, one for `k = 0`.
pub fn q_k(k: i64) -> PPoly {
    if k < 0 {
        return PPoly::zero();
    }
    if k == 0 {
        return PPoly::one();
    }
    let k = k as usize;
    cached(q_cache(), k, || {
        q_morris(&StrictPartition::new(vec![k]).expect("single positive part"))
    })
}

/// `Q_{(a,b)} = q_a q_b + 2 Σ_{m=1}^{b} (−1)^m q_{a+m} q_{b−m}`.
pub fn q_two(a: usize, b: usize) -> PPoly {
    cached(two_cache(), (a, b), || {
        let mut acc = &q_k(a as i64) * &q_k(b as i64);
        for m in 1..=b {
            let term = (&q_k((a + m) as i64) * &q_k((b - m) as i64)).scale_int(2);
            if m % 2 == 0 {
                acc += &term;
            } else {
                acc -= &term;
            }
        }
        acc
    })
}

/// Character expansion `Σ_π 2^{(ℓ(λ)+ℓ(π)+ε(λ))/2} ⟨λ⟩(π) p_π / z_π`.
pub fn q_morris(lam: &StrictPartition) -> PPoly {
    let eps = parity_stats(lam).epsilon;
    let mut out = PPoly::zero();
    for pi in enumerate_odd(lam.size()) {
        let chi = character(lam, &pi).expect("sizes agree");
        if chi == 0 {
            continue;
        }
        let e = lam.len() + pi.len() + eps;
        assert!(e % 2 == 0, "non-integral power of two for {lam} at {pi}");
        let num = BigInt::from(chi) << (e / 2);
        out.add_term(pi.as_partition().clone(), Rational::new(num, pi.z_factor()));
    }
    out
}

/// Expansion along the last part (odd length) or the first row
/// (even length), recursing down to `q_a` and `Q_{(a,b)}`.
pub fn q_recur(lam: &StrictPartition) -> PPoly {
    recur_parts(lam.parts())
}

fn recur_parts(parts: &[usize]) -> PPoly {
    match parts.len() {
        0 => return PPoly::one(),
        1 => return q_k(parts[0] as i64),
        2 => return q_two(parts[0], parts[1]),
        _ => {}
    }
    cached(recur_cache(), parts.to_vec(), || {
        let without = |skip: &[usize]| -> Vec<usize> {
            parts
                .iter()
                .enumerate()
                .filter(|(t, _)| !skip.contains(t))
                .map(|(_, &x)| x)
                .collect()
        };
        let mut acc = PPoly::zero();
        if parts.len() % 2 == 1 {
            for m in 0..parts.len() {
                let term = &q_k(parts[m] as i64) * &recur_parts(&without(&[m]));
                // (−1)^{m+1} with 1-based m
                if m % 2 == 0 {
                    acc += &term;
                } else {
                    acc -= &term;
                }
            }
        } else {
            for m in 1..parts.len() {
                let term = &q_two(parts[0], parts[m]) * &recur_parts(&without(&[0, m]));
                // (−1)^m with 1-based m
                if m % 2 == 1 {
                    acc += &term;
                } else {
                    acc -= &term;
                }
            }
        }
        acc
    })
}

/// The matrix `(Q_{(λ_i, λ_j)})`, with `λ` padded by one zero to even length.
pub fn straight_matrix(lam: &StrictPartition) -> SkewSymMatrix<PPoly> {
    let mut parts = lam.parts().to_vec();
    if parts.len() % 2 == 1 {
        parts.push(0);
    }
    SkewSymMatrix::from_fn(parts.len(), |i, j| q_two(parts[i], parts[j]))
}

pub fn q_pf(lam: &StrictPartition) -> PPoly {
    pfaffian(&straight_matrix(lam))
}

/// The block matrix `[[A, B], [−Bᵗ, 0]]` with `A = (Q_{(λ_i, λ_j)})` and
/// `B = (q_{λ_i − μ_{n+1−j}})`, padding `μ` by a zero when `ℓ(λ) + ℓ(μ)` is odd.
pub fn skew_matrix(shape: &SkewShape) -> SkewSymMatrix<PPoly> {
    let lam = shape.outer().parts();
    let mut mu = shape.inner().parts().to_vec();
    if (lam.len() + mu.len()) % 2 == 1 {
        mu.push(0);
    }
    let (m, n) = (lam.len(), mu.len());
    SkewSymMatrix::from_fn(m + n, |i, j| {
        if j < m {
            q_two(lam[i], lam[j])
        } else if i < m {
            let c = j - m;
            q_k(lam[i] as i64 - mu[n - 1 - c] as i64)
        } else {
            PPoly::zero()
        }
    })
}

pub fn q_skew_pf(shape: &SkewShape) -> PPoly {
    pfaffian(&skew_matrix(shape))
}

/// Which computation produces a Q-function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    Morris,
    Recur,
    Pf,
    Strips,
}

impl Route {
    pub const ALL: [Route; 4] = [Route::Morris, Route::Recur, Route::Pf, Route::Strips];

    /// Whether the route handles a nonempty inner shape.
    pub fn supports_skew(self) -> bool {
        matches!(self, Route::Pf | Route::Strips)
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Morris => "morris",
            Route::Recur => "recur",
            Route::Pf => "pf",
            Route::Strips => "strips",
        })
    }
}

impl FromStr for Route {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "morris" => Ok(Route::Morris),
            "recur" => Ok(Route::Recur),
            "pf" => Ok(Route::Pf),
            "strips" => Ok(Route::Strips),
            other => Err(format!("unknown route {other:?}")),
        }
    }
}

/// `Q_{λ/μ}` by the chosen route. Straight-only routes return `None` for a
/// nonempty inner shape.
pub fn q_function(shape: &SkewShape, route: Route) -> Option<PPoly> {
    if !shape.is_straight() && !route.supports_skew() {
        return None;
    }
    Some(match route {
        Route::Morris => q_morris(shape.outer()),
        Route::Recur => q_recur(shape.outer()),
        Route::Pf => q_skew_pf(shape),
        Route::Strips => q_skew_strips(shape),
    })
}
