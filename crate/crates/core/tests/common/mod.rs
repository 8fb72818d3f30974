//! Independent oracles shared by the integration tests.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use schurq::{PPoly, Partition, Rational, SkewShape, StrictPartition};

pub fn sp(parts: &[usize]) -> StrictPartition {
    StrictPartition::new(parts.to_vec()).unwrap()
}

pub fn skew(outer: &[usize], inner: &[usize]) -> SkewShape {
    SkewShape::new(sp(outer), sp(inner)).unwrap()
}

pub fn mono(parts: &[usize], num: i64, den: i64) -> PPoly {
    PPoly::monomial(
        Partition::from_unsorted(parts.to_vec()),
        Rational::new(num.into(), den.into()),
    )
}

/// Pfaffian as a sum over perfect matchings of `0..n`, each signed by
/// `(−1)^{crossings}`.
pub fn matching_pfaffian(a: &[Vec<i64>]) -> BigInt {
    fn go(free: &[usize], pairs: &mut Vec<(usize, usize)>, a: &[Vec<i64>], acc: &mut BigInt) {
        let Some((&first, rest)) = free.split_first() else {
            let crossings = pairs
                .iter()
                .flat_map(|&(i, j)| pairs.iter().map(move |&(k, l)| (i, j, k, l)))
                .filter(|&(i, j, k, l)| i < k && k < j && j < l)
                .count();
            let mut term = BigInt::one();
            for &(i, j) in pairs.iter() {
                term *= a[i][j];
            }
            if crossings % 2 == 1 {
                term = -term;
            }
            *acc += term;
            return;
        };
        for (k, &partner) in rest.iter().enumerate() {
            let remaining: Vec<usize> = rest
                .iter()
                .enumerate()
                .filter(|&(t, _)| t != k)
                .map(|(_, &x)| x)
                .collect();
            pairs.push((first, partner));
            go(&remaining, pairs, a, acc);
            pairs.pop();
        }
    }
    let n = a.len();
    if n % 2 == 1 {
        return BigInt::zero();
    }
    let free: Vec<usize> = (0..n).collect();
    let mut acc = BigInt::zero();
    go(&free, &mut Vec::new(), a, &mut acc);
    acc
}

/// Determinant by Gaussian elimination over the rationals.
pub fn determinant(a: &[Vec<i64>]) -> BigRational {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .map(|row| row.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        det *= m[col][col].clone();
        for r in col + 1..n {
            let f = &m[r][col] / &m[col][col];
            for c in col..n {
                let d = &f * &m[col][c];
                m[r][c] -= d;
            }
        }
    }
    det
}

/// Random skew-symmetric integer matrix with entries in `-bound..=bound`.
pub fn random_skew_matrix(rng: &mut StdRng, size: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; size]; size];
    for i in 0..size {
        for j in i + 1..size {
            let v = rng.gen_range(-bound..=bound);
            a[i][j] = v;
            a[j][i] = -v;
        }
    }
    a
}

pub fn seeded_rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Coefficients `q_0, …, q_max` of `exp(2 Σ_{k odd} p_k t^k / k)`, from the
/// derivative identity `k q_k = 2 Σ_{j odd ≤ k} p_j q_{k−j}`.
pub fn q_series(max: usize) -> Vec<PPoly> {
    let mut q = vec![PPoly::from_int(1)];
    for k in 1..=max {
        let mut acc = PPoly::from_int(0);
        for j in (1..=k).step_by(2) {
            acc = acc + &PPoly::p(j) * &q[k - j];
        }
        q.push(acc.scale(&Rational::new(BigInt::from(2), BigInt::from(k))));
    }
    q
}

/// Whether the polynomial is homogeneous of total degree (weight) `n` in
/// the grading `deg p_k = k`.
pub fn is_weight_homogeneous(q: &PPoly, n: usize) -> bool {
    q.terms().iter().all(|(nu, _)| nu.size() == n)
}
