//! Irreducible spin character values `⟨λ⟩(π)` by the Morris rule.
//!
//! The value is the signed sum of weights of bar tableaux of shape `λ` and
//! type `π`. Tableaux are grouped by their last removal, so the sum is
//! evaluated as a memoized recursion on `(λ, π)`: strip a bar of size equal
//! to the smallest part of `π` in every possible way.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::bar_moves::{bar_moves, bar_weight};
use crate::error::{Error, Result};
use crate::partitions::{OddPartition, StrictPartition};

type Key = (StrictPartition, Vec<usize>);

fn cache() -> &'static RwLock<HashMap<Key, i64>> {
    static CACHE: OnceLock<RwLock<HashMap<Key, i64>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `⟨lam⟩(pi)`.
pub fn character(lam: &StrictPartition, pi: &OddPartition) -> Result<i64> {
    if lam.size() != pi.size() {
        return Err(Error::SizeMismatch {
            shape: lam.size(),
            parts: pi.size(),
        });
    }
    Ok(morris(lam, pi.parts()))
}

fn morris(lam: &StrictPartition, parts: &[usize]) -> i64 {
    let Some((&r, rest)) = parts.split_last() else {
        return 1;
    };
    let key = (lam.clone(), parts.to_vec());
    if let Some(&v) = cache().read().expect("cache poisoned").get(&key) {
        return v;
    }
    let value = bar_moves(lam, r)
        .expect("odd parts give valid bar sizes")
        .iter()
        .map(|mv| bar_weight(lam, mv) * morris(&mv.result, rest))
        .sum();
    cache().write().expect("cache poisoned").insert(key, value);
    value
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bar_tableaux::enumerate_tableaux;
    use crate::partitions::{enumerate_odd, enumerate_strict, parity_stats};

    fn sp(p: &[usize]) -> StrictPartition {
        StrictPartition::new(p.to_vec()).unwrap()
    }

    fn op(p: &[usize]) -> OddPartition {
        OddPartition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(character(&sp(&[5, 3]), &op(&[5, 3])), Ok(-1));
        assert_eq!(character(&sp(&[3]), &op(&[3])), Ok(1));
        assert_eq!(character(&sp(&[2, 1]), &op(&[3])), Ok(-1));
        assert_eq!(character(&StrictPartition::empty(), &op(&[])), Ok(1));
    }

    #[test]
    fn size_mismatch() {
        assert!(matches!(
            character(&sp(&[3]), &op(&[1])),
            Err(Error::SizeMismatch { shape: 3, parts: 1 })
        ));
    }

    #[test]
    fn agrees_with_tableau_sum() {
        for n in 0..=10 {
            for lam in enumerate_strict(n) {
                for pi in enumerate_odd(n) {
                    let by_tableaux: i64 = enumerate_tableaux(&lam, &StrictPartition::empty(), pi.parts())
                        .unwrap()
                        .iter()
                        .map(|t| t.weight())
                        .sum();
                    assert_eq!(character(&lam, &pi).unwrap(), by_tableaux, "{lam} {pi}");
                }
            }
        }
    }

    #[test]
    fn two_odd_rows_give_minus_one() {
        for n in 4..=24 {
            for lam in enumerate_strict(n) {
                if lam.len() == 2 && lam.parts().iter().all(|p| p % 2 == 1) {
                    let pi = op(lam.parts());
                    assert_eq!(character(&lam, &pi), Ok(-1), "{lam}");
                }
            }
        }
    }

    #[test]
    fn exponent_parity_is_even() {
        for n in 0..=12 {
            for lam in enumerate_strict(n) {
                let eps = parity_stats(&lam).epsilon;
                for pi in enumerate_odd(n) {
                    assert_eq!((lam.len() + pi.len() + eps) % 2, 0, "{lam} {pi}");
                }
            }
        }
    }

    #[test]
    fn degree_class_is_positive() {
        for n in 1..=14 {
            let ones = op(&vec![1; n]);
            for lam in enumerate_strict(n) {
                assert!(character(&lam, &ones).unwrap() > 0, "{lam}");
            }
        }
    }
}
