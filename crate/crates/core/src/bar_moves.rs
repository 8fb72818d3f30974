//! Single bar removals on a shifted diagram.
//!
//! Rows are addressed by 1-based index into the strict partition. For an odd
//! bar size `r` a row `i` can lose
//!
//! * its rightmost `r` squares, when `λ_i − r` fits strictly between two
//!   remaining parts (Type 1, `i ∈ I₊`);
//! * the whole row, when `λ_i = r` (Type 2, `i ∈ I₀`);
//! * itself together with a lower row `j`, when `λ_i + λ_j = r`
//!   (Type 3, `i ∈ I₋`).

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::partitions::{parity_stats, StrictPartition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BarType {
    Type1,
    Type2,
    Type3,
}

/// One bar removal `λ → λ(i, r)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BarMove {
    pub row: usize,
    pub size: usize,
    pub bar_type: BarType,
    /// The `j` of `I₊` / `I₋`; absent for Type 2.
    pub partner: Option<usize>,
    pub result: StrictPartition,
}

/// The three disjoint index sets `I₊`, `I₀`, `I₋` (1-based rows).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IndexSets {
    pub plus: BTreeSet<usize>,
    pub zero: BTreeSet<usize>,
    pub minus: BTreeSet<usize>,
}

impl IndexSets {
    pub fn all(&self) -> impl Iterator<Item = usize> + '_ {
        self.plus.iter().chain(&self.zero).chain(&self.minus).copied()
    }
}

fn check_size(r: usize) -> Result<()> {
    if r == 0 || r % 2 == 0 {
        return Err(Error::BadBarSize(r));
    }
    Ok(())
}

/// The `j ≤ k` with `λ_{j+1} < λ_i − r < λ_j` (taking `λ_{k+1} = 0`).
fn plus_partner(parts: &[usize], i: usize, r: usize) -> Option<usize> {
    let v = parts[i - 1].checked_sub(r)?;
    if v == 0 {
        return None;
    }
    let k = parts.len();
    let mut found = None;
    for j in 1..=k {
        let upper = parts[j - 1];
        let lower = if j < k { parts[j] } else { 0 };
        if lower < v && v < upper {
            assert!(found.is_none(), "insertion index not unique");
            found = Some(j);
        }
    }
    found
}

/// The `j > i` with `r − λ_i = λ_j`.
fn minus_partner(parts: &[usize], i: usize, r: usize) -> Option<usize> {
    let v = r.checked_sub(parts[i - 1])?;
    if v == 0 {
        return None;
    }
    (i + 1..=parts.len()).find(|&j| parts[j - 1] == v)
}

pub fn index_sets(lam: &StrictPartition, r: usize) -> Result<IndexSets> {
    check_size(r)?;
    let parts = lam.parts();
    let mut sets = IndexSets::default();
    for i in 1..=parts.len() {
        if plus_partner(parts, i, r).is_some() {
            sets.plus.insert(i);
        }
        if parts[i - 1] == r {
            sets.zero.insert(i);
        }
        if minus_partner(parts, i, r).is_some() {
            sets.minus.insert(i);
        }
    }
    debug_assert!(sets.plus.is_disjoint(&sets.zero));
    debug_assert!(sets.plus.is_disjoint(&sets.minus));
    debug_assert!(sets.zero.is_disjoint(&sets.minus));
    Ok(sets)
}

/// Removes the `r`-bar associated with row `i`.
pub fn remove_bar(lam: &StrictPartition, i: usize, r: usize) -> Result<BarMove> {
    check_size(r)?;
    let parts = lam.parts();
    let no_bar = || Error::NoSuchBar {
        shape: parts.to_vec(),
        row: i,
        size: r,
    };
    if i == 0 || i > parts.len() {
        return Err(no_bar());
    }
    let li = parts[i - 1];
    if li == r {
        let mut rest = parts.to_vec();
        rest.remove(i - 1);
        return Ok(BarMove {
            row: i,
            size: r,
            bar_type: BarType::Type2,
            partner: None,
            result: StrictPartition::new(rest).expect("deleting a row keeps parts distinct"),
        });
    }
    if let Some(j) = plus_partner(parts, i, r) {
        let mut rest = parts.to_vec();
        rest[i - 1] = li - r;
        rest.sort_unstable_by(|a, b| b.cmp(a));
        return Ok(BarMove {
            row: i,
            size: r,
            bar_type: BarType::Type1,
            partner: Some(j),
            result: StrictPartition::new(rest).expect("strict insertion"),
        });
    }
    if let Some(j) = minus_partner(parts, i, r) {
        let rest: Vec<usize> = parts
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i - 1 && k != j - 1)
            .map(|(_, &p)| p)
            .collect();
        return Ok(BarMove {
            row: i,
            size: r,
            bar_type: BarType::Type3,
            partner: Some(j),
            result: StrictPartition::new(rest).expect("deleting rows keeps parts distinct"),
        });
    }
    Err(no_bar())
}

/// All bar removals of size `r` from `lam`, ordered by row.
pub fn bar_moves(lam: &StrictPartition, r: usize) -> Result<Vec<BarMove>> {
    let sets = index_sets(lam, r)?;
    let mut rows: Vec<usize> = sets.all().collect();
    rows.sort_unstable();
    rows.into_iter().map(|i| remove_bar(lam, i, r)).collect()
}

/// The signed factor `n_i` contributed by removing `mv` from `lam`.
///
/// `ε` and `ℓ` are taken on `lam` before the removal.
pub fn bar_weight(lam: &StrictPartition, mv: &BarMove) -> i64 {
    let eps = parity_stats(lam).epsilon;
    let two_pow = if eps == 0 { 2 } else { 1 };
    let sign = |e: usize| if e % 2 == 0 { 1i64 } else { -1 };
    let i = mv.row;
    match mv.bar_type {
        BarType::Type1 => sign(mv.partner.expect("type 1 has j") - i) * two_pow,
        BarType::Type2 => sign(lam.len() - i),
        BarType::Type3 => {
            let j = mv.partner.expect("type 3 has j");
            sign(j - i + lam.parts()[i - 1]) * two_pow
        }
    }
}
