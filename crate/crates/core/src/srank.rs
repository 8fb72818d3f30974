//! srank of strict and skew shifted shapes.
//!
//! For a skew shape `λ/μ` the squares of `μ` sit as leading `0`s in rows of
//! `S(λ)`. A [`Configuration`] records how many zeros each row starts with,
//! and [`kappa`] counts bars forced by that placement. The greedy placement
//! [`place_zeros`] minimizes `κ`, and its value is the srank. The
//! brute-force [`min_bars_bruteforce`] searches bar removals directly and is
//! the oracle for the closed forms.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::bar_moves::{bar_moves, BarMove};
use crate::bar_tableaux::BarTableau;
use crate::error::{Error, Result};
use crate::partitions::{parity_stats, Partition, SkewShape, StrictPartition};

/// Default bound on `|λ|` for the brute-force search.
pub const BRUTE_FORCE_BOUND: usize = 12;

/// `max(o, e + (ℓ(λ) mod 2))`.
pub fn srank_straight(lam: &StrictPartition) -> usize {
    let st = parity_stats(lam);
    st.odd.max(st.even + lam.len() % 2)
}

/// The eight row classes, tagged by (parity of zeros, parity of blanks);
/// `Empty*` rows have no zeros and `Full*` rows have no blanks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RowType {
    EE,
    EO,
    OE,
    OO,
    EmptyE,
    EmptyO,
    FullE,
    FullO,
}

impl fmt::Display for RowType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RowType::EE => "(e,e)",
            RowType::EO => "(e,o)",
            RowType::OE => "(o,e)",
            RowType::OO => "(o,o)",
            RowType::EmptyE => "(∅,e)",
            RowType::EmptyO => "(∅,o)",
            RowType::FullE => "(e,∅)",
            RowType::FullO => "(o,∅)",
        })
    }
}

pub fn row_type(length: usize, zeros: usize) -> RowType {
    assert!(zeros <= length, "{zeros} zeros in a row of length {length}");
    let even = |x: usize| x % 2 == 0;
    let blanks = length - zeros;
    match (zeros, blanks) {
        (0, b) if even(b) => RowType::EmptyE,
        (0, _) => RowType::EmptyO,
        (z, 0) if even(z) => RowType::FullE,
        (_, 0) => RowType::FullO,
        (z, b) => match (even(z), even(b)) {
            (true, true) => RowType::EE,
            (true, false) => RowType::EO,
            (false, true) => RowType::OE,
            (false, false) => RowType::OO,
        },
    }
}

/// Leading-zero counts for each row of `S(outer)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Configuration {
    outer: StrictPartition,
    zeros: Vec<usize>,
}

impl Configuration {
    pub fn new(outer: StrictPartition, zeros: Vec<usize>) -> Result<Self> {
        if zeros.len() != outer.len() {
            return Err(Error::BadExchange(format!(
                "{} zero counts for {} rows",
                zeros.len(),
                outer.len()
            )));
        }
        if let Some((k, _)) = zeros.iter().zip(outer.parts()).enumerate().find(|(_, (z, l))| z > l) {
            return Err(Error::BadExchange(format!(
                "row {} of length {} cannot hold {} zeros",
                k + 1,
                outer.parts()[k],
                zeros[k]
            )));
        }
        Ok(Configuration { outer, zeros })
    }

    pub fn outer(&self) -> &StrictPartition {
        &self.outer
    }

    pub fn zeros(&self) -> &[usize] {
        &self.zeros
    }

    /// The inner shape: nonzero zero-counts sorted decreasingly.
    pub fn inner(&self) -> Partition {
        Partition::from_unsorted(self.zeros.clone())
    }

    pub fn row_types(&self) -> Vec<RowType> {
        self.outer
            .parts()
            .iter()
            .zip(&self.zeros)
            .map(|(&l, &z)| row_type(l, z))
            .collect()
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, (&len, &z)) in self.outer.parts().iter().zip(&self.zeros).enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", "  ".repeat(r))?;
            let cells: Vec<&str> = (0..len).map(|c| if c < z { "0" } else { "." }).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Row counters `(o_r, e_r, o_s, e_s)` behind `κ`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RowCounts {
    pub odd_free: usize,
    pub even_free: usize,
    pub odd_zeroed: usize,
    pub even_zeroed: usize,
}

pub fn row_counts(c: &Configuration) -> RowCounts {
    let mut n = RowCounts::default();
    for t in c.row_types() {
        match t {
            RowType::EmptyO => n.odd_free += 1,
            RowType::EmptyE => n.even_free += 1,
            RowType::EO | RowType::OO => n.odd_zeroed += 1,
            RowType::EE | RowType::OE => n.even_zeroed += 1,
            RowType::FullE | RowType::FullO => {}
        }
    }
    n
}

/// `o_s + 2 e_s + max(o_r, e_r + ((e_r + o_r) mod 2))`.
pub fn kappa(c: &Configuration) -> usize {
    let n = row_counts(c);
    let free = n.odd_free.max(n.even_free + (n.even_free + n.odd_free) % 2);
    n.odd_zeroed + 2 * n.even_zeroed + free
}

/// Greedy zero placement: take inner parts from largest to smallest; fill a
/// whole row of equal length if one is free, else the free row of largest
/// index leaving an odd number of blanks, else the free row of largest
/// index that is longer.
pub fn place_zeros(shape: &SkewShape) -> Result<Configuration> {
    let lam = shape.outer().parts();
    let mut zeros = vec![0; lam.len()];
    let mut free = vec![true; lam.len()];
    for &m in shape.inner().parts() {
        let exact = (0..lam.len()).find(|&j| free[j] && lam[j] == m);
        let odd_gap = (0..lam.len())
            .rev()
            .find(|&j| free[j] && lam[j] > m && (lam[j] - m) % 2 == 1);
        let longer = (0..lam.len()).rev().find(|&j| free[j] && lam[j] > m);
        let j = exact.or(odd_gap).or(longer).ok_or(Error::NoEligibleRow(m))?;
        zeros[j] = m;
        free[j] = false;
    }
    Configuration::new(shape.outer().clone(), zeros)
}

pub fn srank_skew(shape: &SkewShape) -> Result<usize> {
    Ok(kappa(&place_zeros(shape)?))
}

/// Every configuration of `shape.inner()`'s parts as leading zeros in
/// distinct rows of `S(shape.outer())`.
pub fn all_configurations(shape: &SkewShape) -> Vec<Configuration> {
    fn go(
        lam: &[usize],
        mu: &[usize],
        zeros: &mut Vec<usize>,
        outer: &StrictPartition,
        out: &mut Vec<Configuration>,
    ) {
        let Some((&m, rest)) = mu.split_first() else {
            out.push(Configuration {
                outer: outer.clone(),
                zeros: zeros.clone(),
            });
            return;
        };
        for j in 0..lam.len() {
            if zeros[j] == 0 && lam[j] >= m {
                zeros[j] = m;
                go(lam, rest, zeros, outer, out);
                zeros[j] = 0;
            }
        }
    }
    let mut out = Vec::new();
    let mut zeros = vec![0; shape.outer().len()];
    go(
        shape.outer().parts(),
        shape.inner().parts(),
        &mut zeros,
        shape.outer(),
        &mut out,
    );
    out
}

/// Moves the zeros of rows `rows.0` and `rows.1` (1-based) to the counts
/// `new_zeros`, keeping their total.
pub fn apply_exchange(
    c: &Configuration,
    rows: (usize, usize),
    new_zeros: (usize, usize),
) -> Result<Configuration> {
    let (a, b) = rows;
    let len = c.outer.len();
    if a == b || a == 0 || b == 0 || a > len || b > len {
        return Err(Error::BadExchange(format!("rows {a} and {b} of {len}")));
    }
    let (za, zb) = (c.zeros[a - 1], c.zeros[b - 1]);
    if za + zb != new_zeros.0 + new_zeros.1 {
        return Err(Error::BadExchange(format!(
            "zero count changes from {} to {}",
            za + zb,
            new_zeros.0 + new_zeros.1
        )));
    }
    let mut zeros = c.zeros.clone();
    zeros[a - 1] = new_zeros.0;
    zeros[b - 1] = new_zeros.1;
    Configuration::new(c.outer.clone(), zeros)
}

/// Shortest bar-removal sequences from `outer` down to `inner`.
fn shortest_removals(shape: &SkewShape) -> Option<Vec<BarMove>> {
    let target = shape.inner();
    let mut parent: HashMap<StrictPartition, Option<(StrictPartition, BarMove)>> = HashMap::new();
    let mut queue = VecDeque::new();
    parent.insert(shape.outer().clone(), None);
    queue.push_back(shape.outer().clone());
    while let Some(cur) = queue.pop_front() {
        if &cur == target {
            let mut moves = Vec::new();
            let mut node = cur;
            while let Some(Some((prev, mv))) = parent.get(&node).cloned() {
                moves.push(mv);
                node = prev;
            }
            moves.reverse();
            return Some(moves);
        }
        let gap = cur.size() - target.size();
        for r in (1..=gap).step_by(2) {
            for mv in bar_moves(&cur, r).expect("odd size") {
                if !mv.result.contains(target) || parent.contains_key(&mv.result) {
                    continue;
                }
                parent.insert(mv.result.clone(), Some((cur.clone(), mv.clone())));
                queue.push_back(mv.result);
            }
        }
    }
    None
}

fn check_bound(shape: &SkewShape, bound: usize) -> Result<()> {
    let size = shape.outer().size();
    if size > bound {
        return Err(Error::BoundExceeded { size, bound });
    }
    Ok(())
}

/// Minimum number of bars over all skew bar tableaux of the shape, or
/// `None` if there is no tableau at all.
pub fn min_bars_bruteforce(shape: &SkewShape, bound: usize) -> Result<Option<usize>> {
    check_bound(shape, bound)?;
    Ok(shortest_removals(shape).map(|m| m.len()))
}

/// A bar tableau with the minimum number of bars.
pub fn minimal_tableau(shape: &SkewShape, bound: usize) -> Result<Option<BarTableau>> {
    check_bound(shape, bound)?;
    Ok(shortest_removals(shape).map(|moves| {
        let type_vector = moves.iter().rev().map(|m| m.size).collect();
        BarTableau {
            shape: shape.outer().clone(),
            inner: shape.inner().clone(),
            moves,
            type_vector,
        }
    }))
}
