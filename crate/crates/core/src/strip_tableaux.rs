//! Strips, double strips and the strip-tableau expansion of skew Q-functions.
//!
//! Squares of a shifted diagram use shifted coordinates: row `i` of `S(λ)`
//! occupies columns `i ..= i + λ_i − 1`. The `j`-th diagonal holds the
//! squares `(1, j), (2, j + 1), …`, so a square's diagonal is its position
//! within its row.

use std::collections::{HashMap, HashSet};
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::partitions::{enumerate_odd, SkewShape, StrictPartition};
use crate::ppoly::{PPoly, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShiftedCell {
    pub row: usize,
    pub col: usize,
}

impl ShiftedCell {
    pub fn diagonal(&self) -> usize {
        self.col - self.row + 1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StripKind {
    Strip { height: usize },
    DoubleStrip { depth: usize },
    Neither,
}

impl StripKind {
    /// `(−1)^{h−1}` for a strip, `2(−1)^{d−1}` for a double strip.
    pub fn weight(self) -> i64 {
        let sign = |e: usize| if e % 2 == 0 { 1 } else { -1 };
        match self {
            StripKind::Strip { height } => sign(height - 1),
            StripKind::DoubleStrip { depth } => 2 * sign(depth - 1),
            StripKind::Neither => 0,
        }
    }
}

/// One step `from ⊆ to` of a strip tableau.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StripStep {
    pub from: StrictPartition,
    pub to: StrictPartition,
    pub kind: StripKind,
}

/// Squares of `S(to) \ S(from)`.
pub fn skew_cells(from: &StrictPartition, to: &StrictPartition) -> Vec<ShiftedCell> {
    let mut cells = Vec::new();
    for r in 1..=to.len() {
        for k in from.part(r - 1) + 1..=to.part(r - 1) {
            cells.push(ShiftedCell { row: r, col: r + k - 1 });
        }
    }
    cells
}

fn is_strip(cells: &[ShiftedCell]) -> bool {
    if cells.is_empty() {
        return false;
    }
    let mut diags = HashSet::new();
    if !cells.iter().all(|c| diags.insert(c.diagonal())) {
        return false;
    }
    let set: HashSet<ShiftedCell> = cells.iter().copied().collect();
    let mut seen = HashSet::from([cells[0]]);
    let mut stack = vec![cells[0]];
    while let Some(c) = stack.pop() {
        let nbrs = [
            (c.row, c.col + 1),
            (c.row, c.col.wrapping_sub(1)),
            (c.row + 1, c.col),
            (c.row.wrapping_sub(1), c.col),
        ];
        for (row, col) in nbrs {
            let n = ShiftedCell { row, col };
            if set.contains(&n) && seen.insert(n) {
                stack.push(n);
            }
        }
    }
    seen.len() == cells.len()
}

fn height(cells: &[ShiftedCell]) -> usize {
    cells.iter().map(|c| c.row).collect::<HashSet<_>>().len()
}

/// Whether the cells split into two strips, each holding one of the two
/// main-diagonal squares.
fn is_double_strip(cells: &[ShiftedCell]) -> bool {
    let diag: Vec<usize> = (0..cells.len()).filter(|&k| cells[k].diagonal() == 1).collect();
    if diag.len() != 2 {
        return false;
    }
    let others: Vec<usize> = (0..cells.len()).filter(|k| !diag.contains(k)).collect();
    assert!(others.len() < 32, "double-strip split search is exponential");
    (0u32..1 << others.len()).any(|mask| {
        let mut first = vec![cells[diag[0]]];
        let mut second = vec![cells[diag[1]]];
        for (bit, &k) in others.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                first.push(cells[k]);
            } else {
                second.push(cells[k]);
            }
        }
        is_strip(&first) && is_strip(&second)
    })
}

/// `α + β`: diagonals of length two, plus rows occupied by the diagonals
/// of length one.
fn depth(cells: &[ShiftedCell]) -> usize {
    let mut per_diag: HashMap<usize, Vec<&ShiftedCell>> = HashMap::new();
    for c in cells {
        per_diag.entry(c.diagonal()).or_default().push(c);
    }
    let alpha = per_diag.values().filter(|v| v.len() == 2).count();
    let beta = per_diag
        .values()
        .filter(|v| v.len() == 1)
        .map(|v| v[0].row)
        .collect::<HashSet<_>>()
        .len();
    alpha + beta
}

fn classify_cache() -> &'static RwLock<HashMap<(StrictPartition, StrictPartition), StripKind>> {
    static C: OnceLock<RwLock<HashMap<(StrictPartition, StrictPartition), StripKind>>> =
        OnceLock::new();
    C.get_or_init(Default::default)
}

/// Geometric classification of `S(to) \ S(from)`. Requires `from ⊆ to`.
pub fn classify_skew(from: &StrictPartition, to: &StrictPartition) -> StripKind {
    assert!(to.contains(from), "{from} is not contained in {to}");
    let key = (from.clone(), to.clone());
    if let Some(&k) = classify_cache().read().expect("cache poisoned").get(&key) {
        return k;
    }
    let cells = skew_cells(from, to);
    let kind = if is_strip(&cells) {
        StripKind::Strip { height: height(&cells) }
    } else if is_double_strip(&cells) {
        StripKind::DoubleStrip { depth: depth(&cells) }
    } else {
        StripKind::Neither
    };
    classify_cache().write().expect("cache poisoned").insert(key, kind);
    kind
}

/// Strict partitions `ν` with `current ⊆ ν ⊆ outer` and `|ν| = |current| + step`.
fn supersets(current: &StrictPartition, outer: &StrictPartition, step: usize) -> Vec<StrictPartition> {
    fn go(
        k: usize,
        cur: &StrictPartition,
        outer: &StrictPartition,
        left: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<StrictPartition>,
    ) {
        let prev = prefix.last().copied();
        let done = k == outer.len() || prev == Some(0);
        if done {
            if left == 0 {
                let parts: Vec<usize> = prefix.iter().copied().filter(|&p| p > 0).collect();
                out.push(StrictPartition::new(parts).expect("strict by construction"));
            }
            return;
        }
        let lo = cur.part(k);
        let hi = outer.part(k).min(lo + left);
        for v in lo..=hi {
            if let Some(p) = prev {
                if v >= p && v > 0 {
                    continue;
                }
            }
            prefix.push(v);
            go(k + 1, cur, outer, left - (v - lo), prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(0, current, outer, step, &mut Vec::new(), &mut out);
    out
}

/// All strip tableaux `inner = λ⁰ ⊆ λ¹ ⊆ ⋯ ⊆ λᵏ = outer` whose `i`-th step
/// has `steps[i]` squares.
pub fn enumerate_strip_tableaux(shape: &SkewShape, steps: &[usize]) -> Vec<Vec<StripStep>> {
    fn go(
        cur: &StrictPartition,
        outer: &StrictPartition,
        steps: &[usize],
        chain: &mut Vec<StripStep>,
        out: &mut Vec<Vec<StripStep>>,
    ) {
        let Some((&s, rest)) = steps.split_first() else {
            if cur == outer {
                out.push(chain.clone());
            }
            return;
        };
        for next in supersets(cur, outer, s) {
            let kind = classify_skew(cur, &next);
            if kind == StripKind::Neither {
                continue;
            }
            chain.push(StripStep {
                from: cur.clone(),
                to: next.clone(),
                kind,
            });
            go(&next, outer, rest, chain, out);
            chain.pop();
        }
    }
    let mut out = Vec::new();
    go(shape.inner(), shape.outer(), steps, &mut Vec::new(), &mut out);
    out
}

/// Signed count `Σ_T wt(T)` over strip tableaux with the given step sizes.
pub fn strip_weight_sum(shape: &SkewShape, steps: &[usize]) -> i64 {
    fn go(
        cur: &StrictPartition,
        outer: &StrictPartition,
        steps: &[usize],
        memo: &mut HashMap<(StrictPartition, usize), i64>,
    ) -> i64 {
        let Some((&s, rest)) = steps.split_first() else {
            return i64::from(cur == outer);
        };
        let key = (cur.clone(), steps.len());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let mut total = 0;
        for next in supersets(cur, outer, s) {
            let w = classify_skew(cur, &next).weight();
            if w != 0 {
                total += w * go(&next, outer, rest, memo);
            }
        }
        memo.insert(key, total);
        total
    }
    go(shape.inner(), shape.outer(), steps, &mut HashMap::new())
}

/// `Q_{λ/μ} = Σ_π Σ_T 2^{ℓ(π)} wt(T) p_π / z_π` over strip tableaux.
pub fn q_skew_strips(shape: &SkewShape) -> PPoly {
    let mut out = PPoly::zero();
    for pi in enumerate_odd(shape.size()) {
        let total = strip_weight_sum(shape, pi.parts());
        if total == 0 {
            continue;
        }
        let num = BigInt::from(total) << pi.len();
        out.add_term(pi.as_partition().clone(), Rational::new(num, pi.z_factor()));
    }
    out
}
