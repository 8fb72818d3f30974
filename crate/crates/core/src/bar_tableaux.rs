//! Bar tableaux as label-ordered sequences of bar removals.
//!
//! A tableau of type `(ρ_1, …, ρ_k)` is built by removing a `ρ_k`-bar for
//! label `k`, then a `ρ_{k−1}`-bar for label `k − 1`, and so on. For a skew
//! tableau the removals stop at the inner shape, whose squares carry `0`.
//! The square-level filling is derived from the removal sequence.

use std::fmt;

use crate::bar_moves::{bar_moves, bar_weight, BarMove, BarType};
use crate::error::{Error, Result};
use crate::partitions::{SkewShape, StrictPartition};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BarTableau {
    pub shape: StrictPartition,
    pub inner: StrictPartition,
    /// Removals ordered from the largest label down to label 1.
    pub moves: Vec<BarMove>,
    /// Bar sizes indexed by label (`type_vector[0]` is label 1).
    pub type_vector: Vec<usize>,
}

impl BarTableau {
    pub fn num_bars(&self) -> usize {
        self.moves.len()
    }

    /// The shape current just before each removal, largest label first.
    pub fn shapes(&self) -> impl Iterator<Item = &StrictPartition> {
        std::iter::once(&self.shape).chain(self.moves.iter().map(|m| &m.result))
    }

    pub fn weight(&self) -> i64 {
        tableau_weight(self)
    }

    pub fn filling(&self) -> Filling {
        render_filling(self)
    }
}

/// All bar tableaux of shape `shape/inner` whose label `k` bar has size
/// `type_vector[k − 1]`, in a deterministic order.
pub fn enumerate_tableaux(
    shape: &StrictPartition,
    inner: &StrictPartition,
    type_vector: &[usize],
) -> Result<Vec<BarTableau>> {
    let total: usize = type_vector.iter().sum();
    if shape.size() < inner.size() || total != shape.size() - inner.size() {
        return Err(Error::SizeMismatch {
            shape: shape.size().saturating_sub(inner.size()),
            parts: total,
        });
    }
    if let Some(&r) = type_vector.iter().find(|&&r| r % 2 == 0) {
        return Err(Error::BadBarSize(r));
    }
    let mut out = Vec::new();
    let mut stack = Vec::new();
    collect(shape, inner, type_vector, &mut stack, &mut |moves| {
        out.push(BarTableau {
            shape: shape.clone(),
            inner: inner.clone(),
            moves: moves.to_vec(),
            type_vector: type_vector.to_vec(),
        })
    })?;
    Ok(out)
}

fn collect(
    current: &StrictPartition,
    inner: &StrictPartition,
    remaining: &[usize],
    stack: &mut Vec<BarMove>,
    emit: &mut dyn FnMut(&[BarMove]),
) -> Result<()> {
    let Some((&r, rest)) = remaining.split_last() else {
        if current == inner {
            emit(stack);
        }
        return Ok(());
    };
    for mv in bar_moves(current, r)? {
        if !mv.result.contains(inner) {
            continue;
        }
        let next = mv.result.clone();
        stack.push(mv);
        collect(&next, inner, rest, stack, emit)?;
        stack.pop();
    }
    Ok(())
}

pub fn enumerate_skew_tableaux(shape: &SkewShape, type_vector: &[usize]) -> Result<Vec<BarTableau>> {
    enumerate_tableaux(shape.outer(), shape.inner(), type_vector)
}

/// Product of the bar factors along the removal sequence; 1 when empty.
pub fn tableau_weight(t: &BarTableau) -> i64 {
    t.shapes()
        .zip(&t.moves)
        .map(|(lam, mv)| bar_weight(lam, mv))
        .product()
}

/// Square-level labels of a tableau. Row `r` holds `outer_r` entries, read
/// left to right; inner squares carry `0`. Rows are shifted when displayed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filling {
    pub rows: Vec<Vec<usize>>,
}

impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .rows
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", " ".repeat(r * (width + 1)))?;
            for (c, v) in row.iter().enumerate() {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v:>width$}")?;
            }
        }
        Ok(())
    }
}

pub fn render_filling(t: &BarTableau) -> Filling {
    let mut rows: Vec<Vec<usize>> = t.shape.parts().iter().map(|&p| vec![0; p]).collect();
    let mut lengths: Vec<usize> = t.shape.parts().to_vec();
    let physical = |lengths: &[usize], part: usize| -> usize {
        lengths
            .iter()
            .position(|&l| l == part)
            .expect("current part belongs to a physical row")
    };
    let k = t.moves.len();
    let mut lam = t.shape.clone();
    for (step, mv) in t.moves.iter().enumerate() {
        let label = k - step;
        let li = lam.parts()[mv.row - 1];
        let p = physical(&lengths, li);
        match mv.bar_type {
            BarType::Type1 => {
                for cell in &mut rows[p][li - mv.size..li] {
                    *cell = label;
                }
                lengths[p] = li - mv.size;
            }
            BarType::Type2 => {
                for cell in &mut rows[p][..li] {
                    *cell = label;
                }
                lengths[p] = 0;
            }
            BarType::Type3 => {
                let lj = lam.parts()[mv.partner.expect("type 3 has j") - 1];
                let q = physical(&lengths, lj);
                rows[p][..li].fill(label);
                rows[q][..lj].fill(label);
                lengths[p] = 0;
                lengths[q] = 0;
            }
        }
        lam = mv.result.clone();
    }
    Filling { rows }
}
