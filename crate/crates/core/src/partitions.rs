//! Partitions, strict partitions, odd-part partitions and skew shifted shapes.
//!
//! All shapes are stored without trailing zeros. Operations that need the
//! zero-padded form (Pfaffian matrices, skew containment) pad on demand.
//!
//! The text format is a comma-separated list of parts, optionally followed
//! by `/` and the inner shape: `9,7,6,3,1` or `4,3/3`. The empty partition
//! is written as an empty string or `()`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

fn fmt_parts(parts: &[usize], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "(")?;
    for (k, p) in parts.iter().enumerate() {
        if k > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    write!(f, ")")
}

fn parse_parts(text: &str) -> Result<Vec<usize>> {
    let t = text.trim();
    let t = t
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .unwrap_or(t)
        .trim();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    t.split(',')
        .map(|tok| {
            let tok = tok.trim();
            let v: i64 = tok.parse().map_err(|_| Error::BadToken(tok.to_string()))?;
            if v <= 0 {
                return Err(Error::NonPositivePart(v));
            }
            Ok(v as usize)
        })
        .collect()
}

/// A weakly decreasing sequence of positive integers.
///
/// Used as the index `ν` of a power-sum monomial `p_ν`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::NonPositivePart(0));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing(parts));
        }
        Ok(Partition(parts))
    }

    /// Sorts the given positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Merges the parts of two partitions (the index of `p_ν · p_κ`).
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&x), Some(&&y)) => {
                    if x >= y {
                        parts.push(x);
                        a.next();
                    } else {
                        parts.push(y);
                        b.next();
                    }
                }
                (Some(&&x), None) => {
                    parts.push(x);
                    a.next();
                }
                (None, Some(&&y)) => {
                    parts.push(y);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Partition(parts)
    }

    /// Whether every part of `factor`, with multiplicity, is a part of `self`.
    pub fn contains_parts(&self, factor: &[usize]) -> bool {
        let mut rest = self.0.clone();
        for p in factor {
            match rest.iter().position(|q| q == p) {
                Some(k) => {
                    rest.remove(k);
                }
                None => return false,
            }
        }
        true
    }

    /// `∏ i^{m_i} m_i!` over distinct part values `i` with multiplicity `m_i`.
    pub fn z_factor(&self) -> BigInt {
        let mut z = BigInt::one();
        let mut k = 0;
        while k < self.0.len() {
            let part = self.0[k];
            let mut mult = 0usize;
            while k < self.0.len() && self.0[k] == part {
                mult += 1;
                k += 1;
                z *= BigInt::from(part) * BigInt::from(mult);
            }
        }
        z
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_parts(&self.0, f)
    }
}

/// A partition with pairwise distinct parts; indexes shifted diagrams.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StrictPartition(Vec<usize>);

impl StrictPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::NonPositivePart(0));
        }
        if parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::NotStrict(parts));
        }
        Ok(StrictPartition(parts))
    }

    /// Sorts positive parts decreasingly, dropping zeros. Fails on repeats.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self> {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        StrictPartition::new(parts)
    }

    pub fn empty() -> Self {
        StrictPartition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Zero-based part lookup, padding with zeros past the end.
    pub fn part(&self, k: usize) -> usize {
        self.0.get(k).copied().unwrap_or(0)
    }

    /// Containment of shifted diagrams: `other_i ≤ self_i` for every row.
    pub fn contains(&self, other: &StrictPartition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn parity_stats(&self) -> ParityStats {
        parity_stats(self)
    }

    pub fn as_partition(&self) -> Partition {
        Partition(self.0.clone())
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_parts(&self.0, f)
    }
}

impl FromStr for StrictPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StrictPartition::new(parse_parts(s)?)
    }
}

/// A partition all of whose parts are odd; indexes conjugacy classes
/// carrying spin characters.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OddPartition(Partition);

impl OddPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(&p) = parts.iter().find(|&&p| p % 2 == 0) {
            return Err(if p == 0 {
                Error::NonPositivePart(0)
            } else {
                Error::EvenPart(p)
            });
        }
        Ok(OddPartition(Partition::new(parts)?))
    }

    pub fn parts(&self) -> &[usize] {
        self.0.parts()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.size()
    }

    pub fn as_partition(&self) -> &Partition {
        &self.0
    }

    pub fn z_factor(&self) -> BigInt {
        self.0.z_factor()
    }
}

impl fmt::Display for OddPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for OddPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        OddPartition::new(parse_parts(s)?)
    }
}

/// A skew shifted shape `outer/inner` with `inner ⊆ outer`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewShape {
    outer: StrictPartition,
    inner: StrictPartition,
}

impl SkewShape {
    pub fn new(outer: StrictPartition, inner: StrictPartition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained {
                outer: outer.0,
                inner: inner.0,
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: StrictPartition) -> Self {
        SkewShape {
            outer,
            inner: StrictPartition::empty(),
        }
    }

    pub fn outer(&self) -> &StrictPartition {
        &self.outer
    }

    pub fn inner(&self) -> &StrictPartition {
        &self.inner
    }

    /// Number of squares in `S(outer/inner)`.
    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match parse_shape(s)? {
            Shape::Straight(lam) => SkewShape::straight(lam),
            Shape::Skew(sk) => sk,
        })
    }
}

/// Result of parsing the shape text format.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Shape {
    Straight(StrictPartition),
    Skew(SkewShape),
}

impl Shape {
    pub fn into_skew(self) -> SkewShape {
        match self {
            Shape::Straight(lam) => SkewShape::straight(lam),
            Shape::Skew(sk) => sk,
        }
    }
}

/// Parses `"9,7,6,3,1"` or `"4,3/3"`.
pub fn parse_shape(text: &str) -> Result<Shape> {
    match text.split_once('/') {
        None => Ok(Shape::Straight(text.parse()?)),
        Some((outer, inner)) => {
            let outer: StrictPartition = outer.parse()?;
            let inner: StrictPartition = inner.parse()?;
            Ok(Shape::Skew(SkewShape::new(outer, inner)?))
        }
    }
}

/// Counts of odd and even parts, and the parity `ε = e mod 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParityStats {
    pub odd: usize,
    pub even: usize,
    pub epsilon: usize,
}

pub fn parity_stats(lam: &StrictPartition) -> ParityStats {
    let odd = lam.parts().iter().filter(|&&p| p % 2 == 1).count();
    let even = lam.len() - odd;
    ParityStats {
        odd,
        even,
        epsilon: even % 2,
    }
}

pub fn z_factor(pi: &OddPartition) -> BigInt {
    pi.z_factor()
}

/// All strict partitions of `n` in lexicographically descending order.
pub fn enumerate_strict(n: usize) -> Vec<StrictPartition> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<StrictPartition>) {
        if rest == 0 {
            out.push(StrictPartition(prefix.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            // the remaining parts are distinct and below p
            if p * (p + 1) / 2 < rest {
                break;
            }
            prefix.push(p);
            go(rest - p, p - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All odd-part partitions of `n` in lexicographically descending order.
pub fn enumerate_odd(n: usize) -> Vec<OddPartition> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<OddPartition>) {
        if rest == 0 {
            out.push(OddPartition(Partition(prefix.clone())));
            return;
        }
        let mut p = rest.min(max);
        if p % 2 == 0 {
            p -= 1;
        }
        while p >= 1 {
            prefix.push(p);
            go(rest - p, p, prefix, out);
            prefix.pop();
            if p < 2 {
                break;
            }
            p -= 2;
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All strict partitions contained in `lam`, including `()` and `lam`.
pub fn contained_strict(lam: &StrictPartition) -> Vec<StrictPartition> {
    fn go(lam: &[usize], k: usize, prev: usize, prefix: &mut Vec<usize>, out: &mut Vec<StrictPartition>) {
        out.push(StrictPartition(prefix.clone()));
        if k == lam.len() {
            return;
        }
        let hi = lam[k].min(prev.saturating_sub(1));
        for p in (1..=hi).rev() {
            prefix.push(p);
            go(lam, k + 1, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(lam.parts(), 0, usize::MAX, &mut Vec::new(), &mut out);
    out
}

/// Every skew shape `λ/μ` with `|λ| ≤ max_n`, ordered by `|λ|`, then `λ`
/// and `μ` in enumeration order.
pub fn skew_shapes_up_to(max_n: usize) -> Vec<SkewShape> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        for lam in enumerate_strict(n) {
            for mu in contained_strict(&lam) {
                out.push(SkewShape {
                    outer: lam.clone(),
                    inner: mu,
                });
            }
        }
    }
    out
}
