//! Verification sweeps over all shapes of bounded size.
//!
//! Each sweep is split by `n = |λ|` so callers can report progress level by
//! level. A level report lists every violation with enough detail to
//! reproduce it.

use std::fmt;

use crate::partitions::{enumerate_strict, skew_shapes_up_to, SkewShape};
use crate::ppoly::PPoly;
use crate::qfunctions::{q_morris, q_skew_pf};
use crate::srank::{min_bars_bruteforce, srank_skew, srank_straight};
use crate::strip_tableaux::q_skew_strips;

/// A single failed check.
#[derive(Clone, Debug, PartialEq)]
pub struct Violation {
    pub check: &'static str,
    pub shape: String,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}: {}", self.check, self.shape, self.detail)
    }
}

/// Outcome of one level of a sweep.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct LevelReport {
    pub n: usize,
    pub shapes: usize,
    /// `(check name, number of shapes it ran on)`.
    pub checks: Vec<(&'static str, usize)>,
    pub violations: Vec<Violation>,
}

impl LevelReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn count(&mut self, check: &'static str) {
        match self.checks.iter_mut().find(|(c, _)| *c == check) {
            Some((_, k)) => *k += 1,
            None => self.checks.push((check, 1)),
        }
    }

    fn fail(&mut self, check: &'static str, shape: &dyn fmt::Display, detail: String) {
        self.violations.push(Violation {
            check,
            shape: shape.to_string(),
            detail,
        });
    }
}

fn bottom_text(q: &PPoly) -> String {
    q.bottom().map(|b| b.to_string()).unwrap_or_else(|_| "0".into())
}

/// Checks that the lowest degree of `Q_λ` equals `srank(λ)` for all strict
/// `λ ⊢ n`.
pub fn conjecture_level(n: usize) -> LevelReport {
    let mut report = LevelReport {
        n,
        ..Default::default()
    };
    for lam in enumerate_strict(n) {
        report.shapes += 1;
        report.count("lowest degree = srank");
        let q = q_morris(&lam);
        let srank = srank_straight(&lam);
        match q.lowest_degree() {
            Ok(d) if d == srank => {}
            Ok(d) => report.fail(
                "lowest degree = srank",
                &lam,
                format!("lowest degree {d}, srank {srank}, bottom {}", bottom_text(&q)),
            ),
            Err(_) => report.fail("lowest degree = srank", &lam, "Q-function is zero".into()),
        }
    }
    report
}

/// Checks, for every skew shape `λ/μ` with `|λ| = n`:
/// the Pfaffian and strip routes agree, `srank(λ/μ)` equals the brute-force
/// minimum number of bars, and the lowest degree of a nonzero `Q_{λ/μ}` is
/// at least `srank(λ/μ)`.
pub fn skew_level(n: usize) -> LevelReport {
    let mut report = LevelReport {
        n,
        ..Default::default()
    };
    let shapes: Vec<SkewShape> = skew_shapes_up_to(n)
        .into_iter()
        .filter(|s| s.outer().size() == n)
        .collect();
    for shape in shapes {
        report.shapes += 1;
        let pf = q_skew_pf(&shape);
        let strips = q_skew_strips(&shape);
        report.count("pf = strips");
        if pf != strips {
            report.fail(
                "pf = strips",
                &shape,
                format!("pf {pf}, strips {strips}"),
            );
        }

        let srank = match srank_skew(&shape) {
            Ok(s) => s,
            Err(e) => {
                report.fail("srank = min bars", &shape, format!("srank failed: {e}"));
                continue;
            }
        };
        report.count("srank = min bars");
        match min_bars_bruteforce(&shape, n) {
            Ok(Some(m)) if m == srank => {}
            Ok(Some(m)) => report.fail(
                "srank = min bars",
                &shape,
                format!("srank {srank}, minimum bars {m}"),
            ),
            Ok(None) => report.fail(
                "srank = min bars",
                &shape,
                format!("srank {srank}, but no bar tableau exists"),
            ),
            Err(e) => report.fail("srank = min bars", &shape, e.to_string()),
        }

        if let Ok(d) = pf.lowest_degree() {
            report.count("lowest degree >= srank");
            if d < srank {
                report.fail(
                    "lowest degree >= srank",
                    &shape,
                    format!("lowest degree {d}, srank {srank}, bottom {}", bottom_text(&pf)),
                );
            }
        }
    }
    report
}
