//! Sparse polynomials in the power sums `p_1, p_2, …` with exact rational
//! coefficients.
//!
//! A term is keyed by the index partition `ν` of `p_ν = p_{ν_1} p_{ν_2} ⋯`.
//! Zero coefficients are never stored, so structural equality is polynomial
//! equality. The degree of `p_ν` is `ℓ(ν)`.
//!
//! Text and JSON output list terms in canonical order: by degree `ℓ(ν)`
//! ascending, then by `ν` compared lexicographically.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::Partition;

pub type Rational = BigRational;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PPoly {
    terms: BTreeMap<Partition, Rational>,
}

/// One entry of the JSON form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub nu: Vec<usize>,
    pub num: String,
    pub den: String,
}

fn canonical_cmp(a: &Partition, b: &Partition) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.parts().cmp(b.parts()))
}

impl PPoly {
    pub fn constant(c: Rational) -> Self {
        Self::monomial(Partition::empty(), c)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(BigInt::from(c)))
    }

    pub fn monomial(nu: Partition, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(nu, c);
        }
        PPoly { terms }
    }

    /// The single power sum `p_k`.
    pub fn p(k: usize) -> Self {
        Self::monomial(Partition::from_unsorted(vec![k]), Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, nu: &Partition) -> Rational {
        self.terms.get(nu).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> Vec<(&Partition, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| canonical_cmp(a.0, b.0));
        v
    }

    pub fn add_term(&mut self, nu: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(nu) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> PPoly {
        if c.is_zero() {
            return PPoly::zero();
        }
        PPoly {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> PPoly {
        self.scale(&Rational::from_integer(BigInt::from(c)))
    }

    /// Minimum `ℓ(ν)` over the support.
    pub fn lowest_degree(&self) -> Result<usize> {
        self.terms.keys().map(Partition::len).min().ok_or(Error::ZeroPolynomial)
    }

    /// The terms of lowest degree.
    pub fn bottom(&self) -> Result<PPoly> {
        let d = self.lowest_degree()?;
        Ok(PPoly {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.len() == d)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        })
    }

    /// `Some(n)` when every term has weight `|ν| = n`; `None` for mixed
    /// weights or the zero polynomial.
    pub fn homogeneous_weight(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(Partition::size);
        let w = it.next()?;
        it.all(|x| x == w).then_some(w)
    }

    pub fn to_json_terms(&self) -> Vec<JsonTerm> {
        self.terms()
            .into_iter()
            .map(|(nu, c)| JsonTerm {
                nu: nu.parts().to_vec(),
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_terms()).expect("plain data serializes")
    }

    pub fn from_json_terms(terms: &[JsonTerm]) -> Result<PPoly> {
        let mut out = PPoly::zero();
        for t in terms {
            let nu = Partition::new(t.nu.clone())
                .map_err(|e| Error::BadPolynomial(format!("index {:?}: {e}", t.nu)))?;
            let num: BigInt = t
                .num
                .parse()
                .map_err(|_| Error::BadPolynomial(format!("numerator {:?}", t.num)))?;
            let den: BigInt = t
                .den
                .parse()
                .map_err(|_| Error::BadPolynomial(format!("denominator {:?}", t.den)))?;
            if den.is_zero() {
                return Err(Error::BadPolynomial("zero denominator".into()));
            }
            out.add_term(nu, Rational::new(num, den));
        }
        Ok(out)
    }

    pub fn from_json(text: &str) -> Result<PPoly> {
        let terms: Vec<JsonTerm> =
            serde_json::from_str(text).map_err(|e| Error::BadPolynomial(e.to_string()))?;
        Self::from_json_terms(&terms)
    }
}

impl fmt::Display for PPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (nu, c)) in self.terms().into_iter().enumerate() {
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if nu.is_empty() {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "p[")?;
            for (i, part) in nu.parts().iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{part}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

impl Zero for PPoly {
    fn zero() -> Self {
        PPoly::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for PPoly {
    fn one() -> Self {
        PPoly::from_int(1)
    }
}

impl AddAssign<&PPoly> for PPoly {
    fn add_assign(&mut self, rhs: &PPoly) {
        for (k, v) in &rhs.terms {
            self.add_term(k.clone(), v.clone());
        }
    }
}

impl SubAssign<&PPoly> for PPoly {
    fn sub_assign(&mut self, rhs: &PPoly) {
        for (k, v) in &rhs.terms {
            self.add_term(k.clone(), -v.clone());
        }
    }
}

impl Add<&PPoly> for &PPoly {
    type Output = PPoly;

    fn add(self, rhs: &PPoly) -> PPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&PPoly> for &PPoly {
    type Output = PPoly;

    fn sub(self, rhs: &PPoly) -> PPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&PPoly> for &PPoly {
    type Output = PPoly;

    fn mul(self, rhs: &PPoly) -> PPoly {
        let mut out = PPoly::zero();
        for (ka, va) in &self.terms {
            for (kb, vb) in &rhs.terms {
                out.add_term(ka.union(kb), va * vb);
            }
        }
        out
    }
}

impl Neg for &PPoly {
    type Output = PPoly;

    fn neg(self) -> PPoly {
        PPoly {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<PPoly> for PPoly {
            type Output = PPoly;

            fn $method(self, rhs: PPoly) -> PPoly {
                (&self).$method(&rhs)
            }
        }

        impl $tr<&PPoly> for PPoly {
            type Output = PPoly;

            fn $method(self, rhs: &PPoly) -> PPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for PPoly {
    type Output = PPoly;

    fn neg(self) -> PPoly {
        -&self
    }
}

impl std::iter::Sum for PPoly {
    fn sum<I: Iterator<Item = PPoly>>(iter: I) -> PPoly {
        let mut out = PPoly::zero();
        for p in iter {
            out += &p;
        }
        out
    }
}
