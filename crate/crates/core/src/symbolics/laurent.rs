//! Laurent polynomials in the contraction parameter ε with `MultiPoly`
//! coefficients. Divergence under ε → 0 is a value, not a failure.

use super::MultiPoly;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Laurent polynomial Σ_k ε^k · p_k with integer k (negative allowed).
/// No zero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, MultiPoly>,
}

/// Negative-degree terms that survive ε → 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivergenceReport {
    /// (ε-degree, coefficient) for every strictly negative degree present.
    pub terms: Vec<(i64, MultiPoly)>,
}

impl DivergenceReport {
    /// Most negative ε-degree present.
    pub fn worst_degree(&self) -> i64 {
        self.terms.iter().map(|(d, _)| *d).min().unwrap_or(0)
    }
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            coeffs: BTreeMap::new(),
        }
    }

    /// ε^degree · p.
    pub fn term(degree: i64, p: MultiPoly) -> Self {
        let mut coeffs = BTreeMap::new();
        if !p.is_zero() {
            coeffs.insert(degree, p);
        }
        LaurentPoly { coeffs }
    }

    pub fn constant(p: MultiPoly) -> Self {
        Self::term(0, p)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn coeff(&self, degree: i64) -> MultiPoly {
        self.coeffs.get(&degree).cloned().unwrap_or_else(MultiPoly::zero)
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&i64, &MultiPoly)> {
        self.coeffs.iter()
    }

    fn insert(&mut self, degree: i64, p: MultiPoly) {
        if p.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(degree) {
            Entry::Vacant(v) => {
                v.insert(p);
            }
            Entry::Occupied(mut o) => {
                let sum = &*o.get() + &p;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Multiply by ε^k.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(d, p)| (d + k, p.clone())).collect(),
        }
    }

    pub fn scale(&self, p: &MultiPoly) -> Self {
        let mut out = LaurentPoly::zero();
        for (d, q) in &self.coeffs {
            out.insert(*d, p * q);
        }
        out
    }

    /// The ε → 0 limit: the degree-0 coefficient if no negative degrees
    /// remain, otherwise a report of every divergent term.
    pub fn limit(&self) -> Result<MultiPoly, DivergenceReport> {
        let negative: Vec<(i64, MultiPoly)> = self
            .coeffs
            .range(..0)
            .map(|(d, p)| (*d, p.clone()))
            .collect();
        if negative.is_empty() {
            Ok(self.coeff(0))
        } else {
            Err(DivergenceReport { terms: negative })
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (d, p) in &rhs.coeffs {
            out.insert(*d, p.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (d, p) in &rhs.coeffs {
            out.insert(*d, -p);
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(d, p)| (*d, -p)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (d1, p1) in &self.coeffs {
            for (d2, p2) in &rhs.coeffs {
                out.insert(d1 + d2, p1 * p2);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(d, p)| match d {
                0 => format!("({p})"),
                1 => format!("eps*({p})"),
                _ => format!("eps^{d}*({p})"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}
