//! The coordinate ring used for GL(2) Poisson computations: polynomials in
//! θ₊, θ₋ and Laurent monomials in v = e^(θ+θ₃) and w = e^(θ−θ₃), with
//! `MultiPoly` coefficients in the deformation parameters.
//!
//! The four derivations act by
//!   ∂θ₃: v ↦ v, w ↦ −w;   ∂θ: v ↦ v, w ↦ w;   ∂θ± polynomially,
//! so e^(−2θ₃) = w·v⁻¹ and every §-coordinate bracket closes in this ring.

use super::{MultiPoly, Rational};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// The four coordinate directions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExpVar {
    /// θ₃ (acts on v, w exponents)
    Theta3,
    /// θ₊
    ThetaPlus,
    /// θ₋
    ThetaMinus,
    /// θ (acts on v, w exponents)
    Theta,
}

/// Monomial key: v^dv · w^dw · θ₊^p · θ₋^m.
type Key = (i32, i32, u32, u32);

/// Element of the exponential-coordinate ring.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ExpCoordExpr {
    terms: BTreeMap<Key, MultiPoly>,
}

impl ExpCoordExpr {
    pub fn zero() -> Self {
        ExpCoordExpr {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 0, 0, MultiPoly::one())
    }

    pub fn constant(p: MultiPoly) -> Self {
        Self::monomial(0, 0, 0, 0, p)
    }

    /// c · v^dv · w^dw · θ₊^p · θ₋^m
    pub fn monomial(dv: i32, dw: i32, p: u32, m: u32, c: MultiPoly) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((dv, dw, p, m), c);
        }
        ExpCoordExpr { terms }
    }

    /// v = e^(θ+θ₃)
    pub fn v() -> Self {
        Self::monomial(1, 0, 0, 0, MultiPoly::one())
    }

    /// w = e^(θ−θ₃)
    pub fn w() -> Self {
        Self::monomial(0, 1, 0, 0, MultiPoly::one())
    }

    /// θ₊
    pub fn theta_plus() -> Self {
        Self::monomial(0, 0, 1, 0, MultiPoly::one())
    }

    /// θ₋
    pub fn theta_minus() -> Self {
        Self::monomial(0, 0, 0, 1, MultiPoly::one())
    }

    /// e^(−2θ₃) = w·v⁻¹
    pub fn exp_m2theta3() -> Self {
        Self::monomial(-1, 1, 0, 0, MultiPoly::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert(&mut self, k: Key, c: MultiPoly) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(k) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = &*o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, p: &MultiPoly) -> Self {
        let mut out = Self::zero();
        for (k, c) in &self.terms {
            out.insert(*k, p * c);
        }
        out
    }

    pub fn scale_rat(&self, r: &Rational) -> Self {
        self.scale(&MultiPoly::constant(r.clone()))
    }

    /// Exact partial derivative along one of the four coordinates.
    pub fn derive(&self, var: ExpVar) -> Self {
        let mut out = Self::zero();
        for (&(dv, dw, p, m), c) in &self.terms {
            match var {
                ExpVar::Theta3 => {
                    // ∂θ₃ (v^dv w^dw) = (dv − dw) v^dv w^dw
                    let factor = i64::from(dv) - i64::from(dw);
                    if factor != 0 {
                        out.insert((dv, dw, p, m), c.scale(&super::rint(factor)));
                    }
                }
                ExpVar::Theta => {
                    let factor = i64::from(dv) + i64::from(dw);
                    if factor != 0 {
                        out.insert((dv, dw, p, m), c.scale(&super::rint(factor)));
                    }
                }
                ExpVar::ThetaPlus => {
                    if p > 0 {
                        out.insert((dv, dw, p - 1, m), c.scale(&super::rint(i64::from(p))));
                    }
                }
                ExpVar::ThetaMinus => {
                    if m > 0 {
                        out.insert((dv, dw, p, m - 1), c.scale(&super::rint(i64::from(m))));
                    }
                }
            }
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Key, &MultiPoly)> {
        self.terms.iter()
    }

    /// Coefficient polynomials of all monomials, for ideal-membership checks.
    pub fn coefficients(&self) -> Vec<MultiPoly> {
        self.terms.values().cloned().collect()
    }

    pub fn canonical_text(&self) -> String {
        format!("{self}")
    }
}

impl Add for &ExpCoordExpr {
    type Output = ExpCoordExpr;
    fn add(self, rhs: &ExpCoordExpr) -> ExpCoordExpr {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.insert(*k, c.clone());
        }
        out
    }
}

impl Sub for &ExpCoordExpr {
    type Output = ExpCoordExpr;
    fn sub(self, rhs: &ExpCoordExpr) -> ExpCoordExpr {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.insert(*k, -c);
        }
        out
    }
}

impl Neg for &ExpCoordExpr {
    type Output = ExpCoordExpr;
    fn neg(self) -> ExpCoordExpr {
        ExpCoordExpr {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Mul for &ExpCoordExpr {
    type Output = ExpCoordExpr;
    fn mul(self, rhs: &ExpCoordExpr) -> ExpCoordExpr {
        let mut out = ExpCoordExpr::zero();
        for (&(dv1, dw1, p1, m1), c1) in &self.terms {
            for (&(dv2, dw2, p2, m2), c2) in &rhs.terms {
                out.insert((dv1 + dv2, dw1 + dw2, p1 + p2, m1 + m2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for ExpCoordExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        for (&(dv, dw, p, m), c) in &self.terms {
            let mut factors = Vec::new();
            for (name, k) in [("v", i64::from(dv)), ("w", i64::from(dw))] {
                match k {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{k}")),
                }
            }
            for (name, k) in [("th+", u64::from(p)), ("th-", u64::from(m))] {
                match k {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{k}")),
                }
            }
            if factors.is_empty() {
                parts.push(format!("({c})"));
            } else {
                parts.push(format!("({c})*{}", factors.join("*")));
            }
        }
        f.write_str(&parts.join(" + "))
    }
}
