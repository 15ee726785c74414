//! Multivariate polynomials over the global deformation parameters with
//! exact rational coefficients.
//!
//! Exponents are signed: the classification tables carry coefficients such
//! as `a^2/a+^2`, which are monomials with negative exponents in this ring.
//! Nothing beyond monomial denominators is ever needed.

use super::{Rational, Sym, NSYMS, SYMS};
use crate::{Error, Result};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

type Expt = [i16; NSYMS];

const ZERO_EXPT: Expt = [0; NSYMS];

/// A polynomial (Laurent in the parameter symbols) with rational coefficients.
/// No zero coefficients are stored; equal values have equal term maps.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Expt, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(ZERO_EXPT, c);
        }
        MultiPoly { terms }
    }

    pub fn int(n: i64) -> Self {
        Self::constant(super::rint(n))
    }

    pub fn sym(s: Sym) -> Self {
        Self::sym_pow(s, 1)
    }

    /// Monomial `s^k`; `k` may be negative.
    pub fn sym_pow(s: Sym, k: i16) -> Self {
        let mut e = ZERO_EXPT;
        e[s.index()] = k;
        let mut terms = BTreeMap::new();
        terms.insert(e, Rational::one());
        MultiPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The constant term.
    pub fn constant_term(&self) -> Rational {
        self.terms.get(&ZERO_EXPT).cloned().unwrap_or_else(Rational::zero)
    }

    /// If the polynomial is a constant, return it.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&ZERO_EXPT).cloned(),
            _ => None,
        }
    }

    /// If the polynomial is a single term, return (exponents, coefficient).
    pub fn as_single_term(&self) -> Option<(Expt, Rational)> {
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            Some((*e, c.clone()))
        } else {
            None
        }
    }

    fn insert_term(&mut self, e: Expt, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, t)| (*e, t.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Iterate (exponent vector, coefficient) pairs in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Expt, &Rational)> {
        self.terms.iter()
    }

    /// Symbols appearing with nonzero exponent anywhere.
    pub fn support(&self) -> Vec<Sym> {
        let mut seen = [false; NSYMS];
        for e in self.terms.keys() {
            for (i, &k) in e.iter().enumerate() {
                if k != 0 {
                    seen[i] = true;
                }
            }
        }
        SYMS.iter().copied().filter(|s| seen[s.index()]).collect()
    }

    pub fn depends_on(&self, s: Sym) -> bool {
        self.terms.keys().any(|e| e[s.index()] != 0)
    }

    /// Exact evaluation at a full assignment of the symbols. Negative
    /// exponents on a symbol assigned zero are reported as an error.
    pub fn eval(&self, point: &dyn Fn(Sym) -> Rational) -> Result<Rational> {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let v = point(Sym::from_index(i));
                if k > 0 {
                    for _ in 0..k {
                        term *= v.clone();
                    }
                } else {
                    if v.is_zero() {
                        return Err(Error::ZeroDenominator(Sym::from_index(i).name().into()));
                    }
                    for _ in 0..(-k) {
                        term /= v.clone();
                    }
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Substitute a single-term polynomial (rational multiple of a monomial)
    /// for a symbol. Used by the contraction parameter maps; fails if the
    /// replacement is not a single term and the symbol occurs with a
    /// negative exponent.
    pub fn substitute(&self, s: Sym, replacement: &MultiPoly) -> Result<MultiPoly> {
        let idx = s.index();
        let mut out = MultiPoly::zero();
        for (e, c) in &self.terms {
            let k = e[idx];
            let mut base = *e;
            base[idx] = 0;
            let mut stripped = MultiPoly {
                terms: BTreeMap::from([(base, c.clone())]),
            };
            if k > 0 {
                stripped = &stripped * &replacement.pow(k as u32);
            } else if k < 0 {
                let (re, rc) = replacement.as_single_term().ok_or_else(|| {
                    Error::InexactDivision(format!(
                        "substituting non-monomial into negative power of {s}"
                    ))
                })?;
                if rc.is_zero() {
                    return Err(Error::ZeroDenominator(s.name().into()));
                }
                let mut inv_e = ZERO_EXPT;
                for i in 0..NSYMS {
                    inv_e[i] = -re[i];
                }
                let inv = MultiPoly {
                    terms: BTreeMap::from([(inv_e, Rational::one() / rc)]),
                };
                stripped = &stripped * &inv.pow((-k) as u32);
            }
            out = &out + &stripped;
        }
        Ok(out)
    }

    /// Relabel symbols with signs: each symbol `s` is replaced by
    /// `sign(s) * target(s)`. Used by the gl(2) parameter automorphism.
    pub fn relabel(&self, map: &dyn Fn(Sym) -> (Sym, bool)) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (e, c) in &self.terms {
            let mut ne = ZERO_EXPT;
            let mut coeff = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let (target, negate) = map(Sym::from_index(i));
                ne[target.index()] += k;
                if negate && k % 2 != 0 {
                    coeff = -coeff;
                }
            }
            out.insert_term(ne, coeff);
        }
        out
    }

    /// If `self == lambda * other` for a rational `lambda != 0`, return it.
    /// Both zero returns `Some(0)`; exactly one zero returns `None`.
    pub fn exact_scalar_ratio(&self, other: &MultiPoly) -> Option<Rational> {
        if self.is_zero() && other.is_zero() {
            return Some(Rational::zero());
        }
        if self.is_zero() || other.is_zero() || self.terms.len() != other.terms.len() {
            return None;
        }
        let mut ratio: Option<Rational> = None;
        for ((e1, c1), (e2, c2)) in self.terms.iter().zip(other.terms.iter()) {
            if e1 != e2 {
                return None;
            }
            let r = c1.clone() / c2.clone();
            match &ratio {
                None => ratio = Some(r),
                Some(prev) if *prev == r => {}
                Some(_) => return None,
            }
        }
        ratio
    }

    /// Divide exactly by a single-term polynomial.
    pub fn div_monomial(&self, d: &MultiPoly) -> Result<MultiPoly> {
        let (de, dc) = d.as_single_term().ok_or_else(|| {
            Error::InexactDivision("divisor is not a single term".to_string())
        })?;
        if dc.is_zero() {
            return Err(Error::InexactDivision("division by zero".to_string()));
        }
        let mut out = MultiPoly::zero();
        for (e, c) in &self.terms {
            let mut ne = ZERO_EXPT;
            for i in 0..NSYMS {
                ne[i] = e[i] - de[i];
            }
            out.insert_term(ne, c.clone() / dc.clone());
        }
        Ok(out)
    }

    /// Normalize to a canonical representative of the ray {λp : λ > 0, λ ∈ ℚ},
    /// with the leading (smallest-key) coefficient made +1. Used when comparing
    /// constraint sets up to rational scale.
    pub fn monic(&self) -> MultiPoly {
        match self.terms.iter().next() {
            None => MultiPoly::zero(),
            Some((_, c)) => {
                let lead = c.clone();
                self.scale(&(Rational::one() / lead))
            }
        }
    }

    /// Canonical text: sorted monomials, explicit rational coefficients.
    pub fn canonical_text(&self) -> String {
        format!("{self}")
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_term(*e, -c.clone());
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let mut e = ZERO_EXPT;
                for i in 0..NSYMS {
                    e[i] = e1[i] + e2[i];
                }
                out.insert_term(e, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
                first = false;
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k != 0)
                .map(|(i, &k)| {
                    let s = Sym::from_index(i).name();
                    if k == 1 {
                        s.to_string()
                    } else {
                        format!("{s}^{k}")
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&vars.join("*"))?;
            } else {
                write!(f, "{mag}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}
