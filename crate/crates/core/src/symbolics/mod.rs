//! Exact arithmetic kernels: rationals, multivariate polynomials over the
//! deformation parameters, Laurent polynomials in the contraction parameter ε,
//! and the exponential-coordinate ring used for Poisson computations.

mod expcoord;
mod laurent;
mod multipoly;

pub use expcoord::{ExpCoordExpr, ExpVar};
pub use laurent::{DivergenceReport, LaurentPoly};
pub use multipoly::MultiPoly;

use crate::{Error, Result};
use num_bigint::BigInt;

/// Exact rational scalar. Canonical form (positive denominator, reduced,
/// zero as 0/1) is maintained by `num-rational`.
pub type Rational = num_rational::BigRational;

/// Rational from an integer pair.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn rint(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

/// Parse an exact rational from `p`, `-p` or `p/q` notation.
pub fn parse_rational(s: &str) -> Result<Rational> {
    s.trim()
        .parse::<Rational>()
        .map_err(|_| Error::BadRational(s.to_string()))
}

/// The global deformation-parameter symbols, in canonical order.
///
/// The fixed ordering makes polynomial normal forms deterministic, so the
/// canonical textual form of any polynomial is reproducible.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(usize)]
pub enum Sym {
    APlus,
    AMinus,
    BPlus,
    BMinus,
    A,
    B,
    AlphaPlus,
    BetaPlus,
    BetaMinus,
    Vartheta,
    Xi,
    Tau1,
    Tau2,
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
}

/// Number of global symbols.
pub const NSYMS: usize = 19;

/// All symbols in canonical order.
pub const SYMS: [Sym; NSYMS] = [
    Sym::APlus,
    Sym::AMinus,
    Sym::BPlus,
    Sym::BMinus,
    Sym::A,
    Sym::B,
    Sym::AlphaPlus,
    Sym::BetaPlus,
    Sym::BetaMinus,
    Sym::Vartheta,
    Sym::Xi,
    Sym::Tau1,
    Sym::Tau2,
    Sym::C1,
    Sym::C2,
    Sym::C3,
    Sym::C4,
    Sym::C5,
    Sym::C6,
];

impl Sym {
    pub fn index(self) -> usize {
        self as usize
    }

    /// Canonical ASCII name, also used in CLI parameter assignments.
    pub fn name(self) -> &'static str {
        match self {
            Sym::APlus => "a+",
            Sym::AMinus => "a-",
            Sym::BPlus => "b+",
            Sym::BMinus => "b-",
            Sym::A => "a",
            Sym::B => "b",
            Sym::AlphaPlus => "alpha+",
            Sym::BetaPlus => "beta+",
            Sym::BetaMinus => "beta-",
            Sym::Vartheta => "vartheta",
            Sym::Xi => "xi",
            Sym::Tau1 => "tau1",
            Sym::Tau2 => "tau2",
            Sym::C1 => "c1",
            Sym::C2 => "c2",
            Sym::C3 => "c3",
            Sym::C4 => "c4",
            Sym::C5 => "c5",
            Sym::C6 => "c6",
        }
    }

    pub fn from_name(s: &str) -> Result<Sym> {
        SYMS.iter()
            .copied()
            .find(|sym| sym.name() == s)
            .ok_or_else(|| Error::UnknownSymbol(s.to_string()))
    }

    pub fn from_index(i: usize) -> Sym {
        SYMS[i]
    }
}

impl std::fmt::Display for Sym {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}
