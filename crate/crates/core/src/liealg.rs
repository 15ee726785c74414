//! Structure-constant Lie algebras (gl(2) and the oscillator algebra h₄),
//! tensor/wedge elements with polynomial coefficients, adjoint actions and
//! the undeformed quadratic Casimir.

use crate::symbolics::{rint, MultiPoly, Rational};
use crate::{Error, Result};
use num_traits::Zero;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

/// Which algebra a spec describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum AlgebraName {
    #[serde(rename = "gl2")]
    Gl2,
    #[serde(rename = "h4")]
    H4,
}

/// gl(2) basis indices, fixed order J₃, J₊, J₋, I.
pub const J3: usize = 0;
pub const JP: usize = 1;
pub const JM: usize = 2;
pub const I: usize = 3;

/// h₄ basis indices, fixed order N, A₊, A₋, M.
pub const N: usize = 0;
pub const AP: usize = 1;
pub const AM: usize = 2;
pub const M: usize = 3;

/// A four-dimensional Lie algebra given by structure constants
/// [Xᵢ, Xⱼ] = Σₖ c[i][j][k] Xₖ. Antisymmetry and the Jacobi identity are
/// checked exactly at construction.
#[derive(Debug, Clone)]
pub struct LieAlgebraSpec {
    pub name: AlgebraName,
    pub basis: [&'static str; 4],
    constants: [[[Rational; 4]; 4]; 4],
}

impl LieAlgebraSpec {
    /// gl(2): [J₃,J₊] = 2J₊, [J₃,J₋] = −2J₋, [J₊,J₋] = J₃, I central.
    pub fn gl2() -> Self {
        let mut c = empty_constants();
        set_bracket(&mut c, J3, JP, &[(JP, 2)]);
        set_bracket(&mut c, J3, JM, &[(JM, -2)]);
        set_bracket(&mut c, JP, JM, &[(J3, 1)]);
        let spec = LieAlgebraSpec {
            name: AlgebraName::Gl2,
            basis: ["J3", "J+", "J-", "I"],
            constants: c,
        };
        spec.validate().expect("gl2 structure constants");
        spec
    }

    /// h₄: [N,A₊] = A₊, [N,A₋] = −A₋, [A₋,A₊] = M, M central.
    pub fn h4() -> Self {
        let mut c = empty_constants();
        set_bracket(&mut c, N, AP, &[(AP, 1)]);
        set_bracket(&mut c, N, AM, &[(AM, -1)]);
        set_bracket(&mut c, AM, AP, &[(M, 1)]);
        let spec = LieAlgebraSpec {
            name: AlgebraName::H4,
            basis: ["N", "A+", "A-", "M"],
            constants: c,
        };
        spec.validate().expect("h4 structure constants");
        spec
    }

    pub fn dim(&self) -> usize {
        4
    }

    pub fn basis_index(&self, label: &str) -> Result<usize> {
        self.basis
            .iter()
            .position(|b| *b == label)
            .ok_or_else(|| Error::UnknownBasisLabel(label.to_string()))
    }

    /// Structure constant c^k_{ij}.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.constants[i][j][k]
    }

    /// [Xᵢ, Xⱼ] as a degree-1 tensor.
    pub fn bracket(&self, i: usize, j: usize) -> TensorElement {
        let mut t = TensorElement::zero(1);
        for k in 0..4 {
            let c = &self.constants[i][j][k];
            if !c.is_zero() {
                t.add_term(&[k], MultiPoly::constant(c.clone()));
            }
        }
        t
    }

    /// Bracket by basis labels.
    pub fn bracket_by_label(&self, x: &str, y: &str) -> Result<TensorElement> {
        Ok(self.bracket(self.basis_index(x)?, self.basis_index(y)?))
    }

    /// Antisymmetry and Jacobi over all basis triples, exact.
    pub fn validate(&self) -> Result<()> {
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    if self.constants[i][j][k] != -self.constants[j][i][k].clone() {
                        return Err(Error::Precondition(format!(
                            "antisymmetry fails at ({i},{j},{k})"
                        )));
                    }
                }
            }
        }
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    // [[Xi,Xj],Xk] + [[Xj,Xk],Xi] + [[Xk,Xi],Xj] = 0
                    for target in 0..4 {
                        let mut acc = Rational::zero();
                        for m in 0..4 {
                            acc += self.constants[i][j][m].clone()
                                * self.constants[m][k][target].clone();
                            acc += self.constants[j][k][m].clone()
                                * self.constants[m][i][target].clone();
                            acc += self.constants[k][i][m].clone()
                                * self.constants[m][j][target].clone();
                        }
                        if !acc.is_zero() {
                            return Err(Error::Precondition(format!(
                                "Jacobi fails at ({i},{j},{k})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// JSON description: basis labels plus nonzero structure constants.
    pub fn describe(&self) -> serde_json::Value {
        let mut brackets = Vec::new();
        for i in 0..4 {
            for j in (i + 1)..4 {
                let t = self.bracket(i, j);
                if !t.is_zero() {
                    brackets.push(serde_json::json!({
                        "x": self.basis[i],
                        "y": self.basis[j],
                        "bracket": t.canonical_text(self),
                    }));
                }
            }
        }
        serde_json::json!({
            "name": self.name,
            "basis": self.basis,
            "brackets": brackets,
        })
    }
}

fn empty_constants() -> [[[Rational; 4]; 4]; 4] {
    std::array::from_fn(|_| std::array::from_fn(|_| std::array::from_fn(|_| Rational::zero())))
}

fn set_bracket(c: &mut [[[Rational; 4]; 4]; 4], i: usize, j: usize, terms: &[(usize, i64)]) {
    for &(k, v) in terms {
        c[i][j][k] = rint(v);
        c[j][i][k] = rint(-v);
    }
}

/// Degree-k element of g⊗…⊗g with `MultiPoly` coefficients, stored as a
/// sparse map from index tuples to coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorElement {
    degree: usize,
    terms: BTreeMap<Vec<usize>, MultiPoly>,
}

impl TensorElement {
    pub fn zero(degree: usize) -> Self {
        assert!(degree >= 1, "degree-0 tensors are not supported");
        TensorElement {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// Single basis generator as a degree-1 tensor.
    pub fn generator(i: usize) -> Self {
        let mut t = Self::zero(1);
        t.add_term(&[i], MultiPoly::one());
        t
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, idx: &[usize], c: MultiPoly) {
        assert_eq!(idx.len(), self.degree);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(idx.to_vec()) {
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

    pub fn coeff(&self, idx: &[usize]) -> MultiPoly {
        self.terms.get(idx).cloned().unwrap_or_else(MultiPoly::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &MultiPoly)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &TensorElement) -> TensorElement {
        assert_eq!(self.degree, other.degree);
        let mut out = self.clone();
        for (idx, c) in &other.terms {
            out.add_term(idx, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &TensorElement) -> TensorElement {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> TensorElement {
        TensorElement {
            degree: self.degree,
            terms: self.terms.iter().map(|(i, c)| (i.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, p: &MultiPoly) -> TensorElement {
        let mut out = TensorElement::zero(self.degree);
        for (idx, c) in &self.terms {
            out.add_term(idx, p * c);
        }
        out
    }

    pub fn scale_rat(&self, r: &Rational) -> TensorElement {
        self.scale(&MultiPoly::constant(r.clone()))
    }

    /// Tensor product, concatenating index tuples.
    pub fn tensor(&self, other: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero(self.degree + other.degree);
        for (i1, c1) in &self.terms {
            for (i2, c2) in &other.terms {
                let mut idx = i1.clone();
                idx.extend_from_slice(i2);
                out.add_term(&idx, c1 * c2);
            }
        }
        out
    }

    /// Wedge of two degree-1 elements: x⊗y − y⊗x.
    pub fn wedge(x: &TensorElement, y: &TensorElement) -> TensorElement {
        assert_eq!(x.degree, 1);
        assert_eq!(y.degree, 1);
        x.tensor(y).sub(&y.tensor(x))
    }

    /// Basis wedge eᵢ∧eⱼ with coefficient +1 on (i,j) and −1 on (j,i).
    pub fn wedge_basis(i: usize, j: usize) -> TensorElement {
        Self::wedge(&Self::generator(i), &Self::generator(j))
    }

    /// Full antisymmetrization of three basis generators (6 signed terms).
    pub fn wedge3_basis(i: usize, j: usize, k: usize) -> TensorElement {
        let mut out = TensorElement::zero(3);
        for (perm, sign) in [
            ([0usize, 1, 2], 1i64),
            ([1, 2, 0], 1),
            ([2, 0, 1], 1),
            ([1, 0, 2], -1),
            ([0, 2, 1], -1),
            ([2, 1, 0], -1),
        ] {
            let src = [i, j, k];
            let idx = [src[perm[0]], src[perm[1]], src[perm[2]]];
            out.add_term(&idx, MultiPoly::int(sign));
        }
        out
    }

    /// Evaluate every coefficient at a parameter point.
    pub fn eval(&self, point: &dyn Fn(crate::symbolics::Sym) -> Rational) -> Result<TensorElement> {
        let mut out = TensorElement::zero(self.degree);
        for (idx, c) in &self.terms {
            out.add_term(idx, MultiPoly::constant(c.eval(point)?));
        }
        Ok(out)
    }

    /// Canonical text with generator labels from `alg`.
    pub fn canonical_text(&self, alg: &LieAlgebraSpec) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(idx, c)| {
                let gens: Vec<&str> = idx.iter().map(|&i| alg.basis[i]).collect();
                format!("({c})*{}", gens.join("(x)"))
            })
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(idx, c)| format!("({c})*{idx:?}"))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Adjoint action ad(x)·t = Σᵢ 1⊗…⊗[x,·]⊗…⊗1 applied slot by slot.
pub fn ad_action(alg: &LieAlgebraSpec, x: usize, t: &TensorElement) -> TensorElement {
    let mut out = TensorElement::zero(t.degree());
    for (idx, c) in t.terms() {
        for slot in 0..t.degree() {
            for k in 0..4 {
                let sc = alg.constant(x, idx[slot], k);
                if sc.is_zero() {
                    continue;
                }
                let mut ni = idx.clone();
                ni[slot] = k;
                out.add_term(&ni, c.scale(sc));
            }
        }
    }
    out
}

/// Checks that η = τ₁(J₃⊗J₃ + 2J₋⊗J₊ + 2J₊⊗J₋) + τ₂ I⊗I is invariant under
/// the two-fold adjoint action of every gl(2) generator.
pub fn eta_invariance_check(tau1: &Rational, tau2: &Rational) -> bool {
    let alg = LieAlgebraSpec::gl2();
    let eta = eta_element(tau1, tau2);
    (0..4).all(|x| ad_action(&alg, x, &eta).is_zero())
}

/// The η element with given coefficients.
pub fn eta_element(tau1: &Rational, tau2: &Rational) -> TensorElement {
    let mut eta = TensorElement::zero(2);
    eta.add_term(&[J3, J3], MultiPoly::constant(tau1.clone()));
    eta.add_term(&[JM, JP], MultiPoly::constant(tau1.clone() * rint(2)));
    eta.add_term(&[JP, JM], MultiPoly::constant(tau1.clone() * rint(2)));
    eta.add_term(&[I, I], MultiPoly::constant(tau2.clone()));
    eta
}

/// The undeformed quadratic Casimir C = J₃² + 2J₊J₋ + 2J₋J₊ as an ordered
/// list of monomials in the generators (evaluation order is fixed; products
/// are taken in a representation).
#[derive(Debug, Clone)]
pub struct CasimirSpec {
    pub monomials: Vec<(Rational, Vec<usize>)>,
}

impl CasimirSpec {
    pub fn gl2_quadratic() -> Self {
        CasimirSpec {
            monomials: vec![
                (rint(1), vec![J3, J3]),
                (rint(2), vec![JP, JM]),
                (rint(2), vec![JM, JP]),
            ],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolics::rat;

    #[test]
    fn brackets_match_defining_relations() {
        let gl2 = LieAlgebraSpec::gl2();
        let jp_jm = gl2.bracket_by_label("J+", "J-").unwrap();
        assert_eq!(jp_jm, TensorElement::generator(J3));
        assert!(gl2.bracket_by_label("I", "J3").unwrap().is_zero());

        let h4 = LieAlgebraSpec::h4();
        let am_ap = h4.bracket_by_label("A-", "A+").unwrap();
        assert_eq!(am_ap, TensorElement::generator(M));
    }

    #[test]
    fn unknown_label_is_an_error() {
        let gl2 = LieAlgebraSpec::gl2();
        assert!(gl2.bracket_by_label("J0", "J+").is_err());
    }

    #[test]
    fn ad_action_weights_cancel() {
        // ad(J₃)(J₊⊗J₋) = 2J₊⊗J₋ − 2J₊⊗J₋ = 0
        let gl2 = LieAlgebraSpec::gl2();
        let t = TensorElement::generator(JP).tensor(&TensorElement::generator(JM));
        assert!(ad_action(&gl2, J3, &t).is_zero());
    }

    #[test]
    fn ad_action_of_central_is_zero() {
        let gl2 = LieAlgebraSpec::gl2();
        let t = TensorElement::wedge_basis(J3, JP)
            .add(&TensorElement::generator(JM).tensor(&TensorElement::generator(I)));
        assert!(ad_action(&gl2, I, &t).is_zero());
    }

    #[test]
    fn ad_jplus_on_j3_wedge_jminus() {
        // Leibniz expansion gives −2J₊∧J₋ (the J₃⊗J₃ cross terms cancel).
        let gl2 = LieAlgebraSpec::gl2();
        let t = TensorElement::wedge_basis(J3, JM);
        let got = ad_action(&gl2, JP, &t);
        let expected = TensorElement::wedge_basis(JP, JM).scale_rat(&rint(-2));
        assert_eq!(got, expected);
    }

    #[test]
    fn eta_invariant_and_perturbed_eta_not() {
        assert!(eta_invariance_check(&rint(1), &rint(0)));
        assert!(eta_invariance_check(&rint(0), &rint(0)));
        assert!(eta_invariance_check(&rat(-3, 7), &rat(5, 2)));

        // Replacing the J₋⊗J₊ coefficient 2 by 1 breaks invariance:
        // ad(J₊)(J₃⊗J₃ + J₋⊗J₊ + 2J₊⊗J₋) = −J₃⊗J₊ ≠ 0.
        let gl2 = LieAlgebraSpec::gl2();
        let mut eta = TensorElement::zero(2);
        eta.add_term(&[J3, J3], MultiPoly::one());
        eta.add_term(&[JM, JP], MultiPoly::int(1));
        eta.add_term(&[JP, JM], MultiPoly::int(2));
        let residual = ad_action(&gl2, JP, &eta);
        assert!(!residual.is_zero());
        assert_eq!(residual.coeff(&[J3, JP]), MultiPoly::int(-1));
    }

    #[test]
    fn wedge_antisymmetry_and_normalization() {
        let w = TensorElement::wedge_basis(J3, JP);
        assert_eq!(w.coeff(&[J3, JP]), MultiPoly::one());
        assert_eq!(w.coeff(&[JP, J3]), MultiPoly::int(-1));
        let rev = TensorElement::wedge_basis(JP, J3);
        assert!(w.add(&rev).is_zero());
    }
}
