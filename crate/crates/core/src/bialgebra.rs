//! gl(2) Lie bialgebras: the six-parameter cocommutator, cocycle and
//! co-Jacobi verification, coboundary generation from classical r-matrices,
//! Schouten brackets, family classification and the gl(2) automorphism.

use crate::liealg::{ad_action, LieAlgebraSpec, TensorElement, I, J3, JM, JP};
use crate::symbolics::{rat, rint, MultiPoly, Rational, Sym};
use crate::Result;
use num_traits::Zero;
use serde::Serialize;

/// Exact values of the six deformation parameters (a₊, a₋, b₊, b₋, a, b).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamPoint {
    pub a_plus: Rational,
    pub a_minus: Rational,
    pub b_plus: Rational,
    pub b_minus: Rational,
    pub a: Rational,
    pub b: Rational,
}

impl ParamPoint {
    pub fn new(
        a_plus: Rational,
        a_minus: Rational,
        b_plus: Rational,
        b_minus: Rational,
        a: Rational,
        b: Rational,
    ) -> Self {
        ParamPoint {
            a_plus,
            a_minus,
            b_plus,
            b_minus,
            a,
            b,
        }
    }

    pub fn from_ints(v: [i64; 6]) -> Self {
        Self::new(
            rint(v[0]),
            rint(v[1]),
            rint(v[2]),
            rint(v[3]),
            rint(v[4]),
            rint(v[5]),
        )
    }

    pub fn zero() -> Self {
        Self::from_ints([0; 6])
    }

    /// Value of a parameter symbol at this point; other symbols map to 0.
    pub fn get(&self, s: Sym) -> Rational {
        match s {
            Sym::APlus => self.a_plus.clone(),
            Sym::AMinus => self.a_minus.clone(),
            Sym::BPlus => self.b_plus.clone(),
            Sym::BMinus => self.b_minus.clone(),
            Sym::A => self.a.clone(),
            Sym::B => self.b.clone(),
            _ => Rational::zero(),
        }
    }

    /// Discriminant a² + a₊a₋ separating standard from non-standard.
    pub fn discriminant(&self) -> Rational {
        self.a.clone() * self.a.clone() + self.a_plus.clone() * self.a_minus.clone()
    }

    /// Image under the automorphism J₊ ↔ J₋, J₃ → −J₃:
    /// (a₊, a₋, b₊, b₋, a, b) → (a₋, a₊, −b₋, −b₊, −a, −b).
    pub fn apply_automorphism(&self) -> ParamPoint {
        ParamPoint {
            a_plus: self.a_minus.clone(),
            a_minus: self.a_plus.clone(),
            b_plus: -self.b_minus.clone(),
            b_minus: -self.b_plus.clone(),
            a: -self.a.clone(),
            b: -self.b.clone(),
        }
    }
}

/// The gl(2) automorphism J₊ → J₋, J₋ → J₊, J₃ → −J₃, I → I as an index
/// map with sign.
fn automorphism_generator(i: usize) -> (usize, bool) {
    match i {
        J3 => (J3, true),
        JP => (JM, false),
        JM => (JP, false),
        _ => (I, false),
    }
}

/// The induced relabeling of the deformation parameters (with sign).
fn automorphism_symbol(s: Sym) -> (Sym, bool) {
    match s {
        Sym::APlus => (Sym::AMinus, false),
        Sym::AMinus => (Sym::APlus, false),
        Sym::BPlus => (Sym::BMinus, true),
        Sym::BMinus => (Sym::BPlus, true),
        Sym::A => (Sym::A, true),
        Sym::B => (Sym::B, true),
        other => (other, false),
    }
}

/// Apply the automorphism to a tensor: generators are permuted/sign-flipped
/// slot by slot and parameter symbols are relabeled in the coefficients.
pub fn apply_automorphism_tensor(t: &TensorElement) -> TensorElement {
    let mut out = TensorElement::zero(t.degree());
    for (idx, c) in t.terms() {
        let mut ni = Vec::with_capacity(idx.len());
        let mut sign = false;
        for &i in idx {
            let (j, neg) = automorphism_generator(i);
            ni.push(j);
            sign ^= neg;
        }
        let mut nc = c.relabel(&automorphism_symbol);
        if sign {
            nc = -&nc;
        }
        out.add_term(&ni, nc);
    }
    out
}

/// A cocommutator δ: g → g∧g stored as the images of the basis generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cocommutator {
    images: [TensorElement; 4],
}

impl Cocommutator {
    pub fn zero() -> Self {
        Cocommutator {
            images: std::array::from_fn(|_| TensorElement::zero(2)),
        }
    }

    pub fn image(&self, i: usize) -> &TensorElement {
        &self.images[i]
    }

    pub fn set_image(&mut self, i: usize, t: TensorElement) {
        assert_eq!(t.degree(), 2);
        self.images[i] = t;
    }

    /// Every image must be antisymmetric.
    pub fn is_antisymmetric(&self) -> bool {
        self.images.iter().all(|img| {
            img.terms()
                .all(|(idx, c)| (&img.coeff(&[idx[1], idx[0]]) + c).is_zero())
        })
    }

    /// δ applied to a degree-1 tensor by linearity.
    pub fn apply(&self, x: &TensorElement) -> TensorElement {
        assert_eq!(x.degree(), 1);
        let mut out = TensorElement::zero(2);
        for (idx, c) in x.terms() {
            out = out.add(&self.images[idx[0]].scale(c));
        }
        out
    }

    /// Evaluate coefficients at a parameter point.
    pub fn at_point(&self, pt: &ParamPoint) -> Result<Cocommutator> {
        let f = |s: Sym| pt.get(s);
        Ok(Cocommutator {
            images: [
                self.images[0].eval(&f)?,
                self.images[1].eval(&f)?,
                self.images[2].eval(&f)?,
                self.images[3].eval(&f)?,
            ],
        })
    }

    /// δ' = (O⊗O) ∘ δ ∘ O⁻¹ for the gl(2) automorphism (with the induced
    /// parameter relabeling). The map is an involution.
    pub fn apply_automorphism(&self) -> Cocommutator {
        let mut images: [TensorElement; 4] = std::array::from_fn(|_| TensorElement::zero(2));
        for (target, img) in images.iter_mut().enumerate() {
            // O⁻¹(X_target) = ± X_src
            let (src, neg) = automorphism_generator(target);
            let mut t = apply_automorphism_tensor(&self.images[src]);
            if neg {
                t = t.neg();
            }
            *img = t;
        }
        Cocommutator { images }
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(|t| t.is_zero())
    }
}

/// The generic six-parameter (pre)cocommutator of gl(2).
pub fn generic_cocommutator() -> Cocommutator {
    let sym = MultiPoly::sym;
    let w = TensorElement::wedge_basis;
    let mut delta = Cocommutator::zero();
    // δ(J₃) = a₊ J₃∧J₊ + a₋ J₃∧J₋ + b₊ J₊∧I + b₋ J₋∧I
    delta.set_image(
        J3,
        w(J3, JP)
            .scale(&sym(Sym::APlus))
            .add(&w(J3, JM).scale(&sym(Sym::AMinus)))
            .add(&w(JP, I).scale(&sym(Sym::BPlus)))
            .add(&w(JM, I).scale(&sym(Sym::BMinus))),
    );
    // δ(J₊) = a J₃∧J₊ − (b₋/2) J₃∧I + a₋ J₊∧J₋ + b J₊∧I
    delta.set_image(
        JP,
        w(J3, JP)
            .scale(&sym(Sym::A))
            .add(&w(J3, I).scale(&sym(Sym::BMinus).scale(&rat(-1, 2))))
            .add(&w(JP, JM).scale(&sym(Sym::AMinus)))
            .add(&w(JP, I).scale(&sym(Sym::B))),
    );
    // δ(J₋) = a J₃∧J₋ − (b₊/2) J₃∧I − a₊ J₊∧J₋ − b J₋∧I
    delta.set_image(
        JM,
        w(J3, JM)
            .scale(&sym(Sym::A))
            .add(&w(J3, I).scale(&sym(Sym::BPlus).scale(&rat(-1, 2))))
            .add(&w(JP, JM).scale(&-&sym(Sym::APlus)))
            .add(&w(JM, I).scale(&-&sym(Sym::B))),
    );
    delta
}

/// A classical r-matrix: an antisymmetric degree-2 tensor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalRMatrix(pub TensorElement);

impl ClassicalRMatrix {
    pub fn zero() -> Self {
        ClassicalRMatrix(TensorElement::zero(2))
    }

    /// Build from wedge terms Σ c·(x∧y).
    pub fn from_wedges(terms: &[(MultiPoly, usize, usize)]) -> Self {
        let mut t = TensorElement::zero(2);
        for (c, x, y) in terms {
            t = t.add(&TensorElement::wedge_basis(*x, *y).scale(c));
        }
        ClassicalRMatrix(t)
    }

    /// The generic r-matrix written in the a/b parameters:
    /// r = ½(a₊ J₃∧J₊ − a₋ J₃∧J₋ − b J₃∧I + b₊ J₊∧I − b₋ J₋∧I − 2a J₊∧J₋).
    pub fn generic() -> Self {
        let half = |s: Sym| MultiPoly::sym(s).scale(&rat(1, 2));
        Self::from_wedges(&[
            (half(Sym::APlus), J3, JP),
            (-&half(Sym::AMinus), J3, JM),
            (-&half(Sym::B), J3, I),
            (half(Sym::BPlus), JP, I),
            (-&half(Sym::BMinus), JM, I),
            (-&MultiPoly::sym(Sym::A), JP, JM),
        ])
    }

    /// Arbitrary skewsymmetric element in c-coordinates:
    /// r = c₁ J₃∧J₊ + c₂ J₃∧J₋ + c₃ J₃∧I + c₄ J₊∧I + c₅ J₋∧I + c₆ J₊∧J₋.
    pub fn from_c_coordinates(c: &[MultiPoly; 6]) -> Self {
        Self::from_wedges(&[
            (c[0].clone(), J3, JP),
            (c[1].clone(), J3, JM),
            (c[2].clone(), J3, I),
            (c[3].clone(), JP, I),
            (c[4].clone(), JM, I),
            (c[5].clone(), JP, JM),
        ])
    }

    /// Extract the six wedge coefficients (c₁..c₆) of the canonical basis.
    pub fn c_coordinates(&self) -> [MultiPoly; 6] {
        [
            self.0.coeff(&[J3, JP]),
            self.0.coeff(&[J3, JM]),
            self.0.coeff(&[J3, I]),
            self.0.coeff(&[JP, I]),
            self.0.coeff(&[JM, I]),
            self.0.coeff(&[JP, JM]),
        ]
    }

    pub fn at_point(&self, pt: &ParamPoint) -> Result<ClassicalRMatrix> {
        Ok(ClassicalRMatrix(self.0.eval(&|s| pt.get(s))?))
    }

    pub fn apply_automorphism(&self) -> ClassicalRMatrix {
        ClassicalRMatrix(apply_automorphism_tensor(&self.0))
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.0
            .terms()
            .all(|(idx, c)| (&self.0.coeff(&[idx[1], idx[0]]) + c).is_zero())
    }
}

/// Parameter identification a₊ = 2c₁, a₋ = −2c₂, b₊ = 2c₄, b₋ = −2c₅,
/// a = −c₆, b = −2c₃: rewrite a polynomial in the a/b parameters as a
/// polynomial in c₁..c₆.
pub fn params_to_c(p: &MultiPoly) -> MultiPoly {
    let mut out = p.clone();
    for (from, to, scale) in [
        (Sym::APlus, Sym::C1, rint(2)),
        (Sym::AMinus, Sym::C2, rint(-2)),
        (Sym::BPlus, Sym::C4, rint(2)),
        (Sym::BMinus, Sym::C5, rint(-2)),
        (Sym::A, Sym::C6, rint(-1)),
        (Sym::B, Sym::C3, rint(-2)),
    ] {
        out = out
            .substitute(from, &MultiPoly::sym(to).scale(&scale))
            .expect("monomial substitution");
    }
    out
}

/// Inverse identification c₁ = a₊/2, c₂ = −a₋/2, c₃ = −b/2, c₄ = b₊/2,
/// c₅ = −b₋/2, c₆ = −a.
pub fn c_to_params(p: &MultiPoly) -> MultiPoly {
    let mut out = p.clone();
    for (from, to, scale) in [
        (Sym::C1, Sym::APlus, rat(1, 2)),
        (Sym::C2, Sym::AMinus, rat(-1, 2)),
        (Sym::C3, Sym::B, rat(-1, 2)),
        (Sym::C4, Sym::BPlus, rat(1, 2)),
        (Sym::C5, Sym::BMinus, rat(-1, 2)),
        (Sym::C6, Sym::A, rint(-1)),
    ] {
        out = out
            .substitute(from, &MultiPoly::sym(to).scale(&scale))
            .expect("monomial substitution");
    }
    out
}

/// The three co-Jacobi constraints of the generic cocommutator:
/// a₊b − b₊a, a₊b₋ + a₋b₊, a₋b + b₋a.
pub fn jacobi_constraints() -> [MultiPoly; 3] {
    let s = MultiPoly::sym;
    [
        &(&s(Sym::APlus) * &s(Sym::B)) - &(&s(Sym::BPlus) * &s(Sym::A)),
        &(&s(Sym::APlus) * &s(Sym::BMinus)) + &(&s(Sym::AMinus) * &s(Sym::BPlus)),
        &(&s(Sym::AMinus) * &s(Sym::B)) + &(&s(Sym::BMinus) * &s(Sym::A)),
    ]
}

/// The modified classical YBE conditions in c-coordinates:
/// c₄c₆ − 2c₁c₃, 2c₃c₂ + c₆c₅, c₂c₄ + c₁c₅.
pub fn mcybe_conditions() -> [MultiPoly; 3] {
    let s = MultiPoly::sym;
    [
        &(&s(Sym::C4) * &s(Sym::C6)) - &(&s(Sym::C1) * &s(Sym::C3)).scale(&rint(2)),
        &(&s(Sym::C3) * &s(Sym::C2)).scale(&rint(2)) + &(&s(Sym::C6) * &s(Sym::C5)),
        &(&s(Sym::C2) * &s(Sym::C4)) + &(&s(Sym::C1) * &s(Sym::C5)),
    ]
}

/// Per-pair residual report of the 1-cocycle condition.
#[derive(Debug, Clone)]
pub struct CocycleReport {
    pub ok: bool,
    /// Nonzero residuals δ([X,Y]) − ad_X δ(Y) + ad_Y δ(X) per basis pair.
    pub residuals: Vec<((usize, usize), TensorElement)>,
}

/// Checks δ([X,Y]) = [δ(X), 1⊗Y + Y⊗1] + [1⊗X + X⊗1, δ(Y)] exactly for all
/// basis pairs.
pub fn cocycle_check(delta: &Cocommutator, alg: &LieAlgebraSpec) -> CocycleReport {
    let mut residuals = Vec::new();
    for x in 0..4 {
        for y in (x + 1)..4 {
            let lhs = delta.apply(&alg.bracket(x, y));
            let rhs = ad_action(alg, x, delta.image(y)).sub(&ad_action(alg, y, delta.image(x)));
            let res = lhs.sub(&rhs);
            if !res.is_zero() {
                residuals.push(((x, y), res));
            }
        }
    }
    CocycleReport {
        ok: residuals.is_empty(),
        residuals,
    }
}

/// Impose the Jacobi identity on the dual bracket defined by δ and return
/// the resulting ideal generators (deduplicated up to rational scale).
pub fn cojacobi_constraints(delta: &Cocommutator) -> Vec<MultiPoly> {
    // f_i^{jk}: coefficient of X_j⊗X_k in δ(X_i).
    let f = |i: usize, j: usize, k: usize| delta.image(i).coeff(&[j, k]);
    let mut raw: Vec<MultiPoly> = Vec::new();
    for a in 0..4 {
        for b in (a + 1)..4 {
            for c in (b + 1)..4 {
                for target in 0..4 {
                    let mut acc = MultiPoly::zero();
                    for m in 0..4 {
                        acc = &acc + &(&f(m, a, b) * &f(target, m, c));
                        acc = &acc + &(&f(m, b, c) * &f(target, m, a));
                        acc = &acc + &(&f(m, c, a) * &f(target, m, b));
                    }
                    if !acc.is_zero() {
                        raw.push(acc);
                    }
                }
            }
        }
    }
    // Deduplicate up to rational scalar multiples, keeping monic normal forms.
    let mut out: Vec<MultiPoly> = Vec::new();
    for p in raw {
        let m = p.monic();
        if !out.contains(&m) {
            out.push(m);
        }
    }
    out
}

/// δ(X) = [1⊗X + X⊗1, r] for every basis generator.
pub fn coboundary_delta(r: &ClassicalRMatrix, alg: &LieAlgebraSpec) -> Cocommutator {
    let images = std::array::from_fn(|x| ad_action(alg, x, &r.0));
    Cocommutator { images }
}

/// Schouten bracket [[r,r]] = [r₁₂,r₁₃] + [r₁₂,r₂₃] + [r₁₃,r₂₃] computed
/// from structure constants, as a degree-3 tensor.
pub fn schouten(r: &ClassicalRMatrix, alg: &LieAlgebraSpec) -> TensorElement {
    let mut out = TensorElement::zero(3);
    for (idx1, c1) in r.0.terms() {
        for (idx2, c2) in r.0.terms() {
            let (i, j) = (idx1[0], idx1[1]);
            let (k, l) = (idx2[0], idx2[1]);
            let c = c1 * c2;
            // [r₁₂, r₁₃] → [X_i, X_k] ⊗ X_j ⊗ X_l
            let b = alg.bracket(i, k);
            for (bi, bc) in b.terms() {
                out.add_term(&[bi[0], j, l], &c * bc);
            }
            // [r₁₂, r₂₃] → X_i ⊗ [X_j, X_k] ⊗ X_l
            let b = alg.bracket(j, k);
            for (bi, bc) in b.terms() {
                out.add_term(&[i, bi[0], l], &c * bc);
            }
            // [r₁₃, r₂₃] → X_i ⊗ X_k ⊗ [X_j, X_l]
            let b = alg.bracket(j, l);
            for (bi, bc) in b.terms() {
                out.add_term(&[i, k, bi[0]], &c * bc);
            }
        }
    }
    out
}

/// The closed form of the gl(2) Schouten bracket in c-coordinates:
/// (c₆²−4c₁c₂) J₃∧J₊∧J₋ + (c₄c₆−2c₁c₃) J₃∧J₊∧I + (2c₃c₂+c₆c₅) J₃∧J₋∧I
/// + 2(c₂c₄+c₁c₅) J₊∧J₋∧I.
pub fn schouten_closed_form(c: &[MultiPoly; 6]) -> TensorElement {
    let w3 = TensorElement::wedge3_basis;
    let c1 = &c[0];
    let c2 = &c[1];
    let c3 = &c[2];
    let c4 = &c[3];
    let c5 = &c[4];
    let c6 = &c[5];
    let k1 = &(c6 * c6) - &(c1 * c2).scale(&rint(4));
    let k2 = &(c4 * c6) - &(c1 * c3).scale(&rint(2));
    let k3 = &(c3 * c2).scale(&rint(2)) + &(c6 * c5);
    let k4 = (&(c2 * c4) + &(c1 * c5)).scale(&rint(2));
    w3(J3, JP, JM)
        .scale(&k1)
        .add(&w3(J3, JP, I).scale(&k2))
        .add(&w3(J3, JM, I).scale(&k3))
        .add(&w3(JP, JM, I).scale(&k4))
}

/// Bialgebra family labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Family {
    #[serde(rename = "I+")]
    IPlus,
    #[serde(rename = "I-")]
    IMinus,
    #[serde(rename = "II")]
    II,
}

/// The four Table-1 columns (I₋ reduces to I₊ through the automorphism).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FamilyType {
    IPlusStandard,
    IPlusNonStandard,
    IIStandard,
    IINonStandard,
}

impl FamilyType {
    pub const ALL: [FamilyType; 4] = [
        FamilyType::IPlusStandard,
        FamilyType::IPlusNonStandard,
        FamilyType::IIStandard,
        FamilyType::IINonStandard,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyType::IPlusStandard => "I+ standard",
            FamilyType::IPlusNonStandard => "I+ non-standard",
            FamilyType::IIStandard => "II standard",
            FamilyType::IINonStandard => "II non-standard",
        }
    }
}

/// Classification outcome for a parameter point.
#[derive(Debug, Clone, Serialize)]
pub struct FamilyTag {
    pub family: Family,
    pub standard: bool,
    /// Value of a² + a₊a₋ at the point, as an exact rational string.
    pub discriminant: String,
    /// Family I₋ points are automorphism-equivalent to I₊ points.
    pub equivalent_to_i_plus: bool,
}

/// Violations carried by a failed classification.
#[derive(Debug, Clone, Serialize)]
pub struct ConstraintViolation {
    pub constraint: String,
    pub value: String,
}

/// classify is total on constraint-satisfying points; failures are values.
#[derive(Debug, Clone, Serialize)]
pub enum Classification {
    Bialgebra(FamilyTag),
    NotABialgebra { violations: Vec<ConstraintViolation> },
}

/// Verify the three constraints at the point and assign family and type.
pub fn classify(pt: &ParamPoint) -> Classification {
    let constraints = jacobi_constraints();
    let mut violations = Vec::new();
    for c in &constraints {
        let v = c.eval(&|s| pt.get(s)).expect("polynomial constraints");
        if !v.is_zero() {
            violations.push(ConstraintViolation {
                constraint: c.canonical_text(),
                value: v.to_string(),
            });
        }
    }
    if !violations.is_empty() {
        return Classification::NotABialgebra { violations };
    }
    let disc = pt.discriminant();
    let standard = !disc.is_zero();
    let family = if !pt.a_plus.is_zero() {
        Family::IPlus
    } else if !pt.a_minus.is_zero() {
        Family::IMinus
    } else {
        Family::II
    };
    Classification::Bialgebra(FamilyTag {
        family,
        standard,
        discriminant: disc.to_string(),
        equivalent_to_i_plus: family == Family::IMinus,
    })
}

/// Table-1 r-matrix of a family, with the dependent parameters substituted
/// (monomial denominators in a₊ appear for family I₊).
pub fn table1_r(ft: FamilyType) -> ClassicalRMatrix {
    let s = MultiPoly::sym;
    let sp = MultiPoly::sym_pow;
    match ft {
        FamilyType::IPlusStandard => {
            // ½(a₊ J₃∧J₊ − a₋ J₃∧J₋ − (b₊a/a₊) J₃∧I + b₊ J₊∧I
            //   + (a₋b₊/a₊) J₋∧I − 2a J₊∧J₋)
            let b_over = &(&s(Sym::BPlus) * &s(Sym::A)) * &sp(Sym::APlus, -1);
            let bm_over = &(&s(Sym::AMinus) * &s(Sym::BPlus)) * &sp(Sym::APlus, -1);
            ClassicalRMatrix::from_wedges(&[
                (s(Sym::APlus).scale(&rat(1, 2)), J3, JP),
                (s(Sym::AMinus).scale(&rat(-1, 2)), J3, JM),
                (b_over.scale(&rat(-1, 2)), J3, I),
                (s(Sym::BPlus).scale(&rat(1, 2)), JP, I),
                (bm_over.scale(&rat(1, 2)), JM, I),
                (-&s(Sym::A), JP, JM),
            ])
        }
        FamilyType::IPlusNonStandard => {
            // ½(a₊ J₃∧J₊ + (a²/a₊) J₃∧J₋ − (b₊a/a₊) J₃∧I + b₊ J₊∧I
            //   − (b₊a²/a₊²) J₋∧I − 2a J₊∧J₋)
            let a2_over = &s(Sym::A).pow(2) * &sp(Sym::APlus, -1);
            let b_over = &(&s(Sym::BPlus) * &s(Sym::A)) * &sp(Sym::APlus, -1);
            let bm = &(&s(Sym::BPlus) * &s(Sym::A).pow(2)) * &sp(Sym::APlus, -2);
            ClassicalRMatrix::from_wedges(&[
                (s(Sym::APlus).scale(&rat(1, 2)), J3, JP),
                (a2_over.scale(&rat(1, 2)), J3, JM),
                (b_over.scale(&rat(-1, 2)), J3, I),
                (s(Sym::BPlus).scale(&rat(1, 2)), JP, I),
                (bm.scale(&rat(-1, 2)), JM, I),
                (-&s(Sym::A), JP, JM),
            ])
        }
        FamilyType::IIStandard => {
            // −½ b J₃∧I − a J₊∧J₋
            ClassicalRMatrix::from_wedges(&[
                (s(Sym::B).scale(&rat(-1, 2)), J3, I),
                (-&s(Sym::A), JP, JM),
            ])
        }
        FamilyType::IINonStandard => {
            // −½(b J₃ − b₊ J₊ + b₋ J₋)∧I
            ClassicalRMatrix::from_wedges(&[
                (s(Sym::B).scale(&rat(-1, 2)), J3, I),
                (s(Sym::BPlus).scale(&rat(1, 2)), JP, I),
                (s(Sym::BMinus).scale(&rat(-1, 2)), JM, I),
            ])
        }
    }
}

/// Table-1 cocommutator of a family (closed form as displayed).
pub fn table1_delta(ft: FamilyType) -> Cocommutator {
    let s = MultiPoly::sym;
    let sp = MultiPoly::sym_pow;
    let w = TensorElement::wedge_basis;
    let mut delta = Cocommutator::zero();
    match ft {
        FamilyType::IPlusStandard => {
            let am_over = &s(Sym::AMinus) * &sp(Sym::APlus, -1);
            // δ(J₃) = −(a₊J₊ + a₋J₋)∧J₃ + b₊(J₊ − (a₋/a₊)J₋)∧I
            delta.set_image(
                J3,
                w(JP, J3)
                    .scale(&-&s(Sym::APlus))
                    .add(&w(JM, J3).scale(&-&s(Sym::AMinus)))
                    .add(&w(JP, I).scale(&s(Sym::BPlus)))
                    .add(&w(JM, I).scale(&-&(&s(Sym::BPlus) * &am_over))),
            );
            // δ(J₊) = (aJ₃ − a₋J₋)∧J₊ + (b₊/a₊)(aJ₊ + (a₋/2)J₃)∧I
            let bp_over = &s(Sym::BPlus) * &sp(Sym::APlus, -1);
            delta.set_image(
                JP,
                w(J3, JP)
                    .scale(&s(Sym::A))
                    .add(&w(JM, JP).scale(&-&s(Sym::AMinus)))
                    .add(&w(JP, I).scale(&(&bp_over * &s(Sym::A))))
                    .add(&w(J3, I).scale(&(&bp_over * &s(Sym::AMinus)).scale(&rat(1, 2)))),
            );
            // δ(J₋) = (aJ₃ − a₊J₊)∧J₋ − (b₊/2)(J₃ + (2a/a₊)J₋)∧I
            delta.set_image(
                JM,
                w(J3, JM)
                    .scale(&s(Sym::A))
                    .add(&w(JP, JM).scale(&-&s(Sym::APlus)))
                    .add(&w(J3, I).scale(&s(Sym::BPlus).scale(&rat(-1, 2))))
                    .add(
                        &w(JM, I)
                            .scale(&-&(&(&s(Sym::BPlus) * &s(Sym::A)) * &sp(Sym::APlus, -1))),
                    ),
            );
        }
        FamilyType::IPlusNonStandard => {
            let ratio = &s(Sym::A).pow(2) * &sp(Sym::APlus, -2);
            // δ(J₃) = −a₊(J₊ − (a²/a₊²)J₋)∧J₃ + b₊(J₊ + (a²/a₊²)J₋)∧I
            delta.set_image(
                J3,
                w(JP, J3)
                    .scale(&-&s(Sym::APlus))
                    .add(&w(JM, J3).scale(&(&s(Sym::APlus) * &ratio)))
                    .add(&w(JP, I).scale(&s(Sym::BPlus)))
                    .add(&w(JM, I).scale(&(&s(Sym::BPlus) * &ratio))),
            );
            // δ(J₊) = a(J₃ + (a/a₊)J₋)∧J₊ + (b₊a/a₊)(J₊ − (a/(2a₊))J₃)∧I
            let a_over = &s(Sym::A) * &sp(Sym::APlus, -1);
            let ba_over = &(&s(Sym::BPlus) * &s(Sym::A)) * &sp(Sym::APlus, -1);
            delta.set_image(
                JP,
                w(J3, JP)
                    .scale(&s(Sym::A))
                    .add(&w(JM, JP).scale(&(&s(Sym::A) * &a_over)))
                    .add(&w(JP, I).scale(&ba_over))
                    .add(&w(J3, I).scale(&-&(&ba_over * &a_over).scale(&rat(1, 2)))),
            );
            // δ(J₋) = (aJ₃ − a₊J₊)∧J₋ − (b₊/2)(J₃ + (2a/a₊)J₋)∧I
            delta.set_image(
                JM,
                w(J3, JM)
                    .scale(&s(Sym::A))
                    .add(&w(JP, JM).scale(&-&s(Sym::APlus)))
                    .add(&w(J3, I).scale(&s(Sym::BPlus).scale(&rat(-1, 2))))
                    .add(&w(JM, I).scale(&-&(&s(Sym::BPlus) * &a_over))),
            );
        }
        FamilyType::IIStandard => {
            // δ(J₃) = 0, δ(J₊) = −aJ₊∧J₃ + bJ₊∧I, δ(J₋) = −aJ₋∧J₃ − bJ₋∧I
            delta.set_image(
                JP,
                w(JP, J3)
                    .scale(&-&s(Sym::A))
                    .add(&w(JP, I).scale(&s(Sym::B))),
            );
            delta.set_image(
                JM,
                w(JM, J3)
                    .scale(&-&s(Sym::A))
                    .add(&w(JM, I).scale(&-&s(Sym::B))),
            );
        }
        FamilyType::IINonStandard => {
            // δ(J₃) = (b₊J₊ + b₋J₋)∧I
            delta.set_image(
                J3,
                w(JP, I)
                    .scale(&s(Sym::BPlus))
                    .add(&w(JM, I).scale(&s(Sym::BMinus))),
            );
            // δ(J₊) = −(½b₋J₃ − bJ₊)∧I
            delta.set_image(
                JP,
                w(J3, I)
                    .scale(&s(Sym::BMinus).scale(&rat(-1, 2)))
                    .add(&w(JP, I).scale(&s(Sym::B))),
            );
            // δ(J₋) = −(½b₊J₃ + bJ₋)∧I
            delta.set_image(
                JM,
                w(J3, I)
                    .scale(&s(Sym::BPlus).scale(&rat(-1, 2)))
                    .add(&w(JM, I).scale(&-&s(Sym::B))),
            );
        }
    }
    delta
}

/// Substitute a family's dependent-parameter relations into a polynomial:
/// for I₊ standard b₋ = −a₋b₊/a₊ and b = b₊a/a₊; for I₊ non-standard
/// additionally a₋ = −a²/a₊. Families II zero out the unused parameters.
pub fn family_restrict(ft: FamilyType, p: &MultiPoly) -> MultiPoly {
    let s = MultiPoly::sym;
    let sp = MultiPoly::sym_pow;
    match ft {
        FamilyType::IPlusStandard => {
            let bm = (&(&s(Sym::AMinus) * &s(Sym::BPlus)) * &sp(Sym::APlus, -1)).scale(&rint(-1));
            let b = &(&s(Sym::BPlus) * &s(Sym::A)) * &sp(Sym::APlus, -1);
            let q = p.substitute(Sym::BMinus, &bm).expect("b- substitution");
            q.substitute(Sym::B, &b).expect("b substitution")
        }
        FamilyType::IPlusNonStandard => {
            let am = (&s(Sym::A).pow(2) * &sp(Sym::APlus, -1)).scale(&rint(-1));
            let bm = &(&s(Sym::BPlus) * &s(Sym::A).pow(2)) * &sp(Sym::APlus, -2);
            let b = &(&s(Sym::BPlus) * &s(Sym::A)) * &sp(Sym::APlus, -1);
            let q = p.substitute(Sym::AMinus, &am).expect("a- substitution");
            let q = q.substitute(Sym::BMinus, &bm).expect("b- substitution");
            q.substitute(Sym::B, &b).expect("b substitution")
        }
        FamilyType::IIStandard => {
            let mut q = p.clone();
            for sym in [Sym::APlus, Sym::AMinus, Sym::BPlus, Sym::BMinus] {
                q = q
                    .substitute(sym, &MultiPoly::zero())
                    .expect("zero substitution");
            }
            q
        }
        FamilyType::IINonStandard => {
            let mut q = p.clone();
            for sym in [Sym::APlus, Sym::AMinus, Sym::A] {
                q = q
                    .substitute(sym, &MultiPoly::zero())
                    .expect("zero substitution");
            }
            q
        }
    }
}

/// Apply `family_restrict` to every coefficient of a tensor.
pub fn family_restrict_tensor(ft: FamilyType, t: &TensorElement) -> TensorElement {
    let mut out = TensorElement::zero(t.degree());
    for (idx, c) in t.terms() {
        out.add_term(idx, family_restrict(ft, c));
    }
    out
}

/// Deterministic exact rational points satisfying a family's constraint
/// pattern, for regression sweeps. `k` selects the point.
pub fn family_point(ft: FamilyType, k: u32) -> ParamPoint {
    let k = i64::from(k);
    match ft {
        FamilyType::IPlusStandard => {
            let a_plus = rat(k + 1, 2);
            let a_minus = rat(k - 3, 3);
            let b_plus = rat(2 * k + 1, 5);
            let mut a = rat(k + 2, 3);
            // keep the discriminant nonzero
            if (a.clone() * a.clone() + a_plus.clone() * a_minus.clone()).is_zero() {
                a += rint(1);
            }
            let b_minus = -a_minus.clone() * b_plus.clone() / a_plus.clone();
            let b = b_plus.clone() * a.clone() / a_plus.clone();
            ParamPoint::new(a_plus, a_minus, b_plus, b_minus, a, b)
        }
        FamilyType::IPlusNonStandard => {
            let a_plus = rat(k + 1, 3);
            let b_plus = rat(k - 7, 4);
            let a = rat(2 * k - 5, 7);
            let a_minus = -a.clone() * a.clone() / a_plus.clone();
            let b_minus =
                b_plus.clone() * a.clone() * a.clone() / (a_plus.clone() * a_plus.clone());
            let b = b_plus.clone() * a.clone() / a_plus.clone();
            ParamPoint::new(a_plus, a_minus, b_plus, b_minus, a, b)
        }
        FamilyType::IIStandard => ParamPoint::new(
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            rat(k + 1, 4),
            rat(k - 9, 5),
        ),
        FamilyType::IINonStandard => ParamPoint::new(
            Rational::zero(),
            Rational::zero(),
            rat(k - 4, 3),
            rat(3 * k + 2, 7),
            Rational::zero(),
            rat(k - 11, 2),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::LieAlgebraSpec;

    fn gl2() -> LieAlgebraSpec {
        LieAlgebraSpec::gl2()
    }

    #[test]
    fn generic_cocommutator_is_a_cocycle() {
        let report = cocycle_check(&generic_cocommutator(), &gl2());
        assert!(report.ok, "residuals: {:?}", report.residuals);
    }

    #[test]
    fn zero_cocommutator_is_a_cocycle() {
        assert!(cocycle_check(&Cocommutator::zero(), &gl2()).ok);
    }

    #[test]
    fn broken_cocommutator_fails_on_j3_jplus() {
        // δ(J₃) = J₊∧J₋, all other images zero.
        let mut delta = Cocommutator::zero();
        delta.set_image(J3, TensorElement::wedge_basis(JP, JM));
        let report = cocycle_check(&delta, &gl2());
        assert!(!report.ok);
        assert!(report
            .residuals
            .iter()
            .any(|((x, y), _)| (*x, *y) == (J3, JP)));
    }

    #[test]
    fn cojacobi_yields_the_three_constraints() {
        let got = cojacobi_constraints(&generic_cocommutator());
        let expected: Vec<MultiPoly> = jacobi_constraints().iter().map(|p| p.monic()).collect();
        assert_eq!(got.len(), 3, "got: {got:?}");
        for g in &got {
            assert!(expected.contains(g), "unexpected constraint {g}");
        }
        for e in &expected {
            assert!(got.contains(e), "missing constraint {e}");
        }
    }

    #[test]
    fn cojacobi_vanishes_in_the_sl2_sector() {
        // b₊ = b₋ = b = 0 kills every constraint identically.
        let mut delta = generic_cocommutator();
        let imgs: Vec<TensorElement> = (0..4)
            .map(|i| {
                let mut t = TensorElement::zero(2);
                for (idx, c) in delta.image(i).terms() {
                    let mut q = c.clone();
                    for s in [Sym::BPlus, Sym::BMinus, Sym::B] {
                        q = q.substitute(s, &MultiPoly::zero()).unwrap();
                    }
                    t.add_term(idx, q);
                }
                t
            })
            .collect();
        for (i, t) in imgs.into_iter().enumerate() {
            delta.set_image(i, t);
        }
        assert!(cojacobi_constraints(&delta).is_empty());
    }

    #[test]
    fn constraints_vanish_at_sample_point() {
        // (1, 1, 2, −2, 1, 2) satisfies all three constraints.
        let pt = ParamPoint::from_ints([1, 1, 2, -2, 1, 2]);
        for c in jacobi_constraints() {
            assert!(c.eval(&|s| pt.get(s)).unwrap().is_zero());
        }
    }

    #[test]
    fn coboundary_reproduces_generic_cocommutator() {
        // δ(X) = [1⊗X + X⊗1, r] with the generic r gives the generic δ.
        let delta = coboundary_delta(&ClassicalRMatrix::generic(), &gl2());
        assert_eq!(delta, generic_cocommutator());
    }

    #[test]
    fn coboundary_of_jplus_wedge_jminus() {
        let r = ClassicalRMatrix::from_wedges(&[(MultiPoly::one(), JP, JM)]);
        let delta = coboundary_delta(&r, &gl2());
        assert!(delta.image(J3).is_zero());
        assert_eq!(
            delta.image(JP),
            &TensorElement::wedge_basis(J3, JP).scale(&MultiPoly::int(-1))
        );
        assert_eq!(
            delta.image(JM),
            &TensorElement::wedge_basis(J3, JM).scale(&MultiPoly::int(-1))
        );
        assert!(delta.image(I).is_zero());
    }

    #[test]
    fn schouten_matches_closed_form_generically() {
        let s = MultiPoly::sym;
        let c = [
            s(Sym::C1),
            s(Sym::C2),
            s(Sym::C3),
            s(Sym::C4),
            s(Sym::C5),
            s(Sym::C6),
        ];
        let r = ClassicalRMatrix::from_c_coordinates(&c);
        assert_eq!(schouten(&r, &gl2()), schouten_closed_form(&c));
    }

    #[test]
    fn schouten_of_zero_is_zero() {
        assert!(schouten(&ClassicalRMatrix::zero(), &gl2()).is_zero());
    }

    #[test]
    fn schouten_family_ii_standard() {
        // r = −(b/2) J₃∧I − a J₊∧J₋ → a²·J₃∧J₊∧J₋.
        let r = table1_r(FamilyType::IIStandard);
        let got = schouten(&r, &gl2());
        let expected =
            TensorElement::wedge3_basis(J3, JP, JM).scale(&MultiPoly::sym(Sym::A).pow(2));
        assert_eq!(got, expected);
    }

    #[test]
    fn schouten_cross_term() {
        // r = c₁ J₃∧J₊ + c₅ J₋∧I → 2c₁c₅ J₊∧J₋∧I.
        let s = MultiPoly::sym;
        let r = ClassicalRMatrix::from_wedges(&[(s(Sym::C1), J3, JP), (s(Sym::C5), JM, I)]);
        let got = schouten(&r, &gl2());
        let expected = TensorElement::wedge3_basis(JP, JM, I)
            .scale(&(&s(Sym::C1) * &s(Sym::C5)).scale(&rint(2)));
        assert_eq!(got, expected);
    }

    #[test]
    fn mcybe_matches_jacobi_under_identification() {
        // Each mCYBE condition, rewritten through c → params, is an exact
        // rational multiple of a Jacobi constraint (and conversely).
        let jac = jacobi_constraints();
        for cond in mcybe_conditions() {
            let rewritten = c_to_params(&cond);
            assert!(
                jac.iter()
                    .any(|g| rewritten.exact_scalar_ratio(g).is_some()),
                "no match for {rewritten}"
            );
        }
        let conds = mcybe_conditions();
        for g in &jac {
            let rewritten = params_to_c(g);
            assert!(conds
                .iter()
                .any(|c| rewritten.exact_scalar_ratio(c).is_some()));
        }
    }

    #[test]
    fn identification_is_involutive() {
        let p = &(&MultiPoly::sym(Sym::APlus) * &MultiPoly::sym(Sym::B))
            + &MultiPoly::sym(Sym::BMinus).pow(2);
        assert_eq!(c_to_params(&params_to_c(&p)), p);
    }

    #[test]
    fn classify_examples() {
        match classify(&ParamPoint::from_ints([1, 1, 2, -2, 1, 2])) {
            Classification::Bialgebra(tag) => {
                assert_eq!(tag.family, Family::IPlus);
                assert!(tag.standard);
                assert_eq!(tag.discriminant, "2");
            }
            other => panic!("expected I+ standard, got {other:?}"),
        }
        match classify(&ParamPoint::from_ints([0, 0, 0, 0, 1, 0])) {
            Classification::Bialgebra(tag) => {
                assert_eq!(tag.family, Family::II);
                assert!(tag.standard);
            }
            other => panic!("expected II standard, got {other:?}"),
        }
        match classify(&ParamPoint::from_ints([1, 0, 0, 0, 1, 1])) {
            Classification::NotABialgebra { violations } => {
                assert!(violations.iter().any(|v| v.value == "1"));
            }
            other => panic!("expected NotABialgebra, got {other:?}"),
        }
        // Degenerate all-zero point: the trivial bialgebra, II non-standard.
        match classify(&ParamPoint::zero()) {
            Classification::Bialgebra(tag) => {
                assert_eq!(tag.family, Family::II);
                assert!(!tag.standard);
            }
            other => panic!("expected trivial II non-standard, got {other:?}"),
        }
    }

    #[test]
    fn automorphism_maps_i_minus_to_i_plus_form() {
        // (0, 1, 0, b₋, 0, 0) → (1, 0, −b₋, 0, 0, 0)
        let pt = ParamPoint::new(rint(0), rint(1), rint(0), rat(5, 3), rint(0), rint(0));
        let image = pt.apply_automorphism();
        assert_eq!(
            image,
            ParamPoint::new(rint(1), rint(0), rat(-5, 3), rint(0), rint(0), rint(0))
        );
        match classify(&pt) {
            Classification::Bialgebra(tag) => {
                assert_eq!(tag.family, Family::IMinus);
                assert!(tag.equivalent_to_i_plus);
            }
            other => panic!("{other:?}"),
        }
        match classify(&image) {
            Classification::Bialgebra(tag) => assert_eq!(tag.family, Family::IPlus),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn automorphism_is_involutive_on_points() {
        let pt = ParamPoint::new(rat(3, 2), rint(-1), rat(7, 5), rint(2), rat(-4, 3), rint(5));
        assert_eq!(pt.apply_automorphism().apply_automorphism(), pt);
    }

    #[test]
    fn automorphism_fixes_generic_structures() {
        // Both the generic r-matrix and the generic cocommutator are
        // invariant under the combined generator + parameter map.
        let r = ClassicalRMatrix::generic();
        assert_eq!(r.apply_automorphism(), r);
        let d = generic_cocommutator();
        assert_eq!(d.apply_automorphism(), d);
    }

    #[test]
    fn automorphism_on_family_ii_standard_r() {
        // a → −a, b → −b on the r-matrix; the Schouten output keeps a².
        let r = table1_r(FamilyType::IIStandard);
        let mapped = r.apply_automorphism();
        let schout = schouten(&mapped, &gl2());
        let expected =
            TensorElement::wedge3_basis(J3, JP, JM).scale(&MultiPoly::sym(Sym::A).pow(2));
        assert_eq!(schout, expected);
    }

    #[test]
    fn table1_delta_is_generic_delta_restricted() {
        for ft in FamilyType::ALL {
            let generic = generic_cocommutator();
            for i in 0..4 {
                let restricted = family_restrict_tensor(ft, generic.image(i));
                assert_eq!(
                    &restricted,
                    table1_delta(ft).image(i),
                    "family {ft:?} generator {i}"
                );
            }
        }
    }

    #[test]
    fn table1_r_is_generic_r_restricted() {
        for ft in FamilyType::ALL {
            let restricted = family_restrict_tensor(ft, &ClassicalRMatrix::generic().0);
            assert_eq!(restricted, table1_r(ft).0, "family {ft:?}");
        }
    }

    #[test]
    fn table1_coboundary_consistency_symbolic() {
        for ft in FamilyType::ALL {
            let delta = coboundary_delta(&table1_r(ft), &gl2());
            assert_eq!(&delta, &table1_delta(ft), "family {ft:?}");
            assert!(cocycle_check(&delta, &gl2()).ok);
            assert!(delta.image(I).is_zero());
        }
    }

    #[test]
    fn family_points_classify_back() {
        for ft in FamilyType::ALL {
            for k in 0..20 {
                let pt = family_point(ft, k);
                match classify(&pt) {
                    Classification::Bialgebra(tag) => match ft {
                        FamilyType::IPlusStandard => {
                            assert_eq!(tag.family, Family::IPlus);
                            assert!(tag.standard);
                        }
                        FamilyType::IPlusNonStandard => {
                            assert_eq!(tag.family, Family::IPlus);
                            assert!(!tag.standard);
                        }
                        FamilyType::IIStandard => {
                            assert_eq!(tag.family, Family::II);
                            assert!(tag.standard);
                        }
                        FamilyType::IINonStandard => {
                            assert_eq!(tag.family, Family::II);
                            assert!(!tag.standard, "k={k} pt={pt:?}");
                        }
                    },
                    other => panic!("family point must classify: {other:?}"),
                }
            }
        }
    }
}
