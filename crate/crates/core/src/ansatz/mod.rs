//! The λ-parametric product table of the algebra generated by two c = 1/2
//! conformal vectors `e`, `f` with `⟨e,f⟩ = λ/4`.
//!
//! Writing `f = λe + a + b + c` with `a, b, c` in the 0, 1/2 and 1/16
//! eigenspaces of `adjoint(e)`, every product and inner product among
//! `{e, a, b, c}` is a rational function of λ. The compatibility of those
//! functions with the invariant form cuts λ down to a finite set.

mod audit;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{Element, GriessAlgebra};
use crate::error::{Error, Result};
use crate::exact::{rat, rational_roots, Matrix, Poly, Rational, RationalFn};

pub use audit::{
    audit_algebra, audit_printed_constants, AuditEntry, AuditKind, AuditReport, AuditStatus,
};

/// The adapted basis `{e, a, b, c}`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FrameVector {
    E,
    A,
    B,
    C,
}

impl FrameVector {
    pub const ALL: [FrameVector; 4] = [Self::E, Self::A, Self::B, Self::C];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::E => "e",
            Self::A => "a",
            Self::B => "b",
            Self::C => "c",
        }
    }
}

impl fmt::Display for FrameVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Coefficients along `(e, a, b, c)`.
pub type FrameCoeffs = [RationalFn; 4];

fn konst(n: i64, d: i64) -> RationalFn {
    RationalFn::constant(rat(n, d))
}

/// `slope·λ + intercept`
fn affine(slope: (i64, i64), intercept: (i64, i64)) -> RationalFn {
    Poly::linear(rat(slope.0, slope.1), rat(intercept.0, intercept.1)).into()
}

fn lambda() -> RationalFn {
    RationalFn::var()
}

fn coeffs(e: RationalFn, a: RationalFn, b: RationalFn, c: RationalFn) -> FrameCoeffs {
    [e, a, b, c]
}

fn zero4() -> FrameCoeffs {
    coeffs(
        RationalFn::zero(),
        RationalFn::zero(),
        RationalFn::zero(),
        RationalFn::zero(),
    )
}

/// All products among `{e, a, b, c}` and the diagonal of the form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnsatzConstants {
    /// Keyed by unordered pairs stored as `(min, max)`.
    pub products: BTreeMap<(FrameVector, FrameVector), FrameCoeffs>,
    /// `⟨e,e⟩, ⟨a,a⟩, ⟨b,b⟩, ⟨c,c⟩`; the off-diagonal entries vanish.
    pub gram_diag: FrameCoeffs,
}

impl AnsatzConstants {
    pub fn product(&self, x: FrameVector, y: FrameVector) -> &FrameCoeffs {
        &self.products[&(x.min(y), x.max(y))]
    }

    /// Single coefficient: the `k`-component of `x·y`.
    pub fn coeff(&self, x: FrameVector, y: FrameVector, k: FrameVector) -> &RationalFn {
        &self.product(x, y)[k.index()]
    }
}

type ProductTable = BTreeMap<(FrameVector, FrameVector), FrameCoeffs>;

/// The product table in λ together with the form.
pub fn parametric_constants() -> AnsatzConstants {
    AnsatzConstants {
        products: parametric_products(),
        gram_diag: parametric_gram(),
    }
}

/// The eigen-relations `ee = 2e, ea = 0, eb = b/2, ec = c/16` hold exactly.
/// `bc` carries the factor `(64λ − 1)`; `(bb)_e = 2λ − 2λ² − (1 − λ)/32`
/// so that `cc` has e-component `(1 − λ)/32`.
fn parametric_products() -> ProductTable {
    use FrameVector::*;
    let l = lambda();
    let z = RationalFn::zero;
    let three_minus_16l = affine((-16, 1), (3, 1));
    let sixty_four_l_minus_1 = affine((64, 1), (-1, 1));

    let two_l_minus_two_l2 = &l.scale(&rat(2, 1)) - &(&l * &l).scale(&rat(2, 1));
    let bb_e = &two_l_minus_two_l2 - &affine((-1, 32), (1, 32));
    let cc_e = &two_l_minus_two_l2 - &bb_e;

    let mut products = BTreeMap::new();
    products.insert((E, E), coeffs(konst(2, 1), z(), z(), z()));
    products.insert((E, A), zero4());
    products.insert((E, B), coeffs(z(), z(), konst(1, 2), z()));
    products.insert((E, C), coeffs(z(), z(), z(), konst(1, 16)));
    products.insert(
        (A, A),
        coeffs(z(), three_minus_16l.scale(&rat(3, 8)), z(), z()),
    );
    products.insert(
        (A, B),
        coeffs(z(), z(), three_minus_16l.scale(&rat(9, 32)), z()),
    );
    products.insert(
        (A, C),
        coeffs(z(), z(), z(), three_minus_16l.scale(&rat(93, 256))),
    );
    products.insert(
        (B, B),
        coeffs(bb_e, sixty_four_l_minus_1.scale(&rat(3, 32)), z(), z()),
    );
    products.insert(
        (B, C),
        coeffs(z(), z(), z(), sixty_four_l_minus_1.scale(&rat(23, 256))),
    );
    products.insert(
        (C, C),
        coeffs(cc_e, konst(31, 32), affine((8, 1), (5, 16)), z()),
    );
    products
}

/// `⟨a,a⟩/⟨c,c⟩` from `⟨ac,c⟩ = ⟨a,cc⟩`.
fn ratio_aa_cc(products: &ProductTable) -> RationalFn {
    use FrameVector::*;
    &products[&(A, C)][C.index()] / &products[&(C, C)][A.index()]
}

/// `⟨b,b⟩/⟨c,c⟩` from `⟨bc,c⟩ = ⟨b,cc⟩`.
fn ratio_bb_cc(products: &ProductTable) -> RationalFn {
    use FrameVector::*;
    &products[&(B, C)][C.index()] / &products[&(C, C)][B.index()]
}

/// `⟨c,c⟩ = ⟨i,i⟩ = (1 − λ)/8`, where `i` is the 1/16-component of `e`
/// relative to `f`.
fn cc_norm() -> RationalFn {
    affine((-1, 8), (1, 8))
}

/// Diagonal of the invariant form in λ: `⟨e,e⟩ = 1/4`, `⟨c,c⟩ = (1 − λ)/8`,
/// with `⟨a,a⟩` and `⟨b,b⟩` tied to `⟨c,c⟩` by invariance against `cc`.
pub fn parametric_gram() -> FrameCoeffs {
    let products = parametric_products();
    let cc = cc_norm();
    coeffs(
        konst(1, 4),
        &ratio_aa_cc(&products) * &cc,
        &ratio_bb_cc(&products) * &cc,
        cc,
    )
}

/// `⟨ab,b⟩ − ⟨a,bb⟩` divided by `⟨c,c⟩`, after eliminating `⟨a,a⟩` and
/// `⟨b,b⟩` through their ratios to `⟨c,c⟩`. Vanishes exactly at the
/// candidate values of λ.
pub fn compatibility_constraint() -> RationalFn {
    use FrameVector::*;
    let p = parametric_products();
    let ab_b = &p[&(A, B)][B.index()];
    let bb_a = &p[&(B, B)][A.index()];
    &(ab_b * &ratio_bb_cc(&p)) - &(bb_a * &ratio_aa_cc(&p))
}

/// Roots of [`compatibility_constraint`]: `{3/16, 1/64, 13/256}`.
pub fn candidate_lambdas() -> BTreeSet<Rational> {
    rational_roots(compatibility_constraint().num()).expect("constraint is not identically zero")
}

/// `⟨f,f⟩ − 1/4 = λ²/4 + ⟨a,a⟩ + ⟨b,b⟩ + ⟨c,c⟩ − 1/4`.
pub fn norm_constraint() -> RationalFn {
    let g = parametric_gram();
    let l = lambda();
    let sum = [&g[1], &g[2], &g[3]]
        .into_iter()
        .fold((&l * &l).scale(&rat(1, 4)), |acc, t| &acc + t);
    &sum - &konst(1, 4)
}

/// Rational roots of the numerator of [`norm_constraint`]: `{1/64, 13/256, 1}`.
pub fn norm_roots() -> BTreeSet<Rational> {
    rational_roots(norm_constraint().num()).expect("constraint is not identically zero")
}

/// Candidates compatible with `⟨f,f⟩ = 1/4`, excluding λ = 1 (`f = e`).
pub fn admissible_lambdas() -> BTreeSet<Rational> {
    let norm = norm_roots();
    candidate_lambdas()
        .into_iter()
        .filter(|l| norm.contains(l) && !l.is_one())
        .collect()
}

/// Whether `λ²/4 + ⟨a,a⟩ + ⟨b,b⟩ + ⟨c,c⟩ = 1/4` at `λ`.
pub fn verify_f_norm(lambda: &Rational) -> Result<bool> {
    let g = parametric_gram();
    let mut sum = lambda * lambda * rat(1, 4);
    for t in &g[1..] {
        sum += t.eval(lambda)?;
    }
    Ok(sum == rat(1, 4))
}

/// A built algebra together with its distinguished vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct S3Algebra {
    lambda: Rational,
    algebra: GriessAlgebra,
}

impl S3Algebra {
    /// Recognizes an algebra in the `(e, a, b, c)` or `(e, a, c)` chart and
    /// recovers λ from the e-coefficient of `cc`, which is `(1 − λ)/32`.
    pub fn recognize(algebra: GriessAlgebra) -> Result<Self> {
        let names: Vec<&str> = algebra.basis_names().iter().map(String::as_str).collect();
        if names != ["e", "a", "b", "c"] && names != ["e", "a", "c"] {
            return Err(Error::UnknownBasis(names.join(",")));
        }
        let (e, c) = (algebra.index_of("e")?, algebra.index_of("c")?);
        let lambda = Rational::one() - algebra.structure_constant(c, c, e) * rat(32, 1);
        Ok(Self { lambda, algebra })
    }

    pub fn lambda(&self) -> &Rational {
        &self.lambda
    }

    pub fn algebra(&self) -> &GriessAlgebra {
        &self.algebra
    }

    pub fn into_algebra(self) -> GriessAlgebra {
        self.algebra
    }

    pub fn has_b(&self) -> bool {
        self.algebra.dim() == 4
    }

    /// The frame vector as an element; `b` is zero in the 3-dimensional chart.
    pub fn vector(&self, v: FrameVector) -> Element {
        self.algebra
            .named(v.name())
            .unwrap_or_else(|_| Element::zero(self.algebra.dim()))
    }

    /// Element with the given `(e, a, b, c)` coordinates, dropping `b` when
    /// the chart has none.
    pub fn from_frame(&self, frame: &[Rational; 4]) -> Element {
        FrameVector::ALL
            .iter()
            .zip(frame)
            .fold(Element::zero(self.algebra.dim()), |acc, (v, x)| {
                &acc + &self.vector(*v).scale(x)
            })
    }

    pub fn e(&self) -> Element {
        self.vector(FrameVector::E)
    }

    pub fn a(&self) -> Element {
        self.vector(FrameVector::A)
    }

    pub fn b(&self) -> Element {
        self.vector(FrameVector::B)
    }

    pub fn c(&self) -> Element {
        self.vector(FrameVector::C)
    }

    /// `f = λe + a + b + c`
    pub fn f(&self) -> Element {
        self.from_frame(&[
            self.lambda.clone(),
            Rational::one(),
            Rational::one(),
            Rational::one(),
        ])
    }

    /// `f^{τ_e} = λe + a + b − c`
    pub fn f_tau_e(&self) -> Element {
        self.from_frame(&[
            self.lambda.clone(),
            Rational::one(),
            Rational::one(),
            -Rational::one(),
        ])
    }

    /// `ω₁ = (2/κ)·a` where `aa = κa`.
    pub fn omega1(&self) -> Result<Element> {
        let a = self.a();
        let aa = self.algebra.product(&a, &a)?;
        let kappa = aa.coords()[self.algebra.index_of("a")?].clone();
        if kappa.is_zero() {
            return Err(Error::NotConformal);
        }
        Ok(a.scale(&(rat(2, 1) / kappa)))
    }

    /// `ω = e + ω₁`
    pub fn omega(&self) -> Result<Element> {
        Ok(&self.e() + &self.omega1()?)
    }
}

fn evaluate(coeffs: &FrameCoeffs, at: &Rational) -> Result<[Rational; 4]> {
    Ok([
        coeffs[0].eval(at)?,
        coeffs[1].eval(at)?,
        coeffs[2].eval(at)?,
        coeffs[3].eval(at)?,
    ])
}

/// Instantiates the table at an admissible λ. When `⟨b,b⟩ = 0` the b-row
/// and column are dropped.
pub fn build_algebra(lambda: &Rational) -> Result<S3Algebra> {
    if !admissible_lambdas().contains(lambda) {
        return Err(Error::InconsistentStructure(lambda.clone()));
    }
    let constants = parametric_constants();
    let gram = evaluate(&constants.gram_diag, lambda)?;
    let keep: Vec<FrameVector> = FrameVector::ALL
        .into_iter()
        .filter(|v| !gram[v.index()].is_zero())
        .collect();
    let pos = |v: FrameVector| keep.iter().position(|k| *k == v);
    let basis = keep.iter().map(|v| v.name().to_owned()).collect();

    let mut products = Vec::new();
    for (i, &x) in keep.iter().enumerate() {
        for &y in &keep[i..] {
            let full = evaluate(constants.product(x, y), lambda)?;
            let mut v = vec![Rational::zero(); keep.len()];
            for k in FrameVector::ALL {
                if let Some(p) = pos(k) {
                    v[p] = full[k.index()].clone();
                }
            }
            products.push((i, pos(y).expect("kept"), v));
        }
    }
    let gram = Matrix::diagonal(keep.iter().map(|v| gram[v.index()].clone()).collect());
    let algebra = GriessAlgebra::from_upper_products(basis, products, gram)?;
    Ok(S3Algebra {
        lambda: lambda.clone(),
        algebra,
    })
}

/// The f-centred components of `e = λf + g + h + i` as functions of λ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedFrame {
    /// In the 0-eigenspace of `adjoint(f)`.
    pub g: FrameCoeffs,
    /// In the 1/2-eigenspace.
    pub h: FrameCoeffs,
    /// In the 1/16-eigenspace.
    pub i: FrameCoeffs,
}

/// Closed forms for `g`, `h`, `i`. The b-coefficient of `g` is `3λ − 9/16`.
pub fn parametric_frame() -> DerivedFrame {
    let one_minus_l = affine((-1, 1), (1, 1));
    DerivedFrame {
        g: coeffs(
            &one_minus_l * &affine((-3, 1), (9, 16)),
            affine((3, 1), (7, 16)),
            affine((3, 1), (-9, 16)),
            affine((3, 1), (-9, 16)),
        ),
        h: coeffs(
            &affine((4, 1), (-1, 16)) * &one_minus_l,
            affine((-4, 1), (1, 16)),
            affine((-4, 1), (17, 16)),
            affine((-4, 1), (1, 16)),
        ),
        i: coeffs(
            one_minus_l.scale(&rat(1, 2)),
            konst(-1, 2),
            konst(-1, 2),
            konst(1, 2),
        ),
    }
}

/// `g`, `h`, `i` evaluated in a built algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrameAtLambda {
    pub algebra: S3Algebra,
    pub g: Element,
    pub h: Element,
    pub i: Element,
}

/// Evaluates [`parametric_frame`] at λ and checks each component against the
/// eigen-projection of `e` along `adjoint(f)`.
pub fn derived_frame(lambda: &Rational) -> Result<FrameAtLambda> {
    frame_in(build_algebra(lambda)?)
}

/// As [`derived_frame`], inside an already recognized algebra.
pub fn frame_in(built: S3Algebra) -> Result<FrameAtLambda> {
    let lambda = built.lambda().clone();
    let alg = built.algebra();
    let frame = parametric_frame();
    let parts = alg.decompose_wrt(&built.e(), &built.f())?;

    let checks = [
        ("lambda*f", built.f().scale(&lambda), rat(2, 1)),
        (
            "g",
            built.from_frame(&evaluate(&frame.g, &lambda)?),
            rat(0, 1),
        ),
        (
            "h",
            built.from_frame(&evaluate(&frame.h, &lambda)?),
            rat(1, 2),
        ),
        (
            "i",
            built.from_frame(&evaluate(&frame.i, &lambda)?),
            rat(1, 16),
        ),
    ];
    let mut out = Vec::new();
    for (component, formula, mu) in checks {
        let projection = parts.get(&mu).expect("spectrum value");
        if &formula != projection {
            return Err(Error::FrameMismatch {
                component,
                formula: formula.to_string(),
                projection: projection.to_string(),
            });
        }
        out.push(formula);
    }
    let i = out.pop().expect("four components");
    let h = out.pop().expect("four components");
    let g = out.pop().expect("four components");
    Ok(FrameAtLambda {
        algebra: built,
        g,
        h,
        i,
    })
}

#[cfg(test)]
mod tests;
