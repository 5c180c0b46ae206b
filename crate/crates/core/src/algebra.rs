//! Finite-dimensional commutative algebras with an invariant bilinear form.
//!
//! A [`GriessAlgebra`] is given by rational structure constants
//! `(x·y)_k = Σ S[i][j][k] x_i y_j` and a Gram matrix. Elements may carry
//! rational or Eisenstein coordinates; the structure constants are always
//! rational.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{rat, Matrix, Rational, Scalar};

/// Eigenvalues an adjoint action of a c = 1/2 conformal vector may have,
/// in the fixed order `2, 0, 1/2, 1/16`.
pub fn spectrum() -> [Rational; 4] {
    [rat(2, 1), rat(0, 1), rat(1, 2), rat(1, 16)]
}

/// Coordinate vector in the basis of some algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element<T = Rational> {
    coords: Vec<T>,
}

impl<T: Scalar> Element<T> {
    pub fn new(coords: Vec<T>) -> Self {
        Self { coords }
    }

    pub fn zero(dim: usize) -> Self {
        Self::new(vec![T::zero(); dim])
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.coords[i] = T::one();
        v
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<T> {
        self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, k: &T) -> Self {
        Self::new(self.coords.iter().map(|c| c.clone() * k.clone()).collect())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Element<U> {
        Element::new(self.coords.iter().map(f).collect())
    }

    pub fn conj(&self) -> Self {
        self.map(Scalar::conj)
    }
}

impl Element<Rational> {
    /// Embeds rational coordinates into a larger scalar field.
    pub fn embed<U: Scalar>(&self) -> Element<U> {
        self.map(U::from_rational)
    }
}

impl<T: Scalar> Add for &Element<T> {
    type Output = Element<T>;
    fn add(self, rhs: &Element<T>) -> Element<T> {
        assert_eq!(self.dim(), rhs.dim(), "elements of different algebras");
        Element::new(
            self.coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        )
    }
}

impl<T: Scalar> Sub for &Element<T> {
    type Output = Element<T>;
    fn sub(self, rhs: &Element<T>) -> Element<T> {
        self + &(-rhs)
    }
}

impl<T: Scalar> Neg for &Element<T> {
    type Output = Element<T>;
    fn neg(self) -> Element<T> {
        Element::new(self.coords.iter().map(|c| -c.clone()).collect())
    }
}

impl<T: Scalar> fmt::Display for Element<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// A linear map squaring to the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Involution {
    matrix: Matrix,
}

impl Involution {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotSquare {
                rows: matrix.rows(),
                cols: matrix.cols(),
            });
        }
        if &matrix * &matrix != Matrix::identity(matrix.rows()) {
            return Err(Error::NotInvolution);
        }
        Ok(Self { matrix })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply<T: Scalar>(&self, v: &Element<T>) -> Element<T> {
        let m = self.matrix.map(T::from_rational);
        Element::new(m.mul_vec(v.coords()))
    }
}

/// One violated algebra axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomFailure {
    NonCommutative {
        pair: [String; 2],
    },
    AsymmetricForm {
        pair: [String; 2],
    },
    /// `⟨x·y, z⟩ ≠ ⟨x, y·z⟩` for the basis triple `(x, y, z)`.
    NotInvariant {
        triple: [String; 3],
        lhs: Rational,
        rhs: Rational,
    },
    NotPositiveDefinite {
        minors: Vec<Rational>,
    },
}

impl fmt::Display for AxiomFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NonCommutative { pair: [x, y] } => write!(f, "{x}{y} != {y}{x}"),
            Self::AsymmetricForm { pair: [x, y] } => write!(f, "<{x},{y}> != <{y},{x}>"),
            Self::NotInvariant {
                triple: [x, y, z],
                lhs,
                rhs,
            } => write!(f, "<{x}{y},{z}> = {lhs} but <{x},{y}{z}> = {rhs}"),
            Self::NotPositiveDefinite { minors } => {
                let m: Vec<String> = minors.iter().map(ToString::to_string).collect();
                write!(
                    f,
                    "form not positive definite, leading minors [{}]",
                    m.join(", ")
                )
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub failures: Vec<AxiomFailure>,
}

impl AxiomReport {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn invariance_failures(&self) -> impl Iterator<Item = &[String; 3]> {
        self.failures.iter().filter_map(|f| match f {
            AxiomFailure::NotInvariant { triple, .. } => Some(triple),
            _ => None,
        })
    }
}

/// The eigenspaces of an adjoint action over [`spectrum`], with the change
/// of basis needed to project onto them.
#[derive(Clone, Debug)]
pub struct EigenSplit {
    values: Vec<Rational>,
    spaces: Vec<Vec<Element>>,
    to_eigenbasis: Matrix,
}

impl EigenSplit {
    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn spaces(&self) -> &[Vec<Element>] {
        &self.spaces
    }

    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(Vec::len).collect()
    }

    pub fn space(&self, eigenvalue: &Rational) -> Option<&[Element]> {
        let idx = self.values.iter().position(|v| v == eigenvalue)?;
        Some(&self.spaces[idx])
    }

    /// Eigencomponents of `v`, one per eigenvalue, in spectrum order.
    pub fn components<T: Scalar>(&self, v: &Element<T>) -> Vec<Element<T>> {
        let p = self.to_eigenbasis.map(T::from_rational);
        let coeffs = p.mul_vec(v.coords());
        let mut offset = 0;
        self.spaces
            .iter()
            .map(|space| {
                let mut part = Element::zero(v.dim());
                for (vec, c) in space.iter().zip(&coeffs[offset..]) {
                    part = &part + &vec.embed::<T>().scale(c);
                }
                offset += space.len();
                part
            })
            .collect()
    }
}

/// `v` split into eigencomponents keyed by eigenvalue.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition<T = Rational> {
    pub parts: Vec<(Rational, Element<T>)>,
}

impl<T: Scalar> Decomposition<T> {
    pub fn get(&self, eigenvalue: &Rational) -> Option<&Element<T>> {
        self.parts
            .iter()
            .find(|(mu, _)| mu == eigenvalue)
            .map(|(_, v)| v)
    }

    pub fn sum(&self) -> Element<T> {
        let dim = self.parts.first().map_or(0, |(_, v)| v.dim());
        self.parts
            .iter()
            .fold(Element::zero(dim), |acc, (_, v)| &acc + v)
    }
}

/// A product of eigenvectors escaping the subspace the grading allows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradingViolation {
    pub rule: String,
    pub left: String,
    pub right: String,
    pub product: Element,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradingReport {
    pub eigenspace_dims: Vec<usize>,
    pub violations: Vec<GradingViolation>,
}

impl GradingReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Commutative algebra with rational structure constants and a Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GriessAlgebra {
    basis: Vec<String>,
    structure: Vec<Rational>,
    gram: Matrix,
}

impl GriessAlgebra {
    /// `structure[i][j]` is the coordinate vector of `b_i · b_j`.
    pub fn new(
        basis: Vec<String>,
        structure: Vec<Vec<Vec<Rational>>>,
        gram: Matrix,
    ) -> Result<Self> {
        let n = basis.len();
        let check = |found: usize| {
            if found == n {
                Ok(())
            } else {
                Err(Error::DimensionMismatch { expected: n, found })
            }
        };
        check(structure.len())?;
        for row in &structure {
            check(row.len())?;
            for v in row {
                check(v.len())?;
            }
        }
        check(gram.rows())?;
        check(gram.cols())?;
        Ok(Self {
            basis,
            structure: structure.into_iter().flatten().flatten().collect(),
            gram,
        })
    }

    /// Builds from products listed for `i ≤ j` only; `b_j·b_i` is filled in by
    /// symmetry and unlisted products are zero.
    pub fn from_upper_products(
        basis: Vec<String>,
        products: impl IntoIterator<Item = (usize, usize, Vec<Rational>)>,
        gram: Matrix,
    ) -> Result<Self> {
        let n = basis.len();
        let mut s = vec![vec![vec![Rational::zero(); n]; n]; n];
        for (i, j, v) in products {
            if i >= n || j >= n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: i.max(j) + 1,
                });
            }
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: v.len(),
                });
            }
            s[j][i] = v.clone();
            s[i][j] = v;
        }
        Self::new(basis, s, gram)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.basis
            .iter()
            .position(|b| b == name)
            .ok_or_else(|| Error::UnknownBasis(name.to_owned()))
    }

    pub fn basis_element(&self, i: usize) -> Element {
        Element::unit(self.dim(), i)
    }

    pub fn named(&self, name: &str) -> Result<Element> {
        Ok(self.basis_element(self.index_of(name)?))
    }

    pub fn element(&self, coords: Vec<Rational>) -> Result<Element> {
        self.check_dim(coords.len())?;
        Ok(Element::new(coords))
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        let n = self.dim();
        &self.structure[(i * n + j) * n + k]
    }

    /// Copy with `S[i][j][k]` and `S[j][i][k]` replaced by `value`.
    pub fn with_structure_constant(&self, i: usize, j: usize, k: usize, value: Rational) -> Self {
        let n = self.dim();
        let mut out = self.clone();
        out.structure[(i * n + j) * n + k] = value.clone();
        out.structure[(j * n + i) * n + k] = value;
        out
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn with_gram(&self, gram: Matrix) -> Result<Self> {
        self.check_dim(gram.rows())?;
        self.check_dim(gram.cols())?;
        Ok(Self {
            gram,
            ..self.clone()
        })
    }

    fn check_dim(&self, found: usize) -> Result<()> {
        if found == self.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim(),
                found,
            })
        }
    }

    pub fn product<T: Scalar>(&self, x: &Element<T>, y: &Element<T>) -> Result<Element<T>> {
        self.check_dim(x.dim())?;
        self.check_dim(y.dim())?;
        let n = self.dim();
        let mut out = vec![T::zero(); n];
        for (i, xi) in x.coords().iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.coords().iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let w = xi.clone() * yj.clone();
                for (k, slot) in out.iter_mut().enumerate() {
                    let s = self.structure_constant(i, j, k);
                    if !s.is_zero() {
                        *slot = slot.clone() + w.clone() * T::from_rational(s);
                    }
                }
            }
        }
        Ok(Element::new(out))
    }

    /// `Σ x_i g_ij conj(y_j)`: bilinear over ℚ, conjugate-linear in the second
    /// slot over ℚ(ζ₃).
    pub fn inner<T: Scalar>(&self, x: &Element<T>, y: &Element<T>) -> Result<T> {
        self.check_dim(x.dim())?;
        self.check_dim(y.dim())?;
        let g = self.gram.map(T::from_rational);
        let gy = g.mul_vec(y.conj().coords());
        Ok(x.coords()
            .iter()
            .zip(gy)
            .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b))
    }

    /// Commutativity, symmetry of the form, invariance on every basis triple
    /// and positive definiteness.
    pub fn verify_axioms(&self) -> AxiomReport {
        let n = self.dim();
        let name = |i: usize| self.basis[i].clone();
        let mut failures = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if (0..n)
                    .any(|k| self.structure_constant(i, j, k) != self.structure_constant(j, i, k))
                {
                    failures.push(AxiomFailure::NonCommutative {
                        pair: [name(i), name(j)],
                    });
                }
                if self.gram.get(i, j) != self.gram.get(j, i) {
                    failures.push(AxiomFailure::AsymmetricForm {
                        pair: [name(i), name(j)],
                    });
                }
            }
        }
        let basis: Vec<Element> = (0..n).map(|i| self.basis_element(i)).collect();
        for (i, x) in basis.iter().enumerate() {
            for (j, y) in basis.iter().enumerate() {
                let xy = self.product(x, y).expect("basis elements");
                for (k, z) in basis.iter().enumerate() {
                    let yz = self.product(y, z).expect("basis elements");
                    let lhs: Rational = self.inner(&xy, z).expect("basis elements");
                    let rhs: Rational = self.inner(x, &yz).expect("basis elements");
                    if lhs != rhs {
                        failures.push(AxiomFailure::NotInvariant {
                            triple: [name(i), name(j), name(k)],
                            lhs,
                            rhs,
                        });
                    }
                }
            }
        }
        if self.gram.is_symmetric() {
            let minors = self.gram.leading_principal_minors().expect("square");
            if !self.gram.is_positive_definite().expect("symmetric") {
                failures.push(AxiomFailure::NotPositiveDefinite { minors });
            }
        }
        AxiomReport { failures }
    }

    /// Matrix of `y ↦ x·y`; column `j` holds `x·b_j`.
    pub fn adjoint_matrix(&self, x: &Element) -> Result<Matrix> {
        self.check_dim(x.dim())?;
        let cols: Vec<Vec<Rational>> = (0..self.dim())
            .map(|j| {
                self.product(x, &self.basis_element(j))
                    .map(Element::into_coords)
            })
            .collect::<Result<_>>()?;
        Matrix::from_columns(&cols)
    }

    /// Eigenspaces of `adjoint(x)` over [`spectrum`]; any other eigenvalue is
    /// an error.
    pub fn eigen_split(&self, x: &Element) -> Result<EigenSplit> {
        let values = spectrum().to_vec();
        let spaces = self.adjoint_matrix(x)?.split_eigenspaces(&values)?;
        let columns: Vec<Vec<Rational>> = spaces.iter().flatten().cloned().collect();
        let to_eigenbasis = Matrix::from_columns(&columns)?
            .inverse()
            .expect("eigenvectors of distinct eigenvalues span the space");
        Ok(EigenSplit {
            values,
            spaces: spaces
                .into_iter()
                .map(|s| s.into_iter().map(Element::new).collect())
                .collect(),
            to_eigenbasis,
        })
    }

    pub fn decompose_wrt<T: Scalar>(
        &self,
        v: &Element<T>,
        x: &Element,
    ) -> Result<Decomposition<T>> {
        self.check_dim(v.dim())?;
        let split = self.eigen_split(x)?;
        let parts = split.components(v);
        Ok(Decomposition {
            parts: split.values.iter().cloned().zip(parts).collect(),
        })
    }

    /// `v·v = 2v` and `v ≠ 0`.
    pub fn is_conformal(&self, v: &Element) -> bool {
        !v.is_zero() && self.product(v, v).is_ok_and(|vv| vv == v.scale(&rat(2, 1)))
    }

    /// `2⟨v,v⟩`, defined only for conformal `v`.
    pub fn central_charge(&self, v: &Element) -> Result<Rational> {
        if !self.is_conformal(v) {
            return Err(Error::NotConformal);
        }
        Ok(self.inner(v, v)? * rat(2, 1))
    }

    /// Whether `w` acts as `2·id` on the whole algebra.
    pub fn is_virasoro(&self, w: &Element) -> bool {
        self.adjoint_matrix(w)
            .is_ok_and(|m| m == Matrix::identity(self.dim()).scale(&rat(2, 1)))
    }

    /// Identity on the 2, 0 and 1/2 eigenspaces of `adjoint(x)`, negation on
    /// the 1/16 eigenspace.
    pub fn tau_involution(&self, x: &Element) -> Result<Involution> {
        let split = self.eigen_split(x)?;
        let mut cols = Vec::with_capacity(self.dim());
        let mut signs = Vec::with_capacity(self.dim());
        for (mu, space) in split.values.iter().zip(&split.spaces) {
            let sign = if *mu == rat(1, 16) {
                -Rational::one()
            } else {
                Rational::one()
            };
            for v in space {
                cols.push(v.coords().to_vec());
                signs.push(sign.clone());
            }
        }
        let p = Matrix::from_columns(&cols)?;
        let tau = &(&p * &Matrix::diagonal(signs)) * &split.to_eigenbasis;
        Involution::new(tau)
    }

    /// Checks the containments the c = 1/2 fusion rules impose on products of
    /// eigenvectors of `adjoint(x)`.
    pub fn verify_fusion_grading(&self, x: &Element) -> Result<GradingReport> {
        let split = self.eigen_split(x)?;
        let values = spectrum();
        let label = |idxs: &[usize]| {
            idxs.iter()
                .map(|&i| format!("E({})", values[i]))
                .collect::<Vec<_>>()
                .join("+")
        };
        let mut rules: Vec<(Vec<usize>, Vec<usize>, Vec<usize>)> =
            (0..4).map(|h| (vec![0, 1], vec![h], vec![h])).collect();
        rules.push((vec![2], vec![2], vec![0, 1]));
        rules.push((vec![0, 1, 2], vec![3], vec![3]));
        rules.push((vec![3], vec![3], vec![0, 1, 2]));

        let mut violations = Vec::new();
        for (left, right, target) in &rules {
            let rule = format!("{} * {} in {}", label(left), label(right), label(target));
            for &li in left {
                for (a, u) in split.spaces[li].iter().enumerate() {
                    for &ri in right {
                        for (b, w) in split.spaces[ri].iter().enumerate() {
                            let uw = self.product(u, w)?;
                            let parts = split.components(&uw);
                            let escapes = parts
                                .iter()
                                .enumerate()
                                .any(|(t, p)| !target.contains(&t) && !p.is_zero());
                            if escapes {
                                violations.push(GradingViolation {
                                    rule: rule.clone(),
                                    left: format!("E({})[{a}]", values[li]),
                                    right: format!("E({})[{b}]", values[ri]),
                                    product: uw,
                                });
                            }
                        }
                    }
                }
            }
        }
        Ok(GradingReport {
            eigenspace_dims: split.dims(),
            violations,
        })
    }

    /// Whether `m` preserves products and the form on every basis pair.
    pub fn is_automorphism(&self, m: &Matrix) -> bool {
        if m.rows() != self.dim() || m.cols() != self.dim() {
            return false;
        }
        let images: Vec<Element> = (0..self.dim()).map(|j| Element::new(m.column(j))).collect();
        for i in 0..self.dim() {
            for j in i..self.dim() {
                let xy = self
                    .product(&self.basis_element(i), &self.basis_element(j))
                    .expect("basis elements");
                let lhs = Element::new(m.mul_vec(xy.coords()));
                let rhs = self
                    .product(&images[i], &images[j])
                    .expect("same dimension");
                if lhs != rhs {
                    return false;
                }
                let form: Rational = self.inner(&images[i], &images[j]).expect("same dimension");
                if form != *self.gram.get(i, j) {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The algebra spanned by one conformal vector e of charge 1/2.
    fn ising_line() -> GriessAlgebra {
        GriessAlgebra::from_upper_products(
            vec!["e".into()],
            [(0, 0, vec![rat(2, 1)])],
            Matrix::diagonal(vec![rat(1, 4)]),
        )
        .unwrap()
    }

    /// Two orthogonal idempotent-like vectors with zero product.
    fn orthogonal_pair() -> GriessAlgebra {
        GriessAlgebra::from_upper_products(
            vec!["u".into(), "v".into()],
            [
                (0, 0, vec![rat(2, 1), rat(0, 1)]),
                (1, 1, vec![rat(0, 1), rat(2, 1)]),
            ],
            Matrix::diagonal(vec![rat(1, 4), rat(7, 20)]),
        )
        .unwrap()
    }

    #[test]
    fn single_conformal_vector() {
        let a = ising_line();
        let e = a.named("e").unwrap();
        assert!(a.verify_axioms().is_ok());
        assert_eq!(a.central_charge(&e).unwrap(), rat(1, 2));
        assert!(a.is_virasoro(&e));
        let tau = a.tau_involution(&e).unwrap();
        assert_eq!(tau.matrix(), &Matrix::identity(1));
    }

    #[test]
    fn charge_is_additive_on_orthogonal_pair() {
        let a = orthogonal_pair();
        let u = a.named("u").unwrap();
        let v = a.named("v").unwrap();
        let w = &u + &v;
        assert!(a.product(&u, &v).unwrap().is_zero());
        assert_eq!(
            a.central_charge(&w).unwrap(),
            a.central_charge(&u).unwrap() + a.central_charge(&v).unwrap()
        );
    }

    #[test]
    fn non_conformal_has_no_charge() {
        let a = orthogonal_pair();
        let half = a.named("u").unwrap().scale(&rat(1, 2));
        assert_eq!(a.central_charge(&half), Err(Error::NotConformal));
        assert!(!a.is_conformal(&Element::zero(2)));
    }

    #[test]
    fn foreign_elements_are_rejected() {
        let a = orthogonal_pair();
        let x = Element::<Rational>::zero(3);
        assert!(matches!(
            a.product(&x, &x),
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 3
            })
        ));
        assert!(a.inner(&x, &x).is_err());
    }

    #[test]
    fn broken_axioms_are_reported() {
        let a = orthogonal_pair();
        let asym = a.with_structure_constant(0, 1, 0, rat(1, 1));
        let mut s = asym.clone();
        // break commutativity in one direction only: (v·u)[u] sits at flat index 4
        s.structure[4] = rat(0, 1);
        let report = s.verify_axioms();
        assert!(report.failures.contains(&AxiomFailure::NonCommutative {
            pair: ["u".into(), "v".into()]
        }));

        let degenerate = a
            .with_gram(Matrix::diagonal(vec![rat(1, 4), rat(0, 1)]))
            .unwrap();
        assert!(degenerate
            .verify_axioms()
            .failures
            .iter()
            .any(|f| matches!(f, AxiomFailure::NotPositiveDefinite { .. })));
    }

    #[test]
    fn involution_must_square_to_identity() {
        let m = Matrix::diagonal(vec![rat(1, 1), rat(2, 1)]);
        assert_eq!(Involution::new(m), Err(Error::NotInvolution));
    }

    #[test]
    fn automorphism_check_rejects_scaling() {
        let a = orthogonal_pair();
        assert!(a.is_automorphism(&Matrix::identity(2)));
        assert!(!a.is_automorphism(&Matrix::diagonal(vec![rat(1, 1), rat(2, 1)])));
    }
}
