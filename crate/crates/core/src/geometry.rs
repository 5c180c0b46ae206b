//! The S₃ = ⟨τ_e, τ_f⟩ action on a built algebra and the computations in its
//! θ-fixed part, where θ = τ_e τ_f.

use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{Element, Involution};
use crate::ansatz::S3Algebra;
use crate::error::{Error, Result};
use crate::exact::{rat, Eisenstein, Matrix, Rational, Scalar};

fn check<T: PartialEq + fmt::Display>(identity: &str, lhs: T, rhs: T) -> Result<()> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(Error::IdentityFailed {
            identity: identity.to_owned(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        })
    }
}

fn require_lambda(s: &S3Algebra, expected: Rational) -> Result<()> {
    if *s.lambda() == expected {
        Ok(())
    } else {
        Err(Error::WrongLambda {
            expected: Box::new(expected),
            found: Box::new(s.lambda().clone()),
        })
    }
}

fn apply<T: Scalar>(m: &Matrix, v: &Element<T>) -> Element<T> {
    Element::new(m.map(T::from_rational).mul_vec(v.coords()))
}

/// The two τ-involutions and θ = τ_e τ_f (apply τ_f first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct S3Action {
    tau_e: Involution,
    tau_f: Involution,
    theta: Matrix,
}

impl S3Action {
    pub fn tau_e(&self) -> &Involution {
        &self.tau_e
    }

    pub fn tau_f(&self) -> &Involution {
        &self.tau_f
    }

    pub fn theta(&self) -> &Matrix {
        &self.theta
    }

    /// τ_e τ_f τ_e, the transposition exchanging `e` and `f`.
    pub fn swap(&self) -> Matrix {
        &self.theta * self.tau_e.matrix()
    }

    pub fn apply_theta<T: Scalar>(&self, v: &Element<T>) -> Element<T> {
        apply(&self.theta, v)
    }
}

/// Builds τ_e, τ_f and θ and checks the S₃ presentation together with
/// `θ(e) = f`, `θ(f) = f^{τ_e}`.
pub fn build_action(s: &S3Algebra) -> Result<S3Action> {
    let alg = s.algebra();
    let tau_e = alg.tau_involution(&s.e())?;
    let tau_f = alg.tau_involution(&s.f())?;
    let theta = tau_e.matrix() * tau_f.matrix();
    let id = Matrix::identity(alg.dim());
    if theta == id {
        return Err(Error::NotS3("tau_e tau_f is the identity".to_owned()));
    }
    if theta.pow(3) != id {
        return Err(Error::NotS3(
            "(tau_e tau_f)^3 is not the identity".to_owned(),
        ));
    }
    for (name, m) in [("tau_e", tau_e.matrix()), ("tau_f", tau_f.matrix())] {
        if !alg.is_automorphism(m) {
            return Err(Error::NotS3(format!("{name} is not an automorphism")));
        }
    }
    let action = S3Action {
        tau_e,
        tau_f,
        theta,
    };
    if action.apply_theta(&s.e()) != s.f() {
        return Err(Error::NotS3("theta(e) != f".to_owned()));
    }
    if action.apply_theta(&s.f()) != s.f_tau_e() {
        return Err(Error::NotS3("theta(f) != f^tau_e".to_owned()));
    }
    let braid_left = action.swap();
    let braid_right = &(action.tau_f.matrix() * action.tau_e.matrix()) * action.tau_f.matrix();
    if braid_left != braid_right {
        return Err(Error::NotS3(
            "tau_e tau_f tau_e != tau_f tau_e tau_f".to_owned(),
        ));
    }
    Ok(action)
}

/// `[e, θe, θ²e]`.
pub fn orbit_of_e(s: &S3Algebra, action: &S3Action) -> [Element; 3] {
    let e = s.e();
    let te = action.apply_theta(&e);
    let tte = action.apply_theta(&te);
    [e, te, tte]
}

/// α, β and ω with the quadratic identities they satisfy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaBeta {
    pub alpha: Element,
    pub beta: Element,
    pub omega: Element,
    pub beta_norm: Rational,
    pub beta_omega: Rational,
    pub omega_norm: Rational,
}

/// `α = e + f + f^{τ_e}` and `β = (16/3)α` in the λ = 13/256 algebra.
pub fn alpha_beta(s: &S3Algebra) -> Result<AlphaBeta> {
    require_lambda(s, rat(13, 256))?;
    let alg = s.algebra();
    let alpha = &(&s.e() + &s.f()) + &s.f_tau_e();
    let beta = alpha.scale(&rat(16, 3));
    let omega = s.omega()?;

    check(
        "alpha*alpha = (57/16)alpha - (315/256)omega",
        alg.product(&alpha, &alpha)?,
        &alpha.scale(&rat(57, 16)) - &omega.scale(&rat(315, 256)),
    )?;
    check(
        "beta*beta = 19beta - 35omega",
        alg.product(&beta, &beta)?,
        &beta.scale(&rat(19, 1)) - &omega.scale(&rat(35, 1)),
    )?;
    let beta_norm: Rational = alg.inner(&beta, &beta)?;
    let beta_omega: Rational = alg.inner(&beta, &omega)?;
    let omega_norm: Rational = alg.inner(&omega, &omega)?;
    check("<beta,beta> = 47/2", beta_norm.clone(), rat(47, 2))?;
    check("<beta,omega> = 4", beta_omega.clone(), rat(4, 1))?;
    check("<omega,omega> = 29/35", omega_norm.clone(), rat(29, 35))?;
    Ok(AlphaBeta {
        alpha,
        beta,
        omega,
        beta_norm,
        beta_omega,
        omega_norm,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConformalSplit {
    pub omega2: Element,
    pub omega3: Element,
    pub charge2: Rational,
    pub charge3: Rational,
}

/// `ω₂ = 2(7ω − β)/9`, `ω₃ = ω − ω₂`.
pub fn conformal_split(s: &S3Algebra) -> Result<ConformalSplit> {
    let ab = alpha_beta(s)?;
    let alg = s.algebra();
    let omega2 = (&ab.omega.scale(&rat(7, 1)) - &ab.beta).scale(&rat(2, 9));
    check(
        "omega2 = 2(21omega - 16alpha)/27",
        omega2.clone(),
        (&ab.omega.scale(&rat(21, 1)) - &ab.alpha.scale(&rat(16, 1))).scale(&rat(2, 27)),
    )?;
    let omega3 = &ab.omega - &omega2;
    let charge2 = alg.central_charge(&omega2)?;
    let charge3 = alg.central_charge(&omega3)?;
    check("charge(omega2) = 4/5", charge2.clone(), rat(4, 5))?;
    check("charge(omega3) = 6/7", charge3.clone(), rat(6, 7))?;
    check(
        "omega2*omega3 = 0",
        alg.product(&omega2, &omega3)?,
        Element::zero(alg.dim()),
    )?;
    check(
        "<omega2,omega3> = 0",
        alg.inner(&omega2, &omega3)?,
        Rational::zero(),
    )?;
    Ok(ConformalSplit {
        omega2,
        omega3,
        charge2,
        charge3,
    })
}

/// The eigenvector data of θ over ℚ(ζ₃).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaRelations {
    pub gamma: Element<Eisenstein>,
    pub gamma_bar: Element<Eisenstein>,
    /// `⟨γ,γ⟩`, real and positive.
    pub gamma_norm: Rational,
    /// Eigenvalues of γ under multiplication by α, β, ω₂ and ω.
    pub alpha_value: Rational,
    pub beta_value: Rational,
    pub omega2_value: Rational,
    pub omega_value: Rational,
}

/// `t` with `x = t·v`, if any.
fn ratio<T: Scalar>(x: &Element<T>, v: &Element<T>) -> Option<T> {
    let i = v.coords().iter().position(|c| !c.is_zero())?;
    let t = x.coords()[i].clone() * v.coords()[i].inverse()?;
    (*x == v.scale(&t)).then_some(t)
}

fn rational_eigenvalue(
    name: &str,
    x: &Element<Eisenstein>,
    v: &Element<Eisenstein>,
    expected: Rational,
) -> Result<Rational> {
    let identity = format!("{name}*gamma = ({expected})gamma");
    match ratio(x, v).as_ref().and_then(Eisenstein::as_rational) {
        Some(t) => {
            check(&identity, t.clone(), expected)?;
            Ok(t.clone())
        }
        None => Err(Error::IdentityFailed {
            identity,
            lhs: x.to_string(),
            rhs: v.scale(&Eisenstein::from_rational(expected)).to_string(),
        }),
    }
}

/// `γ = e + ζ f + ζ² f^{τ_e}` with ζ the Eisenstein generator.
pub fn gamma_relations(s: &S3Algebra) -> Result<GammaRelations> {
    let ab = alpha_beta(s)?;
    let split = conformal_split(s)?;
    let action = build_action(s)?;
    let alg = s.algebra();
    let z = Eisenstein::zeta();
    let z2 = z.pow(2);
    let gamma = &(&s.e().embed::<Eisenstein>() + &s.f().embed().scale(&z))
        + &s.f_tau_e().embed().scale(&z2);
    if gamma.is_zero() {
        return Err(Error::IdentityFailed {
            identity: "gamma != 0".to_owned(),
            lhs: gamma.to_string(),
            rhs: "0".to_owned(),
        });
    }
    let gamma_bar = gamma.conj();
    let zinv = z.inv()?;
    check(
        "theta(gamma) = z3^-1 gamma",
        action.apply_theta(&gamma),
        gamma.scale(&zinv),
    )?;
    check(
        "theta(gamma_bar) = z3 gamma_bar",
        action.apply_theta(&gamma_bar),
        gamma_bar.scale(&z),
    )?;

    // γ and γ̄ span the ζ⁻¹ and ζ eigenspaces of θ.
    let theta = action.theta().map(<Eisenstein as Scalar>::from_rational);
    let id = Matrix::<Eisenstein>::identity(alg.dim());
    let fixed = theta_fixed_subspace(s)?.len();
    let mut total = fixed;
    for mu in [zinv, z] {
        let space = (&theta - &id.scale(&mu)).kernel();
        check(&format!("dim ker(theta - ({mu})) = 1"), space.len(), 1)?;
        total += space.len();
    }
    check("theta eigenspaces fill the algebra", total, alg.dim())?;

    let gamma_norm = alg.inner(&gamma, &gamma)?;
    let gamma_norm = match gamma_norm.as_rational() {
        Some(r) if r > &Rational::zero() => r.clone(),
        _ => {
            return Err(Error::IdentityFailed {
                identity: "<gamma,gamma> > 0".to_owned(),
                lhs: gamma_norm.to_string(),
                rhs: "0".to_owned(),
            })
        }
    };

    let times = |x: &Element| alg.product(&x.embed::<Eisenstein>(), &gamma);
    let alpha_value = rational_eigenvalue("alpha", &times(&ab.alpha)?, &gamma, rat(33, 16))?;
    let beta_value = rational_eigenvalue("beta", &times(&ab.beta)?, &gamma, rat(11, 1))?;
    let omega2_value = rational_eigenvalue("omega2", &times(&split.omega2)?, &gamma, rat(2, 3))?;
    let omega_value = rational_eigenvalue("omega", &times(&ab.omega)?, &gamma, rat(2, 1))?;
    Ok(GammaRelations {
        gamma,
        gamma_bar,
        gamma_norm,
        alpha_value,
        beta_value,
        omega2_value,
        omega_value,
    })
}

/// A basis of `ker(θ − id)`.
pub fn theta_fixed_subspace(s: &S3Algebra) -> Result<Vec<Element>> {
    let action = build_action(s)?;
    let n = s.algebra().dim();
    let shifted = action.theta() - &Matrix::identity(n);
    Ok(shifted.kernel().into_iter().map(Element::new).collect())
}

/// Whether two lists of vectors span the same subspace.
pub fn same_span(xs: &[Element], ys: &[Element]) -> bool {
    let rank = |vs: &[&Element]| -> usize {
        if vs.is_empty() {
            return 0;
        }
        Matrix::from_rows(vs.iter().map(|v| v.coords().to_vec()).collect())
            .map(|m| m.rank())
            .unwrap_or(usize::MAX)
    };
    let xs: Vec<&Element> = xs.iter().collect();
    let ys: Vec<&Element> = ys.iter().collect();
    let both: Vec<&Element> = xs.iter().chain(&ys).copied().collect();
    let r = rank(&both);
    r == rank(&xs) && r == rank(&ys)
}

/// `(2λ + 1)e + 2a + 2b`: the orbit sum of `e` written in the frame, valid at
/// either admissible λ.
pub fn orbit_sum(s: &S3Algebra) -> Element {
    let two = rat(2, 1);
    s.from_frame(&[
        s.lambda() * &two + Rational::one(),
        two.clone(),
        two,
        Rational::zero(),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ansatz::build_algebra;

    fn large() -> S3Algebra {
        build_algebra(&rat(13, 256)).unwrap()
    }

    #[test]
    fn s3_presentation() {
        for l in [rat(1, 64), rat(13, 256)] {
            let s = build_algebra(&l).unwrap();
            let action = build_action(&s).unwrap();
            let swap = action.swap();
            assert_eq!(apply(&swap, &s.e()), s.f());
            assert_eq!(apply(&swap, &s.f()), s.e());
            assert_eq!(
                action.tau_f().apply(&s.e()),
                s.f_tau_e(),
                "tau_f(e) = f^tau_e"
            );
        }
    }

    #[test]
    fn orbit_is_three_conformal_vectors() {
        let s = large();
        let action = build_action(&s).unwrap();
        let orbit = orbit_of_e(&s, &action);
        assert_eq!(orbit[1], s.f());
        assert_eq!(orbit[2], s.f_tau_e());
        assert_ne!(orbit[0], orbit[1]);
        assert_ne!(orbit[1], orbit[2]);
        assert_ne!(orbit[0], orbit[2]);
        for i in 0..3 {
            assert_eq!(s.algebra().central_charge(&orbit[i]).unwrap(), rat(1, 2));
            for j in i + 1..3 {
                let ip: Rational = s.algebra().inner(&orbit[i], &orbit[j]).unwrap();
                assert_eq!(ip, rat(13, 1024));
            }
        }
    }

    #[test]
    fn alpha_coordinates() {
        let s = large();
        let ab = alpha_beta(&s).unwrap();
        assert_eq!(
            ab.alpha,
            Element::new(vec![rat(141, 128), rat(2, 1), rat(2, 1), rat(0, 1)])
        );
        assert_eq!(ab.alpha, orbit_sum(&s));
    }

    #[test]
    fn split_charges_add_up() {
        let s = large();
        let split = conformal_split(&s).unwrap();
        let omega = s.omega().unwrap();
        assert_eq!(
            &split.charge2 + &split.charge3,
            s.algebra().central_charge(&omega).unwrap()
        );
        assert_eq!(&split.charge2 + &split.charge3, rat(58, 35));
    }

    #[test]
    fn gamma() {
        let g = gamma_relations(&large()).unwrap();
        assert_eq!(g.beta_value, rat(11, 1));
        assert_eq!(g.omega2_value, rat(2, 3));
    }

    #[test]
    fn fixed_spaces() {
        let s = large();
        let fixed = theta_fixed_subspace(&s).unwrap();
        assert_eq!(fixed.len(), 2);
        let split = conformal_split(&s).unwrap();
        assert!(same_span(&fixed, &[split.omega2, split.omega3]));
        assert!(same_span(&fixed, &[s.omega().unwrap(), orbit_sum(&s)]));

        let small = build_algebra(&rat(1, 64)).unwrap();
        let fixed = theta_fixed_subspace(&small).unwrap();
        // e, f, f^tau_e are a basis permuted cyclically by theta, and the
        // orbit sum is (33/32)omega.
        assert_eq!(fixed.len(), 1);
        assert_eq!(
            orbit_sum(&small),
            small.omega().unwrap().scale(&rat(33, 32))
        );
        assert!(same_span(
            &fixed,
            &[small.omega().unwrap(), orbit_sum(&small)]
        ));
    }

    #[test]
    fn large_only_operations_reject_small() {
        let small = build_algebra(&rat(1, 64)).unwrap();
        assert!(matches!(alpha_beta(&small), Err(Error::WrongLambda { .. })));
    }
}
