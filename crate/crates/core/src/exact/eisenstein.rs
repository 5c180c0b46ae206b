use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::{Rational, Scalar};
use crate::error::{Error, Result};

/// An element `re + zc·ζ` of ℚ(ζ₃), where `ζ² = −1 − ζ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Eisenstein {
    pub re: Rational,
    pub zc: Rational,
}

impl Eisenstein {
    pub fn new(re: Rational, zc: Rational) -> Self {
        Self { re, zc }
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::new(r, Rational::zero())
    }

    /// The primitive cube root of unity ζ₃.
    pub fn zeta() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    /// Complex conjugation: ζ ↦ ζ² = −1 − ζ.
    pub fn conjugate(&self) -> Self {
        Self::new(&self.re - &self.zc, -self.zc.clone())
    }

    /// Field norm `re² − re·zc + zc²`, equal to `x · x̄`.
    pub fn norm(&self) -> Rational {
        &self.re * &self.re - &self.re * &self.zc + &self.zc * &self.zc
    }

    pub fn inv(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let c = self.conjugate();
        Ok(Self::new(c.re / &n, c.zc / n))
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::one(), |acc, _| acc * self.clone())
    }

    /// The rational value when the ζ-coefficient vanishes.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.zc.is_zero().then_some(&self.re)
    }
}

impl fmt::Display for Eisenstein {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.zc.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}*z3", self.zc),
            (false, false) => write!(f, "{}+{}*z3", self.re, self.zc),
        }
    }
}

impl Add for Eisenstein {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.re + rhs.re, self.zc + rhs.zc)
    }
}

impl Sub for Eisenstein {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.re - rhs.re, self.zc - rhs.zc)
    }
}

impl Mul for Eisenstein {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        // (a + bζ)(c + dζ) = ac − bd + (ad + bc − bd)ζ
        let bd = &self.zc * &rhs.zc;
        let re = &self.re * &rhs.re - &bd;
        let zc = &self.re * &rhs.zc + &self.zc * &rhs.re - bd;
        Self::new(re, zc)
    }
}

impl Neg for Eisenstein {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.zc)
    }
}

impl Zero for Eisenstein {
    fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.zc.is_zero()
    }
}

impl One for Eisenstein {
    fn one() -> Self {
        Self::from_rational(Rational::one())
    }
}

impl Scalar for Eisenstein {
    fn inverse(&self) -> Option<Self> {
        self.inv().ok()
    }

    fn conj(&self) -> Self {
        self.conjugate()
    }

    fn from_rational(r: &Rational) -> Self {
        Eisenstein::from_rational(r.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn e(re: i64, zc: i64) -> Eisenstein {
        Eisenstein::new(rat(re, 1), rat(zc, 1))
    }

    #[test]
    fn zeta_squared_is_minus_one_minus_zeta() {
        let z = Eisenstein::zeta();
        assert_eq!(z.clone() * z, e(-1, -1));
    }

    #[test]
    fn cube_roots_sum_to_zero() {
        let z = Eisenstein::zeta();
        assert!((Eisenstein::one() + z.clone() + z.pow(2)).is_zero());
        assert_eq!(z.pow(3), Eisenstein::one());
    }

    #[test]
    fn inverse_of_one_minus_zeta() {
        let x = e(1, -1);
        let expected = Eisenstein::new(rat(2, 3), rat(1, 3));
        assert_eq!(x.inv().unwrap(), expected);
        assert_eq!(x * expected, Eisenstein::one());
    }

    #[test]
    fn zero_is_not_invertible() {
        assert_eq!(Eisenstein::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn conjugation_and_norm() {
        let z = Eisenstein::zeta();
        assert_eq!(z.conjugate(), z.pow(2));
        let x = e(3, 5);
        let prod = x.clone() * x.conjugate();
        assert_eq!(prod.as_rational(), Some(&x.norm()));
        assert_eq!(x.norm(), rat(19, 1));
    }
}
