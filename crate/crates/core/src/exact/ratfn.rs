use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::Poly;
use super::rational::Rational;
use crate::error::{Error, Result};

/// A quotient of polynomials in one variable (λ throughout this crate).
///
/// Stored with coprime numerator and denominator and a monic denominator,
/// so two equal functions are structurally equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFn {
    num: Poly,
    den: Poly,
}

impl RationalFn {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g)?;
        let (den, _) = den.div_rem(&g)?;
        let lc = den.leading().expect("nonzero").recip();
        Ok(Self {
            num: num.scale(&lc),
            den: den.scale(&lc),
        })
    }

    pub fn from_poly(p: Poly) -> Self {
        Self {
            num: p,
            den: Poly::constant(Rational::one()),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::from_poly(Poly::x())
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn eval(&self, at: &Rational) -> Result<Rational> {
        let d = self.den.eval(at);
        if d.is_zero() {
            return Err(Error::Pole(at.clone()));
        }
        Ok(self.num.eval(at) / d)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(self.num.scale(k), self.den.clone()).expect("denominator unchanged")
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl From<Poly> for RationalFn {
    fn from(p: Poly) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Add for &RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: &RationalFn) -> RationalFn {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFn::new(num, &self.den * &rhs.den).expect("product of nonzero denominators")
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Sub for &RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: &RationalFn) -> RationalFn {
        self + &(-rhs)
    }
}

impl Mul for &RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &RationalFn) -> RationalFn {
        RationalFn::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("product of nonzero denominators")
    }
}

/// Panics on division by the zero function; see [`RationalFn::checked_div`].
impl Div for &RationalFn {
    type Output = RationalFn;
    fn div(self, rhs: &RationalFn) -> RationalFn {
        self.checked_div(rhs)
            .expect("division by the zero function")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn lin(slope: i64, intercept: i64) -> Poly {
        Poly::linear(rat(slope, 1), rat(intercept, 1))
    }

    #[test]
    fn normalization_is_canonical() {
        // (2x − 2)/(−4x + 4) = −1/2
        let f = RationalFn::new(lin(2, -2), lin(-4, 4)).unwrap();
        assert_eq!(f, RationalFn::constant(rat(-1, 2)));
        // x/(3x + 1) has monic denominator x + 1/3
        let g = RationalFn::new(Poly::x(), lin(3, 1)).unwrap();
        assert_eq!(g.den().leading(), Some(&rat(1, 1)));
        assert_eq!(g.num().leading(), Some(&rat(1, 3)));
    }

    #[test]
    fn pole_is_reported() {
        let f = RationalFn::new(Poly::constant(rat(1, 1)), lin(128, 5)).unwrap();
        assert_eq!(f.eval(&rat(-5, 128)), Err(Error::Pole(rat(-5, 128))));
        assert_eq!(f.eval(&rat(13, 256)).unwrap(), rat(2, 23));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RationalFn::new(Poly::x(), Poly::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn field_operations() {
        let a = RationalFn::new(lin(1, 0), lin(1, 1)).unwrap();
        let b = RationalFn::new(lin(0, 1), lin(1, 1)).unwrap();
        assert_eq!(&a + &b, RationalFn::constant(rat(1, 1)));
        assert_eq!(&(&a / &b) * &b, a);
        assert!((&a - &a).is_zero());
    }
}
