//! Normalized rational functions in the spectral parameter.
//!
//! A `RatFunc` is a quotient of two [`Poly`] values kept in the canonical
//! form gcd(num, den) = 1 with a monic denominator, so `den == 1` exactly
//! when the value is polynomial. These carry the eigen-actions of the
//! solution-operator families, whose poles are confined to finitely many
//! half-integer shifts of the dimension.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::ArithmeticError;
use crate::poly::Poly;
use crate::rational::Rat;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Builds `num/den` in canonical form; `ZeroDenominator` if `den == 0`.
    pub fn new(num: Poly, den: Poly) -> Result<Self, ArithmeticError> {
        if den.is_zero() {
            return Err(ArithmeticError::ZeroDenominator);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: Poly, den: Poly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RatFunc {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let g = num.gcd(&den);
        let num = num.div_exact(&g).expect("gcd divides numerator");
        let den = den.div_exact(&g).expect("gcd divides denominator");
        let lead_inv = den
            .leading()
            .expect("nonzero denominator")
            .inverse()
            .expect("nonzero leading coefficient");
        RatFunc {
            num: num.scale(&lead_inv),
            den: den.scale(&lead_inv),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
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

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Returns the numerator when the denominator is one.
    pub fn into_poly(self) -> Result<Poly, ArithmeticError> {
        if self.is_polynomial() {
            Ok(self.num)
        } else {
            Err(ArithmeticError::InexactDivision)
        }
    }

    /// Exact evaluation; `PoleEvaluation` at roots of the denominator.
    pub fn eval(&self, x: &Rat) -> Result<Rat, ArithmeticError> {
        let den = self.den.eval(x);
        if den.is_zero() {
            return Err(ArithmeticError::PoleEvaluation(x.to_string()));
        }
        Ok(self.num.eval(x) / den)
    }

    /// Multiplicative inverse; `ZeroDenominator` for the zero function.
    pub fn inverse(&self) -> Result<Self, ArithmeticError> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, ArithmeticError> {
        Ok(self * &rhs.inverse()?)
    }

    pub fn mul_poly(&self, p: &Poly) -> Self {
        Self::normalized(&self.num * p, self.den.clone())
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Substitutes `lambda -> lambda + shift` in numerator and denominator.
    pub fn compose_shift(&self, shift: &Rat) -> Self {
        Self::normalized(self.num.compose_shift(shift), self.den.compose_shift(shift))
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::normalized(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::normalized(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn p(coeffs: &[i64]) -> Poly {
        Poly::from_coeffs(coeffs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn cancellation_to_polynomial() {
        // (lambda^2 - 9) / (lambda - 3) = lambda + 3
        let f = RatFunc::new(p(&[-9, 0, 1]), p(&[-3, 1])).unwrap();
        assert!(f.is_polynomial());
        assert_eq!(f.num(), &p(&[3, 1]));
    }

    #[test]
    fn monic_denominator() {
        // 4*lambda / (4*lambda - 12) = lambda / (lambda - 3)
        let f = RatFunc::new(p(&[0, 4]), p(&[-12, 4])).unwrap();
        assert_eq!(f.num(), &p(&[0, 1]));
        assert_eq!(f.den(), &p(&[-3, 1]));
    }

    #[test]
    fn zero_numerator_and_zero_denominator() {
        let f = RatFunc::new(Poly::zero(), p(&[7])).unwrap();
        assert!(f.is_zero());
        assert_eq!(f.den(), &Poly::one());
        assert_eq!(
            RatFunc::new(p(&[1]), Poly::zero()),
            Err(ArithmeticError::ZeroDenominator)
        );
    }

    #[test]
    fn evaluation_and_poles() {
        let f = RatFunc::new(p(&[0, 1]), p(&[-3, 1])).unwrap();
        assert_eq!(f.eval(&int(1)).unwrap(), Rat::new(-1, 2));
        assert_eq!(
            f.eval(&int(3)),
            Err(ArithmeticError::PoleEvaluation("3".into()))
        );
        let g = RatFunc::from_poly(p(&[3, 1]));
        assert_eq!(g.eval(&int(0)).unwrap(), int(3));
    }

    #[test]
    fn normalization_is_idempotent() {
        let f = RatFunc::new(p(&[0, 4]), p(&[-12, 4])).unwrap();
        let again = RatFunc::new(f.num().clone(), f.den().clone()).unwrap();
        assert_eq!(f, again);
    }

    #[test]
    fn field_arithmetic() {
        let f = RatFunc::new(p(&[0, 1]), p(&[-3, 1])).unwrap();
        let g = f.inverse().unwrap();
        assert_eq!(&f * &g, RatFunc::one());
        assert_eq!(&f - &f, RatFunc::zero());
        let shifted = f.compose_shift(&int(4));
        // lambda+4 over lambda+1
        assert_eq!(shifted.num(), &p(&[4, 1]));
        assert_eq!(shifted.den(), &p(&[1, 1]));
    }
}
