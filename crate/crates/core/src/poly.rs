//! Univariate polynomials in the spectral parameter over [`Rat`].
//!
//! Coefficients are stored in increasing degree with no trailing zero, so
//! the zero polynomial is the empty coefficient vector and `degree` is
//! `None` for it rather than a sentinel integer.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::ArithmeticError;
use crate::rational::Rat;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    /// Builds a polynomial from coefficients in increasing degree,
    /// trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The linear polynomial `c0 + c1*lambda`.
    pub fn linear(c0: Rat, c1: Rat) -> Self {
        Poly::from_coeffs(vec![c0, c1])
    }

    /// The monomial `c * lambda^k`.
    pub fn monomial(k: usize, c: Rat) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `lambda^k`; zero beyond the degree.
    pub fn coefficient(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    /// Coefficient of `lambda^1`, the derivative at zero.
    pub fn derivative_at_zero(&self) -> Rat {
        self.coefficient(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Rescales so the leading coefficient is one; zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(lead) => self.scale(&lead.inverse().expect("nonzero leading coefficient")),
        }
    }

    /// Substitutes `lambda -> lambda + shift`.
    pub fn compose_shift(&self, shift: &Rat) -> Poly {
        let arg = Poly::linear(shift.clone(), Rat::one());
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &arg) + &Poly::constant(c.clone());
        }
        acc
    }

    /// Quotient and remainder of Euclidean division by a nonzero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly), ArithmeticError> {
        let d_deg = divisor.degree().ok_or(ArithmeticError::ZeroDenominator)?;
        let d_lead_inv = divisor
            .leading()
            .expect("nonzero divisor")
            .inverse()
            .expect("nonzero leading coefficient");
        let mut rem = self.clone();
        let mut quot = vec![Rat::zero(); self.coeffs.len().saturating_sub(d_deg)];
        while let Some(r_deg) = rem.degree() {
            if r_deg < d_deg {
                break;
            }
            let factor = rem.leading().unwrap() * &d_lead_inv;
            let shift = r_deg - d_deg;
            quot[shift] = factor.clone();
            let mut coeffs = rem.coeffs;
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                let sub = dc * &factor;
                coeffs[shift + i] -= &sub;
            }
            rem = Poly::from_coeffs(coeffs);
        }
        Ok((Poly::from_coeffs(quot), rem))
    }

    /// Exact division; `InexactDivision` if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Poly, ArithmeticError> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(ArithmeticError::InexactDivision)
        }
    }

    /// Monic greatest common divisor (Euclidean algorithm).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Product of linear factors `prod_i (lambda + offsets[i])`.
    pub fn from_linear_offsets<I: IntoIterator<Item = Rat>>(offsets: I) -> Poly {
        let mut acc = Poly::one();
        for c in offsets {
            acc = &acc * &Poly::linear(c, Rat::one());
        }
        acc
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.coefficient(i) + rhs.coefficient(i))
            .collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.coefficient(i) - rhs.coefficient(i))
            .collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let prod = a * b;
                coeffs[i + j] += &prod;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(Neg::neg).collect(),
        }
    }
}

impl fmt::Display for Poly {
    /// Canonical form, highest degree first: `-24*lambda^4 + 432*lambda^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "lambda")?;
                    } else {
                        write!(f, "lambda^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn p(coeffs: &[i64]) -> Poly {
        Poly::from_coeffs(coeffs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn zero_polynomial_has_no_degree() {
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(p(&[0, 0]).degree(), None);
        assert_eq!(p(&[5]).degree(), Some(0));
        assert_eq!(p(&[0, 0, 3]).degree(), Some(2));
    }

    #[test]
    fn coefficient_extraction() {
        // 3*lambda^2 - 5
        let q = p(&[-5, 0, 3]);
        assert_eq!(q.coefficient(2), int(3));
        assert_eq!(q.coefficient(1), int(0));
        assert_eq!(q.coefficient(7), int(0));
        assert_eq!(Poly::zero().coefficient(0), int(0));
    }

    #[test]
    fn derivative_at_zero_reads_linear_coefficient() {
        // 5040*lambda + 7*lambda^2
        let q = p(&[0, 5040, 7]);
        assert_eq!(q.derivative_at_zero(), int(5040));
        assert_eq!(Poly::zero().derivative_at_zero(), int(0));
        assert_eq!(p(&[0, 0, 0, 1]).derivative_at_zero(), int(0));
    }

    #[test]
    fn arithmetic() {
        let a = p(&[1, 2]);
        let b = p(&[-1, 2]);
        assert_eq!(&a * &b, p(&[-1, 0, 4]));
        assert_eq!(&a + &b, p(&[0, 4]));
        assert_eq!(&a - &a, Poly::zero());
        assert_eq!(a.eval(&rat(1, 2)), int(2));
    }

    #[test]
    fn division_and_gcd() {
        // (lambda^2 - 9) / (lambda - 3) = lambda + 3
        let num = p(&[-9, 0, 1]);
        let den = p(&[-3, 1]);
        assert_eq!(num.div_exact(&den).unwrap(), p(&[3, 1]));
        assert_eq!(
            p(&[1, 1]).div_exact(&p(&[0, 1])),
            Err(ArithmeticError::InexactDivision)
        );
        let g = (&num * &p(&[7, 7])).gcd(&(&den * &p(&[7, 7])));
        // common factor 7*(lambda+1)*(lambda-3), returned monic
        assert_eq!(g, (&p(&[1, 1]) * &den).monic());
    }

    #[test]
    fn shift_composition() {
        // (lambda^2)(lambda -> lambda + 1) = lambda^2 + 2*lambda + 1
        let q = p(&[0, 0, 1]).compose_shift(&int(1));
        assert_eq!(q, p(&[1, 2, 1]));
        assert_eq!(Poly::zero().compose_shift(&int(5)), Poly::zero());
    }

    #[test]
    fn display_form() {
        assert_eq!(p(&[0, 36, -12]).to_string(), "-12*lambda^2 + 36*lambda");
        assert_eq!(p(&[-5, 1]).to_string(), "lambda - 5");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(p(&[2]).to_string(), "2");
    }
}
