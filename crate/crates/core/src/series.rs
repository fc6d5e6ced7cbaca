//! Truncated formal power series in `t = r^2` over a generic coefficient
//! ring.
//!
//! All geometric expansions in this crate are even in `r`, so every series
//! lives in the variable `t = r^2`: "order N" means powers `t^0..t^N`, that
//! is `r^0..r^{2N}`. The coefficient ring is generic so the same machinery
//! serves plain rationals (volume expansions) and rational functions of the
//! spectral parameter (operator-valued expansions).

use crate::error::SeriesError;
use crate::poly::Poly;
use crate::rational::Rat;
use crate::ratfunc::RatFunc;

/// Coefficient-ring contract used by [`Series`]: commutative ring
/// operations plus inversion of units.
pub trait Ring: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Multiplicative inverse, or `None` when the element is not a unit.
    fn invert(&self) -> Option<Self>;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }
}

impl Ring for Rat {
    fn zero() -> Self {
        Rat::zero()
    }
    fn one() -> Self {
        Rat::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn invert(&self) -> Option<Self> {
        self.inverse()
    }
}

impl Ring for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn invert(&self) -> Option<Self> {
        self.inverse().ok()
    }
}

/// A power series truncated at a fixed order in `t`.
///
/// The coefficient vector always has length `order + 1`; arithmetic never
/// reads or writes past the truncation order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Series<R> {
    /// Builds a series from coefficients `t^0..t^order` (must be nonempty).
    pub fn new(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least the constant term");
        Series { coeffs }
    }

    pub fn constant(c: R, order: usize) -> Self {
        let mut coeffs = vec![R::zero(); order + 1];
        coeffs[0] = c;
        Series { coeffs }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(R::one(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficient(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Drops coefficients above `order` (which must not exceed the
    /// current order).
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        Series {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        Ok(Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        Ok(Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.sub(b))
                .collect(),
        })
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        let n = self.order();
        let mut coeffs = vec![R::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > n {
                    break;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Ok(Series { coeffs })
    }

    /// Multiplicative inverse up to truncation; requires a unit constant
    /// term.
    pub fn inv(&self) -> Result<Self, SeriesError> {
        let c0_inv = self.coeffs[0]
            .invert()
            .ok_or(SeriesError::NonUnitConstantTerm)?;
        let n = self.order();
        let mut coeffs = vec![R::zero(); n + 1];
        coeffs[0] = c0_inv.clone();
        for k in 1..=n {
            // a_0 b_k = -(a_1 b_{k-1} + ... + a_k b_0)
            let mut acc = R::zero();
            for i in 1..=k {
                acc = acc.add(&self.coeffs[i].mul(&coeffs[k - i]));
            }
            coeffs[k] = acc.neg().mul(&c0_inv);
        }
        Ok(Series { coeffs })
    }

    /// Square root with constant term one, by solving the squaring
    /// recurrence coefficient by coefficient.
    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        if self.coeffs[0] != R::one() {
            return Err(SeriesError::ConstantTermNotOne);
        }
        let two_inv = R::one()
            .add(&R::one())
            .invert()
            .ok_or(SeriesError::NonUnitConstantTerm)?;
        let n = self.order();
        let mut w = vec![R::zero(); n + 1];
        w[0] = R::one();
        for k in 1..=n {
            // v_k = 2 w_0 w_k + sum_{i=1}^{k-1} w_i w_{k-i}
            let mut cross = R::zero();
            for i in 1..k {
                cross = cross.add(&w[i].mul(&w[k - i]));
            }
            w[k] = self.coeffs[k].sub(&cross).mul(&two_inv);
        }
        Ok(Series { coeffs: w })
    }

    /// Termwise derivative d/dt; the order drops by one.
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Series {
                coeffs: vec![R::zero()],
            };
        }
        let coeffs = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let mut acc = R::zero();
                for _ in 0..=i {
                    acc = acc.add(c);
                }
                acc
            })
            .collect();
        Series { coeffs }
    }

    /// Logarithmic derivative `a'/a` in `t`, truncated at `order - 1`.
    pub fn log_derivative(&self) -> Result<Self, SeriesError> {
        if self.coeffs[0].invert().is_none() {
            return Err(SeriesError::NonUnitConstantTerm);
        }
        let deriv = self.derivative();
        let base = self.truncate(deriv.order());
        deriv.mul(&base.inv()?)
    }

    fn check_order(&self, other: &Self) -> Result<(), SeriesError> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(SeriesError::OrderMismatch {
                left: self.order(),
                right: other.order(),
            })
        }
    }
}

impl Series<Rat> {
    /// Series with rational coefficients from integer pairs, for tests and
    /// tables.
    pub fn from_rationals(coeffs: Vec<Rat>) -> Self {
        Series::new(coeffs)
    }
}

/// Like [`Ring`] for polynomials (no inversion beyond constants); used to
/// keep series of polynomials exact when only ring operations are needed.
impl Ring for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn invert(&self) -> Option<Self> {
        if self.degree() == Some(0) {
            self.coefficient(0).inverse().map(Poly::constant)
        } else {
            None
        }
    }
}

/// Paired volume coefficients `v` and square-root coefficients `w` of a
/// single expansion, with the defining relation `w^2 = v` checked at
/// construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HolographicCoefficients {
    v: Vec<Rat>,
    w: Vec<Rat>,
}

impl HolographicCoefficients {
    /// Index `j` holds the coefficient of `t^j = r^{2j}`.
    pub fn v(&self) -> &[Rat] {
        &self.v
    }

    pub fn w(&self) -> &[Rat] {
        &self.w
    }

    pub fn order(&self) -> usize {
        self.v.len() - 1
    }
}

/// Computes `w = sqrt(v)` and asserts the closed-form coefficient
/// identities for `w_2, w_4, w_6, w_8` against the recurrence output:
///
/// ```text
/// 2 w2 = v2
/// 2 w4 = (4 v4 - v2^2) / 4
/// 2 w6 = (8 v6 - 4 v4 v2 + v2^3) / 8
/// 2 w8 = (64 v8 - 32 v6 v2 - 16 v4^2 + 24 v2^2 v4 - 5 v2^4) / 64
/// ```
///
/// A mismatch cannot happen unless the square-root recurrence is broken;
/// it is reported as `SqrtCoefficientMismatch` with the failing index.
pub fn half_power_check(v: &[Rat]) -> Result<HolographicCoefficients, SeriesError> {
    assert!(!v.is_empty(), "need at least the constant coefficient");
    let series = Series::new(v.to_vec());
    let w = series.sqrt()?;

    let closed = closed_sqrt_coefficients(v);
    for (index, expected) in closed.into_iter().enumerate().skip(1) {
        if let Some(expected) = expected {
            if w.coefficient(index) != expected {
                return Err(SeriesError::SqrtCoefficientMismatch { index });
            }
        }
    }

    Ok(HolographicCoefficients {
        v: v.to_vec(),
        w: w.coeffs().to_vec(),
    })
}

/// The four displayed square-root coefficients as closed polynomials in the
/// `v` coefficients (entries beyond the available order are `None`).
fn closed_sqrt_coefficients(v: &[Rat]) -> Vec<Option<Rat>> {
    let get = |j: usize| v.get(j).cloned().unwrap_or_else(Rat::zero);
    let (v2, v4, v6, v8) = (get(1), get(2), get(3), get(4));
    let half = Rat::new(1, 2);
    let mut out = vec![None; v.len().min(5)];
    let table: [(usize, Rat); 4] = [
        (1, v2.clone()),
        (2, (Rat::from_int(4) * &v4 - &v2 * &v2) * Rat::new(1, 4)),
        (
            3,
            (Rat::from_int(8) * &v6 - Rat::from_int(4) * (&v4 * &v2) + v2.pow(3)) * Rat::new(1, 8),
        ),
        (
            4,
            (Rat::from_int(64) * &v8
                - Rat::from_int(32) * (&v6 * &v2)
                - Rat::from_int(16) * (&v4 * &v4)
                + Rat::from_int(24) * (&v2.pow(2) * &v4)
                - Rat::from_int(5) * v2.pow(4))
                * Rat::new(1, 64),
        ),
    ];
    for (j, two_w) in table {
        if j < out.len() {
            out[j] = Some(&half * &two_w);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn rs(coeffs: &[(i64, i64)]) -> Series<Rat> {
        Series::new(coeffs.iter().map(|&(p, q)| rat(p, q)).collect())
    }

    #[test]
    fn product_truncates() {
        // (1 + t)(1 - t) at order 2 = 1 - t^2
        let a = rs(&[(1, 1), (1, 1), (0, 1)]);
        let b = rs(&[(1, 1), (-1, 1), (0, 1)]);
        assert_eq!(a.mul(&b).unwrap(), rs(&[(1, 1), (0, 1), (-1, 1)]));
        let one = Series::one(2);
        assert_eq!(a.mul(&one).unwrap(), a);
        assert_eq!(
            a.mul(&Series::one(3)),
            Err(SeriesError::OrderMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn squared_quartic_model() {
        // (1 - t/4)^4 squared = (1 - t/4)^8; t^4 coefficient is 35/128
        let quartic = rs(&[(1, 1), (-1, 1), (3, 8), (-1, 16), (1, 256)]);
        let squared = quartic.mul(&quartic).unwrap();
        assert_eq!(
            squared,
            rs(&[(1, 1), (-2, 1), (7, 4), (-7, 8), (35, 128)])
        );
    }

    #[test]
    fn geometric_inverse() {
        // (1 - t)^{-1} at order 3
        let a = rs(&[(1, 1), (-1, 1), (0, 1), (0, 1)]);
        assert_eq!(a.inv().unwrap(), rs(&[(1, 1), (1, 1), (1, 1), (1, 1)]));
        // (1 - t/4)^{-2} at order 2
        let b = rs(&[(1, 1), (-1, 2), (1, 16)]);
        assert_eq!(b.inv().unwrap(), rs(&[(1, 1), (1, 2), (3, 16)]));
        assert_eq!(Series::<Rat>::one(2).inv().unwrap(), Series::one(2));
        let zero_const = rs(&[(0, 1), (1, 1)]);
        assert_eq!(zero_const.inv(), Err(SeriesError::NonUnitConstantTerm));
    }

    #[test]
    fn sqrt_of_model_volume() {
        let v = rs(&[(1, 1), (-2, 1), (7, 4), (-7, 8), (35, 128)]);
        let w = v.sqrt().unwrap();
        assert_eq!(w, rs(&[(1, 1), (-1, 1), (3, 8), (-1, 16), (1, 256)]));
        let back = w.mul(&w).unwrap();
        assert_eq!(back, v);
        let off = rs(&[(2, 1), (1, 1)]);
        assert_eq!(off.sqrt(), Err(SeriesError::ConstantTermNotOne));
    }

    #[test]
    fn log_derivative_of_linear() {
        // a = 1 - 2t: a'/a = -2 (1 + 2t + 4t^2 + ...)
        let a = rs(&[(1, 1), (-2, 1), (0, 1), (0, 1)]);
        assert_eq!(
            a.log_derivative().unwrap(),
            rs(&[(-2, 1), (-4, 1), (-8, 1)])
        );
        // a = (1 - t/4)^8: a'/a = -2/(1 - t/4)
        let v = rs(&[(1, 1), (-2, 1), (7, 4), (-7, 8), (35, 128)]);
        assert_eq!(
            v.log_derivative().unwrap(),
            rs(&[(-2, 1), (-1, 2), (-1, 8), (-1, 32)])
        );
        assert_eq!(
            Series::<Rat>::one(3).log_derivative().unwrap(),
            Series::constant(Rat::zero(), 2)
        );
    }

    #[test]
    fn half_power_check_model_and_flat() {
        let v: Vec<Rat> = [(1, 1), (-2, 1), (7, 4), (-7, 8), (35, 128)]
            .iter()
            .map(|&(p, q)| rat(p, q))
            .collect();
        let hc = half_power_check(&v).unwrap();
        assert_eq!(
            hc.w(),
            &[int(1), int(-1), rat(3, 8), rat(-1, 16), rat(1, 256)]
        );

        let flat = vec![int(1), int(0), int(0), int(0), int(0)];
        let hc = half_power_check(&flat).unwrap();
        assert_eq!(hc.w(), flat.as_slice());
    }

    #[test]
    fn series_over_rational_functions() {
        use crate::poly::Poly;
        use crate::ratfunc::RatFunc;
        // coefficient ring Q(lambda): invert and sqrt round-trip with a
        // genuinely rational coefficient lambda/(lambda-3)
        let t2 = RatFunc::new(
            Poly::from_coeffs(vec![int(0), int(1)]),
            Poly::from_coeffs(vec![int(-3), int(1)]),
        )
        .unwrap();
        let s = Series::new(vec![RatFunc::one(), t2.clone(), RatFunc::zero()]);
        let inv = s.inv().unwrap();
        assert_eq!(s.mul(&inv).unwrap(), Series::one(2));
        let sq = s.mul(&s).unwrap();
        assert_eq!(sq.sqrt().unwrap(), s);
    }
}
