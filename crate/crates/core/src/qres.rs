//! Q-curvature polynomials, V-polynomials, the critical curvature and the
//! holographic formula.
//!
//! The degree-`N` polynomial `Qres_{2N}(lambda)` is built from the solved
//! family actions on the volume coefficients,
//!
//! ```text
//! Qres_{2N}(lambda) = -2^{2N} N! (lambda + n/2 - 2N + 1) ... (lambda + n/2 - N)
//!     * [ T_{2N}(lambda + n - 2N)(v_0) + ... + T_0(lambda + n - 2N)(v_{2N}) ],
//! ```
//!
//! where on the model class the adjoint families coincide with the
//! families themselves (every operator is a constant-coefficient
//! polynomial in the Laplacian) and act on the constants `v_{2j}` through
//! the `mu = 0` eigen-action. It vanishes at `lambda = 0`, and in the
//! critical case `2N = n` its derivative there is the critical curvature.
//! The same polynomial also arises by Lagrange interpolation from the
//! factorization values of lower-order polynomials, which is the second,
//! independent construction route implemented here.

use crate::error::ModelError;
use crate::families::{p_family, solve_t_families};
use crate::model::{EigenParameter, EinsteinModel};
use crate::poly::Poly;
use crate::rational::Rat;
use crate::ratfunc::RatFunc;

/// Construction route of a [`QResPoly`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QResRoute {
    /// Directly from the family actions on volume coefficients.
    Definition,
    /// Lagrange interpolation through the factorization values.
    Interpolation,
}

/// A Q-curvature polynomial instance on a model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QResPoly {
    pub big_n: usize,
    pub n: i64,
    pub poly: Poly,
    pub route: QResRoute,
}

/// A V-polynomial instance on a model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VPoly {
    pub big_n: usize,
    pub n: i64,
    pub poly: Poly,
}

/// Family eigen-actions at `mu = 0` (actions on constants), `T_0..T_{2N}`.
fn constants_actions(m: &EinsteinModel, n_max: usize) -> Result<Vec<RatFunc>, ModelError> {
    Ok(solve_t_families(m, &EigenParameter::zero(), n_max)?
        .into_iter()
        .map(|f| f.action)
        .collect())
}

/// The definition route for `Qres_{2N}`, `2N <= n`.
pub fn qres_definition(m: &EinsteinModel, big_n: usize) -> Result<QResPoly, ModelError> {
    if big_n < 1 || 2 * big_n as i64 > m.dimension() {
        return Err(ModelError::UnsupportedDimension(m.dimension()));
    }
    let n = m.dimension();
    let t = constants_actions(m, big_n)?;
    let v = m.volume_series(big_n);
    let shift = Rat::from_int(n - 2 * big_n as i64);

    let mut sum = RatFunc::zero();
    for (j, t_action) in t.iter().enumerate() {
        let term = t_action
            .compose_shift(&shift)
            .scale(&v.coefficient(big_n - j));
        sum = &sum + &term;
    }

    // -2^{2N} N! (lambda + n/2 - 2N + 1) ... (lambda + n/2 - N)
    let prefactor = Poly::from_linear_offsets(
        (1..=big_n as i64).map(|i| m.half_n() - Rat::from_int(2 * big_n as i64) + Rat::from_int(i)),
    );
    let scale = -(Rat::from_int(2).pow(2 * big_n as i32) * Rat::factorial(big_n));
    let poly = sum
        .mul_poly(&prefactor)
        .scale(&scale)
        .into_poly()
        .map_err(|_| ModelError::NonPolynomialResult)?;
    debug_assert!(poly.eval(&Rat::zero()).is_zero());
    Ok(QResPoly {
        big_n,
        n,
        poly,
        route: QResRoute::Definition,
    })
}

/// `Qres_{2N}(lambda) / lambda`, exact since the constant term vanishes.
pub fn qres_reduced(q: &QResPoly) -> Poly {
    q.poly
        .div_exact(&Poly::linear(Rat::zero(), Rat::one()))
        .expect("Qres vanishes at zero")
}

/// The curvature `Q_{2N}` of the model: the spectral-value route for
/// `2N < n`, the derivative of the critical polynomial at zero for
/// `2N = n`.
fn q_curvature(m: &EinsteinModel, big_n: usize) -> Result<Rat, ModelError> {
    if 2 * big_n as i64 == m.dimension() {
        critical_q(m)
    } else {
        Ok(p_family(m, &EigenParameter::zero(), big_n)?
            .q_value
            .expect("subcritical order"))
    }
}

/// Eigen-action scalar of `P_{2j}` on constants (the multiplier through
/// which the operator acts on any constant function).
fn p_on_constants(m: &EinsteinModel, j: usize) -> Result<Rat, ModelError> {
    if j == 0 {
        return Ok(Rat::one());
    }
    Ok(p_family(m, &EigenParameter::zero(), j)?.gjms_at_spectral)
}

/// The interpolation route: rebuilds `Qres_{2N}` for `N = 2, 3, 4` from
/// curvatures, operator values on constants, and lower-order reduced
/// polynomials, using the Lagrange form through the factorization nodes
/// `lambda_j = -n/2 + 2N - j`.
pub fn qres_interpolation(m: &EinsteinModel, big_n: usize) -> Result<QResPoly, ModelError> {
    let n = m.dimension();
    if 2 * big_n as i64 > n {
        return Err(ModelError::UnsupportedDimension(n));
    }
    let reduced = interpolation_reduced(m, big_n)?;
    Ok(QResPoly {
        big_n,
        n,
        poly: &Poly::linear(Rat::zero(), Rat::one()) * &reduced,
        route: QResRoute::Interpolation,
    })
}

/// Reduced polynomial `QRes_{2N}(lambda) = Qres_{2N}(lambda)/lambda` by
/// interpolation, recursively in `N`.
fn interpolation_reduced(m: &EinsteinModel, big_n: usize) -> Result<Poly, ModelError> {
    let half_n = m.half_n();
    match big_n {
        1 => Ok(Poly::constant(q_curvature(m, 1)?)),
        2 => {
            // -(lambda + n/2 - 3) Q_4 - (lambda + n/2 - 2) P_2(Q_2)
            let q4 = q_curvature(m, 2)?;
            let p2q2 = p_on_constants(m, 1)? * q_curvature(m, 1)?;
            let a = Poly::linear(&half_n - &Rat::from_int(3), Rat::one()).scale(&-q4);
            let b = Poly::linear(&half_n - &Rat::from_int(2), Rat::one()).scale(&-p2q2);
            Ok(&a + &b)
        }
        3 | 4 => lagrange_reduced(m, big_n),
        _ => Err(ModelError::UnsupportedN(big_n as i64)),
    }
}

/// Lagrange interpolation of the reduced polynomial of degree `N - 1`
/// through the nodes `lambda_j = -n/2 + 2N - j`, `j = 1..N`: the node
/// value at `j = N` is `Q_{2N}` itself, the others are
/// `(-1)^j P_{2j}( QRes_{2N-2j}(lambda_j) )`.
fn lagrange_reduced(m: &EinsteinModel, big_n: usize) -> Result<Poly, ModelError> {
    let half_n = m.half_n();
    let node = |j: usize| -&half_n + Rat::from_int(2 * big_n as i64 - j as i64);

    let mut acc = Poly::zero();
    for j in 1..=big_n {
        let value = if j == big_n {
            q_curvature(m, big_n)?
        } else {
            let lower = interpolation_reduced(m, big_n - j)?;
            let sign = if j % 2 == 0 { 1 } else { -1 };
            Rat::from_int(sign) * p_on_constants(m, j)? * lower.eval(&node(j))
        };
        // Lagrange basis for node j among the N nodes
        let mut basis = Poly::constant(value);
        for k in 1..=big_n {
            if k == j {
                continue;
            }
            let denom = Rat::from_int(k as i64) - Rat::from_int(j as i64);
            basis = &basis
                * &Poly::linear(-node(k), Rat::one()).scale(&denom.inverse().unwrap());
        }
        acc = &acc + &basis;
    }
    Ok(acc)
}

/// The V-polynomial
/// `V_{2N}(lambda) = (lambda - n/2 + 1)...(lambda - n/2 + N)
///   sum_j (2N + 2j) T_{2j}(lambda)(v_{2N-2j})`, `2N <= n`.
pub fn v_polynomial(m: &EinsteinModel, big_n: usize) -> Result<VPoly, ModelError> {
    if big_n < 1 || 2 * big_n as i64 > m.dimension() {
        return Err(ModelError::UnsupportedDimension(m.dimension()));
    }
    let t = constants_actions(m, big_n)?;
    let v = m.volume_series(big_n);
    let mut sum = RatFunc::zero();
    for (j, t_action) in t.iter().enumerate() {
        let weight = Rat::from_int(2 * big_n as i64 + 2 * j as i64);
        sum = &sum + &t_action.scale(&(weight * v.coefficient(big_n - j)));
    }
    let prefactor = Poly::from_linear_offsets(
        (1..=big_n as i64).map(|k| -m.half_n() + Rat::from_int(k)),
    );
    let poly = sum
        .mul_poly(&prefactor)
        .into_poly()
        .map_err(|_| ModelError::NonPolynomialResult)?;
    Ok(VPoly {
        big_n,
        n: m.dimension(),
        poly,
    })
}

/// Critical curvature `Q_n` as the derivative of the critical polynomial
/// at zero.
pub fn critical_q(m: &EinsteinModel) -> Result<Rat, ModelError> {
    let big_n = (m.dimension() / 2) as usize;
    Ok(qres_definition(m, big_n)?.poly.derivative_at_zero())
}

/// Critical curvature through the holographic formula
/// `n (-1)^{n/2} Q_n = 2^{n-1} (n/2)! (n/2-1)!
///    sum_{j<n/2} (n-2j) T_{2j}(0)(v_{n-2j})`.
pub fn holographic_q(m: &EinsteinModel) -> Result<Rat, ModelError> {
    let n = m.dimension();
    let half = (n / 2) as usize;
    let t = constants_actions(m, half - 1)?;
    let v = m.volume_series(half);
    let mut sum = Rat::zero();
    for (j, t_action) in t.iter().enumerate() {
        let t_at_zero = t_action
            .eval(&Rat::zero())
            .map_err(|_| ModelError::NonPolynomialResult)?;
        sum = sum + Rat::from_int(n - 2 * j as i64) * t_at_zero * v.coefficient(half - j);
    }
    let scale = Rat::from_int(2).pow(n as i32 - 1) * Rat::factorial(half) * Rat::factorial(half - 1);
    let sign = if half % 2 == 0 { 1 } else { -1 };
    Ok(scale * sum * Rat::from_int(sign) / Rat::from_int(n))
}
