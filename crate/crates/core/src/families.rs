//! Solution-operator families and their polynomial normalizations.
//!
//! The formal eigenfunction expansion `u ~ sum_N r^{lambda+2N} T_{2N}(lambda) f`
//! of the eigen-equation `-Lap u = lambda(n - lambda) u` determines the
//! coefficient operators `T_{2N}(lambda)` through the recursion
//!
//! ```text
//! sum_{k=1}^{N} 1/(k-1)! (Lap^(k-1) + (2N - 2k + lambda) D^(k)) T_{2N-2k}(lambda)
//!     = -2N (2 lambda - n + 2N) T_{2N}(lambda).
//! ```
//!
//! On the model geometry every `T_{2N}(lambda)` acts on an eigenfunction by
//! a rational function of `lambda` whose poles lie in `{n/2-1, ..., n/2-N}`.
//! Clearing those poles with the normalization
//!
//! ```text
//! P_{2N}(lambda) = 2^{2N} N! (n/2 - lambda - 1) ... (n/2 - lambda - N) T_{2N}(lambda)
//! ```
//!
//! produces a polynomial family of degree `N`; its value at the spectral
//! point `lambda = n/2 - N` is the conformally covariant power of the
//! Laplacian of order `2N`, and for `2N < n` the constant term encodes the
//! curvature `Q_{2N}` via `P_{2N}(1) = (-1)^N (n/2 - N) Q_{2N}`.

use crate::error::ModelError;
use crate::model::{EigenParameter, EinsteinModel};
use crate::poly::Poly;
use crate::rational::Rat;
use crate::ratfunc::RatFunc;

/// Eigen-action of one solution operator `T_{2N}(lambda)` on the model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyAction {
    /// The half-order `N` (the operator has order `2N`).
    pub big_n: usize,
    /// Value on the eigenfunction, as a rational function of `lambda`.
    pub action: RatFunc,
}

/// Polynomial family data extracted from a solved `T_{2N}(lambda)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GjmsValue {
    pub big_n: usize,
    /// Eigen-action of `P_{2N}(lambda)`, a polynomial of degree `N`.
    pub p_action: Poly,
    /// `P_{2N}` eigen-action at the spectral point `lambda = n/2 - N`.
    pub gjms_at_spectral: Rat,
    /// The curvature `Q_{2N}`; present exactly when `2N < n`.
    pub q_value: Option<Rat>,
}

/// Solves the recursion for `T_0, ..., T_{2 N_max}` eigen-actions.
///
/// Requires `N_max <= n/2`; the divisor `2 lambda - n + 2N` is a nonzero
/// polynomial for every `N`, so the division is always defined.
pub fn solve_t_families(
    m: &EinsteinModel,
    e: &EigenParameter,
    n_max: usize,
) -> Result<Vec<FamilyAction>, ModelError> {
    if n_max < 1 || n_max as i64 > m.dimension() / 2 {
        return Err(ModelError::InvalidOrder(n_max as i64));
    }
    let laplace = m.laplace_actions(e, n_max.saturating_sub(1));
    let logdet = m.logdet_derivatives(n_max);

    let mut actions: Vec<FamilyAction> = vec![FamilyAction {
        big_n: 0,
        action: RatFunc::one(),
    }];
    for big_n in 1..=n_max {
        let mut lhs = RatFunc::zero();
        let mut inv_fact = Rat::one();
        for k in 1..=big_n {
            if k > 1 {
                inv_fact = inv_fact / Rat::from_int(k as i64 - 1);
            }
            // (Lap^(k-1) + (2N - 2k + lambda) D^(k)) / (k-1)!
            let weight = Poly::linear(
                &laplace[k - 1] + &(Rat::from_int(2 * (big_n - k) as i64) * &logdet[k - 1]),
                logdet[k - 1].clone(),
            );
            let term = actions[big_n - k].action.mul_poly(&weight.scale(&inv_fact));
            lhs = &lhs + &term;
        }
        // divide by -2N (2 lambda - n + 2N)
        let divisor = Poly::linear(
            Rat::from_int(2 * big_n as i64) * Rat::from_int(m.dimension() - 2 * big_n as i64),
            Rat::from_int(-4 * big_n as i64),
        );
        debug_assert!(!divisor.is_zero());
        let action = lhs
            .div(&RatFunc::from_poly(divisor))
            .map_err(|_| ModelError::SingularRecursion)?;
        actions.push(FamilyAction { big_n, action });
    }
    Ok(actions)
}

/// The pole-clearing prefactor `(n/2 - lambda - 1) ... (n/2 - lambda - N)`.
fn pole_prefactor(m: &EinsteinModel, big_n: usize) -> Poly {
    let mut acc = Poly::one();
    for k in 1..=big_n {
        acc = &acc
            * &Poly::linear(m.half_n() - Rat::from_int(k as i64), Rat::from_int(-1));
    }
    acc
}

/// `2^{2N} N!`.
fn family_scale(big_n: usize) -> Rat {
    Rat::from_int(2).pow(2 * big_n as i32) * Rat::factorial(big_n)
}

/// Normalizes a solved `T_{2N}` into the polynomial family `P_{2N}(lambda)`
/// and extracts the spectral value and the curvature.
///
/// The curvature is read off from a constants solve (`mu = 0`), where the
/// eigenfunction is the function one.
pub fn p_family(
    m: &EinsteinModel,
    e: &EigenParameter,
    big_n: usize,
) -> Result<GjmsValue, ModelError> {
    if big_n < 1 || 2 * big_n as i64 > m.dimension() {
        return Err(ModelError::InvalidOrder(big_n as i64));
    }
    let actions = solve_t_families(m, e, big_n)?;
    let p_action = p_action_from(m, &actions[big_n])?;
    let spectral = m.half_n() - Rat::from_int(big_n as i64);
    let gjms_at_spectral = p_action.eval(&spectral);

    let q_value = if 2 * (big_n as i64) < m.dimension() {
        let constant_action = if e.mu().is_zero() {
            p_action.clone()
        } else {
            let const_actions = solve_t_families(m, &EigenParameter::zero(), big_n)?;
            p_action_from(m, &const_actions[big_n])?
        };
        // P_{2N}(1) = (-1)^N (n/2 - N) Q_{2N}
        let sign = if big_n % 2 == 0 { 1 } else { -1 };
        Some(constant_action.eval(&spectral) * Rat::from_int(sign) / spectral.clone())
    } else {
        None
    };

    Ok(GjmsValue {
        big_n,
        p_action,
        gjms_at_spectral,
        q_value,
    })
}

/// Clears poles of a solved family action; the quotient must be exact.
pub(crate) fn p_action_from(
    m: &EinsteinModel,
    family: &FamilyAction,
) -> Result<Poly, ModelError> {
    let prefactor = pole_prefactor(m, family.big_n);
    let scaled = family
        .action
        .mul_poly(&prefactor)
        .scale(&family_scale(family.big_n));
    scaled
        .into_poly()
        .map_err(|_| ModelError::NonPolynomialFamily {
            family: family.big_n,
        })
}

/// Eigen-actions of `P_0, ..., P_{2 N_max}` as polynomials in `lambda`
/// (index 0 is the identity).
pub fn p_actions_upto(
    m: &EinsteinModel,
    e: &EigenParameter,
    n_max: usize,
) -> Result<Vec<Poly>, ModelError> {
    let actions = solve_t_families(m, e, n_max)?;
    let mut out = vec![Poly::one()];
    for fam in &actions[1..] {
        out.push(p_action_from(m, fam)?);
    }
    Ok(out)
}

/// Eigen-action polynomial of the displayed closed forms for `N = 1, 2, 3`.
///
/// ```text
/// P_2(lambda) = Lap - lambda J
/// P_4(lambda) = (Lap - (lambda+2) J)(Lap - lambda J)
///               + lambda (2 lambda - n + 2) |rho|^2
///               + 2 (2 lambda - n + 2) delta(rho d) + (2 lambda - n + 2)(dJ, d)
/// P_6(lambda) = 4 (n-4-2 lambda)(n-2-2 lambda) [lambda D''' + Lap'']
///               + 4 (n-4-2 lambda) [(lambda+2) D'' + Lap'] P_2(lambda)
///               + (Lap - (lambda+4) J) P_4(lambda)
/// ```
///
/// with the model values `Lap' = -2 c mu`, `Lap'' = -6 c^2 mu`,
/// `delta(rho d) = (J/n) mu`, `(dJ, d) = 0`, and `D''`, `D'''` the
/// log-determinant derivatives.
pub fn closed_form_p(
    m: &EinsteinModel,
    e: &EigenParameter,
    big_n: usize,
) -> Result<Poly, ModelError> {
    let n = m.dimension();
    let j = m.j().clone();
    let mu = e.mu().clone();
    let lap = Poly::constant(-mu.clone()); // Lap eigen-action
    let p2 = &lap - &Poly::linear(Rat::zero(), j.clone());
    if big_n == 1 {
        return Ok(p2);
    }

    // 2 lambda - n + 2 appears in every curvature correction of P_4
    let two_lambda_shift = Poly::linear(Rat::from_int(-n + 2), Rat::from_int(2));
    let rho_sq = &j * &j / Rat::from_int(n);
    let delta_rho_action = &j / &Rat::from_int(n) * &mu;
    let p4 = {
        let first = &(&lap - &Poly::linear(Rat::from_int(2) * &j, j.clone()))
            * &(&lap - &Poly::linear(Rat::zero(), j.clone()));
        let second = (&Poly::linear(Rat::zero(), Rat::one()) * &two_lambda_shift)
            .scale(&rho_sq);
        let third = two_lambda_shift.scale(&(Rat::from_int(2) * &delta_rho_action));
        &(&first + &second) + &third
    };
    if big_n == 2 {
        return Ok(p4);
    }
    if big_n != 3 {
        return Err(ModelError::UnsupportedN(big_n as i64));
    }

    let logdet = m.logdet_derivatives(3);
    let (d2, d3) = (logdet[1].clone(), logdet[2].clone());
    let lap_t1 = -(Rat::from_int(2) * m.c()) * &mu; // first t-derivative action
    let lap_t2 = -(Rat::from_int(6) * (m.c() * m.c())) * &mu; // second t-derivative action

    // 4 (n - 4 - 2 lambda), and (n - 2 - 2 lambda)
    let n4 = Poly::linear(Rat::from_int(n - 4), Rat::from_int(-2));
    let n2 = Poly::linear(Rat::from_int(n - 2), Rat::from_int(-2));
    let term1 = &(&n4 * &n2).scale(&Rat::from_int(4))
        * &Poly::linear(lap_t2, d3);
    let term2 = &(&n4.scale(&Rat::from_int(4))
        * &Poly::linear(&(Rat::from_int(2) * &d2) + &lap_t1, d2.clone()))
        * &p2;
    let term3 = &(&lap - &Poly::linear(Rat::from_int(4) * &j, j.clone())) * &p4;
    Ok(&(&term1 + &term2) + &term3)
}

/// Residual of a staged-solution identity: the action of the family of
/// order `n - 2j` at `lambda = N` minus the product of the actions of the
/// order `2N - 2j` family at `lambda = n - N` and the order `n - 2N`
/// family at `lambda = N`. Zero whenever `0 <= j <= N <= n/2`.
pub fn check_factorization(
    m: &EinsteinModel,
    e: &EigenParameter,
    big_n: usize,
    j: usize,
) -> Result<Rat, ModelError> {
    let half_n = (m.dimension() / 2) as usize;
    if big_n > half_n || j > big_n {
        return Err(ModelError::InvalidOrder(j as i64));
    }
    let p = p_actions_upto(m, e, half_n.max(big_n))?;
    let lambda_n = Rat::from_int(big_n as i64);
    let lambda_dual = Rat::from_int(m.dimension() - big_n as i64);
    let lhs = p[half_n - j].eval(&lambda_n);
    let rhs = p[big_n - j].eval(&lambda_dual) * p[half_n - big_n].eval(&lambda_n);
    Ok(lhs - rhs)
}

/// Solves the leading-coefficient recursion
/// `D^(1) w_{2N-2} + ... + 1/(N-1)! D^(N) w_0 = -4N w_{2N}` with `w_0 = 1`;
/// returns `w_0..w_{2 N_max}` (indices in `t`). The output is the
/// coefficient list of `v^{-1/2}`.
pub fn omega_leading(m: &EinsteinModel, n_max: usize) -> Vec<Rat> {
    let logdet = m.logdet_derivatives(n_max);
    let mut omega = vec![Rat::one()];
    for big_n in 1..=n_max {
        let mut acc = Rat::zero();
        let mut inv_fact = Rat::one();
        for k in 1..=big_n {
            if k > 1 {
                inv_fact = inv_fact / Rat::from_int(k as i64 - 1);
            }
            acc = acc + &(&logdet[k - 1] * &inv_fact) * &omega[big_n - k];
        }
        omega.push(acc / Rat::from_int(-4 * big_n as i64));
    }
    omega
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn model84() -> EinsteinModel {
        EinsteinModel::new(8, int(4)).unwrap()
    }

    fn p(coeffs: &[i64]) -> Poly {
        Poly::from_coeffs(coeffs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn t2_on_constants() {
        // T_2(lambda) = (mu + lambda J) / (2 (2 lambda - n + 2))
        let m = model84();
        let t = solve_t_families(&m, &EigenParameter::zero(), 1).unwrap();
        // lambda / (lambda - 3)
        assert_eq!(t[1].action.num(), &p(&[0, 1]));
        assert_eq!(t[1].action.den(), &p(&[-3, 1]));

        let flat = EinsteinModel::new(8, int(0)).unwrap();
        let t = solve_t_families(&flat, &EigenParameter::new(int(2)).unwrap(), 1).unwrap();
        // mu / (2(2 lambda - 6)) = (1/2) / (lambda - 3) for mu = 2
        assert_eq!(t[1].action.num(), &Poly::constant(rat(1, 2)));
        assert_eq!(t[1].action.den(), &p(&[-3, 1]));
    }

    #[test]
    fn subcritical_t_families_vanish_on_constants_at_zero() {
        // u = 1 with lambda = 0 solves the eigen-equation exactly, so the
        // subcritical coefficients vanish there. The critical family is
        // exempt: its recursion factor 2 lambda - n + 2N degenerates at
        // lambda = 0 and the solved value stays finite and nonzero.
        let m = model84();
        let t = solve_t_families(&m, &EigenParameter::zero(), 4).unwrap();
        for fam in &t[1..4] {
            assert_eq!(fam.action.eval(&int(0)).unwrap(), int(0), "N = {}", fam.big_n);
        }
        assert_eq!(t[4].action.eval(&int(0)).unwrap(), rat(-35, 256));
    }

    #[test]
    fn solved_families_on_round_model() {
        let m = model84();
        let t = solve_t_families(&m, &EigenParameter::zero(), 4).unwrap();
        // T_8 = 35 (lambda+1)(lambda+2)(lambda+3) / (256 (lambda-1)(lambda-2)(lambda-3))
        let expected_num = Poly::from_linear_offsets([int(1), int(2), int(3)])
            .scale(&rat(35, 256));
        let expected_den = Poly::from_linear_offsets([int(-1), int(-2), int(-3)]);
        assert_eq!(t[4].action.num(), &expected_num);
        assert_eq!(t[4].action.den(), &expected_den);
    }

    #[test]
    fn pole_containment() {
        // every denominator divides (lambda - (n/2 - 1)) ... (lambda - (n/2 - N))
        for (n, j) in [(8i64, int(4)), (10, int(5)), (12, rat(3, 2)), (8, int(-2))] {
            let m = EinsteinModel::new(n, j).unwrap();
            for mu in [int(0), int(1), rat(7, 3)] {
                let e = EigenParameter::new(mu).unwrap();
                let t = solve_t_families(&m, &e, 4).unwrap();
                for fam in &t[1..] {
                    let allowed = Poly::from_linear_offsets(
                        (1..=fam.big_n as i64).map(|k| -(m.half_n() - int(k))),
                    );
                    assert!(
                        allowed.div_rem(fam.action.den()).unwrap().1.is_zero(),
                        "poles outside the admissible set for N = {}",
                        fam.big_n
                    );
                }
            }
        }
    }

    #[test]
    fn p_actions_on_round_model() {
        let m = model84();
        let e = EigenParameter::zero();
        let p_acts = p_actions_upto(&m, &e, 4).unwrap();
        assert_eq!(p_acts[1], p(&[0, -4])); // -4 lambda
        assert_eq!(p_acts[2], p(&[0, 20, 20])); // 20 lambda (lambda + 1)
        assert_eq!(p_acts[3], p(&[0, -240, -360, -120])); // -120 l (l+1) (l+2)
        assert_eq!(
            p_acts[4],
            &Poly::from_linear_offsets([int(1), int(2), int(3)]).scale(&int(840))
                * &p(&[0, 1])
        ); // 840 l (l+1) (l+2) (l+3)
    }

    #[test]
    fn gjms_and_curvature_values() {
        let m = model84();
        let e = EigenParameter::zero();
        let g1 = p_family(&m, &e, 1).unwrap();
        assert_eq!(g1.gjms_at_spectral, int(-12));
        assert_eq!(g1.q_value, Some(int(4)));
        let g2 = p_family(&m, &e, 2).unwrap();
        assert_eq!(g2.gjms_at_spectral, int(120));
        assert_eq!(g2.q_value, Some(int(60)));
        let g3 = p_family(&m, &e, 3).unwrap();
        assert_eq!(g3.gjms_at_spectral, int(-720));
        assert_eq!(g3.q_value, Some(int(720)));
        let g4 = p_family(&m, &e, 4).unwrap();
        assert_eq!(g4.gjms_at_spectral, int(0)); // critical operator kills constants
        assert_eq!(g4.q_value, None);
        // q_value is mu-independent
        let g2b = p_family(&m, &EigenParameter::new(rat(7, 3)).unwrap(), 2).unwrap();
        assert_eq!(g2b.q_value, Some(int(60)));
    }

    #[test]
    fn closed_forms_match_recursion() {
        for (n, j) in [(8i64, int(4)), (10, int(5)), (12, rat(3, 2)), (8, int(-2))] {
            let m = EinsteinModel::new(n, j).unwrap();
            for mu in [int(0), int(5), rat(7, 3)] {
                let e = EigenParameter::new(mu).unwrap();
                let p_acts = p_actions_upto(&m, &e, 3).unwrap();
                for big_n in 1..=3usize {
                    assert_eq!(
                        p_acts[big_n],
                        closed_form_p(&m, &e, big_n).unwrap(),
                        "n = {n}, N = {big_n}"
                    );
                }
            }
        }
    }

    #[test]
    fn closed_form_p2_example() {
        let m = model84();
        let e = EigenParameter::new(int(5)).unwrap();
        assert_eq!(closed_form_p(&m, &e, 1).unwrap(), p(&[-5, -4]));
        assert!(closed_form_p(&m, &e, 4).is_err());
    }

    #[test]
    fn factorization_relations() {
        let m = model84();
        for mu in [int(0), int(1), rat(7, 3)] {
            let e = EigenParameter::new(mu).unwrap();
            for big_n in 1..=4usize {
                for j in 0..=big_n {
                    assert_eq!(
                        check_factorization(&m, &e, big_n, j).unwrap(),
                        int(0),
                        "N = {big_n}, j = {j}"
                    );
                }
            }
        }
    }

    #[test]
    fn omega_recursion_matches_inverse_sqrt_series() {
        let m = model84();
        let omega = omega_leading(&m, 4);
        assert_eq!(omega[1], int(1));
        assert_eq!(omega[2], rat(5, 8));
        // (v^{-1/2}) coefficients
        let psi = m.volume_series(4).sqrt().unwrap().inv().unwrap();
        assert_eq!(&omega[..], psi.coeffs());

        let flat = EinsteinModel::new(8, int(0)).unwrap();
        assert!(omega_leading(&flat, 4)[1..].iter().all(Rat::is_zero));
    }

    #[test]
    fn three_way_leading_coefficient() {
        for (n, j) in [(8i64, int(4)), (10, int(5)), (14, int(7))] {
            let m = EinsteinModel::new(n, j).unwrap();
            let e = EigenParameter::new(rat(13, 1)).unwrap();
            let p_acts = p_actions_upto(&m, &e, 4).unwrap();
            let omega = omega_leading(&m, 4);
            let psi = m.volume_series(4).sqrt().unwrap().inv().unwrap();
            for big_n in 1..=4usize {
                let sign = if big_n % 2 == 0 { 1 } else { -1 };
                let from_p = p_acts[big_n].coefficient(big_n) * int(sign)
                    / (int(2).pow(2 * big_n as i32) * Rat::factorial(big_n));
                assert_eq!(from_p, omega[big_n], "n = {n}, N = {big_n}");
                assert_eq!(psi.coefficient(big_n), omega[big_n]);
            }
        }
    }

    #[test]
    fn rejects_orders_past_critical() {
        let m = model84();
        assert!(solve_t_families(&m, &EigenParameter::zero(), 5).is_err());
        assert!(p_family(&m, &EigenParameter::zero(), 5).is_err());
    }
}
