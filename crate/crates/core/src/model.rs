//! The Einstein model geometry.
//!
//! For constant `J` in even dimension `n >= 6`, the asymptotic expansion of
//! the associated negatively curved metric closes exactly: the conformal
//! factor is the square `(1 - c t)^2` with `c = J/(2n)` and `t = r^2`, the
//! obstruction vanishes, and everything downstream (volume expansion,
//! log-determinant derivatives, Laplacian expansion) is a finite exact
//! computation. Operators act diagonally on a formal Laplace eigenfunction
//! `f` with `Lap f = -mu f`, `mu >= 0`.

use crate::error::ModelError;
use crate::rational::Rat;
use crate::series::Series;

/// Model geometry with constant normalized scalar curvature `J` in even
/// dimension `n >= 6`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EinsteinModel {
    n: i64,
    j: Rat,
    /// Cached `c = J/(2n)`; the conformal factor is `(1 - c t)^2`.
    c: Rat,
}

impl EinsteinModel {
    pub fn new(n: i64, j: Rat) -> Result<Self, ModelError> {
        if n < 6 || n % 2 != 0 {
            return Err(ModelError::UnsupportedDimension(n));
        }
        let c = &j / &Rat::from_int(2 * n);
        Ok(EinsteinModel { n, j, c })
    }

    pub fn dimension(&self) -> i64 {
        self.n
    }

    /// Half the dimension as an exact rational.
    pub fn half_n(&self) -> Rat {
        Rat::new(self.n, 2)
    }

    pub fn j(&self) -> &Rat {
        &self.j
    }

    pub fn c(&self) -> &Rat {
        &self.c
    }

    pub fn is_flat(&self) -> bool {
        self.j.is_zero()
    }

    /// Volume expansion `v(t) = (1 - c t)^n` truncated at `t^order`;
    /// entry `j` is the holographic coefficient `v_{2j}`.
    pub fn volume_series(&self, order: usize) -> Series<Rat> {
        let mut coeffs = Vec::with_capacity(order + 1);
        // binomial(n, k) (-c)^k, zero beyond k = n
        let mut acc = Rat::one();
        for k in 0..=order {
            if k > 0 {
                if k as i64 > self.n {
                    acc = Rat::zero();
                } else {
                    acc = acc * Rat::new(self.n - k as i64 + 1, k as i64) * -&self.c;
                }
            }
            coeffs.push(acc.clone());
        }
        Series::new(coeffs)
    }

    /// Derivatives `D^(1)..D^(order)` of `log det g_t = 2n log(1 - c t)`
    /// at `t = 0`: `D^(k) = -2n (k-1)! c^k`.
    pub fn logdet_derivatives(&self, order: usize) -> Vec<Rat> {
        let mut out = Vec::with_capacity(order);
        let mut c_pow = Rat::one();
        let mut fact = Rat::one();
        for k in 1..=order {
            c_pow = c_pow * &self.c;
            if k > 1 {
                fact = fact * Rat::from_int(k as i64 - 1);
            }
            out.push(Rat::from_int(-2 * self.n) * &fact * &c_pow);
        }
        out
    }

    /// Eigen-action scalars of the Laplacian expansion coefficients
    /// `Lap^(0)..Lap^(order)` on an eigenfunction with parameter `mu`:
    /// the metric Laplacian at `t` is `(1 - c t)^{-2}` times the boundary
    /// one, so `Lap^(k)` acts by `-k! (k+1) c^k mu`.
    pub fn laplace_actions(&self, e: &EigenParameter, order: usize) -> Vec<Rat> {
        let mut out = Vec::with_capacity(order + 1);
        let mut c_pow = Rat::one();
        let mut fact = Rat::one();
        for k in 0..=order {
            if k > 0 {
                c_pow = c_pow * &self.c;
                fact = fact * Rat::from_int(k as i64);
            }
            out.push(-(&fact * &Rat::from_int(k as i64 + 1)) * &c_pow * e.mu());
        }
        out
    }
}

/// Formal Laplace eigenvalue parameter: `Lap f = -mu f` with `mu >= 0`
/// (the sign convention keeping `-Lap` nonnegative).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenParameter {
    mu: Rat,
}

impl EigenParameter {
    pub fn new(mu: Rat) -> Result<Self, ModelError> {
        if mu.is_negative() {
            return Err(ModelError::NegativeEigenvalue(mu.to_string()));
        }
        Ok(EigenParameter { mu })
    }

    pub fn zero() -> Self {
        EigenParameter { mu: Rat::zero() }
    }

    pub fn mu(&self) -> &Rat {
        &self.mu
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn construction_and_conformal_rate() {
        let m = EinsteinModel::new(8, int(4)).unwrap();
        assert_eq!(m.c(), &rat(1, 4));
        let m = EinsteinModel::new(10, int(5)).unwrap();
        assert_eq!(m.c(), &rat(1, 4));
        let m = EinsteinModel::new(8, int(0)).unwrap();
        assert_eq!(m.c(), &int(0));
        assert_eq!(
            EinsteinModel::new(7, int(1)),
            Err(ModelError::UnsupportedDimension(7))
        );
        assert_eq!(
            EinsteinModel::new(4, int(1)),
            Err(ModelError::UnsupportedDimension(4))
        );
    }

    #[test]
    fn volume_series_is_binomial() {
        let m = EinsteinModel::new(8, int(4)).unwrap();
        let v = m.volume_series(4);
        assert_eq!(
            v.coeffs(),
            &[int(1), int(-2), rat(7, 4), rat(-7, 8), rat(35, 128)]
        );
        let flat = EinsteinModel::new(8, int(0)).unwrap();
        assert_eq!(
            flat.volume_series(4).coeffs(),
            &[int(1), int(0), int(0), int(0), int(0)]
        );
        // truncation past the polynomial degree pads with zeros
        let m6 = EinsteinModel::new(6, int(3)).unwrap();
        let v = m6.volume_series(7);
        assert_eq!(v.coefficient(6), m6.c().pow(6));
        assert_eq!(v.coefficient(7), int(0));
    }

    #[test]
    fn volume_series_low_coefficients_match_curvature_formulas() {
        use crate::curvature::{v_coefficients, ScalarCurvatureData};
        for (n, j) in [(8i64, int(4)), (10, int(5)), (12, rat(3, 2)), (8, int(-2))] {
            let m = EinsteinModel::new(n, j.clone()).unwrap();
            let v = m.volume_series(3);
            let d = ScalarCurvatureData::einstein(n, j).unwrap();
            let (v2, v4, v6) = v_coefficients(&d);
            assert_eq!(v.coefficient(1), v2);
            assert_eq!(v.coefficient(2), v4);
            assert_eq!(v.coefficient(3), v6);
        }
    }

    #[test]
    fn logdet_derivatives_model_values() {
        let m = EinsteinModel::new(8, int(4)).unwrap();
        let d = m.logdet_derivatives(4);
        assert_eq!(d, vec![int(-4), int(-1), rat(-1, 2), rat(-3, 8)]);
        // D^(2) = -|rho|^2/2 and D^(3) = -tr(rho^3)/2 on Einstein data
        let data = crate::curvature::ScalarCurvatureData::einstein(8, int(4)).unwrap();
        assert_eq!(d[1], -data.rho_norm_sq * rat(1, 2));
        assert_eq!(d[2], -data.tr_rho3 * rat(1, 2));
    }

    #[test]
    fn logdet_matches_volume_log_derivative() {
        // 2 (log v)' termwise equals sum_k D^(k+1) t^k / k!
        let m = EinsteinModel::new(8, int(4)).unwrap();
        let v = m.volume_series(4);
        let ld = v.log_derivative().unwrap();
        let d = m.logdet_derivatives(4);
        let mut fact = Rat::one();
        for k in 0..=3usize {
            if k > 0 {
                fact = fact * int(k as i64);
            }
            assert_eq!(
                int(2) * ld.coefficient(k),
                &d[k] / &fact,
                "t^{k} coefficient"
            );
        }
    }

    #[test]
    fn laplace_actions_scale_like_inverse_square() {
        let m = EinsteinModel::new(8, int(4)).unwrap();
        let e = EigenParameter::new(int(1)).unwrap();
        let a = m.laplace_actions(&e, 2);
        assert_eq!(a, vec![int(-1), rat(-1, 2), rat(-3, 8)]);
        let zero = EigenParameter::zero();
        assert!(m.laplace_actions(&zero, 4).iter().all(Rat::is_zero));
        let flat = EinsteinModel::new(8, int(0)).unwrap();
        let a = flat.laplace_actions(&EigenParameter::new(int(7)).unwrap(), 3);
        assert_eq!(a[0], int(-7));
        assert!(a[1..].iter().all(Rat::is_zero));
        assert!(EigenParameter::new(int(-1)).is_err());
    }
}
