//! Scalar curvature data and the closed formulas for the first volume
//! coefficients and the fourth-order curvature.
//!
//! Tensors never appear here: on the geometries this crate works with, the
//! only tensor contractions the formulas consume are the scalars `J`
//! (normalized scalar curvature), `|rho|^2`, `tr(rho^3)` and the pairing
//! `(B, rho)` with the Bach tensor. The displayed formulas are kept in
//! their general form; the Einstein specialization fixes the scalars to
//! `|rho|^2 = J^2/n`, `tr(rho^3) = J^3/n^2`, `(B, rho) = 0`.

use crate::error::ModelError;
use crate::rational::Rat;

/// Scalar curvature invariants of a metric in even dimension `n >= 6`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarCurvatureData {
    pub n: i64,
    /// `J = scal / (2(n-1))`.
    pub j: Rat,
    /// `|rho|^2`, the squared norm of the Schouten tensor.
    pub rho_norm_sq: Rat,
    /// `tr(rho^3)`.
    pub tr_rho3: Rat,
    /// `(B, rho)`, the Bach--Schouten pairing.
    pub bach_dot_rho: Rat,
}

impl ScalarCurvatureData {
    pub fn new(
        n: i64,
        j: Rat,
        rho_norm_sq: Rat,
        tr_rho3: Rat,
        bach_dot_rho: Rat,
    ) -> Result<Self, ModelError> {
        if n < 6 || n % 2 != 0 {
            return Err(ModelError::UnsupportedDimension(n));
        }
        Ok(ScalarCurvatureData {
            n,
            j,
            rho_norm_sq,
            tr_rho3,
            bach_dot_rho,
        })
    }

    /// Einstein specialization: `rho = (J/n) g`, vanishing Bach tensor.
    pub fn einstein(n: i64, j: Rat) -> Result<Self, ModelError> {
        let n_rat = Rat::from_int(n);
        let rho_norm_sq = &j * &j / n_rat.clone();
        let tr_rho3 = &(&j * &j) * &j / (&n_rat * &n_rat);
        Self::new(n, j, rho_norm_sq, tr_rho3, Rat::zero())
    }
}

/// Spectrum of a symmetric endomorphism standing in for the Schouten
/// tensor; backs the Newton-formula check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymSpectrum {
    eigenvalues: Vec<Rat>,
}

impl SymSpectrum {
    pub fn new(eigenvalues: Vec<Rat>) -> Self {
        assert!(!eigenvalues.is_empty(), "spectrum must be nonempty");
        SymSpectrum { eigenvalues }
    }

    pub fn constant(value: Rat, len: usize) -> Self {
        Self::new(vec![value; len])
    }

    pub fn eigenvalues(&self) -> &[Rat] {
        &self.eigenvalues
    }

    /// Power sum `p_k = sum_i lambda_i^k`.
    pub fn power_sum(&self, k: i32) -> Rat {
        self.eigenvalues
            .iter()
            .fold(Rat::zero(), |acc, e| acc + e.pow(k))
    }
}

/// Third elementary symmetric function `tr(wedge^3 rho)`, computed as
/// `sum_{i<j<k} e_i e_j e_k`, with the Newton identity
/// `6 tr(wedge^3 rho) = p1^3 - 3 p1 p2 + 2 p3` asserted against it.
pub fn newton_wedge3(s: &SymSpectrum) -> Rat {
    let ev = s.eigenvalues();
    let mut e3 = Rat::zero();
    for i in 0..ev.len() {
        for j in (i + 1)..ev.len() {
            let eij = &ev[i] * &ev[j];
            for k in (j + 1)..ev.len() {
                e3 = e3 + &eij * &ev[k];
            }
        }
    }
    let p1 = s.power_sum(1);
    let p2 = s.power_sum(2);
    let p3 = s.power_sum(3);
    let newton = (p1.pow(3) - Rat::from_int(3) * (&p1 * &p2) + Rat::from_int(2) * p3)
        / Rat::from_int(6);
    assert_eq!(e3, newton, "Newton identity violated for exact spectrum");
    e3
}

/// `tr(wedge^3 rho)` straight from the power sums (Newton's formula),
/// when only scalar data is available.
pub fn wedge3_from_power_sums(p1: &Rat, p2: &Rat, p3: &Rat) -> Rat {
    (p1.pow(3) - Rat::from_int(3) * (p1 * p2) + Rat::from_int(2) * p3.clone())
        / Rat::from_int(6)
}

/// The closed formulas for the first three volume coefficients:
///
/// ```text
/// v2 = -J/2
/// v4 = (J^2 - |rho|^2) / 8
/// 8 v6 = -tr(wedge^3 rho) - (B, rho) / (3(n-4))
/// ```
pub fn v_coefficients(d: &ScalarCurvatureData) -> (Rat, Rat, Rat) {
    let v2 = -&d.j * Rat::new(1, 2);
    let v4 = (&d.j * &d.j - d.rho_norm_sq.clone()) * Rat::new(1, 8);
    let wedge3 = wedge3_from_power_sums(&d.j, &d.rho_norm_sq, &d.tr_rho3);
    let v6 = (-wedge3
        - &d.bach_dot_rho / &Rat::from_int(3 * (d.n - 4)))
        * Rat::new(1, 8);
    (v2, v4, v6)
}

/// Fourth-order curvature from its closed formula
/// `Q4 = (n/2) J^2 - 2 |rho|^2 - Lap J`. The Laplacian of `J` is an
/// explicit input so the formula stays general; it vanishes on
/// homogeneous geometries.
pub fn q4_closed_form(d: &ScalarCurvatureData, laplace_j: &Rat) -> Rat {
    Rat::new(d.n, 2) * (&d.j * &d.j) - Rat::from_int(2) * d.rho_norm_sq.clone() - laplace_j.clone()
}
