// Copyright 2026 The pbr-verify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Preparation operator, entangling measurement and the zero-diagonal solve.
//!
//! Columns of `C` are the four product states `ψψ, ψφ, φψ, φφ` in the
//! first-factor-major basis `|00⟩, |01⟩, |10⟩, |11⟩`. The measurement
//! unitary is
//!
//! ```text
//!          ⎛ e^{iα}  e^{iβ}  e^{iβ}  e^{2iβ} ⎞
//! M = ½ ·  ⎜ e^{iα} −e^{iβ}  e^{iβ} −e^{2iβ} ⎟
//!          ⎜ e^{iα}  e^{iβ} −e^{iβ} −e^{2iβ} ⎟
//!          ⎝ e^{iα} −e^{iβ} −e^{iβ}  e^{2iβ} ⎠
//! ```
//!
//! and the sign patterns of the rows of `M` and the columns of `C` match, so
//! every diagonal entry of `M·C` equals
//! `½e^{iα}cos²(ω/2) + e^{iβ}cos(ω/2)sin(ω/2) + ½e^{2iβ}sin²(ω/2)`.

use crate::linalg::{Complex, Kron, Operator};
use crate::state::{make_pair, OverlapAngle};
use crate::tol::{BOUNDARY_COS, TOL_BOUNDARY, TOL_COS_BETA_FORMS, TOL_NORM};
use crate::{Error, Result};

/// Sign pattern shared by the rows of `M` and the columns of `C`.
const SIGNS: [[f64; 4]; 4] = [
    [1.0, 1.0, 1.0, 1.0],
    [1.0, -1.0, 1.0, -1.0],
    [1.0, 1.0, -1.0, -1.0],
    [1.0, -1.0, -1.0, 1.0],
];

/// Phases of the zero-diagonal measurement for one overlap.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementSolution {
    /// Overlap the measurement was solved for.
    pub omega: OverlapAngle,
    /// `α` in `(-π, π]`; `None` until solved or when infeasible.
    pub alpha: Option<f64>,
    /// `β` in `[0, π]`; `None` when infeasible.
    pub beta: Option<f64>,
    /// Whether a real `β` exists.
    pub feasible: bool,
    /// `cos β` before clamping to `[-1, 1]`.
    pub cos_beta_raw: f64,
}

/// Outcome probabilities `p[k][j] = |⟨k|MC|j⟩|²` (outcome `k`, preparation `j`, zero-based).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OutcomeMatrix {
    /// Probabilities, row = outcome, column = preparation.
    pub p: [[f64; 4]; 4],
    /// Overlap of the prepared pair.
    pub omega: OverlapAngle,
    /// Measurement phase `α`.
    pub alpha: f64,
    /// Measurement phase `β`.
    pub beta: f64,
}

impl OutcomeMatrix {
    /// Outcome distribution for zero-based preparation `j`.
    pub fn column(&self, j: usize) -> [f64; 4] {
        [self.p[0][j], self.p[1][j], self.p[2][j], self.p[3][j]]
    }

    /// Sum of each column.
    pub fn column_sums(&self) -> [f64; 4] {
        core::array::from_fn(|j| self.column(j).iter().sum())
    }

    /// Largest probability of a forbidden outcome (`k = j`).
    pub fn max_diagonal(&self) -> f64 {
        (0..4).map(|j| self.p[j][j]).fold(0.0, f64::max)
    }
}

/// The preparation operator `C(ω)`.
pub fn build_c(omega: OverlapAngle) -> Operator {
    let pair = make_pair(omega);
    let columns = [
        pair.psi.kron(&pair.psi),
        pair.psi.kron(&pair.phi),
        pair.phi.kron(&pair.psi),
        pair.phi.kron(&pair.phi),
    ];
    Operator::from_columns(&columns).expect("four columns of dimension four")
}

/// The measurement unitary `M(α, β)`.
pub fn build_m(alpha: f64, beta: f64) -> Operator {
    let column_phase = [
        Complex::cis(alpha),
        Complex::cis(beta),
        Complex::cis(beta),
        Complex::cis(2.0 * beta),
    ];
    let mut entries = alloc::vec::Vec::with_capacity(16);
    for row in SIGNS {
        for (sign, phase) in row.iter().zip(column_phase) {
            entries.push(phase.scale(0.5 * sign));
        }
    }
    Operator::from_row_major(entries).expect("sixteen finite entries")
}

/// `cos β` from the cosine form `(c² + c − 1) / ((1 − c)·√(1 − c²))`.
pub fn cos_beta_cosine_form(omega: OverlapAngle) -> f64 {
    let c = omega.cos();
    (c * c + c - 1.0) / ((1.0 - c) * libm::sqrt(1.0 - c * c))
}

/// `cos β` from the tangent form `¼(t⁻³ − 4t⁻¹ − t)` with `t = tan(ω/2)`.
pub fn cos_beta_tangent_form(omega: OverlapAngle) -> f64 {
    let t = libm::tan(omega.omega() / 2.0);
    0.25 * (1.0 / (t * t * t) - 4.0 / t - t)
}

/// True when the two-qubit measurement exists, i.e. `cos ω <= √2/2` (inclusive).
pub fn is_feasible(omega: OverlapAngle) -> bool {
    omega.cos() <= BOUNDARY_COS + TOL_BOUNDARY
}

/// Solves for `β`; `α` is left unset.
pub fn solve_beta(omega: OverlapAngle) -> MeasurementSolution {
    let cos_beta_raw = cos_beta_cosine_form(omega);
    let feasible = is_feasible(omega);
    let beta = feasible.then(|| {
        debug_assert!(
            (cos_beta_tangent_form(omega) - cos_beta_raw).abs() <= TOL_COS_BETA_FORMS,
            "cos beta forms disagree at cos omega = {}",
            omega.cos()
        );
        libm::acos(cos_beta_raw.clamp(-1.0, 1.0))
    });
    MeasurementSolution {
        omega,
        alpha: None,
        beta,
        feasible,
        cos_beta_raw,
    }
}

/// Recovers `α` from `e^{iα} = −t²e^{2iβ} − 2t·e^{iβ}`, `t = tan(ω/2)`.
///
/// The right-hand side is a pure phase only when `β` solves the
/// zero-diagonal condition; otherwise [`Error::InconsistentPhases`].
pub fn solve_alpha(omega: OverlapAngle, beta: f64) -> Result<f64> {
    let t = libm::tan(omega.omega() / 2.0);
    let z = -(Complex::cis(2.0 * beta).scale(t * t) + Complex::cis(beta).scale(2.0 * t));
    let modulus = z.abs();
    if (modulus - 1.0).abs() > TOL_NORM {
        return Err(Error::InconsistentPhases { modulus });
    }
    Ok(z.arg())
}

/// Solves both phases; fails with [`Error::Infeasible`] above the boundary.
pub fn solve(omega: OverlapAngle) -> Result<MeasurementSolution> {
    let mut sol = solve_beta(omega);
    let beta = sol.beta.ok_or(Error::Infeasible {
        cos_omega: omega.cos(),
    })?;
    sol.alpha = Some(solve_alpha(omega, beta)?);
    Ok(sol)
}

/// `⟨j|MC|j⟩`, identical for all four `j`.
///
/// # Panics
///
/// If the closed form and any diagonal entry of the explicit product `M·C`
/// differ by more than `1e-12`, which would mean the operators are built
/// with inconsistent index conventions.
pub fn diagonal_residual(omega: OverlapAngle, alpha: f64, beta: f64) -> Complex {
    let (c, s) = (omega.half_cos(), omega.half_sin());
    let closed = Complex::cis(alpha).scale(0.5 * c * c)
        + Complex::cis(beta).scale(c * s)
        + Complex::cis(2.0 * beta).scale(0.5 * s * s);
    let mc = build_m(alpha, beta)
        .matmul(&build_c(omega))
        .expect("both operators are 4x4");
    for j in 0..4 {
        let d = (mc.get(j, j) - closed).abs();
        assert!(d <= 1e-12, "diagonal entry {j} of M*C deviates by {d}");
    }
    closed
}

/// `|⟨k|MC|j⟩|²` for all outcomes `k` and preparations `j`.
pub fn outcome_matrix(omega: OverlapAngle, alpha: f64, beta: f64) -> OutcomeMatrix {
    let mc = build_m(alpha, beta)
        .matmul(&build_c(omega))
        .expect("both operators are 4x4");
    let p = core::array::from_fn(|k| core::array::from_fn(|j| mc.get(k, j).norm_sqr()));
    OutcomeMatrix {
        p,
        omega,
        alpha,
        beta,
    }
}

impl MeasurementSolution {
    /// Outcome matrix for a solved measurement.
    pub fn outcome_matrix(&self) -> Result<OutcomeMatrix> {
        match (self.alpha, self.beta) {
            (Some(a), Some(b)) => Ok(outcome_matrix(self.omega, a, b)),
            _ => Err(Error::Infeasible {
                cos_omega: self.omega.cos(),
            }),
        }
    }
}
