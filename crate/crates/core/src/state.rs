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

//! Symmetric qubit pairs and group product states.

use core::f64::consts::FRAC_PI_2;

use crate::linalg::{check_dims, inner_product, Complex, Kron, StateVector};
use crate::tol::{MAX_COPIES, TOL_DEGENERATE};
use crate::{Error, Result};

/// The overlap angle `ω` with `cos ω = |⟨ψ|φ⟩|`, restricted to `0 < ω <= π/2`.
///
/// The cosine is kept alongside the angle so that a value built from a
/// cosine round-trips bit-exactly through [`OverlapAngle::cos`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OverlapAngle {
    omega: f64,
    cos: f64,
}

impl OverlapAngle {
    /// From the angle in radians.
    pub fn new(omega: f64) -> Result<Self> {
        if !(omega > 0.0 && omega <= FRAC_PI_2) {
            return Err(Error::AngleOutOfRange { omega });
        }
        Ok(OverlapAngle {
            omega,
            cos: libm::cos(omega).max(0.0),
        })
    }

    /// From `cos ω` in `[0, 1)`.
    pub fn from_cos(cos: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&cos) {
            let omega = if cos.is_finite() { libm::acos(cos.clamp(-1.0, 1.0)) } else { f64::NAN };
            return Err(Error::AngleOutOfRange { omega });
        }
        Ok(OverlapAngle {
            omega: libm::acos(cos),
            cos,
        })
    }

    /// `ω` in radians.
    pub fn omega(self) -> f64 {
        self.omega
    }

    /// `cos ω`.
    pub fn cos(self) -> f64 {
        self.cos
    }

    /// `cos(ω/2)`.
    pub fn half_cos(self) -> f64 {
        libm::cos(self.omega / 2.0)
    }

    /// `sin(ω/2)`.
    pub fn half_sin(self) -> f64 {
        libm::sin(self.omega / 2.0)
    }
}

/// A pair `ψ = cos(ω/2)|0⟩ + sin(ω/2)|1⟩`, `φ = cos(ω/2)|0⟩ − sin(ω/2)|1⟩`
/// together with the ambient basis `{|0⟩, |1⟩}` in which it takes that form.
///
/// If the pair came from [`reduce_pair`], the original second state equals
/// `e^{i·phase_applied}` times the symmetric `φ` expanded in the basis.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricPair {
    /// Overlap angle.
    pub omega: OverlapAngle,
    /// Two-dimensional coordinates of `ψ`.
    pub psi: StateVector,
    /// Two-dimensional coordinates of `φ`.
    pub phi: StateVector,
    /// Ambient `|0⟩`.
    pub basis0: StateVector,
    /// Ambient `|1⟩`.
    pub basis1: StateVector,
    /// Phase `θ` removed from the second input state (`φ_in = e^{iθ}·φ`).
    pub phase_applied: f64,
}

impl SymmetricPair {
    /// `⟨ψ|φ⟩` computed from the stored coordinates.
    pub fn overlap(&self) -> Complex {
        // both are dim 2 by construction
        inner_product(&self.psi, &self.phi).unwrap_or(Complex::ZERO)
    }

    /// `ψ` expanded in the ambient basis.
    pub fn ambient_psi(&self) -> StateVector {
        self.expand(&self.psi)
    }

    /// The original second state: `e^{i·phase_applied}·φ` expanded in the ambient basis.
    pub fn ambient_phi(&self) -> StateVector {
        self.expand(&self.phi).scale(Complex::cis(self.phase_applied))
    }

    fn expand(&self, coords: &StateVector) -> StateVector {
        self.basis0
            .scale(coords.get(0))
            .axpy(coords.get(1), &self.basis1)
            .expect("basis vectors share a dimension")
    }
}

fn symmetric_coords(omega: OverlapAngle) -> (StateVector, StateVector) {
    let (c, s) = (omega.half_cos(), omega.half_sin());
    (
        StateVector::from_vec_unchecked(alloc::vec![Complex::real(c), Complex::real(s)]),
        StateVector::from_vec_unchecked(alloc::vec![Complex::real(c), Complex::real(-s)]),
    )
}

/// The symmetric pair for `ω` in the standard basis of `C²`.
pub fn make_pair(omega: OverlapAngle) -> SymmetricPair {
    let (psi, phi) = symmetric_coords(omega);
    SymmetricPair {
        omega,
        psi,
        phi,
        basis0: StateVector::basis(2, 0),
        basis1: StateVector::basis(2, 1),
        phase_applied: 0.0,
    }
}

/// Brings two normalized states of any dimension into symmetric form.
///
/// The phase `θ = arg⟨ψ|φ⟩` is removed from `φ`, after which
/// `|0⟩ ∝ ψ + e^{-iθ}φ` and `|1⟩ ∝ ψ − e^{-iθ}φ`. This is Gram–Schmidt on
/// `{ψ, φ}` followed by the rotation that centres the pair on `|0⟩`; the
/// sign of `|1⟩` is fixed by `⟨1|ψ⟩ > 0`.
pub fn reduce_pair(psi: &StateVector, phi: &StateVector) -> Result<SymmetricPair> {
    check_dims(psi.dim(), phi.dim())?;
    for s in [psi, phi] {
        if !s.is_normalized() {
            return Err(Error::NotNormalized { norm: s.norm() });
        }
    }
    let z = inner_product(psi, phi)?;
    let overlap = z.abs();
    if overlap >= 1.0 - TOL_DEGENERATE {
        return Err(Error::DegeneratePair { overlap });
    }
    let phase = if overlap == 0.0 { 0.0 } else { z.arg() };
    let phi_aligned = phi.scale(Complex::cis(-phase));

    let sum = psi.axpy(Complex::ONE, &phi_aligned)?;
    let diff = psi.axpy(-Complex::ONE, &phi_aligned)?;
    let basis0 = sum.normalized()?;
    let basis1 = diff.normalized()?;

    let omega = OverlapAngle::from_cos(overlap)?;
    let (psi2, phi2) = symmetric_coords(omega);
    Ok(SymmetricPair {
        omega,
        psi: psi2,
        phi: phi2,
        basis0,
        basis1,
        phase_applied: phase,
    })
}

/// The `copies`-fold tensor power of a qubit state.
pub fn product_state(s: &StateVector, copies: usize) -> Result<StateVector> {
    check_dims(s.dim(), 2)?;
    if !(1..=MAX_COPIES).contains(&copies) {
        return Err(Error::CopiesOutOfRange {
            copies,
            max: MAX_COPIES,
        });
    }
    let mut out = s.clone();
    for _ in 1..copies {
        out = out.kron(s);
    }
    Ok(out)
}
