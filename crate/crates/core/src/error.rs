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

use thiserror::Error;

/// Errors raised by the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Two operands of a binary operation have different dimensions.
    #[error("dimension mismatch: {left} vs {right}")]
    DimMismatch {
        /// Dimension of the first operand.
        left: usize,
        /// Dimension of the second operand.
        right: usize,
    },
    /// A vector or matrix was constructed with no entries.
    #[error("empty vector or operator")]
    Empty,
    /// Operator entries do not form a square matrix.
    #[error("operator with {len} entries is not square")]
    NotSquare {
        /// Number of entries supplied.
        len: usize,
    },
    /// A NaN or infinite component was supplied.
    #[error("non-finite component")]
    NonFinite,
    /// A state that must be normalized is not.
    #[error("state is not normalized (norm {norm})")]
    NotNormalized {
        /// The offending Euclidean norm.
        norm: f64,
    },
    /// The overlap angle lies outside `0 < ω <= π/2`.
    #[error("overlap angle {omega} outside (0, pi/2]")]
    AngleOutOfRange {
        /// The rejected angle in radians (or NaN for a rejected cosine).
        omega: f64,
    },
    /// The two states are identical up to a global phase.
    #[error("states identical up to phase (|<psi|phi>| = {overlap})")]
    DegeneratePair {
        /// Modulus of the overlap.
        overlap: f64,
    },
    /// Tensor power outside the supported range.
    #[error("copies {copies} outside 1..={max}")]
    CopiesOutOfRange {
        /// Requested number of copies.
        copies: usize,
        /// Largest supported number of copies.
        max: usize,
    },
    /// `β` does not solve the zero-diagonal condition, so `e^{iα}` would not be a phase.
    #[error("inconsistent phases: |e^(i alpha)| would be {modulus}")]
    InconsistentPhases {
        /// Modulus of the would-be phase factor.
        modulus: f64,
    },
    /// A solved measurement was requested for an infeasible overlap.
    #[error("no real beta exists for cos(omega) = {cos_omega}")]
    Infeasible {
        /// The offending overlap.
        cos_omega: f64,
    },
    /// Device count is odd or smaller than two.
    #[error("device count {n} must be even and at least 2")]
    InvalidGroupCount {
        /// The rejected device count.
        n: usize,
    },
    /// The explicit product-state reduction disagrees with the analytic overlap.
    #[error("group reduction mismatch: explicit {explicit}, analytic {analytic}")]
    ReductionMismatch {
        /// Overlap recovered from the explicit tensor-product states.
        explicit: f64,
        /// `cos^(n/2) ω`.
        analytic: f64,
    },
    /// A figure grid value lies outside `(0, 1)`.
    #[error("grid value {value} outside (0, 1)")]
    GridOutOfRange {
        /// The rejected value.
        value: f64,
    },
    /// Preparation index outside `1..=4`.
    #[error("preparation {index} outside 1..=4")]
    BadPreparation {
        /// The rejected index.
        index: usize,
    },
    /// Number of trials was zero.
    #[error("trials must be at least 1")]
    NoTrials,
    /// ε outside `[0, 1]`.
    #[error("epsilon {epsilon} outside [0, 1]")]
    BadEpsilon {
        /// The rejected value.
        epsilon: f64,
    },
}
