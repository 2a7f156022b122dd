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

//! Shared numerical tolerances.

/// Normalization and default unitarity tolerance.
pub const TOL_NORM: f64 = 1e-10;

/// Slack on the inclusive feasibility boundary `cos ω <= √2/2`.
pub const TOL_BOUNDARY: f64 = 1e-12;

/// `|<ψ|φ>|` at or above `1 - TOL_DEGENERATE` counts as identical states.
pub const TOL_DEGENERATE: f64 = 1e-12;

/// Probabilities below this are treated as exact zeros by the sampler.
pub const TOL_ZERO_PROB: f64 = 1e-12;

/// Agreement required between the tangent and cosine forms of `cos β`.
pub const TOL_COS_BETA_FORMS: f64 = 1e-10;

/// Largest tensor power built explicitly (state dimension `2^10 = 1024`).
pub const MAX_COPIES: usize = 10;

/// The feasibility boundary `√2/2` of the two-qubit measurement.
pub const BOUNDARY_COS: f64 = core::f64::consts::FRAC_1_SQRT_2;
