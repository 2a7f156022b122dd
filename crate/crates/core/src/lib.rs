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

#![no_std]
#![warn(missing_docs, rust_2018_idioms)]

//! Numerics for the two-qubit PBR construction.
//!
//! The crate builds the preparation operator `C` whose columns are the four
//! product states of a symmetric qubit pair, the entangling measurement
//! unitary `M(α, β)`, and solves for the phases that make every diagonal
//! entry of `M·C` vanish. For pairs that are too close for the two-qubit
//! measurement to exist, [`reduction`] groups `n` devices into two halves so
//! that the group product states form an effective pair with a smaller
//! overlap `cos Ω = cos^(n/2) ω`.
//!
//! Everything here is `no_std` with `alloc`; file formats and the command
//! line live in the `pbr-cli` crate.

extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;
pub mod experiment;
pub mod linalg;
pub mod measurement;
pub mod reduction;
pub mod state;
pub mod tol;

pub use crate::error::Error;
pub use crate::experiment::{contradiction_report, sample_outcomes, ContradictionReport, OutcomeCounts};
pub use crate::linalg::{inner_product, is_unitary, Complex, Kron, Operator, StateVector, UnitarityCheck};
pub use crate::measurement::{
    build_c, build_m, diagonal_residual, outcome_matrix, solve, solve_alpha, solve_beta, MeasurementSolution,
    OutcomeMatrix,
};
pub use crate::reduction::{
    comparison_table, effective_pair, grouping_plan, min_n_pbr, GroupingPlan, MinNComparison,
};
pub use crate::state::{make_pair, product_state, reduce_pair, OverlapAngle, SymmetricPair};

/// Crate-wide result alias.
pub type Result<T, E = Error> = core::result::Result<T, E>;
